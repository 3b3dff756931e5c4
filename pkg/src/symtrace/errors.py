"""Exception hierarchy. Every domain error carries a stable ``code`` used by the CLI."""


class SymtraceError(Exception):
    code = "E_DOMAIN"


class ParseError(SymtraceError):
    code = "E_PARSE"


class ShapeMismatch(SymtraceError):
    code = "E_SHAPE"


class NotSignSymmetric(SymtraceError):
    code = "E_NOT_SIGN_SYMMETRIC"


class NotSymmetric(SymtraceError):
    code = "E_NOT_SYMMETRIC"


class RationalCycleConditionViolated(SymtraceError):
    code = "E_RATIONAL_CYCLE"


class NonMonic(SymtraceError):
    code = "E_NON_MONIC"


class TraceTooSmall(SymtraceError):
    code = "E_TRACE_TOO_SMALL"


class OrderTooSmall(SymtraceError):
    code = "E_ORDER_TOO_SMALL"


class ResidualTooSmall(SymtraceError):
    code = "E_RESIDUAL_TOO_SMALL"


class TargetOutOfRange(SymtraceError):
    code = "E_TARGET_OUT_OF_RANGE"


class BudgetExceeded(SymtraceError):
    code = "E_BUDGET"
