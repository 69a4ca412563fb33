"""
Exception hierarchy shared by every HoroCalc module.

Each exception carries a machine-readable ``code`` (the class name unless
overridden) so that reports and the command line can surface failures without
parsing messages.
"""


class HoroError(Exception):
    """
    Base class of all errors raised by HoroCalc.

    Attributes:
        code (str): Machine-readable error code.
        details (dict): Optional structured payload (offending cone, witness, ...).
    """

    code = "HoroError"

    def __init__(self, message="", **details):
        super().__init__(message)
        self.details = details

    def to_dict(self):
        payload = {"code": self.code, "message": str(self)}
        if self.details:
            payload["details"] = {k: _jsonable(v) for k, v in self.details.items()}
        return payload


def _jsonable(value):
    if isinstance(value, (str, int, bool)) or value is None:
        return value
    if isinstance(value, (list, tuple, set, frozenset)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else value
        return [_jsonable(v) for v in items]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    return str(value)


class InvalidType(HoroError):
    code = "InvalidType"


class InvalidColor(HoroError):
    code = "InvalidColor"


class InternalError(HoroError):
    code = "InternalError"


class NotIndependent(HoroError):
    code = "NotIndependent"


class Inconsistent(HoroError):
    code = "Inconsistent"


class ZeroVector(HoroError):
    code = "ZeroVector"


class DivisionByZero(HoroError, ZeroDivisionError):
    code = "DivisionByZero"


class PoleAtOne(HoroError):
    code = "PoleAtOne"


class NotExpandable(HoroError):
    code = "NotExpandable"


class NotQGorenstein(HoroError):
    """
    Raised when no piecewise linear canonical function exists.

    The ``details`` carry ``cone`` (index of the offending maximal cone, or a
    pair of indices for a face disagreement) and ``witness`` (a readable
    description of the clashing constraints).
    """

    code = "NotQGorenstein"


class NonNegativeWeight(HoroError):
    code = "NonNegativeWeight"


class NotComplete(HoroError):
    code = "NotComplete"


class NotLocallyFactorial(HoroError):
    code = "NotLocallyFactorial"


class PreconditionFailed(HoroError):
    code = "PreconditionFailed"


class DocumentError(HoroError):
    """
    Base class for input document errors.

    Attributes:
        diagnostics (list of Diagnostic): Located problems found in the document.
    """

    code = "DocumentError"

    def __init__(self, message="", diagnostics=None, **details):
        super().__init__(message, **details)
        self.diagnostics = list(diagnostics or [])

    def to_dict(self):
        payload = super().to_dict()
        payload["diagnostics"] = [d.to_dict() for d in self.diagnostics]
        return payload


class SchemaError(DocumentError):
    code = "SchemaError"


class SemanticError(DocumentError):
    code = "SemanticError"
