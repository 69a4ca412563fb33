from ._qpoly import QPoly, InexactDivision, format_terms
from ._qrat import QRat, add, sub, mul, div, eval_at_one, series_expand, invert_variable
