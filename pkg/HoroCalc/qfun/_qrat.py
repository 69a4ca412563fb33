import logging
import math
from fractions import Fraction
from typing import List, Tuple
from sympy import Poly, QQ
from sympy.polys.rings import ring
from sympy.polys.ring_series import rs_mul, rs_series_inversion
from ._qpoly import QPoly, _x, format_terms, to_sympy, from_sympy
from ..errors import DivisionByZero, NotExpandable, PoleAtOne

logger = logging.getLogger(__name__)

_series_ring, _y = ring('y', QQ)
_x_minus_one = Poly(_x - 1, _x)


def _canonical(num: QPoly, den: QPoly):
    if den.is_zero:
        raise DivisionByZero("denominator is zero")
    if num.is_zero:
        return QPoly.zero(), QPoly.one()

    scale = num.scale * den.scale // math.gcd(num.scale, den.scale)
    pn, sn = to_sympy(num.rescaled(scale))
    pd, sd = to_sympy(den.rescaled(scale))

    g = pn.gcd(pd)
    if g.degree() > 0:
        pn, pd = pn.exquo(g), pd.exquo(g)

    n_terms = from_sympy(pn, sn - sd)
    d_terms = from_sympy(pd)
    content = 0
    for c in list(n_terms.values()) + list(d_terms.values()):
        content = math.gcd(content, c)
    lead = d_terms[max(d_terms)]
    if lead < 0:
        content = -content
    n_terms = {e: c // content for e, c in n_terms.items()}
    d_terms = {e: c // content for e, c in d_terms.items()}
    return QPoly.from_terms(n_terms, scale), QPoly.from_terms(d_terms, scale)


class QRat:
    """
    Exact rational function in q with exponents in (1/m)Z.

    The stored form is canonical: numerator and denominator have no common
    factor and no common integer content, the denominator does not vanish at
    q = 0 and has a positive leading coefficient. Two QRats are equal iff their
    stored forms are equal.
    """

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1):
        num, den = _canonical(QPoly.coerce(num), QPoly.coerce(den))
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("QRat is immutable")

    @classmethod
    def coerce(cls, value) -> "QRat":
        if isinstance(value, QRat):
            return value
        if isinstance(value, Fraction):
            return cls(value.numerator, value.denominator)
        return cls(value)

    @classmethod
    def monomial(cls, exponent, coeff: int = 1) -> "QRat":
        return cls(QPoly.monomial(exponent, coeff))

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_polynomial(self) -> bool:
        """True when the value is a Laurent polynomial."""
        return self.den.is_one

    def as_qpoly(self) -> QPoly:
        if not self.is_polynomial:
            raise ValueError(f"{self} is not a polynomial")
        return self.num

    def __eq__(self, other):
        try:
            other = QRat.coerce(other)
        except TypeError:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        other = QRat.coerce(other)
        if self.den == other.den:
            return QRat(self.num + other.num, self.den)
        return QRat(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return QRat(-self.num, self.den)

    def __sub__(self, other):
        return self + (-QRat.coerce(other))

    def __rsub__(self, other):
        return QRat.coerce(other) - self

    def __mul__(self, other):
        other = QRat.coerce(other)
        return QRat(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = QRat.coerce(other)
        if other.is_zero:
            raise DivisionByZero(f"division of {self} by zero")
        return QRat(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return QRat.coerce(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return QRat(1) / (self ** -n)
        return QRat(self.num ** n, self.den ** n)

    def invert_variable(self) -> "QRat":
        """Substitute q -> 1/q."""
        return QRat(self.num.invert_variable(), self.den.invert_variable())

    def eval_at_one(self) -> Fraction:
        """
        Value at q = 1.

        Powers of (x - 1), x = q^(1/m), cancel in the canonical form, so any
        remaining zero of the denominator at 1 is a genuine pole.

        Raises:
            PoleAtOne: If the denominator vanishes at q = 1.
        """
        if self.is_zero:
            return Fraction(0)
        scale = self.num.scale * self.den.scale // math.gcd(self.num.scale, self.den.scale)
        pn, _ = to_sympy(self.num.rescaled(scale))
        pd, _ = to_sympy(self.den.rescaled(scale))
        order = 0
        while pd.eval(1) == 0:
            pd = pd.exquo(_x_minus_one)
            order += 1
        while order and pn.eval(1) == 0:
            pn = pn.exquo(_x_minus_one)
            order -= 1
        if order:
            raise PoleAtOne(f"{self.render()} has a pole of order {order} at q = 1")
        return Fraction(int(pn.eval(1)), int(pd.eval(1)))

    def series_expand(self, bound) -> List[Tuple[Fraction, Fraction]]:
        """
        Expansion in descending powers of q, truncated below q^(-bound).

        The value is written as q^e * N(y) / D(y) with y = q^(-1/m); D(0) is the
        leading coefficient of the denominator, so the series in y always exists.

        Args:
            bound: Lowest exponent kept is -bound.

        Returns:
            list of (exponent, coefficient), exponents >= -bound, descending.

        Raises:
            NotExpandable: If a positive power of q appears.
        """
        if self.is_zero:
            return []
        scale = self.num.scale * self.den.scale // math.gcd(self.num.scale, self.den.scale)
        num = self.num.rescaled(scale)
        den = self.den.rescaled(scale)
        top_n, top_d = max(num), max(den)
        lead = top_n - top_d
        if lead > 0:
            raise NotExpandable(
                f"{self.render()} starts at q^{Fraction(lead, scale)}, not a series in q^-1")

        order = lead + int(math.floor(Fraction(bound) * scale))
        if order < 0:
            return []
        prec = order + 1
        n_series = _series_ring.from_dict({(top_n - e,): QQ(c) for e, c in num.items()})
        d_series = _series_ring.from_dict({(top_d - e,): QQ(c) for e, c in den.items()})
        expansion = rs_mul(n_series, rs_series_inversion(d_series, _y, prec), _y, prec)

        out = []
        for (k,), c in expansion.items():
            if k <= order and c:
                out.append((Fraction(lead - k, scale), Fraction(int(c.numerator), int(c.denominator))))
        out.sort(reverse=True)
        logger.debug("expanded %s to %d terms (bound %s)", self.render(), len(out), bound)
        return out

    def render(self, var: str = 'q') -> str:
        if self.is_zero:
            return "0"
        num_items = self.num.items()
        if len(num_items) == 1:
            num_text = format_terms(num_items, var)
        else:
            low = self.num.low_degree
            inner = format_terms([(e - low, c) for e, c in num_items], var)
            if low == 0:
                num_text = f"({inner})" if not self.den.is_one else inner
            else:
                num_text = f"{format_terms([(low, 1)], var)}*({inner})"
        if self.den.is_one:
            return num_text
        den_items = self.den.items()
        den_text = format_terms(den_items, var)
        if len(den_items) > 1:
            den_text = f"({den_text})"
        return f"{num_text}/{den_text}"

    def to_json(self):
        scale = self.num.scale * self.den.scale // math.gcd(self.num.scale, self.den.scale)
        num = self.num.rescaled(scale)
        den = self.den.rescaled(scale)
        return {
            "scale": scale,
            "numerator": [[e, num[e]] for e in sorted(num, reverse=True)],
            "denominator": [[e, den[e]] for e in sorted(den, reverse=True)],
        }

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"QRat({self.render()})"


def add(a, b) -> QRat:
    return QRat.coerce(a) + b


def sub(a, b) -> QRat:
    return QRat.coerce(a) - b


def mul(a, b) -> QRat:
    return QRat.coerce(a) * b


def div(a, b) -> QRat:
    return QRat.coerce(a) / b


def eval_at_one(a) -> Fraction:
    return QRat.coerce(a).eval_at_one()


def series_expand(a, bound) -> List[Tuple[Fraction, Fraction]]:
    return QRat.coerce(a).series_expand(bound)


def invert_variable(a) -> QRat:
    return QRat.coerce(a).invert_variable()
