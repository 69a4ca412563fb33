import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Tuple, Union
from sympy import Poly, Symbol, ZZ
from sympy.polys.polyerrors import ExactQuotientFailed

_x = Symbol('x')

_VAR_TEXT = {'q': 'q', 'uv': '(uv)', 'L': 'L'}


class InexactDivision(ArithmeticError):
    pass


def _as_int(c) -> int:
    # sympy ZZ/QQ elements (python or gmpy backed) expose numerator/denominator
    num, den = int(c.numerator), int(c.denominator)
    if den != 1:
        raise InexactDivision(f"non-integral coefficient {num}/{den}")
    return num


def to_sympy(terms: Dict[int, int]) -> Tuple[Poly, int]:
    """
    Convert integer Laurent terms in x into a sympy polynomial and a shift.

    Returns:
        (Poly, int): ``poly`` over ZZ with nonzero constant term and ``shift`` such
        that the Laurent polynomial equals x**shift * poly.
    """
    shift = min(terms) if terms else 0
    rep = {(e - shift,): c for e, c in terms.items()}
    return Poly.from_dict(rep or {(0,): 0}, _x, domain=ZZ), shift


def from_sympy(poly: Poly, shift: int = 0) -> Dict[int, int]:
    out = {}
    for (e,), c in poly.terms():
        c = _as_int(c)
        if c:
            out[e + shift] = c
    return out


def _format_exponent(var: str, exponent: Fraction) -> str:
    if exponent == 0:
        return ""
    if exponent == 1:
        return var
    if exponent.denominator == 1:
        return f"{var}^{exponent.numerator}"
    return f"{var}^({exponent.numerator}/{exponent.denominator})"


def format_terms(terms: Iterable[Tuple[Fraction, int]], var: str = 'q') -> str:
    """Render (exponent, coefficient) pairs, given in descending order."""
    text = _VAR_TEXT.get(var, var)
    pieces = []
    for exponent, coeff in terms:
        mono = _format_exponent(text, exponent)
        if not mono:
            piece = str(coeff)
        elif coeff == 1:
            piece = mono
        elif coeff == -1:
            piece = "-" + mono
        else:
            piece = f"{coeff}*{mono}"
        if pieces and not piece.startswith("-"):
            piece = "+" + piece
        pieces.append(piece)
    return "".join(pieces) or "0"


@dataclass(frozen=True)
class QPoly:
    """
    Laurent polynomial in q with exponents in (1/scale)Z.

    Exponents are stored as integers in x = q^(1/scale), in descending order,
    with no zero coefficient and the smallest scale able to hold them.
    Instances are built through the classmethods, which canonicalize.

    Attributes:
        scale (int): Denominator of the exponent lattice.
        terms (tuple): Pairs (exponent in x, integer coefficient).
    """

    scale: int = 1
    terms: Tuple[Tuple[int, int], ...] = ()

    @classmethod
    def from_terms(cls, terms: Dict[int, int], scale: int = 1) -> "QPoly":
        clean = {int(e): int(c) for e, c in terms.items() if c}
        g = scale
        for e in clean:
            g = math.gcd(g, e)
        g = max(g, 1)
        return cls(scale // g, tuple(sorted(((e // g, c) for e, c in clean.items()), reverse=True)))

    @classmethod
    def monomial(cls, exponent: Union[int, Fraction] = 0, coeff: int = 1) -> "QPoly":
        exponent = Fraction(exponent)
        return cls.from_terms({exponent.numerator: coeff}, exponent.denominator)

    @classmethod
    def constant(cls, coeff: int) -> "QPoly":
        return cls.from_terms({0: coeff})

    @classmethod
    def zero(cls) -> "QPoly":
        return cls()

    @classmethod
    def one(cls) -> "QPoly":
        return cls.constant(1)

    @classmethod
    def from_coefficients(cls, coeffs: Iterable[int]) -> "QPoly":
        """Build c_0 + c_1 q + c_2 q^2 + ... from the ascending coefficient list."""
        return cls.from_terms(dict(enumerate(coeffs)))

    @classmethod
    def coerce(cls, value) -> "QPoly":
        if isinstance(value, QPoly):
            return value
        if isinstance(value, int):
            return cls.constant(value)
        raise TypeError(f"cannot interpret {value!r} as a QPoly")

    def rescaled(self, scale: int) -> Dict[int, int]:
        """Terms as integer exponents in q^(1/scale); ``scale`` must be a multiple of self.scale."""
        if scale % self.scale:
            raise ValueError(f"scale {scale} is not a multiple of {self.scale}")
        k = scale // self.scale
        return {e * k: c for e, c in self.terms}

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_one(self) -> bool:
        return self.terms == ((0, 1),)

    def exponents(self):
        return [Fraction(e, self.scale) for e, _ in self.terms]

    def items(self):
        """(exponent, coefficient) pairs in descending exponent order."""
        return [(Fraction(e, self.scale), c) for e, c in self.terms]

    def coefficient(self, exponent) -> int:
        exponent = Fraction(exponent)
        for e, c in self.terms:
            if Fraction(e, self.scale) == exponent:
                return c
        return 0

    @property
    def degree(self) -> Fraction:
        if self.is_zero:
            raise ValueError("the zero polynomial has no degree")
        return Fraction(self.terms[0][0], self.scale)

    @property
    def low_degree(self) -> Fraction:
        if self.is_zero:
            raise ValueError("the zero polynomial has no degree")
        return Fraction(self.terms[-1][0], self.scale)

    def at_one(self) -> int:
        return sum(c for _, c in self.terms)

    def _aligned(self, other):
        other = QPoly.coerce(other)
        scale = self.scale * other.scale // math.gcd(self.scale, other.scale)
        return scale, self.rescaled(scale), other.rescaled(scale)

    def __add__(self, other):
        scale, a, b = self._aligned(other)
        for e, c in b.items():
            a[e] = a.get(e, 0) + c
        return QPoly.from_terms(a, scale)

    __radd__ = __add__

    def __neg__(self):
        return QPoly(self.scale, tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other):
        return self + (-QPoly.coerce(other))

    def __rsub__(self, other):
        return QPoly.coerce(other) - self

    def __mul__(self, other):
        scale, a, b = self._aligned(other)
        out = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                out[ea + eb] = out.get(ea + eb, 0) + ca * cb
        return QPoly.from_terms(out, scale)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers of a QPoly are QRats")
        result = QPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def invert_variable(self) -> "QPoly":
        """Substitute q -> 1/q."""
        return QPoly.from_terms({-e: c for e, c in self.terms}, self.scale)

    def divide_exact(self, other) -> "QPoly":
        """
        Exact quotient self / other.

        Raises:
            InexactDivision: If other does not divide self in Z[q^(1/m), q^(-1/m)].
        """
        scale, a, b = self._aligned(other)
        if not b:
            raise ZeroDivisionError("division by the zero polynomial")
        if not a:
            return QPoly.zero()
        pa, sa = to_sympy(a)
        pb, sb = to_sympy(b)
        try:
            quotient = pa.exquo(pb)
        except ExactQuotientFailed as exc:
            raise InexactDivision(str(exc)) from exc
        return QPoly.from_terms(from_sympy(quotient, sa - sb), scale)

    def render(self, var: str = 'q') -> str:
        return format_terms(self.items(), var)

    def to_json(self):
        return {"scale": self.scale, "terms": [[e, c] for e, c in self.terms]}

    def __str__(self):
        return self.render()
