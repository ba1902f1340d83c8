"""Exact dense univariate polynomial arithmetic over Python's big integers.

A polynomial is stored as a tuple of coefficients ascending by power of t,
so ``IntPoly([4, 0, 5, 0, 1])`` is t^4 + 5t^2 + 4.  The zero polynomial
stores an empty tuple and reports degree minus infinity (``NEG_INF``), so
degree bookkeeping such as deg(a*b) = deg(a) + deg(b) can never be confused
by a fake degree -1.

``RatPoly`` pairs an ``IntPoly`` numerator with a positive integer
denominator and is kept fully reduced: gcd(den, content(num)) = 1.

All values are immutable and every operation is exact; no floating point
appears anywhere in this module.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from .errors import ExponentTooLarge, NotDivisible

NEG_INF = float("-inf")

# Schoolbook below this degree, divide-and-conquer (Karatsuba) above.
KARATSUBA_CUTOFF = 64

POW_LIMIT = 8


def _trim(coeffs):
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


def _mul_school(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] += ca * cb
    return out


def _mul_kara(a, b):
    n = max(len(a), len(b))
    if n <= KARATSUBA_CUTOFF:
        return _mul_school(a, b)
    h = n // 2
    a0, a1 = a[:h], a[h:]
    b0, b1 = b[:h], b[h:]
    lo = _mul_kara(a0, b0) if a0 and b0 else []
    hi = _mul_kara(a1, b1) if a1 and b1 else []
    asum = [x + y for x, y in zip(a0, a1)] + list(a1[len(a0):] or a0[len(a1):])
    bsum = [x + y for x, y in zip(b0, b1)] + list(b1[len(b0):] or b0[len(b1):])
    mid = _mul_kara(asum, bsum) if asum and bsum else []
    out = [0] * (len(a) + len(b) - 1)
    for i, c in enumerate(lo):
        out[i] += c
        out[i + h] -= c
    for i, c in enumerate(mid):
        out[i + h] += c
    for i, c in enumerate(hi):
        out[i + h] -= c
        out[i + 2 * h] += c
    return out


class IntPoly:
    """Dense polynomial in t with arbitrary-precision integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _trim(tuple(int(c) for c in coeffs))

    @classmethod
    def zero(cls) -> "IntPoly":
        return cls()

    @classmethod
    def one(cls) -> "IntPoly":
        return cls((1,))

    @classmethod
    def constant(cls, c: int) -> "IntPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, c: int, n: int) -> "IntPoly":
        """c * t^n."""
        if n < 0:
            raise ValueError("negative exponent")
        return cls((0,) * n + (c,))

    @property
    def degree(self):
        """Degree, or NEG_INF for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly.constant(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPoly.constant(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPoly.constant(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(tuple(c * other for c in self.coeffs))
        if not isinstance(other, IntPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return IntPoly()
        if max(len(self.coeffs), len(other.coeffs)) > KARATSUBA_CUTOFF:
            return IntPoly(_mul_kara(self.coeffs, other.coeffs))
        return IntPoly(_mul_school(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        return self.pow(n)

    def pow(self, n: int, limit: int = POW_LIMIT) -> "IntPoly":
        """Repeated exact product; n must be in [0, limit]."""
        if n < 0:
            raise ValueError("negative exponent")
        if n > limit:
            raise ExponentTooLarge(f"exponent {n} exceeds bound {limit}")
        out = IntPoly.one()
        for _ in range(n):
            out = out * self
        return out

    def evaluate(self, t0: int) -> int:
        """Exact Horner evaluation at an integer point."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t0 + c
        return acc

    def content(self) -> int:
        """gcd of all coefficients; 0 for the zero polynomial."""
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def divexact_int(self, c: int) -> "IntPoly":
        """Divide every coefficient by c exactly.

        Raises NotDivisible naming the power of the first coefficient that
        is not a multiple of c.
        """
        if c == 0:
            raise ZeroDivisionError("division by zero")
        out = []
        for i, a in enumerate(self.coeffs):
            q, r = divmod(a, c)
            if r:
                raise NotDivisible(f"coefficient of t^{i} ({a}) not divisible by {c}", index=i)
            out.append(q)
        return IntPoly(out)

    def divexact_poly(self, b: "IntPoly") -> "IntPoly":
        """Exact quotient q with self = q*b; raises NotDivisible otherwise."""
        if not b:
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        db = len(b.coeffs) - 1
        lead = b.coeffs[-1]
        quot = [0] * max(len(rem) - db, 0)
        while len(_trim(rem)) - 1 >= db:
            rem = list(_trim(rem))
            dr = len(rem) - 1
            q, r = divmod(rem[-1], lead)
            if r:
                raise NotDivisible(f"{self!r} is not divisible by {b!r}")
            quot[dr - db] = q
            for i, c in enumerate(b.coeffs):
                rem[dr - db + i] -= q * c
        if _trim(rem):
            raise NotDivisible(f"{self!r} is not divisible by {b!r}")
        return IntPoly(quot)

    def shift(self, n: int) -> "IntPoly":
        """Multiply by t^n."""
        if not self.coeffs:
            return self
        return IntPoly((0,) * n + self.coeffs)

    def to_json(self, var: str = "t") -> dict:
        return {"var": var, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> "IntPoly":
        den = int(obj.get("den", "1"))
        if den != 1:
            raise ValueError("denominator present; use poly_from_json")
        return cls(int(c) for c in obj["coeffs"])

    def to_text(self, var: str = "t") -> str:
        return format_terms(self.coeffs, var)

    def __repr__(self):
        return f"IntPoly({self.to_text()!r})"


#: The variable t itself, for building polynomials as expressions.
T = IntPoly((0, 1))


class RatPoly:
    """An IntPoly numerator over a positive integer denominator, reduced."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        if isinstance(num, (list, tuple)):
            num = IntPoly(num)
        den = int(den)
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            num, den = -num, -den
        if not num:
            den = 1
        g = math.gcd(num.content(), den)
        if g > 1:
            num = num.divexact_int(g)
            den //= g
        self.num = num
        self.den = den

    @classmethod
    def from_int_poly(cls, p: IntPoly) -> "RatPoly":
        return cls(p, 1)

    @property
    def degree(self):
        return self.num.degree

    def is_integral(self) -> bool:
        return self.den == 1

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, IntPoly):
            other = RatPoly(other, 1)
        if not isinstance(other, RatPoly):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        other = _as_rat(other)
        if other is NotImplemented:
            return other
        l = self.den * other.den // math.gcd(self.den, other.den)
        return RatPoly(self.num * (l // self.den) + other.num * (l // other.den), l)

    __radd__ = __add__

    def __neg__(self):
        return RatPoly(-self.num, self.den)

    def __sub__(self, other):
        other = _as_rat(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __mul__(self, other):
        other = _as_rat(other)
        if other is NotImplemented:
            return other
        return RatPoly(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        return RatPoly(self.num.pow(n), self.den ** n)

    def evaluate(self, t0: int) -> Fraction:
        return Fraction(self.num.evaluate(t0), self.den)

    def to_json(self, var: str = "t") -> dict:
        obj = {"var": var, "coeffs": [str(c) for c in self.num.coeffs]}
        if self.den != 1:
            obj["den"] = str(self.den)
        return obj

    def __repr__(self):
        if self.den == 1:
            return f"RatPoly({self.num.to_text()!r})"
        return f"RatPoly({self.num.to_text()!r}, den={self.den})"


def _as_rat(x):
    if isinstance(x, RatPoly):
        return x
    if isinstance(x, IntPoly):
        return RatPoly(x, 1)
    if isinstance(x, int):
        return RatPoly(IntPoly.constant(x), 1)
    return NotImplemented


def cube_minus_square(x, y):
    """Exact x^3 - y^2.

    IntPoly inputs give an IntPoly; RatPoly inputs give the reduced RatPoly
    over the common denominator lcm(den_x^3, den_y^2).
    """
    if isinstance(x, IntPoly) and isinstance(y, IntPoly):
        return x * x * x - y * y
    x, y = _as_rat(x), _as_rat(y)
    dx, dy = x.den ** 3, y.den ** 2
    l = dx * dy // math.gcd(dx, dy)
    num = x.num * x.num * x.num * (l // dx) - y.num * y.num * (l // dy)
    return RatPoly(num, l)


def poly_from_json(obj: dict):
    """Parse the polynomial JSON object; IntPoly when den is absent or 1."""
    coeffs = [int(c) for c in obj["coeffs"]]
    den = int(obj.get("den", "1"))
    if den == 1:
        return IntPoly(coeffs)
    return RatPoly(IntPoly(coeffs), den)


_TERM_RE = re.compile(
    r"^(?P<coeff>[+-]?\d+|[+-])?(?P<star>\*)?(?:(?P<var>[A-Za-z]\w*)(?:\^(?P<exp>\d+))?)?$"
)


def parse_text(s: str) -> IntPoly:
    """Parse "8*t^7 + 28*t^5 - 1" style text, any whitespace, any term order."""
    compact = re.sub(r"\s+", "", s)
    if not compact:
        raise ValueError("empty polynomial text")
    if compact == "0":
        return IntPoly()
    terms = re.findall(r"[+-]?[^+-]+", compact)
    if "".join(terms) != compact:
        raise ValueError(f"cannot parse polynomial text: {s!r}")
    var_seen = None
    coeffs: dict[int, int] = {}
    for term in terms:
        m = _TERM_RE.match(term)
        if not m or (m.group("coeff") is None and m.group("var") is None):
            raise ValueError(f"cannot parse term {term!r}")
        if m.group("star") and (m.group("coeff") is None or m.group("var") is None):
            raise ValueError(f"cannot parse term {term!r}")
        c = m.group("coeff")
        if c in ("+", "-") and m.group("var") is None:
            raise ValueError(f"cannot parse term {term!r}")
        coeff = int(c) if c not in (None, "+", "-") else (-1 if c == "-" else 1)
        if m.group("var") is not None:
            if var_seen is None:
                var_seen = m.group("var")
            elif m.group("var") != var_seen:
                raise ValueError(f"mixed variables {var_seen!r} and {m.group('var')!r}")
            exp = int(m.group("exp") or 1)
        else:
            exp = 0
        coeffs[exp] = coeffs.get(exp, 0) + coeff
    out = [0] * (max(coeffs) + 1)
    for e, c in coeffs.items():
        out[e] = c
    return IntPoly(out)


def format_terms(coeffs, var: str = "t") -> str:
    """Render ascending coefficients as descending human text."""
    if not coeffs:
        return "0"
    parts = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        elif i == 1:
            body = var if mag == 1 else f"{mag}*{var}"
        else:
            body = f"{var}^{i}" if mag == 1 else f"{mag}*{var}^{i}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f" + {body}" if c > 0 else f" - {body}")
    return "".join(parts)
