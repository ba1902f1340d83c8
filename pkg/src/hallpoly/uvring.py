"""Arithmetic in Z[t][u, v] modulo the rewrite rule u^2 = v^2 - 2t*uv + (t^2+1)^2.

An element is kept in canonical form P(v) + Q(v)*u where P and Q are
polynomials in v with IntPoly coefficients; every u^2 produced by a product
is rewritten immediately.  Products of canonical elements only ever create
u-degree 2, so a single rewrite restores the canonical form.

This is the ring in which the undetermined-coefficient computation for
x^3 - y^2 takes place: substituting consecutive recurrence terms for u and v
turns ring identities into exact IntPoly identities.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import sequences
from .errors import InvalidK
from .zpoly import IntPoly, T

# (t^2 + 1)^2, the constant in the rewrite rule.
_T2P1 = T * T + 1
_T2P1_SQ = _T2P1 * _T2P1
_M2T = IntPoly((0, -2))  # -2t


def _coerce(c) -> IntPoly:
    return c if isinstance(c, IntPoly) else IntPoly.constant(c)


def _vtrim(slots):
    end = len(slots)
    while end and not slots[end - 1]:
        end -= 1
    return tuple(slots[:end])


def _vadd(a, b):
    out = list(a) + [IntPoly.zero()] * (len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = out[i] + c
    return out


def _vmul(a, b):
    if not a or not b:
        return ()
    out = [IntPoly.zero()] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] = out[i + j] + ca * cb
    return out


def _vscale(a, c: IntPoly):
    return [x * c for x in a]


def _vshift(a, n: int):
    return [IntPoly.zero()] * n + list(a) if a else []


class UVElem:
    """Canonical element P(v) + Q(v)*u; slots indexed by v-power."""

    __slots__ = ("p", "q")

    def __init__(self, p=(), q=()):
        self.p = _vtrim(tuple(_coerce(c) for c in p))
        self.q = _vtrim(tuple(_coerce(c) for c in q))

    @classmethod
    def zero(cls) -> "UVElem":
        return cls()

    @classmethod
    def one(cls) -> "UVElem":
        return cls((IntPoly.one(),))

    @classmethod
    def u(cls) -> "UVElem":
        return cls((), (IntPoly.one(),))

    @classmethod
    def v(cls) -> "UVElem":
        return cls((IntPoly.zero(), IntPoly.one()))

    def __bool__(self):
        return bool(self.p or self.q)

    def __eq__(self, other):
        if not isinstance(other, UVElem):
            return NotImplemented
        return self.p == other.p and self.q == other.q

    def __hash__(self):
        return hash((self.p, self.q))

    def __add__(self, other):
        if not isinstance(other, UVElem):
            return NotImplemented
        return UVElem(_vadd(self.p, other.p), _vadd(self.q, other.q))

    def __neg__(self):
        return UVElem(tuple(-c for c in self.p), tuple(-c for c in self.q))

    def __sub__(self, other):
        if not isinstance(other, UVElem):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, IntPoly)):
            c = _coerce(other)
            return UVElem(_vscale(self.p, c), _vscale(self.q, c))
        if not isinstance(other, UVElem):
            return NotImplemented
        # (p1 + q1 u)(p2 + q2 u) = p1p2 + (p1q2 + q1p2) u + q1q2 u^2,
        # then u^2 S(v) -> S v^2 + (t^2+1)^2 S - 2t * v S * u.
        p_out = _vmul(self.p, other.p)
        q_out = _vadd(_vmul(self.p, other.q), _vmul(self.q, other.p))
        s = _vmul(self.q, other.q)
        if s:
            p_out = _vadd(p_out, _vshift(s, 2))
            p_out = _vadd(p_out, _vscale(s, _T2P1_SQ))
            q_out = _vadd(q_out, _vscale(_vshift(s, 1), _M2T))
        return UVElem(p_out, q_out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = UVElem.one()
        for _ in range(n):
            out = out * self
        return out

    def coefficient(self, u_pow: int, v_pow: int) -> IntPoly:
        """The IntPoly attached to u^u_pow v^v_pow (u_pow in {0, 1})."""
        slots = self.p if u_pow == 0 else self.q
        return slots[v_pow] if v_pow < len(slots) else IntPoly.zero()

    def substitute(self, k: int) -> IntPoly:
        """Exact image in Z[t] under u -> a_{k-1}, v -> a_k, for odd k >= 3."""
        _check_k(k)
        u_val = sequences.a_seq(k - 1)
        v_val = sequences.a_seq(k)
        return _eval_slots(self.p, v_val) + _eval_slots(self.q, v_val) * u_val

    def to_json(self) -> dict:
        return {
            "p": [c.to_json() for c in self.p],
            "q": [c.to_json() for c in self.q],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "UVElem":
        return cls(
            tuple(IntPoly.from_json(c) for c in obj["p"]),
            tuple(IntPoly.from_json(c) for c in obj["q"]),
        )

    def __repr__(self):
        parts = []
        for i, c in enumerate(self.p):
            if c:
                parts.append(f"({c.to_text()})*{_vname(0, i)}")
        for i, c in enumerate(self.q):
            if c:
                parts.append(f"({c.to_text()})*{_vname(1, i)}")
        return "UVElem(" + (" + ".join(parts) or "0") + ")"


def _check_k(k: int):
    if k < 3 or k % 2 == 0:
        raise InvalidK(f"k must be odd and >= 3, got {k}")


def _eval_slots(slots, point: IntPoly) -> IntPoly:
    """Horner evaluation of a v-polynomial at an IntPoly point."""
    acc = IntPoly.zero()
    for c in reversed(slots):
        acc = acc * point + c
    return acc


def _vname(u_pow: int, v_pow: int) -> str:
    upart = "u" if u_pow else ""
    if v_pow == 0:
        return upart or "1"
    vpart = "v" if v_pow == 1 else f"v{v_pow}"
    return upart + vpart


# Monomials whose coefficients the construction forces to vanish, in
# descending order; the surviving slots are exactly 1, v and u.
RESIDUAL_TAGS = ("v6", "uv5", "v5", "uv4", "v4", "uv3", "v3", "uv2", "v2", "uv")


def _tag_powers(tag: str):
    if tag == "uv":
        return 1, 1
    u_pow = 1 if tag.startswith("u") else 0
    return u_pow, int(tag.lstrip("uv") or 1)


@dataclass(frozen=True)
class AnsatzCoefficients:
    """The twelve undetermined coefficients: a..e build x, f..n build y."""

    a: IntPoly
    b: IntPoly
    c: IntPoly
    d: IntPoly
    e: IntPoly
    f: IntPoly
    g: IntPoly
    h: IntPoly
    i: IntPoly
    j: IntPoly
    m: IntPoly
    n: IntPoly


def ansatz_build(c: AnsatzCoefficients) -> tuple[UVElem, UVElem]:
    """Assemble x = a v^2 + b uv + c u + d v + e and
    y = f v^3 + g v^2 u + h v^2 + i uv + j u + m v + n."""
    x = UVElem((c.e, c.d, c.a), (c.c, c.b))
    y = UVElem((c.n, c.m, c.h, c.f), (c.j, c.i, c.g))
    return x, y


@dataclass(frozen=True)
class AnsatzResidual:
    """x^3 - y^2 in the ring, split into forced-zero tags and the rest."""

    tags: dict
    remainder: UVElem
    element: UVElem


def ansatz_residual(c: AnsatzCoefficients) -> AnsatzResidual:
    x, y = ansatz_build(c)
    diff = x * x * x - y * y
    tags = {}
    for tag in RESIDUAL_TAGS:
        u_pow, v_pow = _tag_powers(tag)
        tags[tag] = diff.coefficient(u_pow, v_pow)
    remainder = UVElem(diff.p[:2], diff.q[:1])
    return AnsatzResidual(tags=tags, remainder=remainder, element=diff)


def published_solution() -> AnsatzCoefficients:
    """The coefficient set whose residual survives only in 1, v and u."""
    t = T
    return AnsatzCoefficients(
        a=IntPoly.one(),
        b=-2 * t,
        c=-6 * t,
        d=IntPoly.constant(6),
        e=t ** 4 + 5 * t ** 2 + 4,
        f=-2 * t,
        g=4 * t ** 2 + 1,
        h=-9 * t,
        i=18 * t ** 2 + 9,
        j=t ** 4 + 20 * t ** 2 + 19,
        m=-2 * t ** 5 - 4 * t ** 3 - 2 * t,
        n=-9 * t ** 5 - 18 * t ** 3 - 9 * t,
    )
