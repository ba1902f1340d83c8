"""Recurrence sequences: a_m polynomials, polynomial Pell solutions, and the
integer Pell stream for z^2 - 5w^2 = -1.

The a_m sequence is a_1 = 0, a_2 = t^2 + 1, a_m = 2t a_{m-1} + a_{m-2};
consecutive terms (a_{k-1}, a_k) feed the family construction as (u, v).

Two polynomial Pell equations appear:

  * z^2 - (t^2+1) w^2 = -1, fundamental solution (t, 1), whose solutions
    recover the same families through the substitution v - t u = (t^2+1) z;
  * u^2 - (t^2+2) w^2 = -2, fundamental solution (t, 1), stepped by the
    unit (t^2+1, t), which underlies the quartic analogue.

Memo tables are guarded by a lock: concurrent readers are safe and writers
extend the tables monotonically, so callers observe pure functions.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

from .errors import BridgeBroken, IndexOutOfRange, InvalidK
from .zpoly import IntPoly, T

SEQ_LIMIT = 200
PELL5_LIMIT = 500

# Descriptors carried by PellPair, naming the equation it solves.
NORM1_T2P1 = "z^2 - (t^2+1)*w^2 = -1"
NORM2_T2P2 = "u^2 - (t^2+2)*w^2 = -2"
NORM1_INT5 = "z^2 - 5*w^2 = -1"

_T2P1 = T * T + 1
_T2P2 = T * T + 2

_lock = threading.Lock()
_a_terms = [None, IntPoly.zero(), _T2P1]  # 1-based; index 0 unused
_pell1_terms = [None, (T, IntPoly.one())]
_pell2_terms = [None, (T, IntPoly.one())]
_pell5_terms = [None, (2, 1)]


@dataclass(frozen=True)
class PellPair:
    """One Pell solution; z^2 - D w^2 equals the declared norm exactly."""

    index: int
    z: object
    w: object
    descriptor: str


def _check_index(j: int, limit: int):
    if not 1 <= j <= limit:
        raise IndexOutOfRange(f"index {j} outside [1, {limit}]")


def a_seq(m: int, limit: int = SEQ_LIMIT) -> IntPoly:
    """The m-th recurrence polynomial; degree m for m >= 2."""
    _check_index(m, limit)
    with _lock:
        while len(_a_terms) <= m:
            _a_terms.append(2 * T * _a_terms[-1] + _a_terms[-2])
        return _a_terms[m]


def pell_norm1_seq(j: int, limit: int = SEQ_LIMIT) -> PellPair:
    """j-th solution of z^2 - (t^2+1) w^2 = -1, starting (t, 1)."""
    _check_index(j, limit)
    with _lock:
        while len(_pell1_terms) <= j:
            z, w = _pell1_terms[-1]
            # Unit action by (2t^2+1, 2t), the fundamental +1 solution.
            z2 = (2 * T * T + 1) * z + (2 * T) * _T2P1 * w
            w2 = (2 * T) * z + (2 * T * T + 1) * w
            _verify_norm(z2, w2, _T2P1, -1)
            _pell1_terms.append((z2, w2))
        z, w = _pell1_terms[j]
    return PellPair(index=j, z=z, w=w, descriptor=NORM1_T2P1)


def pell_norm2_seq(j: int, limit: int = SEQ_LIMIT) -> PellPair:
    """j-th solution of u^2 - (t^2+2) w^2 = -2, starting (t, 1)."""
    _check_index(j, limit)
    with _lock:
        while len(_pell2_terms) <= j:
            u, w = _pell2_terms[-1]
            # Unit action by (t^2+1, t), the fundamental +1 solution.
            u2 = (T * T + 1) * u + T * _T2P2 * w
            w2 = T * u + (T * T + 1) * w
            _verify_norm(u2, w2, _T2P2, -2)
            _pell2_terms.append((u2, w2))
        u, w = _pell2_terms[j]
    return PellPair(index=j, z=u, w=w, descriptor=NORM2_T2P2)


def pell5_stream(n: int, limit: int = PELL5_LIMIT) -> list[PellPair]:
    """First n integer solutions of z^2 - 5 w^2 = -1, from (2, 1)."""
    _check_index(n, limit)
    with _lock:
        while len(_pell5_terms) <= n:
            z, w = _pell5_terms[-1]
            z2, w2 = 9 * z + 20 * w, 4 * z + 9 * w
            if z2 * z2 - 5 * w2 * w2 != -1:
                raise BridgeBroken("z^2 - 5w^2 = -1 failed")  # pragma: no cover
            _pell5_terms.append((z2, w2))
        pairs = _pell5_terms[1 : n + 1]
    return [
        PellPair(index=i, z=z, w=w, descriptor=NORM1_INT5)
        for i, (z, w) in enumerate(pairs, start=1)
    ]


def _verify_norm(z: IntPoly, w: IntPoly, d: IntPoly, norm: int):
    if z * z - d * w * w != IntPoly.constant(norm):  # pragma: no cover
        raise BridgeBroken(f"norm {norm} identity failed at a new Pell term")


@dataclass(frozen=True)
class Bridge:
    """The substitution data tying (u, v) = (a_{k-1}, a_k) to Pell (z, w)."""

    k: int
    u: IntPoly
    v: IntPoly
    z: IntPoly
    w: IntPoly


def uv_bridge(k: int, limit: int = SEQ_LIMIT) -> Bridge:
    """For odd k >= 3: u = a_{k-1}, v = a_k, (z, w) the (k-1)/2-th Pell
    solution; asserts v - t u = (t^2+1) z and u = (t^2+1) w exactly."""
    if k < 3 or k % 2 == 0:
        raise InvalidK(f"k must be odd and >= 3, got {k}")
    u = a_seq(k - 1, limit)
    v = a_seq(k, limit)
    pair = pell_norm1_seq((k - 1) // 2, limit)
    if v - T * u != _T2P1 * pair.z:
        raise BridgeBroken(f"v - t*u != (t^2+1)*z at k={k}")
    if u != _T2P1 * pair.w:
        raise BridgeBroken(f"u != (t^2+1)*w at k={k}")
    return Bridge(k=k, u=u, v=v, z=pair.z, w=pair.w)
