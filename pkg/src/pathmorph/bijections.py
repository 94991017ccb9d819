"""Two explicit bijections on 2n-step walks and their inverses.

``phi1``/``psi1`` pair up-first bridges with strictly positive walks by
reflecting each "valley" of the bridge into a "mountain". ``phi2``/``psi2``
pair positive excursions with non-negative bridges touching zero exactly
once in the interior by lowering the descents before the first return to
height 1.

Every public map checks its domain. The ``_unchecked`` variants skip the
check and exist for the exhaustive verifier.
"""
from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Callable, Dict, Optional, Tuple

from .errors import NotInDomain, NTooSmall
from .families import SetId, is_member
from .paths import Path

__all__ = [
    "ValleyDecomposition",
    "AscentDecomposition",
    "StopTimes",
    "decompose_valleys",
    "decompose_ascents",
    "stop_times",
    "first_return_to_one",
    "first_zero",
    "phi1",
    "psi1",
    "phi1_full",
    "psi1_full",
    "phi2",
    "psi2",
    "MAPS",
    "get_map",
]


@dataclass(frozen=True)
class ValleyDecomposition:
    """Markers of an up-first bridge with maximum ``M``.

    ``a[k]`` (k = 1..M) is the first time the walk reaches height k and
    ``b[k]`` (k = 0..M-1) the last visit to k before ``a[k+1]``; ``b[0] = 0``.
    On ``[a[m], b[m]]`` the walk is a valley hanging from height m.
    """

    M: int
    a: Dict[int, int]
    b: Dict[int, int]

    def as_dict(self):
        return {"M": self.M,
                "a": [self.a[k] for k in range(1, self.M + 1)],
                "b": [self.b[k] for k in range(0, self.M)]}


@dataclass(frozen=True)
class AscentDecomposition:
    """Markers of a positive walk ending at height ``2h``.

    ``c[k]`` and ``d[k]`` (k = 1..h) are the first and last visits to k
    after ``d[k-1]``; ``d[0] = 0``.
    """

    h: int
    c: Dict[int, int]
    d: Dict[int, int]

    def as_dict(self):
        return {"h": self.h,
                "c": [self.c[k] for k in range(1, self.h + 1)],
                "d": [self.d[k] for k in range(0, self.h + 1)]}


@dataclass(frozen=True)
class StopTimes:
    tau: Optional[int] = None
    nu: Optional[int] = None

    def as_dict(self):
        return {k: v for k, v in (("tau", self.tau), ("nu", self.nu)) if v is not None}


def _require(p: Path, s: SetId, what: str) -> None:
    if not is_member(p, s):
        raise NotInDomain(f"{what} is defined on family {s.value}; {p} is not a member")


# -- bijection 1 --------------------------------------------------------------

def _valleys(pos) -> ValleyDecomposition:
    M = max(pos[1:])
    a = {M: pos.index(M, 1)}
    b = {0: 0}
    for k in range(M - 1, 0, -1):
        window = pos[1:a[k + 1] + 1]
        a[k] = window.index(k) + 1
        b[k] = len(window) - window[::-1].index(k)
    return ValleyDecomposition(M, a, b)


def decompose_valleys(p: Path) -> ValleyDecomposition:
    _require(p, SetId.Aprime, "the valley decomposition")
    return _valleys(p.positions)


def _ascents(pos) -> AscentDecomposition:
    last = len(pos) - 1
    h = pos[last] // 2
    c: Dict[int, int] = {}
    d = {0: 0}
    for k in range(1, h + 1):
        tail = pos[d[k - 1]:]
        c[k] = d[k - 1] + tail.index(k)
        d[k] = last - tail[::-1].index(k)
    return AscentDecomposition(h, c, d)


def decompose_ascents(q: Path) -> AscentDecomposition:
    _require(q, SetId.Bprime, "the ascent decomposition")
    return _ascents(q.positions)


def _reflect_blocks(pos, top: int, starts, ends) -> Tuple[int, ...]:
    # value at l is 2m - S_l for l in [starts[m], ends[m]] (m < top) and
    # 2*top - S_l for l >= starts[top]
    ends_sorted = [ends[m] for m in range(1, top)]
    out = [0]
    for ell in range(1, len(pos)):
        if ell >= starts[top]:
            m = top
        else:
            m = bisect_left(ends_sorted, ell) + 1
        out.append(2 * m - pos[ell])
    return tuple(out)


def _phi1_unchecked(p: Path) -> Path:
    dec = _valleys(p.positions)
    return Path._trusted(_reflect_blocks(p.positions, dec.M, dec.a, dec.b))


def _psi1_unchecked(q: Path) -> Path:
    dec = _ascents(q.positions)
    return Path._trusted(_reflect_blocks(q.positions, dec.h, dec.c, dec.d))


def phi1(p: Path) -> Path:
    """Map an up-first bridge to a strictly positive walk ending at 2 * max."""
    _require(p, SetId.Aprime, "phi1")
    return _phi1_unchecked(p)


def psi1(q: Path) -> Path:
    """Inverse of :func:`phi1`."""
    _require(q, SetId.Bprime, "psi1")
    return _psi1_unchecked(q)


def _phi1_full_unchecked(p: Path) -> Path:
    if p.positions[1] > 0:
        return _phi1_unchecked(p)
    return -_phi1_unchecked(-p)


def _psi1_full_unchecked(q: Path) -> Path:
    if q.positions[1] > 0:
        return _psi1_unchecked(q)
    return -_psi1_unchecked(-q)


def phi1_full(p: Path) -> Path:
    """Extend :func:`phi1` to all bridges by conjugating with negation.

    Down-first bridges are negated, mapped, and negated back.
    """
    _require(p, SetId.A, "phi1_full")
    return _phi1_full_unchecked(p)


def psi1_full(q: Path) -> Path:
    _require(q, SetId.B, "psi1_full")
    return _psi1_full_unchecked(q)


# -- bijection 2 --------------------------------------------------------------

def first_return_to_one(pos) -> int:
    """min{k > 1 : S_k = 1}."""
    return pos.index(1, 2)


def first_zero(pos) -> int:
    """min{k > 0 : T_k = 0}."""
    return pos.index(0, 1)


def _phi2_unchecked(p: Path) -> Path:
    pos = p.positions
    tau = first_return_to_one(pos)
    out = list(pos)
    for ell in range(2, tau):
        if pos[ell + 1] == pos[ell] - 1:
            out[ell] = pos[ell] - 2
    return Path._trusted(tuple(out))


def _psi2_unchecked(q: Path) -> Path:
    pos = q.positions
    nu = first_zero(pos)
    out = list(pos)
    for ell in range(2, nu + 1):
        if pos[ell] == pos[ell - 1] - 1:
            out[ell] = pos[ell] + 2
    return Path._trusted(tuple(out))


def phi2(p: Path) -> Path:
    """Lower by 2 every point before the first return to 1 that is followed by a descent."""
    if p.half_length < 2:
        raise NTooSmall(f"phi2 needs n >= 2, got n={p.half_length}")
    _require(p, SetId.C, "phi2")
    return _phi2_unchecked(p)


def psi2(q: Path) -> Path:
    """Inverse of :func:`phi2`."""
    if q.half_length < 2:
        raise NTooSmall(f"psi2 needs n >= 2, got n={q.half_length}")
    _require(q, SetId.D, "psi2")
    return _psi2_unchecked(q)


def stop_times(p: Path) -> StopTimes:
    """tau for a C path, nu for a D path."""
    if p.half_length >= 2 and is_member(p, SetId.C):
        return StopTimes(tau=first_return_to_one(p.positions))
    if is_member(p, SetId.D):
        return StopTimes(nu=first_zero(p.positions))
    raise NotInDomain(f"{p} is in neither C nor D with n >= 2")


# -- registry -----------------------------------------------------------------

@dataclass(frozen=True)
class MapInfo:
    name: str
    forward: Callable[[Path], Path]
    inverse_name: str
    domain: SetId
    codomain: SetId
    unchecked: Callable[[Path], Path]


MAPS: Dict[str, MapInfo] = {
    "phi1": MapInfo("phi1", phi1, "psi1", SetId.Aprime, SetId.Bprime, _phi1_unchecked),
    "psi1": MapInfo("psi1", psi1, "phi1", SetId.Bprime, SetId.Aprime, _psi1_unchecked),
    "phi1full": MapInfo("phi1full", phi1_full, "psi1full", SetId.A, SetId.B,
                        _phi1_full_unchecked),
    "psi1full": MapInfo("psi1full", psi1_full, "phi1full", SetId.B, SetId.A,
                        _psi1_full_unchecked),
    "phi2": MapInfo("phi2", phi2, "psi2", SetId.C, SetId.D, _phi2_unchecked),
    "psi2": MapInfo("psi2", psi2, "phi2", SetId.D, SetId.C, _psi2_unchecked),
}


def get_map(name: str) -> MapInfo:
    key = name.lower().replace("_", "")
    if key not in MAPS:
        raise ValueError(f"unknown bijection {name!r}; expected one of {', '.join(MAPS)}")
    return MAPS[key]


def markers(name: str, p: Path) -> dict:
    """Decomposition or stopping time that drives map ``name`` on input ``p``."""
    key = get_map(name).name
    if key == "phi1":
        return decompose_valleys(p).as_dict()
    if key == "psi1":
        return decompose_ascents(p).as_dict()
    if key in ("phi1full", "psi1full"):
        negated = p.positions[1] < 0
        rep = -p if negated else p
        dec = _valleys(rep.positions) if key == "phi1full" else _ascents(rep.positions)
        return {"negated": negated, **dec.as_dict()}
    return stop_times(p).as_dict()
