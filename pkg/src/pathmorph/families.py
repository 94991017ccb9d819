"""The eight path families, their predicates, enumerators, counts and samplers.

Family tags::

    S       every 2n-step path
    A       bridges, S_2n = 0
    B       paths that never come back to 0
    Aprime  bridges whose first step is up
    Bprime  paths strictly positive after time 0
    T       non-negative bridges
    C       bridges strictly positive strictly between 0 and 2n
    D       non-negative bridges with exactly one interior zero

Enumeration order is lexicographic on the step sequence with -1 < +1,
which coincides with lexicographic order on positions.
"""
from __future__ import annotations

import enum
import random
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from math import comb, factorial
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np

from .errors import EmptyFamily, LimitExceeded, NotInDomain
from .paths import Path

__all__ = [
    "SetId",
    "DEFAULT_EXHAUSTIVE_LIMIT",
    "is_member",
    "zero_touch_count",
    "enumerate_paths",
    "enumerate_excursions",
    "count_formula",
    "count_by_enumeration",
    "count_all_by_sweep",
    "path_code",
    "path_from_code",
    "member_codes",
    "count_by_recursion",
    "catalan",
    "rank",
    "unrank",
    "sample",
    "sample_many",
]

DEFAULT_EXHAUSTIVE_LIMIT = 12

# 2**16 step sequences per numpy block
_BLOCK_BITS = 16


class SetId(str, enum.Enum):
    S = "S"
    A = "A"
    B = "B"
    Aprime = "Aprime"
    Bprime = "Bprime"
    T = "T"
    C = "C"
    D = "D"

    @classmethod
    def parse(cls, text) -> "SetId":
        if isinstance(text, cls):
            return text
        key = str(text).strip().replace("'", "prime")
        for member in cls:
            if member.value.lower() == key.lower():
                return member
        raise ValueError(f"unknown family {text!r}; expected one of "
                         + ", ".join(m.value for m in cls))

    def __str__(self):
        return self.value


def catalan(m: int) -> int:
    return comb(2 * m, m) // (m + 1)


def zero_touch_count(p: Path) -> int:
    """Number of i in 1..n-1 with S_2i = 0 (the endpoint is not counted)."""
    pos = p.positions
    return sum(1 for i in range(1, p.half_length) if pos[2 * i] == 0)


def is_member(p: Path, s) -> bool:
    s = SetId.parse(s)
    pos = p.positions
    last = len(pos) - 1
    if s is SetId.S:
        return True
    if s is SetId.A:
        return pos[last] == 0
    if s is SetId.B:
        return all(v != 0 for v in pos[1:])
    if s is SetId.Aprime:
        return pos[1] > 0 and pos[last] == 0
    if s is SetId.Bprime:
        return all(v > 0 for v in pos[1:])
    nonneg_bridge = pos[last] == 0 and all(v >= 0 for v in pos[1:last])
    if s is SetId.T:
        return nonneg_bridge
    if s is SetId.C:
        return nonneg_bridge and zero_touch_count(p) == 0
    return nonneg_bridge and zero_touch_count(p) == 1


def count_formula(n: int, s) -> int:
    """Closed-form size of family ``s`` at half-length ``n`` (exact integer)."""
    s = SetId.parse(s)
    if n < 1:
        raise ValueError("n must be >= 1")
    if s is SetId.S:
        return 4 ** n
    if s in (SetId.A, SetId.B):
        return comb(2 * n, n)
    if s in (SetId.Aprime, SetId.Bprime):
        return comb(2 * n, n) // 2
    if s is SetId.C:
        return factorial(2 * n - 2) // (factorial(n - 1) * factorial(n))
    if s is SetId.D:
        return sum(count_formula(k, SetId.C) * count_formula(n - k, SetId.C)
                   for k in range(1, n))
    return catalan(n)


# -- exhaustive filter sweep -------------------------------------------------

def _block_mask(pos: np.ndarray, s: SetId, n: int) -> np.ndarray:
    # pos[:, j] holds S_{j+1}
    last = pos[:, -1]
    if s is SetId.S:
        return np.ones(len(pos), dtype=bool)
    if s is SetId.A:
        return last == 0
    if s is SetId.B:
        return (pos != 0).all(axis=1)
    if s is SetId.Aprime:
        return (pos[:, 0] > 0) & (last == 0)
    if s is SetId.Bprime:
        return (pos > 0).all(axis=1)
    nonneg = (last == 0) & (pos[:, :-1] >= 0).all(axis=1)
    if s is SetId.T:
        return nonneg
    zeros = (pos[:, 1:2 * n - 2:2] == 0).sum(axis=1)
    return nonneg & (zeros == (0 if s is SetId.C else 1))


def _block_positions(n: int, start: int, stop: int) -> np.ndarray:
    """Positions S_1..S_2n for step-sequence indices [start, stop).

    Bit (2n-1-j) of the index is step j, 1 meaning +1.
    """
    idx = np.arange(start, stop, dtype=np.int64)
    shifts = np.arange(2 * n - 1, -1, -1, dtype=np.int64)
    steps = (((idx[:, None] >> shifts) & 1) * 2 - 1).astype(np.int16)
    return np.cumsum(steps, axis=1, dtype=np.int16)


def _sweep_range(n: int, s: SetId, start: int, stop: int) -> List[Tuple[int, ...]]:
    pos = _block_positions(n, start, stop)
    rows = pos[_block_mask(pos, s, n)]
    return [(0, *row) for row in rows.tolist()]


def _count_range(n: int, start: int, stop: int) -> Dict[str, int]:
    pos = _block_positions(n, start, stop)
    return {s.value: int(_block_mask(pos, s, n).sum()) for s in SetId}


def _blocks(n: int) -> List[Tuple[int, int]]:
    total = 4 ** n
    block = 1 << min(_BLOCK_BITS, 2 * n)
    return [(a, min(a + block, total)) for a in range(0, total, block)]


def path_code(p: Path) -> int:
    """Index of ``p`` among all 2n-step walks in canonical order."""
    code = 0
    pos = p.positions
    for i in range(1, len(pos)):
        code = (code << 1) | (pos[i] > pos[i - 1])
    return code


def path_from_code(n: int, code: int) -> Path:
    pos = [0]
    for j in range(2 * n - 1, -1, -1):
        pos.append(pos[-1] + (1 if (code >> j) & 1 else -1))
    return Path._trusted(tuple(pos))


def member_codes(n: int, s, *, limit: int = DEFAULT_EXHAUSTIVE_LIMIT,
                 override: bool = False) -> np.ndarray:
    """Sorted int64 codes (see :func:`path_code`) of every member of ``s``."""
    s = SetId.parse(s)
    _check_limit(n, limit, override)
    parts = []
    for a, b in _blocks(n):
        pos = _block_positions(n, a, b)
        parts.append(np.arange(a, b, dtype=np.int64)[_block_mask(pos, s, n)])
    return np.concatenate(parts)


def _check_limit(n: int, limit: int, override: bool) -> None:
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > limit and not override:
        raise LimitExceeded(
            f"n={n} is above the exhaustive limit {limit}; pass override to force it"
        )


def enumerate_paths(n: int, s, *, method: str = "filter",
                    limit: int = DEFAULT_EXHAUSTIVE_LIMIT, override: bool = False,
                    workers: int = 1) -> Iterator[Path]:
    """Yield every member of family ``s`` at half-length ``n`` in canonical order.

    ``method="filter"`` sweeps all 4**n step sequences and keeps the
    members; ``method="direct"`` builds only members (currently family C
    only, see :func:`enumerate_excursions`). ``workers > 1`` splits the
    sweep by step prefix across processes; the merged output is identical.
    """
    s = SetId.parse(s)
    _check_limit(n, limit, override)
    if method == "direct":
        if s is not SetId.C:
            raise ValueError("direct generation is only implemented for family C")
        yield from enumerate_excursions(n)
        return
    if method != "filter":
        raise ValueError(f"unknown enumeration method {method!r}")

    bounds = _blocks(n)
    if workers > 1 and len(bounds) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(_sweep_range, [n] * len(bounds), [s] * len(bounds),
                             [a for a, _ in bounds], [b for _, b in bounds])
            for part in parts:
                for row in part:
                    yield Path._trusted(row)
        return
    for a, b in bounds:
        for row in _sweep_range(n, s, a, b):
            yield Path._trusted(row)


def enumerate_excursions(n: int) -> Iterator[Path]:
    """Generate family C directly: up first, positive inside, back to 0 at 2n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    length = 2 * n
    pos = [0] * (length + 1)

    def extend(i: int) -> Iterator[Path]:
        if i == length:
            yield Path._trusted(tuple(pos))
            return
        h = pos[i]
        for step in (-1, 1):
            h2 = h + step
            nxt = i + 1
            if nxt < length and h2 <= 0:
                continue
            if h2 > length - nxt:
                continue
            pos[nxt] = h2
            yield from extend(nxt)

    pos[1] = 1
    yield from extend(1)


def count_by_enumeration(n: int, s, **kwargs) -> int:
    return sum(1 for _ in enumerate_paths(n, s, **kwargs))


def count_all_by_sweep(n: int, *, limit: int = DEFAULT_EXHAUSTIVE_LIMIT,
                       override: bool = False, workers: int = 1) -> Dict[str, int]:
    """Sizes of all eight families from one sweep over every step sequence.

    Uses the same membership masks as :func:`enumerate_paths` but never
    builds Path objects, so it stays fast at the exhaustive limit.
    """
    _check_limit(n, limit, override)
    bounds = _blocks(n)
    if workers > 1 and len(bounds) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_count_range, [n] * len(bounds),
                                  [a for a, _ in bounds], [b for _, b in bounds]))
    else:
        parts = [_count_range(n, a, b) for a, b in bounds]
    return {s.value: sum(p[s.value] for p in parts) for s in SetId}


# -- ranking via completion counts -------------------------------------------

def _admits(s: SetId, n: int, i: int, h: int) -> bool:
    """Whether height h is allowed at time i (1 <= i <= 2n) for family s."""
    end = i == 2 * n
    if s is SetId.S:
        return True
    if s is SetId.A:
        return not end or h == 0
    if s is SetId.B:
        return h != 0
    if s is SetId.Aprime:
        return (i != 1 or h > 0) and (not end or h == 0)
    if s is SetId.Bprime:
        return h > 0
    if end:
        return h == 0
    return h > 0 if s is SetId.C else h >= 0


def _zeros_after(s: SetId, n: int, i: int, h: int, z: int) -> int:
    if s is SetId.D and h == 0 and 0 < i < 2 * n and i % 2 == 0:
        return min(z + 1, 2)
    return z


@lru_cache(maxsize=64)
def _completions(s: SetId, n: int) -> Tuple[Dict[Tuple[int, int], int], ...]:
    """table[i][(h, z)] = number of ways to finish a prefix at time i, height h.

    z is the interior zero count so far (tracked for D only, capped at 2).
    """
    length = 2 * n
    table: List[Dict[Tuple[int, int], int]] = [dict() for _ in range(length + 1)]
    for h in range(-length, length + 1):
        for z in (0, 1, 2):
            ok = z == 1 if s is SetId.D else z == 0
            if ok and (h - length) % 2 == 0:
                table[length][(h, z)] = 1
    for i in range(length - 1, -1, -1):
        nxt = table[i + 1]
        cur = table[i]
        for h in range(-i, i + 1, 2):
            for z in (0, 1, 2) if s is SetId.D else (0,):
                total = 0
                for step in (-1, 1):
                    h2 = h + step
                    if _admits(s, n, i + 1, h2):
                        total += nxt.get((h2, _zeros_after(s, n, i + 1, h2, z)), 0)
                if total:
                    cur[(h, z)] = total
    return tuple(table)


def count_by_recursion(n: int, s) -> int:
    """Family size from the completion-count table (no enumeration)."""
    s = SetId.parse(s)
    return _completions(s, n)[0].get((0, 0), 0)


def rank(p: Path, s) -> int:
    """Position of ``p`` in the canonical enumeration of its family."""
    s = SetId.parse(s)
    if not is_member(p, s):
        raise NotInDomain(f"{p} is not in family {s}")
    n = p.half_length
    table = _completions(s, n)
    r = 0
    z = 0
    pos = p.positions
    for i in range(2 * n):
        h = pos[i]
        if pos[i + 1] == h + 1 and _admits(s, n, i + 1, h - 1):
            r += table[i + 1].get((h - 1, _zeros_after(s, n, i + 1, h - 1, z)), 0)
        z = _zeros_after(s, n, i + 1, pos[i + 1], z)
    return r


def unrank(n: int, s, r: int) -> Path:
    """The ``r``-th member (0-based) of family ``s`` in canonical order."""
    s = SetId.parse(s)
    table = _completions(s, n)
    total = table[0].get((0, 0), 0)
    if not 0 <= r < total:
        raise IndexError(f"rank {r} out of range for family {s} at n={n} (size {total})")
    pos = [0]
    z = 0
    for i in range(2 * n):
        h = pos[-1]
        down = 0
        if _admits(s, n, i + 1, h - 1):
            down = table[i + 1].get((h - 1, _zeros_after(s, n, i + 1, h - 1, z)), 0)
        h2 = h - 1 if r < down else h + 1
        if h2 == h + 1:
            r -= down
        z = _zeros_after(s, n, i + 1, h2, z)
        pos.append(h2)
    return Path._trusted(tuple(pos))


def sample(n: int, s, seed: Optional[int] = None, *,
           rng: Optional[random.Random] = None) -> Path:
    """Draw one member of family ``s`` uniformly at random.

    Pass either ``seed`` or a caller-owned ``random.Random``; the same seed
    always gives the same path.
    """
    s = SetId.parse(s)
    if rng is None:
        rng = random.Random(seed)
    total = count_by_recursion(n, s)
    if total == 0:
        raise EmptyFamily(f"family {s} is empty at n={n}")
    return unrank(n, s, rng.randrange(total))


def sample_many(n: int, s, seed: int, count: int) -> List[Path]:
    rng = random.Random(seed)
    return [sample(n, s, rng=rng) for _ in range(count)]
