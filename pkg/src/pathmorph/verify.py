"""Exhaustive certification of the bijections, counts and proof invariants.

Every check returns a :class:`VerifyReport`. Reports from disjoint parts
of a sweep can be combined with :meth:`VerifyReport.merge`, which is
associative and commutative, so a partitioned run reports the same thing
as a sequential one.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb, factorial
from functools import reduce
from typing import Callable, Dict, Iterable, List, Optional, Tuple, Union

import numpy as np

from .bijections import (
    _ascents,
    _valleys,
    first_return_to_one,
    first_zero,
    get_map,
)
from .errors import LimitExceeded, NTooSmall
from .families import (
    DEFAULT_EXHAUSTIVE_LIMIT,
    _blocks,
    _sweep_range,
    member_codes,
    path_code,
    path_from_code,
    SetId,
    count_all_by_sweep,
    count_formula,
    enumerate_paths,
    is_member,
    zero_touch_count,
)
from .paths import Path, serialize

__all__ = [
    "VerifyReport",
    "DEFAULT_COUNTEREXAMPLE_CAP",
    "check_bijection",
    "check_counts",
    "check_catalan_identity",
    "check_theorem_invariants",
]

DEFAULT_COUNTEREXAMPLE_CAP = 10
_MATERIALIZE_UP_TO = 9

Counterexample = Tuple[Optional[Path], str]


@dataclass
class VerifyReport:
    n: int
    check_name: str
    domain_size: int = 0
    image_size: int = 0
    counterexamples: List[Counterexample] = field(default_factory=list)
    details: Dict[str, int] = field(default_factory=dict)
    cap: int = DEFAULT_COUNTEREXAMPLE_CAP

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def fail(self, path: Optional[Path], detail: str) -> None:
        if len(self.counterexamples) < self.cap:
            self.counterexamples.append((path, detail))

    def merge(self, other: "VerifyReport") -> "VerifyReport":
        """Combine partial reports over disjoint parts of the same domain."""
        if (self.n, self.check_name) != (other.n, other.check_name):
            raise ValueError("can only merge reports of the same check and n")
        cex = sorted(self.counterexamples + other.counterexamples, key=_cex_key)
        details = dict(self.details)
        for k, v in other.details.items():
            details[k] = details.get(k, 0) + v
        return VerifyReport(self.n, self.check_name,
                            self.domain_size + other.domain_size,
                            self.image_size + other.image_size,
                            cex[:self.cap], details, self.cap)

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "check": self.check_name,
            "passed": self.passed,
            "domain_size": self.domain_size,
            "image_size": self.image_size,
            "details": self.details,
            "counterexamples": [
                {"input": None if p is None else serialize(p), "detail": d}
                for p, d in self.counterexamples
            ],
        }

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = (f"{status} {self.check_name} n={self.n} "
                f"domain={self.domain_size} image={self.image_size}")
        if self.details:
            line += " " + " ".join(f"{k}:{v}" for k, v in self.details.items())
        for p, d in self.counterexamples:
            line += f"\n  {serialize(p) if p is not None else '-'}: {d}"
        return line


def _cex_key(c: Counterexample):
    p, d = c
    return (p is None, p.positions if p is not None else (), d)


MapLike = Union[str, Callable[[Path], Path]]
Partial = Tuple[VerifyReport, np.ndarray, np.ndarray]


def _per_path(forward, inverse, codomain: SetId, paths: Iterable[Path], n: int,
              name: str, cap: int) -> Partial:
    """Map, membership and round-trip checks; returns codes of (input, image)."""
    rep = VerifyReport(n, name, cap=cap)
    dom, img = [], []
    for p in paths:
        rep.domain_size += 1
        try:
            q = forward(p)
        except Exception as exc:  # a crash inside the map is a finding, not an abort
            rep.fail(p, f"forward raised {type(exc).__name__}: {exc}")
            continue
        if len(q) != len(p) or not is_member(q, codomain):
            rep.fail(p, f"image {serialize(q)} is not in {codomain.value}")
            continue
        try:
            back = inverse(q)
        except Exception as exc:
            rep.fail(p, f"inverse raised {type(exc).__name__} on {serialize(q)}: {exc}")
            back = None
        if back is not None and back != p:
            rep.fail(p, f"inverse gives {serialize(back)} from image {serialize(q)}")
        dom.append(path_code(p))
        img.append(path_code(q))
    return rep, np.array(dom, dtype=np.int64), np.array(img, dtype=np.int64)


def _per_block_named(name: str, domain: SetId, codomain: SetId, n: int,
                     start: int, stop: int, cap: int) -> Partial:
    info = get_map(name)
    inverse = get_map(info.inverse_name).unchecked
    paths = (Path._trusted(row) for row in _sweep_range(n, domain, start, stop))
    return _per_path(info.unchecked, inverse, codomain, paths, n,
                     f"bijection:{info.name}", cap)


def check_bijection(n: int, forward: MapLike, domain=None, codomain=None, *,
                    inverse: Optional[Callable[[Path], Path]] = None,
                    limit: int = DEFAULT_EXHAUSTIVE_LIMIT, override: bool = False,
                    cap: int = DEFAULT_COUNTEREXAMPLE_CAP,
                    workers: int = 1) -> VerifyReport:
    """Certify that ``forward`` is a bijection from ``domain`` onto ``codomain``.

    ``forward`` is a map name (``"phi1"``, ``"phi2"``, ...) or a callable;
    a callable needs an explicit ``inverse`` and both families. Checks image
    membership, two-sided inversion on the domain, injectivity (sorted
    duplicate scan) and that the images exhaust the codomain.

    The domain sweep is split by step prefix; ``workers > 1`` runs the
    parts in separate processes (named maps only).
    """
    if isinstance(forward, str):
        info = get_map(forward)
        domain = SetId.parse(domain) if domain is not None else info.domain
        codomain = SetId.parse(codomain) if codomain is not None else info.codomain
        name = f"bijection:{info.name}"
        if info.name in ("phi2", "psi2") and n < 2:
            raise NTooSmall(f"{info.name} needs n >= 2, got n={n}")
    else:
        if inverse is None or domain is None or codomain is None:
            raise ValueError("a callable forward map needs inverse, domain and codomain")
        domain, codomain = SetId.parse(domain), SetId.parse(codomain)
        name = f"bijection:{getattr(forward, '__name__', 'custom')}"
    if n > limit and not override:
        raise LimitExceeded(f"n={n} is above the exhaustive limit {limit}")

    bounds = _blocks(n)
    k = len(bounds)
    if isinstance(forward, str) and workers > 1 and k > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_per_block_named, [forward] * k, [domain] * k,
                                  [codomain] * k, [n] * k, [a for a, _ in bounds],
                                  [b for _, b in bounds], [cap] * k))
    elif isinstance(forward, str):
        parts = [_per_block_named(forward, domain, codomain, n, a, b, cap)
                 for a, b in bounds]
    else:
        parts = [_per_path(forward, inverse, codomain,
                           (Path._trusted(row) for row in _sweep_range(n, domain, a, b)),
                           n, name, cap)
                 for a, b in bounds]

    report = reduce(VerifyReport.merge, (rep for rep, _, _ in parts))
    report.check_name = name
    dom = np.concatenate([d for _, d, _ in parts])
    img = np.concatenate([i for _, _, i in parts])

    order = np.lexsort((dom, img))
    dom, img = dom[order], img[order]
    for i in np.flatnonzero(img[1:] == img[:-1]):
        report.fail(path_from_code(n, int(dom[i + 1])),
                    f"image {serialize(path_from_code(n, int(img[i])))} is also the "
                    f"image of {serialize(path_from_code(n, int(dom[i])))}")
    distinct = np.unique(img)
    report.image_size = len(distinct)

    target = member_codes(n, codomain, limit=limit, override=override)
    if not np.array_equal(distinct, target):
        for code in np.setdiff1d(target, distinct)[:cap]:
            report.fail(None, f"{serialize(path_from_code(n, int(code)))} in "
                              f"{codomain.value} is not an image")
    report.details = {domain.value: report.domain_size, codomain.value: len(target)}
    return report


def check_counts(n: int, *, limit: int = DEFAULT_EXHAUSTIVE_LIMIT,
                 override: bool = False, cap: int = DEFAULT_COUNTEREXAMPLE_CAP,
                 workers: int = 1) -> VerifyReport:
    """Compare enumerated family sizes with their closed forms at size ``n``.

    Small n counts the paths :func:`enumerate_paths` yields; larger n counts
    the same membership masks without materialising paths.
    """
    if n > limit and not override:
        raise LimitExceeded(f"n={n} is above the exhaustive limit {limit}")
    report = VerifyReport(n, "counts", cap=cap)
    if n <= _MATERIALIZE_UP_TO:
        found_all = {s.value: sum(1 for _ in enumerate_paths(n, s)) for s in SetId}
    else:
        found_all = count_all_by_sweep(n, limit=limit, override=override, workers=workers)
    for s in SetId:
        found = found_all[s.value]
        expected = count_formula(n, s)
        report.details[s.value] = found
        report.domain_size += found
        report.image_size += expected
        if found != expected:
            report.fail(None, f"|{s.value}| enumerated {found}, formula {expected}")
    # reflection-principle form of the excursion count
    reflected = comb(2 * n - 2, n - 1) - comb(2 * n - 2, n)
    closed = factorial(2 * n - 2) // (factorial(n - 1) * factorial(n))
    if reflected != closed:
        report.fail(None, f"C(2n-2,n-1) - C(2n-2,n) = {reflected} != {closed}")
    return report


def check_catalan_identity(n_max: int, *,
                           cap: int = DEFAULT_COUNTEREXAMPLE_CAP) -> VerifyReport:
    """sum_{k=1}^{n-1} |C_k| |C_{n-k}| == |C_n| for 2 <= n <= n_max, exactly."""
    if n_max < 2:
        raise ValueError("n_max must be >= 2")
    report = VerifyReport(n_max, "catalan", cap=cap)
    closed = {k: factorial(2 * k - 2) // (factorial(k - 1) * factorial(k))
              for k in range(1, n_max + 1)}
    for n in range(2, n_max + 1):
        conv = sum(closed[k] * closed[n - k] for k in range(1, n))
        report.domain_size += 1
        if conv != closed[n]:
            report.fail(None, f"n={n}: convolution {conv} != closed form {closed[n]}")
        else:
            report.image_size += 1
    report.details = {"C_max": closed[n_max]}
    return report


def check_theorem_invariants(n: int, *, limit: int = DEFAULT_EXHAUSTIVE_LIMIT,
                             override: bool = False,
                             cap: int = DEFAULT_COUNTEREXAMPLE_CAP) -> VerifyReport:
    """Check the facts both inversion proofs rest on, path by path.

    For phi1 on Aprime: the image ends at 2M, its ascent decomposition has
    h = M and d_i = b_i for i < M. For phi2 on C (n >= 2): nu of the image
    is tau - 1, descents before tau correspond, and the image has exactly
    one interior zero.
    """
    phi1 = get_map("phi1").unchecked
    phi2 = get_map("phi2").unchecked
    report = VerifyReport(n, "theorems", cap=cap)

    count1 = 0
    for p in enumerate_paths(n, SetId.Aprime, limit=limit, override=override):
        count1 += 1
        val = _valleys(p.positions)
        q = phi1(p)
        if q.positions[-1] != 2 * val.M:
            report.fail(p, f"image ends at {q.positions[-1]}, expected 2M = {2 * val.M}")
            continue
        asc = _ascents(q.positions)
        if asc.h != val.M:
            report.fail(p, f"h = {asc.h} but M = {val.M}")
            continue
        bad = [i for i in range(val.M) if asc.d[i] != val.b[i]]
        if bad:
            i = bad[0]
            report.fail(p, f"d_{i} = {asc.d[i]} but b_{i} = {val.b[i]}")
    report.details["Aprime"] = count1

    count2 = 0
    if n >= 2:
        for p in enumerate_paths(n, SetId.C, limit=limit, override=override):
            count2 += 1
            s = p.positions
            tau = first_return_to_one(s)
            q = phi2(p)
            t = q.positions
            nu = first_zero(t)
            if nu != tau - 1:
                report.fail(p, f"nu = {nu} but tau - 1 = {tau - 1}")
                continue
            for ell in range(2, tau):
                if (s[ell + 1] == s[ell] - 1) != (t[ell] == t[ell - 1] - 1):
                    report.fail(p, f"descent equivalence breaks at l = {ell}")
                    break
            if zero_touch_count(q) != 1:
                report.fail(p, f"image has {zero_touch_count(q)} interior zeros")
    report.details["C"] = count2
    report.domain_size = report.image_size = count1 + count2
    return report
