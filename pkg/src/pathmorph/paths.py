"""Simple-random-walk paths: representation, validation and text formats.

A path is stored as its position sequence ``(S_0, S_1, ..., S_2n)`` with
``S_0 = 0`` and unit steps. Step sequences are a derived view.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Tuple

from .errors import BadStep, InvalidLength, NonZeroStart, OddLength, PathSyntaxError

__all__ = [
    "Path",
    "path_from_steps",
    "steps_from_path",
    "validate",
    "serialize",
    "parse",
    "to_json",
    "from_json",
    "read_jsonl",
    "write_jsonl",
]


def _check(positions: Tuple[int, ...]) -> None:
    if not positions:
        raise OddLength("empty position sequence")
    if positions[0] != 0:
        raise NonZeroStart(f"path starts at {positions[0]}, not 0")
    for i in range(1, len(positions)):
        if abs(positions[i] - positions[i - 1]) != 1:
            raise BadStep(i)
    if len(positions) % 2 == 0:
        raise OddLength(f"a path needs an even number of steps, got {len(positions) - 1}")


@dataclass(frozen=True, order=True)
class Path:
    """An immutable 2n-step walk on the integers starting from 0.

    Construction validates the position sequence; ``Path((0, 1, 0))`` is
    fine, ``Path((0, 2))`` raises :class:`BadStep`.
    """

    positions: Tuple[int, ...]

    def __post_init__(self):
        positions = tuple(int(v) for v in self.positions)
        object.__setattr__(self, "positions", positions)
        _check(positions)

    @classmethod
    def _trusted(cls, positions: Tuple[int, ...]) -> "Path":
        # skips validation; callers guarantee the invariants
        obj = object.__new__(cls)
        object.__setattr__(obj, "positions", positions)
        return obj

    @property
    def half_length(self) -> int:
        return (len(self.positions) - 1) // 2

    @property
    def n(self) -> int:
        return self.half_length

    @property
    def steps(self) -> Tuple[int, ...]:
        p = self.positions
        return tuple(p[i] - p[i - 1] for i in range(1, len(p)))

    def __len__(self):
        return len(self.positions)

    def __iter__(self):
        return iter(self.positions)

    def __getitem__(self, i):
        return self.positions[i]

    def __neg__(self) -> "Path":
        return Path._trusted(tuple(-v for v in self.positions))

    def __str__(self):
        return serialize(self)


def path_from_steps(steps: Sequence[int]) -> Path:
    """Build the path whose i-th position is the sum of the first i steps."""
    steps = tuple(int(s) for s in steps)
    if len(steps) == 0 or len(steps) % 2:
        raise InvalidLength(f"need a non-empty even number of steps, got {len(steps)}")
    positions = [0]
    for i, s in enumerate(steps, start=1):
        if s not in (-1, 1):
            raise BadStep(i, f"step {i} is {s}, expected -1 or +1")
        positions.append(positions[-1] + s)
    return Path._trusted(tuple(positions))


def steps_from_path(p: Path) -> Tuple[int, ...]:
    return p.steps


def validate(raw: Iterable[int]) -> Path:
    """Return ``raw`` as a :class:`Path` or raise the first violated invariant.

    Raises NonZeroStart, BadStep or OddLength.
    """
    return Path(tuple(raw))


def serialize(p: Path) -> str:
    """Format as ``(0,1,2,1,0)``: parenthesised, no spaces."""
    return "(" + ",".join(str(v) for v in p.positions) + ")"


def parse(text: str) -> Path:
    body = text.strip()
    if body.startswith("(") != body.endswith(")"):
        raise PathSyntaxError(f"unbalanced parentheses in {text!r}")
    if body.startswith("("):
        body = body[1:-1]
    if not body.strip():
        raise PathSyntaxError("empty path text")
    try:
        values = [int(tok) for tok in body.split(",")]
    except ValueError:
        raise PathSyntaxError(f"not a comma-separated integer list: {text!r}") from None
    return validate(values)


def to_json(p: Path) -> str:
    return json.dumps(list(p.positions), separators=(",", ":"))


def from_json(line: str) -> Path:
    try:
        values = json.loads(line)
    except json.JSONDecodeError as exc:
        raise PathSyntaxError(f"bad JSON line: {exc}") from None
    if not isinstance(values, list) or not all(
        isinstance(v, int) and not isinstance(v, bool) for v in values
    ):
        raise PathSyntaxError(f"expected a JSON array of integers, got {line.strip()!r}")
    return validate(values)


def read_jsonl(lines: Iterable[str]) -> Iterator[Path]:
    """Yield one path per non-blank line of JSON arrays."""
    for line in lines:
        if line.strip():
            yield from_json(line)


def write_jsonl(paths: Iterable[Path]) -> str:
    return "".join(to_json(p) + "\n" for p in paths)
