"""Explicit bijections between families of 2n-step simple random walk paths."""
from .bijections import (
    AscentDecomposition,
    StopTimes,
    ValleyDecomposition,
    decompose_ascents,
    decompose_valleys,
    phi1,
    phi1_full,
    phi2,
    psi1,
    psi1_full,
    psi2,
    stop_times,
)
from .errors import (
    BadStep,
    EmptyFamily,
    InvalidLength,
    LengthMismatch,
    LimitExceeded,
    NonZeroStart,
    NotInDomain,
    NTooSmall,
    OddLength,
    PathError,
    PathSyntaxError,
)
from .families import (
    SetId,
    count_formula,
    enumerate_excursions,
    enumerate_paths,
    is_member,
    sample,
    zero_touch_count,
)
from .paths import Path, parse, path_from_steps, serialize, steps_from_path, validate
from .render import RenderSpec, render_gallery, render_pair
from .verify import (
    VerifyReport,
    check_bijection,
    check_catalan_identity,
    check_counts,
    check_theorem_invariants,
)

__version__ = "0.1.0"
