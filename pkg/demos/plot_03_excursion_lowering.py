"""
Lowering descents: excursions onto once-touching bridges
========================================================

``phi2`` lowers by two every point before the first return to height 1
that is followed by a down step. The image touches zero exactly once, one
step before that return.
"""

from pathmorph import parse, phi2, psi2, stop_times, zero_touch_count
from pathmorph.families import enumerate_paths

for p in enumerate_paths(4, "C"):
    q = phi2(p)
    print(p, "tau =", stop_times(p).tau, "->", q, "nu =", stop_times(q).nu,
          "zeros =", zero_touch_count(q))
    assert psi2(q) == p

###############################################################################
# n = 1 has no return to height 1, so the map is undefined there
try:
    phi2(parse("(0,1,0)"))
except Exception as exc:
    print(type(exc).__name__, exc)
