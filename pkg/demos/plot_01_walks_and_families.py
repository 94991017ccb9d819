"""
Walks and the eight path families
=================================

A walk is stored as its positions. Families are predicates; each can be
enumerated, counted in closed form and sampled uniformly.
"""

from pathmorph import parse, path_from_steps
from pathmorph.families import (SetId, count_by_recursion, count_formula,
                                enumerate_paths, is_member, sample_many,
                                zero_touch_count)

###############################################################################
# Build a walk from steps, or parse the tuple notation
p = path_from_steps([1, 1, -1, -1, 1, -1])
print(p, p.half_length, p.steps)
print(parse("(0,1,2,1,0,1,2,1,0)"))

###############################################################################
# Membership. This walk touches zero once in the interior, so it is in D
q = parse("(0,1,2,1,0,1,2,1,0)")
print({s.value: is_member(q, s) for s in SetId})
print("interior zeros:", zero_touch_count(q))

###############################################################################
# Sizes at n = 4: closed form, a completion-count recursion and a full sweep
for s in SetId:
    by_sweep = sum(1 for _ in enumerate_paths(4, s))
    print(f"{s.value:7s} formula={count_formula(4, s):4d} "
          f"recursion={count_by_recursion(4, s):4d} sweep={by_sweep:4d}")

###############################################################################
# Closed forms work far past any enumeration
print(count_formula(60, "A"))

###############################################################################
# Seeded uniform samples
for walk in sample_many(6, "D", seed=1, count=3):
    print(walk)
