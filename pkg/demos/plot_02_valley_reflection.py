"""
Reflecting valleys: bridges onto positive walks
===============================================

``phi1`` cuts an up-first bridge at the first hitting times of each level
and flips every valley into a mountain; ``psi1`` undoes it.
"""

from pathmorph import decompose_ascents, decompose_valleys, parse, phi1, psi1
from pathmorph.bijections import phi1_full
from pathmorph.families import enumerate_paths

###############################################################################
# The valley markers of one bridge
p = parse("(0,1,0,-1,0,1,2,1,0,1,0)")
dec = decompose_valleys(p)
print("M =", dec.M, "a =", dec.a, "b =", dec.b)

###############################################################################
# Its image ends at twice the maximum and the ascent markers match
q = phi1(p)
asc = decompose_ascents(q)
print(q, "h =", asc.h, "d =", asc.d)
assert psi1(q) == p

###############################################################################
# The full n = 3 table
for p in enumerate_paths(3, "Aprime"):
    print(p, "->", phi1(p))

###############################################################################
# Down-first bridges go through negation
print(phi1_full(parse("(0,-1,-2,-1,0)")))
