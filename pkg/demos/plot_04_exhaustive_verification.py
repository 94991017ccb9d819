"""
Exhaustive verification
=======================

Every check sweeps all 4**n walks and returns a report.
"""

from pathmorph.verify import (check_bijection, check_catalan_identity, check_counts,
                              check_theorem_invariants)

for n in range(1, 9):
    print(check_bijection(n, "phi1").summary())
for n in range(2, 9):
    print(check_bijection(n, "phi2").summary())
print(check_counts(6).summary())
print(check_theorem_invariants(6).summary())
print(check_catalan_identity(30).summary())

###############################################################################
# A broken map is caught
from pathmorph import Path, phi1, psi1


def broken(p):
    return Path((0, 1, 2, 3, 4, 5, 6)) if p == Path((0, 1, 0, 1, 0, 1, 0)) else phi1(p)


print(check_bijection(3, broken, "Aprime", "Bprime", inverse=psi1).summary())
