"""The two parametric families of same-representation pairs.

Family iii pairs a x^2 + b y^2 + b z^2 + b yz with a x^2 + b y^2 + 3b z^2;
family iv pairs a(x^2 + y^2 + z^2) + b(yz + xz + xy) with
a x^2 + (2a - b) y^2 + (2a + b) z^2 + 2b xz.  Members of a pair represent
the same integers whenever they are positive definite.
"""

import numpy as np

import ternrep as tr

for kind, params in (("iii", [(1, 1), (2, 1), (1, 2), (3, 2)]),
                     ("iv", [(3, 1), (4, 1), (5, 2)])):
    print(f"family {kind}:")
    for a, b in params:
        p, q = tr.kaplansky_family_pair(kind, a, b)
        agree = np.array_equal(tr.represented_mask(p, 10**4), tr.represented_mask(q, 10**4))
        iso = tr.is_isometric(p, q)
        print(f"  (a={a}, b={b}):  {p.polynomial()}   vs   {q.polynomial()}")
        print(f"      sets agree to 1e4: {agree};  isometric: {iso is not None}")

print("\nnot every parameter choice is definite:")
try:
    tr.kaplansky_family_pair("iii", 1, -1)
except tr.NotPositiveDefinite as exc:
    print("  (1, -1) rejected:", exc)
