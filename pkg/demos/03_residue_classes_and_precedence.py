"""Residue classes, good vectors, and transporting representations.

To show every even value of g is a value of f without enumerating
forever, values are split by residue class d*n + a.  A class is settled
when every coset v with g(v) = a (mod d) is "good": some transform T in
R(f, g, d) makes (1/d) v T^t integral, turning g-representations into
f-representations of the same number.
"""

import ternrep as tr

f = tr.named_form("S4f")
g = tr.named_form("S4g")

cls = tr.ResidueClass(4, 0)
vecs = tr.residue_vectors(g, cls)
print(f"R(g, 4, 0) has {len(vecs)} cosets; all have even y and z:")
print("  ", [tuple(v) for v in vecs[:8]], "...")

report = tr.precedes(f, g, cls)
print(f"\nall good? {report.all_good} ({len(report.good)} cosets, {len(report.bad)} bad)")

print("\nTransport in action: g(1,4,2) = 392 and (1,4,2) = (1,0,2) mod 4 is good.")
T1 = ((4, 2, 2), (0, 4, 2), (0, 0, 2))  # a member of R(f, g, 4)
assert T1 in report.transforms
w = tr.transport((1, 4, 2), T1, 4)
print(f"  (1/4)(1,4,2)T^t = {tuple(w)} and f{tuple(w)} = {tr.evaluate(f, w)}")

print("\nNot every class is this friendly:")
stuck = tr.precedes(f, g, tr.ResidueClass(12, 2))
print(f"  class 12n+2: {len(stuck.good)} good cosets, {len(stuck.bad)} bad ones")
print("  bad cosets share a pattern: x not divisible by 3, y, z = +-3 mod 12")
print("  ", sorted(map(tuple, stuck.bad))[:4], "...")

print("\nA family of classes covers a form when every attainable residue appears:")
family = [tr.ResidueClass(4, 0), tr.ResidueClass(12, 2), tr.ResidueClass(12, 6)]
cover = tr.cover_check(g, family)
print(f"  attainable residues of g mod {cover.modulus}: {cover.attainable}")
print(f"  covered: {cover.ok}")
