"""A walk through the dihedral double extensions.

Run ``python3 demos/dihedral_tour.py``.  The square D_{2nm} with the two
reduction maps x mod n and x mod m is a double extension for every n, m; the
script shows which of them are double coverings and which are trivial, then
prints the explicit obstruction found for n = 6, m = 3.
"""
import rackcover as rc
from rackcover.corpus import dihedral_law, dihedral_square


def grid(test, size=8):
    print("     " + " ".join(f"{m:2d}" for m in range(1, size + 1)))
    for n in range(1, size + 1):
        marks = ["■" if test(n, m) else "·" for m in range(1, size + 1)]
        print(f"n={n:<2d} " + "  ".join(marks))


print("double coverings (rows n, columns m):")
grid(lambda n, m: rc.is_double_covering(dihedral_square(n, m)))

print("\ntrivial double coverings with α⊤ = x mod n:")
grid(lambda n, m: rc.is_trivial_double_covering(dihedral_square(n, m).transpose()))
agree = all(rc.is_trivial_double_covering(dihedral_square(n, m).transpose()) == dihedral_law(n, m)
            for n in range(1, 9) for m in range(1, 9))
print("matches the arithmetic rule (x ≡ 0 mod n whenever 2mx ≡ 0 mod n):", agree)

sq = dihedral_square(6, 3)
report = rc.classify_square(sq).to_dict()
print("\nD36 with maps mod 6 and mod 3:")
for name, flag in sorted(report["flags"].items()):
    print(f"  {name:24s} {flag}")
print("  obstruction:", report["witnesses"]["double_covering"]["text"])

theta = rc.c2(sq)
print("  centralizing congruence has", len(theta.classes), "classes, e.g.", theta.classes[0])
new, unit = rc.centralize2(sq)
print("  after centralizing, the top has", new.top.size, "elements;",
      "double covering:", rc.is_double_covering(new))
