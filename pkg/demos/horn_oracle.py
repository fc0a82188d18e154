"""Compare the bounded horn enumeration with the commutator.

Run ``python3 demos/horn_oracle.py``.  For each small double extension the
script grows the horn length until no new end state appears and compares the
congruence generated by the collected pairs with [Eq(f_A), Eq(α⊤)].
"""
import rackcover as rc
from rackcover.corpus import dihedral_square, small_double_extensions
from rackcover.paths import x_alpha_closure

print(f"{'square':22s} {'|A⊤|':>5s} {'bound':>5s}  agrees  double covering")
for key, sq in sorted(small_double_extensions(9).items()):
    closed, res = x_alpha_closure(sq, stabilize=True)
    print(f"{key:22s} {sq.top.size:5d} {res.bound:5d}  {str(closed == rc.c2(sq)):6s}  "
          f"{rc.is_double_covering(sq)}")

sq = dihedral_square(6, 3)
V = rc.find_nonrigid_horn(sq, 4)
ends, _ = rc.volume_endpoints(sq, V)
print("\nnon-rigid horn on D36 of length", len(V), "with head", V.head, "and ends", ends)
