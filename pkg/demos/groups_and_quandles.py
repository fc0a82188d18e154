"""Central extensions of groups seen through their conjugation quandles.

Run ``python3 demos/groups_and_quandles.py``.
"""
import rackcover as rc
from rackcover.corpus import S3_CYCLES, q8_square, s3_sign
from rackcover.groups import (centralize_grp, conj_hom, conj_square,
                              is_double_central_extension_grp)

q = s3_sign()
g, _ = centralize_grp(q)
print("sign map S3 → {±1}: central?", rc.is_central_extension_grp(q),
      "| group centralization has", g.dom.size, "elements")
theta = rc.c1(conj_hom(q))
names = [S3_CYCLES[lab] for lab in q.dom.labels]
print("quandle centralization classes:", [[names[x] for x in cls] for cls in theta.classes])

sq = q8_square()
print("\nQ8 over Q8/⟨i⟩ and Q8/⟨j⟩:")
print("  conjugation square is a double covering:", rc.is_double_covering(conj_square(sq)))
print("  comparison map is central:", rc.is_central_extension_grp(sq.comparison()))
print("  group square is double central:", is_double_central_extension_grp(sq))
