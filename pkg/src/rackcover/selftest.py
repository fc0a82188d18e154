"""Recompute the example corpus and compare against the expected outcomes."""
from __future__ import annotations

from .classify import classify_square, is_covering, is_double_covering, is_trivial_quandle
from .commutator import c1, c2, commutator
from .congruence import kernel_pair
from .core import dihedral
from .corpus import (S3_CYCLES, corpus_squares, diamond_family, dihedral_square, mod_map, q_family,
                     s3_sign, toy_family, toy_square)
from .extensions import is_3fold_extension, pullback, pullback_square, reflection_cube2
from .classify import is_trivial_double_covering
from .groups import (centralize_grp, conj_hom, group_commutator, kernel, quaternion_group, center,
                     sym_group)
from .paths import find_nonrigid_horn, x_alpha_bounded


def _flags(sq):
    return classify_square(sq).to_dict()


def _checks():
    sq = corpus_squares()
    out = []

    def check(name, ok, detail=""):
        out.append({"name": name, "ok": bool(ok), "detail": detail})

    d36 = dihedral_square(6, 3)
    rep = _flags(d36)
    w = rep["witnesses"]["double_covering"]
    check("dihedral 3,6 not a double covering", not rep["flags"]["double_covering"]
          and w["witness"] == [0, 0, 0, 0, 6] and w["value"] == 12, w["text"])
    check("dihedral 3,6 flags", rep["flags"] == {"double_extension": True, "double_covering": False,
                                                 "trivial_double_covering": False,
                                                 "normal_double_covering": False})
    check("commutator on D36 relates 12 and 0",
          commutator(d36.top, kernel_pair(d36.f_A), kernel_pair(d36.alpha_top)).related(12, 0))
    check("c2 on D36 relates 12 and 0", c2(d36).related(12, 0))
    check("horn oracle on D36 finds (12, 0)", (12, 0) in x_alpha_bounded(d36, 4).pairs)

    for n, m in ((5, 3), (3, 5)):
        check(f"dihedral {m},{n} both orientations trivial",
              is_trivial_double_covering(dihedral_square(n, m))
              and is_trivial_double_covering(dihedral_square(n, m).transpose()))
    d23 = dihedral_square(3, 2)
    rep = _flags(d23)
    check("dihedral 2,3 (n,0) trivial", is_trivial_double_covering(d23.transpose()))
    check("dihedral 2,3 (m,0) not trivial, 0◁0 ≠ 0◁3",
          not rep["flags"]["trivial_double_covering"]
          and rep["witnesses"]["trivial_double_covering"]["witness"] == [0, 0, 3])
    check("dihedral double extensions", all(dihedral_square(n, m).is_double_extension()
                                           for n in range(1, 7) for m in range(1, 7)))

    F = q_family()
    P, _, _ = pullback(F["t"], F["t_star"])
    check("Q6 is the pullback of t and t_star", P.size == 6)
    pm = sq["q-trivial"].comparison_map().map
    check("comparison of Q identifies •1' with •1 and nothing else",
          pm[4] == pm[5] and len(set(pm.tolist())) == 6)
    check("(π1p, t⋆) trivial", is_trivial_double_covering(sq["q-trivial"]))
    rep = _flags(sq["q-nontrivial"])
    check("(π2p, t) not trivial, •1◁⋆11 ≠ •1◁⋆10",
          rep["witnesses"]["trivial_double_covering"]["text"] == "•1◁⋆11 ≠ •1◁⋆10")
    check("(π2p, t) not normal, •1◁⋆11 ≠ •1◁⋆10 while •0◁⋆00 = •0◁⋆01",
          not rep["flags"]["normal_double_covering"])

    T = toy_family()
    check("kernel pair of t has 8 elements", pullback(T["t"], T["t"])[0].size == 8)
    texts = set()
    for which in (1, 2):
        rep = _flags(toy_square(which))
        check(f"toy square {which} is a double covering", rep["flags"]["double_covering"])
        check(f"toy square {which} is not normal", not rep["flags"]["normal_double_covering"])
        texts.add(rep["witnesses"]["normal_double_covering"]["text"])
    check("toy witnesses reproduced", texts == {"•00◁⋆00 ≠ •00◁⋆01 while •10◁⋆11 = •10◁⋆10",
                                                "•00◁⋆00 ≠ •00◁⋆10 while •01◁⋆11 = •01◁⋆01"})
    check("c2 on the toy square is diagonal", c2(toy_square(2)).is_diagonal())
    check("no nonrigid horn in the toy square up to length 6", find_nonrigid_horn(toy_square(2), 6) is None)
    cube = pullback_square(toy_square(2), toy_square(2))
    check("toy square pulled back along itself: projections not trivial",
          not is_trivial_double_covering(cube.sigma) and not is_trivial_double_covering(cube.gamma))

    check("Q⋄⋄ has 8 elements", diamond_family()["K"].size == 8)
    for key in ("diamond-dn", "diamond-up"):
        rep = _flags(sq[key])
        check(f"{key} double and normal double covering",
              rep["flags"]["double_covering"] and rep["flags"]["normal_double_covering"])

    check("reflection cube of D36 is 3-fold", is_3fold_extension(reflection_cube2(d36)))
    check("D2 is trivial", is_trivial_quandle(dihedral(2)) and is_trivial_quandle(dihedral(1)))

    S3 = sym_group(3)
    q = s3_sign()
    A3 = kernel(q)
    check("[S3, A3] = A3", group_commutator(S3, A3, range(S3.size)) == A3)
    g, _ = centralize_grp(q)
    check("centralization of the sign map in groups is the identity on 2 elements",
          g.dom.size == 2 and g.cod.size == 2)
    theta = c1(conj_hom(q))
    idx = {S3_CYCLES[lab]: i for i, lab in enumerate(S3.labels)}
    tr = [idx["(12)"], idx["(13)"], idx["(23)"]]
    check("c1 identifies the transpositions",
          all(theta.related(a, b) for a in tr for b in tr))
    check("c1 keeps (123) and (132) apart", not theta.related(idx["(123)"], idx["(132)"]))
    check("quaternion center has 2 elements", len(center(quaternion_group())) == 2)
    check("gap square: comparison covering, not double covering",
          is_covering(sq["gap"].comparison_map()) and not is_double_covering(sq["gap"]))
    check("d6 → d3 is a covering", is_covering(mod_map(6, 3)))
    return out, theta, idx


def _deviations(theta, idx):
    sq = corpus_squares()
    devs = []
    cls = theta.classes
    if len(cls) == 4 and [idx["e"]] in cls:
        devs.append({"name": "S3 centralization",
                     "detail": "closure gives 4 classes: {e}, transpositions, (123), (132); "
                               "the printed table has 3"})
    trivial = [k for k in ("diamond-dn", "diamond-up") if is_trivial_double_covering(sq[k])]
    if trivial:
        devs.append({"name": "Q⋄⋄ squares trivial",
                     "detail": "both squares are pullback squares, so Eq(α⊤) ∧ Eq(f_A) = Δ and "
                               f"the trivial test holds for {', '.join(trivial)}"})
    return devs


def run_selftest():
    checks, theta, idx = _checks()
    failed = [c["name"] for c in checks if not c["ok"]]
    return {"type": "selftest", "ok": not failed, "checks": checks, "failed": failed,
            "deviations": _deviations(theta, idx)}
