"""Named example objects used by the tests, the demos and ``selftest``."""
from __future__ import annotations

from math import gcd

import numpy as np

from .core import FiniteRack, RackMorphism, compose, dihedral, make_morphism, make_rack, trivial
from .extensions import ExtSquare, pullback
from .groups import (conj_hom, cyclic_group, group_hom, quaternion_group, quotient_square,
                     subgroup_generated, sym_group)


def _relabel(A, labels):
    return FiniteRack(A.op, labels=labels, name=A.name, check=False)


def _retarget(f, dom=None, cod=None):
    return RackMorphism(dom or f.dom, cod or f.cod, f.map, check=False)


def _set(labels):
    return FiniteRack(trivial(len(labels)).op, labels=labels, check=False)


# ---------------------------------------------------------------- dihedral family

def mod_map(N, k):
    """D_N → D_k, x ↦ x mod k (needs k | N)."""
    return make_morphism(dihedral(N), dihedral(k), np.arange(N) % k)


def dihedral_square(n, m):
    """D_{2nm} with f_A = x mod n and α⊤ = x mod m, over D_gcd(n,m).

    The square with α⊤ = x mod n is ``dihedral_square(n, m).transpose()``.
    """
    N, g = 2 * n * m, gcd(n, m)
    return ExtSquare(mod_map(N, n), mod_map(m, g), mod_map(N, m), mod_map(n, g))


def dihedral_law(n, m):
    """x ≡ 0 mod n whenever 2mx ≡ 0 mod n."""
    return all(x % n == 0 for x in range(n) if (2 * m * x) % n == 0)


# ---------------------------------------------------------------- the seven element example

def q_family():
    """The objects Q2, Q3, Q4, Q6, Q and the maps between them."""
    Q2 = _set(["•", "⋆"])
    Q3 = _set(["•", "⋆1", "⋆0"])
    Q4 = _set(["⋆1", "⋆0", "•1", "•0"])
    t_star = make_morphism(Q3, Q2, [0, 1, 1])
    t = make_morphism(Q4, Q2, [1, 1, 0, 0])
    Q6, pi1, pi2 = pullback(t, t_star)
    Q6 = _relabel(Q6, ["⋆11", "⋆10", "⋆01", "⋆00", "•1", "•0"])
    pi1, pi2 = _retarget(pi1, dom=Q6), _retarget(pi2, dom=Q6)
    labels = ["⋆11", "⋆10", "⋆01", "⋆00", "•1", "•1'", "•0"]
    op = np.repeat(np.arange(7)[:, None], 7, axis=1)
    for s in (0, 2):                  # ⋆11 and ⋆01 swap •1 and •1'
        op[4, s], op[5, s] = 5, 4
    Q = make_rack(op, labels=labels)
    p = make_morphism(Q, Q6, [0, 1, 2, 3, 4, 4, 5])
    return dict(Q2=Q2, Q3=Q3, Q4=Q4, Q6=Q6, Q=Q, t=t, t_star=t_star, pi1=pi1, pi2=pi2, p=p)


def q_square_trivial():
    """(π1p, t⋆): α⊤ = π1∘p, α⊥ = t⋆."""
    F = q_family()
    return ExtSquare(compose(F["pi2"], F["p"]), F["t"], compose(F["pi1"], F["p"]), F["t_star"])


def q_square_nontrivial():
    """(π2p, t): α⊤ = π2∘p, α⊥ = t."""
    return q_square_trivial().transpose()


# ---------------------------------------------------------------- nine element double covering

def toy_family():
    Q2 = _set(["•", "⋆"])
    Q4 = _set(["⋆1", "⋆0", "•1", "•0"])
    t = make_morphism(Q4, Q2, [1, 1, 0, 0])
    Q8, pi1, pi2 = pullback(t, t)
    Q8 = _relabel(Q8, ["⋆11", "⋆10", "⋆01", "⋆00", "•11", "•10", "•01", "•00"])
    pi1, pi2 = _retarget(pi1, dom=Q8), _retarget(pi2, dom=Q8)
    op = np.repeat(np.arange(9)[:, None], 9, axis=1)
    for s in (0, 3):                  # ⋆11 and ⋆00 swap •00 and •00'
        op[7, s], op[8, s] = 8, 7
    Q = make_rack(op, labels=["⋆11", "⋆10", "⋆01", "⋆00", "•11", "•10", "•01", "•00", "•00'"])
    p = make_morphism(Q, Q8, list(range(8)) + [7])
    return dict(Q2=Q2, Q4=Q4, Q8=Q8, Q=Q, t=t, pi1=pi1, pi2=pi2, p=p,
                pi1p=compose(pi1, p), pi2p=compose(pi2, p))


def toy_square(which=2):
    """(π_which′, t): α⊤ = π_which∘p, f_A the other projection, both bottoms t."""
    F = toy_family()
    top, side = (F["pi1p"], F["pi2p"]) if which == 1 else (F["pi2p"], F["pi1p"])
    return ExtSquare(side, F["t"], top, F["t"])


# ---------------------------------------------------------------- Q⋄⋄

def diamond_family():
    Q_up = ["⋆^⋄", "⋆", "•^1", "•^0"]
    Q_dn = ["⋆", "⋆_⋄", "•_1", "•_0"]
    up = np.repeat(np.arange(4)[:, None], 4, axis=1)
    up[2, 0], up[3, 0] = 3, 2
    dn = np.repeat(np.arange(4)[:, None], 4, axis=1)
    dn[2, 1], dn[3, 1] = 3, 2
    Qu = make_rack(up, labels=Q_up)
    Qd = make_rack(dn, labels=Q_dn)
    base = _set(["⋆", "•"])
    f_up = make_morphism(Qu, base, [0, 0, 1, 1])
    f_dn = make_morphism(Qd, base, [0, 0, 1, 1])
    K, p_up, p_dn = pullback(f_up, f_dn)
    K = _relabel(K, ["⋆^⋄", "⋆^⋄_⋄", "⋆", "⋆_⋄", "•^1_1", "•^1_0", "•^0_1", "•^0_0"])
    return dict(Q_up=Qu, Q_dn=Qd, base=base, f_up=f_up, f_dn=f_dn, K=K,
                pi_up=_retarget(p_up, dom=K), pi_dn=_retarget(p_dn, dom=K))


def diamond_table():
    """The eight element rack written out directly, in the listing order
    ⋆^⋄, ⋆, ⋆^⋄_⋄, ⋆_⋄, •^1_1, •^1_0, •^0_1, •^0_0."""
    labels = ["⋆^⋄", "⋆", "⋆^⋄_⋄", "⋆_⋄", "•^1_1", "•^1_0", "•^0_1", "•^0_0"]
    op = np.repeat(np.arange(8)[:, None], 8, axis=1)
    bullets = {(1, 1): 4, (1, 0): 5, (0, 1): 6, (0, 0): 7}
    for (i, j), x in bullets.items():
        op[x, 0] = bullets[(1 - i, j)]          # exponents swapped
        op[x, 3] = bullets[(i, 1 - j)]          # indices swapped
        op[x, 2] = bullets[(1 - i, 1 - j)]      # both
    return make_rack(op, labels=labels)


def diamond_square(which="dn"):
    """(π_⋄, f^⋄) for which='dn', (π^⋄, f_⋄) for which='up'."""
    F = diamond_family()
    sq = ExtSquare(F["pi_up"], F["f_dn"], F["pi_dn"], F["f_up"])
    return sq if which == "dn" else sq.transpose()


# ---------------------------------------------------------------- comparison covering, not double covering

def gap_rack():
    """a swaps y1 and y2; every other action is trivial."""
    op = np.repeat(np.arange(6)[:, None], 6, axis=1)
    op[4, 0], op[5, 0] = 5, 4
    return make_rack(op, labels=["a", "b", "c", "d", "y1", "y2"])


def gap_square():
    """Quotients by {ab|cd|y1y2} and {ad|bc|y1y2} over their join.

    The comparison map only identifies y1 and y2, which act alike, so it is a
    covering; yet y1◁a◁⁻¹b◁c◁⁻¹d = y2.
    """
    from .congruence import from_classes, join, quotient
    from .extensions import _descend
    A = gap_rack()
    R = from_classes(A, [[0, 1], [2, 3], [4, 5]])
    S = from_classes(A, [[0, 3], [1, 2], [4, 5]])
    _, qR = quotient(A, R)
    _, qS = quotient(A, S)
    _, qT = quotient(A, join(R, S))
    return ExtSquare(qR, _descend(qS, qT), qS, _descend(qR, qT))


# ---------------------------------------------------------------- groups

def s3_sign():
    """Conj(S3) → {1, -1}, the sign map."""
    G = sym_group(3)
    sign = []
    for lab in G.labels:
        p = [int(c) - 1 for c in lab]
        inversions = sum(1 for i in range(3) for j in range(i + 1, 3) if p[i] > p[j])
        sign.append(inversions % 2)
    Z2 = cyclic_group(2)
    Z2.labels = ["1", "-1"]
    return group_hom(G, Z2, sign)


# cycle notation for the one-line labels of S3
S3_CYCLES = {"123": "e", "132": "(23)", "213": "(12)", "231": "(123)", "312": "(132)", "321": "(13)"}


def q8_square():
    G = quaternion_group()
    return quotient_square(G, subgroup_generated(G, [2]), subgroup_generated(G, [4]))


SOURCES = {
    "dihedral-3-6": "dihedral double extension D36 with maps mod 6 and mod 3",
    "dihedral-2-3": "dihedral double extension D12 with maps mod 3 and mod 2",
    "dihedral-3-5": "dihedral double extension D30 with maps mod 5 and mod 3",
    "q-trivial": "seven element quandle over Q6, square (pi1 p, t_star)",
    "q-nontrivial": "seven element quandle over Q6, square (pi2 p, t)",
    "toy-1": "nine element double covering, square (pi1', t)",
    "toy-2": "nine element double covering, square (pi2', t)",
    "diamond-dn": "kernel pair of the diamond quandles, square (pi_dn, f_up)",
    "diamond-up": "kernel pair of the diamond quandles, square (pi_up, f_dn)",
    "gap": "six element quandle whose comparison map is a covering but which is not a double covering",
    "d6-d3": "dihedral D6 onto D3 by x mod 3",
    "d9-d3": "dihedral D9 onto D3 by x mod 3",
    "d4-d2": "dihedral D4 onto D2 by x mod 2",
    "s3-sign": "conjugation quandle of S3 onto the two element set by the sign",
}


def corpus_squares():
    return {
        "dihedral-3-6": dihedral_square(6, 3),
        "dihedral-2-3": dihedral_square(3, 2),
        "dihedral-3-5": dihedral_square(5, 3),
        "q-trivial": q_square_trivial(),
        "q-nontrivial": q_square_nontrivial(),
        "toy-1": toy_square(1),
        "toy-2": toy_square(2),
        "diamond-dn": diamond_square("dn"),
        "diamond-up": diamond_square("up"),
        "gap": gap_square(),
    }


def corpus_morphisms():
    return {
        "d6-d3": mod_map(6, 3),
        "d9-d3": mod_map(9, 3),
        "d4-d2": mod_map(4, 2),
        "s3-sign": conj_hom(s3_sign()),
    }


def small_double_extensions(max_top=9):
    """Corpus squares plus dihedral squares and their transposes with |A⊤| ≤ max_top."""
    out = {k: v for k, v in corpus_squares().items() if v.top.size <= max_top}
    for n in range(1, max_top + 1):
        for m in range(1, max_top + 1):
            if 2 * n * m <= max_top:
                out[f"dihedral-{m}-{n}"] = dihedral_square(n, m)
                out[f"dihedral-{m}-{n}-t"] = dihedral_square(n, m).transpose()
    return out


def write_corpus(directory):
    """Write every named square and morphism as ``<key>.json`` with a "source" field."""
    import os
    from .io import emit, to_doc
    os.makedirs(directory, exist_ok=True)
    written = []
    for key, obj in list(corpus_squares().items()) + list(corpus_morphisms().items()):
        doc = dict(to_doc(obj), source=SOURCES[key])
        path = os.path.join(directory, f"{key}.json")
        with open(path, "wb") as fh:
            fh.write(emit(doc))
        written.append(path)
    return written
