"""Covering predicates in dimensions 0, 1 and 2, with witnesses."""
from __future__ import annotations

import numpy as np

from .commutator import _require_extension, c1, c2, connectedness, word_images, word_maps
from .congruence import (diagonal, iter_parallelistic_blocks, kernel_pair, kernel_pair_subrack,
                         meet, parallelistic_array)
from .errors import InternalConsistencyError, NotDoubleExtension


def is_trivial_quandle(A):
    return bool(np.all(A.op == np.arange(A.size)[:, None]))


def _require_double(alpha):
    if not alpha.is_double_extension():
        raise NotDoubleExtension("square is not a double extension")


# ---------------------------------------------------------------- dimension 1

def covering_witness(f):
    """First (x, a, b) in lexicographic order with f(a) = f(b) and x◁a ≠ x◁b."""
    _require_extension(f)
    A = f.dom
    same = f.map[:, None] == f.map[None, :]
    for x in range(A.size):
        row = A.op[x]
        bad = np.argwhere(same & (row[:, None] != row[None, :]))
        if len(bad):
            return (x, int(bad[0][0]), int(bad[0][1]))
    return None


def is_covering(f):
    return covering_witness(f) is None


def _first_offdiagonal(theta):
    for a, b in theta.nontrivial_pairs():
        return (a, b)
    return None


def trivial_covering_witness(f):
    _require_extension(f)
    return _first_offdiagonal(meet(kernel_pair(f), connectedness(f.dom)))


def is_trivial_covering(f):
    return trivial_covering_witness(f) is None


def normal_covering_witness(f):
    """Test both kernel pair projections; returns (projection, pair of kernel-pair elements)."""
    _require_extension(f)
    P, p1, p2 = kernel_pair_subrack(f)
    found = []
    for i, p in enumerate((p1, p2), start=1):
        w = trivial_covering_witness(p)
        found.append(None if w is None else (i, w))
    if (found[0] is None) != (found[1] is None):
        raise InternalConsistencyError("kernel pair projections disagree on triviality")
    if found[0] is None:
        return None
    i, (u, v) = found[0]
    return i, (tuple(_pair_of(p1, p2, u)), tuple(_pair_of(p1, p2, v)))


def _pair_of(p1, p2, k):
    return int(p1.map[k]), int(p2.map[k])


def is_normal_covering(f):
    return normal_covering_witness(f) is None


# ---------------------------------------------------------------- dimension 2

def double_covering_witness(alpha):
    """Least (x, a, b, c, d) with x◁a◁⁻¹b◁c◁⁻¹d ≠ x, and that value."""
    _require_double(alpha)
    A = alpha.top
    R, S = kernel_pair(alpha.f_A), kernel_pair(alpha.alpha_top)
    xs = np.arange(A.size)
    moved = np.zeros(A.size, dtype=bool)
    for W in word_maps(A, R, S):
        moved |= (W != xs[None, :]).any(axis=0)
    if not moved.any():
        return None
    x = int(np.flatnonzero(moved)[0])
    # blocks come in lexicographic order, so the first hit at x is the least quadruple
    for block in iter_parallelistic_blocks(R, S):
        W = word_images(A, block)[:, x]
        hit = np.flatnonzero(W != x)
        if len(hit):
            k = int(hit[0])
            return (x,) + tuple(int(v) for v in block[k]), int(W[k])
    raise InternalConsistencyError("a moved point has no witnessing quadruple")


def is_double_covering(alpha):
    direct = double_covering_witness(alpha) is None
    via_commutator = c2(alpha).is_diagonal()
    if direct != via_commutator:
        raise InternalConsistencyError("quantifier sweep and commutator disagree")
    return direct


def trivial_double_witness(alpha):
    """First (x, a, b) with (a, b) ∈ Eq(f_A), x◁a ≠ x◁b but α⊤(x◁a) = α⊤(x◁b).

    Falls back to ("pair", u, v), the least off-diagonal pair of Eq(α⊤) ∩ Ci(f_A),
    if the meet is non-trivial without a one-step witness.
    """
    _require_double(alpha)
    A = alpha.top
    theta = meet(kernel_pair(alpha.alpha_top), c1(alpha.f_A))
    if theta.is_diagonal():
        return None
    same = alpha.f_A.map[:, None] == alpha.f_A.map[None, :]
    at = alpha.alpha_top.map
    for x in range(A.size):
        row = A.op[x]
        bad = np.argwhere(same & (row[:, None] != row[None, :]) & (at[row][:, None] == at[row][None, :]))
        if len(bad):
            return (x, int(bad[0][0]), int(bad[0][1]))
    return ("pair",) + _first_offdiagonal(theta)


def is_trivial_double_covering(alpha):
    return trivial_double_witness(alpha) is None


def one_step_horn_witness(alpha):
    """A length-one horn whose (a,b) and (c,d) membranes disagree on closing.

    Returns (x1, x2, (a, b, c, d), sign, ab_closes) where x1 = a0 = b0 and
    x2 = c0 = d0.  Quadruples with four distinct entries are tried first.
    """
    A = alpha.top
    R, S = kernel_pair(alpha.f_A), kernel_pair(alpha.alpha_top)
    Q = parallelistic_array(R, S)
    if not len(Q):
        return None
    distinct = np.ones(len(Q), dtype=bool)
    for i in range(4):
        for j in range(i + 1, 4):
            distinct &= Q[:, i] != Q[:, j]
    heads = [(x1, x2) for x1 in range(A.size) for x2 in range(A.size) if S.related(x1, x2)]
    for mask in (distinct, np.ones(len(Q), dtype=bool)):
        sub = Q[mask]
        if not len(sub):
            continue
        for x1, x2 in heads:
            for sign, table in ((1, A.op), (-1, A.inv)):
                ab = table[x1, sub[:, 0]] == table[x1, sub[:, 1]]
                cd = table[x2, sub[:, 2]] == table[x2, sub[:, 3]]
                hit = np.flatnonzero(ab != cd)
                if len(hit):
                    q = tuple(int(v) for v in sub[hit[0]])
                    return (x1, x2, q, sign, bool(ab[hit[0]]))
    return None


def normal_double_witness(alpha):
    """None when α is normal; otherwise a horn witness or a kernel-pair pair."""
    from .extensions import kernel_pair_ext
    _require_double(alpha)
    proj1, proj2, _ = kernel_pair_ext(alpha)
    t1 = trivial_double_witness(proj1)
    t2 = trivial_double_witness(proj2)
    if (t1 is None) != (t2 is None):
        raise InternalConsistencyError("kernel pair projection squares disagree on triviality")
    if t1 is None:
        return None
    horn = one_step_horn_witness(alpha)
    if horn is not None:
        return ("horn",) + horn
    return ("kernel_pair", t1)


def is_normal_double_covering(alpha):
    return normal_double_witness(alpha) is None


# ---------------------------------------------------------------- reports

def _lab(A, x):
    return A.label(x)


def _step(A, x, y, sign):
    return f"{_lab(A, x)}{'◁' if sign > 0 else '◁⁻¹'}{_lab(A, y)}"


class ClassificationReport:
    def __init__(self, subject, flags, witnesses):
        self.subject = subject
        self.flags = flags
        self.witnesses = witnesses

    def to_dict(self):
        return {"type": "report", "subject": self.subject,
                "flags": dict(self.flags), "witnesses": dict(self.witnesses)}

    def __repr__(self):
        return f"ClassificationReport({self.subject}, {self.flags})"


def classify(f):
    A = f.dom
    flags, wit = {"extension": f.is_surjective()}, {}
    if not flags["extension"]:
        missing = sorted(set(range(f.cod.size)) - set(f.map.tolist()))[0]
        wit["extension"] = {"missing": missing}
        return ClassificationReport("morphism", flags, wit)
    w = covering_witness(f)
    flags["covering"] = w is None
    if w is not None:
        x, a, b = w
        wit["covering"] = {"witness": list(w), "values": [int(A.op[x, a]), int(A.op[x, b])],
                           "text": f"{_step(A, x, a, 1)} ≠ {_step(A, x, b, 1)}"}
    w = trivial_covering_witness(f)
    flags["trivial_covering"] = w is None
    if w is not None:
        wit["trivial_covering"] = {"pair": list(w),
                                   "text": f"{_lab(A, w[0])} and {_lab(A, w[1])} share a fiber and a component"}
    w = normal_covering_witness(f)
    flags["normal_covering"] = w is None
    if w is not None:
        i, (u, v) = w
        wit["normal_covering"] = {"projection": i, "pair": [list(u), list(v)]}
    if flags["trivial_covering"] and not flags["normal_covering"]:
        raise InternalConsistencyError("trivial covering that is not normal")
    if flags["normal_covering"] and not flags["covering"]:
        raise InternalConsistencyError("normal covering that is not a covering")
    return ClassificationReport("morphism", flags, wit)


def _horn_text(A, x1, x2, q, sign, ab_closes):
    a, b, c, d = q
    ab = (_step(A, x1, a, sign), _step(A, x1, b, sign))
    cd = (_step(A, x2, c, sign), _step(A, x2, d, sign))
    closed, open_ = (ab, cd) if ab_closes else (cd, ab)
    return f"{open_[0]} ≠ {open_[1]} while {closed[0]} = {closed[1]}"


def classify_square(alpha):
    A = alpha.top
    flags, wit = {"double_extension": alpha.is_double_extension()}, {}
    if not flags["double_extension"]:
        wit["double_extension"] = {"text": "some component or the comparison map is not surjective"}
        return ClassificationReport("square", flags, wit)
    w = double_covering_witness(alpha)
    flags["double_covering"] = w is None
    if w is not None:
        (x, a, b, c, d), value = w
        wit["double_covering"] = {
            "witness": [x, a, b, c, d], "value": value,
            "text": f"{_lab(A, x)}◁{_lab(A, a)}◁⁻¹{_lab(A, b)}◁{_lab(A, c)}◁⁻¹{_lab(A, d)}"
                    f" = {_lab(A, value)} ≠ {_lab(A, x)}"}
    if flags["double_covering"] != c2(alpha).is_diagonal():
        raise InternalConsistencyError("quantifier sweep and commutator disagree")
    w = trivial_double_witness(alpha)
    flags["trivial_double_covering"] = w is None
    if w is not None:
        if w[0] == "pair":
            wit["trivial_double_covering"] = {"pair": [w[1], w[2]]}
        else:
            x, a, b = w
            wit["trivial_double_covering"] = {
                "witness": [x, a, b], "values": [int(A.op[x, a]), int(A.op[x, b])],
                "text": f"{_step(A, x, a, 1)} ≠ {_step(A, x, b, 1)}"}
    w = normal_double_witness(alpha)
    flags["normal_double_covering"] = w is None
    if w is not None:
        if w[0] == "horn":
            _, x1, x2, q, sign, ab_closes = w
            wit["normal_double_covering"] = {
                "head": [x1, x1, x2, x2], "quadruple": list(q), "sign": sign,
                "text": _horn_text(A, x1, x2, q, sign, ab_closes)}
        else:
            wit["normal_double_covering"] = {"kernel_pair_witness": [v for v in w[1] if v != "pair"]}
    chain = (("trivial_double_covering", "normal_double_covering"),
             ("normal_double_covering", "double_covering"))
    for stronger, weaker in chain:
        if flags[stronger] and not flags[weaker]:
            raise InternalConsistencyError(f"{stronger} holds but {weaker} does not")
    return ClassificationReport("square", flags, wit)
