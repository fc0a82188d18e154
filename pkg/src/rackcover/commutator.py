"""The commutator [R, S] of congruences and the centralization quotients built on it."""
from __future__ import annotations

import numpy as np

from .congruence import (Congruence, closure_from_maps, factor_through, full,
                         join_on_keys, kernel_pair, quotient, related_pairs, _UnionFind,
                         _same_carrier)
from .core import RackMorphism
from .errors import NotDoubleExtension, NotSurjective

# Each word lists (letter, sign) read left to right: x ◁^s1 q[l1] ◁^s2 q[l2] ...
WORDS = {
    "i":   (("a", 1), ("b", -1), ("c", 1), ("d", -1)),
    "ii":  (("a", -1), ("d", 1), ("c", -1), ("b", 1)),
    "iii": (("a", -1), ("b", 1), ("c", -1), ("d", 1)),
    "iv":  (("a", 1), ("d", -1), ("c", 1), ("b", -1)),
}
_POS = {"a": 0, "b": 1, "c": 2, "d": 3}


def word_images(A, quads, variant="i"):
    """Array W with W[k, x] = x acted on by the variant word of quadruple k."""
    quads = np.asarray(quads)
    k = len(quads)
    cur = np.broadcast_to(np.arange(A.size), (k, A.size)).copy()
    for letter, sign in WORDS[variant]:
        table = A.op if sign > 0 else A.inv
        cur = table[cur, quads[:, _POS[letter]][:, None]]
    return cur


def _half_maps(A, P, L, letters, first):
    """Distinct maps x ↦ x ◁^s u ◁^t v over P-pairs (u, v), with their L-class keys.

    For the first half of a word the key is (L(u), L(v)); for the second half,
    whose letters (w, z) must close the square, it is (L(z), L(w)).
    """
    (_, s), (_, t) = letters
    t1 = A.op if s > 0 else A.inv
    t2 = A.op if t > 0 else A.inv
    u, v = related_pairs(P)
    maps = t2[t1[:, u].T, v[:, None]]              # row k: x ↦ x ◁^s u_k ◁^t v_k
    lab = L.labels.astype(np.int64)
    keys = lab[u] * A.size + lab[v] if first else lab[v] * A.size + lab[u]
    if len(keys) <= 256:                           # deduplicating only pays off on big inputs
        return keys, maps
    rows = np.unique(np.column_stack([keys, maps]), axis=0)
    return rows[:, 0], rows[:, 1:]


def word_maps(A, R, S, variant="i"):
    """The distinct maps x ↦ word(x) over R□S, in (k, n) stacks.

    A quadruple (a, b, c, d) is in R□S iff aRb, dRc, aSd and bSc, so each word
    splits into two halves drawn from one relation and glued along the other.
    """
    if variant not in WORDS:
        raise ValueError(f"unknown commutator variant {variant!r}")
    w = WORDS[variant]
    P, L = (R, S) if {w[0][0], w[1][0]} == {"a", "b"} else (S, R)
    gk, G = _half_maps(A, P, L, w[:2], True)
    hk, H = _half_maps(A, P, L, w[2:], False)
    i, j = join_on_keys(gk, hk)
    step = max(1, (1 << 22) // max(1, A.size))
    for lo in range(0, len(i), step):
        ii, jj = i[lo:lo + step], j[lo:lo + step]
        yield H[jj[:, None], G[ii]]                # row: x ↦ h(g(x))


def commutator(A, R, S, variant="i"):
    """[R, S]: the congruence generated by (word(x), x) over x ∈ A and R□S."""
    _same_carrier(R, S)
    return closure_from_maps(A, word_maps(A, R, S, variant))


def connectedness(A):
    """Co(A): the orbit congruence, generated by (x, x◁a)."""
    uf = _UnionFind(A.size)
    for x in range(A.size):
        for y in A.op[x].tolist():
            uf.union(x, y)
    return Congruence(A, [uf.find(x) for x in range(A.size)])


def pi0(A):
    """Quotient of A by its connected components, with the unit map."""
    return quotient(A, connectedness(A))


def _require_extension(f):
    if not f.is_surjective():
        missing = sorted(set(range(f.cod.size)) - set(f.map.tolist()))
        raise NotSurjective(f"element {missing[0]} of the codomain is not hit", missing[0])


def c1(f):
    """Ci(f), generated by (x ◁ a ◁⁻¹ b, x) for f(a) = f(b)."""
    _require_extension(f)
    A = f.dom
    E = kernel_pair(f)
    perms = []
    for a in range(A.size):
        bs = E.class_of(a)
        # column x -> x◁a◁⁻¹b, one row per b
        perms.append(A.inv[A.op[:, a][None, :], bs[:, None]])
    return closure_from_maps(A, perms)


def centralize1(f):
    """Universal covering quotient of f: returns (g, unit) with g ∘ unit = f."""
    theta = c1(f)
    _, unit = quotient(f.dom, theta)
    return factor_through(f, theta), unit


def c2(alpha):
    """Cii(α) = [Eq(f_A), Eq(α⊤)]."""
    if not alpha.is_double_extension():
        raise NotDoubleExtension("c2 needs a double extension")
    return commutator(alpha.top, kernel_pair(alpha.f_A), kernel_pair(alpha.alpha_top))


def centralize2(alpha):
    """Quotient of α by c2(α); returns (α′, unit_top)."""
    from .extensions import ExtSquare
    theta = c2(alpha)
    _, unit = quotient(alpha.top, theta)
    fa = factor_through(alpha.f_A, theta)
    at = factor_through(alpha.alpha_top, theta)
    return ExtSquare(fa, alpha.f_B, at, alpha.alpha_bot, check=False), unit
