"""Random squares, cubes and composable configurations for property tests."""
from __future__ import annotations

import numpy as np

import rackcover as rc
from rackcover.corpus import diamond_family, gap_rack, q_family, toy_family
from rackcover.extensions import ExtSquare, _descend

from oracles import all_rack_tables


def rack_pool():
    pool = [rc.dihedral(n) for n in range(2, 13)]
    pool += [rc.trivial(3), rc.cyclic(3), rc.cyclic(4),
             rc.product(rc.dihedral(3), rc.trivial(2)), rc.product(rc.dihedral(4), rc.dihedral(2)),
             rc.product(rc.dihedral(3), rc.cyclic(2)),
             rc.generate("conj", rc.sym_group(3)), rc.generate("conj", rc.quaternion_group()),
             toy_family()["Q"], q_family()["Q"], diamond_family()["K"], gap_rack()]
    tables = all_rack_tables(4)
    pool += [rc.make_rack(tables[i]) for i in range(0, len(tables), 9)]
    return pool


POOL = rack_pool()


def random_congruence(rng, A, max_pairs=2):
    k = int(rng.integers(0, max_pairs + 1))
    pairs = [tuple(int(v) for v in rng.integers(0, A.size, 2)) for _ in range(k)]
    return rc.congruence_closure(A, pairs)


def square_over(f, S, T):
    """The square f → f_B with α⊤ = X → X/S and bottom X/T, for T ≥ Eq(f) ∨ S."""
    X = f.dom
    _, qS = rc.quotient(X, S)
    _, qT = rc.quotient(X, T)
    return ExtSquare(f, _descend(qS, qT), qS, _descend(f, qT))


def quotient_square(A, R, S, T):
    _, qR = rc.quotient(A, R)
    return square_over(qR, S, T)


def random_square(rng, A=None, double=None, tries=200):
    """A random square of surjections; ``double`` filters on being a double extension."""
    for _ in range(tries):
        X = A if A is not None else POOL[rng.integers(len(POOL))]
        R, S = random_congruence(rng, X), random_congruence(rng, X)
        T = rc.join(rc.join(R, S), random_congruence(rng, X, 1))
        sq = quotient_square(X, R, S, T)
        if double is None or sq.is_double_extension() == double:
            return sq
    raise RuntimeError("no square found")


def random_square_from(rng, f, double=None, tries=100):
    """A random square with prescribed left edge f."""
    X = f.dom
    E = rc.kernel_pair(f)
    for _ in range(tries):
        S = random_congruence(rng, X)
        T = rc.join(rc.join(E, S), random_congruence(rng, X, 1))
        sq = square_over(f, S, T)
        if double is None or sq.is_double_extension() == double:
            return sq
    return None


def random_sibling(rng, alpha, double=True, tries=100):
    """A square β with β.f_B = α.f_B, sharing α's top rack."""
    A = alpha.top
    S, T = rc.kernel_pair(alpha.alpha_top), rc.kernel_pair(rc.compose(alpha.f_B, alpha.alpha_top))
    for _ in range(tries):
        R = rc.meet(T, random_congruence(rng, A, 3))
        beta = quotient_square(A, R, S, T)
        # reuse α's right edge object so the two squares share f_B exactly
        beta = ExtSquare(beta.f_A, alpha.f_B, rc.make_morphism(A, alpha.alpha_top.cod,
                                                                alpha.alpha_top.map),
                         _descend(beta.f_A, rc.compose(alpha.f_B, alpha.alpha_top)))
        if not double or beta.is_double_extension():
            return beta
    return None


def rng_for(seed):
    return np.random.default_rng(seed)
