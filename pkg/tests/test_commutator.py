from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, strategies as st

import rackcover as rc
from rackcover.commutator import WORDS, word_images
from rackcover.congruence import compose_relations, parallelistic_array, permute
from rackcover.corpus import S3_CYCLES, corpus_squares, dihedral_square, mod_map, s3_sign
from rackcover.errors import NotDoubleExtension, NotSurjective
from rackcover.extensions import ExtSquare
from rackcover.groups import conj_hom

from oracles import all_rack_tables, brute_commutator, relation_matrix, word


def small_congruences(A):
    gens = [[]] + [[p] for p in combinations(range(A.size), 2)]
    gens += [[p, q] for p, q in combinations(combinations(range(A.size), 2), 2)]
    return list({rc.congruence_closure(A, g) for g in gens})


@pytest.mark.parametrize("n", [2, 3, 4])
def test_commutator_matches_brute_force(n):
    for op in all_rack_tables(n)[::3]:
        A = rc.make_rack(op)
        congs = small_congruences(A)
        for R in congs:
            for S in congs:
                C = rc.commutator(A, R, S)
                assert np.array_equal(relation_matrix(C), brute_commutator(A, R, S))


def test_word_images_match_brute_words():
    A = rc.dihedral(12)
    R, S = rc.kernel_pair(mod_map(12, 4)), rc.kernel_pair(mod_map(12, 6))
    Q = parallelistic_array(R, S)
    W = word_images(A, Q)
    for k in range(0, len(Q), 7):
        for x in range(A.size):
            assert W[k, x] == word(A, x, tuple(Q[k]))
    assert set(WORDS) == {"i", "ii", "iii", "iv"}


def test_commutator_examples():
    A = rc.dihedral(5)
    for S in (rc.diagonal(A), rc.full(A)):
        assert rc.commutator(A, rc.diagonal(A), S).is_diagonal()
    D36 = rc.dihedral(36)
    C = rc.commutator(D36, rc.kernel_pair(mod_map(36, 6)), rc.kernel_pair(mod_map(36, 3)))
    assert C.related(12, 0)
    C4 = rc.cyclic(4)
    assert rc.commutator(C4, rc.full(C4), rc.full(C4)).is_diagonal()


def test_connectedness_and_pi0():
    assert rc.connectedness(rc.trivial(4)).is_diagonal()
    assert rc.connectedness(rc.dihedral(3)).is_full()
    assert rc.connectedness(rc.dihedral(6)).classes == [[0, 2, 4], [1, 3, 5]]
    assert rc.pi0(rc.dihedral(3))[0].size == 1
    assert rc.pi0(rc.trivial(3))[0] == rc.trivial(3)
    P, eta = rc.pi0(rc.dihedral(6))
    assert P.size == 2 and rc.is_trivial_quandle(P)
    assert rc.is_extension(eta)


def test_c1_examples():
    f = rc.identity(rc.dihedral(5))
    assert rc.c1(f).is_diagonal()
    with pytest.raises(NotSurjective):
        rc.c1(rc.make_morphism(rc.trivial(1), rc.dihedral(3), [0]))


def test_s3_centralization():
    q = conj_hom(s3_sign())
    theta = rc.c1(q)
    idx = {S3_CYCLES[lab]: i for i, lab in enumerate(q.dom.labels)}
    tr = sorted(idx[t] for t in ("(12)", "(13)", "(23)"))
    assert tr in theta.classes
    assert [idx["(123)"]] in theta.classes
    assert [idx["(132)"]] in theta.classes
    assert [idx["e"]] in theta.classes
    assert len(theta.classes) == 4
    g, unit = rc.centralize1(q)
    assert unit.cod.size == 4
    assert rc.is_covering(g)


def test_centralize1_of_covering_is_iso():
    for f in (mod_map(4, 2), mod_map(6, 3)):
        g, unit = rc.centralize1(f)
        assert unit.is_injective() and unit.is_surjective()


def test_c2_examples():
    sq = dihedral_square(6, 3)
    assert rc.c2(sq).related(12, 0)
    assert rc.c2(corpus_squares()["toy-2"]).is_diagonal()
    assert rc.c2(corpus_squares()["diamond-dn"]).is_diagonal()


def test_centralize2_dihedral():
    sq = dihedral_square(6, 3)
    theta = rc.c2(sq)
    assert theta.classes[0] == [0, 12, 24]
    new, unit = rc.centralize2(sq)
    assert new.top.size == 12
    assert new.is_double_extension()
    assert rc.is_double_covering(new)
    assert new.f_B == sq.f_B and new.alpha_bot == sq.alpha_bot


def test_centralize2_of_double_covering_is_iso():
    sq = corpus_squares()["toy-1"]
    new, unit = rc.centralize2(sq)
    assert unit.is_injective()


def test_c2_requires_double_extension():
    T1 = rc.trivial(1)
    inc = rc.make_morphism(T1, rc.dihedral(3), [0])
    sq = ExtSquare(rc.identity(T1), inc, rc.identity(T1), inc)
    assert not sq.is_double_extension()
    with pytest.raises(NotDoubleExtension):
        rc.c2(sq)


# ---------------------------------------------------------------- algebraic laws

racks = st.sampled_from([rc.dihedral(6), rc.dihedral(8), rc.dihedral(12), rc.cyclic(4),
                         rc.product(rc.dihedral(3), rc.trivial(2)),
                         rc.product(rc.dihedral(4), rc.dihedral(2)),
                         rc.generate("conj", rc.sym_group(3)),
                         rc.generate("conj", rc.quaternion_group())])


def draw_congruence(A, data):
    k = data.draw(st.integers(0, 2))
    return rc.congruence_closure(A, [tuple(data.draw(st.lists(st.integers(0, A.size - 1),
                                                               min_size=2, max_size=2)))
                                     for _ in range(k)])


@given(racks, st.data())
def test_commutator_laws(A, data):
    R, S, T = (draw_congruence(A, data) for _ in range(3))
    C = rc.commutator(A, R, S)
    for v in ("ii", "iii", "iv"):
        assert rc.commutator(A, R, S, v) == C
    assert rc.commutator(A, S, R) == C
    assert C <= rc.meet(R, S)
    assert rc.commutator(A, R, S) <= rc.commutator(A, R, rc.join(S, T))
    M = rc.meet(R, S)
    full = rc.full(A)
    assert rc.commutator(A, M, full) == rc.commutator(A, M, S)
    assert rc.commutator(A, M, S) <= C


@given(racks, st.data())
def test_c1_is_commutator_with_full(A, data):
    theta = draw_congruence(A, data)
    Q, q = rc.quotient(A, theta)
    assert rc.c1(q) == rc.commutator(A, theta, rc.full(A))


@given(st.sampled_from([rc.dihedral(6), rc.dihedral(9), rc.trivial(3),
                        rc.generate("conj", rc.sym_group(3)),
                        rc.product(rc.dihedral(3), rc.dihedral(2))]))
def test_connectedness_is_full_commutator_for_quandles(A):
    assert A.quandle
    assert rc.connectedness(A) == rc.commutator(A, rc.full(A), rc.full(A))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_cyclic_racks_break_connectedness_formula(n):
    A = rc.cyclic(n)
    assert rc.commutator(A, rc.full(A), rc.full(A)).is_diagonal()
    assert rc.connectedness(A).is_full()


def test_union_law_on_permuting_instances():
    checked = 0
    for A in (rc.dihedral(12), rc.product(rc.dihedral(3), rc.dihedral(4)),
              rc.generate("conj", rc.quaternion_group()), rc.dihedral(18)):
        congs = list({rc.congruence_closure(A, [(0, k)]) for k in range(A.size)}
                     | {rc.diagonal(A), rc.full(A)})
        comm = {}

        def c(R, S):
            if (R, S) not in comm:
                comm[R, S] = rc.commutator(A, R, S)
            return comm[R, S]

        for R in congs:
            for S in congs:
                if not S <= R or not permute(R, S):
                    continue
                for T in congs:
                    if permute(R, T) and permute(S, T) and permute(rc.meet(R, T), S):
                        assert c(R, rc.join(S, T)) == rc.join(c(R, S), c(R, T))
                        checked += 1
    assert checked > 50
    assert compose_relations(rc.full(rc.dihedral(3)), rc.diagonal(rc.dihedral(3))).all()
