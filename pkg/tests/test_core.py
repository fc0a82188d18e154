import numpy as np
import pytest
from hypothesis import given, strategies as st

import rackcover as rc
from rackcover.errors import (AxiomViolation, DomainMismatch, NotClosed, NotHomomorphism,
                              ShapeError)
from rackcover.groups import cyclic_group, quaternion_group, sym_group

from oracles import all_rack_tables, is_rack_table


def test_make_rack_accepts_trivial_table():
    A = rc.make_rack([[0, 0], [1, 1]])
    assert A == rc.trivial(2)
    assert A.quandle


def test_make_rack_rejects_r1_failure():
    with pytest.raises(AxiomViolation) as exc:
        rc.make_rack([[0, 0], [0, 1]])
    assert exc.value.axiom == "R1"
    assert exc.value.witness is not None


def test_make_rack_rejects_r2_failure():
    # columns are bijections but self-distributivity fails
    op = [[1, 0, 0], [0, 1, 2], [2, 2, 1]]
    assert not is_rack_table(op)
    with pytest.raises(AxiomViolation) as exc:
        rc.make_rack(op)
    assert exc.value.axiom in ("R1", "R2")


def test_out_of_range_entry():
    with pytest.raises(AxiomViolation):
        rc.make_rack([[0, 2], [1, 1]])


@pytest.mark.parametrize("bad", [[[0, 1]], [[0, 1], [1]], [["a", 0], [1, 1]], [[0.5, 0], [1, 1]]])
def test_shape_errors(bad):
    with pytest.raises(ShapeError):
        rc.make_rack(bad)


def test_empty_rack():
    A = rc.make_rack([])
    assert A.size == 0 and A.quandle
    f = rc.make_morphism(A, rc.dihedral(3), [])
    assert not rc.is_extension(f)
    assert rc.is_extension(rc.identity(A))


@pytest.mark.parametrize("n", range(1, 65))
def test_dihedral_valid_and_involutive(n):
    D = rc.dihedral(n)
    rc.make_rack(D.op)
    assert D.is_involutive()
    assert D.quandle


def test_dihedral_operation():
    D = rc.dihedral(5)
    assert D.op[1, 3] == 5 % 5
    assert D.op[0, 1] == 2


@pytest.mark.parametrize("n", range(1, 9))
def test_cyclic(n):
    C = rc.cyclic(n)
    rc.make_rack(C.op)
    assert C.quandle == (n == 1)


@pytest.mark.parametrize("G", [sym_group(3), quaternion_group(), cyclic_group(5)])
def test_conj_is_quandle(G):
    A = rc.generate("conj", G)
    rc.make_rack(A.op)
    assert A.quandle


def test_small_dihedral_are_trivial():
    assert rc.dihedral(1) == rc.trivial(1)
    assert rc.dihedral(2) == rc.trivial(2)


def test_product_and_subrack():
    P = rc.product(rc.dihedral(3), rc.trivial(2))
    rc.make_rack(P.op)
    assert P.size == 6
    assert P.op[1 * 2 + 0, 2 * 2 + 1] == ((2 * 2 - 1) % 3) * 2 + 0
    S = rc.subrack(rc.trivial(4), [1, 3])
    assert S == rc.trivial(2)
    with pytest.raises(NotClosed):
        rc.subrack(rc.dihedral(3), [0, 1])


def test_generate_dispatch():
    assert rc.generate("dihedral", 4) == rc.dihedral(4)
    with pytest.raises(ValueError):
        rc.generate("nonsense", 3)


def test_morphism_validation():
    f = rc.make_morphism(rc.dihedral(6), rc.dihedral(3), np.arange(6) % 3)
    assert rc.is_extension(f)
    with pytest.raises(NotHomomorphism) as exc:
        rc.make_morphism(rc.dihedral(3), rc.trivial(3), [0, 1, 2])
    assert exc.value.witness is not None
    inc = rc.make_morphism(rc.trivial(1), rc.dihedral(3), [0])
    assert not rc.is_extension(inc)


def test_compose():
    f = rc.make_morphism(rc.dihedral(12), rc.dihedral(6), np.arange(12) % 6)
    g = rc.make_morphism(rc.dihedral(6), rc.dihedral(3), np.arange(6) % 3)
    h = rc.compose(g, f)
    assert list(h.map) == list(np.arange(12) % 3)
    with pytest.raises(DomainMismatch):
        rc.compose(f, g)


def test_tables_are_frozen():
    A = rc.dihedral(4)
    with pytest.raises(ValueError):
        A.op[0, 0] = 1


@given(st.integers(1, 4), st.data())
def test_enumerated_tables_validate(n, data):
    op = data.draw(st.sampled_from(all_rack_tables(n)))
    A = rc.make_rack(op)
    for x in range(n):
        for y in range(n):
            assert A.op[A.inv[x, y], y] == x


@given(st.integers(1, 4), st.data())
def test_composition_of_morphisms_validates(n, data):
    # quotient maps of dihedral racks compose to valid morphisms
    k = data.draw(st.sampled_from([d for d in range(1, n + 1) if n % d == 0]))
    j = data.draw(st.sampled_from([d for d in range(1, k + 1) if k % d == 0]))
    f = rc.make_morphism(rc.dihedral(2 * n), rc.dihedral(k), np.arange(2 * n) % k)
    g = rc.make_morphism(rc.dihedral(k), rc.dihedral(j), np.arange(k) % j)
    h = rc.compose(g, f)
    rc.make_morphism(h.dom, h.cod, h.map)
