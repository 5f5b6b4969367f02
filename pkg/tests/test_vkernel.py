from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from relkit.errors import CapabilityMissing, CardinalityOverflow, MalformedTables, NotParallel
from relkit.vkernel import (BoolBase, Mor, TableBase, make_bool_quantale, make_finset_skeleton,
                            reverse_base, tabulate, validate_base)


@pytest.fixture(scope="module")
def Q():
    return make_bool_quantale()


@pytest.fixture(scope="module")
def F3():
    return make_finset_skeleton(3)


def test_bool_quantale_tables(Q):
    assert list(Q.objects()) == [0, 1]
    assert Q.hom_size(0, 1) == 1 and Q.hom_size(1, 0) == 0
    assert Q.unit == 1
    assert [Q.tensor_obj(a, b) for a, b in product((0, 1), repeat=2)] == [0, 0, 0, 1]
    assert validate_base(Q).ok


def test_finset_skeleton_validates(F3):
    assert validate_base(F3).ok
    assert F3.hom_size(2, 3) == 9


def test_finset_overflow(F3):
    with pytest.raises(CardinalityOverflow):
        F3.tensor_obj(2, 2)


def test_finset_strict_unit_on_morphisms(F3):
    I = F3.identity(1)
    for a, b in product(F3.objects(), repeat=2):
        for f in F3.hom(a, b):
            assert F3.tensor_mor(I, f) == f
            assert F3.tensor_mor(f, I) == f


def test_compose_rejects_non_composable(F3):
    with pytest.raises(NotParallel):
        F3.compose(Mor(1, 2, (0,)), Mor(3, 1, (0, 0, 0)))


def test_equalizer_then_coequalizer_sanity(F3):
    f, g = Mor(3, 2, (0, 1, 1)), Mor(3, 2, (0, 0, 1))
    eq = F3.equalizer(f, g)
    assert eq.obj == 2 and eq.inclusion.data == (0, 2)
    m = eq.inclusion
    assert F3.equalizer(m, m).obj == eq.obj
    co = F3.coequalizer(m, m)
    assert co.obj == m.cod and co.projection == F3.identity(m.cod)


def test_finset_coequalizer():
    V = make_finset_skeleton(4)
    f, g = Mor(2, 4, (0, 1)), Mor(2, 4, (1, 2))
    co = V.coequalizer(f, g)
    assert co.obj == 2 and co.projection.data == (0, 0, 0, 1)


def test_bool_lift_and_limits(Q):
    one = Q.identity(1)
    assert Q.equalizer(one, one).obj == 1
    assert Q.lift(Mor(0, 1, 0), Mor(0, 1, 0)) == Mor(0, 0, 0)
    assert Q.lift(Mor(0, 1, 0), Mor(1, 1, 0)) is None


def test_lift_is_unique_factorisation(F3):
    m = Mor(2, 3, (0, 2))
    h = Mor(1, 3, (2,))
    k = F3.lift(m, h)
    assert F3.compose(k, m) == h
    assert F3.lift(m, Mor(1, 3, (1,))) is None


def test_reverse_base_involution(Q):
    V = make_finset_skeleton(6)
    R = reverse_base(V)
    assert reverse_base(R) is V
    assert reverse_base(Q) is Q
    f, g = Mor(1, 2, (1,)), Mor(1, 3, (2,))
    assert R.tensor_mor(f, g) == V.tensor_mor(g, f)
    assert validate_base(R, 3).ok


def test_tabulate_round_trip(F3):
    T = tabulate(make_finset_skeleton(1))
    assert isinstance(T, TableBase)
    assert validate_base(T).ok
    assert T.hom_size(1, 1) == 1 and T.hom_size(1, 0) == 0


def test_table_base_rejects_missing_entries():
    with pytest.raises(MalformedTables):
        TableBase("bad", ["x"], {(0, 0): 1}, [0], {}, 0, {(0, 0): 0}, {})


def test_table_base_fault_is_named():
    # a two-element monoid; the fault breaks the unit law
    homs = {(0, 0): 2}
    comp = {(0, 0, 0, 0, 0): 0, (0, 0, 0, 0, 1): 1, (0, 0, 0, 1, 0): 1,
            (0, 0, 0, 1, 1): 1}
    tobj = {(0, 0): 0}
    tmor = {(0, 0, f, 0, 0, g): comp[(0, 0, 0, f, g)] for f in (0, 1) for g in (0, 1)}
    V = TableBase("ok", ["x"], homs, [0], comp, 0, tobj, tmor)
    assert validate_base(V).ok
    comp2 = dict(comp)
    comp2[(0, 0, 0, 0, 1)] = 0
    tmor2 = {(0, 0, f, 0, 0, g): comp2[(0, 0, 0, f, g)] for f in (0, 1) for g in (0, 1)}
    W = TableBase("bad", ["x"], homs, [0], comp2, 0, tobj, tmor2)
    assert "compose.left_unit" in validate_base(W).laws()


def test_missing_capability():
    V = TableBase("nocaps", ["x"], {(0, 0): 1}, [0], {(0, 0, 0, 0, 0): 0}, 0,
                  {(0, 0): 0}, {(0, 0, 0, 0, 0, 0): 0}, capabilities=())
    with pytest.raises(CapabilityMissing):
        V.equalizer(V.identity(0), V.identity(0))


def test_bool_is_thin_and_commutative():
    assert BoolBase.thin and BoolBase.commutative


@st.composite
def finset_mor(draw, a=None, b=None):
    a = draw(st.integers(0, 3)) if a is None else a
    b = draw(st.integers(1, 3)) if b is None else b
    return Mor(a, b, tuple(draw(st.lists(st.integers(0, b - 1), min_size=a, max_size=a))))


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_finset_composition_associative(data):
    V = make_finset_skeleton(3)
    a, b, c, d = (data.draw(st.integers(1, 3)) for _ in range(4))
    f = data.draw(finset_mor(a, b))
    g = data.draw(finset_mor(b, c))
    h = data.draw(finset_mor(c, d))
    assert V.compose(V.compose(f, g), h) == V.compose(f, V.compose(g, h))


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_finset_tensor_interchange(data):
    V = make_finset_skeleton(9)
    a, b, c, d, e, k = (data.draw(st.integers(1, 3)) for _ in range(6))
    f, f2 = data.draw(finset_mor(a, b)), data.draw(finset_mor(b, c))
    g, g2 = data.draw(finset_mor(d, e)), data.draw(finset_mor(e, k))
    lhs = V.compose(V.tensor_mor(f, g), V.tensor_mor(f2, g2))
    rhs = V.tensor_mor(V.compose(f, f2), V.compose(g, g2))
    assert lhs == rhs


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_finset_pairing_inverts(data):
    V = make_finset_skeleton(9)
    a, b = data.draw(st.integers(1, 3)), data.draw(st.integers(1, 3))
    i, j = data.draw(st.integers(0, a - 1)), data.draw(st.integers(0, b - 1))
    assert V.unpair(a, b, V.pair(a, b, i, j)) == (i, j)
