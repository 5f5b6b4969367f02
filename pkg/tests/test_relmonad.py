from itertools import product

import pytest

from relkit import corpus
from relkit.algebra import resolution_from_em, resolution_from_kleisli
from relkit.enriched import EnrichedFunctor, compose_functors, identity_functor
from relkit.errors import FrameMismatch, LawViolation
from relkit.relmonad import (AdjunctionData, MonadMorphism, RelativeAdjunction,
                             RelativeMonad, compose_adjunctions, convert,
                             derive_underlying_functor, enumerate_monad_morphisms,
                             enumerate_relative_monads, from_monoid_form, from_presentation,
                             functor_structures, identity_adjunction,
                             identity_monad_morphism, induced_monad, is_resolution,
                             pushforward_monad, restrict_loose_relative, root_adjunction,
                             strict_morphisms, to_loose_monad, to_loose_monad_morphism,
                             to_monoid_form, to_presentation, trivial_monad,
                             underlying_functor, validate_adjunction,
                             validate_left_morphism, validate_loose_monad,
                             validate_loose_monad_morphism, validate_loose_relative_monad,
                             validate_monad_morphism, validate_presentation,
                             validate_relative_monad)
from relkit.enriched import validate_functor
from relkit.vkernel import Mor

MONADS = corpus.all_monads()
IDS = [T.name for T in MONADS]


def _set(d, k, v):
    d = dict(d)
    d[k] = v
    return d


@pytest.mark.parametrize("T", MONADS, ids=IDS)
def test_corpus_monads_validate(T):
    assert validate_relative_monad(T).ok


def test_inc1_monads_are_distinct_and_capped():
    ms = corpus.INC1_MONADS()
    assert len(ms) == 5
    assert sorted(T.obj for T in ms) == [(1,), (2,), (2,), (2,), (2,)]


def test_unit_fault_named():
    T = [T for T in corpus.INC1_MONADS() if T.obj == (2,)][0]
    other = Mor(1, 2, (1 - T.unit[0].data[0],))
    bad = RelativeMonad(T.root, T.obj, {0: other}, T.ext, "bad")
    laws = validate_relative_monad(bad).laws()
    assert "monad.unit_extension" in laws or "monad.extension_unit" in laws


def test_extension_fault_breaks_associativity_or_unit():
    T = [T for T in corpus.INC1_MONADS() if T.obj == (2,)][0]
    # send every Kleisli map to the identity
    bad = RelativeMonad(T.root, T.obj, T.unit, {(0, 0): Mor(2, 4, (1, 1))}, "bad")
    assert not validate_relative_monad(bad).ok
    assert set(validate_relative_monad(bad).laws()) <= {
        "monad.extension_unit", "monad.unit_extension", "monad.associativity"}
    assert "monad.extension_unit" in validate_relative_monad(bad).laws()


def test_bool_non_monad_is_named():
    # t = (1, 0) is not above the root at b
    bad = corpus.bool_monad(corpus.J01(), (1, 0), "bad")
    assert "monad.unit.typing" in validate_relative_monad(bad).laws()


def test_bool_monads_on_j01_match_oracle():
    found = sorted(T.obj for T in enumerate_relative_monads(corpus.J01()))
    assert found == [(0, 1), (0, 2), (1, 1), (2, 2)]


@pytest.mark.parametrize("T", MONADS, ids=IDS)
def test_underlying_functor_is_unique(T):
    t = derive_underlying_functor(T)
    assert validate_functor(t).ok
    assert functor_structures(T) == [t]


def test_trivial_monad_underlying_is_root():
    j = corpus.J01()
    assert underlying_functor(trivial_monad(j)).hom_map == j.hom_map


@pytest.mark.parametrize("T", MONADS, ids=IDS)
def test_monoid_form_round_trip(T):
    M = to_monoid_form(T)
    assert validate_loose_relative_monad(M).ok
    assert from_monoid_form(M) == T
    M2 = to_monoid_form(from_monoid_form(M))
    assert M2.mult == M.mult and M2.unit == M.unit


@pytest.mark.parametrize("T", MONADS, ids=IDS)
def test_loose_monad_of_relative_monad(T):
    M = to_loose_monad(T)
    assert validate_loose_monad(M).ok
    R = restrict_loose_relative(T.root, to_monoid_form(T))
    assert R.carrier.obj == M.carrier.obj and R.mult.comps == M.mult.comps
    assert R.unit.comps == M.unit.comps


def test_monoid_form_fault_named():
    T = [T for T in corpus.INC1_MONADS() if T.obj == (2,)][0]
    M = to_monoid_form(T)
    mult = M.mult.__class__(M.mult.frame, {k: Mor(v.dom, v.cod, (0,) * v.dom)
                                           for k, v in M.mult.comps.items()})
    bad = M.__class__(M.root, M.carrier, mult, M.unit, "bad")
    assert not validate_loose_relative_monad(bad).ok


def test_monad_morphisms_triv_to_tmax():
    ms = enumerate_monad_morphisms(corpus.TRIV_J01(), corpus.TMAX())
    assert len(ms) == 1
    assert validate_monad_morphism(ms[0]).ok
    M, N, th = to_loose_monad_morphism(ms[0])
    assert validate_loose_monad_morphism(M, N, th).ok


def test_no_morphism_tmax_to_triv():
    assert enumerate_monad_morphisms(corpus.TMAX(), corpus.TRIV_J01()) == []


@pytest.mark.parametrize("T", MONADS, ids=IDS)
def test_identity_monad_morphism(T):
    assert validate_monad_morphism(identity_monad_morphism(T)).ok


def test_monad_morphism_fault_named():
    ms = corpus.INC1_MONADS()
    # the constant map at 0 does not fix a unit picking 1
    S = [T for T in ms if T.obj == (2,) and T.unit[0].data == (1,)][0]
    th = MonadMorphism(S, S, {0: Mor(1, 4, (0,))})
    assert "monad_morphism.unit" in validate_monad_morphism(th).laws()


def _adjunctions():
    out = [identity_adjunction(corpus.CH3()), root_adjunction(corpus.J01()),
           root_adjunction(corpus.INC1()), identity_adjunction(corpus.SETS3())]
    for T in MONADS:
        out.append(resolution_from_kleisli(T))
        out.append(resolution_from_em(T))
    return out


ADJS = _adjunctions()


@pytest.mark.parametrize("adj", ADJS, ids=[a.name or str(i) for i, a in enumerate(ADJS)])
def test_corpus_adjunctions_validate(adj):
    assert validate_adjunction(adj).ok


@pytest.mark.parametrize("adj", ADJS, ids=[a.name or str(i) for i, a in enumerate(ADJS)])
def test_presentation_round_trips(adj):
    for k in AdjunctionData.KINDS:
        d = to_presentation(adj, k)
        assert validate_presentation(d).ok
        assert from_presentation(d) == adj
        for k2 in AdjunctionData.KINDS:
            assert convert(convert(d, k2), k) == d


def test_adjunction_fault_named():
    T = [T for T in corpus.INC1_MONADS() if T.obj == (2,)][0]
    adj = resolution_from_kleisli(T)
    k = next(k for k, m in adj.flat.items() if m.dom == 2)
    m = adj.flat[k]
    bad = RelativeAdjunction(adj.root, adj.left, adj.right, adj.sharp,
                             _set(adj.flat, k, Mor(m.dom, m.cod, (0,) * m.dom)))
    assert "adjunction.inverse" in validate_adjunction(bad).laws()


def test_adjunction_typing_fault_named():
    adj = root_adjunction(corpus.J01())
    bad = RelativeAdjunction(adj.root, adj.left, adj.right,
                             _set(adj.sharp, (1, 0), Mor(1, 0, 0)), adj.flat)
    assert "adjunction.sharp.typing" in validate_adjunction(bad).laws()


def test_broken_presentation_is_rejected():
    T = [T for T in corpus.INC1_MONADS() if T.obj == (2,)][0]
    d = to_presentation(resolution_from_kleisli(T), "unit_counit")
    x = next(iter(d.unit))
    u = d.unit[x]
    d.unit = _set(d.unit, x, Mor(1, u.cod, ((u.data[0] + 1) % u.cod,)))
    assert not validate_presentation(d).ok
    with pytest.raises(LawViolation):
        from_presentation(d)


@pytest.mark.parametrize("T", MONADS, ids=IDS)
def test_resolutions_induce_the_monad(T):
    assert induced_monad(resolution_from_kleisli(T)) == T
    assert is_resolution(resolution_from_em(T), T)


def test_root_adjunction_induces_trivial_monad():
    j = corpus.J01()
    assert induced_monad(root_adjunction(j)) == trivial_monad(j)


def test_strict_morphisms_kleisli_to_em():
    T = corpus.TMAX()
    ms = strict_morphisms(resolution_from_kleisli(T), resolution_from_em(T))
    assert len(ms) == 1 and validate_left_morphism(ms[0]).ok


def _outer():
    """J01 -|_{1} r' with r' = (0, 1, 1): CH3 -> CH2."""
    from relkit.enriched import monotone_functor
    CH2, CH3 = corpus.CH2(), corpus.CH3()
    r = monotone_functor(CH3, CH2, (0, 1, 1), "r'")
    V = CH2.base
    tab = {(a, c): V.arrow(CH3.hom_obj[(a, c)], CH2.hom_obj[(a, r(c))])
           for a in CH2.objects for c in CH3.objects}
    inv = {k: V.arrow(m.cod, m.dom) for k, m in tab.items()}
    return RelativeAdjunction(identity_functor(CH2), corpus.J01(), r, tab, inv, "outer")


def test_pushforward_and_composite():
    T = corpus.TMAX()
    outer = _outer()
    assert validate_adjunction(outer).ok
    lp = identity_functor(corpus.CH2())
    P = pushforward_monad(outer, T, lp)
    assert P.obj == (1, 1)
    assert validate_relative_monad(P).ok
    adj, lm = compose_adjunctions(resolution_from_kleisli(T), outer, lp)
    assert validate_adjunction(adj).ok
    assert induced_monad(adj) == P
    assert validate_left_morphism(lm).ok


def test_pushforward_needs_matching_left():
    with pytest.raises(FrameMismatch):
        pushforward_monad(_outer(), corpus.TCL(), identity_functor(corpus.CH2()))
