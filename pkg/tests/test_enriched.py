from itertools import product

import pytest

from relkit import corpus
from relkit.enriched import (Distributor, EnrichedCategory, EnrichedFunctor, Form, Frame,
                             candidate_count, companion, composition_form, compose_functors,
                             conjoint, enumerate_forms, enumerate_functors, form_equal,
                             hom_form, identity_form, identity_functor, left_action_form,
                             loose_identity, monotone_functor, paste, restrict,
                             right_action_form, validate_category, validate_distributor,
                             validate_form, validate_functor)
from relkit.errors import EnumerationBudgetExceeded, FrameMismatch, MalformedTables
from relkit.vkernel import Mor


def _with_comp(C, key, m):
    comp = dict(C.comp)
    comp[key] = m
    return EnrichedCategory(C.base, list(C.names), C.hom_obj, C.ident, comp, "bad")


@pytest.mark.parametrize("name", ["CH3", "CH2", "DISC2", "PT", "SETS3"])
def test_corpus_categories_validate(name):
    assert validate_category(corpus.categories()[name]).ok


@pytest.mark.parametrize("name", ["J01", "JD", "ID3", "INC1"])
def test_corpus_functors_validate(name):
    assert validate_functor(corpus.functors()[name]).ok


def test_sets3_constant_composite_breaks_unit():
    S = corpus.SETS3()
    m = S.comp[(2, 2, 2)]
    bad = _with_comp(S, (2, 2, 2), Mor(m.dom, m.cod, (0,) * m.dom))
    assert "category.left_unit" in validate_category(bad).laws()


def test_sets3_swapped_composite_breaks_associativity():
    # composing in the wrong order on the two-element set keeps units but not associativity
    S = corpus.SETS3()
    V = S.base
    m = S.comp[(2, 2, 2)]
    data = list(m.data)
    for f, g in product(range(4), repeat=2):
        if f in (1, 2) or g in (1, 2):
            continue
        data[V.pair(4, 4, f, g)] = m.data[V.pair(4, 4, g, f)]
    bad = _with_comp(S, (2, 2, 2), Mor(m.dom, m.cod, tuple(data)))
    laws = validate_category(bad).laws()
    assert laws and set(laws) <= {"category.associativity"}


def test_ill_typed_composition_is_named():
    C = corpus.CH3()
    bad = _with_comp(C, (2, 1, 0), Mor(0, 1, 0))
    assert "comp.typing" in validate_category(bad).laws()


def test_missing_table_entry_raises():
    C = corpus.CH3()
    comp = dict(C.comp)
    del comp[(0, 1, 2)]
    with pytest.raises(MalformedTables):
        validate_category(EnrichedCategory(C.base, 3, C.hom_obj, C.ident, comp))


def test_functor_fault_is_named():
    S = corpus.SETS3()
    V = S.base
    hom = {(x, y): V.identity(S.hom_obj[(x, y)]) for x, y in product(S.objects, repeat=2)}
    # send every endomap of 2 to the constant at 0
    hom[(2, 2)] = Mor(4, 4, (0, 0, 0, 0))
    F = EnrichedFunctor(S, S, (0, 1, 2), hom, "bad")
    assert "functor.identity" in validate_functor(F).laws()


def test_non_monotone_map_is_rejected():
    F = monotone_functor(corpus.CH2(), corpus.CH3(), (1, 0))
    assert not validate_functor(F).ok


def test_identity_and_composite_functors():
    J = corpus.J01()
    assert compose_functors(identity_functor(J.dom), J) == J
    assert compose_functors(J, corpus.ID3()) == J


@pytest.mark.parametrize("C", [corpus.CH3(), corpus.SETS3(), corpus.PT()])
def test_loose_identity_validates(C):
    assert validate_distributor(loose_identity(C)).ok


@pytest.mark.parametrize("f", [corpus.J01(), corpus.JD(), corpus.INC1()])
def test_companion_and_conjoint_validate(f):
    assert validate_distributor(companion(f)).ok
    assert validate_distributor(conjoint(f)).ok
    assert companion(f).obj == {(y, x): f.cod.hom_obj[(y, f(x))]
                                for y in f.cod.objects for x in f.dom.objects}


def test_distributor_action_fault_is_named():
    p = loose_identity(corpus.SETS3())
    lact = dict(p.lact)
    m = lact[(2, 2, 2)]
    lact[(2, 2, 2)] = Mor(m.dom, m.cod, (0,) * m.dom)
    bad = Distributor(p.left, p.right, p.obj, lact, p.ract, "bad")
    assert "distributor.left_unit" in validate_distributor(bad).laws()


def test_restrict_rejects_wrong_sides():
    with pytest.raises(FrameMismatch):
        restrict(loose_identity(corpus.CH2()), corpus.J01(), corpus.J01())


@pytest.mark.parametrize("C", [corpus.CH3(), corpus.SETS3()])
def test_structural_forms_validate(C):
    p = loose_identity(C)
    for phi in (identity_form(p), left_action_form(p), right_action_form(p),
                composition_form(C), hom_form(identity_functor(C))):
        assert validate_form(phi).ok


def test_form_naturality_fault_is_named():
    S = corpus.SETS3()
    phi = identity_form(loose_identity(S))
    comps = dict(phi.comps)
    comps[(2, 2)] = Mor(4, 4, (0, 0, 0, 0))
    laws = validate_form(Form(phi.frame, comps)).laws()
    assert "form.left_naturality" in laws or "form.right_naturality" in laws


def test_form_typing_fault_is_named():
    C = corpus.CH3()
    phi = composition_form(C)
    comps = dict(phi.comps)
    comps[(0, 1, 2)] = Mor(1, 0, 0)
    assert "form.component.typing" in validate_form(Form(phi.frame, comps)).laws()


def test_paste_action_with_identity():
    S = corpus.SETS3()
    p = loose_identity(S)
    act = left_action_form(p)
    up = [identity_form(loose_identity(S)), identity_form(p)]
    assert form_equal(paste(up, act), act)


def test_paste_composition_associative():
    S = corpus.SETS3()
    c = composition_form(S)
    one = identity_form(loose_identity(S))
    lhs = paste([c, one], c)
    rhs = paste([one, c], c)
    assert form_equal(lhs, rhs)
    assert validate_form(lhs).ok


def test_paste_frame_mismatch():
    S = corpus.SETS3()
    c = composition_form(S)
    with pytest.raises(FrameMismatch):
        paste([c], c)
    with pytest.raises(FrameMismatch):
        paste([identity_form(loose_identity(corpus.CH3()))] * 2, c)


def test_enumerate_forms_identity_frame_on_sets():
    S = corpus.SETS3()
    p = loose_identity(S)
    fr = Frame([p], identity_functor(S), identity_functor(S), p)
    forms = enumerate_forms(fr)
    # natural endo-forms of the hom are natural endotransformations of the identity,
    # and constant maps force every component on 2 to be the identity
    assert forms == [identity_form(p)]


def test_enumerate_forms_budget():
    S = corpus.SETS3()
    L = loose_identity(S)
    fr = Frame([L, L], identity_functor(S), identity_functor(S), L)
    assert candidate_count(fr) > 10
    with pytest.raises(EnumerationBudgetExceeded):
        enumerate_forms(fr, 10)


def test_enumerate_functors_chain():
    # monotone maps {0<1} -> {0<1<2}
    assert len(enumerate_functors(corpus.CH2(), corpus.CH3())) == 6
    # out of the point a functor is just an object
    assert [F.obj_map for F in enumerate_functors(corpus.PT(), corpus.SETS3())] == \
        [(0,), (1,), (2,)]


def test_restrict_along_identities_is_identity():
    S = corpus.SETS3()
    L = loose_identity(S)
    r = restrict(L, identity_functor(S), identity_functor(S))
    assert (r.obj, r.lact, r.ract) == (L.obj, L.lact, L.ract)


def test_restrict_is_functorial():
    j = corpus.J01()
    L = loose_identity(corpus.CH3())
    twice = restrict(restrict(L, identity_functor(j.cod), j), identity_functor(j.cod),
                     identity_functor(j.dom))
    once = restrict(L, identity_functor(j.cod), compose_functors(identity_functor(j.dom), j))
    assert (twice.obj, twice.lact, twice.ract) == (once.obj, once.lact, once.ract)


def test_nullary_forms_count_elements():
    # I => SETS3(1, 2) at the single object: the two points of 2
    fr = Frame([], corpus.INC1(), corpus.J2(), loose_identity(corpus.SETS3()))
    assert len(enumerate_forms(fr)) == 2
