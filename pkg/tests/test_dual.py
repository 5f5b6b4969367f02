from itertools import product

import pytest

from relkit import corpus
from relkit.algebra import resolution_from_em, resolution_from_kleisli
from relkit.dual import (RelativeComonad, co_em, co_kleisli, coresolution_from_cokleisli,
                         coresolution_from_coem, dual_adjunction, dual_monad, dualize,
                         induced_comonad, op_category, op_distributor, op_form, op_functor,
                         trivial_comonad, validate_coadjunction, validate_relative_comonad)
from relkit.enriched import (EnrichedCategory, companion, composition_form, conjoint, identity_form,
                             loose_identity, paste, validate_category, validate_distributor,
                             validate_form, validate_functor)
from relkit.relmonad import validate_relative_monad
from relkit.vkernel import Mor, make_finset_skeleton, reverse_base

MONADS = corpus.all_monads()


def everything():
    out = list(corpus.categories().values()) + list(corpus.functors().values())
    out += [loose_identity(corpus.SETS3()), companion(corpus.J01()), conjoint(corpus.INC1())]
    out += [composition_form(corpus.SETS3()), identity_form(companion(corpus.J01()))]
    out += MONADS + [corpus.INTERIOR()]
    out += [resolution_from_kleisli(T) for T in MONADS]
    return out


@pytest.mark.parametrize("item", everything(), ids=lambda x: type(x).__name__)
def test_double_dual_is_identity(item):
    d = dualize(item)
    assert dualize(d) is item or dualize(d) == item


def _clone(C):
    return EnrichedCategory(C.base, list(C.names), C.hom_obj, C.ident, C.comp, C.name)


@pytest.mark.parametrize("C", list(corpus.categories().values()), ids=lambda C: C.name)
def test_double_dual_without_cache_is_exact(C):
    # cloning drops the cached dual, so the tables are recomputed both ways
    D = op_category(_clone(op_category(C)))
    assert D is not C
    assert D == C


def test_double_dual_of_base():
    V = make_finset_skeleton(4)
    assert reverse_base(reverse_base(V)) is V
    assert dualize(corpus.Q2()) is corpus.Q2()


@pytest.mark.parametrize("C", list(corpus.categories().values()), ids=lambda C: C.name)
def test_op_category_validates(C):
    assert validate_category(op_category(C)).ok


@pytest.mark.parametrize("F", list(corpus.functors().values()), ids=lambda F: F.name)
def test_op_functor_validates(F):
    assert validate_functor(op_functor(F)).ok


@pytest.mark.parametrize("p", [loose_identity(corpus.SETS3()), companion(corpus.INC1()),
                               conjoint(corpus.J01())], ids=str)
def test_op_distributor_validates(p):
    assert validate_distributor(op_distributor(p)).ok


def test_op_form_preserves_paste():
    S = corpus.SETS3()
    c = composition_form(S)
    one = identity_form(loose_identity(S))
    lhs = paste([c, one], c)
    assert validate_form(op_form(lhs)).ok
    oc = op_form(c)
    assert paste([op_form(one), oc], oc).comps == op_form(lhs).comps


@pytest.mark.parametrize("T", MONADS, ids=lambda T: T.name)
def test_dual_comonads_validate(T):
    D = dual_monad(T)
    assert validate_relative_comonad(D).ok
    assert dual_monad(D) == T


def test_comonad_fault_uses_comonad_names():
    T = [T for T in corpus.INC1_MONADS() if T.obj == (2,)][0]
    D = dual_monad(T)
    other = Mor(1, 2, (1 - D.counit[0].data[0],))
    bad = RelativeComonad(D.coroot, D.obj, {0: other}, D.coext, "bad")
    laws = validate_relative_comonad(bad).laws()
    assert laws and all(l.startswith("comonad.") for l in laws)
    assert any("counit" in l for l in laws)


def test_interior_comonad_matches_oracle():
    D = corpus.INTERIOR()
    assert validate_relative_comonad(D).ok
    assert not validate_relative_comonad(
        RelativeComonad.from_bool(corpus.ID3(), (0, 0, 1))).ok
    cat, functor, form = co_kleisli(D)
    # frozen from scripts/oracle_counts.py (interior_scans): hom (x, y) iff d x <= y
    assert {k: cat.hom_obj[k] for k in sorted(cat.hom_obj)} == {
        (0, 0): 1, (0, 1): 1, (0, 2): 1, (1, 0): 0, (1, 1): 1, (1, 2): 1,
        (2, 0): 0, (2, 1): 1, (2, 2): 1}
    assert validate_category(cat).ok and validate_functor(functor).ok
    co = co_em(D)
    assert [a.carrier for a in co.source.algebras] == [0, 1]
    assert validate_category(co.category).ok


def test_trivial_comonad_validates():
    assert validate_relative_comonad(trivial_comonad(corpus.J01())).ok


@pytest.mark.parametrize("T", MONADS, ids=lambda T: T.name)
def test_coadjunction_duals(T):
    for adj in (resolution_from_kleisli(T), resolution_from_em(T)):
        co = dual_adjunction(adj)
        assert validate_coadjunction(co).ok
        assert dual_adjunction(co) == adj
        assert induced_comonad(co) == dual_monad(T)


def test_coresolutions_of_interior():
    D = corpus.INTERIOR()
    for co in (coresolution_from_cokleisli(D), coresolution_from_coem(D)):
        assert validate_coadjunction(co).ok
        assert induced_comonad(co) == D


def test_dualize_rejects_unknown():
    with pytest.raises(TypeError):
        dualize(3)
