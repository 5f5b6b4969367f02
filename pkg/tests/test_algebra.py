from itertools import product

import pytest

from relkit import corpus
from relkit.algebra import (EMAlgebra, algebra_from_resolution, check_algebra_object,
                            coincidence_check,
                            check_em_category, check_opalgebra_object, comparison,
                            em_category, enumerate_em_algebras, enumerate_resolutions,
                            factor_through_em, factor_through_kleisli, kleisli,
                            labeled_preorders, monad_as_algebra, monad_as_opalgebra,
                            opalgebra, opalgebra_from_resolution, resolution_from_em,
                            resolution_from_kleisli, validate_algebra, validate_em_algebra,
                            validate_opalgebra)
from relkit.enriched import identity_functor, validate_category, validate_functor
from relkit.errors import CapabilityMissing, PreconditionFailed
from relkit.relmonad import (induced_monad, strict_morphisms, trivial_monad,
                             validate_adjunction)
from relkit.vkernel import Mor

BOOL = corpus.bool_monads()
INC = list(corpus.INC1_MONADS())

# frozen from scripts/oracle_counts.py (inc1_em): carriers and hom sizes in row order
INC1_EM = {
    0: ([0, 1, 2], [1, 1, 1, 0, 1, 2, 0, 1, 4]),
    1: ([0, 1, 2, 2], [1, 1, 1, 1, 0, 1, 2, 0, 0, 1, 4, 0, 0, 1, 2, 2]),
    2: ([0, 1, 2, 2, 2], [1, 1, 1, 1, 1, 0, 1, 1, 2, 1, 0, 1, 2, 2, 2,
                          0, 1, 1, 4, 1, 0, 1, 2, 2, 2]),
    3: ([0, 1, 2, 2, 2], [1, 1, 1, 1, 1, 0, 1, 1, 2, 1, 0, 1, 2, 2, 2,
                          0, 1, 1, 4, 1, 0, 1, 2, 2, 2]),
    4: ([0, 1, 2, 2], [1, 1, 1, 1, 0, 1, 2, 0, 0, 1, 4, 0, 0, 1, 2, 2]),
}


@pytest.mark.parametrize("T", BOOL + INC, ids=lambda T: T.name)
def test_kleisli_homs_and_validity(T):
    kl = kleisli(T)
    assert validate_category(kl.category).ok
    assert validate_functor(kl.k).ok and validate_functor(kl.right).ok
    assert validate_opalgebra(kl.opalgebra, T).ok
    j = T.root
    assert all(kl.category.hom_obj[(x, y)] == T.E.hom_obj[(j(x), T.obj[y])]
               for x, y in product(T.A.objects, repeat=2))


def test_kleisli_orders_match_oracle():
    assert kleisli(corpus.TMAX()).category.hom_obj == {(0, 0): 1, (0, 1): 1,
                                                       (1, 0): 1, (1, 1): 1}
    tcl = kleisli(corpus.TCL()).category.hom_obj
    assert [tcl[(x, y)] for x in range(3) for y in range(3)] == [1, 1, 1, 1, 1, 1, 0, 0, 1]


@pytest.mark.parametrize("T,carriers", [(corpus.TRIV_J01(), [0, 1, 2]), (corpus.TMAX(), [2]),
                                        (corpus.TCL(), [1, 2])], ids=["triv", "tmax", "tcl"])
def test_bool_em_carriers_match_oracle(T, carriers):
    em = em_category(T)
    assert [a.carrier for a in em.algebras] == carriers
    assert check_em_category(em).ok


@pytest.mark.parametrize("i", range(5))
def test_inc1_em_matches_oracle(i):
    T = INC[i]
    em = em_category(T)
    carriers, homs = INC1_EM[i]
    assert [a.carrier for a in em.algebras] == carriers
    C = em.category
    assert [C.hom_obj[k] for k in sorted(C.hom_obj)] == homs
    assert validate_category(C).ok


def test_em_algebra_fault_named():
    T = INC[1]
    alg = enumerate_em_algebras(T)[-1]
    m = alg.ext[0]
    bad = EMAlgebra(alg.carrier, {0: Mor(m.dom, m.cod, (0,) * m.dom)})
    laws = validate_em_algebra(bad, T).laws()
    assert "em_algebra.unit" in laws or "em_algebra.associativity" in laws


@pytest.mark.parametrize("T", BOOL + INC, ids=lambda T: T.name)
def test_monad_as_algebra_and_opalgebra(T):
    assert validate_algebra(monad_as_algebra(T), T).ok
    assert validate_opalgebra(monad_as_opalgebra(T), T).ok


@pytest.mark.parametrize("T", BOOL + INC, ids=lambda T: T.name)
def test_resolutions_validate_and_factor(T):
    kl_adj = resolution_from_kleisli(T)
    em_adj = resolution_from_em(T)
    for adj in (kl_adj, em_adj):
        assert validate_adjunction(adj).ok
        assert induced_monad(adj) == T
    _, alg = algebra_from_resolution(kl_adj)
    assert validate_algebra(alg, T).ok
    _, op = opalgebra_from_resolution(em_adj)
    assert validate_opalgebra(op, T).ok
    F = comparison(T)
    assert validate_functor(F).ok
    assert validate_functor(factor_through_em(T, monad_as_algebra(T))).ok


def test_factor_through_kleisli_recovers_right_adjoint():
    T = corpus.TCL()
    kl = kleisli(T)
    _, op = opalgebra_from_resolution(resolution_from_em(T))
    F = factor_through_kleisli(T, op, kl)
    assert validate_functor(F).ok
    assert F.dom is kl.category


def test_labeled_preorders_counts():
    # labelled preorders on 1, 2, 3 points
    assert [sum(1 for P in labeled_preorders(corpus.Q2()) if P.n == n) for n in (1, 2, 3)] == \
        [1, 4, 29]


def test_tmax_resolutions_match_oracle():
    res = enumerate_resolutions(corpus.TMAX())
    assert len(res) == 40
    assert [sum(1 for a in res if a.apex.n == n) for n in (1, 2, 3)] == [1, 6, 33]
    T = corpus.TMAX()
    kl, em = resolution_from_kleisli(T), resolution_from_em(T)
    for adj in res:
        assert len(strict_morphisms(kl, adj)) == 1
        assert len(strict_morphisms(adj, em)) == 1


def test_resolution_enumeration_needs_thin_base():
    with pytest.raises(CapabilityMissing):
        enumerate_resolutions(INC[0])


@pytest.mark.parametrize("T", [corpus.TMAX(), corpus.TCL()], ids=["tmax", "tcl"])
def test_bool_universal_objects_certified(T):
    kl = kleisli(T)
    assert check_opalgebra_object(T, kl.opalgebra).certified
    em = em_category(T)
    assert check_algebra_object(T, em.algebra).certified


def test_non_fully_faithful_root_refuted():
    j = corpus.J2()
    T = trivial_monad(j)
    PT = corpus.PT()
    cand = opalgebra(T, identity_functor(PT), {(0, 0): Mor(4, 1, (0, 0, 0, 0))})
    assert validate_opalgebra(cand, T).ok
    v = check_opalgebra_object(T, cand)
    assert not v.certified and v.failure["stage"] == "opalgebra"
    assert v.failure["count"] == 0


def test_mismatched_candidate_refuted_at_candidate_stage():
    # the Kleisli structure form of TCL does not sit on the identity functor of CH3
    T = corpus.TCL()
    kl = kleisli(T)
    cand = kl.opalgebra.__class__(identity_functor(corpus.CH3()), kl.opext)
    assert validate_opalgebra(cand, T).laws() == ["opalgebra.frame"]
    v = check_opalgebra_object(T, cand)
    assert not v.certified and v.failure["stage"] == "candidate"


def test_coincidence_for_resolution_legs():
    T = corpus.TMAX()
    assert coincidence_check(T, kleisli(T).k)
    assert coincidence_check(T, em_category(T).left)


def test_coincidence_precondition():
    # the identity of CH2 gives the trivial loose monad, not E(j, t) for TMAX
    with pytest.raises(PreconditionFailed):
        coincidence_check(corpus.TMAX(), identity_functor(corpus.CH2()))


@pytest.mark.parametrize("T", BOOL + INC, ids=lambda T: T.name)
def test_kleisli_structure_is_invertible(T):
    kl = kleisli(T)
    assert all(T.base.is_iso(m) for m in kl.opext.comps.values())


@pytest.mark.parametrize("T", BOOL + INC, ids=lambda T: T.name)
def test_monad_factors_as_resolution_legs(T):
    kl = kleisli(T)
    v = factor_through_kleisli(T, monad_as_opalgebra(T), kl)
    assert v.obj_map == kl.right.obj_map and v.hom_map == kl.right.hom_map
    em = em_category(T)
    f = factor_through_em(T, monad_as_algebra(T), em)
    assert f.obj_map == em.left.obj_map and f.hom_map == em.left.hom_map
    ident = factor_through_kleisli(T, kl.opalgebra, kl)
    assert ident.hom_map == identity_functor(kl.category).hom_map
