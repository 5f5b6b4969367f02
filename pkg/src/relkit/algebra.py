"""Algebras and opalgebras for a relative monad, the Kleisli and
Eilenberg-Moore constructions, and bounded certification of their
universal properties."""
from itertools import product

from .enriched import (EnrichedCategory, EnrichedFunctor, Form, Frame, _same,
                       companion, compose_functors, conjoint, enumerate_forms,
                       enumerate_functors, identity_functor, loose_identity,
                       preorder_category, restrict, validate_category,
                       validate_form, validate_functor)
from .errors import (CapabilityMissing, PreconditionFailed,
                     ValidationReport, as_budget)
from .formal import Presheaf, nat_object
from .relmonad import (RelativeAdjunction, _spend_product, _typed,
                       induced_monad, post, pre, to_loose_monad, trivial_monad,
                       underlying_functor, validate_adjunction,
                       validate_loose_monad_morphism)


class EMAlgebra:
    """A carrier e with ext[x]: E(jx, e) -> E(tx, e)."""

    def __init__(self, carrier, ext):
        self.carrier = carrier
        self.ext = dict(ext)

    def key(self):
        return (self.carrier, tuple(self.ext[x].data for x in sorted(self.ext)))

    def __eq__(self, other):
        if not isinstance(other, EMAlgebra):
            return NotImplemented
        return self.carrier == other.carrier and self.ext == other.ext

    __hash__ = None

    def __repr__(self):
        return f"EMAlgebra({self.carrier})"


def validate_em_algebra(alg, T):
    j, E, A = T.root, T.E, T.A
    V = E.base
    t, e = T.obj, alg.carrier
    rep = ValidationReport(f"algebra on {e}")
    for x in A.objects:
        if not _typed(V, alg.ext.get(x), E.hom_obj[(j(x), e)], E.hom_obj[(t[x], e)]):
            rep.add("em_algebra.typing", x)
    if not rep.ok:
        return rep
    for x in A.objects:
        lhs = V.compose(alg.ext[x], pre(E, T.unit[x], j(x), t[x], e))
        if lhs != V.identity(E.hom_obj[(j(x), e)]):
            rep.add("em_algebra.unit", x)
    for x, y in product(A.objects, repeat=2):
        lhs = V.compose(V.tensor_mor(T.ext[(x, y)], alg.ext[y]), E.comp[(t[x], t[y], e)])
        rhs = V.then(V.tensor_mor(V.identity(E.hom_obj[(j(x), t[y])]), alg.ext[y]),
                     E.comp[(j(x), t[y], e)], alg.ext[x])
        if lhs != rhs:
            rep.add("em_algebra.associativity", x, y)
    return rep


class GradedHom:
    """h: grade -> E(e, e') between two algebras."""

    def __init__(self, grade, mor):
        self.grade = grade
        self.mor = mor


def validate_graded_hom(gh, src, tgt, T):
    j, E, A = T.root, T.E, T.A
    V = E.base
    t, e, e2 = T.obj, src.carrier, tgt.carrier
    rep = ValidationReport("graded homomorphism")
    if not _typed(V, gh.mor, gh.grade, E.hom_obj[(e, e2)]):
        rep.add("graded_hom.typing")
        return rep
    h = gh.mor
    for x in A.objects:
        lhs = V.compose(V.tensor_mor(src.ext[x], h), E.comp[(t[x], e, e2)])
        rhs = V.then(V.tensor_mor(V.identity(E.hom_obj[(j(x), e)]), h),
                     E.comp[(j(x), e, e2)], tgt.ext[x])
        if lhs != rhs:
            rep.add("graded_hom.compatibility", x)
    return rep


def enumerate_em_algebras(T, budget=None):
    """All algebras, ordered by carrier and then by extension tables."""
    j, E, A = T.root, T.E, T.A
    V = E.base
    budget = as_budget(budget)
    out = []
    for e in E.objects:
        spaces = [list(V.hom(E.hom_obj[(j(x), e)], E.hom_obj[(T.obj[x], e)])) for x in A.objects]
        _spend_product(budget, spaces, "algebra candidates")
        for choice in product(*spaces):
            alg = EMAlgebra(e, dict(zip(A.objects, choice)))
            if validate_em_algebra(alg, T).ok:
                out.append(alg)
    return out


class TAlgebra:
    """A functor e: D -> E with ext: E(j, e) => E(t, e), stored as a form on
    [E(j, e)] with boundaries t and e into E(1, 1)."""

    def __init__(self, functor, ext):
        self.functor = functor
        self.ext = ext

    def at(self, d):
        return EMAlgebra(self.functor(d),
                         {x: self.ext.comps[(x, d)] for x in self.ext.frame.f.dom.objects})


def algebra(T, e, comps):
    """Package a family comps[(x, d)]: E(jx, ed) -> E(tx, ed) as a T-algebra."""
    E = T.E
    chain = [restrict(loose_identity(E), T.root, e)]
    return TAlgebra(e, Form(Frame(chain, underlying_functor(T), e, loose_identity(E)),
                            comps, "ext"))


def validate_algebra(alg, T, form_checked=False):
    rep = ValidationReport("algebra")
    rep.extend(validate_functor(alg.functor), "algebra.functor.")
    if not rep.ok:
        return rep
    fr = alg.ext.frame
    if not (fr.n == 1 and _same(fr.g, alg.functor) and _same(fr.q, loose_identity(T.E))):
        rep.add("algebra.frame")
        return rep
    if not form_checked:
        rep.extend(validate_form(alg.ext), "algebra.form.")
    if not rep.ok:
        return rep
    for d in alg.functor.dom.objects:
        sub = validate_em_algebra(alg.at(d), T)
        for v in sub.violations:
            rep.add(v.law, d, *v.witness)
    return rep


class Opalgebra:
    """A functor a: A -> B with opext: E(j, t) => B(a, a), stored as a form on
    [E(j, t)] with boundaries a and a into B(1, 1)."""

    def __init__(self, functor, opext):
        self.functor = functor
        self.opext = opext

    @property
    def cod(self):
        return self.functor.cod


def opalgebra(T, a, comps):
    E, B = T.E, a.cod
    chain = [restrict(loose_identity(E), T.root, underlying_functor(T))]
    return Opalgebra(a, Form(Frame(chain, a, a, loose_identity(B)), comps, "opext"))


def validate_opalgebra(op, T, form_checked=False):
    j, E, A = T.root, T.E, T.A
    V = E.base
    a, B = op.functor, op.functor.cod
    t = T.obj
    rep = ValidationReport("opalgebra")
    rep.extend(validate_functor(a), "opalgebra.functor.")
    if not rep.ok:
        return rep
    fr = op.opext.frame
    if not (fr.n == 1 and _same(fr.f, a) and _same(fr.g, a) and _same(fr.q, loose_identity(B))):
        rep.add("opalgebra.frame")
        return rep
    if not form_checked:
        rep.extend(validate_form(op.opext), "opalgebra.form.")
    if not rep.ok:
        return rep
    k = op.opext.comps
    for x, y in product(A.objects, repeat=2):
        lhs = V.then(j.hom_map[(x, y)], post(E, T.unit[y], j(x), j(y), t[y]), k[(x, y)])
        if lhs != a.hom_map[(x, y)]:
            rep.add("opalgebra.unit", x, y)
    for x, y, z in product(A.objects, repeat=3):
        lhs = V.then(V.tensor_mor(V.identity(E.hom_obj[(j(x), t[y])]), T.ext[(y, z)]),
                     E.comp[(j(x), t[y], t[z])], k[(x, z)])
        rhs = V.compose(V.tensor_mor(k[(x, y)], k[(y, z)]), B.comp[(a(x), a(y), a(z))])
        if lhs != rhs:
            rep.add("opalgebra.extension", x, y, z)
    return rep


def monad_as_algebra(T):
    """(t, ext) as a T-algebra on A."""
    t = underlying_functor(T)
    return algebra(T, t, {(x, y): T.ext[(x, y)] for x, y in product(T.A.objects, repeat=2)})


def monad_as_opalgebra(T):
    t = underlying_functor(T)
    return opalgebra(T, t, {(x, y): T.ext[(x, y)] for x, y in product(T.A.objects, repeat=2)})


# graded morphisms


class GradedOpalgebraMorphism:
    """Between opalgebras (a, B) and (a', B'), graded by p1..pn running from
    B' to B; form on [p1..pn, B(1, a)] into B'(1,1) with boundaries 1 and a'."""

    def __init__(self, src, tgt, chain, form):
        self.src = src
        self.tgt = tgt
        self.chain = tuple(chain)
        self.form = form


class GradedAlgebraMorphism:
    """Between algebras e: D -> E and e': D' -> E, graded by p1..pn running
    from D to D'; form on [E(1, e), p1..pn] into E(1,1) with boundaries 1 and e'."""

    def __init__(self, src, tgt, chain, form):
        self.src = src
        self.tgt = tgt
        self.chain = tuple(chain)
        self.form = form


def opalgebra_morphism_frame(src, tgt, chain):
    B, B2 = src.cod, tgt.cod
    full = list(chain) + [restrict(loose_identity(B), identity_functor(B), src.functor)]
    return Frame(full, identity_functor(B2), tgt.functor, loose_identity(B2)).check()


def algebra_morphism_frame(src, tgt, chain, E):
    full = [restrict(loose_identity(E), identity_functor(E), src.functor)] + list(chain)
    return Frame(full, identity_functor(E), tgt.functor, loose_identity(E)).check()


def validate_graded_opalgebra_morphism(m, T, form_checked=False):
    V = T.base
    A = T.A
    B, B2 = m.src.cod, m.tgt.cod
    a, a2 = m.src.functor, m.tgt.functor
    k, k2 = m.src.opext.comps, m.tgt.opext.comps
    rep = ValidationReport("graded opalgebra morphism")
    if not form_checked:
        rep.extend(validate_form(m.form), "graded_opalgebra_morphism.form.")
    if not rep.ok:
        return rep
    chain = m.chain
    cats = [B2] + [p.right for p in chain]
    al = m.form.comps
    for xs in product(*(c.objects for c in cats)):
        objs = [p.obj[(xs[i], xs[i + 1])] for i, p in enumerate(chain)]
        ids = [V.identity(o) for o in objs]
        xn = xs[-1]
        for y, z in product(A.objects, repeat=2):
            bo = B.hom_obj[(xn, a(y))]
            lhs = V.then(V.tensor_mors(ids + [V.identity(bo), k[(y, z)]]),
                         V.tensor_mors(ids + [B.comp[(xn, a(y), a(z))]]), al[xs + (z,)])
            rhs = V.compose(V.tensor_mor(al[xs + (y,)], k2[(y, z)]),
                            B2.comp[(xs[0], a2(y), a2(z))])
            if lhs != rhs:
                rep.add("graded_opalgebra_morphism.compatibility", *xs, y, z)
    return rep


def validate_graded_algebra_morphism(m, T, form_checked=False):
    V = T.base
    A = T.A
    j, t = T.root, T.obj
    rep = ValidationReport("graded algebra morphism")
    if not form_checked:
        rep.extend(validate_form(m.form), "graded_algebra_morphism.form.")
    if not rep.ok:
        return rep
    chain = m.chain
    cats = [m.src.functor.dom] + [p.right for p in chain]
    ep = m.form.comps
    for ds in product(*(c.objects for c in cats)):
        ids = [V.identity(p.obj[(ds[i], ds[i + 1])]) for i, p in enumerate(chain)]
        for x in A.objects:
            lhs = V.compose(V.tensor_mors([m.src.ext.comps[(x, ds[0])]] + ids),
                            ep[(t[x],) + ds])
            rhs = V.compose(ep[(j(x),) + ds], m.tgt.ext.comps[(x, ds[-1])])
            if lhs != rhs:
                rep.add("graded_algebra_morphism.compatibility", x, *ds)
    return rep


# Kleisli


class Kleisli:
    def __init__(self, category, k, opext, right):
        self.category = category
        self.k = k
        self.opext = opext
        self.right = right

    def __iter__(self):
        return iter((self.category, self.k, self.opext))

    @property
    def opalgebra(self):
        return Opalgebra(self.k, self.opext)


def kleisli(T):
    j, E, A = T.root, T.E, T.A
    V = E.base
    t = T.obj
    obs = list(A.objects)
    hom = {(x, y): E.hom_obj[(j(x), t[y])] for x in obs for y in obs}
    comp = {(x, y, z): V.compose(V.tensor_mor(V.identity(hom[(x, y)]), T.ext[(y, z)]),
                                 E.comp[(j(x), t[y], t[z])])
            for x, y, z in product(obs, repeat=3)}
    K = EnrichedCategory(V, list(A.names), hom, dict(T.unit), comp, f"Kl({T.name})")
    k = EnrichedFunctor(A, K, tuple(obs),
                        {(x, y): V.compose(j.hom_map[(x, y)], post(E, T.unit[y], j(x), j(y), t[y]))
                         for x, y in product(obs, repeat=2)}, "k")
    opext = opalgebra(T, k, {(x, y): V.identity(hom[(x, y)])
                             for x, y in product(obs, repeat=2)}).opext
    v = EnrichedFunctor(K, E, t, {(x, y): T.ext[(x, y)] for x, y in product(obs, repeat=2)}, "v")
    return Kleisli(K, k, opext, v)


def resolution_from_kleisli(T, kl=None):
    kl = kl or kleisli(T)
    V = T.base
    tab = {(x, y): V.identity(kl.category.hom_obj[(x, y)])
           for x, y in product(T.A.objects, repeat=2)}
    return RelativeAdjunction(T.root, kl.k, kl.right, tab, tab, name=f"kl({T.name})")


def factor_through_kleisli(T, op, kl=None):
    """The functor Kl(T) -> B induced by an opalgebra."""
    kl = kl or kleisli(T)
    a = op.functor
    F = EnrichedFunctor(kl.category, a.cod, a.obj_map, dict(op.opext.comps), "[]")
    validate_functor(F).raise_if_failed()
    return F


# Eilenberg-Moore


class EilenbergMoore:
    def __init__(self, category, u, ext, algebras, inclusions, left=None):
        self.category = category
        self.u = u
        self.ext = ext
        self.algebras = algebras
        self.inclusions = inclusions
        self.left = left

    def __iter__(self):
        return iter((self.category, self.u, self.ext))

    @property
    def algebra(self):
        return TAlgebra(self.u, self.ext)

    def index(self, alg):
        key = alg.key()
        for i, b in enumerate(self.algebras):
            if b.key() == key:
                return i
        return None


def _zetas(T, s, r, budget):
    """The two maps E(e, e') -> nat(E(j-, e), E(t-, e')) whose equalizer is
    the object of homomorphisms."""
    j, E, A = T.root, T.E, T.A
    V = E.base
    t, e, e2 = T.obj, s.carrier, r.carrier
    P = Presheaf(A, {x: E.hom_obj[(j(x), e)] for x in A.objects},
                 {(x2, x): pre_action(E, j, x2, x, e) for x2 in A.objects for x in A.objects})
    tf = underlying_functor(T)
    Q = Presheaf(A, {x: E.hom_obj[(t[x], e2)] for x in A.objects},
                 {(x2, x): V.compose(V.tensor_mor(tf.hom_map[(x2, x)],
                                                  V.identity(E.hom_obj[(t[x], e2)])),
                                     E.comp[(t[x2], t[x], e2)])
                  for x2 in A.objects for x in A.objects})
    N = nat_object(A, P, Q, budget)
    v = E.hom_obj[(e, e2)]
    f1 = {x: V.compose(V.tensor_mor(s.ext[x], V.identity(v)), E.comp[(t[x], e, e2)])
          for x in A.objects}
    f2 = {x: V.compose(E.comp[(j(x), e, e2)], r.ext[x]) for x in A.objects}
    z1, z2 = N.factor(f1, v), N.factor(f2, v)
    if z1 is None or z2 is None:
        raise CapabilityMissing("homomorphism conditions do not factor through the nat object")
    return z1, z2


def pre_action(E, j, x2, x, e):
    V = E.base
    return V.compose(V.tensor_mor(j.hom_map[(x2, x)], V.identity(E.hom_obj[(j(x), e)])),
                     E.comp[(j(x2), j(x), e)])


def em_category(T, budget=None):
    E = T.E
    V = E.base
    for cap in ("equalizers", "nat_objects"):
        V.require(cap)
    budget = as_budget(budget)
    algs = enumerate_em_algebras(T, budget)
    n = len(algs)
    hom, incl = {}, {}
    for a, b in product(range(n), repeat=2):
        z1, z2 = _zetas(T, algs[a], algs[b], budget)
        eq = V.equalizer(z1, z2)
        hom[(a, b)] = eq.obj
        incl[(a, b)] = eq.inclusion
    ident, comp = {}, {}
    for a in range(n):
        ident[a] = V.lift(incl[(a, a)], E.ident[algs[a].carrier])
    for a, b, c in product(range(n), repeat=3):
        ea, eb, ec = algs[a].carrier, algs[b].carrier, algs[c].carrier
        h = V.compose(V.tensor_mor(incl[(a, b)], incl[(b, c)]), E.comp[(ea, eb, ec)])
        comp[(a, b, c)] = V.lift(incl[(a, c)], h)
    if any(m is None for m in list(ident.values()) + list(comp.values())):
        raise CapabilityMissing("identities or composites do not lift to homomorphisms")
    names = [f"{alg.carrier}:{i}" for i, alg in enumerate(algs)]
    EM = EnrichedCategory(V, names, hom, ident, comp, f"EM({T.name})")
    u = EnrichedFunctor(EM, E, tuple(alg.carrier for alg in algs), dict(incl), "u")
    ext = algebra(T, u, {(x, a): algs[a].ext[x] for x in T.A.objects for a in range(n)}).ext
    em = EilenbergMoore(EM, u, ext, algs, incl)
    em.left = _free_functor(T, em)
    return em


def _free_functor(T, em):
    """x -> (tx, ext(-, x)) with hom action lifted from the underlying functor."""
    E, A = T.E, T.A
    V = E.base
    tf = underlying_functor(T)
    obj = []
    for x in A.objects:
        i = em.index(EMAlgebra(T.obj[x], {w: T.ext[(w, x)] for w in A.objects}))
        if i is None:
            raise CapabilityMissing("free algebra missing from the enumeration")
        obj.append(i)
    hom = {(x, y): V.lift(em.inclusions[(obj[x], obj[y])], tf.hom_map[(x, y)])
           for x, y in product(A.objects, repeat=2)}
    return EnrichedFunctor(A, em.category, tuple(obj), hom, "f")


def resolution_from_em(T, em=None):
    em = em or em_category(T)
    j, E, A = T.root, T.E, T.A
    V = E.base
    f = em.left
    sharp, flat = {}, {}
    for x, a in product(A.objects, em.category.objects):
        e = em.algebras[a].carrier
        m = em.inclusions[(f(x), a)]
        sharp[(x, a)] = V.compose(m, pre(E, T.unit[x], j(x), T.obj[x], e))
        flat[(x, a)] = V.lift(m, em.algebras[a].ext[x])
    return RelativeAdjunction(j, f, em.u, sharp, flat, name=f"em({T.name})")


def factor_through_em(T, alg, em=None):
    """The functor D -> EM(T) induced by an algebra e: D -> E."""
    em = em or em_category(T)
    e = alg.functor
    D = e.dom
    V = T.base
    obj = []
    for d in D.objects:
        i = em.index(alg.at(d))
        if i is None:
            raise PreconditionFailed(f"object {d} does not carry an algebra")
        obj.append(i)
    hom = {}
    for d, d2 in product(D.objects, repeat=2):
        h = V.lift(em.inclusions[(obj[d], obj[d2])], e.hom_map[(d, d2)])
        if h is None:
            raise PreconditionFailed(f"hom action at {(d, d2)} is not a homomorphism")
        hom[(d, d2)] = h
    F = EnrichedFunctor(D, em.category, tuple(obj), hom, "<>")
    validate_functor(F).raise_if_failed()
    return F


def algebra_from_resolution(adj):
    """(r, flat ; r) as an algebra for the induced monad."""
    T = induced_monad(adj)
    j, l, r = adj.root, adj.left, adj.right
    V = T.base
    comps = {(x, c): V.compose(adj.flat[(x, c)], r.hom_map[(l(x), c)])
             for x in j.dom.objects for c in adj.apex.objects}
    return T, algebra(T, r, comps)


def opalgebra_from_resolution(adj):
    T = induced_monad(adj)
    l = adj.left
    comps = {(x, y): adj.flat[(x, l(y))] for x, y in product(adj.root.dom.objects, repeat=2)}
    return T, opalgebra(T, l, comps)


def comparison(T, kl=None, em=None):
    kl = kl or kleisli(T)
    em = em or em_category(T)
    _, alg = algebra_from_resolution(resolution_from_kleisli(T, kl))
    return factor_through_em(T, alg, em)


# certification


class CertifiedVerdict:
    def __init__(self, certified, budget, checked, failure=None):
        self.certified = certified
        self.budget = budget
        self.checked = dict(checked)
        self.failure = failure

    def __bool__(self):
        return self.certified

    def to_json(self):
        return {"verdict": f"CERTIFIED({self.budget})" if self.certified else "REFUTED",
                "budget": self.budget, "checked": self.checked, "failure": self.failure}

    def __repr__(self):
        if self.certified:
            return f"CERTIFIED({self.budget})"
        return f"REFUTED({self.failure})"


def labeled_preorders(V, max_n=3):
    """Every preorder on {0..n-1} for 1 <= n <= max_n, as a Boolean category."""
    out = []
    for n in range(1, max_n + 1):
        pairs = [(x, y) for x in range(n) for y in range(n) if x != y]
        for bits in product((0, 1), repeat=len(pairs)):
            rel = {p for p, b in zip(pairs, bits) if b}
            if all((x, z) in rel for (x, y) in rel for (y2, z) in rel if y == y2 and x != z):
                out.append(preorder_category(V, n, lambda a, b, rel=rel: a == b or (a, b) in rel,
                                             f"P{n}_{len(out)}"))
    return out


class GradingPool:
    """Categories, functors and distributors from which grading chains are drawn."""

    def __init__(self, categories, distributors, max_len=2):
        self.categories = []
        for C in categories:
            if not any(C is D for D in self.categories):
                self.categories.append(C)
        self.distributors = list(distributors)
        self.max_len = max_len

    def chains(self, src, tgt):
        out = [()] if _same(src, tgt) else []
        frontier = [((), src)]
        for _ in range(self.max_len):
            nxt = []
            for ch, end in frontier:
                for p in self.distributors:
                    if _same(p.left, end):
                        c = ch + (p,)
                        if _same(p.right, tgt):
                            out.append(c)
                        nxt.append((c, p.right))
            frontier = nxt
        return out


def default_pool(T, extra_categories=(), extra_functors=()):
    """Loose identities, companions and conjoints of j, t and the given
    functors, and E(j, t)."""
    j, E, A = T.root, T.E, T.A
    t = underlying_functor(T)
    cats = [A, E] + list(extra_categories)
    fs = [j, t] + list(extra_functors)
    dists = [loose_identity(C) for C in GradingPool(cats, []).categories]
    for f in fs:
        dists.append(companion(f))
        dists.append(conjoint(f))
    dists.append(restrict(loose_identity(E), j, t))
    cats += [f.dom for f in fs] + [f.cod for f in fs]
    return GradingPool(cats, dists)


def _enumerate_opalgebras(T, B, budget):
    E = T.E
    chain = [restrict(loose_identity(E), T.root, underlying_functor(T))]
    out = []
    for a in enumerate_functors(T.A, B, budget):
        for phi in enumerate_forms(Frame(chain, a, a, loose_identity(B)), budget):
            op = Opalgebra(a, phi)
            if validate_opalgebra(op, T, True).ok:
                out.append(op)
    return out


def _enumerate_algebras(T, D, budget):
    E = T.E
    out = []
    t = underlying_functor(T)
    for e in enumerate_functors(D, E, budget):
        chain = [restrict(loose_identity(E), T.root, e)]
        for phi in enumerate_forms(Frame(chain, t, e, loose_identity(E)), budget):
            alg = TAlgebra(e, phi)
            if validate_algebra(alg, T, True).ok:
                out.append(alg)
    return out


def _obj_maps_extending(K, B, k, a):
    """Object maps K -> B agreeing with a along k."""
    forced = {}
    for x, kx in enumerate(k.obj_map):
        if forced.get(kx, a(x)) != a(x):
            return []
        forced[kx] = a(x)
    free = [y for y in K.objects if y not in forced]
    out = []
    for vals in product(B.objects, repeat=len(free)):
        m = dict(forced)
        m.update(zip(free, vals))
        out.append(tuple(m[y] for y in K.objects))
    return out


def _opalgebra_factorisations(T, cand, op, budget):
    k, K = cand.functor, cand.cod
    V = T.base
    out = []
    for F in enumerate_functors(K, op.cod, budget, _obj_maps_extending(K, op.cod, k, op.functor)):
        if compose_functors(k, F) != op.functor:
            continue
        if all(V.compose(cand.opext.comps[xy], F.hom_map[(k(xy[0]), k(xy[1]))])
               == op.opext.comps[xy] for xy in op.opext.comps):
            out.append(F)
    return out


def _algebra_factorisations(T, cand, alg, budget):
    u, Alg = cand.functor, cand.functor.dom
    e = alg.functor
    D = e.dom
    maps = [om for om in product(Alg.objects, repeat=D.n)
            if all(u(om[d]) == e(d) and all(cand.ext.comps[(x, om[d])] == alg.ext.comps[(x, d)]
                                            for x in T.A.objects) for d in D.objects)]
    return [F for F in enumerate_functors(D, Alg, budget, maps)
            if compose_functors(F, u) == e]


def _small_categories(T, pool, max_n):
    cats = list(pool.categories)
    if T.base.thin:
        cats += labeled_preorders(T.base, max_n)
    return cats


def check_opalgebra_object(T, cand, pool=None, budget=None, max_n=3):
    """Bounded certification that cand = (k: A -> K, opext) is an opalgebra object."""
    budget = as_budget(budget)
    rep = validate_opalgebra(cand, T)
    if not rep.ok:
        return CertifiedVerdict(False, budget.limit, {}, {"stage": "candidate",
                                                        "laws": rep.laws()})
    pool = pool or default_pool(T, [cand.cod], [cand.functor])
    checked = {"opalgebras": 0, "graded": 0}
    by_cat = {}
    for B in _small_categories(T, pool, max_n):
        ops = _enumerate_opalgebras(T, B, budget)
        if any(B is C for C in pool.categories):
            by_cat[id(B)] = (B, ops)
        for op in ops:
            checked["opalgebras"] += 1
            n = len(_opalgebra_factorisations(T, cand, op, budget))
            if n != 1:
                return CertifiedVerdict(False, budget.limit, checked,
                                        {"stage": "opalgebra", "category": B.name,
                                         "functor": list(op.functor.obj_map), "count": n})
    med = {}
    for B, ops in by_cat.values():
        for op in ops:
            med[id(op)] = _opalgebra_factorisations(T, cand, op, budget)[0]
    entries = [(B, op) for B, ops in by_cat.values() for op in ops]
    for (B, src), (B2, tgt) in product(entries, repeat=2):
        for chain in pool.chains(B2, B):
            fr = opalgebra_morphism_frame(src, tgt, chain)
            for phi in enumerate_forms(fr, budget):
                m = GradedOpalgebraMorphism(src, tgt, chain, phi)
                if not validate_graded_opalgebra_morphism(m, T, True).ok:
                    continue
                checked["graded"] += 1
                F, F2 = med[id(src)], med[id(tgt)]
                bfr = Frame(list(chain) + [restrict(loose_identity(B), identity_functor(B), F)],
                            identity_functor(B2), F2, loose_identity(B2))
                k = cand.functor
                fixed = {xs[:-1] + (k(xs[-1]),): v for xs, v in phi.comps.items()}
                n = len(enumerate_forms(bfr, budget, fixed))
                if n != 1:
                    return CertifiedVerdict(False, budget.limit, checked,
                                            {"stage": "graded", "length": len(chain),
                                             "count": n})
    return CertifiedVerdict(True, budget.limit, checked)


def check_algebra_object(T, cand, pool=None, budget=None, max_n=3):
    """Bounded certification that cand = (u: Alg -> E, ext) is an algebra object."""
    budget = as_budget(budget)
    rep = validate_algebra(cand, T)
    if not rep.ok:
        return CertifiedVerdict(False, budget.limit, {}, {"stage": "candidate",
                                                        "laws": rep.laws()})
    u = cand.functor
    Alg = u.dom
    V = T.base
    pool = pool or default_pool(T, [Alg], [u])
    checked = {"algebras": 0, "graded": 0}
    by_cat = {}
    for D in _small_categories(T, pool, max_n):
        algs = _enumerate_algebras(T, D, budget)
        if any(D is C for C in pool.categories):
            by_cat[id(D)] = (D, algs)
        for alg in algs:
            checked["algebras"] += 1
            n = len(_algebra_factorisations(T, cand, alg, budget))
            if n != 1:
                return CertifiedVerdict(False, budget.limit, checked,
                                        {"stage": "algebra", "category": D.name,
                                         "functor": list(alg.functor.obj_map), "count": n})
    med = {}
    for D, algs in by_cat.values():
        for alg in algs:
            med[id(alg)] = _algebra_factorisations(T, cand, alg, budget)[0]
    entries = [(D, alg) for D, algs in by_cat.values() for alg in algs]
    E = T.E
    for (D, src), (D2, tgt) in product(entries, repeat=2):
        for chain in pool.chains(D, D2):
            fr = algebra_morphism_frame(src, tgt, chain, E)
            for phi in enumerate_forms(fr, budget):
                m = GradedAlgebraMorphism(src, tgt, chain, phi)
                if not validate_graded_algebra_morphism(m, T, True).ok:
                    continue
                checked["graded"] += 1
                F, F2 = med[id(src)], med[id(tgt)]
                bfr = Frame([restrict(loose_identity(Alg), identity_functor(Alg), F)] + list(chain),
                            identity_functor(Alg), F2, loose_identity(Alg))
                n = 0
                for beta in enumerate_forms(bfr, budget):
                    if _algebra_beta_ok(V, u, F, F2, chain, phi, beta, Alg):
                        n += 1
                if n != 1:
                    return CertifiedVerdict(False, budget.limit, checked,
                                            {"stage": "graded", "length": len(chain),
                                             "count": n})
    return CertifiedVerdict(True, budget.limit, checked)


def _algebra_beta_ok(V, u, F, F2, chain, phi, beta, Alg):
    for xs, b in beta.comps.items():
        m, ds = xs[0], xs[1:]
        ids = [V.identity(p.obj[(ds[i], ds[i + 1])]) for i, p in enumerate(chain)]
        lhs = V.compose(V.tensor_mors([u.hom_map[(m, F(ds[0]))]] + ids), phi.comps[(u(m),) + ds])
        rhs = V.compose(b, u.hom_map[(m, F2(ds[-1]))])
        if lhs != rhs:
            return False
    return True


# resolutions and coincidence


def enumerate_resolutions(T, max_apex=3, budget=None):
    """Every Boolean resolution of T whose apex is a preorder on at most max_apex objects."""
    if not T.base.thin:
        raise CapabilityMissing("resolution enumeration is implemented for thin bases")
    j, E, A = T.root, T.E, T.A
    V = T.base
    budget = as_budget(budget)
    out = []
    for C in labeled_preorders(V, max_apex):
        for l in enumerate_functors(A, C, budget):
            for r in enumerate_functors(C, E, budget):
                ok = all(C.hom_obj[(l(x), c)] == E.hom_obj[(j(x), r(c))]
                         for x in A.objects for c in C.objects)
                if not ok:
                    continue
                tab = {(x, c): V.identity(C.hom_obj[(l(x), c)])
                       for x in A.objects for c in C.objects}
                adj = RelativeAdjunction(j, l, r, tab, tab, name=C.name)
                if validate_adjunction(adj).ok and induced_monad(adj) == T:
                    out.append(adj)
    return out


def coincidence_check(T, l, budget=None):
    """Whether Kl(T) and Kl of the trivial l-monad agree under A, given that
    C(l, l) and E(j, t) are isomorphic loose monads."""
    budget = as_budget(budget)
    S = trivial_monad(l)
    M, N = to_loose_monad(T), to_loose_monad(S)
    if not _loose_iso_exists(M, N, budget):
        raise PreconditionFailed("C(l, l) is not isomorphic to E(j, t) as a loose monad")
    K1, K2 = kleisli(T), kleisli(S)
    V = T.base
    A = T.A
    objs = [tuple(A.objects)]
    for F in enumerate_functors(K1.category, K2.category, budget, objs):
        if compose_functors(K1.k, F) != K2.k:
            continue
        if all(V.is_iso(m) for m in F.hom_map.values()):
            return True
    return False


def _loose_iso_exists(M, N, budget):
    V = M.carrier.base
    A = M.carrier.left
    fr = Frame([M.carrier], identity_functor(A), identity_functor(A), N.carrier)
    for phi in enumerate_forms(fr, budget):
        if all(V.is_iso(m) for m in phi.comps.values()) and \
                validate_loose_monad_morphism(M, N, phi).ok:
            return True
    return False


def check_em_category(em):
    """Validation of the constructed category and its algebra."""
    rep = ValidationReport(em.category.name)
    rep.extend(validate_category(em.category), "category.")
    return rep

