"""Relative monads, their morphisms, monoid and loose-monad forms, and
relative adjunctions in their four presentations."""
from itertools import product

from .enriched import (EnrichedFunctor, Form, Frame, _same, compose_functors,
                       enumerate_functors, identity_functor, identity_form,
                       loose_identity, paste, restrict, validate_form,
                       validate_functor)
from .errors import (FrameMismatch, LawViolation, MalformedTables,
                     ValidationReport, as_budget)


def pre(E, m, a, b, c):
    """E(m, c): E(b, c) -> E(a, c) for an element m: I -> E(a, b)."""
    V = E.base
    return V.compose(V.tensor_mor(m, V.identity(E.hom_obj[(b, c)])), E.comp[(a, b, c)])


def post(E, m, a, b, c):
    """E(a, m): E(a, b) -> E(a, c) for an element m: I -> E(b, c)."""
    V = E.base
    return V.compose(V.tensor_mor(V.identity(E.hom_obj[(a, b)]), m), E.comp[(a, b, c)])


def _typed(V, m, dom, cod):
    if m is None or m.dom != dom or m.cod != cod:
        return False
    try:
        V.check_mor(m)
    except MalformedTables:
        return False
    return True


def _spend_product(budget, spaces, what):
    n = 1
    for s in spaces:
        n *= len(s)
    budget.spend(n, what)


class RelativeMonad:
    """A j-monad: object map t, units unit[x]: I -> E(jx, tx) and extension
    operators ext[(x, y)]: E(jx, ty) -> E(tx, ty)."""

    def __init__(self, root, obj, unit, ext, name=""):
        self.root = root
        self.obj = tuple(obj)
        self.unit = dict(unit)
        self.ext = dict(ext)
        self.name = name

    @property
    def A(self):
        return self.root.dom

    @property
    def E(self):
        return self.root.cod

    @property
    def base(self):
        return self.E.base

    def __call__(self, x):
        return self.obj[x]

    def __eq__(self, other):
        if not isinstance(other, RelativeMonad):
            return NotImplemented
        return (_same(self.root, other.root) and self.obj == other.obj
                and self.unit == other.unit and self.ext == other.ext)

    __hash__ = None

    def __repr__(self):
        return f"<RelativeMonad {self.name or '?'} t={self.obj}>"


def validate_relative_monad(T):
    j, E, A = T.root, T.E, T.A
    V = E.base
    rep = ValidationReport(T.name or "monad")
    if len(T.obj) != A.n or any(not 0 <= o < E.n for o in T.obj):
        raise MalformedTables("monad object map out of range")
    t = T.obj
    for x in A.objects:
        if not _typed(V, T.unit.get(x), V.unit, E.hom_obj[(j(x), t[x])]):
            rep.add("monad.unit.typing", x)
    for x, y in product(A.objects, repeat=2):
        if not _typed(V, T.ext.get((x, y)), E.hom_obj[(j(x), t[y])], E.hom_obj[(t[x], t[y])]):
            rep.add("monad.extension.typing", x, y)
    if not rep.ok:
        return rep
    for x, y in product(A.objects, repeat=2):
        lhs = V.compose(T.ext[(x, y)], pre(E, T.unit[x], j(x), t[x], t[y]))
        if lhs != V.identity(E.hom_obj[(j(x), t[y])]):
            rep.add("monad.extension_unit", x, y)
    for x in A.objects:
        if V.compose(T.unit[x], T.ext[(x, x)]) != E.ident[t[x]]:
            rep.add("monad.unit_extension", x)
    for x, y, z in product(A.objects, repeat=3):
        lhs = V.compose(V.tensor_mor(T.ext[(x, y)], T.ext[(y, z)]),
                        E.comp[(t[x], t[y], t[z])])
        rhs = V.then(V.tensor_mor(V.identity(E.hom_obj[(j(x), t[y])]), T.ext[(y, z)]),
                     E.comp[(j(x), t[y], t[z])], T.ext[(x, z)])
        if lhs != rhs:
            rep.add("monad.associativity", x, y, z)
    return rep


def trivial_monad(root):
    E, A = root.cod, root.dom
    V = E.base
    return RelativeMonad(root, root.obj_map, {x: E.ident[root(x)] for x in A.objects},
                         {(x, y): V.identity(E.hom_obj[(root(x), root(y))])
                          for x, y in product(A.objects, repeat=2)},
                         name=f"triv({root.name})")


def underlying_functor(T):
    """t_{x,y} = j_{x,y} ; E(jx, eta_y) ; ext_{x,y}."""
    j, E, A = T.root, T.E, T.A
    V = E.base
    hom = {(x, y): V.then(j.hom_map[(x, y)], post(E, T.unit[y], j(x), j(y), T.obj[y]),
                          T.ext[(x, y)])
           for x, y in product(A.objects, repeat=2)}
    return EnrichedFunctor(A, E, T.obj, hom, name=f"{T.name}.t" if T.name else "t")


def _unit_natural(T, F, x, y):
    j, E = T.root, T.E
    V = E.base
    a = V.compose(j.hom_map[(x, y)], post(E, T.unit[y], j(x), j(y), T.obj[y]))
    b = V.compose(F.hom_map[(x, y)], pre(E, T.unit[x], j(x), T.obj[x], T.obj[y]))
    return a == b


def _ext_natural(T, F, w, x, y):
    E = T.E
    V = E.base
    t = T.obj
    a = V.compose(V.tensor_mor(T.ext[(w, x)], F.hom_map[(x, y)]), E.comp[(t[w], t[x], t[y])])
    b = V.then(V.tensor_mor(V.identity(E.hom_obj[(T.root(w), t[x])]), F.hom_map[(x, y)]),
               E.comp[(T.root(w), t[x], t[y])], T.ext[(w, y)])
    return a == b


def functor_structures(T, budget=None):
    """Every functor on the object map of T making the unit natural and the
    extension natural in its second variable."""
    A = T.A
    out = []
    for F in enumerate_functors(A, T.E, budget, obj_maps=[T.obj]):
        if all(_unit_natural(T, F, x, y) and _ext_natural(T, F, w, x, y)
               for x, y in product(A.objects, repeat=2) for w in A.objects):
            out.append(F)
    return out


def derive_underlying_functor(T, budget=None):
    """The underlying functor, checked to be the only admissible functor structure."""
    t = underlying_functor(T)
    rep = validate_functor(t)
    if not rep.ok:
        raise LawViolation(rep)
    found = functor_structures(T, budget)
    if found != [t]:
        rep = ValidationReport(T.name or "monad")
        rep.add("monad.functor_uniqueness", len(found))
        raise LawViolation(rep)
    return t


def enumerate_relative_monads(root, budget=None, max_obj=None):
    """All j-monads, by brute force over object maps, units and extensions."""
    E, A = root.cod, root.dom
    V = E.base
    budget = as_budget(budget)
    obs = [o for o in E.objects if max_obj is None or o <= max_obj]
    keys = list(product(A.objects, repeat=2))
    out = []
    for t in product(obs, repeat=A.n):
        us = [list(V.hom(V.unit, E.hom_obj[(root(x), t[x])])) for x in A.objects]
        es = [list(V.hom(E.hom_obj[(root(x), t[y])], E.hom_obj[(t[x], t[y])]))
              for x, y in keys]
        _spend_product(budget, us + es, "monad candidates")
        for uc in product(*us):
            for ec in product(*es):
                T = RelativeMonad(root, t, dict(zip(A.objects, uc)), dict(zip(keys, ec)))
                if validate_relative_monad(T).ok:
                    out.append(T)
    return out


# morphisms


class MonadMorphism:
    """comps[x]: I -> E(tx, t'x) between monads on a common root."""

    def __init__(self, src, tgt, comps, name=""):
        self.src = src
        self.tgt = tgt
        self.comps = dict(comps)
        self.name = name

    def __eq__(self, other):
        if not isinstance(other, MonadMorphism):
            return NotImplemented
        return self.src == other.src and self.tgt == other.tgt and self.comps == other.comps

    __hash__ = None


def validate_monad_morphism(th):
    T, S = th.src, th.tgt
    if not _same(T.root, S.root):
        raise FrameMismatch("monads have different roots")
    j, E, A = T.root, T.E, T.A
    V = E.base
    t, s = T.obj, S.obj
    rep = ValidationReport(th.name or "monad morphism")
    for x in A.objects:
        if not _typed(V, th.comps.get(x), V.unit, E.hom_obj[(t[x], s[x])]):
            rep.add("monad_morphism.typing", x)
    if not rep.ok:
        return rep
    for x in A.objects:
        if V.compose(T.unit[x], post(E, th.comps[x], j(x), t[x], s[x])) != S.unit[x]:
            rep.add("monad_morphism.unit", x)
    for x, y in product(A.objects, repeat=2):
        a = V.compose(T.ext[(x, y)], post(E, th.comps[y], t[x], t[y], s[y]))
        b = V.then(post(E, th.comps[y], j(x), t[y], s[y]), S.ext[(x, y)],
                   pre(E, th.comps[x], t[x], s[x], s[y]))
        if a != b:
            rep.add("monad_morphism.extension", x, y)
    return rep


def enumerate_monad_morphisms(T, S, budget=None):
    E, A = T.E, T.A
    V = E.base
    budget = as_budget(budget)
    spaces = [list(V.hom(V.unit, E.hom_obj[(T.obj[x], S.obj[x])])) for x in A.objects]
    _spend_product(budget, spaces, "monad morphism candidates")
    out = []
    for choice in product(*spaces):
        th = MonadMorphism(T, S, dict(zip(A.objects, choice)))
        if validate_monad_morphism(th).ok:
            out.append(th)
    return out


def identity_monad_morphism(T):
    return MonadMorphism(T, T, {x: T.E.ident[T.obj[x]] for x in T.A.objects})


# loose monads


class LooseMonad:
    """A monad in the loose direction: carrier t: A -|-> A, forms mult: t, t => t
    and unit: (nullary) => t."""

    def __init__(self, carrier, mult, unit, name=""):
        self.carrier = carrier
        self.mult = mult
        self.unit = unit
        self.name = name


def _diff(rep, law, a, b):
    for k in sorted(a.comps):
        if a.comps[k] != b.comps.get(k):
            rep.add(law, *k)


def validate_loose_monad(M):
    rep = ValidationReport(M.name or "loose monad")
    rep.extend(validate_form(M.mult), "mult.")
    rep.extend(validate_form(M.unit), "unit.")
    if not rep.ok:
        return rep
    one = identity_form(M.carrier)
    _diff(rep, "loose_monad.associativity", paste([M.mult, one], M.mult),
          paste([one, M.mult], M.mult))
    _diff(rep, "loose_monad.left_unit", paste([M.unit, one], M.mult), one)
    _diff(rep, "loose_monad.right_unit", paste([one, M.unit], M.mult), one)
    return rep


def validate_loose_monad_morphism(M, N, theta):
    """theta: M.carrier => N.carrier preserving unit and multiplication."""
    rep = ValidationReport("loose monad morphism")
    rep.extend(validate_form(theta), "form.")
    if not rep.ok:
        return rep
    _diff(rep, "loose_monad_morphism.unit", paste([M.unit], theta), N.unit)
    _diff(rep, "loose_monad_morphism.mult", paste([M.mult], theta),
          paste([theta, theta], N.mult))
    return rep


def to_loose_monad(T):
    """E(j, t) with multiplication (1 (x) ext) ; comp and unit eta."""
    j, E, A = T.root, T.E, T.A
    V = E.base
    t = underlying_functor(T)
    car = restrict(loose_identity(E), j, t)
    idA = identity_functor(A)
    mult = Form(Frame([car, car], idA, idA, car),
                {(x, y, z): V.compose(V.tensor_mor(V.identity(car.obj[(x, y)]), T.ext[(y, z)]),
                                      E.comp[(j(x), T.obj[y], T.obj[z])])
                 for x, y, z in product(A.objects, repeat=3)}, "mult")
    unit = Form(Frame([], idA, idA, car), {(x,): T.unit[x] for x in A.objects}, "unit")
    return LooseMonad(car, mult, unit, name=f"E(j,{T.name})")


def to_loose_monad_morphism(th):
    """The form E(j, t) => E(j, t') induced by a monad morphism."""
    T, S = th.src, th.tgt
    j, E, A = T.root, T.E, T.A
    src, tgt = to_loose_monad(T), to_loose_monad(S)
    idA = identity_functor(A)
    return src, tgt, Form(Frame([src.carrier], idA, idA, tgt.carrier),
                          {(x, y): post(E, th.comps[y], j(x), T.obj[y], S.obj[y])
                           for x, y in product(A.objects, repeat=2)})


# loose relative monads and the monoid form


class LooseRelativeMonad:
    """Carrier p: E -|-> A (components p(e, x)) with multiplication
    p, E(j,1), p => p and unit E(1,j) => p."""

    def __init__(self, root, carrier, mult, unit, name=""):
        self.root = root
        self.carrier = carrier
        self.mult = mult
        self.unit = unit
        self.name = name


class MonoidFormMonad(LooseRelativeMonad):
    """A relative monad presented as a monoid on the carrier E(1, t)."""


def _bridge(j):
    E = j.cod
    return restrict(loose_identity(E), j, identity_functor(E))


def _comp3(E, p, q, r):
    """E(z, a) (x) E(a, b) (x) E(b, c) -> E(z, c), diagrammatic."""
    V = E.base
    return V.compose(V.tensor_mor(E.comp[(p, q, r[0])], V.identity(E.hom_obj[(r[0], r[1])])),
                     E.comp[(p, r[0], r[1])])


def validate_loose_relative_monad(M):
    j = M.root
    E, A = j.cod, j.dom
    V = E.base
    p = M.carrier
    if not (_same(p.left, E) and _same(p.right, A)):
        raise FrameMismatch("carrier must run from E to the root's domain")
    rep = ValidationReport(M.name or "loose relative monad")
    rep.extend(validate_form(M.mult), "mult.")
    rep.extend(validate_form(M.unit), "unit.")
    if not rep.ok:
        return rep
    I = V.identity
    # left unit: E(z, jx), E(jx, w), p(w, y) => p via the unit then mult
    # agrees with composing in E and acting on p
    for z, x, w, y in product(E.objects, A.objects, E.objects, A.objects):
        Ejw = E.hom_obj[(j(x), w)]
        lhs = V.compose(V.tensor_mors([M.unit.comps[(z, x)], I(Ejw), I(p.obj[(w, y)])]),
                        M.mult.comps[(z, x, w, y)])
        rhs = V.compose(V.tensor_mors([E.comp[(z, j(x), w)], I(p.obj[(w, y)])]),
                        p.lact[(z, w, y)])
        if lhs != rhs:
            rep.add("loose_relative_monad.left_unit", z, x, w, y)
    for z, x in product(E.objects, A.objects):
        u = V.compose(E.ident[j(x)], M.unit.comps[(j(x), x)])
        lhs = V.compose(V.tensor_mors([I(p.obj[(z, x)]), E.ident[j(x)], u]),
                        M.mult.comps[(z, x, j(x), x)])
        if lhs != I(p.obj[(z, x)]):
            rep.add("loose_relative_monad.right_unit", z, x)
    for z, x, w, y, v, u in product(E.objects, A.objects, E.objects, A.objects,
                                    E.objects, A.objects):
        objs = [p.obj[(z, x)], E.hom_obj[(j(x), w)], p.obj[(w, y)],
                E.hom_obj[(j(y), v)], p.obj[(v, u)]]
        lhs = V.compose(V.tensor_mors([M.mult.comps[(z, x, w, y)], I(objs[3]), I(objs[4])]),
                        M.mult.comps[(z, y, v, u)])
        rhs = V.compose(V.tensor_mors([I(objs[0]), I(objs[1]), M.mult.comps[(w, y, v, u)]]),
                        M.mult.comps[(z, x, w, u)])
        if lhs != rhs:
            rep.add("loose_relative_monad.associativity", z, x, w, y, v, u)
    return rep


validate_monoid_form = validate_loose_relative_monad


def to_monoid_form(T):
    j, E, A = T.root, T.E, T.A
    V = E.base
    t = underlying_functor(T)
    idE, idA = identity_functor(E), identity_functor(A)
    car = restrict(loose_identity(E), idE, t)
    br = _bridge(j)
    Ej = restrict(loose_identity(E), idE, j)
    to = T.obj

    def mu(z, x, w, y):
        # f: z -> tx, g: jx -> w, h: w -> ty  gives  f ; ext(g ; h)
        inner = V.compose(E.comp[(j(x), w, to[y])], T.ext[(x, y)])
        return V.compose(V.tensor_mor(V.identity(E.hom_obj[(z, to[x])]), inner),
                         E.comp[(z, to[x], to[y])])

    mult = Form(Frame([car, br, car], idE, idA, car),
                {k: mu(*k) for k in product(E.objects, A.objects, E.objects, A.objects)}, "mult")
    unit = Form(Frame([Ej], idE, idA, car),
                {(z, x): post(E, T.unit[x], z, j(x), to[x])
                 for z in E.objects for x in A.objects}, "unit")
    return MonoidFormMonad(j, car, mult, unit, name=T.name)


def from_monoid_form(M):
    j = M.root
    E, A = j.cod, j.dom
    V = E.base
    origin = M.carrier.origin
    if not origin or origin[0] != "restrict":
        raise FrameMismatch("carrier is not of the form E(1, t)")
    t = origin[3].obj_map
    unit = {x: V.compose(E.ident[j(x)], M.unit.comps[(j(x), x)]) for x in A.objects}
    ext = {(x, y): V.compose(V.tensor_mors([E.ident[t[x]], E.ident[j(x)],
                                            V.identity(E.hom_obj[(j(x), t[y])])]),
                             M.mult.comps[(t[x], x, j(x), y)])
           for x, y in product(A.objects, repeat=2)}
    return RelativeMonad(j, t, unit, ext, name=M.name)


def restrict_loose_relative(j, M):
    """Restrict along j: carrier p(j, 1), multiplication through the identity of j."""
    if not _same(j, M.root):
        raise FrameMismatch("restriction must be along the monad's root")
    E, A = j.cod, j.dom
    V = E.base
    p = M.carrier
    idA = identity_functor(A)
    car = restrict(p, j, idA)
    mult = Form(Frame([car, car], idA, idA, car),
                {(x, y, z): V.compose(V.tensor_mors([V.identity(p.obj[(j(x), y)]), E.ident[j(y)],
                                                     V.identity(p.obj[(j(y), z)])]),
                                      M.mult.comps[(j(x), y, j(y), z)])
                 for x, y, z in product(A.objects, repeat=3)}, "mult")
    unit = Form(Frame([], idA, idA, car),
                {(x,): V.compose(E.ident[j(x)], M.unit.comps[(j(x), x)]) for x in A.objects},
                "unit")
    return LooseMonad(car, mult, unit, name=f"{M.name}(j,1)")


# relative adjunctions


class RelativeAdjunction:
    """left -|_root right stored as transposition tables
    sharp[(x, c)]: C(lx, c) -> E(jx, rc) and flat its inverse."""

    def __init__(self, root, left, right, sharp, flat, name=""):
        self.root = root
        self.left = left
        self.right = right
        self.sharp = dict(sharp)
        self.flat = dict(flat)
        self.name = name

    @property
    def apex(self):
        return self.left.cod

    def __eq__(self, other):
        if not isinstance(other, RelativeAdjunction):
            return NotImplemented
        return (_same(self.root, other.root) and _same(self.left, other.left)
                and _same(self.right, other.right) and self.sharp == other.sharp
                and self.flat == other.flat)

    __hash__ = None

    def __repr__(self):
        return f"<RelativeAdjunction {self.name or '?'}>"


def _check_legs(j, l, r):
    if not (_same(j.dom, l.dom) and _same(l.cod, r.dom) and _same(r.cod, j.cod)):
        raise FrameMismatch("root and adjoint legs do not fit together")


def sharp_form(adj):
    j, l, r = adj.root, adj.left, adj.right
    C = l.cod
    src = restrict(loose_identity(C), l, identity_functor(C))
    return Form(Frame([src], j, r, loose_identity(j.cod)), adj.sharp, "sharp")


def flat_form(adj):
    j, l, r = adj.root, adj.left, adj.right
    C = l.cod
    src = restrict(loose_identity(j.cod), j, r)
    return Form(Frame([src], l, identity_functor(C), loose_identity(C)), adj.flat, "flat")


def validate_adjunction(adj):
    j, l, r = adj.root, adj.left, adj.right
    _check_legs(j, l, r)
    E, C, A = j.cod, l.cod, j.dom
    V = E.base
    rep = ValidationReport(adj.name or "adjunction")
    for x, c in product(A.objects, C.objects):
        a, b = C.hom_obj[(l(x), c)], E.hom_obj[(j(x), r(c))]
        if not _typed(V, adj.sharp.get((x, c)), a, b):
            rep.add("adjunction.sharp.typing", x, c)
        if not _typed(V, adj.flat.get((x, c)), b, a):
            rep.add("adjunction.flat.typing", x, c)
    if not rep.ok:
        return rep
    for x, c in product(A.objects, C.objects):
        s, f = adj.sharp[(x, c)], adj.flat[(x, c)]
        if V.compose(s, f) != V.identity(s.dom) or V.compose(f, s) != V.identity(f.dom):
            rep.add("adjunction.inverse", x, c)
    rep.extend(validate_form(sharp_form(adj)), "adjunction.sharp.")
    rep.extend(validate_form(flat_form(adj)), "adjunction.flat.")
    return rep


def identity_adjunction(C):
    """1 -|_1 1 on C."""
    idC = identity_functor(C)
    V = C.base
    tab = {k: V.identity(o) for k, o in C.hom_obj.items()}
    return RelativeAdjunction(idC, idC, idC, tab, tab, name=f"1_{C.name}")


def root_adjunction(j):
    """j -|_j 1_E with identity transposition."""
    E = j.cod
    V = E.base
    tab = {(x, e): V.identity(E.hom_obj[(j(x), e)]) for x in j.dom.objects for e in E.objects}
    return RelativeAdjunction(j, j, identity_functor(E), tab, tab, name=f"{j.name}-|1")


def unit_of(adj):
    l = adj.left
    return {x: adj.root.cod.base.compose(l.cod.ident[l(x)], adj.sharp[(x, l(x))])
            for x in adj.root.dom.objects}


def counit_of(adj):
    """eps[(c, x, c')]: C(c, lx) (x) E(jx, rc') -> C(c, c')."""
    j, l = adj.root, adj.left
    C = l.cod
    V = C.base
    return {(c, x, c2): V.compose(V.tensor_mor(V.identity(C.hom_obj[(c, l(x))]),
                                               adj.flat[(x, c2)]), C.comp[(c, l(x), c2)])
            for c in C.objects for x in j.dom.objects for c2 in C.objects}


def _sharp_from_unit(j, l, r, unit):
    E, C = j.cod, l.cod
    V = E.base
    return {(x, c): V.compose(V.tensor_mor(unit[x], r.hom_map[(l(x), c)]),
                              E.comp[(j(x), r(l(x)), r(c))])
            for x in j.dom.objects for c in C.objects}


def _flat_from_counit(j, l, r, counit):
    C = l.cod
    V = C.base
    return {(x, c): V.compose(V.tensor_mor(C.ident[l(x)], V.identity(j.cod.hom_obj[(j(x), r(c))])),
                              counit[(l(x), x, c)])
            for x in j.dom.objects for c in C.objects}


def counit_form(j, l, r, counit):
    C = l.cod
    idC = identity_functor(C)
    chain = [restrict(loose_identity(C), idC, l), restrict(loose_identity(j.cod), j, r)]
    return Form(Frame(chain, idC, idC, loose_identity(C)), counit, "counit")


class AdjunctionData:
    """One of the four presentations: 'sharp_flat', 'unit_flat',
    'unit_counit' or 'sharp_counit'."""

    KINDS = ("sharp_flat", "unit_flat", "unit_counit", "sharp_counit")

    def __init__(self, kind, root, left, right, sharp=None, flat=None, unit=None,
                 counit=None, name=""):
        if kind not in self.KINDS:
            raise ValueError(f"unknown presentation {kind!r}")
        self.kind = kind
        self.root, self.left, self.right = root, left, right
        self.sharp = sharp
        self.flat = flat
        self.unit = unit
        self.counit = counit
        self.name = name

    def fields(self):
        return {"sharp_flat": ("sharp", "flat"), "unit_flat": ("unit", "flat"),
                "unit_counit": ("unit", "counit"),
                "sharp_counit": ("sharp", "counit")}[self.kind]

    def __eq__(self, other):
        if not isinstance(other, AdjunctionData):
            return NotImplemented
        return (self.kind == other.kind and _same(self.root, other.root)
                and _same(self.left, other.left) and _same(self.right, other.right)
                and all(getattr(self, f) == getattr(other, f) for f in self.fields()))

    __hash__ = None


def validate_presentation(d):
    """The two laws of the presentation, plus form validity where relevant."""
    j, l, r = d.root, d.left, d.right
    _check_legs(j, l, r)
    E, C, A = j.cod, l.cod, j.dom
    V = E.base
    rep = ValidationReport(f"{d.name or 'adjunction'}:{d.kind}")
    I = V.identity
    if d.kind == "sharp_flat":
        return validate_adjunction(RelativeAdjunction(j, l, r, d.sharp, d.flat, d.name))
    for x in A.objects:
        if "unit" in d.fields() and not _typed(V, d.unit.get(x), V.unit,
                                               E.hom_obj[(j(x), r(l(x)))]):
            rep.add(f"{d.kind}.unit.typing", x)
    if "counit" in d.fields():
        for c, x, c2 in product(C.objects, A.objects, C.objects):
            dom = V.tensor_obj(C.hom_obj[(c, l(x))], E.hom_obj[(j(x), r(c2))])
            if not _typed(V, d.counit.get((c, x, c2)), dom, C.hom_obj[(c, c2)]):
                rep.add(f"{d.kind}.counit.typing", c, x, c2)
    for x, c in product(A.objects, C.objects):
        a, b = C.hom_obj[(l(x), c)], E.hom_obj[(j(x), r(c))]
        if "sharp" in d.fields() and not _typed(V, d.sharp.get((x, c)), a, b):
            rep.add(f"{d.kind}.sharp.typing", x, c)
        if "flat" in d.fields() and not _typed(V, d.flat.get((x, c)), b, a):
            rep.add(f"{d.kind}.flat.typing", x, c)
    if not rep.ok:
        return rep
    if d.kind == "unit_flat":
        for x, y in product(A.objects, repeat=2):
            lhs = V.then(j.hom_map[(x, y)], post(E, d.unit[y], j(x), j(y), r(l(y))),
                         d.flat[(x, l(y))])
            if lhs != l.hom_map[(x, y)]:
                rep.add("unit_flat.unit_naturality", x, y)
        for x, c in product(A.objects, C.objects):
            lhs = V.then(d.flat[(x, c)], r.hom_map[(l(x), c)],
                         pre(E, d.unit[x], j(x), r(l(x)), r(c)))
            if lhs != I(E.hom_obj[(j(x), r(c))]):
                rep.add("unit_flat.inverse", x, c)
        return rep
    rep.extend(validate_form(counit_form(j, l, r, d.counit)), f"{d.kind}.counit.")
    if not rep.ok:
        return rep
    if d.kind == "unit_counit":
        for c, x in product(C.objects, A.objects):
            h = C.hom_obj[(c, l(x))]
            lhs = V.compose(V.tensor_mor(I(h), d.unit[x]), d.counit[(c, x, l(x))])
            if lhs != I(h):
                rep.add("unit_counit.left_triangle", c, x)
        flat = _flat_from_counit(j, l, r, d.counit)
        for x, c in product(A.objects, C.objects):
            lhs = V.then(flat[(x, c)], r.hom_map[(l(x), c)],
                         pre(E, d.unit[x], j(x), r(l(x)), r(c)))
            if lhs != I(E.hom_obj[(j(x), r(c))]):
                rep.add("unit_counit.right_triangle", x, c)
        return rep
    for c, x, c2 in product(C.objects, A.objects, C.objects):
        lhs = V.compose(V.tensor_mor(I(C.hom_obj[(c, l(x))]), d.sharp[(x, c2)]),
                        d.counit[(c, x, c2)])
        if lhs != C.comp[(c, l(x), c2)]:
            rep.add("sharp_counit.counit", c, x, c2)
    flat = _flat_from_counit(j, l, r, d.counit)
    for x, c in product(A.objects, C.objects):
        if V.compose(flat[(x, c)], d.sharp[(x, c)]) != I(E.hom_obj[(j(x), r(c))]):
            rep.add("sharp_counit.inverse", x, c)
    return rep


def from_presentation(d):
    """Assemble the hom-isomorphism presentation, raising LawViolation if the
    given presentation fails its own laws."""
    validate_presentation(d).raise_if_failed()
    j, l, r = d.root, d.left, d.right
    sharp = d.sharp if "sharp" in d.fields() else _sharp_from_unit(j, l, r, d.unit)
    flat = d.flat if "flat" in d.fields() else _flat_from_counit(j, l, r, d.counit)
    adj = RelativeAdjunction(j, l, r, sharp, flat, d.name)
    validate_adjunction(adj).raise_if_failed()
    return adj


def to_presentation(adj, kind):
    parts = {"sharp": adj.sharp, "flat": adj.flat, "unit": unit_of(adj),
             "counit": counit_of(adj)}
    d = AdjunctionData(kind, adj.root, adj.left, adj.right, name=adj.name)
    for f in d.fields():
        setattr(d, f, dict(parts[f]))
    return d


def convert(d, kind):
    return to_presentation(from_presentation(d), kind)


def adjunction_forms(adj):
    """Unit, counit and both transpositions as forms."""
    j, l, r = adj.root, adj.left, adj.right
    E = j.cod
    unit = Form(Frame([], j, compose_functors(l, r), loose_identity(E)),
                {(x,): m for x, m in unit_of(adj).items()}, "unit")
    return {"unit": unit, "counit": counit_form(j, l, r, counit_of(adj)),
            "sharp": sharp_form(adj), "flat": flat_form(adj)}


def induced_monad(adj):
    j, l, r = adj.root, adj.left, adj.right
    A = j.dom
    V = j.cod.base
    t = tuple(r(l(x)) for x in A.objects)
    ext = {(x, y): V.compose(adj.flat[(x, l(y))], r.hom_map[(l(x), l(y))])
           for x, y in product(A.objects, repeat=2)}
    return RelativeMonad(j, t, unit_of(adj), ext, name=f"induced({adj.name})")


def is_resolution(adj, T):
    return induced_monad(adj) == T


def left_adjoint_comparison(adj1, adj2):
    """For l -|_j r and l' -|_j r (same r), the components C(lx, l'x) and back;
    returns the pair of families and whether they are mutually inverse."""
    if not _same(adj1.right, adj2.right) or not _same(adj1.root, adj2.root):
        raise FrameMismatch("adjunctions must share root and right adjoint")
    l, l2 = adj1.left, adj2.left
    C = l.cod
    V = C.base
    u1, u2 = unit_of(adj1), unit_of(adj2)
    fwd = {x: V.compose(u2[x], adj1.flat[(x, l2(x))]) for x in adj1.root.dom.objects}
    bwd = {x: V.compose(u1[x], adj2.flat[(x, l(x))]) for x in adj1.root.dom.objects}
    ok = all(V.compose(V.tensor_mor(fwd[x], bwd[x]), C.comp[(l(x), l2(x), l(x))]) == C.ident[l(x)]
             and V.compose(V.tensor_mor(bwd[x], fwd[x]), C.comp[(l2(x), l(x), l2(x))])
             == C.ident[l2(x)] for x in fwd)
    return fwd, bwd, ok


# morphisms of adjunctions


class LeftMorphism:
    """functor: apex -> apex' with right = functor ; right' and
    cell[x]: I -> C'(l'x, functor(lx))."""

    def __init__(self, src, tgt, functor, cell):
        self.src = src
        self.tgt = tgt
        self.functor = functor
        self.cell = dict(cell)

    @property
    def strict(self):
        c = self.functor
        C2 = self.tgt.apex
        return (compose_functors(self.src.left, c) == self.tgt.left
                and all(self.cell[x] == C2.ident[self.tgt.left(x)] for x in self.cell))


class RightMorphism:
    """functor: apex -> apex' with left ; functor = left' and
    cell[c]: I -> E(rc, r'(functor c))."""

    def __init__(self, src, tgt, functor, cell):
        self.src = src
        self.tgt = tgt
        self.functor = functor
        self.cell = dict(cell)

    @property
    def strict(self):
        E = self.src.root.cod
        return (compose_functors(self.functor, self.tgt.right) == self.src.right
                and all(self.cell[c] == E.ident[self.src.right(c)] for c in self.cell))


def validate_left_morphism(m):
    a, b, c = m.src, m.tgt, m.functor
    if not _same(a.root, b.root):
        raise FrameMismatch("adjunctions have different roots")
    C, C2 = a.apex, b.apex
    V = C.base
    l, l2 = a.left, b.left
    rep = ValidationReport("left morphism")
    if compose_functors(c, b.right) != a.right:
        rep.add("left_morphism.right_leg")
        return rep
    cell = Form(Frame([], l2, compose_functors(l, c), loose_identity(C2)),
                {(x,): v for x, v in m.cell.items()}, "cell")
    rep.extend(validate_form(cell), "left_morphism.cell.")
    if not rep.ok:
        return rep
    for x, y in product(a.root.dom.objects, C.objects):
        rhs = V.then(c.hom_map[(l(x), y)],
                     pre(C2, m.cell[x], l2(x), c(l(x)), c(y)), b.sharp[(x, c(y))])
        if rhs != a.sharp[(x, y)]:
            rep.add("left_morphism.transposition", x, y)
    return rep


def validate_right_morphism(m):
    a, b, c = m.src, m.tgt, m.functor
    if not _same(a.root, b.root):
        raise FrameMismatch("adjunctions have different roots")
    C = a.apex
    E = a.root.cod
    V = C.base
    r, r2 = a.right, b.right
    rep = ValidationReport("right morphism")
    if compose_functors(a.left, c) != b.left:
        rep.add("right_morphism.left_leg")
        return rep
    cell = Form(Frame([], r, compose_functors(c, r2), loose_identity(E)),
                {(y,): v for y, v in m.cell.items()}, "cell")
    rep.extend(validate_form(cell), "right_morphism.cell.")
    if not rep.ok:
        return rep
    j, l = a.root, a.left
    for x, y in product(j.dom.objects, C.objects):
        lhs = V.compose(a.sharp[(x, y)], post(E, m.cell[y], j(x), r(y), r2(c(y))))
        rhs = V.compose(c.hom_map[(l(x), y)], b.sharp[(x, c(y))])
        if lhs != rhs:
            rep.add("right_morphism.transposition", x, y)
    return rep


def strict_morphism(src, tgt, functor):
    return LeftMorphism(src, tgt, functor,
                        {x: tgt.apex.ident[tgt.left(x)] for x in src.root.dom.objects})


def strict_morphisms(src, tgt, budget=None):
    """Every functor between the apices forming a strict morphism."""
    out = []
    for c in enumerate_functors(src.apex, tgt.apex, budget):
        if compose_functors(src.left, c) != tgt.left:
            continue
        m = strict_morphism(src, tgt, c)
        if validate_left_morphism(m).ok:
            out.append(m)
    return out


def right_morphism_cells(src, tgt, functor, budget=None):
    """Every 2-cell making functor a right morphism src -> tgt."""
    E = src.root.cod
    V = E.base
    C = src.apex
    budget = as_budget(budget)
    spaces = [list(V.hom(V.unit, E.hom_obj[(src.right(c), tgt.right(functor(c)))]))
              for c in C.objects]
    _spend_product(budget, spaces, "right morphism cells")
    out = []
    for choice in product(*spaces):
        m = RightMorphism(src, tgt, functor, dict(zip(C.objects, choice)))
        if validate_right_morphism(m).ok:
            out.append(m)
    return out


# composition and pushforward


def compose_adjunctions(inner, outer, lp):
    """inner: l -|_j r with apex C; outer: lp;j -|_j' r'.

    Returns the composite lp;l -|_j' r;r' and the left morphism (r, eta)
    from it to the outer adjunction.
    """
    j = inner.root
    if not _same(compose_functors(lp, j), outer.left):
        raise FrameMismatch("outer left adjoint is not lp ; j")
    l, r, r2, j2 = inner.left, inner.right, outer.right, outer.root
    V = j.cod.base
    C = inner.apex
    A2 = j2.dom
    left = compose_functors(lp, l)
    right = compose_functors(r, r2)
    sharp = {(x, c): V.compose(inner.sharp[(lp(x), c)], outer.sharp[(x, r(c))])
             for x in A2.objects for c in C.objects}
    flat = {(x, c): V.compose(outer.flat[(x, r(c))], inner.flat[(lp(x), c)])
            for x in A2.objects for c in C.objects}
    adj = RelativeAdjunction(j2, left, right, sharp, flat,
                             name=f"{inner.name}*{outer.name}")
    eta = unit_of(inner)
    lm = LeftMorphism(adj, outer, r, {x: eta[lp(x)] for x in A2.objects})
    return adj, lm


def pushforward_monad(outer, T, lp):
    """The j'-monad r' . t . lp induced by an outer adjunction lp;j -|_j' r'."""
    j = T.root
    if not _same(compose_functors(lp, j), outer.left):
        raise FrameMismatch("outer left adjoint is not lp ; j")
    r2, j2 = outer.right, outer.root
    V = j.cod.base
    A2 = j2.dom
    t = T.obj
    obj = tuple(r2(t[lp(a)]) for a in A2.objects)
    unit = {a: V.compose(T.unit[lp(a)], outer.sharp[(a, t[lp(a)])]) for a in A2.objects}
    ext = {(a, b): V.then(outer.flat[(a, t[lp(b)])], T.ext[(lp(a), lp(b))],
                          r2.hom_map[(t[lp(a)], t[lp(b)])])
           for a, b in product(A2.objects, repeat=2)}
    return RelativeMonad(j2, obj, unit, ext, name=f"push({T.name})")
