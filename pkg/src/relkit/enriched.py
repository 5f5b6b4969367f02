"""Categories, functors, distributors and forms enriched in a finite base.

Conventions: composition is diagrammatic, ``comp[(x, y, z)]`` has domain
C(x,y) (x) C(y,z).  A distributor p has components p(x, y) with x in
``p.left`` and y in ``p.right``; ``lact`` is the action of ``left`` from the
left and ``ract`` the action of ``right`` from the right.  A form on the
chain p1, ..., pn has components p1(x0,x1) (x) ... (x) pn(x_{n-1},x_n) ->
q(f x0, g xn).
"""
from itertools import product
from math import prod

from .errors import (EnumerationBudgetExceeded, FrameMismatch, MalformedTables,
                     ValidationReport, as_budget)
from .vkernel import Mor


def _same(a, b):
    return a is b or a == b


class EnrichedCategory:
    def __init__(self, base, objects, hom_obj, ident, comp, name=""):
        self.base = base
        if isinstance(objects, int):
            objects = [str(i) for i in range(objects)]
        self.names = list(objects)
        self.n = len(self.names)
        self.hom_obj = dict(hom_obj)
        self.ident = dict(ident)
        self.comp = dict(comp)
        self.name = name

    @property
    def objects(self):
        return range(self.n)

    def hom(self, x, y):
        return self.hom_obj[(x, y)]

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, EnrichedCategory):
            return NotImplemented
        return (self.base == other.base and self.n == other.n
                and self.hom_obj == other.hom_obj and self.ident == other.ident
                and self.comp == other.comp)

    __hash__ = None

    def __repr__(self):
        return f"<EnrichedCategory {self.name or '?'} |{self.n}| over {self.base.name}>"


class EnrichedFunctor:
    def __init__(self, dom, cod, obj_map, hom_map, name=""):
        self.dom = dom
        self.cod = cod
        self.obj_map = tuple(obj_map)
        self.hom_map = dict(hom_map)
        self.name = name

    def __call__(self, x):
        return self.obj_map[x]

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, EnrichedFunctor):
            return NotImplemented
        return (_same(self.dom, other.dom) and _same(self.cod, other.cod)
                and self.obj_map == other.obj_map and self.hom_map == other.hom_map)

    __hash__ = None

    def __repr__(self):
        return f"<EnrichedFunctor {self.name or '?'} {self.obj_map}>"


class Distributor:
    def __init__(self, left, right, obj, lact, ract, name="", origin=None):
        self.left = left
        self.right = right
        self.obj = dict(obj)
        self.lact = dict(lact)
        self.ract = dict(ract)
        self.name = name
        self.origin = origin

    @property
    def base(self):
        return self.left.base

    def __call__(self, x, y):
        return self.obj[(x, y)]

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Distributor):
            return NotImplemented
        return (_same(self.left, other.left) and _same(self.right, other.right)
                and self.obj == other.obj and self.lact == other.lact
                and self.ract == other.ract)

    __hash__ = None

    def __repr__(self):
        return f"<Distributor {self.name or '?'}>"


class Frame:
    """Chain of distributors with boundary functors and a codomain."""

    def __init__(self, chain, f, g, q):
        self.chain = tuple(chain)
        self.f = f
        self.g = g
        self.q = q

    @property
    def n(self):
        return len(self.chain)

    def categories(self):
        if not self.chain:
            return [self.f.dom]
        return [self.chain[0].left] + [p.right for p in self.chain]

    def check(self):
        cats = self.categories()
        if not _same(self.f.dom, cats[0]):
            raise FrameMismatch("left boundary does not start at the chain")
        if not _same(self.g.dom, cats[-1]):
            raise FrameMismatch("right boundary does not start at the chain end")
        for p, p2 in zip(self.chain, self.chain[1:]):
            if not _same(p.right, p2.left):
                raise FrameMismatch("chain endpoints do not match")
        if not _same(self.f.cod, self.q.left) or not _same(self.g.cod, self.q.right):
            raise FrameMismatch("boundaries do not land in the codomain distributor")
        return self

    def tuples(self):
        return product(*(c.objects for c in self.categories()))

    def dom_obj(self, xs):
        V = self.q.base
        return V.tensor_objs([p.obj[(xs[i], xs[i + 1])] for i, p in enumerate(self.chain)])

    def cod_obj(self, xs):
        return self.q.obj[(self.f(xs[0]), self.g(xs[-1]))]

    def __eq__(self, other):
        if not isinstance(other, Frame):
            return NotImplemented
        return (len(self.chain) == len(other.chain)
                and all(_same(a, b) for a, b in zip(self.chain, other.chain))
                and _same(self.f, other.f) and _same(self.g, other.g)
                and _same(self.q, other.q))

    __hash__ = None


class Form:
    def __init__(self, frame, comps, name=""):
        self.frame = frame
        self.comps = dict(comps)
        self.name = name

    def __getitem__(self, xs):
        return self.comps[tuple(xs)]

    @property
    def base(self):
        return self.frame.q.base

    def __eq__(self, other):
        if not isinstance(other, Form):
            return NotImplemented
        return self.frame == other.frame and self.comps == other.comps

    __hash__ = None

    def __repr__(self):
        return f"<Form {self.name or '?'} n={self.frame.n}>"


# constructors


def identity_functor(C):
    return EnrichedFunctor(C, C, tuple(C.objects),
                           {(x, y): C.base.identity(C.hom_obj[(x, y)])
                            for x in C.objects for y in C.objects},
                           name=f"1_{C.name}")


def compose_functors(f, g):
    """f then g."""
    if not _same(f.cod, g.dom):
        raise FrameMismatch("functors are not composable")
    V = f.dom.base
    return EnrichedFunctor(
        f.dom, g.cod, tuple(g.obj_map[f.obj_map[x]] for x in f.dom.objects),
        {(x, y): V.compose(m, g.hom_map[(f.obj_map[x], f.obj_map[y])])
         for (x, y), m in f.hom_map.items()},
        name=f"{f.name};{g.name}")


def preorder_category(V, n, le, name="", names=None):
    """Boolean-enriched category of a preorder given by a relation."""
    hom, ident, comp = {}, {}, {}
    for x in range(n):
        for y in range(n):
            hom[(x, y)] = 1 if le(x, y) else 0
    for x in range(n):
        ident[x] = V.arrow(1, hom[(x, x)])
    for x, y, z in product(range(n), repeat=3):
        comp[(x, y, z)] = V.arrow(min(hom[(x, y)], hom[(y, z)]), hom[(x, z)]) or \
            _bad_arrow(min(hom[(x, y)], hom[(y, z)]), hom[(x, z)])
    return EnrichedCategory(V, names or n, hom, ident, comp, name)


def _bad_arrow(a, b):
    return Mor(a, b, 0)


def monotone_functor(C, D, obj_map, name=""):
    V = C.base
    hom = {}
    for x in C.objects:
        for y in C.objects:
            a, b = C.hom_obj[(x, y)], D.hom_obj[(obj_map[x], obj_map[y])]
            hom[(x, y)] = V.arrow(a, b) or _bad_arrow(a, b)
    return EnrichedFunctor(C, D, obj_map, hom, name)


def loose_identity(C):
    return Distributor(C, C, C.hom_obj,
                       {(a, x, y): C.comp[(a, x, y)] for a in C.objects
                        for x in C.objects for y in C.objects},
                       {(x, y, b): C.comp[(x, y, b)] for x in C.objects
                        for y in C.objects for b in C.objects},
                       name=f"{C.name}(1,1)", origin=("loose_identity", C))


def restrict(q, f, g):
    """q(f, g): components q(f x, g y), actions precomposed with f and g."""
    if not _same(f.cod, q.left) or not _same(g.cod, q.right):
        raise FrameMismatch("restriction functors do not land in the distributor's sides")
    V = q.base
    X, Y = f.dom, g.dom
    fo, go = f.obj_map, g.obj_map
    obj = {(x, y): q.obj[(fo[x], go[y])] for x in X.objects for y in Y.objects}
    lact, ract = {}, {}
    for a, x, y in product(X.objects, X.objects, Y.objects):
        lact[(a, x, y)] = V.compose(
            V.tensor_mor(f.hom_map[(a, x)], V.identity(obj[(x, y)])),
            q.lact[(fo[a], fo[x], go[y])])
    for x, y, b in product(X.objects, Y.objects, Y.objects):
        ract[(x, y, b)] = V.compose(
            V.tensor_mor(V.identity(obj[(x, y)]), g.hom_map[(y, b)]),
            q.ract[(fo[x], go[y], go[b])])
    return Distributor(X, Y, obj, lact, ract,
                       name=f"{q.name}({f.name},{g.name})", origin=("restrict", q, f, g))


def companion(f):
    """D(1, f) for f: C -> D."""
    D = f.cod
    return restrict(loose_identity(D), identity_functor(D), f)


def conjoint(f):
    """D(f, 1) for f: C -> D."""
    D = f.cod
    return restrict(loose_identity(D), f, identity_functor(D))


def cartesian_form(r):
    """The identity-component form r => q exhibiting r = q(f, g)."""
    if not r.origin or r.origin[0] != "restrict":
        raise FrameMismatch("distributor was not built by restriction")
    _, q, f, g = r.origin
    V = q.base
    fr = Frame([r], f, g, q)
    return Form(fr, {(x, y): V.identity(r.obj[(x, y)])
                     for x in r.left.objects for y in r.right.objects}, name="cart")


def identity_form(p):
    V = p.base
    fr = Frame([p], identity_functor(p.left), identity_functor(p.right), p)
    return Form(fr, {(x, y): V.identity(o) for (x, y), o in p.obj.items()}, name="1")


def tight_identity_form(h):
    """The nullary identity form on a functor h: C -> D."""
    D = h.cod
    fr = Frame([], h, h, loose_identity(D))
    return Form(fr, {(x,): D.ident[h(x)] for x in h.dom.objects}, name="1")


def left_action_form(p):
    """C(1,1), p => p given by the left action."""
    fr = Frame([loose_identity(p.left), p], identity_functor(p.left),
               identity_functor(p.right), p)
    return Form(fr, {(a, x, y): p.lact[(a, x, y)] for a in p.left.objects
                     for x in p.left.objects for y in p.right.objects})


def right_action_form(p):
    """p, D(1,1) => p given by the right action."""
    fr = Frame([p, loose_identity(p.right)], identity_functor(p.left),
               identity_functor(p.right), p)
    return Form(fr, {(x, y, b): p.ract[(x, y, b)] for x in p.left.objects
                     for y in p.right.objects for b in p.right.objects})


def composition_form(C):
    """C(1,1), C(1,1) => C(1,1) given by composition."""
    L = loose_identity(C)
    fr = Frame([L, L], identity_functor(C), identity_functor(C), L)
    return Form(fr, dict(C.comp))


def hom_form(h):
    """C(1,1) => D(h, h) given by the hom action of h."""
    D = h.cod
    fr = Frame([loose_identity(h.dom)], h, h, loose_identity(D))
    return Form(fr, dict(h.hom_map))


def form_from(chain, f, g, q, fn, name=""):
    """Tabulate a form from a component function on object tuples."""
    fr = Frame(chain, f, g, q).check()
    return Form(fr, {xs: fn(*xs) for xs in fr.tuples()}, name)


# pasting


def paste(upper, lower):
    """Vertical composite: the row ``upper`` feeds the chain of ``lower``."""
    upper = list(upper)
    if len(upper) != lower.frame.n:
        raise FrameMismatch("upper row length differs from the lower chain")
    if not upper:
        return lower
    for phi, p in zip(upper, lower.frame.chain):
        if not _same(phi.frame.q, p):
            raise FrameMismatch("upper codomain does not match the lower chain")
    for a, b in zip(upper, upper[1:]):
        if not _same(a.frame.g, b.frame.f):
            raise FrameMismatch("adjacent upper forms disagree on their shared boundary")
    V = lower.base
    chain = [p for phi in upper for p in phi.frame.chain]
    f = compose_functors(upper[0].frame.f, lower.frame.f)
    g = compose_functors(upper[-1].frame.g, lower.frame.g)
    fr = Frame(chain, f, g, lower.frame.q)
    comps = {}
    for xs in fr.tuples():
        parts, ys = [], [upper[0].frame.f(xs[0])]
        s = 0
        for phi in upper:
            k = phi.frame.n
            parts.append(phi.comps[tuple(xs[s:s + k + 1])])
            ys.append(phi.frame.g(xs[s + k]))
            s += k
        comps[xs] = V.compose(V.tensor_mors(parts), lower.comps[tuple(ys)])
    return Form(fr, comps)


def form_equal(phi, psi):
    if phi.frame != psi.frame:
        raise FrameMismatch("forms have different frames")
    return phi.comps == psi.comps


# validation


def _check_mor(rep, law, m, dom, cod, base=None, *w):
    ok = m is not None and m.dom == dom and m.cod == cod
    if ok and base is not None:
        try:
            base.check_mor(m)
        except MalformedTables:
            ok = False
    if not ok:
        rep.add(law + ".typing", *w)
    return ok


def _get(table, key, what):
    try:
        return table[key]
    except KeyError:
        raise MalformedTables(f"{what} missing entry {key}")


def validate_category(C):
    V = C.base
    rep = ValidationReport(C.name or "category")
    obs = list(C.objects)
    for x, y in product(obs, repeat=2):
        o = _get(C.hom_obj, (x, y), "hom_obj")
        if o not in V.objects():
            raise MalformedTables(f"hom object {o} not in base")
    for x in obs:
        _check_mor(rep, "ident", _get(C.ident, x, "ident"), V.unit, C.hom_obj[(x, x)], V, x)
    typed = True
    for x, y, z in product(obs, repeat=3):
        m = _get(C.comp, (x, y, z), "comp")
        dom = V.tensor_obj(C.hom_obj[(x, y)], C.hom_obj[(y, z)])
        typed &= _check_mor(rep, "comp", m, dom, C.hom_obj[(x, z)], V, x, y, z)
    if not rep.ok or not typed:
        return rep
    for x, y in product(obs, repeat=2):
        hxy = V.identity(C.hom_obj[(x, y)])
        if V.compose(V.tensor_mor(C.ident[x], hxy), C.comp[(x, x, y)]) != hxy:
            rep.add("category.left_unit", x, y)
        if V.compose(V.tensor_mor(hxy, C.ident[y]), C.comp[(x, y, y)]) != hxy:
            rep.add("category.right_unit", x, y)
    for w, x, y, z in product(obs, repeat=4):
        a = V.compose(V.tensor_mor(C.comp[(w, x, y)], V.identity(C.hom_obj[(y, z)])),
                      C.comp[(w, y, z)])
        b = V.compose(V.tensor_mor(V.identity(C.hom_obj[(w, x)]), C.comp[(x, y, z)]),
                      C.comp[(w, x, z)])
        if a != b:
            rep.add("category.associativity", w, x, y, z)
    return rep


def validate_functor(F):
    C, D = F.dom, F.cod
    V = C.base
    rep = ValidationReport(F.name or "functor")
    if len(F.obj_map) != C.n or any(not 0 <= v < D.n for v in F.obj_map):
        raise MalformedTables("object map out of range")
    for x, y in product(C.objects, repeat=2):
        _check_mor(rep, "functor.hom", _get(F.hom_map, (x, y), "hom_map"),
                   C.hom_obj[(x, y)], D.hom_obj[(F(x), F(y))], V, x, y)
    if not rep.ok:
        return rep
    for x in C.objects:
        if V.compose(C.ident[x], F.hom_map[(x, x)]) != D.ident[F(x)]:
            rep.add("functor.identity", x)
    for x, y, z in product(C.objects, repeat=3):
        a = V.compose(C.comp[(x, y, z)], F.hom_map[(x, z)])
        b = V.compose(V.tensor_mor(F.hom_map[(x, y)], F.hom_map[(y, z)]),
                      D.comp[(F(x), F(y), F(z))])
        if a != b:
            rep.add("functor.composition", x, y, z)
    return rep


def validate_distributor(p):
    C, D = p.left, p.right
    V = p.base
    rep = ValidationReport(p.name or "distributor")
    for x, y in product(C.objects, D.objects):
        if _get(p.obj, (x, y), "obj") not in V.objects():
            raise MalformedTables("component object not in base")
    for a, x, y in product(C.objects, C.objects, D.objects):
        _check_mor(rep, "lact", _get(p.lact, (a, x, y), "lact"),
                   V.tensor_obj(C.hom_obj[(a, x)], p.obj[(x, y)]), p.obj[(a, y)], V, a, x, y)
    for x, y, b in product(C.objects, D.objects, D.objects):
        _check_mor(rep, "ract", _get(p.ract, (x, y, b), "ract"),
                   V.tensor_obj(p.obj[(x, y)], D.hom_obj[(y, b)]), p.obj[(x, b)], V, x, y, b)
    if not rep.ok:
        return rep
    I = V.identity
    for x, y in product(C.objects, D.objects):
        pid = I(p.obj[(x, y)])
        if V.compose(V.tensor_mor(C.ident[x], pid), p.lact[(x, x, y)]) != pid:
            rep.add("distributor.left_unit", x, y)
        if V.compose(V.tensor_mor(pid, D.ident[y]), p.ract[(x, y, y)]) != pid:
            rep.add("distributor.right_unit", x, y)
    for a2, a, x, y in product(C.objects, C.objects, C.objects, D.objects):
        l = V.compose(V.tensor_mor(C.comp[(a2, a, x)], I(p.obj[(x, y)])), p.lact[(a2, x, y)])
        r = V.compose(V.tensor_mor(I(C.hom_obj[(a2, a)]), p.lact[(a, x, y)]), p.lact[(a2, a, y)])
        if l != r:
            rep.add("distributor.left_associativity", a2, a, x, y)
    for x, y, b, b2 in product(C.objects, D.objects, D.objects, D.objects):
        l = V.compose(V.tensor_mor(p.ract[(x, y, b)], I(D.hom_obj[(b, b2)])), p.ract[(x, b, b2)])
        r = V.compose(V.tensor_mor(I(p.obj[(x, y)]), D.comp[(y, b, b2)]), p.ract[(x, y, b2)])
        if l != r:
            rep.add("distributor.right_associativity", x, y, b, b2)
    for a, x, y, b in product(C.objects, C.objects, D.objects, D.objects):
        l = V.compose(V.tensor_mor(p.lact[(a, x, y)], I(D.hom_obj[(y, b)])), p.ract[(a, y, b)])
        r = V.compose(V.tensor_mor(I(C.hom_obj[(a, x)]), p.ract[(x, y, b)]), p.lact[(a, x, b)])
        if l != r:
            rep.add("distributor.compatibility", a, x, y, b)
    return rep


class _Stop(Exception):
    pass


class _FirstReport(ValidationReport):
    def add(self, *a, **k):
        super().add(*a, **k)
        raise _Stop


def validate_form(phi, first=False):
    """Check the components of a form and its naturality squares.

    With ``first`` the check stops at the first violation.
    """
    rep = (_FirstReport if first else ValidationReport)(phi.name or "form")
    try:
        _validate_form(phi, rep)
    except _Stop:
        pass
    return rep


def _validate_form(phi, rep):
    fr = phi.frame.check()
    V = phi.base
    tuples = list(fr.tuples())
    for xs in tuples:
        _check_mor(rep, "form.component", _get(phi.comps, xs, "components"),
                   fr.dom_obj(xs), fr.cod_obj(xs), V, *xs)
    if not rep.ok or V.thin:
        # parallel arrows of a thin base agree, so naturality is automatic
        return rep
    f, g, q, chain = fr.f, fr.g, fr.q, fr.chain
    I = V.identity
    if not chain:
        C0 = f.dom
        for x, y in product(C0.objects, repeat=2):
            a = V.compose(V.tensor_mor(phi.comps[(x,)], g.hom_map[(x, y)]),
                          q.ract[(f(x), g(x), g(y))])
            b = V.compose(V.tensor_mor(f.hom_map[(x, y)], phi.comps[(y,)]),
                          q.lact[(f(x), f(y), g(y))])
            if a != b:
                rep.add("form.wedge", x, y)
        return rep
    cats = fr.categories()
    n = len(chain)

    def comps_of(xs):
        return [chain[i].obj[(xs[i], xs[i + 1])] for i in range(n)]

    for xs in tuples:
        objs = comps_of(xs)
        for c in cats[0].objects:
            p1 = chain[0]
            a = V.compose(
                V.tensor_mors([p1.lact[(c, xs[0], xs[1])]] + [I(o) for o in objs[1:]]),
                phi.comps[(c,) + xs[1:]])
            b = V.compose(V.tensor_mor(f.hom_map[(c, xs[0])], phi.comps[xs]),
                          q.lact[(f(c), f(xs[0]), g(xs[-1]))])
            if a != b:
                rep.add("form.left_naturality", c, *xs)
        for c in cats[-1].objects:
            pn = chain[-1]
            a = V.compose(
                V.tensor_mors([I(o) for o in objs[:-1]] + [pn.ract[(xs[-2], xs[-1], c)]]),
                phi.comps[xs[:-1] + (c,)])
            b = V.compose(V.tensor_mor(phi.comps[xs], g.hom_map[(xs[-1], c)]),
                          q.ract[(f(xs[0]), g(xs[-1]), g(c))])
            if a != b:
                rep.add("form.right_naturality", *xs, c)
        for i in range(1, n):
            for c in cats[i].objects:
                pi, pj = chain[i - 1], chain[i]
                before = [I(o) for o in objs[:i - 1]]
                after = [I(o) for o in objs[i + 1:]]
                ys = xs[:i] + (c,) + xs[i + 1:]
                a = V.compose(
                    V.tensor_mors(before + [pi.ract[(xs[i - 1], xs[i], c)],
                                            I(pj.obj[(c, xs[i + 1])])] + after),
                    phi.comps[ys])
                b = V.compose(
                    V.tensor_mors(before + [I(objs[i - 1]), pj.lact[(xs[i], c, xs[i + 1])]]
                                  + after),
                    phi.comps[xs])
                if a != b:
                    rep.add("form.internal_naturality", i, *xs, c)
    return rep


def candidate_count(frame, fixed=None):
    fixed = fixed or {}
    return prod(1 if xs in fixed else
                 frame.q.base.hom_size(frame.dom_obj(xs), frame.cod_obj(xs))
                 for xs in frame.tuples())


def enumerate_forms(frame, cap=10**6, fixed=None):
    """All forms of a frame, by brute force over component families.

    ``fixed`` pins the components at some object tuples.
    """
    frame.check()
    V = frame.q.base
    V.require("morphism_enumeration")
    fixed = fixed or {}
    budget = as_budget(cap)
    tuples = list(frame.tuples())
    ends = [None if xs in fixed else (frame.dom_obj(xs), frame.cod_obj(xs)) for xs in tuples]
    count = prod(1 if e is None else V.hom_size(*e) for e in ends)
    if count == 0:
        return []
    if count > budget.limit:
        raise EnumerationBudgetExceeded(count, budget.limit, "form candidates")
    budget.spend(count, "form candidates")
    spaces = [[fixed[xs]] if e is None else list(V.hom(*e)) for xs, e in zip(tuples, ends)]
    out = []
    for choice in product(*spaces):
        phi = Form(frame, dict(zip(tuples, choice)))
        if V.thin or validate_form(phi, first=True).ok:
            out.append(phi)
    return out


def enumerate_functors(C, D, cap=10**6, obj_maps=None):
    """All functors C -> D, optionally restricted to the given object maps."""
    V = C.base
    V.require("morphism_enumeration")
    budget = as_budget(cap)
    if obj_maps is None:
        obj_maps = product(D.objects, repeat=C.n)
    keys = list(product(C.objects, repeat=2))
    out = []
    for om in obj_maps:
        spaces = [list(V.hom(C.hom_obj[(x, y)], D.hom_obj[(om[x], om[y])])) for x, y in keys]
        budget.spend(prod(len(s) for s in spaces), "functor candidates")
        for choice in product(*spaces):
            F = EnrichedFunctor(C, D, om, dict(zip(keys, choice)))
            if validate_functor(F).ok:
                out.append(F)
    return out
