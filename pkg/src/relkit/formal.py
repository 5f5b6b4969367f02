"""Right lifts, extensions, coends and the checkers built on them.

Objects of natural transformations and coends are computed by one of three
routes chosen from the base: order-theoretically for the Boolean base,
elementwise for set-like bases (finite sets and their reversal), and by
brute-force search over enumerated morphisms otherwise.
"""
from itertools import product

from .enriched import (Distributor, Form, Frame, _same, conjoint,
                       identity_functor, loose_identity, restrict,
                       tight_identity_form)
from .errors import CapabilityMissing, FrameMismatch, as_budget
from .vkernel import Mor


class Presheaf:
    """z -> p(z) with a left action Z(z', z) (x) p(z) -> p(z')."""

    def __init__(self, cat, obj, act):
        self.cat = cat
        self.obj = dict(obj)
        self.act = dict(act)


def column(p, y):
    """The presheaf z -> p(z, y) on p.left."""
    Z = p.left
    return Presheaf(Z, {z: p.obj[(z, y)] for z in Z.objects},
                    {(z2, z): p.lact[(z2, z, y)] for z2 in Z.objects for z in Z.objects})


def _natural(V, P, Q, fam, v):
    """Is fam[z]: P(z) (x) v -> Q(z) natural in z?"""
    idv = V.identity(v)
    for z2 in P.cat.objects:
        for z in P.cat.objects:
            a = V.compose(V.tensor_mor(P.act[(z2, z)], idv), fam[z2])
            b = V.compose(V.tensor_mor(V.identity(P.cat.hom_obj[(z2, z)]), fam[z]),
                          Q.act[(z2, z)])
            if a != b:
                return False
    return True


class NatObject:
    """The object of natural transformations with its universal family."""

    def __init__(self, V, P, Q, value, counit, route, families=None):
        self.V = V
        self.P, self.Q = P, Q
        self.value = value
        self.counit = counit
        self.route = route
        self._families = families
        if families is not None:
            self._index = {f: i for i, f in enumerate(families)}

    def factor(self, fam, v):
        """The unique k: v -> value with (1 (x) k) ; counit = fam."""
        V = self.V
        zs = list(self.P.cat.objects)
        if self.route == "thin":
            return V.arrow(v, self.value)
        if self.route == "setlike":
            out = []
            for k in range(v):
                key = tuple(tuple(fam[z].data[V.pair(self.P.obj[z], v, i, k)]
                                  for i in range(self.P.obj[z])) for z in zs)
                if key not in self._index:
                    return None
                out.append(self._index[key])
            return V.check_mor(Mor(v, self.value, tuple(out)))
        found = None
        for k in V.hom(v, self.value):
            if all(V.compose(V.tensor_mor(V.identity(self.P.obj[z]), k), self.counit[z])
                   == fam[z] for z in zs):
                if found is not None:
                    return None
                found = k
        return found


def nat_object(Z, P, Q, budget=None):
    V = Z.base
    V.require("nat_objects")
    zs = list(Z.objects)
    if V.thin:
        value = 1 if all(P.obj[z] <= Q.obj[z] for z in zs) else 0
        counit = {z: V.arrow(min(P.obj[z], value), Q.obj[z]) for z in zs}
        return NatObject(V, P, Q, value, counit, "thin")
    budget = as_budget(budget)
    if V.setlike:
        spaces = [list(V.hom(P.obj[z], Q.obj[z])) for z in zs]
        total = 1
        for s in spaces:
            total *= len(s)
        budget.spend(total, "natural families")
        families = []
        for choice in product(*spaces):
            fam = dict(zip(zs, choice))
            if _natural(V, P, Q, fam, V.unit):
                families.append(tuple(m.data for m in choice))
        value = len(families)
        counit = {}
        for zi, z in enumerate(zs):
            pz = P.obj[z]
            dom = V.tensor_obj(pz, value)
            table = [0] * dom
            for i in range(pz):
                for k in range(value):
                    table[V.pair(pz, value, i, k)] = families[k][zi][i]
            counit[z] = Mor(dom, Q.obj[z], tuple(table))
        return NatObject(V, P, Q, value, counit, "setlike", families)
    return _search_nat_object(V, Z, P, Q, budget)


def _natural_families(V, P, Q, v, budget):
    zs = list(P.cat.objects)
    spaces = [list(V.hom(V.tensor_obj(P.obj[z], v), Q.obj[z])) for z in zs]
    n = 1
    for s in spaces:
        n *= len(s)
    budget.spend(n, "natural families")
    for choice in product(*spaces):
        fam = dict(zip(zs, choice))
        if _natural(V, P, Q, fam, v):
            yield fam


def _search_nat_object(V, Z, P, Q, budget):
    V.require("morphism_enumeration")
    zs = list(Z.objects)
    cones = {w: list(_natural_families(V, P, Q, w, budget)) for w in V.objects()}
    for c in V.objects():
        for fam in cones[c]:
            cand = NatObject(V, P, Q, c, fam, "search")
            ok = True
            for w in V.objects():
                for other in cones[w]:
                    n = sum(1 for k in V.hom(w, c)
                            if all(V.compose(V.tensor_mor(V.identity(P.obj[z]), k), fam[z])
                                   == other[z] for z in zs))
                    if n != 1:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                return cand
    raise CapabilityMissing("no object of natural transformations found")


class Lift:
    """Result of a right lift: the distributor, its counit form, and the
    pointwise universal families used to factor into it."""

    def __init__(self, dist, counit, nats):
        self.dist = dist
        self.counit = counit
        self.nats = nats

    def __iter__(self):
        return iter((self.dist, self.counit))


def right_lift(q, p, budget=None):
    """q <| p for q, p sharing their left category Z.

    (q <| p)(y, x) is the object of natural transformations from p(-, y)
    to q(-, x); the counit is the form p, q <| p => q.
    """
    if not _same(q.left, p.left):
        raise FrameMismatch("right lift needs distributors with a common left category")
    Z, Y, X = p.left, p.right, q.right
    V = Z.base
    budget = as_budget(budget)
    nats = {(y, x): nat_object(Z, column(p, y), column(q, x), budget)
            for y in Y.objects for x in X.objects}
    obj = {k: n.value for k, n in nats.items()}
    lact, ract = {}, {}
    for y2, y, x in product(Y.objects, Y.objects, X.objects):
        v = V.tensor_obj(Y.hom_obj[(y2, y)], obj[(y, x)])
        fam = {z: V.compose(V.tensor_mor(p.ract[(z, y2, y)], V.identity(obj[(y, x)])),
                            nats[(y, x)].counit[z]) for z in Z.objects}
        lact[(y2, y, x)] = nats[(y2, x)].factor(fam, v)
    for y, x, x2 in product(Y.objects, X.objects, X.objects):
        v = V.tensor_obj(obj[(y, x)], X.hom_obj[(x, x2)])
        fam = {z: V.compose(V.tensor_mor(nats[(y, x)].counit[z], V.identity(X.hom_obj[(x, x2)])),
                            q.ract[(z, x, x2)]) for z in Z.objects}
        ract[(y, x, x2)] = nats[(y, x2)].factor(fam, v)
    r = Distributor(Y, X, obj, lact, ract, name=f"({q.name})<|({p.name})")
    fr = Frame([p, r], identity_functor(Z), identity_functor(X), q)
    counit = Form(fr, {(z, y, x): nats[(y, x)].counit[z]
                       for z in Z.objects for y in Y.objects for x in X.objects}, "counit")
    return Lift(r, counit, nats)


def right_extension(p, q, budget=None):
    """p |> q for p, q sharing their right category; computed as a right lift
    in the dual, then dualised back.  The counit is the form p |> q, p => q."""
    from .dual import op_distributor, op_form
    if not _same(p.right, q.right):
        raise FrameMismatch("right extension needs a common right category")
    lift = right_lift(op_distributor(q), op_distributor(p), budget)
    return Lift(op_distributor(lift.dist), op_form(lift.counit), lift.nats)


class CylinderCheck:
    def __init__(self, verdict, comparisons, failure=None):
        self.verdict = verdict
        self.comparisons = comparisons
        self.failure = failure

    def __bool__(self):
        return self.verdict

    def to_json(self, base):
        return {"verdict": self.verdict,
                "failure": list(self.failure) if self.failure is not None else None,
                "comparisons": [[list(k), base.mor_to_json(m) if m is not None else None]
                                for k, m in sorted(self.comparisons.items())]}

    def __repr__(self):
        return f"CylinderCheck({self.verdict}, failure={self.failure})"


def _verdict(V, comps):
    for k in sorted(comps):
        m = comps[k]
        if m is None or not V.is_iso(m):
            return CylinderCheck(False, comps, k)
    return CylinderCheck(True, comps)


def check_weighted_colimit(p, f, c, lam, budget=None):
    """Does the cylinder lam: p => X(f, c) exhibit c as the p-weighted colimit of f?

    p has left category Z (the shape of f) and right category Y (the domain of c).
    """
    X = f.cod
    V = X.base
    if not _same(f.dom, p.left) or not _same(c.dom, p.right) or not _same(c.cod, X):
        raise FrameMismatch("weight, diagram and candidate do not fit together")
    fr = lam.frame
    if (fr.n != 1 or not _same(fr.chain[0], p) or not _same(fr.f, f)
            or not _same(fr.g, c)):
        raise FrameMismatch("cylinder has the wrong frame")
    lift = right_lift(conjoint(f), p, budget)
    comps = {}
    for y, x in product(p.right.objects, X.objects):
        v = X.hom_obj[(c(y), x)]
        fam = {z: V.compose(V.tensor_mor(lam.comps[(z, y)], V.identity(v)),
                            X.comp[(f(z), c(y), x)]) for z in p.left.objects}
        comps[(y, x)] = lift.nats[(y, x)].factor(fam, v)
    return _verdict(V, comps)


def check_weighted_limit(p, f, c, mu, budget=None):
    """Dual of check_weighted_colimit: the cone mu: p => X(c, f), with p having
    right category Z (the shape of f) and left category Y."""
    from .dual import op_distributor, op_form, op_functor
    return check_weighted_colimit(op_distributor(p), op_functor(f), op_functor(c),
                                  op_form(mu), budget)


def check_left_extension(j, f, g, pi, budget=None):
    """Is g: E -> X with pi: f => j;g the pointwise left extension of f along j?"""
    X = f.cod
    V = X.base
    p = conjoint(j)

    def comp(z, y):
        return V.compose(V.tensor_mor(pi.comps[(z,)], g.hom_map[(j(z), y)]),
                         X.comp[(f(z), g(j(z)), g(y))])

    lam = Form(Frame([p], f, g, loose_identity(X)),
               {(z, y): comp(z, y) for z in j.dom.objects for y in j.cod.objects})
    return check_weighted_colimit(p, f, g, lam, budget)


def check_left_lift(j, r, l, eta):
    """Does eta: j => l;r exhibit l as the left lift of j through r?"""
    E = j.cod
    V = E.base
    C = r.dom
    comps = {}
    for x, c in product(j.dom.objects, C.objects):
        comps[(x, c)] = V.compose(V.tensor_mor(eta.comps[(x,)], r.hom_map[(l(x), c)]),
                                  E.comp[(j(x), r(l(x)), r(c))])
    return _verdict(V, comps)


def is_fully_faithful(j):
    V = j.dom.base
    return all(V.is_iso(m) for _, m in sorted(j.hom_map.items()))


def is_dense(j, budget=None):
    E = j.cod
    return check_left_extension(j, j, identity_functor(E), tight_identity_form(j),
                                budget).verdict


# coends


class Coend:
    def __init__(self, V, value, inj, route, classes=None, terms=None):
        self.V = V
        self.value = value
        self.inj = inj
        self.route = route
        self.classes = classes
        self.terms = terms

    def descend(self, fam, w):
        """The unique k: value -> w with inj[y] ; k = fam[y] for all y."""
        V = self.V
        if self.route == "thin":
            return V.arrow(self.value, w)
        if self.route == "setlike":
            table = []
            for (y, i) in self.classes:
                table.append(fam[y].data[i])
            return V.check_mor(Mor(self.value, w, tuple(table)))
        found = None
        for k in V.hom(self.value, w):
            if all(V.compose(self.inj[y], k) == fam[y] for y in self.inj):
                if found is not None:
                    return None
                found = k
        return found


def coend(V, terms, relations, budget=None):
    """Colimit of the objects ``terms[y]`` identified along ``relations``.

    Each relation is (r, y1, m1, y2, m2) with m1: r -> terms[y1] and
    m2: r -> terms[y2]; a cocone h must satisfy m1 ; h[y1] = m2 ; h[y2].
    """
    V.require("coend_objects")
    ys = list(terms)
    if V.thin:
        value = max([terms[y] for y in ys], default=0)
        return Coend(V, value, {y: V.arrow(terms[y], value) for y in ys}, "thin")
    if V.setlike:
        offset, start = {}, 0
        for y in ys:
            offset[y] = start
            start += terms[y]
        parent = list(range(start))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for r, y1, m1, y2, m2 in relations:
            for e in range(r):
                a, b = find(offset[y1] + m1.data[e]), find(offset[y2] + m2.data[e])
                if a != b:
                    parent[max(a, b)] = min(a, b)
        label, classes = {}, []
        for y in ys:
            for i in range(terms[y]):
                root = find(offset[y] + i)
                if root not in label:
                    label[root] = len(label)
                    classes.append((y, i))
        value = len(label)
        inj = {y: V.check_mor(Mor(terms[y], value,
                                   tuple(label[find(offset[y] + i)] for i in range(terms[y]))))
               for y in ys}
        return Coend(V, value, inj, "setlike", classes, terms)
    V.require("morphism_enumeration")
    budget = as_budget(budget)

    def cocones(w):
        spaces = [list(V.hom(terms[y], w)) for y in ys]
        n = 1
        for s in spaces:
            n *= len(s)
        budget.spend(n, "cowedges")
        for choice in product(*spaces):
            h = dict(zip(ys, choice))
            if all(V.compose(m1, h[y1]) == V.compose(m2, h[y2])
                   for _, y1, m1, y2, m2 in relations):
                yield h

    all_cocones = {w: list(cocones(w)) for w in V.objects()}
    for c in V.objects():
        for inj in all_cocones[c]:
            cand = Coend(V, c, inj, "search")
            if all(sum(1 for k in V.hom(c, w)
                       if all(V.compose(inj[y], k) == h[y] for y in ys)) == 1
                   for w in V.objects() for h in all_cocones[w]):
                return cand
    raise CapabilityMissing("no coend found")


def left_composite(p, q, budget=None):
    """p (.) q with (p (.) q)(x, z) the coend over y of p(x, y) (x) q(y, z).

    Returns the composite distributor and its unit form p, q => p (.) q.
    """
    if not _same(p.right, q.left):
        raise FrameMismatch("composite needs p.right == q.left")
    X, Y, Z = p.left, p.right, q.right
    V = X.base
    budget = as_budget(budget)
    I = V.identity
    ends = {}
    for x, z in product(X.objects, Z.objects):
        terms = {y: V.tensor_obj(p.obj[(x, y)], q.obj[(y, z)]) for y in Y.objects}
        rels = []
        for y, y2 in product(Y.objects, Y.objects):
            r = V.tensor_objs([p.obj[(x, y)], Y.hom_obj[(y, y2)], q.obj[(y2, z)]])
            m1 = V.tensor_mor(p.ract[(x, y, y2)], I(q.obj[(y2, z)]))
            m2 = V.tensor_mor(I(p.obj[(x, y)]), q.lact[(y, y2, z)])
            rels.append((r, y2, m1, y, m2))
        ends[(x, z)] = coend(V, terms, rels, budget)
    obj = {k: e.value for k, e in ends.items()}
    lact, ract = {}, {}
    for x2, x, z in product(X.objects, X.objects, Z.objects):
        a = X.hom_obj[(x2, x)]
        fam = {y: V.compose(V.tensor_mor(p.lact[(x2, x, y)], I(q.obj[(y, z)])),
                            ends[(x2, z)].inj[y]) for y in Y.objects}
        lact[(x2, x, z)] = _descend_tensored(V, ends[(x, z)], a, fam, obj[(x2, z)], left=True)
    for x, z, z2 in product(X.objects, Z.objects, Z.objects):
        b = Z.hom_obj[(z, z2)]
        fam = {y: V.compose(V.tensor_mor(I(p.obj[(x, y)]), q.ract[(y, z, z2)]),
                            ends[(x, z2)].inj[y]) for y in Y.objects}
        ract[(x, z, z2)] = _descend_tensored(V, ends[(x, z)], b, fam, obj[(x, z2)], left=False)
    comp = Distributor(X, Z, obj, lact, ract, name=f"({p.name}).({q.name})")
    fr = Frame([p, q], identity_functor(X), identity_functor(Z), comp)
    unit = Form(fr, {(x, y, z): ends[(x, z)].inj[y]
                     for x in X.objects for y in Y.objects for z in Z.objects}, "unit")
    return comp, unit


def _descend_tensored(V, end, a, fam, w, left):
    """Factor a family out of a (x) term_y (or term_y (x) a) through a (x) coend."""
    ida = V.identity(a)
    if end.route == "thin":
        return V.arrow(min(a, end.value), w)
    if end.route == "setlike":
        c = end.value
        dom = V.tensor_obj(a, c) if left else V.tensor_obj(c, a)
        table = [0] * dom
        for k, (y, i) in enumerate(end.classes):
            t = end.terms[y]
            for s in range(a):
                if left:
                    table[V.pair(a, c, s, k)] = fam[y].data[V.pair(a, t, s, i)]
                else:
                    table[V.pair(c, a, k, s)] = fam[y].data[V.pair(t, a, i, s)]
        return V.check_mor(Mor(dom, w, tuple(table)))
    dom = V.tensor_obj(a, end.value) if left else V.tensor_obj(end.value, a)
    found = None
    for k in V.hom(dom, w):
        ok = all(V.compose(V.tensor_mor(ida, end.inj[y]) if left
                           else V.tensor_mor(end.inj[y], ida), k) == fam[y] for y in fam)
        if ok:
            if found is not None:
                return None
            found = k
    return found


def is_j_absolute(j, p, f, c, lam, budget=None):
    """Is the colimit c of f: Z -> E weighted by p (with cylinder lam)
    preserved by E(j, -), i.e. is E(j, f) (.) p -> E(j, c) invertible?"""
    E = f.cod
    V = E.base
    if not _same(j.cod, E):
        raise FrameMismatch("root must land in the colimit's category")
    Ejf = restrict(loose_identity(E), j, f)
    comps = {}
    A, Z, Y = j.dom, p.left, p.right
    for a, y in product(A.objects, Y.objects):
        w = E.hom_obj[(j(a), c(y))]
        fam = {z: V.compose(V.tensor_mor(V.identity(E.hom_obj[(j(a), f(z))]), lam.comps[(z, y)]),
                            E.comp[(j(a), f(z), c(y))]) for z in Z.objects}
        terms = {z: V.tensor_obj(Ejf.obj[(a, z)], p.obj[(z, y)]) for z in Z.objects}
        rels = []
        for z, z2 in product(Z.objects, Z.objects):
            r = V.tensor_objs([Ejf.obj[(a, z)], Z.hom_obj[(z, z2)], p.obj[(z2, y)]])
            m1 = V.tensor_mor(Ejf.ract[(a, z, z2)], V.identity(p.obj[(z2, y)]))
            m2 = V.tensor_mor(V.identity(Ejf.obj[(a, z)]), p.lact[(z, z2, y)])
            rels.append((r, z2, m1, z, m2))
        comps[(a, y)] = coend(V, terms, rels, budget).descend(fam, w)
    return _verdict(V, comps)

