"""Finite strict monoidal bases given by tables.

Composition is written diagrammatically throughout: ``compose(f, g)`` is
"f then g".  Morphisms are ``Mor(dom, cod, data)`` triples compared
extensionally, so two handles are equal exactly when they denote the same
arrow.
"""
from itertools import product
from typing import NamedTuple

from .errors import (CapabilityMissing, CardinalityOverflow, MalformedTables,
                     NotParallel, ValidationReport)

CAPABILITIES = ("equalizers", "coequalizers", "nat_objects", "coend_objects",
                "morphism_enumeration")


class Mor(NamedTuple):
    dom: int
    cod: int
    data: object


class Equalizer(NamedTuple):
    obj: int
    inclusion: Mor


class Coequalizer(NamedTuple):
    obj: int
    projection: Mor


class MonoidalBase:
    """Interface shared by every backend.

    Subclasses provide objects, hom enumeration, composition, identities and
    the strict tensor.  Limits default to brute-force search over the
    enumerated morphisms, which is also what the specialised backends are
    tested against.
    """

    name = "base"
    unit = 0
    capabilities = frozenset()
    commutative = False
    setlike = False
    thin = False

    def _key(self):
        return (id(self),)

    def __eq__(self, other):
        # structural: two separately built copies of a base are the same base
        if self is other:
            return True
        if not isinstance(other, MonoidalBase):
            return NotImplemented
        return type(self) is type(other) and self._key() == other._key()

    def __hash__(self):
        return hash((type(self).__name__, self.unit))

    def objects(self):
        raise NotImplementedError

    def hom(self, a, b):
        raise NotImplementedError

    def hom_size(self, a, b):
        return sum(1 for _ in self.hom(a, b))

    def compose(self, f, g):
        raise NotImplementedError

    def identity(self, a):
        raise NotImplementedError

    def tensor_obj(self, a, b):
        raise NotImplementedError

    def tensor_mor(self, f, g):
        raise NotImplementedError

    def require(self, cap):
        if cap not in self.capabilities:
            raise CapabilityMissing(f"base {self.name!r} lacks {cap}")

    # derived helpers

    def then(self, *fs):
        out = fs[0]
        for g in fs[1:]:
            out = self.compose(out, g)
        return out

    def tensor_objs(self, objs):
        out = self.unit
        for o in objs:
            out = self.tensor_obj(out, o)
        return out

    def tensor_mors(self, mors):
        out = self.identity(self.unit)
        for m in mors:
            out = self.tensor_mor(out, m)
        return out

    def is_iso(self, f):
        return self.inverse(f) is not None

    def inverse(self, f):
        for g in self.hom(f.cod, f.dom):
            if (self.compose(f, g) == self.identity(f.dom)
                    and self.compose(g, f) == self.identity(f.cod)):
                return g
        return None

    def lift(self, m, h):
        """The unique k with k ; m = h, or None."""
        found = None
        for k in self.hom(h.dom, m.dom):
            if self.compose(k, m) == h:
                if found is not None:
                    return None
                found = k
        return found

    def descend(self, e, h):
        """The unique k with e ; k = h, or None."""
        found = None
        for k in self.hom(e.cod, h.cod):
            if self.compose(e, k) == h:
                if found is not None:
                    return None
                found = k
        return found

    def equalizer(self, f, g):
        _parallel(f, g)
        self.require("equalizers")
        cones = [(c, m) for c in self.objects() for m in self.hom(c, f.dom)
                 if self.compose(m, f) == self.compose(m, g)]
        for c, m in cones:
            if all(self.lift(m, h) is not None for _, h in cones):
                return Equalizer(c, m)
        raise CapabilityMissing(f"no equalizer of {f} and {g} in {self.name!r}")

    def coequalizer(self, f, g):
        _parallel(f, g)
        self.require("coequalizers")
        cocones = [(c, e) for c in self.objects() for e in self.hom(f.cod, c)
                   if self.compose(f, e) == self.compose(g, e)]
        for c, e in cocones:
            if all(self.descend(e, h) is not None for _, h in cocones):
                return Coequalizer(c, e)
        raise CapabilityMissing(f"no coequalizer of {f} and {g} in {self.name!r}")

    def mor_to_json(self, f):
        return [f.dom, f.cod, f.data]

    def mor_from_json(self, x):
        try:
            a, b, d = x
        except (TypeError, ValueError):
            raise MalformedTables(f"bad morphism {x!r}")
        return self.check_mor(Mor(a, b, d))

    def check_mor(self, f):
        raise NotImplementedError

    def __repr__(self):
        return f"<{type(self).__name__} {self.name}>"


def _parallel(f, g):
    if f.dom != g.dom or f.cod != g.cod:
        raise NotParallel(f"{f} and {g} are not parallel")


class TableBase(MonoidalBase):
    """A base given entirely by finite tables (as loaded from JSON)."""

    def __init__(self, name, object_names, homs, identities, compose, unit,
                 tensor_obj, tensor_mor, capabilities=CAPABILITIES):
        self.name = name
        self.object_names = list(object_names)
        n = len(self.object_names)
        self._n = n
        self._homs = {(a, b): 0 for a in range(n) for b in range(n)}
        for (a, b), c in homs.items():
            if not (0 <= a < n and 0 <= b < n) or c < 0:
                raise MalformedTables(f"hom entry {(a, b, c)} out of range")
            self._homs[(a, b)] = c
        if not 0 <= unit < n:
            raise MalformedTables(f"unit {unit} out of range")
        self.unit = unit
        if len(identities) != n:
            raise MalformedTables("identities must list one morphism per object")
        self._ident = []
        for a, i in enumerate(identities):
            if not 0 <= i < self._homs[(a, a)]:
                raise MalformedTables(f"identity of {a} out of range")
            self._ident.append(Mor(a, a, i))
        self._comp = {}
        for (a, b, c, f, g), h in compose.items():
            for x in (a, b, c):
                if not 0 <= x < n:
                    raise MalformedTables(f"compose entry {(a, b, c)} out of range")
            if not (0 <= f < self._homs[(a, b)] and 0 <= g < self._homs[(b, c)]
                    and 0 <= h < self._homs[(a, c)]):
                raise MalformedTables(f"compose entry {(a, b, c, f, g, h)} out of range")
            self._comp[(a, b, c, f, g)] = h
        for a, b, c in product(range(n), repeat=3):
            for f in range(self._homs[(a, b)]):
                for g in range(self._homs[(b, c)]):
                    if (a, b, c, f, g) not in self._comp:
                        raise MalformedTables(f"compose missing {(a, b, c, f, g)}")
        self._tobj = {}
        for (a, b), c in tensor_obj.items():
            if not (0 <= a < n and 0 <= b < n and 0 <= c < n):
                raise MalformedTables(f"tensor_obj entry {(a, b, c)} out of range")
            self._tobj[(a, b)] = c
        for a, b in product(range(n), repeat=2):
            if (a, b) not in self._tobj:
                raise MalformedTables(f"tensor_obj missing {(a, b)}")
        self._tmor = {}
        for (a, b, f, c, d, g), h in tensor_mor.items():
            if not (0 <= f < self._homs.get((a, b), 0) and 0 <= g < self._homs.get((c, d), 0)):
                raise MalformedTables(f"tensor_mor entry {(a, b, f, c, d, g)} out of range")
            s, t = self._tobj[(a, c)], self._tobj[(b, d)]
            if not 0 <= h < self._homs[(s, t)]:
                raise MalformedTables(f"tensor_mor result {h} out of range")
            self._tmor[(a, b, f, c, d, g)] = h
        for a, b, c, d in product(range(n), repeat=4):
            for f in range(self._homs[(a, b)]):
                for g in range(self._homs[(c, d)]):
                    if (a, b, f, c, d, g) not in self._tmor:
                        raise MalformedTables(f"tensor_mor missing {(a, b, f, c, d, g)}")
        caps = set(capabilities)
        unknown = caps - set(CAPABILITIES)
        if unknown:
            raise MalformedTables(f"unknown capabilities {sorted(unknown)}")
        self.capabilities = frozenset(caps | {"morphism_enumeration"})

    def _key(self):
        return (self._n, self._homs, self._ident, self._comp, self.unit, self._tobj,
                self._tmor, self.capabilities)

    def objects(self):
        return range(self._n)

    def hom(self, a, b):
        return [Mor(a, b, i) for i in range(self._homs[(a, b)])]

    def hom_size(self, a, b):
        return self._homs[(a, b)]

    def compose(self, f, g):
        if f.cod != g.dom:
            raise NotParallel(f"cannot compose {f} then {g}")
        return Mor(f.dom, g.cod, self._comp[(f.dom, f.cod, g.cod, f.data, g.data)])

    def identity(self, a):
        return self._ident[a]

    def tensor_obj(self, a, b):
        return self._tobj[(a, b)]

    def tensor_mor(self, f, g):
        h = self._tmor[(f.dom, f.cod, f.data, g.dom, g.cod, g.data)]
        return Mor(self._tobj[(f.dom, g.dom)], self._tobj[(f.cod, g.cod)], h)

    def check_mor(self, f):
        if not (0 <= f.dom < self._n and 0 <= f.cod < self._n
                and isinstance(f.data, int) and 0 <= f.data < self._homs[(f.dom, f.cod)]):
            raise MalformedTables(f"morphism {tuple(f)} not in base {self.name!r}")
        return f

    def tables(self):
        """The defining tables, in the layout of ``base.json``."""
        n = self._n
        return {
            "objects": list(self.object_names),
            "unit": self.unit,
            "homs": [[a, b, self._homs[(a, b)]] for a in range(n) for b in range(n)
                     if self._homs[(a, b)]],
            "identities": [m.data for m in self._ident],
            "compose": [[*k, v] for k, v in sorted(self._comp.items())],
            "tensor_obj": [[a, b, c] for (a, b), c in sorted(self._tobj.items())],
            "tensor_mor": [[*k, v] for k, v in sorted(self._tmor.items())],
            "capabilities": sorted(self.capabilities),
        }


class BoolBase(TableBase):
    """The two-element quantale: a thin base with meet as tensor.

    Objects are 0 (false) and 1 (true); hom(a, b) is a singleton iff a <= b.
    Limits and colimits are computed order-theoretically.
    """

    commutative = True
    thin = True

    def __init__(self, name="Q2"):
        homs = {(0, 0): 1, (0, 1): 1, (1, 1): 1}
        comp = {(a, b, c, 0, 0): 0 for a, b, c in product((0, 1), repeat=3)
                if a <= b <= c}
        tobj = {(a, b): min(a, b) for a, b in product((0, 1), repeat=2)}
        tmor = {(a, b, 0, c, d, 0): 0 for a, b, c, d in product((0, 1), repeat=4)
                if a <= b and c <= d}
        super().__init__(name, ["bot", "top"], homs, [0, 0], comp, 1, tobj, tmor,
                         CAPABILITIES)

    def le(self, a, b):
        return a <= b

    def arrow(self, a, b):
        return Mor(a, b, 0) if a <= b else None

    def inverse(self, f):
        return Mor(f.cod, f.dom, 0) if f.dom == f.cod else None

    def lift(self, m, h):
        return self.arrow(h.dom, m.dom)

    def descend(self, e, h):
        return self.arrow(e.cod, h.cod)

    def equalizer(self, f, g):
        _parallel(f, g)
        return Equalizer(f.dom, self.identity(f.dom))

    def coequalizer(self, f, g):
        _parallel(f, g)
        return Coequalizer(f.cod, self.identity(f.cod))


class FinSetBase(MonoidalBase):
    """Skeleton of finite sets {0..max_card}, cartesian product as tensor.

    A morphism m -> n is the tuple of its values.  The pair (i, j) of
    m (x) n is the element i*n + j, which makes the product strictly
    associative and unital.
    """

    setlike = True

    def __init__(self, max_card=3, name=None):
        if max_card < 1:
            raise MalformedTables("max_card must be positive")
        self.max_card = max_card
        self.name = name or f"FinSet{max_card}"
        self.unit = 1
        self.capabilities = frozenset(CAPABILITIES)

    def _key(self):
        return (self.max_card,)

    def objects(self):
        return range(self.max_card + 1)

    def _check_obj(self, a):
        if not 0 <= a <= self.max_card:
            raise CardinalityOverflow(f"object {a} exceeds max_card {self.max_card}")

    def hom(self, a, b):
        return (Mor(a, b, t) for t in product(range(b), repeat=a))

    def hom_size(self, a, b):
        return b ** a

    def compose(self, f, g):
        if f.cod != g.dom:
            raise NotParallel(f"cannot compose {f} then {g}")
        gd = g.data
        return Mor(f.dom, g.cod, tuple(gd[i] for i in f.data))

    def identity(self, a):
        return Mor(a, a, tuple(range(a)))

    def tensor_obj(self, a, b):
        c = a * b
        if c > self.max_card:
            raise CardinalityOverflow(f"{a} (x) {b} = {c} exceeds max_card {self.max_card}")
        return c

    def tensor_mor(self, f, g):
        a = self.tensor_obj(f.dom, g.dom)
        b = self.tensor_obj(f.cod, g.cod)
        d = g.cod
        gd = g.data
        return Mor(a, b, tuple(x * d + y for x in f.data for y in gd))

    def pair(self, a, b, i, j):
        return i * b + j

    def unpair(self, a, b, k):
        return divmod(k, b)

    def element(self, a, i):
        return Mor(1, a, (i,))

    def inverse(self, f):
        if f.dom != f.cod or sorted(f.data) != list(range(f.cod)):
            return None
        inv = [0] * f.dom
        for i, v in enumerate(f.data):
            inv[v] = i
        return Mor(f.cod, f.dom, tuple(inv))

    def lift(self, m, h):
        pos = {}
        for i, v in enumerate(m.data):
            if v in pos:
                return None
            pos[v] = i
        try:
            return Mor(h.dom, m.dom, tuple(pos[v] for v in h.data))
        except KeyError:
            return None

    def descend(self, e, h):
        out = [None] * e.cod
        for i, v in enumerate(e.data):
            if out[v] is not None and out[v] != h.data[i]:
                return None
            out[v] = h.data[i]
        if any(v is None for v in out):
            return None
        return Mor(e.cod, h.cod, tuple(out))

    def equalizer(self, f, g):
        _parallel(f, g)
        keep = tuple(i for i in range(f.dom) if f.data[i] == g.data[i])
        return Equalizer(len(keep), Mor(len(keep), f.dom, keep))

    def coequalizer(self, f, g):
        _parallel(f, g)
        parent = list(range(f.cod))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for x, y in zip(f.data, g.data):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[max(rx, ry)] = min(rx, ry)
        labels = {}
        proj = []
        for x in range(f.cod):
            r = find(x)
            if r not in labels:
                labels[r] = len(labels)
            proj.append(labels[r])
        return Coequalizer(len(labels), Mor(f.cod, len(labels), tuple(proj)))

    def mor_to_json(self, f):
        return [f.dom, f.cod, list(f.data)]

    def mor_from_json(self, x):
        try:
            a, b, d = x
            return self.check_mor(Mor(a, b, tuple(d)))
        except (TypeError, ValueError):
            raise MalformedTables(f"bad morphism {x!r}")

    def check_mor(self, f):
        self._check_obj(f.dom)
        self._check_obj(f.cod)
        if len(f.data) != f.dom or any(not (isinstance(v, int) and 0 <= v < f.cod)
                                         for v in f.data):
            raise MalformedTables(f"morphism {tuple(f)} is not a function {f.dom}->{f.cod}")
        return f


class RevBase(MonoidalBase):
    """The same category with the tensor product reversed."""

    def __init__(self, inner):
        self.inner = inner
        self.name = inner.name + "^rev"
        self.unit = inner.unit
        self.capabilities = inner.capabilities
        self.setlike = inner.setlike
        self.thin = inner.thin
        self.commutative = inner.commutative

    def _key(self):
        return (self.inner,)

    def objects(self):
        return self.inner.objects()

    def hom(self, a, b):
        return self.inner.hom(a, b)

    def hom_size(self, a, b):
        return self.inner.hom_size(a, b)

    def compose(self, f, g):
        return self.inner.compose(f, g)

    def identity(self, a):
        return self.inner.identity(a)

    def tensor_obj(self, a, b):
        return self.inner.tensor_obj(b, a)

    def tensor_mor(self, f, g):
        return self.inner.tensor_mor(g, f)

    def pair(self, a, b, i, j):
        return self.inner.pair(b, a, j, i)

    def unpair(self, a, b, k):
        j, i = self.inner.unpair(b, a, k)
        return i, j

    def element(self, a, i):
        return self.inner.element(a, i)

    def inverse(self, f):
        return self.inner.inverse(f)

    def lift(self, m, h):
        return self.inner.lift(m, h)

    def descend(self, e, h):
        return self.inner.descend(e, h)

    def equalizer(self, f, g):
        return self.inner.equalizer(f, g)

    def coequalizer(self, f, g):
        return self.inner.coequalizer(f, g)

    def mor_to_json(self, f):
        return self.inner.mor_to_json(f)

    def mor_from_json(self, x):
        return self.inner.mor_from_json(x)

    def check_mor(self, f):
        return self.inner.check_mor(f)


def reverse_base(V):
    """V with reversed tensor; involutive, and the identity on commutative bases."""
    if V.commutative:
        return V
    if isinstance(V, RevBase):
        return V.inner
    rev = getattr(V, "_rev", None)
    if rev is None:
        rev = RevBase(V)
        V._rev = rev
    return rev


def make_bool_quantale(name="Q2"):
    return BoolBase(name)


def make_finset_skeleton(max_card, name=None):
    return FinSetBase(max_card, name)


def equalizer(V, f, g):
    return V.equalizer(f, g)


def coequalizer(V, f, g):
    return V.coequalizer(f, g)


def tabulate(V, name=None):
    """Copy a finite enumerable base into an explicit TableBase."""
    objs = list(V.objects())
    homs, index = {}, {}
    for a in objs:
        for b in objs:
            ms = list(V.hom(a, b))
            homs[(a, b)] = len(ms)
            for i, m in enumerate(ms):
                index[m] = i
    ident = [index[V.identity(a)] for a in objs]
    comp = {}
    for a, b, c in product(objs, repeat=3):
        for f in V.hom(a, b):
            for g in V.hom(b, c):
                comp[(a, b, c, index[f], index[g])] = index[V.compose(f, g)]
    tobj, tmor = {}, {}
    for a, b in product(objs, repeat=2):
        tobj[(a, b)] = V.tensor_obj(a, b)
    for a, b, c, d in product(objs, repeat=4):
        for f in V.hom(a, b):
            for g in V.hom(c, d):
                tmor[(a, b, index[f], c, d, index[g])] = index[V.tensor_mor(f, g)]
    return TableBase(name or V.name, [str(o) for o in objs], homs, ident, comp, V.unit,
                     tobj, tmor, V.capabilities)


def validate_base(V, max_object=None):
    """Exhaustive check of the category, functoriality and strictness laws.

    ``max_object`` restricts the check to objects up to that index, which is
    how large numeric skeleta are validated.
    """
    rep = ValidationReport(V.name)
    objs = [o for o in V.objects() if max_object is None or o <= max_object]
    inside = set(objs)

    def _tobj(a, b):
        try:
            c = V.tensor_obj(a, b)
        except CardinalityOverflow:
            return None
        return c if c in inside else None

    def _try(fn, *args):
        if fn == V.tensor_obj:
            return _tobj(*args)
        f, g = args
        if _tobj(f.dom, g.dom) is None or _tobj(f.cod, g.cod) is None:
            return None
        return V.tensor_mor(f, g)
    hom = {(a, b): list(V.hom(a, b)) for a in objs for b in objs}
    I = V.unit
    for a in objs:
        ida = V.identity(a)
        if (ida.dom, ida.cod) != (a, a):
            rep.add("identity.typing", a)
    for a, b in product(objs, repeat=2):
        for f in hom[(a, b)]:
            if V.compose(V.identity(a), f) != f:
                rep.add("compose.left_unit", a, b, f.data)
            if V.compose(f, V.identity(b)) != f:
                rep.add("compose.right_unit", a, b, f.data)
    for a, b, c in product(objs, repeat=3):
        for f in hom[(a, b)]:
            for g in hom[(b, c)]:
                h = V.compose(f, g)
                if (h.dom, h.cod) != (a, c):
                    rep.add("compose.typing", a, b, c, f.data, g.data)
    for a, b, c, d in product(objs, repeat=4):
        for f in hom[(a, b)]:
            for g in hom[(b, c)]:
                fg = V.compose(f, g)
                for h in hom[(c, d)]:
                    if V.compose(fg, h) != V.compose(f, V.compose(g, h)):
                        rep.add("compose.associativity", a, b, c, d, f.data, g.data, h.data)
    if I in inside:
        for a in objs:
            if _try(V.tensor_obj, I, a) != a:
                rep.add("strict.left_unit_obj", a)
            if _try(V.tensor_obj, a, I) != a:
                rep.add("strict.right_unit_obj", a)
            for b in objs:
                for f in hom[(a, b)]:
                    if _try(V.tensor_mor, V.identity(I), f) != f:
                        rep.add("strict.left_unit_mor", a, b, f.data)
                    if _try(V.tensor_mor, f, V.identity(I)) != f:
                        rep.add("strict.right_unit_mor", a, b, f.data)
    for a, b, c in product(objs, repeat=3):
        ab = _try(V.tensor_obj, a, b)
        bc = _try(V.tensor_obj, b, c)
        if ab is None or bc is None:
            continue
        l, r = _try(V.tensor_obj, ab, c), _try(V.tensor_obj, a, bc)
        if l != r:
            rep.add("strict.assoc_obj", a, b, c)
    for a, b in product(objs, repeat=2):
        ab = _try(V.tensor_obj, a, b)
        if ab is None:
            continue
        if _try(V.tensor_mor, V.identity(a), V.identity(b)) != V.identity(ab):
            rep.add("tensor.identity", a, b)
    pairs = [(a, b) for a in objs for b in objs if hom[(a, b)]]
    for a, b, c in product(objs, repeat=3):
        for d, e, g in product(objs, repeat=3):
            if (_try(V.tensor_obj, a, d) is None or _try(V.tensor_obj, b, e) is None
                    or _try(V.tensor_obj, c, g) is None):
                continue
            for f1 in hom[(a, b)]:
                for f2 in hom[(b, c)]:
                    f12 = V.compose(f1, f2)
                    for g1 in hom[(d, e)]:
                        t1 = V.tensor_mor(f1, g1)
                        for g2 in hom[(e, g)]:
                            lhs = V.tensor_mor(f12, V.compose(g1, g2))
                            rhs = V.compose(t1, V.tensor_mor(f2, g2))
                            if lhs != rhs:
                                rep.add("tensor.interchange", a, b, c, d, e, g,
                                        f1.data, f2.data, g1.data, g2.data)
    arrows = [f for k in pairs for f in hom[k]]
    for f in arrows:
        for g in arrows:
            fg = _try(V.tensor_mor, f, g)
            if fg is None:
                continue
            for h in arrows:
                gh = _try(V.tensor_mor, g, h)
                if gh is None:
                    continue
                l = _try(V.tensor_mor, fg, h)
                r = _try(V.tensor_mor, f, gh)
                if l is None and r is None:
                    continue
                if l != r:
                    rep.add("strict.assoc_mor", tuple(f), tuple(g), tuple(h))
    return rep
