"""JSON documents and workspaces.

One JSON document per object, discriminated by ``"kind"``; a ``bundle``
document holds several.  Objects refer to each other by name, or by a small
constructor expression such as ``{"restrict": [q, f, g]}``.  Names are
metadata only: every table is keyed by integer indices.
"""
import json
from itertools import product
from pathlib import Path

from .dual import (RelativeCoadjunction, RelativeComonad, dualize, op_base)
from .enriched import (Distributor, EnrichedCategory, EnrichedFunctor, Form, Frame,
                       compose_functors, companion, conjoint, identity_functor,
                       loose_identity, restrict)
from .errors import MalformedTables, RelkitError
from .relmonad import MonadMorphism, RelativeAdjunction, RelativeMonad, underlying_functor
from .vkernel import (BoolBase, FinSetBase, RevBase, TableBase, make_bool_quantale,
                      make_finset_skeleton, reverse_base)

DATA = Path(__file__).with_name("data")

KINDS = ("base", "category", "functor", "distributor", "form", "monad", "comonad",
         "monad_morphism", "adjunction", "coadjunction")


def _compact(x):
    return json.dumps(x, sort_keys=True, separators=(",", ":"))


def _format(doc, pad=""):
    # one key per line and one table row per line
    lines = []
    for k in sorted(doc):
        v = doc[k]
        if k == "items":
            body = ",\n".join(_format(item, pad + "  ") for item in v)
            lines.append(f'{pad} "items": [\n{body}\n{pad} ]')
        elif isinstance(v, list) and v and all(isinstance(r, list) for r in v):
            rows = ",\n".join(f"{pad}  {_compact(r)}" for r in v)
            lines.append(f"{pad} {json.dumps(k)}: [\n{rows}\n{pad} ]")
        else:
            lines.append(f"{pad} {json.dumps(k)}: {_compact(v)}")
    return pad + "{\n" + ",\n".join(lines) + "\n" + pad + "}"


def dumps(doc):
    """Deterministic text for a document."""
    return _format(doc) + "\n"


def _pairs(rows, width):
    out = {}
    for row in rows:
        if not isinstance(row, list) or len(row) != width + 1:
            raise MalformedTables(f"table row {row!r} should have {width + 1} entries")
        out[tuple(row[:width])] = row[width]
    return out


class Workspace:
    """Named objects loaded lazily from JSON documents."""

    def __init__(self):
        self.docs = {}
        self.order = []
        self.objects = {}
        self.names = {}
        self._building = set()

    # loading

    def add_doc(self, doc, origin="<doc>"):
        if not isinstance(doc, dict) or "kind" not in doc:
            raise MalformedTables(f"{origin}: not a relkit document")
        if doc["kind"] == "bundle":
            for item in doc.get("items", []):
                self.add_doc(item, origin)
            return
        if doc["kind"] not in KINDS:
            raise MalformedTables(f"{origin}: unknown kind {doc['kind']!r}")
        name = doc.get("name")
        if not isinstance(name, str) or not name:
            raise MalformedTables(f"{origin}: document without a name")
        if name in self.docs:
            if self.docs[name] == doc:
                return
            raise MalformedTables(f"{origin}: duplicate name {name!r}")
        self.docs[name] = doc
        self.order.append(name)

    def load_file(self, path):
        path = Path(path)
        try:
            doc = json.loads(path.read_text())
        except (OSError, ValueError) as e:
            raise MalformedTables(f"{path}: {e}")
        before = len(self.order)
        self.add_doc(doc, str(path))
        return self.order[before:]

    def load_dir(self, path):
        names = []
        for p in sorted(Path(path).glob("*.json")):
            names += self.load_file(p)
        return names

    def load(self, path):
        path = Path(path)
        if path.is_dir():
            return self.load_dir(path)
        if not path.exists():
            raise MalformedTables(f"{path}: no such file")
        return self.load_file(path)

    @classmethod
    def with_corpus(cls):
        ws = cls()
        ws.load_dir(DATA)
        return ws

    def register(self, name, obj):
        self.objects[name] = obj
        self.names[id(obj)] = name
        return obj

    # resolution

    def get(self, ref, kind=None):
        if isinstance(ref, dict):
            obj = self._expr(ref)
        elif isinstance(ref, str) and ref.lstrip().startswith("{"):
            try:
                e = json.loads(ref)
            except ValueError as err:
                raise MalformedTables(f"bad expression {ref!r}: {err}")
            obj = self._expr(e)
        elif isinstance(ref, str):
            obj = self._named(ref)
        else:
            raise MalformedTables(f"bad reference {ref!r}")
        if kind is not None and _kind(obj) != kind:
            raise MalformedTables(f"{_show(ref)} is a {_kind(obj)}, expected a {kind}")
        return obj

    def _named(self, name):
        if name in self.objects:
            return self.objects[name]
        if name not in self.docs:
            raise MalformedTables(f"missing reference {name!r}")
        if name in self._building:
            raise MalformedTables(f"circular reference through {name!r}")
        self._building.add(name)
        try:
            obj = _BUILD[self.docs[name]["kind"]](self, self.docs[name])
        except (KeyError, TypeError, ValueError, IndexError) as e:
            raise MalformedTables(f"{name}: malformed document ({type(e).__name__}: {e})")
        finally:
            self._building.discard(name)
        if hasattr(obj, "name"):
            obj.name = name
        return self.register(name, obj)

    def _expr(self, e):
        if len(e) != 1:
            raise MalformedTables(f"bad expression {e!r}")
        (op, arg), = e.items()
        if op == "identity":
            return identity_functor(self.get(arg, "category"))
        if op == "compose":
            f, g = arg
            return compose_functors(self.get(f, "functor"), self.get(g, "functor"))
        if op == "loose_identity":
            return loose_identity(self.get(arg, "category"))
        if op == "restrict":
            q, f, g = arg
            return restrict(self.get(q, "distributor"), self.get(f, "functor"),
                            self.get(g, "functor"))
        if op == "companion":
            return companion(self.get(arg, "functor"))
        if op == "conjoint":
            return conjoint(self.get(arg, "functor"))
        if op == "underlying":
            return underlying_functor(self.get(arg, "monad"))
        if op == "op":
            return dualize(self.get(arg))
        raise MalformedTables(f"unknown expression {op!r}")

    def items(self, kind=None):
        for name in self.order:
            if kind is None or self.docs[name]["kind"] == kind:
                yield name, self.get(name)


def _kind(obj):
    if isinstance(obj, EnrichedCategory):
        return "category"
    if isinstance(obj, EnrichedFunctor):
        return "functor"
    if isinstance(obj, Distributor):
        return "distributor"
    if isinstance(obj, Form):
        return "form"
    if isinstance(obj, RelativeMonad):
        return "monad"
    if isinstance(obj, RelativeComonad):
        return "comonad"
    if isinstance(obj, MonadMorphism):
        return "monad_morphism"
    if isinstance(obj, RelativeAdjunction):
        return "adjunction"
    if isinstance(obj, RelativeCoadjunction):
        return "coadjunction"
    if hasattr(obj, "tensor_obj"):
        return "base"
    return type(obj).__name__


def _show(ref):
    return ref if isinstance(ref, str) else json.dumps(ref, sort_keys=True)


# building objects from documents


def _build_base(ws, d):
    backend = d.get("backend", "table")
    if backend == "bool":
        return make_bool_quantale(d["name"])
    if backend == "finset":
        return make_finset_skeleton(int(d["max_card"]), d["name"])
    if backend == "reverse":
        return reverse_base(ws.get(d["of"], "base"))
    if backend != "table":
        raise MalformedTables(f"unknown base backend {backend!r}")
    return TableBase(d["name"], d["objects"], _pairs(d["homs"], 2), d["identities"],
                     _pairs(d["compose"], 5), d["unit"], _pairs(d["tensor_obj"], 2),
                     _pairs(d["tensor_mor"], 6), d.get("capabilities", ()))


def _mor(V, x):
    return V.mor_from_json(x)


def _build_category(ws, d):
    V = ws.get(d["base"], "base")
    names = list(d["objects"])
    n = len(names)
    homs = d["homs"]
    if len(homs) != n or any(len(r) != n for r in homs):
        raise MalformedTables("homs must be an n x n matrix")
    hom = {(x, y): homs[x][y] for x, y in product(range(n), repeat=2)}
    if len(d["identities"]) != n:
        raise MalformedTables("one identity per object")
    ident = {x: _mor(V, m) for x, m in enumerate(d["identities"])}
    comp = {k: _mor(V, m) for k, m in _pairs(d["compose"], 3).items()}
    _require_keys(comp, product(range(n), repeat=3), "compose")
    return EnrichedCategory(V, names, hom, ident, comp, d["name"])


def _require_keys(table, keys, what):
    keys = set(keys)
    if set(table) != keys:
        missing = sorted(keys - set(table))[:3]
        extra = sorted(set(table) - keys)[:3]
        raise MalformedTables(f"{what}: missing {missing} extra {extra}")


def _build_functor(ws, d):
    C, D = ws.get(d["dom"], "category"), ws.get(d["cod"], "category")
    V = C.base
    om = tuple(d["obj_map"])
    if len(om) != C.n or any(not (isinstance(o, int) and 0 <= o < D.n) for o in om):
        raise MalformedTables("obj_map out of range")
    hm = {k: _mor(V, m) for k, m in _pairs(d["hom_map"], 2).items()}
    _require_keys(hm, product(C.objects, repeat=2), "hom_map")
    return EnrichedFunctor(C, D, om, hm, d["name"])


def _build_distributor(ws, d):
    L, R = ws.get(d["left"], "category"), ws.get(d["right"], "category")
    V = L.base
    obj = _pairs(d["obj"], 2)
    _require_keys(obj, product(L.objects, R.objects), "obj")
    lact = {k: _mor(V, m) for k, m in _pairs(d["lact"], 3).items()}
    ract = {k: _mor(V, m) for k, m in _pairs(d["ract"], 3).items()}
    _require_keys(lact, product(L.objects, L.objects, R.objects), "lact")
    _require_keys(ract, product(L.objects, R.objects, R.objects), "ract")
    return Distributor(L, R, obj, lact, ract, d["name"])


def _build_form(ws, d):
    chain = [ws.get(p, "distributor") for p in d["chain"]]
    fr = Frame(chain, ws.get(d["f"], "functor"), ws.get(d["g"], "functor"),
               ws.get(d["q"], "distributor")).check()
    V = fr.q.base
    width = max(len(chain) + 1, 1)
    comps = {k: _mor(V, m) for k, m in _pairs(d["comps"], width).items()}
    _require_keys(comps, fr.tuples(), "comps")
    return Form(fr, comps, d["name"])


def _build_monad(ws, d):
    j = ws.get(d["root"], "functor")
    V = j.cod.base
    unit = {x: _mor(V, m) for x, m in enumerate(d["unit"])}
    ext = {k: _mor(V, m) for k, m in _pairs(d["ext"], 2).items()}
    _require_keys(unit, j.dom.objects, "unit")
    _require_keys(ext, product(j.dom.objects, repeat=2), "ext")
    return RelativeMonad(j, d["obj_map"], unit, ext, d["name"])


def _build_comonad(ws, d):
    i = ws.get(d["coroot"], "functor")
    V = i.cod.base
    counit = {x: _mor(V, m) for x, m in enumerate(d["counit"])}
    coext = {k: _mor(V, m) for k, m in _pairs(d["coext"], 2).items()}
    _require_keys(counit, i.dom.objects, "counit")
    _require_keys(coext, product(i.dom.objects, repeat=2), "coext")
    return RelativeComonad(i, d["obj_map"], counit, coext, d["name"])


def _build_monad_morphism(ws, d):
    T, S = ws.get(d["src"], "monad"), ws.get(d["tgt"], "monad")
    comps = {x: _mor(T.base, m) for x, m in enumerate(d["comps"])}
    _require_keys(comps, T.A.objects, "comps")
    return MonadMorphism(T, S, comps)


def _build_adjunction(ws, d, cls=RelativeAdjunction, root="root"):
    j = ws.get(d[root], "functor")
    V = j.cod.base
    sharp = {k: _mor(V, m) for k, m in _pairs(d["sharp"], 2).items()}
    flat = {k: _mor(V, m) for k, m in _pairs(d["flat"], 2).items()}
    return cls(j, ws.get(d["left"], "functor"), ws.get(d["right"], "functor"),
               sharp, flat, d["name"])


def _build_coadjunction(ws, d):
    return _build_adjunction(ws, d, RelativeCoadjunction, "coroot")


_BUILD = {"base": _build_base, "category": _build_category, "functor": _build_functor,
          "distributor": _build_distributor, "form": _build_form, "monad": _build_monad,
          "comonad": _build_comonad, "monad_morphism": _build_monad_morphism,
          "adjunction": _build_adjunction,
          "coadjunction": _build_coadjunction}


# emitting documents


def _is_identity(F):
    C = F.dom
    return (F.cod is C and F.obj_map == tuple(C.objects)
            and all(m == C.ident[x] for (x, y), m in F.hom_map.items() if x == y)
            and all(m == C.base.identity(C.hom_obj[k]) for k, m in F.hom_map.items()))


class Emitter:
    """Turns objects into documents, naming or inlining what they refer to."""

    def __init__(self, ws=None):
        self.ws = ws or Workspace()
        self.names = dict(self.ws.names)
        self.taken = set(self.ws.docs) | set(self.ws.objects)
        self.items = []

    def _fresh(self, obj):
        base = getattr(obj, "name", "") or _kind(obj)
        name, k = base, 1
        while name in self.taken or name in self.ws.docs:
            k += 1
            name = f"{base}#{k}"
        self.taken.add(name)
        return name

    def _known(self, obj):
        name = self.names.get(id(obj)) or self.ws.names.get(id(obj))
        if name is None:
            name = self._same_named(obj)
        if name is not None:
            self.names[id(obj)] = name
        return name

    def _same_named(self, obj):
        # an equal object already stored under the same name, e.g. a corpus fixture
        name = getattr(obj, "name", None)
        if not isinstance(name, str) or name not in self.ws.docs:
            return None
        try:
            other = self.ws.get(name)
        except RelkitError:
            return None
        return name if type(other) is type(obj) and other == obj else None

    def ref(self, obj):
        if self._known(obj):
            return self._known(obj)
        if isinstance(obj, EnrichedFunctor) and _is_identity(obj):
            return {"identity": self.ref(obj.dom)}
        if isinstance(obj, Distributor) and obj.origin:
            if obj.origin[0] == "loose_identity":
                return {"loose_identity": self.ref(obj.origin[1])}
            if obj.origin[0] == "restrict":
                _, q, f, g = obj.origin
                return {"restrict": [self.ref(q), self.ref(f), self.ref(g)]}
        return self.add(obj)

    def add(self, obj, name=None):
        """Emit obj as an item, after anything it depends on; returns its name.

        Without an explicit name, an object that already has one is not re-emitted.
        """
        if name is None:
            if self._known(obj):
                return self._known(obj)
            name = self._fresh(obj)
        self.taken.add(name)
        self.names[id(obj)] = name
        doc = self.doc(obj)
        doc["name"] = name
        self.items.append(doc)
        return name

    def doc(self, obj):
        kind = _kind(obj)
        return getattr(self, "_" + kind)(obj)

    def _base(self, V):
        if isinstance(V, BoolBase):
            return {"kind": "base", "backend": "bool"}
        if isinstance(V, FinSetBase):
            return {"kind": "base", "backend": "finset", "max_card": V.max_card}
        if isinstance(V, RevBase):
            return {"kind": "base", "backend": "reverse", "of": self.ref(V.inner)}
        doc = {"kind": "base", "backend": "table"}
        doc.update(V.tables())
        return doc

    def _category(self, C):
        V = C.base
        return {"kind": "category", "base": self.ref(V), "objects": list(C.names),
                "homs": [[C.hom_obj[(x, y)] for y in C.objects] for x in C.objects],
                "identities": [V.mor_to_json(C.ident[x]) for x in C.objects],
                "compose": [[x, y, z, V.mor_to_json(C.comp[(x, y, z)])]
                            for x, y, z in product(C.objects, repeat=3)]}

    def _functor(self, F):
        V = F.dom.base
        return {"kind": "functor", "dom": self.ref(F.dom), "cod": self.ref(F.cod),
                "obj_map": list(F.obj_map),
                "hom_map": [[x, y, V.mor_to_json(F.hom_map[(x, y)])]
                            for x, y in product(F.dom.objects, repeat=2)]}

    def _distributor(self, p):
        V = p.base
        L, R = p.left, p.right
        return {"kind": "distributor", "left": self.ref(L), "right": self.ref(R),
                "obj": [[x, y, p.obj[(x, y)]] for x, y in product(L.objects, R.objects)],
                "lact": [[a, x, y, V.mor_to_json(p.lact[(a, x, y)])]
                         for a, x, y in product(L.objects, L.objects, R.objects)],
                "ract": [[x, y, b, V.mor_to_json(p.ract[(x, y, b)])]
                         for x, y, b in product(L.objects, R.objects, R.objects)]}

    def _form(self, phi):
        fr = phi.frame
        V = fr.q.base
        return {"kind": "form", "chain": [self.ref(p) for p in fr.chain],
                "f": self.ref(fr.f), "g": self.ref(fr.g), "q": self.ref(fr.q),
                "comps": [[*xs, V.mor_to_json(phi.comps[xs])] for xs in fr.tuples()]}

    def _monad(self, T):
        V = T.base
        return {"kind": "monad", "root": self.ref(T.root), "obj_map": list(T.obj),
                "unit": [V.mor_to_json(T.unit[x]) for x in T.A.objects],
                "ext": [[x, y, V.mor_to_json(T.ext[(x, y)])]
                        for x, y in product(T.A.objects, repeat=2)]}

    def _comonad(self, D):
        V = D.X.base
        return {"kind": "comonad", "coroot": self.ref(D.coroot), "obj_map": list(D.obj),
                "counit": [V.mor_to_json(D.counit[x]) for x in D.Z.objects],
                "coext": [[x, y, V.mor_to_json(D.coext[(x, y)])]
                          for x, y in product(D.Z.objects, repeat=2)]}

    def _monad_morphism(self, th):
        V = th.src.base
        return {"kind": "monad_morphism", "src": self.ref(th.src), "tgt": self.ref(th.tgt),
                "comps": [V.mor_to_json(th.comps[x]) for x in th.src.A.objects]}

    def _adjunction(self, adj, kind="adjunction", root="root"):
        j = getattr(adj, root)
        V = j.cod.base
        return {"kind": kind, root: self.ref(j), "left": self.ref(adj.left),
                "right": self.ref(adj.right),
                "sharp": [[*k, V.mor_to_json(m)] for k, m in sorted(adj.sharp.items())],
                "flat": [[*k, V.mor_to_json(m)] for k, m in sorted(adj.flat.items())]}

    def _coadjunction(self, co):
        return self._adjunction(co, "coadjunction", "coroot")

    def bundle(self):
        return {"kind": "bundle", "items": list(self.items)}


def emit(objs, ws=None):
    """A bundle document holding objs (and anything they need that ws lacks)."""
    em = Emitter(ws)
    for obj in objs:
        em.add(obj)
    return em.bundle()


def corpus_documents():
    """The shipped fixtures as (file stem, document) pairs."""
    from . import corpus as c
    ws = Workspace()
    out = []

    def put(stem, obj):
        em = Emitter(ws)
        em.add(obj, stem)
        doc = em.items[-1] if len(em.items) == 1 else em.bundle()
        ws.add_doc(doc)
        ws.register(stem, obj)
        out.append((stem, doc))

    for stem, obj in [("Q2", c.Q2()), ("FS3", c.FS3()), ("FinSet256", c.FS256()),
                      ("CH3", c.CH3()), ("CH2", c.CH2()), ("DISC2", c.DISC2()),
                      ("PT", c.PT()), ("SETS3", c.SETS3()),
                      ("J01", c.J01()), ("JD", c.JD()), ("ID3", c.ID3()), ("INC1", c.INC1()), ("J2", c.J2()),
                      ("TRIV_J01", c.TRIV_J01()), ("TMAX", c.TMAX()), ("TCL", c.TCL()),
                      ("INT", c.INTERIOR())] + [(T.name, T) for T in c.INC1_MONADS()]:
        put(stem, obj)
    return out


def write_corpus(path=DATA):
    path = Path(path)
    path.mkdir(parents=True, exist_ok=True)
    for stem, doc in corpus_documents():
        (path / f"{stem}.json").write_text(dumps(doc))
