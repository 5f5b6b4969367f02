"""Loose duality: a V-category C becomes C^op enriched in the reversed base.

Every comonad-side notion is obtained by dualizing to the monad side, running
the monad-side code and dualizing back.  Duals are cached on the original so
that op(op(x)) is x itself.
"""
from itertools import product

from .enriched import (Distributor, EnrichedCategory, EnrichedFunctor, Form, Frame)
from .errors import ValidationReport
from .relmonad import (RelativeAdjunction, RelativeMonad, induced_monad,
                       validate_adjunction, validate_relative_monad)
from .vkernel import reverse_base


def op_base(V):
    return reverse_base(V)


def _cached(item, make):
    d = getattr(item, "_op", None)
    if d is None:
        d = make()
        item._op = d
        d._op = item
    return d


def op_category(C):
    def make():
        hom = {(x, y): C.hom_obj[(y, x)] for x, y in product(C.objects, repeat=2)}
        comp = {(x, y, z): C.comp[(z, y, x)] for x, y, z in product(C.objects, repeat=3)}
        return EnrichedCategory(op_base(C.base), list(C.names), hom, dict(C.ident), comp,
                                C.name + "^op")
    return _cached(C, make)


def op_functor(F):
    def make():
        hom = {(x, y): m for (y, x), m in F.hom_map.items()}
        return EnrichedFunctor(op_category(F.dom), op_category(F.cod), F.obj_map, hom,
                               F.name + "^op")
    return _cached(F, make)


def _op_origin(origin):
    if not origin:
        return None
    if origin[0] == "loose_identity":
        return ("loose_identity", op_category(origin[1]))
    if origin[0] == "restrict":
        _, q, f, g = origin
        return ("restrict", op_distributor(q), op_functor(g), op_functor(f))
    return None


def op_distributor(p):
    def make():
        obj = {(y, x): o for (x, y), o in p.obj.items()}
        lact = {(y2, y, x): m for (x, y, y2), m in p.ract.items()}
        ract = {(y, x, x2): m for (x2, x, y), m in p.lact.items()}
        return Distributor(op_category(p.right), op_category(p.left), obj, lact, ract,
                           p.name + "^op", _op_origin(p.origin))
    return _cached(p, make)


def op_frame(fr):
    return Frame([op_distributor(p) for p in reversed(fr.chain)],
                 op_functor(fr.g), op_functor(fr.f), op_distributor(fr.q))


def op_form(phi):
    def make():
        comps = {tuple(reversed(xs)): m for xs, m in phi.comps.items()}
        return Form(op_frame(phi.frame), comps, phi.name + "^op")
    return _cached(phi, make)


# relative comonads


def _rename(law, co):
    head, _, rest = law.partition(".")
    for a, b in co:
        rest = rest.replace(a, b)
    return head, rest


def _translate(rep, subject, prefix, words):
    out = ValidationReport(subject)
    for v in rep.violations:
        _, rest = _rename(v.law, words)
        out.add(prefix + rest, *reversed(v.witness))
    return out


_COMONAD_WORDS = [("unit", "counit"), ("extension", "coextension"),
                  ("associativity", "coassociativity")]


class RelativeComonad:
    """An i-comonad: object map d, counits counit[x]: I -> X(dx, ix) and
    coextension operators coext[(x, y)]: X(dx, iy) -> X(dx, dy)."""

    def __init__(self, coroot, obj, counit, coext, name=""):
        self.coroot = coroot
        self.obj = tuple(obj)
        self.counit = dict(counit)
        self.coext = dict(coext)
        self.name = name

    @property
    def Z(self):
        return self.coroot.dom

    @property
    def X(self):
        return self.coroot.cod

    def __call__(self, x):
        return self.obj[x]

    def __eq__(self, other):
        if not isinstance(other, RelativeComonad):
            return NotImplemented
        return (self.coroot == other.coroot and self.obj == other.obj
                and self.counit == other.counit and self.coext == other.coext)

    __hash__ = None

    def __repr__(self):
        return f"<RelativeComonad {self.name or '?'} {self.obj}>"

    def to_monad(self):
        """The same data read as a monad on the dual root."""
        return RelativeMonad(op_functor(self.coroot), self.obj, self.counit,
                             {(y, x): m for (x, y), m in self.coext.items()}, self.name)

    @classmethod
    def from_monad(cls, T):
        return cls(op_functor(T.root), T.obj, T.unit,
                   {(x, y): m for (y, x), m in T.ext.items()}, T.name)

    @classmethod
    def from_bool(cls, coroot, d, name=""):
        """The unique candidate data for object map d on a Boolean coroot."""
        from .corpus import bool_monad
        return cls.from_monad(bool_monad(op_functor(coroot), d, name))


def trivial_comonad(coroot):
    from .relmonad import trivial_monad
    D = RelativeComonad.from_monad(trivial_monad(op_functor(coroot)))
    D.name = f"cotriv({coroot.name})"
    return D


def validate_relative_comonad(D):
    rep = validate_relative_monad(D.to_monad())
    return _translate(rep, D.name or "comonad", "comonad.", _COMONAD_WORDS)


def dual_monad(T):
    """A j-monad as a j^op-comonad on the dual, and back."""
    if isinstance(T, RelativeComonad):
        return T.to_monad()
    return RelativeComonad.from_monad(T)


# relative coadjunctions


class RelativeCoadjunction:
    """l -|^i r for a coroot i: Z -> E with right r: Z -> X and left l: X -> E,
    stored as sharp[(x, z)]: E(lx, iz) -> X(x, rz) and flat its inverse."""

    def __init__(self, coroot, left, right, sharp, flat, name=""):
        self.coroot = coroot
        self.left = left
        self.right = right
        self.sharp = dict(sharp)
        self.flat = dict(flat)
        self.name = name

    @property
    def apex(self):
        return self.left.dom

    def __eq__(self, other):
        if not isinstance(other, RelativeCoadjunction):
            return NotImplemented
        return (self.coroot == other.coroot and self.left == other.left
                and self.right == other.right and self.sharp == other.sharp
                and self.flat == other.flat)

    __hash__ = None

    def to_adjunction(self):
        return RelativeAdjunction(op_functor(self.coroot), op_functor(self.right),
                                  op_functor(self.left),
                                  {(z, x): m for (x, z), m in self.flat.items()},
                                  {(z, x): m for (x, z), m in self.sharp.items()}, self.name)

    @classmethod
    def from_adjunction(cls, adj):
        return cls(op_functor(adj.root), op_functor(adj.right), op_functor(adj.left),
                   {(x, z): m for (z, x), m in adj.flat.items()},
                   {(x, z): m for (z, x), m in adj.sharp.items()}, adj.name)


def dual_adjunction(adj):
    if isinstance(adj, RelativeCoadjunction):
        return adj.to_adjunction()
    return RelativeCoadjunction.from_adjunction(adj)


def validate_coadjunction(co):
    rep = validate_adjunction(co.to_adjunction())
    return _translate(rep, co.name or "coadjunction", "coadjunction.", [])


def induced_comonad(co):
    D = RelativeComonad.from_monad(induced_monad(co.to_adjunction()))
    D.name = f"induced({co.name})"
    return D


def coadjunction_as_adjunction(co):
    """With identity coroot on E, l -|^1 r is the ordinary adjunction l -| r
    read with root 1_X."""
    from .enriched import identity_functor
    X = co.left.dom
    return RelativeAdjunction(identity_functor(X), co.left, co.right, co.sharp, co.flat,
                              co.name)


# co-Kleisli and co-Eilenberg-Moore


class CoConstruction:
    """A dualized construction: the category, the functor out of (co-Kleisli)
    or into (co-EM) it, the structure form, and the other leg if known."""

    def __init__(self, category, functor, form, other=None, source=None):
        self.category = category
        self.functor = functor
        self.form = form
        self.other = other
        self.source = source

    def __iter__(self):
        return iter((self.category, self.functor, self.form))


def co_kleisli(D):
    from .algebra import kleisli
    kl = kleisli(D.to_monad())
    cat = op_category(kl.category)
    cat.name = f"coKl({D.name})"
    return CoConstruction(cat, op_functor(kl.k), op_form(kl.opext), op_functor(kl.right), kl)


def co_em(D, budget=None):
    from .algebra import em_category
    em = em_category(D.to_monad(), budget)
    cat = op_category(em.category)
    cat.name = f"coEM({D.name})"
    other = op_functor(em.left) if em.left is not None else None
    return CoConstruction(cat, op_functor(em.u), op_form(em.ext), other, em)


def coresolution_from_cokleisli(D):
    from .algebra import resolution_from_kleisli
    return RelativeCoadjunction.from_adjunction(resolution_from_kleisli(D.to_monad()))


def coresolution_from_coem(D, budget=None):
    from .algebra import em_category, resolution_from_em
    T = D.to_monad()
    return RelativeCoadjunction.from_adjunction(resolution_from_em(T, em_category(T, budget)))


def dualize(item):
    """Dispatch on the kind of item; the result's dual is the item again."""
    if isinstance(item, EnrichedCategory):
        return op_category(item)
    if isinstance(item, EnrichedFunctor):
        return op_functor(item)
    if isinstance(item, Distributor):
        return op_distributor(item)
    if isinstance(item, Form):
        return op_form(item)
    if isinstance(item, (RelativeMonad, RelativeComonad)):
        return dual_monad(item)
    if isinstance(item, (RelativeAdjunction, RelativeCoadjunction)):
        return dual_adjunction(item)
    if hasattr(item, "tensor_obj"):
        return op_base(item)
    raise TypeError(f"cannot dualize {type(item).__name__}")
