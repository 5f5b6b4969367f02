"""Built-in fixtures: small Boolean preorders, a finite-set example, and monads on them."""
from functools import lru_cache
from itertools import product

from .enriched import (EnrichedCategory, EnrichedFunctor, identity_functor,
                       monotone_functor, preorder_category)
from .relmonad import RelativeMonad, enumerate_relative_monads, trivial_monad
from .vkernel import Mor, make_bool_quantale, make_finset_skeleton


@lru_cache(maxsize=None)
def Q2():
    return make_bool_quantale("Q2")


@lru_cache(maxsize=None)
def FS3():
    return make_finset_skeleton(3, "FS3")


@lru_cache(maxsize=None)
def FS256():
    return make_finset_skeleton(256, "FinSet256")


@lru_cache(maxsize=None)
def CH3():
    return preorder_category(Q2(), 3, lambda x, y: x <= y, "CH3")


@lru_cache(maxsize=None)
def CH2():
    return preorder_category(Q2(), 2, lambda x, y: x <= y, "CH2", ["a", "b"])


@lru_cache(maxsize=None)
def DISC2():
    return preorder_category(Q2(), 2, lambda x, y: x == y, "DISC2")


@lru_cache(maxsize=None)
def J01():
    """The fully faithful inclusion a -> 0, b -> 1 of CH2 into CH3."""
    return monotone_functor(CH2(), CH3(), (0, 1), "J01")


@lru_cache(maxsize=None)
def JD():
    """The inclusion of DISC2 into CH3 at 0 and 1; not fully faithful."""
    return monotone_functor(DISC2(), CH3(), (0, 1), "JD")


@lru_cache(maxsize=None)
def ID3():
    return identity_functor(CH3())


def _bool_monad(root, t, name):
    E, A = root.cod, root.dom
    V = E.base
    return RelativeMonad(root, t, {x: V.arrow(1, E.hom_obj[(root(x), t[x])]) for x in A.objects},
                         {(x, y): V.arrow(E.hom_obj[(root(x), t[y])], E.hom_obj[(t[x], t[y])])
                          for x, y in product(A.objects, repeat=2)}, name)


def bool_monad(root, t, name=""):
    """The unique candidate data for object map t on a Boolean root; it may
    fail to type when t is not a monad (missing arrows are recorded as
    ill-typed placeholders so the validator can name them)."""
    E, A = root.cod, root.dom
    V = E.base

    def arrow(a, b):
        return V.arrow(a, b) or Mor(a, b, 0)

    return RelativeMonad(root, t, {x: arrow(1, E.hom_obj[(root(x), t[x])]) for x in A.objects},
                         {(x, y): arrow(E.hom_obj[(root(x), t[y])], E.hom_obj[(t[x], t[y])])
                          for x, y in product(A.objects, repeat=2)}, name)


@lru_cache(maxsize=None)
def TMAX():
    return bool_monad(J01(), (2, 2), "TMAX")


@lru_cache(maxsize=None)
def TCL():
    return bool_monad(ID3(), (1, 1, 2), "TCL")


@lru_cache(maxsize=None)
def TRIV_J01():
    return trivial_monad(J01())


@lru_cache(maxsize=None)
def INTERIOR():
    from .dual import RelativeComonad
    return RelativeComonad.from_bool(ID3(), (0, 1, 1), "INT")


# the finite-set example: a one-object root into finite sets on {0, 1, 2}


def _code(f, n):
    c = 0
    for v in f:
        c = c * n + v
    return c


def _decode(c, m, n):
    out = []
    for _ in range(m):
        c, v = divmod(c, n)
        out.append(v)
    return tuple(reversed(out))


@lru_cache(maxsize=None)
def SETS3():
    """Finite sets {0, 1, 2} enriched in themselves: E(m, n) = n^m with
    functions coded big-endian, and composition pairing code_f * |E(n,p)| + code_g."""
    V = FS256()
    objs = range(3)
    hom = {(m, n): n ** m for m in objs for n in objs}
    ident = {m: Mor(1, hom[(m, m)], (_code(tuple(range(m)), m),)) for m in objs}
    comp = {}
    for m, n, p in product(objs, repeat=3):
        a, b, c = hom[(m, n)], hom[(n, p)], hom[(m, p)]
        table = [0] * (a * b)
        for cf in range(a):
            f = _decode(cf, m, n)
            for cg in range(b):
                g = _decode(cg, n, p)
                table[V.pair(a, b, cf, cg)] = _code(tuple(g[v] for v in f), p)
        comp[(m, n, p)] = Mor(a * b, c, tuple(table))
    return EnrichedCategory(V, ["0", "1", "2"], hom, ident, comp, "Set3")


@lru_cache(maxsize=None)
def PT():
    V = FS256()
    return EnrichedCategory(V, ["*"], {(0, 0): 1}, {0: V.identity(1)},
                            {(0, 0, 0): V.identity(1)}, "PT")


@lru_cache(maxsize=None)
def INC1():
    V = FS256()
    return EnrichedFunctor(PT(), SETS3(), (1,), {(0, 0): V.identity(1)}, "INC1")


@lru_cache(maxsize=None)
def J2():
    """The point sent to the two-element set; not full, since 2 has four endomaps."""
    V = FS256()
    return EnrichedFunctor(PT(), SETS3(), (2,), {(0, 0): Mor(1, 4, (1,))}, "J2")


@lru_cache(maxsize=None)
def INC1_MONADS():
    ms = enumerate_relative_monads(INC1())
    for i, T in enumerate(ms):
        T.name = f"INC1_{i}"
    return tuple(ms)


def bool_monads():
    return [TRIV_J01(), TMAX(), TCL()]


def all_monads():
    return bool_monads() + list(INC1_MONADS())


def categories():
    return {"CH3": CH3(), "CH2": CH2(), "DISC2": DISC2(), "PT": PT(), "SETS3": SETS3()}


def functors():
    return {"J01": J01(), "JD": JD(), "ID3": ID3(), "INC1": INC1(), "J2": J2()}
