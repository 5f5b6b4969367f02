"""Independent direct-scan oracle for the enumeration ground truth.

Uses nothing from the package: plain Python sets and functions.
Prints the counts that tests/test_enumeration_truth.py freezes.
"""
from itertools import product


def functions(m, n):
    return list(product(range(n), repeat=m))


def then(f, g):
    # diagrammatic composite of tuple-functions
    return tuple(g[i] for i in f)


def inc1_monads(max_t=2):
    """Monads on j: PT -> FinSet{0,1,2}, j(pt) = 1, with t(pt) <= max_t."""
    found = []
    for t in range(max_t + 1):
        jt = functions(1, t)          # E(j pt, t pt)
        tt = functions(t, t)          # E(t pt, t pt)
        ident = tuple(range(t))
        for eta in jt:
            for ext in product(tt, repeat=len(jt)):
                dag = dict(zip(jt, ext))
                if dag.get(eta) != ident:
                    continue
                if any(then(eta, dag[g]) != g for g in jt):
                    continue
                if any(then(dag[f], dag[g]) != dag[then(f, dag[g])]
                       for f in jt for g in jt):
                    continue
                found.append((t, eta, ext))
    return found


def inc1_em(monad, n_e=3):
    """Algebras (e, alpha) for one INC1 monad, with alpha sending a point a of e
    to a map t -> e, and the number of homomorphisms between each pair."""
    t, eta, ext = monad
    jt = functions(1, t)
    dag = dict(zip(jt, ext))
    algs = []
    for e in range(n_e):
        pts = functions(1, e)
        for alpha in product(functions(t, e), repeat=len(pts)):
            a = dict(zip(pts, alpha))
            if any(then(eta, a[p]) != p for p in pts):
                continue
            # f-dagger ; alpha(p) = alpha(f ; alpha(p)) for every f: 1 -> t
            if any(then(dag[f], a[p]) != a[then(f, a[p])] for f in jt for p in pts):
                continue
            algs.append((e, a))
    homs = {}
    for i, (e, a) in enumerate(algs):
        for k, (e2, b) in enumerate(algs):
            homs[(i, k)] = sum(1 for h in functions(e, e2)
                               if all(then(a[p], h) == b[then(p, h)] for p in a))
    return algs, homs


def j01_bool_monads():
    """Monads on the inclusion {a<=b} -> {0<=1<=2} over the Boolean base."""
    j = (0, 1)
    found = []
    for t in product(range(3), repeat=2):
        if not all(j[x] <= t[x] for x in range(2)):
            continue
        if all(t[x] <= t[y] for x in range(2) for y in range(2) if j[x] <= t[y]):
            found.append(t)
    return found


def trivial_to_tmax_morphisms():
    # tau_x : I -> E(jx, 2); in a preorder it exists iff jx <= 2 and is unique;
    # both compatibility squares hold automatically.
    j, t2 = (0, 1), (2, 2)
    return 1 if all(j[x] <= t2[x] for x in range(2)) else 0


def preorders(n):
    """Labelled preorders on range(n) as sets of pairs (reflexive, transitive)."""
    pairs = [(x, y) for x in range(n) for y in range(n) if x != y]
    out = []
    for bits in product((0, 1), repeat=len(pairs)):
        le = {(x, x) for x in range(n)} | {p for p, b in zip(pairs, bits) if b}
        if all((x, z) in le for (x, y) in le for (y2, z) in le if y == y2):
            out.append(le)
    return out


def monotone(le1, n1, le2, n2):
    return [m for m in product(range(n2), repeat=n1)
            if all((m[x], m[y]) in le2 for (x, y) in le1)]


CH2 = {(0, 0), (0, 1), (1, 1)}
CH3 = {(x, y) for x in range(3) for y in range(3) if x <= y}


def tmax_resolutions(max_apex=3):
    """l -|_j r over {a<=b} -> {0<=1<=2} inducing t = (2, 2): C(lx, c) iff jx <= rc."""
    j, t = (0, 1), (2, 2)
    found = []
    for n in range(1, max_apex + 1):
        for le in preorders(n):
            for l in monotone(CH2, 2, le, n):
                for r in monotone(le, n, CH3, 3):
                    if all(((l[x], c) in le) == (j[x] <= r[c]) for x in range(2) for c in range(n)):
                        if tuple(r[l[x]] for x in range(2)) == t:
                            found.append((n, sorted(le), l, r))
    return found


def em_carriers(j, t, n_e=3):
    """Carriers of algebras of a Boolean j-monad on the chain: jx <= e implies tx <= e."""
    return [e for e in range(n_e) if all(t[x] <= e for x in range(len(j)) if j[x] <= e)]


def interior_scans(d=(0, 1, 1)):
    """For an interior operator d on {0<=1<=2}: is it a comonad, its co-Kleisli
    order, and the carriers e with e <= d e."""
    ok = all(d[x] <= x for x in range(3)) and all(
        d[x] <= d[y] for x in range(3) for y in range(3) if d[x] <= y)
    cokl = {(x, y): int(d[x] <= y) for x in range(3) for y in range(3)}
    carriers = [e for e in range(3) if e <= d[e]]
    return ok, cokl, carriers


def pushforward_obj(t=(2, 2), rp=(0, 1, 1), lp=(0, 1)):
    """Object map of r' t lp, after checking that J01 -|_1 r' holds pointwise."""
    j = (0, 1)
    assert all((j[a] <= c) == (a <= rp[c]) for a in range(2) for c in range(3))
    return tuple(rp[t[lp[a]]] for a in range(2))


def kleisli_order(j, t):
    n = len(j)
    return {(x, y): int(j[x] <= t[y]) for x in range(n) for y in range(n)}


if __name__ == "__main__":
    monads = inc1_monads()
    print("inc1_monads_t_le_2", len(monads))
    for m in monads:
        print("  ", m)
    for m in monads:
        algs, homs = inc1_em(m)
        print("  em", [e for e, _ in algs], "homs", [homs[k] for k in sorted(homs)])
    print("j01_bool_monads", len(j01_bool_monads()), j01_bool_monads())
    print("trivial_to_tmax_morphisms", trivial_to_tmax_morphisms())
    res = tmax_resolutions()
    print("tmax_resolutions_apex_le_3", len(res), "by size",
          [sum(1 for r in res if r[0] == n) for n in (1, 2, 3)])
    print("em_carriers triv", em_carriers((0, 1), (0, 1)), "tmax", em_carriers((0, 1), (2, 2)),
          "tcl", em_carriers((0, 1, 2), (1, 1, 2)))
    print("interior (0,1,1)", interior_scans())
    print("pushforward TMAX", pushforward_obj())
    print("kleisli TMAX", kleisli_order((0, 1), (2, 2)), "TCL", kleisli_order((0, 1, 2), (1, 1, 2)))
    print("interior (0,0,1)", interior_scans((0, 0, 1))[0])
