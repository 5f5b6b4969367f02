"""relkit command line.

Every command loads the shipped corpus plus any ``--workspace`` directories,
prints one JSON document (or writes it to ``--out``) and exits with 0 on
success, 1 on law violations or negative verdicts, and 2 on malformed input.
"""
import argparse
import sys

from . import algebra, dual, formal, relmonad
from .enriched import (Frame, enumerate_forms, enumerate_functors, validate_category,
                       validate_distributor, validate_form, validate_functor)
from .errors import RelkitError, ValidationReport, as_budget
from .jsonio import Emitter, Workspace, dumps
from .vkernel import FinSetBase, validate_base

DEFAULT_BUDGET = 10**6


def _validate_base(V):
    # numeric skeleta are checked on their small objects only
    return validate_base(V, 3 if isinstance(getattr(V, "inner", V), FinSetBase) else None)


VALIDATORS = {
    "base": _validate_base,
    "category": validate_category,
    "functor": validate_functor,
    "distributor": validate_distributor,
    "form": validate_form,
    "monad": relmonad.validate_relative_monad,
    "comonad": dual.validate_relative_comonad,
    "monad_morphism": relmonad.validate_monad_morphism,
    "adjunction": relmonad.validate_adjunction,
    "coadjunction": dual.validate_coadjunction,
}


class Run:
    def __init__(self, args):
        self.args = args
        self.ws = Workspace.with_corpus()
        for d in args.workspace or []:
            self.ws.load(d)
        self.budget = as_budget(args.budget)

    def get(self, ref, kind=None):
        obj = self.ws.get(ref, kind)
        kind = kind or self.ws.docs.get(ref, {}).get("kind")
        if kind in VALIDATORS:
            rep = VALIDATORS[kind](obj)
            rep.subject = ref
            rep.raise_if_failed()
        return obj

    def emit(self, objs, names=()):
        em = Emitter(self.ws)
        for i, obj in enumerate(objs):
            name = names[i] if i < len(names) else None
            if name is not None:
                obj.name = name
            em.add(obj, name)
        return em.bundle()


def _report_doc(reports):
    return {"kind": "report", "ok": all(r.ok for r in reports),
            "reports": [r.to_json() for r in reports]}


def cmd_validate(run, a):
    ws = run.ws
    if a.targets:
        names = []
        for t in a.targets:
            names += [t] if t in ws.docs else ws.load(t)
    else:
        names = list(ws.order)
    reports = []
    for n in names:
        kind = ws.docs[n]["kind"]
        rep = VALIDATORS[kind](ws.get(n))
        rep.subject = n
        reports.append(rep)
    doc = _report_doc(reports)
    return doc, 0 if doc["ok"] else 1


def cmd_kleisli(run, a):
    T = run.get(a.monad, "monad")
    kl = algebra.kleisli(T)
    adj = algebra.resolution_from_kleisli(T, kl)
    n = T.name
    return run.emit([kl.category, kl.k, kl.right, kl.opext, adj],
                    [f"Kl({n})", f"Kl({n}).k", f"Kl({n}).v", f"Kl({n}).opext",
                     f"Kl({n}).resolution"]), 0


def cmd_em(run, a):
    T = run.get(a.monad, "monad")
    em = algebra.em_category(T, run.budget)
    adj = algebra.resolution_from_em(T, em)
    n = T.name
    return run.emit([em.category, em.u, em.left, em.ext, adj],
                    [f"EM({n})", f"EM({n}).u", f"EM({n}).f", f"EM({n}).ext",
                     f"EM({n}).resolution"]), 0


def cmd_compare(run, a):
    T = run.get(a.monad, "monad")
    kl = algebra.kleisli(T)
    em = algebra.em_category(T, run.budget)
    F = algebra.comparison(T, kl, em)
    validate_functor(F).raise_if_failed()
    n = T.name
    return run.emit([kl.category, em.category, F],
                    [f"Kl({n})", f"EM({n})", f"compare({n})"]), 0


def _co(run, a, which):
    D = run.get(a.comonad, "comonad")
    n = D.name
    if which == "cokleisli":
        c = dual.co_kleisli(D)
        co = dual.coresolution_from_cokleisli(D)
        tag, fn, gn = f"coKl({n})", "k", "v"
    else:
        c = dual.co_em(D, run.budget)
        co = dual.coresolution_from_coem(D, run.budget)
        tag, fn, gn = f"coEM({n})", "u", "f"
    return run.emit([c.category, c.functor, c.other, c.form, co],
                    [tag, f"{tag}.{fn}", f"{tag}.{gn}", f"{tag}.form",
                     f"{tag}.coresolution"]), 0


def cmd_cokleisli(run, a):
    return _co(run, a, "cokleisli")


def cmd_coem(run, a):
    return _co(run, a, "coem")


def cmd_induce(run, a):
    obj = run.get(a.adjunction)
    if isinstance(obj, dual.RelativeCoadjunction):
        out = dual.induced_comonad(obj)
    elif isinstance(obj, relmonad.RelativeAdjunction):
        out = relmonad.induced_monad(obj)
    else:
        raise RelkitError(f"{a.adjunction} is not an adjunction")
    return run.emit([out], [a.name or f"induced({a.adjunction})"]), 0


def cmd_compose(run, a):
    inner = run.get(a.inner, "adjunction")
    outer = run.get(a.outer, "adjunction")
    lp = run.get(a.lp, "functor")
    adj, lm = relmonad.compose_adjunctions(inner, outer, lp)
    relmonad.validate_adjunction(adj).raise_if_failed()
    relmonad.validate_left_morphism(lm).raise_if_failed()
    return run.emit([adj], [a.name or f"{a.inner}*{a.outer}"]), 0


def cmd_pushforward(run, a):
    outer = run.get(a.outer, "adjunction")
    T = run.get(a.monad, "monad")
    lp = run.get(a.lp, "functor")
    S = relmonad.pushforward_monad(outer, T, lp)
    relmonad.validate_relative_monad(S).raise_if_failed()
    return run.emit([S], [a.name or f"push({a.monad})"]), 0


def cmd_translate(run, a):
    if a.from_monoid_form:
        root, mult, unit = a.from_monoid_form
        j = run.get(root, "functor")
        mf, uf = run.get(mult, "form"), run.get(unit, "form")
        M = relmonad.MonoidFormMonad(j, mf.frame.q, mf, uf)
        relmonad.validate_loose_relative_monad(M).raise_if_failed()
        T = relmonad.from_monoid_form(M)
        return run.emit([T], [a.name or f"monad({mult})"]), 0
    obj = run.get(a.item)
    n = a.item
    if isinstance(obj, relmonad.RelativeMonad):
        if a.to == "loose":
            M = relmonad.to_loose_monad(obj)
        else:
            M = relmonad.to_monoid_form(obj)
        return run.emit([M.mult, M.unit], [f"{n}.mult", f"{n}.unit"]), 0
    if isinstance(obj, relmonad.RelativeAdjunction):
        kind = a.to or "unit_counit"
        if kind not in relmonad.AdjunctionData.KINDS:
            raise RelkitError(f"unknown presentation {kind!r}")
        forms = relmonad.adjunction_forms(obj)
        d = relmonad.to_presentation(obj, kind)
        fs = d.fields()
        return run.emit([forms[f] for f in fs], [f"{n}.{f}" for f in fs]), 0
    raise RelkitError(f"cannot translate {n}")


def cmd_dualize(run, a):
    names = run.ws.load(a.item) if a.item not in run.ws.docs else [a.item]
    em = Emitter(run.ws)
    for n in names:
        obj = run.get(n)
        if run.ws.docs[n]["kind"] == "base":
            em.items.append({"kind": "base", "backend": "reverse", "of": n, "name": n + "^op"})
            continue
        d = dual.dualize(obj)
        if d.name == obj.name:
            d.name = n + "^op"
        em.add(d)
    return em.bundle(), 0


def cmd_certify(run, a):
    T = run.get(a.monad, "monad")
    if a.opalgebra_object:
        cand = algebra.kleisli(T).opalgebra
        v = algebra.check_opalgebra_object(T, cand, budget=run.budget, max_n=a.max_n)
        what = "opalgebra_object"
    else:
        cand = algebra.em_category(T, run.budget).algebra
        v = algebra.check_algebra_object(T, cand, budget=run.budget, max_n=a.max_n)
        what = "algebra_object"
    doc = {"kind": "verdict", "property": what, "monad": a.monad}
    doc.update(v.to_json())
    return doc, 0 if v.certified else 1


def cmd_check(run, a):
    args = a.args
    need = {"colimit": 4, "limit": 4, "dense": 1, "ff": 1, "absolute": 5}[a.what]
    if len(args) != need:
        raise RelkitError(f"check {a.what} takes {need} arguments")
    doc = {"kind": "check", "property": a.what, "args": list(args)}
    if a.what in ("dense", "ff"):
        j = run.get(args[0], "functor")
        ok = formal.is_dense(j, run.budget) if a.what == "dense" else formal.is_fully_faithful(j)
        doc["verdict"] = bool(ok)
        return doc, 0 if ok else 1
    if a.what == "absolute":
        j = run.get(args[0], "functor")
        args = args[1:]
    p = run.get(args[0], "distributor")
    f, c = run.get(args[1], "functor"), run.get(args[2], "functor")
    lam = run.get(args[3], "form")
    if a.what == "colimit":
        res = formal.check_weighted_colimit(p, f, c, lam, run.budget)
    elif a.what == "limit":
        res = formal.check_weighted_limit(p, f, c, lam, run.budget)
    else:
        res = formal.is_j_absolute(j, p, f, c, lam, run.budget)
    doc.update(res.to_json(f.cod.base))
    return doc, 0 if res.verdict else 1


def cmd_enumerate(run, a):
    args = a.args
    b = run.budget
    if a.what == "monads":
        (root,) = args
        items = relmonad.enumerate_relative_monads(run.get(root, "functor"), b, a.max_obj)
        for i, T in enumerate(items):
            T.name = f"{root}.monad{i}"
    elif a.what == "morphisms":
        src, tgt = args
        items = relmonad.enumerate_monad_morphisms(run.get(src, "monad"), run.get(tgt, "monad"), b)
        for i, th in enumerate(items):
            th.name = f"{src}->{tgt}.{i}"
    elif a.what == "functors":
        C, D = args
        items = enumerate_functors(run.get(C, "category"), run.get(D, "category"), b)
        for i, F in enumerate(items):
            F.name = f"{C}->{D}.{i}"
    elif a.what == "forms":
        (tmpl,) = args
        phi = run.ws.get(tmpl, "form")
        fr = phi.frame
        items = enumerate_forms(Frame(fr.chain, fr.f, fr.g, fr.q), b)
        for i, f in enumerate(items):
            f.name = f"{tmpl}.{i}"
    elif a.what == "resolutions":
        (m,) = args
        items = algebra.enumerate_resolutions(run.get(m, "monad"), a.max_apex, b)
        for i, adj in enumerate(items):
            adj.name = f"{m}.resolution{i}"
    else:
        raise RelkitError(f"unknown enumeration {a.what!r}")
    em = Emitter(run.ws)
    for obj in items:
        em.add(obj)
    return {"kind": "listing", "what": a.what, "args": list(args), "count": len(items),
            "budget": b.limit, "items": em.items}, 0


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--workspace", action="append", metavar="DIR",
                        help="extra JSON documents (repeatable)")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="enumeration budget in candidates")
    common.add_argument("--out", metavar="FILE", help="write the result here")
    ap = argparse.ArgumentParser(prog="relkit", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(fn=fn)
        return p

    add("validate", cmd_validate, "validate documents").add_argument("targets", nargs="*")
    add("kleisli", cmd_kleisli, "Kleisli category and resolution").add_argument("monad")
    add("em", cmd_em, "Eilenberg-Moore category and resolution").add_argument("monad")
    add("compare", cmd_compare, "comparison functor Kl(T) -> EM(T)").add_argument("monad")
    add("cokleisli", cmd_cokleisli, "co-Kleisli category").add_argument("comonad")
    add("coem", cmd_coem, "category of coalgebras").add_argument("comonad")
    p = add("induce", cmd_induce, "monad induced by an adjunction")
    p.add_argument("adjunction")
    p.add_argument("--name")
    p = add("compose", cmd_compose, "compose an adjunction with an outer one")
    p.add_argument("inner")
    p.add_argument("outer")
    p.add_argument("lp")
    p.add_argument("--name")
    p = add("pushforward", cmd_pushforward, "push a monad along an outer adjunction")
    p.add_argument("outer")
    p.add_argument("monad")
    p.add_argument("lp")
    p.add_argument("--name")
    p = add("translate", cmd_translate, "change presentation")
    p.add_argument("item", nargs="?")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--monoid-form", dest="to", action="store_const", const="monoid")
    g.add_argument("--loose", dest="to", action="store_const", const="loose")
    g.add_argument("--presentation", dest="to", choices=relmonad.AdjunctionData.KINDS)
    g.add_argument("--from-monoid-form", nargs=3, metavar=("ROOT", "MULT", "UNIT"))
    p.add_argument("--name")
    add("dualize", cmd_dualize, "loose dual of a document").add_argument("item")
    p = add("certify", cmd_certify, "bounded universal-property certification")
    p.add_argument("monad")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--opalgebra-object", action="store_true")
    g.add_argument("--algebra-object", action="store_true")
    p.add_argument("--max-n", type=int, default=3, help="largest competitor preorder")
    p = add("check", cmd_check, "colimit, limit, density, full faithfulness, absoluteness")
    p.add_argument("what", choices=["colimit", "limit", "dense", "ff", "absolute"])
    p.add_argument("args", nargs="*")
    p = add("enumerate", cmd_enumerate, "exhaustive enumeration")
    p.add_argument("what", choices=["monads", "morphisms", "functors", "forms", "resolutions"])
    p.add_argument("args", nargs="*")
    p.add_argument("--max-obj", type=int)
    p.add_argument("--max-apex", type=int, default=3)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        doc, code = args.fn(Run(args), args)
    except RelkitError as e:
        doc = {"kind": "error", "error": type(e).__name__, "message": str(e)}
        if hasattr(e, "report") and isinstance(e.report, ValidationReport):
            doc["report"] = e.report.to_json()
        code = e.exit_code
    except ValueError as e:
        doc = {"kind": "error", "error": "MalformedTables", "message": str(e)}
        code = 2
    text = dumps(doc)
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
