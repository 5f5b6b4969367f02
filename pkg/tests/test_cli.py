import json
import subprocess
import sys

import pytest

from relkit import corpus
from relkit.cli import main
from relkit.enriched import identity_functor, monotone_functor
from relkit.jsonio import Workspace, dumps, emit
from relkit.relmonad import RelativeAdjunction


def run(capsys, *argv):
    code = main(list(argv))
    return code, json.loads(capsys.readouterr().out)


def test_validate_corpus(capsys):
    code, doc = run(capsys, "validate")
    assert code == 0 and doc["ok"]
    assert {r["subject"] for r in doc["reports"]} >= {"TMAX", "SETS3", "INC1_4", "INT"}


def test_enumerate_ground_truth(capsys):
    code, doc = run(capsys, "enumerate", "monads", "INC1", "--max-obj", "2")
    assert code == 0 and doc["count"] == 5
    code, doc = run(capsys, "enumerate", "morphisms", "TRIV_J01", "TMAX")
    assert code == 0 and doc["count"] == 1


def test_enumerate_budget_exceeded(capsys):
    code, doc = run(capsys, "enumerate", "monads", "INC1", "--budget", "3")
    assert code != 0 and doc["error"] == "EnumerationBudgetExceeded"


def test_output_is_deterministic(capsys):
    first = run(capsys, "em", "TCL")
    second = run(capsys, "em", "TCL")
    assert first == second


def test_checks(capsys):
    assert run(capsys, "check", "ff", "J01")[0] == 0
    assert run(capsys, "check", "ff", "J2")[0] == 1
    assert run(capsys, "check", "dense", "ID3")[0] == 0
    code, doc = run(capsys, "check", "dense", "JD")
    assert code == 1 and doc["verdict"] is False


def test_wrong_arity_is_input_error(capsys):
    assert run(capsys, "check", "ff")[0] == 2


def test_missing_file_and_reference(capsys, tmp_path):
    assert run(capsys, "validate", str(tmp_path / "nosuch.json"))[0] == 2
    bad = {"kind": "functor", "name": "F", "dom": "CH2", "cod": "NOPE",
           "obj_map": [0, 1], "hom_map": []}
    (tmp_path / "F.json").write_text(json.dumps(bad))
    code, doc = run(capsys, "validate", "--workspace", str(tmp_path), "F")
    assert code == 2 and doc["kind"] == "error"


def test_corrupted_category_is_named(capsys, tmp_path):
    doc = dict(Workspace.with_corpus().docs["SETS3"])
    doc["name"] = "SETS3_BAD"
    comp = [list(row) for row in doc["compose"]]
    for row in comp:
        if row[:3] == [2, 2, 2]:
            dom, cod, _ = row[3]
            row[3] = [dom, cod, [0] * dom]
    doc["compose"] = comp
    (tmp_path / "bad.json").write_text(json.dumps(doc))
    code, out = run(capsys, "validate", "--workspace", str(tmp_path), "SETS3_BAD")
    assert code == 1 and not out["ok"]
    laws = {v["law"] for v in out["reports"][0]["violations"]}
    assert "category.left_unit" in laws


def test_kleisli_bundle_round_trip(capsys, tmp_path):
    code = main(["kleisli", "TMAX", "--out", str(tmp_path / "kl.json")])
    assert code == 0
    capsys.readouterr()
    code, doc = run(capsys, "validate", "--workspace", str(tmp_path))
    assert code == 0 and doc["ok"]
    code, doc = run(capsys, "induce", "--workspace", str(tmp_path), "Kl(TMAX).resolution",
                    "--name", "TMAX")
    assert code == 0
    mine = [d for d in doc["items"] if d["kind"] == "monad"][0]
    assert mine == Workspace.with_corpus().docs["TMAX"]


def test_certify(capsys):
    code, doc = run(capsys, "certify", "TMAX", "--opalgebra-object")
    assert code == 0 and doc["verdict"].startswith("CERTIFIED")
    code, doc = run(capsys, "certify", "TCL", "--algebra-object")
    assert code == 0 and doc["verdict"].startswith("CERTIFIED")


def test_dualize_round_trip(capsys, tmp_path):
    main(["dualize", "TMAX", "--out", str(tmp_path / "d.json")])
    capsys.readouterr()
    code, doc = run(capsys, "validate", "--workspace", str(tmp_path))
    assert code == 0
    kinds = {r["subject"] for r in doc["reports"]}
    assert "TMAX^op" in kinds


def test_cokleisli_of_interior(capsys):
    code, doc = run(capsys, "cokleisli", "INT")
    assert code == 0
    cat = [d for d in doc["items"] if d["kind"] == "category"][0]
    assert cat["homs"] == [[1, 1, 1], [0, 1, 1], [0, 1, 1]]


def test_monoid_form_translation_round_trip(capsys, tmp_path):
    main(["translate", "TMAX", "--monoid-form", "--out", str(tmp_path / "m.json")])
    capsys.readouterr()
    code, doc = run(capsys, "translate", "--workspace", str(tmp_path),
                    "--from-monoid-form", "J01", "TMAX.mult", "TMAX.unit", "--name", "TMAX")
    assert code == 0
    mine = [d for d in doc["items"] if d["kind"] == "monad"][0]
    assert mine == Workspace.with_corpus().docs["TMAX"]


@pytest.mark.parametrize("kind", ["sharp_flat", "unit_flat", "unit_counit", "sharp_counit"])
def test_presentation_translation(capsys, tmp_path, kind):
    main(["kleisli", "TCL", "--out", str(tmp_path / "kl.json")])
    capsys.readouterr()
    code, doc = run(capsys, "translate", "--workspace", str(tmp_path), "Kl(TCL).resolution",
                    "--presentation", kind)
    assert code == 0
    forms = {d["name"] for d in doc["items"] if d["kind"] == "form"}
    a, b = {"sharp_flat": ("sharp", "flat"), "unit_flat": ("unit", "flat"),
            "unit_counit": ("unit", "counit"), "sharp_counit": ("sharp", "counit")}[kind]
    assert {f"Kl(TCL).resolution.{a}", f"Kl(TCL).resolution.{b}"} <= forms


def _outer_doc():
    CH2, CH3 = corpus.CH2(), corpus.CH3()
    r = monotone_functor(CH3, CH2, (0, 1, 1), "R")
    V = CH2.base
    tab = {(a, c): V.arrow(CH3.hom_obj[(a, c)], CH2.hom_obj[(a, r(c))])
           for a in CH2.objects for c in CH3.objects}
    inv = {k: V.arrow(m.cod, m.dom) for k, m in tab.items()}
    outer = RelativeAdjunction(identity_functor(CH2), corpus.J01(), r, tab, inv, "OUTER")
    doc = emit([outer], Workspace.with_corpus())
    # corpus objects are referenced by name rather than copied
    assert {d["kind"] for d in doc["items"]} == {"functor", "adjunction"}
    return doc


def test_compose_and_pushforward(capsys, tmp_path):
    (tmp_path / "outer.json").write_text(dumps(_outer_doc()))
    main(["kleisli", "TMAX", "--out", str(tmp_path / "kl.json")])
    capsys.readouterr()
    ws = ["--workspace", str(tmp_path)]
    lp = '{"identity": "CH2"}'
    code, push = run(capsys, "pushforward", *ws, "OUTER", "TMAX", lp)
    assert code == 0
    monad = [d for d in push["items"] if d["kind"] == "monad"][0]
    assert monad["obj_map"] == [1, 1]
    main(["compose", *ws, "Kl(TMAX).resolution", "OUTER", lp,
          "--out", str(tmp_path / "comp.json")])
    capsys.readouterr()
    code, ind = run(capsys, "induce", *ws, "Kl(TMAX).resolution*OUTER", "--name", "push(TMAX)")
    assert code == 0
    assert [d for d in ind["items"] if d["kind"] == "monad"][0] == monad


def test_console_script_entry_point():
    out = subprocess.run([sys.executable, "-m", "relkit.cli", "check", "ff", "J01"],
                         capture_output=True, text=True)
    assert out.returncode == 0 and json.loads(out.stdout)["verdict"] is True


def test_compare_sends_objects_to_free_algebras(capsys):
    code, doc = run(capsys, "compare", "TCL")
    assert code == 0
    F = [d for d in doc["items"] if d["kind"] == "functor"][0]
    # free algebras on 0, 1, 2 have carriers 1, 1, 2; EM(TCL) lists carriers 1 then 2
    assert F["obj_map"] == [0, 0, 1]


@pytest.mark.parametrize("cmd", [["kleisli", "INC1_2"], ["em", "INC1_1"], ["coem", "INT"],
                                 ["dualize", "SETS3"]])
def test_reemission_is_byte_identical(capsys, tmp_path, cmd):
    path = tmp_path / "a.json"
    assert main(cmd + ["--out", str(path)]) == 0
    text = path.read_text()
    ws = Workspace.with_corpus()
    names = ws.load(path)
    again = emit([ws.get(n) for n in names], Workspace.with_corpus())
    assert dumps(again) == text
    assert main(["validate", "--workspace", str(tmp_path)]) == 0
