import json
from importlib import resources

import jsonschema
import pytest

from intensio.cli import main
from intensio.models import Frame
from intensio.paradox import contradiction_frame
from intensio.schema import print_instance
from intensio.walkthrough import diagonal_instance

SCHEMA = json.loads(resources.files("intensio").joinpath("schemas/output.schema.json").read_text())


def check(name, payload):
    jsonschema.validate(payload, {**SCHEMA, "$ref": f"#/$defs/{name}"})


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, name, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    data = json.loads(out)
    check(name, data)
    return data


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, frame in (("kaplan_5_1", Frame.kaplan(5, 1)), ("contra", contradiction_frame())):
        p = tmp_path / f"{name}.json"
        p.write_text(json.dumps(frame.to_json()))
        paths[name] = str(p)
    p = tmp_path / "diag.sexp"
    p.write_text(print_instance(diagonal_instance()))
    paths["diag"] = str(p)
    p = tmp_path / "partial.json"
    p.write_text(json.dumps({"E": 3, "partial": [[0, 0], [4, 1], [6, 2]]}))
    paths["partial"] = str(p)
    p = tmp_path / "h.json"
    p.write_text(json.dumps({"members": ["o0"]}))
    paths["h"] = str(p)
    p = tmp_path / "X.json"
    p.write_text(json.dumps({"universe": [0, 1, 2]}))
    paths["X"] = str(p)
    p = tmp_path / "phi.txt"
    p.write_text("(forall y (exists z (in z y)))")
    paths["phi"] = str(p)
    return paths


def test_degree(capsys):
    code, out, _ = run(capsys, "degree", "((e t) e)")
    assert code == 0 and out == "3\n"
    assert run_json(capsys, "degree", "degree", "(e t)", "--json")["degree"] == 2


def test_reduce_type(capsys):
    assert run_json(capsys, "reduce-type", "reduce-type", "(e t)'")["reduced"] == "(e' t')"


def test_rm_pipeline_fine_grained(capsys, files):
    data = run_json(capsys, "rm-pipeline", "rm-pipeline", "--frame", files["kaplan_5_1"])
    assert data["outcome"] == "AxiomFailure" and data["axiom"] == "fine-grained"


def test_rm_pipeline_contradiction(capsys, files):
    data = run_json(capsys, "rm-pipeline", "rm-pipeline", "--frame", files["contra"])
    assert data["outcome"] == "Contradiction" and data["refutation"]["verified"]


def test_classify(capsys, files):
    data = run_json(capsys, "classify", "classify", "--instance", files["diag"])
    assert not data["predicative"]
    assert [(v["variable"], v["degree"], v["bound"]) for v in data["violations"]] == [
        ("f", 2, 2), ("iota", 3, 2)]
    code, out, _ = run(capsys, "classify", "--instance", files["diag"], "--explain")
    assert code == 0 and "impredicative" in out


def test_parse_and_typecheck(capsys):
    data = run_json(capsys, "parse", "parse", "--text", "(forall (p t') (exists (v t) (pres t p v)))")
    assert data["canonical"].startswith("(forall (p t')")
    data = run_json(capsys, "typecheck", "typecheck", "--text", "(decl (x e) (pres t x 1))")
    assert not data["wellTyped"]
    assert data["diagnostics"][0]["message"] == "sense slot needs type t', got e"


def test_frame_and_cardinality(capsys):
    data = run_json(capsys, "frame-info", "frame", "--kind", "kaplan", "--E", "2", "--W", "2")
    assert data["sizes"]["(t' t)'"] == 256
    data = run_json(capsys, "cardinality", "cardinality", "--kind", "kaplan", "--E", "20",
                    "--W", "20", "--type", "(t' t)'")
    assert data["cardinality"] == "2^20971520"
    assert data["report"]["chainHolds"]


def test_check_axiom(capsys):
    data = run_json(capsys, "check-axiom", "check-axiom", "--kind", "kaplan", "--E", "2", "--W",
                    "1", "--axiom", "senses-are-objects", "--type", "t")
    assert not data["holds"] and data["witness"]


def test_cantor_and_smuggle(capsys):
    data = run_json(capsys, "cantor", "cantor", "--E", "2", "--type", "e")
    assert data["witness"]["collisionPoint"] == "o0"
    assert run_json(capsys, "cantor", "cantor", "--E", "2", "--type", "t", "--all")["count"] == 16
    assert run_json(capsys, "smuggle", "smuggle", "--E", "2")["verified"]
    assert run_json(capsys, "smuggle", "smuggle", "--E", "3", "--random", "3")["allVerified"]


def test_gallin(capsys, files):
    data = run_json(capsys, "gallin", "gallin", "--frame", files["contra"], "--type", "e")
    assert [v["axiom"] for v in data] == ["gallin-a2", "gallin-a3", "gallin-as6"]


def test_extension_and_probe(capsys, files):
    data = run_json(capsys, "extension", "extension", "--partial", files["partial"], "--h", files["h"])
    assert data["members"] == ["o0", "o1"] and data["selected"] == "o1"
    data = run_json(capsys, "probe", "probe", "--partial", files["partial"])
    assert data["chain"] == [[], ["o0"], ["o0", "o1"], ["o0", "o1", "o2"]]


def test_definability_commands(capsys, files):
    data = run_json(capsys, "defn", "defn", "--structure", files["X"], "--policy", "no-params")
    assert data["count"] == 8 and data["isPowerset"]
    data = run_json(capsys, "hierarchy", "hierarchy", "--kind", "L", "--steps", "3")
    assert [lv["size"] for lv in data["levels"]] == [0, 1, 2, 4]
    assert run_json(capsys, "sigma", "sigma", "--formula", files["phi"])["label"] == "Π_2"


def test_walkthrough_output_file(capsys, tmp_path):
    out = tmp_path / "report.md"
    code, stdout, _ = run(capsys, "walkthrough", "--seed", "2", "--out", str(out))
    assert code == 0 and stdout == ""
    assert out.read_text(encoding="utf-8").startswith("# Walkthrough (seed 2)")


def test_usage_errors(capsys, tmp_path):
    assert run(capsys, "nonsense")[0] == 2
    assert run(capsys, "degree", "(e")[0] == 2
    assert run(capsys, "rm-pipeline", "--frame", str(tmp_path / "missing.json"))[0] == 2
    assert run(capsys, "check-axiom", "--axiom", "sdr", "--type", "e'")[0] == 2


def test_property_violation_exit(capsys, monkeypatch):
    import dataclasses
    from intensio import paradox

    real = paradox.cantor_refute

    def broken(*args):
        return dataclasses.replace(real(*args), verified=False)

    monkeypatch.setattr(paradox, "cantor_refute", broken)
    code, out, err = run(capsys, "cantor", "--E", "2")
    assert code == 1 and out == "" and "property violation" in err
