import io
import json

from tfib.chern import chain_to_json
from tfib.cli import EXIT_FAILED, EXIT_OK, EXIT_USAGE, RunConfig, execute, parse_config, run
from tfib.fibration import dualize, dumps, loads, to_json
from tfib.models import theta_fibration, tripod_chain, vertex_model
from tfib.monodromy import T22


def _run(argv, stdin_text=""):
    stdout, stderr = io.StringIO(), io.StringIO()
    code = run(argv, io.StringIO(stdin_text), stdout, stderr)
    return code, stdout.getvalue(), stderr.getvalue()


def test_parse_config_defaults():
    config = parse_config(["flop", "--face", "0,1,2", "--edge", "E1_012,E2_012"])
    assert config.command == "flop"
    assert config.face == (0, 1, 2)
    assert config.edge == ("E1_012", "E2_012")
    assert config.format == "json"
    assert config.seed == 0


def test_classify_matrix():
    code, out, _ = _run(["classify"], json.dumps({"matrix": [[1, 1], [0, 1]]}))
    assert code == EXIT_OK
    assert json.loads(out)["kind"] == "I1_2D"


def test_classify_badly_behaved_matrix_fails():
    code, out, err = _run(["classify"], json.dumps({"matrix": [[1, 2], [0, 1]]}))
    assert code == EXIT_FAILED
    assert json.loads(out)["kind"] == "NOT_WELL_BEHAVED"
    assert "not well behaved" in err


def test_malformed_input_is_a_usage_error():
    code, out, err = _run(["validate"], "{")
    assert code == EXIT_USAGE
    assert out == ""
    assert "MALFORMED" in err


def test_bad_flag_is_a_usage_error():
    code, _, _ = _run(["flop", "--face", "a,b"])
    assert code == EXIT_USAGE


def test_validate_reports_violations():
    code, out, _ = _run(["validate"], dumps(vertex_model(T22)))
    assert code == EXIT_FAILED
    payload = json.loads(out)
    assert not payload["passed"]
    assert "VALENCY" in {item["code"] for item in payload["violations"]}


def test_dualize_through_files(tmp_path):
    source = tmp_path / "theta.json"
    target = tmp_path / "dual.json"
    source.write_text(dumps(theta_fibration()), encoding="utf-8")
    code, out, _ = _run(["dualize", "--in", str(source), "--out", str(target)])
    assert code == EXIT_OK
    assert out == ""
    assert loads(target.read_text(encoding="utf-8")) == dualize(theta_fibration())


def test_invariants_of_theta():
    code, out, _ = _run(["invariants"], json.dumps(to_json(theta_fibration())))
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["euler"] == 2
    assert payload["critical_surfaces"][0]["genus"] == 2


def test_dot_is_refused_where_there_is_none():
    code, _, err = _run(["invariants", "--format", "dot"], dumps(theta_fibration()))
    assert code == EXIT_USAGE
    assert "USAGE" in err


def test_chern_synthesizes_a_fibration():
    code, out, _ = _run(["chern"], json.dumps(chain_to_json(tripod_chain())))
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["valid"]
    assert payload["fibration"]["base"] == "ball3"


def test_toric_named_model_as_dot():
    code, out, _ = _run(["toric", "--model", "c3z3", "--format", "dot"])
    assert code == EXIT_OK
    assert out.startswith("graph fibration {")


def test_toric_random_model_is_seeded():
    first = _run(["toric", "--model", "random", "--seed", "5"])
    second = _run(["toric", "--model", "random", "--seed", "5"])
    assert first[0] == EXIT_OK
    assert first[1] == second[1]
    assert json.loads(first[1])["mirror_curve"] == {"genus": 2, "punctures": 10}


def test_toric_unknown_model():
    code, _, err = _run(["toric", "--model", "hexagon"])
    assert code == EXIT_USAGE
    assert "UNKNOWN_MODEL" in err


def test_quintic_invariants():
    code, out, _ = _run(["quintic", "--invariants"])
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["euler"] == -200
    assert payload["b3"] == 204
    assert payload["census"] == {"T12": 50, "T21": 250}


def test_quintic_mirror_invariants():
    code, out, _ = _run(["quintic", "--mirror", "--invariants"])
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["b2"] == 101
    assert payload["mirror_curve"] == [6, 15]


def test_cubic_saturation_table():
    code, out, _ = _run(["cubic", "--saturation", "--format", "table"])
    assert code == EXIT_OK
    assert out == "(Z/5)^4, generated by L_0..L_4\n"


def test_cubic_summary_and_csv():
    code, out, _ = _run(["cubic"])
    assert code == EXIT_OK
    payload = json.loads(out)
    assert (payload["rank"], payload["radical"]) == (101, 4)
    assert payload["c2_dot_h"] == 50
    assert payload["index_failures"] == []
    code, out, _ = _run(["cubic", "--format", "csv"])
    assert code == EXIT_OK
    assert out.splitlines()[0] == "a,b,c,value"


def test_flop_by_point_indices():
    code, out, _ = _run(["flop", "--face", "0,1,2", "--edge", "0,1"])
    assert code == EXIT_FAILED
    assert out == ""
    code, out, _ = _run(["flop", "--face", "0,1,2", "--edge", "L3,L4"])
    assert code == EXIT_USAGE


def test_flop_config_without_face_is_a_usage_error():
    stdout, stderr = io.StringIO(), io.StringIO()
    code = execute(RunConfig(command="flop", edge=("0", "1")), io.StringIO(), stdout, stderr)
    assert code == EXIT_USAGE
    assert stdout.getvalue() == ""
    assert "flop needs --face and --edge" in stderr.getvalue()
