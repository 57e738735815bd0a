import json

from seifert_contact.cli import run


def test_euler_json_contract():
    code, out = run(["euler", "SFS[g=0; b=-2; 2/1, 3/2, 11/9]", "--format", "json"])
    assert code == 0
    assert json.loads(out) == {
        "e": "1/66",
        "e0": -1,
        "chi": "-5/66",
        "gamma": ["1/2", "1/3", "2/11"],
    }


def test_spectrum_json():
    code, out = run(["spectrum", "SFS[g=0; b=-2; 2/1, 3/2, 17/14]", "--max", "20", "--format", "json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["exactness"] == "necessary-only"
    assert [entry["n"] for entry in payload["entries"]] == [5, 11]
    assert payload["entries"][0]["multi_index"] == [-10, 3, 4, 5]


def test_torus_bundle_text():
    code, out = run(["torus-bundle", "--matrix", "2,1,1,1"])
    assert code == 0
    assert out == "geodesible: yes (unique isotopy class)"
    code, out = run(["torus-bundle", "--matrix", "1,1,0,1"])
    assert code == 0
    assert out == "geodesible: no"


def test_determinism():
    args = ["spectrum", "SFS[g=0; b=-2; 2/1, 3/2, 11/9]", "--max", "12", "--format", "json"]
    assert run(args) == run(args)


def test_exists_and_count_and_tangent():
    code, out = run(["exists", "SFS[g=2; b=3]", "--format", "json"])
    payload = json.loads(out)
    assert code == 0 and payload["answer"] and payload["case"] == "A"

    code, out = run(["count", "SFS[g=2; b=3]", "--n", "1", "--format", "json"])
    payload = json.loads(out)
    assert code == 0 and payload["regime"] == "flexible" and payload["total"] == 6

    code, out = run(["tangent", "SFS[g=0; b=-2; 2/1, 2/1, 2/1, 2/1]", "--max", "10", "--format", "json"])
    payload = json.loads(out)
    assert code == 0 and payload["levels"] == [1, 3, 5, 7, 9] and payload["infinite_family"]


def test_realizable_foliation_blap():
    code, out = run(["realizable", "1/3", "1/3", "1/3", "--format", "json"])
    assert code == 0 and json.loads(out) == {"realizable": True, "a": 1, "m": 2}
    code, out = run(["realizable", "1/2", "1/2", "1/2", "--format", "json"])
    assert code == 0 and json.loads(out) == {"realizable": False}

    code, out = run(["foliation", "SFS[g=1; b=0]", "--format", "json"])
    assert code == 0 and json.loads(out) == {"necessary_condition": True}

    code, out = run(["blap", "14/17", "--max-denominator", "16", "--format", "json"])
    payload = json.loads(out)
    assert code == 0
    assert payload["best_lower_approximations"] == ["0/1", "1/2", "2/3", "3/4", "4/5", "9/11"]


def test_solid_torus_and_polygon(tmp_path):
    code, out = run(["solid-torus", "--meridian", "1,3", "--boundary", "1,-3", "--format", "json"])
    assert code == 0 and json.loads(out) == {"tight": 6, "universally_tight": 2}

    svg = tmp_path / "sail.svg"
    code, out = run(
        [
            "polygon",
            "--left", "1,3",
            "--right", "3,1",
            "--include-left",
            "--include-right",
            "--emit-svg", str(svg),
            "--format", "json",
        ]
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["points"] == [[3, 1], [2, 1], [1, 1], [1, 2], [1, 3]]
    assert [e["cardinality"] for e in payload["edges"]] == [3, 3]
    assert svg.exists() and svg.read_text().startswith("<svg")


def test_cover_thresholds_json():
    code, out = run(
        ["cover-thresholds", "--left", "1,2", "--right", "2,1", "--class", "1,1", "--format", "json"]
    )
    assert code == 0
    payload = json.loads(out)
    assert payload == {
        "a": ["1/2", "1/1"],
        "b": ["1/1", "1/2"],
        "l_h": "1/2",
        "l_v": "1/2",
        "n0": 3,
        "m0": 3,
    }


def test_domain_error_exit_code_and_tag():
    code, out = run(["euler", "SFS[g=0; b=0; 4/2]", "--format", "json"])
    assert code == 1
    assert json.loads(out)["error"] == "invalid-invariants"

    code, out = run(["cover-thresholds", "--left", "1,2", "--right", "2,1", "--class", "1,2"])
    assert code == 1
    assert out.startswith("error[boundary-class-on-ray]")


def test_usage_errors_exit_2():
    code, _ = run(["spectrum", "SFS[g=1; b=0]"])  # missing --max
    assert code == 2
    code, _ = run(["no-such-command"])
    assert code == 2
    code, out = run(["euler", "not a manifold"])
    assert code == 1  # parse errors of values are domain errors with a tag
    assert "parse-error" in out


def test_round_trip_of_emitted_manifold():
    code, out = run(["euler", "SFS[g=0; b=-2; 3/5]"])
    assert code == 0
    emitted = out.splitlines()[0].split(": ", 1)[1]
    code2, out2 = run(["euler", emitted])
    assert code2 == 0 and out2 == out


def test_selftest_subset():
    code, out = run(["selftest", "--only", "11", "--format", "json"])
    payload = json.loads(out)
    assert code == 0 and payload["passed"]
    assert payload["criteria"][0]["number"] == 11


def test_help():
    code, out = run(["--help"])
    assert code == 0
    assert "euler" in out and "selftest" in out
