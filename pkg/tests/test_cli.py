"""End-to-end tests of the command line interface via its main() entry."""

import json
import math

import pytest

from graphdm.cli import main

P4_TEXT = "n 4\ne 1 2\ne 2 3\ne 3 4\n"
K4_TEXT = "n 4\n" + "".join(
    f"e {u} {v}\n" for u in range(1, 5) for v in range(u + 1, 5))
STAR4_TEXT = "n 4\ne 1 2\ne 1 3\ne 1 4\n"
PETERSEN_TEXT = "n 10\n" + "".join(f"e {u} {v}\n" for u, v in [
    (1, 2), (2, 3), (3, 4), (4, 5), (1, 5),
    (1, 6), (2, 7), (3, 8), (4, 9), (5, 10),
    (6, 8), (8, 10), (10, 7), (7, 9), (9, 6)])


@pytest.fixture
def graph_file(tmp_path):
    def write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return write


def run_json(capsys, argv):
    rc = main(argv)
    out = capsys.readouterr().out
    assert rc == 0, out
    return json.loads(out)


def test_analyze_human_output(capsys, graph_file):
    path = graph_file("p4.graph", P4_TEXT)
    rc = main(["analyze", path, "--p", "2", "--q", "2"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "ENTANGLED_NPT" in out
    assert "entropy" in out


def test_analyze_json_path4(capsys, graph_file):
    path = graph_file("p4.graph", P4_TEXT)
    blob = run_json(capsys, ["analyze", path, "--p", "2", "--q", "2", "--json"])
    assert blob["graph"]["n"] == 4 and blob["graph"]["m"] == 3
    v = blob["verdict"]
    assert v["status"] == "ENTANGLED_NPT"
    assert abs(v["min_pt_eigenvalue"] - (1 - math.sqrt(2)) / 6) < 1e-10
    assert blob["entangled_edges"] == [[2, 3]]  # 1-based in reports
    assert abs(blob["concurrence"] - 1 / 3) < 1e-9
    assert blob["decomposition"] is None


def test_analyze_json_star_eigenvalue(capsys, graph_file):
    path = graph_file("star4.graph", STAR4_TEXT)
    blob = run_json(capsys, ["analyze", path, "--p", "2", "--q", "2", "--json"])
    want = 0.25 - math.sqrt(17) / 12
    assert abs(blob["verdict"]["min_pt_eigenvalue"] - want) < 1e-10


def test_analyze_attaches_complete_graph_decomposition(capsys, graph_file):
    path = graph_file("k4.graph", K4_TEXT)
    blob = run_json(capsys, ["analyze", path, "--p", "2", "--q", "2", "--json"])
    assert blob["verdict"]["status"] == "SEPARABLE"
    dec = blob["decomposition"]
    assert dec is not None
    assert len(dec["states"]) == 6
    assert abs(sum(s["weight"] for s in dec["states"]) - 1.0) < 1e-12


def test_analyze_custom_labeling(capsys, graph_file):
    path = graph_file("p4.graph", P4_TEXT)
    # interleaved map: vertices 1..4 -> cells (0,0),(1,0),(0,1),(1,1)
    blob = run_json(capsys, [
        "analyze", path, "--p", "2", "--q", "2",
        "--labeling", "1=0.0,2=1.0,3=0.1,4=1.1", "--json"])
    lams = blob["pt_spectrum"]
    expected = sorted([0.5, 1 / 6, (1 + math.sqrt(2)) / 6, (1 - math.sqrt(2)) / 6])
    assert len(lams) == 4
    for got, want in zip(lams, expected):
        assert abs(got - want) < 1e-9


def test_analyze_precondition_failures(capsys, graph_file, tmp_path):
    path = graph_file("p4.graph", P4_TEXT)
    # wrong dimensions
    assert main(["analyze", path, "--p", "3", "--q", "2"]) == 2
    assert "does not match" in capsys.readouterr().err
    # missing file
    assert main(["analyze", str(tmp_path / "nope.graph"), "--p", "2", "--q", "2"]) == 2
    capsys.readouterr()
    # malformed document
    bad = graph_file("bad.graph", "e 1 2\n")
    assert main(["analyze", bad, "--p", "2", "--q", "2"]) == 2
    assert "error" in capsys.readouterr().err.lower()
    # bad labeling spec
    assert main(["analyze", path, "--p", "2", "--q", "2",
                 "--labeling", "1=0.0,2=1.0,3=0.1,4=0.1"]) == 2
    capsys.readouterr()


def test_census4_json_and_csv(capsys, tmp_path):
    blob = run_json(capsys, ["census4", "--json"])
    assert blob["ever_entangled_count"] == 7
    assert blob["always_entangled_count"] == 2
    assert len(blob["classes"]) == 10

    csv_path = tmp_path / "census.csv"
    rc = main(["census4", "--csv", str(csv_path)])
    capsys.readouterr()
    assert rc == 0
    lines = csv_path.read_text().strip().splitlines()
    assert len(lines) == 11
    assert lines[0].startswith("class_id,")


def test_channel_json_trajectory(capsys, graph_file):
    path = graph_file("p4.graph", P4_TEXT)
    blob = run_json(capsys, [
        "channel", path, "del-edge 2 3", "add-edge 2 3", "--json"])
    steps = blob["steps"]
    assert [s["edit"] for s in steps] == ["del-edge 2 3", "add-edge 2 3"]
    for s in steps:
        assert abs(s["trace"] - 1.0) < 1e-12
        assert s["max_error_vs_graph_state"] < 1e-10
        probs = s["probabilities"]
        assert abs(sum(p["probability"] for p in probs) - 1.0) < 1e-12
    # the round trip ends on the starting edge set
    assert steps[-1]["graph"]["edges"] == blob["start"]["edges"]


def test_channel_script_and_vertex_edits(capsys, graph_file, tmp_path):
    path = graph_file("p4.graph", P4_TEXT)
    script = tmp_path / "edits.txt"
    script.write_text("# trim one end, then grow\ndel-vertex 1\nadd-vertex\n")
    blob = run_json(capsys, ["channel", path, "--script", str(script), "--json"])
    steps = blob["steps"]
    assert [s["edit"] for s in steps] == ["del-vertex 1", "add-vertex"]
    assert steps[0]["graph"]["n"] == 3
    assert steps[1]["graph"]["n"] == 4
    for s in steps:
        assert s["click_probability"] == 1.0


def test_channel_dump_operators(capsys, graph_file):
    path = graph_file("p4.graph", P4_TEXT)
    blob = run_json(capsys, ["channel", path, "del-edge 2 3",
                             "--dump-operators", "--json"])
    ops = blob["steps"][0]["operators"]
    assert len(ops) == 8
    # each operator is a matrix of [real, imaginary] entry pairs
    first = ops[0]
    assert len(first) == 4 and len(first[0]) == 4
    assert len(first[0][0]) == 2


def test_channel_bad_edit_is_precondition_error(capsys, graph_file):
    path = graph_file("p4.graph", P4_TEXT)
    assert main(["channel", path, "del-edge 1 3"]) == 2
    assert "error" in capsys.readouterr().err.lower()
    assert main(["channel", path, "frobnicate 1"]) == 2
    capsys.readouterr()


def test_search_exhaustive_json(capsys, graph_file):
    path = graph_file("p4.graph", P4_TEXT)
    blob = run_json(capsys, ["search", path, "--p", "2", "--q", "2", "--json"])
    assert blob["mode"] == "exhaustive"
    assert blob["total"] == 24
    assert blob["counts"] == {
        "SEPARABLE": 16, "ENTANGLED_NPT": 8, "PPT_INCONCLUSIVE": 0}
    assert "ENTANGLED_NPT" in blob["witnesses"]


def test_search_complete_graph_certifies(capsys, graph_file):
    path = graph_file("k4.graph", K4_TEXT)
    blob = run_json(capsys, ["search", path, "--p", "2", "--q", "2", "--json"])
    assert blob["certified_counts"]["SEPARABLE"] == 24
    assert blob["certified_counts"]["ENTANGLED_NPT"] == 0
    assert "certified" in blob["note"]


def test_search_sampled_output_is_reproducible(capsys, graph_file):
    path = graph_file("petersen.graph", PETERSEN_TEXT)
    argv = ["search", path, "--p", "2", "--q", "5",
            "--budget", "200", "--seed", "99", "--json"]
    rc = main(argv)
    first = capsys.readouterr().out
    assert rc == 0
    rc = main(argv)
    second = capsys.readouterr().out
    assert rc == 0
    assert first == second  # byte-identical reruns
    blob = json.loads(first)
    assert blob["mode"] == "sampled" and blob["total"] == 200
    assert blob["seed"] == 99


def test_probe_small_dimensions_exhaustive(capsys):
    blob = run_json(capsys, ["probe", "--p", "2", "--q", "2", "--json"])
    single = blob["single_entangled_edge"]
    assert single["instances"] == 32
    assert single["verdicts"] == {"ENTANGLED_NPT": 32}
    assert single["conclusion"] == "no counterexample found"
    conc = blob["entangled_edges_at_one_vertex"]
    assert conc["conclusion"] == "no counterexample found"
    assert conc["counterexamples"] == []


def test_probe_rejects_oversized_request(capsys):
    assert main(["probe", "--p", "3", "--q", "3"]) == 2
    capsys.readouterr()


def test_entropy_json_with_order(capsys, graph_file):
    path = graph_file("p4.graph", P4_TEXT)
    blob = run_json(capsys, ["entropy", path, "--order", "2", "--json"])
    assert abs(blob["max_for_dimension"] - math.log2(3)) < 1e-12
    assert 0 < blob["entropy"] < blob["max_for_dimension"]
    spectrum = blob["spectrum"]
    assert len(spectrum) == 4 and abs(sum(spectrum) - 1.0) < 1e-10
    lams = [v for v in spectrum if v > 1e-12]
    want = sum(v ** 2 for v in lams) ** 0.5
    assert blob["q_entropy"]["order"] == 2.0
    assert abs(blob["q_entropy"]["value"] - want) < 1e-10
    assert abs(blob["purity"] - sum(v ** 2 for v in lams)) < 1e-10


def test_entropy_rejects_bad_order(capsys, graph_file):
    path = graph_file("p4.graph", P4_TEXT)
    assert main(["entropy", path, "--order", "0.5"]) == 2
    capsys.readouterr()


def test_missing_subcommand_exits_with_usage():
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
