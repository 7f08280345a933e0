import json

import pytest

from thinhom.cli import main, parse_descriptor, UsageError
from thinhom.graphs import format_graph, parse_graph


@pytest.mark.parametrize("desc", ["K:4", "C:9", "Kc:12/5", "Kneser:5,2", "TT:4", "Gmn:5,3", "S:8,3", "P:3", "E:2", "DP:2"])
def test_gen_round_trip(desc, tmp_path):
    out = tmp_path / "g.txt"
    assert main(["gen", desc, "-o", str(out)]) == 0
    G = parse_graph(out.read_text())
    ref = parse_descriptor(desc)
    assert G.n == ref.n and G.arcs == ref.arcs


def test_gen_counts(capsys):
    main(["gen", "Kneser:5,2", "-o", "/dev/null"])
    assert "10 vertices and 15 edges" in capsys.readouterr().out
    main(["gen", "Kc:12/5", "-o", "/dev/null"])
    assert "12 vertices" in capsys.readouterr().out
    main(["gen", "S:8,3", "-o", "/dev/null"])
    assert "56 vertices" in capsys.readouterr().out


def test_usage_errors(capsys):
    assert main(["gen", "Q:3"]) == 64
    assert main(["gen", "K:x"]) == 64
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 64
    assert main(["apply", "gamma:T4", "K:3"]) == 64


def test_parse_error_reports_line(tmp_path, capsys):
    bad = tmp_path / "bad.g"
    bad.write_text("graph 3\n0 1\n1 q\n")
    assert main(["invariants", str(bad)]) == 64
    assert "line 3" in capsys.readouterr().err


def test_apply_gamma_c5(tmp_path, capsys):
    out = tmp_path / "k5.g"
    assert main(["apply", "gamma:T3", "C:5", "-o", str(out)]) == 0
    assert parse_graph(out.read_text()) == parse_descriptor("K:5")
    assert (tmp_path / "k5.g.labels").exists()
    assert "loops: no" in capsys.readouterr().out


def test_apply_then_hom_eq(tmp_path, capsys):
    o3 = tmp_path / "o3.g"
    main(["apply", "omega:3", "K:3", "-o", str(o3)])
    assert main(["hom-eq", str(o3), "C:9"]) == 0
    g = tmp_path / "g.g"
    main(["apply", "gamma:T3", "Kc:12/5", "-o", str(g)])
    assert main(["hom-eq", str(g), "K:4"]) == 0
    assert main(["hom-eq", "K:4", "K:3"]) == 1


def test_apply_product_and_chains(tmp_path, capsys):
    out = tmp_path / "p.g"
    assert main(["apply", "prod:x", "K:2", "K:3", "-o", str(out)]) == 0
    assert parse_graph(out.read_text()).n == 6
    assert main(["apply", "prod:x", "K:2"]) == 64
    assert main(["apply", "L:3/5", "K:3", "-o", str(out), "--no-core-reduce"]) == 0
    assert main(["apply", "delta", "TT:4", "-o", str(out)]) == 0
    assert parse_graph(out.read_text()).n == 6


def test_invariants_c5(capsys):
    assert main(["invariants", "C:5"]) == 0
    out = capsys.readouterr().out
    assert "chi 3" in out and "chi_c 5/2" in out and "odd_girth 5" in out and "core_size 5" in out
    assert out.startswith("# config seed=0")


def test_hom_and_witness_check(capsys):
    assert main(["hom", "K:4", "K:3"]) == 1
    assert capsys.readouterr().out.strip() == "NONE"
    assert main(["hom", "C:5", "K:3"]) == 0
    witness = capsys.readouterr().out.strip()
    assert main(["hom", "C:5", "K:3", "--check-witness", witness]) == 0
    assert main(["hom", "C:5", "K:3", "--check-witness", "0 0 0 0 0"]) == 1


def test_hom_witness_list(capsys):
    assert main(["hom", "P:2", "K:2", "--max-witnesses", "5"]) == 0
    assert capsys.readouterr().out.split("\n")[:2] == ["0 1 0", "1 0 1"]


def test_timeout_exit_code(capsys):
    assert main(["hom", "Kneser:9,3", "Kc:11/3", "--timeout-ms", "0"]) == 2


def test_verify_adjunction(tmp_path, capsys):
    out = tmp_path / "r.json"
    assert main(["verify", "adjunction:T3", "--graphs", "--max-n", "4", "-o", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["status"] == "PASS" and doc["checked"] == 75 * 75
    assert doc["config"]["cli"]["seed"] == 0
    assert "PASS" in capsys.readouterr().out


def test_verify_failure_and_skip(capsys):
    assert main(["verify", "product:delta,box", "--max-n", "2"]) == 1
    assert main(["verify", "adjunction:T3", "--max-n", "3", "--timeout-ms", "0"]) == 2
    assert main(["verify", "nonsense"]) == 64


def test_verify_is_byte_identical(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    main(["verify", "chromatic", "--max-n", "2", "-o", str(a)])
    main(["verify", "chromatic", "--max-n", "2", "-o", str(b)])
    assert a.read_bytes() == b.read_bytes()


def test_verify_poljak_rodl(capsys):
    assert main(["verify", "poljak-rodl:2"]) == 1
    assert "NOT-FOUND" in capsys.readouterr().out


def test_descriptor_errors():
    with pytest.raises(UsageError):
        parse_descriptor("Kc:5")
    with pytest.raises(UsageError):
        parse_descriptor("Kc:3/2")
