import pytest

from walkmix.cli import main
from walkmix.graph import demo_graph


@pytest.fixture()
def demo_edges_file(tmp_path):
    path = tmp_path / "demo.txt"
    path.write_text(demo_graph().to_edge_list_text())
    return path


def test_graph_info_demo(capsys):
    assert main(["graph-info", "--graph", "demo"]) == 0
    assert capsys.readouterr().out == "nodes=5 edges=7 avg_degree=2.8\n"


def test_graph_info_fig1_alias(capsys):
    assert main(["graph-info", "--graph", "fig1"]) == 0
    assert "nodes=5 edges=7" in capsys.readouterr().out


def test_graph_info_from_file(capsys, demo_edges_file):
    assert main(["graph-info", "--graph", str(demo_edges_file)]) == 0
    assert capsys.readouterr().out == "nodes=5 edges=7 avg_degree=2.8\n"


def test_graph_info_missing_file(capsys):
    assert main(["graph-info", "--graph", "no-such-file.txt"]) == 1
    assert "dataset not found" in capsys.readouterr().err


def test_oracle_check_demo(capsys):
    assert main(["oracle-check", "--graph", "fig1", "--alpha", "1"]) == 0
    out = capsys.readouterr().out
    assert "detailed-balance residual" in out
    assert "FAIL" not in out
    assert out.count("pass") >= 3


def test_oracle_check_alpha_zero_collapse(capsys):
    assert main(["oracle-check", "--graph", "demo", "--alpha", "0"]) == 0
    assert "plain-walk matrix" in capsys.readouterr().out


def test_oracle_check_dump_and_star_sweep(capsys):
    assert main(["oracle-check", "--graph", "demo", "--dump", "--star-sweep"]) == 0
    out = capsys.readouterr().out
    assert "# transition matrix" in out
    assert "# stationary distribution" in out
    assert "alpha=8 ratio=10" in out


def test_exp1_missing_config(capsys):
    assert main(["exp1", "--config", "missing.cfg", "--out", "x.csv"]) == 2
    assert "config not found" in capsys.readouterr().err


def test_exp1_end_to_end(tmp_path, capsys):
    cfg = tmp_path / "bench.cfg"
    cfg.write_text(
        "dataset = demo\nwalkers = srw, idrw\nbudgets = 2, 3\nreplications = 2\n"
    )
    out = tmp_path / "exp1.csv"
    assert main(["exp1", "--config", str(cfg), "--out", str(out)]) == 0
    lines = out.read_text().strip().split("\n")
    assert lines[0].startswith("dataset,walker,alpha")
    assert len(lines) == 1 + 2 * 2 * 2

    # deterministic rerun
    first = out.read_bytes()
    assert main(["exp1", "--config", str(cfg), "--out", str(out)]) == 0
    assert out.read_bytes() == first

    # master-seed override changes the rows
    assert main(["exp1", "--config", str(cfg), "--out", str(out), "--seed", "42"]) == 0
    assert out.read_bytes() != first


def test_exp2_end_to_end(tmp_path):
    cfg = tmp_path / "bench.cfg"
    cfg.write_text("dataset = demo\nalphas = 0, 1\nexp2_budget = 3\nreplications = 2\n")
    out = tmp_path / "exp2.csv"
    assert main(["exp2", "--config", str(cfg), "--out", str(out)]) == 0
    lines = out.read_text().strip().split("\n")
    assert len(lines) == 1 + 2 * 2
    assert all(",eidrw," in line for line in lines[1:])


def test_exp1_bad_budget_for_dataset(tmp_path, capsys):
    cfg = tmp_path / "bench.cfg"
    cfg.write_text("dataset = demo\nbudgets = 100\nreplications = 1\n")
    assert main(["exp1", "--config", str(cfg), "--out", str(tmp_path / "o.csv")]) == 1
    assert "exceed" in capsys.readouterr().err


def test_unknown_flag_exits_nonzero():
    with pytest.raises(SystemExit) as excinfo:
        main(["exp1", "--frobnicate"])
    assert excinfo.value.code == 2


def test_unknown_subcommand_exits_nonzero():
    with pytest.raises(SystemExit) as excinfo:
        main(["exp3"])
    assert excinfo.value.code == 2
