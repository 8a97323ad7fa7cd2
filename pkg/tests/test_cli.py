"""Command-line interface: dispatch, exit codes, reproducibility."""

import pytest

from unipm import parse_graph, parse_trace, replay, serialize_graph
from unipm.cli import main

from conftest import C4_EDGES, FLOWER_EDGES, PAW_EDGES, g_of


def write(tmp_path, name, content):
    p = tmp_path / name
    p.write_text(content)
    return str(p)


@pytest.fixture
def paw_file(tmp_path):
    return write(tmp_path, "paw.g", serialize_graph(g_of(4, PAW_EDGES)))


@pytest.fixture
def c4_file(tmp_path):
    return write(tmp_path, "c4.g", serialize_graph(g_of(4, C4_EDGES)))


def run(capsys, argv):
    code = main(argv)
    return code, capsys.readouterr().out


# ------------------------------------------------------------------ check

def test_check_paw_unique(paw_file, capsys):
    code, out = run(capsys, ["check", paw_file])
    assert code == 0
    assert "verdict: unique" in out
    assert "method: forcing" in out
    assert "0 3\n1 2\n" in out


def test_check_c4_not_unique(c4_file, capsys):
    code, out = run(capsys, ["check", c4_file])
    assert code == 1
    assert "verdict: not-unique" in out
    assert "witness:" in out


def test_check_flower_uses_clawfree_path(tmp_path, capsys):
    f = write(tmp_path, "flower.g", serialize_graph(g_of(6, FLOWER_EDGES)))
    code, out = run(capsys, ["check", f])
    assert code == 0
    assert "method: clawfree" in out
    assert "verdict: unique" in out


def test_check_clawed_graph_small_uses_oracle(tmp_path, capsys):
    star = write(tmp_path, "star.g", "4 3\n0 1\n0 2\n0 3\n")
    code, out = run(capsys, ["check", star])
    assert code == 1
    assert "method: oracle" in out
    assert "reason: no perfect matching" in out


def test_check_clawed_graph_large_undecided(tmp_path, capsys):
    # a star with 17 leaves stays beyond the default oracle cap
    edges = "\n".join(f"0 {i}" for i in range(1, 18))
    f = write(tmp_path, "bigstar.g", f"18 17\n{edges}\n")
    code, out = run(capsys, ["check", f])
    assert code == 3
    assert "verdict: undecided-class" in out


def test_check_parse_error_exit_2(tmp_path, capsys):
    f = write(tmp_path, "bad.g", "2 1\n0 2\n")
    code, out = run(capsys, ["check", f])
    assert code == 2
    assert "error:" in out and "out of range" in out


# ------------------------------------------------------------------ force

def test_force_paw(paw_file, capsys):
    code, out = run(capsys, ["force", paw_file])
    assert code == 0
    assert "forcing_order: 3,0 1,2" in out


def test_force_c4(c4_file, capsys):
    code, out = run(capsys, ["force", c4_file])
    assert code == 1
    assert "NO FORCING SET" in out


# ---------------------------------------------------------------- interval

def test_interval_unique(tmp_path, capsys):
    f = write(tmp_path, "iv.iv", "4\n0 1 10\n1 2 3\n2 4 9\n3 5 6\n")
    code, out = run(capsys, ["interval", f])
    assert code == 0
    assert "verdict: unique" in out
    assert "0 1\n2 3\n" in out


def test_interval_not_unique(tmp_path, capsys):
    f = write(tmp_path, "iv.iv", "4\n0 1 4\n1 2 6\n2 3 8\n3 5 9\n")
    code, out = run(capsys, ["interval", f])
    assert code == 1
    assert "witness:" in out


def test_interval_bad_rep(tmp_path, capsys):
    f = write(tmp_path, "iv.iv", "2\n0 1 4\n1 4 6\n")
    code, out = run(capsys, ["interval", f])
    assert code == 2
    assert "endpoints not distinct" in out


# ---------------------------------------------------------------- clawfree

def test_clawfree_stats(paw_file, capsys):
    code, out = run(capsys, ["clawfree", paw_file, "--stats"])
    assert code == 0
    assert "cursor_advances:" in out
    assert "0 3\n1 2\n" in out


def test_clawfree_check_claw_rejects(tmp_path, capsys):
    star = write(tmp_path, "star.g", "4 3\n0 1\n0 2\n0 3\n")
    code, out = run(capsys, ["clawfree", star, "--check-claw"])
    assert code == 2
    assert "claw at 0" in out


# --------------------------------------------------------------- gen

def test_gen_gclass_reproducible(tmp_path, capsys):
    out1 = str(tmp_path / "a")
    out2 = str(tmp_path / "b")
    assert main(["gen", "--family", "gclass", "--steps", "12", "--seed", "9",
                 "--out", out1]) == 0
    assert main(["gen", "--family", "gclass", "--steps", "12", "--seed", "9",
                 "--out", out2]) == 0
    capsys.readouterr()
    assert (tmp_path / "a.g").read_bytes() == (tmp_path / "b.g").read_bytes()
    assert (tmp_path / "a.trace").read_bytes() == (tmp_path / "b.trace").read_bytes()
    g = parse_graph((tmp_path / "a.g").read_text())
    t = parse_trace((tmp_path / "a.trace").read_text())
    assert replay(t).live_edges() == g.live_edges()


def test_gen_seed_env_override(tmp_path, capsys, monkeypatch):
    out1 = str(tmp_path / "a")
    out2 = str(tmp_path / "b")
    monkeypatch.setenv("UNIPM_SEED", "123")
    main(["gen", "--family", "gclass", "--steps", "8", "--seed", "1", "--out", out1])
    monkeypatch.delenv("UNIPM_SEED")
    main(["gen", "--family", "gclass", "--steps", "8", "--seed", "123", "--out", out2])
    capsys.readouterr()
    assert (tmp_path / "a.g").read_bytes() == (tmp_path / "b.g").read_bytes()


def test_gen_other_families(tmp_path, capsys):
    for family, extra in [("cograph", ["-n", "8"]), ("split", ["-n", "8"]),
                          ("interval", ["-n", "6"]), ("clique-chain", ["--steps", "5"])]:
        out = str(tmp_path / family)
        code = main(["gen", "--family", family, "--seed", "3", "--out", out] + extra)
        assert code == 0
    capsys.readouterr()
    assert (tmp_path / "interval.iv").exists()
    assert (tmp_path / "clique-chain.trace").exists()


# ---------------------------------------------------------- decompose

def test_decompose_paw(paw_file, capsys):
    code, out = run(capsys, ["decompose", paw_file])
    assert code == 0
    assert out.startswith("INIT 0 3\n")
    assert "OP1 0 1 2" in out


def test_decompose_c4(c4_file, capsys):
    code, out = run(capsys, ["decompose", c4_file])
    assert code == 1
    assert "NOT IN CLASS" in out


def test_replay_roundtrip(paw_file, tmp_path, capsys):
    code, out = run(capsys, ["decompose", paw_file])
    trace_file = write(tmp_path, "paw.trace", out)
    code, out = run(capsys, ["replay", trace_file])
    assert code == 0
    assert parse_graph(out).live_edges() == g_of(4, PAW_EDGES).live_edges()


# ------------------------------------------------------------- oracle

def test_oracle_paw(paw_file, capsys):
    code, out = run(capsys, ["oracle", paw_file])
    assert code == 0
    assert "pm_count: 1" in out
    assert "cap_reached: false" in out
    assert "matching_0: 0,3 1,2" in out


def test_oracle_c4_cap(c4_file, capsys):
    code, out = run(capsys, ["oracle", c4_file, "--cap", "2"])
    assert code == 0
    assert "pm_count: 2" in out
    assert "cap_reached: true" in out


# -------------------------------------------------------------- bench

def test_bench_csv_schema_and_bound(tmp_path, capsys):
    out_file = str(tmp_path / "bench.csv")
    code = main(["bench", "--family", "clique-chain", "--sizes", "300,600",
                 "--repetitions", "2", "--out", out_file])
    capsys.readouterr()
    assert code == 0
    lines = (tmp_path / "bench.csv").read_text().strip().splitlines()
    assert lines[0] == ("schema,family,n,m,rep,wall_time_s,cursor_advances,"
                        "lm_nb_updates")
    assert len(lines) == 5
    for row in lines[1:]:
        schema, family, n, m, rep, wall, adv, lm = row.split(",")
        assert schema == "unipm-bench-1"
        assert int(adv) <= 2 * int(m)


def test_bench_gclass_family(capsys):
    code, out = run(capsys, ["bench", "--family", "gclass", "--sizes", "200",
                             "--repetitions", "1", "--seed", "5"])
    assert code == 0
    assert out.splitlines()[0].startswith("schema,")


# -------------------------------------------------------------- usage

def test_unknown_subcommand_exit_2(capsys):
    assert main(["frobnicate"]) == 2
    capsys.readouterr()


def test_missing_file_exit_2(capsys):
    code, out = run(capsys, ["check", "/nonexistent/x.g"])
    assert code == 2
