"""End-to-end command line flows and exit codes."""

from __future__ import annotations

import csv

import pytest

from fairteams import load_pool, load_projects
from fairteams.cli import main

POOL = """id,cost,attribute,skills
u1,0.10,0,java;sql
u2,0.20,1,python
u3,0.15,1,java
u4,0.25,0,sql;python
u5,0.30,1,java;python
"""

PROJECTS = """id,skills
p1,java;sql
p2,python;java
"""


@pytest.fixture
def data(tmp_path):
    pool = tmp_path / "pool.csv"
    pool.write_text(POOL, encoding="utf-8")
    projects = tmp_path / "projects.csv"
    projects.write_text(PROJECTS, encoding="utf-8")
    return pool, projects


def test_synth_then_bench_then_assemble(tmp_path, capsys):
    pool = tmp_path / "pool.csv"
    projects = tmp_path / "projects.csv"
    report = tmp_path / "report.csv"
    log = tmp_path / "run.log.csv"

    assert main([
        "synth", "--out-pool", str(pool), "--out-projects", str(projects),
        "--pool-size", "40", "--skills", "10", "--num-projects", "5", "--seed", "3",
    ]) == 0
    assert len(load_pool(pool)) == 40
    assert len(load_projects(projects)) == 5

    assert main([
        "bench", "--pool", str(pool), "--projects", str(projects),
        "--team-size", "3", "--num-teams", "60", "--seed", "4",
        "--format", "csv", "--out", str(report), "--log", str(log),
    ]) == 0
    rows = list(csv.DictReader(report.open()))
    assert len(rows) == 9
    assert {row["algorithm"] for row in rows} >= {"incremental", "fair-alloc", "multi/top-sum"}
    assert log.exists()

    capsys.readouterr()
    assert main([
        "assemble", "--pool", str(pool), "--projects", str(projects),
        "--method", "multi", "--config", "top-cost",
        "--team-size", "3", "--num-teams", "60", "--seed", "4",
    ]) == 0
    out = capsys.readouterr().out
    assert "team (" in out
    assert "cost " in out


def test_assemble_baseline_and_project_pick(data, capsys):
    pool, projects = data
    assert main([
        "assemble", "--pool", str(pool), "--projects", str(projects),
        "--method", "incremental", "--project-id", "p2",
    ]) == 0
    out = capsys.readouterr().out
    assert "project p2" in out
    assert "method incremental" in out


def test_bench_table_to_stdout_writes_default_log(data, tmp_path, monkeypatch, capsys):
    monkeypatch.chdir(tmp_path)
    pool, projects = data
    assert main([
        "bench", "--pool", str(pool), "--projects", str(projects),
        "--team-size", "3", "--num-teams", "50", "--seed", "1",
    ]) == 0
    out = capsys.readouterr().out
    assert "algorithm" in out
    assert (tmp_path / "bench.log.csv").exists()


def test_bench_respects_method_and_config_filters(data, tmp_path):
    pool, projects = data
    report = tmp_path / "r.csv"
    assert main([
        "bench", "--pool", str(pool), "--projects", str(projects),
        "--method", "multi", "--config", "top-sum", "--config", "random",
        "--team-size", "3", "--num-teams", "50", "--seed", "1",
        "--format", "csv", "--out", str(report), "--log", str(tmp_path / "r.log"),
    ]) == 0
    labels = [row["algorithm"] for row in csv.DictReader(report.open())]
    assert labels == ["multi/random", "multi/top-sum"]


def test_usage_errors_exit_1(tmp_path, capsys):
    assert main(["assemble", "--pool", str(tmp_path / "x.csv")]) == 1
    assert main(["bench"]) == 1
    assert main(["synth"]) == 1
    assert main(["assemble", "--pool", "a", "--projects", "b", "--method", "bogus"]) == 1
    assert main([]) == 1
    capsys.readouterr()


def test_bad_flag_values_exit_1(data, capsys):
    pool, projects = data
    assert main([
        "assemble", "--pool", str(pool), "--projects", str(projects),
        "--attr-proportion", "1.5",
    ]) == 1
    assert main([
        "assemble", "--pool", str(pool), "--projects", str(projects),
        "--team-size", "2",
    ]) == 1
    err = capsys.readouterr().err
    assert "usage error" in err


def test_data_errors_exit_2(data, tmp_path, capsys):
    pool, projects = data
    assert main(["bench", "--pool", str(tmp_path / "missing.csv"), "--projects", str(projects)]) == 2
    broken = tmp_path / "broken.csv"
    broken.write_text("id,cost,attribute,skills\nu1,-1,0,java\n", encoding="utf-8")
    assert main(["bench", "--pool", str(broken), "--projects", str(projects)]) == 2
    assert main([
        "assemble", "--pool", str(pool), "--projects", str(projects), "--project-id", "nope",
    ]) == 2
    err = capsys.readouterr().err
    assert "data error" in err


def test_infeasible_outcomes_exit_3(data, tmp_path, capsys):
    pool, _ = data
    alien = tmp_path / "alien.csv"
    alien.write_text("id,skills\npx,quantum-basket-weaving\n", encoding="utf-8")
    assert main([
        "assemble", "--pool", str(pool), "--projects", str(alien), "--team-size", "3",
    ]) == 3
    assert main([
        "bench", "--pool", str(pool), "--projects", str(alien),
        "--team-size", "3", "--num-teams", "20", "--seed", "1",
        "--out", str(tmp_path / "r.csv"), "--log", str(tmp_path / "r.log"),
    ]) == 3
    capsys.readouterr()


def test_synth_proportion_flows_into_pool(tmp_path):
    pool = tmp_path / "pool.csv"
    assert main([
        "synth", "--out-pool", str(pool), "--pool-size", "10",
        "--skills", "6", "--attr-proportion", "0.1", "--seed", "2",
    ]) == 0
    candidates = load_pool(pool)
    zeros = sum(c.attribute.value == 0 for c in candidates)
    assert zeros == 1
