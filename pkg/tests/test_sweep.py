"""Sweep driver, report serialization, config parsing, determinism."""

import numpy as np
import pytest

from sgfem1d import (Report, SweepConfig, emit_report, run_cond_sweep,
                     run_eigen_sweep, run_source_sweep)
from sgfem1d.exceptions import InvalidArgumentError
from sgfem1d.sweep import load_config, parse_csv, report_csv, report_markdown


@pytest.fixture(scope="module")
def small_source_report():
    cfg = SweepConfig(problem="source", degrees=(1,), Ns=(10, 20, 40),
                      methods=("FEM", "SGFEM"))
    return run_source_sweep(cfg)


@pytest.fixture(scope="module")
def small_eigen_report():
    cfg = SweepConfig(problem="eigen", case="case2", degrees=(1,),
                      Ns=(10, 20, 40), methods=("SGFEM",),
                      eigen_indices=(1, 4))
    return run_eigen_sweep(cfg)


def test_source_sweep_rows_and_rates(small_source_report):
    rep = small_source_report
    # 1 degree x 3 levels x 2 methods x 2 quantities
    assert len(rep.rows) == 12
    assert (1, "SGFEM", "h1_semi_u") in rep.rates
    assert rep.rates[(1, "SGFEM", "h1_semi_u")] == pytest.approx(1.0, abs=0.1)
    # unfitted standard FEM is polluted: clearly below first order
    assert rep.rates[(1, "FEM", "h1_semi_u")] < 0.85


def test_eigen_sweep_rates(small_eigen_report):
    rep = small_eigen_report
    assert rep.metadata["gamma"] == pytest.approx(1.0 / 3.0)
    assert rep.metadata["eta"] == 4.0
    r = rep.rates[(1, "SGFEM", "rel_lambda_1")]
    assert r == pytest.approx(2.0, abs=0.25)


def test_eigen_sweep_with_eigenfunctions():
    cfg = SweepConfig(problem="eigen", case="case2", degrees=(1,),
                      Ns=(10, 20), methods=("SGFEM",), eigen_indices=(1,),
                      outputs=("eigenfunctions",))
    rep = run_eigen_sweep(cfg)
    quantities = {r.quantity for r in rep.rows}
    assert quantities == {"rel_lambda_1", "h1_u1", "l2_u1"}


def test_validation_errors():
    with pytest.raises(InvalidArgumentError):
        SweepConfig(problem="bogus").validate()
    with pytest.raises(InvalidArgumentError):
        SweepConfig(Ns=(40, 10)).validate()
    with pytest.raises(InvalidArgumentError):
        SweepConfig(degrees=(0,)).validate()
    with pytest.raises(InvalidArgumentError):
        SweepConfig(methods=("XFEM",)).validate()
    with pytest.raises(InvalidArgumentError):
        run_source_sweep(SweepConfig(problem="eigen"))
    with pytest.raises(InvalidArgumentError):
        run_eigen_sweep(SweepConfig(problem="source"))


def test_csv_round_trip(small_source_report):
    text = report_csv(small_source_report)
    rows = parse_csv(text)
    assert rows == small_source_report.rows


def test_csv_deterministic(small_source_report):
    cfg = SweepConfig(problem="source", degrees=(1,), Ns=(10, 20, 40),
                      methods=("FEM", "SGFEM"))
    again = run_source_sweep(cfg)
    assert report_csv(again) == report_csv(small_source_report)


def test_markdown_layout(small_source_report):
    md = report_markdown(small_source_report)
    assert "### h1_semi_u" in md
    assert "### l2_u" in md
    assert "| rate |" in md
    assert "FEM p=1" in md and "SGFEM p=1" in md


def test_scientific_notation_format():
    from sgfem1d.sweep import _sci
    assert _sci(4.92e-5) == "4.92E-5"
    assert _sci(1.0) == "1.00E+0"
    assert _sci(3.47e-13) == "3.47E-13"


def test_emit_report(tmp_path, small_source_report):
    out = tmp_path / "report.csv"
    emit_report(small_source_report, "csv", out)
    assert parse_csv(out.read_text()) == small_source_report.rows
    with pytest.raises(InvalidArgumentError):
        emit_report(small_source_report, "xml", tmp_path / "x")


def test_cond_sweep_monotone_growth():
    table, slope = run_cond_sweep(1, (10, 20, 40), gamma=1.0 / 3.0, eta=4.0)
    conds = [c for _, c in table]
    assert conds[0] < conds[1] < conds[2]
    assert slope == pytest.approx(2.0, abs=0.5)


def test_load_config_defaults_and_overrides(tmp_path):
    cfg = load_config(None, {})
    assert cfg.problem == "source"
    assert cfg.Ns == (10, 20, 40, 80, 160)

    path = tmp_path / "sweep.cfg"
    path.write_text("problem = eigen\ncase = case3\ndegrees = 1,2\n"
                    "ns = 10,20\nmethods = fem, sgfem\neigs = 1,4\n")
    cfg = load_config(str(path), {})
    assert cfg.problem == "eigen"
    assert cfg.case == "case3"
    assert cfg.degrees == (1, 2)
    assert cfg.Ns == (10, 20)
    assert cfg.methods == ("FEM", "SGFEM")
    assert cfg.eigen_indices == (1, 4)

    cfg = load_config(str(path), {"ns": "40,80"})
    assert cfg.Ns == (40, 80)


def test_load_config_with_section_header(tmp_path):
    path = tmp_path / "s.cfg"
    path.write_text("[experiment]\nproblem = source\ndegrees = 2\n")
    cfg = load_config(str(path))
    assert cfg.degrees == (2,)


def test_load_config_rejects_invalid(tmp_path):
    path = tmp_path / "bad.cfg"
    path.write_text("problem = nonsense\n")
    with pytest.raises(InvalidArgumentError):
        load_config(str(path))


def test_fitting_mesh_cells_recorded():
    # N divisible by 3 with gamma = 1/3 silently falls back to plain FEM
    cfg = SweepConfig(problem="source", degrees=(1,), Ns=(9, 12, 15),
                      methods=("SGFEM",))
    rep = run_source_sweep(cfg)
    assert rep.metadata["fitting_cells"] == [(1, 9), (1, 12), (1, 15)]
    # and the unenriched solve on a fitting mesh is still optimal-order
    assert rep.rates[(1, "SGFEM", "h1_semi_u")] == pytest.approx(1.0, abs=0.2)


def test_error_context_includes_grid_point():
    cfg = SweepConfig(problem="eigen", case="custom", gamma=0.5, eta=-1.0,
                      degrees=(1,), Ns=(10,), methods=("SGFEM",))
    with pytest.raises(InvalidArgumentError, match="eta"):
        run_eigen_sweep(cfg)
