"""Refinement-ladder experiment driver and report serialization."""

import configparser
import io
import time
from dataclasses import dataclass, field

import numpy as np

from .analytic import exact_eigenfunction, manufactured_source, solve_matching_system
from .assembly import InterfaceProblem, assemble
from .basis import DofVector, build_space
from .densela import generalized_eigs, scaled_condition_number, solve_spd
from .errors import (ErrorRecord, align_eigenfunction, fit_rate, h1_semi_error,
                     l2_error, relative_eigenvalue_error)
from .exceptions import (EigenvalueMismatchError, InsufficientDataError,
                         InvalidArgumentError)
from .mesh import build_uniform_mesh

# named coefficient configurations used throughout the experiments
CASES = {
    "case1": {"gamma": 1.0 / 3.0, "eta": 1.0},
    "case2": {"gamma": 1.0 / 3.0, "eta": 4.0},
    "case3": {"gamma": 1.0 / np.pi, "eta": float(np.e) ** 2},
}


@dataclass
class SweepConfig:
    problem: str = "source"
    gamma: float = 1.0 / 3.0
    eta: float = 4.0
    case: str = "manufactured"
    degrees: tuple = (1, 2, 3)
    Ns: tuple = (10, 20, 40, 80, 160)
    methods: tuple = ("FEM", "SGFEM")
    eigen_indices: tuple = (1, 4, 8)
    outputs: tuple = ()

    def validate(self):
        if self.problem not in ("source", "eigen"):
            raise InvalidArgumentError(f"unknown problem {self.problem!r}")
        if list(self.Ns) != sorted(self.Ns):
            raise InvalidArgumentError("Ns must be ascending")
        if any(p < 1 or p > 6 for p in self.degrees):
            raise InvalidArgumentError("degrees must lie in 1..6")
        if any(i < 1 for i in self.eigen_indices):
            raise InvalidArgumentError("eigen indices are 1-based")
        for m in self.methods:
            if m not in ("FEM", "SGFEM"):
                raise InvalidArgumentError(f"unknown method {m!r}")


@dataclass
class Report:
    rows: list
    rates: dict
    metadata: dict
    warnings: list = field(default_factory=list)


def _fit_rates(rows):
    groups = {}
    for r in rows:
        groups.setdefault((r.p, r.method, r.quantity), []).append(r)
    rates = {}
    for key, recs in groups.items():
        try:
            rates[key] = fit_rate(recs)
        except InsufficientDataError:
            continue
    return rates


def run_source_sweep(cfg):
    """Solve the manufactured source problem over the (p, N, method) grid and
    record H1-seminorm and L2 errors."""
    cfg.validate()
    if cfg.problem != "source":
        raise InvalidArgumentError("config is not a source sweep")
    u, f = manufactured_source()
    prob = InterfaceProblem(gamma=1.0 / 3.0, kappa0=1.0, kappa1=4.0, source=f)

    rows, warnings, fitting_cells = [], [], []
    t0 = time.time()
    for p in cfg.degrees:
        for N in cfg.Ns:
            mesh = build_uniform_mesh(N, prob.gamma)
            for method in cfg.methods:
                try:
                    space = build_space(mesh, p, enrich=(method == "SGFEM"))
                    if method == "SGFEM" and mesh.fitting:
                        fitting_cells.append((p, N))
                    system = assemble(space, prob)
                    U = solve_spd(system.K, system.F)
                    dofs = DofVector(U[:space.n_fem], U[space.n_fem:])
                    rows.append(ErrorRecord(N, p, method, "h1_semi_u",
                                            h1_semi_error(dofs, space, u)))
                    rows.append(ErrorRecord(N, p, method, "l2_u",
                                            l2_error(dofs, space, u)))
                except Exception as exc:
                    raise type(exc)(
                        f"(p={p}, N={N}, {method}): {exc}") from exc
    rates = _fit_rates(rows)
    if not rates:
        warnings.append("fewer than 3 refinement levels; no rates fitted")
    meta = {"config": cfg, "wall_time": time.time() - t0,
            "fitting_cells": fitting_cells}
    return Report(rows=rows, rates=rates, metadata=meta, warnings=warnings)


def _check_gaps(pairs, indices):
    lam = [p.lam for p in pairs]
    for idx in indices:
        i = idx - 1
        for j in (i - 1, i + 1):
            if 0 <= j < len(lam):
                if abs(lam[i] - lam[j]) <= 0.01 * lam[i]:
                    raise EigenvalueMismatchError(
                        f"exact eigenvalues {idx} and {j + 1} closer than 1%")


def run_eigen_sweep(cfg):
    """Solve the interface eigenvalue problem over the grid and record
    relative eigenvalue errors (and eigenfunction errors when requested via
    outputs containing 'eigenfunctions')."""
    cfg.validate()
    if cfg.problem != "eigen":
        raise InvalidArgumentError("config is not an eigen sweep")
    if cfg.case in CASES:
        gamma, eta = CASES[cfg.case]["gamma"], CASES[cfg.case]["eta"]
    else:
        gamma, eta = cfg.gamma, cfg.eta
    kmax = max(cfg.eigen_indices)
    pairs = solve_matching_system(gamma, eta, kmax + 1)
    _check_gaps(pairs, cfg.eigen_indices)
    want_fns = "eigenfunctions" in cfg.outputs
    exact_fns = {i: exact_eigenfunction(pairs[i - 1]) for i in cfg.eigen_indices} \
        if want_fns else {}
    prob = InterfaceProblem(gamma=gamma, kappa0=1.0, kappa1=eta)

    rows, warnings, fitting_cells = [], [], []
    t0 = time.time()
    for p in cfg.degrees:
        for N in cfg.Ns:
            mesh = build_uniform_mesh(N, gamma)
            for method in cfg.methods:
                try:
                    space = build_space(mesh, p, enrich=(method == "SGFEM"))
                    if method == "SGFEM" and mesh.fitting:
                        fitting_cells.append((p, N))
                    system = assemble(space, prob)
                    sol = generalized_eigs(system.K, system.M, kmax)
                    for idx in cfg.eigen_indices:
                        lam_h = sol.values[idx - 1]
                        rows.append(ErrorRecord(
                            N, p, method, f"rel_lambda_{idx}",
                            relative_eigenvalue_error(lam_h, pairs[idx - 1].lam)))
                        if want_fns:
                            vec = sol.vectors[:, idx - 1]
                            dofs = DofVector(vec[:space.n_fem], vec[space.n_fem:])
                            dofs = align_eigenfunction(dofs, space, exact_fns[idx])
                            rows.append(ErrorRecord(
                                N, p, method, f"h1_u{idx}",
                                h1_semi_error(dofs, space, exact_fns[idx])))
                            rows.append(ErrorRecord(
                                N, p, method, f"l2_u{idx}",
                                l2_error(dofs, space, exact_fns[idx])))
                except Exception as exc:
                    raise type(exc)(
                        f"(p={p}, N={N}, {method}): {exc}") from exc
    rates = _fit_rates(rows)
    if not rates:
        warnings.append("fewer than 3 refinement levels; no rates fitted")
    meta = {"config": cfg, "wall_time": time.time() - t0,
            "fitting_cells": fitting_cells, "gamma": gamma, "eta": eta}
    return Report(rows=rows, rates=rates, metadata=meta, warnings=warnings)


def run_cond_sweep(p, Ns, gamma=1.0 / 3.0, eta=4.0, method="SGFEM"):
    """Scaled condition number of the stiffness matrix along a refinement
    ladder, with the fitted log-log slope versus 1/h."""
    prob = InterfaceProblem(gamma=gamma, kappa0=1.0, kappa1=eta)
    conds = []
    for N in Ns:
        mesh = build_uniform_mesh(N, gamma)
        space = build_space(mesh, p, enrich=(method == "SGFEM"))
        system = assemble(space, prob)
        conds.append(scaled_condition_number(system.K))
    slope = float(np.polyfit(np.log(Ns), np.log(conds), 1)[0])
    return list(zip(Ns, conds)), slope


# ---------------------------------------------------------------------------
# serialization

def _sci(v):
    """Scientific notation with 3 significant digits, exponent without
    leading zeros (e.g. 4.92E-5)."""
    mant, exp = f"{v:.2E}".split("E")
    return f"{mant}E{int(exp):+d}"


def report_csv(report):
    buf = io.StringIO()
    problem = report.metadata["config"].problem
    buf.write("problem,method,p,N,quantity,value\n")
    for r in report.rows:
        buf.write(f"{problem},{r.method},{r.p},{r.N},{r.quantity},{r.value:.17g}\n")
    return buf.getvalue()


def report_markdown(report):
    cfg = report.metadata["config"]
    quantities = []
    for r in report.rows:
        if r.quantity not in quantities:
            quantities.append(r.quantity)
    Ns = sorted({r.N for r in report.rows})
    lookup = {(r.quantity, r.method, r.p, r.N): r.value for r in report.rows}
    lines = []
    for q in quantities:
        cols = [(m, p) for p in cfg.degrees for m in cfg.methods]
        lines.append(f"### {q}")
        lines.append("")
        header = "| N | " + " | ".join(f"{m} p={p}" for m, p in cols) + " |"
        lines.append(header)
        lines.append("|" + "---|" * (len(cols) + 1))
        for N in Ns:
            cells = []
            for m, p in cols:
                v = lookup.get((q, m, p, N))
                cells.append(_sci(v) if v is not None else "-")
            lines.append(f"| {N} | " + " | ".join(cells) + " |")
        cells = []
        for m, p in cols:
            rate = report.rates.get((p, m, q))
            cells.append(f"{rate:.2f}" if rate is not None else "-")
        lines.append("| rate | " + " | ".join(cells) + " |")
        lines.append("")
    return "\n".join(lines)


def emit_report(report, fmt, path):
    """Write a report as CSV or markdown."""
    if fmt == "csv":
        text = report_csv(report)
    elif fmt == "markdown":
        text = report_markdown(report)
    else:
        raise InvalidArgumentError(f"unknown format {fmt!r}")
    with open(path, "w") as fh:
        fh.write(text)
    return path


def parse_csv(text):
    """Inverse of report_csv for the record rows."""
    rows = []
    lines = text.strip().splitlines()
    for line in lines[1:]:
        problem, method, p, N, quantity, value = line.split(",")
        rows.append(ErrorRecord(int(N), int(p), method, quantity, float(value)))
    return rows


def load_config(path=None, overrides=None):
    """Build a SweepConfig from an INI-style file plus CLI overrides."""
    values = {}
    if path is not None:
        parser = configparser.ConfigParser()
        with open(path) as fh:
            content = fh.read()
        if not content.lstrip().startswith("["):
            content = "[sweep]\n" + content
        parser.read_string(content)
        section = parser.sections()[0]
        values.update(dict(parser[section]))
    if overrides:
        values.update({k: v for k, v in overrides.items() if v is not None})

    cfg = SweepConfig()
    if "problem" in values:
        cfg.problem = values["problem"]
    if "case" in values:
        cfg.case = values["case"]
    if "gamma" in values:
        cfg.gamma = float(values["gamma"])
    if "eta" in values:
        cfg.eta = float(values["eta"])
    if "degrees" in values:
        cfg.degrees = tuple(int(x) for x in str(values["degrees"]).split(","))
    if "ns" in values:
        cfg.Ns = tuple(int(x) for x in str(values["ns"]).split(","))
    if "methods" in values:
        cfg.methods = tuple(m.strip().upper() for m in str(values["methods"]).split(","))
    if "eigs" in values:
        cfg.eigen_indices = tuple(int(x) for x in str(values["eigs"]).split(","))
    if "outputs" in values:
        cfg.outputs = tuple(s.strip() for s in str(values["outputs"]).split(","))
    cfg.validate()
    return cfg
