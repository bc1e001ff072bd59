"""Command-line front end: ``oracle-lens {bv,complexity,equivalence,scan,table}``.

Settings are resolved as command-line flags, then the JSON config file
(``--config`` or ``$ORACLE_LENS_CONFIG``), then built-in defaults. Exit
codes: 0 success, 1 usage error, 2 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from . import ccp, linalg, oracles, query
from .bits import all_strings, format_bits, parse_bits
from .errors import OracleLensError, ResourceError, UsageError
from .report import FORMATS, ReportDocument, render

COMMANDS = ("bv", "complexity", "equivalence", "scan", "table")
CONFIG_ENV = "ORACLE_LENS_CONFIG"
PARTY_ALIASES = {"standard": "standard", "steven": "standard", "alice": "alice", "bob": "bob"}


@dataclass
class RunConfig:
    command: str
    n: Optional[int] = None
    k: Optional[str] = None
    family: str = "standard"
    left: Optional[str] = None
    right: Optional[str] = None
    up_to_phase: bool = False
    witness: bool = False
    gate_set: str = "IH"
    mode: str = "strict"
    tol: float = linalg.DEFAULT_TOL
    format: str = "json"
    max_qubits: int = query.DEFAULT_BV_QUBITS
    budget: int = ccp.DEFAULT_BUDGET
    complexity_cap: int = query.DEFAULT_COMPLEXITY_CAP
    basis_set: Optional[oracles.BasisSetConfig] = field(default=None, repr=False)

    def validate(self) -> None:
        """Raise :class:`UsageError` for any bad value; nothing is computed here."""
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.n is None:
            raise UsageError("--n is required")
        if not isinstance(self.n, int) or self.n < 1:
            raise UsageError(f"--n must be a positive integer, got {self.n!r}")
        if self.k is not None:
            try:
                bits = parse_bits(self.k)
            except OracleLensError:
                raise UsageError(f"--k must be a string of 0/1 characters, got {self.k!r}") from None
            if len(bits) != self.n:
                raise UsageError(f"--k has {len(bits)} bits but --n is {self.n}")
        if self.command in ("bv", "table") and self.k is None:
            raise UsageError(f"--k is required for '{self.command}'")
        if self.command in ("complexity", "scan", "table") and self.family not in oracles.FAMILY_KINDS:
            raise UsageError(f"--family must be one of {', '.join(oracles.FAMILY_KINDS)}, got {self.family!r}")
        if self.command == "equivalence":
            if not self.left or not self.right:
                raise UsageError("--left and --right are required for 'equivalence'")
            for side in (self.left, self.right):
                self._check_oracle_name(side)
        if self.mode not in ccp.MODES:
            raise UsageError(f"--mode must be 'strict' or 'phase', got {self.mode!r}")
        if self.command == "scan":
            self.gates()
        if self.format not in FORMATS:
            raise UsageError(f"--format must be one of {', '.join(FORMATS)}, got {self.format!r}")
        if not self.tol > 0:
            raise UsageError(f"--tol must be positive, got {self.tol!r}")
        for name in ("max_qubits", "budget", "complexity_cap"):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 1:
                raise UsageError(f"--{name.replace('_', '-')} must be a positive integer, got {value!r}")

    def _check_oracle_name(self, name: str) -> None:
        family, _, basis = name.partition("@")
        if family not in PARTY_ALIASES:
            raise UsageError(f"unknown oracle {name!r}; use standard, alice, bob or FAMILY@ASSIGNMENT")
        if basis and basis not in oracles.NAMED_ASSIGNMENTS and not (
            self.basis_set and basis in self.basis_set.assignments
        ):
            raise UsageError(f"unknown basis assignment {basis!r} in {name!r}")

    def hidden(self):
        return parse_bits(self.k)

    def gates(self):
        if self.gate_set in ccp.GATE_SETS:
            return ccp.gate_set(self.gate_set)
        if self.basis_set is not None and self.gate_set == self.basis_set.name:
            return dict(self.basis_set.gates)
        raise UsageError(f"--gate-set must be IH, clifford or a config basis-set name, got {self.gate_set!r}")


def _unitary(name: str, n: int, k, cfg: RunConfig):
    family, _, basis = name.partition("@")
    kind = PARTY_ALIASES[family]
    if not basis:
        return oracles.party_unitary(kind, n, k)
    if basis in oracles.NAMED_ASSIGNMENTS:
        assignment = oracles.named_assignment(basis, n + 1)
    else:
        assignment = cfg.basis_set.assignment(basis)
    return oracles.quantum_oracle(oracles.classical_oracle(kind, n, k), assignment)


def _bob_note(n: int, names: Sequence[str]) -> List[str]:
    if n == 1 and any(nm.split("@")[-1] == "bob" for nm in names):
        return ["at n=1 Bob's basis assignment (H on qubits 0 and n) coincides with Alice's"]
    return []


def _cmd_bv(cfg: RunConfig) -> ReportDocument:
    res = query.bv_quantum_run(cfg.n, cfg.hidden(), max_qubits=cfg.max_qubits, tol=cfg.tol)
    rows = [{"outcome": format_bits(o), "probability": p} for o, p in sorted(res.distribution.items())]
    return ReportDocument(
        "bv",
        {"n": cfg.n, "k": cfg.k},
        {
            "recovered": format_bits(res.recovered),
            "probability": res.probability,
            "queries_used": res.queries_used,
            "success": format_bits(res.recovered) == cfg.k,
            "rows": rows,
        },
    )


def _cmd_complexity(cfg: RunConfig) -> ReportDocument:
    family = oracles.build_family(cfg.family, cfg.n)
    report = query.min_adaptive_queries(family, cap=cfg.complexity_cap)
    one = query.one_query_identifiable(family)
    results: Dict[str, Any] = {
        "family": cfg.family,
        "value": report.to_json()["value"],
        "identifiable": report.identifiable,
        "distinct_members": len(family.distinct_tables()),
        "members": len(family),
        "information_lower_bound": query.information_lower_bound(family) if report.identifiable else None,
        "one_query": format_bits(one) if one is not None else None,
    }
    if cfg.witness:
        results["witness"] = report.witness
    return ReportDocument(
        "complexity",
        {"family": cfg.family, "n": cfg.n, "witness": cfg.witness, "complexity_cap": cfg.complexity_cap},
        results,
        stats={"states_explored": report.states_explored},
    )


def _cmd_equivalence(cfg: RunConfig) -> ReportDocument:
    if cfg.n + 1 > linalg.MAX_QUBITS:
        raise ResourceError(f"equivalence at n={cfg.n} needs {cfg.n + 1} qubits, cap is {linalg.MAX_QUBITS}")
    rows = []
    for k in all_strings(cfg.n):
        a = _unitary(cfg.left, cfg.n, k, cfg)
        b = _unitary(cfg.right, cfg.n, k, cfg)
        rows.append({"k": format_bits(k), "equal": linalg.equals(a, b, cfg.tol, cfg.up_to_phase)})
    equal_set = [r["k"] for r in rows if r["equal"]]
    return ReportDocument(
        "equivalence",
        {"left": cfg.left, "right": cfg.right, "n": cfg.n, "up_to_phase": cfg.up_to_phase, "tol": cfg.tol},
        {"rows": rows, "equality_set": equal_set, "all_equal": len(equal_set) == len(rows)},
        warnings=_bob_note(cfg.n, [cfg.left, cfg.right]),
    )


def _cmd_scan(cfg: RunConfig) -> ReportDocument:
    units = oracles.party_unitaries(cfg.family, cfg.n)
    result = ccp.scan_family(units, cfg.gates(), mode=cfg.mode, tol=cfg.tol,
                             budget=cfg.budget, complexity_cap=cfg.complexity_cap)
    rows = []
    for rec in result.records:
        hits = sum(rec.per_k_classical.values())
        rows.append({
            "assignment": " ".join(rec.assignment.names),
            "family_classical": rec.family_classical,
            "classical_members": f"{hits}/{len(rec.per_k_classical)}",
            "complexity": rec.complexity.to_json()["value"] if rec.complexity else None,
        })
    warnings = _bob_note(cfg.n, [cfg.family])
    if cfg.mode == "phase":
        warnings.append("phase mode: counterparts are classical only up to per-state phases")
    return ReportDocument(
        "scan",
        {"family": cfg.family, "n": cfg.n, "gate_set": cfg.gate_set, "mode": cfg.mode,
         "tol": cfg.tol, "budget": cfg.budget},
        {
            "rows": rows,
            "family_classical_count": len(result.family_classical),
            "optimal": {
                "complexity": result.optimal_complexity,
                "assignments": [" ".join(r.assignment.names) for r in result.optimal],
            },
        },
        stats={"assignments_scanned": len(result.records)},
        warnings=warnings,
    )


def _cmd_table(cfg: RunConfig) -> ReportDocument:
    f = oracles.classical_oracle(cfg.family, cfg.n, cfg.hidden())
    rows = [{"input": i, "output": o} for i, o in f.truth_table()]
    return ReportDocument("table", {"family": cfg.family, "n": cfg.n, "k": cfg.k}, {"rows": rows})


_HANDLERS = {
    "bv": _cmd_bv,
    "complexity": _cmd_complexity,
    "equivalence": _cmd_equivalence,
    "scan": _cmd_scan,
    "table": _cmd_table,
}


def run_command(cfg: RunConfig) -> ReportDocument:
    cfg.validate()
    return _HANDLERS[cfg.command](cfg)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--n", type=int)
    common.add_argument("--format", choices=FORMATS)
    common.add_argument("--config", help="JSON config file (overrides $%s)" % CONFIG_ENV)
    common.add_argument("--tol", type=float)
    common.add_argument("--max-qubits", type=int, dest="max_qubits")
    common.add_argument("--complexity-cap", type=int, dest="complexity_cap")

    parser = _Parser(prog="oracle-lens", description="Classical counterparts of quantum oracles.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("bv", parents=[common], help="single-query quantum run")
    p.add_argument("--k")

    p = sub.add_parser("complexity", parents=[common], help="exact classical query complexity")
    p.add_argument("--family")
    p.add_argument("--witness", action="store_const", const=True)

    p = sub.add_parser("equivalence", parents=[common], help="compare two quantum oracles over all k")
    p.add_argument("--left")
    p.add_argument("--right")
    p.add_argument("--up-to-phase", action="store_const", const=True, dest="up_to_phase")

    p = sub.add_parser("scan", parents=[common], help="scan basis assignments for classical counterparts")
    p.add_argument("--family")
    p.add_argument("--gate-set", dest="gate_set")
    p.add_argument("--mode")
    p.add_argument("--budget", type=int)

    p = sub.add_parser("table", parents=[common], help="print a classical oracle's truth table")
    p.add_argument("--family")
    p.add_argument("--k")
    return parser


def load_config(path) -> Dict[str, Any]:
    try:
        obj = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise UsageError(f"cannot read config file {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"config file {path} is not valid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise UsageError(f"config file {path} must hold a JSON object")
    return obj


def resolve_config(args: argparse.Namespace, environ=None) -> RunConfig:
    """Merge flags over the config file over built-in defaults."""
    environ = os.environ if environ is None else environ
    path = args.config or environ.get(CONFIG_ENV)
    file_cfg = load_config(path) if path else {}
    defaults = file_cfg.get("defaults", {})
    known = {f.name for f in fields(RunConfig)} - {"command", "basis_set"}
    unknown = sorted(set(defaults) - known)
    if unknown:
        raise UsageError(f"unknown key(s) in config defaults: {', '.join(unknown)}")

    cfg = RunConfig(command=args.command)
    for key, value in defaults.items():
        setattr(cfg, key, value)
    for key in known:
        value = getattr(args, key, None)
        if value is not None:
            setattr(cfg, key, value)
    if "gates" in file_cfg:
        try:
            cfg.basis_set = oracles.parse_basis_set(file_cfg, cfg.tol)
        except OracleLensError as exc:
            raise UsageError(f"invalid basis set in config: {exc}") from None
    return cfg


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        cfg = resolve_config(args)
        doc = run_command(cfg)
        sys.stdout.write(render(doc, cfg.format))
    except ResourceError as exc:
        print(f"oracle-lens: resource cap: {exc}", file=sys.stderr)
        return 2
    except (UsageError, OracleLensError) as exc:
        print(f"oracle-lens: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
