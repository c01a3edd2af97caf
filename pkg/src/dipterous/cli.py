"""Command-line front end: every computation as a reproducible report.

Exit codes: 0 when all checks pass, 1 when a mathematical check fails
(the report carries a witness), 2 on usage or input-parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .bialgebras import antipode_table, primcom_dims
from .coproducts import CoproductParams, prim_basis
from .dynamics import (
    GrammarError,
    distribution_json,
    distribution_rows,
    dynamics_step,
    parse_grammar,
    total_mass,
    word_elem,
)
from .freealg import dim_table
from .homology import koszul_report, qn_dim_table
from .series import little_schroeder, qndipt_dims
from .verify import antipode_witness, axioms_suite, bialgebra_suite, coassoc_suite, pbw_suite


@dataclass(frozen=True)
class RunConfig:
    max_degree: int = 5
    t_param: Fraction = Fraction(1)
    seed: int = 0
    output: str = "text"
    weight_cap: int = 5

    def __post_init__(self):
        if self.max_degree < 1 or self.weight_cap < 1:
            raise ValueError("max_degree and weight_cap must be >= 1")


def _emit(config: RunConfig, payload: dict, text_lines: list[str]) -> None:
    if config.output == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _dims_rows(which: str, config: RunConfig) -> dict:
    n = config.max_degree
    tables = dim_table(n)
    rows = {
        "dipt": (tables["dipt"].dims, tables["dipt"].reference),
        "mag": (tables["mag"].dims, tables["mag"].reference),
        "ldipt": (tables["ldipt"].dims, tables["ldipt"].reference),
        "qndipt": (tuple(qn_dim_table(n)), tuple(qndipt_dims(n))),
    }
    return {which: rows[which]} if which != "all" else rows


def cmd_dims(config: RunConfig, which: str) -> int:
    rows = _dims_rows(which, config)
    lines = [f"degree: {' '.join(str(k) for k in range(1, config.max_degree + 1))}"]
    payload = {}
    all_match = True
    for name, (dims, ref) in rows.items():
        match = dims == ref
        all_match &= match
        lines.append(f"{name:7s} dims={list(dims)} reference={list(ref)} match={str(match).lower()}")
        payload[name] = {"dims": list(dims), "reference": list(ref), "match": match}
    _emit(config, payload, lines)
    return 0 if all_match else 1


def cmd_prim(config: RunConfig, coproduct: str) -> int:
    params = CoproductParams(config.t_param)
    payload: dict = {}
    lines: list[str] = []
    ok = True
    if coproduct in ("semiinf", "both"):
        dims = [len(prim_basis(n, params)) for n in range(1, config.max_degree + 1)]
        ref = little_schroeder(config.max_degree)
        match = dims == ref
        ok &= match
        lines.append(f"semiinf dims={dims} reference={ref} match={str(match).lower()}")
        payload["semiinf"] = {"dims": dims, "reference": ref, "match": match}
    if coproduct in ("hopf", "both"):
        dims, oracle = primcom_dims(config.max_degree)
        match = dims == oracle
        ok &= match
        lines.append(f"hopf    dims={dims} oracle={oracle} match={str(match).lower()}")
        payload["hopf"] = {"dims": dims, "oracle": oracle, "match": match}
    _emit(config, payload, lines)
    return 0 if ok else 1


def cmd_homology(config: RunConfig) -> int:
    report = koszul_report(weight_cap=config.weight_cap)
    lines = ["arity weight kernel image betti"]
    for piece in report.pieces:
        lines.append(
            f"{piece['arity']:5d} {piece['weight']:6d} {piece['kernel']:6d}"
            f" {piece['image']:5d} {piece['betti']:5d}"
        )
    lines.append(
        f"square_zero={report.square_zero_ok} simplicial={report.simplicial_ok}"
        f" homotopy={report.homotopy_ok} betti={report.betti_ok}"
    )
    lines.append(f"koszul_ok={str(report.koszul_ok).lower()}")
    if report.witness:
        lines.append(f"witness: {report.witness}")
    _emit(config, report.to_json(), lines)
    return 0 if report.koszul_ok else 1


def cmd_verify(config: RunConfig, suite: str) -> int:
    checks = []
    if suite in ("axioms", "all"):
        checks += axioms_suite()
    if suite in ("coassoc", "all"):
        checks += coassoc_suite(min(config.max_degree, 4), config.seed)
    if suite in ("bialgebra", "all"):
        checks += bialgebra_suite(min(config.max_degree, 4))
    if suite in ("pbw", "all"):
        checks += pbw_suite(config.max_degree)
    lines = []
    payload = {"checks": []}
    ok = True
    for check in checks:
        ok &= check.ok
        status = "pass" if check.ok else "FAIL"
        line = f"[{status}] {check.name}"
        if check.detail:
            line += f" ({check.detail})"
        if check.witness:
            line += f" -- witness: {check.witness}"
        lines.append(line)
        payload["checks"].append(
            {"name": check.name, "ok": check.ok, "witness": check.witness, "detail": check.detail}
        )
    payload["ok"] = ok
    lines.append(f"ok={str(ok).lower()}")
    _emit(config, payload, lines)
    return 0 if ok else 1


def cmd_antipode(config: RunConfig, degree: int) -> int:
    if degree < 1:
        print(f"degree must be >= 1, got {degree}", file=sys.stderr)
        return 2
    if degree > config.max_degree:
        print(f"degree {degree} exceeds --max-degree {config.max_degree}", file=sys.stderr)
        return 2
    table = antipode_table(degree)
    witness = antipode_witness(degree)
    lines = []
    for key, images in table.items():
        lines.append(f"{key}")
        lines.append(f"  S : {images['S']}")
        lines.append(f"  S': {images['Sprime']}")
    lines.append(f"identities_ok={str(witness is None).lower()}")
    payload = {"degree": degree, "table": table, "identities_ok": witness is None}
    if witness:
        payload["witness"] = witness
        lines.append(f"witness: {witness}")
    _emit(config, payload, lines)
    return 0 if witness is None else 1


def cmd_dynamics(config: RunConfig, grammar_path: str, start: str, steps: int, free_weights: bool) -> int:
    try:
        text = Path(grammar_path).read_text()
    except OSError as exc:
        print(f"cannot read grammar file: {exc}", file=sys.stderr)
        return 2
    try:
        tbl = parse_grammar(text, probability=not free_weights)
        if start not in tbl.alphabet:
            raise GrammarError(f"start symbol {start!r} not in alphabet")
    except GrammarError as exc:
        print(f"grammar error: {exc}", file=sys.stderr)
        return 2
    state = word_elem((start,))
    payload = {"steps": []}
    lines = []
    for step in range(steps + 1):
        rows = distribution_rows(state)
        mass = total_mass(state)
        lines.append(f"step {step} (mass {mass}):")
        lines.extend(f"  {word} : {m}" for word, m in rows)
        payload["steps"].append(
            {"step": step, "mass": str(mass), "distribution": distribution_json(state)}
        )
        if step < steps:
            state = dynamics_step(tbl, state)
    _emit(config, payload, lines)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-degree", type=int, default=5, metavar="N")
    common.add_argument("--t", type=Fraction, default=Fraction(1), metavar="p/q",
                        help="deformation weight of the coproduct (default 1)")
    common.add_argument("--seed", type=int, default=0, metavar="S")
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")
    common.add_argument("--weight-cap", type=int, default=5, metavar="W")

    parser = argparse.ArgumentParser(
        prog="dipterous",
        description="Exact tree-algebra computations: dimensions, primitives, homology, antipodes, dynamics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dims", parents=[common], help="dimension tables vs reference series")
    p.add_argument("which", choices=["dipt", "mag", "qndipt", "ldipt", "all"])

    p = sub.add_parser("prim", parents=[common], help="primitive-space dimensions per degree")
    p.add_argument("coproduct", choices=["semiinf", "hopf", "both"])

    sub.add_parser("homology", parents=[common], help="exactness certificate and Betti table")

    p = sub.add_parser("verify", parents=[common], help="property suites with witnesses")
    p.add_argument("suite", choices=["axioms", "coassoc", "bialgebra", "pbw", "all"])

    p = sub.add_parser("antipode", parents=[common], help="antipode tables at one degree")
    p.add_argument("degree", type=int)

    p = sub.add_parser("dynamics", parents=[common], help="stochastic rewriting from a grammar file")
    p.add_argument("grammar")
    p.add_argument("start")
    p.add_argument("steps", type=int)
    p.add_argument("--free-weights", action="store_true",
                   help="allow non-stochastic rule weights")

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = RunConfig(
            max_degree=args.max_degree,
            t_param=args.t,
            seed=args.seed,
            output="json" if args.json else "text",
            weight_cap=args.weight_cap,
        )
    except ValueError as exc:
        print(f"bad configuration: {exc}", file=sys.stderr)
        return 2
    if args.command == "dims":
        return cmd_dims(config, args.which)
    if args.command == "prim":
        return cmd_prim(config, args.coproduct)
    if args.command == "homology":
        return cmd_homology(config)
    if args.command == "verify":
        return cmd_verify(config, args.suite)
    if args.command == "antipode":
        return cmd_antipode(config, args.degree)
    if args.command == "dynamics":
        return cmd_dynamics(config, args.grammar, args.start, args.steps, args.free_weights)
    raise AssertionError(f"unhandled command {args.command}")


if __name__ == "__main__":
    sys.exit(main())
