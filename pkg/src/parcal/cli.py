"""Command-line front end.

Exit codes: 0 when the run verifies or the relation holds, 1 when a
counterexample or violation was found (the report carries the witness),
2 on usage errors or malformed input files.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time

from parcal import core, figures, laws, partition, reductions, subposet, \
    topology
from parcal.report import Report

USAGE_ERROR = 2


def _load_json(path: str):
    with open(path) as fh:
        return json.load(fh)


def _params_from_args(args) -> core.ParamSet:
    if getattr(args, "params", None):
        doc = _load_json(args.params)
        return core.ParamSet.from_config(doc)
    return core.PRESETS[args.preset]


def _param_report_entry(ps: core.ParamSet) -> dict:
    violations = core.validate_params(ps)
    entry = {"params": ps.to_config(), "violations": violations,
             "valid": not violations}
    if not violations:
        entry["omega"] = sorted(core.omega_set(ps))
        entry["omega_prime"] = sorted(core.omega_prime_set(ps))
        entry["omega_prime_note"] = (
            "empty by construction: finite width chains always have a "
            "last member below any level")
    return entry


def cmd_params(args) -> tuple[int, Report]:
    ps = _params_from_args(args)
    entry = _param_report_entry(ps)
    report = Report("params", {"params": ps.to_config()}, "exhaustive",
                    entry, witness=entry["violations"] or None)
    return (0 if entry["valid"] else 1), report


def cmd_demo_presets(args) -> tuple[int, Report]:
    pairs = [(2, 8), (2, 16), (3, 24)]
    presets = []
    for lam, mu in pairs:
        ps = core.full_budget_params(lam, mu)
        presets.append(_param_report_entry(ps))
    report = Report("demo-presets", {"pairs": pairs}, "exhaustive",
                    {"presets": presets,
                     "note": "budgets equal widths throughout"})
    return 0, report


def cmd_poset_props(args) -> tuple[int, Report]:
    ps = _params_from_args(args)
    tallies = laws.poset_law_tally(ps, triple_samples=args.sample,
                                   seed=args.seed, cap=args.cap)
    counts = laws.counts_by_domain_size(ps, args.cap)
    violated = {name: t.to_doc() for name, t in tallies.items()
                if t.violations}
    result = {
        "condition_count": sum(counts.values()),
        "counts_by_domain_size": {str(k): v for k, v in counts.items()},
        "laws": {name: t.to_doc() for name, t in tallies.items()},
        "triple_samples": args.sample,
        "seed": args.seed,
    }
    report = Report("poset-props", {"params": ps.to_config(),
                                    "sample": args.sample,
                                    "seed": args.seed},
                    "exhaustive-pairs+sampled-triples", result,
                    witness=violated or None)
    return (1 if violated else 0), report


def cmd_subposet_check(args) -> tuple[int, Report]:
    ps = _params_from_args(args)
    budget = subposet.CheckBudget(chain_cap=args.chain_cap, seed=args.seed)
    ys = subposet.generate_reasonable_params(ps, count=args.count,
                                             seed=args.seed)
    reports, violated = [], []
    for k, y in enumerate(ys):
        quad = subposet.check_quadruple_axioms(
            y, ps, budget, granularity=args.support_granularity)
        obs = subposet.check_support_laws(
            y, ps, budget, granularity=args.support_granularity)
        doc = quad.to_doc()
        doc["support_laws"] = obs
        doc["instance"] = y.to_doc()
        reports.append(doc)
        violated.extend(f"instance {k} clause {c}" for c in quad.violations())
        violated.extend(f"instance {k} law {name}"
                        for name, status in obs.items()
                        if status != "verified")
    result = {"reports": reports, "instances": len(ys),
              "granularity": args.support_granularity,
              "chain_cap": args.chain_cap, "seed": args.seed}
    report = Report("subposet-check",
                    {"params": ps.to_config(), "count": args.count,
                     "seed": args.seed,
                     "support_granularity": args.support_granularity},
                    "exact+bounded-chains", result,
                    witness=violated or None)
    return (1 if violated else 0), report


def cmd_relation(args) -> tuple[int, Report]:
    inputs = {"n": args.n, "m": args.m, "colors": args.colors,
              "variant": args.variant, "cap": args.cap,
              "sample": args.sample, "seed": args.seed}
    if args.variant in ("plain", "mixed"):
        outcome = partition.relation_holds(
            args.n, args.m, args.colors, args.variant, cap=args.cap,
            sample=args.sample, seed=args.seed)
    elif args.variant == "ramsey":
        outcome = partition.ramsey_holds(
            args.n, args.m, args.colors, cap=args.cap,
            sample=args.sample, seed=args.seed)
    else:
        outcome = partition.square_bracket_holds(
            args.n, args.m, args.colors, bound=args.bound, cap=args.cap,
            sample=args.sample, seed=args.seed)
        inputs["bound"] = args.bound
    doc = outcome.to_doc()
    witness = doc.pop("counterexample")
    report = Report("relation", inputs, outcome.mode,
                    {"holds": outcome.holds, "checked": outcome.checked},
                    witness=witness)
    return (0 if outcome.holds else 1), report


def cmd_square_bracket(args) -> tuple[int, Report]:
    outcome = partition.square_bracket_holds(
        args.n, args.m, args.colors, bound=args.bound, cap=args.cap,
        sample=args.sample, seed=args.seed)
    doc = outcome.to_doc()
    witness = doc.pop("counterexample")
    report = Report("square-bracket",
                    {"n": args.n, "setsize": args.m, "colors": args.colors,
                     "bound": args.bound, "cap": args.cap,
                     "sample": args.sample, "seed": args.seed},
                    outcome.mode,
                    {"holds": outcome.holds, "checked": outcome.checked},
                    witness=witness)
    return (0 if outcome.holds else 1), report


def cmd_reduce(args) -> tuple[int, Report]:
    if args.params:
        doc = _load_json(args.params)
        lc = reductions.LabeledColoring.from_doc(doc)
        universe = tuple(int(v) for v in doc.get(
            "universe", range(lc.coloring.n)))
        m = int(doc.get("m", 1))
        g = int(doc.get("g", 1))
        outcome: dict = {"doubled": reductions.build_d(lc).to_doc()}
        failures = []
        try:
            cfg = reductions.extract_polarized(lc, universe, m)
            outcome["polarized"] = cfg.to_doc()
        except reductions.ReductionError as exc:
            failures.append({"stage": "polarized", "error": str(exc)})
        try:
            verts, color = reductions.extract_ramsey(lc, universe, g)
            outcome["ramsey"] = {"vertices": list(verts), "color": color}
        except reductions.ReductionError as exc:
            failures.append({"stage": "ramsey", "error": str(exc)})
        outcome["failures"] = failures
        report = Report("reduce", {"params": args.params, "m": m, "g": g},
                        "exhaustive", outcome, witness=failures or None)
        return (1 if failures else 0), report
    rng = random.Random(args.seed)
    failures = []
    polarized_ok = ramsey_ok = 0
    example = None
    for k in range(args.sample):
        inst = reductions.generate_instance(rng)
        try:
            cfg = reductions.extract_polarized(inst.lc, inst.universe, inst.m)
            if not partition.verify_config(inst.lc.coloring, cfg):
                raise reductions.ReductionError("witness failed verification")
            polarized_ok += 1
        except reductions.ReductionError as exc:
            failures.append({"instance": k, "stage": "polarized",
                             "error": str(exc)})
        try:
            reductions.extract_ramsey(inst.lc, inst.universe, inst.g)
            ramsey_ok += 1
        except reductions.ReductionError as exc:
            failures.append({"instance": k, "stage": "ramsey",
                             "error": str(exc)})
        if example is None:
            example = {"doubled": reductions.build_d(inst.lc).to_doc(),
                       "universe": list(inst.universe),
                       "shape": inst.shape}
    result = {"instances": args.sample, "polarized_ok": polarized_ok,
              "ramsey_ok": ramsey_ok, "failures": failures,
              "example": example, "seed": args.seed}
    report = Report("reduce", {"sample": args.sample, "seed": args.seed},
                    "sampled", result, witness=failures or None)
    return (1 if failures else 0), report


def cmd_topo(args) -> tuple[int, Report]:
    if args.params:
        doc = _load_json(args.params)
        space = topology.FiniteSpace.from_doc(doc)
        result = {"space": {"points": list(space.points)},
                  "invariants": topology.invariants_report(space, args.cap)}
        report = Report("topo", {"params": args.params, "cap": args.cap},
                        "exhaustive", result)
        return 0, report
    rng = random.Random(args.seed)
    failures = []
    per_mode = {}
    example = None
    for mode in topology.MODES:
        extracted = 0
        for k in range(args.sample):
            sys_ = topology.generate_system(rng, mode)
            coloring = topology.coloring_from_system(sys_, mode)
            cfg = partition.find_config(coloring, 2, "mixed")
            if cfg is None:
                failures.append({"mode": mode, "instance": k,
                                 "error": "no witness found"})
                continue
            try:
                topology.discrete_from_config(sys_, cfg, mode)
                extracted += 1
            except topology.TopologyError as exc:
                failures.append({"mode": mode, "instance": k,
                                 "error": str(exc)})
            if example is None:
                example = {"coloring": coloring.to_doc(), "mode": mode}
        per_mode[mode] = extracted
    result = {"instances_per_mode": args.sample, "extracted": per_mode,
              "failures": failures, "example": example, "seed": args.seed}
    report = Report("topo", {"sample": args.sample, "seed": args.seed},
                    "sampled", result, witness=failures or None)
    return (1 if failures else 0), report


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="parcal",
        description="partition-calculus workbench: checkers, property "
                    "suites, reductions, extractions")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p, params=False, search=False):
        p.add_argument("--format", choices=("json", "tsv"), default="json")
        p.add_argument("--out", help="write the report to this file")
        p.add_argument("--figures", metavar="DIR",
                       help="render figures into this directory")
        p.add_argument("--timing", action="store_true",
                       help="include measured wall time in the report "
                            "(breaks byte-reproducibility)")
        p.add_argument("--seed", type=int, default=0)
        if params:
            p.add_argument("--params", help="parameter/instance file (JSON)")
            p.add_argument("--preset", choices=sorted(core.PRESETS),
                           default="two-level")
        if search:
            p.add_argument("--cap", type=int, default=partition.DEFAULT_CAP)
            p.add_argument("--sample", type=int, default=None)

    p = sub.add_parser("params", help="validate a parameter set")
    common(p, params=True)
    p.set_defaults(fn=cmd_params)

    p = sub.add_parser("poset-props", help="order-law battery")
    common(p, params=True)
    p.add_argument("--sample", type=int, default=10_000,
                   help="sampled triples for the three-way laws")
    p.add_argument("--cap", type=int, default=12)
    p.set_defaults(fn=cmd_poset_props)

    p = sub.add_parser("subposet-check", help="quadruple axiom checker")
    common(p, params=True)
    p.add_argument("--count", type=int, default=3)
    p.add_argument("--chain-cap", type=int, default=6)
    p.add_argument("--support-granularity", choices=("kappa", "theta"),
                   default="kappa")
    p.set_defaults(fn=cmd_subposet_check)

    p = sub.add_parser("relation", help="per-coloring relation check")
    common(p, search=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--colors", type=int, required=True)
    p.add_argument("--variant",
                   choices=("plain", "mixed", "ramsey", "square"),
                   required=True)
    p.add_argument("--bound", type=int, default=2)
    p.set_defaults(fn=cmd_relation)

    p = sub.add_parser("square-bracket", help="few-colors-on-a-set check")
    common(p, search=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True,
                   help="size of the sought vertex set")
    p.add_argument("--colors", type=int, required=True)
    p.add_argument("--bound", type=int, default=2)
    p.set_defaults(fn=cmd_square_bracket)

    p = sub.add_parser("reduce", help="doubled-coloring extraction round trip")
    common(p)
    p.add_argument("--params", help="labeled-coloring instance file (JSON)")
    p.add_argument("--sample", type=int, default=100)
    p.set_defaults(fn=cmd_reduce)

    p = sub.add_parser("topo", help="space invariants or system round trip")
    common(p)
    p.add_argument("--params", help="finite space file (JSON)")
    p.add_argument("--sample", type=int, default=50)
    p.add_argument("--cap", type=int, default=topology.BRUTE_CAP)
    p.set_defaults(fn=cmd_topo)

    p = sub.add_parser("demo-presets",
                       help="materialize the budgets-equal-widths family")
    common(p)
    p.set_defaults(fn=cmd_demo_presets)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.monotonic()
    try:
        code, report = args.fn(args)
    except (OSError, KeyError, ValueError, json.JSONDecodeError) as exc:
        print(f"parcal: error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    if args.timing:
        report.timing_ms = int((time.monotonic() - started) * 1000)
    if args.figures:
        report.figures = figures.render_for_report(report, args.figures)
    text = report.render(args.format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
