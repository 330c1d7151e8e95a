"""Command line: ``gencluster seed | verify | mutate``.

Exit status is 0 when everything passes, 1 on a verification failure and 2 on
a usage error or when no generic sample point can be found.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .double_seed.dual import build_dual_seed, dual_function
from .double_seed.functions import label_name, parse_label
from .double_seed.sampling import sample_point
from .double_seed.seed import build_initial_seed, evaluate_seed
from .exact_core import GenericityError
from .gcs_core import SeedError, arrows, seed_to_json, to_dot
from .mutation_walks import grid_label, s_stage, s_word
from .suites import SUITES, run_suite


class UsageError(Exception):
    pass


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("GENCLUSTER_THREADS", "1")))
    except ValueError:
        raise UsageError("GENCLUSTER_THREADS must be an integer")


def _emit(text: str, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dual_name(n):
    def name(lab):
        kind, i, j, sg = dual_function(n, lab)
        if kind == "psi":
            return f"psi{i}{j}(U)"
        if kind == "c":
            return f"c{i}(1,U)"
        return ("-" if sg < 0 else "") + f"h{i}{j}(U)"
    return name


# -- seed -------------------------------------------------------------------------


def cmd_seed(args) -> int:
    seed = build_dual_seed(args.n) if args.dual else build_initial_seed(args.n)
    title = "Qdual" if args.dual else "Q"
    fmt = args.format or "json"
    if fmt == "dot":
        text = to_dot(seed, label_name, f"{title}{args.n}")
    elif fmt == "json":
        doc = seed_to_json(seed, label_name)
        doc["n"] = args.n
        doc["dual"] = bool(args.dual)
        if args.dual:
            doc["functions"] = {label_name(l): _dual_name(args.n)(l) for l in seed.labels}
        text = json.dumps(doc, indent=2) + "\n"
    else:
        lines = [f"{title}{args.n}: {len(seed.labels)} vertices, {seed.n_mutable} mutable"]
        for i, l in enumerate(seed.labels):
            kind = "mutable" if i < seed.n_mutable else ("isolated" if seed.is_isolated(l) else "frozen")
            d = f" d={seed.d[i]}" if i < seed.n_mutable and seed.d[i] > 1 else ""
            lines.append(f"  {label_name(l):8s} {kind}{d}")
        for s, t, m in arrows(seed):
            lines.append(f"  {label_name(s)} -> {label_name(t)}" + (f" x{m}" if m > 1 else ""))
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0


# -- verify -------------------------------------------------------------------------


def _suite_names(spec: str) -> list:
    names = list(SUITES) if spec == "all" else [s.strip() for s in spec.split(",") if s.strip()]
    bad = [s for s in names if s not in SUITES]
    if bad:
        raise UsageError(f"unknown suite {bad[0]!r}; choose from {', '.join(SUITES)} or all")
    return names


def _run(job):
    name, n, points, rng_seed = job
    return name, [c.to_json() for c in run_suite(name, n, points, rng_seed)]


def cmd_verify(args) -> int:
    if args.points < 1:
        raise UsageError("--points must be at least 1")
    jobs = [(s, args.n, args.points, args.rng_seed) for s in _suite_names(args.suite)]
    workers = min(_threads(), len(jobs))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(_run, jobs))
    else:
        results = [_run(j) for j in jobs]
    checks = [c for _, cs in results for c in cs]
    ok = all(c["passed"] for c in checks)
    if (args.format or "text") == "json":
        doc = {"n": args.n, "points": args.points, "rng_seed": args.rng_seed, "passed": ok, "checks": checks}
        text = json.dumps(doc, indent=2) + "\n"
    else:
        lines = []
        for c in checks:
            lines.append(f"{'PASS' if c['passed'] else 'FAIL'}  {c['suite']}/{c['check']}  {c['claim']}")
            if not c["passed"]:
                lines.append("      witness: " + _first_failure(c["report"]))
            lam = c["report"].get("details", {}).get("lambda") if isinstance(c["report"], dict) else None
            if lam is not None:
                lines.append(f"      lambda = {lam}")
        lines.append(f"{sum(c['passed'] for c in checks)}/{len(checks)} checks passed (n={args.n})")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0 if ok else 1


def _first_failure(report: dict) -> str:
    for r in report.get("results", []):
        if not r["passed"]:
            return f"{r['relation']} {r['index']} {r['detail']}"
    fails = report.get("failures")
    if fails:
        return fails[0]
    return json.dumps(report)[:200]


# -- mutate -------------------------------------------------------------------------


def parse_word(n: int, word: str) -> list:
    """``S``, ``S_m`` (``2 <= m <= n``) or vertex names separated by spaces or commas."""
    out = []
    for tok in word.replace(",", " ").split():
        if tok == "S":
            out += s_word(n)
        elif tok.startswith("S_"):
            m = int(tok[2:])
            if not 2 <= m <= n:
                raise UsageError(f"S_m needs 2 <= m <= {n}")
            out += [grid_label(n, i, j) for i, j in s_stage(n, n - m + 1)]
        else:
            try:
                out.append(parse_label(tok))
            except ValueError as e:
                raise UsageError(str(e))
    return out


def cmd_mutate(args) -> int:
    seed = build_initial_seed(args.n)
    word = parse_word(args.n, args.word or "")
    for lab in word:
        if lab not in seed.labels:
            raise UsageError(f"{label_name(lab)} is not a vertex of Q{args.n}")
        if seed.index(lab) >= seed.n_mutable:
            raise UsageError(f"{label_name(lab)} is frozen and cannot be mutated")
    X, Y = sample_point(args.n, args.rng_seed)
    es0 = evaluate_seed(seed, X, Y)
    es = es0
    steps = []
    for lab in word:
        es = es.mutate(lab)
        steps.append((label_name(lab), es.values[lab]))
    final = {label_name(l): es.values[l] for l in seed.labels}
    if (args.format or "text") == "json":
        doc = {
            "n": args.n,
            "rng_seed": args.rng_seed,
            "word": [s for s, _ in steps],
            "steps": [{"vertex": s, "value": str(v)} for s, v in steps],
            "initial": {label_name(l): str(es0.values[l]) for l in seed.labels},
            "final": {k: str(v) for k, v in final.items()},
            "unchanged": es.values == es0.values,
        }
        text = json.dumps(doc, indent=2) + "\n"
    else:
        lines = [f"{i + 1:4d}  {s:8s} {v}" for i, (s, v) in enumerate(steps)]
        lines.append("final:")
        lines += [f"      {k:8s} {v}" for k, v in final.items()]
        lines.append("unchanged" if es.values == es0.values else "changed")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0


# -- entry point --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gencluster", description="Generalized cluster structures on the double of GL_n.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, formats, default):
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--rng-seed", type=int, default=0)
        sp.add_argument("--format", choices=formats, default=default)
        sp.add_argument("--out")

    sp = sub.add_parser("seed", help="print the initial or the dual seed")
    common(sp, ["json", "text", "dot"], "json")
    sp.add_argument("--dual", action="store_true")
    sp.set_defaults(func=cmd_seed)

    sp = sub.add_parser("verify", help="run verification suites")
    common(sp, ["json", "text"], "text")
    sp.add_argument("--suite", default="all", help="comma separated: " + ", ".join(SUITES) + ", or all")
    sp.add_argument("--points", type=int, default=3)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("mutate", help="apply a mutation word at a sample point")
    common(sp, ["json", "text"], "text")
    sp.add_argument("--word", default="", help="S, S_m or vertex names such as 'g22 h22'")
    sp.set_defaults(func=cmd_mutate)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.n < 2:
        parser.error("--n must be at least 2")
    try:
        return args.func(args)
    except UsageError as e:
        parser.error(str(e))
    except (GenericityError, SeedError) as e:
        print(f"gencluster: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
