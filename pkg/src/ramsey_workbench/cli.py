"""Command-line front end.

Exit codes: 0 affirmative/pass, 1 negative (with a certificate or
counterexample file), 2 unknown because a budget ran out, 3 usage, parse or
I/O error.  Human-readable summaries go to stdout; machine artifacts only to
files in ``--out-dir`` (default: ``$RAMSEY_WB_OUT_DIR`` or ``./rwb-out``).
"""
from __future__ import annotations

import argparse
import hashlib
import os
import sys
import time
from dataclasses import dataclass, field
from math import ceil
from pathlib import Path

import numpy as np

from . import formats
from .arrowing import (
    BudgetExceeded,
    EdgeColouring,
    PProfile,
    arrows,
    find_monochromatic_copy,
    iter_separators,
    partition_bounds,
    random_colouring,
    verify_p_profile,
)
from .constructions import (
    BlowupTrace,
    ConstructionTrace,
    ExtractionFailure,
    Theorem8Build,
    as_fraction,
    build_f_tower,
    build_l,
    build_theorem8,
    extract_witness,
    focus,
    good_colouring,
    hypergraph_search,
    interior_colouring,
    lemma5_check,
    theorem8_colouring,
    verify_lemma3,
)
from .graph_core import complete_bipartite
from .invariants import INFINITE, a_parameter, chromatic_number, clique_number, odd_girth

EXIT_OK, EXIT_NEGATIVE, EXIT_UNKNOWN, EXIT_USAGE = 0, 1, 2, 3
OUT_DIR_ENV = "RAMSEY_WB_OUT_DIR"

SEPARATOR_DISCLAIMER = (
    "note: this is a finite probe; finding no separator up to n_max proves "
    "nothing about Ramsey equivalence"
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


@dataclass
class RunReport:
    command: str
    inputs: dict = field(default_factory=dict)
    outcome: dict = field(default_factory=dict)
    timing: float = 0.0
    seed: int | None = None

    def to_dict(self) -> dict:
        # wall-clock time is printed, not stored, so artifacts stay reproducible
        d = {"command": self.command, "inputs": self.inputs, "outcome": self.outcome}
        if self.seed is not None:
            d["seed"] = self.seed
        return d


def _digest(path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def _out_dir(args) -> Path:
    return Path(args.out_dir or os.environ.get(OUT_DIR_ENV) or "rwb-out")


def _write(args, name: str, text: str) -> str:
    path = formats.write_atomic(_out_dir(args) / name, text)
    return path.name


def _write_graph(args, stem: str, g) -> str:
    ext = {"g6": "g6", "json": "json", "dot": "dot"}[args.format]
    return _write(args, f"{stem}.{ext}", formats.format_graph(g, args.format))


def _read_json(path):
    try:
        return formats.loads(Path(path).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def _read_graph(path):
    try:
        return formats.read_graph(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def _param_str(x) -> object:
    return "infinite" if x is INFINITE else x


# ------------------------------------------------------------------ params

def cmd_params(args, report: RunReport) -> int:
    g = _read_graph(args.graph)
    report.inputs["graph"] = _digest(args.graph)
    chi, chi_col = chromatic_number(g)
    omega = clique_number(g)
    og = odd_girth(g)
    outcome = {"chi": chi, "omega": omega, "odd_girth": _param_str(og)}
    summary = f"chi={chi} omega={omega} odd_girth={_param_str(og)}"
    files = {"chi_colouring": _write(args, "chi_colouring.json", formats.dumps(chi_col.to_dict()))}
    if g.n:
        a, a_col = a_parameter(g)
        outcome["a"] = a
        summary += f" a={a}"
        files["a_colouring"] = _write(args, "a_colouring.json", formats.dumps(a_col.to_dict()))
    outcome["files"] = files
    report.outcome = outcome
    print(summary)
    return EXIT_OK


# ------------------------------------------------------------------ arrows

def cmd_arrows(args, report: RunReport) -> int:
    f = _read_graph(args.host)
    h = _read_graph(args.pattern)
    report.inputs = {"host": _digest(args.host), "pattern": _digest(args.pattern)}
    try:
        r = arrows(f, h, args.q, args.budget_nodes)
    except BudgetExceeded as exc:
        report.outcome = {"result": "unknown", "reason": str(exc)}
        print(f"unknown: {exc}")
        return EXIT_UNKNOWN
    if r.arrows:
        report.outcome = {"result": True, "nodes": r.nodes}
        print(f"true: every {args.q}-colouring of the host has a monochromatic copy ({r.nodes} nodes)")
        return EXIT_OK
    name = _write(args, "certificate.json", formats.dumps(r.certificate.to_dict()))
    report.outcome = {"result": False, "nodes": r.nodes, "certificate": name}
    print(f"false: colouring without a monochromatic copy written to {name}")
    return EXIT_NEGATIVE


# --------------------------------------------------------------- construct

def cmd_construct(args, report: RunReport) -> int:
    report.seed = args.seed
    try:
        if args.what == "hypergraph":
            h = hypergraph_search(
                args.k, args.n_cap, as_fraction(args.eps), seed=args.seed,
                budget=args.search_budget, max_vertices=args.max_vertices,
            )
            name = _write(args, "hypergraph.json", formats.hypergraph_to_json(h))
            report.outcome = {"n": h.n, "k": h.k, "hyperedges": len(h), "file": name}
            print(f"hypergraph: n={h.n} k={h.k} hyperedges={len(h)} -> {name}")
        elif args.what == "blowup":
            g = _read_graph(args.graph)
            report.inputs["graph"] = _digest(args.graph)
            backing = None
            if args.backing:
                backing = formats.hypergraph_from_dict(_read_json(args.backing))
                report.inputs["backing"] = _digest(args.backing)
            bt = build_l(
                g, as_fraction(args.eps), args.n_cap, backing, seed=args.seed,
                search_budget=args.search_budget, max_vertices=args.max_vertices,
            )
            name = _write(args, "blowup.json", formats.dumps(bt.to_dict()))
            gname = _write_graph(args, "blowup_graph", bt.result)
            report.outcome = {"n": bt.result.n, "edges": bt.result.num_edges, "files": [name, gname]}
            print(f"blow-up: n={bt.result.n} edges={bt.result.num_edges} -> {name}, {gname}")
        elif args.what == "tower":
            tower = build_f_tower(
                args.m, args.n_cap, args.q, args.levels,
                as_fraction(args.eps) if args.eps else None, args.size_budget,
                seed=args.seed, search_budget=args.search_budget, max_vertices=args.max_vertices,
            )
            top = tower[-1]
            name = _write(args, "tower.json", formats.dumps(top.to_dict()))
            gname = _write_graph(args, "tower_graph", top.graph)
            sizes = [t.graph.n for t in tower]
            report.outcome = {"level_sizes": sizes, "eps": str(top.eps), "files": [name, gname]}
            print(f"tower: eps={top.eps} vertex counts by level {sizes} -> {name}, {gname}")
        elif args.what == "theorem8":
            g = _read_graph(args.graph)
            report.inputs["graph"] = _digest(args.graph)
            b = build_theorem8(
                g, args.n_cap, args.q, as_fraction(args.eps) if args.eps else None,
                args.size_budget, seed=args.seed, search_budget=args.search_budget,
                max_vertices=args.max_vertices,
            )
            c = theorem8_colouring(b)
            name = _write(args, "theorem8.json", formats.dumps(b.to_dict()))
            cname = _write(args, "theorem8_colouring.json", formats.dumps(c.to_dict()))
            gname = _write_graph(args, "theorem8_graph", b.graph)
            report.outcome = {
                "chi": b.chi, "a": b.a_value, "n": b.graph.n, "edges": b.graph.num_edges,
                "files": [name, cname, gname],
            }
            print(
                f"theorem8: chi={b.chi} a={b.a_value} |A|={len(b.a_set)} "
                f"n={b.graph.n} edges={b.graph.num_edges} -> {name}, {cname}, {gname}"
            )
    except BudgetExceeded as exc:
        report.outcome = {"result": "unknown", "reason": str(exc), "stage": exc.stage}
        print(f"budget exhausted: {exc}")
        return EXIT_UNKNOWN
    return EXIT_OK


# ------------------------------------------------------------------ verify

def _blowups_of(d: dict) -> list[BlowupTrace]:
    if "embeddings" in d:
        return [BlowupTrace.from_dict(d)]
    if "level" in d:
        return [t.inner for t in ConstructionTrace.from_dict(d).levels() if t.inner]
    if "blowup" in d:
        b = Theorem8Build.from_dict(d)
        return [t.inner for t in b.inner.levels() if t.inner] + [b.blowup]
    raise UsageError("trace file is not a blow-up, tower or theorem8 trace")


def _fail(args, report: RunReport, what: str, payload: dict) -> int:
    name = _write(args, "counterexample.json", formats.dumps(payload))
    report.outcome = {"result": "fail", "counterexample": name}
    print(f"FAIL: {what}; counterexample written to {name}")
    return EXIT_NEGATIVE


def cmd_verify(args, report: RunReport) -> int:
    suite = args.suite
    report.seed = args.seed
    rng = np.random.default_rng(args.seed)
    if suite in ("lemma3", "lemma5"):
        report.inputs["trace"] = _digest(args.trace)
        bts = _blowups_of(_read_json(args.trace))
        for i, bt in enumerate(bts):
            if suite == "lemma3":
                cap = args.n_cap or bt.n_cap
                ok, cyc = verify_lemma3(bt, cap)
                if not ok:
                    return _fail(args, report, f"blow-up {i}", {"blowup": i, "cycle": list(cyc)})
            else:
                ok, s = lemma5_check(bt)
                if not ok:
                    return _fail(args, report, f"blow-up {i}", {"blowup": i, "subset": list(s)})
        report.outcome = {"result": "pass", "blowups": len(bts)}
        print(f"PASS: {suite} holds on {len(bts)} blow-up(s)")
        return EXIT_OK
    if suite == "focus":
        for trial in range(args.trials):
            a_size = args.a or int(rng.integers(1, 6))
            b_size = args.b or int(rng.integers(1, 129))
            g = complete_bipartite(a_size, b_size)
            c = random_colouring(g, args.q, rng)
            a_set, b_set = range(a_size), range(a_size, a_size + b_size)
            fr = focus(a_set, b_set, c)
            ok = (
                len(fr.a_prime) >= ceil(a_size / args.q)
                and len(fr.b_prime) >= ceil(b_size / args.q ** a_size)
                and all(c.colour(x, y) == fr.colour for x in fr.a_prime for y in fr.b_prime)
            )
            if not ok:
                return _fail(args, report, f"trial {trial}", {"trial": trial, "colouring": c.to_dict()})
        report.outcome = {"result": "pass", "trials": args.trials}
        print(f"PASS: focussing bounds held on {args.trials} random colourings")
        return EXIT_OK
    if suite == "claim":
        report.inputs["trace"] = _digest(args.trace)
        t = ConstructionTrace.from_dict(_read_json(args.trace))
        for bounds in partition_bounds(t.level + t.q, t.q):
            ok, bad = verify_p_profile(good_colouring(t, bounds), PProfile(t.n_cap, bounds))
            if not ok:
                return _fail(args, report, f"good colouring {bounds}",
                             {"bounds": list(bounds), "colour": bad[0], "subset": list(bad[1])})
        sums = set()
        for trial in range(args.trials):
            c = random_colouring(t.graph, t.q, rng)
            try:
                w = extract_witness(t, c)
            except ExtractionFailure as exc:
                return _fail(args, report, str(exc), {"trial": trial, "colouring": c.to_dict()})
            sums.add(sum(w.m_values))
        report.outcome = {"result": "pass", "trials": args.trials, "witness_sums": sorted(sums)}
        print(f"PASS: good colourings verified; {args.trials} witnesses with sum(m) in {sorted(sums)}")
        return EXIT_OK
    if suite == "pprofile":
        g = _read_graph(args.graph)
        c = EdgeColouring.from_dict(g, _read_json(args.colouring))
        report.inputs = {"graph": _digest(args.graph), "colouring": _digest(args.colouring)}
        bounds = tuple(int(x) for x in args.bounds.split(","))
        ok, bad = verify_p_profile(c, PProfile(args.n_cap, bounds))
        if not ok:
            return _fail(args, report, f"colour {bad[0]} on {list(bad[1])}",
                         {"colour": bad[0], "subset": list(bad[1])})
        report.outcome = {"result": "pass"}
        print(f"PASS: colouring is ({args.n_cap}, {args.bounds})-good")
        return EXIT_OK
    if suite == "theorem8":
        report.inputs["trace"] = _digest(args.trace)
        b = Theorem8Build.from_dict(_read_json(args.trace))
        c = theorem8_colouring(b)
        bounds = (b.chi - 1,) * b.q
        ok, bad = verify_p_profile(interior_colouring(b, c), PProfile(b.n_cap, bounds))
        if not ok:
            return _fail(args, report, "interior colouring is not good",
                         {"colour": bad[0], "subset": list(bad[1])})
        if args.pattern:
            h = _read_graph(args.pattern)
            report.inputs["pattern"] = _digest(args.pattern)
            hit = find_monochromatic_copy(c, h)
            if hit is not None:
                return _fail(args, report, f"monochromatic copy in colour {hit[0]}",
                             {"colour": hit[0], "image": list(hit[1].image)})
        report.outcome = {"result": "pass"}
        print("PASS: theorem8 colouring verified")
        return EXIT_OK
    raise UsageError(f"unknown suite {suite}")


# ---------------------------------------------------------------- separate

def cmd_separate(args, report: RunReport) -> int:
    g = _read_graph(args.g)
    h = _read_graph(args.h)
    report.inputs = {"g": _digest(args.g), "h": _digest(args.h)}
    found = []
    try:
        for f in iter_separators(g, h, args.q, args.n_max, args.budget_nodes):
            line = formats.to_graph6(f)
            found.append(line)
            print(line, flush=True)
    except BudgetExceeded as exc:
        name = _write(args, "separators.g6", "".join(s + "\n" for s in found))
        report.outcome = {"result": "unknown", "found": len(found), "file": name, "reason": str(exc)}
        print(f"budget exhausted after {len(found)} separator(s): {exc}")
        print(SEPARATOR_DISCLAIMER)
        return EXIT_UNKNOWN
    name = _write(args, "separators.g6", "".join(s + "\n" for s in found))
    report.outcome = {"result": bool(found), "found": len(found), "file": name}
    print(f"{len(found)} separator(s) on at most {args.n_max} vertices -> {name}")
    print(SEPARATOR_DISCLAIMER)
    return EXIT_OK if found else EXIT_NEGATIVE


# ------------------------------------------------------------------ parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out-dir", default=None)
    common.add_argument("--format", choices=("g6", "json", "dot"), default="g6")
    common.add_argument("--seed", type=int, default=0)

    p = _Parser(prog="ramsey-wb", description="Ramsey arrowing and construction workbench")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sp = sub.add_parser("params", parents=[common], help="chi, omega, odd girth and a")
    sp.add_argument("graph")

    sp = sub.add_parser("arrows", parents=[common], help="decide host -> (pattern)_q")
    sp.add_argument("host")
    sp.add_argument("pattern")
    sp.add_argument("--q", type=int, default=2)
    sp.add_argument("--budget-nodes", type=int, default=None)

    sp = sub.add_parser("construct", parents=[common], help="run a construction")
    sp.add_argument("what", choices=("hypergraph", "blowup", "tower", "theorem8"))
    sp.add_argument("--k", type=int, default=2)
    sp.add_argument("--m", type=int, default=2)
    sp.add_argument("--n-cap", type=int, default=3)
    sp.add_argument("--q", type=int, default=2)
    sp.add_argument("--levels", type=int, default=1)
    sp.add_argument("--eps", default=None, help='rational such as "1/2"')
    sp.add_argument("--graph", default=None)
    sp.add_argument("--backing", default=None)
    sp.add_argument("--size-budget", type=int, default=None)
    sp.add_argument("--search-budget", type=int, default=200)
    sp.add_argument("--max-vertices", type=int, default=40)

    sp = sub.add_parser("verify", parents=[common], help="run a verification suite")
    sp.add_argument("suite", choices=("lemma3", "lemma5", "focus", "claim", "pprofile", "theorem8"))
    sp.add_argument("--trace", default=None)
    sp.add_argument("--graph", default=None)
    sp.add_argument("--colouring", default=None)
    sp.add_argument("--pattern", default=None)
    sp.add_argument("--bounds", default=None)
    sp.add_argument("--n-cap", type=int, default=None)
    sp.add_argument("--q", type=int, default=2)
    sp.add_argument("--a", type=int, default=None)
    sp.add_argument("--b", type=int, default=None)
    sp.add_argument("--trials", type=int, default=100)

    sp = sub.add_parser("separate", parents=[common], help="search small separating graphs")
    sp.add_argument("g")
    sp.add_argument("h")
    sp.add_argument("--q", type=int, default=2)
    sp.add_argument("--n-max", type=int, default=6)
    sp.add_argument("--budget-nodes", type=int, default=None)
    return p


COMMANDS = {
    "params": cmd_params,
    "arrows": cmd_arrows,
    "construct": cmd_construct,
    "verify": cmd_verify,
    "separate": cmd_separate,
}

_REQUIRED = {
    ("construct", "blowup"): ("graph", "eps"),
    ("construct", "theorem8"): ("graph",),
    ("construct", "hypergraph"): ("eps",),
    ("verify", "lemma3"): ("trace",),
    ("verify", "lemma5"): ("trace",),
    ("verify", "claim"): ("trace",),
    ("verify", "theorem8"): ("trace",),
    ("verify", "pprofile"): ("graph", "colouring", "bounds", "n_cap"),
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    key = (args.command, getattr(args, "what", None) or getattr(args, "suite", None))
    for name in _REQUIRED.get(key, ()):
        if getattr(args, name) is None:
            parser.error(f"{key[0]} {key[1]} needs --{name.replace('_', '-')}")
    report = RunReport(command=" ".join(x for x in key if x))
    start = time.perf_counter()
    try:
        code = COMMANDS[args.command](args, report)
    except (UsageError, formats.FormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report.timing = time.perf_counter() - start
    formats.write_atomic(_out_dir(args) / "report.json", formats.dumps(report.to_dict()))
    print(f"({report.timing:.2f}s)")
    return code


if __name__ == "__main__":
    sys.exit(main())
