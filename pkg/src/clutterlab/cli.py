"""Command-line front end: instance I/O, property checks, certificates.

Exit codes: 0 = property holds, 1 = property fails, 2 = undecided (budget),
64 = usage or parse error.  Certificates are byte-stable JSON for a fixed
input and schema version; timing is only included on request so that
repeated runs stay byte-identical.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import combinat, ehrhart, families, ideals, tdi
from .combinat import Clutter, RawClutter, SimpleGraph
from .errors import Undecided, UsageError, step_budget
from .tdi import LinearSystem

SCHEMA_VERSION = 1

EXIT_HOLDS = 0
EXIT_FAILS = 1
EXIT_UNDECIDED = 2
EXIT_USAGE = 64

PROPERTIES = (
    "ehrhart", "ideal", "mfmc", "tdi", "meyniel", "perfect",
    "unmixed", "uniform", "konig", "ntf", "normal",
)


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else int(x)
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    return x


def canonical_json(obj) -> str:
    return json.dumps(_jsonable(obj), sort_keys=True, separators=(",", ":"))


def instance_payload(obj):
    if isinstance(obj, SimpleGraph):
        return {"kind": "graph", "n": obj.n, "edges": [list(e) for e in obj.edges]}
    if isinstance(obj, RawClutter):
        return {"kind": "clutter", "n": obj.n, "edges": [list(e) for e in obj.edges]}
    if isinstance(obj, LinearSystem):
        return {
            "kind": "system",
            "columns": [list(v) for v in obj.columns],
            "w": list(obj.w),
        }
    raise UsageError(f"cannot serialize {type(obj).__name__}")


def digest(obj) -> str:
    return "sha256:" + hashlib.sha256(canonical_json(instance_payload(obj)).encode()).hexdigest()


def parse_instance(text: str, where: str = "<input>"):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(
            f"{where}: malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc
    if not isinstance(data, dict) or "kind" not in data:
        raise UsageError(f"{where}: expected an object with a 'kind' field")
    kind = data["kind"]
    try:
        if kind == "graph":
            return SimpleGraph(data["n"], [tuple(e) for e in data["edges"]])
        if kind == "clutter":
            return combinat.as_clutter_or_raw(data["n"], [tuple(e) for e in data["edges"]])
        if kind == "system":
            return LinearSystem([tuple(v) for v in data["columns"]], data["w"])
    except (KeyError, TypeError) as exc:
        raise UsageError(f"{where}: bad {kind} payload: {exc}") from exc
    raise UsageError(f"{where}: unknown kind {kind!r}")


def load_instance(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    return parse_instance(text, where=path)


# ---------------------------------------------------------------------------
# Property dispatch
# ---------------------------------------------------------------------------


def _as_clutter(obj, notes: dict) -> RawClutter:
    if isinstance(obj, RawClutter):
        return obj
    if isinstance(obj, SimpleGraph):
        notes["derived"] = "clique-clutter"
        return combinat.clique_clutter(obj)
    raise UsageError("this property needs a clutter (or a graph, via its clique clutter)")


def _as_graph(obj) -> SimpleGraph:
    if isinstance(obj, SimpleGraph):
        return obj
    raise UsageError("this property needs a graph input")


def _tdi_payload(cert: tdi.TdiCertificate):
    payload = {"faces_checked": len(cert.faces)}
    if cert.failing is not None:
        payload["failing_face"] = {
            "point": [str(x) for x in cert.failing.point],
            "active_columns": list(cert.failing.active),
            "missing_lattice_points": [list(w) for w in cert.failing.witnesses],
        }
    if cert.note:
        payload["note"] = cert.note
    return payload


def run_check(prop: str, obj, power_bound: int, budget: int | None):
    """Returns (verdict, witnesses, invariants, notes)."""
    notes: dict = {}
    if prop == "tdi":
        if not isinstance(obj, LinearSystem):
            raise UsageError("check tdi: input must be a system")
        cert = tdi.is_tdi(obj, budget)
        return cert.verdict, _tdi_payload(cert), {}, notes
    if prop == "meyniel":
        ok, wit = combinat.is_meyniel(_as_graph(obj))
        wits = {} if ok else {"odd_cycle": list(wit[0]), "chords": wit[1]}
        return ok, wits, {}, notes
    if prop == "perfect":
        ok, wit = combinat.is_perfect_small(_as_graph(obj))
        wits = {} if ok else {"kind": wit[0], "cycle": list(wit[1])}
        return ok, wits, {}, notes
    c = _as_clutter(obj, notes)
    if prop == "ehrhart":
        ok, wits = ehrhart.is_ehrhart_clutter(c, budget)
        return ok, {"missing_lattice_points": [list(w) for w in wits]} if not ok else {}, {}, notes
    if prop == "ideal":
        ok, wit = tdi.is_ideal_clutter(c)
        wits = {} if ok else {"fractional_vertex": [str(x) for x in wit]}
        return ok, wits, {}, notes
    if prop == "mfmc":
        cert = tdi.is_mfmc(c, budget)
        return cert.verdict, _tdi_payload(cert), {}, notes
    if prop == "unmixed":
        ok = combinat.is_unmixed(c)
        sizes = sorted({len(s) for s in combinat.minimal_covers(c)})
        return ok, {}, {"cover_sizes": sizes}, notes
    if prop == "uniform":
        d = combinat.is_uniform(c)
        return d is not None, {}, {"d": d}, notes
    if prop == "konig":
        g = combinat.covering_number(c)
        m = combinat.max_disjoint_edges(c)
        return g == m, {}, {"covering_number": g, "matching_number": m}, notes
    if prop == "ntf":
        rep = ideals.is_ntf_upto(c, power_bound)
        inv = {"power_bound": power_bound}
        if rep.ok:
            notes["caveat"] = f"equality verified up to power {power_bound}; not a proof"
            return True, {}, inv, notes
        return False, {"power": rep.failure_power, "monomial": list(rep.witness)}, inv, notes
    if prop == "normal":
        rep = ideals.is_normal_upto(c, power_bound)
        inv = {"power_bound": power_bound}
        if rep.ok:
            notes["caveat"] = f"equality verified up to power {power_bound}; not a proof"
            return True, {}, inv, notes
        return (
            False,
            {"power": rep.normal.failure_power, "monomial": list(rep.normal.witness)},
            inv,
            notes,
        )
    raise UsageError(f"unknown property {prop!r}")


def make_certificate(command: str, obj, verdict, witnesses, invariants, notes,
                     seed=None, budget=None, timing_ms=None, extra=None):
    cert = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "instance": instance_payload(obj),
        "digest": digest(obj),
        "verdict": verdict,
        "witnesses": _jsonable(witnesses),
        "invariants": _jsonable(invariants),
        "notes": notes,
        "seed": seed,
        "budget": {"limit": budget, "exceeded": verdict == "undecided"},
        "timing_ms": timing_ms,
    }
    if extra:
        cert.update(_jsonable(extra))
    return cert


def emit(cert, args) -> None:
    text = json.dumps(_jsonable(cert), sort_keys=True, indent=2) + "\n"
    if getattr(args, "output", None):
        Path(args.output).write_text(text, encoding="utf-8")
    if getattr(args, "json", False):
        sys.stdout.write(text)


def _verdict_exit(verdict) -> int:
    if verdict is True or verdict == "vacuous":
        return EXIT_HOLDS
    if verdict == "undecided":
        return EXIT_UNDECIDED
    return EXIT_FAILS


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def cmd_check(args) -> int:
    obj = load_instance(args.input)
    t0 = time.monotonic()
    try:
        verdict, wits, inv, notes = run_check(args.property, obj, args.power_bound, args.budget)
    except Undecided as exc:
        verdict, wits, inv, notes = "undecided", {}, {}, {"reason": str(exc)}
    ms = round((time.monotonic() - t0) * 1000)
    cert = make_certificate(
        f"check {args.property}", obj, verdict, wits, inv, notes,
        budget=args.budget, timing_ms=ms if args.timing else None,
    )
    emit(cert, args)
    if not args.json:
        word = {True: "holds", False: "fails"}.get(verdict, verdict)
        print(f"{args.property}: {word}  [{cert['digest'][:15]}...]")
        if wits and verdict is not True:
            print(f"  witness: {canonical_json(wits)}")
    return _verdict_exit(verdict)


def cmd_invariants(args) -> int:
    obj = load_instance(args.input)
    notes: dict = {}
    c = _as_clutter(obj, notes)
    analysis = ehrhart.analyze(c, args.budget)
    bounds = ehrhart.check_regularity_bounds(c)
    inv = {
        "hvector": list(analysis.hvector),
        "a_invariant": analysis.a_invariant,
        "a_invariant_interior": ehrhart.a_invariant_interior(c),
        "regularity": analysis.regularity,
        "dim": analysis.dim,
        "is_ehrhart": analysis.is_ehrhart,
        "covering_number": bounds.g,
        "d": bounds.d,
        "bounds": {
            "hypotheses_met": bounds.hypotheses_met,
            "missing": list(bounds.missing),
            "a_bound": bounds.a_bound,
            "a_tight": bounds.a_tight,
            "regularity_bound": bounds.reg_bound,
            "regularity_tight": bounds.reg_tight,
        },
    }
    cert = make_certificate("invariants", obj, True, {}, inv, notes, budget=args.budget)
    emit(cert, args)
    if not args.json:
        print(f"h-vector    {inv['hvector']}")
        print(f"a-invariant {inv['a_invariant']} (interior route {inv['a_invariant_interior']})")
        print(f"regularity  {inv['regularity']}")
        print(f"covering number {inv['covering_number']}, d {inv['d']}")
        if bounds.hypotheses_met:
            print(f"bounds: a <= {bounds.a_bound} (tight: {bounds.a_tight}), "
                  f"reg <= {bounds.reg_bound} (tight: {bounds.reg_tight})")
        else:
            print(f"bounds: hypotheses not met (missing: {', '.join(bounds.missing)})")
    return EXIT_HOLDS


def cmd_conjecture(args) -> int:
    fams = [f.strip() for f in args.families.split(",") if f.strip()]
    for f in fams:
        if f not in families.CONJECTURE_FAMILIES:
            raise UsageError(
                f"unknown family {f!r}; choose from {', '.join(families.CONJECTURE_FAMILIES)}"
            )
    if args.max_n > 9:
        raise UsageError("conjecture: max-n capped at 9")
    rows = []
    counterexamples = 0
    undecided = 0
    for idx in range(args.count):
        fam = fams[idx % len(fams)]
        g = families.conjecture_instance(fam, idx, args.max_n, args.seed)
        perfect, _ = combinat.is_perfect_small(g)
        c = combinat.clique_clutter(g)
        ideal_ok, _ = tdi.is_ideal_clutter(c)
        row = {
            "family": fam,
            "index": idx,
            "digest": digest(g),
            "n": g.n,
            "perfect": perfect,
            "ideal": ideal_ok,
        }
        if ideal_ok:
            cert = tdi.is_mfmc(c, args.budget)
            row["mfmc"] = cert.verdict
            if cert.verdict == "undecided":
                undecided += 1
            elif not cert.holds:
                counterexamples += 1
                row["counterexample"] = True
        else:
            row["mfmc"] = None
        rows.append(row)
    rows.sort(key=lambda r: r["digest"])
    batch = {
        "schema_version": SCHEMA_VERSION,
        "command": "conjecture",
        "families": fams,
        "max_n": args.max_n,
        "seed": args.seed,
        "count": args.count,
        "instances": rows,
        "counterexamples": counterexamples,
        "undecided": undecided,
    }
    emit(batch, args)
    if not args.json:
        print(f"{'digest':<24} {'family':<18} {'n':>2}  perfect ideal mfmc")
        for r in rows:
            print(f"{r['digest'][:24]:<24} {r['family']:<18} {r['n']:>2}"
                  f"  {str(r['perfect']):<7} {str(r['ideal']):<5} {r['mfmc']}")
        print(f"counterexamples: {counterexamples}, undecided: {undecided}")
    if counterexamples:
        return EXIT_FAILS
    if undecided:
        return EXIT_UNDECIDED
    return EXIT_HOLDS


EXAMPLES = {}


def _register_examples():
    EXAMPLES["triangle"] = lambda: [("triangle", families.triangle_clutter())]
    EXAMPLES["c4"] = lambda: [("c4", families.cycle_clutter(4))]
    EXAMPLES["c5"] = lambda: [("c5", families.cycle_clutter(5))]
    EXAMPLES["blocker-c4"] = lambda: [
        ("blocker-c4", combinat.blocker(families.cycle_clutter(4)))
    ]
    for d, g in [(2, 2), (2, 3), (3, 2), (2, 4), (4, 2)]:
        EXAMPLES[f"sharpness-{d}-{g}"] = (
            lambda d=d, g=g: [(f"sharpness-{d}-{g}", families.sharpness_clutter(d, g))]
        )

    def _line_k24():
        g, c = families.line_graph_k24()
        return [("line-k24-graph", g), ("line-k24-clutter", c)]

    EXAMPLES["line-k24"] = _line_k24


_register_examples()


def cmd_examples(args) -> int:
    if args.name not in EXAMPLES:
        raise UsageError(
            f"unknown example {args.name!r}; known: {', '.join(sorted(EXAMPLES))}"
        )
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    written = []
    for stem, obj in EXAMPLES[args.name]():
        ipath = outdir / f"{stem}.json"
        ipath.write_text(
            json.dumps(_jsonable(instance_payload(obj)), sort_keys=True, indent=2) + "\n",
            encoding="utf-8",
        )
        written.append(str(ipath))
        if isinstance(obj, SimpleGraph):
            verdict, wits, inv, notes = run_check("perfect", obj, 3, args.budget)
            cert = make_certificate("check perfect", obj, verdict, wits, inv, notes)
        else:
            ok, hbw = ehrhart.is_ehrhart_clutter(obj, args.budget)
            a = ehrhart.analyze(obj, args.budget)
            cert = make_certificate(
                "examples", obj, ok,
                {"missing_lattice_points": [list(w) for w in hbw]} if not ok else {},
                {"hvector": list(a.hvector), "a_invariant": a.a_invariant,
                 "regularity": a.regularity},
                {},
            )
        cpath = outdir / f"{stem}.cert.json"
        cpath.write_text(
            json.dumps(_jsonable(cert), sort_keys=True, indent=2) + "\n", encoding="utf-8"
        )
        written.append(str(cpath))
    for w in written:
        print(w)
    return EXIT_HOLDS


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="clutterlab",
        description="Exact certification of clutter, cone and covering-system properties.",
    )
    sub = ap.add_subparsers(dest="cmd", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="emit the JSON certificate on stdout")
        p.add_argument("--output", help="write the JSON certificate to a file")
        p.add_argument("--budget", type=int, default=None,
                       help="step budget override (default: CLUTTERLAB_BUDGET or 10^7)")
        p.add_argument("--timing", action="store_true",
                       help="include wall-clock timing in the certificate "
                            "(breaks byte-stability across runs)")

    p = sub.add_parser("check", help="decide one property of an instance")
    p.add_argument("property", choices=PROPERTIES)
    p.add_argument("--input", required=True, help="instance file (graph, clutter or system)")
    p.add_argument("--power-bound", type=int, default=3,
                   help="bound for the power-by-power checks (ntf, normal)")
    common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("invariants", help="series invariants and bound checks of a clutter")
    p.add_argument("--input", required=True)
    common(p)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("conjecture", help="ideal => flow-property batch over perfect graphs")
    p.add_argument("--families", default="chordal,bipartite",
                   help=f"comma-separated from: {', '.join(families.CONJECTURE_FAMILIES)}")
    p.add_argument("--max-n", type=int, default=7)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=25)
    common(p)
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("examples", help="write a named instance and its certificate")
    p.add_argument("--name", required=True)
    p.add_argument("--outdir", default=".")
    common(p)
    p.set_defaults(func=cmd_examples)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        if args.budget is None:
            args.budget = step_budget()
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Undecided as exc:
        print(f"undecided: {exc}", file=sys.stderr)
        return EXIT_UNDECIDED


if __name__ == "__main__":
    sys.exit(main())
