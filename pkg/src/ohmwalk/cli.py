"""Command-line front end: graph I/O, invariants, classification, composites, verification.

Exit codes: 0 success (all records match), 1 at least one mismatch record,
2 usage or input error, 3 internal numerical failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass

import numpy as np

from .errors import AutomorphismCapExceeded, GraphError, NumericalError
from .graphs import (
    CompositeSpec,
    Graph,
    conjoin,
    diameter,
    family_label,
    generate,
    parse_graph,
    write_graph,
)
from .resistance import effective_resistance
from .symmetry import classify
from .verify import (
    MISMATCH,
    composite_label,
    verify_base_identities,
    verify_composite,
    verify_orbit_asymmetry,
    verify_windmill,
)
from .walks import hitting_times_solve, kemeny, stationary

DEFAULT_FLOOR = 1e-12


@dataclass(frozen=True)
class RunConfig:
    tolerance: float = 1e-9
    max_n: int = 2000
    automorphism_cap: int = 10**6
    output_format: str = "text"
    output_path: str | None = None

    def __post_init__(self):
        if not self.tolerance > 0:
            raise GraphError(f"tolerance must be positive, got {self.tolerance}")
        if self.max_n < 2:
            raise GraphError(f"max-n must be >= 2, got {self.max_n}")
        if self.automorphism_cap < 1:
            raise GraphError(f"automorphism-cap must be positive, got {self.automorphism_cap}")


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def dumps_json(obj) -> str:
    """Deterministic JSON with floats at 17 significant digits (NaN maps to null)."""
    out: list[str] = []
    _write_json(obj, out, 0)
    return "".join(out) + "\n"


def _write_json(obj, out: list[str], indent: int) -> None:
    pad = "  " * indent
    if isinstance(obj, dict):
        if not obj:
            out.append("{}")
            return
        out.append("{\n")
        for i, (key, val) in enumerate(obj.items()):
            out.append(f"{pad}  {json.dumps(str(key))}: ")
            _write_json(val, out, indent + 1)
            out.append(",\n" if i < len(obj) - 1 else "\n")
        out.append(pad + "}")
    elif isinstance(obj, (list, tuple)):
        if not obj:
            out.append("[]")
            return
        out.append("[\n")
        for i, val in enumerate(obj):
            out.append(pad + "  ")
            _write_json(val, out, indent + 1)
            out.append(",\n" if i < len(obj) - 1 else "\n")
        out.append(pad + "]")
    elif isinstance(obj, bool):
        out.append("true" if obj else "false")
    elif isinstance(obj, (int, np.integer)):
        out.append(str(int(obj)))
    elif isinstance(obj, (float, np.floating)):
        x = float(obj)
        out.append("null" if math.isnan(x) or math.isinf(x) else format(x, ".17g"))
    elif isinstance(obj, str):
        out.append(json.dumps(obj))
    elif obj is None:
        out.append("null")
    else:
        raise TypeError(f"cannot serialize {type(obj)!r}")


def _fmt(x) -> str:
    """Text rendering: 9 significant digits; n/a for missing values."""
    if x is None:
        return "n/a"
    if isinstance(x, float) and (math.isnan(x) or math.isinf(x)):
        return "n/a"
    if isinstance(x, float):
        return format(x, ".9g")
    return str(x)


def build_report(config: RunConfig, label: str, g: Graph, records) -> dict:
    """Assemble the JSON-shaped verification report (records sorted for determinism)."""
    ordered = sorted(records, key=lambda r: (r.graph_label, r.identity_id))
    return {
        "config": {
            "tolerance": config.tolerance,
            "max_n": config.max_n,
            "automorphism_cap": config.automorphism_cap,
            "output_format": config.output_format,
            "output_path": config.output_path,
        },
        "graph": {"label": label, "n": g.n, "m": g.m},
        "records": [
            {
                "identity_id": r.identity_id,
                "graph_label": r.graph_label,
                "predicted": r.predicted,
                "measured": r.measured,
                "abs_error": r.abs_error,
                "rel_error": r.rel_error,
                "status": r.status,
            }
            for r in ordered
        ],
    }


def format_report_text(report: dict) -> str:
    """Render a parsed or freshly built report as the text table.

    Parsing the JSON form and passing it here regenerates the text output
    byte for byte.
    """
    g = report["graph"]
    lines = [
        f"graph: {g['label']} (n={g['n']}, m={g['m']})",
        f"tolerance: {_fmt(report['config']['tolerance'])}",
        "",
        f"{'identity':<20} {'predicted':>16} {'measured':>16} {'abs_error':>12} {'rel_error':>12}  status",
    ]
    counts = {"match": 0, "mismatch": 0, "not-applicable": 0}
    for r in report["records"]:
        counts[r["status"]] += 1
        lines.append(
            f"{r['identity_id']:<20} {_fmt(r['predicted']):>16} {_fmt(r['measured']):>16} "
            f"{_fmt(r['abs_error']):>12} {_fmt(r['rel_error']):>12}  {r['status']}"
        )
    lines.append("")
    lines.append(
        f"{counts['match']} match, {counts['mismatch']} mismatch, "
        f"{counts['not-applicable']} not-applicable"
    )
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=1e-9, help="relative tolerance for identity checks")
    common.add_argument(
        "--format", choices=("text", "json"), default="text", dest="output_format"
    )
    common.add_argument("--max-n", type=int, default=2000, dest="max_n")
    common.add_argument(
        "--automorphism-cap", type=int, default=10**6, dest="automorphism_cap"
    )
    common.add_argument("-o", "--output", default=None, help="write output to a file instead of stdout")

    parser = argparse.ArgumentParser(
        prog="ohmwalk",
        description="Random-walk and electric-network invariants of simple connected graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", parents=[common], help="emit an edge-list document for a named family")
    p.add_argument("family")
    p.add_argument("params", nargs="*", type=int)

    p = sub.add_parser("info", parents=[common], help="vertex/edge counts, degree census, diameter")
    p.add_argument("file")

    p = sub.add_parser("indices", parents=[common], help="Kemeny constant and Kirchhoffian indices")
    p.add_argument("file")
    p.add_argument("--full", action="store_true", help="include resistance and hitting matrices")

    p = sub.add_parser("classify", parents=[common], help="symmetry classification report")
    p.add_argument("file")

    p = sub.add_parser("conjoin", parents=[common], help="glue copies of a graph at one vertex")
    p.add_argument("file")
    p.add_argument("--copies", type=int, required=True)
    p.add_argument("--at", type=int, default=0)

    v = sub.add_parser("verify", help="check closed-form identities against measurements")
    vs = v.add_subparsers(dest="verify_command", required=True)

    p = vs.add_parser("identities", parents=[common], help="per-graph identities")
    p.add_argument("file")

    p = vs.add_parser("composite", parents=[common], help="composite-graph relations")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--base", help="edge-list file with the base graph")
    src.add_argument(
        "--family",
        nargs="+",
        metavar=("NAME", "PARAM"),
        help="generate the base graph: NAME followed by integer parameters",
    )
    p.add_argument("--copies", type=int, required=True)
    p.add_argument("--at", type=int, default=0)
    p.add_argument(
        "--force",
        action="store_true",
        help="compute records even for a base that is not regular hitting-symmetric",
    )

    p = vs.add_parser("orbits", parents=[common], help="orbit-pair asymmetry spreads")
    p.add_argument("file")

    p = vs.add_parser("windmill", parents=[common], help="windmill Kemeny closed form")
    p.add_argument("--eta", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    return parser


def _config_from(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        tolerance=args.tol,
        max_n=args.max_n,
        automorphism_cap=args.automorphism_cap,
        output_format=args.output_format,
        output_path=args.output,
    )


def _emit(config: RunConfig, text: str) -> None:
    if config.output_path is None:
        sys.stdout.write(text)
    else:
        with open(config.output_path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _load_graph(path: str, config: RunConfig) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        g = parse_graph(fh.read())
    _check_size(g, config)
    return g


def _check_size(g: Graph, config: RunConfig) -> None:
    if g.n > config.max_n:
        raise GraphError(f"graph has {g.n} vertices, exceeding --max-n {config.max_n}")


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _cmd_generate(args, config: RunConfig) -> int:
    g = generate(args.family, args.params)
    _check_size(g, config)
    _emit(config, write_graph(g, comment=family_label(args.family, args.params)))
    return 0


def _cmd_info(args, config: RunConfig) -> int:
    g = _load_graph(args.file, config)
    census: dict[int, int] = {}
    for d in g.degrees:
        census[d] = census.get(d, 0) + 1
    doc = {
        "graph": {"label": args.file, "n": g.n, "m": g.m},
        "degree_census": {str(d): census[d] for d in sorted(census)},
        "diameter": diameter(g),
    }
    if config.output_format == "json":
        _emit(config, dumps_json(doc))
    else:
        census_text = " ".join(f"{d}:{census[d]}" for d in sorted(census))
        _emit(
            config,
            f"graph: {args.file}\nn: {g.n}\nedges: {g.m}\n"
            f"degrees: {census_text}\ndiameter: {doc['diameter']}\n",
        )
    return 0


def _matrix_rows(mat: np.ndarray) -> list[list[float]]:
    return [[float(x) for x in row] for row in mat]


def _cmd_indices(args, config: RunConfig) -> int:
    g = _load_graph(args.file, config)
    rd = effective_resistance(g)
    h = hitting_times_solve(g)
    k = kemeny(g, rel_tol=config.tolerance, h=h)
    doc = {
        "graph": {"label": args.file, "n": g.n, "m": g.m},
        "kemeny": k,
        "kirchhoff": rd.kirchhoff,
        "degree_kirchhoff": rd.degree_kirchhoff,
        "stationary": [float(x) for x in stationary(g)],
    }
    if args.full:
        doc["resistance"] = _matrix_rows(rd.r)
        doc["hitting"] = _matrix_rows(h)
    if config.output_format == "json":
        _emit(config, dumps_json(doc))
        return 0
    lines = [
        f"graph: {args.file} (n={g.n}, m={g.m})",
        f"kemeny: {_fmt(k)}",
        f"kirchhoff: {_fmt(rd.kirchhoff)}",
        f"degree_kirchhoff: {_fmt(rd.degree_kirchhoff)}",
        "stationary: " + " ".join(_fmt(x) for x in doc["stationary"]),
    ]
    if args.full:
        lines.append("resistance:")
        lines.extend("  " + " ".join(_fmt(x) for x in row) for row in doc["resistance"])
        lines.append("hitting:")
        lines.extend("  " + " ".join(_fmt(x) for x in row) for row in doc["hitting"])
    _emit(config, "\n".join(lines) + "\n")
    return 0


def _flag_text(value: bool | None) -> str:
    if value is None:
        return "not computed"
    return "true" if value else "false"


def _cmd_classify(args, config: RunConfig) -> int:
    g = _load_graph(args.file, config)
    report = classify(g, cap=config.automorphism_cap, tol=config.tolerance)
    array = report.intersection_array
    doc = {
        "graph": {"label": args.file, "n": g.n, "m": g.m},
        "regular": report.regular,
        "walk_regular": report.walk_regular,
        "distance_regular": report.distance_regular,
        "vertex_transitive": report.vertex_transitive,
        "edge_transitive": report.edge_transitive,
        "hs": report.hs,
        "automorphism_count": report.automorphism_count,
        "max_hitting_asymmetry": report.max_hitting_asymmetry,
        "vertex_orbits": None
        if report.vertex_orbits is None
        else [list(c) for c in report.vertex_orbits.classes],
        "edge_orbit_sizes": None
        if report.edge_orbits is None
        else [len(c) for c in report.edge_orbits.classes],
        "intersection_array": None
        if array is None
        else {"diameter": array.diameter, "b": list(array.b), "c": list(array.c)},
    }
    if config.output_format == "json":
        _emit(config, dumps_json(doc))
        return 0
    lines = [f"graph: {args.file} (n={g.n}, m={g.m})"]
    for key in ("regular", "walk_regular", "distance_regular", "vertex_transitive", "edge_transitive", "hs"):
        lines.append(f"{key}: {_flag_text(doc[key])}")
    lines.append(f"automorphism_count: {doc['automorphism_count'] if doc['automorphism_count'] is not None else 'not computed'}")
    lines.append(f"max_hitting_asymmetry: {_fmt(report.max_hitting_asymmetry)}")
    if doc["vertex_orbits"] is None:
        lines.append("vertex_orbits: not computed")
    else:
        for i, cls in enumerate(doc["vertex_orbits"]):
            lines.append(f"vertex orbit {i}: " + " ".join(str(v) for v in cls))
    if doc["edge_orbit_sizes"] is None:
        lines.append("edge_orbits: not computed")
    else:
        lines.append("edge_orbit_sizes: " + " ".join(str(s) for s in doc["edge_orbit_sizes"]))
    if array is not None:
        lines.append(
            "intersection_array: b=(" + ",".join(str(x) for x in array.b) + ") "
            "c=(" + ",".join(str(x) for x in array.c) + ")"
        )
    else:
        lines.append("intersection_array: none")
    _emit(config, "\n".join(lines) + "\n")
    return 0


def _cmd_conjoin(args, config: RunConfig) -> int:
    g = _load_graph(args.file, config)
    composite = conjoin(CompositeSpec(base=g, alpha=args.copies, glue=args.at))
    _check_size(composite, config)
    _emit(config, write_graph(composite, comment=composite_label(args.file, args.copies, args.at)))
    return 0


def _finish_verify(config: RunConfig, label: str, g: Graph, records) -> int:
    report = build_report(config, label, g, records)
    if config.output_format == "json":
        _emit(config, dumps_json(report))
    else:
        _emit(config, format_report_text(report))
    return 1 if any(r["status"] == MISMATCH for r in report["records"]) else 0


def _cmd_verify_identities(args, config: RunConfig) -> int:
    g = _load_graph(args.file, config)
    records = verify_base_identities(g, label=args.file, tol=config.tolerance, floor=DEFAULT_FLOOR)
    return _finish_verify(config, args.file, g, records)


def _cmd_verify_composite(args, config: RunConfig) -> int:
    if args.base is not None:
        base = _load_graph(args.base, config)
        base_label = args.base
    else:
        name, *raw = args.family
        try:
            params = [int(x) for x in raw]
        except ValueError:
            raise GraphError(f"family parameters must be integers, got {raw}") from None
        base = generate(name, params)
        base_label = family_label(name, params)
    composite = conjoin(CompositeSpec(base=base, alpha=args.copies, glue=args.at))
    _check_size(composite, config)
    records = verify_composite(
        base,
        args.copies,
        glue=args.at,
        base_label=base_label,
        tol=config.tolerance,
        floor=DEFAULT_FLOOR,
        force=args.force,
    )
    label = composite_label(base_label, args.copies, args.at)
    return _finish_verify(config, label, composite, records)


def _cmd_verify_orbits(args, config: RunConfig) -> int:
    g = _load_graph(args.file, config)
    records = verify_orbit_asymmetry(
        g, label=args.file, tol=config.tolerance, floor=DEFAULT_FLOOR, cap=config.automorphism_cap
    )
    return _finish_verify(config, args.file, g, records)


def _cmd_verify_windmill(args, config: RunConfig) -> int:
    record = verify_windmill(args.eta, args.k, tol=config.tolerance, floor=DEFAULT_FLOOR)
    g = generate("windmill", (args.eta, args.k))
    return _finish_verify(config, record.graph_label, g, [record])


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        config = _config_from(args)
        if args.command == "generate":
            return _cmd_generate(args, config)
        if args.command == "info":
            return _cmd_info(args, config)
        if args.command == "indices":
            return _cmd_indices(args, config)
        if args.command == "classify":
            return _cmd_classify(args, config)
        if args.command == "conjoin":
            return _cmd_conjoin(args, config)
        if args.command == "verify":
            handler = {
                "identities": _cmd_verify_identities,
                "composite": _cmd_verify_composite,
                "orbits": _cmd_verify_orbits,
                "windmill": _cmd_verify_windmill,
            }[args.verify_command]
            return handler(args, config)
        raise GraphError(f"unknown command {args.command!r}")
    except (GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AutomorphismCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NumericalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def run() -> None:
    sys.exit(main())
