"""Command-line interface: per-graph reports and batch verification runs.

Reports are deterministic for a fixed configuration and seed: no
timestamps, fixed field order, rows sorted before emission.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import __version__
from .checks import (
    TreeFacts,
    check_core_minor_sums,
    check_diametrical,
    check_odd_core_eigenvalues,
    check_pair_block_inertia,
    check_star_spectrum,
    tree_checks,
)
from .exact import char_poly, distinct_count_exact, inertia_exact, rank_exact, spectrum_symmetric_exact
from .families import (
    diametrical_examples,
    enumerate_labeled_trees,
    parse_family,
    pruefer_random,
)
from .graphs import Graph, Tree, distance_matrix, read_edge_list, read_graph6, to_edge_list
from .matrices import eccentricity_matrix
from .spectra import (
    DEFAULT_EIGEN_TOL,
    default_group_tol,
    eigenvalues_sym,
    group_spectrum,
)

DEFAULT_SAMPLES = 500
EXHAUSTIVE_LIMIT = 8


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eccmat",
        description="Eccentricity-matrix spectra: per-graph reports and "
        "batch verification of the structural predicates.",
    )
    parser.add_argument("--version", action="version", version=f"eccmat {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_source(p):
        p.add_argument("--input", help="edge-list or graph6 file")
        p.add_argument(
            "--family",
            help="family token name:args, e.g. star:7, path:4, "
            "tndab:10,3,0,6, spider:3,2, cycle:6, hypercube:3, cocktail:3",
        )

    def add_range(p):
        p.add_argument("--n-from", type=int, help="first order of the range")
        p.add_argument("--n-to", type=int, help="last order of the range")
        p.add_argument(
            "--samples",
            type=int,
            help=f"random trees per order (default: exhaustive for n <= "
            f"{EXHAUSTIVE_LIMIT}, else {DEFAULT_SAMPLES})",
        )
        p.add_argument("--seed", type=int, default=0, help="base seed (default 0)")

    def add_output(p, tols: bool):
        if tols:
            p.add_argument(
                "--tol", type=float, default=DEFAULT_EIGEN_TOL,
                help="eigensolver convergence threshold",
            )
            p.add_argument(
                "--group-tol", type=float, default=None,
                help="eigenvalue grouping threshold (default scales with the matrix)",
            )
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--output", help="write the report here instead of stdout")

    p_spec = sub.add_parser("spectrum", help="full exact + float report for one graph")
    add_source(p_spec)
    add_output(p_spec, tols=True)
    p_spec.add_argument("--dump-matrix", action="store_true", help="also print the eccentricity matrix")

    p_in = sub.add_parser("inertia", help="exact inertia and rank for one graph")
    add_source(p_in)
    add_output(p_in, tols=False)
    p_in.add_argument("--dump-matrix", action="store_true", help="also print the eccentricity matrix")

    p_ver = sub.add_parser("verify", help="run every applicable predicate; exit 1 on any failure")
    add_source(p_ver)
    add_range(p_ver)
    add_output(p_ver, tols=True)
    p_ver.add_argument(
        "--corrupt", action="store_true",
        help="negative-control hook: perturb one matrix entry before checking",
    )

    p_sw = sub.add_parser("sweep", help="tabulate inertia patterns and distinct counts over a range")
    add_range(p_sw)
    add_output(p_sw, tols=False)
    return parser


def _load_graph(args) -> tuple[Graph, str]:
    """Resolve --family/--input into a graph and an instance label."""
    if bool(args.family) == bool(args.input):
        raise ValueError("exactly one of --family or --input is required")
    if args.family:
        return parse_family(args.family), args.family
    with open(args.input, "r", encoding="utf-8") as fh:
        text = fh.read()
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if not lines:
        raise ValueError(f"{args.input}: empty input")
    head = lines[0].split()
    if len(head) == 2 and all(p.lstrip("-").isdigit() for p in head):
        g = read_edge_list(text)
    else:
        g = read_graph6(lines[0])
    return g, f"input:{args.input}"


def _as_tree(g: Graph) -> Tree | None:
    if isinstance(g, Tree):
        return g
    if g.edge_count == g.n - 1:
        return Tree(g.n, g.edges())
    return None


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _kv_csv(pairs) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["field", "value"])
    for key, value in pairs:
        writer.writerow([key, value if isinstance(value, str) else json.dumps(value)])
    return buf.getvalue()


def _config(args, keys) -> dict:
    return {key: getattr(args, key.replace("-", "_")) for key in keys}


def cmd_spectrum(args) -> int:
    g, label = _load_graph(args)
    if args.tol <= 0 or (args.group_tol is not None and args.group_tol <= 0):
        raise ValueError("tolerances must be positive")
    dist = distance_matrix(g)
    ecc = tuple(max(row) for row in dist.rows)
    matrix = eccentricity_matrix(dist, ecc)
    poly = char_poly(matrix)
    inertia = inertia_exact(poly)
    values = eigenvalues_sym(matrix, args.tol)
    gtol = args.group_tol if args.group_tol is not None else default_group_tol(matrix)
    spectrum = group_spectrum(values, gtol)
    report = {
        "version": __version__,
        "config": _config(args, ("command", "family", "input", "tol", "group-tol", "format")),
        "instance": label,
        "n": g.n,
        "diameter": max(ecc),
        "char_poly": poly.to_json(),
        "inertia": list(inertia),
        "rank": g.n - inertia.n_zero,
        "spectrum": {
            "values": list(spectrum.values),
            "multiplicities": list(spectrum.multiplicities),
        },
        "spectral_radius": values[0],
        "least_eigenvalue": values[-1],
        "distinct_count": distinct_count_exact(poly),
        "symmetric": spectrum_symmetric_exact(poly),
    }
    if args.dump_matrix:
        report["matrix"] = [list(row) for row in matrix.rows]
    if args.format == "json":
        text = json.dumps(report, indent=2) + "\n"
    else:
        text = _kv_csv(report.items())
    _emit(text, args.output)
    return 0


def cmd_inertia(args) -> int:
    g, label = _load_graph(args)
    dist = distance_matrix(g)
    ecc = tuple(max(row) for row in dist.rows)
    matrix = eccentricity_matrix(dist, ecc)
    inertia = inertia_exact(char_poly(matrix))
    report = {
        "version": __version__,
        "config": _config(args, ("command", "family", "input", "format")),
        "instance": label,
        "n": g.n,
        "diameter": max(ecc),
        "inertia": list(inertia),
        "rank": rank_exact(matrix),
    }
    if args.dump_matrix:
        report["matrix"] = [list(row) for row in matrix.rows]
    if args.format == "json":
        text = json.dumps(report, indent=2) + "\n"
    else:
        text = _kv_csv(report.items())
    _emit(text, args.output)
    return 0


def _range_instances(args):
    """Yield (label, tree) pairs for the configured order range."""
    for n in range(args.n_from, args.n_to + 1):
        samples = args.samples
        if samples is None and n <= EXHAUSTIVE_LIMIT:
            for i, t in enumerate(enumerate_labeled_trees(n)):
                yield f"pruefer:n={n},i={i}", t
            continue
        if samples is None:
            samples = DEFAULT_SAMPLES
        for i in range(samples):
            t = pruefer_random(n, f"{args.seed}:{n}:{i}")
            yield f"random:n={n},i={i},seed={args.seed}", t


def _validate_range(args) -> None:
    if (args.n_from is None) != (args.n_to is None):
        raise ValueError("--n-from and --n-to must be given together")
    if args.n_from is not None and args.n_from < 2:
        raise ValueError("--n-from must be at least 2")
    if args.samples is not None and args.samples < 1:
        raise ValueError("--samples must be at least 1")


def _fixed_battery():
    """Instance-independent checks run once per batch verification."""
    verdicts = []
    for d in range(1, 7):
        verdicts.append(check_odd_core_eigenvalues(d))
    for d in range(1, 4):
        for n in range(2, 5):
            verdicts.append(check_pair_block_inertia(d, n))
    for d in range(2, 4):
        for l in range(2, 4):
            verdicts.append(check_core_minor_sums(d, l))
    for g, name in zip(diametrical_examples(), ("cycle:4", "cycle:6", "hypercube:3", "cocktail:3")):
        verdicts.append(check_diametrical(g, name))
    return verdicts


class _VerdictSink:
    """Streams verdict lines, stopping the batch at the first failure."""

    def __init__(self, fmt: str, header: dict):
        self.fmt = fmt
        self.failed = None
        self.failed_serialization = None
        if fmt == "json":
            self.lines = [json.dumps(header)]
        else:
            self.lines = ["# " + json.dumps(header)]
            buf = io.StringIO()
            csv.writer(buf, lineterminator="\n").writerow(
                ["theorem_id", "instance", "expected", "computed", "pass", "detail"]
            )
            self.lines.append(buf.getvalue().rstrip("\n"))

    def add(self, verdict, serialization: str | None = None) -> bool:
        if self.fmt == "json":
            self.lines.append(verdict.to_json())
        else:
            buf = io.StringIO()
            csv.writer(buf, lineterminator="\n").writerow(
                [
                    verdict.theorem_id,
                    verdict.instance,
                    json.dumps(verdict.expected),
                    json.dumps(verdict.computed),
                    verdict.passed,
                    verdict.detail,
                ]
            )
            self.lines.append(buf.getvalue().rstrip("\n"))
        if not verdict.passed and self.failed is None:
            self.failed = verdict
            self.failed_serialization = serialization or verdict.instance
        return verdict.passed

    def text(self) -> str:
        return "".join(line + "\n" for line in self.lines)


def cmd_verify(args) -> int:
    if args.tol <= 0 or (args.group_tol is not None and args.group_tol <= 0):
        raise ValueError("tolerances must be positive")
    _validate_range(args)
    single = args.family or args.input
    ranged = args.n_from is not None
    if bool(single) == ranged:
        raise ValueError("verify needs either --family/--input or --n-from/--n-to")

    header = {
        "version": __version__,
        "config": _config(
            args,
            ("command", "family", "input", "n-from", "n-to", "samples", "seed",
             "tol", "group-tol", "format", "corrupt"),
        ),
    }
    sink = _VerdictSink(args.format, header)

    if single:
        g, label = _load_graph(args)
        t = _as_tree(g)
        if t is not None:
            facts = TreeFacts(t, label, corrupt=args.corrupt)
            for verdict in tree_checks(facts):
                if not sink.add(verdict, to_edge_list(t)):
                    break
        else:
            sink.add(check_diametrical(g, label), to_edge_list(g))
    else:
        for verdict in _fixed_battery():
            if not sink.add(verdict):
                break
        if sink.failed is None:
            for n in range(args.n_from, args.n_to + 1):
                if n >= 3 and not sink.add(check_star_spectrum(n)):
                    break
        if sink.failed is None:
            for label, t in _range_instances(args):
                facts = TreeFacts(t, label, corrupt=args.corrupt)
                for verdict in tree_checks(facts):
                    if not sink.add(verdict, to_edge_list(t)):
                        break
                if sink.failed is not None:
                    break

    _emit(sink.text(), args.output)
    if sink.failed is not None:
        sys.stderr.write(f"FAILED {sink.failed.theorem_id} on {sink.failed.instance}\n")
        sys.stderr.write("instance serialization:\n" + sink.failed_serialization + "\n")
        return 1
    return 0


def cmd_sweep(args) -> int:
    _validate_range(args)
    if args.n_from is None:
        raise ValueError("sweep requires --n-from and --n-to")
    counts: dict = {}
    for _, t in _range_instances(args):
        facts = TreeFacts(t)
        inertia = facts.inertia
        parity = "odd" if facts.meta.diameter % 2 else "even"
        key = (t.n, parity, tuple(inertia), distinct_count_exact(facts.poly))
        counts[key] = counts.get(key, 0) + 1
    rows = [
        {
            "n": n,
            "diameter_parity": parity,
            "inertia": list(inertia),
            "distinct_count": distinct,
            "count": counts[(n, parity, inertia, distinct)],
        }
        for (n, parity, inertia, distinct) in sorted(counts)
    ]
    if args.format == "json":
        report = {
            "version": __version__,
            "config": _config(args, ("command", "n-from", "n-to", "samples", "seed", "format")),
            "rows": rows,
        }
        text = json.dumps(report, indent=2) + "\n"
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "diameter_parity", "n_plus", "n_minus", "n_zero", "distinct_count", "count"])
        for row in rows:
            writer.writerow(
                [row["n"], row["diameter_parity"], *row["inertia"], row["distinct_count"], row["count"]]
            )
        text = buf.getvalue()
    _emit(text, args.output)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        if args.command == "spectrum":
            return cmd_spectrum(args)
        if args.command == "inertia":
            return cmd_inertia(args)
        if args.command == "verify":
            return cmd_verify(args)
        return cmd_sweep(args)
    except BrokenPipeError:
        # Downstream consumer closed the stream; success can't be certified.
        try:
            sys.stdout.close()
        except OSError:
            pass
        return 1
    except (ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
