"""Command-line front end.

Exit codes: 0 on success, 1 on usage or input errors, 2 when a verification
fails (the report is still written).
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .bridges import narayana
from .clusters import cluster_complex
from .coxeter import CoxeterGroup, build_group
from .errors import CamfanError
from .export import dump_fan, fan_svg
from .fans import cambrian_fan, cluster_fan
from .report import dumps
from .sortable import all_coxeter_elements, cambrian, parse_coxeter_word, sorting_word
from .suites import SUITES, run_suite
from .types import coxeter_matrix

__all__ = ["main", "run", "load_group"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def load_group(source: str, cap: int | None = None) -> tuple[CoxeterGroup, str]:
    """A group from a JSON file ``{labels, coxeter_matrix[, root_lengths]}`` or a type name."""
    path = Path(source)
    if path.suffix == ".json" or path.exists():
        try:
            data = json.loads(path.read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read group file {source}: {exc}") from None
        if "coxeter_matrix" not in data:
            raise UsageError("group file needs a 'coxeter_matrix' entry")
        lengths = data.get("root_lengths")
        if lengths is not None:
            lengths = [Fraction(str(x)) for x in lengths]
        G = build_group(data["coxeter_matrix"], labels=data.get("labels"), root_lengths=lengths, cap=cap)
        return G, data.get("name", path.stem)
    try:
        m = coxeter_matrix(source)
    except (KeyError, ValueError) as exc:
        raise UsageError(f"unknown group {source!r}: {exc}") from None
    return build_group(m, cap=cap), source


def _coxeter_words(G: CoxeterGroup, text: str | None, allow_all: bool = False) -> list[tuple[int, ...]]:
    if text is None:
        return [tuple(range(G.n))]
    if text == "all":
        if not allow_all:
            raise UsageError("--coxeter all is only accepted by verify and narayana")
        return all_coxeter_elements(G)
    try:
        return [parse_coxeter_word(G, text)]
    except (KeyError, ValueError) as exc:
        raise UsageError(f"bad Coxeter word {text!r}: {exc}") from None


def _write(path: str | None, text: str) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _word(G: CoxeterGroup, c) -> str:
    return ",".join(G.labels[s] for s in c)


# -------------------------------------------------------------- commands
def cmd_info(G: CoxeterGroup, name: str, args) -> int:
    degrees = Counter(len(G.lower_covers(w)) + len(G.upper_covers(w)) for w in G.elements())
    lines = [
        f"group: {name}",
        f"rank: {G.n}",
        f"|W|={G.order}",
        f"|T|={G.N}",
        f"field: {G.field}",
        f"crystallographic: {str(G.crystallographic).lower()}",
        f"coxeter elements: {len(all_coxeter_elements(G))}",
        "hasse degrees: " + ", ".join(f"{d}:{k}" for d, k in sorted(degrees.items())),
    ]
    _write(None, "\n".join(lines) + "\n")
    return 0


def cmd_sortables(G: CoxeterGroup, name: str, args) -> int:
    (c,) = _coxeter_words(G, args.coxeter)
    data = cambrian(G, c)
    out = []
    for x in sorted(data.sortables, key=lambda x: (G.length[x], G.word[x])):
        out.append(sorting_word(G, x, c).format(G) or "1")
    _write(args.out, "\n".join(out) + "\n")
    return 0


def cmd_clusters(G: CoxeterGroup, name: str, args) -> int:
    (c,) = _coxeter_words(G, args.coxeter)
    cx = cluster_complex(G, c)
    fmt = lambda C: "{" + ", ".join(G.root_label(a) for a in C) + "}"  # noqa: E731
    lines = [f"{i}: {fmt(C)}" for i, C in enumerate(cx.clusters)]
    if args.lattice:
        lines.append("covers:")
        lines += [f"{i} < {j}" for i, j in cx.lattice_covers()]
    if args.h_vector:
        lines.append("h-vector: " + ",".join(map(str, cx.h_vector())))
    _write(args.out, "\n".join(lines) + "\n")
    return 0


def cmd_fan(G: CoxeterGroup, name: str, args) -> int:
    (c,) = _coxeter_words(G, args.coxeter)
    fan = cambrian_fan(G, c) if args.kind == "cambrian" else cluster_fan(G, c)
    if args.svg:
        if G.n != 3:
            raise UsageError("--svg needs a rank-3 group")
        Path(args.svg).write_text(fan_svg(fan, G))
    if args.out or not args.svg:
        _write(args.out, dump_fan(fan, G, args.kind))
    return 0


def _worker(task):
    matrix, labels, lengths, cap, c, suite, name = task
    G = build_group(matrix, labels=labels, root_lengths=lengths, cap=cap)
    return run_suite(suite, G, c, name).to_dict()


def cmd_verify(G: CoxeterGroup, name: str, args) -> int:
    words = _coxeter_words(G, args.coxeter, allow_all=True)
    suites = list(SUITES) if args.suite == "all" else [args.suite]
    tasks = [(c, s) for c in words for s in suites]
    if args.jobs > 1 and len(tasks) > 1:
        payload = [
            ([list(r) for r in G.m], list(G.labels), list(G.root_lengths), args.cap, c, s, name)
            for c, s in tasks
        ]
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_worker, payload))
    else:
        reports = [run_suite(s, G, c, name).to_dict() for c, s in tasks]
    passed = all(r["passed"] for r in reports)
    first = next((r["first_counterexample"] for r in reports if not r["passed"]), None)
    doc = {
        "group": name,
        "coxeter": [_word(G, c) for c in words],
        "passed": passed,
        "first_counterexample": first,
        "runtime_s": round(sum(r["runtime_s"] for r in reports), 4),
        "reports": reports,
    }
    _write(args.out, dumps(doc) + "\n")
    if args.out:
        status = "PASS" if passed else f"FAIL ({first})"
        print(f"{name}: {len(reports)} reports, {status}")
    return 0 if passed else 2


def cmd_narayana(G: CoxeterGroup, name: str, args) -> int:
    ok = True
    lines = []
    for c in _coxeter_words(G, args.coxeter, allow_all=True):
        out = narayana(G, c)
        same = out["descents"] == out["upper_roots"] == out["h_vector"]
        ok &= same
        lines.append(
            f"{_word(G, c)}: descents={','.join(map(str, out['descents']))} "
            f"upper_roots={','.join(map(str, out['upper_roots']))} "
            f"h_vector={','.join(map(str, out['h_vector']))} {'ok' if same else 'MISMATCH'}"
        )
    _write(args.out, "\n".join(lines) + "\n")
    return 0 if ok else 2


COMMANDS = {
    "info": cmd_info,
    "sortables": cmd_sortables,
    "clusters": cmd_clusters,
    "fan": cmd_fan,
    "verify": cmd_verify,
    "narayana": cmd_narayana,
}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="camfan", description="Cambrian fans, clusters and sortable elements of finite Coxeter groups.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, coxeter=True):
        sp.add_argument("--group", required=True, help="JSON file {labels, coxeter_matrix} or a type name such as B3")
        if coxeter:
            sp.add_argument("--coxeter", help="Coxeter word, e.g. s0,s1,s2 (default: generator order)")
        sp.add_argument("--cap", type=int, help="element cap (overrides CAMFAN_ELEMENT_CAP)")
        sp.add_argument("--out", help="output file (default: stdout)")
        return sp

    common(sub.add_parser("info", help="group sizes and Hasse degrees"), coxeter=False)
    common(sub.add_parser("sortables", help="c-sortable elements as sorting words"))
    sp = common(sub.add_parser("clusters", help="c-clusters as root labels"))
    sp.add_argument("--lattice", action="store_true", help="also print cover relations")
    sp.add_argument("--h-vector", action="store_true", help="also print the h-vector")
    sp = common(sub.add_parser("fan", help="export the Cambrian or cluster fan"))
    sp.add_argument("--kind", choices=["cambrian", "cluster"], default="cambrian")
    sp.add_argument("--svg", help="write a stereographic SVG (rank 3)")
    sp = common(sub.add_parser("verify", help="run verification suites, JSON report"))
    sp.add_argument("--suite", choices=["all", *SUITES], default="all")
    sp.add_argument("--jobs", type=int, default=1, help="worker processes")
    common(sub.add_parser("narayana", help="descent, upper-root and h-vector counts"))
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(list(sys.argv[1:] if argv is None else argv))
        if args.cap is not None and args.cap <= 0:
            raise UsageError("--cap must be positive")
        if getattr(args, "jobs", 1) < 1:
            raise UsageError("--jobs must be at least 1")
        G, name = load_group(args.group, args.cap)
        return COMMANDS[args.command](G, name, args)
    except UsageError as exc:
        print(f"camfan: error: {exc}", file=sys.stderr)
        return 1
    except CamfanError as exc:
        print(f"camfan: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


run = main

if __name__ == "__main__":
    sys.exit(main())
