"""Command-line front end emitting deterministic JSON reports.

Subcommands: orbits | trivial-walk | wps-check | blowup-demo | generators |
property-r.  Exit codes: 0 success, 1 domain error, 2 cap exceeded.
All searches break ties lexicographically, so payloads are byte-stable
across runs for a fixed input and version.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from pathlib import Path

from . import __version__
from .errors import (
    BadParameters,
    CapExceeded,
    ConsistentWalksError,
    InvalidPermutation,
    ParseError,
)
from .generation import verify_generation
from .graphs import Graph, automorphism_group, local_group, named_graph, verify_automorphisms
from .localactions import (
    find_trivial_walk_4valent,
    find_trivial_walk_exhaustive,
    find_trivial_walk_wps,
    weakly_p_subregular,
)
from .perms import DEFAULT_GROUP_CAP, Perm, PermutationGroup
from .products import blowup_cycle_family, family_orbit_ids, verify_no_trivial_stabilizer
from .reachability import reachability_by_chase, reachability_by_shunt_group
from .walks import consistent_cycle_orbits, enumerate_consistent_cycles, partition_cycles

DEFAULT_WALK_DEPTH = 64

NAMED_PREFIXES = ("cycle", "complete", "hypercube", "petersen", "circulant",
                  "complete_bipartite")


def _load_graph(source: str) -> tuple[Graph, list[list[int]] | None]:
    """Resolve --graph into a Graph plus any generators embedded in a file."""
    head = source.split(":", 1)[0].lower()
    if head in NAMED_PREFIXES:
        return named_graph(source), None
    path = Path(source)
    if not path.exists():
        raise ParseError(f"graph source {source!r} is neither a named spec nor a file")
    text = path.read_text()
    if path.suffix == ".json" or text.lstrip().startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{source}: invalid JSON at line {exc.lineno} "
                             f"column {exc.colno}") from exc
        if not isinstance(data, dict) or "vertices" not in data or "edges" not in data:
            raise ParseError(f"{source}: graph JSON needs 'vertices' and 'edges'")
        return Graph.from_json(data), data.get("generators")
    try:
        return Graph.from_edge_list_text(text), None
    except BadParameters as exc:
        raise ParseError(f"{source}: {exc}") from exc


def _load_generators(path: str) -> tuple[int | None, list[list[int]]]:
    try:
        data = json.loads(Path(path).read_text())
    except FileNotFoundError:
        raise ParseError(f"group file {path!r} not found") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON at line {exc.lineno} "
                         f"column {exc.colno}") from exc
    if isinstance(data, dict):
        return data.get("degree"), data["generators"]
    if isinstance(data, list):
        return None, data
    raise ParseError(f"{path}: expected a generator list or a degree/generators object")


def parse_inputs(args: argparse.Namespace) -> tuple[Graph, PermutationGroup, str]:
    """Build the validated graph and the acting group.

    Supplied generators are verified to be automorphisms; otherwise the
    full automorphism group is computed.
    """
    graph, embedded = _load_graph(args.graph)
    raw = embedded
    source = "embedded"
    if getattr(args, "group_file", None):
        _, raw = _load_generators(args.group_file)
        source = "file"
    if raw is not None:
        try:
            gens = [Perm.from_images(g) for g in raw]
        except (InvalidPermutation, TypeError, ValueError) as exc:
            raise ParseError(f"malformed permutation array: {exc}") from exc
        verify_automorphisms(graph, gens)
        group = PermutationGroup.close(gens, degree=graph.vertex_count,
                                       cap=args.cap_group)
        return graph, group, source
    return graph, automorphism_group(graph, cap=args.cap_group), "aut"


def _graph_sha256(graph: Graph) -> str:
    canonical = json.dumps(graph.to_json(), sort_keys=True).encode()
    return hashlib.sha256(canonical).hexdigest()


def _parse_walk(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(v) for v in text.replace(",", " ").split())
    except ValueError:
        raise ParseError(f"walk {text!r} is not a list of vertices") from None


# -- subcommand payloads -------------------------------------------------------

def _payload_orbits(graph, group, args) -> dict:
    table = consistent_cycle_orbits(group, graph)
    return {"orbit_count": len(table.records), "orbits": table.to_json()}


def _payload_trivial_walk(graph, group, args) -> dict:
    method = args.method
    if method == "auto":
        method = "4valent" if graph.is_regular() and graph.valence() == 4 else "wps"
    finder = {"wps": find_trivial_walk_wps,
              "4valent": find_trivial_walk_4valent}.get(method)
    if finder is not None:
        witness, cert = finder(group, graph)
    else:
        witness, cert = find_trivial_walk_exhaustive(group, graph,
                                                     depth_cap=args.depth_cap)
    return {"walk": list(witness.walk), "shunt": list(witness.shunt),
            "method": method, "certificate": cert}


def _payload_wps_check(graph, group, args) -> dict:
    local = local_group(group, graph, args.vertex)
    witness = weakly_p_subregular(local)
    return {"vertex": args.vertex, "neighborhood": list(local.domain),
            "local_order": local.group.order,
            "witness": witness.to_json() if witness else None}


def _payload_blowup_demo(graph, group, args) -> dict:
    family = blowup_cycle_family(graph, group, args.m)
    blowup_group = automorphism_group(family.blowup, cap=args.cap_group)
    cycles = enumerate_consistent_cycles(blowup_group, family.blowup)
    orbits = partition_cycles(blowup_group, cycles)
    table = consistent_cycle_orbits(blowup_group, family.blowup, cycles=cycles)
    ids = family_orbit_ids(family, blowup_group, orbits=orbits)
    verdict, offender = verify_no_trivial_stabilizer(blowup_group, family.blowup,
                                                     table=table)
    return {"family": family.to_json(),
            "blowup_vertices": family.blowup.vertex_count,
            "blowup_group_order": blowup_group.order,
            "census": table.to_json(),
            "family_orbit_ids": [{"orbit": i, "fibers": j, "id": ids[i, j]}
                                 for i, j in sorted(ids)],
            "family_orbits_distinct": len(set(ids.values())) == len(ids),
            "no_trivial_stabilizer": verdict,
            "offending_cycle": list(offender) if offender else None}


def _payload_generators(graph, group, args) -> dict:
    return verify_generation(group, graph).to_json()


def _payload_property_r(graph, group, args) -> dict:
    walk = _parse_walk(args.walk)
    by_group = reachability_by_shunt_group(group, graph, walk)
    by_chase = reachability_by_chase(group, graph, walk, target=args.target)
    assert by_group.verdict == by_chase.verdict, "the two deciders must agree"
    return {"walk": list(walk), "verdict": by_group.verdict,
            "shunt_group": by_group.to_json(), "chase": by_chase.to_json()}


PAYLOADS = {
    "orbits": _payload_orbits,
    "trivial-walk": _payload_trivial_walk,
    "wps-check": _payload_wps_check,
    "blowup-demo": _payload_blowup_demo,
    "generators": _payload_generators,
    "property-r": _payload_property_r,
}


def _thread_limit() -> int:
    """CW_THREADS caps worker parallelism; execution here is sequential,
    which satisfies any positive limit."""
    raw = os.environ.get("CW_THREADS", "1")
    try:
        limit = int(raw)
    except ValueError:
        raise ParseError(f"CW_THREADS must be an integer, got {raw!r}") from None
    if limit < 1:
        raise ParseError(f"CW_THREADS must be >= 1, got {limit}")
    return limit


def run(args: argparse.Namespace) -> dict:
    """Dispatch one subcommand and wrap its payload in the report envelope."""
    started = time.perf_counter()
    threads = _thread_limit()
    graph, group, source = parse_inputs(args)
    payload = PAYLOADS[args.subcommand](graph, group, args)
    return {
        "subcommand": args.subcommand,
        "input": {"graph_sha256": _graph_sha256(graph),
                  "vertices": graph.vertex_count,
                  "edges": graph.edge_count(),
                  "group_order": group.order,
                  "group_source": source,
                  "threads": threads},
        "payload": payload,
        "elapsed_s": round(time.perf_counter() - started, 6),
        "version": __version__,
    }


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cwalks",
        description="Consistent walks and cycles in vertex-transitive graphs.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--graph", required=True,
                       help="named spec (e.g. petersen, cycle:6) or a file path")
        p.add_argument("--group-file", help="JSON generator file; default: full Aut")
        p.add_argument("--out", help="write the report here instead of stdout")
        p.add_argument("--cap-group", type=int, default=DEFAULT_GROUP_CAP)
        p.add_argument("--json", action="store_true", default=True,
                       help="JSON output (default and only format)")

    common(sub.add_parser("orbits", help="consistent-cycle orbit census"))

    p = sub.add_parser("trivial-walk", help="search for a trivial-stabilizer walk")
    common(p)
    p.add_argument("--method", choices=["auto", "wps", "4valent", "exhaustive"],
                   default="auto")
    p.add_argument("--depth-cap", type=int, default=DEFAULT_WALK_DEPTH)

    p = sub.add_parser("wps-check", help="weakly p-subregular local action check")
    common(p)
    p.add_argument("--vertex", type=int, default=0)

    p = sub.add_parser("blowup-demo", help="blow-up cycle family and verdicts")
    common(p)
    p.add_argument("--m", type=int, default=2, help="fiber size")

    common(sub.add_parser("generators", help="shunt generating set report"))

    p = sub.add_parser("property-r", help="reachability of all vertices from a walk")
    common(p)
    p.add_argument("--walk", required=True, help="comma-separated vertices")
    p.add_argument("--target", type=int, help="vertex for the witness chain")

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report = run(args)
    except CapExceeded as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}),
              file=sys.stderr)
        return 2
    except ConsistentWalksError as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}),
              file=sys.stderr)
        return 1
    text = json.dumps(report, indent=2) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
