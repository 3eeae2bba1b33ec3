"""Command-line interface: build, merge, query, unfold, verify, bench.

Graphs and their paths travel in a small text format:

    # comment
    N <id> <label>
    E <from>[+|-] <to>[+|-]
    P <name> <id><+|-> <id><+|-> ...

Node ids are positive integers; path steps carry a mandatory
orientation suffix; edge endpoints default to the forward orientation.
Internally every oriented node becomes a single integer id so that both
strands of a haplotype can be indexed side by side.

Every command can emit a run manifest: a text file with one key per
line recording the command, parameter values, input and output digests,
wall time, and peak memory.
"""

from __future__ import annotations

import argparse
import hashlib
import itertools
import resource
import statistics
import sys
import time
from collections import Counter
from dataclasses import dataclass, field
from queue import Queue
from random import Random
from threading import Thread
from typing import Iterable, Iterator, Sequence

from . import query as queries
from . import unfold as unfolding
from .compressed import CompressedGBWT, CorruptIndexError, UnsupportedFormatError
from .dynamic import DynamicGBWT, MergeError, merge
from .model import (ENDMARKER, FORWARD, REVERSE, Graph, decode_oriented,
                    encode_oriented, flip, path_is_valid, reverse_path)
from .oracle import BwtOracle
from .succinct import MalformedEncodingError

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_MERGE_CONFLICT = 3
EXIT_INCONSISTENT_UNFOLD = 4
EXIT_VERIFY_FAILED = 5

DEFAULT_BATCH_SIZE = 100_000_000
VERIFY_SIZE_LIMIT = 1_000_000


class UsageError(ValueError):
    """Bad command-line arguments."""


class GraphParseError(ValueError):
    """A graph file line could not be understood."""

    def __init__(self, path: str, lineno: int, message: str):
        super().__init__(f"{path}:{lineno}: {message}")


class InconsistentUnfoldError(ValueError):
    """The pruned graph is not a subgraph of the original."""


# -- graph file ingestion --

@dataclass
class ParsedGraph:
    """A graph file after parsing: oriented graph, labels, and paths."""

    graph: Graph = field(default_factory=lambda: Graph(orientation_closed=True))
    labels: dict[int, str] = field(default_factory=dict)
    paths: list[tuple[str, tuple[int, ...]]] = field(default_factory=list)


def _parse_step(token: str, *, require_suffix: bool) -> int:
    if token.endswith("+"):
        body, orientation = token[:-1], FORWARD
    elif token.endswith("-"):
        body, orientation = token[:-1], REVERSE
    elif require_suffix:
        raise ValueError(f"step {token!r} is missing its +/- orientation suffix")
    else:
        body, orientation = token, FORWARD
    if not body.isdigit() or int(body) < 1:
        raise ValueError(f"node id in {token!r} must be a positive integer")
    return encode_oriented(int(body), orientation)


def parse_graph_file(path: str) -> ParsedGraph:
    parsed = ParsedGraph()
    node_lines: list[tuple[int, list[str]]] = []
    edge_lines: list[tuple[int, list[str]]] = []
    path_lines: list[tuple[int, list[str]]] = []
    try:
        with open(path, "r", encoding="utf-8") as handle:
            for lineno, raw in enumerate(handle, start=1):
                line = raw.strip()
                if not line or line.startswith("#"):
                    continue
                fields = line.split()
                kind = fields[0]
                if kind == "N":
                    node_lines.append((lineno, fields))
                elif kind == "E":
                    edge_lines.append((lineno, fields))
                elif kind == "P":
                    path_lines.append((lineno, fields))
                else:
                    raise GraphParseError(path, lineno, f"unknown line type {kind!r}")
    except OSError as err:
        raise GraphParseError(path, 0, str(err))

    for lineno, fields in node_lines:
        if len(fields) != 3:
            raise GraphParseError(path, lineno, "node lines are 'N <id> <label>'")
        if not fields[1].isdigit() or int(fields[1]) < 1:
            raise GraphParseError(path, lineno, f"node id {fields[1]!r} must be a positive integer")
        node = int(fields[1])
        if node in parsed.labels:
            raise GraphParseError(path, lineno, f"node {node} declared twice")
        parsed.labels[node] = fields[2]
        parsed.graph.add_node(encode_oriented(node, FORWARD))
        parsed.graph.add_node(encode_oriented(node, REVERSE))

    def declared(step: int, lineno: int) -> int:
        if step // 2 not in parsed.labels:
            raise GraphParseError(path, lineno, f"node {step // 2} was never declared")
        return step

    for lineno, fields in edge_lines:
        if len(fields) != 3:
            raise GraphParseError(path, lineno, "edge lines are 'E <from> <to>'")
        try:
            u = _parse_step(fields[1], require_suffix=False)
            v = _parse_step(fields[2], require_suffix=False)
        except ValueError as err:
            raise GraphParseError(path, lineno, str(err))
        parsed.graph.add_edge(declared(u, lineno), declared(v, lineno))

    for lineno, fields in path_lines:
        if len(fields) < 3:
            raise GraphParseError(path, lineno, "path lines are 'P <name> <step> ...'")
        steps = []
        for token in fields[2:]:
            try:
                steps.append(declared(_parse_step(token, require_suffix=True), lineno))
            except ValueError as err:
                raise GraphParseError(path, lineno, str(err))
        parsed.paths.append((fields[1], tuple(steps)))
    return parsed


def _format_step(node: int, *, always_suffix: bool = False) -> str:
    base, orientation = decode_oriented(node)
    if orientation == REVERSE:
        return f"{base}-"
    return f"{base}+" if always_suffix else str(base)


def write_graph_file(path: str, graph: Graph, labels: dict[int, str],
                     paths: Sequence[tuple[str, tuple[int, ...]]] = ()) -> None:
    """Write a graph back out, one canonical line per edge pair."""
    with open(path, "w", encoding="utf-8") as handle:
        for node in sorted({v // 2 for v in graph.nodes}):
            handle.write(f"N {node} {labels.get(node, '*')}\n")
        canonical = set()
        for u, v in graph.edges():
            mirror = (flip(v), flip(u))
            canonical.add(min((u, v), mirror, key=lambda e: (e[0] % 2, e)))
        for u, v in sorted(canonical):
            handle.write(f"E {_format_step(u)} {_format_step(v)}\n")
        for name, steps in paths:
            rendered = " ".join(_format_step(s, always_suffix=True) for s in steps)
            handle.write(f"P {name} {rendered}\n")


# -- run manifests --

def _sha256(path: str) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as handle:
        for chunk in iter(lambda: handle.read(1 << 20), b""):
            digest.update(chunk)
    return digest.hexdigest()


def write_manifest(path: str, command: str, inputs: dict[str, str],
                   outputs: dict[str, str], params: dict[str, object],
                   wall_time: float) -> None:
    peak = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss * 1024
    lines = [f"command\t{command}"]
    for name in sorted(inputs):
        lines.append(f"input.{name}.sha256\t{_sha256(inputs[name])}")
    for name in sorted(outputs):
        lines.append(f"output.{name}.sha256\t{_sha256(outputs[name])}")
    for name in sorted(params):
        lines.append(f"param.{name}\t{params[name]}")
    lines.append(f"wall_time_s\t{wall_time:.6f}")
    lines.append(f"peak_memory_bytes\t{peak}")
    with open(path, "w", encoding="utf-8") as handle:
        handle.write("\n".join(lines) + "\n")


# -- build --

def _batched_texts(paths: Iterable[tuple[str, tuple[int, ...]]],
                   bidirectional: bool, batch_size: int) -> Iterator[list[tuple[int, ...]]]:
    """Group paths into batches holding roughly batch_size characters."""
    batch: list[tuple[int, ...]] = []
    buffered = 0
    for _, path in paths:
        texts = (path, reverse_path(path)) if bidirectional else (path,)
        for text in texts:
            batch.append(text)
            buffered += len(text)
            if buffered >= batch_size:
                yield batch
                batch, buffered = [], 0
    if batch:
        yield batch


def _build_index(parsed: ParsedGraph, source: str, sample_rate: int,
                 batch_size: int, bidirectional: bool, threads: int) -> DynamicGBWT:
    for name, path in parsed.paths:
        ok, diagnostic = path_is_valid(parsed.graph, path)
        if not ok:
            raise GraphParseError(source, 0, f"path {name}: {diagnostic}")
    index = DynamicGBWT(sample_rate=sample_rate, bidirectional=bidirectional)
    batches = _batched_texts(parsed.paths, bidirectional, batch_size)
    if threads >= 2:
        # One producer stages the next batch while the builder inserts
        # the current one; batches are still applied in order.
        queue: Queue = Queue(maxsize=1)

        def produce() -> None:
            for batch in batches:
                queue.put(batch)
            queue.put(None)

        producer = Thread(target=produce, daemon=True)
        producer.start()
        while True:
            batch = queue.get()
            if batch is None:
                break
            index.insert_batch(batch)
        producer.join()
    else:
        for batch in batches:
            index.insert_batch(batch)
    return index


def cmd_build(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    parsed = parse_graph_file(args.graph)
    index = _build_index(parsed, args.graph, args.sample_rate, args.batch_size,
                         args.bidirectional, args.threads)
    frozen = index.freeze()
    with open(args.output, "wb") as sink:
        frozen.serialize(sink)
    manifest = args.manifest or args.output + ".manifest"
    write_manifest(manifest, "build", {"graph": args.graph}, {"index": args.output},
                   {"sample_rate": args.sample_rate, "batch_size": args.batch_size,
                    "bidirectional": args.bidirectional, "threads": args.threads},
                   time.perf_counter() - started)
    return EXIT_OK


# -- merge --

def _load_index(path: str) -> CompressedGBWT:
    try:
        with open(path, "rb") as source:
            return CompressedGBWT.deserialize(source)
    except OSError as err:
        raise GraphParseError(path, 0, str(err))
    except (CorruptIndexError, UnsupportedFormatError, MalformedEncodingError) as err:
        raise GraphParseError(path, 0, f"not a readable index: {err}")


def cmd_merge(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    if len(args.indexes) == 1:
        with open(args.indexes[0], "rb") as source:
            data = source.read()
        _load_index(args.indexes[0])
        with open(args.output, "wb") as sink:
            sink.write(data)
    else:
        result = _load_index(args.indexes[0])
        for position, path in enumerate(args.indexes[1:], start=1):
            nxt = _load_index(path)
            try:
                result = merge(result, nxt)
            except MergeError as err:
                raise MergeError(
                    f"{args.indexes[position - 1]} and {path}: {err}")
        frozen = result.freeze() if isinstance(result, DynamicGBWT) else result
        with open(args.output, "wb") as sink:
            frozen.serialize(sink)
    manifest = args.manifest or args.output + ".manifest"
    inputs = {f"index{k}": p for k, p in enumerate(args.indexes)}
    write_manifest(manifest, "merge", inputs, {"index": args.output},
                   {"order": " ".join(args.indexes)}, time.perf_counter() - started)
    return EXIT_OK


# -- query --

def _parse_pattern(tokens: Sequence[str]) -> tuple[int, ...]:
    try:
        return tuple(_parse_step(t, require_suffix=False) for t in tokens)
    except ValueError as err:
        raise UsageError(str(err))


def cmd_query(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    index = _load_index(args.index)
    if args.subcommand == "find":
        state = queries.find(index, _parse_pattern(args.args))
        print(state.size)
    elif args.subcommand == "locate":
        state = queries.find(index, _parse_pattern(args.args))
        locate = queries.locate_direct if args.direct else queries.locate_fast
        hits = locate(index, state) if not state.empty else Counter()
        print("\t".join(str(tid) for tid in sorted(hits.elements())))
    else:
        if len(args.args) != 1 or not args.args[0].isdigit():
            raise UsageError("extract takes one nonnegative text id")
        text_id = int(args.args[0])
        if text_id >= index.sequence_count:
            raise UsageError(
                f"text id {text_id} out of range [0, {index.sequence_count})")
        path = queries.extract(index, text_id)
        print(" ".join(_format_step(v) for v in path))
    if args.manifest:
        write_manifest(args.manifest, f"query.{args.subcommand}",
                       {"index": args.index}, {},
                       {"pattern": " ".join(args.args)},
                       time.perf_counter() - started)
    return EXIT_OK


# -- unfold --

def _check_subgraph(original: ParsedGraph, pruned: ParsedGraph) -> None:
    extra_nodes = set(pruned.labels) - set(original.labels)
    if extra_nodes:
        raise InconsistentUnfoldError(
            f"pruned graph has nodes missing from the original: {sorted(extra_nodes)}")
    for u, v in pruned.graph.edges():
        if not original.graph.has_edge(u, v):
            raise InconsistentUnfoldError(
                f"pruned graph has edge ({u // 2}, {v // 2}) missing from the original")


def _reference_index(parsed: ParsedGraph) -> DynamicGBWT:
    index = DynamicGBWT(sample_rate=1, bidirectional=True)
    texts = []
    for _, path in parsed.paths:
        texts.append(path)
        texts.append(reverse_path(path))
    if texts:
        index.insert_batch(texts)
    return index


def cmd_unfold(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    original = parse_graph_file(args.graph)
    pruned = parse_graph_file(args.pruned)
    _check_subgraph(original, pruned)
    index = _load_index(args.index)
    reference = None
    if args.reference:
        reference = _reference_index(parse_graph_file(args.reference))

    induced = unfolding.induced_graph(index)
    components = unfolding.complement_components(induced, pruned.graph, oriented=True)
    allocator_start = max([*original.labels, 0]) + 1
    allocator = itertools.count(allocator_start)
    built = []
    path_count = 0
    for component in components:
        maximal = unfolding.maximal_paths(component, index, reference, oriented=True)
        path_count += len(maximal)
        built.append(unfolding.build_unfolded(maximal, component, allocator, oriented=True))
    unfolded, mapping = unfolding.apply_unfold(pruned.graph, built, oriented=True)

    labels = dict(pruned.labels)
    for duplicate, source in mapping.items():
        labels[duplicate] = original.labels.get(source, "*")
    graph_out = args.output + ".graph"
    mapping_out = args.output + ".mapping"
    write_graph_file(graph_out, unfolded, labels)
    unfolding.write_mapping(mapping_out, mapping)
    manifest = args.manifest or args.output + ".manifest"
    write_manifest(manifest, "unfold",
                   {"graph": args.graph, "pruned": args.pruned, "index": args.index},
                   {"graph": graph_out, "mapping": mapping_out},
                   {"components": len(components), "maximal_paths": path_count,
                    "duplicates": len(mapping)},
                   time.perf_counter() - started)
    return EXIT_OK


# -- verify --

def cmd_verify(args: argparse.Namespace) -> int:
    parsed = parse_graph_file(args.graph)
    total = sum(len(p) for _, p in parsed.paths)
    if total > VERIFY_SIZE_LIMIT:
        raise UsageError(
            f"collection holds {total} characters; the naive checker is "
            f"limited to {VERIFY_SIZE_LIMIT}. Verify a subset instead.")

    failures = 0

    def report(name: str, ok: bool, detail: str = "") -> None:
        nonlocal failures
        status = "PASS" if ok else "FAIL"
        suffix = f"\t{detail}" if detail and not ok else ""
        print(f"{name}: {status}{suffix}")
        if not ok:
            failures += 1

    try:
        index = _load_index(args.index)
    except GraphParseError as err:
        report("load", False, str(err))
        return EXIT_VERIFY_FAILED
    report("load", True)

    try:
        index.validate()
        report("structure", True)
    except CorruptIndexError as err:
        report("structure", False, str(err))

    texts: list[tuple[int, ...]] = []
    for _, path in parsed.paths:
        texts.append(path)
        if index.bidirectional:
            texts.append(reverse_path(path))
    oracle = BwtOracle(texts)

    expected = oracle.records()
    nodes = set(index.node_ids()) | {ENDMARKER}
    bodies_ok = set(expected) == nodes
    for v in sorted(expected):
        body = []
        if v in nodes:
            for w, length in index.record_view(v).symbol_runs():
                body.extend([w] * length)
        if body != expected[v]:
            bodies_ok = False
            break
    report("bwt", bodies_ok)

    patterns: set[tuple[int, ...]] = set()
    for text in texts:
        for width in (1, 2, 3):
            for i in range(len(text) - width + 1):
                patterns.add(text[i:i + width])
    rng = Random(0)
    top = max((max(t) for t in texts), default=1)
    for _ in range(16):
        patterns.add(tuple(rng.randint(1, top + 2) for _ in range(rng.randint(1, 3))))

    find_ok = all(queries.find(index, p).size == oracle.find_count(p)
                  for p in patterns)
    report("find", find_ok)

    locate_ok = True
    for p in patterns:
        state = queries.find(index, p)
        want = oracle.locate(p)
        got_direct = queries.locate_direct(index, state) if not state.empty else Counter()
        got_fast = queries.locate_fast(index, state)
        if got_direct != want or got_fast != want:
            locate_ok = False
            break
    report("locate", locate_ok)

    extract_ok = all(queries.extract(index, j) == texts[j] for j in range(len(texts)))
    report("extract", extract_ok)

    samples_ok = True
    for v in sorted(nodes - {ENDMARKER}):
        if index.record_view(v).samples != oracle.sampled_offsets(v, index.sample_rate):
            samples_ok = False
            break
    report("samples", samples_ok)

    return EXIT_VERIFY_FAILED if failures else EXIT_OK


# -- bench --

def generate_haplotypes(rng: Random, haplotypes: int, sites: int,
                        divergence: float) -> list[tuple[int, ...]]:
    """Biallelic haplotype panel: per site, reference node or rare alternate."""
    panel = []
    for _ in range(haplotypes):
        path = tuple(2 * site + (2 if rng.random() < divergence else 1)
                     for site in range(sites))
        panel.append(path)
    return panel


def _parse_scenario(path: str) -> dict[str, str]:
    values: dict[str, str] = {}
    try:
        with open(path, "r", encoding="utf-8") as handle:
            for lineno, raw in enumerate(handle, start=1):
                line = raw.strip()
                if not line or line.startswith("#"):
                    continue
                fields = line.split(None, 1)
                if len(fields) != 2:
                    raise GraphParseError(path, lineno, "scenario lines are 'key value'")
                values[fields[0]] = fields[1]
    except OSError as err:
        raise GraphParseError(path, 0, str(err))
    return values


def _median_seconds(runs: int, work) -> float:
    timings = []
    for _ in range(runs):
        begin = time.perf_counter()
        work()
        timings.append(time.perf_counter() - begin)
    return statistics.median(timings)


def cmd_bench(args: argparse.Namespace) -> int:
    scenario = _parse_scenario(args.scenario)
    try:
        haplotypes = int(scenario.get("haplotypes", "0"))
        sites = int(scenario.get("sites", "0"))
        divergence = float(scenario.get("divergence", "0.001"))
        pattern_count = int(scenario.get("patterns", "0"))
        lengths = [int(x) for x in scenario.get("pattern_lengths", "16").split(",")]
        seed = int(scenario.get("seed", "0"))
    except ValueError as err:
        raise GraphParseError(args.scenario, 0, f"bad scenario value: {err}")

    rng = Random(seed)
    panel = generate_haplotypes(rng, haplotypes, sites, divergence)
    index = DynamicGBWT(sample_rate=int(scenario.get("sample_rate", "1024")))
    for batch in _batched_texts((("", p) for p in panel), False, DEFAULT_BATCH_SIZE):
        index.insert_batch(batch)
    frozen = index.freeze()

    rows: list[tuple[str, float]] = []
    if panel:
        characters = frozen.total_size + frozen.sequence_count
        rows.append(("bits_per_char", frozen.body_bytes() * 8 / characters))

    patterns = []
    for _ in range(pattern_count):
        source = panel[rng.randrange(len(panel))]
        width = min(rng.choice(lengths), len(source))
        start = rng.randrange(len(source) - width + 1)
        patterns.append(source[start:start + width])
    if patterns:
        pattern_chars = sum(len(p) for p in patterns)
        find_s = _median_seconds(5, lambda: [queries.find(frozen, p) for p in patterns])
        rows.append(("find_ns_per_char", find_s * 1e9 / pattern_chars))

        states = [queries.find(frozen, p) for p in patterns]
        positions = sum(s.size for s in states) or 1
        direct_s = _median_seconds(
            5, lambda: [queries.locate_direct(frozen, s) for s in states if not s.empty])
        fast_s = _median_seconds(
            5, lambda: [queries.locate_fast(frozen, s) for s in states])
        rows.append(("locate_direct_us_per_pos", direct_s * 1e6 / positions))
        rows.append(("locate_fast_us_per_pos", fast_s * 1e6 / positions))

        sample = list(range(min(len(panel), 100)))
        extracted = sum(len(panel[j]) for j in sample) or 1
        extract_s = _median_seconds(5, lambda: [queries.extract(frozen, j) for j in sample])
        rows.append(("extract_ns_per_char", extract_s * 1e9 / extracted))

    for name, value in rows:
        print(f"{name}\t{value:.3f}")
    if args.manifest:
        write_manifest(args.manifest, "bench", {"scenario": args.scenario}, {},
                       {"seed": seed}, 0.0)
    return EXIT_OK


# -- argument parsing --

class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _make_parser() -> _Parser:
    parser = _Parser(prog="gbwt", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    build = sub.add_parser("build", help="index the paths of a graph file")
    build.add_argument("graph")
    build.add_argument("--output", required=True)
    build.add_argument("--sample-rate", type=int, default=1024)
    build.add_argument("--batch-size", type=int, default=DEFAULT_BATCH_SIZE)
    build.add_argument("--bidirectional", action="store_true")
    build.add_argument("--threads", type=int, default=2)
    build.add_argument("--manifest")
    build.set_defaults(run=cmd_build)

    merge_p = sub.add_parser("merge", help="merge indexes over disjoint node ranges")
    merge_p.add_argument("indexes", nargs="+")
    merge_p.add_argument("--output", required=True)
    merge_p.add_argument("--manifest")
    merge_p.set_defaults(run=cmd_merge)

    query = sub.add_parser("query", help="find, locate, or extract")
    query.add_argument("index")
    query.add_argument("subcommand", choices=["find", "locate", "extract"])
    query.add_argument("args", nargs="*")
    query.add_argument("--direct", action="store_true",
                       help="locate one position at a time")
    query.add_argument("--manifest")
    query.set_defaults(run=cmd_query)

    unfold_p = sub.add_parser("unfold", help="rebuild pruned regions from haplotypes")
    unfold_p.add_argument("--graph", required=True)
    unfold_p.add_argument("--pruned", required=True)
    unfold_p.add_argument("--index", required=True)
    unfold_p.add_argument("--output", required=True, help="prefix for .graph and .mapping")
    unfold_p.add_argument("--reference", help="graph file whose paths extend dead ends")
    unfold_p.add_argument("--manifest")
    unfold_p.set_defaults(run=cmd_unfold)

    verify = sub.add_parser("verify", help="check an index against the naive oracle")
    verify.add_argument("graph")
    verify.add_argument("--index", required=True)
    verify.add_argument("--manifest")
    verify.set_defaults(run=cmd_verify)

    bench = sub.add_parser("bench", help="measure query speed on synthetic panels")
    bench.add_argument("--scenario", required=True)
    bench.add_argument("--manifest")
    bench.set_defaults(run=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _make_parser()
    try:
        args = parser.parse_args(argv)
        return args.run(args)
    except SystemExit as err:
        return err.code if isinstance(err.code, int) else EXIT_USAGE
    except UsageError as err:
        print(f"gbwt: error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except GraphParseError as err:
        print(f"gbwt: parse error: {err}", file=sys.stderr)
        return EXIT_PARSE
    except MergeError as err:
        print(f"gbwt: merge conflict: {err}", file=sys.stderr)
        return EXIT_MERGE_CONFLICT
    except InconsistentUnfoldError as err:
        print(f"gbwt: inconsistent unfold inputs: {err}", file=sys.stderr)
        return EXIT_INCONSISTENT_UNFOLD


if __name__ == "__main__":
    raise SystemExit(main())
