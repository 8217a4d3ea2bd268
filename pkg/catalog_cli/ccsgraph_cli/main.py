import argparse
import sys
from enum import IntEnum
from pathlib import Path
from typing import FrozenSet, List, Optional

from ccsgraph_lib.classes import g_classes
from ccsgraph_lib.enums import StatementId
from ccsgraph_lib.exceptions import (
    CCSGraphError,
    InvalidInput,
    ResourceCapExceeded,
    UnknownStatement,
)
from ccsgraph_lib.graph import build_graph
from ccsgraph_lib.schemas import SuiteOptions
from loguru import logger

from .catalog import build_catalog_entry, catalog_entries, parse_group_spec, select_normal_subgroups
from .config import settings
from .export import (
    class_listing,
    dump_json,
    format_class_listing,
    format_counts,
    format_search_hit,
    graph_document,
    graph_to_dot,
)
from .sweep import run_sweep, search_entries

FLIP_COMPLETE = "flip-complete"


class ExitCode(IntEnum):
    ok = 0
    violations = 1
    input_error = 2
    resource_cap = 3


def configure_logging(verbose: int = 0, quiet: bool = False) -> None:
    """Send log records to stderr so stdout carries only command output."""
    level = settings.log_level
    if quiet:
        level = "ERROR"
    elif verbose == 1:
        level = "INFO"
    elif verbose > 1:
        level = "DEBUG"
    logger.remove()
    logger.add(sys.stderr, level=level, format="<level>{level: <8}</level> | {message}")


def parse_statements(text: Optional[str]) -> FrozenSet[StatementId]:
    if not text:
        return frozenset(StatementId)
    known = {s.value: s for s in StatementId}
    selected = set()
    for name in (part.strip() for part in text.split(",")):
        if name not in known:
            raise UnknownStatement(
                f"Unknown statement {name!r}; expected one of {', '.join(known)}"
            )
        selected.add(known[name])
    return frozenset(selected)


def _max_order(requested: Optional[int]) -> int:
    cap = settings.sweep.max_order
    if requested is None:
        return cap
    if requested < 1 or requested > cap:
        raise InvalidInput(f"--max-order must be between 1 and {cap}, got {requested}")
    return requested


def _catalog_names(text: Optional[str]) -> Optional[List[str]]:
    if not text:
        return None
    return [name.strip() for name in text.split(",") if name.strip()]


# ---------------------------------------------------------
# Commands
# ---------------------------------------------------------


def cmd_classes(args: argparse.Namespace) -> int:
    entry = parse_group_spec(args.group)
    group = build_catalog_entry(entry)
    listings = [
        class_listing(entry.name, descriptor, g_classes(group, normal))
        for descriptor, normal in select_normal_subgroups(group, args.normal)
    ]
    if args.json:
        sys.stdout.write(
            dump_json(
                {
                    "schema": settings.schema_version,
                    "listings": [listing.model_dump(mode="json") for listing in listings],
                }
            )
        )
    else:
        sys.stdout.write("\n".join(format_class_listing(listing) for listing in listings))
    return ExitCode.ok


def cmd_graph(args: argparse.Namespace) -> int:
    entry = parse_group_spec(args.group)
    group = build_catalog_entry(entry)
    graphs = [
        (descriptor, build_graph(g_classes(group, normal).vertex_sizes))
        for descriptor, normal in select_normal_subgroups(group, args.normal)
    ]
    if args.format == "dot":
        sys.stdout.write(
            "".join(graph_to_dot(graph, f"{entry.name} {descriptor}") for descriptor, graph in graphs)
        )
    else:
        sys.stdout.write(
            dump_json(
                {
                    "schema": settings.schema_version,
                    "group": entry.name,
                    "graphs": [graph_document(graph, descriptor) for descriptor, graph in graphs],
                }
            )
        )
    return ExitCode.ok


def cmd_verify(args: argparse.Namespace) -> int:
    statements = parse_statements(args.only)
    max_order = _max_order(args.max_order)
    options = SuiteOptions(
        statements=statements,
        flip_completeness=args.inject_fault == FLIP_COMPLETE,
        theorem_b_sanity=not args.no_sanity,
    )
    entries = catalog_entries(
        _catalog_names(args.catalog), max_order=max_order, include_large=args.large or None
    )
    report = run_sweep(
        entries,
        options,
        max_order=max_order,
        workers=args.workers or settings.sweep.workers,
        show_progress=args.progress or settings.sweep.show_progress,
    )

    document = dump_json(report)
    if args.out:
        Path(args.out).write_text(document, encoding="utf-8")
        sys.stdout.write(format_counts(report.counts, report.statements, report.violations))
    else:
        sys.stdout.write(document)

    for failure in report.consistency_failures:
        logger.error(failure)
    if report.violations:
        logger.error("{} violations across {} pairs", report.violations, len(report.records))
        return ExitCode.violations
    return ExitCode.ok


def cmd_search(args: argparse.Namespace) -> int:
    max_order = _max_order(args.max_order)
    entries = catalog_entries(
        _catalog_names(args.catalog), max_order=max_order, include_large=args.large or None
    )
    hits = search_entries(entries, show_progress=args.progress or settings.sweep.show_progress)
    if args.json:
        sys.stdout.write(
            dump_json(
                {
                    "schema": settings.schema_version,
                    "max_order": max_order,
                    "hits": [hit.model_dump(mode="json") for hit in hits],
                }
            )
        )
    elif hits:
        sys.stdout.write("".join(format_search_hit(hit) for hit in hits))
    else:
        sys.stdout.write(f"no instances found up to order {max_order}\n")
    return ExitCode.ok


def cmd_catalog_list(args: argparse.Namespace) -> int:
    rows = [("name", "family", "order", "degree")]
    for entry in catalog_entries(include_large=args.large or None):
        rows.append(
            (entry.name, entry.family.value, str(entry.expected_order), str(entry.expected_degree))
        )
    widths = [max(len(row[i]) for row in rows) for i in range(4)]
    for row in rows:
        cells = [row[0].ljust(widths[0]), row[1].ljust(widths[1])]
        cells += [row[2].rjust(widths[2]), row[3].rjust(widths[3])]
        sys.stdout.write("  ".join(cells).rstrip() + "\n")
    return ExitCode.ok


# ---------------------------------------------------------
# Parser
# ---------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ccsgraph",
        description="Class sizes of normal subgroups and their common-divisor graphs.",
    )
    parser.add_argument("--version", action="version", version=settings.app_version)
    parser.add_argument("-v", "--verbose", action="count", default=0)
    parser.add_argument("-q", "--quiet", action="store_true")
    commands = parser.add_subparsers(dest="command", required=True)

    classes = commands.add_parser("classes", help="List the G-classes of normal subgroups")
    classes.add_argument("group", help="Catalog name, product AxB, or file:<path>")
    classes.add_argument("--normal", default="self", help="self, auto, an index, or file:<path>")
    classes.add_argument("--json", action="store_true")
    classes.set_defaults(handler=cmd_classes)

    graph = commands.add_parser("graph", help="Export the common-divisor graph")
    graph.add_argument("group")
    graph.add_argument("--normal", default="self")
    graph.add_argument("--format", choices=["dot", "json"], default="dot")
    graph.set_defaults(handler=cmd_graph)

    verify = commands.add_parser("verify", help="Check every statement over the catalog")
    verify.add_argument("--max-order", type=int)
    verify.add_argument("--only", help="Comma-separated statement names")
    verify.add_argument("--out", help="Write the JSON report here instead of stdout")
    verify.add_argument("--catalog", help="Comma-separated group specs replacing the default catalog")
    verify.add_argument("--large", action="store_true", help="Include S7")
    verify.add_argument("--inject-fault", choices=[FLIP_COMPLETE])
    verify.add_argument("--no-sanity", action="store_true", help="Skip regular-disconnected warnings")
    verify.add_argument("--workers", type=int)
    verify.add_argument("--progress", action="store_true")
    verify.set_defaults(handler=cmd_verify)

    search = commands.add_parser("search", help="Find connected incomplete regular graphs")
    search.add_argument("--max-order", type=int)
    search.add_argument("--catalog")
    search.add_argument("--large", action="store_true")
    search.add_argument("--json", action="store_true")
    search.add_argument("--progress", action="store_true")
    search.set_defaults(handler=cmd_search)

    catalog = commands.add_parser("catalog", help="Inspect the group catalog")
    catalog_commands = catalog.add_subparsers(dest="catalog_command", required=True)
    listing = catalog_commands.add_parser("list", help="Print the default catalog")
    listing.add_argument("--large", action="store_true")
    listing.set_defaults(handler=cmd_catalog_list)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    configure_logging(args.verbose, args.quiet)
    try:
        return int(args.handler(args))
    except UnknownStatement as e:
        sys.stderr.write(parser.format_usage())
        sys.stderr.write(f"error: {e}\n")
        return ExitCode.input_error
    except ResourceCapExceeded as e:
        logger.error("ResourceCapExceeded: {}", e)
        sys.stderr.write(f"error: {e}\n")
        return ExitCode.resource_cap
    except CCSGraphError as e:
        logger.opt(exception=True).debug("{} [{}]", type(e).__name__, e)
        sys.stderr.write(f"error: {e}\n")
        return ExitCode.input_error


def run() -> None:
    sys.exit(main())
