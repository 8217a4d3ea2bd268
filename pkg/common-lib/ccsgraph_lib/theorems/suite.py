from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional

from loguru import logger

from ..config import get_settings
from ..enums import OutcomeStatus, StatementId
from ..exceptions import ResourceCapExceeded
from ..graph.cd_graph import CDGraph
from ..groups.base import FiniteGroup
from ..groups.subgroups import Subgroup, normal_subgroups
from ..schemas import (
    GraphSummary,
    PairRecord,
    SearchHit,
    SuiteOptions,
    SuiteReport,
    VerificationOutcome,
)
from .checks import (
    DEFAULT_OPTIONS,
    analyze_pair,
    check_element_power_lemma,
    check_lemma_key,
    check_main_theorem,
    check_main_theorem_decomposition,
    check_theorem_two_primes,
    check_two_component_characterization,
    theorem_b_warnings,
)


@dataclass(frozen=True)
class GroupPair:
    """A group G with one normal subgroup N, named for reporting."""

    group_name: str
    subgroup_descriptor: str
    group: FiniteGroup
    normal: Subgroup


def describe_normal(position: int, normal: Subgroup) -> str:
    return f"normal[{position}] order={normal.order}"


def normal_pairs(group: FiniteGroup, group_name: Optional[str] = None) -> List[GroupPair]:
    """One pair per normal subgroup, in the order of normal_subgroups."""
    name = group_name or group.name
    return [
        GroupPair(name, describe_normal(i, n), group, n)
        for i, n in enumerate(normal_subgroups(group))
    ]


def summarize_graph(graph: CDGraph) -> GraphSummary:
    return GraphSummary(
        vertices=list(graph.vertices),
        edges=[[v, w] for v, w in graph.edges()],
        degrees=list(graph.degrees),
        components=[list(block) for block in graph.component_vertices()],
        component_count=graph.component_count(),
        regular=graph.is_regular(),
        regular_degree=graph.regular_degree(),
        complete=graph.is_complete(),
        connected=graph.is_connected(),
    )


# ---------------------------------------------------------
# Per-pair evaluation
# ---------------------------------------------------------


def evaluate_pair_record(pair: GroupPair, options: SuiteOptions = DEFAULT_OPTIONS) -> PairRecord:
    """Run every selected check on one pair; resource errors are recorded on the record."""
    record = PairRecord(
        group_name=pair.group_name,
        subgroup_descriptor=pair.subgroup_descriptor,
        group_order=pair.group.order,
        normal_order=pair.normal.order,
    )
    try:
        ctx = analyze_pair(pair.group, pair.normal)
        record.center_intersection_order = len(ctx.cd.n_cap_zg)
        record.center_of_normal_order = len(ctx.cd.zn_members)
        record.cs_values = list(ctx.cd.cs_values)
        record.graph = summarize_graph(ctx.graph)

        wanted = options.statements
        outcomes: List[VerificationOutcome] = []
        if StatementId.ElementPowerLemma in wanted:
            outcomes.append(check_element_power_lemma(ctx, options))
        if wanted & {StatementId.LemmaKeyA, StatementId.LemmaKeyB}:
            outcomes.extend(o for o in check_lemma_key(ctx, options) if o.statement_id in wanted)
        if StatementId.TheoremTwoPrimes in wanted:
            outcomes.append(check_theorem_two_primes(ctx, options))
        if StatementId.MainTheorem in wanted:
            outcomes.append(check_main_theorem(ctx, options))
        if StatementId.MainTheoremDecomposition in wanted:
            outcomes.append(check_main_theorem_decomposition(ctx, options))
        if StatementId.TwoComponentCharacterization in wanted and pair.normal.is_whole():
            outcomes.append(check_two_component_characterization(pair.group))
        record.outcomes = outcomes

        if options.theorem_b_sanity:
            for message in theorem_b_warnings(ctx.graph):
                logger.warning("{} / {}: {}", pair.group_name, pair.subgroup_descriptor, message)
                record.warnings.append(message)
    except ResourceCapExceeded as e:
        logger.error("{} / {}: {}", pair.group_name, pair.subgroup_descriptor, e)
        record.error = str(e)

    for outcome in record.outcomes:
        if outcome.status == OutcomeStatus.violated:
            logger.error(
                "{} / {}: {} violated: {}",
                pair.group_name,
                pair.subgroup_descriptor,
                outcome.statement_id,
                outcome.notes,
            )
    return record


def consistency_failures(record: PairRecord) -> List[str]:
    """A non-vacuous MainTheorem forbids violations of the lemma and of the two-prime theorem."""
    by_statement = {o.statement_id: o for o in record.outcomes}
    main = by_statement.get(StatementId.MainTheorem)
    if main is None or main.status == OutcomeStatus.vacuous:
        return []
    failures = []
    for statement in (
        StatementId.LemmaKeyA,
        StatementId.LemmaKeyB,
        StatementId.TheoremTwoPrimes,
    ):
        outcome = by_statement.get(statement)
        if outcome is not None and outcome.status == OutcomeStatus.violated:
            failures.append(
                f"{record.group_name} / {record.subgroup_descriptor}: MainTheorem is "
                f"{main.status} but {statement} is violated"
            )
    return failures


# ---------------------------------------------------------
# Reports
# ---------------------------------------------------------


def _record_key(record: PairRecord):
    return record.group_order, record.group_name, record.normal_order, record.subgroup_descriptor


def assemble_report(
    records: Iterable[PairRecord],
    options: SuiteOptions = DEFAULT_OPTIONS,
    max_order: Optional[int] = None,
    tool_version: Optional[str] = None,
) -> SuiteReport:
    """Sort records and aggregate them; the result does not depend on evaluation order."""
    settings = get_settings()
    ordered = sorted(records, key=_record_key)
    statements = [s for s in StatementId if s in options.statements]

    counts: Dict[StatementId, Dict[OutcomeStatus, int]] = {
        s: {status: 0 for status in OutcomeStatus} for s in statements
    }
    failures: List[str] = []
    for record in ordered:
        for outcome in record.outcomes:
            counts[outcome.statement_id][outcome.status] += 1
        failures.extend(consistency_failures(record))

    violated = sum(per_status[OutcomeStatus.violated] for per_status in counts.values())
    report = SuiteReport(
        schema_version=settings.schema_version,
        tool_version=tool_version or settings.app_version,
        max_order=max_order,
        statements=statements,
        fault_injection=options.flip_completeness,
        records=ordered,
        counts=counts,
        violations=violated + len(failures),
        consistency_failures=failures,
        errors=sum(1 for r in ordered if r.error is not None),
        warnings=sum(len(r.warnings) for r in ordered),
    )
    logger.info(
        "Suite finished: {} pairs, {} violations, {} errors",
        len(ordered),
        report.violations,
        report.errors,
    )
    return report


def run_suite(
    pairs: Iterable[GroupPair],
    options: SuiteOptions = DEFAULT_OPTIONS,
    max_order: Optional[int] = None,
) -> SuiteReport:
    records = [evaluate_pair_record(pair, options) for pair in pairs]
    return assemble_report(records, options, max_order=max_order)


# ---------------------------------------------------------
# Search
# ---------------------------------------------------------


def search_hit(pair: GroupPair) -> Optional[SearchHit]:
    """Hit when the graph is connected, incomplete and regular, else None."""
    ctx = analyze_pair(pair.group, pair.normal)
    graph = ctx.graph
    if not graph.vertices or not graph.is_connected() or graph.is_complete():
        return None
    if not graph.is_regular():
        return None

    main = check_main_theorem(ctx)
    return SearchHit(
        group_name=pair.group_name,
        subgroup_descriptor=pair.subgroup_descriptor,
        group_order=pair.group.order,
        normal_order=pair.normal.order,
        cs_values=list(ctx.cd.cs_values),
        prime=main.witness.get("prime"),
        main_theorem=main,
        decomposition=check_main_theorem_decomposition(ctx),
    )


def search_pairs(pairs: Iterable[GroupPair]) -> List[SearchHit]:
    hits = []
    for pair in pairs:
        try:
            hit = search_hit(pair)
        except ResourceCapExceeded as e:
            logger.error("{} / {}: {}", pair.group_name, pair.subgroup_descriptor, e)
            continue
        if hit is not None:
            hits.append(hit)
    hits.sort(key=lambda h: (h.group_order, h.group_name, h.normal_order, h.subgroup_descriptor))
    return hits
