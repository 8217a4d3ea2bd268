"""
Each check evaluates one statement on a (G, N) pair and classifies it as vacuous (hypothesis
fails or nothing to quantify over), holds, or violated. Violations carry enough data to
re-run the failing assertion by hand.
"""

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Any, Dict, Iterator, List, Optional, Tuple

from ..classes.class_data import (
    ClassData,
    cross_prime_pairs,
    g_classes,
    group_classes,
    noncentral_elements,
    p_elements,
)
from ..enums import OutcomeStatus, StatementId
from ..graph.cd_graph import CDGraph, build_graph
from ..groups.arithmetic import as_prime, is_p_power, is_prime_power, prime_divisors
from ..groups.base import FiniteGroup
from ..groups.permutation import Permutation
from ..groups.subgroups import Subgroup, subgroup_generated
from ..schemas import SuiteOptions, VerificationOutcome
from .frobenius import quasi_frobenius_data

DEFAULT_OPTIONS = SuiteOptions()


@dataclass(frozen=True)
class PairContext:
    """Class data and graph of one (G, N) pair, computed once and shared by all checks."""

    group: FiniteGroup
    normal: Subgroup
    cd: ClassData
    graph: CDGraph

    def describe(self, x: int) -> str:
        element = self.group.element(x)
        return str(element) if isinstance(element, Permutation) else f"#{x}"


def analyze_pair(group: FiniteGroup, normal: Subgroup) -> PairContext:
    cd = g_classes(group, normal)
    return PairContext(group=group, normal=normal, cd=cd, graph=build_graph(cd.vertex_sizes))


def group_graph(group: FiniteGroup) -> CDGraph:
    """Γ(G): the graph on the ordinary class sizes of G other than 1."""
    return build_graph(group_classes(group).vertex_sizes)


@dataclass(frozen=True)
class CrossPrimeScenario:
    """Commuting noncentral p1-element x0 and p2-element y0 with their class sizes."""

    p1: int
    p2: int
    x0: int
    y0: int
    v0: int
    w0: int
    z0: int

    def as_witness(self, ctx: PairContext) -> Dict[str, Any]:
        return {
            "p1": self.p1,
            "p2": self.p2,
            "x0": ctx.describe(self.x0),
            "y0": ctx.describe(self.y0),
            "v0": self.v0,
            "w0": self.w0,
            "z0": self.z0,
        }


def _outcome(
    statement: StatementId, status: OutcomeStatus, notes: str = "", **witness: Any
) -> VerificationOutcome:
    return VerificationOutcome(statement_id=statement, status=status, witness=witness, notes=notes)


def _is_complete(graph: CDGraph, options: SuiteOptions) -> bool:
    return graph.is_complete() != options.flip_completeness


def _main_hypothesis_failure(graph: CDGraph, options: SuiteOptions) -> Optional[str]:
    """Reason the graph is not connected, incomplete and regular, or None."""
    if not graph.vertices:
        return "graph is empty"
    if not graph.is_connected():
        return f"graph has {graph.component_count()} components"
    if _is_complete(graph, options):
        return "graph is complete"
    if not graph.is_regular():
        return "graph is not regular"
    return None


def _scenarios(ctx: PairContext) -> Iterator[CrossPrimeScenario]:
    """Every commuting pair of noncentral p1- and p2-elements, p1 < p2 dividing |N/(N∩Z(G))|."""
    cd = ctx.cd
    for p1, p2 in combinations(prime_divisors(cd.quotient_order), 2):
        for x0, y0 in cross_prime_pairs(cd, p1, p2):
            yield CrossPrimeScenario(
                p1=p1,
                p2=p2,
                x0=x0,
                y0=y0,
                v0=cd.class_size(x0),
                w0=cd.class_size(y0),
                z0=cd.class_size(ctx.group.mul(x0, y0)),
            )


def _graph_witness(graph: CDGraph) -> Dict[str, Any]:
    return {"vertices": list(graph.vertices), "degrees": list(graph.degrees)}


# ---------------------------------------------------------
# Element powers
# ---------------------------------------------------------


def check_element_power_lemma(
    ctx: PairContext, options: SuiteOptions = DEFAULT_OPTIONS
) -> VerificationOutcome:
    """For a regular graph, |(x^a)^G| equals |x^G| or the two sizes are partners."""
    statement = StatementId.ElementPowerLemma
    cd, graph, group = ctx.cd, ctx.graph, ctx.group
    if not graph.is_regular():
        return _outcome(statement, OutcomeStatus.vacuous, "graph is not regular")
    noncentral = sorted(noncentral_elements(cd))
    if not noncentral:
        return _outcome(statement, OutcomeStatus.vacuous, "no noncentral elements")

    checked = 0
    for x in noncentral:
        vx = cd.class_size(x)
        y = x
        for a in range(1, int(group.element_orders[x])):
            if y not in cd.n_cap_zg:
                vy = cd.class_size(y)
                checked += 1
                if vy != vx and not graph.are_partners(vx, vy):
                    return _outcome(
                        statement,
                        OutcomeStatus.violated,
                        f"|x^G|={vx} and |(x^{a})^G|={vy} differ and are not partners",
                        x=ctx.describe(x),
                        a=a,
                        size_x=vx,
                        size_power=vy,
                        neighborhood_x=sorted(graph.closed_neighborhood(vx)),
                        neighborhood_power=sorted(graph.closed_neighborhood(vy)),
                    )
            y = group.mul(y, x)

    return _outcome(
        statement,
        OutcomeStatus.holds,
        f"{checked} noncentral powers checked",
        elements=len(noncentral),
        powers_checked=checked,
        **_graph_witness(graph),
    )


# ---------------------------------------------------------
# Commuting cross-prime pairs
# ---------------------------------------------------------


def _first_realized(cd: ClassData, elements) -> Dict[int, int]:
    """Least element realizing each class size."""
    realized: Dict[int, int] = {}
    for x in sorted(elements):
        realized.setdefault(cd.class_size(x), x)
    return realized


def check_lemma_key(
    ctx: PairContext, options: SuiteOptions = DEFAULT_OPTIONS
) -> Tuple[VerificationOutcome, VerificationOutcome]:
    """Both parts of the commuting-pair lemma; returns the (a) outcome and the (b) outcome."""
    stmt_a, stmt_b = StatementId.LemmaKeyA, StatementId.LemmaKeyB
    cd, graph = ctx.cd, ctx.graph

    failure = _main_hypothesis_failure(graph, options)
    if failure is not None:
        return (
            _outcome(stmt_a, OutcomeStatus.vacuous, failure),
            _outcome(stmt_b, OutcomeStatus.vacuous, failure),
        )

    scenarios = list(_scenarios(ctx))
    if not scenarios:
        note = "no commuting noncentral cross-prime pair"
        return (
            _outcome(stmt_a, OutcomeStatus.vacuous, note),
            _outcome(stmt_b, OutcomeStatus.vacuous, note),
        )

    realized: Dict[int, Dict[int, int]] = {}
    outcome_a: Optional[VerificationOutcome] = None
    outcome_b: Optional[VerificationOutcome] = None

    for sc in scenarios:
        p1, p2 = sc.p1, sc.p2
        if outcome_b is None and (sc.v0 % p2 or sc.w0 % p1 or sc.z0 % (p1 * p2)):
            outcome_b = _outcome(
                stmt_b,
                OutcomeStatus.violated,
                "expected p2 | v0, p1 | w0 and p1*p2 | z0",
                **sc.as_witness(ctx),
            )

        if outcome_a is not None:
            continue
        for p in (p1, p2):
            if p not in realized:
                realized[p] = _first_realized(cd, p_elements(cd, p, noncentral_only=True))

        if sc.z0 not in graph:
            outcome_a = _outcome(
                stmt_a,
                OutcomeStatus.violated,
                "z0 is not a vertex of the graph",
                **sc.as_witness(ctx),
            )
            continue

        neighborhood = graph.closed_neighborhood(sc.z0)
        vs = [v for v in sorted(realized[p1]) if v in neighborhood and math.gcd(v, p1 * p2) == p2]
        ws = [w for w in sorted(realized[p2]) if w in neighborhood and math.gcd(w, p1 * p2) == p1]
        found = next(((v, w) for v in vs for w in ws if not graph.is_adjacent(v, w)), None)
        if found is None:
            outcome_a = _outcome(
                stmt_a,
                OutcomeStatus.violated,
                "no non-adjacent v1, w1 in the closed neighborhood of z0",
                neighborhood=sorted(neighborhood),
                candidates_v1=vs,
                candidates_w1=ws,
                **sc.as_witness(ctx),
            )

    first = scenarios[0]
    witness = first.as_witness(ctx)
    if outcome_a is None:
        outcome_a = _outcome(
            stmt_a, OutcomeStatus.holds, f"{len(scenarios)} scenarios", scenarios=len(scenarios), **witness
        )
    if outcome_b is None:
        outcome_b = _outcome(
            stmt_b, OutcomeStatus.holds, f"{len(scenarios)} scenarios", scenarios=len(scenarios), **witness
        )
    return outcome_a, outcome_b


def check_theorem_two_primes(
    ctx: PairContext, options: SuiteOptions = DEFAULT_OPTIONS
) -> VerificationOutcome:
    """A connected regular graph with a commuting noncentral cross-prime pair is complete."""
    statement = StatementId.TheoremTwoPrimes
    graph = ctx.graph
    if not graph.vertices:
        return _outcome(statement, OutcomeStatus.vacuous, "graph is empty")
    if not graph.is_connected():
        return _outcome(
            statement, OutcomeStatus.vacuous, f"graph has {graph.component_count()} components"
        )
    if not graph.is_regular():
        return _outcome(statement, OutcomeStatus.vacuous, "graph is not regular")

    scenario = next(_scenarios(ctx), None)
    if scenario is None:
        return _outcome(
            statement, OutcomeStatus.vacuous, "no commuting noncentral cross-prime pair"
        )

    witness = {**scenario.as_witness(ctx), **_graph_witness(graph)}
    if _is_complete(graph, options):
        return _outcome(statement, OutcomeStatus.holds, "graph is complete", **witness)
    return _outcome(
        statement, OutcomeStatus.violated, "hypothesis holds but graph is not complete", **witness
    )


# ---------------------------------------------------------
# Main theorem
# ---------------------------------------------------------


def _main_conclusions(ctx: PairContext) -> Tuple[Optional[int], bool, Dict[str, Any]]:
    cd = ctx.cd
    prime = as_prime(is_prime_power(cd.quotient_order))
    centers_differ = cd.zn_members != cd.n_cap_zg
    witness = {
        "quotient_order": cd.quotient_order,
        "prime": prime,
        "center_of_normal_order": len(cd.zn_members),
        "center_intersection_order": len(cd.n_cap_zg),
        "cs_values": list(cd.cs_values),
    }
    return prime, centers_differ, witness


def _guard_failure(statement: StatementId, graph: CDGraph) -> Optional[VerificationOutcome]:
    """Connected and incomplete forces at least three vertices."""
    if len(graph.vertices) >= 3:
        return None
    return _outcome(
        statement,
        OutcomeStatus.violated,
        f"connected incomplete graph with only {len(graph.vertices)} vertices",
        guard="connected and incomplete implies at least 3 vertices",
        **_graph_witness(graph),
    )


def check_main_theorem(
    ctx: PairContext, options: SuiteOptions = DEFAULT_OPTIONS
) -> VerificationOutcome:
    """Connected incomplete regular graph: N/(N∩Z(G)) is a p-group and Z(N) != N∩Z(G)."""
    statement = StatementId.MainTheorem
    failure = _main_hypothesis_failure(ctx.graph, options)
    if failure is not None:
        return _outcome(statement, OutcomeStatus.vacuous, failure)
    guard = _guard_failure(statement, ctx.graph)
    if guard is not None:
        return guard

    prime, centers_differ, witness = _main_conclusions(ctx)
    witness.update(_graph_witness(ctx.graph))
    problems = []
    if prime is None:
        problems.append(f"|N/(N∩Z(G))| = {ctx.cd.quotient_order} is not a prime power")
    if not centers_differ:
        problems.append("Z(N) equals N∩Z(G)")
    if problems:
        return _outcome(statement, OutcomeStatus.violated, "; ".join(problems), **witness)
    return _outcome(statement, OutcomeStatus.holds, f"N/(N∩Z(G)) is a {prime}-group", **witness)


def check_main_theorem_decomposition(
    ctx: PairContext, options: SuiteOptions = DEFAULT_OPTIONS
) -> VerificationOutcome:
    """N is the internal direct product of its p-part P and a central p'-part A."""
    statement = StatementId.MainTheoremDecomposition
    cd, group = ctx.cd, ctx.group
    failure = _main_hypothesis_failure(ctx.graph, options)
    if failure is not None:
        return _outcome(statement, OutcomeStatus.vacuous, failure)
    if len(ctx.graph.vertices) < 3:
        return _outcome(statement, OutcomeStatus.vacuous, "hypothesis guard failed")
    prime = as_prime(is_prime_power(cd.quotient_order))
    if prime is None:
        return _outcome(statement, OutcomeStatus.vacuous, "N/(N∩Z(G)) is not a p-group")

    orders = group.element_orders
    p_part = subgroup_generated(group, p_elements(cd, prime))
    p_prime_part = subgroup_generated(
        group, (x for x in cd.normal.members if int(orders[x]) % prime)
    )

    problems = []
    if not is_p_power(p_part.order, prime):
        problems.append(f"|P| = {p_part.order} is not a power of {prime}")
    if not p_prime_part.members <= cd.zg.members:
        problems.append("A is not central in G")
    if p_part.members & p_prime_part.members != {group.identity_index}:
        problems.append("P and A intersect nontrivially")
    if p_part.order * p_prime_part.order != cd.normal.order:
        problems.append(f"|P|*|A| = {p_part.order * p_prime_part.order} != |N|")
    products = {group.mul(a, b) for a in p_part.members for b in p_prime_part.members}
    if products != cd.normal.members:
        problems.append("N is not the product PA")

    witness = {"prime": prime, "order_P": p_part.order, "order_A": p_prime_part.order}
    if problems:
        return _outcome(statement, OutcomeStatus.violated, "; ".join(problems), **witness)
    return _outcome(statement, OutcomeStatus.holds, "N = P x A with A central", **witness)


# ---------------------------------------------------------
# Two components
# ---------------------------------------------------------


def check_two_component_characterization(group: FiniteGroup) -> VerificationOutcome:
    """n(Γ(N)) = 2 exactly when N is quasi-Frobenius with abelian kernel and complement."""
    statement = StatementId.TwoComponentCharacterization
    cd = group_classes(group)
    graph = build_graph(cd.vertex_sizes)
    two_components = graph.component_count() == 2
    data = quasi_frobenius_data(group)
    quasi_frobenius = data is not None and data.abelian_kernel_and_complement

    witness: Dict[str, Any] = {
        "cs_values": list(cd.cs_values),
        "component_count": graph.component_count(),
        "quasi_frobenius_abelian": quasi_frobenius,
    }
    if data is not None:
        witness["kernel_order"] = data.frobenius.kernel.order
        witness["kernel_preimage_abelian"] = data.kernel_preimage_abelian
        witness["complement_abelian"] = data.frobenius.quotient_abelian

    if two_components == quasi_frobenius:
        return _outcome(statement, OutcomeStatus.holds, "both sides agree", **witness)
    direction = (
        "two components but not quasi-Frobenius with abelian kernel and complement"
        if two_components
        else "quasi-Frobenius with abelian kernel and complement but not two components"
    )
    return _outcome(statement, OutcomeStatus.violated, direction, **witness)


def theorem_b_warnings(graph: CDGraph) -> List[str]:
    """A regular disconnected graph should be two complete components."""
    if graph.is_connected() or not graph.is_regular():
        return []
    problems = []
    if graph.component_count() != 2:
        problems.append(f"regular disconnected graph has {graph.component_count()} components")
    for block in graph.component_vertices():
        if any(not graph.is_adjacent(v, w) for v, w in combinations(block, 2)):
            problems.append(f"component {list(block)} of a regular disconnected graph is incomplete")
    return problems
