from typing import Any, Dict, FrozenSet, List, Optional

from pydantic import BaseModel, ConfigDict, Field

from .enums import OutcomeStatus, StatementId


class VerificationOutcome(BaseModel):
    """Verdict of one statement on one (G, N) pair."""

    model_config = ConfigDict(frozen=True)

    statement_id: StatementId = Field(..., description="Statement that was checked")
    status: OutcomeStatus = Field(..., description="vacuous, holds or violated")
    witness: Dict[str, Any] = Field(
        default_factory=dict,
        description="Data realizing the hypothesis, or a re-checkable violation certificate",
    )
    notes: str = Field("", description="Free-text explanation")


class SuiteOptions(BaseModel):
    """Parameters for a suite run."""

    model_config = ConfigDict(frozen=True)

    statements: FrozenSet[StatementId] = Field(
        default_factory=lambda: frozenset(StatementId), description="Statements to evaluate"
    )
    flip_completeness: bool = Field(
        False, description="Fault injection: negate the completeness predicate inside checks"
    )
    theorem_b_sanity: bool = Field(
        True, description="Warn when a regular disconnected graph is not two complete components"
    )


class GraphSummary(BaseModel):
    vertices: List[int] = Field(..., description="Distinct class sizes greater than 1")
    edges: List[List[int]] = Field(..., description="Adjacent pairs (v, w) with v < w")
    degrees: List[int] = Field(..., description="Degree of each vertex, aligned with vertices")
    components: List[List[int]] = Field(..., description="Connected components as vertex lists")
    component_count: int
    regular: bool
    regular_degree: Optional[int] = Field(None, description="k when the graph is k-regular")
    complete: bool
    connected: bool


class PairRecord(BaseModel):
    """Everything computed for one (G, N) pair."""

    group_name: str
    subgroup_descriptor: str
    group_order: int
    normal_order: int
    center_intersection_order: Optional[int] = Field(None, description="|N ∩ Z(G)|")
    center_of_normal_order: Optional[int] = Field(None, description="|Z(N)|")
    cs_values: List[int] = Field(default_factory=list, description="cs_G(N), including 1")
    graph: Optional[GraphSummary] = None
    outcomes: List[VerificationOutcome] = Field(default_factory=list)
    warnings: List[str] = Field(default_factory=list)
    error: Optional[str] = Field(None, description="Resource error that stopped this pair")


class SuiteReport(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = Field(1, alias="schema", description="Report schema version")
    tool_version: str
    max_order: Optional[int] = None
    statements: List[StatementId] = Field(default_factory=list)
    fault_injection: bool = False
    records: List[PairRecord] = Field(default_factory=list)
    counts: Dict[StatementId, Dict[OutcomeStatus, int]] = Field(default_factory=dict)
    violations: int = 0
    consistency_failures: List[str] = Field(default_factory=list)
    errors: int = 0
    warnings: int = 0


class SearchHit(BaseModel):
    """A pair whose graph is connected, incomplete and regular."""

    group_name: str
    subgroup_descriptor: str
    group_order: int
    normal_order: int
    cs_values: List[int]
    prime: Optional[int] = Field(None, description="p when N/(N ∩ Z(G)) is a p-group")
    main_theorem: VerificationOutcome
    decomposition: VerificationOutcome
