"""
Contraction Plans

A plan is a pairwise contraction order over a network's tensors plus a set of sliced indices.
Steps use single-assignment ids: tensors are 0..T-1 and step k creates tensor T+k.

Accounting, with every bond of dimension 2 and sliced indices removed:
    step cost       2 ** |union of the two operands' indices|   (scalar multiply-adds)
    step size       2 ** |symmetric difference|                 (entries of the result)
    total cost      2 ** |sliced| * sum of step costs

Classes:
    PlanStats: Costs and sizes recounted from a network
    ContractionPlan: Steps, slices and the optimizer's accounting

Functions:
    replay: Recount a plan against a network
    plan_document: JSON form of a plan
    load_plan: Plan from its JSON form
"""

# -----------------------------------------------------------------------------
# Standard Libraries
# -----------------------------------------------------------------------------
from typing     import Any, Literal, Optional

# -----------------------------------------------------------------------------
# Third-Party Libraries
# -----------------------------------------------------------------------------
from attrs      import frozen, field
from pydantic   import BaseModel, ConfigDict, Field

# -----------------------------------------------------------------------------
# Local Libraries
# -----------------------------------------------------------------------------
from ..common.documents import SCHEMA_VERSION, validate_model
from ..common.errors    import ValidationError
from .network           import TensorNetwork

__all__ = [
    "PlanStats",
    "ContractionPlan",
    "replay",
    "plan_document",
    "load_plan",
]

Step = tuple[int, int]


@frozen
class PlanStats:
    step_costs:     tuple[int, ...]
    step_sizes:     tuple[int, ...]
    max_entries:    int
    n_slices:       int

    @property
    def cost_per_slice(self) -> int:
        return sum(self.step_costs)

    @property
    def total_cost(self) -> int:
        return self.n_slices * self.cost_per_slice


def _steps(value) -> tuple[Step, ...]:
    return tuple((int(a), int(b)) for a, b in value)


@frozen
class ContractionPlan:
    """
    Attributes:
        n_tensors: Tensor count of the network the plan was built for
        steps: Pairwise contractions in execution order
        sliced: Sliced indices, sorted
        slice_groups: Indices added per slicing round, in round order
        step_costs: Per-step cost under slicing, as the optimizer counted it
        max_entries: Largest tensor (inputs included) under slicing
        seed: Optimizer seed
        restarts: Restarts tried
        restart: Restart that produced the plan
        memory_limit: Memory constraint in bytes, or None
        bytes_per_entry: Bytes per complex entry for memory accounting
    """

    n_tensors:          int
    steps:              tuple[Step, ...]            = field(converter=_steps)
    sliced:             tuple[int, ...]             = field(default=(), converter=lambda v: tuple(sorted(v)))
    slice_groups:       tuple[tuple[int, ...], ...] = field(default=(), converter=lambda v: tuple(tuple(g) for g in v))
    step_costs:         tuple[int, ...]             = field(default=(), converter=tuple)
    max_entries:        int                         = 0
    seed:               int                         = 0
    restarts:           int                         = 1
    restart:            int                         = 0
    memory_limit:       Optional[float]             = None
    bytes_per_entry:    int                         = 8

    @property
    def n_slices(self) -> int:
        return 1 << len(self.sliced)

    @property
    def cost_per_slice(self) -> int:
        return sum(self.step_costs)

    @property
    def complex_flops(self) -> int:
        """Scalar multiply-adds for one full contraction, all slices."""
        return self.n_slices * self.cost_per_slice

    @property
    def max_intermediate_bytes(self) -> int:
        return self.max_entries * self.bytes_per_entry


def replay(network: TensorNetwork, steps: tuple[Step, ...], sliced: tuple[int, ...] = ()) -> PlanStats:
    """
    Recount a plan from the network's index lists.

    Raises:
        ValidationError: If a step refers to a missing or consumed tensor, a sliced index is not a
            contracted index, or the plan does not end with a single tensor.
    """
    cut = frozenset(sliced)
    if not cut <= {index for index, count in network.degree.items() if count == 2}:
        raise ValidationError("plan slices an index that is not contracted in this network")

    live: dict[int, frozenset[int]] = {i: frozenset(t.indices) for i, t in enumerate(network.tensors)}
    max_entries = max(2 ** len(indices - cut) for indices in live.values())
    costs, sizes = [], []
    for k, (a, b) in enumerate(steps):
        if a == b or a not in live or b not in live:
            raise ValidationError(f"plan step {k} contracts ({a}, {b}), which are not two live tensors of this network")
        left, right = live.pop(a), live.pop(b)
        result      = left ^ right
        costs.append(2 ** len((left | right) - cut))
        sizes.append(2 ** len(result - cut))
        max_entries = max(max_entries, sizes[-1])
        live[len(network.tensors) + k] = result
    if len(live) != 1:
        raise ValidationError(f"plan leaves {len(live)} tensors uncontracted")
    return PlanStats(tuple(costs), tuple(sizes), max_entries, 2 ** len(cut))


# -----------------------------------------------------------------------------
# Documents
# -----------------------------------------------------------------------------
class _PlanModel(BaseModel):
    model_config = ConfigDict(extra="allow")

    schema_version:     Literal[1]
    kind:               Literal["plan"]
    n_tensors:          int                         = Field(ge=1)
    steps:              list[tuple[int, int]]
    sliced:             list[int]                   = []
    slice_groups:       list[list[int]]             = []
    step_costs:         list[int]
    max_entries:        int                         = Field(ge=1)
    seed:               int                         = Field(ge=0)
    restarts:           int                         = Field(ge=1)
    restart:            int                         = Field(ge=0)
    memory_limit:       Optional[float]             = Field(default=None, gt=0)
    bytes_per_entry:    int                         = Field(default=8, ge=1)


def plan_document(plan: ContractionPlan, **extra: Any) -> dict[str, Any]:
    return {
        **extra,
        "schema_version":   SCHEMA_VERSION,
        "kind":             "plan",
        "n_tensors":        plan.n_tensors,
        "steps":            [list(step) for step in plan.steps],
        "sliced":           list(plan.sliced),
        "slice_groups":     [list(group) for group in plan.slice_groups],
        "step_costs":       list(plan.step_costs),
        "max_entries":      plan.max_entries,
        "complex_flops":    plan.complex_flops,
        "seed":             plan.seed,
        "restarts":         plan.restarts,
        "restart":          plan.restart,
        "memory_limit":     plan.memory_limit,
        "bytes_per_entry":  plan.bytes_per_entry,
    }


def load_plan(document: dict[str, Any], source: Optional[str] = None) -> ContractionPlan:
    model = validate_model(_PlanModel, document, source)
    if len(model.step_costs) != len(model.steps):
        raise ValidationError(f"{source or 'plan'}: one step cost per step is required")
    return ContractionPlan(
        n_tensors       = model.n_tensors,
        steps           = model.steps,
        sliced          = model.sliced,
        slice_groups    = model.slice_groups,
        step_costs      = model.step_costs,
        max_entries     = model.max_entries,
        seed            = model.seed,
        restarts        = model.restarts,
        restart         = model.restart,
        memory_limit    = model.memory_limit,
        bytes_per_entry = model.bytes_per_entry,
    )
