"""
Budget Reports

JSON and aligned-text forms of an error budget.

Functions:
    budget_document: JSON record of a prediction and its budget
    budget_table: Aligned text table, one row per component
"""

from typing import Any

from ..common.documents import SCHEMA_VERSION
from ..xeb.estimators   import FidelityEstimate
from .predict           import ErrorBudget

__all__ = ["budget_document", "budget_table"]


def budget_document(estimate: FidelityEstimate, budget: ErrorBudget, **extra: Any) -> dict[str, Any]:
    return {
        **extra,
        "schema_version":   SCHEMA_VERSION,
        "kind":             "budget",
        "value":            estimate.value,
        "method":           estimate.method,
        "prep_factor":      budget.prep_factor,
        "terms": [
            {
                "kind":         term.kind,
                "count":        term.count,
                "mean_rate":    term.mean_rate,
                "log_fidelity": term.log_fidelity,
                "fidelity":     term.fidelity,
            }
            for term in budget.terms
        ],
    }


def budget_table(budget: ErrorBudget) -> str:
    """
    e.g.

        kind        count   mean rate   fidelity
        1q           2739   9.700e-04   7.0211e-02
        ...
        total                           3.2843e-04
    """
    lines = [f"{'kind':<10}{'count':>8}{'mean rate':>12}{'fidelity':>14}"]
    for term in budget.terms:
        lines.append(f"{term.kind:<10}{term.count:>8}{term.mean_rate:>12.3e}{term.fidelity:>14.4e}")
    if budget.prep_factor != 1.0:
        lines.append(f"{'prep':<10}{'':>8}{'':>12}{budget.prep_factor:>14.4e}")
    lines.append(f"{'total':<10}{'':>8}{'':>12}{budget.fidelity:>14.4e}")
    return "\n".join(lines)
