"""
Error Model Module

Digital error-model fidelity prediction, patch ratios, sweeps and quantum runtime.

Classes:
    ErrorBudget: Per-component log-fidelity terms
    SweepRow: Full and patched predictions at one cycle count
    CampaignRuntime: Sampling time with interleaved probes

Functions:
    predict_fidelity: Product of (1 - e) over every operation
    patch_ratio: F(patched) / F(full)
    fidelity_sweep: Predictions over cycle counts
    estimate_quantum_runtime: N * sampling interval
    campaign_runtime: Main plus probe sampling time
"""

from .predict import COMPONENTS, Component, Readout, BudgetTerm, ErrorBudget, predict_fidelity, patch_ratio
from .report  import budget_document, budget_table
from .runtime import (PROBE_EVERY, PROBE_SHOTS, OBSERVED_CAMPAIGN_HOURS, CampaignRuntime, estimate_quantum_runtime,
                      campaign_runtime)
from .sweep   import SweepRow, fidelity_sweep, mean_ratio, write_sweep_csv

__all__ = [
    "COMPONENTS", "Component", "Readout", "BudgetTerm", "ErrorBudget", "predict_fidelity", "patch_ratio",
    "budget_document", "budget_table",
    "PROBE_EVERY", "PROBE_SHOTS", "OBSERVED_CAMPAIGN_HOURS", "CampaignRuntime", "estimate_quantum_runtime",
    "campaign_runtime",
    "SweepRow", "fidelity_sweep", "mean_ratio", "write_sweep_csv",
]
