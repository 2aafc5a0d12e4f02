"""
XEB Module

Fidelity estimators, distribution diagnostics and the probe stability monitor.

Classes:
    FidelityEstimate: Value, stderr, N and method
    StabilityReport: Band check of a probe series

Functions:
    linear_xeb: D * mean(p) - 1
    porter_thomas_test: KS distance from Exp(1)
    speckle_purity: Fidelity from output-distribution variance
    stability_check: +/- band monitor
"""

from .estimators import (Method, FidelityEstimate, linear_xeb, linear_xeb_from_probabilities, ideal_xeb,
                         porter_thomas_test, speckle_purity, estimate_document, load_estimate)
from .monitor    import (PROBE_SPACING_HOURS, StabilityPoint, StabilityReport, stability_check, probe_schedule,
                         read_series_csv, write_series_csv, write_band_csv)

__all__ = [
    "Method", "FidelityEstimate", "linear_xeb", "linear_xeb_from_probabilities", "ideal_xeb",
    "porter_thomas_test", "speckle_purity", "estimate_document", "load_estimate",
    "PROBE_SPACING_HOURS", "StabilityPoint", "StabilityReport", "stability_check", "probe_schedule",
    "read_series_csv", "write_series_csv", "write_band_csv",
]
