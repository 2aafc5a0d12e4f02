"""
Fidelity Estimators

Linear cross-entropy benchmarking, the speckle-purity proxy and the Porter-Thomas diagnostic.

For n qubits and D = 2**n, the linear XEB of N measured bitstrings with ideal probabilities p(x_i)
is D * mean(p(x_i)) - 1. Drawn from p_ideal it converges to D * sum(p**2) - 1, which is 1 for a
scrambled circuit; drawn uniformly it converges to 0.

Classes:
    FidelityEstimate: Value, error bar, sample count and method

Functions:
    linear_xeb: Linear XEB of a SampleSet
    linear_xeb_from_probabilities: Linear XEB of attached probabilities
    ideal_xeb: D * sum(p**2) - 1, the XEB an ideal sampler converges to
    porter_thomas_test: KS distance of D * p from Exp(1)
    speckle_purity: sqrt(D**2 * Var(p))
    estimate_document: JSON record of an estimate
    load_estimate: Estimate from a JSON record
"""

# -----------------------------------------------------------------------------
# Standard Libraries
# -----------------------------------------------------------------------------
import math
from typing     import Any, Literal, Optional

# -----------------------------------------------------------------------------
# Third-Party Libraries
# -----------------------------------------------------------------------------
import numpy as np
from attrs      import frozen, field
from pydantic   import BaseModel, ConfigDict, Field
from scipy      import stats

# -----------------------------------------------------------------------------
# Local Libraries
# -----------------------------------------------------------------------------
from ..common.documents     import SCHEMA_VERSION, validate_model
from ..common.errors        import ValidationError
from ..logger               import debug
from ..simulator.sampling   import SampleSet

__all__ = [
    "Method",
    "FidelityEstimate",
    "linear_xeb",
    "linear_xeb_from_probabilities",
    "ideal_xeb",
    "porter_thomas_test",
    "speckle_purity",
    "estimate_document",
    "load_estimate",
]

Method = Literal["linear_xeb", "speckle_purity", "error_model"]

_SUM_TOLERANCE = 1e-6


def _nonnegative(instance, attribute, value) -> None:
    if not value >= 0:
        raise ValidationError(f"{attribute.name} must be nonnegative, got {value!r}")


def _at_least_one(instance, attribute, value) -> None:
    if value < 1:
        raise ValidationError(f"{attribute.name} must be at least 1, got {value!r}")


@frozen
class FidelityEstimate:
    """
    Attributes:
        value: Estimated fidelity (may be slightly negative for XEB)
        stderr: One-sigma error bar
        shots: Number of samples (or probability entries) behind the estimate
        method: linear_xeb, speckle_purity or error_model
    """

    value:  float   = field(converter=float)
    stderr: float   = field(converter=float, validator=_nonnegative)
    shots:  int     = field(converter=int, validator=_at_least_one)
    method: Method  = "linear_xeb"

    def __str__(self) -> str:
        return f"{self.value:.6g} +/- {self.stderr:.2g} ({self.method}, N={self.shots})"


# -----------------------------------------------------------------------------
# Linear XEB
# -----------------------------------------------------------------------------
def linear_xeb_from_probabilities(probabilities: np.ndarray, n: int) -> FidelityEstimate:
    """
    D * mean(p) - 1 with stderr 1/sqrt(N).

    The error bar is the leading term for small fidelities; near f = 1 the true spread is larger.

    Raises:
        ValidationError: On an empty vector or entries outside [0, 1].
    """
    p = np.asarray(probabilities, dtype=np.float64)
    if p.ndim != 1 or len(p) == 0:
        raise ValidationError("linear XEB needs at least one probability")
    if not np.all((p >= 0) & (p <= 1)):
        raise ValidationError("attached probabilities must lie in [0, 1]")
    shots = len(p)
    value = math.ldexp(float(np.mean(p)), n) - 1.0
    return FidelityEstimate(value, 1.0 / math.sqrt(shots), shots, "linear_xeb")


def linear_xeb(samples: SampleSet, n: Optional[int] = None) -> FidelityEstimate:
    """
    Linear XEB of measured bitstrings.

    Args:
        samples: Samples with ideal probabilities attached
        n: Qubit count; must agree with the samples when given

    Raises:
        ValidationError: If probabilities are missing or n disagrees.
    """
    if samples.probabilities is None:
        raise ValidationError("linear XEB needs the ideal probability of every sample; rerun sampling with probabilities")
    if n is not None and n != samples.n:
        raise ValidationError(f"samples are over {samples.n} qubits, not {n}")
    estimate = linear_xeb_from_probabilities(samples.probabilities, samples.n)
    debug(f"linear XEB over {estimate.shots} samples: {estimate}")
    return estimate


def ideal_xeb(probabilities: np.ndarray) -> float:
    """D * sum(p**2) - 1 for a full distribution."""
    p = np.asarray(probabilities, dtype=np.float64)
    return float(len(p) * np.dot(p, p) - 1.0)


# -----------------------------------------------------------------------------
# Distribution diagnostics
# -----------------------------------------------------------------------------
def _distribution(probabilities: np.ndarray, dimension: Optional[int]) -> tuple[np.ndarray, int]:
    p = np.asarray(probabilities, dtype=np.float64)
    if p.ndim != 1 or len(p) == 0:
        raise ValidationError("expected a non-empty probability vector")
    total = float(np.sum(p))
    if abs(total - 1.0) > _SUM_TOLERANCE:
        raise ValidationError(f"probabilities sum to {total!r}, not 1")
    return p, len(p) if dimension is None else int(dimension)


def porter_thomas_test(probabilities: np.ndarray, dimension: Optional[int] = None) -> float:
    """
    Kolmogorov-Smirnov distance between the empirical distribution of D * p and Exp(1).

    Args:
        probabilities: Output distribution
        dimension: D, the vector length when None

    Returns:
        The KS statistic in [0, 1]; small values mean Porter-Thomas statistics.
    """
    p, dimension = _distribution(probabilities, dimension)
    return float(stats.kstest(dimension * p, "expon").statistic)


def speckle_purity(probabilities: np.ndarray, dimension: Optional[int] = None) -> FidelityEstimate:
    """
    Fidelity proxy sqrt(D**2 * Var(p)) over all D entries.

    For p = f * p_PT + (1 - f) / D with p_PT Porter-Thomas this converges to f. The population
    variance is used, so a finite-D bias of order 1/D remains.
    """
    p, dimension = _distribution(probabilities, dimension)
    value = math.sqrt(max(0.0, float(dimension) ** 2 * float(np.var(p))))
    return FidelityEstimate(value, value * math.sqrt(2.0 / dimension), len(p), "speckle_purity")


# -----------------------------------------------------------------------------
# Documents
# -----------------------------------------------------------------------------
class _EstimateModel(BaseModel):
    model_config = ConfigDict(extra="allow", allow_inf_nan=False)

    schema_version: Literal[1]
    kind:           Literal["estimate"]
    value:          float
    stderr:         float   = Field(ge=0)
    shots:          int     = Field(ge=1)
    method:         Method


def estimate_document(estimate: FidelityEstimate, **extra: Any) -> dict[str, Any]:
    """Estimate record; keyword arguments are stored alongside (circuit_id, seed, ...)."""
    return {
        **extra,
        "schema_version":   SCHEMA_VERSION,
        "kind":             "estimate",
        "value":            estimate.value,
        "stderr":           estimate.stderr,
        "shots":            estimate.shots,
        "method":           estimate.method,
    }


def load_estimate(document: dict[str, Any], source: Optional[str] = None) -> FidelityEstimate:
    model = validate_model(_EstimateModel, document, source)
    return FidelityEstimate(model.value, model.stderr, model.shots, model.method)
