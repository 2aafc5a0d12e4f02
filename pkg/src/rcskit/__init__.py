"""
RCS Kit - Random circuit sampling pipeline

Circuit generation on a superconducting lattice, exact and noisy simulation, XEB-family
fidelity estimation, error-model prediction, patch verification and tensor-network cost
estimation.

Modules:
    device: Topology, patterns, subsets and device profiles
    circuits: Random circuits and patch cuts
    simulator: Statevectors and sampling
    xeb: Fidelity estimators and the stability monitor
    errormodel: Digital error model and runtime accounting
    costest: Contraction planning and cost reports
    cli: Command line front end
"""

__version__ = "0.1.0"
