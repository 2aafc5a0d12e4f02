"""
Cost Estimation Module

Tensor networks of circuits, contraction planning under a memory constraint, exact contraction
and runtime reports on a reference machine.

Classes:
    TensorNetwork: Tensors with index labels
    ContractionPlan: Pairwise order and sliced indices
    CostReport: FLOPs, memory and runtime
    MachineModel: Peak, efficiency and conversion factors
    Benchmark: Reference experiment

Functions:
    build_network: Network of a circuit
    optimize_order: Greedy plan with restarts, rotations and slicing
    contract: Exact value of a network
    report_cost: Cost report of a plan
    benchmark_report: Reference figures with optional proxy plans
"""

from .network    import NetworkTensor, TensorNetwork, build_network
from .plan       import PlanStats, ContractionPlan, replay, plan_document, load_plan
from .optimizer  import optimize_order
from .contract   import contract
from .report     import (SAMPLING_MODEL, MachineModel, CostReport, report_cost, convert_runtime, format_duration,
                         parse_memory, report_document)
from .benchmarks import (PETABYTE, ReferenceCell, Benchmark, BenchmarkRow, parse_runtime, load_benchmarks,
                         benchmark_report, benchmark_table, benchmark_document)

__all__ = [
    "NetworkTensor", "TensorNetwork", "build_network",
    "PlanStats", "ContractionPlan", "replay", "plan_document", "load_plan",
    "optimize_order",
    "contract",
    "SAMPLING_MODEL", "MachineModel", "CostReport", "report_cost", "convert_runtime", "format_duration",
    "parse_memory", "report_document",
    "PETABYTE", "ReferenceCell", "Benchmark", "BenchmarkRow", "parse_runtime", "load_benchmarks",
    "benchmark_report", "benchmark_table", "benchmark_document",
]
