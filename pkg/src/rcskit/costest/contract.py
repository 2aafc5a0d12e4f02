"""
Contraction

Exact execution of a plan in double precision: one pass of pairwise tensordots per slice
assignment, summed in slice order.

Functions:
    contract: Value of a network under a plan
"""

from concurrent.futures import ThreadPoolExecutor
from typing             import Optional

import numpy as np

from ..common.errors            import ValidationError
from ..configurator.settings    import get_settings
from ..logger                   import debug
from .network                   import TensorNetwork
from .plan                      import ContractionPlan, replay

__all__ = ["contract"]


def _contract_slice(network: TensorNetwork, plan: ContractionPlan, assignment: dict[int, int]) -> np.ndarray:
    arrays: list[Optional[np.ndarray]] = []
    labels: list[list[int]] = []
    for tensor in network.tensors:
        selector = tuple(assignment.get(index, slice(None)) for index in tensor.indices)
        arrays.append(tensor.data[selector])
        labels.append([index for index in tensor.indices if index not in assignment])

    for a, b in plan.steps:
        left, right = labels[a], labels[b]
        shared = [index for index in left if index in right]
        axes   = ([left.index(i) for i in shared], [right.index(i) for i in shared])
        arrays.append(np.tensordot(arrays[a], arrays[b], axes=axes))
        labels.append([i for i in left if i not in shared] + [i for i in right if i not in shared])
        arrays[a] = arrays[b] = None

    result, final = arrays[-1], labels[-1]
    if network.open_indices:
        result = result.transpose([final.index(index) for index in network.open_indices])
    return result


def contract(network: TensorNetwork, plan: ContractionPlan, threads: Optional[int] = None) -> complex | np.ndarray:
    """
    Contract a network.

    Args:
        network: Network the plan was built for
        plan: Contraction plan
        threads: Worker threads over slices; the result does not depend on it

    Returns:
        The amplitude when outputs are fixed, else an array with one axis per open output.

    Raises:
        ValidationError: If the plan does not fit the network.
    """
    if plan.n_tensors != len(network.tensors):
        raise ValidationError(f"plan is for {plan.n_tensors} tensors, network has {len(network.tensors)}")
    replay(network, plan.steps, plan.sliced)

    threads = get_settings().simulator.threads if threads is None else max(1, threads)
    width   = len(plan.sliced)

    def run(s: int) -> np.ndarray:
        assignment = {index: (s >> (width - 1 - j)) & 1 for j, index in enumerate(plan.sliced)}
        return _contract_slice(network, plan, assignment)

    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = list(pool.map(run, range(plan.n_slices)))

    total = parts[0]
    for part in parts[1:]:
        total = total + part
    debug(f"contracted {len(network.tensors)} tensors over {plan.n_slices} slices")
    return total if network.open_indices else complex(total)
