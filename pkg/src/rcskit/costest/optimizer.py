"""
Contraction Order Optimizer

Greedy pairwise ordering with randomized restarts, local subtree rotations and greedy slicing
under a memory constraint.

Each restart builds a binary contraction tree:

1. Greedy: repeatedly contract the pair of tensors sharing an index whose step cost is lowest,
   breaking ties by the smaller result. Restart 0 is the plain greedy; later restarts perturb the
   score with Gumbel noise drawn from the restart's own random stream. Disconnected pieces left
   at the end are joined smallest first.
2. Rotations: for every node (X, (B, C)) try ((X, B), C) and ((X, C), B) and keep a strictly
   cheaper variant. The node's index set is unchanged, so the rest of the tree is unaffected.
3. Slicing: while the largest tensor exceeds the constraint, pick a group of indices that hits
   every tensor of maximal size, choosing the index shared by most of them first. Each group
   strictly lowers the largest tensor.

Trees never depend on the memory constraint, so raising the constraint never raises the cost of
the best plan. The cheapest restart wins, ties going to the smaller largest tensor and then to the
earlier restart.

Index sets are Python int bitmasks throughout.

Functions:
    optimize_order: Best plan over the restarts
"""

# -----------------------------------------------------------------------------
# Standard Libraries
# -----------------------------------------------------------------------------
import heapq
import itertools
from collections        import Counter
from concurrent.futures import ThreadPoolExecutor
from typing             import Iterator, Optional

# -----------------------------------------------------------------------------
# Third-Party Libraries
# -----------------------------------------------------------------------------
import numpy as np

# -----------------------------------------------------------------------------
# Local Libraries
# -----------------------------------------------------------------------------
from ..common.errors            import InfeasibleError, ValidationError
from ..common.intervals         import POSITIVE, require_in
from ..common.rng               import Stream, check_seed, stream
from ..configurator.settings    import get_settings
from ..logger                   import debug, info
from .network                   import TensorNetwork
from .plan                      import ContractionPlan, replay

__all__ = ["optimize_order"]


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class _Tree:
    """Binary contraction tree; leaves are 0..n_leaves-1, internal nodes get the next free id."""

    def __init__(self, masks: list[int]):
        self.n_leaves = len(masks)
        self.masks    = list(masks)
        self.children: dict[int, tuple[int, int]] = {}

    def join(self, a: int, b: int) -> int:
        node = len(self.masks)
        self.masks.append(self.masks[a] ^ self.masks[b])
        self.children[node] = (a, b)
        return node

    @property
    def root(self) -> int:
        return len(self.masks) - 1

    def postorder(self) -> list[int]:
        order, stack = [], [(self.root, False)]
        while stack:
            node, expanded = stack.pop()
            if node not in self.children:
                continue
            if expanded:
                order.append(node)
            else:
                left, right = self.children[node]
                stack.extend(((node, True), (right, False), (left, False)))
        return order

    def step_cost(self, node: int, cut: int = 0) -> int:
        left, right = self.children[node]
        return 1 << ((self.masks[left] | self.masks[right]) & ~cut).bit_count()

    def cost(self, cut: int = 0) -> int:
        return sum(self.step_cost(node, cut) for node in self.children)

    def max_log_size(self, cut: int = 0) -> int:
        return max((mask & ~cut).bit_count() for mask in self.masks)


# -----------------------------------------------------------------------------
# Greedy
# -----------------------------------------------------------------------------
def _greedy(masks: list[int], rng: Optional[np.random.Generator], temperature: float) -> _Tree:
    tree    = _Tree(masks)
    active  = set(range(len(masks)))
    owners: dict[int, list[int]] = {}
    for i, mask in enumerate(masks):
        for index in _bits(mask):
            owners.setdefault(index, []).append(i)

    heap: list[tuple[float, int, int, int, int]] = []
    counter = itertools.count()

    def push(a: int, b: int) -> None:
        ma, mb = tree.masks[a], tree.masks[b]
        score  = float((ma | mb).bit_count())
        if rng is not None:
            score -= temperature * rng.gumbel()
        heapq.heappush(heap, (score, (ma ^ mb).bit_count(), next(counter), a, b))

    for a, b in sorted({tuple(sorted(pair)) for pair in owners.values() if len(pair) == 2}):
        push(a, b)

    while heap:
        *_, a, b = heapq.heappop(heap)
        if a not in active or b not in active:
            continue
        node = tree.join(a, b)
        active -= {a, b}
        active.add(node)
        neighbours = set()
        for index in _bits(tree.masks[node]):
            owners[index] = [node if t in (a, b) else t for t in owners[index]]
            neighbours.update(t for t in owners[index] if t != node)
        for other in sorted(neighbours):
            push(node, other)

    rest = [(tree.masks[i].bit_count(), i) for i in sorted(active)]
    heapq.heapify(rest)
    while len(rest) > 1:
        _, a = heapq.heappop(rest)
        _, b = heapq.heappop(rest)
        node = tree.join(a, b)
        heapq.heappush(rest, (tree.masks[node].bit_count(), node))
    return tree


# -----------------------------------------------------------------------------
# Rotations
# -----------------------------------------------------------------------------
def _pair_cost(x: int, y: int) -> int:
    return 1 << (x | y).bit_count()


def _rotate(tree: _Tree, passes: int) -> int:
    """Apply improving rotations; returns how many were applied."""
    applied = 0
    for _ in range(passes):
        improved = False
        for parent in sorted(tree.children):
            for side in (0, 1):
                x, inner = tree.children[parent][side], tree.children[parent][1 - side]
                if inner not in tree.children:
                    continue
                b, c = tree.children[inner]
                mx, mb, mc = tree.masks[x], tree.masks[b], tree.masks[c]
                current = _pair_cost(mb, mc) + _pair_cost(mx, mb ^ mc)
                keep_b  = _pair_cost(mx, mb) + _pair_cost(mx ^ mb, mc)
                keep_c  = _pair_cost(mx, mc) + _pair_cost(mx ^ mc, mb)
                if min(keep_b, keep_c) >= current:
                    continue
                joined, other = (b, c) if keep_b <= keep_c else (c, b)
                tree.children[inner]  = (x, joined)
                tree.masks[inner]     = mx ^ tree.masks[joined]
                tree.children[parent] = (inner, other)
                applied += 1
                improved = True
                break
        if not improved:
            break
    return applied


# -----------------------------------------------------------------------------
# Slicing
# -----------------------------------------------------------------------------
def _slice(tree: _Tree, closed: int, limit_entries: Optional[int]) -> tuple[int, list[tuple[int, ...]]]:
    """Sliced-index bitmask and the groups added per round."""
    cut, groups = 0, []
    if limit_entries is None:
        return cut, groups
    while (1 << (top := tree.max_log_size(cut))) > limit_entries:
        remaining = [mask for mask in tree.masks if (mask & ~cut).bit_count() == top]
        group     = []
        while remaining:
            counts = Counter(index for mask in remaining for index in _bits(mask & ~cut & closed))
            if not counts:
                raise InfeasibleError(f"a tensor of 2**{top} entries has only open indices and cannot be sliced "
                                      f"below {limit_entries} entries")
            index = min(counts, key=lambda ix: (-counts[ix], ix))
            group.append(index)
            cut |= 1 << index
            remaining = [mask for mask in remaining if not (mask >> index) & 1]
        groups.append(tuple(group))
    return cut, groups


# -----------------------------------------------------------------------------
# Driver
# -----------------------------------------------------------------------------
def _restart(masks:         list[int],
             closed:        int,
             seed:          int,
             restart:       int,
             temperature:   float,
             passes:        int,
             limit_entries: Optional[int]) -> tuple[int, int, int, _Tree, int, list[tuple[int, ...]]]:
    rng     = None if restart == 0 else stream(seed, Stream.ORDER, restart)
    tree    = _greedy(masks, rng, temperature)
    rotated = _rotate(tree, passes)
    cut, groups = _slice(tree, closed, limit_entries)
    total   = (1 << cut.bit_count()) * tree.cost(cut)
    debug(f"restart {restart}: cost {total:.3e} after {rotated} rotations, {cut.bit_count()} sliced indices")
    return total, tree.max_log_size(cut), restart, tree, cut, groups


def optimize_order(network:         TensorNetwork,
                   seed:            int,
                   restarts:        Optional[int] = None,
                   memory:          Optional[float] = None,
                   temperature:     Optional[float] = None,
                   rotation_passes: Optional[int] = None,
                   threads:         Optional[int] = None) -> ContractionPlan:
    """
    Find a contraction plan.

    Args:
        network: Network to plan
        seed: Seed for the randomized restarts
        restarts: Restarts to try, >= 1 (settings value when None)
        memory: Memory constraint in bytes, or None for unconstrained
        temperature: Gumbel noise scale of restarts after the first
        rotation_passes: Passes of subtree rotation per restart
        threads: Worker threads over restarts; the result does not depend on it

    Returns:
        The cheapest plan found.

    Raises:
        InfeasibleError: If the constraint is below the largest gate tensor, or an open tensor
            cannot be sliced below it.
    """
    settings    = get_settings()
    seed        = check_seed(seed)
    restarts    = settings.costest.restarts if restarts is None else restarts
    temperature = settings.costest.temperature if temperature is None else temperature
    passes      = settings.costest.rotation_passes if rotation_passes is None else rotation_passes
    threads     = settings.simulator.threads if threads is None else max(1, threads)
    per_entry   = settings.costest.bytes_per_entry
    if restarts < 1:
        raise ValidationError(f"restarts must be at least 1, got {restarts}")

    limit_entries = None
    if memory is not None:
        memory        = require_in("memory", memory, POSITIVE)
        limit_entries = int(memory // per_entry)
        if limit_entries < network.max_tensor_entries:
            raise InfeasibleError(f"memory constraint of {memory:g} bytes is below the largest gate tensor "
                                  f"({network.max_tensor_entries} entries of {per_entry} bytes)")

    masks, closed = network.masks(), network.closed_mask()
    with ThreadPoolExecutor(max_workers=threads) as pool:
        results = list(pool.map(lambda r: _restart(masks, closed, seed, r, temperature, passes, limit_entries),
                                range(restarts)))
    total, log_size, restart, tree, cut, groups = min(results, key=lambda result: result[:3])

    ssa   = {leaf: leaf for leaf in range(tree.n_leaves)}
    steps = []
    for node in tree.postorder():
        left, right = tree.children[node]
        ssa[node] = tree.n_leaves + len(steps)
        steps.append((ssa[left], ssa[right]))
    plan = ContractionPlan(
        n_tensors       = tree.n_leaves,
        steps           = tuple(steps),
        sliced          = tuple(_bits(cut)),
        slice_groups    = tuple(groups),
        step_costs      = tuple(tree.step_cost(node, cut) for node in tree.postorder()),
        max_entries     = 1 << log_size,
        seed            = seed,
        restarts        = restarts,
        restart         = restart,
        memory_limit    = memory,
        bytes_per_entry = per_entry,
    )
    replay(network, plan.steps, plan.sliced)
    info(f"plan: {plan.complex_flops:.3e} complex FLOPs, {plan.n_slices} slices, "
         f"max intermediate {plan.max_intermediate_bytes} bytes (restart {restart} of {restarts})")
    return plan
