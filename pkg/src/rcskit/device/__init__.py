"""
Device Module

Processor topology, two-qubit gate patterns A..D, qubit subsets and device profiles.

Classes:
    QubitId: Lattice coordinates of a qubit
    DeviceTopology: Lattice, couplers and pattern labels
    QubitSubset: Active qubits of an experiment
    GateParameters: iSWAP-like gate angles
    DeviceProfile: Error rates, gate parameters and durations

Functions:
    build_topology: Diagonal-coupled lattice
    pattern_layer: Couplers of one pattern inside a subset
    validate_subset: Connectivity and membership checks
    rect_subset: Rectangular subset
    block_subset: Breadth-first subset
    load_profile: Profile from a document
    resolve_topology: Topology by name or path
    resolve_subset: Subset by name or path
    resolve_profile: Profile by name or path
    list_bundled: Available document names
"""

from .topology  import (LABELS, Coupler, QubitId, DeviceTopology, build_topology, load_topology,
                        topology_document, connected_component)
from .subset    import (QubitSubset, validate_subset, pattern_layer, full_subset, rect_subset, block_subset,
                        load_subset, subset_document)
from .profile   import (GateParameters, QubitRates, CouplerRates, Durations, DeviceProfile, load_profile,
                        profile_document)
from .bundled   import (DEFAULT_TOPOLOGY, DEFAULT_PROFILE, list_bundled, resolve_topology, resolve_subset,
                        resolve_profile)

__all__ = [
    "LABELS", "Coupler", "QubitId", "DeviceTopology", "build_topology", "load_topology",
    "topology_document", "connected_component",
    "QubitSubset", "validate_subset", "pattern_layer", "full_subset", "rect_subset", "block_subset",
    "load_subset", "subset_document",
    "GateParameters", "QubitRates", "CouplerRates", "Durations", "DeviceProfile", "load_profile",
    "profile_document",
    "DEFAULT_TOPOLOGY", "DEFAULT_PROFILE", "list_bundled", "resolve_topology", "resolve_subset",
    "resolve_profile",
]
