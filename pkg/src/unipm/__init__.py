"""Unique perfect matchings: verifiers, class-specific linear-time
deciders, and a constructive characterization of the claw-free case.
"""

from .graph import (Graph, GraphParseError, Matching, connected_components,
                    endblocks, find_bridges, find_claw, format_matching,
                    is_clique, is_cograph_bruteforce, is_connected,
                    is_simplicial, is_split_bruteforce, parse_graph,
                    serialize_graph)
from .uniqueness import (AlternatingCycleWitness, enumerate_pms, is_unique_pm,
                         kotzig_peel, verify_pm)
from .forcing import ForcingCertificate, find_forcing_set, split_balance
from .interval import (IntervalParseError, IntervalPMError, IntervalRep,
                       intersection_graph, interval_pm, normalize_endpoints,
                       parse_intervals)
from .clawfree import PmincfStats, decide_unique_clawfree, pmincf
from .gclass import (ConstructionTrace, InitStep, Op1Step, Op2Step,
                     OperationError, apply_op1, apply_op2, decompose,
                     format_trace, parse_trace, random_gclass, replay)
from .generators import (clique_chain, cograph_instance, interval_instance,
                         split_instance)

__version__ = "0.1.0"

__all__ = [
    "Graph", "GraphParseError", "Matching", "connected_components",
    "endblocks", "find_bridges", "find_claw", "format_matching", "is_clique",
    "is_cograph_bruteforce", "is_connected", "is_simplicial",
    "is_split_bruteforce", "parse_graph", "serialize_graph",
    "AlternatingCycleWitness", "enumerate_pms", "is_unique_pm", "kotzig_peel",
    "verify_pm",
    "ForcingCertificate", "find_forcing_set", "split_balance",
    "IntervalParseError", "IntervalPMError", "IntervalRep",
    "intersection_graph", "interval_pm", "normalize_endpoints",
    "parse_intervals",
    "PmincfStats", "decide_unique_clawfree", "pmincf",
    "ConstructionTrace", "InitStep", "Op1Step", "Op2Step", "OperationError",
    "apply_op1", "apply_op2", "decompose", "format_trace", "parse_trace",
    "random_gclass", "replay",
    "clique_chain", "cograph_instance", "interval_instance", "split_instance",
]
