"""Reductions between equilibrium problems and the pattern classifier."""

from .classify import (
    Base,
    ChainReport,
    HardnessVerdict,
    ReductionChain,
    Step,
    Verdict,
    classify,
    validate_chain,
)
from .formula import CnfFormula1in3, random_formula
from .graphs import double_graph, shift_family, shift_graph
from .one_in_three import LabelMap, NodeLabel, extract_assignment, lift_assignment, reduce_1in3_to_pgg

__all__ = [
    "Base", "ChainReport", "CnfFormula1in3", "HardnessVerdict", "LabelMap", "NodeLabel",
    "ReductionChain", "Step", "Verdict", "classify", "double_graph", "extract_assignment",
    "lift_assignment", "random_formula", "reduce_1in3_to_pgg", "shift_family", "shift_graph",
    "validate_chain",
]
