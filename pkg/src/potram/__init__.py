"""Degree-sequence analysis, forest packing and potential-Ramsey numbers for small graphs."""

from .degseq import DegreeSequence, complement_sequence, is_graphic, realize
from .errors import (
    BudgetExceeded,
    DomainError,
    InputError,
    InvariantViolation,
    PotramError,
    ResourceError,
)
from .graph import Graph
from .packing import Packing, exact_pack, link_swap_pack
from .potential import PotentialWitness, potentially
from .ramsey import RpotInstance, RpotReport, rpot_exact

__all__ = [
    "BudgetExceeded",
    "DegreeSequence",
    "DomainError",
    "Graph",
    "InputError",
    "InvariantViolation",
    "Packing",
    "PotentialWitness",
    "PotramError",
    "ResourceError",
    "RpotInstance",
    "RpotReport",
    "complement_sequence",
    "exact_pack",
    "is_graphic",
    "link_swap_pack",
    "potentially",
    "realize",
    "rpot_exact",
]
