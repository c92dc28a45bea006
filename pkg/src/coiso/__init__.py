"""Exact computations for coisotropy representations of reductive pairs H ⊂ G.

Modules, bottom-up: linalg (exact rational linear algebra), rootsys, repth
(weights, characters, branching), embed (pairs as restriction matrices),
homog (complexity, rank, nullcone, defect), liealg (Chevalley bases and
realizations), poly and poisson (brackets and invariants), catalog, cli.
"""

from .embed import EmbeddingSpec
from .homog import PairReport, verify_theorems
from .repth import ReductiveSpec, Weight, branch, isotropy_module
from .rootsys import RootSystem, SimpleType, build_root_system

__all__ = [
    "EmbeddingSpec",
    "PairReport",
    "ReductiveSpec",
    "RootSystem",
    "SimpleType",
    "Weight",
    "branch",
    "build_root_system",
    "isotropy_module",
    "verify_theorems",
]
__version__ = "0.1.0"
