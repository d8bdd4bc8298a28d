"""Perfect complexes over F2[A4] = Lambda(y1, y2) * C3 with four-dimensional homology.

The modules build on each other in this order: ``exactfield`` (GF(2), GF(4) and
linear algebra), ``skewalg`` (the skew group algebra), ``perfcx`` (complexes),
``polys`` (the polynomial ring S and its ideals), ``bgg`` (classification and
realization), ``specseq`` (coradical spectral sequence) and ``kzero``
(finiteness obstruction).
"""

__version__ = "0.1.0"

from .bgg import ClassifyingTriple, classify, realize
from .errors import DomainError, HomologyBoundError, InvariantViolation
from .exactfield import F2, F4, get_field
from .kzero import obstruction_report
from .perfcx import PerfectComplex, homology, validate
from .polys import GradedIdeal, enumerate_parameter_ideals, oliver_ideal
from .skewalg import GroupTag
from .specseq import collapse_report

__all__ = [
    "ClassifyingTriple",
    "classify",
    "realize",
    "DomainError",
    "HomologyBoundError",
    "InvariantViolation",
    "F2",
    "F4",
    "get_field",
    "obstruction_report",
    "PerfectComplex",
    "homology",
    "validate",
    "GradedIdeal",
    "enumerate_parameter_ideals",
    "oliver_ideal",
    "GroupTag",
    "collapse_report",
]
