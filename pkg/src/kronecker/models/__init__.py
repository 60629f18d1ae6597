from .deligne import ClassChain, ClassPosition, DimensionPolynomial, ObjectStatus
from .partition import EMPTY, MuSequence, Partition
from .records import CoefficientRecord, StabilizationWindow
from .report import VerificationReport, Violation

__all__ = [
    "EMPTY",
    "Partition",
    "MuSequence",
    "CoefficientRecord",
    "StabilizationWindow",
    "ClassChain",
    "ClassPosition",
    "DimensionPolynomial",
    "ObjectStatus",
    "VerificationReport",
    "Violation",
]
