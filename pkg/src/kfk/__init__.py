"""Fibrations of 1-bridge braid exteriors, slope arithmetic for Dehn fillings,
and orbi-lens space invariants."""

from .braid import BraidParams, Perm, is_knot, permutation, relator, strand_word
from .brown import BrownVerdict, WeightHom, brown_criterion, cyclic_reduce, prefix_values
from .errors import DomainError, FalsificationError
from .fibration import (
    FibrationVerdict,
    H2Class,
    approximate_fibre_classes,
    fibers_over_slope,
    fibre_class,
    homology_weights,
    weight_for_slope,
)
from .orbilens import CyclicActionParams, OrbiLens, QuotientData, quotient_data
from .slope import Sign, Slope, distance, involution_distance, involution_image
from .surgery import BGSurgeryInput, cosmetic_surgery_lens, surgery_slope
from .words import Word

__version__ = "0.1.0"
