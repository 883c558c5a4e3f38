"""Classification toolkit for the 95 families of terminal quasismooth
anticanonical Fano 3-fold hypersurfaces in weighted projective space."""
from .enumeration import AdmissibilityVerdict, check_quasismooth, enumerate_families
from .fibrations import (
    EllipticKind,
    EllipticStatus,
    K3Route,
    density_witness_n19,
    elliptic_fiber_criterion,
    elliptic_status,
    k3_route,
)
from .groups import Presentation, ball_size, equal, order, presentation_of, reduce
from .registry import ClassificationReport, FamilyRecord, classify, family, load_registry, validate_all
from .singularities import Basket, QuotientSingularity, blowup_chain, compute_basket, kawamata_blowup
from .weights import Monomial, WeightSystem, anticanonical_degree, minus_k_cubed, monomials_of_degree

__version__ = "0.1.0"
