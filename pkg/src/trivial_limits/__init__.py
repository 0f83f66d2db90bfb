"""Exact computations on odd-degree hyperelliptic curves over F_p: Riemann-Roch
spaces, divisor classes, residue pairings, and the classification of limits of
the trivial rank-2 bundle."""

from .classification import (
    brill_noether_rho,
    generic_limit_rule,
    is_globally_generated,
    is_limit_of_trivial,
    is_simple,
    lemma1_h0_formula,
    limit_h0_count,
    simple_decomposition,
    split_criterion,
)
from .curve import (
    INFINITY,
    Curve,
    Divisor,
    Place,
    canonical_divisor,
    hyperelliptic_divisor,
    involution,
    local_expansion,
    new_curve,
    parse_curve,
    parse_divisor,
    weierstrass_places,
)
from .errors import DomainError, IrrationalSupportError, PrecisionError
from .ff import FieldElement, LaurentSeries, Polynomial, poly_gcd, series_invert, series_sqrt
from .pairing import Differential, h1, koszul_pair, residue_at, residue_sum, u2e_functional
from .picard import (
    DivisorClass,
    canonical_class,
    class_of,
    hyperelliptic_class,
    identity,
    is_power_of_H,
    parse_class,
)
from .plane import h0_plane_curve, hi_p2, plane_genus, prop4_certificate
from .riemann_roch import (
    FunctionElement,
    fixed_part,
    function_divisor,
    h0,
    in_rr_space,
    rr_space,
    valuation,
)

__version__ = "0.1.0"
