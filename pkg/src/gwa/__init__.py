"""Exact arithmetic for generalized Weyl algebras D(a, sigma).

The layers, bottom up: coefficient fields, (Laurent) polynomials and
their substitution automorphisms, GWA presentations and elements, the skew
group ring L * Z^n, the reflection groups G(m, p, n), and the checkers.
"""

from .algebra import (
    GwaElement,
    GwaPresentation,
    extend_rank,
    gwa_mul,
    structure_coefficient,
    tensor_power,
    validate_presentation,
)
from .automorphism import RingAutomorphism, auto_inverse, compose, substitute
from .checks import (
    CheckReport,
    REPORT_SCHEMA,
    check_galois_generation,
    check_principal,
    check_simple_classical,
    check_simple_quantum,
    jw_fixed_ring,
    orbit_set,
    relation_suite,
)
from .coefficients import QQ, Cyclotomic, CyclotomicField, Rational, field_arith, root_of_unity
from .parsing import parse_element, parse_poly, parse_ratfunc, parse_skew
from .polynomial import Poly, PolyRing, RatFunc
from .reflection import ReflectionGroupElement, act, enumerate_group, invariant_lattice, reynolds
from .serialization import load_presentation, dump_presentation
from .skew import (
    SkewElement,
    SkewRing,
    WGroup,
    WGroupElement,
    embed,
    evaluate,
    f_projector,
    monoid_generates,
    preimage,
    skew_mul,
    support,
    symmetric_wgroup,
    symmetrize,
    trivial_wgroup,
    w_invariant,
)
from .univariate import integer_roots, resultant

__version__ = "0.1.0"
