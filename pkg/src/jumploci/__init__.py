"""Exact computation of homology jump loci, support varieties, and
resonance varieties, with the graded chain complex of an abelian cover
connecting them."""

from .cga import (AomotoComplex, BShape, GradedAlgebra, aomoto,
                  generic_vanishing_experiment, pairing_cga, resonance_ideal,
                  resonance_member, resonance_points, sample_cga, validate_cga)
from .complexes import (FinVerdict, FreeChainComplex, JumpLocusResult,
                        ModulePresentation, PresentedChainComplex,
                        add_acyclic_summand, fitting_ideal,
                        homology_dims_at_point, homology_dims_table,
                        homology_presentation, is_finite_dimensional,
                        jump_locus_ideal, jump_locus_points, specialize,
                        support_points, validate_complex, validate_presented)
from .equivariant import (FinAbGroup, GrRingDescriptor, NuData, build_E1,
                          finiteness_test, gr_ring, identity_nu,
                          verify_cv_res)
from .errors import (AlgebraError, DocumentError, ParseError,
                     PreconditionError, ResourceLimitError,
                     UnsupportedRingError)
from .fields import (ExtensionField, PrimeField, Rationals, extension_of,
                     field_make, finite_field)
from .fox import (GroupPresentation, alexander_complex, alexander_invariant,
                  characteristic_variety_points, fox_derivative, parse_word,
                  quadratic_cup)
from .groebner import Limits, buchberger, syzygy_matrix
from .linalg import mat_rank
from .matrices import Matrix, block_diag, det, minors_ideal
from .rings import Ideal, Point, Poly, Ring, parse_poly, poly_to_str
from .smith import SmithForm, smith_normal_form
from .varieties import zero_locus_points

__version__ = "0.1.0"
