"""Exact arithmetic in groups of truncated multivariate formal power series.

Elements are tuples of power series in n variables with zero constant term,
truncated above a fixed degree k, under composition.  The package covers
composition and inversion, element orders, the construction and
linearization of periodic elements, and symbolic tables of the
coefficients that periodicity forces in one variable.
"""

from .errors import (BadSeedDegree, DegreeOutOfRange, DimensionMismatch, DivisionByNonUnit,
                     DomainMismatch, NonIntegerCoefficient, NotPeriodicInput,
                     NotPeriodicWithinBound, ObstructionError, ParseError, PreconditionFailed,
                     SingularMatrix, TheoremViolation, TruncGroupError)
from .group import (GroupElement, dim_G, invert, matrix_order, one_sided_inverse_symmetry_check,
                    order_of, power)
from .kernels import BACKEND
from .periodic import (DiagonalSpec, ResonanceReport, build_conjugator, check_periodic,
                       gen_periodic_conjugate, gen_periodic_diagonal, gen_periodic_scalar,
                       intertwines, matrix_conjugate, resonance_operator_R, resonance_report)
from .scalars import (CyclotomicElement, ScalarDomain, SymbolicPoly, cyclotomic_polynomial,
                      omega_power, rational, root_of_unity_sum)
from .series import (HomogeneousPart, SquareMatrix, TruncatedSeries, compose, matrix_invert,
                     t_invariant)
from .symbolic import RelationTable, c_sequence, growth_diagnostic, relation_table

__version__ = "0.1.0"
