"""Toric Richardson varieties in finite Weyl groups."""
from __future__ import annotations

from .bruhat_poset import (BruhatInterval, CrownType, build_interval, classify_rank3,
                           export_hasse, interval_from_json, is_boolean, is_lattice,
                           is_s3_free, set_paranoid)
from .errors import (BudgetExceeded, ConfigurationError, EmptyIntervalError,
                     InvariantViolation, NotReducedError, PreconditionError, RichlatError,
                     StructuralError, UnsupportedTypeError)
from .kl_polynomials import (inverse_kl_polynomial, is_rationally_smooth_schubert,
                             kl_polynomial, point_count, r_polynomial, r_polynomial_deodhar)
from .qpoly import QPolynomial
from .richardson_toric import (GrassmannianVerdict, ToricVerdict, classify,
                               coxeter_factorization_toric, enumerate_toric_pairs,
                               grassmannian_toric, is_smooth_toric, is_toric_by_roots)
from .root_system import RootSystem, RootSystemType, build_root_system, is_minuscule
from .subexpressions import (Expression, JPartition, beta_roots, distinguished_subexpressions,
                             j_partition, positive_subexpression)
from .weyl import (WeylElement, absolute_length, bruhat_leq, enumerate_group, from_word,
                   identity, in_quotient, is_coxeter_type, longest_element, parabolic_quotient,
                   parse_word, quotient_is_lattice, reduced_word, weak_leq_left)

__version__ = "0.1.0"
