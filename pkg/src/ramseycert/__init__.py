"""Certificates and colourings for two-colour Ramsey problems on ``a*x + b*y = p(z)``."""

__version__ = "0.1.0"

from .arith import (Factorization, bezout_bounded, crt, ext_gcd, factorize, mod_inverse,
                    p_adic_valuation, radical)
from .certificate import (Certificate, ConditionReport, ConditionResult, unit_coeff_criterion,
                          verify_certificate)
from .colouring import (AvoidanceVerdict, MonoSolution, PeriodicColouring, TableColouring,
                        builtin_colouring, check_periodic_avoidance, enumerate_mono_solutions,
                        lift_residue_triple, search_avoiding_colouring)
from .constructors import (ConstructionResult, ReductionChain, construct_cz2, construct_czp,
                           construct_general, construct_power, construct_scaled_cz2,
                           construct_solution_in_class, find_value_in_gap, resclass_partner)
from .errors import (BelowThreshold, BudgetExceeded, HypothesisUnsatisfied,
                     InconsistentCongruences, PreconditionError, RamseyCertError)
from .poly import (EquationSpec, IntPolynomial, difference_quotient, evaluate, lift_scaled_solution,
                   parse_poly, scale_reduce)
