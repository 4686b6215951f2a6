"""Exception hierarchy.

Every error carries a short machine-readable ``code`` used by the CLI on its
diagnostic stream.
"""


class TruncGroupError(Exception):
    code = "error"


class DivisionByNonUnit(TruncGroupError, ZeroDivisionError):
    code = "division_by_non_unit"


class DegreeOutOfRange(TruncGroupError, ValueError):
    code = "degree_out_of_range"


class DimensionMismatch(TruncGroupError, ValueError):
    code = "dimension_mismatch"


class DomainMismatch(TruncGroupError, ValueError):
    code = "domain_mismatch"


class SingularMatrix(TruncGroupError, ArithmeticError):
    code = "singular_matrix"


class NotPeriodicWithinBound(TruncGroupError):
    code = "not_periodic_within_bound"

    def __init__(self, message, reason="matrix"):
        super().__init__(message)
        # "matrix": no t <= bound with A^t = I; "series": A^t = I but phi^t != id
        self.reason = reason


class TheoremViolation(TruncGroupError, AssertionError):
    """An internal consistency check that cannot fail over a char-0 field did."""

    code = "theorem_violation"


class PreconditionFailed(TruncGroupError, ValueError):
    code = "precondition_failed"


class BadSeedDegree(TruncGroupError, ValueError):
    code = "bad_seed_degree"


class ObstructionError(TruncGroupError):
    code = "obstruction"

    def __init__(self, report):
        super().__init__(
            f"no periodic extension at degree {report.degree}: "
            f"{len(report.obstruction)} non-resonant residual(s)")
        self.report = report


class NotPeriodicInput(TruncGroupError, ValueError):
    code = "not_periodic_input"


class NonIntegerCoefficient(TruncGroupError, AssertionError):
    code = "non_integer_coefficient"


class ParseError(TruncGroupError, ValueError):
    code = "parse_error"
