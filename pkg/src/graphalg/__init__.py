"""graphalg: exact computer algebra for handle-holonomy quantum graph algebras
at odd roots of unity.

Everything is exact: Laurent polynomials over Q for the formal deformation
parameter, the cyclotomic field Q(zeta_p) at a root of unity, and
noncommutative polynomial normal forms over either coefficient ring.
"""

from .scalars import (
    CyclotomicField,
    FormalScalar,
    RationalExpr,
    RootScalar,
    cyclotomic_polynomial,
    q_factorial,
    q_int,
)

__all__ = [
    "CyclotomicField",
    "FormalScalar",
    "RationalExpr",
    "RootScalar",
    "cyclotomic_polynomial",
    "q_factorial",
    "q_int",
]

__version__ = "0.1.0"
