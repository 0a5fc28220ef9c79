"""Scalars, the supercommutative ring S(N), its localization at Delta and the even group."""

from .group import (GroupElement, eta, group_action, reflection, rotation, symplectic_diagonal,
                    symplectic_lower, symplectic_upper)
from .localize import LocalizedElement, loc_normalize, specialize_xi
from .metric import MetricData, metric
from .ring import (AlgebraSignature, Monomial, SuperPolynomial, exact_div, leading_term,
                   mono_mul, monomial_keys, multidegree, poly_mul, poly_sum, specialize_R,
                   substitute)
from .scalar import I, Scalar, normalize

__all__ = [
    "AlgebraSignature", "GroupElement", "I", "LocalizedElement", "MetricData", "Monomial",
    "Scalar", "SuperPolynomial", "eta", "exact_div", "group_action", "leading_term",
    "loc_normalize", "metric", "mono_mul", "monomial_keys", "multidegree", "normalize",
    "poly_mul", "poly_sum", "reflection", "rotation", "specialize_R", "specialize_xi",
    "substitute", "symplectic_diagonal", "symplectic_lower", "symplectic_upper",
]
