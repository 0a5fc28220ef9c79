"""Partitions, exact linear algebra, brute-force invariants and tensor powers."""

from .invariants import (CapExceeded, GammaSpace, GradedInvariants, brute_graded_invariants,
                         decomposition_checks, gamma_space, verify_generation)
from .linalg import ExactMatrix, Subspace, kernel_basis
from .partitions import (Partition, dim_gamma, dim_glN, dim_glV_hook, enumerate_partitions,
                         f_mu, formula_dims, tensor_formula_dims)
from .tensor import (TensorVector, brauer_span, coevaluation, contraction, gamma0, iota,
                     iota_inverse, permute, tensor_invariants)

__all__ = [
    "CapExceeded", "ExactMatrix", "GammaSpace", "GradedInvariants", "Partition", "Subspace",
    "TensorVector", "brauer_span", "brute_graded_invariants", "coevaluation", "contraction",
    "decomposition_checks", "dim_gamma", "dim_glN", "dim_glV_hook", "enumerate_partitions",
    "f_mu", "formula_dims", "gamma0", "gamma_space", "iota", "iota_inverse", "kernel_basis",
    "permute", "tensor_formula_dims", "tensor_invariants", "verify_generation",
]
