"""MDS Euclidean self-dual, almost self-dual and self-orthogonal GRS codes over GF(r^2)."""

from .construct import (
    CosetPlan,
    build_almost_selfdual,
    build_selfdual,
    build_selforthogonal,
    enumerate_lengths,
)
from .gf import FieldSpec, make_field
from .grs import EvalPoints, GrsCode, generator_matrix, l_value
from .ortho import LambdaPoly, scaling_from_lambda, search_lambda
from .verify import full_report

__all__ = [
    "CosetPlan",
    "EvalPoints",
    "FieldSpec",
    "GrsCode",
    "LambdaPoly",
    "build_almost_selfdual",
    "build_selfdual",
    "build_selforthogonal",
    "enumerate_lengths",
    "full_report",
    "generator_matrix",
    "l_value",
    "make_field",
    "scaling_from_lambda",
    "search_lambda",
]
