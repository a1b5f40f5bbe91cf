"""Exact q-umbral calculus: q-Bernoulli, q-Euler and q-Frobenius-Euler
numbers and polynomials, basis conversions and identity checks."""

from .scalars import Field, dump_scalar, evaluate, load_scalar, render
from .qcore import Poly, qbinomial, qfactorial, qint
from .umbral import DividedSeries
from .families import FamilyId, NumberTable

__version__ = "0.1.0"

__all__ = [
    "Field", "Poly", "DividedSeries", "FamilyId", "NumberTable",
    "qint", "qfactorial", "qbinomial", "evaluate", "render", "dump_scalar", "load_scalar",
]
