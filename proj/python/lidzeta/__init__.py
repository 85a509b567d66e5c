"""Exact Lidstone polynomials and the even zeta values they produce."""

from fractions import Fraction

from . import _core
from ._core import PrecisionError, cos_moment, interpolant, max_digits, run_cli, verify, zeta_value

__all__ = [
    "PrecisionError",
    "bernoulli_numbers",
    "cos_moment",
    "interpolant",
    "lambda_prime_at_one",
    "lidstone_poly",
    "max_digits",
    "run_cli",
    "verify",
    "zeta_coefficient",
    "zeta_value",
]


def lambda_prime_at_one(n: int) -> Fraction:
    return Fraction(_core.lambda_prime_at_one(n))


def zeta_coefficient(n: int) -> Fraction:
    """c_n with zeta(2n) = c_n * pi^(2n)."""
    return Fraction(_core.zeta_coefficient(n))


def lidstone_poly(k: int) -> list[Fraction]:
    """Coefficients of Lambda_k, lowest degree first."""
    return [Fraction(c) for c in _core.lidstone_poly(k)]


def bernoulli_numbers(k_max: int) -> list[Fraction]:
    return [Fraction(b) for b in _core.bernoulli_numbers(k_max)]
