"""Colengths, normal Hilbert functions and their polynomials.

The normal Hilbert polynomial is written in the alternating binomial basis

    P(x) = e_0*C(x+d-1, d) - e_1*C(x+d-2, d-1) + ... + (-1)^d e_d,

and is fitted exactly from tabulated values.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, prod
from typing import Sequence

import numpy as np

from .closure import ClosureCache, closure_power
from .monomial import MonomialIdeal, is_subset


class InfiniteLength(ValueError):
    """Colength requested for an ideal that is not m-primary."""


class FitError(ValueError):
    def __init__(self, message: str, first_mismatch: int | None = None):
        super().__init__(message)
        self.first_mismatch = first_mismatch


def _membership_grid(J: MonomialIdeal, shape: Sequence[int]) -> np.ndarray:
    grid = np.zeros(tuple(shape), dtype=bool)
    for g in J.gens:
        if all(e < s for e, s in zip(g, shape)):
            grid[tuple(slice(e, None) for e in g)] = True
    return grid


def _standard_box(J: MonomialIdeal) -> list[int]:
    bounds = J.pure_power_exponents()
    if any(b is None for b in bounds):
        raise InfiniteLength(f"{J} is not m-primary; R/J has infinite length")
    return bounds


def colength(J: MonomialIdeal) -> int:
    """ℓ(R/J): the number of monomials outside J."""
    shape = _standard_box(J)
    if 0 in shape:
        return 0
    return int(prod(shape) - _membership_grid(J, shape).sum())


def quotient_length(A: MonomialIdeal, B: MonomialIdeal) -> int:
    """ℓ(B/A) for A ⊆ B with A m-primary, counted directly as monomials in B minus A."""
    if not is_subset(A, B):
        raise ValueError("quotient length needs A ⊆ B")
    shape = _standard_box(A)
    if 0 in shape:
        return 0
    return int((_membership_grid(B, shape) & ~_membership_grid(A, shape)).sum())


def binomial(n: int, k: int) -> int:
    """C(n, k) extended to negative n by the polynomial rule; zero for k < 0."""
    if k < 0:
        return 0
    if n >= 0:
        return comb(n, k)
    return (-1) ** k * comb(k - n - 1, k)


@dataclass(frozen=True)
class HilbertTable:
    dim: int
    values: tuple[int, ...]  # values[n] = ℓ(R/closure(I^n)), values[0] = 0
    base: MonomialIdeal | None = None

    @property
    def n_max(self) -> int:
        return len(self.values) - 1


@dataclass(frozen=True)
class BinomialPolynomial:
    dim: int
    coeffs: tuple[int, ...]  # e_0 .. e_d
    postulation: int | None  # None: agrees on every tabulated n

    def __call__(self, x: int) -> int:
        d = self.dim
        return sum((-1) ** i * e * binomial(x + d - 1 - i, d - i) for i, e in enumerate(self.coeffs))

    def to_json(self) -> dict:
        return {"e": list(self.coeffs), "postulation": self.postulation}


def normal_table(cache: ClosureCache, n_max: int) -> HilbertTable:
    values = [0] + [colength(closure_power(cache, n)) for n in range(1, n_max + 1)]
    return HilbertTable(cache.dim, tuple(values), cache.base)


def _solve(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    # Gauss-Jordan over Q; the binomial-basis matrix on consecutive integers is invertible.
    n = len(rhs)
    aug = [row[:] + [b] for row, b in zip(matrix, rhs)]
    for c in range(n):
        p = next(r for r in range(c, n) if aug[r][c] != 0)
        aug[c], aug[p] = aug[p], aug[c]
        piv = aug[c][c]
        aug[c] = [x / piv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c]:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return [row[-1] for row in aug]


def fit_values(values: Sequence[int], dim: int) -> BinomialPolynomial:
    """Fit e_0..e_d from the last d+1 values and validate on the d+1 before them."""
    d = dim
    if len(values) < 2 * (d + 1):
        raise FitError(f"need at least {2 * (d + 1)} values to fit a degree-{d} polynomial, got {len(values)}")
    top = len(values) - 1
    window = range(top - d, top + 1)
    matrix = [[Fraction((-1) ** i * binomial(n + d - 1 - i, d - i)) for i in range(d + 1)] for n in window]
    sol = _solve(matrix, [Fraction(values[n]) for n in window])
    if any(c.denominator != 1 for c in sol):
        raise ArithmeticError(f"non-integral Hilbert coefficients {sol}")
    poly = BinomialPolynomial(d, tuple(int(c) for c in sol), None)
    check = range(top - 2 * d - 1, top - d)
    bad = [n for n in check if poly(n) != values[n]]
    if bad:
        raise FitError(
            f"values are not yet polynomial: mismatch at n={bad[0]}; increase the window (n_max)",
            first_mismatch=bad[0],
        )
    mismatches = [n for n in range(len(values)) if poly(n) != values[n]]
    return BinomialPolynomial(d, poly.coeffs, max(mismatches) if mismatches else None)


def fit(table: HilbertTable) -> BinomialPolynomial:
    return fit_values(table.values, table.dim)


def multiplicity_check(I: MonomialIdeal, fitted: BinomialPolynomial) -> bool | None:
    """e_0 equals the product of pure-power exponents; None when I is not a parameter ideal."""
    if not I.is_parameter_ideal():
        return None
    return fitted.coeffs[0] == prod(max(g) for g in I.gens)
