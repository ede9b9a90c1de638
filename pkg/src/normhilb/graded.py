"""Standard graded examples: Stanley-Reisner rings and diagonal hypersurfaces.

In these rings the associated graded ring of m is reduced, so the normal
filtration of any minimal reduction I with closure(I) = m is just {m^n}, and
everything is read off the Hilbert series h(t)/(1-t)^d of G(m).
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass
from importlib import resources
from itertools import combinations
from math import comb
from typing import Sequence

from .hilbert import BinomialPolynomial, HilbertTable, binomial


class NotPure(ValueError):
    pass


@dataclass(frozen=True)
class SimplicialComplex:
    vertex_count: int
    facets: tuple[frozenset[int], ...]

    def __post_init__(self):
        if not self.facets:
            raise ValueError("empty complex")
        for F in self.facets:
            if not F or not all(1 <= v <= self.vertex_count for v in F):
                raise ValueError(f"facet {sorted(F)} has vertices outside 1..{self.vertex_count}")
        for F, G in combinations(self.facets, 2):
            if F <= G or G <= F:
                raise ValueError(f"facets {sorted(F)} and {sorted(G)} are not maximal")

    @classmethod
    def from_facets(cls, vertex_count: int, facets: Sequence[Sequence[int]]) -> SimplicialComplex:
        return cls(vertex_count, tuple(frozenset(F) for F in facets))

    @classmethod
    def from_json(cls, data: dict) -> SimplicialComplex:
        try:
            return cls.from_facets(int(data["vertices"]), data["facets"])
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed complex: {exc}") from exc

    @classmethod
    def load(cls, path) -> SimplicialComplex:
        with open(path) as fh:
            return cls.from_json(json.load(fh))

    @property
    def dimension(self) -> int:
        return max(len(F) for F in self.facets) - 1

    def check_pure(self) -> None:
        F = min(self.facets, key=len)
        G = max(self.facets, key=len)
        if len(F) != len(G):
            raise NotPure(f"facets {sorted(F)} and {sorted(G)} have different sizes")

    def faces(self) -> set[frozenset[int]]:
        out = set()
        for F in self.facets:
            for size in range(len(F) + 1):
                out.update(frozenset(c) for c in combinations(sorted(F), size))
        return out


def bundled_complex() -> SimplicialComplex:
    """The bundled 12-facet shellable complex on 8 vertices."""
    text = resources.files("normhilb").joinpath("data/shelled_complex.json").read_text()
    return SimplicialComplex.from_json(json.loads(text))


def f_vector(delta: SimplicialComplex) -> tuple[int, ...]:
    """(f_{-1}, f_0, ..., f_{dim})."""
    f = [0] * (delta.dimension + 2)
    for face in delta.faces():
        f[len(face)] += 1
    return tuple(f)


def h_vector(f: Sequence[int] | SimplicialComplex) -> tuple[int, ...]:
    """h_j = sum_{i<=j} (-1)^(j-i) C(d-i, j-i) f_{i-1}, d = len(f) - 1.

    Passing a complex checks purity first.
    """
    if isinstance(f, SimplicialComplex):
        f.check_pure()
        f = f_vector(f)
    d = len(f) - 1
    return tuple(sum((-1) ** (j - i) * comb(d - i, j - i) * f[i] for i in range(j + 1)) for j in range(d + 1))


def f_from_h(h: Sequence[int]) -> tuple[int, ...]:
    """Inverse transform: f_{i-1} = sum_{j<=i} C(d-j, i-j) h_j."""
    d = len(h) - 1
    return tuple(sum(comb(d - j, i - j) * h[j] for j in range(i + 1)) for i in range(d + 1))


@dataclass(frozen=True)
class HilbertSeries:
    """h(t) / (1-t)^dim, numerator kept exactly as given (trailing zeros too)."""

    dim: int
    numerator: tuple[int, ...]

    @property
    def degree(self) -> int:
        nz = [j for j, c in enumerate(self.numerator) if c]
        return nz[-1] if nz else 0

    def coefficients(self, n_terms: int) -> list[int]:
        """Hilbert function dim_k G_n for n < n_terms."""
        return [
            sum(h * binomial(n - j + self.dim - 1, self.dim - 1) for j, h in enumerate(self.numerator) if j <= n)
            for n in range(n_terms)
        ]

    def samuel_table(self, n_max: int) -> HilbertTable:
        """ℓ(R/m^n) for n = 0..n_max as cumulative sums of the Hilbert function."""
        hf = self.coefficients(n_max)
        values = [sum(hf[:n]) for n in range(n_max + 1)]
        return HilbertTable(self.dim, tuple(values))

    def __str__(self) -> str:
        terms = []
        for j, c in enumerate(self.numerator[: self.degree + 1]):
            if c:
                mono = "" if j == 0 else ("t" if j == 1 else f"t^{j}")
                coef = "" if c == 1 and mono else str(c)
                terms.append(f"{coef}{mono}")
        return f"({' + '.join(terms) or '0'}) / (1-t)^{self.dim}"


def series_from_h(h: Sequence[int], d: int) -> HilbertSeries:
    return HilbertSeries(d, tuple(h))


def diagonal_hypersurface_series(d: int, n: int) -> HilbertSeries:
    """k[X_0..X_d]/(X_0^n + ... + X_d^n): numerator 1 + t + ... + t^(n-1)."""
    if n < 1:
        raise ValueError("hypersurface degree must be positive")
    if n > d:
        warnings.warn(f"degree n={n} exceeds d={d}; outside the range n <= d of the worked example", stacklevel=2)
    return HilbertSeries(d, (1,) * n)


def coefficients_from_series(s: HilbertSeries) -> tuple[int, ...]:
    """e_i = sum_{j>=i} C(j, i) h_j for i = 0..d."""
    h = s.numerator
    return tuple(sum(comb(j, i) * h[j] for j in range(i, len(h))) for i in range(s.dim + 1))


def postulation_and_reduction(s: HilbertSeries, cm: bool) -> tuple[int, int | None]:
    """Postulation number deg h - d, and reduction number n + d when G is Cohen-Macaulay.

    The reduction number needs the CM flag; without it only the postulation
    number is returned (reduction None).
    """
    n_bar = s.degree - s.dim
    return n_bar, (n_bar + s.dim if cm else None)


def series_polynomial(s: HilbertSeries) -> BinomialPolynomial:
    n_bar, _ = postulation_and_reduction(s, cm=False)
    return BinomialPolynomial(s.dim, coefficients_from_series(s), n_bar if n_bar >= 0 else None)


@dataclass(frozen=True)
class GradedInstance:
    """A filtration {m^n} read off a CM Hilbert series, with I a minimal reduction of m.

    With G(m) Cohen-Macaulay, ℓ(m^(i+1)/I m^i) = sum_{j>i} h_j and ℓ(R/I) = sum h_j.
    """

    name: str
    series: HilbertSeries
    cm: bool = True

    @property
    def dim(self) -> int:
        return self.series.dim

    def quotient_lengths(self, i_max: int) -> list[int]:
        h = self.series.numerator
        return [sum(h[i + 1 :]) for i in range(i_max + 1)]

    def colength_of_reduction(self) -> int:
        return sum(self.series.numerator)

    def reduction_number(self) -> int | None:
        return postulation_and_reduction(self.series, self.cm)[1]
