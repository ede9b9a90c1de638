"""Monomial ideals in k[x_1, ..., x_d], stored as minimal exponent vectors."""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product as _cartesian
from typing import Iterable, Sequence

Exponent = tuple[int, ...]


class DimensionError(ValueError):
    """Raised when exponent vectors or ideals live in different rings."""


def _check_vector(a: Sequence[int], dim: int) -> Exponent:
    a = tuple(int(e) for e in a)
    if len(a) != dim:
        raise DimensionError(f"exponent {a} has length {len(a)}, expected {dim}")
    if any(e < 0 for e in a):
        raise ValueError(f"negative exponent in {a}")
    return a


def divides(a: Exponent, b: Exponent) -> bool:
    """x^a | x^b."""
    return all(x <= y for x, y in zip(a, b))


def _minimal(gens: Iterable[Exponent]) -> tuple[Exponent, ...]:
    # Sorting by total degree means a divisor is always seen before its multiples.
    kept: list[Exponent] = []
    for g in sorted(set(gens), key=lambda v: (sum(v), v)):
        if not any(divides(h, g) for h in kept):
            kept.append(g)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generators.

    ``gens`` is kept sorted lexicographically, so two ideals are equal exactly
    when their dataclass fields are.  The zero ideal has no generators and the
    unit ideal is generated by the zero vector.
    """

    dim: int
    gens: tuple[Exponent, ...]

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be positive")

    # -- constructors -------------------------------------------------------

    @classmethod
    def unit(cls, dim: int) -> MonomialIdeal:
        return cls(dim, ((0,) * dim,))

    @classmethod
    def zero(cls, dim: int) -> MonomialIdeal:
        return cls(dim, ())

    @classmethod
    def maximal(cls, dim: int) -> MonomialIdeal:
        return cls(dim, tuple(sorted(_unit_vector(dim, j) for j in range(dim))))

    @classmethod
    def pure_powers(cls, exponents: Sequence[int]) -> MonomialIdeal:
        """The parameter ideal (x_1^a_1, ..., x_d^a_d)."""
        d = len(exponents)
        return minimalize(
            [tuple(a if i == j else 0 for i in range(d)) for j, a in enumerate(exponents)], d
        )

    # -- predicates ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return self.gens == ((0,) * self.dim,)

    def __contains__(self, a) -> bool:
        return contains_monomial(self, a)

    def max_exponent(self) -> int:
        return max((max(g) for g in self.gens), default=0)

    def pure_power_exponents(self) -> list[int | None]:
        """Smallest e with x_j^e in the ideal, per variable (None if absent)."""
        out: list[int | None] = [None] * self.dim
        for g in self.gens:
            support = [j for j, e in enumerate(g) if e]
            if len(support) == 1:
                j = support[0]
                out[j] = g[j] if out[j] is None else min(out[j], g[j])
            elif not support:
                return [0] * self.dim
        return out

    def is_parameter_ideal(self) -> bool:
        """Generated by pure powers of all d variables, i.e. a monomial s.o.p."""
        return (
            len(self.gens) == self.dim
            and all(sum(1 for e in g if e) == 1 for g in self.gens)
            and is_m_primary(self)
        )

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {"dim": self.dim, "gens": [list(g) for g in self.gens]}

    @classmethod
    def from_json(cls, data: dict) -> MonomialIdeal:
        try:
            dim = int(data["dim"])
            raw = data["gens"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed monomial ideal: {exc}") from exc
        if dim < 1:
            raise ValueError("dimension must be positive")
        return minimalize(raw, dim)

    @classmethod
    def load(cls, path) -> MonomialIdeal:
        with open(path) as fh:
            return cls.from_json(json.load(fh))

    def __str__(self) -> str:
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(monomial_str(g) for g in self.gens) + ")"


def _unit_vector(dim: int, j: int) -> Exponent:
    return tuple(1 if i == j else 0 for i in range(dim))


_VARS = "xyzw"


def monomial_str(a: Exponent) -> str:
    names = list(_VARS) if len(a) <= len(_VARS) else [f"x{i + 1}" for i in range(len(a))]
    parts = []
    for name, e in zip(names, a):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) or "1"


def _same_dim(I: MonomialIdeal, J: MonomialIdeal) -> int:
    if I.dim != J.dim:
        raise DimensionError(f"ideals in {I.dim} and {J.dim} variables")
    return I.dim


def minimalize(raw_gens: Iterable[Sequence[int]], dim: int) -> MonomialIdeal:
    """The ideal generated by ``raw_gens``, with a divisibility-minimal basis."""
    vecs = [_check_vector(g, dim) for g in raw_gens]
    return MonomialIdeal(dim, _minimal(vecs))


def contains_monomial(I: MonomialIdeal, a: Sequence[int]) -> bool:
    a = _check_vector(a, I.dim)
    return any(divides(g, a) for g in I.gens)


def multiply(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    d = _same_dim(I, J)
    sums = (tuple(x + y for x, y in zip(g, h)) for g in I.gens for h in J.gens)
    return MonomialIdeal(d, _minimal(sums))


def power(I: MonomialIdeal, n: int) -> MonomialIdeal:
    if n < 0:
        raise ValueError("negative power")
    result = MonomialIdeal.unit(I.dim)
    for _ in range(n):
        result = multiply(result, I)
    return result


def add(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    d = _same_dim(I, J)
    return MonomialIdeal(d, _minimal(I.gens + J.gens))


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    d = _same_dim(I, J)
    lcms = (tuple(max(x, y) for x, y in zip(g, h)) for g in I.gens for h in J.gens)
    return MonomialIdeal(d, _minimal(lcms))


def colon_variable(I: MonomialIdeal, j: int) -> MonomialIdeal:
    """I : x_j (internal helper)."""
    return MonomialIdeal(
        I.dim, _minimal(tuple(max(e - (i == j), 0) for i, e in enumerate(g)) for g in I.gens)
    )


def equals(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    _same_dim(I, J)
    return I.gens == J.gens


def is_subset(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """I ⊆ J as ideals."""
    _same_dim(I, J)
    return all(any(divides(h, g) for h in J.gens) for g in I.gens)


def is_m_primary(I: MonomialIdeal) -> bool:
    return all(e is not None for e in I.pure_power_exponents())


def box(bounds: Sequence[int]):
    """All lattice points 0 <= a_j <= bounds[j]."""
    return _cartesian(*(range(b + 1) for b in bounds))
