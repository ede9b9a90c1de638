"""Normal filtration {integral closure of I^n} of a monomial ideal.

For a monomial ideal I with generator exponents v_1..v_g the closure of I^n is
spanned by the monomials x^a with a in n*NP(I), where NP(I) is the Newton
polyhedron conv(v_i) + R^d_{>=0}.  Because the v_i are non-negative,

    a in n*NP(I)  <=>  max{ sum(lam) : sum lam_i v_i <= a, lam >= 0 } >= n,

and the left-hand maximum (the *Newton level* of a) is computed exactly by
:func:`normhilb.lp.max_total_weight`.

Enumeration bound.  Let M be the largest coordinate among the v_i.  If
a in n*NP(I) and a_j > n*M then a - e_j is still in n*NP(I), since any
witness lam has sum_i lam_i v_ij <= n*M <= a_j - 1.  So every minimal
generator of the closure of I^n lies in the box [0, n*M]^d.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product as _cartesian
from pathlib import Path

import numpy as np

from .lp import max_total_weight
from .monomial import (
    DimensionError,
    Exponent,
    MonomialIdeal,
    _check_vector,
    contains_monomial,
    is_subset,
    minimalize,
    multiply,
    power,
)

log = logging.getLogger(__name__)

DEFAULT_K_MAX = 12
CACHE_ENV = "NORMHILB_CACHE_DIR"


@dataclass(frozen=True)
class NewtonPolyhedron:
    dim: int
    vertices: tuple[Exponent, ...]
    _levels: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    @classmethod
    def of(cls, I: MonomialIdeal) -> NewtonPolyhedron:
        if I.is_zero:
            raise ValueError("the zero ideal has no Newton polyhedron")
        return cls(I.dim, I.gens)

    @property
    def is_whole_orthant(self) -> bool:
        return any(not any(v) for v in self.vertices)

    def level(self, a: Exponent) -> Fraction:
        """Largest t with a in t*NP (exact).  Undefined for the unit ideal."""
        hit = self._levels.get(a)
        if hit is None:
            hit = self._levels[a] = max_total_weight(self.vertices, a)
        return hit


def membership_level(np_: NewtonPolyhedron, a, n: int) -> bool:
    """Is x^a in the integral closure of I^n?"""
    if n <= 0:
        raise ValueError("n must be positive")
    a = _check_vector(a, np_.dim)
    if np_.is_whole_orthant:
        return True
    if any(all(n * x <= y for x, y in zip(v, a)) for v in np_.vertices):
        return True
    if sum(a) < n * min(sum(v) for v in np_.vertices):
        return False
    return np_.level(a) >= n


def minimal_closure_generators(np_: NewtonPolyhedron, n: int) -> MonomialIdeal:
    """Minimal generators of the closure of I^n by a staircase sweep.

    For every fixed prefix (a_1..a_{d-2}) the least admissible a_d is a
    non-increasing function of a_{d-1}, so each line costs O(n*M) LP calls.
    """
    d = np_.dim
    if np_.is_whole_orthant:
        return MonomialIdeal.unit(d)
    top = n * max(max(v) for v in np_.vertices)

    def member(a):
        return membership_level(np_, a, n)

    if d == 1:
        first = next(x for x in range(top + 1) if member((x,)))
        return MonomialIdeal(1, ((first,),))

    candidates = []
    for prefix in _cartesian(*(range(top + 1) for _ in range(d - 2))):
        cur = top
        found = False
        for x in range(top + 1):
            if not found:
                if not member(prefix + (x, top)):
                    continue
                found = True
            while cur > 0 and member(prefix + (x, cur - 1)):
                cur -= 1
            candidates.append(prefix + (x, cur))
            if cur == 0:
                break
    return minimalize(candidates, d)


@dataclass
class ClosureCache:
    """Memoized normal filtration of ``base``; closures[0] is the unit ideal.

    Single writer: concurrent callers must synchronize externally.
    """

    base: MonomialIdeal
    closures: dict[int, MonomialIdeal] = field(default_factory=dict)
    path: Path | None = None
    _powers: dict[int, MonomialIdeal] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if self.base.is_zero:
            raise ValueError("closure of the zero ideal requested")
        self.newton = NewtonPolyhedron.of(self.base)

    @property
    def dim(self) -> int:
        return self.base.dim

    def closure(self, n: int) -> MonomialIdeal:
        return closure_power(self, n)

    def power(self, n: int) -> MonomialIdeal:
        """Ordinary power I^n, memoized alongside the closures."""
        if n not in self._powers:
            self._powers[n] = (
                MonomialIdeal.unit(self.dim) if n == 0 else multiply(self.power(n - 1), self.base)
            )
        return self._powers[n]

    # -- persistence --------------------------------------------------------

    @classmethod
    def open(cls, base: MonomialIdeal, cache_dir=None) -> ClosureCache:
        """Cache backed by a JSON file in ``cache_dir`` (or $NORMHILB_CACHE_DIR)."""
        cache_dir = cache_dir or os.environ.get(CACHE_ENV)
        if not cache_dir:
            return cls(base)
        path = Path(cache_dir) / f"{cache_key(base)}.json"
        cache = cls(base, path=path)
        try:
            data = json.loads(path.read_text())
            if MonomialIdeal.from_json(data["base"]) != base:
                raise ValueError("base mismatch")
            for key, ideal in data["closures"].items():
                cache.closures[int(key)] = MonomialIdeal.from_json(ideal)
            log.debug("closure cache hit: %s (%d levels)", path, len(cache.closures))
        except FileNotFoundError:
            pass
        except (ValueError, KeyError, TypeError, DimensionError) as exc:
            log.warning("ignoring corrupt cache file %s: %s", path, exc)
            cache.closures.clear()
        return cache

    def save(self) -> None:
        if self.path is None:
            return
        self.path.parent.mkdir(parents=True, exist_ok=True)
        payload = {
            "base": self.base.to_json(),
            "closures": {str(n): J.to_json() for n, J in sorted(self.closures.items())},
        }
        tmp = self.path.with_suffix(".tmp")
        tmp.write_text(json.dumps(payload, sort_keys=True))
        tmp.replace(self.path)


def cache_key(base: MonomialIdeal) -> str:
    canon = json.dumps(base.to_json(), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canon.encode()).hexdigest()[:20]


def closure_power(cache: ClosureCache, n: int) -> MonomialIdeal:
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return MonomialIdeal.unit(cache.dim)
    hit = cache.closures.get(n)
    if hit is None:
        hit = cache.closures[n] = minimal_closure_generators(cache.newton, n)
    return hit


def filtration_violations(cache: ClosureCache) -> list[str]:
    """Check the filtration laws on every cached level; empty list means OK."""
    bad = []
    levels = sorted(cache.closures)
    for n in levels:
        if not is_subset(cache.power(n), cache.closures[n]):
            bad.append(f"I^{n} not contained in closure level {n}")
        if n + 1 in cache.closures and not is_subset(cache.closures[n + 1], cache.closures[n]):
            bad.append(f"closure level {n + 1} not contained in level {n}")
    for a in levels:
        for b in levels:
            if a <= b and a + b in cache.closures:
                if not is_subset(multiply(cache.closures[a], cache.closures[b]), cache.closures[a + b]):
                    bad.append(f"closure levels {a}*{b} not contained in level {a + b}")
    return bad


# -- the power oracle ---------------------------------------------------------


@lru_cache(maxsize=512)
def _power(I: MonomialIdeal, m: int) -> MonomialIdeal:
    return power(I, m) if m < 2 else multiply(_power(I, m - 1), I)


def oracle_membership(I: MonomialIdeal, a, n: int, k_max: int = DEFAULT_K_MAX) -> bool:
    """x^a in closure(I^n) witnessed by x^(k a) in I^(k n) for some k <= k_max.

    True is conclusive; False only means no witness with k <= k_max.
    """
    a = _check_vector(a, I.dim)
    for k in range(1, k_max + 1):
        if contains_monomial(_power(I, k * n), tuple(k * x for x in a)):
            return True
    return False


def oracle_grid(I: MonomialIdeal, n_values, bound: int, k_max: int = DEFAULT_K_MAX) -> dict[int, np.ndarray]:
    """Vectorized power oracle over the box [0, bound]^d for several n.

    Returns, per n, a boolean array ``hit`` with ``hit[a]`` true iff
    x^(k a) in I^(k n) for some k <= k_max.  Works on upward closures
    U_m = {b : b >= some exponent of I^m}, built by U_{m+1}[b] = OR_i U_m[b - v_i].
    """
    d = I.dim
    n_values = sorted(set(n_values))
    m_top = k_max * max(n_values)
    side = k_max * bound + 1
    hits = {n: np.zeros((bound + 1,) * d, dtype=bool) for n in n_values}
    reach = np.ones((side,) * d, dtype=bool)  # U_0: everything
    idx = np.arange(bound + 1)
    for m in range(1, m_top + 1):
        nxt = np.zeros_like(reach)
        for v in I.gens:
            if any(x >= side for x in v):
                continue
            dst = tuple(slice(x, None) for x in v)
            src = tuple(slice(0, side - x) for x in v)
            nxt[dst] |= reach[src]
        reach = nxt
        for n in n_values:
            if m % n == 0 and m // n <= k_max:
                k = m // n
                hits[n] |= reach[np.ix_(*([k * idx] * d))]
    return hits


def rees_gap(cache: ClosureCache, n_max: int) -> int | None:
    """Smallest h <= n_max with closure(I^(n+h)) ⊆ I^n for all 1 <= n <= n_max."""
    for h in range(n_max + 1):
        if all(is_subset(closure_power(cache, n + h), cache.power(n)) for n in range(1, n_max + 1)):
            return h
    return None
