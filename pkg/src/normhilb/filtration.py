"""Intersection conditions HI_r, normal reduction numbers and graded quotient lengths.

Every verdict here is window-limited: it covers exactly the n it reports.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .closure import ClosureCache, closure_power
from .hilbert import InfiniteLength, colength, quotient_length
from .monomial import Exponent, MonomialIdeal, contains_monomial, equals, intersect, is_m_primary, is_subset, multiply


@dataclass(frozen=True)
class HIReport:
    r: int
    n_max: int
    passed: bool
    witness: tuple[int, Exponent] | None = None

    def to_json(self) -> dict:
        w = None if self.witness is None else {"n": self.witness[0], "monomial": list(self.witness[1])}
        return {"r": self.r, "n_range": [0, self.n_max], "passed": self.passed, "witness": w}


@dataclass(frozen=True)
class ReductionReport:
    reduction_ideal: MonomialIdeal
    r_bar: int | None
    n_max: int
    failures: tuple[int, ...] = field(default=())

    def at_most(self, k: int) -> bool:
        """r_bar <= k on the window (False when the window was exhausted)."""
        return self.r_bar is not None and self.r_bar <= k

    def to_json(self) -> dict:
        return {
            "reduction_ideal": self.reduction_ideal.to_json(),
            "r_bar": self.r_bar,
            "n_max": self.n_max,
            "failures": list(self.failures),
            "certified_up_to": self.n_max,
        }


def hi_check(cache: ClosureCache, r: int, n_max: int) -> HIReport:
    """Test I^n ∩ closure(I^(n+r)) = I^n * closure(I^r) for 0 <= n <= n_max."""
    if r < 1 or n_max < 0:
        raise ValueError("need r >= 1 and n_max >= 0")
    bar_r = closure_power(cache, r)
    for n in range(n_max + 1):
        In = cache.power(n)
        lhs = intersect(In, closure_power(cache, n + r))
        rhs = multiply(In, bar_r)
        if not equals(lhs, rhs):
            # rhs ⊆ lhs always holds, so some generator of lhs escapes rhs
            witness = min(g for g in lhs.gens if not contains_monomial(rhs, g))
            return HIReport(r, n_max, False, (n, witness))
    return HIReport(r, n_max, True)


def reduction_number(cache: ClosureCache, n_max: int, J: MonomialIdeal | None = None) -> ReductionReport:
    """Least r with J * closure(I^n) = closure(I^(n+1)) for r <= n < n_max.

    ``r_bar`` is None when the equality still fails at n = n_max - 1.
    """
    J = cache.base if J is None else J
    if not is_subset(J, cache.base):
        raise ValueError(f"reduction ideal {J} is not contained in {cache.base}")
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    failures = []
    for n in range(n_max):
        prod_ = multiply(J, closure_power(cache, n))
        nxt = closure_power(cache, n + 1)
        if not is_subset(prod_, nxt):
            raise AssertionError(f"filtration law broken: J*closure({n}) not in closure({n + 1})")
        if not equals(prod_, nxt):
            failures.append(n)
    if failures and failures[-1] == n_max - 1:
        r_bar = None
    else:
        r_bar = failures[-1] + 1 if failures else 0
    return ReductionReport(J, r_bar, n_max, tuple(failures))


def graded_quotient_lengths(cache: ClosureCache, i_max: int) -> list[int]:
    """ℓ(closure(I^(i+1)) / I*closure(I^i)) for i = 0..i_max."""
    if not is_m_primary(cache.base):
        raise InfiniteLength(f"{cache.base} is not m-primary")
    out = []
    for i in range(i_max + 1):
        lower = multiply(cache.base, closure_power(cache, i))
        out.append(quotient_length(lower, closure_power(cache, i + 1)))
    return out


def quotient_lengths_by_colength(cache: ClosureCache, i_max: int) -> list[int]:
    """Same numbers as :func:`graded_quotient_lengths`, via colength differences."""
    return [
        colength(multiply(cache.base, closure_power(cache, i))) - colength(closure_power(cache, i + 1))
        for i in range(i_max + 1)
    ]
