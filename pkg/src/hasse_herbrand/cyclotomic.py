"""Ramification of ``L = Q_p(zeta_{p^n})`` over ``K = Q_p`` and ``F = Q_p(zeta_p)``.

``Gal(L/K) = (Z/p^n)^x`` and for ``p^(k-1) <= u <= p^k - 1`` the lower
ramification group ``G_u`` is ``{a = 1 mod p^k}``, of order ``p^(n-k)``.
Two independent constructions of ``phi_{L/F}`` are provided: a closed form
written segment by segment, and the route ``psi_{F/K} o phi_{L/K}`` through
the filtration.  Their agreement is checked by the test suite.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from .pwl import INFINITE, PwlFunction, compose, invert, linear, pwl_from_segments
from .ramification import RamificationFiltration, phi_from_filtration


class WildExtensionRequired(ValueError):
    """``L/F`` is trivial for ``n = 1``; the relative functions need ``n >= 2``."""


def is_prime(p: int) -> bool:
    if isinstance(p, bool) or not isinstance(p, int) or p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class CyclotomicParams:
    p: int
    n: int

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise ValueError(f"p must be prime, got {self.p!r}")
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"n must be an integer >= 1, got {self.n!r}")

    @property
    def m(self) -> int:
        return self.p ** self.n

    def require_wild(self) -> None:
        if self.n < 2:
            raise WildExtensionRequired(
                f"L/F needs n >= 2 (got n = {self.n}); for n = 1, L = F"
            )


def cyclotomic_filtration(params: CyclotomicParams) -> RamificationFiltration:
    """Lower filtration of ``Gal(L/K)``.

    Jumps sit at ``0, 1, p, ..., p^(n-1)``.  For ``p = 2`` the entry at
    ``u = 1`` does not lower the order (``G_0 = G_1``) and is dropped.
    """
    p, n = params.p, params.n
    pairs: List[Tuple[int, int]] = [(0, (p - 1) * p ** (n - 1))]
    for k in range(1, n + 1):
        pairs.append((p ** (k - 1), p ** (n - k)))
    return RamificationFiltration.from_pairs(pairs)


def phi_cyclotomic_over_K(params: CyclotomicParams) -> PwlFunction:
    return phi_from_filtration(cyclotomic_filtration(params))


def phi_cyclotomic_over_F_closed_form(params: CyclotomicParams) -> PwlFunction:
    """``phi_{L/F}``: slope ``1/p^k`` on ``(p^k - 1, p^(k+1) - 1]``, ``k < n - 1``,
    then ``1/p^(n-1)`` for ever.  Vertices are ``(p^k - 1, k(p - 1))``.
    """
    params.require_wild()
    p, n = params.p, params.n
    segments = [(p ** (k + 1) - p ** k, Fraction(1, p ** k)) for k in range(n - 1)]
    segments.append((INFINITE, Fraction(1, p ** (n - 1))))
    return pwl_from_segments(0, segments)


def phi_cyclotomic_over_F_derived(params: CyclotomicParams) -> PwlFunction:
    """``psi_{F/K} o phi_{L/K}`` with ``F/K`` tame of degree ``p - 1``."""
    params.require_wild()
    psi_FK = invert(linear(Fraction(1, params.p - 1)))
    return compose(psi_FK, phi_cyclotomic_over_K(params))


def cyclotomic_table(params: CyclotomicParams) -> dict:
    """Break table and vertex data for ``L/K`` (and ``L/F`` when ``n >= 2``)."""
    filt = cyclotomic_filtration(params)
    phi_K = phi_cyclotomic_over_K(params)
    table = {
        "p": params.p,
        "n": params.n,
        "degree": (params.p - 1) * params.p ** (params.n - 1),
        "jumps": [list(j) for j in filt.jumps],
        "phi_L_K": phi_K,
    }
    if params.n >= 2:
        table["phi_L_F"] = phi_cyclotomic_over_F_closed_form(params)
    return table
