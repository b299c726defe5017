"""Lower-numbering ramification filtrations and their Hasse-Herbrand functions.

Filtrations are given by integer jump positions: ``(u, order)`` means
``|G_i| = order`` for every integer ``i >= u`` up to the next jump, and
``G_v = G_ceil(v)`` for real ``v``.  Only the range ``[0, oo)`` is modeled.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import List, Sequence, Tuple, Union

from .pwl import PwlFunction, compose, evaluate, identity, invert, linear
from .rational import RationalLike, parse_rational

BASE_QP = "Qp"
BASE_QP_ZETA = "Qp(zeta_p)"


@dataclass(frozen=True)
class RamificationFiltration:
    """Integer-indexed break table ``((u, |G_u|), ...)`` ending in order 1."""

    jumps: Tuple[Tuple[int, int], ...]

    def __post_init__(self) -> None:
        jumps = tuple((int(u), int(o)) for u, o in self.jumps)
        if not jumps:
            raise ValueError("filtration needs at least one jump")
        if jumps[0][0] != 0:
            raise ValueError("first jump must be at u = 0")
        for (u0, o0), (u1, o1) in zip(jumps, jumps[1:]):
            if u1 <= u0:
                raise ValueError("jump positions must strictly increase")
            if o1 >= o0 or o0 % o1:
                raise ValueError(
                    f"orders must strictly decrease along a subgroup chain: {o0} -> {o1}"
                )
        if jumps[-1][1] != 1:
            raise ValueError("filtration must end with the trivial group")
        if any(o < 1 for _, o in jumps):
            raise ValueError("orders must be positive")
        object.__setattr__(self, "jumps", jumps)

    @classmethod
    def from_pairs(cls, pairs: Sequence[Sequence[int]]) -> "RamificationFiltration":
        """Build from raw pairs, dropping entries that do not lower the order."""
        kept: List[Tuple[int, int]] = []
        for u, o in pairs:
            if kept and o == kept[-1][1]:
                continue
            kept.append((u, o))
        return cls(tuple(kept))

    @property
    def ramification_index(self) -> int:
        return self.jumps[0][1]

    def order(self, v: RationalLike) -> int:
        """``|G_v|`` for real ``v >= 0`` (ceiling convention)."""
        v = parse_rational(v)
        if v < 0:
            raise ValueError("only v >= 0 is modeled")
        i = -(-v.numerator // v.denominator)
        result = self.jumps[0][1]
        for u, o in self.jumps:
            if u <= i:
                result = o
        return result


def phi_from_filtration(filt: RamificationFiltration) -> PwlFunction:
    """Hasse-Herbrand function ``r -> int_0^r dt / (G_0 : G_t)``.

    The slope on ``(i-1, i]`` is ``|G_i| / |G_0|``, so a jump at position
    ``b >= 1`` puts a vertex at ``b - 1``.
    """
    g0 = filt.ramification_index
    x, y = Fraction(0), Fraction(0)
    vertices = [(x, y)]
    slope = Fraction(filt.order(1), g0)
    for u, o in filt.jumps:
        if u < 2:
            continue
        nx = Fraction(u - 1)
        y += slope * (nx - x)
        x = nx
        vertices.append((x, y))
        slope = Fraction(o, g0)
    return PwlFunction(tuple(vertices), slope)


def psi_from_filtration(filt: RamificationFiltration) -> PwlFunction:
    return invert(phi_from_filtration(filt))


def upper_breaks(filt: RamificationFiltration) -> List[Tuple[Fraction, int]]:
    """Each lower jump ``(u, order)`` sent to ``(phi(u), order)``.

    Entries record ``G^phi(u) = G_u`` at the listed jump positions.  Note a
    jump at ``u`` means the group already dropped on ``(u - 1, u]``; the
    Serre-style upper break sits at ``phi(u - 1)``, see :func:`upper_jumps`.
    """
    phi = phi_from_filtration(filt)
    return [(evaluate(phi, u), o) for u, o in filt.jumps]


def upper_jumps(filt: RamificationFiltration) -> List[Fraction]:
    """Upper-numbering breaks ``v`` where ``G^v != G^(v + eps)``."""
    phi = phi_from_filtration(filt)
    return [evaluate(phi, u - 1) for u, _ in filt.jumps[1:]]


# Extension descriptions ---------------------------------------------------


@dataclass(frozen=True)
class Filtration:
    filtration: RamificationFiltration


@dataclass(frozen=True)
class Tame:
    e: int

    def __post_init__(self) -> None:
        if isinstance(self.e, bool) or not isinstance(self.e, int) or self.e < 1:
            raise ValueError(f"tame ramification index must be a positive integer, got {self.e!r}")


@dataclass(frozen=True)
class Unramified:
    pass


@dataclass(frozen=True)
class Cyclotomic:
    """``Q_p(zeta_{p^n})`` over ``Q_p`` or over ``Q_p(zeta_p)``."""

    p: int
    n: int
    base: str = BASE_QP

    def __post_init__(self) -> None:
        from .cyclotomic import is_prime

        if not is_prime(self.p):
            raise ValueError(f"p must be prime, got {self.p}")
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if self.base not in (BASE_QP, BASE_QP_ZETA):
            raise ValueError(f"unknown base field {self.base!r}")


@dataclass(frozen=True)
class Tower:
    """Steps listed bottom-up: ``steps[0]`` is the step nearest the base."""

    steps: Tuple["ExtensionSpec", ...]

    def __post_init__(self) -> None:
        steps = tuple(self.steps)
        if not steps:
            raise ValueError("a tower needs at least one step")
        for s in steps:
            if not isinstance(s, (Filtration, Tame, Unramified, Cyclotomic, Tower)):
                raise ValueError(f"invalid tower step: {s!r}")
        object.__setattr__(self, "steps", steps)


ExtensionSpec = Union[Filtration, Tame, Unramified, Cyclotomic, Tower]


def resolve_phi(spec: ExtensionSpec) -> PwlFunction:
    """Hasse-Herbrand function of the extension described by ``spec``.

    Towers compose as ``phi_bottom o ... o phi_top``.
    """
    if isinstance(spec, Filtration):
        return phi_from_filtration(spec.filtration)
    if isinstance(spec, Tame):
        return linear(Fraction(1, spec.e))
    if isinstance(spec, Unramified):
        return identity()
    if isinstance(spec, Cyclotomic):
        from . import cyclotomic as cy

        params = cy.CyclotomicParams(spec.p, spec.n)
        if spec.base == BASE_QP:
            return cy.phi_cyclotomic_over_K(params)
        if spec.n == 1:
            return identity()
        return cy.phi_cyclotomic_over_F_closed_form(params)
    if isinstance(spec, Tower):
        phi = resolve_phi(spec.steps[-1])
        for step in reversed(spec.steps[:-1]):
            phi = compose(resolve_phi(step), phi)
        return phi
    raise ValueError(f"not an extension spec: {spec!r}")


def resolve_psi(spec: ExtensionSpec) -> PwlFunction:
    return invert(resolve_phi(spec))


def ramification_index(spec: ExtensionSpec) -> int:
    if isinstance(spec, Filtration):
        return spec.filtration.ramification_index
    if isinstance(spec, Tame):
        return spec.e
    if isinstance(spec, Unramified):
        return 1
    if isinstance(spec, Cyclotomic):
        wild = spec.p ** (spec.n - 1)
        return (spec.p - 1) * wild if spec.base == BASE_QP else wild
    if isinstance(spec, Tower):
        return prod(ramification_index(s) for s in spec.steps)
    raise ValueError(f"not an extension spec: {spec!r}")


def transport_upper_index(r: RationalLike, base_spec: ExtensionSpec) -> Fraction:
    """``psi_{F/K}(r)``: the index with ``G^r & H = H^psi(r)``, ``H`` fixing ``F``."""
    r = parse_rational(r)
    if r < 0:
        raise ValueError(f"upper index must be nonnegative, got {r}")
    return evaluate(resolve_psi(base_spec), r)
