"""Depth transport for induced tori ``T = R_{K'/K} G_m``.

A character of depth ``r`` corresponds to a Langlands parameter of depth
``phi_{K'/K}(e r)`` with ``e`` the ramification index of ``K'/K``.
Depths are plain nonnegative :class:`Fraction` values.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .pwl import PwlFunction, compose, evaluate, invert, linear
from .rational import RationalLike, parse_rational
from .ramification import ExtensionSpec, ramification_index, resolve_phi

Interval = Tuple[Fraction, Optional[Fraction]]  # None marks +oo


def as_depth(value: RationalLike) -> Fraction:
    d = parse_rational(value)
    if d < 0:
        raise ValueError(f"depth must be nonnegative, got {d}")
    return d


@dataclass(frozen=True)
class DepthReport:
    character_depth: Fraction
    parameter_depth: Fraction

    @property
    def gap(self) -> Fraction:
        return self.parameter_depth - self.character_depth

    @property
    def preserved(self) -> bool:
        return self.gap == 0


@dataclass(frozen=True)
class InducedTorusSpec:
    """``T' = prod_i R_{K_i'/K} G_m``, one ``(spec, label)`` per factor."""

    factors: Tuple[Tuple[ExtensionSpec, str], ...]

    def __post_init__(self) -> None:
        factors = tuple((s, str(label)) for s, label in self.factors)
        if not factors:
            raise ValueError("an induced torus needs at least one factor")
        object.__setattr__(self, "factors", factors)


def depth_map(spec: ExtensionSpec) -> PwlFunction:
    """``r -> phi(e r)`` as a PWL function."""
    return compose(resolve_phi(spec), linear(ramification_index(spec)))


def parameter_depth(spec: ExtensionSpec, character_depth: RationalLike) -> Fraction:
    r = as_depth(character_depth)
    return evaluate(resolve_phi(spec), ramification_index(spec) * r)


def character_depth_from_parameter(
    spec: ExtensionSpec, parameter_depth: RationalLike
) -> Fraction:
    d = as_depth(parameter_depth)
    return evaluate(invert(resolve_phi(spec)), d) / ramification_index(spec)


def depth_shapiro(base_spec: ExtensionSpec, dep_H: RationalLike) -> Fraction:
    """Depth on the ``G`` side of a class whose Shapiro image has depth ``dep_H``."""
    return evaluate(resolve_phi(base_spec), as_depth(dep_H))


def depth_induce(base_spec: ExtensionSpec, dep_G: RationalLike) -> Fraction:
    """``dep_H(N) = psi_{F/K}(dep_G(Ind N))``."""
    return evaluate(invert(resolve_phi(base_spec)), as_depth(dep_G))


def depth_report(spec: ExtensionSpec, character_depth: RationalLike) -> DepthReport:
    r = as_depth(character_depth)
    return DepthReport(r, parameter_depth(spec, r))


def _positive_intervals(f: PwlFunction, slope_shift: Fraction) -> List[Interval]:
    """Maximal open subintervals of ``(0, oo)`` where ``f(x) - slope_shift*x > 0``."""
    verts = [(x, y - slope_shift * x) for x, y in f.vertices]
    tail = f.final_slope - slope_shift

    def g(x: Fraction) -> Fraction:
        return evaluate(f, x) - slope_shift * x

    crit = {x for x, _ in verts} | {Fraction(0)}
    for (x0, g0), (x1, g1) in zip(verts, verts[1:]):
        if g0 * g1 < 0:
            crit.add(x0 + g0 * (x1 - x0) / (g0 - g1))
    xl, gl = verts[-1]
    if gl * tail < 0:
        crit.add(xl - gl / tail)
    pts = sorted(crit)

    # sign on each open gap between critical points, then on the tail
    pieces: List[Interval] = []
    for a, b in zip(pts, pts[1:]):
        if g((a + b) / 2) > 0:
            pieces.append((a, b))
    if g(pts[-1] + 1) > 0:
        pieces.append((pts[-1], None))

    merged: List[Interval] = []
    for a, b in pieces:
        if merged and merged[-1][1] == a and g(a) > 0:
            merged[-1] = (merged[-1][0], b)
        else:
            merged.append((a, b))
    return merged


def inflation_locus(
    spec: ExtensionSpec, scale: Optional[RationalLike] = None
) -> List[Interval]:
    """Where depth strictly grows: ``{r > 0 : phi(scale * r) > r}``.

    ``scale`` defaults to the ramification index of ``spec``, which makes
    this the locus where :func:`parameter_depth` exceeds the character
    depth.  Intervals are open, ``(a, None)`` stands for ``(a, oo)``.
    """
    e = ramification_index(spec) if scale is None else parse_rational(scale)
    if e <= 0:
        raise ValueError(f"scale must be positive, got {e}")
    h = compose(resolve_phi(spec), linear(e))
    return _positive_intervals(h, Fraction(1))


def induced_torus_depth(
    torus: InducedTorusSpec, factor_depths: Sequence[RationalLike]
) -> DepthReport:
    """Sup rule over the factors of an induced torus."""
    if len(factor_depths) != len(torus.factors):
        raise ValueError(
            f"got {len(factor_depths)} depths for {len(torus.factors)} factors"
        )
    depths = [as_depth(d) for d in factor_depths]
    params = [parameter_depth(spec, d) for (spec, _), d in zip(torus.factors, depths)]
    return DepthReport(max(depths), max(params))
