"""Exact piecewise-linear increasing functions on ``[0, oo)``.

A :class:`PwlFunction` is stored as its list of graph vertices plus the
slope of the unbounded last piece.  Every instance is canonical: rationals
in lowest terms, first vertex at ``x = 0``, strictly increasing ``x``,
strictly positive slopes and no vertex whose two adjacent slopes agree.
Two instances are therefore equal as functions iff they compare equal.
"""
from __future__ import annotations

import bisect
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple, Union

from .rational import RationalLike, parse_rational

Vertex = Tuple[Fraction, Fraction]
INFINITE = "infinite"

__all__ = [
    "INFINITE",
    "PwlFunction",
    "compose",
    "evaluate",
    "identity",
    "invert",
    "linear",
    "pwl_equal",
    "pwl_from_segments",
]


def _canonical_vertices(
    vertices: Sequence[Vertex], final_slope: Fraction
) -> Tuple[Vertex, ...]:
    # drop every vertex whose incoming and outgoing slopes agree
    out = [vertices[0]]
    for i in range(1, len(vertices)):
        x0, y0 = out[-1]
        x1, y1 = vertices[i]
        incoming = (y1 - y0) / (x1 - x0)
        if i + 1 < len(vertices):
            x2, y2 = vertices[i + 1]
            outgoing = (y2 - y1) / (x2 - x1)
        else:
            outgoing = final_slope
        if incoming != outgoing:
            out.append((x1, y1))
    return tuple(out)


@dataclass(frozen=True)
class PwlFunction:
    """Continuous, strictly increasing piecewise-linear map on ``[0, oo)``.

    ``vertices`` are ``(x, y)`` pairs starting at ``x = 0``; the function
    continues past the last vertex with slope ``final_slope``.  The
    constructor validates and canonicalizes its input.
    """

    vertices: Tuple[Vertex, ...]
    final_slope: Fraction

    def __post_init__(self) -> None:
        verts = tuple(
            (parse_rational(x), parse_rational(y)) for x, y in self.vertices
        )
        slope = parse_rational(self.final_slope)
        if not verts:
            raise ValueError("a PwlFunction needs at least one vertex")
        if verts[0][0] != 0:
            raise ValueError(f"first vertex must sit at x = 0, got {verts[0][0]}")
        if slope <= 0:
            raise ValueError(f"final slope must be positive, got {slope}")
        for (x0, y0), (x1, y1) in zip(verts, verts[1:]):
            if x1 <= x0:
                raise ValueError("vertex x-coordinates must strictly increase")
            if y1 <= y0:
                raise ValueError("function must be strictly increasing")
        object.__setattr__(self, "vertices", _canonical_vertices(verts, slope))
        object.__setattr__(self, "final_slope", slope)

    @property
    def xs(self) -> Tuple[Fraction, ...]:
        return tuple(x for x, _ in self.vertices)

    @property
    def slopes(self) -> Tuple[Fraction, ...]:
        """Slopes of all pieces, left to right, ending with ``final_slope``."""
        inner = tuple(
            (y1 - y0) / (x1 - x0)
            for (x0, y0), (x1, y1) in zip(self.vertices, self.vertices[1:])
        )
        return inner + (self.final_slope,)

    def is_concave(self) -> bool:
        s = self.slopes
        return all(a >= b for a, b in zip(s, s[1:]))

    def __call__(self, x: RationalLike) -> Fraction:
        return evaluate(self, x)

    def __repr__(self) -> str:
        from .rational import format_rational as f

        pts = ", ".join(f"({f(x)}, {f(y)})" for x, y in self.vertices)
        return f"PwlFunction([{pts}], final_slope={f(self.final_slope)})"


def pwl_from_segments(
    start_value: RationalLike,
    segments: Iterable[Tuple[Union[RationalLike, str], RationalLike]],
) -> PwlFunction:
    """Build a function from its value at 0 and a run of ``(length, slope)``.

    The last segment, and only the last, has length :data:`INFINITE`.

    >>> pwl_from_segments(0, [(2, "1/2"), (INFINITE, "1/6")])
    PwlFunction([(0, 0), (2, 1)], final_slope=1/6)
    """
    segments = list(segments)
    if not segments:
        raise ValueError("at least one segment is required")
    x = Fraction(0)
    y = parse_rational(start_value)
    vertices = [(x, y)]
    for i, (length, slope) in enumerate(segments):
        slope = parse_rational(slope)
        if slope <= 0:
            raise ValueError(f"segment {i}: slope must be positive, got {slope}")
        last = i == len(segments) - 1
        if length == INFINITE:
            if not last:
                raise ValueError(f"segment {i}: only the last segment may be infinite")
            return PwlFunction(tuple(vertices), slope)
        if last:
            raise ValueError("the last segment must have infinite length")
        length = parse_rational(length)
        if length <= 0:
            raise ValueError(f"segment {i}: length must be positive, got {length}")
        x, y = x + length, y + slope * length
        vertices.append((x, y))
    raise AssertionError("unreachable")


def identity() -> PwlFunction:
    return PwlFunction(((Fraction(0), Fraction(0)),), Fraction(1))


def linear(slope: RationalLike) -> PwlFunction:
    """``r -> slope * r``."""
    return PwlFunction(((Fraction(0), Fraction(0)),), parse_rational(slope))


def _locate(xs: Sequence[Fraction], x: Fraction) -> int:
    # index of the vertex that starts the piece containing x
    return bisect.bisect_right(xs, x) - 1


def evaluate(f: PwlFunction, x: RationalLike) -> Fraction:
    x = parse_rational(x)
    if x < 0:
        raise ValueError(f"argument must be nonnegative, got {x}")
    i = _locate(f.xs, x)
    x0, y0 = f.vertices[i]
    if i + 1 < len(f.vertices):
        x1, y1 = f.vertices[i + 1]
        slope = (y1 - y0) / (x1 - x0)
    else:
        slope = f.final_slope
    return y0 + slope * (x - x0)


def _preimage(g: PwlFunction, y: Fraction) -> Optional[Fraction]:
    """The unique ``x >= 0`` with ``g(x) = y``, or None if ``y < g(0)``."""
    ys = [v[1] for v in g.vertices]
    if y < ys[0]:
        return None
    i = bisect.bisect_right(ys, y) - 1
    x0, y0 = g.vertices[i]
    if i + 1 < len(g.vertices):
        x1, y1 = g.vertices[i + 1]
        slope = (y1 - y0) / (x1 - x0)
    else:
        slope = g.final_slope
    return x0 + (y - y0) / slope


def compose(f: PwlFunction, g: PwlFunction) -> PwlFunction:
    """Return ``f o g``, i.e. ``x -> f(g(x))``.

    Breakpoints of the result are those of ``g`` together with the
    ``g``-preimages of the breakpoints of ``f``.
    """
    if g.vertices[0][1] < 0:
        raise ValueError("inner function must be nonnegative at 0")
    xs = set(g.xs)
    for b in f.xs:
        pre = _preimage(g, b)
        if pre is not None:
            xs.add(pre)
    verts = tuple((x, evaluate(f, evaluate(g, x))) for x in sorted(xs))
    return PwlFunction(verts, f.final_slope * g.final_slope)


def invert(f: PwlFunction) -> PwlFunction:
    """Inverse function; requires ``f(0) = 0`` so it lives on ``[0, oo)``."""
    if f.vertices[0][1] != 0:
        raise ValueError("only functions with f(0) = 0 are invertible on [0, oo)")
    return PwlFunction(tuple((y, x) for x, y in f.vertices), 1 / f.final_slope)


def pwl_equal(f: PwlFunction, g: PwlFunction) -> bool:
    return f == g
