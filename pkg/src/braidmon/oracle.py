"""Braid monodromy by direct numerical root tracking.

This is deliberately independent of the disk-model engine: fibers are solved
with ``numpy.roots`` along explicit loops in the x-plane, strands are matched
step to step, and crossings in the tilted projection are read off from the
sampled positions with bisection wherever the order changes by more than a
set of disjoint adjacent swaps.
"""

from __future__ import annotations

import cmath
import csv
import dataclasses
import math
from typing import Callable, Sequence

import numpy as np
from scipy.optimize import linear_sum_assignment

from .analysis import CriticalChart
from .braid import BraidWord
from .curve import CurvePoly
from .errors import NumericError

TILT = 1e-6
_TURN = cmath.exp(-1j * TILT)


# -- loops in the base ----------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class Piece:
    """A path t -> x(t), t in [0, 1]."""

    fn: Callable[[float], complex]
    weight: float

    def __call__(self, t: float) -> complex:
        return self.fn(t)


def segment(a: complex, b: complex) -> Piece:
    return Piece(lambda t: a + (b - a) * t, abs(b - a))


def arc(centre: complex, radius: float, start_angle: float, sweep: float) -> Piece:
    return Piece(lambda t: centre + radius * cmath.exp(1j * (start_angle + sweep * t)),
                 abs(sweep) * radius)


def gamma_loop(chart: CriticalChart, j: int, *, scale: float = 1.0) -> list[Piece]:
    """Pieces of the loop Gamma_j (1-based): left along the axis, dodging
    x_1..x_{j-1} below, once around x_j counterclockwise, and back."""
    xs = [p.x_value for p in chart.points]
    rs = [a * scale for a in chart.alphas]
    out = []
    here = chart.base_point
    for k in range(j - 1):
        out.append(segment(here, xs[k] + rs[k]))
        out.append(arc(xs[k], rs[k], 0.0, -math.pi))
        here = xs[k] - rs[k]
    out.append(segment(here, xs[j - 1] + rs[j - 1]))
    forward = list(out)
    loop = arc(xs[j - 1], rs[j - 1], 0.0, 2 * math.pi)
    back = [Piece(lambda t, p=p: p(1 - t), p.weight) for p in reversed(forward)]
    return forward + [loop] + back


# -- tracking ---------------------------------------------------------------------

@dataclasses.dataclass
class Track:
    """Matched root samples along a loop; ``roots[s][i]`` is strand ``i``."""

    params: list[float]
    roots: list[np.ndarray]
    xs: list[complex]


def _solve(curve: CurvePoly, x: complex) -> np.ndarray:
    return np.roots(curve.fiber_coeffs(x))


def _assign(prev: np.ndarray, cur: np.ndarray, ratio: float) -> np.ndarray | None:
    if len(cur) != len(prev):
        return None
    if len(prev) == 1:
        return cur
    cost = np.abs(prev[:, None] - cur[None, :])
    _, cols = linear_sum_assignment(cost)
    out = cur[cols]
    d = np.abs(prev[:, None] - prev[None, :])
    np.fill_diagonal(d, np.inf)
    sep = d.min()
    if np.max(np.abs(out - prev)) >= ratio * sep:
        return None
    return out


class _Path:
    def __init__(self, pieces: Sequence[Piece]):
        self.pieces = list(pieces)

    def __call__(self, t: float) -> complex:
        n = len(self.pieces)
        i = min(int(t * n), n - 1)
        return self.pieces[i](t * n - i)

    def breaks(self) -> list[float]:
        n = len(self.pieces)
        return [i / n for i in range(n + 1)]


def track(curve: CurvePoly, pieces: Sequence[Piece], *, step: float = 0.02,
          ratio: float = 0.3, min_step: float = 1e-12) -> Track:
    """Follow the fiber roots along the concatenated pieces with adaptive steps."""
    path = _Path(pieces)
    n = len(pieces)
    t = 0.0
    x = path(0.0)
    roots = _solve(curve, x)
    params, samples, xs = [0.0], [roots], [x]
    h = step / n
    while t < 1.0 - 1e-15:
        t_next = min(1.0, t + h)
        # never straddle a piece boundary
        nb = math.floor(t * n + 1e-12) + 1
        t_next = min(t_next, nb / n)
        x_next = path(t_next)
        cur = _assign(samples[-1], _solve(curve, x_next), ratio)
        if cur is None:
            h *= 0.5
            if h < min_step:
                raise NumericError(f"root tracking stalled at x={x_next}")
            continue
        t = t_next
        params.append(t)
        samples.append(cur)
        xs.append(x_next)
        moved = np.max(np.abs(cur - samples[-2]))
        d = np.abs(cur[:, None] - cur[None, :])
        np.fill_diagonal(d, np.inf)
        if len(cur) < 2 or moved < 0.1 * d.min():
            h = min(h * 2, step / n)
    return Track(params, samples, xs)


# -- reading crossings ----------------------------------------------------------------

def _order(z: np.ndarray) -> list[int]:
    return list(np.argsort((z * _TURN).real, kind="stable"))


def _swaps(order_a: list[int], order_b: list[int]) -> list[int] | None:
    """Positions p (0-based) such that swapping (p, p+1) in disjoint pairs maps a to b."""
    out = []
    p = 0
    n = len(order_a)
    while p < n:
        if order_a[p] == order_b[p]:
            p += 1
            continue
        if p + 1 < n and order_a[p] == order_b[p + 1] and order_a[p + 1] == order_b[p]:
            out.append(p)
            p += 2
            continue
        return None
    return out


class _Reader:
    def __init__(self, resolve: Callable[[float, float, np.ndarray], np.ndarray]):
        self.resolve = resolve
        self.letters: list[tuple[int, int]] = []

    def interval(self, ta, za, tb, zb, depth=0):
        oa, ob = _order(za), _order(zb)
        if oa == ob:
            return
        sw = _swaps(oa, ob)
        if sw is None or depth < 2 and len(sw) > 1:
            if depth > 60:
                raise NumericError("could not separate simultaneous crossings")
            tm = 0.5 * (ta + tb)
            zm = self.resolve(ta, tm, za)
            self.interval(ta, za, tm, zm, depth + 1)
            self.interval(tm, zm, tb, zb, depth + 1)
            return
        for p in sw:
            left, right = oa[p], oa[p + 1]
            dy = za[left].imag - za[right].imag
            dy2 = zb[left].imag - zb[right].imag
            if np.sign(dy) != np.sign(dy2):
                if depth > 60:
                    raise NumericError("strands pass too close to read a crossing")
                tm = 0.5 * (ta + tb)
                zm = self.resolve(ta, tm, za)
                self.interval(ta, za, tm, zm, depth + 1)
                self.interval(tm, zm, tb, zb, depth + 1)
                return
        for p in sw:
            left, right = oa[p], oa[p + 1]
            dy = za[left].imag - za[right].imag
            self.letters.append((p + 1, 1 if dy < 0 else -1))


def read_track(curve: CurvePoly, tr: Track, pieces: Sequence[Piece]) -> BraidWord:
    """Read the braid of a tracked loop.

    Each strand gets a fixed offset far below the strand separation along the
    projection axis. This is an isotopy, and it splits the exactly
    simultaneous crossings that symmetric fibers such as {0, +w, -w} produce.
    """
    path = _Path(pieces)
    n = len(tr.roots[0])
    scale = 1 + max(float(np.max(np.abs(r))) for r in tr.roots)
    offsets = 1e-9 * scale * (np.arange(n) + 1) / n / _TURN

    def resolve(ta, tm, za):
        z = _assign(za - offsets, _solve(curve, path(tm)), 0.45)
        if z is None:
            raise NumericError("refinement lost strand identity")
        return z + offsets

    reader = _Reader(resolve)
    for s in range(len(tr.params) - 1):
        reader.interval(tr.params[s], tr.roots[s] + offsets, tr.params[s + 1],
                        tr.roots[s + 1] + offsets)
    n = len(tr.roots[0])
    return BraidWord(n, tuple(reader.letters)).free_reduce()


def read_explicit(frames_fn: Callable[[float], np.ndarray], samples: int = 200) -> BraidWord:
    """Braid of an explicitly parametrised motion t -> positions (t in [0, 1])."""
    reader = _Reader(lambda ta, tm, za: frames_fn(tm))
    ts = np.linspace(0, 1, samples + 1)
    zs = [frames_fn(t) for t in ts]
    for a in range(samples):
        reader.interval(ts[a], zs[a], ts[a + 1], zs[a + 1])
    return BraidWord(len(zs[0]), tuple(reader.letters)).free_reduce()


# -- frames -------------------------------------------------------------------------

def model_points(roots: np.ndarray, tol: float = 1e-9) -> np.ndarray:
    """Model-disk position of each root: reals to 1..r in order, upper roots
    to n+1+ji by increasing imaginary part and lower ones to the conjugates."""
    n = len(roots)
    out = np.zeros(n, dtype=complex)
    real = [i for i in range(n) if abs(roots[i].imag) <= tol * (1 + abs(roots[i]))]
    upper = [i for i in range(n) if roots[i].imag > tol * (1 + abs(roots[i]))]
    lower = [i for i in range(n) if roots[i].imag < -tol * (1 + abs(roots[i]))]
    if len(upper) != len(lower):
        raise NumericError("fiber is not conjugation symmetric")
    for r, i in enumerate(sorted(real, key=lambda i: roots[i].real)):
        out[i] = r + 1
    for r, i in enumerate(sorted(upper, key=lambda i: roots[i].imag)):
        out[i] = complex(n + 1, r + 1)
    for r, i in enumerate(sorted(lower, key=lambda i: -roots[i].imag)):
        out[i] = complex(n + 1, -(r + 1))
    return out


def frame_change(roots: np.ndarray) -> BraidWord:
    """Braid of the straight-line motion from the model points to ``roots``."""
    start = model_points(roots)
    return read_explicit(lambda t: start + (roots - start) * t)


# -- monodromy --------------------------------------------------------------------------

@dataclasses.dataclass
class OracleEntry:
    j: int
    raw: BraidWord     # in the projection frame of the actual base fiber
    word: BraidWord    # in the model frame


def loop_braid(curve: CurvePoly, pieces: Sequence[Piece], *, step: float = 0.02) -> tuple[BraidWord, Track]:
    tr = track(curve, pieces, step=step)
    a, b = tr.roots[0], tr.roots[-1]
    _, cols = linear_sum_assignment(np.abs(a[:, None] - b[None, :]))
    if np.max(np.abs(a - b[cols])) > 1e-6 * (1 + np.max(np.abs(a))):
        raise NumericError("loop does not close")
    return read_track(curve, tr, pieces), tr


def oracle_monodromy(chart: CriticalChart, *, step: float = 0.02, radius_scale: float = 1.0,
                     dump: str | None = None) -> list[OracleEntry]:
    curve = chart.curve
    base = _solve(curve, chart.base_point)
    beta = frame_change(base)
    out = []
    rows = []
    for j in range(1, chart.p + 1):
        pieces = gamma_loop(chart, j, scale=radius_scale)
        raw, tr = loop_braid(curve, pieces, step=step)
        # raw is read in the order of the samples starting at ``tr.roots[0]``,
        # which is the same base fiber, so the frame change applies directly
        word = (beta * raw * beta.inverse()).free_reduce()
        out.append(OracleEntry(j, raw, word))
        if dump:
            for t, x, r in zip(tr.params, tr.xs, tr.roots):
                rows.append([j, t, x.real, x.imag] + [v for z in r for v in (z.real, z.imag)])
    if dump:
        with open(dump, "w", newline="") as fh:
            csv.writer(fh).writerows(rows)
    return out


def local_braid(curve: CurvePoly, centre: complex = 0.0, radius: float = 1.0, *,
                step: float = 0.01) -> BraidWord:
    """Braid of the fiber over the circle |x - centre| = radius, starting at
    centre + radius, in that fiber's projection frame."""
    word, _ = loop_braid(curve, [arc(centre, radius, 0.0, 2 * math.pi)], step=step)
    return word


def boundary_braid(chart: CriticalChart, *, step: float = 0.02) -> BraidWord:
    """Braid of the counterclockwise circle through the base point enclosing every
    critical value, in the model frame of the base fiber."""
    curve = chart.curve
    if not chart.p:
        return BraidWord.identity(curve.n)
    xs = [p.x_value for p in chart.points]
    centre = 0.5 * (xs[0] + xs[-1])
    raw, _ = loop_braid(curve, [arc(centre, chart.base_point - centre, 0.0, 2 * math.pi)], step=step)
    beta = frame_change(_solve(curve, chart.base_point))
    return (beta * raw * beta.inverse()).free_reduce()
