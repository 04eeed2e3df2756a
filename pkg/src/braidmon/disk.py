"""Model disks, arcs, and the homeomorphisms used to transport arcs.

The model disk for ``n`` sheets with ``d`` non-real points has centre ``n+1``,
radius ``n+1`` and punctures ``1..n-d`` on the real axis plus
``n+1 +- j i`` for ``j = 1..d/2``.

Every primitive is compiled against the current puncture configuration so
that its support (taper annuli, tube widths) avoids the punctures it must
fix. All maps are given by closed formulas and accept an isotopy parameter
``t`` in [0, 1].
"""

from __future__ import annotations

import dataclasses
import json
import math
from typing import Sequence

import numpy as np
from shapely.geometry import LineString

from .braid import BraidWord
from .motion import braid_of_motion
from .errors import NumericError

TAU = 2 * math.pi
_EPS = 1e-9


class DiskError(NumericError):
    """A primitive or arc transport could not be realised."""


@dataclasses.dataclass(frozen=True)
class ModelDisk:
    n: int
    d: int

    def __post_init__(self):
        if self.d % 2 or not 0 <= self.d <= self.n:
            raise DiskError(f"invalid complex count d={self.d} for n={self.n}")

    @property
    def centre(self) -> float:
        return self.n + 1.0

    @property
    def radius(self) -> float:
        return self.n + 1.0

    @property
    def real_count(self) -> int:
        return self.n - self.d

    @property
    def punctures(self) -> np.ndarray:
        """Punctures in projection order: reals, then the column bottom to top."""
        c = self.n + 1
        pts = [complex(j, 0) for j in range(1, self.n - self.d + 1)]
        pts += [complex(c, -j) for j in range(self.d // 2, 0, -1)]
        pts += [complex(c, j) for j in range(1, self.d // 2 + 1)]
        return np.array(pts, dtype=complex)

    def position(self, z: complex) -> int:
        """1-based projection-order index of the puncture at ``z``."""
        hits = np.flatnonzero(np.abs(self.punctures - z) < 1e-7)
        if len(hits) != 1:
            raise DiskError(f"{z} is not a puncture of {self}")
        return int(hits[0]) + 1

    def puncture(self, position: int) -> complex:
        return complex(self.punctures[position - 1])

    def real(self, k: float) -> complex:
        return complex(k, 0)


@dataclasses.dataclass(frozen=True)
class ArcPath:
    """A polyline joining two punctures, avoiding all others."""

    points: tuple[complex, ...]

    def __post_init__(self):
        if len(self.points) < 2:
            raise DiskError("an arc needs at least two points")
        object.__setattr__(self, "points", tuple(complex(p) for p in self.points))

    @classmethod
    def segment(cls, a: complex, b: complex) -> ArcPath:
        return cls((a, b))

    @property
    def start(self) -> complex:
        return self.points[0]

    @property
    def end(self) -> complex:
        return self.points[-1]

    def reversed(self) -> ArcPath:
        return ArcPath(tuple(reversed(self.points)))

    def to_json(self) -> str:
        return json.dumps([[p.real, p.imag] for p in self.points])

    @classmethod
    def from_json(cls, text: str) -> ArcPath:
        return cls(tuple(complex(a, b) for a, b in json.loads(text)))

    def simplified(self, tol: float = 1e-9) -> ArcPath:
        pts = [self.points[0]]
        for i in range(1, len(self.points) - 1):
            a, b, c = pts[-1], self.points[i], self.points[i + 1]
            if abs(b - a) < tol:
                continue
            cross = ((b - a).conjugate() * (c - b)).imag
            if abs(cross) < tol * abs(b - a) * abs(c - b) and ((b - a).conjugate() * (c - b)).real > 0:
                continue
            pts.append(b)
        if abs(self.points[-1] - pts[-1]) < tol and len(pts) > 1:
            pts.pop()
        pts.append(self.points[-1])
        return ArcPath(tuple(pts))

    def min_clearance(self, punctures: Sequence[complex]) -> float:
        """Distance from the arc to punctures other than its endpoints."""
        others = [p for p in punctures if abs(p - self.start) > 1e-7 and abs(p - self.end) > 1e-7]
        if not others:
            return math.inf
        return min(_segment_distance(p, a, b) for p in others
                   for a, b in zip(self.points, self.points[1:]))


def _segment_distance(p: complex, a: complex, b: complex) -> float:
    ab = b - a
    if abs(ab) == 0:
        return abs(p - a)
    t = ((p - a) * ab.conjugate()).real / abs(ab) ** 2
    t = min(1.0, max(0.0, t))
    return abs(p - (a + t * ab))


# -- compiled maps -----------------------------------------------------------

class CompiledMap:
    """A plane homeomorphism with an isotopy parameter."""

    def __call__(self, z: np.ndarray, t: float = 1.0) -> np.ndarray:
        raise NotImplementedError

    def inverse(self) -> CompiledMap:
        raise NotImplementedError

    def max_turn(self) -> float:
        """Bound on the rotation angle, used to pick isotopy sampling."""
        return 0.0

    def feature(self) -> float:
        """Narrowest width of the moving region; polylines are cut finer than this."""
        return math.inf


@dataclasses.dataclass
class RotationMap(CompiledMap):
    centre: complex
    r_in: float
    r_out: float
    turns: float
    w_in: float = 0.0
    w_out: float = 0.0

    def angle(self, rho: np.ndarray) -> np.ndarray:
        full = np.ones_like(rho)
        if self.w_in > 0:
            full = np.where(rho < self.r_in, np.clip((rho - (self.r_in - self.w_in)) / self.w_in, 0, 1), full)
        elif self.r_in > 0:
            full = np.where(rho < self.r_in, 0.0, full)
        full = np.where(rho > self.r_out, np.clip(1 - (rho - self.r_out) / self.w_out, 0, 1), full)
        return TAU * self.turns * full

    def __call__(self, z, t=1.0):
        z = np.asarray(z, dtype=complex)
        w = z - self.centre
        return self.centre + w * np.exp(1j * t * self.angle(np.abs(w)))

    def inverse(self):
        return dataclasses.replace(self, turns=-self.turns)

    def max_turn(self):
        return abs(self.turns) * TAU

    def feature(self):
        widths = [w for w in (self.w_in, self.w_out) if w > 0]
        return min(widths + [self.r_out])


def _finger(u: np.ndarray, s: np.ndarray, knots: tuple[float, float, float, float]) -> np.ndarray:
    """Piecewise-linear map of the axis fixing the tube ends a < b and
    translating [m0, m1] by s (0 <= s < b - m1), linear in between."""
    a, m0, m1, b = knots
    out = u.copy()
    lo = (u > a) & (u < m0)
    out[lo] = a + (u[lo] - a) * (m0 + s[lo] - a) / (m0 - a)
    mid = (u >= m0) & (u <= m1)
    out[mid] = u[mid] + s[mid]
    hi = (u > m1) & (u < b)
    out[hi] = b - (b - u[hi]) * (b - m1 - s[hi]) / (b - m1)
    return out


def _finger_inverse(u: np.ndarray, s: np.ndarray, knots: tuple[float, float, float, float]) -> np.ndarray:
    a, m0, m1, b = knots
    out = u.copy()
    lo = (u > a) & (u < m0 + s)
    out[lo] = a + (u[lo] - a) * (m0 - a) / (m0 + s[lo] - a)
    mid = (u >= m0 + s) & (u <= m1 + s)
    out[mid] = u[mid] - s[mid]
    hi = (u > m1 + s) & (u < b)
    out[hi] = b - (b - u[hi]) * (b - m1) / (b - m1 - s[hi])
    return out


@dataclasses.dataclass
class TubeFlow(CompiledMap):
    """Finger move along direction ``e`` inside a tube.

    In coordinates (u, v) with u along the axis from ``origin``, the points
    with u in [m0, m1] move by ``travel`` while u = a and u = b stay put; the
    displacement fades linearly across the tube from |v| = rp/2 to |v| = rp.
    """

    origin: complex
    e: complex
    m0: float
    m1: float
    a: float
    b: float
    travel: float
    rp: float
    inverted: bool = False

    def __call__(self, z, t=1.0):
        z = np.asarray(z, dtype=complex)
        w = (z - self.origin) / self.e
        u, v = np.atleast_1d(w.real).astype(float), np.atleast_1d(w.imag)
        s = self.travel * t * np.clip(2 - 2 * np.abs(v) / self.rp, 0, 1)
        knots = (self.a, self.m0, self.m1, self.b)
        un = (_finger_inverse if self.inverted else _finger)(u, s, knots)
        out = self.origin + self.e * (un + 1j * v)
        return out.reshape(np.shape(z))

    def inverse(self):
        return dataclasses.replace(self, inverted=not self.inverted)

    def feature(self):
        return 0.5 * self.rp


@dataclasses.dataclass
class Composite(CompiledMap):
    parts: list

    def __call__(self, z, t=1.0):
        # parts run simultaneously in t (their supports are disjoint)
        for p in self.parts:
            z = p(z, t)
        return z

    def inverse(self):
        return Composite([p.inverse() for p in reversed(self.parts)])

    def max_turn(self):
        return max((p.max_turn() for p in self.parts), default=0.0)

    def feature(self):
        return min((p.feature() for p in self.parts), default=math.inf)


# -- primitives (specifications compiled against a configuration) -------------

def _others(punct: np.ndarray, moving: np.ndarray) -> np.ndarray:
    keep = np.ones(len(punct), dtype=bool)
    for z in moving:
        keep &= np.abs(punct - z) > 1e-7
    return punct[keep]


def _tube(start: complex, end: complex, punct: np.ndarray, moving: Sequence[complex],
          region: tuple[complex, complex] | None = None) -> CompiledMap:
    """Finger move carrying ``start`` to ``end`` together with ``moving``;
    ``region`` spans the start and end positions of everything that moves."""
    mv = np.asarray(moving, dtype=complex)
    if len(mv) == 0:
        return Composite([])
    length = abs(end - start)
    e = (end - start) / length
    lo, hi = region if region is not None else (start, end)
    u_lo = ((lo - start) / e).real
    u_hi = ((hi - start) / e).real
    u0, u1 = min(u_lo, u_hi, 0.0, length), max(u_lo, u_hi, 0.0, length)
    a, b = start + e * u0, start + e * u1
    others = _others(punct, mv)
    gap = min((_segment_distance(p, a, b) for p in others), default=1.0)
    rho = min(0.2, 0.45 * gap)
    if rho < 1e-6:
        raise DiskError(f"no room for a push from {start} to {end}")
    mu = ((mv - start) / e).real
    return TubeFlow(start, e, float(mu.min()), float(mu.max()), u0 - rho, u1 + rho, length, rho)


@dataclasses.dataclass(frozen=True)
class Rotate:
    """R^t<s, r>: rotate the disc of radius r about s by t full turns."""

    centre: complex
    radius: float
    turns: float

    def compile(self, punct: np.ndarray) -> CompiledMap:
        dist = np.abs(punct - self.centre)
        outside = dist[dist > self.radius + _EPS]
        room = (outside.min() - self.radius) if len(outside) else 1.0
        w = min(0.5 * room, 0.5 * self.radius, 0.25)
        r_in = self.radius + min(1e-3, 0.1 * room)
        return RotationMap(self.centre, 0.0, r_in, self.turns, 0.0, w)

    def __str__(self):
        return f"R^{self.turns:g}<{_fmt(self.centre)},{self.radius:g}>"


@dataclasses.dataclass(frozen=True)
class Annulus:
    """A^t<c, r1, r2>: rotate the annulus r1 <= |z-c| <= r2 by t full turns."""

    centre: complex
    r1: float
    r2: float
    turns: float

    def compile(self, punct: np.ndarray) -> CompiledMap:
        dist = np.abs(punct - self.centre)
        inner = dist[dist < self.r1 - _EPS]
        outer = dist[dist > self.r2 + _EPS]
        w_in = min(0.5 * (self.r1 - inner.max()) if len(inner) else 0.5 * self.r1, 0.25)
        w_out = min(0.5 * (outer.min() - self.r2) if len(outer) else 0.25, 0.25)
        return RotationMap(self.centre, self.r1, self.r2, self.turns, w_in, w_out)

    def __str__(self):
        return f"A^{self.turns:g}<{_fmt(self.centre)},{self.r1:g},{self.r2:g}>"


@dataclasses.dataclass(frozen=True)
class Push:
    """L<c, k>: push the puncture at c to k, and its conjugate alongside."""

    source: complex
    target: complex

    def compile(self, punct: np.ndarray) -> CompiledMap:
        if np.min(np.abs(punct - self.source)) > 1e-7:
            raise DiskError(f"no puncture at {self.source} to push")
        parts = [_tube(self.source, self.target, punct, [self.source])]
        if abs(self.source.imag) > _EPS:
            c = self.source.conjugate()
            parts.append(_tube(c, self.target.conjugate(), punct, [c]))
        return Composite(parts)

    def __str__(self):
        return f"L<{_fmt(self.source)},{_fmt(self.target)}>"


@dataclasses.dataclass(frozen=True)
class Slide:
    """M<(h,j),(k,l)>: translate the real punctures in [h, j] onto [k, l]."""

    h: float
    j: float
    k: float
    l: float

    def compile(self, punct: np.ndarray) -> CompiledMap:
        shift = self.k - self.h
        if abs((self.l - self.j) - shift) > _EPS:
            raise DiskError(f"slide {self} is not a translation")
        if abs(shift) < _EPS:
            return Composite([])
        moving = [p for p in punct if abs(p.imag) < _EPS and self.h - _EPS <= p.real <= self.j + _EPS]
        lo, hi = min(self.h, self.k), max(self.j, self.l)
        return _tube(complex(self.h), complex(self.k), punct, moving, (complex(lo), complex(hi)))

    def __str__(self):
        return f"M<({self.h:g},{self.j:g}),({self.k:g},{self.l:g})>"


@dataclasses.dataclass(frozen=True)
class ColumnShift:
    """C (up=+1) or C^-1 (up=-1): move the column punctures n+1 +- j i one step outward/inward."""

    column: float
    up: int

    def compile(self, punct: np.ndarray) -> CompiledMap:
        col = punct[(np.abs(punct.real - self.column) < _EPS) & (np.abs(punct.imag) > _EPS)]
        upper = col[col.imag > 0]
        if len(upper) == 0:
            return Composite([])
        parts = []
        for sgn, pts in ((1, upper), (-1, col[col.imag < 0])):
            ims = np.abs(pts.imag)
            lo, hi = ims.min(), ims.max()
            lo, hi = (lo, hi + 1) if self.up > 0 else (lo - 1, hi)
            start = complex(self.column, sgn * (ims.min() if self.up > 0 else ims.max()))
            region = (complex(self.column, sgn * lo), complex(self.column, sgn * hi))
            end = start + sgn * self.up * 1j
            parts.append(_tube(start, end, punct, list(pts), region))
        return Composite(parts)

    def __str__(self):
        return "C" if self.up > 0 else "C^-1"


def _fmt(z: complex) -> str:
    if abs(z.imag) < _EPS:
        return f"{z.real:g}"
    return f"{z.real:g}{z.imag:+g}i"


# -- diffeomorphisms -----------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class Diffeo:
    """A composition of primitives, listed in application order."""

    steps: tuple
    source: ModelDisk
    target: ModelDisk
    name: str = ""

    def compile(self) -> list[CompiledMap]:
        punct = self.source.punctures.copy()
        maps = []
        for step in self.steps:
            m = step.compile(punct)
            maps.append(m)
            punct = m(punct)
        return maps

    def puncture_image(self) -> np.ndarray:
        punct = self.source.punctures.copy()
        for m in self.compile():
            punct = m(punct)
        return punct

    def check(self, tol: float = 1e-6) -> None:
        """Raise unless the source punctures land exactly on the target ones."""
        img = self.puncture_image()
        tgt = self.target.punctures
        if len(img) != len(tgt) or any(np.min(np.abs(tgt - z)) > tol for z in img):
            raise DiskError(f"{self.name or 'diffeo'} maps punctures to "
                            f"{np.round(img, 6).tolist()} instead of {tgt.tolist()}")

    def inverse(self) -> InverseDiffeo:
        return InverseDiffeo(self)

    def __str__(self):
        return " . ".join(str(s) for s in self.steps)


@dataclasses.dataclass(frozen=True)
class InverseDiffeo:
    forward: Diffeo

    @property
    def source(self) -> ModelDisk:
        return self.forward.target

    @property
    def target(self) -> ModelDisk:
        return self.forward.source

    @property
    def name(self) -> str:
        return f"({self.forward.name})^-1"

    def compile(self) -> list[CompiledMap]:
        return [m.inverse() for m in reversed(self.forward.compile())]

    def check(self, tol: float = 1e-6) -> None:
        self.forward.check(tol)

    def inverse(self) -> Diffeo:
        return self.forward


def compose(*diffeos) -> Diffeo:
    """Application-order composition of already validated diffeos."""
    for f, g in zip(diffeos, diffeos[1:]):
        if f.target != g.source:
            raise DiskError(f"cannot compose: {f.name} ends in {f.target}, {g.name} starts in {g.source}")
    maps = []
    for f in diffeos:
        maps.extend(f.compile())
    return _Compiled(tuple(maps), diffeos[0].source, diffeos[-1].target)


@dataclasses.dataclass(frozen=True)
class _Compiled:
    maps: tuple
    source: ModelDisk
    target: ModelDisk
    name: str = "composite"

    def compile(self):
        return list(self.maps)

    def inverse(self):
        return _Compiled(tuple(m.inverse() for m in reversed(self.maps)), self.target, self.source)


# -- transporting arcs ---------------------------------------------------------

def _map_polyline(f: CompiledMap, pts: np.ndarray, punct_after: np.ndarray,
                  max_depth: int = 30) -> np.ndarray:
    """Image of a polyline, subdividing until the image polyline is faithful."""
    out = [f(pts[:1])[0]]
    size = 0.5 * f.feature()
    stack = []
    for a, b in zip(pts[:-1], pts[1:]):
        pieces = max(1, int(math.ceil(abs(b - a) / size))) if math.isfinite(size) else 1
        cuts = a + (b - a) * np.linspace(0, 1, pieces + 1)
        stack.extend((cuts[i], cuts[i + 1], 0) for i in range(pieces))
    stack.reverse()
    fa_cache = out[0]
    while stack:
        a, b, depth = stack.pop()
        fa = fa_cache
        fb, fm = f(np.array([b, 0.5 * (a + b)]))
        chord = 0.5 * (fa + fb)
        clear = _clearance(fm, fa, fb, punct_after)
        tol = min(0.02, 0.1 * clear)
        if (abs(fm - chord) > tol or abs(fb - fa) > max(0.25, 4 * abs(b - a))) and depth < max_depth:
            m = 0.5 * (a + b)
            stack.append((m, b, depth + 1))
            stack.append((a, m, depth + 1))
            continue
        if depth >= max_depth and abs(fm - chord) > tol:
            raise DiskError(f"arc transport failed to resolve near {a} (image {fa}, {fm}, {fb}, clearance {clear:.3g})")
        out.append(fb)
        fa_cache = fb
    return np.array(out)


def _clearance(z: complex, a: complex, b: complex, punct: np.ndarray) -> float:
    far = punct[(np.abs(punct - a) > 1e-7) & (np.abs(punct - b) > 1e-7)]
    if len(far) == 0:
        return 1.0
    return float(np.min(np.abs(far - z)))


def apply_diffeo(f, arc: ArcPath, *, max_depth: int = 30) -> ArcPath:
    """Push an arc through a diffeo, snapping the ends onto target punctures."""
    if np.min(np.abs(f.source.punctures - arc.start)) > 1e-6 or \
            np.min(np.abs(f.source.punctures - arc.end)) > 1e-6:
        raise DiskError("arc endpoints are not punctures of the source disk")
    punct = f.source.punctures.copy()
    pts = np.array(arc.points, dtype=complex)
    for m in f.compile():
        punct = m(punct)
        pts = _map_polyline(m, pts, punct, max_depth)
        pts = np.array(ArcPath(tuple(pts)).simplified(1e-10).points)
    tgt = f.target.punctures
    for idx in (0, -1):
        j = int(np.argmin(np.abs(tgt - pts[idx])))
        if abs(tgt[j] - pts[idx]) > 1e-6:
            raise DiskError("arc endpoint does not land on a puncture")
        pts[idx] = tgt[j]
    out = ArcPath(tuple(pts))
    if out.min_clearance(tgt) < 1e-9:
        raise DiskError("transported arc hits a puncture")
    return out


# -- braid words -----------------------------------------------------------------

def half_twist_word(arc: ArcPath, disk: ModelDisk, *, swap_steps: int = 16,
                    check_simple: bool = True) -> BraidWord:
    """Positive half-twist along ``arc`` written in the projection frame of ``disk``.

    The end puncture ``a`` is pushed along the arc to a point ``q`` next to
    ``b``, swapped counterclockwise with ``b``, and ``b`` is pushed back.
    The word depends only on the homotopy class of the arc rel punctures, so
    transported arcs whose polylines cross inside thin folds may skip the
    simplicity check.
    """
    punct = disk.punctures
    ia = int(np.argmin(np.abs(punct - arc.start)))
    ib = int(np.argmin(np.abs(punct - arc.end)))
    if ia == ib:
        raise DiskError("degenerate arc")
    if arc.min_clearance(punct) < 1e-9:
        raise DiskError("arc touches a puncture")
    if check_simple and len(arc.points) > 2 and not LineString([(z.real, z.imag) for z in arc.points]).is_simple:
        raise DiskError("arc is not simple")
    pts = list(arc.points)
    b = pts[-1]
    others = np.delete(punct, [ia, ib])
    last = pts[-2]
    room = abs(b - last)
    if len(others):
        room = min(room, float(np.min(np.abs(others - b))))
    clear = arc.min_clearance(punct)
    eps = min(room / 3, clear / 3 if math.isfinite(clear) else room / 3)
    q = b + (last - b) / abs(last - b) * eps
    path = pts[:-1] + [q]
    frames = []
    base = punct.copy()

    def frame(za, zb):
        f = base.copy()
        f[ia], f[ib] = za, zb
        frames.append(f)

    for z in path:
        frame(z, b)
    mid = 0.5 * (q + b)
    for s in range(1, swap_steps + 1):
        rot = np.exp(1j * math.pi * s / swap_steps)
        frame(mid + (q - mid) * rot, mid + (b - mid) * rot)
    # now a sits at b and b at q; return b along the reversed path
    for z in reversed(path[:-1]):
        frame(b, z)
    return braid_of_motion(frames).free_reduce()


def frame_arcs(disk: ModelDisk) -> list[ArcPath]:
    """Straight arcs between consecutive punctures in projection order."""
    p = disk.punctures
    return [ArcPath.segment(p[i], p[i + 1]) for i in range(len(p) - 1)]


def diffeo_word(f, *, steps_per_turn: int = 64, min_steps: int = 16) -> BraidWord:
    """Braid traced by the punctures along the isotopy defining ``f``."""
    punct = f.source.punctures.copy()
    frames = [punct.copy()]
    for m in f.compile():
        steps = max(min_steps, int(math.ceil(m.max_turn() / TAU * steps_per_turn)))
        start = punct.copy()
        for s in range(1, steps + 1):
            frames.append(m(start, s / steps))
        punct = m(start)
    # constant offsets split the exactly simultaneous crossings of symmetric
    # rotations (a puncture at the centre); they are quadratic in the index so
    # that collinear points stay non-collinear. This is an isotopy.
    n = len(frames[0])
    offsets = 1e-9 * ((np.arange(n) + 1) / n) ** 2 * (1 + 0.5j)
    return braid_of_motion([f + offsets for f in frames])


# -- SVG ---------------------------------------------------------------------------

def to_svg(disk: ModelDisk, arcs: Sequence[ArcPath] = (), *, size: int = 480,
           title: str = "") -> str:
    r = disk.radius
    scale = size / (2.2 * r)

    def xy(z: complex) -> tuple[float, float]:
        return ((z.real - disk.centre + 1.1 * r) * scale, (1.1 * r - z.imag) * scale)

    cx, cy = xy(complex(disk.centre, 0))
    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
             f'viewBox="0 0 {size} {size}">']
    if title:
        parts.append(f"<title>{title}</title>")
    parts.append(f'<circle cx="{cx:.2f}" cy="{cy:.2f}" r="{r * scale:.2f}" fill="none" stroke="black"/>')
    colours = ["#c0392b", "#2471a3", "#229954", "#8e44ad", "#d68910"]
    for i, arc in enumerate(arcs):
        pts = " ".join(f"{x:.2f},{y:.2f}" for x, y in map(xy, arc.points))
        parts.append(f'<polyline points="{pts}" fill="none" stroke="{colours[i % len(colours)]}" '
                     f'stroke-width="1.5"/>')
    for p in disk.punctures:
        x, y = xy(p)
        parts.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="3" fill="black"/>')
    parts.append("</svg>")
    return "\n".join(parts)
