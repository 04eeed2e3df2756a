"""Artin words of piecewise-linear motions of points in the plane.

Points are projected onto a line tilted clockwise by ``TILT`` radians from the
real axis, so points sharing a real part are ordered by increasing imaginary
part. Position ``i`` is the i-th point from the left. A crossing in which the
left point passes *below* the right one is sigma_i (counterclockwise exchange).
"""

from __future__ import annotations

import cmath
from typing import Sequence

import numpy as np

from .braid import BraidWord

TILT = 1e-6
_ROT = cmath.exp(-1j * TILT)


class MotionError(RuntimeError):
    pass


def projection_order(points: Sequence[complex]) -> list[int]:
    """Indices of ``points`` sorted by tilted real part."""
    z = np.asarray(points, dtype=complex) * _ROT
    return sorted(range(len(z)), key=lambda j: z[j].real)


def braid_of_motion(frames: Sequence[Sequence[complex]], *, min_gap: float = 1e-12,
                    _depth: int = 0) -> BraidWord:
    """Braid swept out by points moving linearly between consecutive frames.

    ``frames[t][j]`` is the position of strand ``j`` at time ``t``. The word is
    expressed in the projection frame of ``frames[0]`` at the start and of
    ``frames[-1]`` at the end.
    """
    z = np.asarray(frames, dtype=complex) * _ROT
    if z.ndim != 2:
        raise MotionError("frames must be a 2-d array (time, strand)")
    n = z.shape[1]
    order = sorted(range(n), key=lambda j: z[0, j].real)
    pos = [0] * n
    for p, j in enumerate(order):
        pos[j] = p
    letters: list[tuple[int, int]] = []
    for t in range(len(z) - 1):
        _step(z[t], z[t + 1], pos, letters, min_gap, 0)
    return BraidWord(max(n, 1), tuple(letters))


def _step(a: np.ndarray, b: np.ndarray, pos: list[int], letters: list, min_gap: float,
          depth: int):
    n = len(a)
    events = []
    for p in range(n):
        for q in range(p + 1, n):
            left, right = (p, q) if pos[p] < pos[q] else (q, p)
            d0 = a[left].real - a[right].real
            d1 = b[left].real - b[right].real
            if d1 > 0:
                s = 0.0 if d0 >= 0 else d0 / (d0 - d1)
                events.append((s, left, right))
    if not events:
        return
    events.sort()
    # simultaneous or non-adjacent events: split the step
    ok = True
    trial = list(pos)
    for k, (s, left, right) in enumerate(events):
        if abs(trial[left] - trial[right]) != 1:
            ok = False
            break
        if k + 1 < len(events) and events[k + 1][0] - s < 1e-12:
            pair = {left, right}
            if pair & {events[k + 1][1], events[k + 1][2]}:
                ok = False
                break
        trial[left], trial[right] = trial[right], trial[left]
    if not ok:
        if depth > 40:
            raise MotionError("cannot resolve simultaneous crossings")
        mid = 0.5 * (a + b)
        _step(a, mid, pos, letters, min_gap, depth + 1)
        _step(mid, b, pos, letters, min_gap, depth + 1)
        return
    for s, left, right in events:
        za = a[left] + s * (b[left] - a[left])
        zb = a[right] + s * (b[right] - a[right])
        dy = za.imag - zb.imag
        if abs(dy) < min_gap:
            raise MotionError(f"strands {left} and {right} collide")
        i = min(pos[left], pos[right]) + 1
        letters.append((i, 1 if dy < 0 else -1))
        pos[left], pos[right] = pos[right], pos[left]


def straight_motion(start: Sequence[complex], end: Sequence[complex], steps: int = 1):
    """Frames for each point moving along a straight segment."""
    a = np.asarray(start, dtype=complex)
    b = np.asarray(end, dtype=complex)
    return [a + (b - a) * (k / steps) for k in range(steps + 1)]
