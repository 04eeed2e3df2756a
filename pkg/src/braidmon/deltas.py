"""The Lefschetz diffeomorphisms of the singularity types and of B-points.

Each builder returns a :class:`Diffeo` from the model disk on the left of the
critical value (``d`` non-real points) to the model disk on its right. Steps
are listed in application order. ``d`` always refers to the source disk.
"""

from __future__ import annotations

import math

from .disk import (Annulus, ColumnShift, Diffeo, DiskError, ModelDisk, Push, Rotate, Slide)

S3 = math.sqrt(3) / 4


def _targets(kind: str, nu: int | None, d: int) -> int:
    """Complex count on the right of the point given the count on the left."""
    odd = bool(nu and nu % 2)
    if kind in ("a1",) or kind in ("d1", "f1", "g1") and odd:
        return d - 2
    if kind in ("a2",) or kind in ("d2", "f2", "g2") and odd:
        return d + 2
    return d


def build_delta(kind: str, n: int, d: int, k: int, l: int | None = None, *, nu: int | None = None,
                ab_order: str | None = None, orientation: int = 1) -> Diffeo:
    """Diffeo of type ``kind`` at Lefschetz pair (k, l) with source complex count ``d``."""
    steps = _steps(kind, n, d, k, l if l is not None else k + 1, nu, ab_order, orientation)
    tgt = ModelDisk(n, _targets(kind, nu, d))
    power = orientation if kind == "com" else nu
    name = f"Delta_{kind}" + (f"^{power}" if power else "") + f"<{k},{l if l is not None else k + 1}>"
    f = Diffeo(tuple(steps), ModelDisk(n, d), tgt, name)
    f.check()
    return f


def _steps(kind, n, d, k, l, nu, ab_order, orientation):
    c = n + 1
    up = ColumnShift(c, +1)
    down = ColumnShift(c, -1)
    top = complex(c, 1)

    def to_slot(target):
        return Push(top, target)

    def from_slot(source):
        return Push(source, top)

    open2 = Slide(k, n - d, k + 2, n - d + 2)
    close2 = Slide(k + 2, n - d, k, n - d - 2)
    pair = complex(k + 0.5, 0.5)
    if kind == "a1":
        return [to_slot(pair), open2, Rotate(k + 0.5, 0.5, 0.25), down]
    if kind == "a2":
        return [Rotate(k + 0.5, 0.5, 0.25), up, from_slot(pair), close2]
    if kind == "b":
        return [Rotate(k + 0.5, 0.5, 1.0)]
    if kind == "c":
        return [Rotate((k + l) / 2, (l - k) / 2, 0.5)]
    if kind == "d1":
        if nu % 2:
            return [to_slot(pair), open2, Rotate(k + 0.5, 0.5, nu / 4), down]
        return [Rotate(k + 0.5, 0.5, nu / 4)]
    if kind == "d2":
        if nu % 2:
            return [Rotate(k + 0.5, 0.5, nu / 4), up, from_slot(pair), close2]
        return [to_slot(pair), open2, Rotate(k + 0.5, 0.5, nu / 4),
                Slide(k + 2, n - d + 2, k, n - d), from_slot(pair)]
    if kind == "d3":
        z = complex(k + 0.25, S3)
        return [to_slot(z), Slide(k, n - d, k + 1, n - d + 1), Rotate(k + 0.5, 0.5, 1 / 3),
                Slide(k + 1, n - d + 1, k, n - d), from_slot(z)]
    if kind == "e1":
        return [to_slot(pair), Rotate(k + 0.5, 0.5, 0.75), from_slot(pair)]
    if kind == "e2":
        lo, hi = complex(k + 0.25, S3), complex(l - 0.25, S3)
        first, second = (hi, lo) if ab_order != "a>b" else (lo, hi)
        return [to_slot(first), Push(complex(c, 2), second), Rotate(k + 0.5, 0.5, 1 / 3),
                Push(second, complex(c, 2)), from_slot(first)]
    if kind in ("f1", "f2"):
        big_d = [Push(top, complex(k + 1, 1)), Slide(k + 1, n - d, k + 3, n - d + 2), Slide(k, k, k + 1, k + 1)]
        big_d_inv = [Slide(k + 1, k + 1, k, k), Slide(k + 3, n - d + 2, k + 1, n - d),
                     Push(complex(k + 1, 1), top)]
        if kind == "f1":
            if nu % 2:
                return big_d + [Rotate(k + 1, 1, nu / 4), down]
            return [Rotate(k + 1, 1, nu / 4)]
        if nu % 2:
            return [Rotate(k + 1, 1, nu / 4), up, Push(complex(k + 1, 1), top), Slide(k + 1, k + 1, k, k),
                    Slide(k + 3, n - d, k + 1, n - d - 2)]
        return big_d + [Rotate(k + 1, 1, nu / 4)] + big_d_inv
    if kind == "g1":
        if nu % 2:
            return [Slide(k + 1, n - d, k + 3, n - d + 2), Push(top, complex(k + 1, 0.5)),
                    Annulus(k + 1, 0.75, 1.25, 0.5), Rotate(k + 1, 0.5, nu / 4),
                    # printed as M<(k-1/2,k+1/2),(k,k+1)>, which leaves the pair off the
                    # integer slots; the pair sits at k+1/2, k+3/2 after the rotation
                    Slide(k + 0.5, k + 1.5, k, k + 1), down]
        return [Slide(k, k, k + 0.5, k + 0.5), Annulus(k + 1.5, 0.75, 1.25, 0.5),
                Rotate(k + 1.5, 0.5, nu / 4), Slide(k + 1, k + 2, k, k + 1),
                Slide(k + 2.5, k + 2.5, k + 2, k + 2)]
    if kind == "g2":
        if nu % 2:
            return [Slide(k, k, k + 0.5, k + 0.5), Annulus(k + 1.5, 0.75, 1.25, 0.5),
                    Rotate(k + 1.5, 0.5, nu / 4), up, Push(complex(k + 1.5, 0.5), top),
                    Slide(k + 2.5, k + 2.5, k, k), Slide(k + 3, n - d, k + 1, n - d - 2)]
        return [Slide(k + 1, n - d, k + 3, n - d + 2), Push(top, complex(k + 1, 0.5)),
                Annulus(k + 1, 0.75, 1.25, 0.5), Rotate(k + 1, 0.5, nu / 4),
                Push(complex(k + 1, 0.5), top), Slide(k + 2, n - d + 2, k, n - d)]
    if kind == "g3":
        z = complex(k - 0.25, S3)
        return [Slide(k + 1, k + 1, k + 0.5, k + 0.5), to_slot(z), Rotate(k, 0.5, 1 / 3),
                from_slot(z), Slide(k + 0.5, k + 0.5, k + 1, k + 1)]
    if kind == "com":
        if orientation == 0:
            return []
        s = orientation
        return [Rotate(complex(c, k + 0.5), 0.5, 0.5 * s), Rotate(complex(c, -(k + 0.5)), 0.5, -0.5 * s)]
    raise DiskError(f"unknown Delta kind {kind!r}")
