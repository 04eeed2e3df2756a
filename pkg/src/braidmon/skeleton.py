"""Generalized skeletons: half-twist arcs whose product is the local braid.

Each skeleton lives in the model disk on the right of its critical value.
Arcs are built by gathering the singular cluster into its local picture
(the same pushes and slides the matching Delta starts with), joining
consecutive points there by straight segments, and carrying the segments
back to the model disk.
"""

from __future__ import annotations

import dataclasses
import math

import numpy as np

from .braid import BraidWord
from .disk import (ArcPath, DiskError, ModelDisk, Push, Slide, _map_polyline,
                   half_twist_word)

S3 = math.sqrt(3) / 4


@dataclasses.dataclass(frozen=True)
class Skeleton:
    """Arcs plus the product pattern ``[(arc index, exponent), ...]``."""

    disk: ModelDisk
    arcs: tuple[ArcPath, ...]
    pattern: tuple[tuple[int, int], ...]
    type_tag: str = ""

    def word(self, arcs: tuple[ArcPath, ...] | None = None, disk: ModelDisk | None = None) -> BraidWord:
        """Product of half-twists along ``arcs`` (default: the skeleton's own)."""
        arcs = self.arcs if arcs is None else arcs
        disk = self.disk if disk is None else disk
        words = [half_twist_word(a, disk, check_simple=False) for a in arcs]
        out = BraidWord.identity(disk.n)
        for i, e in self.pattern:
            out = out * (words[i] ** e)
        return out.free_reduce()


def _pattern_power(seq: list[int], power: int) -> tuple[tuple[int, int], ...]:
    return tuple((i, 1) for i in seq) * power


def _triangle(m: int) -> list[int]:
    """Arc indices of the half twist on m consecutive strands."""
    out = []
    for top in range(m - 1, 0, -1):
        out.extend(range(top))
    return out


def _gathered(disk: ModelDisk, steps: list, local: list[tuple[complex, complex]]) -> tuple[ArcPath, ...]:
    """Carry straight segments of the gathered picture back to ``disk``."""
    punct = disk.punctures.copy()
    maps, stages = [], [punct]
    for s in steps:
        m = s.compile(punct)
        punct = m(punct)
        maps.append(m)
        stages.append(punct)
    for a, b in local:
        for z in (a, b):
            if np.min(np.abs(punct - z)) > 1e-6:
                raise DiskError(f"gathered picture has no puncture at {z}")
    arcs = []
    for a, b in local:
        pts = np.array([a, b], dtype=complex)
        for m, before in zip(reversed(maps), reversed(stages[:-1])):
            pts = _map_polyline(m.inverse(), pts, before)
            pts = np.array(ArcPath(tuple(pts)).simplified(1e-10).points)
        for idx in (0, -1):
            j = int(np.argmin(np.abs(disk.punctures - pts[idx])))
            pts[idx] = disk.punctures[j]
        arcs.append(ArcPath(tuple(pts)))
    return tuple(arcs)


def generalized_skeleton(type_tag: str, n: int, d: int, k: int, l: int | None = None, *,
                         nu: int | None = None, m: int | None = None,
                         ab_order: str | None = None) -> Skeleton:
    """Skeleton of a singular point with Lefschetz pair (k, l) in the model
    disk with ``d`` non-real points on its right."""
    disk = ModelDisk(n, d)
    c = n + 1
    top = complex(c, 1)
    r = n - d
    t = type_tag
    if t in ("a1", "b", "d1"):
        power = {"a1": 1, "b": 4}.get(t, nu)
        return Skeleton(disk, (ArcPath.segment(k, k + 1),), ((0, power),), t)
    if t == "c":
        count = (l - k + 1) if l is not None else m
        arcs = tuple(ArcPath.segment(k + i, k + i + 1) for i in range(count - 1))
        return Skeleton(disk, arcs, _pattern_power(_triangle(count), 2), t)
    if t in ("f1", "g1"):
        arcs = (ArcPath.segment(k, k + 1), ArcPath.segment(k + 1, k + 2))
        if t == "f1":
            return Skeleton(disk, arcs, _pattern_power([0, 1, 0], nu), t)
        return Skeleton(disk, arcs, ((1, 1), (0, 1), (1, nu), (0, 1), (1, 1)), t)
    if t in ("a2", "d2"):
        # the pair sits between the reals k-1 and k
        pair = complex(k + 0.5, 0.5)
        steps = [Slide(k, r, k + 2, r + 2), Push(top, pair)]
        arcs = _gathered(disk, steps, [(pair.conjugate(), pair)])
        return Skeleton(disk, arcs, ((0, 1 if t == "a2" else nu),), t)
    if t == "d3":
        z = complex(k + 0.25, S3)
        steps = [Push(top, z), Slide(k, r, k + 1, r + 1)]
        arcs = _gathered(disk, steps, [(z.conjugate(), z), (z, complex(k + 1))])
        return Skeleton(disk, arcs, _pattern_power([0, 1], 2), t)
    if t == "e1":
        z = complex(k + 0.5, 0.5)
        steps = [Push(top, z)]
        arcs = _gathered(disk, steps, [(complex(k), z.conjugate()), (z.conjugate(), z),
                                       (z, complex(k + 1))])
        return Skeleton(disk, arcs, _pattern_power([1, 0, 2], 6), t)
    if t == "e2":
        left, right = complex(k + 0.25, S3), complex(k + 0.75, S3)
        first, second = (right, left) if ab_order != "a>b" else (left, right)
        steps = [Push(top, first), Push(complex(c, 2), second)]
        pts = [complex(k), left.conjugate(), left, right.conjugate(), right, complex(k + 1)]
        arcs = _gathered(disk, steps, list(zip(pts, pts[1:])))
        return Skeleton(disk, arcs, _pattern_power([1, 3, 0, 2, 4], 4), t)
    if t == "f2":
        steps = [Push(top, complex(k + 1, 1)), Slide(k + 1, r, k + 3, r + 2), Slide(k, k, k + 1, k + 1)]
        mid = complex(k + 1)
        arcs = _gathered(disk, steps, [(complex(k + 1, -1), mid), (mid, complex(k + 1, 1))])
        return Skeleton(disk, arcs, _pattern_power([1, 0, 1], nu), t)
    if t == "g2":
        z = complex(k, 0.5)
        steps = [Slide(k, r, k + 1, r + 1), Push(top, z)]
        arcs = _gathered(disk, steps, [(z.conjugate(), z), (z, complex(k + 1))])
        return Skeleton(disk, arcs, ((1, 1), (0, 1), (1, nu), (0, 1), (1, 1)), t)
    if t == "g3":
        z = complex(k - 0.25, S3)
        steps = [Slide(k + 1, k + 1, k + 0.5, k + 0.5), Push(top, z)]
        arcs = _gathered(disk, steps, [(z.conjugate(), z), (z, complex(k)),
                                       (complex(k), complex(k + 0.5))])
        return Skeleton(disk, arcs, _pattern_power([0, 1, 2, 1], 2), t)
    raise DiskError(f"no skeleton for type {type_tag!r}")


def local_braid_word(type_tag: str, *, nu: int | None = None, m: int | None = None) -> BraidWord:
    """The local braid of each type in its own fiber frame."""
    def w(n, text, power=1):
        return BraidWord.parse(n, text) ** power

    t = type_tag
    if t in ("a1", "a2"):
        return w(2, "s1")
    if t == "b":
        return w(2, "s1", 4)
    if t in ("d1", "d2"):
        return w(2, "s1", nu)
    if t == "c":
        from .braid import full_twist
        return full_twist(m)
    if t == "d3":
        return w(3, "s1 s2", 2)
    if t == "e1":
        return w(4, "s2 s1 s3", 6)
    if t == "e2":
        return w(6, "s2 s4 s1 s3 s5", 4)
    if t in ("f1", "f2"):
        return w(3, "s2 s1 s2", nu)
    if t in ("g1", "g2"):
        return BraidWord.parse(3, "s2 s1") * w(3, "s2", nu) * BraidWord.parse(3, "s1 s2")
    if t == "g3":
        return w(4, "s1 s2 s3 s2", 2)
    raise ValueError(f"unknown type {type_tag!r}")
