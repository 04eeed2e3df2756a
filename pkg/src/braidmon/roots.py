"""Univariate complex root finding with inclusion radii.

Roots come from the Aberth-Ehrlich iteration in mpmath. Each approximation
``z_i`` carries the radius ``n |p(z_i)| / |a_n prod_{j != i}(z_i - z_j)|``; the
union of these discs contains every root and each connected component holding
``k`` discs holds exactly ``k`` roots.
"""

from __future__ import annotations

import dataclasses
from typing import Sequence

import mpmath
import numpy as np


class RootError(RuntimeError):
    pass


@dataclasses.dataclass(frozen=True)
class CertifiedRoots:
    values: tuple
    radii: tuple

    def __len__(self):
        return len(self.values)

    def components(self) -> list[list[int]]:
        n = len(self.values)
        parent = list(range(n))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for i in range(n):
            for j in range(i + 1, n):
                if abs(self.values[i] - self.values[j]) <= self.radii[i] + self.radii[j]:
                    parent[find(i)] = find(j)
        groups: dict[int, list[int]] = {}
        for i in range(n):
            groups.setdefault(find(i), []).append(i)
        return list(groups.values())

    def certified_real(self, i: int) -> bool:
        """True if root ``i`` is isolated and its disc meets the real axis.

        For real polynomials the conjugate of an isolated root lies in the
        conjugate disc, which then overlaps the same component, so the root is
        real.
        """
        comp = next(c for c in self.components() if i in c)
        return len(comp) == 1 and abs(mpmath.im(self.values[i])) <= self.radii[i]


def _initial(coeffs: list) -> list:
    n = len(coeffs) - 1
    # Cauchy-type bound for the root radius
    r = 1 + max(abs(c / coeffs[0]) for c in coeffs[1:]) if n else 1
    r = min(r, 2 * max(abs(c / coeffs[0]) ** (mpmath.mpf(1) / k) for k, c in enumerate(coeffs) if k) or 1)
    return [r * mpmath.expj(2 * mpmath.pi * k / n + 0.4) for k in range(n)]


def _float_seed(coeffs: list) -> list | None:
    """Double-precision roots, nudged apart so the iteration starts from distinct points."""
    try:
        fc = np.array([complex(v) for v in coeffs])
    except (OverflowError, ValueError):
        return None
    if not np.all(np.isfinite(fc)) or fc[0] == 0:
        return None
    r = np.roots(fc)
    if len(r) != len(coeffs) - 1 or not np.all(np.isfinite(r)):
        return None
    scale = 1 + float(np.max(np.abs(r)))
    r = r + 1e-10 * scale * np.exp(1j * (0.7 + 2.1 * np.arange(len(r))))
    return [mpmath.mpc(complex(v)) for v in r]


def aberth(coeffs: Sequence, *, dps: int = 50, maxiter: int = 500) -> CertifiedRoots:
    """All roots of ``sum coeffs[k] y^(n-k)`` with inclusion radii."""
    with mpmath.workdps(dps):
        c = [mpmath.mpc(v) for v in coeffs]
        while c and c[0] == 0:
            c.pop(0)
        n = len(c) - 1
        if n < 1:
            return CertifiedRoots((), ())
        dc = [c[k] * (n - k) for k in range(n)]
        z = _float_seed(c) or _initial(c)
        tol = mpmath.mpf(10) ** (-dps + 5)
        for _ in range(maxiter):
            done = True
            for i in range(n):
                p = mpmath.polyval(c, z[i])
                dp = mpmath.polyval(dc, z[i])
                if p == 0:
                    continue
                ratio = p / dp if dp != 0 else mpmath.mpf(1)
                s = mpmath.fsum(1 / (z[i] - z[j]) for j in range(n) if j != i and z[i] != z[j])
                w = ratio / (1 - ratio * s)
                z[i] -= w
                if abs(w) > tol * (1 + abs(z[i])):
                    done = False
            if done:
                break
        radii = []
        for i in range(n):
            p = abs(mpmath.polyval(c, z[i]))
            prod = abs(c[0])
            for j in range(n):
                if j != i:
                    prod *= abs(z[i] - z[j])
            radii.append(n * p / prod if prod else mpmath.inf)
        return CertifiedRoots(tuple(z), tuple(radii))


def cluster(values: Sequence, centre, count: int) -> list[int]:
    """Indices of the ``count`` values nearest ``centre``."""
    return sorted(range(len(values)), key=lambda i: abs(values[i] - centre))[:count]
