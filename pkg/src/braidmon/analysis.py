"""Critical values, singularity types, Lefschetz pairs and B-points of a curve."""

from __future__ import annotations

import dataclasses
import itertools
from fractions import Fraction

import mpmath
import numpy as np
import sympy
from scipy.optimize import linear_sum_assignment, minimize_scalar

from .curve import CurvePoly, X
from .errors import GenericityError, NumericError, UnsupportedSingularity
from .roots import CertifiedRoots, aberth

DPS = 60
CLUSTER_DPS = 100

# probe side and expected l - k for each type (odd nu where relevant)
_RIGHT_PROBE = {"a1", "b", "c", "d1", "d3", "e1", "e2", "f1", "g1", "g3"}


@dataclasses.dataclass(frozen=True)
class SingularityRecord:
    x_value: float
    x_exact: object  # sympy algebraic number
    y_value: complex
    type_tag: str
    branch_count: int
    nu: int | None
    lefschetz: tuple[int, int]
    local_exponent: Fraction
    disc_valuation: int
    ab_order: str | None = None
    exponents: tuple[Fraction, ...] = ()
    real_right: int = 0
    real_left: int = 0

    @property
    def label(self) -> str:
        if self.type_tag in ("d1", "d2", "f1", "f2", "g1", "g2"):
            return f"{self.type_tag}(nu={self.nu})"
        if self.type_tag == "c":
            return f"c(m={self.branch_count})"
        if self.type_tag == "e2":
            return f"e2({self.ab_order})"
        return self.type_tag


@dataclasses.dataclass(frozen=True)
class BPointRecord:
    x_value: float
    complex_lefschetz: tuple[int, int]
    orientation: int
    gap: int = 0


@dataclasses.dataclass(frozen=True)
class CriticalChart:
    curve: CurvePoly
    points: tuple[SingularityRecord, ...]
    alphas: tuple[float, ...]
    b_points: tuple[BPointRecord, ...]
    deltas: tuple[float, ...]
    base_point: float
    d_right: tuple[int, ...]
    d_left: tuple[int, ...]
    d_base: int

    @property
    def n(self) -> int:
        return self.curve.n

    @property
    def p(self) -> int:
        return len(self.points)

    def gap_b_points(self, k: int) -> list[BPointRecord]:
        """B-points between x_{k+1} and x_k, largest first (gap 0 lies right of x_1)."""
        return sorted((b for b in self.b_points if b.gap == k), key=lambda b: -b.x_value)

    def delta_of(self, b: BPointRecord) -> float:
        return self.deltas[self.b_points.index(b)]


# -- fibers ------------------------------------------------------------------

def fiber_roots(curve: CurvePoly, x, *, dps: int = DPS) -> CertifiedRoots:
    with mpmath.workdps(dps):
        xm = mpmath.mpmathify(x)
        return aberth(curve.fiber_coeffs_mp(xm), dps=dps)


def fiber_roots_float(curve: CurvePoly, x) -> np.ndarray:
    return np.roots(curve.fiber_coeffs(x))


def nonreal_count(curve: CurvePoly, x: float) -> int:
    r = fiber_roots(curve, x, dps=40)
    count = 0
    for i, z in enumerate(r.values):
        if r.certified_real(i):
            continue
        if abs(mpmath.im(z)) <= r.radii[i]:
            raise NumericError(f"cannot certify reality of fiber roots at x={float(x)}")
        count += 1
    return count


def real_fiber(curve: CurvePoly, x) -> list[float]:
    """Certified real roots of the fiber over a regular real ``x``, ascending."""
    r = fiber_roots(curve, x, dps=40)
    out = []
    for i, z in enumerate(r.values):
        if r.certified_real(i):
            out.append(float(mpmath.re(z)))
        elif abs(mpmath.im(z)) <= r.radii[i]:
            raise NumericError(f"cannot certify reality of fiber roots at x={float(x)}")
    return sorted(out)


# -- critical values -----------------------------------------------------------

def check_squarefree(curve: CurvePoly) -> None:
    _, factors = sympy.factor_list(curve.poly.as_expr())
    for f, mult in factors:
        if mult > 1:
            raise GenericityError(1, f"repeated component ({f})^{mult}", witness=str(f))


@dataclasses.dataclass(frozen=True)
class CriticalValue:
    exact: object
    value: object  # mpf at DPS digits
    valuation: int

    def __float__(self):
        return float(self.value)


def critical_x_values(curve: CurvePoly) -> list[CriticalValue]:
    """Real roots of the y-discriminant, descending, with their multiplicities."""
    disc = curve.discriminant
    if disc.is_zero:
        raise GenericityError(1, "curve is not squarefree (zero discriminant)")
    if disc.degree() <= 0:
        return []
    _, factors = sympy.factor_list(disc.as_expr(), X)
    out = []
    for f, mult in factors:
        fp = sympy.Poly(f, X)
        if fp.degree() <= 0:
            continue
        real = fp.real_roots()
        if len(real) < fp.degree():
            nonreal = [complex(r) for r in fp.all_roots() if not r.is_real]
            raise GenericityError(1, "non-real critical value", witness=nonreal[0])
        for r in real:
            with mpmath.workdps(CLUSTER_DPS + 20):
                v = mpmath.mpf(str(sympy.N(r, CLUSTER_DPS + 20)))
            out.append(CriticalValue(r, v, int(mult)))
    out.sort(key=lambda c: -c.value)
    return out


# -- classification ------------------------------------------------------------

def _singular_cluster(curve: CurvePoly, xc) -> tuple[list, complex]:
    r = fiber_roots(curve, xc, dps=CLUSTER_DPS)
    vals = list(r.values)
    scale = 1 + max(abs(v) for v in vals)
    tol = mpmath.mpf(10) ** -9 * scale
    groups: list[list[int]] = []
    for i in range(len(vals)):
        for g in groups:
            if any(abs(vals[i] - vals[j]) < tol for j in g):
                g.append(i)
                break
        else:
            groups.append([i])
    multiple = [g for g in groups if len(g) > 1]
    if len(multiple) != 1:
        if not multiple:
            raise NumericError(f"no multiple root found over critical value {float(xc)}")
        raise GenericityError(2, "more than one singular point over one x", witness=float(xc))
    g = multiple[0]
    centre = mpmath.fsum(vals[i] for i in g) / len(g)
    return g, centre


def _near(vals, centre, m):
    return sorted(vals, key=lambda v: abs(v - centre))[:m]


def _distance_exponents(curve, xc, yc, m, rho) -> tuple[Fraction, ...]:
    theta = 0.7
    h1 = mpmath.mpf(rho) * mpmath.mpf("1e-5")
    h2 = mpmath.mpf(rho) * mpmath.mpf("1e-7")
    dists = []
    for h in (h1, h2):
        with mpmath.workdps(80):
            x = xc + h * mpmath.expj(theta)
            vals = _near(fiber_roots(curve, x, dps=80).values, yc, m)
            dists.append(sorted(abs(a - b) for a, b in itertools.combinations(vals, 2)))
    out = []
    for d1, d2 in zip(*dists):
        q = float(mpmath.log(d1 / d2) / mpmath.log(h1 / h2))
        q6 = round(6 * q)
        if abs(q - q6 / 6) > 0.05:
            near = Fraction(q).limit_denominator(12)
            if abs(q - near) < 0.02:
                raise UnsupportedSingularity(f"distance exponent {near} at x={float(xc):.6g}",
                                             witness=float(xc))
            raise NumericError(f"distance exponent {q:.3f} is not a recognisable rational")
        out.append(Fraction(q6, 6))
    return tuple(out)


def _side_fiber(curve, xc, yc, m, h, sign):
    """Real roots at xc + sign*h (ascending) and the ranks (1-based) of the cluster."""
    with mpmath.workdps(80):
        x = xc + sign * h
        r = fiber_roots(curve, x, dps=80)
    near = set(sorted(range(len(r.values)), key=lambda i: abs(r.values[i] - yc))[:m])
    real = []
    for i, z in enumerate(r.values):
        if r.certified_real(i):
            real.append((float(mpmath.re(z)), i in near))
        elif abs(mpmath.im(z)) <= r.radii[i]:
            raise NumericError(f"cannot certify fiber reality near x={float(xc)}")
    real.sort()
    ranks = [p + 1 for p, (_, inside) in enumerate(real) if inside]
    return real, ranks


_LOCAL_EXPONENT = {"a1": Fraction(1, 2), "a2": Fraction(1, 2), "b": Fraction(2), "c": Fraction(1),
                   "d3": Fraction(2, 3), "e1": Fraction(3, 2), "e2": Fraction(2, 3),
                   "g3": Fraction(2, 3)}


def _type_from_data(m, exps, R, L):
    """Map cluster size, distance exponents and real counts (right, left) to a type."""
    def fail():
        raise UnsupportedSingularity(
            f"cluster of {m} roots with distance exponents {[str(e) for e in exps]}, "
            f"{R} real on the right and {L} on the left")

    uniq = sorted(set(exps))
    if m == 2:
        q = exps[0]
        nu2 = 2 * q
        if nu2.denominator != 1:
            fail()
        nu = int(nu2)
        if nu == 1:
            return ("a1", None) if (R, L) == (2, 0) else ("a2", None) if (R, L) == (0, 2) else fail()
        if nu % 2:
            return ("d1", nu) if (R, L) == (2, 0) else ("d2", nu) if (R, L) == (0, 2) else fail()
        if (R, L) == (2, 2):
            return ("c", None) if nu == 2 else ("b", None) if nu == 4 else ("d1", nu)
        if (R, L) == (0, 0):
            return ("d2", nu)
        fail()
    if uniq == [Fraction(1)] and (R, L) == (m, m):
        return ("c", None)
    if m == 3:
        if uniq == [Fraction(2, 3)] and (R, L) == (1, 1):
            return ("d3", None)
        # nu = 1 is a line through a branch point, the f family's smallest member
        if len(uniq) == 1 and uniq[0] != 1 and (2 * uniq[0]).denominator == 1:
            nu = int(2 * uniq[0])
            return _fg_sign("f", nu, R, L) or fail()
        if len(uniq) == 2 and exps.count(Fraction(1)) == 2 and uniq[1] > 1 \
                and (2 * uniq[1]).denominator == 1:
            nu = int(2 * uniq[1])
            return _fg_sign("g", nu, R, L) or fail()
        fail()
    if m == 4:
        if uniq == [Fraction(3, 2)] and (R, L) == (2, 2):
            return ("e1", None)
        if uniq == [Fraction(2, 3)] and (R, L) == (2, 2):
            return ("g3", None)
        fail()
    if m == 6 and uniq == [Fraction(2, 3)] and (R, L) == (2, 2):
        return ("e2", None)
    fail()


def _fg_sign(family, nu, R, L):
    if nu % 2:
        if (R, L) == (3, 1):
            return (family + "1", nu)
        if (R, L) == (1, 3):
            return (family + "2", nu)
    else:
        if (R, L) == (3, 3):
            return (family + "1", nu)
        if (R, L) == (1, 1):
            return (family + "2", nu)
    return None


def _expected_gap(tag, nu, m):
    if tag == "c":
        return m - 1
    if tag in ("f1", "g1"):
        return 2
    if tag in ("f2", "g2"):
        return 2 if nu % 2 else 0
    if tag == "d2":
        return 1 if nu % 2 else 0
    if tag == "d3":
        return 0
    return 1


def classify_singularity(curve: CurvePoly, crit: CriticalValue, neighbours=()) -> SingularityRecord:
    """Type, parameters and Lefschetz pair of the singular point over ``crit``."""
    xc = crit.value
    group, yc = _singular_cluster(curve, xc)
    m = len(group)
    others = [abs(float(xc) - float(o)) for o in neighbours if abs(float(xc) - float(o)) > 0]
    rho = min([1.0] + others)
    exps = _distance_exponents(curve, xc, yc, m, rho)
    h = mpmath.mpf(rho) * mpmath.mpf("1e-6")
    right, rranks = _side_fiber(curve, xc, yc, m, h, +1)
    left, lranks = _side_fiber(curve, xc, yc, m, h, -1)
    tag, nu = _type_from_data(m, exps, len(rranks), len(lranks))
    if tag in ("g1", "g2"):
        _check_line_side(curve, xc, yc, h)
    ab = None
    if tag == "e2":
        # averaging both sides removes the common tangent's linear term
        lo = (right[rranks[0] - 1][0] + left[lranks[0] - 1][0]) / 2 - float(mpmath.re(yc))
        hi = (right[rranks[1] - 1][0] + left[lranks[1] - 1][0]) / 2 - float(mpmath.re(yc))
        ab = "a<b" if abs(lo) < abs(hi) else "a>b"
    if tag in ("d2", "f2", "g2") and not nu % 2 or tag == "d2" and nu == 2:
        # enumerate the real points of K(x_c) itself
        below = sum(1 for v, inside in left if not inside and v < float(mpmath.re(yc)))
        k = l = below + 1
    else:
        ranks = rranks if tag in _RIGHT_PROBE else lranks
        k, l = ranks[0], ranks[-1]
    if l - k != _expected_gap(tag, nu, m):
        raise NumericError(f"inconsistent Lefschetz pair ({k},{l}) for type {tag} at x={float(xc)}")
    exponent = _LOCAL_EXPONENT.get(tag, Fraction(nu or 0, 2))
    return SingularityRecord(
        x_value=float(xc), x_exact=crit.exact, y_value=complex(yc), type_tag=tag,
        branch_count=m, nu=nu, lefschetz=(k, l), local_exponent=exponent,
        disc_valuation=crit.valuation, ab_order=ab, exponents=exps,
        real_right=len(rranks), real_left=len(lranks))


def _check_line_side(curve, xc, yc, h) -> None:
    """Only the model with the line right of the cusp on the right side (a > 0) is built."""
    with mpmath.workdps(80):
        vals = [complex(v) for v in _near(fiber_roots(curve, xc + h, dps=80).values, yc, 3)]
    spread = [sum(abs(v - w) for w in vals) for v in vals]
    line = int(np.argmax(spread))
    pair = [v for i, v in enumerate(vals) if i != line]
    if vals[line].real < (pair[0].real + pair[1].real) / 2:
        raise UnsupportedSingularity("cusp-line point with the line on the lower side (a < 0)")


def lefschetz_pair(curve: CurvePoly, record: SingularityRecord, alpha: float) -> tuple[int, int]:
    """Check the recorded pair is stable out to the chart radius and its half.

    Real roots cannot collide on a side interval free of critical values, so
    the pair is stable exactly when the real-root count at the probe radius,
    at half of it and right next to x_c all agree.
    """
    sign = 1 if record.type_tag in _RIGHT_PROBE else -1
    with mpmath.workdps(80):
        near, _ = _side_fiber(curve, mpmath.mpf(record.x_value), mpmath.mpc(record.y_value),
                              record.branch_count, mpmath.mpf(alpha) * mpmath.mpf("1e-6"), sign)
    counts = {len(near)}
    for a in (alpha, alpha / 2):
        counts.add(len(real_fiber(curve, record.x_value + sign * a)))
    if len(counts) != 1:
        raise NumericError(f"Lefschetz pair unstable under halving alpha at x={record.x_value}")
    return record.lefschetz


# -- B-points ------------------------------------------------------------------

def _upper(curve: CurvePoly, x: float, u: int) -> np.ndarray:
    r = fiber_roots_float(curve, x)
    return r[np.argsort(-r.imag)[:u]]


def _match(prev: np.ndarray, cur: np.ndarray) -> np.ndarray | None:
    if len(prev) <= 1:
        return cur
    cost = np.abs(prev[:, None] - cur[None, :])
    rows, cols = linear_sum_assignment(cost)
    out = cur[cols]
    move = np.max(np.abs(out - prev))
    sep = min(abs(a - b) for a, b in itertools.combinations(prev, 2))
    return out if move < 0.3 * sep else None


def _track(curve, xs: list[float], u: int):
    """Upper-half roots at each x with consistent strand labels (refining as needed)."""
    pts = [xs[0]]
    vals = [_upper(curve, xs[0], u)]
    stack = list(reversed(xs[1:]))
    while stack:
        x = stack.pop()
        cur = _match(vals[-1], _upper(curve, x, u))
        if cur is None:
            if abs(x - pts[-1]) < 1e-13 * (1 + abs(x)):
                raise NumericError(f"root tracking failed near x={x}")
            stack.append(x)
            stack.append(0.5 * (x + pts[-1]))
            continue
        pts.append(x)
        vals.append(cur)
    return pts, vals


def _bisect_crossing(curve, u, xa, va, xb, i, j):
    for _ in range(60):
        xm = 0.5 * (xa + xb)
        pts, vals = _track(curve, [xa, xm], u)
        vm = vals[-1]
        if np.sign(vm[i].imag - vm[j].imag) == np.sign(va[i].imag - va[j].imag):
            xa, va = xm, vm
        else:
            xb = xm
        if xb - xa < 1e-14 * (1 + abs(xa)):
            break
    return 0.5 * (xa + xb)


def _scan_interval(curve: CurvePoly, lo: float, hi: float, samples: int = 400) -> list[float]:
    mid = 0.5 * (lo + hi)
    u = nonreal_count(curve, mid) // 2
    if u < 2:
        return []
    span = hi - lo
    us = 0.5 * (1 - np.cos(np.pi * np.linspace(0, 1, samples + 1)))[1:-1]
    xs = [lo + span * 1e-7] + [lo + span * t for t in us] + [hi - span * 1e-7]
    pts, vals = _track(curve, xs, u)
    found = []
    for t in range(len(pts) - 1):
        a, b = vals[t], vals[t + 1]
        for i, j in itertools.combinations(range(u), 2):
            if np.sign(a[i].imag - a[j].imag) != np.sign(b[i].imag - b[j].imag):
                found.append(_bisect_crossing(curve, u, pts[t], a, pts[t + 1], i, j))
    found += _tangencies(curve, u, pts, found)
    found.sort()
    for x1, x2 in zip(found, found[1:]):
        if x2 - x1 < 1e-8 * (1 + abs(x1)):
            raise GenericityError(4, "more than two pairs of equal imaginary parts", witness=x1)
    for x in found:
        if min(x - lo, hi - x) < 2e-7 * span:
            raise GenericityError(5, "B-point coincides with a critical value", witness=x)
    return found


def _im_gap(curve: CurvePoly, x: float, u: int) -> float:
    """Smallest gap between imaginary parts of the upper fiber roots."""
    return float(np.min(np.diff(np.sort(_upper(curve, x, u).imag))))


def _tangencies(curve: CurvePoly, u: int, pts: list[float], crossings: list[float]) -> list[float]:
    """B-points where two imaginary parts touch without crossing (orientation 0)."""
    gaps = [_im_gap(curve, x, u) for x in pts]
    scale = 1 + max(abs(z) for x in pts[:: max(1, len(pts) // 8)] for z in _upper(curve, x, u))
    out = []
    for t in range(1, len(pts) - 1):
        if not gaps[t] <= min(gaps[t - 1], gaps[t + 1]):
            continue
        lo, hi = pts[t - 1], pts[t + 1]
        if any(lo <= c <= hi for c in crossings):
            continue
        res = minimize_scalar(lambda x: _im_gap(curve, x, u), bounds=(lo, hi), method="bounded",
                              options={"xatol": 1e-13 * (1 + abs(pts[t]))})
        if res.fun < 1e-9 * scale:
            out.append(float(res.x))
    return out


def _b_record(curve: CurvePoly, b: float, delta: float, gap: int) -> BPointRecord:
    u = nonreal_count(curve, b) // 2
    at = np.sort(_upper(curve, b, u).imag)
    k = int(np.argmin(np.diff(at))) + 1
    sides = []
    for x in (b - delta, b + delta):
        up = _upper(curve, x, u)
        up = up[np.argsort(up.imag)]
        sides.append((up[k - 1].real, up[k].real))
    (lk, ll), (rk, rl) = sides
    if lk > ll and rk < rl:
        o = 1
    elif lk < ll and rk > rl:
        o = -1
    else:
        o = 0
    return BPointRecord(x_value=float(b), complex_lefschetz=(k, k + 1), orientation=o, gap=gap)


def find_b_points(curve: CurvePoly, xs: list[float], x0: float, *,
                  radius_scale: float = 1.0) -> list[BPointRecord]:
    """B-points between consecutive critical values and right of x_1 up to ``x0``."""
    bounds = [x0] + list(xs)
    raw = []
    for gap in range(len(bounds) - 1):
        for b in _scan_interval(curve, bounds[gap + 1], bounds[gap]):
            raw.append((b, gap))
    chart = sorted(set(bounds) | {b for b, _ in raw})
    out = []
    for b, gap in raw:
        delta = _radius(b, chart) * radius_scale
        out.append(_b_record(curve, b, delta, gap))
    return out


def _radius(x: float, chart: list[float]) -> float:
    return min(abs(x - c) for c in chart if c != x) / 3


# -- chart -------------------------------------------------------------------

def build_chart(curve: CurvePoly, *, radius_scale: float = 1.0) -> CriticalChart:
    check_squarefree(curve)
    crits = critical_x_values(curve)
    records = tuple(classify_singularity(curve, c, [o.value for o in crits]) for c in crits)
    xs = [r.x_value for r in records]
    for r in records:
        _check_no_b_at(curve, r)
    if not xs:
        x0 = 0.0
        return CriticalChart(curve, (), (), (), (), x0, (), (), nonreal_count(curve, x0))
    x0 = xs[0] + (0.1 * (xs[0] - xs[-1]) if len(xs) > 1 else 1.0)
    for _ in range(20):
        right = _scan_interval(curve, xs[0], x0)
        if not right:
            break
        x0 = 0.5 * (xs[0] + min(right))
    else:
        raise NumericError("could not place the base point clear of B-points")
    bpts = find_b_points(curve, xs, x0, radius_scale=radius_scale)
    bpts = [b for b in bpts if b.gap > 0 or b.x_value < x0]
    chart = sorted(set(xs) | {x0} | {b.x_value for b in bpts})
    alphas = tuple(_radius(x, chart) * radius_scale for x in xs)
    deltas = tuple(_radius(b.x_value, chart) * radius_scale for b in bpts)
    for r, a in zip(records, alphas):
        lefschetz_pair(curve, r, a)
    d_right = tuple(nonreal_count(curve, x + a) for x, a in zip(xs, alphas))
    d_left = tuple(nonreal_count(curve, x - a) for x, a in zip(xs, alphas))
    return CriticalChart(curve, records, alphas, tuple(bpts), deltas, x0, d_right, d_left,
                         nonreal_count(curve, x0))


def _check_no_b_at(curve: CurvePoly, rec: SingularityRecord) -> None:
    """Condition 5: no two non-real fiber points share an imaginary part over x_c."""
    with mpmath.workdps(CLUSTER_DPS):
        r = fiber_roots(curve, mpmath.mpf(rec.x_value), dps=40)
    ups = sorted(float(mpmath.im(z)) for z in r.values if mpmath.im(z) > 1e-6)
    ups = [v for v in ups if abs(v - rec.y_value.imag) > 1e-6 or rec.y_value.imag < 1e-6]
    for a, b in zip(ups, ups[1:]):
        if abs(a - b) < 1e-9:
            raise GenericityError(5, "equal imaginary parts over a critical value",
                                  witness=rec.x_value)


def validate_genericity(curve: CurvePoly) -> dict:
    """Pass/fail per standing condition, with the first failure's message."""
    result = {str(k): "pass" for k in range(1, 6)}
    try:
        build_chart(curve)
    except UnsupportedSingularity as e:
        result["types"] = f"fail: {e}"
    except GenericityError as e:
        result[str(e.condition)] = f"fail: {e}"
        for k in range(e.condition + 1, 6):
            result[str(k)] = "unchecked"
    return result
