"""Braid monodromy factorization by conjugating generalized skeletons.

For each critical value x_j the skeleton arcs are laid out just right of
x_j and carried to the base point through the Lefschetz diffeomorphisms of
everything in between; the half-twists of the carried arcs, multiplied in
skeleton order, give phi(Gamma_j) in the model frame of the base fiber.
"""

from __future__ import annotations

import dataclasses
from typing import Sequence

from .analysis import CriticalChart, SingularityRecord, build_chart
from .braid import BraidWord, full_twist
from .curve import CurvePoly
from .deltas import build_delta
from .disk import ArcPath, Diffeo, DiskError, ModelDisk, apply_diffeo
from .errors import NumericError
from .oracle import boundary_braid
from .skeleton import Skeleton, generalized_skeleton, local_braid_word


@dataclasses.dataclass(frozen=True)
class Entry:
    j: int
    record: SingularityRecord
    word: BraidWord
    arcs: tuple[ArcPath, ...] = ()

    @property
    def x_value(self) -> float:
        return self.record.x_value


@dataclasses.dataclass(frozen=True)
class Factorization:
    n: int
    entries: tuple[Entry, ...]
    chart: CriticalChart

    def product(self) -> BraidWord:
        """Product phi(Gamma_1) ... phi(Gamma_p), the braid of the boundary loop."""
        out = BraidWord.identity(self.n)
        for e in self.entries:
            out = out * e.word
        return out.free_reduce()


def skeleton_of(chart: CriticalChart, j: int) -> Skeleton:
    rec = chart.points[j - 1]
    k, l = rec.lefschetz
    return generalized_skeleton(rec.type_tag, chart.n, chart.d_right[j - 1], k, l, nu=rec.nu,
                                m=rec.branch_count, ab_order=rec.ab_order)


def _delta_of_point(chart: CriticalChart, k: int) -> Diffeo:
    rec = chart.points[k - 1]
    a, b = rec.lefschetz
    return build_delta(rec.type_tag, chart.n, chart.d_left[k - 1], a, b, nu=rec.nu,
                       ab_order=rec.ab_order)


def _gap_deltas(chart: CriticalChart, gap: int, d: int) -> list[Diffeo]:
    out = []
    for b in reversed(chart.gap_b_points(gap)):
        if b.orientation:
            k, _ = b.complex_lefschetz
            out.append(build_delta("com", chart.n, d, k, k + 1, orientation=b.orientation))
    return out


def conjugating_prefix(chart: CriticalChart, j: int) -> list[Diffeo]:
    """The Deltas an arc at x_j + alpha_j passes through on its way to the base point."""
    if not 1 <= j <= chart.p:
        raise ValueError(f"generator index {j} out of range 1..{chart.p}")
    out: list[Diffeo] = []
    for k in range(j - 1, 0, -1):
        out.extend(_gap_deltas(chart, k, chart.d_left[k - 1]))
        out.append(_delta_of_point(chart, k))
    out.extend(_gap_deltas(chart, 0, chart.d_base))
    d = chart.d_right[j - 1]
    for f in out:
        if f.source.d != d:
            raise NumericError(f"configuration mismatch: {f.name} expects d={f.source.d}, arcs have d={d}")
        d = f.target.d
    if d != chart.d_base:
        raise NumericError(f"arcs reach the base point with d={d}, the fiber has {chart.d_base}")
    return out


def _transport(arc: ArcPath, prefix: Sequence[Diffeo]) -> ArcPath:
    for f in prefix:
        try:
            arc = apply_diffeo(f, arc)
        except DiskError:
            arc = apply_diffeo(f, arc, max_depth=45)
    return arc


def entry_for(chart: CriticalChart, j: int) -> Entry:
    sk = skeleton_of(chart, j)
    prefix = conjugating_prefix(chart, j)
    arcs = tuple(_transport(a, prefix) for a in sk.arcs)
    word = sk.word(arcs, ModelDisk(chart.n, chart.d_base))
    return Entry(j, chart.points[j - 1], word.free_reduce(), arcs)


def monodromy_of_chart(chart: CriticalChart) -> Factorization:
    return Factorization(chart.n, tuple(entry_for(chart, j) for j in range(1, chart.p + 1)), chart)


def braid_monodromy(curve: CurvePoly, *, radius_scale: float = 1.0) -> Factorization:
    return monodromy_of_chart(build_chart(curve, radius_scale=radius_scale))


# -- verification --------------------------------------------------------------------

def verify_factorization(fac: Factorization, oracle_words: Sequence[BraidWord] | None = None, *,
                         boundary: bool = False, step: float = 0.02) -> dict:
    """Structural checks on a factorization, plus agreement with oracle words when given.

    With ``boundary`` the ordered product is compared with the tracked braid of
    the circle through the base point that encloses every critical value.
    """
    report: dict = {"entries": []}
    ok_perm = ok_exp = True
    for e in fac.entries:
        local = local_braid_word(e.record.type_tag, nu=e.record.nu, m=e.record.branch_count)
        # the local braid lives on the cluster strands; the others are fixed points
        cycles = [c for c in local.permutation().cycle_type() if c > 1]
        perm_ok = [c for c in e.word.permutation().cycle_type() if c > 1] == cycles
        exp_ok = e.word.exponent_sum() == local.exponent_sum() == e.record.disc_valuation
        ok_perm &= perm_ok
        ok_exp &= exp_ok
        report["entries"].append({"j": e.j, "permutation": perm_ok, "exponent_sum": exp_ok})
    total = sum(e.word.exponent_sum() for e in fac.entries)
    disc_total = sum(r.disc_valuation for r in fac.chart.points)
    report["permutation_types"] = ok_perm
    report["exponent_sums"] = ok_exp and total == disc_total
    report["exponent_total"] = total
    prod = fac.product()
    report["product_normal_form"] = prod.normal_form.to_text()
    report["product_is_full_twist"] = prod.equals(full_twist(fac.n)) if fac.n > 1 else True
    if oracle_words is not None:
        agree = [e.word.equals(w) for e, w in zip(fac.entries, oracle_words)]
        report["oracle_agreement"] = agree
        report["oracle_ok"] = len(agree) == len(fac.entries) and all(agree)
    if boundary:
        report["boundary_loop"] = prod.equals(boundary_braid(fac.chart, step=step))
    report["ok"] = report["permutation_types"] and report["exponent_sums"] and \
        report.get("oracle_ok", True) and report.get("boundary_loop", True)
    return report
