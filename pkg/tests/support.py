"""Shared fixtures data: local models, golden curves, random curve generator."""

from __future__ import annotations

import dataclasses
import random

import mpmath
import numpy as np
import sympy

from braidmon.analysis import CriticalValue, classify_singularity, nonreal_count
from braidmon.braid import BraidWord
from braidmon.curve import CurvePoly
from braidmon.oracle import _solve, frame_change, local_braid
from braidmon.skeleton import generalized_skeleton, local_braid_word

EXAMPLE_1 = "(3x+2y+1)^2*(2x+y+1)-(5x+3y+1)^3"
EXAMPLE_2 = "(x^2-(y+3/4)^2-1)*((x-1/2)^2-y^2-1)"

EXAMPLE_1_WORDS = ["s2", "s1^3", "s1", "s1^-2 s2 s1^2"]
EXAMPLE_2_WORDS = ["s3^2", "s3^-1 s2 s3", "s2^-1 s1 s2", "s2^-1 s3 s2",
                   "s3^2 s2^-1 s1 s2 s3^-2", "s3^2"]

# defining polynomials of the local propositions; the singular point is x = 0
LOCAL_MODELS = {
    "d2_3": ("y^2+x^3", "d2", 3, "s1^3"),
    "d2_4": ("y^2+x^4", "d2", 4, "s1^4"),
    "d2_5": ("y^2+x^5", "d2", 5, "s1^5"),
    "d3": ("y^3-x^2", "d3", None, "(s1 s2)^2"),
    "e1": ("(y^2+x^3)(y^2-x^3)", "e1", None, "(s2 s1 s3)^6"),
    "e2_ab": ("(y^3+x^2)(y^3-2x^2)", "e2", None, "(s2 s4 s1 s3 s5)^4"),
    "e2_ba": ("(y^3+2x^2)(y^3-x^2)", "e2", None, "(s2 s4 s1 s3 s5)^4"),
    "f1_3": ("y(y^2-x^3)", "f1", 3, "(s2 s1 s2)^3"),
    "f1_4": ("y(y^2-x^4)", "f1", 4, "(s2 s1 s2)^4"),
    "f2_3": ("y(y^2+x^3)", "f2", 3, "(s2 s1 s2)^3"),
    "f2_4": ("y(y^2+x^4)", "f2", 4, "(s2 s1 s2)^4"),
    "g1_3": ("(y-2x)(y^2-x^3)", "g1", 3, "s2 s1 s2^3 s1 s2"),
    "g1_4": ("(y-2x)(y^2-x^4)", "g1", 4, "s2 s1 s2^4 s1 s2"),
    "g2_3": ("(y-2x)(y^2+x^3)", "g2", 3, "s2 s1 s2^3 s1 s2"),
    "g2_4": ("(y-2x)(y^2+x^4)", "g2", 4, "s2 s1 s2^4 s1 s2"),
    "g3": ("y(y^3-x^2)", "g3", None, "(s1 s2 s3 s2)^2"),
}

# smaller models that the propositions do not list but the engine meets
EXTRA_MODELS = {
    "a1": ("y^2-x", "a1"),
    "a2": ("y^2+x", "a2"),
    "b": ("y(y-x^2)", "b"),
    "c2": ("(y-x)(y+x)", "c"),
    "c3": ("y(y-x)(y+x)", "c"),
    "d1_3": ("y^2-x^3", "d1"),
    "d2_2": ("y^2+x^2", "d2"),
    "f1_1": ("y(y^2-x)", "f1"),
    "f2_1": ("y(y^2+x)", "f2"),
}

# spectator strands multiplied onto a model; real and non-real, on both sides
AUGMENTATIONS = ["1", "(y+3)", "(y-4)(y+3)(y^2+16)", "(y+3)(y+5)(y^2+16)(y^2+25)"]


def expand_stated(n: int, text: str) -> BraidWord:
    """Parse ``(s1 s2)^2``-style words with one level of parentheses."""
    text = text.strip()
    if text.startswith("(") and ")^" in text:
        body, power = text[1:].split(")^")
        return BraidWord.parse(n, body) ** int(power)
    return BraidWord.parse(n, text)


@dataclasses.dataclass
class LocalResult:
    curve: CurvePoly
    label: str
    type_tag: str
    nu: int | None
    oracle: BraidWord      # fiber frame at x = radius
    skeleton: BraidWord    # model frame
    beta: BraidWord        # fiber frame -> model frame

    @property
    def skeleton_in_fiber_frame(self) -> BraidWord:
        return self.beta.inverse() * self.skeleton * self.beta


def local_result(poly: str, radius: float | None = 1.0) -> LocalResult:
    """Classify the point x = 0 of ``poly`` and compute oracle and skeleton braids.

    ``radius=None`` picks a circle well inside the nearest other critical value.
    """
    curve = CurvePoly.parse(poly)
    disc = curve.discriminant
    X = disc.gens[0]
    v, q = 0, disc
    while q.eval(0) == 0:
        q = sympy.Poly(sympy.quo(q.as_expr(), X), X)
        v += 1
    others = [abs(z) for z in np.roots([float(c) for c in q.all_coeffs()])] if q.degree() > 0 else []
    if radius is None:
        radius = min([1.0] + [0.4 * r for r in others])
    assert all(r > radius for r in others)
    rec = classify_singularity(curve, CriticalValue(sympy.Integer(0), mpmath.mpf(0), v), [2.5 * radius])
    d = nonreal_count(curve, radius)
    sk = generalized_skeleton(rec.type_tag, curve.n, d, *rec.lefschetz, nu=rec.nu,
                              m=rec.branch_count, ab_order=rec.ab_order)
    return LocalResult(curve, rec.label, rec.type_tag, rec.nu, local_braid(curve, 0.0, radius),
                       sk.word(), frame_change(_solve(curve, radius)))


def stated_local_word(type_tag: str, nu: int | None, m: int | None = None) -> BraidWord:
    return local_braid_word(type_tag, nu=nu, m=m)


def _component(rng: random.Random) -> str:
    if rng.random() < 0.3:
        a, b = rng.randint(-3, 3), rng.randint(-3, 3)
        return f"(y-({a})*x-({b}))"
    p, q = rng.randint(-2, 2), rng.randint(-2, 2)
    r = rng.randint(1, 4)
    s = rng.choice([1, 2, -1])
    if rng.random() < 0.5:
        return f"((y-({q}))^2-({s * s})*(x-({p}))^2+{r})"
    return f"((y-({q}))^2+({s})*(x-({p}))^2-{r})"


def random_curves(seed: int):
    """Endless stream of products of 2-3 lines, ellipses and hyperbolas."""
    rng = random.Random(seed)
    while True:
        yield "*".join(_component(rng) for _ in range(rng.randint(2, 3)))


NU_KINDS = ("d1", "d2", "f1", "f2", "g1", "g2")


@dataclasses.dataclass(frozen=True)
class DeltaConfig:
    kind: str
    n: int
    d: int
    k: int
    l: int
    nu: int | None = None
    ab_order: str | None = None
    orientation: int = 1


def _pair_end(kind: str, k: int, nu: int | None) -> int:
    odd = bool(nu and nu % 2)
    if kind == "c":
        return k + 2
    if kind in ("f1", "g1") or kind in ("f2", "g2") and odd:
        return k + 2
    if kind == "d3" or kind in ("d2", "f2", "g2") and not odd:
        return k
    return k + 1


def _needs(kind: str, nu: int | None, k: int) -> tuple[int, int]:
    """(real punctures, complex punctures) a Delta touches in its source disk."""
    odd = bool(nu and nu % 2)
    real = {"a1": 0, "a2": 2, "b": 2, "c": 3, "d1": 0 if odd else 2, "d2": 2 if odd else 0,
            "d3": 1, "e1": 2, "e2": 2, "f1": 1 if odd else 3, "f2": 3 if odd else 1,
            "g1": 1 if odd else 3, "g2": 3 if odd else 1, "g3": 2, "com": 0}[kind]
    cx = {"a1": 2, "d1": 2 if odd else 0, "d2": 0 if odd else 2, "f2": 0 if odd else 2,
          "g2": 0 if odd else 2, "d3": 2, "e1": 2, "e2": 4, "f1": 2 if odd else 0,
          "g1": 2 if odd else 0, "g3": 2, "com": 2 * k + 2}.get(kind, 0)
    return real, cx


def delta_configs(max_n: int = 8, *, same_d: bool = False, orientations=(1,)) -> list[DeltaConfig]:
    """Every parameter set for which a Delta is defined in a disk with n <= max_n."""
    out = []
    kinds = ["a1", "a2", "b", "c", "d1", "d2", "d3", "e1", "e2", "f1", "f2", "g1", "g2", "g3", "com"]
    for kind in kinds:
        for n in range(2, max_n + 1):
            for d in range(0, n + 1, 2):
                r = n - d
                for k in range(1, n + 1):
                    for nu in ([2, 3, 4, 5] if kind in NU_KINDS else [None]):
                        if same_d and (kind in ("a1", "a2") or kind in NU_KINDS and nu % 2):
                            continue
                        need_real, need_cx = _needs(kind, nu, k)
                        if r < need_real or d < need_cx:
                            continue
                        if kind == "com":
                            if 2 * (k + 1) > d:
                                continue
                        elif need_real > 0 and k + need_real - 1 > r:
                            continue
                        elif need_real == 0 and k > r + 1:
                            continue
                        for ab in (["a<b", "a>b"] if kind == "e2" else [None]):
                            for o in (orientations if kind == "com" else (1,)):
                                out.append(DeltaConfig(kind, n, d, k, _pair_end(kind, k, nu), nu, ab, o))
    return out
