from __future__ import annotations

import math

import numpy as np
import pytest

from braidmon.analysis import build_chart
from braidmon.braid import BraidWord
from braidmon.curve import CurvePoly
from braidmon.errors import NumericError
from braidmon.oracle import (Piece, arc, frame_change, gamma_loop, local_braid, loop_braid,
                             model_points, oracle_monodromy, segment, track)
from support import EXAMPLE_1, EXAMPLE_1_WORDS, EXAMPLE_2, EXAMPLE_2_WORDS, expand_stated


@pytest.mark.parametrize("poly, n, text", [("y^2+x^5", 2, "s1^5"),
                                           ("y(y^2-x^5)", 3, "(s2 s1 s2)^5"),
                                           ("y^3-x^2", 3, "(s1 s2)^2")])
def test_unit_circle_words(poly, n, text):
    assert local_braid(CurvePoly.parse(poly)).equals(expand_stated(n, text))


def test_sign_convention_is_positive_for_branch_point():
    assert local_braid(CurvePoly.parse("y^2-x")) == BraidWord.parse(2, "s1")


def test_halving_step_keeps_word():
    curve = CurvePoly.parse("(y-2x)(y^2+x^4)")
    a = local_braid(curve, radius=1.0, step=0.02)
    b = local_braid(curve, radius=1.0, step=0.01)
    assert a.equals(b)


def test_reversed_loop_gives_inverse():
    curve = CurvePoly.parse("y(y^2-x^3)")
    forward = [arc(0, 1.0, 0.0, 2 * math.pi)]
    backward = [Piece(lambda t: forward[0](1 - t), forward[0].weight)]
    w, _ = loop_braid(curve, forward)
    v, _ = loop_braid(curve, backward)
    assert (w * v).is_identity()


def test_real_path_keeps_conjugate_pairs():
    curve = CurvePoly.parse(EXAMPLE_2)
    # between the critical values 1 and -1/2, across the B-point at 1/4
    tr = track(curve, [segment(0.9, -0.4)], step=0.05)
    for roots in tr.roots:
        for z in roots:
            assert np.min(np.abs(roots - z.conjugate())) < 1e-7


def test_tracking_through_a_critical_value_fails():
    with pytest.raises(NumericError):
        track(CurvePoly.parse("(y-x)(y+x)"), [segment(-1.0, 1.0)], step=0.5)


def test_model_points_and_frame_change():
    roots = np.array([2.0, -1.0, 0.5 + 2j, 0.5 - 2j])
    assert list(model_points(roots)) == [2, 1, 5 + 1j, 5 - 1j]
    # real roots only, already ordered: no braiding needed
    assert frame_change(np.array([-1.0, 0.0, 3.0])).is_identity()


def test_gamma_loop_closes():
    chart = build_chart(CurvePoly.parse(EXAMPLE_1))
    pieces = gamma_loop(chart, 3)
    assert abs(pieces[0](0) - chart.base_point) < 1e-12
    assert abs(pieces[-1](1) - chart.base_point) < 1e-12
    for p, q in zip(pieces, pieces[1:]):
        assert abs(p(1) - q(0)) < 1e-12


def test_smooth_curve_has_empty_factorization():
    assert oracle_monodromy(build_chart(CurvePoly.parse("y-x^2"))) == []


@pytest.mark.parametrize("poly, words", [(EXAMPLE_1, EXAMPLE_1_WORDS), (EXAMPLE_2, EXAMPLE_2_WORDS)])
def test_golden_examples(poly, words):
    chart = build_chart(CurvePoly.parse(poly))
    got = oracle_monodromy(chart)
    assert len(got) == len(words)
    for entry, text in zip(got, words):
        assert entry.word.equals(BraidWord.parse(chart.n, text)), entry.j
