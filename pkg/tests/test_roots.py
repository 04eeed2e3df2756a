from __future__ import annotations

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidmon.roots import aberth, cluster


def _contains_all(roots, expected):
    for e in expected:
        assert any(abs(complex(v) - e) <= float(r) + 1e-12 for v, r in zip(roots.values, roots.radii))


def test_simple_quadratic():
    r = aberth([1, 0, -1])
    assert sorted(float(mpmath.re(v)) for v in r.values) == pytest.approx([-1, 1])
    assert all(r.certified_real(i) for i in range(2))


def test_conjugate_pair_not_real():
    r = aberth([1, 0, 1])
    assert not any(r.certified_real(i) for i in range(2))
    _contains_all(r, [1j, -1j])


def test_cluster_of_close_roots_is_resolved():
    # roots 1, 1 + 1e-12, -2 at 50 digits
    a, b = mpmath.mpf(1), mpmath.mpf(1) + mpmath.mpf("1e-12")
    coeffs = [1, -(a + b - 2), a * b - 2 * (a + b), 2 * a * b]
    r = aberth(coeffs, dps=50)
    assert len(r.components()) == 3
    _contains_all(r, [1.0, -2.0])


def test_cluster_helper():
    assert cluster([0.0, 5.0, 0.1, -3.0], 0.0, 2) == [0, 2]


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(st.integers(-5, 5), st.integers(-5, 5)), min_size=1, max_size=6, unique=True))
def test_inclusion_discs_contain_true_roots(zs):
    # oracle: exact roots the polynomial was built from
    roots = [complex(a, b) / 2 for a, b in zs]
    coeffs = np.poly(roots)
    r = aberth([mpmath.mpc(c) for c in coeffs], dps=40)
    assert len(r) == len(roots)
    _contains_all(r, roots)
