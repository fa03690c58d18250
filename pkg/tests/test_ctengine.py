"""The t = 1 constant-term walk against the direct path enumerators."""

import pytest

from ehall.ctengine import ct_t1
from ehall.rectcomb import path_enumerator, primitive_enumerator


def test_matches_path_enumerator():
    for m in range(1, 6):
        for n in range(1, 6):
            assert ct_t1(m, n) == path_enumerator(m, n), (m, n)


def test_primitive_variant():
    for m in range(1, 5):
        for n in range(1, 5):
            assert ct_t1(m, n, primitive=True) == primitive_enumerator(m, n), (m, n)


def test_matches_operator_specialization():
    # cross-check against the exact operators specialized at t = 1
    from math import gcd

    from ehall.checks import at_t1
    from ehall.ehallops import theta
    from ehall.symfun import e_

    for m in range(1, 5):
        for n in range(1, 5):
            d = gcd(m, n)
            f = at_t1(theta(m // d, n // d, e_(d)))
            assert ct_t1(m, n) == f, (m, n)


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        ct_t1(0, 3)
