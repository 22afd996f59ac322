"""Shared toy-curve fixtures.

Toy MNT-3 curves with 18-26 bit p and ell >= 2^16 back the pairing and
NFS-DL chain tests; finding them costs a few seconds so they are session
scoped.
"""

import pytest

from movnfs import curves as cv


def _toy_params(count=4, lo=220, hi=4500, min_ell=1 << 16):
    found = cv.mnt_search(3, (lo, hi), cofactor_limit=60, min_ell=min_ell)
    # prefer small cofactors and mid-size ell for fast tests
    found.sort(key=lambda c: (c.cofactor, c.p))
    return found[:count]


@pytest.fixture(scope="session")
def toy_params_list():
    lst = _toy_params()
    assert len(lst) >= 3, "toy curve search came up short"
    return lst


@pytest.fixture(scope="session")
def toy_curves(toy_params_list):
    out = []
    for i, params in enumerate(toy_params_list[:3]):
        out.append(cv.find_curve_equation(params, seed=11 + i))
    return out
