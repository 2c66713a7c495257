import numpy as np
import pytest
from hypothesis import strategies as st

from quatspace import KINDS

finite = st.floats(-3.0, 3.0, allow_nan=False, allow_infinity=False)
kinds = st.sampled_from(KINDS)
quads = st.lists(finite, min_size=4, max_size=4)


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture(params=KINDS, ids=lambda k: k.label)
def kind(request):
    return request.param


def close(x, y, tol=1e-12):
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    return np.allclose(x, y, rtol=tol, atol=tol)


def ext_close(p, q, tol=1e-12):
    return p.kind == q.kind and close(p.alpha.data, q.alpha.data, tol) and close(p.beta.data, q.beta.data, tol)
