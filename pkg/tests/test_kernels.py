import os
import subprocess
import sys

import numpy as np
import pytest

from zetabound import kernels

needs_c = pytest.mark.skipif("cython" not in kernels.available(), reason="compiled kernels not built")


def test_python_backend_always_present():
    assert "python" in kernels.available()
    assert kernels.get_backend("python").NAME == "python"


def test_unknown_backend():
    with pytest.raises(ValueError):
        kernels.get_backend("fortran")


def test_env_forces_pure_python():
    code = "from zetabound import kernels; print(kernels.active.NAME)"
    env = dict(os.environ, ZETABOUND_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_reduced_precision_forces_pure_python():
    code = "from zetabound import kernels, interval; print(kernels.active.NAME, interval.PRECISION)"
    env = dict(os.environ, ZETA_BOUND_PRECISION="40")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["python", "40"]


def _grid(lo, hi, n):
    return np.linspace(lo, hi, n + 1)


@needs_c
@pytest.mark.parametrize(
    "lo, hi, terms",
    [(2.0, 3.0, 2), (14.0, 15.0, 2), (150.0, 150.5, 2), (500.0, 500.25, 0), (500.0, 500.25, 4), (1607.5, 1609.5, 2)],
)
def test_backends_agree(lo, hi, terms):
    edges = _grid(lo, hi, 16)
    c = kernels.get_backend("cython").abs_zeta_grid(edges, terms, 10, 1e-12)
    p = kernels.get_backend("python").abs_zeta_grid(edges, terms, 10, 1e-12)
    assert np.array_equal(c[2], p[2])  # same method per piece
    assert np.all(np.maximum(c[0], p[0]) <= np.minimum(c[1], p[1]))  # overlap
    rel = (c[1] - p[1]) / p[1]
    assert np.all(np.abs(rel) < 1e-9)


@needs_c
def test_threshold_agree():
    a = np.linspace(2.0, 1000.0, 257)
    c, p = kernels.get_backend("cython"), kernels.get_backend("python")
    assert np.allclose(c.threshold_lo(a, 0.732), p.threshold_lo(a, 0.732), rtol=1e-14)
    assert np.all(c.threshold_lo(a, 0.732) <= p.threshold_hi(a, 0.732))


def test_grid_methods(backend):
    k = kernels.get_backend(backend)
    edges = np.array([150.0, 150.001, 250.0, 250.001])
    _, _, m = k.abs_zeta_grid(edges, 2, 10, 1e-12)
    # middle piece [150.001, 250] is long but valid; only the method matters here
    assert list(m) == [0, 0, 1]
