"""The compiled and pure-Python kernels must agree bit for bit."""

import importlib
import os

import numpy as np
import pytest

from tensile_domain import _kernels_py, kernels
from tensile_domain.stress import TAU_B

compiled = pytest.importorskip("tensile_domain._kernels")


@pytest.mark.skipif(os.environ.get("TENSILE_DOMAIN_PURE_PYTHON", "") not in ("", "0"),
                    reason="fallback forced")
def test_selected_backend_is_compiled():
    assert kernels.BACKEND == "cython"


def test_fallback_selected_by_env(monkeypatch):
    monkeypatch.setenv("TENSILE_DOMAIN_PURE_PYTHON", "1")
    mod = importlib.reload(kernels)
    try:
        assert mod.BACKEND == "python"
        assert mod.mr_grid is _kernels_py.mr_grid
    finally:
        monkeypatch.delenv("TENSILE_DOMAIN_PURE_PYTHON")
        importlib.reload(kernels)


@pytest.mark.parametrize("c1,c2,kv", [(0.5, 0.0, 0.0), (1.0, 1.0, 0.5), (1.0, 1.0, 1.5),
                                      (0.5, 0.0, 0.2), (2.0, 0.3, 3.0), (0.0, 1.0, 1.2)])
def test_grid_bitwise_parity(rng, c1, c2, kv):
    x = rng.uniform(0.1, 5.0, 3000)
    y = rng.uniform(0.1, 5.0, 3000)
    a = compiled.mr_grid(c1, c2, kv, x, y, TAU_B)
    b = _kernels_py.mr_grid(c1, c2, kv, x, y, TAU_B)
    for u, v in zip(a, b):
        np.testing.assert_array_equal(u, v)


def test_scalar_parity(rng):
    for _ in range(500):
        c1, c2, kv = rng.uniform(0, 2, 3)
        l1, l2 = rng.uniform(0.2, 4, 2)
        assert compiled.mr_stress(c1, c2, kv, l1, l2) == _kernels_py.mr_stress(c1, c2, kv, l1, l2)
        w_c, w_p = compiled.mr_width(c1, c2, kv, l1), _kernels_py.mr_width(c1, c2, kv, l1)
        assert (np.isnan(w_c) and np.isnan(w_p)) or w_c == w_p
        assert compiled.mr_point(c1, c2, kv, l1, l2, TAU_B) == _kernels_py.mr_point(c1, c2, kv, l1, l2, TAU_B)


def test_grid_shape_mismatch():
    with pytest.raises(ValueError):
        _kernels_py.mr_grid(1, 1, 0, [1.0, 2.0], [1.0], TAU_B)
    with pytest.raises(ValueError):
        compiled.mr_grid(1, 1, 0, [1.0, 2.0], [1.0], TAU_B)


def test_benchmark_script_runs(capsys):
    import importlib.util
    from pathlib import Path

    path = Path(__file__).resolve().parents[1] / "benchmarks" / "bench_kernels.py"
    spec = importlib.util.spec_from_file_location("bench_kernels", path)
    bench = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(bench)
    assert bench.main(["--n", "8", "--repeat", "1"]) == 0
    assert "python" in capsys.readouterr().out
