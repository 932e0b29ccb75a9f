"""
Test configuration for the Dual Complex Eigen Toolkit.
This file provides the bundled example matrices and seeded random generators.
"""

import json
from pathlib import Path

import numpy as np
import pytest

import dual_complex_eigen
from dual_complex_eigen.config import use_tolerances
from dual_complex_eigen.dcmat import DCMatrix

FIXTURE_DIR = Path(dual_complex_eigen.__file__).parent / "fixtures"


def load_example(number: int) -> DCMatrix:
    payload = json.loads((FIXTURE_DIR / f"example{number}.json").read_text(encoding="utf-8"))
    return DCMatrix.from_json(payload)


@pytest.fixture
def fixture_dir():
    """Directory holding example1.json .. example5.json."""
    return FIXTURE_DIR


@pytest.fixture
def example1():
    """J_2(1) + [[0, 0], [1, 0]] eps: no eigenvalue."""
    return load_example(1)


@pytest.fixture
def example2():
    """J_2(1) + [[1, 0], [0, 0]] eps: infinitely many eigenvalues."""
    return load_example(2)


@pytest.fixture
def example3():
    """I + [[1, 1], [0, 1]] eps: the single eigenvalue 1 + eps."""
    return load_example(3)


@pytest.fixture
def example4():
    """diag(1, 1, 2) with a dual part whose 1-block is a Jordan block."""
    return load_example(4)


@pytest.fixture
def example5():
    """diag(1, 1, 2) with a diagonalizable dual 1-block."""
    return load_example(5)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def default_tolerances():
    """Pin the library defaults regardless of DCEIG_TOL_* in the environment."""
    with use_tolerances(abs=1e-12, rank=1e-9, cluster=1e-6, eig=1e-9, jordan=1e-6, residual=1e-9) as tol:
        yield tol
