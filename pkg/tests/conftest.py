"""Shared fixtures: corpus instances and the two ground fields."""
from pathlib import Path
import sys

PROJECT_ROOT = Path(__file__).resolve().parents[1]
if str(PROJECT_ROOT) not in sys.path:
    sys.path.insert(0, str(PROJECT_ROOT))

import pytest

from app.corpus import corpus_path, load_instance
from bvext.exactfield import FieldSpec


def load(name: str):
    return load_instance(corpus_path(name))


@pytest.fixture
def QQ():
    return FieldSpec.rationals()


@pytest.fixture
def GF2():
    return FieldSpec.prime(2)


@pytest.fixture
def rationals():
    return load("rationals").algebra


@pytest.fixture
def dual_numbers():
    return load("dual_numbers").algebra


@pytest.fixture
def truncated_cubic():
    return load("truncated_cubic").algebra


@pytest.fixture
def matrix_m2():
    return load("matrix_m2").algebra


@pytest.fixture
def nakayama_algebra():
    return load("nakayama").algebra


@pytest.fixture
def group_c2():
    return load("group_c2").hopf


@pytest.fixture
def sweedler():
    return load("sweedler").hopf


@pytest.fixture
def gf2_dual_numbers():
    return load("gf2_dual_numbers").hopf
