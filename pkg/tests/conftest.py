"""
Pytest fixtures for klein-verify tests.

Group models and character tables are expensive, so the shared ones
are built once per session.
"""

import pytest
import sys
import os

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from characters import character_table
from groups import conjugacy_data, get_group, subgroup_lattice
from models import SuiteConfig


@pytest.fixture(scope="session")
def klein_group():
    """PSL(2,7) on 8 points."""
    return get_group("PSL(2,7)")


@pytest.fixture(scope="session")
def klein_classes(klein_group):
    return conjugacy_data(klein_group)


@pytest.fixture(scope="session")
def klein_lattice(klein_group, klein_classes):
    return subgroup_lattice(klein_group, klein_classes)


@pytest.fixture(scope="session")
def klein_table():
    """Dixon table of PSL(2,7)."""
    return character_table("PSL(2,7)")


@pytest.fixture(scope="session")
def sl27_table():
    return character_table("SL(2,7)")


@pytest.fixture(scope="session")
def gamma_table():
    """Dixon table of C7:C3."""
    return character_table("C7:C3")


@pytest.fixture
def rr_config(tmp_path):
    """Configuration for a run of the fast rr suite without a disk cache."""
    return SuiteConfig(suite="rr", cache_dir=None, output_path=str(tmp_path / "report.json"))
