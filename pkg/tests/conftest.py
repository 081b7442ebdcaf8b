import pytest

from partialskew.duality import build_duality
from partialskew.scenarios import bundled_fixtures, fixture_path, run_scenario
from partialskew.skew import build_skew
from partialskew.smash import build_smash

import corpus_helpers


@pytest.fixture(scope="session")
def s1_action():
    return corpus_helpers.split_action()


@pytest.fixture(scope="session")
def s1_skew(s1_action):
    return build_skew(s1_action)


@pytest.fixture(scope="session")
def s1_smash(s1_skew):
    return build_smash(s1_skew)


@pytest.fixture(scope="session")
def s1_duality(s1_smash):
    return build_duality(s1_smash)


@pytest.fixture(scope="session")
def global_swap_action():
    return corpus_helpers.global_swap_action()


@pytest.fixture(scope="session")
def global_swap_duality(global_swap_action):
    return build_duality(build_smash(build_skew(global_swap_action)))


@pytest.fixture(scope="session")
def z3_action():
    return corpus_helpers.z3_restricted_action()


@pytest.fixture(scope="session")
def corpus_reports():
    """One full run of every bundled scenario, shared across the suite."""
    return {name: run_scenario(fixture_path(name)) for name in bundled_fixtures()}
