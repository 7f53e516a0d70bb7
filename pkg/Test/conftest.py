import sys
from itertools import islice
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent
sys.path.insert(0, str(ROOT.parent / "src"))

from Constructions.builders import (cyclic, left_zero, min_chain, rectangular_band,  # noqa: E402
                                    right_zero, saturated_add, semilattice, trivial)
from Search.enumeration import enumerate_structures, plain_semigroups  # noqa: E402
from Utils.model import EnumerationConfig, PropertyId  # noqa: E402

VALID_DIR = ROOT / "valid_tests"
INVALID_DIR = ROOT / "invalid_tests"
GOLDEN_DIR = ROOT / "golden"


@pytest.fixture(scope="session")
def t1():
    return trivial()


@pytest.fixture(scope="session")
def lz2():
    return left_zero(2)


@pytest.fixture(scope="session")
def rz2():
    return right_zero(2)


@pytest.fixture(scope="session")
def ch3():
    return min_chain(3)


@pytest.fixture(scope="session")
def sat3():
    return saturated_add(3)


@pytest.fixture(scope="session")
def z2():
    return cyclic(2)


@pytest.fixture(scope="session")
def sl2():
    return semilattice(2)


@pytest.fixture(scope="session")
def rb2x2():
    return rectangular_band(2, 2)


@pytest.fixture(scope="session")
def fixtures(t1, lz2, rz2, ch3, sat3, z2, sl2, rb2x2):
    return [t1, lz2, rz2, ch3, sat3, z2, sl2, rb2x2]


@pytest.fixture(scope="session")
def io_fixtures(fixtures):
    from Properties.deciders import check
    return [S for S in fixtures if check(S, PropertyId.IDEMPOTENT_ORDERED).holds]


@pytest.fixture(scope="session")
def ordered_corpus():
    """ Every labeled ordered semigroup with n <= 3 """
    return [S for n in (1, 2, 3) for S in enumerate_structures(EnumerationConfig(n))]


@pytest.fixture(scope="session")
def io_corpus():
    """ Every labeled idempotent ordered semigroup with n <= 3 """
    cfg = [EnumerationConfig(n, require=PropertyId.IDEMPOTENT_ORDERED) for n in (1, 2, 3)]
    return [S for c in cfg for S in enumerate_structures(c)]


@pytest.fixture(scope="session")
def plain_upto3():
    return [B for n in (1, 2, 3) for B in plain_semigroups(n)]


@pytest.fixture(scope="session")
def io_sample4():
    """ Every 20th canonical idempotent ordered semigroup with n = 4 """
    cfg = EnumerationConfig(4, require=PropertyId.IDEMPOTENT_ORDERED, up_to_iso=True)
    return list(islice(enumerate_structures(cfg), 0, None, 20))
