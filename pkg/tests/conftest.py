import json
import sys
from fractions import Fraction as Q
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from gabdyn.cusp import CuspTriple, build_milnor_lattice  # noqa: E402
from gabdyn.symmetry import GroupElement, close_generators  # noqa: E402

GOLDEN = Path(__file__).parent / "golden"


def element(*exps):
    return GroupElement(tuple(Q(x) for x in exps))


def group(gamma, *gens):
    t = CuspTriple(gamma)
    return t, close_generators(t, [element(*g) for g in gens])


@pytest.fixture
def case_b():
    """(4,4,4) with the order-4 group generated by (1/4, 3/4, 0)."""
    t, G = group((4, 4, 4), (Q(1, 4), Q(3, 4), 0))
    return t, build_milnor_lattice(t), G


@pytest.fixture
def case_c():
    """(6,6,6) with the order-3 group generated by (1/3, 1/3, 1/3)."""
    t, G = group((6, 6, 6), (Q(1, 3), Q(1, 3), Q(1, 3)))
    return t, build_milnor_lattice(t), G


@pytest.fixture
def case_half():
    """(4,4,4) with the order-2 group generated by (1/2, 1/2, 0)."""
    t, G = group((4, 4, 4), (Q(1, 2), Q(1, 2), 0))
    return t, build_milnor_lattice(t), G


@pytest.fixture
def case_trivial():
    t, G = group((2, 3, 7))
    return t, build_milnor_lattice(t), G


NAMED_CONFIGS = {
    "example_b": {"gamma": [4, 4, 4], "generators": [{"num": [1, 3, 0], "den": 4}]},
    "example_c": {"gamma": [6, 6, 6], "generators": [{"num": [1, 1, 1], "den": 3}]},
    "trivial_237": {"gamma": [2, 3, 7], "generators": []},
}


@pytest.fixture
def write_config(tmp_path):
    def write(doc, name="job.json"):
        path = tmp_path / name
        path.write_text(json.dumps(doc), encoding="utf-8")
        return str(path)

    return write
