import json
import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from arquiver.quiver import build_quiver

DATA = os.path.join(os.path.dirname(__file__), "data")


def load_quiver(name, field=None):
    with open(os.path.join(DATA, name + ".json")) as fh:
        spec = json.load(fh)
    if field is None:
        return build_quiver(spec)
    return build_quiver(spec, field=field)


@pytest.fixture
def qc():
    return load_quiver("qc")


@pytest.fixture
def qf():
    return load_quiver("qf")


@pytest.fixture
def qb():
    return load_quiver("qb")
