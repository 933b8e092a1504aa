# convexpoly - exact convex polygon and convex sequence toolkit

import os

import pytest

DATA_DIR = os.path.join(os.path.dirname(__file__), 'data')


@pytest.fixture
def data_path():
    def path(name):
        return os.path.join(DATA_DIR, name)
    return path
