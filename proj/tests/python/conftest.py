import importlib.util

import pytest


def pytest_configure(config):
    if importlib.util.find_spec("asdimlab") is None:
        pytest.exit("asdimlab is not installed; run pip install --no-build-isolation .", returncode=77)
