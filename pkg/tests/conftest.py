from pathlib import Path

import pytest

from spotty.enumerators import KERNELS

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture
def fixtures():
    return FIXTURES


@pytest.fixture
def clean_kernels():
    KERNELS.clear()
    yield KERNELS
    KERNELS.clear()
