import sys
from pathlib import Path

import pytest

sys.path.append(str(Path(__file__).parent.parent))

from src.acceptor import get_acceptor
from src.multipliers import get_multipliers

@pytest.fixture(scope="module")
def acceptor():
    return get_acceptor()

@pytest.fixture(scope="module")
def multipliers():
    return get_multipliers()
