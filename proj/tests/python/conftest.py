import os
import shutil
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[2]


@pytest.fixture(scope="session")
def fixtures():
    return Path(os.environ.get("HOMSIEGEL_FIXTURES", ROOT / "fixtures"))


@pytest.fixture(scope="session")
def cli():
    path = os.environ.get("HOMSIEGEL_CLI") or shutil.which("homsiegel")
    if not path:
        candidate = ROOT / "build" / "homsiegel"
        path = str(candidate) if candidate.exists() else None
    if not path:
        pytest.skip("homsiegel CLI not built")
    return path
