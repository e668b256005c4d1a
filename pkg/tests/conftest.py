import os
from pathlib import Path

import pytest

from walkmix.graph import demo_graph, load_graph


@pytest.fixture(scope="session")
def demo():
    return demo_graph()


def locate_ca_grqc() -> Path | None:
    """Find a user-supplied ca-GrQc edge list, if any.

    Checked locations: $WALKMIX_DATA_DIR, ./data, ./tests/data. The file is
    not bundled and this environment cannot download it.
    """
    names = ("ca-GrQc.txt", "CA-GrQc.txt", "ca-GrQc.edges")
    dirs = []
    if os.environ.get("WALKMIX_DATA_DIR"):
        dirs.append(Path(os.environ["WALKMIX_DATA_DIR"]))
    root = Path(__file__).resolve().parent.parent
    dirs += [root / "data", root / "tests" / "data"]
    for d in dirs:
        for name in names:
            candidate = d / name
            if candidate.exists():
                return candidate
    return None


@pytest.fixture(scope="session")
def ca_grqc_graph():
    path = locate_ca_grqc()
    if path is None:
        pytest.skip(
            "ca-GrQc edge list not available: this environment cannot download "
            "datasets; place ca-GrQc.txt under $WALKMIX_DATA_DIR or ./data to run"
        )
    return load_graph(path)
