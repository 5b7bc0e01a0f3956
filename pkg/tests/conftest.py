import random

import pytest
from hypothesis import strategies as st

from twinlines.graph import build_graph, complete_graph, cycle_graph, path_graph
from twinlines.twins import generate_instance

# Bipartite base on 7 vertices split into 5 rich and 2 trivial blobs, 14 vertices.
# Names follow the drawing: u1..u3 top row, v1..v3 bottom row, z in between.
SEVEN_BLOB_NAMES = [
    "u11", "u12", "u13", "u21", "u22", "u3", "v1",
    "v21", "v22", "v31", "v32", "v33", "z1", "z2",
]
SEVEN_BLOB_EDGES = [
    ("z1", "v31"), ("z1", "v32"), ("z1", "v33"), ("z1", "u21"), ("z1", "u22"),
    ("z2", "v31"), ("z2", "v32"), ("z2", "v33"), ("z2", "u21"), ("z2", "u22"),
    ("z1", "z2"),
    ("u11", "u12"), ("u12", "u13"), ("u13", "u11"),
    ("u21", "u22"), ("v21", "v22"),
    ("v31", "v32"), ("v32", "v33"), ("v33", "v31"),
    ("u21", "v21"), ("u21", "v22"), ("u22", "v21"), ("u22", "v22"),
    ("u11", "u21"), ("u21", "u12"), ("u12", "u22"), ("u22", "u13"), ("u13", "u21"),
    ("u11", "u22"),
    ("u21", "u3"), ("u3", "u22"),
    ("v31", "v21"), ("v21", "v32"), ("v32", "v22"), ("v22", "v33"), ("v33", "v21"),
    ("v31", "v22"),
    ("v21", "v1"), ("v1", "v22"),
    ("u11", "v1"), ("v1", "u12"), ("u13", "v1"),
    ("v31", "u3"), ("u3", "v32"), ("v33", "u3"),
]


def seven_blob_graph():
    idx = {name: i for i, name in enumerate(SEVEN_BLOB_NAMES)}
    return build_graph(len(idx), [(idx[a], idx[b]) for a, b in SEVEN_BLOB_EDGES])


@pytest.fixture
def seven_blob():
    return seven_blob_graph()


@pytest.fixture
def named():
    return {
        "K2": complete_graph(2),
        "K3": complete_graph(3),
        "P3": path_graph(3),
        "C4": cycle_graph(4),
        "C5": cycle_graph(5),
        "C7": cycle_graph(7),
        "2K2": build_graph(4, [(0, 1), (2, 3)]),
        # P3 with its middle vertex split; the twin is vertex 3
        "diamond": build_graph(4, [(0, 1), (1, 2), (0, 3), (1, 3), (2, 3)]),
    }


def small_instances(seeds=(0, 1, 2)):
    """Every (left, right) with left+right <= 5, three edge densities, 0..4 splits."""
    out = []
    for left in range(1, 5):
        for right in range(1, 6 - left):
            for prob in (0.3, 0.6, 1.0):
                for splits in range(5):
                    for seed in seeds:
                        out.append(generate_instance(left, right, prob, splits, seed))
    return out


def random_instances(count, max_n, seed):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        left = rng.randint(1, max_n // 2)
        right = rng.randint(1, max_n - left - 1) if max_n - left - 1 >= 1 else 1
        splits = rng.randint(0, max_n - left - right)
        prob = rng.choice([0.2, 0.35, 0.5, 0.75, 1.0])
        out.append(generate_instance(left, right, prob, splits, rng.randrange(2**31)))
    return out


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return build_graph(n, chosen)


# acceptance criteria append "(criterion, ok, detail)" here; printed at the end
ACCEPTANCE_LOG = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LOG:
        return
    terminalreporter.section("acceptance criteria")
    for number, ok, detail in sorted(ACCEPTANCE_LOG):
        terminalreporter.write_line(f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
