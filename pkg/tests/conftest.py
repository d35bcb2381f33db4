import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from csfkit.graphs import Graph, complete_graph, cycle_graph, path_graph, spider, star_graph
from csfkit.partitions import partitions_of
from csfkit.symfunc import CharacterTable
from oracles import random_tree_edges

ACCEPTANCE_LINES: list[str] = []


def small_corpus(max_vertices: int = 7, seed: int = 20) -> list[tuple[str, Graph]]:
    """Paths, stars, cycles, spiders, a few dense graphs and random trees."""
    rng = random.Random(seed)
    corpus = [(f"P{m}", path_graph(m)) for m in range(1, max_vertices + 1)]
    corpus += [(f"K1,{m}", star_graph(m)) for m in range(2, max_vertices)]
    corpus += [(f"C{m}", cycle_graph(m)) for m in range(3, max_vertices + 1)]
    for k in range(max_vertices // 2):
        corpus += [(f"T({nu.text()})", spider(nu)) for nu in partitions_of(k)]
    corpus += [("K4", complete_graph(4)), ("K2+K1", Graph(3, ((0, 1),)))]
    for i in range(6):
        m = rng.randint(4, max_vertices)
        corpus.append((f"tree{i}_{m}", Graph(m, tuple(random_tree_edges(m, rng)))))
    return corpus


@pytest.fixture(scope="session")
def table20() -> CharacterTable:
    return CharacterTable(20).build()


@pytest.fixture
def cache_dir(tmp_path, monkeypatch):
    monkeypatch.setenv("CSF_CACHE_DIR", str(tmp_path / "cache"))
    return tmp_path / "cache"


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
