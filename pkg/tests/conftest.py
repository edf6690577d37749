import pathlib

import pytest

from mycdist import parse_graph6

DATA = pathlib.Path(__file__).resolve().parents[1] / "data"


def corpus_lines(name):
    return (DATA / name).read_text().split()


@pytest.fixture(scope="session")
def corpus_n6():
    """All 208 graphs with 1 <= n <= 6, as (graph6, Graph) pairs."""
    lines = corpus_lines("graphs_n1_6.g6")
    graphs = [(ln, parse_graph6(ln)) for ln in lines]
    assert len(graphs) == 208
    return graphs


@pytest.fixture(scope="session")
def corpus_n7(corpus_n6):
    """All 1252 graphs with 1 <= n <= 7."""
    lines = corpus_lines("graphs_n7.g6")
    extra = [(ln, parse_graph6(ln)) for ln in lines]
    assert len(extra) == 1044
    return corpus_n6 + extra
