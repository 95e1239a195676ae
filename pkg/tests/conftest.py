import json
import os
import random
from pathlib import Path

import hypothesis
import pytest
from hypothesis import strategies as st

from alpha_spectra.graph6 import read_graph6_file
from alpha_spectra.graphs import Graph
from alpha_spectra.poly import Poly, RatFunc

ROOT = Path(__file__).resolve().parent.parent
DATA = ROOT / "data"
ORACLES = json.loads((Path(__file__).parent / "data" / "oracles.json").read_text())

SEED = int(os.environ.get("ALPHA_SPECTRA_SEED", "0"))

hypothesis.settings.register_profile("default", max_examples=40, deadline=None, derandomize=True)
hypothesis.settings.register_profile("thorough", max_examples=300, deadline=None)
hypothesis.settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture
def rng():
    return random.Random(SEED)


def oracle_poly(section: str, key: str) -> Poly:
    return Poly.from_json(ORACLES[section][key])


def oracle_coronal(key: str) -> RatFunc:
    return RatFunc.from_json(ORACLES["coronal"][key])


def small_corpus() -> list[Graph]:
    return list(read_graph6_file(DATA / "graphs_le7.g6"))


def regular_corpus() -> list[Graph]:
    return list(read_graph6_file(DATA / "regular_connected_le10.g6"))


def random_graph(r: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if r.random() < p]
    return Graph(n, tuple(edges))


def random_bipartite(r: random.Random, n: int, p: float = 0.5) -> Graph:
    k = r.randint(1, n - 1) if n > 1 else 1
    edges = [(i, j) for i in range(k) for j in range(k, n) if r.random() < p]
    return Graph(n, tuple(edges))


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 7) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, tuple(p for p, keep in zip(pairs, mask) if keep))


fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
alphas = st.fractions(min_value=0, max_value=1, max_denominator=12)


@st.composite
def polys(draw, max_degree: int = 6) -> Poly:
    return Poly(draw(st.lists(fractions, max_size=max_degree + 1)))



# -- acceptance reporting ----------------------------------------------------

_CRITERIA: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or rep.when != "call" and not rep.failed:
        return
    number, title = marker.args
    entry = _CRITERIA.setdefault(number, {"title": title, "ok": True, "details": []})
    if rep.failed:
        entry["ok"] = False
    if rep.when == "call":
        for name, value in item.user_properties:
            if name == "detail":
                entry["details"].append(f"{item.name}: {value}")


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        entry = _CRITERIA[number]
        status = "PASS" if entry["ok"] else "FAIL"
        terminalreporter.write_line(f"criterion {number} {status}  {entry['title']}")
        for d in entry["details"]:
            terminalreporter.write_line(f"    {d}")
