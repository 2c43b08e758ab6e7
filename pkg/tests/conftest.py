from __future__ import annotations

import time
from dataclasses import dataclass

import pytest

from qcograph.cotree import (
    bags,
    canonical_string,
    complement_cotree,
    from_graph,
    parse,
    to_graph,
)
from qcograph.enumeration import enumerate_cographs
from qcograph.graph import Graph
from qcograph.spectra import QSpectrumReport, condensed, main_eigs_condensed, q_spectrum


@dataclass
class SpectralEntry:
    string: str
    graph: Graph
    report: QSpectrumReport
    width: int
    condensed_mains: list[tuple[float, bool]]
    complement_string: str


@pytest.fixture(scope="session")
def spectral_table():
    """Per-cograph spectral data for all enumerated cographs with n <= 9.

    The condensed route deliberately goes back through from_graph so the two
    sides of every comparison share no intermediate representation. Also
    returns the wall-clock seconds spent building the table, so acceptance
    timing can charge it to the first criterion that uses it.
    """
    start = time.perf_counter()
    table: dict[str, SpectralEntry] = {}
    for n in range(1, 10):
        for s in enumerate_cographs(n).strings:
            t = parse(s)
            g = to_graph(t)
            recovered = from_graph(g)
            assert canonical_string(recovered) == s  # n <= 9 round trip
            rep = bags(recovered)
            table[s] = SpectralEntry(
                string=s,
                graph=g,
                report=q_spectrum(g),
                width=rep.r,
                condensed_mains=main_eigs_condensed(condensed(rep)),
                complement_string=canonical_string(complement_cotree(t)),
            )
    elapsed = time.perf_counter() - start
    return table, elapsed
