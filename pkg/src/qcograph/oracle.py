"""Closed-form spectra and main-count predictors used as ground truth.

Every quadratic here is solved in the cancellation-safe form: the larger
root from the usual formula, the smaller one from the product, so constant
terms that vanish (complete splits with a=1) still give an exact zero root.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .graph import Graph, bipartition, complement, induced_subgraph
from .recognition import (
    NotApplicable,
    classify,
    is_complete,
    is_connected,
    is_regular,
    parse_generalized_core_satellite,
    universal_vertices,
)
from .spectra import main_count as _main_count

__all__ = [
    "quadratic_roots",
    "sigma_complete",
    "sigma_bipartite_join",
    "mains_complete_split",
    "mains_core_union",
    "mains_core_satellite_pair",
    "MainCountPrediction",
    "predict_main_count",
    "FormA",
    "FormB",
    "predict_two_main_forms",
]

# spectrum entries are (eigenvalue, multiplicity, is_main), descending


def quadratic_roots(b: float, c: float) -> tuple[float, float]:
    """Roots of q^2 - b q + c = 0, descending; assumes real roots and b >= 0."""
    disc = b * b - 4.0 * c
    if disc < 0:
        raise ValueError(f"complex roots for q^2 - {b}q + {c}")
    big = (b + math.sqrt(disc)) / 2.0
    small = c / big if big != 0.0 else 0.0
    return big, small


def sigma_complete(n: int) -> list[tuple[float, int, bool]]:
    """Spectrum of the complete graph: 2n-2 simple and main, n-2 with
    multiplicity n-1 non-main; the one-vertex graph has the single main 0."""
    if n < 1:
        raise ValueError("n >= 1 required")
    if n == 1:
        return [(0.0, 1, True)]
    return [(float(2 * n - 2), 1, True), (float(n - 2), n - 1, False)]


def sigma_bipartite_join(a: int, b: int) -> list[tuple[float, int, bool]]:
    """Spectrum of the join of two edgeless graphs.

    For a != b: a+b and 0 are main, b (mult a-1) and a (mult b-1) are not.
    For a == b the graph is regular: only 2a is main.
    """
    if a < 1 or b < 1:
        raise ValueError("a, b >= 1 required")
    if a == b:
        out = [(float(2 * a), 1, True)]
        if 2 * a - 2 > 0:
            out.append((float(a), 2 * a - 2, False))
        out.append((0.0, 1, False))
        return out
    out = [(float(a + b), 1, True)]
    mids = []
    if a - 1 > 0:
        mids.append((float(b), a - 1, False))
    if b - 1 > 0:
        mids.append((float(a), b - 1, False))
    mids.sort(key=lambda e: -e[0])
    out.extend(mids)
    out.append((0.0, 1, True))
    return out


def mains_complete_split(a: int, b: int) -> tuple[float, float]:
    """Main eigenvalues of the clique-on-a joined with b isolated vertices,
    descending: the roots of q^2 - (b+3a-2)q + (2a^2-2a)."""
    if a < 1 or b <= 1:
        raise ValueError("a >= 1 and b > 1 required")
    return quadratic_roots(float(b + 3 * a - 2), float(2 * a * a - 2 * a))


def mains_core_union(c: int, a: int, b: int) -> tuple[tuple[float, float], float, int]:
    """Main eigenvalues of K_c joined with (K_a union K_b), a != b.

    Returns ((q1, q2) descending, the non-main value a+b+c-2, its exact
    multiplicity c in the full spectrum).
    """
    if c < 1 or a < 1 or b < 1:
        raise ValueError("a, b, c >= 1 required")
    if a == b:
        raise ValueError("a != b required; use mains_core_satellite_pair")
    bq = float(3 * c + 2 * b + 2 * a - 4)
    cq = float(2 * c * c + (2 * b + 2 * a - 6) * c + (4 * a - 4) * b - 4 * a + 4)
    return quadratic_roots(bq, cq), float(a + b + c - 2), c


def mains_core_satellite_pair(c: int, a: int) -> tuple[float, float]:
    """Main eigenvalues of K_c joined with two disjoint copies of K_a,
    descending (the a == b case of the three-bag quotient)."""
    if c < 1 or a < 1:
        raise ValueError("a, c >= 1 required")
    bq = float(3 * c + 4 * a - 4)
    cq = float(2 * c * c + (4 * a - 6) * c + 4 * a * a - 8 * a + 4)
    return quadratic_roots(bq, cq)


@dataclass(frozen=True)
class MainCountPrediction:
    """Predicted number of main eigenvalues with the rule that produced it.

    For rule WidthBoundOnly the value k is only an upper bound (the cotree
    width, or the order for non-cographs); every other rule is exact.
    """

    k: int
    rule: str
    premises: str

    @property
    def exact(self) -> bool:
        return self.rule != "WidthBoundOnly"

    def to_json_dict(self) -> dict:
        return {"k": self.k, "rule": self.rule, "premises": self.premises, "exact": self.exact}


def _predict_from_satellites(n0: int, satellites: tuple[tuple[int, int], ...]) -> MainCountPrediction:
    p = len(satellites)
    total = sum(a for a, _ in satellites)
    if p == 1 and total == 1:
        return MainCountPrediction(
            k=1, rule="CompleteGraph", premises=f"K_{n0} with one satellite K_{satellites[0][1]} is complete"
        )
    if p == 1:
        a = satellites[0]
        return MainCountPrediction(
            k=2,
            rule="CoreSatelliteP1",
            premises=f"core K_{n0} with {a[0]} satellites all of order {a[1]}",
        )
    if p == 2 and all(a == 1 for a, _ in satellites):
        orders = tuple(n for _, n in satellites)
        return MainCountPrediction(
            k=2,
            rule="TwoMainFormA",
            premises=f"core K_{n0} with exactly two satellites of distinct orders {orders}",
        )
    return MainCountPrediction(
        k=p + 1,
        rule="GcsPplus1",
        premises=f"core K_{n0} with {total} satellites in {p} order classes",
    )


def predict_main_count(obj) -> MainCountPrediction:
    """Decision ladder over the structural theorems.

    1. regular graphs (complete included) have exactly one main eigenvalue;
    2-4. generalized core-satellite shapes by satellite pattern;
    5. strip all universal vertices: if the remainder has k' >= 2 mains the
       join adds one iff the remainder's complement is non-bipartite;
    6. otherwise only the cotree-width bound is asserted.
    """
    from .families import FamilySpec, as_core_satellite, build  # deferred: families imports this module

    if isinstance(obj, FamilySpec):
        if obj.family in ("Complete", "Empty"):
            n = obj["n"]
            rule = "CompleteGraph" if obj.family == "Complete" else "Regular"
            return MainCountPrediction(k=1, rule=rule, premises=f"{obj.family}({n}) is regular")
        params = as_core_satellite(obj)
        if params is not None:
            n0, satellites = params
            return _predict_from_satellites(n0, satellites)
        _, g = build(obj)
        return _predict_graph(g)
    if isinstance(obj, Graph):
        return _predict_graph(obj)
    raise TypeError(f"expected Graph or FamilySpec, got {type(obj)!r}")


def _predict_graph(g: Graph) -> MainCountPrediction:
    if g.n >= 1 and is_regular(g):
        if is_complete(g):
            return MainCountPrediction(k=1, rule="CompleteGraph", premises=f"K_{g.n} is complete")
        d = int(g.degrees()[0]) if g.n else 0
        return MainCountPrediction(k=1, rule="Regular", premises=f"{d}-regular graph")
    sat = parse_generalized_core_satellite(g)
    if sat is not None:
        return _predict_from_satellites(sat.n0, sat.satellites)
    uni = universal_vertices(g)
    if uni and len(uni) < g.n:
        rest = [v for v in range(g.n) if v not in set(uni)]
        h = induced_subgraph(g, rest)
        k_h = _main_count(h)
        if k_h >= 2:
            non_bip = bipartition(complement(h)) is None
            if non_bip:
                return MainCountPrediction(
                    k=k_h + 1,
                    rule="JoinKcNonBipartite",
                    premises=f"K_{len(uni)} joined to a remainder with {k_h} mains and non-bipartite complement",
                )
            return MainCountPrediction(
                k=k_h,
                rule="JoinKcBipartite",
                premises=f"K_{len(uni)} joined to a remainder with {k_h} mains and bipartite complement",
            )
    return _width_bound(g)


def _width_bound(g: Graph) -> MainCountPrediction:
    from .cotree import NotCograph, bags, from_graph

    try:
        width = bags(from_graph(g)).r
        return MainCountPrediction(
            k=width, rule="WidthBoundOnly", premises=f"cotree width {width} (upper bound only)"
        )
    except NotCograph:
        return MainCountPrediction(
            k=g.n, rule="WidthBoundOnly", premises="not a cograph; trivial order bound"
        )


@dataclass(frozen=True)
class FormA:
    """Core clique joined with two complete satellites of distinct orders."""

    c: int
    a: int
    b: int  # a < b


@dataclass(frozen=True)
class FormB:
    """Core clique joined with t >= 2 complete satellites of one order."""

    c: int
    t: int
    a: int


def predict_two_main_forms(g: Graph) -> FormA | FormB | None:
    """Structural parse of the two-main characterization for connected
    quasi-threshold graphs; None when the graph matches neither shape.

    Raises NotApplicable for disconnected or non-quasi-threshold input.
    """
    if g.n < 1:
        raise NotApplicable("empty graph")
    if not is_connected(g):
        raise NotApplicable("graph is disconnected")
    if not classify(g).is_quasi_threshold:
        raise NotApplicable("graph is not quasi-threshold")
    if is_complete(g):
        return None  # exactly one main eigenvalue
    sat = parse_generalized_core_satellite(g)
    if sat is None:
        return None
    if sat.p == 2 and all(a == 1 for a, _ in sat.satellites):
        (_, a), (_, b) = sat.satellites
        return FormA(c=sat.n0, a=a, b=b)
    if sat.p == 1 and sat.satellites[0][0] >= 2:
        t, a = sat.satellites[0]
        return FormB(c=sat.n0, t=t, a=a)
    return None
