"""Parameter sweeps over graph families, reported as CSV rows."""

from __future__ import annotations

import time
from itertools import product

from .cotree import bags
from .families import FAMILY_PARAMS, FamilySpec, build
from .recognition import classify
from .spectra import q_spectrum

__all__ = ["SWEEP_CAP", "sweep", "sweep_to_csv"]

SWEEP_CAP = 10000

_FLAGS = (
    "is_cograph",
    "is_chordal",
    "is_quasi_threshold",
    "is_threshold",
    "is_bipartite",
    "is_regular",
    "is_complete",
    "is_connected",
)


def sweep(pattern: dict, cap: int = SWEEP_CAP) -> tuple[list[str], list[list[str]]]:
    """Evaluate a family over ranged parameters.

    The pattern is {"family": name, "params": {...}} where each parameter is
    an int or a list of ints; the grid is their cartesian product, iterated
    lexicographically in parameter declaration order. Returns (header, rows).
    """
    family = pattern.get("family")
    if family not in FAMILY_PARAMS:
        raise ValueError(f"unknown family {family!r}")
    if family == "GeneralizedCoreSatellite":
        raise ValueError("sweep does not support nested satellite parameters")
    names = FAMILY_PARAMS[family]
    raw = pattern.get("params", {})
    axes: list[list[int]] = []
    for name in names:
        if name not in raw:
            raise ValueError(f"missing parameter {name!r} for family {family}")
        v = raw[name]
        axes.append(sorted(int(x) for x in v) if isinstance(v, (list, tuple)) else [int(v)])
    points = 1
    for axis in axes:
        points *= len(axis)
    if points > cap:
        raise ValueError(f"sweep has {points} points, exceeding the cap of {cap}")

    header = [*names, "n", "m", "r", "main_count", "mains", *_FLAGS, "runtime_ms"]
    rows: list[list[str]] = []
    for values in product(*axes):
        start = time.perf_counter()
        spec = FamilySpec.make(family, **dict(zip(names, values)))
        t, g = build(spec)
        rep = q_spectrum(g)
        width = bags(t).r
        report = classify(g)
        ms = (time.perf_counter() - start) * 1000.0
        row = [str(v) for v in values]
        row += [str(g.n), str(g.m), str(width), str(rep.main_count)]
        row.append(";".join(format(v, ".17g") for v in rep.main_values()))
        row += [str(getattr(report, flag)).lower() for flag in _FLAGS]
        row.append(format(ms, ".17g"))
        rows.append(row)
    return header, rows


def sweep_to_csv(header: list[str], rows: list[list[str]]) -> str:
    lines = [",".join(header)]
    lines.extend(",".join(row) for row in rows)
    return "\n".join(lines) + "\n"
