"""Signless Laplacian spectra, main-eigenvalue detection, and the condensed matrix.

An eigenvalue is *main* when its eigenspace is non-orthogonal to the all-ones
vector. Main flags are decided per eigenvalue group (not per solver vector):
a group is main iff the projection of the all-ones vector onto its eigenspace
has norm above tolerance, which is independent of the basis the solver picks.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .cotree import BagRepresentation, JOIN
from .graph import Graph

__all__ = [
    "SolverError",
    "EigenDecomposition",
    "jacobi_eigh",
    "signless_laplacian",
    "laplacian",
    "SpectrumGroup",
    "QSpectrumReport",
    "default_tol_group",
    "default_tol_main",
    "q_spectrum",
    "main_count",
    "main_values",
    "CondensedMatrix",
    "condensed",
    "main_eigs_condensed",
    "algebraic_connectivity",
    "report_to_json",
    "dumps_17g",
]

_MAX_SWEEPS = 100
_CONVERGENCE = 1e-12  # of the Frobenius norm


class SolverError(RuntimeError):
    """Eigensolver failed to converge within the sweep cap (indicates a bug)."""


@dataclass(frozen=True)
class EigenDecomposition:
    values: np.ndarray  # ascending
    vectors: np.ndarray  # orthonormal columns aligned with values


def jacobi_eigh(matrix: np.ndarray) -> EigenDecomposition:
    """Eigendecomposition of a dense symmetric matrix by cyclic Jacobi rotations.

    Sweeps the strict upper triangle in row order until the off-diagonal
    Frobenius norm drops below 1e-12 of the matrix norm. Deterministic:
    fixed sweep order, no pivot search.
    """
    a = np.array(matrix, dtype=float)
    n = a.shape[0]
    if n == 0 or a.shape != (n, n):
        raise ValueError(f"need a non-empty square matrix, got shape {a.shape}")
    v = np.eye(n)
    norm = float(np.linalg.norm(a))
    if norm == 0.0 or n == 1:
        return _sorted_decomposition(np.diag(a).copy(), v)
    tol = _CONVERGENCE * norm
    # if every rotation in a sweep falls below this, the off-diagonal norm
    # is already below tol, so skipping them cannot stall convergence
    skip = tol / (2.0 * n)
    for _ in range(_MAX_SWEEPS):
        off = float(np.linalg.norm(a - np.diag(np.diag(a))))
        if off <= tol:
            return _sorted_decomposition(np.diag(a).copy(), v)
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= skip:
                    continue
                app = a[p, p]
                aqq = a[q, q]
                tau = (aqq - app) / (2.0 * apq)
                t = math.copysign(1.0, tau) / (abs(tau) + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = a[q, p] = 0.0
                col_p = v[:, p].copy()
                col_q = v[:, q].copy()
                v[:, p] = c * col_p - s * col_q
                v[:, q] = s * col_p + c * col_q
    raise SolverError(f"Jacobi sweep cap ({_MAX_SWEEPS}) exceeded for order {n}")


def _sorted_decomposition(values: np.ndarray, vectors: np.ndarray) -> EigenDecomposition:
    order = np.argsort(values, kind="stable")
    return EigenDecomposition(values=values[order], vectors=vectors[:, order])


def signless_laplacian(g: Graph) -> np.ndarray:
    """Q = D + A as a dense float matrix."""
    if g.n < 1:
        raise ValueError("spectral operations require at least one vertex")
    a = g.adj.astype(float)
    return np.diag(g.degrees().astype(float)) + a


def laplacian(g: Graph) -> np.ndarray:
    """L = D - A as a dense float matrix."""
    if g.n < 1:
        raise ValueError("spectral operations require at least one vertex")
    a = g.adj.astype(float)
    return np.diag(g.degrees().astype(float)) - a


def default_tol_group(matrix: np.ndarray) -> float:
    """Grouping tolerance, scaled by the matrix's infinity norm for large inputs."""
    scale = float(np.max(np.sum(np.abs(matrix), axis=1))) if matrix.size else 0.0
    return 1e-7 * max(1.0, scale)


def default_tol_main(n: int) -> float:
    """Projection-norm threshold; the sqrt(n) factor tracks the all-ones norm."""
    return 1e-6 * math.sqrt(n)


@dataclass(frozen=True)
class SpectrumGroup:
    value: float
    multiplicity: int
    main: bool
    projection_norm: float  # norm of the all-ones vector's projection


@dataclass(frozen=True)
class QSpectrumReport:
    n: int
    groups: tuple[SpectrumGroup, ...]
    main_count: int
    tol_group: float
    tol_main: float

    def main_values(self) -> list[float]:
        return [grp.value for grp in self.groups if grp.main]

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "groups": [
                {
                    "value": grp.value,
                    "multiplicity": grp.multiplicity,
                    "main": grp.main,
                    "projection_norm": grp.projection_norm,
                }
                for grp in self.groups
            ],
            "main_count": self.main_count,
            "tolerances": {"tol_group": self.tol_group, "tol_main": self.tol_main},
        }


def _group_indices(values: np.ndarray, tol: float) -> list[tuple[int, int]]:
    """Half-open index ranges for eigenvalue groups split at gaps above tol."""
    spans = []
    start = 0
    for i in range(1, len(values)):
        if values[i] - values[i - 1] > tol:
            spans.append((start, i))
            start = i
    spans.append((start, len(values)))
    return spans


def q_spectrum(
    g: Graph, tol_group: float | None = None, tol_main: float | None = None
) -> QSpectrumReport:
    """Grouped signless Laplacian spectrum with per-group main flags.

    Eigenvalues within tol_group of their neighbor are one group; per the
    pairwise-distinct convention each group gets one main flag, set iff the
    all-ones projection onto the grouped eigenspace exceeds tol_main.
    """
    q = signless_laplacian(g)
    if tol_group is None:
        tol_group = default_tol_group(q)
    if tol_main is None:
        tol_main = default_tol_main(g.n)
    dec = jacobi_eigh(q)
    ones = np.ones(g.n)
    groups = []
    for start, stop in _group_indices(dec.values, tol_group):
        coeffs = dec.vectors[:, start:stop].T @ ones
        norm = float(np.linalg.norm(coeffs))
        groups.append(
            SpectrumGroup(
                value=float(np.mean(dec.values[start:stop])),
                multiplicity=stop - start,
                main=norm > tol_main,
                projection_norm=norm,
            )
        )
    groups.reverse()  # descending by value, largest (Perron) first
    return QSpectrumReport(
        n=g.n,
        groups=tuple(groups),
        main_count=sum(1 for grp in groups if grp.main),
        tol_group=tol_group,
        tol_main=tol_main,
    )


def main_count(g: Graph) -> int:
    """Number of main signless Laplacian eigenvalues at default tolerances."""
    return q_spectrum(g).main_count


def main_values(g: Graph) -> list[float]:
    """Main signless Laplacian eigenvalues, descending, at default tolerances."""
    return q_spectrum(g).main_values()


@dataclass(frozen=True)
class CondensedMatrix:
    """The r x r matrix over bags whose spectrum contains all main Q-eigenvalues.

    Diagonal: p + (t - 1) for J-bags, p for U-bags. Off-diagonal:
    sqrt(t_i t_j) when the bags are adjacent, else 0. The weight vector s
    with s_i = sqrt(t_i) plays the role of the all-ones vector: lifting a
    condensed eigenvector w assigns w_i / sqrt(t_i) to every vertex of bag i,
    so the lifted entry sum equals w . s.
    """

    entries: np.ndarray
    weights: np.ndarray  # s_i = sqrt(t_i)

    @property
    def r(self) -> int:
        return self.entries.shape[0]


def condensed(b: BagRepresentation) -> CondensedMatrix:
    r = b.r
    c = np.zeros((r, r))
    sizes = np.array([bag.t for bag in b.bags], dtype=float)
    for i, bag in enumerate(b.bags):
        c[i, i] = bag.p + (bag.t - 1) if bag.kind == JOIN else bag.p
    root = np.sqrt(sizes)
    cross = np.outer(root, root)
    off = b.z.astype(float) * cross
    np.fill_diagonal(off, 0.0)
    c += off
    return CondensedMatrix(entries=c, weights=root)


def main_eigs_condensed(
    c: CondensedMatrix, tol_group: float | None = None, tol_main: float | None = None
) -> list[tuple[float, bool]]:
    """Eigenvalues of the condensed matrix with main flags, descending.

    A group is main iff the projection of the weight vector s onto its
    eigenspace has norm above tol_main.
    """
    if tol_group is None:
        tol_group = default_tol_group(c.entries)
    if tol_main is None:
        tol_main = default_tol_main(int(round(float(np.sum(c.weights**2)))))
    dec = jacobi_eigh(c.entries)
    out = []
    for start, stop in _group_indices(dec.values, tol_group):
        coeffs = dec.vectors[:, start:stop].T @ c.weights
        norm = float(np.linalg.norm(coeffs))
        out.append((float(np.mean(dec.values[start:stop])), norm > tol_main))
    out.reverse()
    return out


def algebraic_connectivity(g: Graph) -> float:
    """Second-smallest Laplacian eigenvalue; positive iff connected."""
    if g.n < 2:
        raise ValueError("algebraic connectivity requires at least two vertices")
    dec = jacobi_eigh(laplacian(g))
    return float(dec.values[1])


def report_to_json(report: QSpectrumReport) -> str:
    """Serialize a spectrum report with floats at 17 significant digits."""
    return dumps_17g(report.to_json_dict())


def dumps_17g(obj) -> str:
    """json.dumps with floats rendered at 17 significant digits."""

    def render(x) -> str:
        if isinstance(x, float):
            return format(x, ".17g")
        if isinstance(x, bool) or x is None:
            return json.dumps(x)
        if isinstance(x, (int, str)):
            return json.dumps(x)
        if isinstance(x, dict):
            inner = ",".join(f"{json.dumps(str(k))}:{render(v)}" for k, v in x.items())
            return "{" + inner + "}"
        if isinstance(x, (list, tuple)):
            return "[" + ",".join(render(v) for v in x) + "]"
        raise TypeError(f"cannot serialize {type(x)!r}")

    return render(obj)
