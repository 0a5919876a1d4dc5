"""Derivative-free search over the angle vector of a fixed circuit structure."""
import logging
import numpy as np
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from src.utils.helpers import TWO_PI
from .config import MeshSearchSettings

logger = logging.getLogger(__name__)


@dataclass
class InnerResult:
    angles: np.ndarray
    cost: float
    n_evals: int

    def __iter__(self):
        return iter((self.angles, self.cost))


def householder_basis(v: np.ndarray) -> np.ndarray:
    """Orthogonal H = I - 2 v v^T / |v|^2; its columns and their negatives span positively."""
    v = np.asarray(v, dtype=float)
    return np.eye(len(v)) - 2.0 * np.outer(v, v) / np.dot(v, v)


def _poll_directions(dim: int, method: str, rng: np.random.Generator) -> np.ndarray:
    if method == 'coordinate':
        basis = np.eye(dim)
    else:
        v = rng.standard_normal(dim)
        while np.dot(v, v) < 1e-12:
            v = rng.standard_normal(dim)
        basis = householder_basis(v)
    return np.vstack([basis, -basis])


def inner_search(angles0: Sequence[float], cost_fn: Callable[[np.ndarray], float],
                 settings: Optional[MeshSearchSettings] = None,
                 rng: Optional[np.random.Generator] = None) -> InnerResult:
    """
    Mesh-adaptive direct search.

    Each poll tries the 2*dim directions +-H[:, i] scaled by the mesh size and
    takes the first improvement; the mesh then grows by `expansion`, otherwise
    it shrinks by `contraction`. Stops once the mesh drops below `tolerance`
    or the evaluation budget is spent. The returned cost never exceeds the
    starting cost.
    """
    settings = MeshSearchSettings() if settings is None else settings
    rng = np.random.default_rng(0) if rng is None else rng

    x = np.mod(np.asarray(angles0, dtype=float), TWO_PI)
    fx = float(cost_fn(x))
    n_evals = 1
    dim = len(x)
    if dim == 0:
        return InnerResult(x, fx, n_evals)

    mesh = settings.initial_mesh
    while mesh >= settings.tolerance and n_evals < settings.max_evaluations:
        improved = False
        for direction in _poll_directions(dim, settings.method, rng):
            if n_evals >= settings.max_evaluations:
                break
            trial = np.mod(x + mesh * direction, TWO_PI)
            ft = float(cost_fn(trial))
            n_evals += 1
            if ft < fx:
                x, fx = trial, ft
                improved = True
                break
        if improved:
            mesh = min(mesh * settings.expansion, settings.max_mesh)
        else:
            mesh *= settings.contraction

    logger.debug("inner search: dim=%d cost=%.6g evals=%d mesh=%.2e", dim, fx, n_evals, mesh)
    return InnerResult(x, fx, n_evals)
