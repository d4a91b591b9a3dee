"""Points of 2-D Minkowski space and light-cone coordinates.

Conventions: metric diag(1, -1), units with the length scale set to 1.
A point is ``(t, x)``; the light-cone coordinates are ``u = t - x`` and
``v = t + x`` so that the squared interval is ``s = t**2 - x**2 = u*v``.
Points with ``|t| == |x|`` (exactly, in floating point) lie on the null
cone and are rejected by every pointwise distribution evaluation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import OnConeError


@dataclass(frozen=True)
class SpacetimePoint:
    t: float
    x: float

    @property
    def u(self) -> float:
        return self.t - self.x

    @property
    def v(self) -> float:
        return self.t + self.x

    @property
    def interval(self) -> float:
        """Squared Minkowski interval t^2 - x^2."""
        return self.t * self.t - self.x * self.x

    @property
    def on_cone(self) -> bool:
        return abs(self.t) == abs(self.x)

    def __sub__(self, other: "SpacetimePoint") -> "SpacetimePoint":
        return SpacetimePoint(self.t - other.t, self.x - other.x)

    def __neg__(self) -> "SpacetimePoint":
        return SpacetimePoint(-self.t, -self.x)

    def require_off_cone(self) -> "SpacetimePoint":
        if self.on_cone:
            raise OnConeError(f"point (t={self.t}, x={self.x}) lies on the null cone")
        return self


def as_point(p) -> SpacetimePoint:
    """Coerce a (t, x) pair or SpacetimePoint to a SpacetimePoint."""
    if isinstance(p, SpacetimePoint):
        return p
    t, x = p
    return SpacetimePoint(float(t), float(x))


def points_to_array(points) -> np.ndarray:
    """Stack points into an (n, 2) float array of (t, x) rows."""
    pts = [as_point(p) for p in points]
    return np.array([[p.t, p.x] for p in pts], dtype=float).reshape(len(pts), 2)


def pair_differences(arr: np.ndarray):
    """Pairwise differences tau_ij, zeta_ij for i < j.

    ``arr`` has shape (..., n, 2); returns (tau, zeta) of shape (..., P)
    with P = n(n-1)/2, pairs enumerated in lexicographic (i, j) order.
    """
    n = arr.shape[-2]
    ii, jj = np.triu_indices(n, k=1)
    tau = arr[..., ii, 0] - arr[..., jj, 0]
    zeta = arr[..., ii, 1] - arr[..., jj, 1]
    return tau, zeta


def pair_index(n: int):
    """The (i, j) index arrays matching :func:`pair_differences` ordering."""
    return np.triu_indices(n, k=1)


@dataclass(frozen=True)
class LightconeCoords:
    """Light-cone coordinates of n points split into k plus-charge and
    n-k minus-charge groups.

    ``z``/``zp`` hold u/v of the first k points, ``w``/``wp`` those of the
    remaining points (primes are the v = t + x combination).
    """

    z: np.ndarray
    w: np.ndarray
    zp: np.ndarray
    wp: np.ndarray

    @property
    def n(self) -> int:
        return len(self.z) + len(self.w)

    @property
    def k(self) -> int:
        return len(self.z)


def to_lightcone(points, k: int) -> LightconeCoords:
    """Transform n points to light-cone coordinates, first k = plus charges.

    The caller is responsible for ordering the points so that the first k
    carry charge +a.  Raises IndexError for k outside [0, n].
    """
    arr = points_to_array(points)
    n = arr.shape[0]
    if not 0 <= k <= n:
        raise IndexError(f"k={k} outside [0, {n}]")
    u = arr[:, 0] - arr[:, 1]
    v = arr[:, 0] + arr[:, 1]
    return LightconeCoords(z=u[:k], w=u[k:], zp=v[:k], wp=v[k:])


def from_lightcone(lc: LightconeCoords) -> list[SpacetimePoint]:
    """Inverse of :func:`to_lightcone`."""
    u = np.concatenate([lc.z, lc.w])
    v = np.concatenate([lc.zp, lc.wp])
    t = 0.5 * (u + v)
    x = 0.5 * (v - u)
    return [SpacetimePoint(float(ti), float(xi)) for ti, xi in zip(t, x)]
