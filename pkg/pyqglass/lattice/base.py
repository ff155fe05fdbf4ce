"""
Lattice geometries, nearest-neighbour pair neighbourhoods and small periodic lattices.
"""
from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

import numpy as np

from pyqglass.common import ContractViolationError, LatticeSizeError
from pyqglass.sampling import gaussian

logger = logging.getLogger(__name__)

ORACLE_MAX_SITES = 20


@dataclass(frozen=True)
class Geometry:
    kind: str
    z: int

    @property
    def d(self) -> int:
        """Number of exterior neighbours of a nearest-neighbour pair."""
        return 2 * (self.z - 1)

    @property
    def ndim(self) -> int:
        return {"chain_1d": 1, "honeycomb_2d": 2, "square_2d": 2, "cube_3d": 3}[self.kind]

    @classmethod
    def from_name(cls, name: str) -> "Geometry":
        key = _ALIASES.get(name.strip().lower())
        if key is None:
            raise ValueError(f"Unknown geometry: {name!r}; expected one of {sorted(_ALIASES)}")
        return GEOMETRIES[key]


GEOMETRIES: Dict[str, Geometry] = {
    "chain_1d": Geometry("chain_1d", 2),
    "honeycomb_2d": Geometry("honeycomb_2d", 3),
    "square_2d": Geometry("square_2d", 4),
    "cube_3d": Geometry("cube_3d", 6),
}
_ALIASES = {
    **{k: k for k in GEOMETRIES},
    "chain": "chain_1d",
    "honeycomb": "honeycomb_2d",
    "square": "square_2d",
    "cube": "cube_3d",
}


@dataclass(frozen=True)
class CouplingDistribution:
    """Gaussian coupling law N(mean, variance), in units of inverse time."""

    mean: float = 0.0
    variance: float = 1.0

    def __post_init__(self):
        if self.variance < 0:
            raise ContractViolationError("coupling variance must be non-negative", variance=self.variance)

    def sample(self, rng: np.random.Generator, size) -> np.ndarray:
        return gaussian(rng, self.mean, self.variance, size)


@dataclass(frozen=True)
class PairNeighborhood:
    """A bonded pair (1, 2), its coupling and the couplings to each site's exterior neighbours."""

    j12: float
    nbrs1: Tuple[float, ...]
    nbrs2: Tuple[float, ...]

    def __post_init__(self):
        if len(self.nbrs1) != len(self.nbrs2):
            raise ContractViolationError(
                "both pair sites need the same number of exterior neighbours",
                nbrs1=len(self.nbrs1),
                nbrs2=len(self.nbrs2),
            )

    def as_array(self) -> np.ndarray:
        """Couplings in the order ``[j12, *nbrs1, *nbrs2]``."""
        return np.array([self.j12, *self.nbrs1, *self.nbrs2], dtype=float)

    @classmethod
    def from_array(cls, couplings: Sequence[float]) -> "PairNeighborhood":
        values = [float(x) for x in couplings]
        k = (len(values) - 1) // 2
        return cls(values[0], tuple(values[1:1 + k]), tuple(values[1 + k:]))


def sample_pair_couplings(g: Geometry, dist: CouplingDistribution, rng: np.random.Generator, count: int) -> np.ndarray:
    """``(count, 2z-1)`` i.i.d. couplings laid out like :meth:`PairNeighborhood.as_array`."""
    return dist.sample(rng, (count, 2 * g.z - 1))


def sample_pair_neighborhood(g: Geometry, dist: CouplingDistribution, rng: np.random.Generator) -> PairNeighborhood:
    return PairNeighborhood.from_array(sample_pair_couplings(g, dist, rng, 1)[0])


@dataclass
class FiniteLattice:
    """Periodic lattice with one coupling per undirected edge ``(i, j, J)``, ``i < j``."""

    kind: str
    extent: Tuple[int, ...]
    n_sites: int
    edges: List[Tuple[int, int, float]] = field(default_factory=list)

    def __post_init__(self):
        seen = set()
        for i, j, _ in self.edges:
            key = (min(i, j), max(i, j))
            if i == j or key in seen:
                raise ContractViolationError("duplicate or self edge", edge=key)
            if max(i, j) >= self.n_sites:
                raise ContractViolationError("edge site index out of range", edge=key, n_sites=self.n_sites)
            seen.add(key)

    def neighbors(self, site: int) -> List[Tuple[int, float]]:
        out = []
        for i, j, coupling in self.edges:
            if i == site:
                out.append((j, coupling))
            elif j == site:
                out.append((i, coupling))
        return out

    def coupling(self, a: int, b: int) -> float:
        for i, j, coupling in self.edges:
            if {i, j} == {a, b}:
                return coupling
        raise ContractViolationError("sites are not bonded", pair=(a, b))

    def pair_neighborhood(self, a: int = 0, b: int = 1) -> PairNeighborhood:
        j12 = self.coupling(a, b)
        nbrs1 = tuple(c for s, c in self.neighbors(a) if s != b)
        nbrs2 = tuple(c for s, c in self.neighbors(b) if s != a)
        return PairNeighborhood(j12, nbrs1, nbrs2)

    def sites_at_distance(self, site: int, distance: int) -> List[int]:
        dist = {site: 0}
        queue = deque([site])
        while queue:
            current = queue.popleft()
            for nbr, _ in self.neighbors(current):
                if nbr not in dist:
                    dist[nbr] = dist[current] + 1
                    queue.append(nbr)
        return sorted(s for s, k in dist.items() if k == distance)


_MIN_EXTENT = {
    "chain_1d": (4,),
    "square_2d": (4, 3),
    "honeycomb_2d": (2, 2),
    "cube_3d": (4, 4, 4),
}


def _bonds(kind: str, extent: Tuple[int, ...]) -> Tuple[int, List[Tuple[int, int]]]:
    if kind == "chain_1d":
        (lx,) = extent
        return lx, [(x, (x + 1) % lx) for x in range(lx)]
    if kind == "square_2d":
        lx, ly = extent
        site = lambda x, y: (x % lx) + lx * (y % ly)
        bonds = []
        for y in range(ly):
            for x in range(lx):
                bonds.append((site(x, y), site(x + 1, y)))
                bonds.append((site(x, y), site(x, y + 1)))
        return lx * ly, bonds
    if kind == "honeycomb_2d":
        lx, ly = extent
        a_site = lambda i, j: 2 * ((i % lx) + lx * (j % ly))
        bonds = []
        for j in range(ly):
            for i in range(lx):
                a = a_site(i, j)
                bonds.append((a, a + 1))
                bonds.append((a, a_site(i - 1, j) + 1))
                bonds.append((a, a_site(i, j - 1) + 1))
        return 2 * lx * ly, bonds
    if kind == "cube_3d":
        lx, ly, lz = extent
        site = lambda x, y, z: (x % lx) + lx * ((y % ly) + ly * (z % lz))
        bonds = []
        for z in range(lz):
            for y in range(ly):
                for x in range(lx):
                    s = site(x, y, z)
                    bonds.extend([(s, site(x + 1, y, z)), (s, site(x, y + 1, z)), (s, site(x, y, z + 1))])
        return lx * ly * lz, bonds
    raise ValueError(f"Unknown geometry kind: {kind!r}")


def build_finite_lattice(
    g: Geometry,
    extent: Sequence[int],
    dist: CouplingDistribution,
    rng: np.random.Generator,
) -> FiniteLattice:
    """Periodic lattice with i.i.d. couplings drawn in edge order; (0, 1) is a bonded pair."""
    extent = tuple(int(e) for e in extent)
    minimum = _MIN_EXTENT[g.kind]
    if len(extent) != len(minimum):
        raise LatticeSizeError(f"{g.kind} needs {len(minimum)} extents, got {len(extent)}", extent=extent)
    if any(e < m for e, m in zip(extent, minimum)):
        raise LatticeSizeError(
            f"{g.kind} extent {extent} below minimum {minimum} for a triangle-free pair neighbourhood",
            extent=extent,
        )
    n_sites, bonds = _bonds(g.kind, extent)
    if n_sites > ORACLE_MAX_SITES:
        raise LatticeSizeError(
            f"{g.kind} extent {extent} has {n_sites} sites, oracle cap is {ORACLE_MAX_SITES}",
            n_sites=n_sites,
        )
    couplings = dist.sample(rng, len(bonds))
    edges = [(min(i, j), max(i, j), float(c)) for (i, j), c in zip(bonds, couplings)]
    lattice = FiniteLattice(g.kind, extent, n_sites, edges)
    degrees = {len(lattice.neighbors(s)) for s in range(n_sites)}
    if degrees != {g.z}:
        raise LatticeSizeError(f"{g.kind} cell does not have full coordination {g.z}", degrees=sorted(degrees))
    logger.debug("built %s lattice %s: %d sites, %d edges", g.kind, extent, n_sites, len(edges))
    return lattice
