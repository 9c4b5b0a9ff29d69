"""Central hyperplane arrangements and their lattices of flats.

A hyperplane is stored as a primitive integer normal with its first nonzero
entry positive, which fixes the orientation of the two halfspaces and makes
duplicates detectable.  Flats are keyed by the canonical form of their
normal space, and each flat carries the full set of hyperplanes containing
it; since a flat equals the intersection of exactly that set, containment of
flats is containment of those index sets in reverse.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .intpoly import IntPoly
from .linalg import Subspace, dot, in_rowspace, primitive, primitive_signed, rref_int


@dataclass(frozen=True)
class Hyperplane:
    normal: tuple[int, ...]

    @classmethod
    def from_vector(cls, vec) -> Hyperplane:
        n = primitive_signed(vec)
        if not any(n):
            raise ValueError("hyperplane normal must be nonzero")
        return cls(n)

    @property
    def dim(self) -> int:
        return len(self.normal)


@dataclass(frozen=True)
class Arrangement:
    dim: int
    hyperplanes: tuple[Hyperplane, ...]

    def __post_init__(self):
        seen = set()
        for h in self.hyperplanes:
            if len(h.normal) != self.dim:
                raise ValueError("hyperplane dimension mismatch")
            if h.normal in seen:
                raise ValueError(f"duplicate hyperplane {h.normal}")
            seen.add(h.normal)

    @classmethod
    def from_normals(cls, normals, dim: int | None = None) -> Arrangement:
        normals = list(normals)
        if dim is None:
            if not normals:
                raise ValueError("dimension required for an empty arrangement")
            dim = len(normals[0])
        return cls(dim, tuple(Hyperplane.from_vector(v) for v in normals))

    @property
    def normals(self) -> tuple[tuple[int, ...], ...]:
        return tuple(h.normal for h in self.hyperplanes)

    def rank(self) -> int:
        return len(rref_int(self.normals, self.dim))

    def bottom(self) -> Subspace:
        """The minimum flat: intersection of all hyperplanes."""
        return Subspace.from_normals(self.normals, self.dim)


@dataclass(frozen=True)
class Flat:
    subspace: Subspace
    containing: frozenset[int]

    @property
    def dim(self) -> int:
        return self.subspace.dim


class FlatLattice:
    """All intersections of hyperplane subsets, with Mobius values from ⊥.

    Flats are sorted by (grade, canonical key), where grade is the lattice
    height above the minimum flat; positions in ``flats`` are the handles
    used everywhere else.
    """

    def __init__(self, arrangement: Arrangement):
        self.arrangement = arrangement
        n = arrangement.dim
        normals = arrangement.normals

        by_key: dict = {}
        top_key = ()
        by_key[top_key] = frozenset(
            i for i, v in enumerate(normals) if not any(v))  # always empty
        queue = [top_key]
        while queue:
            key = queue.pop()
            containing = by_key[key]
            for i, v in enumerate(normals):
                if i in containing:
                    continue
                new_key = rref_int(key + (v,), n)
                if new_key not in by_key:
                    by_key[new_key] = frozenset(
                        j for j, w in enumerate(normals)
                        if in_rowspace(w, new_key, n))
                    queue.append(new_key)

        bottom_dim = n - max(len(k) for k in by_key)
        flats = [Flat(Subspace(n, key), cont) for key, cont in by_key.items()]
        flats.sort(key=lambda f: (f.dim - bottom_dim, f.subspace.normals))
        self.flats: tuple[Flat, ...] = tuple(flats)
        self.bottom_dim = bottom_dim
        self.rank = n - bottom_dim
        self._pos = {f.subspace.normals: i for i, f in enumerate(flats)}

        # mu(bottom, X) by the defining recursion over the interval [bottom, X];
        # Y <= X in the lattice iff containing(Y) is a superset of containing(X).
        mobius: list[int] = []
        for i, f in enumerate(self.flats):
            if i == 0:
                mobius.append(1)
                continue
            acc = 0
            for j in range(i):
                if self.flats[j].containing >= f.containing:
                    acc += mobius[j]
            mobius.append(-acc)
        self.mobius_bottom: tuple[int, ...] = tuple(mobius)

    def __len__(self) -> int:
        return len(self.flats)

    def grade(self, i: int) -> int:
        return self.flats[i].dim - self.bottom_dim

    def leq(self, i: int, j: int) -> bool:
        """True iff flat i is contained in flat j."""
        return self.flats[i].containing >= self.flats[j].containing

    def position(self, subspace: Subspace) -> int:
        return self._pos[subspace.normals]

    def find(self, subspace: Subspace) -> int | None:
        return self._pos.get(subspace.normals)

    @property
    def bottom_index(self) -> int:
        return 0

    @property
    def top_index(self) -> int:
        return len(self.flats) - 1

    def flats_by_grade(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.rank + 1)]
        for i in range(len(self.flats)):
            out[self.grade(i)].append(i)
        return out

    def grade_one_directions(self) -> list[tuple[int, ...]]:
        """For each grade-1 flat, an integer vector spanning it modulo ⊥."""
        bottom = self.flats[0].subspace
        dirs = []
        for i in range(len(self.flats)):
            if self.grade(i) != 1:
                continue
            basis = self.flats[i].subspace.basis()
            d = next(r for r in basis if not bottom.contains_vector(r))
            dirs.append(d)
        return dirs


@lru_cache(maxsize=None)
def build_flats(a: Arrangement) -> FlatLattice:
    return FlatLattice(a)


def restriction(a: Arrangement, x: Flat) -> Arrangement:
    """The arrangement induced inside the flat x, in chart coordinates."""
    arr, _ = restriction_with_map(a, x)
    return arr


def restriction_with_map(a: Arrangement, x: Flat):
    """Restriction plus, per original hyperplane index not containing x,
    the pair (restricted index, sign flip) aligning the two orientations."""
    _require_flat(a, x)
    chart = x.subspace.basis()
    k = len(chart)
    seen: dict[tuple[int, ...], int] = {}
    normals: list[tuple[int, ...]] = []
    mapping: dict[int, tuple[int, int]] = {}
    for i, h in enumerate(a.hyperplanes):
        if i in x.containing:
            continue
        direct = primitive(tuple(dot(h.normal, b) for b in chart))
        canon = primitive_signed(direct)
        flip = 1 if direct == canon else -1
        if canon not in seen:
            seen[canon] = len(normals)
            normals.append(canon)
        mapping[i] = (seen[canon], flip)
    return Arrangement.from_normals(normals, k), mapping


def localization(a: Arrangement, x: Flat) -> Arrangement:
    """Subarrangement of the hyperplanes containing x, in the same space."""
    _require_flat(a, x)
    return Arrangement(a.dim, tuple(a.hyperplanes[i] for i in sorted(x.containing)))


def _require_flat(a: Arrangement, x: Flat):
    lattice = build_flats(a)
    if lattice.find(x.subspace) is None:
        raise ValueError("not a flat of the arrangement")


def essentialize(a: Arrangement) -> Arrangement:
    """A combinatorially isomorphic arrangement of full rank.

    Coordinates come from the canonical basis of the span of the normals, so
    the result is deterministic; the chart is not an isometry, so metric
    properties (sharpness) must be read off the original coordinates.
    """
    chart = rref_int(a.normals, a.dim)
    normals = []
    seen = set()
    for h in a.hyperplanes:
        v = primitive_signed(tuple(dot(h.normal, b) for b in chart))
        if v in seen:
            raise AssertionError("essentialization collapsed distinct hyperplanes")
        seen.add(v)
        normals.append(v)
    return Arrangement.from_normals(normals, len(chart)) if normals else Arrangement(0, ())


def product(a: Arrangement, b: Arrangement) -> Arrangement:
    """Block-diagonal juxtaposition of the two arrangements."""
    za = (0,) * a.dim
    zb = (0,) * b.dim
    normals = [h.normal + zb for h in a.hyperplanes]
    normals += [za + h.normal for h in b.hyperplanes]
    return Arrangement(a.dim + b.dim,
                       tuple(Hyperplane.from_vector(v) for v in normals))


def is_very_generic_vector(a: Arrangement, v) -> bool:
    """True iff v avoids every hyperplane and the halfspace {<v,x> <= 0} is
    generic: its boundary contains ⊥ but no other flat."""
    v = tuple(v)
    if len(v) != a.dim:
        raise ValueError("vector dimension mismatch")
    return (very_generic_failure(a, v) is None)


def very_generic_failure(a: Arrangement, v):
    """None if v is very generic, else a human-readable reason."""
    v = tuple(v)
    for h in a.hyperplanes:
        if dot(h.normal, v) == 0:
            return f"v lies on the hyperplane with normal {h.normal}"
    # Orthogonality to ⊥ is membership in the span of the normals.
    span = rref_int(a.normals, a.dim)
    if not in_rowspace(v, span, a.dim):
        return "v is not orthogonal to the minimum flat"
    lattice = build_flats(a)
    for d in lattice.grade_one_directions():
        if dot(d, v) == 0:
            return f"bounding hyperplane contains the rank-1 flat spanned by {d}"
    return None


def characteristic_polynomial(a: Arrangement) -> IntPoly:
    """chi(t) = sum over flats of mu(top, X) t^dim(X), Mobius taken in the
    order by reverse inclusion (minimum = ambient space)."""
    lattice = build_flats(a)
    flats = lattice.flats
    order = sorted(range(len(flats)), key=lambda i: -lattice.grade(i))
    mu: dict[int, int] = {}
    for i in order:
        acc = 0
        for j in order:
            if j == i:
                break
            if flats[j].containing < flats[i].containing:  # X_i strictly inside X_j
                acc += mu[j]
        mu[i] = 1 if i == lattice.top_index else -acc
    coeffs = [0] * (a.dim + 1)
    for i in range(len(flats)):
        coeffs[flats[i].dim] += mu[i]
    return IntPoly(tuple(coeffs))


def count_regions_zaslavsky(a: Arrangement) -> int:
    """Number of regions: (-1)^dim chi(-1)."""
    chi = characteristic_polynomial(a)
    return (-1) ** a.dim * chi(-1)
