"""Faces and regions of an arrangement as sign vectors, with the Tits
product, separation sets, rays, simpliciality and sharpness tests.

A sign vector assigns -1, 0 or +1 to every hyperplane in arrangement order.
Regions have no zeros; every stored face was certified nonempty, either by
the feasibility oracle directly (regions, via interior witness points) or by
lifting a certified region of a restriction.  The deterministic order used
everywhere sorts sign vectors by entry with 0 < + < -.
"""

from __future__ import annotations

from functools import lru_cache

from .arrangement import Arrangement, build_flats, restriction_with_map
from .feasibility import strict_feasible, strict_feasible_point
from .linalg import Subspace, dot, nullspace, primitive, solve_inverse

SignVector = tuple  # entries in {-1, 0, +1}, one per hyperplane

_SORT = {0: 0, 1: 1, -1: 2}


def sign_key(signs: SignVector) -> tuple[int, ...]:
    return tuple(_SORT[s] for s in signs)


def _sign(x) -> int:
    return (x > 0) - (x < 0)


@lru_cache(maxsize=None)
def enumerate_regions(a: Arrangement) -> tuple[SignVector, ...]:
    """All full-dimensional sign vectors, sorted.

    Hyperplanes are inserted one at a time; every region either keeps a
    forced sign or splits in two.  An interior witness point per region
    settles one side for free, so the oracle only decides the other side.
    """
    normals = a.normals
    zero = tuple(0 for _ in range(a.dim))
    current: list[tuple[SignVector, tuple]] = [((), zero)]
    for h, n in enumerate(normals):
        nxt = []
        for signs, w in current:
            s = _sign(dot(n, w))
            sides = (1, -1) if s == 0 else (-s,)
            if s != 0:
                nxt.append((signs + (s,), w))
            for side in sides:
                cons = [tuple(c * v for v in normals[i])
                        for i, c in enumerate(signs) if c]
                cons.append(tuple(side * v for v in n))
                point = strict_feasible_point(cons, (), a.dim)
                if point is not None:
                    nxt.append((signs + (side,), point))
        current = nxt
    return tuple(sorted((signs for signs, _ in current), key=sign_key))


class FanIndex:
    """Complete list of faces of an arrangement, indexed by sign vector."""

    def __init__(self, arrangement: Arrangement):
        self.arrangement = arrangement
        lattice = build_flats(arrangement)
        m = len(arrangement.hyperplanes)
        faces: dict[SignVector, int] = {}
        for flat in lattice.flats:
            sub, mapping = restriction_with_map(arrangement, flat)
            for region in enumerate_regions(sub):
                signs = [0] * m
                for i, (ri, flip) in mapping.items():
                    signs[i] = flip * region[ri]
                faces[tuple(signs)] = flat.dim
        ordered = sorted(faces, key=sign_key)
        self.faces: tuple[SignVector, ...] = tuple(ordered)
        self.dims: tuple[int, ...] = tuple(faces[f] for f in ordered)
        self.index: dict[SignVector, int] = {f: i for i, f in enumerate(ordered)}
        self.bottom_dim = lattice.bottom_dim
        self.rank = lattice.rank

    def __len__(self) -> int:
        return len(self.faces)

    def grade(self, f: SignVector) -> int:
        return self.dims[self.index[f]] - self.bottom_dim

    def f_vector(self) -> tuple[int, ...]:
        """Face counts by lattice grade, grade 0 (the central face) first."""
        out = [0] * (self.rank + 1)
        for i in range(len(self.faces)):
            out[self.dims[i] - self.bottom_dim] += 1
        return tuple(out)

    def regions(self) -> tuple[SignVector, ...]:
        return tuple(f for f in self.faces if 0 not in f)

    @property
    def center(self) -> SignVector:
        return (0,) * len(self.arrangement.hyperplanes)


@lru_cache(maxsize=None)
def enumerate_faces(a: Arrangement) -> FanIndex:
    return FanIndex(a)


def tits_product(fan: FanIndex, f: SignVector, g: SignVector) -> SignVector:
    """Entrywise "first nonzero wins" product; always a face of the fan."""
    prod = tuple(x if x else y for x, y in zip(f, g))
    if prod not in fan.index:
        raise AssertionError(
            "Tits product missing from the fan: face enumeration bug")
    return prod


def opposite(f: SignVector) -> SignVector:
    return tuple(-x for x in f)


def separation_set(c: SignVector, d: SignVector) -> frozenset[int]:
    """Hyperplanes carrying strictly opposite signs on the two faces."""
    return frozenset(i for i, (x, y) in enumerate(zip(c, d)) if x and y and x != y)


def face_leq(f: SignVector, g: SignVector) -> bool:
    """Face order: f lies in the closure of g."""
    return all(x == 0 or x == y for x, y in zip(f, g))


def face_flat(a: Arrangement, f: SignVector) -> Subspace:
    """The flat spanned by a face: intersection of its zero-set hyperplanes."""
    normals = [a.hyperplanes[i].normal for i, s in enumerate(f) if s == 0]
    return Subspace.from_normals(normals, a.dim)


def _ray_direction(a: Arrangement, f: SignVector) -> tuple[int, ...]:
    """Primitive direction of a grade-1 face inside the span of the normals."""
    span_normals = nullspace(a.normals, a.dim)  # basis of ⊥, as normals of the span
    zeros = [a.hyperplanes[i].normal for i, s in enumerate(f) if s == 0]
    line = nullspace(tuple(zeros) + span_normals, a.dim)
    if len(line) != 1:
        raise AssertionError("grade-1 face does not span a line modulo ⊥")
    d = primitive(line[0])
    for i, s in enumerate(f):
        if s:
            return d if _sign(dot(a.hyperplanes[i].normal, d)) == s else tuple(-x for x in d)
    raise AssertionError("grade-1 face with all-zero signs")


def rays_of_region(fan: FanIndex, c: SignVector) -> tuple[tuple[int, ...], ...]:
    """Primitive integer spanning vectors of the rays of a region."""
    a = fan.arrangement
    if a.rank() != a.dim:
        raise ValueError("rays are only defined for essential arrangements")
    rays = []
    for f in fan.faces:
        if fan.grade(f) == 1 and face_leq(f, c):
            rays.append(_ray_direction(a, f))
    return tuple(rays)


def _region_ray_dirs(a: Arrangement, fan: FanIndex, c: SignVector):
    return [
        _ray_direction(a, f)
        for f in fan.faces
        if fan.grade(f) == 1 and face_leq(f, c)
    ]


def is_simplicial(a: Arrangement) -> bool:
    """True iff every region has exactly rank(a) rays."""
    fan = enumerate_faces(a)
    r = fan.rank
    if r == 0:
        return True
    counts: dict[SignVector, int] = {c: 0 for c in fan.regions()}
    for f in fan.faces:
        if fan.grade(f) != 1:
            continue
        for c in counts:
            if face_leq(f, c):
                counts[c] += 1
    return all(v == r for v in counts.values())


def is_sharp(a: Arrangement) -> bool:
    """Simplicial, with every region's facet angles at most pi/2.

    With rays r_1..r_d of a region and the dual vectors n_i inside their span
    (<n_i, r_j> = delta_ij), the angle condition is <n_i, n_j> <= 0 off the
    diagonal; the Gram matrix of the duals is the inverse of the Gram matrix
    of the rays.  Directions are taken inside the span of the normals, so the
    test is metrically faithful without essentializing.
    """
    fan = enumerate_faces(a)
    d = fan.rank
    if d <= 1:
        return True
    if not is_simplicial(a):
        return False
    for c in fan.regions():
        rays = _region_ray_dirs(a, fan, c)
        gram = [[dot(u, v) for v in rays] for u in rays]
        inv = solve_inverse(gram)
        for i in range(d):
            for j in range(i + 1, d):
                if inv[i][j] > 0:
                    return False
    return True


def region_in_halfspace(a: Arrangement, c: SignVector, v) -> bool:
    """True iff the closed region lies in {x : <v, x> <= 0}.

    Decided by the oracle: the closure escapes the halfspace iff the open
    region meets {<v, x> > 0}.
    """
    cons = [tuple(s * x for x in a.hyperplanes[i].normal)
            for i, s in enumerate(c) if s]
    cons.append(tuple(v))
    return not strict_feasible(cons, (), a.dim)


def faces_in_halfspace(fan: FanIndex, v) -> tuple[SignVector, ...]:
    """All faces whose closed cone lies in {x : <v, x> <= 0}.

    Requires a very generic v; the central face is always included since the
    bounding hyperplane contains the minimum flat.
    """
    from .arrangement import is_very_generic_vector

    a = fan.arrangement
    if not is_very_generic_vector(a, v):
        raise ValueError("vector is not very generic")
    out = []
    for f in fan.faces:
        strut = [tuple(s * x for x in a.hyperplanes[i].normal)
                 for i, s in enumerate(f) if s]
        eqs = [a.hyperplanes[i].normal for i, s in enumerate(f) if s == 0]
        strut.append(tuple(v))
        if not strict_feasible(strut, eqs, a.dim):
            out.append(f)
    return tuple(out)
