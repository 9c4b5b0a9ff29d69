import random

import pytest

from primeul.arrangement import (Arrangement, build_flats, essentialize,
                                 product)
from primeul.eulerpoly import (UpperSetError, base_region_of,
                               cochar_via_halfspace, cocharacteristic,
                               eulerian_poly, find_very_generic,
                               h_poly_relation_check, peul_from_cochar,
                               primitive_eulerian_descents,
                               primitive_eulerian_mobius,
                               primitive_eulerian_recursive)
from primeul.faces import enumerate_regions, is_sharp
from primeul.families import (braid, generic_gn, graphic, rank2, type_b,
                              type_d, type_dnk)
from primeul.intpoly import IntPoly, Z, ZM1
from primeul.roots import interlaces, is_real_rooted

FOUR_CYCLE = graphic(4, [(1, 2), (2, 3), (3, 4), (4, 1)])

SIMPLICIAL_BUILTINS = [
    rank2(2), rank2(3), rank2(5), braid(3), braid(4), type_b(2), type_b(3),
    type_d(3), type_dnk(3, 1), type_dnk(3, 2),
]
ALL_BUILTINS = SIMPLICIAL_BUILTINS + [FOUR_CYCLE, generic_gn(3), generic_gn(4)]


def test_mobius_examples():
    assert primitive_eulerian_mobius(Arrangement.from_normals([(1, 0)], 2)) == Z
    for k in range(2, 11):
        assert primitive_eulerian_mobius(rank2(k)) == IntPoly((0, k - 2, 1))
    assert primitive_eulerian_mobius(FOUR_CYCLE) == IntPoly((0, -1, 3, 1))


def test_mobius_monic_and_zero_constant():
    for a in ALL_BUILTINS:
        p = primitive_eulerian_mobius(a)
        assert p.lc == 1
        assert p.degree() == build_flats(a).rank
        if a.hyperplanes:
            assert p.coefficient(0) == 0


def test_cocharacteristic_examples():
    assert cocharacteristic(essentialize(braid(4))) == IntPoly((1, 7, 12, 6))
    assert cocharacteristic(braid(4)) == IntPoly((1, 7, 12, 6))
    assert cocharacteristic(Arrangement.from_normals([(1, 0)], 2)) == IntPoly((1, 1))
    for k in (3, 4, 5):
        assert cocharacteristic(rank2(k)) == IntPoly((1, k, k - 1))


def test_cochar_total_mass():
    for a in ALL_BUILTINS:
        lattice = build_flats(a)
        mass = sum(abs(m) for m in lattice.mobius_bottom)
        assert cocharacteristic(a)(1) == mass


def test_peul_from_cochar():
    assert peul_from_cochar(IntPoly((1, 1)), 1) == Z
    for k in (3, 4, 5):
        assert peul_from_cochar(IntPoly((1, k, k - 1)), 2) == IntPoly((0, k - 2, 1))
    assert peul_from_cochar(IntPoly((1, 7, 12, 6)), 3) == IntPoly((0, 1, 4, 1))
    with pytest.raises(ValueError):
        peul_from_cochar(IntPoly((1, 1, 1)), 1)


def test_recursive_examples():
    for k in range(2, 8):
        assert primitive_eulerian_recursive(rank2(k)) == IntPoly((0, k - 2, 1))
    assert primitive_eulerian_recursive(braid(4)) == IntPoly((0, 1, 4, 1))
    for n in range(2, 9):
        want = Z * ZM1 ** n + (n + 1) * Z ** n - Z ** (n + 1)
        assert primitive_eulerian_recursive(generic_gn(n)) == want


def test_four_path_agreement():
    for a in SIMPLICIAL_BUILTINS:
        p = primitive_eulerian_mobius(a)
        assert primitive_eulerian_recursive(a) == p
        rank = build_flats(a).rank
        assert peul_from_cochar(cocharacteristic(a), rank) == p
        v = find_very_generic(a)
        assert peul_from_cochar(cochar_via_halfspace(a, v), rank) == p
        assert primitive_eulerian_descents(a, v) == p


def test_three_paths_on_nonsimplicial():
    for a in (FOUR_CYCLE, generic_gn(3), generic_gn(4)):
        p = primitive_eulerian_mobius(a)
        rank = build_flats(a).rank
        assert primitive_eulerian_recursive(a) == p
        assert peul_from_cochar(cocharacteristic(a), rank) == p
        v = find_very_generic(a)
        assert peul_from_cochar(cochar_via_halfspace(a, v), rank) == p


def test_descent_path_rejects_nonsimplicial():
    with pytest.raises(ValueError):
        primitive_eulerian_descents(FOUR_CYCLE)


def test_descent_path_v_independence():
    rng = random.Random(0)
    for a in (type_b(3), braid(4), type_d(3)):
        p = primitive_eulerian_mobius(a)
        found = 0
        for seed in range(40):
            v = find_very_generic(a, seed=rng.randint(0, 10 ** 6))
            assert primitive_eulerian_descents(a, v) == p
            found += 1
            if found >= 5:
                break


def test_halfspace_v_independence():
    for a in (type_b(2), braid(4), FOUR_CYCLE):
        psi = cocharacteristic(a)
        for seed in range(5):
            v = find_very_generic(a, seed=seed + 100)
            assert cochar_via_halfspace(a, v) == psi


def test_cochar_rejects_non_generic_v():
    with pytest.raises(ValueError):
        cochar_via_halfspace(type_b(2), (1, 1))


def test_nonsharp_negative_witness():
    # Two lines with an obtuse fan: combinatorially the coordinate
    # arrangement but not sharp; for v = (1, 3) the single contained region
    # is not an upper set and its descent sum z differs from P = z^2.
    skew = Arrangement.from_normals([(1, 0), (1, 1)], 2)
    assert not is_sharp(skew)
    v = (1, 3)
    from primeul.arrangement import is_very_generic_vector
    from primeul.faces import region_in_halfspace

    assert is_very_generic_vector(skew, v)
    with pytest.raises(UpperSetError) as exc:
        primitive_eulerian_descents(skew, v)
    inside, outside = exc.value.witness
    assert region_in_halfspace(skew, inside, v)
    assert not region_in_halfspace(skew, outside, v)
    # descent sum over the contained regions misses P
    from primeul.weakorder import WeakOrder

    base = base_region_of(skew, v)
    order = WeakOrder(skew, base)
    contained = [c for c in order.regions if region_in_halfspace(skew, c, v)]
    dist = sorted(order.descents(c) for c in contained)
    assert dist == [1]
    assert primitive_eulerian_mobius(skew) == Z ** 2


def test_product_law():
    pairs = [(rank2(3), Arrangement.from_normals([(1,)], 1)),
             (type_b(2), rank2(4)),
             (braid(3), braid(3))]
    for a, b in pairs:
        lhs = primitive_eulerian_mobius(product(a, b))
        rhs = primitive_eulerian_mobius(a) * primitive_eulerian_mobius(b)
        assert lhs == rhs
    one = Arrangement.from_normals([(1,)], 1)
    assert primitive_eulerian_mobius(product(one, one)) == Z ** 2
    assert primitive_eulerian_mobius(product(rank2(3), one)) == IntPoly((0, 0, 1, 1))


def test_nonnegativity_on_simplicial():
    for a in SIMPLICIAL_BUILTINS:
        assert all(c >= 0 for c in primitive_eulerian_mobius(a).coeffs)
    assert any(c < 0 for c in primitive_eulerian_mobius(FOUR_CYCLE).coeffs)


def test_h_poly_relation():
    assert h_poly_relation_check(type_b(3))
    assert h_poly_relation_check(Arrangement.from_normals([(1, 0)], 2))
    assert h_poly_relation_check(type_dnk(3, 2))
    with pytest.raises(ValueError):
        h_poly_relation_check(FOUR_CYCLE)


def test_eulerian_poly():
    assert eulerian_poly(braid(4)) == IntPoly((1, 11, 11, 1))
    assert eulerian_poly(type_b(2)) == IntPoly((1, 6, 1))
    assert eulerian_poly(Arrangement.from_normals([(1, 0)], 2)) == IntPoly((1, 1))
    with pytest.raises(ValueError):
        eulerian_poly(generic_gn(4))


def test_eulerian_poly_base_independent():
    a = type_b(2)
    regions = enumerate_regions(a)
    polys = {eulerian_poly(a, base) for base in regions}
    assert len(polys) == 1


def test_rank3_real_rooted_and_interlacing():
    for a in ALL_BUILTINS:
        if build_flats(a).rank <= 3:
            assert is_real_rooted(primitive_eulerian_mobius(a))


def random_rank3(rng: random.Random) -> Arrangement:
    from primeul.linalg import primitive_signed, rank

    while True:
        count = rng.randint(3, 6)
        normals = set()
        while len(normals) < count:
            v = tuple(rng.randint(-3, 3) for _ in range(3))
            if any(v):
                normals.add(primitive_signed(v))
        normals = sorted(normals)
        if rank(normals, 3) == 3:
            return Arrangement.from_normals(normals, 3)


def test_random_rank3_real_rooted():
    rng = random.Random(2024)
    for _ in range(25):
        a = random_rank3(rng)
        assert is_real_rooted(primitive_eulerian_mobius(a))


def test_rank3_recursion_interlacing():
    # P = (z-1) P_restriction + sum of localizations; the second summand
    # interlaces the first, certifying real-rootedness in rank 3.
    from primeul.arrangement import localization, restriction
    from primeul.linalg import Subspace

    rng = random.Random(77)
    done = 0
    while done < 10:
        a = random_rank3(rng)
        lattice = build_flats(a)
        pivot = lattice.flats[lattice.position(
            Subspace.from_normals([a.hyperplanes[0].normal], 3))]
        f = ZM1 * primitive_eulerian_mobius(restriction(a, pivot))
        g = IntPoly()
        for i in range(len(lattice.flats)):
            if lattice.grade(i) == 1 and 0 not in lattice.flats[i].containing:
                g = g + primitive_eulerian_mobius(localization(a, lattice.flats[i]))
        if g.is_zero():
            continue
        assert interlaces(g, f)
        assert f + g == primitive_eulerian_mobius(a)
        done += 1
