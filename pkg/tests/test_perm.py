import pytest

from oddpart.catalog import mathieu
from oddpart.perm import (
    CapExceeded,
    PermGroup,
    Permutation,
    brute_force_closure,
    direct_product,
    format_generator_file,
    group_from_generators,
    parse_generator_file,
    parse_permutation,
)


def cyc(degree, *cycles):
    return Permutation.from_cycles(degree, cycles)


def test_permutation_basics():
    a = cyc(4, (0, 1))
    b = cyc(4, (1, 2))
    # left-to-right composition: apply a, then b
    assert (a * b)(0) == 2
    assert (a * b).order() == 3
    assert (a * a.inverse()).is_identity()
    assert cyc(5, (0, 1), (2, 3, 4)).order() == 6
    with pytest.raises(ValueError):
        Permutation([0, 0, 1])
    with pytest.raises(ValueError):
        cyc(3, (0, 1, 0))


def test_orders():
    s4 = group_from_generators(4, [cyc(4, (0, 1)), cyc(4, (0, 1, 2, 3))])
    assert s4.order() == 24
    assert group_from_generators(5, []).order() == 1
    assert PermGroup(5, [cyc(5, (0, 1, 2)), cyc(5, (0, 1, 2, 3, 4))]).order() == 60
    assert mathieu(11).order() == 7920
    assert mathieu(12).order() == 95040
    assert mathieu(23).order() == 10200960
    assert mathieu(24).order() == 244823040


def test_order_agrees_with_closure():
    gens = [cyc(7, (0, 1, 2, 3, 4, 5, 6)), cyc(7, (1, 2, 4), (3, 6, 5))]
    g = PermGroup(7, gens)
    assert g.order() == len(brute_force_closure(7, gens)) == 21
    assert set(x.images for x in g.elements()) == brute_force_closure(7, gens)


def test_membership():
    s4 = PermGroup.symmetric(4)
    assert s4.contains(cyc(4, (0, 2)))
    assert not PermGroup.alternating(4).contains(cyc(4, (0, 1)))
    c5 = PermGroup(5, [cyc(5, (0, 1, 2, 3, 4))])
    assert c5.contains(cyc(5, (0, 2, 4, 1, 3)))
    assert not c5.contains(cyc(5, (0, 1)))


def test_orbits():
    assert PermGroup(4, [cyc(4, (0, 1))]).orbits() == [[0, 1], [2], [3]]
    assert PermGroup.symmetric(4).orbits() == [[0, 1, 2, 3]]
    assert PermGroup(5, [cyc(5, (0, 1), (2, 3, 4))]).orbits() == [[0, 1], [2, 3, 4]]


def _normalize(blocks):
    return sorted(sorted(b) for b in blocks)


def test_blocks_and_primitivity():
    c4 = PermGroup(4, [cyc(4, (0, 1, 2, 3))])
    assert _normalize(c4.minimal_block_system()) == [[0, 2], [1, 3]]
    assert PermGroup.symmetric(5).minimal_block_system() is None
    assert PermGroup.symmetric(5).is_primitive()
    wreath = PermGroup(4, [cyc(4, (0, 1)), cyc(4, (2, 3)), cyc(4, (0, 2), (1, 3))])
    assert _normalize(wreath.minimal_block_system()) == [[0, 1], [2, 3]]
    assert not wreath.is_primitive()
    assert mathieu(24).is_primitive()


def _all_block_systems_brute(group):
    """Nontrivial block systems containing 0, checked against every generator."""
    n = group.degree
    found = []
    for mask in range(1, 2 ** n):
        block = {i for i in range(n) if mask >> i & 1}
        if 0 not in block or len(block) in (1, n) or n % len(block):
            continue
        images = {frozenset(block)}
        queue = [frozenset(block)]
        ok = True
        for b in queue:
            for g in group.generators:
                c = frozenset(g(x) for x in b)
                if c not in images:
                    if any(c & d for d in images):
                        ok = False
                        break
                    images.add(c)
                    queue.append(c)
            if not ok:
                break
        if ok:
            found.append(block)
    return found


@pytest.mark.parametrize("gens", [
    [(0, 1, 2, 3, 4, 5)],
    [(0, 1, 2, 3, 4, 5, 6, 7), (1, 3)],
    [(0, 1, 2, 3, 4, 5, 6, 7), (1, 5), (3, 7)],
    [(0, 1, 2, 3, 4, 5, 6, 7, 8)],
])
def test_minimal_blocks_against_brute_force(gens):
    degree = max(max(c) for c in gens) + 1
    g = PermGroup(degree, [cyc(degree, c) for c in gens])
    brute = _all_block_systems_brute(g)
    mbs = g.minimal_block_system()
    if not brute:
        assert mbs is None
    else:
        smallest = min(len(b) for b in brute)
        block0 = next(b for b in mbs if 0 in b)
        assert len(block0) == smallest
        assert set(block0) in brute


def test_normal_closure_and_derived():
    s4 = PermGroup.symmetric(4)
    assert s4.normal_closure([cyc(4, (0, 1), (2, 3))]).order() == 4
    assert s4.normal_closure([cyc(4, (0, 1, 2))]).order() == 12
    a5 = PermGroup(5, [cyc(5, (0, 1, 2)), cyc(5, (0, 1, 2, 3, 4))])
    assert a5.normal_closure([cyc(5, (0, 1, 2))]).order() == 60
    assert s4.derived_subgroup().order() == 12
    assert s4.is_solvable()
    assert a5.derived_subgroup().order() == 60
    assert not a5.is_solvable()
    c7 = PermGroup(7, [cyc(7, tuple(range(7)))])
    assert c7.derived_subgroup().order() == 1 and c7.is_solvable()


def test_coset_action():
    s4 = PermGroup.symmetric(4)
    a4 = PermGroup.alternating(4)
    v4 = s4.normal_closure([cyc(4, (0, 1), (2, 3))])
    q = s4.coset_action(a4)
    assert (q.degree, q.order()) == (2, 2)
    q = s4.coset_action(v4)
    assert (q.degree, q.order()) == (6, 6)
    q = a4.coset_action(a4)
    assert (q.degree, q.order()) == (1, 1)


def test_stabilizer_and_cosets():
    m11 = mathieu(11)
    assert m11.stabilizer(0).order() == 720
    assert m11.action_on_cosets(m11.stabilizer(0)).order() == 7920


def test_elements_cap():
    with pytest.raises(CapExceeded):
        mathieu(12).elements()
    assert len(PermGroup.symmetric(5).elements()) == 120


def test_direct_product():
    s3 = PermGroup.symmetric(3)
    g = direct_product(s3, s3)
    assert (g.degree, g.order()) == (6, 36)


def test_generator_file_round_trip():
    text = "degree: 5\n(0 1 2)(3 4)\nimg: 1 0 2 3 4\n"
    g = parse_generator_file(text)
    assert g.order() == 12
    again = parse_generator_file(format_generator_file(g))
    assert again.generators == g.generators
    again = parse_generator_file(format_generator_file(g, "images"))
    assert again.generators == g.generators
    assert parse_permutation("(0 2)", 4) == cyc(4, (0, 2))
    with pytest.raises(ValueError):
        parse_generator_file("(0 1)\n")
    with pytest.raises(ValueError):
        parse_permutation("img: 0 1", 3)
