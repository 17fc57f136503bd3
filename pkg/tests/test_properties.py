"""Randomized invariants over small permutation groups."""
from hypothesis import HealthCheck, assume, given, settings, strategies as st

from oddpart.numth import is_prime, odd_part, zsigmondy_primes
from oddpart.perm import PermGroup, Permutation, brute_force_closure, direct_product
from oddpart.structure import a_of_group, find_proper_normal

EXAMPLES = 200
SETTINGS = settings(max_examples=EXAMPLES, derandomize=True, deadline=None,
                    suppress_health_check=[HealthCheck.too_slow])


@st.composite
def perm_groups(draw, min_degree=2, max_degree=6, max_gens=3):
    n = draw(st.integers(min_degree, max_degree))
    k = draw(st.integers(1, max_gens))
    gens = [Permutation(draw(st.permutations(range(n)))) for _ in range(k)]
    return PermGroup(n, gens)


def _odd_order_building_blocks():
    c = Permutation.from_cycles
    return [
        PermGroup(3, [c(3, [(0, 1, 2)])]),
        PermGroup(5, [c(5, [(0, 1, 2, 3, 4)])]),
        PermGroup(7, [c(7, [(0, 1, 2, 3, 4, 5, 6)]), c(7, [(1, 2, 4), (3, 6, 5)])]),
        PermGroup(9, [c(9, [(0, 1, 2)]), c(9, [(3, 4, 5)]), c(9, [(0, 3, 6), (1, 4, 7), (2, 5, 8)])]),
    ]


BLOCKS = _odd_order_building_blocks()


@SETTINGS
@given(perm_groups(max_degree=5), perm_groups(max_degree=5))
def test_a_is_multiplicative_over_direct_products(g, h):
    assert a_of_group(direct_product(g, h)) == a_of_group(g) * a_of_group(h)


@SETTINGS
@given(perm_groups())
def test_a_splits_over_a_normal_subgroup(g):
    assume(g.order() > 1)
    n = find_proper_normal(g)
    assume(n is not None)
    assert g.is_normal_subgroup(n) and 1 < n.order() < g.order()
    assert a_of_group(g) == a_of_group(n) * a_of_group(g.coset_action(n))


@SETTINGS
@given(perm_groups())
def test_a_is_odd_part_for_solvable_groups(g):
    a = a_of_group(g)
    if g.is_solvable():
        assert a == odd_part(g.order())
    else:
        assert a <= odd_part(g.order()) and odd_part(g.order()) % a == 0


@SETTINGS
@given(perm_groups(max_degree=7, max_gens=2))
def test_bsgs_order_matches_closure(g):
    assume(g.order() <= 5000)
    assert g.order() == len(brute_force_closure(g.degree, g.generators))


@SETTINGS
@given(st.lists(st.sampled_from(range(len(BLOCKS))), min_size=1, max_size=2), st.data())
def test_odd_order_groups_have_a_equal_to_order(choice, data):
    g = BLOCKS[choice[0]]
    for i in choice[1:]:
        g = direct_product(g, BLOCKS[i])
    assume(g.order() <= 2000)
    elems = g.elements()
    picks = data.draw(st.lists(st.sampled_from(elems), min_size=1, max_size=3))
    sub = g.subgroup(picks)
    assert sub.order() % 2 == 1
    assert a_of_group(sub) == sub.order()


@SETTINGS
@given(st.sampled_from([p for p in range(2, 60) if is_prime(p)]), st.integers(2, 40))
def test_zsigmondy_primes_are_one_mod_n(p, n):
    assume(p ** n <= 2 ** 127)
    for w in zsigmondy_primes(p, n):
        assert w.prime % n == 1
        assert (p ** n - 1) % w.prime == 0
