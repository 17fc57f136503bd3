import itertools

import pytest

from oddpart.linrep import (
    MatrixGroup,
    classical_constructions,
    field,
    field_of_order,
    general_linear,
    invariant_subspaces,
    is_completely_reducible,
    is_irreducible_module,
    matrix_group_from_vector_action,
    special_linear,
    to_permutation,
    vec_from_rank,
    vec_rank,
)
from oddpart.numth import odd_part
from oddpart.perm import PermGroup


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49, 81])
def test_field_axioms(q):
    fld = field_of_order(q)
    elems = range(q)
    for x in elems:
        assert fld.add(x, 0) == x and fld.mul(x, 1) == x
        if x:
            assert fld.mul(x, fld.inv(x)) == 1
    sample = list(itertools.product(elems, repeat=3))[:: max(1, q ** 3 // 400)]
    for x, y, z in sample:
        assert fld.mul(fld.mul(x, y), z) == fld.mul(x, fld.mul(y, z))
        assert fld.mul(x, fld.add(y, z)) == fld.add(fld.mul(x, y), fld.mul(x, z))
    g = fld.primitive_element()
    assert fld.element_order(g) == q - 1


def test_vector_ranking_is_little_endian():
    assert vec_rank((1, 0), 3) == 1
    assert vec_rank((0, 1), 3) == 3
    assert vec_from_rank(5, 3, 2) == (2, 1)


def test_actions_preserve_order():
    assert to_permutation(general_linear(2, 2), "nonzero-vectors").order() == 6
    assert to_permutation(general_linear(2, 3), "nonzero-vectors").order() == 48
    sl24 = to_permutation(special_linear(2, 4), "projective-points")
    assert (sl24.degree, sl24.order()) == (5, 60)
    for m in [general_linear(2, 3), special_linear(2, 5), general_linear(2, 4), general_linear(3, 2)]:
        assert len(m.closure()) == to_permutation(m, "nonzero-vectors").order()


def test_matrix_round_trip():
    fld = field(3)
    gl = to_permutation(general_linear(2, 3), "nonzero-vectors")
    again = matrix_group_from_vector_action(gl, fld, 2)
    assert len(again.closure()) == 48


def _lines(subspaces):
    return sorted(s.basis for s in subspaces if s.dim == 1)


def test_invariant_subspaces():
    fld = field(3)
    scalars = MatrixGroup(2, fld, (((2, 0), (0, 2)),))
    assert len(invariant_subspaces(scalars)) == 6
    # row vectors act on the right, so [[1,1],[0,1]] fixes the line through e2
    uni = MatrixGroup(2, fld, (((1, 1), (0, 1)),))
    subs = invariant_subspaces(uni)
    assert len(subs) == 3 and _lines(subs) == [((0, 1),)]
    lower = MatrixGroup(2, fld, (((1, 0), (1, 1)),))
    assert _lines(invariant_subspaces(lower)) == [((1, 0),)]
    assert len(invariant_subspaces(general_linear(2, 3))) == 2
    assert is_irreducible_module(general_linear(2, 3))


def test_stability_recheck():
    fld = field(2)
    m = MatrixGroup(3, fld, (((1, 1, 0), (0, 1, 0), (0, 0, 1)), ((1, 0, 0), (0, 1, 0), (0, 1, 1))))
    for sub in invariant_subspaces(m):
        for g in m.generators:
            for v in sub.vectors:
                w = vec_from_rank(v, 2, 3)
                img = tuple(sum(w[i] * g[i][j] for i in range(3)) % 2 for j in range(3))
                assert vec_rank(img, 2) in sub.vectors


def test_complete_reducibility():
    fld = field(3)
    assert not is_completely_reducible(MatrixGroup(2, fld, (((1, 1), (0, 1)),)))
    assert is_completely_reducible(MatrixGroup(2, fld, (((2, 0), (0, 1)),)))
    assert is_completely_reducible(general_linear(2, 3))
    # p'-groups are completely reducible: the odd-order subgroups of GL(2,2)
    # and the 2-subgroups of GL(2,3)
    assert is_completely_reducible(MatrixGroup(2, field(2), (((0, 1), (1, 1)),)))
    assert is_completely_reducible(MatrixGroup(2, fld, (((0, 1), (2, 0)), ((1, 0), (0, 2)))))
    # unipotent in characteristic 2
    assert not is_completely_reducible(MatrixGroup(2, field(2), (((1, 1), (0, 1)),)))


@pytest.mark.parametrize("name,params,degree,order", [
    ("AGL", (1, 5), 5, 20),
    ("PSL", (2, 7), 8, 168),
    ("PΓL", (2, 9), 10, 1440),
    ("PGL", (2, 9), 10, 720),
    ("AΓL", (1, 8), 8, 168),
    ("PSL", (3, 3), 13, 5616),
])
def test_classical_constructions(name, params, degree, order):
    g = classical_constructions(name, params)
    assert isinstance(g, PermGroup)
    assert (g.degree, g.order()) == (degree, order)
    assert g.is_primitive()


def test_classical_matrix_groups():
    gl = classical_constructions("GL", (2, 3))
    assert isinstance(gl, MatrixGroup) and len(gl.closure()) == 48
    sl = classical_constructions("SL", (2, 4), "projective")
    assert sl.order() == 60 and odd_part(sl.order()) == 15
    with pytest.raises(ValueError):
        classical_constructions("Sp", (4, 2))
    with pytest.raises(ValueError):
        field_of_order(6)
