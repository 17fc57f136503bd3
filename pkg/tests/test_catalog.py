from oddpart.catalog import TABLE4, affine_a7, build, m10, m11_on_12, mathieu, s6_on_partitions, verify_table4
from oddpart.numth import odd_part
from oddpart.report import MATCH


def test_table4_rows():
    rep = verify_table4()
    assert len(rep.rows) == 23
    assert all(r["verdict"] == MATCH for r in rep.rows)
    by_name = {(r["name"], r["degree"]): r for r in rep.rows}
    assert by_name[("M23", 23)]["odd_part"] == 79695
    assert by_name[("M24", 24)]["odd_part"] == 239085
    assert by_name[("PSL(3,3)", 13)]["odd_part"] == 351
    assert by_name[("2^4:A7", 16)]["odd_part"] == 315
    assert by_name[("AGL(3,2)", 8)]["bound"] == 128
    assert all(r["odd_part"] <= r["bound"] for r in rep.rows)
    assert rep.exit_code() == 0


def test_mathieu_groups():
    for n, order, odd in [(11, 7920, 495), (12, 95040, 1485), (23, 10200960, 79695),
                          (24, 244823040, 239085)]:
        g = mathieu(n)
        assert g.order() == order and odd_part(order) == odd
        assert g.is_transitive() and g.is_primitive()


def test_special_builders():
    g = m10()
    assert (g.degree, g.order()) == (10, 720) and g.is_primitive()
    g = m11_on_12()
    assert (g.degree, g.order()) == (12, 7920) and g.is_primitive()
    g = s6_on_partitions()
    assert (g.degree, g.order()) == (10, 720) and g.is_primitive()


def test_affine_a7():
    g = affine_a7()
    assert (g.degree, g.order()) == (16, 40320)
    assert g.is_primitive()


def test_constructions_flag():
    rep = verify_table4(constructions=True)
    assert all(r["verdict"] == MATCH for r in rep.rows)
    assert all(r["source"] == "construction" for r in rep.rows)
    simple = {r["name"]: r["a_value"] for r in rep.rows if r["a_value"] is not None}
    assert simple["PSL(2,7)"] == 1 and simple["M11"] == 1
    assert simple["AGL(1,5)"] == 5 and simple["AΓL(1,8)"] == 21


def test_rows_are_consistent():
    for row in TABLE4:
        assert row.listed_bound == 2 ** (row.degree - 1)
        if not row.order_only:
            assert build(row).degree == row.degree
