import json

from oddpart.harness.campaigns import (
    parse_pair,
    parse_space,
    scan_cor13,
    scan_prop21,
    scan_prop41,
    scan_thm12,
    space_group,
)
from oddpart.harness.subgroups import brute_force_subgroups
from oddpart.linrep import field, is_completely_reducible, matrix_from_vector_permutation, MatrixGroup
from oddpart.perm import Permutation


def test_parsers():
    assert parse_space("2:3") == (2, 3)
    assert parse_pair("2:2x1:3") == ((2, 2), (1, 3))


def test_prop41_small():
    rep = scan_prop41(5)
    rows = {r["degree"]: r for r in rep.rows}
    assert rows[2]["subgroups"] == 2 and rows[2]["a_distribution"] == {"1": 2}
    assert rows[4]["subgroups"] == 30 and rows[4]["max_a"] == 3 and rows[4]["bound"] == 8
    assert rows[5]["subgroups"] == 156
    assert rep.violations == [] and rep.exit_code() == 0


def test_prop41_conjugacy_reduction_keeps_counts():
    full = scan_prop41(6)
    reduced = scan_prop41(6, reduce_conjugacy=True)
    for a, b in zip(full.rows, reduced.rows):
        assert a["subgroups"] == b["subgroups"]
        assert a["a_distribution"] == b["a_distribution"]
    assert reduced.violations == full.violations == []


def test_prop41_sampling_is_seeded():
    a = scan_prop41(3, sample_degree8=5, seed=7).to_json()
    b = scan_prop41(3, sample_degree8=5, seed=7).to_json()
    assert a == b
    row = json.loads(a)["rows"][-1]
    assert row["degree"] == 8 and row["mode"] == "sampled"
    assert row["subgroups"] + row["skipped_over_cap"] == 5


def _brute_cr_count(d, p):
    group = space_group(d, p)
    fld = field(p)
    total = cr = 0
    for elems in brute_force_subgroups(group):
        total += 1
        gens = [matrix_from_vector_permutation(Permutation(x), fld, d) for x in elems]
        if is_completely_reducible(MatrixGroup(d, fld, tuple(gens))):
            cr += 1
    return total, cr


def test_thm12():
    rep = scan_thm12([(2, 2), (2, 3), (3, 2)])
    rows = {r["space"]: r for r in rep.rows}
    assert rows["2:2"]["max_a"] == 3
    assert (rows["2:3"]["subgroups"], rows["2:3"]["completely_reducible"]) == _brute_cr_count(2, 3)
    assert (rows["2:2"]["subgroups"], rows["2:2"]["completely_reducible"]) == _brute_cr_count(2, 2)
    assert "max_three_halves_ratio" in rows["2:3"] and "max_three_halves_ratio" not in rows["3:2"]
    assert rep.violations == []


def test_thm12_semilinear_space():
    rep = scan_thm12(["2:4"])
    row = rep.rows[0]
    assert row["V"] == 16 and space_group(2, 4).order() == (16 - 1) * (16 - 4) * 2
    assert rep.violations == []


def test_prop21():
    rep = scan_prop21([(2, 2), (2, 3)])
    rows = {r["space"]: r for r in rep.rows}
    assert rows["2:2"]["max_H_two"] == 3
    assert rows["2:3"]["alpha_near_boundary"] == 1
    assert rows["2:3"]["alpha_largest_G"]["order"] == 48
    assert rep.violations == []


def test_cor13():
    rep = scan_cor13([((2, 2), (1, 3))])
    row = rep.rows[0]
    assert row["V"] == 12 and row["max_a"] == 3
    assert row["checks"] == row["left_groups"] * row["right_groups"]
    assert rep.violations == []


def test_threads_do_not_change_reports(monkeypatch):
    serial = scan_thm12([(2, 2), (2, 3)]).to_json()
    monkeypatch.setenv("ODDPART_THREADS", "2")
    assert scan_thm12([(2, 2), (2, 3)]).to_json() == serial


def test_report_shape():
    d = scan_prop41(3).to_dict()
    assert d["schema_version"] == 1 and d["campaign"] == "prop41"
    assert d["summary"] == {"checks": 2 + 6, "violations": 0}
