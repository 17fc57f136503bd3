"""Exhaustive desk-scale verification campaigns.

* ``scan_prop41``: a(G) <= 2^(n-1) for every subgroup G of S_n.
* ``scan_thm12``: 24 a(G)^3 <= |V|^6 (and 576 a(G)^6 <= |V|^9 in odd
  characteristic) for every completely reducible G <= GL(V).
* ``scan_prop21``: the order bounds for every subgroup H of a completely
  reducible solvable G <= GL(V) with 2 or 3 not dividing |H|.
* ``scan_cor13``: the |V|^2 bound for direct products acting on V1 + V2 in
  two characteristics.

Reports contain no timings and are sorted, so reruns are byte-identical.
Work is split per degree / per space; ``ODDPART_THREADS`` sets the number
of worker processes (default 1).
"""
from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from ..linrep import (
    field as field_of,
    gl_generators,
    is_completely_reducible,
    matrix_from_vector_permutation,
    MatrixGroup,
    to_permutation,
    _points,
    _perm_from_map,
)
from ..numth import factorize
from ..perm import ELEMENT_CAP, PermGroup, Permutation, direct_product
from ..report import SCHEMA_VERSION, dumps
from ..structure import composition_factors
from .bounds import BoundKind, check_bound
from .subgroups import as_group, indexed_subgroups, subgroup_classes

DEFAULT_SPACES = ((2, 2), (2, 3), (3, 2), (2, 5))
DEFAULT_PAIRS = (((2, 2), (1, 3)), ((2, 3), (2, 2)), ((3, 2), (1, 5)), ((1, 7), (2, 3)))


@dataclass
class CampaignReport:
    campaign: str
    parameters: dict
    rows: list[dict] = field(default_factory=list)
    violations: list[dict] = field(default_factory=list)
    findings: list[dict] = field(default_factory=list)

    @property
    def checks(self) -> int:
        return sum(row.get("checks", 0) for row in self.rows)

    def exit_code(self) -> int:
        return 1 if self.violations else 0

    def to_dict(self):
        return {
            "schema_version": SCHEMA_VERSION,
            "campaign": self.campaign,
            "parameters": self.parameters,
            "summary": {"checks": self.checks, "violations": len(self.violations)},
            "rows": self.rows,
            "violations": self.violations,
            "findings": self.findings,
        }

    def to_json(self) -> str:
        return dumps(self.to_dict())


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get("ODDPART_THREADS", "1")))
    except ValueError:
        return 1


def _pmap(fn, items):
    items = list(items)
    workers = min(worker_count(), len(items))
    if workers <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _ratio(value: Fraction):
    return {"exact": f"{value.numerator}/{value.denominator}", "approx": round(float(value), 9)}


def _records(group, reduce_conjugacy):
    """``(subgroup, multiplicity, members)``: every subgroup, or one per class."""
    if reduce_conjugacy:
        classes, table = subgroup_classes(group)
        return table, [(as_group(table, c.members[0], c.member_gens[0]), len(c.members),
                        c.members[0]) for c in classes]
    table, found = indexed_subgroups(group)
    return table, [(as_group(table, m, g), 1, m) for m, g in found]


# -- permutation groups ------------------------------------------------------

def _prop41_degree(args):
    n, reduce_conjugacy = args
    sym = PermGroup.symmetric(n)
    _, recs = _records(sym, reduce_conjugacy)
    bound = 2 ** (n - 1)
    checked = 0
    best = None
    violations = []
    a_values: dict[int, int] = {}
    for sub, mult, _ in recs:
        a = composition_factors(sub).a_value
        rep = check_bound(BoundKind.PERM_2POW, a, n)
        checked += mult
        a_values[a] = a_values.get(a, 0) + mult
        if not rep.verdict:
            violations.append({"degree": n, "order": sub.order(), "a": a, "bound": bound})
        if best is None or a > best[0]:
            best = (a, sub.order())
    row = {
        "degree": n,
        "mode": "exhaustive",
        "subgroups": checked,
        "classes": len(recs) if reduce_conjugacy else None,
        "checks": checked,
        "bound": bound,
        "max_a": best[0],
        "max_a_group_order": best[1],
        "max_ratio": _ratio(Fraction(best[0], bound)),
        "a_distribution": {str(k): v for k, v in sorted(a_values.items())},
    }
    return row, violations


def _prop41_sampled(args):
    n, samples, seed = args
    rng = random.Random(seed)
    sym_n = list(range(n))
    bound = 2 ** (n - 1)
    checked = skipped = 0
    best = (1, 1)
    violations = []
    for _ in range(samples):
        gens = []
        for _ in range(2):
            imgs = sym_n[:]
            rng.shuffle(imgs)
            gens.append(Permutation(imgs))
        sub = PermGroup(n, gens)
        if sub.order() > ELEMENT_CAP:
            skipped += 1
            continue
        a = composition_factors(sub).a_value
        checked += 1
        if not check_bound(BoundKind.PERM_2POW, a, n).verdict:
            violations.append({"degree": n, "order": sub.order(), "a": a, "bound": bound})
        if a > best[0]:
            best = (a, sub.order())
    row = {"degree": n, "mode": "sampled", "samples": samples, "seed": seed,
           "subgroups": checked, "skipped_over_cap": skipped, "checks": checked,
           "bound": bound, "max_a": best[0], "max_a_group_order": best[1],
           "max_ratio": _ratio(Fraction(best[0], bound))}
    return row, violations


def scan_prop41(max_degree: int = 7, *, reduce_conjugacy: bool = False,
                sample_degree8: int = 0, seed: int = 0) -> CampaignReport:
    """Check a(G) <= 2^(n-1) over all subgroups of S_n, n = 2..max_degree (<= 7).

    ``sample_degree8 > 0`` additionally checks that many random two-generated
    subgroups of S_8 (those above the element cap are counted as skipped).
    """
    if max_degree > 7:
        raise ValueError("exhaustive scans stop at degree 7; use sample_degree8 for 8")
    report = CampaignReport("prop41", {"max_degree": max_degree,
                                       "reduce_conjugacy": reduce_conjugacy,
                                       "sample_degree8": sample_degree8, "seed": seed})
    results = _pmap(_prop41_degree, [(n, reduce_conjugacy) for n in range(2, max_degree + 1)])
    if sample_degree8:
        results.append(_prop41_sampled((8, sample_degree8, seed)))
    for row, violations in results:
        report.rows.append(row)
        report.violations.extend(violations)
    return report


# -- linear groups ----------------------------------------------------------

def parse_space(text) -> tuple[int, int]:
    if isinstance(text, tuple):
        return text
    d, q = text.split(":")
    return int(d), int(q)


def _prime_power(q):
    fq = factorize(q)
    if len(fq) != 1:
        raise ValueError(f"{q} is not a prime power")
    (p, k), = fq.items()
    return p, k


@lru_cache(maxsize=None)
def space_group(d: int, q: int) -> PermGroup:
    """GL(d, p) (or GammaL(d, q) for a proper prime power q) on nonzero vectors.

    For q = p^k the vectors of GF(q)^d are ranked exactly as the vectors of
    GF(p)^(dk), so the same permutations describe the GF(p)-linear action.
    """
    p, k = _prime_power(q)
    fld = field_of(p, k)
    group = to_permutation(MatrixGroup(d, fld, tuple(gl_generators(fld, d))), "nonzero-vectors")
    if k == 1:
        return group
    points = _points(fld, d, "nonzero-vectors")
    index = {v: i for i, v in enumerate(points)}
    frob = _perm_from_map(points, index, lambda v: tuple(fld.frobenius(x) for x in v))
    return PermGroup(group.degree, list(group.generators) + [frob])


def _linear_records(d, q, reduce_conjugacy=False):
    """Every subgroup of the space group with its matrices over GF(p)."""
    p, k = _prime_power(q)
    fld, dim = field_of(p), d * k
    table, recs = _records(space_group(d, q), reduce_conjugacy)
    out = []
    for sub, mult, members in recs:
        mats = MatrixGroup(dim, fld, tuple(matrix_from_vector_permutation(g, fld, dim)
                                           for g in sub.generators))
        out.append((sub, mult, members, mats))
    return table, out


def _is_solvable(group):
    return all(f.abelian for f in composition_factors(group).factors)


def _thm12_space(args):
    (d, q), reduce_conjugacy = args
    p, _ = _prime_power(q)
    size = q ** d
    _, recs = _linear_records(d, q, reduce_conjugacy)
    total = cr = checks = 0
    violations = []
    best_two = best_three = None
    for sub, mult, _, mats in recs:
        total += mult
        if not is_completely_reducible(mats):
            continue
        cr += mult
        a = composition_factors(sub).a_value
        kinds = [BoundKind.TWO] + ([BoundKind.THREE_HALVES] if p != 2 else [])
        for kind in kinds:
            rep = check_bound(kind, a, size)
            checks += mult
            if not rep.verdict:
                violations.append({"space": f"{d}:{q}", "kind": kind.value, "order": sub.order(),
                                   "a": a, "margin": str(rep.margin)})
        two = Fraction(24 * a ** 3, size ** 6)
        if best_two is None or two > best_two[0]:
            best_two = (two, a, sub.order())
        if p != 2:
            three = Fraction(576 * a ** 6, size ** 9)
            if best_three is None or three > best_three[0]:
                best_three = (three, a, sub.order())
    row = {"space": f"{d}:{q}", "V": size, "subgroups": total, "completely_reducible": cr,
           "checks": checks,
           "max_a": best_two[1], "max_a_group_order": best_two[2],
           "max_two_ratio_cubed": _ratio(best_two[0]),
           "max_two_ratio": round(float(best_two[0]) ** (1 / 3), 9)}
    if best_three is not None:
        row["max_three_halves_ratio_sixth"] = _ratio(best_three[0])
        row["max_three_halves_ratio"] = round(float(best_three[0]) ** (1 / 6), 9)
    return row, violations


def scan_thm12(spaces=DEFAULT_SPACES, *, reduce_conjugacy: bool = False) -> CampaignReport:
    """Check the a(G) bounds over all completely reducible subgroups of GL(d, q).

    Reported ratios are a(G) lam / |V|^2 (and a(G) lam / |V|^(3/2) for odd p),
    given exactly as their cube (sixth power) and approximately.
    """
    spaces = [parse_space(s) for s in spaces]
    report = CampaignReport("thm12", {"spaces": [f"{d}:{q}" for d, q in spaces],
                                      "reduce_conjugacy": reduce_conjugacy})
    for row, violations in _pmap(_thm12_space, [(s, reduce_conjugacy) for s in spaces]):
        report.rows.append(row)
        report.violations.extend(violations)
    return report


def _mask(members, size):
    flags = np.zeros(size, dtype=bool)
    flags[members] = True
    return int.from_bytes(np.packbits(flags, bitorder="little").tobytes(), "little")


def _prop21_space(args):
    (d, q), alpha = args
    p, _ = _prime_power(q)
    size = q ** d
    table, recs = _linear_records(d, q)
    masks = [_mask(members, table.size) for _, _, members, _ in recs]
    orders = [sub.order() for sub, _, _, _ in recs]
    groups = pairs = checks = 0
    alpha_checks = alpha_near = 0
    violations = []
    max_h = {"two": 0, "three_halves": 0}
    max_g_alpha = None
    for i, (sub, _, _, mats) in enumerate(recs):
        if not is_completely_reducible(mats) or not _is_solvable(sub):
            continue
        groups += 1
        if alpha:
            rep = check_bound(BoundKind.ALPHA, orders[i], size)
            alpha_checks += 1
            alpha_near += rep.near_boundary
            if not rep.verdict and not rep.near_boundary:
                violations.append({"space": f"{d}:{q}", "kind": "ALPHA", "G_order": orders[i],
                                   "margin": str(rep.margin)})
            if max_g_alpha is None or orders[i] > max_g_alpha[0]:
                max_g_alpha = (orders[i], str(rep.margin))
        g_mask = masks[i]
        for j in range(i + 1):
            if masks[j] & ~g_mask:
                continue
            pairs += 1
            h = orders[j]
            kinds = []
            if h % 2 or h % 3:
                kinds.append(BoundKind.TWO)
                max_h["two"] = max(max_h["two"], h)
            if h % 2 and p != 2:
                kinds.append(BoundKind.THREE_HALVES)
                max_h["three_halves"] = max(max_h["three_halves"], h)
            for kind in kinds:
                rep = check_bound(kind, h, size)
                checks += 1
                if not rep.verdict:
                    violations.append({"space": f"{d}:{q}", "kind": kind.value,
                                       "G_order": orders[i], "H_order": h,
                                       "margin": str(rep.margin)})
    row = {"space": f"{d}:{q}", "V": size, "solvable_completely_reducible": groups,
           "pairs": pairs, "checks": checks,
           "max_H_two": max_h["two"], "max_H_three_halves": max_h["three_halves"] or None}
    if alpha:
        row["alpha_checks"] = alpha_checks
        row["alpha_near_boundary"] = alpha_near
        row["alpha_largest_G"] = {"order": max_g_alpha[0], "log_slack": max_g_alpha[1]}
    return row, violations


def scan_prop21(spaces=DEFAULT_SPACES, *, alpha: bool = True) -> CampaignReport:
    """Check the |H| bounds for every H <= G, G completely reducible and solvable.

    H itself need not act completely reducibly. With ``alpha`` the order bound
    |G| <= |V|^alpha / lam is also checked for each such G.
    """
    spaces = [parse_space(s) for s in spaces]
    report = CampaignReport("prop21", {"spaces": [f"{d}:{q}" for d, q in spaces],
                                       "alpha": alpha})
    for row, violations in _pmap(_prop21_space, [(s, alpha) for s in spaces]):
        report.rows.append(row)
        report.violations.extend(violations)
    return report


def parse_pair(text):
    if isinstance(text, tuple):
        return text
    left, right = text.split("x")
    return parse_space(left), parse_space(right)


def _cr_subgroups(d, q):
    _, recs = _linear_records(d, q)
    return [sub for sub, _, _, mats in recs if is_completely_reducible(mats)]


def _cor13_pair(pair):
    (d1, q1), (d2, q2) = pair
    size = q1 ** d1 * q2 ** d2
    left, right = _cr_subgroups(d1, q1), _cr_subgroups(d2, q2)
    a_left = [composition_factors(g).a_value for g in left]
    a_right = [composition_factors(g).a_value for g in right]
    checks = 0
    violations = []
    best = None
    for g1, a1 in zip(left, a_left):
        for g2, a2 in zip(right, a_right):
            a = composition_factors(direct_product(g1, g2)).a_value
            checks += 1
            if a != a1 * a2:
                violations.append({"pair": f"{d1}:{q1}x{d2}:{q2}", "kind": "MULTIPLICATIVITY",
                                   "orders": [g1.order(), g2.order()], "a": a,
                                   "expected": a1 * a2})
            rep = check_bound(BoundKind.TWO, a, size)
            if not rep.verdict:
                violations.append({"pair": f"{d1}:{q1}x{d2}:{q2}", "kind": "TWO",
                                   "orders": [g1.order(), g2.order()], "a": a,
                                   "margin": str(rep.margin)})
            ratio = Fraction(24 * a ** 3, size ** 6)
            if best is None or ratio > best[0]:
                best = (ratio, a)
    row = {"pair": f"{d1}:{q1}x{d2}:{q2}", "V": size, "left_groups": len(left),
           "right_groups": len(right), "checks": checks, "max_a": best[1],
           "max_two_ratio_cubed": _ratio(best[0]),
           "max_two_ratio": round(float(best[0]) ** (1 / 3), 9)}
    return row, violations


def scan_cor13(pairs=DEFAULT_PAIRS) -> CampaignReport:
    """Check 24 a(G)^3 <= |V|^6 for G1 x G2 on V1 + V2 of different characteristics."""
    pairs = [parse_pair(x) for x in pairs]
    for (d1, q1), (d2, q2) in pairs:
        if _prime_power(q1)[0] == _prime_power(q2)[0]:
            raise ValueError("the two components must have different characteristics")
    report = CampaignReport("cor13", {"pairs": [f"{a}:{b}x{c}:{e}" for (a, b), (c, e) in pairs]})
    for row, violations in _pmap(_cor13_pair, pairs):
        report.rows.append(row)
        report.violations.extend(violations)
    return report
