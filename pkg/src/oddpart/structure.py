"""Composition factors and the odd-factor product a(G)."""
from __future__ import annotations

from dataclasses import dataclass, field

from .numth import factorize, is_prime, odd_part
from .perm import COSET_CAP, PermGroup, Permutation, _inv, _mul, _perm_order

__all__ = [
    "CompositionFactor",
    "CompositionReport",
    "a_of_group",
    "composition_factors",
    "find_proper_normal",
    "odd_part",
]


@dataclass(frozen=True)
class CompositionFactor:
    order: int
    abelian: bool


@dataclass
class CompositionReport:
    group_order: int
    factors: list[CompositionFactor] = field(default_factory=list)

    @property
    def a_value(self) -> int:
        a = 1
        for f in self.factors:
            if f.order % 2:
                a *= f.order
        return a

    @property
    def odd_part_of_order(self) -> int:
        return odd_part(self.group_order)

    def to_dict(self):
        return {
            "schema_version": 1,
            "group_order": self.group_order,
            "factors": [{"order": f.order, "abelian": f.abelian} for f in self.factors],
            "a_value": self.a_value,
            "odd_part_of_order": self.odd_part_of_order,
        }


def _conjugacy_class(x, gens):
    ginv = [(_inv(g), g) for g in gens]
    cls = {x}
    queue = [x]
    for y in queue:
        for gi, g in ginv:
            z = _mul(_mul(gi, y), g)
            if z not in cls:
                cls.add(z)
                queue.append(z)
    return cls


def find_proper_normal(group: PermGroup) -> PermGroup | None:
    """A proper nontrivial normal subgroup, or ``None`` when the group is simple.

    Candidates are normal closures of prime-order elements taken in canonical
    order; one element per conjugacy class is enough since conjugates have the
    same closure.
    """
    n = group.order()
    if n == 1:
        raise ValueError("the trivial group has no proper nontrivial normal subgroup")
    if is_prime(n):
        return None
    gens = group._raw_gens
    covered = set()
    for x in group.raw_elements():
        if x in covered:
            continue
        k = _perm_order(x)
        if k == 1 or not is_prime(k):
            continue
        closure = group.normal_closure([Permutation._raw(x)], stop_order=n)
        if closure.order() < n:
            return closure
        covered |= _conjugacy_class(x, gens)
    return None


def composition_factors(group: PermGroup, coset_cap: int = COSET_CAP) -> CompositionReport:
    """Orders of the composition factors, bottom of the series first.

    Splits over a proper normal subgroup ``N`` and the faithful quotient
    action on the cosets of ``N`` until every piece is simple.
    """
    factors: list[CompositionFactor] = []
    _collect(group, factors, coset_cap)
    return CompositionReport(group.order(), factors)


def _collect(group, out, coset_cap):
    n = group.order()
    if n == 1:
        return
    if is_prime(n):
        out.append(CompositionFactor(n, True))
        return
    if _is_abelian(group):
        for p, e in factorize(n).items():
            out.extend(CompositionFactor(p, True) for _ in range(e))
        return
    normal = find_proper_normal(group)
    if normal is None:
        out.append(CompositionFactor(n, False))
        return
    _collect(normal, out, coset_cap)
    _collect(group.coset_action(normal, cap=coset_cap), out, coset_cap)


def _is_abelian(group):
    gens = group._raw_gens
    return all(_mul(a, b) == _mul(b, a) for i, a in enumerate(gens) for b in gens[i + 1:])


def a_of_group(group: PermGroup) -> int:
    """Product of the odd composition factor orders; 1 for the trivial group."""
    return composition_factors(group).a_value
