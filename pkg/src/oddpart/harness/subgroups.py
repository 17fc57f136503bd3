"""Enumeration of all subgroups of a small permutation group.

Subgroups are grown by cyclic extension: every subgroup ``K`` is ``M v <x>``
for a maximal subgroup ``M`` of ``K``. Work is done on one representative per
conjugacy class (extensions are tried once per normalizer orbit of cyclic
subgroups), then every class is expanded to its conjugates, so the output is
the full set of subgroups deduplicated by element set.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..perm import ELEMENT_CAP, CapExceeded, PermGroup, Permutation, brute_force_closure

_CHUNK = 1 << 22  # entries per conjugation block


class ElementTable:
    """Indexed elements of a group with a full multiplication table."""

    def __init__(self, group: PermGroup, cap: int = ELEMENT_CAP):
        elems = group.raw_elements(cap)
        self.group = group
        self.elems = elems
        self.size = n = len(elems)
        arr = np.array(elems, dtype=np.int64).reshape(n, group.degree)
        base = list(group.base) if not group.is_trivial() else [0]
        weights = group.degree ** np.arange(len(base), dtype=np.int64)
        codes = arr[:, base] @ weights
        order = np.argsort(codes, kind="stable")
        sorted_codes = codes[order]

        dtype = np.int16 if n < 2 ** 15 else np.int32
        table = np.empty((n, n), dtype=dtype)
        base_idx = np.array(base)
        for a in range(n):
            # (a*b)(x) = b(a(x)), evaluated on base points only.
            prod = arr[:, arr[a, base_idx]] @ weights
            table[a] = order[np.searchsorted(sorted_codes, prod)]
        self.table = table
        self.identity = int(order[np.searchsorted(sorted_codes, (np.array(base) @ weights))])
        self.inv = np.argmax(table == self.identity, axis=1).astype(np.int64)

    def closure(self, start, gens):
        """Indices of the group generated by ``start`` (a closed set) and ``gens``."""
        mask = np.zeros(self.size, dtype=bool)
        start = np.asarray(start, dtype=np.int64)
        mask[start] = True
        mask[self.identity] = True
        frontier = np.flatnonzero(mask)
        gens = np.asarray(gens, dtype=np.int64)
        while frontier.size:
            new = self.table[np.ix_(frontier, gens)].ravel().astype(np.int64)
            new = np.unique(new[~mask[new]])
            mask[new] = True
            frontier = new
        return np.flatnonzero(mask)

    def conjugate_all(self, members, by=None):
        """Rows ``g^-1 H g`` (unsorted) for every ``g`` in ``by`` (default: all)."""
        by = np.arange(self.size) if by is None else np.asarray(by, dtype=np.int64)
        members = np.asarray(members, dtype=np.int64)
        rows = max(1, _CHUNK // max(1, members.size))
        out = []
        for lo in range(0, by.size, rows):
            g = by[lo:lo + rows]
            left = self.table[self.inv[g][:, None], members[None, :]].astype(np.int64)
            out.append(self.table[left, g[:, None]].astype(np.int64))
        return np.concatenate(out) if out else np.empty((0, members.size), dtype=np.int64)

    def power_closure(self, x):
        out = [self.identity]
        y = x
        while y != self.identity:
            out.append(y)
            y = int(self.table[y, x])
        return np.array(sorted(out), dtype=np.int64)


def _key(arr):
    return np.asarray(arr, dtype=np.int32).tobytes()


@dataclass
class SubgroupClass:
    """A conjugacy class of subgroups: representative plus all members."""

    order: int
    rep: np.ndarray
    rep_gens: list
    members: list = field(default_factory=list)       # sorted index arrays
    member_gens: list = field(default_factory=list)   # generator index lists
    normalizer: np.ndarray | None = None


def subgroup_classes(group: PermGroup, order_cap: int | None = None,
                     cap: int = ELEMENT_CAP, table: ElementTable | None = None):
    """Conjugacy classes of subgroups (up to ``order_cap``) with their members."""
    if group.order() > cap:
        raise CapExceeded(f"group of order {group.order()} exceeds the cap {cap}")
    table = table or ElementTable(group, cap)
    n = table.size
    order_cap = n if order_cap is None else order_cap

    # cyclic subgroups, keyed by element set
    cyc_of = np.empty(n, dtype=np.int64)
    cyc_gen = []
    cyc_key = {}
    for x in range(n):
        members = table.power_closure(x)
        k = _key(members)
        cid = cyc_key.get(k)
        if cid is None:
            cid = len(cyc_gen)
            cyc_key[k] = cid
            cyc_gen.append(x)
        cyc_of[x] = cid
    cyc_gen = np.array(cyc_gen, dtype=np.int64)

    classes: list[SubgroupClass] = []
    key_to_class: dict[bytes, int] = {}

    def register(elements, gens):
        k = _key(elements)
        if k in key_to_class:
            return
        conj = table.conjugate_all(elements)
        conj.sort(axis=1)
        cls = SubgroupClass(order=len(elements), rep=elements, rep_gens=list(gens))
        cid = len(classes)
        normalizer = []
        for g in range(n):
            row = conj[g]
            rk = _key(row)
            if rk == k:
                normalizer.append(g)
            if rk in key_to_class:
                continue
            key_to_class[rk] = cid
            cls.members.append(row.copy())
            if g == table.identity:
                cls.member_gens.append(list(gens))
            else:
                gi = table.inv[g]
                cls.member_gens.append([int(table.table[table.table[gi, h], g]) for h in gens])
        cls.normalizer = np.array(normalizer, dtype=np.int64)
        classes.append(cls)

    register(np.array([table.identity], dtype=np.int64), [])
    idx = 0
    while idx < len(classes):
        cls = classes[idx]
        idx += 1
        rep = cls.rep
        norm = cls.normalizer
        done = np.zeros(len(cyc_gen), dtype=bool)
        done[cyc_of[rep]] = True
        for cid in range(len(cyc_gen)):
            if done[cid]:
                continue
            x = int(cyc_gen[cid])
            orbit = table.table[table.table[table.inv[norm], x], norm].astype(np.int64)
            done[cyc_of[orbit]] = True
            new = table.closure(rep, list(cls.rep_gens) + [x])
            if new.size > order_cap:
                continue
            register(new, list(cls.rep_gens) + [x])
    classes.sort(key=lambda c: (c.order, c.members[0].tolist()))
    return classes, table


def _as_group(table, elements, gens):
    g = PermGroup(table.group.degree, [Permutation._raw(table.elems[i]) for i in gens],
                  element_cap=table.group.element_cap)
    g._elements = [table.elems[i] for i in elements]
    g._element_set = frozenset(g._elements)
    return g


def indexed_subgroups(group: PermGroup, order_cap: int | None = None,
                      cap: int = ELEMENT_CAP):
    """``(table, [(members, gens), ...])`` for every subgroup, canonically sorted.

    ``members`` are sorted element-index arrays into ``table.elems``.
    """
    classes, table = subgroup_classes(group, order_cap, cap)
    found = []
    for cls in classes:
        for members, gens in zip(cls.members, cls.member_gens):
            found.append((members.tolist(), members, gens))
    found.sort(key=lambda t: (len(t[0]), t[0]))
    return table, [(members, gens) for _, members, gens in found]


def as_group(table: ElementTable, members, gens) -> PermGroup:
    """A subgroup given by element indices, with its element list cached."""
    return _as_group(table, members, gens)


def enumerate_subgroups(group: PermGroup, order_cap: int | None = None,
                        cap: int = ELEMENT_CAP) -> list[PermGroup]:
    """All subgroups of ``group`` of order at most ``order_cap``.

    Sorted by (order, canonical element list); element lists are cached on
    the returned groups.
    """
    table, found = indexed_subgroups(group, order_cap, cap)
    return [_as_group(table, members, gens) for members, gens in found]


def brute_force_subgroups(group: PermGroup) -> set[frozenset]:
    """Reference enumeration by repeated extension with single elements."""
    elems = group.raw_elements()
    ident = tuple(range(group.degree))

    def close(gens):
        return frozenset(brute_force_closure(group.degree, gens))

    layer = {close([x]) for x in elems}
    found = set(layer) | {frozenset([ident])}
    while layer:
        nxt = set()
        for sub in layer:
            for x in elems:
                if x in sub:
                    continue
                bigger = close(list(sub) + [x])
                if bigger not in found:
                    found.add(bigger)
                    nxt.add(bigger)
        layer = nxt
    return found
