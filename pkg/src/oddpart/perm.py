"""Permutation groups on the points ``0 .. degree-1``.

Permutations act on the right: ``(a * b)(i) == b(a(i))``, so ``a * b`` means
"apply ``a`` first". Groups keep a base and strong generating set built by the
deterministic Schreier-Sims algorithm, with base points taken as the smallest
moved points.
"""
from __future__ import annotations

import re
from math import factorial, gcd

ELEMENT_CAP = 20000
COSET_CAP = 100000


class CapExceeded(RuntimeError):
    """An enumeration would exceed its configured size cap."""


# -- raw tuple helpers ------------------------------------------------------

def _mul(a, b):
    return tuple(map(b.__getitem__, a))


def _inv(a):
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def _conj(h, g):
    """g^-1 h g."""
    return _mul(_mul(_inv(g), h), g)


def _is_id(a):
    return all(i == x for i, x in enumerate(a))


def _first_moved(a):
    for i, x in enumerate(a):
        if i != x:
            return i
    return None


def _perm_order(a):
    seen = [False] * len(a)
    order = 1
    for i in range(len(a)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = a[j]
            length += 1
        order = order * length // gcd(order, length)
    return order


class Permutation:
    """A bijection of ``{0, ..., degree-1}`` stored as its image sequence."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a bijection: {images}")
        if not images:
            raise ValueError("degree must be positive")
        self.images = images

    @classmethod
    def _raw(cls, images):
        obj = object.__new__(cls)
        obj.images = images
        return obj

    @classmethod
    def identity(cls, degree):
        return cls._raw(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree, cycles):
        img = list(range(degree))
        for cycle in cycles:
            cycle = list(cycle)
            if len(set(cycle)) != len(cycle):
                raise ValueError(f"repeated point in cycle {cycle}")
            for k, x in enumerate(cycle):
                if not 0 <= x < degree:
                    raise ValueError(f"point {x} outside degree {degree}")
            # Cycles compose left to right.
            step = list(range(degree))
            for k, x in enumerate(cycle):
                step[x] = cycle[(k + 1) % len(cycle)]
            img = [step[y] for y in img]
        return cls(img)

    @property
    def degree(self):
        return len(self.images)

    def __call__(self, point):
        return self.images[point]

    def __mul__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        _check_same_degree(self, other)
        return Permutation._raw(_mul(self.images, other.images))

    def inverse(self):
        return Permutation._raw(_inv(self.images))

    __invert__ = inverse

    def __pow__(self, k):
        result = tuple(range(self.degree))
        base = self.images if k >= 0 else _inv(self.images)
        k = abs(k)
        while k:
            if k & 1:
                result = _mul(result, base)
            base = _mul(base, base)
            k >>= 1
        return Permutation._raw(result)

    def conjugate(self, g):
        """``g^-1 * self * g``."""
        return Permutation._raw(_conj(self.images, g.images))

    def is_identity(self):
        return _is_id(self.images)

    def order(self):
        return _perm_order(self.images)

    def cycles(self):
        seen = set()
        out = []
        for i in range(self.degree):
            if i in seen or self.images[i] == i:
                continue
            cycle = [i]
            seen.add(i)
            j = self.images[i]
            while j != i:
                cycle.append(j)
                seen.add(j)
                j = self.images[j]
            out.append(tuple(cycle))
        return out

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __lt__(self, other):
        return self.images < other.images

    def __repr__(self):
        cyc = self.cycles()
        body = "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) or "()"
        return f"Permutation({body}, degree={self.degree})"

    def cycle_string(self):
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles()) or "()"


def _check_same_degree(a, b):
    if a.degree != b.degree:
        raise ValueError(f"degree mismatch: {a.degree} vs {b.degree}")


def compose(a: Permutation, b: Permutation) -> Permutation:
    """Apply ``a`` then ``b``."""
    return a * b


def inverse(a: Permutation) -> Permutation:
    return a.inverse()


# -- base and strong generating set ----------------------------------------

class _BSGS:
    """Base, per-level strong generators and explicit transversals."""

    def __init__(self, degree, gens, base_prefix=()):
        self.degree = degree
        self.ident = tuple(range(degree))
        base = list(base_prefix)
        for g in gens:
            if all(g[b] == b for b in base):
                base.append(_first_moved(g))
        strong = []
        trans = []
        for i, b in enumerate(base):
            level_gens = [g for g in gens if all(g[c] == c for c in base[:i])]
            strong.append(level_gens)
            trans.append(self._orbit(b, level_gens))
        self.base = base
        self.strong = strong
        self.trans = trans
        self._inverses = [dict() for _ in base]
        self._run()

    def _orbit(self, point, gens):
        table = {point: self.ident}
        queue = [point]
        for x in queue:
            ux = table[x]
            for s in gens:
                y = s[x]
                if y not in table:
                    table[y] = _mul(ux, s)
                    queue.append(y)
        return table

    def _inv_rep(self, level, point):
        cache = self._inverses[level]
        u = cache.get(point)
        if u is None:
            u = _inv(self.trans[level][point])
            cache[point] = u
        return u

    def strip(self, h, start=0):
        base = self.base
        for level in range(start, len(base)):
            x = h[base[level]]
            if x not in self.trans[level]:
                return h, level
            if x != base[level]:
                h = _mul(h, self._inv_rep(level, x))
        return h, len(base)

    def _add_level(self, point):
        self.base.append(point)
        self.strong.append([])
        self.trans.append({point: self.ident})
        self._inverses.append({})

    def _run(self):
        i = len(self.base) - 1
        while i >= 0:
            restart = None
            table = self.trans[i]
            for x, ux in list(table.items()):
                for s in self.strong[i]:
                    us = _mul(ux, s)
                    uy = table[s[x]]
                    if us == uy:
                        continue
                    h = _mul(us, self._inv_rep(i, s[x]))
                    h, j = self.strip(h, i + 1)
                    if j < len(self.base) or not _is_id(h):
                        if j == len(self.base):
                            self._add_level(_first_moved(h))
                        for level in range(i + 1, j + 1):
                            self.strong[level].append(h)
                            self.trans[level] = self._orbit(self.base[level], self.strong[level])
                            self._inverses[level] = {}
                        restart = j
                        break
                if restart is not None:
                    break
            if restart is None:
                i -= 1
            else:
                i = restart

    def order(self):
        n = 1
        for t in self.trans:
            n *= len(t)
        return n

    def contains(self, h):
        h, level = self.strip(h)
        return level == len(self.base) and _is_id(h)

    def elements(self):
        items = [self.ident]
        for level in range(len(self.base) - 1, -1, -1):
            reps = list(self.trans[level].values())
            items = [_mul(e, u) for e in items for u in reps]
        return items

    def coset_canon(self, x):
        """Canonical representative of the right coset ``N x`` (N = this group).

        Picks the element of the coset with lexicographically least image of
        the base, greedily level by level.
        """
        for level in range(len(self.base)):
            table = self.trans[level]
            if len(table) == 1:
                continue
            delta = min(table, key=x.__getitem__)
            if delta != self.base[level]:
                x = _mul(table[delta], x)
        return x


# -- groups -----------------------------------------------------------------

class PermGroup:
    """A permutation group given by generators.

    The BSGS is built lazily on first use of :meth:`order`, :meth:`contains`
    or :meth:`elements` and cached; the group is immutable afterwards.
    """

    def __init__(self, degree, generators=(), *, element_cap=ELEMENT_CAP):
        if degree < 1:
            raise ValueError("degree must be positive")
        gens = []
        seen = set()
        for g in generators:
            if not isinstance(g, Permutation):
                g = Permutation(g)
            if g.degree != degree:
                raise ValueError(f"generator of degree {g.degree} in a degree-{degree} group")
            if g.is_identity() or g.images in seen:
                continue
            seen.add(g.images)
            gens.append(g)
        self.degree = degree
        self.generators = tuple(gens)
        self.element_cap = element_cap
        self._raw_gens = [g.images for g in gens]
        self._bsgs = None
        self._elements = None

    # construction helpers
    @classmethod
    def symmetric(cls, n):
        if n == 1:
            return cls(1)
        gens = [Permutation.from_cycles(n, [(0, 1)])]
        if n > 2:
            gens.append(Permutation.from_cycles(n, [tuple(range(n))]))
        return cls(n, gens)

    @classmethod
    def alternating(cls, n):
        if n < 3:
            return cls(n)
        gens = [Permutation.from_cycles(n, [(k, k + 1, k + 2)]) for k in range(n - 2)]
        return cls(n, gens)

    @classmethod
    def cyclic(cls, n):
        if n == 1:
            return cls(1)
        return cls(n, [Permutation.from_cycles(n, [tuple(range(n))])])

    def _get_bsgs(self):
        if self._bsgs is None:
            self._bsgs = _BSGS(self.degree, self._raw_gens)
        return self._bsgs

    @property
    def base(self):
        return tuple(self._get_bsgs().base)

    def strong_generators(self):
        out = []
        seen = set()
        for level in self._get_bsgs().strong:
            for g in level:
                if g not in seen:
                    seen.add(g)
                    out.append(Permutation._raw(g))
        return out

    def transversal_sizes(self):
        return [len(t) for t in self._get_bsgs().trans]

    def order(self) -> int:
        if not self._raw_gens:
            return 1
        if self._elements is not None:
            return len(self._elements)
        return self._get_bsgs().order()

    def is_trivial(self):
        return not self._raw_gens

    def identity(self):
        return Permutation.identity(self.degree)

    def contains(self, g) -> bool:
        if not isinstance(g, Permutation):
            g = Permutation(g)
        if g.degree != self.degree:
            raise ValueError(f"degree mismatch: {g.degree} vs {self.degree}")
        if not self._raw_gens:
            return g.is_identity()
        return self._contains_raw(g.images)

    __contains__ = contains

    def _contains_raw(self, h):
        if not self._raw_gens:
            return _is_id(h)
        if self._elements is not None:
            return h in self._element_set
        return self._get_bsgs().contains(h)

    def raw_elements(self, cap=None):
        """Element image tuples, canonically sorted."""
        if self._elements is None:
            cap = self.element_cap if cap is None else cap
            n = self.order()
            if n > cap:
                raise CapExceeded(f"group of order {n} exceeds the element cap {cap}")
            if not self._raw_gens:
                items = [tuple(range(self.degree))]
            else:
                items = self._get_bsgs().elements()
            items.sort()
            self._elements = items
            self._element_set = frozenset(items)
        return self._elements

    def elements(self, cap=None) -> list[Permutation]:
        """All elements sorted by image sequence."""
        return [Permutation._raw(e) for e in self.raw_elements(cap)]

    def element_set(self, cap=None):
        self.raw_elements(cap)
        return self._element_set

    # orbits and blocks

    def orbits(self) -> list[list[int]]:
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            orbit = [start]
            seen[start] = True
            for x in orbit:
                for g in self._raw_gens:
                    y = g[x]
                    if not seen[y]:
                        seen[y] = True
                        orbit.append(y)
            out.append(sorted(orbit))
        return out

    def orbit(self, point):
        for orb in self.orbits():
            if point in orb:
                return orb
        raise ValueError(point)

    def is_transitive(self):
        return len(self.orbits()) == 1

    def _block_from_seed(self, a, b):
        parent = list(range(self.degree))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        parent[find(b)] = find(a)
        queue = [(a, b)]
        while queue:
            x, y = queue.pop()
            for g in self._raw_gens:
                u, v = find(g[x]), find(g[y])
                if u != v:
                    parent[max(u, v)] = min(u, v)
                    queue.append((g[x], g[y]))
        classes = {}
        for x in range(self.degree):
            classes.setdefault(find(x), []).append(x)
        return sorted(classes.values())

    def minimal_block_system(self):
        """A minimal nontrivial block system, or ``None`` if primitive.

        Each seed pair ``(0, i)`` yields the finest block system joining 0
        and i; the one with the smallest blocks wins, ties to smallest ``i``.
        """
        if not self.is_transitive():
            raise ValueError("minimal_block_system needs a transitive group")
        best = None
        for i in range(1, self.degree):
            blocks = self._block_from_seed(0, i)
            if len(blocks) == 1:
                continue
            if best is None or len(blocks[0]) < len(best[0]):
                best = blocks
        return best

    def is_primitive(self) -> bool:
        return self.minimal_block_system() is None

    # subgroups

    def subgroup(self, gens):
        return PermGroup(self.degree, gens, element_cap=self.element_cap)

    def is_subgroup_of(self, other):
        return all(other._contains_raw(g) for g in self._raw_gens)

    def normal_closure(self, elements, *, stop_order=None) -> "PermGroup":
        """Smallest normal subgroup of this group containing ``elements``."""
        raw = []
        for s in elements:
            s = s if isinstance(s, Permutation) else Permutation(s)
            if not self._contains_raw(s.images):
                raise ValueError(f"{s!r} is not an element of the group")
            raw.append(s.images)
        closure = PermGroup(self.degree, [Permutation._raw(s) for s in raw],
                            element_cap=self.element_cap)
        queue = list(closure._raw_gens)
        ginv = [(_inv(g), g) for g in self._raw_gens]
        while queue:
            h = queue.pop()
            for gi, g in ginv:
                c = _mul(_mul(gi, h), g)
                if not closure._contains_raw(c):
                    closure = PermGroup(self.degree,
                                        closure.generators + (Permutation._raw(c),),
                                        element_cap=self.element_cap)
                    queue.append(c)
                    if stop_order is not None and closure.order() >= stop_order:
                        return closure
        return closure

    def derived_subgroup(self) -> "PermGroup":
        comms = []
        gens = self._raw_gens
        for i, a in enumerate(gens):
            ai = _inv(a)
            for b in gens[i + 1:]:
                c = _mul(_mul(ai, _inv(b)), _mul(a, b))
                if not _is_id(c):
                    comms.append(Permutation._raw(c))
        return self.normal_closure(comms)

    def is_solvable(self) -> bool:
        group = self
        while not group.is_trivial():
            derived = group.derived_subgroup()
            if derived.order() == group.order():
                return False
            group = derived
        return True

    def is_normal_subgroup(self, sub: "PermGroup") -> bool:
        if not sub.is_subgroup_of(self):
            return False
        for g in self._raw_gens:
            gi = _inv(g)
            for h in sub._raw_gens:
                if not sub._contains_raw(_mul(_mul(gi, h), g)):
                    return False
        return True

    def stabilizer(self, point) -> "PermGroup":
        bsgs = _BSGS(self.degree, self._raw_gens, base_prefix=(point,))
        gens = bsgs.strong[1] if len(bsgs.strong) > 1 else []
        return PermGroup(self.degree, [Permutation._raw(g) for g in gens],
                         element_cap=self.element_cap)

    def action_on_cosets(self, sub: "PermGroup", cap=COSET_CAP) -> "PermGroup":
        """Action of this group on the right cosets of ``sub``.

        Cosets are numbered in breadth-first order from ``sub`` itself.
        """
        ident = tuple(range(self.degree))
        if sub.is_trivial():
            canon = lambda x: x  # noqa: E731
        else:
            canon = sub._get_bsgs().coset_canon
        reps = [canon(ident)]
        index = {reps[0]: 0}
        images = [[] for _ in self._raw_gens]
        k = 0
        while k < len(reps):
            r = reps[k]
            for gi, g in enumerate(self._raw_gens):
                c = canon(_mul(r, g))
                j = index.get(c)
                if j is None:
                    j = len(reps)
                    if j >= cap:
                        raise CapExceeded(f"coset action degree exceeds cap {cap}")
                    index[c] = j
                    reps.append(c)
                images[gi].append(j)
            k += 1
        n = len(reps)
        return PermGroup(n, [Permutation._raw(tuple(img)) for img in images],
                         element_cap=self.element_cap)

    def coset_action(self, normal: "PermGroup", cap=COSET_CAP) -> "PermGroup":
        """Faithful image of ``G/N`` acting on the right cosets of ``N``."""
        if normal.degree != self.degree:
            raise ValueError("degree mismatch")
        if not self.is_normal_subgroup(normal):
            raise ValueError("subgroup is not normal")
        index = self.order() // normal.order()
        if index > cap:
            raise CapExceeded(f"index {index} exceeds the coset cap {cap}")
        return self.action_on_cosets(normal, cap)

    def __repr__(self):
        gens = ", ".join(g.cycle_string() for g in self.generators)
        return f"PermGroup(degree={self.degree}, gens=[{gens}])"


def group_from_generators(degree: int, gens) -> PermGroup:
    return PermGroup(degree, gens)


def direct_product(g: PermGroup, h: PermGroup) -> PermGroup:
    """``G x H`` acting on the disjoint union of the two point sets."""
    n = g.degree + h.degree
    gens = []
    for a in g.generators:
        gens.append(Permutation._raw(a.images + tuple(range(g.degree, n))))
    for b in h.generators:
        gens.append(Permutation._raw(tuple(range(g.degree)) + tuple(x + g.degree for x in b.images)))
    return PermGroup(n, gens, element_cap=max(g.element_cap, h.element_cap))


def brute_force_closure(degree, gens):
    """Element set of the group generated by ``gens``, by plain closure."""
    gens = [g.images if isinstance(g, Permutation) else tuple(g) for g in gens]
    ident = tuple(range(degree))
    seen = {ident}
    queue = [ident]
    for x in queue:
        for g in gens:
            y = _mul(x, g)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


# -- generator files ---------------------------------------------------------

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_permutation(text: str, degree: int) -> Permutation:
    """Parse ``"(0 1 2)(3 4)"`` or ``"img: 1 2 0 4 3"``."""
    text = text.strip()
    if text.startswith("img:"):
        images = [int(x) for x in text[4:].replace(",", " ").split()]
        if len(images) != degree:
            raise ValueError(f"image list of length {len(images)} for degree {degree}")
        return Permutation(images)
    if _CYCLE_RE.sub("", text).strip():
        raise ValueError(f"cannot parse permutation {text!r}")
    cycles = []
    for body in _CYCLE_RE.findall(text):
        pts = [int(x) for x in body.replace(",", " ").split()]
        if pts:
            cycles.append(pts)
    return Permutation.from_cycles(degree, cycles)


def parse_generator_file(text: str) -> PermGroup:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines or not lines[0].startswith("degree:"):
        raise ValueError("generator file must start with 'degree: n'")
    degree = int(lines[0].split(":", 1)[1])
    gens = [parse_permutation(ln, degree) for ln in lines[1:]]
    return PermGroup(degree, gens)


def format_generator_file(group: PermGroup, notation="cycles") -> str:
    out = [f"degree: {group.degree}"]
    for g in group.generators:
        if notation == "cycles":
            out.append(g.cycle_string())
        else:
            out.append("img: " + " ".join(map(str, g.images)))
    return "\n".join(out) + "\n"


def order_divides_factorial(group: PermGroup) -> bool:
    return factorial(group.degree) % group.order() == 0
