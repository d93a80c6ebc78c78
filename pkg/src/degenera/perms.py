"""Permutation groups on {0, ..., n-1} with coset actions and even-orbit search.

A permutation is stored as its image tuple, so p sends i to p.images[i].
Products compose right-to-left: (a * b)(x) = a(b(x)).  Groups keep a
deterministic stabilizer chain (Schreier-Sims with the base chosen greedily
on first moved points), which gives order, membership and element
enumeration without randomness.  Everything in this module is exact and
reproducible: identical inputs yield identical outputs, including the
certificate picked by even_orbit_search.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

DEFAULT_ENUMERATION_CAP = 10**6


class EnumerationCapError(RuntimeError):
    """Raised when an operation would enumerate more group elements than allowed."""


class Perm:
    """A permutation of {0, ..., degree-1} stored as a one-line image tuple."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError("not a permutation of 0..n-1: %r" % (images,))
        self.images = images

    @classmethod
    def _unchecked(cls, images):
        p = object.__new__(cls)
        p.images = images
        return p

    @classmethod
    def identity(cls, degree):
        return cls._unchecked(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree, cycles):
        """Build a permutation from disjoint cycles, e.g. from_cycles(4, [(0, 1, 2)])."""
        images = list(range(degree))
        seen = set()
        for cyc in cycles:
            for x in cyc:
                if x in seen:
                    raise ValueError("cycles are not disjoint at point %d" % x)
                seen.add(x)
            for i, x in enumerate(cyc):
                images[x] = cyc[(i + 1) % len(cyc)]
        return cls(images)

    @property
    def degree(self):
        return len(self.images)

    def __call__(self, point):
        return self.images[point]

    def __mul__(self, other):
        if self.degree != other.degree:
            raise ValueError("degree mismatch: %d vs %d" % (self.degree, other.degree))
        a = self.images
        return Perm._unchecked(tuple(map(a.__getitem__, other.images)))

    def inverse(self):
        inv = [0] * len(self.images)
        for i, x in enumerate(self.images):
            inv[x] = i
        return Perm._unchecked(tuple(inv))

    def __pow__(self, k):
        n = len(self.images)
        if k < 0:
            return self.inverse() ** (-k)
        result = Perm.identity(n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_identity(self):
        return all(x == i for i, x in enumerate(self.images))

    def first_moved(self):
        """Smallest point not fixed, or None for the identity."""
        for i, x in enumerate(self.images):
            if x != i:
                return i
        return None

    def cycles(self, include_fixed=False):
        """Disjoint cycles, each starting at its smallest point, ordered by that point."""
        seen = [False] * len(self.images)
        out = []
        for start in range(len(self.images)):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            x = self.images[start]
            while x != start:
                seen[x] = True
                cyc.append(x)
                x = self.images[x]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def order(self):
        cycs = self.cycles()
        if not cycs:
            return 1
        return lcm(*(len(c) for c in cycs))

    def __eq__(self, other):
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __lt__(self, other):
        return self.images < other.images

    def __repr__(self):
        return "Perm(%r)" % list(self.images)


def _compose_images(a, b):
    # image tuple of a o b without building Perm objects
    return tuple(map(a.__getitem__, b))


class _ChainLevel:
    __slots__ = ("point", "gens", "transversal", "order_list", "checked")

    def __init__(self, point, degree):
        self.point = point
        self.gens = []
        self.transversal = {point: Perm.identity(degree)}
        self.order_list = [point]
        self.checked = set()


class _StabilizerChain:
    """Deterministic Schreier-Sims stabilizer chain.

    Strong generators are stored at the deepest level whose base prefix they
    fix; the generating set of level i is the union of the lists at levels
    >= i.  An optional base_prefix pins the first base points, which makes
    pointwise stabilizers read off as chain suffixes.
    """

    def __init__(self, degree, generators, base_prefix=()):
        self.degree = degree
        self.levels = []
        for b in base_prefix:
            self._new_level(b)
        for g in generators:
            if g.degree != degree:
                raise ValueError("generator degree %d != %d" % (g.degree, degree))
            self._park(g)
        for i in range(len(self.levels) - 1, -1, -1):
            self._complete_level(i)

    def _new_level(self, point):
        self.levels.append(_ChainLevel(point, self.degree))

    def _gens_for(self, i):
        return [g for lvl in self.levels[i:] for g in lvl.gens]

    def sift(self, p):
        """Reduce p through the chain; returns (residue, level index where it stuck)."""
        for i, lvl in enumerate(self.levels):
            x = p.images[lvl.point]
            u = lvl.transversal.get(x)
            if u is None:
                return p, i
            if x != lvl.point:
                p = u.inverse() * p
        return p, len(self.levels)

    def contains(self, p):
        residue, _ = self.sift(p)
        return residue.is_identity()

    def _park(self, g):
        residue, i = self.sift(g)
        if residue.is_identity():
            return
        if i == len(self.levels):
            self._new_level(residue.first_moved())
        self.levels[i].gens.append(residue)

    def _rebuild_orbit(self, i):
        lvl = self.levels[i]
        gens = self._gens_for(i)
        lvl.transversal = {lvl.point: Perm.identity(self.degree)}
        lvl.order_list = [lvl.point]
        queue = 0
        while queue < len(lvl.order_list):
            x = lvl.order_list[queue]
            queue += 1
            ux = lvl.transversal[x]
            for g in gens:
                y = g.images[x]
                if y not in lvl.transversal:
                    lvl.transversal[y] = g * ux
                    lvl.order_list.append(y)

    def _complete_level(self, i):
        """Verify level i's Schreier generators, pushing residues deeper as needed."""
        while True:
            self._rebuild_orbit(i)
            lvl = self.levels[i]
            added = False
            for g in self._gens_for(i):
                for x in lvl.order_list:
                    key = (g.images, x)
                    if key in lvl.checked:
                        continue
                    ux = lvl.transversal[x]
                    s = g * ux
                    us = lvl.transversal[s.images[lvl.point]]
                    residue = us.inverse() * s
                    lvl.checked.add(key)
                    if residue.is_identity():
                        continue
                    residue, j = self._sift_from(residue, i + 1)
                    if residue.is_identity():
                        continue
                    if j == len(self.levels):
                        self._new_level(residue.first_moved())
                    self.levels[j].gens.append(residue)
                    self._complete_level(i + 1)
                    added = True
                    break
                if added:
                    break
            if not added:
                return

    def _sift_from(self, p, start):
        for i in range(start, len(self.levels)):
            lvl = self.levels[i]
            x = p.images[lvl.point]
            u = lvl.transversal.get(x)
            if u is None:
                return p, i
            if x != lvl.point:
                p = u.inverse() * p
        return p, len(self.levels)

    def order(self):
        n = 1
        for lvl in self.levels:
            n *= len(lvl.transversal)
        return n

    def iter_elements(self):
        """All group elements, one per transversal combination, in a fixed order."""

        def rec(i, prefix):
            if i == len(self.levels):
                yield prefix
                return
            lvl = self.levels[i]
            for x in sorted(lvl.transversal):
                yield from rec(i + 1, prefix * lvl.transversal[x])

        yield from rec(0, Perm.identity(self.degree))

    def suffix(self, k):
        """A fresh chain view for the subgroup fixing the first k base points."""
        sub = object.__new__(_StabilizerChain)
        sub.degree = self.degree
        sub.levels = self.levels[k:]
        return sub


class PermGroup:
    """Group generated by a list of permutations of common degree."""

    def __init__(self, degree, generators):
        generators = tuple(generators)
        for g in generators:
            if g.degree != degree:
                raise ValueError("generator degree %d != %d" % (g.degree, degree))
        self.degree = degree
        self.generators = tuple(g for g in generators if not g.is_identity())
        self._chain_obj = None

    @property
    def _chain(self):
        if self._chain_obj is None:
            self._chain_obj = _StabilizerChain(self.degree, self.generators)
        return self._chain_obj

    @classmethod
    def _from_chain(cls, degree, generators, chain):
        group = cls(degree, generators)
        group._chain_obj = chain
        return group

    def order(self):
        return self._chain.order()

    def __contains__(self, p):
        if not isinstance(p, Perm) or p.degree != self.degree:
            return False
        return self._chain.contains(p)

    def contains_group(self, other):
        """True when every generator of other lies in this group."""
        return other.degree == self.degree and all(g in self for g in other.generators)

    def is_trivial(self):
        return self.order() == 1

    def elements(self, cap=DEFAULT_ENUMERATION_CAP):
        """All elements in a deterministic order.  Refuses to exceed cap."""
        n = self.order()
        if n > cap:
            raise EnumerationCapError(
                "enumeration cap exceeded: group order %d > cap %d" % (n, cap)
            )
        return list(self._chain.iter_elements())

    def orbit(self, point):
        """Orbit of a point as a set."""
        if not 0 <= point < self.degree:
            raise ValueError("point %d out of range 0..%d" % (point, self.degree - 1))
        seen = {point}
        queue = [point]
        while queue:
            x = queue.pop()
            for g in self.generators:
                y = g.images[x]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return seen

    def orbits(self, points=None):
        """Orbit partition of the given points (default all), sorted by minimum."""
        if points is None:
            points = range(self.degree)
        remaining = set(points)
        out = []
        while remaining:
            x = min(remaining)
            orb = self.orbit(x) & remaining
            remaining -= orb
            out.append(tuple(sorted(orb)))
        return out

    def pointwise_stabilizer(self, points):
        """Subgroup fixing every listed point, via a chain with a pinned base prefix."""
        prefix = sorted(set(points))
        for x in prefix:
            if not 0 <= x < self.degree:
                raise ValueError("point %d out of range" % x)
        if not prefix:
            return self
        chain = _StabilizerChain(self.degree, self.generators, base_prefix=prefix)
        sub = chain.suffix(len(prefix))
        gens = [g for lvl in sub.levels for g in lvl.gens]
        return PermGroup._from_chain(self.degree, gens, sub)

    def setwise_stabilizer(self, points, cap=DEFAULT_ENUMERATION_CAP):
        """Subgroup preserving the point set, by explicit element enumeration."""
        target = frozenset(points)
        for x in target:
            if not 0 <= x < self.degree:
                raise ValueError("point %d out of range" % x)
        keep = []
        for p in self.elements(cap):
            if frozenset(p.images[x] for x in target) == target:
                keep.append(p)
        return PermGroup(self.degree, keep)

    def element_orders(self, cap=DEFAULT_ENUMERATION_CAP):
        """Set of orders of the elements of the group."""
        return {p.order() for p in self.elements(cap)}


def group_from_generators(generators, degree=None):
    """PermGroup spanned by the generators; degree defaults to theirs."""
    generators = list(generators)
    if degree is None:
        if not generators:
            raise ValueError("degree required for an empty generating set")
        degree = generators[0].degree
    return PermGroup(degree, generators)


class CosetAction:
    """Left action of a group on the left cosets of a subgroup.

    Coset 0 is the subgroup itself and the transversal is built
    breadth-first from the group generators, so the numbering is
    deterministic.  g0 sends coset gH to (g0 g)H.
    """

    def __init__(self, group, subgroup):
        if subgroup.degree != group.degree or not group.contains_group(subgroup):
            raise ValueError("coset action requires a subgroup of the acting group")
        self.group = group
        self.subgroup = subgroup
        self.transversal = [Perm.identity(group.degree)]
        self._rep_inverses = [Perm.identity(group.degree)]
        queue = 0
        while queue < len(self.transversal):
            rep = self.transversal[queue]
            queue += 1
            for g in group.generators:
                moved = g * rep
                if self._find(moved) is None:
                    self.transversal.append(moved)
                    self._rep_inverses.append(moved.inverse())
        self.action_table = [self.permutation(g) for g in group.generators]

    @property
    def coset_count(self):
        return len(self.transversal)

    def _find(self, p):
        chain = self.subgroup._chain
        for j, rep_inv in enumerate(self._rep_inverses):
            if chain.contains(rep_inv * p):
                return j
        return None

    def coset_index(self, p):
        """Index of the coset pH."""
        j = self._find(p)
        if j is None:
            raise ValueError("element does not lie in the acting group")
        return j

    def permutation(self, g0):
        """The permutation g0 induces on coset indices."""
        if g0 not in self.group:
            raise ValueError("element is not in the acting group")
        return Perm._unchecked(
            tuple(self.coset_index(g0 * rep) for rep in self.transversal)
        )

    def cyclic_orbit_sizes(self, g0):
        """Orbit sizes of <g0> on the cosets, sorted descending, fixed points included."""
        sizes = [len(c) for c in self.permutation(g0).cycles(include_fixed=True)]
        return tuple(sorted(sizes, reverse=True))


@dataclass(frozen=True)
class OrbitCertificate:
    """A group element whose cyclic orbits on a coset space all have even size."""

    element: Perm
    element_order: int
    orbit_sizes: tuple


def _is_two_power(n):
    return n >= 2 and n & (n - 1) == 0


def even_orbit_search(group, subgroup, cap=DEFAULT_ENUMERATION_CAP):
    """Search for an element with all-even cyclic orbits on group/subgroup cosets.

    Candidates whose order is a power of two that the subgroup cannot match
    are tried first: such an element has no conjugate in the subgroup, so no
    fixed coset, and its 2-power order forces every orbit size to be even.
    Remaining elements are tried by increasing order with lexicographic
    tie-breaking on image tuples.  Returns an OrbitCertificate, or None
    after exhausting the whole group.
    """
    action = CosetAction(group, subgroup)
    elements = group.elements(cap)
    sub_orders = subgroup.element_orders(cap)
    fast, rest = [], []
    for p in elements:
        k = p.order()
        if _is_two_power(k) and k not in sub_orders:
            fast.append((k, p))
        else:
            rest.append((k, p))
    fast.sort(key=lambda pair: (pair[0], pair[1].images))
    rest.sort(key=lambda pair: (pair[0], pair[1].images))
    for k, p in fast + rest:
        sizes = action.cyclic_orbit_sizes(p)
        if all(s % 2 == 0 for s in sizes):
            return OrbitCertificate(element=p, element_order=k, orbit_sizes=sizes)
    return None


def verify_certificate(cert, group, subgroup):
    """Recompute a certificate's orbit sizes from scratch and check evenness."""
    if cert.element not in group:
        return False
    if cert.element.order() != cert.element_order:
        return False
    sizes = CosetAction(group, subgroup).cyclic_orbit_sizes(cert.element)
    return sizes == tuple(cert.orbit_sizes) and all(s % 2 == 0 for s in sizes)
