"""Independent oracles used across the test suite.

Everything here is deliberately naive: brute-force closures, Sylvester
determinants over Fractions, exhaustive dart-permutation filters, and
trial-division factorization.  None of it shares code with the package
internals it checks.
"""

import itertools
from fractions import Fraction

from degenera.perms import Perm


def compose_images(a, b):
    """Image tuple of a∘b (b applied first)."""
    return tuple(a[x] for x in b)


def brute_closure(generators, limit=2 * 10**4):
    """Set of image tuples generated by repeated left-multiplication."""
    if not generators:
        return {()}
    degree = len(generators[0])
    gens = [tuple(g) for g in generators]
    identity = tuple(range(degree))
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for g in gens:
            for h in frontier:
                prod = compose_images(g, h)
                if prod not in seen:
                    seen.add(prod)
                    nxt.append(prod)
        if len(seen) > limit:
            raise RuntimeError("closure exceeded limit %d" % limit)
        frontier = nxt
    return seen


def brute_coset_orbit_sizes(g0, group_elements, subgroup_elements):
    """Orbit sizes of left multiplication by g0 on left cosets, from scratch.

    Cosets are materialized as frozensets of image tuples, so nothing from
    the package's coset machinery is reused.
    """
    subgroup = [tuple(h) for h in subgroup_elements]
    cosets = {frozenset(compose_images(g, h) for h in subgroup)
              for g in map(tuple, group_elements)}
    g0 = tuple(g0)
    sizes = []
    remaining = set(cosets)
    while remaining:
        start = min(remaining, key=sorted)
        current = start
        size = 0
        while True:
            remaining.discard(current)
            size += 1
            current = frozenset(compose_images(g0, x) for x in current)
            if current == start:
                break
        sizes.append(size)
    return tuple(sorted(sizes, reverse=True))


def exhaustive_dart_automorphisms(graph):
    """All dart permutations commuting with the involution and covering a
    vertex bijection, by filtering the full symmetric group.  Only viable
    for graphs with at most 8 darts."""
    n = graph.dart_count
    assert n <= 8
    involution = graph.involution
    out = []
    for images in itertools.permutations(range(n)):
        if any(images[involution[d]] != involution[images[d]] for d in range(n)):
            continue
        vmap = {}
        ok = True
        for d in range(n):
            v, w = graph.vertex_of(d), graph.vertex_of(images[d])
            if vmap.setdefault(v, w) != w:
                ok = False
                break
        if ok and len(set(vmap.values())) == len(vmap):
            out.append(Perm(images))
    return out


def sylvester_resultant(a_coeffs, b_coeffs):
    """Resultant via the Sylvester matrix determinant over Fractions."""
    a = list(a_coeffs)
    b = list(b_coeffs)
    while a and a[-1] == 0:
        a.pop()
    while b and b[-1] == 0:
        b.pop()
    da, db = len(a) - 1, len(b) - 1
    if da < 0 or db < 0:
        return 0
    if da == 0:
        return a[0] ** db
    if db == 0:
        return b[0] ** da
    size = da + db
    rows = []
    for i in range(db):
        row = [0] * size
        for j, c in enumerate(reversed(a)):
            row[i + j] = c
        rows.append(row)
    for i in range(da):
        row = [0] * size
        for j, c in enumerate(reversed(b)):
            row[i + j] = c
        rows.append(row)
    matrix = [[Fraction(x) for x in row] for row in rows]
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if matrix[r][col]), None)
        if pivot is None:
            return 0
        if pivot != col:
            matrix[col], matrix[pivot] = matrix[pivot], matrix[col]
            det = -det
        det *= matrix[col][col]
        inv = 1 / matrix[col][col]
        for r in range(col + 1, size):
            factor = matrix[r][col] * inv
            if factor:
                for c in range(col, size):
                    matrix[r][c] -= factor * matrix[col][c]
    assert det.denominator == 1
    return int(det)


def trial_division_factors(coeffs, p):
    """List of (monic factor, multiplicity) of a monic poly mod p by trial
    division over monic polynomials of ascending degree."""

    def polydiv(num, den):
        num = list(num)
        out = [0] * (len(num) - len(den) + 1)
        for shift in range(len(num) - len(den), -1, -1):
            lead = num[shift + len(den) - 1] % p
            out[shift] = lead
            for i in range(len(den)):
                num[shift + i] = (num[shift + i] - lead * den[i]) % p
        rem = [c % p for c in num[: len(den) - 1]]
        while rem and rem[-1] == 0:
            rem.pop()
        return out, rem

    f = [c % p for c in coeffs]
    assert f and f[-1] == 1
    factors = []
    d = 1
    while len(f) > 1:
        if len(f) - 1 < 2 * d:
            factors.append((tuple(f), 1))
            break
        for tail in itertools.product(range(p), repeat=d):
            divisor = list(tail) + [1]
            mult = 0
            while len(f) - 1 >= d:
                quot, rem = polydiv(f, divisor)
                if rem:
                    break
                f = quot
                mult += 1
            if mult:
                factors.append((tuple(divisor), mult))
                if len(f) == 1:
                    break
        if len(f) == 1:
            break
        d += 1
    return factors


def trial_division_degree_pattern(coeffs, p):
    """Degree pattern with ramification reported as None, via
    trial_division_factors."""
    factors = trial_division_factors(coeffs, p)
    if any(mult > 1 for _, mult in factors):
        return None
    return tuple(
        sorted((len(f) - 1 for f, _ in factors), reverse=True)
    )


def sympy_degree_pattern(coeffs, p):
    """Factor degree multiset of the poly mod p via sympy, None if any
    factor repeats (sympy imported lazily; only tests need it)."""
    from sympy.polys.domains import ZZ
    from sympy.polys.galoistools import gf_factor

    desc = [ZZ(c % p) for c in reversed(coeffs)]
    _, factors = gf_factor(desc, p, ZZ)
    if any(mult > 1 for _, mult in factors):
        return None
    degrees = [len(fac) - 1 for fac, _ in factors if len(fac) > 1]
    return tuple(sorted(degrees, reverse=True))


def relabel_graph(graph, vertex_images, shuffle_edges=None):
    """Copy of the graph under a vertex bijection, optionally with edges
    reordered and endpoints flipped to exercise representation choices."""
    from degenera.graphs import DartGraph

    edges = [(vertex_images[u], vertex_images[v]) for u, v in graph.edges]
    if shuffle_edges is not None:
        edges = [edges[i] for i in shuffle_edges]
        edges = [
            (v, u) if k % 2 else (u, v) for k, (u, v) in enumerate(edges)
        ]
    return DartGraph(graph.vertex_count, edges)


def random_connected_multigraph(rng, vertex_count, extra_edges, min_degree=None):
    """Random connected multigraph: a random spanning tree plus random
    extra edges (loops allowed), topped up until min_degree is met."""
    from degenera.graphs import DartGraph

    edges = []
    for v in range(1, vertex_count):
        edges.append((rng.randrange(v), v))
    for _ in range(extra_edges):
        u = rng.randrange(vertex_count)
        v = rng.randrange(vertex_count)
        edges.append((u, v))
    if min_degree is not None:
        while True:
            degrees = [0] * vertex_count
            for u, v in edges:
                degrees[u] += 1
                degrees[v] += 1
            short = [v for v in range(vertex_count) if degrees[v] < min_degree]
            if not short:
                break
            v = short[0]
            edges.append((v, rng.randrange(vertex_count)))
    return DartGraph(vertex_count, edges)
