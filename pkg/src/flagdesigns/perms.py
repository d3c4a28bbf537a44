"""Permutation groups on {0, ..., n-1}.

Orbits, exact group order via a stabilizer chain, point stabilizers by
Schreier generators, transitivity degree and the minimal-block
primitivity test.  Permutations compose left to right:
(p * q)(x) == q(p(x)), so products read in the order they are applied.

Everything here is deterministic: breadth-first orbits follow generator
order, and the stabilizer chain always picks the smallest moved point
as the next base point.  Groups are immutable after construction; the
stabilizer chain is the only internal cache and is computed at most
once (build it eagerly via order() before sharing a group between
workers).
"""

from __future__ import annotations

from collections import deque

DEGREE_CAP = 100_000


def compose(p, q):
    """Image tuple of 'apply p, then q'."""
    return tuple(q[x] for x in p)


def invert(p):
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def identity_tuple(n):
    return tuple(range(n))


class Permutation:
    """A permutation of {0, ..., n-1} stored as its image tuple."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError("images do not form a bijection on 0..n-1")
        self.images = images

    @classmethod
    def identity(cls, n):
        return cls(range(n))

    @classmethod
    def from_cycles(cls, n, cycles):
        images = list(range(n))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:]):
                images[a] = b
            if cyc:
                images[cyc[-1]] = cyc[0]
        return cls(images)

    @property
    def degree(self):
        return len(self.images)

    def __call__(self, x):
        return self.images[x]

    def __mul__(self, other):
        return Permutation(compose(self.images, other.images))

    def __pow__(self, k):
        n = len(self.images)
        if k < 0:
            return self.inverse() ** (-k)
        out, base = identity_tuple(n), self.images
        while k:
            if k & 1:
                out = compose(out, base)
            base = compose(base, base)
            k >>= 1
        return Permutation(out)

    def inverse(self):
        return Permutation(invert(self.images))

    def is_identity(self):
        return all(i == j for i, j in enumerate(self.images))

    def order(self):
        import math
        n, seen, out = len(self.images), set(), 1
        for i in range(n):
            if i in seen:
                continue
            length, j = 1, self.images[i]
            seen.add(i)
            while j != i:
                seen.add(j)
                j = self.images[j]
                length += 1
            out = out * length // math.gcd(out, length)
        return out

    def cycles(self):
        seen, out = set(), []
        for i in range(len(self.images)):
            if i in seen or self.images[i] == i:
                seen.add(i)
                continue
            cyc, j = [i], self.images[i]
            seen.add(i)
            while j != i:
                seen.add(j)
                cyc.append(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        cyc = self.cycles()
        body = "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) or "()"
        return f"Perm[{len(self.images)}]{body}"


class _ChainLevel:
    __slots__ = ("base", "gens", "transversal")

    def __init__(self, base):
        self.base = base
        self.gens = []           # image tuples
        self.transversal = {}    # point -> image tuple u with u[base] = point


class _StabChain:
    """Deterministic incremental Schreier-Sims stabilizer chain."""

    def __init__(self, gen_tuples, degree):
        self.degree = degree
        self.levels = []
        work = [(g, 0) for g in gen_tuples if any(i != j for i, j in enumerate(g))]
        # add the initial generators in one batch per level so the first
        # Schreier sweep is not repeated once per generator
        pending = deque(work)
        while pending:
            g, lvl = pending.popleft()
            residue, at = self._strip(g, lvl)
            if residue is None:
                continue
            self._extend(residue, at, pending)

    def _strip(self, g, start):
        for idx in range(start, len(self.levels)):
            level = self.levels[idx]
            beta = g[level.base]
            if beta == level.base:
                continue
            u = level.transversal.get(beta)
            if u is None:
                return g, idx
            g = compose(g, invert(u))
        if any(i != j for i, j in enumerate(g)):
            return g, len(self.levels)
        return None, -1

    def _extend(self, g, idx, pending):
        if idx == len(self.levels):
            base = next(i for i, j in enumerate(g) if i != j)
            self.levels.append(_ChainLevel(base))
        level = self.levels[idx]
        level.gens.append(g)
        self._rebuild_orbit(level)
        seen = set()
        for a in sorted(level.transversal):
            u_a = level.transversal[a]
            for s in level.gens:
                b = s[a]
                sg = compose(compose(u_a, s), invert(level.transversal[b]))
                if sg in seen:
                    continue
                seen.add(sg)
                if any(i != j for i, j in enumerate(sg)):
                    pending.append((sg, idx + 1))

    def _rebuild_orbit(self, level):
        ident = identity_tuple(self.degree)
        level.transversal = {level.base: ident}
        queue = deque([level.base])
        while queue:
            a = queue.popleft()
            u_a = level.transversal[a]
            for s in level.gens:
                b = s[a]
                if b not in level.transversal:
                    level.transversal[b] = compose(u_a, s)
                    queue.append(b)

    def order(self):
        out = 1
        for level in self.levels:
            out *= len(level.transversal)
        return out

    def contains(self, g):
        residue, _ = self._strip(tuple(g), 0)
        return residue is None


class PermGroup:
    """Group generated by permutations of common degree.

    The generator list is never reduced; orbit computations follow it
    in order, which keeps every derived object reproducible.
    """

    def __init__(self, generators):
        generators = list(generators)
        if not generators:
            raise ValueError("generator list must be nonempty")
        degree = generators[0].degree
        if any(g.degree != degree for g in generators):
            raise ValueError("generators have mixed degrees")
        if degree > DEGREE_CAP:
            raise ValueError(f"degree {degree} exceeds cap {DEGREE_CAP}")
        self.degree = degree
        self.generators = tuple(generators)
        self._chain = None

    @classmethod
    def trivial(cls, degree):
        return cls([Permutation.identity(degree)])

    def _gen_tuples(self):
        return [g.images for g in self.generators]

    def chain(self):
        if self._chain is None:
            self._chain = _StabChain(self._gen_tuples(), self.degree)
        return self._chain

    def order(self):
        return self.chain().order()

    def contains(self, perm):
        if perm.degree != self.degree:
            return False
        return self.chain().contains(perm.images)

    # -- orbits -------------------------------------------------------------

    def orbit(self, seed):
        """Breadth-first orbit of a point or tuple, in discovery order."""
        is_tuple = isinstance(seed, tuple)
        if is_tuple:
            if any(not 0 <= x < self.degree for x in seed):
                raise ValueError("seed out of range")
        elif not 0 <= seed < self.degree:
            raise ValueError("seed out of range")
        gens = self._gen_tuples()
        seen = {seed}
        out = [seed]
        queue = deque([seed])
        while queue:
            a = queue.popleft()
            for g in gens:
                b = tuple(g[x] for x in a) if is_tuple else g[a]
                if b not in seen:
                    seen.add(b)
                    out.append(b)
                    queue.append(b)
        return out

    def orbits(self):
        left = set(range(self.degree))
        out = []
        while left:
            seed = min(left)
            orb = self.orbit(seed)
            out.append(orb)
            left.difference_update(orb)
        return out

    def transporter(self, a, b):
        """Some group element mapping a to b, or None."""
        gens = self.generators
        reach = {a: Permutation.identity(self.degree)}
        queue = deque([a])
        while queue:
            x = queue.popleft()
            if x == b:
                return reach[x]
            for g in gens:
                y = g(x)
                if y not in reach:
                    reach[y] = reach[x] * g
                    queue.append(y)
        return reach.get(b)

    # -- stabilizers and transitivity ----------------------------------------

    def point_stabilizer(self, pt):
        """Stabilizer of a point, generated by deduplicated Schreier generators."""
        if not 0 <= pt < self.degree:
            raise ValueError("point out of range")
        gens = self._gen_tuples()
        ident = identity_tuple(self.degree)
        transversal = {pt: ident}
        order_seen = [pt]
        queue = deque([pt])
        while queue:
            a = queue.popleft()
            u_a = transversal[a]
            for g in gens:
                b = g[a]
                if b not in transversal:
                    transversal[b] = compose(u_a, g)
                    order_seen.append(b)
                    queue.append(b)
        schreier = []
        seen = set()
        for a in order_seen:
            u_a = transversal[a]
            for g in gens:
                sg = compose(compose(u_a, g), invert(transversal[g[a]]))
                if sg not in seen:
                    seen.add(sg)
                    if any(i != j for i, j in enumerate(sg)):
                        schreier.append(Permutation(sg))
        if not schreier:
            return PermGroup.trivial(self.degree)
        return PermGroup(schreier)

    def is_transitive(self):
        return len(self.orbit(0)) == self.degree if self.degree else True

    def is_two_transitive(self):
        """Transitive with a single orbit on ordered pairs of distinct points."""
        n = self.degree
        if n < 2:
            return True
        if not self.is_transitive():
            return False
        gens = self._gen_tuples()
        start = (0, 1)
        seen = {start}
        queue = deque([start])
        while queue:
            a, b = queue.popleft()
            for g in gens:
                nxt = (g[a], g[b])
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
        return len(seen) == n * (n - 1)

    def minimal_block_system(self, a, b):
        """Finest block system whose block containing a also contains b.

        Returns the partition as a sorted tuple of sorted tuples.
        """
        n = self.degree
        gens = self._gen_tuples()
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        classes = n
        stack = [(a, b)]
        while stack and classes > 1:
            x, y = stack.pop()
            rx, ry = find(x), find(y)
            if rx == ry:
                continue
            parent[ry] = rx
            classes -= 1
            for g in gens:
                stack.append((g[rx], g[ry]))
        groups = {}
        for x in range(n):
            groups.setdefault(find(x), []).append(x)
        return tuple(sorted(tuple(sorted(v)) for v in groups.values()))

    def is_primitive(self):
        """No nontrivial block system; requires a transitive group."""
        if not self.is_transitive():
            raise ValueError("primitivity is defined for transitive groups only")
        n = self.degree
        if n <= 2:
            return True
        for beta in range(1, n):
            system = self.minimal_block_system(0, beta)
            if len(system) > 1:
                return False
        return True

    # -- induced actions ------------------------------------------------------

    def induced_action(self, domain):
        """Action on a closed family of points, tuples or frozensets.

        The domain must be closed under every generator; generator order
        is preserved in the result.
        """
        index = {}
        for i, item in enumerate(domain):
            if item in index:
                raise ValueError("domain contains duplicates")
            index[item] = i

        def apply(g, item):
            if isinstance(item, int):
                return g[item]
            if isinstance(item, tuple):
                return tuple(g[x] for x in item)
            if isinstance(item, frozenset):
                return frozenset(g[x] for x in item)
            raise TypeError(f"unsupported domain element {type(item).__name__}")

        new_gens = []
        for gp in self.generators:
            g = gp.images
            images = []
            for item in domain:
                moved = apply(g, item)
                j = index.get(moved)
                if j is None:
                    raise ValueError("domain is not closed under the generators")
                images.append(j)
            new_gens.append(Permutation(images))
        return PermGroup(new_gens)

    def elements(self, limit=None):
        """All group elements by breadth-first closure (small groups only)."""
        ident = Permutation.identity(self.degree)
        seen = {ident.images}
        out = [ident]
        queue = deque([ident])
        while queue:
            g = queue.popleft()
            for s in self.generators:
                h = g * s
                if h.images not in seen:
                    if limit is not None and len(seen) >= limit:
                        raise ValueError(f"group exceeds element limit {limit}")
                    seen.add(h.images)
                    out.append(h)
                    queue.append(h)
        return out

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, ngens={len(self.generators)})"
