"""Finite partially ordered sets over dense bitset relation rows.

Elements are the integer indices 0..n-1, optionally labelled. The order
relation is stored as one Python int per element: bit j of ``rows[i]`` is
set iff i <= j. Derived structure (covers, chain heights, canonical form)
is computed lazily and cached, and instances are treated as immutable
after construction.

Sizes of interest stay small (enumeration stops at 7 unbounded / 9
bounded elements), so every algorithm here favours bitset row operations
over asymptotic cleverness.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import CycleError, NotComparable, UnboundedError


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _close(rows: list[int], n: int) -> list[int]:
    """Reflexive-transitive closure of bitset rows, Warshall style."""
    out = [rows[i] | (1 << i) for i in range(n)]
    for k in range(n):
        bit = 1 << k
        for i in range(n):
            if out[i] & bit:
                out[i] |= out[k]
    return out


def check_partial_order(rows: tuple[int, ...], n: int) -> None:
    """Raise if rows are not a reflexive, antisymmetric, transitive relation."""
    for i in range(n):
        if not rows[i] >> i & 1:
            raise ValueError(f"relation is not reflexive at element {i}")
        for j in _bits(rows[i]):
            if j != i and rows[j] >> i & 1:
                raise CycleError(f"elements {i} and {j} are mutually related")
            if rows[j] & ~rows[i]:
                raise ValueError(f"relation is not transitive at ({i}, {j})")


@dataclass(frozen=True)
class CoverRelation:
    """Transitive reduction of a poset, as a set of (lower, upper) pairs."""

    pairs: frozenset[tuple[int, int]]

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(sorted(self.pairs))

    def __contains__(self, pair) -> bool:
        return pair in self.pairs


class Poset:
    """A finite poset; ``rows[i]`` is the bitset of elements above-or-equal i."""

    def __init__(self, rows, labels=None, *, validate: bool = True):
        rows = tuple(rows)
        n = len(rows)
        if n < 1:
            raise ValueError("a poset needs at least one element")
        full = (1 << n) - 1
        if any(r & ~full or r < 0 for r in rows):
            raise ValueError("relation bits out of range")
        if labels is None:
            labels = tuple(f"x{i}" for i in range(n))
        else:
            labels = tuple(str(name) for name in labels)
            if len(labels) != n:
                raise ValueError("label count must match element count")
            if len(set(labels)) != n:
                raise ValueError("labels must be distinct")
        if validate:
            check_partial_order(rows, n)
        self.n = n
        self.rows = rows
        self.labels = labels

    @classmethod
    def from_relation(cls, n: int, generators, labels=None) -> "Poset":
        """Close generator pairs reflexively and transitively.

        Raises CycleError if the closure relates two distinct elements both
        ways, and IndexError for pairs mentioning elements outside 0..n-1.
        """
        if n < 1:
            raise ValueError("a poset needs at least one element")
        base = [0] * n
        for a, b in generators:
            if not (0 <= a < n and 0 <= b < n):
                raise IndexError(f"pair ({a}, {b}) out of range for {n} elements")
            base[a] |= 1 << b
        rows = tuple(_close(base, n))
        for i in range(n):
            for j in _bits(rows[i]):
                if j != i and rows[j] >> i & 1:
                    raise CycleError(f"closure forces {i} <= {j} <= {i}")
        return cls(rows, labels, validate=False)

    # -- basic queries -------------------------------------------------

    def leq(self, a: int, b: int) -> bool:
        return bool(self.rows[a] >> b & 1)

    def lt(self, a: int, b: int) -> bool:
        return a != b and self.leq(a, b)

    def comparable(self, a: int, b: int) -> bool:
        return self.leq(a, b) or self.leq(b, a)

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows and self.labels == other.labels

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        pairs = sum(r.bit_count() for r in self.rows)
        return f"Poset(n={self.n}, pairs={pairs})"

    # -- derived rows ---------------------------------------------------

    @cached_property
    def strict_rows(self) -> tuple[int, ...]:
        return tuple(self.rows[i] & ~(1 << i) for i in range(self.n))

    @cached_property
    def down_rows(self) -> tuple[int, ...]:
        down = [0] * self.n
        for i in range(self.n):
            for j in _bits(self.rows[i]):
                down[j] |= 1 << i
        return tuple(down)

    @cached_property
    def strict_down_rows(self) -> tuple[int, ...]:
        return tuple(self.down_rows[i] & ~(1 << i) for i in range(self.n))

    @cached_property
    def cover_rows(self) -> tuple[int, ...]:
        # (i, j) is a cover iff i < j with nothing strictly between.
        out = []
        for i in range(self.n):
            mask = 0
            for j in _bits(self.strict_rows[i]):
                if not self.strict_rows[i] & self.strict_down_rows[j]:
                    mask |= 1 << j
            out.append(mask)
        return tuple(out)

    def covers(self) -> CoverRelation:
        """Transitive reduction as (lower, upper) pairs."""
        return CoverRelation(frozenset(
            (i, j) for i in range(self.n) for j in _bits(self.cover_rows[i])))

    # -- chains and heights ----------------------------------------------

    def _chain_heights(self, strict: tuple[int, ...]) -> tuple[int, ...]:
        # Longest chain starting at each element, following `strict` edges.
        # If i relates to j then j's strict set is properly contained in
        # i's, so ascending popcount is a valid evaluation order.
        n = self.n
        heights = [1] * n
        for i in sorted(range(n), key=lambda e: strict[e].bit_count()):
            best = 0
            for j in _bits(strict[i]):
                if heights[j] > best:
                    best = heights[j]
            heights[i] = best + 1
        return tuple(heights)

    @cached_property
    def up_heights(self) -> tuple[int, ...]:
        """up_heights[a]: size of the longest chain inside the up-set of a."""
        return self._chain_heights(self.strict_rows)

    @cached_property
    def down_heights(self) -> tuple[int, ...]:
        """down_heights[a]: size of the longest chain inside the down-set of a."""
        return self._chain_heights(self.strict_down_rows)

    def height(self) -> int:
        """Size of the largest chain."""
        return max(self.up_heights)

    def width(self) -> int:
        """Size of the largest antichain.

        Computed as n minus a maximum matching on the strict-comparability
        bipartite graph (minimum chain cover), via augmenting paths.
        """
        n = self.n
        adj = [tuple(_bits(self.strict_rows[i])) for i in range(n)]
        match_right = [-1] * n

        def augment(i: int, seen: list[bool]) -> bool:
            for j in adj[i]:
                if not seen[j]:
                    seen[j] = True
                    if match_right[j] < 0 or augment(match_right[j], seen):
                        match_right[j] = i
                        return True
            return False

        matched = sum(1 for i in range(n) if augment(i, [False] * n))
        return n - matched

    def maximal_chains(self) -> list[tuple[int, ...]]:
        """All inclusion-maximal chains, each listed bottom to top."""
        chains: list[tuple[int, ...]] = []
        succ = self.cover_rows

        def walk(path: list[int]) -> None:
            nxt = succ[path[-1]]
            if not nxt:
                chains.append(tuple(path))
                return
            for j in _bits(nxt):
                path.append(j)
                walk(path)
                path.pop()

        for start in range(self.n):
            if not self.strict_down_rows[start]:
                walk([start])
        return chains

    def spindle_chains(self) -> list[tuple[int, ...]]:
        """Maximal chains of maximum size."""
        h = self.height()
        return [c for c in self.maximal_chains() if len(c) == h]

    def spindle_elements(self) -> tuple[int, ...]:
        """Elements lying on some maximum-size chain."""
        h = self.height()
        return tuple(a for a in range(self.n)
                     if self.up_heights[a] + self.down_heights[a] - 1 == h)

    def spindle_length(self, a: int) -> int:
        """Size of the longest chain through a."""
        return self.up_heights[a] + self.down_heights[a] - 1

    # -- bounds, duality, shape ------------------------------------------

    @cached_property
    def bottom(self) -> int | None:
        full = (1 << self.n) - 1
        for i in range(self.n):
            if self.rows[i] == full:
                return i
        return None

    @cached_property
    def top(self) -> int | None:
        full = (1 << self.n) - 1
        for i in range(self.n):
            if self.down_rows[i] == full:
                return i
        return None

    def is_bounded(self) -> bool:
        return self.bottom is not None and self.top is not None

    def is_chain(self) -> bool:
        full = (1 << self.n) - 1
        return all(self.rows[i] | self.down_rows[i] == full for i in range(self.n))

    def is_graded(self) -> bool:
        """True iff chain distance from the top decrements along every cover.

        Uses the labelling rho(a) = up_heights[a] - 1 (so rho(top) = 0) and
        checks rho(a) = rho(b) + 1 for every cover a < b. On bounded posets
        this is equivalent to all maximal chains having equal size.
        """
        if self.top is None:
            raise UnboundedError("gradedness needs a top element")
        rho = [h - 1 for h in self.up_heights]
        return all(rho[i] == rho[j] + 1
                   for i in range(self.n) for j in _bits(self.cover_rows[i]))

    def add_bounds(self) -> "Poset":
        """Adjoin a fresh bottom and top, even if the poset is already bounded."""
        n = self.n
        top = n + 1
        full = (1 << (n + 2)) - 1
        rows = [self.rows[i] | (1 << top) for i in range(n)]
        rows.append(full)       # new bottom, below everything
        rows.append(1 << top)   # new top, above nothing
        labels = list(self.labels)
        for base in ("BOT", "TOP"):
            name = base
            while name in labels:
                name += "_"
            labels.append(name)
        # construction preserves the poset axioms
        return Poset(rows, labels, validate=False)

    def dual(self) -> "Poset":
        """The same elements with the order reversed."""
        return Poset(self.down_rows, self.labels, validate=False)

    # -- subset views ------------------------------------------------------

    def upset(self, a: int) -> "SubsetView":
        return SubsetView(self, tuple(_bits(self.rows[a])))

    def downset(self, a: int) -> "SubsetView":
        return SubsetView(self, tuple(_bits(self.down_rows[a])))

    def hourglass(self, a: int) -> "SubsetView":
        """Everything comparable to a (union of its up-set and down-set)."""
        return SubsetView(self, tuple(_bits(self.rows[a] | self.down_rows[a])))

    def interval(self, a: int, b: int) -> "SubsetView":
        """Elements between a and b; requires a <= b."""
        if not self.leq(a, b):
            raise NotComparable(
                f"{self.labels[a]!r} is not below {self.labels[b]!r}")
        return SubsetView(self, tuple(_bits(self.rows[a] & self.down_rows[b])))

    def comparability_graph(self) -> frozenset[tuple[int, int]]:
        """Undirected edges between distinct comparable elements."""
        return frozenset((i, j)
                         for i in range(self.n) for j in range(i + 1, self.n)
                         if self.comparable(i, j))

    # -- isomorphism --------------------------------------------------------

    @cached_property
    def _groups(self) -> list[int]:
        # Iterated invariant refinement; group ids are relabelling-invariant.
        n = self.n
        cover_in = [0] * n
        for i in range(n):
            for j in _bits(self.cover_rows[i]):
                cover_in[j] += 1
        sig: list = [(self.up_heights[i], self.down_heights[i],
                      self.strict_rows[i].bit_count(),
                      self.strict_down_rows[i].bit_count(),
                      self.cover_rows[i].bit_count(), cover_in[i])
                     for i in range(n)]
        while True:
            ranks = {s: r for r, s in enumerate(sorted(set(sig)))}
            group = [ranks[sig[i]] for i in range(n)]
            nxt = [(group[i],
                    tuple(sorted(group[j] for j in _bits(self.strict_rows[i]))),
                    tuple(sorted(group[j] for j in _bits(self.strict_down_rows[i]))))
                   for i in range(n)]
            if len(set(nxt)) == len(set(sig)):
                return group
            sig = nxt

    @cached_property
    def _canonical(self) -> tuple[int, tuple[int, ...]]:
        n = self.n
        group = self._groups
        members: dict[int, list[int]] = {}
        for e in range(n):
            members.setdefault(group[e], []).append(e)
        slots = [members[g] for g in sorted(members)]
        pos_group: list[int] = []
        for gi, els in enumerate(slots):
            pos_group.extend([gi] * len(els))

        rows = self.rows
        used = [False] * n
        placed: list[int] = []
        codes: list[int] = []
        best_codes: list[int] | None = None
        best_perm: list[int] | None = None

        def dfs(t: int) -> None:
            nonlocal best_codes, best_perm
            if t == n:
                if best_codes is None or codes < best_codes:
                    best_codes = codes.copy()
                    best_perm = placed.copy()
                return
            cands = []
            for e in slots[pos_group[t]]:
                if not used[e]:
                    c = 0
                    for s in placed:
                        c = (c << 2) | (rows[e] >> s & 1) | ((rows[s] >> e & 1) << 1)
                    cands.append((c, e))
            cands.sort()
            seen = set()
            for c, e in cands:
                # interchangeable twins explore identical subtrees
                twin_key = (c, self.strict_rows[e], self.strict_down_rows[e])
                if twin_key in seen:
                    continue
                seen.add(twin_key)
                codes.append(c)
                if best_codes is not None and codes > best_codes[:t + 1]:
                    codes.pop()
                    break  # candidates are sorted; the rest are no better
                used[e] = True
                placed.append(e)
                dfs(t + 1)
                placed.pop()
                used[e] = False
                codes.pop()

        dfs(0)
        assert best_perm is not None
        newpos = [0] * n
        for t, e in enumerate(best_perm):
            newpos[e] = t
        out = [0] * n
        for t, e in enumerate(best_perm):
            m = 0
            for j in _bits(rows[e]):
                m |= 1 << newpos[j]
            out[t] = m
        return (n, tuple(out))

    def canonical_form(self) -> tuple[int, tuple[int, ...]]:
        """A relabelling-invariant encoding of the relation.

        Equal across isomorphic posets and distinct otherwise. Intended for
        the small sizes this package works at (roughly n <= 12).
        """
        return self._canonical

    def is_isomorphic(self, other: "Poset") -> bool:
        return self.n == other.n and self.canonical_form() == other.canonical_form()


@dataclass(frozen=True)
class SubsetView:
    """A subset of a poset's elements carrying the restricted order."""

    parent: Poset
    members: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(sorted(set(self.members))))

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, element: int) -> bool:
        return element in self.members

    def element_set(self) -> frozenset[int]:
        return frozenset(self.members)

    def height(self) -> int:
        """Size of the largest chain inside the subset."""
        mask = 0
        for e in self.members:
            mask |= 1 << e
        strict = {e: self.parent.strict_rows[e] & mask for e in self.members}
        heights: dict[int, int] = {}
        for e in sorted(self.members, key=lambda x: strict[x].bit_count()):
            heights[e] = 1 + max((heights[j] for j in _bits(strict[e])), default=0)
        return max(heights.values(), default=0)

    def as_poset(self) -> Poset:
        """The induced subposet, elements renumbered in member order."""
        idx = {e: i for i, e in enumerate(self.members)}
        rows = []
        for e in self.members:
            m = 0
            for j in _bits(self.parent.rows[e]):
                if j in idx:
                    m |= 1 << idx[j]
            rows.append(m)
        labels = tuple(self.parent.labels[e] for e in self.members)
        return Poset(rows, labels, validate=False)
