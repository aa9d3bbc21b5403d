"""Exhaustive and random poset generation.

Random models draw from stdlib ``random.Random`` (Mersenne Twister), whose
seeded streams are stable across CPython versions; a corpus derives the
seed of its i-th poset as ``seed + i`` so corpora are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

import random

from .errors import BudgetExceeded
from .poset import Poset, _bits

ENUM_MAX_FREE = 7
ENUM_MAX_BOUNDED = 9

MODELS = ("exhaustive", "random-graph", "random-kdim")


@dataclass(frozen=True)
class GenConfig:
    """Parameters for one generated poset."""

    model: str
    n: int
    p: float = 0.5
    k: int = 3
    seed: int = 0
    add_bounds: bool = True

    def __post_init__(self):
        if self.model not in MODELS:
            raise ValueError(f"unknown model {self.model!r}")
        if self.n < 1:
            raise ValueError("n must be positive")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError("p must lie in [0, 1]")
        if self.k < 1:
            raise ValueError("k must be positive")


def _order_ideals(q: Poset):
    # A subset is an order ideal iff it equals the union of its down-sets.
    down = q.down_rows
    for mask in range(1 << q.n):
        union = 0
        for e in _bits(mask):
            union |= down[e]
        if union == mask:
            yield mask


def _extend_with_maximal(q: Poset, ideal: int) -> Poset:
    # Append one new maximal element sitting above exactly `ideal`.
    new = q.n
    rows = [q.rows[e] | (1 << new) if ideal >> e & 1 else q.rows[e]
            for e in range(q.n)]
    rows.append(1 << new)
    return Poset(rows)


def enumerate_posets(n: int) -> list[Poset]:
    """All posets on n elements, one representative per isomorphism class.

    Grown level by level: every poset arises from deleting a maximal
    element, so extending each (n-1)-element representative by a new
    maximal element above each order ideal reaches every class; duplicates
    are removed through canonical forms. Budget stops at n = 7.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > ENUM_MAX_FREE:
        raise BudgetExceeded(f"enumeration supports up to {ENUM_MAX_FREE} elements")
    level = {Poset((1,)).canonical_form(): Poset((1,))}
    for _ in range(n - 1):
        grown: dict[tuple, Poset] = {}
        for q in level.values():
            for ideal in _order_ideals(q):
                cand = _extend_with_maximal(q, ideal)
                key = cand.canonical_form()
                if key not in grown:
                    grown[key] = cand
        level = grown
    return [level[key] for key in sorted(level)]


def enumerate_bounded_posets(size: int) -> list[Poset]:
    """All bounded posets of the given size, up to isomorphism.

    Representatives are the free posets on size-2 elements with fresh
    bounds adjoined; distinct cores stay distinct after bounding because
    the added bottom and top are recoverable as the unique extremes.
    """
    if size < 3:
        raise ValueError("bounded enumeration starts at size 3")
    if size > ENUM_MAX_BOUNDED:
        raise BudgetExceeded(
            f"bounded enumeration supports up to size {ENUM_MAX_BOUNDED}")
    return [q.add_bounds() for q in enumerate_posets(size - 2)]


def random_graph_poset(cfg: GenConfig) -> Poset:
    """Transitive closure of an Erdos-Renyi graph oriented small-to-large.

    Each unordered pair {i, j} with i < j becomes the relation i <= j with
    probability cfg.p, independently; the closure of the result is already
    antisymmetric because edges always point upward in index order.
    """
    if cfg.model != "random-graph":
        raise ValueError("config is not for the random-graph model")
    rng = random.Random(cfg.seed)
    n = cfg.n
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)
             if rng.random() < cfg.p]
    p = Poset.from_relation(n, pairs)
    return p.add_bounds() if cfg.add_bounds else p


def random_kdim_poset(cfg: GenConfig) -> Poset:
    """Intersection of cfg.k uniformly random total orders on n elements."""
    if cfg.model != "random-kdim":
        raise ValueError("config is not for the random-kdim model")
    rng = random.Random(cfg.seed)
    n = cfg.n
    positions = []
    for _ in range(cfg.k):
        perm = list(range(n))
        rng.shuffle(perm)
        pos = [0] * n
        for where, v in enumerate(perm):
            pos[v] = where
        positions.append(pos)
    rows = []
    for i in range(n):
        m = 0
        for j in range(n):
            if all(pos[i] <= pos[j] for pos in positions):
                m |= 1 << j
        rows.append(m)
    p = Poset(rows)
    return p.add_bounds() if cfg.add_bounds else p


def generate(cfg: GenConfig) -> Poset:
    """Dispatch a single-poset model; exhaustive mode is not single-poset."""
    if cfg.model == "random-graph":
        return random_graph_poset(cfg)
    if cfg.model == "random-kdim":
        return random_kdim_poset(cfg)
    raise ValueError("use enumerate_posets/enumerate_bounded_posets for exhaustive")


def random_corpus(model: str, sizes, count: int, *, p: float = 0.5, k: int = 3,
                  seed: int = 0, add_bounds: bool = True) -> list[Poset]:
    """`count` posets per core size, seeds running seed, seed+1, ..."""
    out = []
    index = 0
    for n in sizes:
        for _ in range(count):
            cfg = GenConfig(model=model, n=n, p=p, k=k,
                            seed=seed + index, add_bounds=add_bounds)
            out.append(generate(cfg))
            index += 1
    return out
