"""Interval-valued rank functions and the rank-operator iteration.

The standard rank of an element a in a bounded poset of height h is the
interval [up_heights[a] - 1, h - down_heights[a]]: how far a can sit from
the top along chains through it. The conjugate rank stretches the lower
end downward instead: [up_heights[a] - 1, h + down_heights[a] - 2]. Both
collapse to a point exactly on elements of maximum-size chains.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import CapExceeded, RangeError, TooSmall, UnboundedError
from .intervals import IntInterval, IntervalOrder
from .poset import Poset


@dataclass(frozen=True)
class RankAssignment:
    """An interval per element of a poset, with the declared endpoint bound."""

    poset: Poset
    ranks: tuple[IntInterval, ...]
    bound: int

    def __getitem__(self, element: int) -> IntInterval:
        return self.ranks[element]


def _require_rankable(p: Poset) -> None:
    if p.n < 2:
        raise TooSmall("rank operators need at least two elements")
    if not p.is_bounded():
        raise UnboundedError("rank operators need a bottom and a top element")


def standard_rank(p: Poset) -> RankAssignment:
    """Assign [up_heights[a]-1, height - down_heights[a]] to each element."""
    _require_rankable(p)
    h = p.height()
    ranks = tuple(IntInterval(p.up_heights[a] - 1, h - p.down_heights[a])
                  for a in range(p.n))
    return RankAssignment(p, ranks, h - 1)


def conjugate_rank(p: Poset) -> RankAssignment:
    """Assign [up_heights[a]-1, height + down_heights[a] - 2] to each element."""
    _require_rankable(p)
    h = p.height()
    ranks = tuple(IntInterval(p.up_heights[a] - 1, h + p.down_heights[a] - 2)
                  for a in range(p.n))
    return RankAssignment(p, ranks, 2 * (h - 1))


def _strict_pairs(p: Poset):
    for a in range(p.n):
        for b in range(p.n):
            if a != b and p.leq(a, b):
                yield a, b


def classify_rank_function(f: RankAssignment) -> IntervalOrder | None:
    """Which interval order an assignment is strictly monotone into.

    Checks the two endpoint maps over every related pair: both strictly
    antitone means dual-weak, both strictly isotone means weak, lo antitone
    with hi isotone means subset, the reverse means superset; anything else
    returns None. With no related pairs all four hold vacuously and the
    first match (dual-weak) is reported.
    """
    pairs = list(_strict_pairs(f.poset))
    r = f.ranks
    lo_iso = all(r[a].lo < r[b].lo for a, b in pairs)
    lo_anti = all(r[a].lo > r[b].lo for a, b in pairs)
    hi_iso = all(r[a].hi < r[b].hi for a, b in pairs)
    hi_anti = all(r[a].hi > r[b].hi for a, b in pairs)
    if lo_anti and hi_anti:
        return IntervalOrder.DUAL_WEAK
    if lo_iso and hi_iso:
        return IntervalOrder.WEAK
    if lo_anti and hi_iso:
        return IntervalOrder.SUBSET
    if lo_iso and hi_anti:
        return IntervalOrder.SUPERSET
    return None


def is_interval_rank_function(f: RankAssignment, order: IntervalOrder | str) -> bool:
    """True iff a < b always maps to f(a) strictly below f(b) in the order."""
    if not isinstance(order, IntervalOrder):
        order = IntervalOrder(order)
    return all(order.lt(f.ranks[a], f.ranks[b]) for a, b in _strict_pairs(f.poset))


@dataclass(frozen=True)
class RankPoset:
    """Homomorphic image of a poset under an interval rank operator.

    `intervals` lists the distinct rank values in a fixed linear extension
    of the image order (image bottom first); `order` is the poset they
    form; `blocks[i]` are the source elements whose rank is intervals[i].
    """

    intervals: tuple[IntInterval, ...]
    order: Poset
    blocks: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.intervals)

    def is_chain(self) -> bool:
        return self.order.is_chain()

    def block_index(self, element: int) -> int:
        for i, blk in enumerate(self.blocks):
            if element in blk:
                return i
        raise LookupError(f"element {element} not in any block")


def _image(p: Poset, ranks: tuple[IntInterval, ...], order: IntervalOrder,
           sort_key) -> RankPoset:
    distinct = sorted(set(ranks), key=sort_key)
    rows = []
    for x in distinct:
        m = 0
        for j, y in enumerate(distinct):
            if order.leq(x, y):
                m |= 1 << j
        rows.append(m)
    blocks = tuple(tuple(a for a in range(p.n) if ranks[a] == iv)
                   for iv in distinct)
    image = Poset(rows, tuple(str(iv) for iv in distinct))
    return RankPoset(tuple(distinct), image, blocks)


def rank_image(p: Poset) -> RankPoset:
    """Collapse elements sharing a standard rank; order images dual-weakly.

    The interval list is sorted descending by (lo, hi), a linear extension
    of the image order that starts at the image of the bottom element.
    """
    ra = standard_rank(p)
    return _image(p, ra.ranks, IntervalOrder.DUAL_WEAK,
                  lambda iv: (-iv.lo, -iv.hi))


def conjugate_image(p: Poset) -> RankPoset:
    """Collapse elements sharing a conjugate rank; order images by containment."""
    ra = conjugate_rank(p)
    return _image(p, ra.ranks, IntervalOrder.SUBSET,
                  lambda iv: (-iv.lo, iv.hi))


def rank_all(p: Poset) -> Poset:
    """Extend p's order by comparing all standard ranks, collapsing nothing.

    a < b in the result iff the standard rank of a strictly dominates the
    standard rank of b in both endpoints-at-least senses (dual-weak).
    Labels are preserved; the result always extends the original order.
    """
    ra = standard_rank(p)
    rows = []
    for a in range(p.n):
        m = 1 << a
        for b in range(p.n):
            if a != b and IntervalOrder.DUAL_WEAK.lt(ra.ranks[a], ra.ranks[b]):
                m |= 1 << b
        rows.append(m)
    return Poset(rows, p.labels)


def phi(x: IntInterval, h: int) -> IntInterval:
    """Reflect a standard-rank interval into conjugate-rank coordinates.

    [lo, hi] maps to [lo, 2(h-1) - hi] for a poset of height h. Raises
    RangeError when the reflected upper end falls below lo.
    """
    top = 2 * (h - 1) - x.hi
    if top < x.lo:
        raise RangeError(f"phi({x}, {h}) would produce the empty interval")
    return IntInterval(x.lo, top)


@dataclass(frozen=True)
class IterationTrace:
    """The stages of repeatedly applying rank_image until a chain appears."""

    poset: Poset
    stages: tuple[RankPoset, ...]
    iterations_to_chain: int
    preorder_levels: tuple[tuple[int, ...], ...]


def _chain_top_first(chain: Poset) -> list[int]:
    # In a chain, up-set chain heights are 1..n from the top down.
    return sorted(range(chain.n), key=lambda i: chain.up_heights[i])


def iterate_to_chain(p: Poset) -> IterationTrace:
    """Apply rank_image until the image is a chain.

    A chain input takes zero iterations. Each stage re-ranks the previous
    image purely structurally; original elements are tracked through block
    membership, and the levels of the final chain (top first) give the
    induced total preorder on p. The iteration count is capped at |p|;
    hitting the cap raises CapExceeded.
    """
    _require_rankable(p)
    stages: list[RankPoset] = []
    block_map = list(range(p.n))
    current = p
    while not current.is_chain():
        if len(stages) >= p.n:
            raise CapExceeded(f"no chain after {p.n} iterations")
        rp = rank_image(current)
        stages.append(rp)
        owner: dict[int, int] = {}
        for bi, blk in enumerate(rp.blocks):
            for e in blk:
                owner[e] = bi
        block_map = [owner[x] for x in block_map]
        current = rp.order
    levels = tuple(tuple(a for a in range(p.n) if block_map[a] == lvl)
                   for lvl in _chain_top_first(current))
    return IterationTrace(p, tuple(stages), len(stages), levels)


def total_preorder(p: Poset) -> tuple[tuple[int, ...], ...]:
    """Blocks of the total preorder induced by rank iteration, top first."""
    return iterate_to_chain(p).preorder_levels


def average_rank_width(p: Poset) -> Fraction:
    """Mean standard-rank interval width, exact."""
    ra = standard_rank(p)
    return Fraction(sum(iv.width() for iv in ra.ranks), p.n)
