"""MRC array by equivalence-class refinement, with no suffix array.

Positions are grouped by the length-``k`` substring starting there, for
``k = 1, 2, ...``. Classes are refined from level ``k`` to ``k + 1`` using
only the *small* classes of each family (every class but the largest one
produced by splitting the same parent), so each position is touched
O(log n) times.

Whenever two neighbouring members ``a < b`` of a level-``k`` class stop
being equivalent at level ``k + 1``, ``w[a..b+k-1]`` is a maximal
right-closed substring with border length ``k``. Only classes that lose
members can separate neighbours, so it suffices to look at the two
neighbours of every position that moves.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import MrcArray, TextLike, as_symbols, as_text
from .mrc_salcp import assemble

_NONE = -1


@dataclass
class PartitionLevel:
    """Classes of the relation "same length-``k`` substring starts here".

    ``classes`` are sorted lists of 1-based positions; ``small`` holds the
    indices (into ``classes``) of the small classes at this level.
    """

    text: bytes
    k: int
    classes: list[list[int]]
    small: list[int] = field(default_factory=list)

    @classmethod
    def initial(cls, text: TextLike) -> "PartitionLevel":
        """Level 1: one class per symbol, all of them small."""
        w = as_text(text)
        groups: dict[int, list[int]] = {}
        for p, c in enumerate(w, 1):
            groups.setdefault(c, []).append(p)
        classes = [groups[c] for c in sorted(groups)]
        return cls(w, 1, classes, list(range(len(classes))))

    def class_of(self) -> dict[int, int]:
        return {p: c for c, members in enumerate(self.classes) for p in members}

    def as_sets(self) -> set[frozenset[int]]:
        return {frozenset(c) for c in self.classes}


def refine(level: PartitionLevel) -> PartitionLevel:
    """Classes at level ``k + 1``, splitting only along small level-``k`` classes.

    Positions whose length-``k + 1`` substring would run past the end are
    dropped. Moved positions form new classes keyed by (old class, small
    class); in each family the largest class is the non-small one.
    """
    w, k = level.text, level.k
    n = len(w)
    owner = level.class_of()
    members = [list(c) for c in level.classes]
    moved_into: dict[tuple[int, int], list[int]] = {}
    for s in level.small:
        for i in level.classes[s]:
            p = i - 1
            if p in owner:
                moved_into.setdefault((owner[p], s), []).append(p)
    moved = {p for ps in moved_into.values() for p in ps}
    for c in range(len(members)):
        members[c] = [p for p in members[c] if p not in moved and p + k <= n]

    families: dict[int, list[int]] = {}
    new_classes: list[list[int]] = []
    for c, m in enumerate(members):
        if m:
            families.setdefault(c, []).append(len(new_classes))
            new_classes.append(m)
    split: set[int] = set()
    for (c, _s), ps in sorted(moved_into.items()):
        families.setdefault(c, []).append(len(new_classes))
        new_classes.append(sorted(ps))
        split.add(c)
    small: list[int] = []
    for c in sorted(split):
        fam = families[c]
        big = max(fam, key=lambda t: len(new_classes[t]))
        small.extend(t for t in fam if t != big)
    return PartitionLevel(w, k + 1, new_classes, sorted(small))


def compute_mrc_partition(text: TextLike, stats: dict | None = None) -> MrcArray:
    """MRC array of ``text`` by partition refinement.

    Class members live in doubly linked lists (``nxt``/``prv`` per position,
    ``head``/``tail``/``size`` per class id) so moving a position and asking
    for its neighbours are O(1). Class ids are recycled, so every auxiliary
    array has at most ``n`` slots. ``stamp[p] == k`` records that the pair
    ``(p, next(p))`` was already examined at level ``k``.

    When ``stats`` is a dict it receives ``touched`` (positions visited by
    refinement), ``levels``, ``aux_arrays`` and ``aux_max_len``.
    """
    text = as_symbols(text)
    w = text.tolist() if hasattr(text, "tolist") else text
    n = len(w)
    xs: list[int] = []
    rs: list[int] = []
    bs: list[int] = []
    if n == 0:
        if stats is not None:
            stats.update(touched=0, levels=0, aux_arrays=0, aux_max_len=0)
        return MrcArray([])

    cls = [_NONE] * n
    nxt = [_NONE] * n
    prv = [_NONE] * n
    stamp = [0] * n
    head = [_NONE] * n
    tail = [_NONE] * n
    size = [0] * n
    free: list[int] = []
    n_ids = 0

    by_symbol: dict[int, int] = {}
    for p, c in enumerate(w):
        cid = by_symbol.get(c)
        if cid is None:
            cid = by_symbol[c] = n_ids
            n_ids += 1
            head[cid] = p
        else:
            t = tail[cid]
            nxt[t] = p
            prv[p] = t
        tail[cid] = p
        size[cid] += 1
        cls[p] = cid
    small = list(range(n_ids))
    free = list(range(n - 1, n_ids - 1, -1))
    multi = sum(1 for cid in small if size[cid] > 1)

    touched = 0
    levels = 0
    k = 1
    # a class can split with no small class at all: the last position drops out
    while multi:
        levels += 1
        # which positions leave their class, and for which small class
        moves: list[tuple[int, int]] = []
        for s in small:
            i = head[s]
            while i != _NONE:
                touched += 1
                if i:
                    moves.append((i - 1, s))
                i = nxt[i]
        drop = n - k
        if cls[drop] == _NONE:
            drop = _NONE
        else:
            touched += 1

        # register neighbour pairs while links still describe level k
        leaving = [p for p, _ in moves]
        if drop != _NONE:
            leaving.append(drop)
        for p in leaving:
            a = prv[p]
            if a != _NONE and stamp[a] != k:
                if p + k >= n or w[a + k] != w[p + k]:
                    xs.append(a + 1)
                    rs.append(p + k - a)
                    bs.append(k)
                stamp[a] = k
            b = nxt[p]
            if b != _NONE and stamp[p] != k:
                if b + k >= n or w[p + k] != w[b + k]:
                    xs.append(p + 1)
                    rs.append(b + k - p)
                    bs.append(k)
                stamp[p] = k

        # apply the moves
        children: dict[int, list[int]] = {}
        emptied: set[int] = set()
        target: dict[int, int] = {}
        current_s = _NONE
        for p, s in moves:
            if s != current_s:
                target.clear()
                current_s = s
            c = cls[p]
            # unlink p from c
            a, b = prv[p], nxt[p]
            if a == _NONE:
                head[c] = b
            else:
                nxt[a] = b
            if b == _NONE:
                tail[c] = a
            else:
                prv[b] = a
            size[c] -= 1
            if size[c] == 1:
                multi -= 1
            elif size[c] == 0:
                emptied.add(c)
                free.append(c)
            # append p to the class (c, s) of level k + 1
            d = target.get(c)
            if d is None:
                d = free.pop()
                target[c] = d
                children.setdefault(c, []).append(d)
                head[d] = p
                prv[p] = _NONE
                size[d] = 0
            else:
                t = tail[d]
                nxt[t] = p
                prv[p] = t
            nxt[p] = _NONE
            tail[d] = p
            size[d] += 1
            if size[d] == 2:
                multi += 1
            cls[p] = d
        if drop != _NONE:
            c = cls[drop]
            a = prv[drop]
            # drop is the last position of its class
            if a == _NONE:
                head[c] = _NONE
            else:
                nxt[a] = _NONE
            tail[c] = a
            size[c] -= 1
            if size[c] == 1:
                multi -= 1
            elif size[c] == 0:
                emptied.add(c)
                free.append(c)
            cls[drop] = _NONE
            prv[drop] = nxt[drop] = _NONE

        small = []
        for c, kids in children.items():
            family = kids if c in emptied else [c, *kids]
            big = max(family, key=size.__getitem__)
            small.extend(d for d in family if d != big)
        k += 1

    mrc, disorder = assemble(text, xs, rs, bs, "increasing")
    if disorder:
        raise AssertionError(f"entries of {disorder} starts discovered out of order")
    if stats is not None:
        stats.update(
            touched=touched,
            levels=levels,
            aux_arrays=7,
            aux_max_len=max(len(cls), len(head)),
        )
    return mrc
