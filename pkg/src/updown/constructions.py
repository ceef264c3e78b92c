"""Products, univalent quotients, weighted-poset export and universal covers."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import reduce
from typing import Callable, Mapping, NamedTuple

from .core import ZERO, CoverEdge, ObjectId, ObjectRecord, UpdownTable, classify, ext_mult, ext_row
from .errors import BudgetExceeded, NotUnivalent, OrderExceedsTable, PreconditionFailed, RankOutOfRange


def _pair_label(a: str, b: str) -> str:
    return f"({a},{b})"


def product(
    c: UpdownTable,
    d: UpdownTable,
    join: Callable[[str, str], str] = _pair_label,
    name: str | None = None,
) -> UpdownTable:
    """Cartesian product, ranked by the sum of ranks.

    A truncated factor limits the product to its own max rank; a complete
    factor does not limit it at all.
    """
    if c.complete and d.complete:
        top, complete = c.max_rank + d.max_rank, True
    elif c.complete:
        top, complete = d.max_rank, False
    elif d.complete:
        top, complete = c.max_rank, False
    else:
        top, complete = min(c.max_rank, d.max_rank), False

    index: dict[tuple[ObjectId, ObjectId], ObjectId] = {}
    ranks: list[list[ObjectRecord]] = []
    for n in range(top + 1):
        row: list[ObjectRecord] = []
        for i in range(max(0, n - d.max_rank), min(n, c.max_rank) + 1):
            for a in c.objects(i):
                for b in d.objects(n - i):
                    oid = ObjectId(n, len(row))
                    index[(a, b)] = oid
                    row.append(ObjectRecord(oid, join(c.label(a), d.label(b)), c.aut(a) * d.aut(b)))
        ranks.append(row)

    edges: dict[tuple[ObjectId, ObjectId], CoverEdge] = {}
    for (a, b), src in index.items():
        if src.rank >= top and not complete:
            continue
        for e in c.covers(a):
            dst = index.get((e.dst, b))
            if dst is not None:
                edges[(src, dst)] = CoverEdge(src, dst, e.hom_size * d.aut(b), e.u, e.d)
        for e in d.covers(b):
            dst = index.get((a, e.dst))
            if dst is not None:
                edges[(src, dst)] = CoverEdge(src, dst, c.aut(a) * e.hom_size, e.u, e.d)
    return UpdownTable(name or f"{c.name}x{d.name}", ranks, edges, complete=complete)


def power(table: UpdownTable, n: int, name: str | None = None) -> UpdownTable:
    """``n``-fold product with flat comma-separated labels."""
    if n < 1:
        raise ValueError("power needs n >= 1")
    out = reduce(lambda acc, _: product(acc, table, join=lambda a, b: f"{a},{b}"), range(n - 1), table)
    return relabel(out, lambda p, lbl: f"({lbl})", name=name or f"{table.name}^{n}")


def relabel(
    table: UpdownTable, fn: Callable[[ObjectId, str], str], name: str | None = None
) -> UpdownTable:
    ranks = [[ObjectRecord(r.id, fn(r.id, r.label), r.aut_order) for r in row] for row in table.ranks]
    return UpdownTable(name or table.name, ranks, table.edges, complete=table.complete)


def _quotient(table: UpdownTable, which: str) -> UpdownTable:
    ranks = [[ObjectRecord(r.id, r.label, 1) for r in row] for row in table.ranks]
    edges = {}
    for key, e in table.edges.items():
        w = e.u if which == "up" else e.d
        edges[key] = CoverEdge(e.src, e.dst, w, w, w)
    return UpdownTable(f"{table.name}^{which}", ranks, edges, complete=table.complete)


def _is_univalent(table: UpdownTable) -> bool:
    return all(r.aut_order == 1 for row in table.ranks for r in row)


def up_quotient(table: UpdownTable) -> UpdownTable:
    """Univalent category with covering hom-sets of size ``u(p;q)``."""
    return table if _is_univalent(table) else _quotient(table, "up")


def dn_quotient(table: UpdownTable) -> UpdownTable:
    """Univalent category with covering hom-sets of size ``d(p;q)``."""
    return table if _is_univalent(table) else _quotient(table, "dn")


# -- weighted-relation posets ----------------------------------------------------------


@dataclass(frozen=True)
class WeightedPoset:
    table: UpdownTable
    covers: Mapping[tuple[ObjectId, ObjectId], int]

    @property
    def objects(self) -> list[tuple[ObjectId, str]]:
        return [(p, self.table.label(p)) for p in self.table.objects()]

    def weight(self, x: ObjectId, y: ObjectId) -> int:
        """``n(x,y)``: zero unless ``x <= y``; one on the diagonal."""
        if x.rank > y.rank:
            return 0
        return ext_mult(self.table, x, y)[0]

    def leq(self, x: ObjectId, y: ObjectId) -> bool:
        return self.weight(x, y) != 0

    def relation(self) -> dict[tuple[ObjectId, ObjectId], int]:
        """All comparable pairs with their weights."""
        out = {}
        for x in self.table.objects():
            for y, (u, _) in sorted(ext_row(self.table, x).items()):
                out[(x, y)] = u
        return out

    def to_dict(self, full_order: bool = False) -> dict:
        doc = {
            "name": self.table.name,
            "objects": [[p.rank, p.index, lbl] for p, lbl in self.objects],
            "covers": [[list(x), list(y), w] for (x, y), w in sorted(self.covers.items())],
        }
        if full_order:
            doc["order"] = [[list(x), list(y), w] for (x, y), w in sorted(self.relation().items())]
        return doc


def wrp_export(table: UpdownTable) -> WeightedPoset:
    if not _is_univalent(table):
        raise NotUnivalent(f"{table.name} has nontrivial automorphisms; take a quotient first")
    return WeightedPoset(table, {k: e.hom_size for k, e in table.edges.items()})


# -- universal cover -------------------------------------------------------------------


class CoverPath(NamedTuple):
    """Chain of covering steps ``(object reached, morphism index)`` from rank 1 up."""

    steps: tuple[tuple[ObjectId, int], ...]

    @property
    def rank(self) -> int:
        return len(self.steps)

    def target(self) -> ObjectId:
        return self.steps[-1][0] if self.steps else ZERO


@dataclass(frozen=True)
class CoverTable:
    cover: UpdownTable
    base: UpdownTable
    projection: Mapping[ObjectId, ObjectId]
    # (parent in the cover, morphism index) for every non-root cover object
    _links: Mapping[ObjectId, tuple[ObjectId, int]] = field(repr=False)

    @property
    def depth(self) -> int:
        return self.cover.max_rank

    def path(self, x: ObjectId) -> CoverPath:
        steps = []
        while x.rank > 0:
            parent, m = self._links[x]
            steps.append((self.projection[x], m))
            x = parent
        return CoverPath(tuple(reversed(steps)))

    @property
    def paths(self) -> dict[ObjectId, CoverPath]:
        return {x: self.path(x) for x in self.cover.objects()}

    def level_sizes(self) -> list[int]:
        return [self.cover.rank_size(n) for n in range(self.depth + 1)]

    def fibers(self) -> Counter:
        return Counter(self.projection.values())


def universal_cover(table: UpdownTable, up_to_rank: int, budget: int | None = None) -> CoverTable:
    """Strings of covering morphisms, one cover object per string.

    Level ``n+1`` is grown from level ``n`` in the order (parent, edge,
    morphism index), so the result is deterministic.
    """
    if not _is_univalent(table):
        raise NotUnivalent(f"{table.name} is not univalent; cover its up or down quotient")
    if up_to_rank > table.max_rank:
        raise OrderExceedsTable(f"cover depth {up_to_rank} exceeds max rank {table.max_rank} of {table.name}")

    ranks: list[list[ObjectRecord]] = [[ObjectRecord(ZERO, "()", 1)]]
    projection: dict[ObjectId, ObjectId] = {ZERO: ZERO}
    links: dict[ObjectId, tuple[ObjectId, int]] = {}
    edges: dict[tuple[ObjectId, ObjectId], CoverEdge] = {}
    labels = {ZERO: ""}
    total = 1
    for n in range(1, up_to_rank + 1):
        row: list[ObjectRecord] = []
        for parent in (ObjectId(n - 1, i) for i in range(len(ranks[n - 1]))):
            base_p = projection[parent]
            for e in table.covers(base_p):
                for m in range(1, e.hom_size + 1):
                    x = ObjectId(n, len(row))
                    step = f"{table.label(e.dst)}#{m}"
                    lbl = f"{labels[parent]},{step}" if labels[parent] else step
                    labels[x] = lbl
                    row.append(ObjectRecord(x, f"({lbl})", 1))
                    projection[x] = e.dst
                    links[x] = (parent, m)
                    edges[(parent, x)] = CoverEdge(parent, x, 1, 1, 1)
        total += len(row)
        if budget is not None and total > budget:
            raise BudgetExceeded(f"universal cover of {table.name} exceeds {budget} objects at level {n}")
        ranks.append(row)
    complete = table.complete and up_to_rank == table.max_rank
    cover = UpdownTable(f"cover({table.name})", ranks, edges, complete=complete)
    return CoverTable(cover, table, projection, links)


def fiber_count(cover: CoverTable, p: ObjectId) -> int:
    if p.rank > cover.depth:
        raise RankOutOfRange(f"{p} lies above the cover depth {cover.depth}")
    return sum(1 for x in cover.cover.objects(p.rank) if cover.projection[x] == p)


# -- uniqueness isomorphism --------------------------------------------------------------


def unique_iso(c: UpdownTable, d: UpdownTable, up_to_rank: int | None = None) -> dict[ObjectId, ObjectId]:
    """Rank-preserving bijection between two simple, equally up-covered tables.

    Built rank by rank: the up-set of each object is matched positionally with
    the up-set of its image, both sorted by (label, index).
    """
    top = min(c.max_rank, d.max_rank) if up_to_rank is None else up_to_rank
    if top > min(c.max_rank, d.max_rank):
        raise PreconditionFailed(f"rank {top} is not tabulated in both tables")
    fc, fd = classify(c), classify(d)
    if not (fc.simple and fd.simple):
        raise PreconditionFailed("both tables must be simple")
    for n in range(top):
        uc, ud = fc.up_sequence[n], fd.up_sequence[n]
        if uc is None or ud is None or uc != ud:
            raise PreconditionFailed(f"up-covering numbers differ or are not constant at rank {n}: {uc} vs {ud}")

    def ups(t: UpdownTable, p: ObjectId) -> list[ObjectId]:
        return sorted((e.dst for e in t.covers(p)), key=lambda q: (t.label(q), q.index))

    mapping = {ZERO: ZERO}
    for n in range(top):
        for p in c.objects(n):
            for a, b in zip(ups(c, p), ups(d, mapping[p])):
                mapping[a] = b
    return mapping
