"""Rank-tabulated updown categories.

A table stores, for every rank up to ``max_rank``, the objects of that rank
together with the order of their automorphism groups, and for every covering
pair the size of the hom-set.  The multiplicities ``u`` and ``d`` are always
derived from those numbers; nothing above adjacent ranks is stored.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import partial
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence

from .errors import (
    DivisibilityViolation,
    DuplicateEdge,
    InvalidAutOrder,
    NonAdjacentEdge,
    RankOrderError,
    UnknownObject,
    UpdownError,
)


class ObjectId(NamedTuple):
    rank: int
    index: int

    def __str__(self) -> str:
        return f"{self.rank}:{self.index}"


ZERO = ObjectId(0, 0)


@dataclass(frozen=True, slots=True)
class ObjectRecord:
    id: ObjectId
    label: str
    aut_order: int


@dataclass(frozen=True, slots=True)
class CoverEdge:
    src: ObjectId
    dst: ObjectId
    hom_size: int
    u: int
    d: int


class UpdownTable:
    """Immutable finite truncation of an updown category.

    ``complete`` marks a table that is the whole category (every rank above
    ``max_rank`` is empty), as opposed to a truncation of an infinite one.
    Only complete tables have meaningful up-data at the top rank.
    """

    __slots__ = ("name", "max_rank", "ranks", "edges", "complete", "_up", "_down")

    def __init__(
        self,
        name: str,
        ranks: Sequence[Sequence[ObjectRecord]],
        edges: Mapping[tuple[ObjectId, ObjectId], CoverEdge],
        complete: bool = False,
    ):
        ordered = dict(sorted(edges.items()))
        up: dict[ObjectId, list[CoverEdge]] = {}
        down: dict[ObjectId, list[CoverEdge]] = {}
        for e in ordered.values():
            up.setdefault(e.src, []).append(e)
            down.setdefault(e.dst, []).append(e)
        rows = tuple(tuple(r) for r in ranks)
        init = partial(object.__setattr__, self)
        init("name", name)
        init("ranks", rows)
        init("max_rank", len(rows) - 1)
        init("complete", complete)
        init("edges", MappingProxyType(ordered))
        init("_up", {k: tuple(v) for k, v in up.items()})
        init("_down", {k: tuple(sorted(v, key=lambda e: e.src)) for k, v in down.items()})

    def __setattr__(self, name, value):
        raise AttributeError(f"UpdownTable is immutable; cannot set {name!r}")

    def __delattr__(self, name):
        raise AttributeError(f"UpdownTable is immutable; cannot delete {name!r}")

    # -- access -----------------------------------------------------------
    def record(self, p: ObjectId) -> ObjectRecord:
        return self.ranks[p.rank][p.index]

    def aut(self, p: ObjectId) -> int:
        return self.ranks[p.rank][p.index].aut_order

    def label(self, p: ObjectId) -> str:
        return self.ranks[p.rank][p.index].label

    def covers(self, p: ObjectId) -> tuple[CoverEdge, ...]:
        """Edges leaving ``p`` (towards objects covering it)."""
        return self._up.get(p, ())

    def covered_by(self, p: ObjectId) -> tuple[CoverEdge, ...]:
        """Edges entering ``p`` (from objects it covers)."""
        return self._down.get(p, ())

    def objects(self, rank: int | None = None) -> Iterator[ObjectId]:
        """Objects of one rank (none above ``max_rank``), or of every rank."""
        ranks = range(self.max_rank + 1) if rank is None else (rank,) if 0 <= rank <= self.max_rank else ()
        for r in ranks:
            for i in range(len(self.ranks[r])):
                yield ObjectId(r, i)

    def rank_size(self, rank: int) -> int:
        return len(self.ranks[rank]) if 0 <= rank <= self.max_rank else 0

    def has_object(self, p: ObjectId) -> bool:
        return 0 <= p.rank <= self.max_rank and 0 <= p.index < len(self.ranks[p.rank])

    def edge(self, p: ObjectId, q: ObjectId) -> CoverEdge | None:
        return self.edges.get((p, q))

    def up_defined(self, rank: int) -> bool:
        """True when all covering data leaving ``rank`` is tabulated."""
        return rank < self.max_rank or self.complete

    def find(self, label: str, rank: int | None = None) -> ObjectId:
        for p in self.objects(rank):
            if self.label(p) == label:
                return p
        raise UnknownObject(f"no object labelled {label!r} in {self.name}")

    @property
    def num_objects(self) -> int:
        return sum(len(r) for r in self.ranks)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UpdownTable):
            return NotImplemented
        return (
            self.name == other.name
            and self.complete == other.complete
            and self.ranks == other.ranks
            and dict(self.edges) == dict(other.edges)
        )

    def __hash__(self) -> int:
        return hash((self.name, self.ranks, tuple(self.edges.values())))

    def __repr__(self) -> str:
        sizes = ",".join(str(len(r)) for r in self.ranks)
        return f"UpdownTable({self.name!r}, ranks=[{sizes}], edges={len(self.edges)})"


def _as_id(x) -> ObjectId:
    return x if isinstance(x, ObjectId) else ObjectId(int(x[0]), int(x[1]))


def build_table(
    name: str,
    rank_specs: Sequence[Sequence[tuple[str, int]]],
    edge_specs: Iterable[tuple[object, object, int]],
    *,
    complete: bool = False,
) -> UpdownTable:
    """Assemble a table from ``(label, aut)`` specs and ``(src, dst, hom)`` edges.

    ``u`` and ``d`` are obtained by exact division of the hom-set size by the
    automorphism orders of target and source; an inexact division means the
    automorphism groups cannot act freely and the build fails.
    """
    if not rank_specs:
        raise UpdownError("rank_specs must contain at least rank 0")
    ranks = []
    for r, specs in enumerate(rank_specs):
        row = []
        for i, (label, aut) in enumerate(specs):
            if not isinstance(aut, int) or aut < 1:
                raise InvalidAutOrder(f"object {r}:{i} has aut order {aut!r}; must be a positive integer")
            row.append(ObjectRecord(ObjectId(r, i), str(label), aut))
        ranks.append(tuple(row))

    def exists(p: ObjectId) -> bool:
        return 0 <= p.rank < len(ranks) and 0 <= p.index < len(ranks[p.rank])

    edges: dict[tuple[ObjectId, ObjectId], CoverEdge] = {}
    for k, (src, dst, hom) in enumerate(edge_specs):
        src, dst = _as_id(src), _as_id(dst)
        for p in (src, dst):
            if not exists(p):
                raise UnknownObject(f"edge references missing object {p}", edge_index=k)
        if dst.rank != src.rank + 1:
            raise NonAdjacentEdge(f"edge {src}->{dst} does not join adjacent ranks", edge_index=k)
        if (src, dst) in edges:
            raise DuplicateEdge(f"edge {src}->{dst} given twice", edge_index=k)
        if not isinstance(hom, int) or hom < 1:
            raise UpdownError(f"edge {src}->{dst} has hom size {hom!r}; must be a positive integer", edge_index=k)
        a_src = ranks[src.rank][src.index].aut_order
        a_dst = ranks[dst.rank][dst.index].aut_order
        if hom % a_dst or hom % a_src:
            raise DivisibilityViolation(
                f"edge {src}->{dst}: hom size {hom} not divisible by aut orders ({a_src}, {a_dst})",
                edge_index=k,
            )
        edges[(src, dst)] = CoverEdge(src, dst, hom, hom // a_dst, hom // a_src)
    return UpdownTable(name, ranks, edges, complete=complete)


def truncate(table: UpdownTable, max_rank: int) -> UpdownTable:
    """Drop ranks above ``max_rank``.  A no-op when nothing would be removed."""
    if max_rank >= table.max_rank:
        return table
    edges = {k: e for k, e in table.edges.items() if e.dst.rank <= max_rank}
    return UpdownTable(table.name, table.ranks[: max_rank + 1], edges, complete=False)


# -- validation ------------------------------------------------------------


class Violation(NamedTuple):
    tag: str
    where: object
    message: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


def validate(table: UpdownTable) -> ValidationReport:
    out: list[Violation] = []
    if len(table.ranks) == 0 or len(table.ranks[0]) != 1:
        n0 = len(table.ranks[0]) if table.ranks else 0
        out.append(Violation("A2", ObjectId(0, 0), f"rank 0 has {n0} objects, expected exactly one"))
    for r, row in enumerate(table.ranks):
        for i, rec in enumerate(row):
            if rec.id != (r, i):
                out.append(Violation("A1", rec.id, f"record stored at {r}:{i} carries id {rec.id}"))
            if rec.aut_order < 1:
                out.append(Violation("A3", rec.id, f"aut order {rec.aut_order} < 1"))
    for key, e in table.edges.items():
        if not (table.has_object(e.src) and table.has_object(e.dst)):
            out.append(Violation("A3", key, "edge endpoint not tabulated"))
            continue
        if e.dst.rank != e.src.rank + 1:
            out.append(Violation("A4", key, "edge does not join adjacent ranks"))
        if e.u < 1 or e.d < 1:
            out.append(Violation("A3", key, f"empty hom-set stored as an edge (u={e.u}, d={e.d})"))
        a_src, a_dst = table.aut(e.src), table.aut(e.dst)
        if e.u * a_dst != e.hom_size or e.d * a_src != e.hom_size:
            out.append(
                Violation(
                    "A5",
                    key,
                    f"hom {e.hom_size} != u*aut(dst) = {e.u}*{a_dst} or d*aut(src) = {e.d}*{a_src}",
                )
            )
    for p in table.objects():
        if p.rank >= 1 and not table.covered_by(p):
            out.append(Violation("reach", p, f"object {table.label(p)!r} is not reachable from the rank-0 object"))
    return ValidationReport(tuple(out))


# -- extended multiplicities -------------------------------------------------


def ext_row(table: UpdownTable, p: ObjectId, upto: int | None = None) -> dict[ObjectId, tuple[int, int]]:
    """Extended multiplicities ``(u(p;q), d(p;q))`` for every ``q`` reachable from ``p``.

    Computed rank by rank: each step multiplies along covering edges and sums
    over the intermediate objects.  ``u`` and ``d`` are accumulated separately.
    """
    top = table.max_rank if upto is None else min(upto, table.max_rank)
    row = {p: (1, 1)}
    frontier = {p: (1, 1)}
    for _ in range(p.rank, top):
        nxt: dict[ObjectId, list[int]] = {}
        for a, (ua, da) in frontier.items():
            for e in table.covers(a):
                acc = nxt.setdefault(e.dst, [0, 0])
                acc[0] += ua * e.u
                acc[1] += da * e.d
        frontier = {q: (v[0], v[1]) for q, v in nxt.items()}
        row.update(frontier)
        if not frontier:
            break
    return row


def ext_mult(table: UpdownTable, p: ObjectId, q: ObjectId) -> tuple[int, int]:
    if p.rank > q.rank:
        raise RankOrderError(f"rank of {p} exceeds rank of {q}")
    return ext_row(table, p, q.rank).get(q, (0, 0))


# -- classification ------------------------------------------------------------


@dataclass(frozen=True)
class ClassificationFlags:
    univalent: bool
    unital: bool
    simple: bool
    evenly_up: bool
    evenly_down: bool
    factorial: bool
    # Per-rank verdicts: True/False, or None where the table cannot tell.
    up_by_rank: tuple[bool | None, ...] = field(default=())
    down_by_rank: tuple[bool | None, ...] = field(default=())
    # u_n / d_n where constant on the rank, else None.  d_0 is always None.
    up_sequence: tuple[int | None, ...] = field(default=())
    down_sequence: tuple[int | None, ...] = field(default=())

    def as_dict(self) -> dict:
        return {
            "univalent": self.univalent,
            "unital": self.unital,
            "simple": self.simple,
            "evenly_up": self.evenly_up,
            "evenly_down": self.evenly_down,
            "factorial": self.factorial,
            "up_sequence": list(self.up_sequence),
            "down_sequence": list(self.down_sequence),
            "up_by_rank": ["unknown" if v is None else v for v in self.up_by_rank],
        }


def up_sum(table: UpdownTable, p: ObjectId) -> int:
    return sum(e.u for e in table.covers(p))


def down_sum(table: UpdownTable, p: ObjectId) -> int:
    return sum(e.d for e in table.covered_by(p))


def _constant(values: Iterable[int]) -> int | None:
    vals = set(values)
    return vals.pop() if len(vals) == 1 else None


def classify(table: UpdownTable) -> ClassificationFlags:
    univalent = all(rec.aut_order == 1 for row in table.ranks for rec in row)
    unital = univalent and all(e.hom_size == 1 for e in table.edges.values())
    simple = False
    if univalent and len(table.ranks[0]) == 1:
        # u(0;q) <= 1 everywhere forces a unique lower cover of weight 1 at
        # every object, hence u(p;q) <= 1 for every pair.
        row = ext_row(table, ZERO)
        simple = all(row.get(q, (0, 0))[0] <= 1 for q in table.objects())

    up_by_rank: list[bool | None] = []
    up_seq: list[int | None] = []
    for r in range(table.max_rank + 1):
        if not table.up_defined(r):
            up_by_rank.append(None)
            up_seq.append(None)
            continue
        if not table.rank_size(r):
            up_by_rank.append(True)
            up_seq.append(None)
            continue
        c = _constant(up_sum(table, p) for p in table.objects(r))
        up_by_rank.append(c is not None)
        up_seq.append(c)

    down_by_rank: list[bool | None] = [True]
    down_seq: list[int | None] = [None]
    for r in range(1, table.max_rank + 1):
        c = _constant(down_sum(table, p) for p in table.objects(r))
        down_by_rank.append(c is not None if table.rank_size(r) else True)
        down_seq.append(c)

    evenly_up = all(v is not False for v in up_by_rank)
    evenly_down = all(v is not False for v in down_by_rank)
    factorial = evenly_down and all(
        d == r for r, d in enumerate(down_seq) if r >= 1 and table.rank_size(r)
    )
    return ClassificationFlags(
        univalent=univalent,
        unital=unital,
        simple=simple,
        evenly_up=evenly_up,
        evenly_down=evenly_down,
        factorial=factorial,
        up_by_rank=tuple(up_by_rank),
        down_by_rank=tuple(down_by_rank),
        up_sequence=tuple(up_seq),
        down_sequence=tuple(down_seq),
    )
