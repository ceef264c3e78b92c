"""Generators for the families whose objects are words, tuples or partitions."""

from __future__ import annotations

from collections import Counter
from itertools import product as iproduct
from math import factorial, prod

from ..constructions import power, relabel
from ..core import ObjectId, UpdownTable, build_table

EMPTY_WORD = "e"


def _tuple_label(t: tuple[int, ...]) -> str:
    return "(" + ",".join(map(str, t)) + ")"


def _assemble(name, levels, aut, edges, *, label=_tuple_label, complete=False) -> UpdownTable:
    """``levels[n]`` lists the rank-``n`` keys in output order; ``edges`` maps key pairs to hom sizes."""
    ids = {}
    specs = []
    for n, keys in enumerate(levels):
        row = []
        for i, k in enumerate(keys):
            ids[k] = ObjectId(n, i)
            row.append((label(k), aut(k)))
        specs.append(row)
    edge_specs = [(ids[a], ids[b], h) for (a, b), h in edges.items()]
    return build_table(name, specs, edge_specs, complete=complete)


def category_a() -> UpdownTable:
    """Two objects, one morphism between them."""
    return build_table("A", [[("0", 1)], [("1", 1)]], [((0, 0), (1, 0), 1)], complete=True)


def subsets(n: int, max_rank: int | None = None) -> UpdownTable:
    table = power(category_a(), n, name=f"subsets({n})")

    def as_set(p, lbl):
        bits = lbl.strip("()").split(",")
        return "{" + ",".join(str(i + 1) for i, b in enumerate(bits) if b == "1") + "}"

    table = relabel(table, as_set)
    if max_rank is not None and max_rank < table.max_rank:
        from ..core import truncate

        table = truncate(table, max_rank)
    return table


def base_s(max_rank: int) -> UpdownTable:
    """One object ``[n]`` per rank; morphisms are injections."""
    specs = [[(f"[{n}]", factorial(n))] for n in range(max_rank + 1)]
    edges = [((n, 0), (n + 1, 0), factorial(n + 1)) for n in range(max_rank)]
    return build_table("S", specs, edges)


def monomials(n: int, max_rank: int) -> UpdownTable:
    table = power(base_s(max_rank), n, name=f"monomials({n})")

    def as_monomial(p, lbl):
        exps = [int(x.strip("[]")) for x in lbl.strip("()").split(",")]
        parts = [f"t{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(exps) if e]
        return "*".join(parts) or "1"

    return relabel(table, as_monomial)


# -- partitions -------------------------------------------------------------------


def partitions_of(n: int, largest: int | None = None) -> list[tuple[int, ...]]:
    """Partitions of ``n`` as decreasing tuples, in reverse lexicographic order."""
    if n == 0:
        return [()]
    largest = n if largest is None else min(largest, n)
    out = []
    for first in range(largest, 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return out


def partition_aut(lam: tuple[int, ...]) -> int:
    return prod(factorial(m) for m in Counter(lam).values())


def _grow_partition(lam: tuple[int, ...]):
    """Yield ``(mu, k)``: ``mu`` covers ``lam`` by adding a box to a part of size ``k`` (0 = new part)."""
    yield tuple(sorted(lam + (1,), reverse=True)), 0
    for k in sorted(set(lam), reverse=True):
        i = lam.index(k)
        mu = lam[:i] + (k + 1,) + lam[i + 1 :]
        yield mu, k


def partitions_unit(max_rank: int) -> UpdownTable:
    levels = [partitions_of(n) for n in range(max_rank + 1)]
    edges = {}
    for n in range(max_rank):
        for lam in levels[n]:
            for mu, _ in _grow_partition(lam):
                edges[(lam, mu)] = 1
    return _assemble("partitions-unit", levels, lambda lam: 1, edges)


def partitions_kingman(max_rank: int) -> UpdownTable:
    levels = [partitions_of(n) for n in range(max_rank + 1)]
    edges = {}
    for n in range(max_rank):
        for lam in levels[n]:
            mult = Counter(lam)
            for mu, k in _grow_partition(lam):
                # u is 1 for a new part of size 1, else the multiplicity of the grown size
                u = 1 if k == 0 else mult[k]
                edges[(lam, mu)] = u * partition_aut(mu)
    return _assemble("partitions-kingman", levels, partition_aut, edges)


# -- compositions -----------------------------------------------------------------


def compositions(max_rank: int) -> UpdownTable:
    levels: list[list[tuple[int, ...]]] = [[()]]
    edges: Counter = Counter()
    for n in range(max_rank):
        nxt = set()
        for comp in levels[n]:
            targets = []
            for a in range(len(comp)):
                targets.append(comp[:a] + (comp[a] + 1,) + comp[a + 1 :])
            for a in range(len(comp) + 1):
                targets.append(comp[:a] + (1,) + comp[a:])
            for j in targets:
                edges[(comp, j)] += 1
                nxt.add(j)
        levels.append(sorted(nxt, reverse=True))
    return _assemble("compositions", levels, lambda c: 1, dict(edges))


# -- necklaces --------------------------------------------------------------------


def min_rotation(word: tuple[int, ...]) -> tuple[int, ...]:
    if not word:
        return word
    return min(word[r:] + word[:r] for r in range(len(word)))


def rotation_stabilizer(word: tuple[int, ...]) -> int:
    if not word:
        return 1
    return sum(1 for r in range(len(word)) if word[r:] + word[:r] == word)


def necklace_label(word: tuple[int, ...]) -> str:
    return "".join(map(str, word)) or EMPTY_WORD


def necklaces(c: int, max_rank: int) -> UpdownTable:
    levels = []
    for m in range(max_rank + 1):
        reps = {min_rotation(w) for w in iproduct(range(1, c + 1), repeat=m)}
        levels.append(sorted(reps))
    aut = {w: rotation_stabilizer(w) for lv in levels for w in lv}
    edges: Counter = Counter()
    for m in range(1, max_rank + 1):
        for g in levels[m]:
            for j in range(m):
                # bead j removed, reading on from bead j+1
                p = min_rotation(g[j + 1 :] + g[:j])
                edges[(p, g)] += aut[p]
    return _assemble(f"necklaces({c})", levels, aut.__getitem__, dict(edges), label=necklace_label)


# -- planar rooted trees ------------------------------------------------------------


def dyck_label(word: tuple[int, ...]) -> str:
    return "".join("+" if x > 0 else "-" for x in word) or EMPTY_WORD


def planar_trees(max_rank: int) -> UpdownTable:
    """Dyck words; a covering morphism inserts an adjacent up-down pair (a new leaf)."""
    levels: list[list[tuple[int, ...]]] = [[()]]
    edges: Counter = Counter()
    for n in range(max_rank):
        nxt = set()
        for f in levels[n]:
            for k in range(len(f) + 1):
                g = f[:k] + (1, -1) + f[k:]
                edges[(f, g)] += 1
                nxt.add(g)
        levels.append(sorted(nxt, reverse=True))
    return _assemble("planar-trees", levels, lambda w: 1, dict(edges), label=dyck_label)
