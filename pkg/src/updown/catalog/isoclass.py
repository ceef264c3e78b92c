"""Families whose objects are isomorphism classes: graphs, rooted trees, binary trees."""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import permutations, product
from math import factorial, prod

from ..core import UpdownTable
from .elementary import _assemble

# -- finite graphs ------------------------------------------------------------------
#
# A graph on n vertices is a tuple of n adjacency bitmasks.  Its code under an
# ordering of the vertices is the integer whose bits list adjacency of the
# pairs (i, j), i < j, in a fixed order.  The canonical form is the minimal
# code over orderings that list vertices by decreasing degree; the number of
# orderings achieving that minimum is the automorphism count.

Graph = tuple[int, ...]


def _pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def _code(adj: Graph, order: tuple[int, ...], pairs) -> int:
    code = 0
    for i, j in pairs:
        code = (code << 1) | ((adj[order[i]] >> order[j]) & 1)
    return code


def _degree_orderings(adj: Graph):
    n = len(adj)
    deg = [bin(a).count("1") for a in adj]
    cells = [[v for v in range(n) if deg[v] == d] for d in sorted(set(deg), reverse=True)]
    for choice in product(*(permutations(c) for c in cells)):
        yield tuple(v for cell in choice for v in cell)


@lru_cache(maxsize=None)
def canonical_graph(adj: Graph) -> tuple[int, int, int]:
    """``(n, canonical code, |Aut|)``."""
    n = len(adj)
    pairs = _pairs(n)
    best, count = None, 0
    for order in _degree_orderings(adj):
        c = _code(adj, order, pairs)
        if best is None or c < best:
            best, count = c, 1
        elif c == best:
            count += 1
    return n, best or 0, count


def graph_from_code(n: int, code: int) -> Graph:
    pairs = _pairs(n)
    adj = [0] * n
    for k, (i, j) in enumerate(pairs):
        if (code >> (len(pairs) - 1 - k)) & 1:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return tuple(adj)


def graph_label(key: tuple[int, int]) -> str:
    n, code = key
    adj = graph_from_code(n, code)
    edges = [f"{i}-{j}" for i, j in _pairs(n) if (adj[i] >> j) & 1]
    return f"{n}|" + ",".join(edges)


def parse_graph_label(label: str) -> Graph:
    n_str, _, rest = label.partition("|")
    n = int(n_str)
    adj = [0] * n
    for e in filter(None, rest.split(",")):
        i, j = map(int, e.split("-"))
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    return tuple(adj)


def delete_vertex(adj: Graph, v: int) -> Graph:
    keep = [w for w in range(len(adj)) if w != v]
    pos = {w: k for k, w in enumerate(keep)}
    out = []
    for w in keep:
        m = 0
        for x in keep:
            if (adj[w] >> x) & 1:
                m |= 1 << pos[x]
        out.append(m)
    return tuple(out)


def graphs(max_rank: int) -> UpdownTable:
    key_of = lambda adj: canonical_graph(adj)[:2]
    aut: dict[tuple[int, int], int] = {(0, 0): 1}
    levels: list[list[tuple[int, int]]] = [[(0, 0)]]
    for n in range(max_rank):
        found = set()
        for key in levels[n]:
            adj = graph_from_code(*key)
            for s in range(1 << n):
                new = tuple(a | (((s >> v) & 1) << n) for v, a in enumerate(adj)) + (s,)
                n1, code, a = canonical_graph(new)
                found.add((n1, code))
                aut[(n1, code)] = a
        levels.append(sorted(found, key=lambda k: (bin(k[1]).count("1"), k[1])))
    edges: Counter = Counter()
    for n in range(1, max_rank + 1):
        for key in levels[n]:
            adj = graph_from_code(*key)
            for v in range(n):
                h = key_of(delete_vertex(adj, v))
                edges[(h, key)] += aut[h]
    return _assemble("graphs", levels, aut.__getitem__, dict(edges), label=graph_label)


# -- rooted trees ---------------------------------------------------------------------
#
# A rooted tree is the sorted tuple of its child subtrees; () is a lone root.

Tree = tuple


def tree_label(t: Tree) -> str:
    return "(" + "".join(tree_label(c) for c in t) + ")"


def parse_tree_label(label: str) -> Tree:
    stack: list[list] = [[]]
    for ch in label:
        if ch == "(":
            stack.append([])
        elif ch == ")":
            node = tuple(sorted(stack.pop()))
            stack[-1].append(node)
    return stack[0][0]


def tree_size(t: Tree) -> int:
    """Number of vertices."""
    return 1 + sum(tree_size(c) for c in t)


def tree_aut(t: Tree) -> int:
    return prod(factorial(m) * tree_aut(c) ** m for c, m in Counter(t).items())


def tree_factorial(t: Tree) -> int:
    """Product over vertices of the vertex count of the subtree they root."""
    return tree_size(t) * prod(tree_factorial(c) for c in t)


def attach_leaf_everywhere(t: Tree):
    """One canonical tree per vertex of ``t``: ``t`` with a new leaf hung there."""
    yield tuple(sorted(t + ((),)))
    for i, c in enumerate(t):
        for new in attach_leaf_everywhere(c):
            yield tuple(sorted(t[:i] + (new,) + t[i + 1 :]))


def rooted_trees(max_rank: int) -> UpdownTable:
    levels: list[list[Tree]] = [[()]]
    ups: Counter = Counter()
    for n in range(max_rank):
        found = set()
        for t in levels[n]:
            for q in attach_leaf_everywhere(t):
                ups[(t, q)] += 1
                found.add(q)
        levels.append(sorted(found, key=tree_label))
    edges = {(p, q): u * tree_aut(q) for (p, q), u in ups.items()}
    return _assemble("rooted-trees", levels, tree_aut, edges, label=tree_label)


# -- binary rooted trees ---------------------------------------------------------------
#
# A leaf is (); an internal vertex is the sorted pair of its two subtrees.

LEAF: Tree = ()
BUD: Tree = ((), ())


def btree_label(t: Tree) -> str:
    if t == LEAF:
        return "o"
    return f"({btree_label(t[0])} {btree_label(t[1])})"


def parse_btree_label(label: str) -> Tree:
    tokens = label.replace("(", " ( ").replace(")", " ) ").split()
    pos = 0

    def parse():
        nonlocal pos
        tok = tokens[pos]
        pos += 1
        if tok == "o":
            return LEAF
        a = parse()
        b = parse()
        pos += 1  # ")"
        return tuple(sorted((a, b)))

    return parse()


def btree_aut(t: Tree) -> int:
    if t == LEAF:
        return 1
    a, b = t
    return btree_aut(a) * btree_aut(b) * (2 if a == b else 1)


def bud_everywhere(t: Tree):
    """One canonical tree per leaf of ``t``: that leaf replaced by a bud."""
    if t == LEAF:
        yield BUD
        return
    a, b = t
    for x in bud_everywhere(a):
        yield tuple(sorted((x, b)))
    for y in bud_everywhere(b):
        yield tuple(sorted((a, y)))


def _btree_key(t: Tree):
    return btree_label(t)


def binary_trees(max_rank: int) -> UpdownTable:
    levels: list[list[Tree]] = [[LEAF]]
    ups: Counter = Counter()
    for n in range(max_rank):
        found = set()
        for t in levels[n]:
            for q in bud_everywhere(t):
                ups[(t, q)] += 1
                found.add(q)
        levels.append(sorted(found, key=_btree_key))
    edges = {(p, q): u * btree_aut(q) for (p, q), u in ups.items()}
    return _assemble("binary-trees", levels, btree_aut, edges, label=btree_label)

