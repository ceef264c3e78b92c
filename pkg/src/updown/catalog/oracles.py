"""Brute-force hom-set and automorphism counts straight from each family's morphism model.

Every count here enumerates injections and tests the family's predicate; none
of it shares code with the generators, which is the point.
"""

from __future__ import annotations

from itertools import combinations, permutations

from ..errors import UnsupportedFamily
from .elementary import EMPTY_WORD
from .isoclass import LEAF, parse_btree_label, parse_graph_label, parse_tree_label


def _word(label: str) -> tuple[int, ...]:
    return () if label == EMPTY_WORD else tuple(int(ch) for ch in label)


def _dyck(label: str) -> tuple[int, ...]:
    return () if label == EMPTY_WORD else tuple(1 if ch == "+" else -1 for ch in label)


def _tuple(label: str) -> tuple[int, ...]:
    body = label.strip("()")
    return tuple(int(x) for x in body.split(",")) if body else ()


# -- graphs ---------------------------------------------------------------------------


def _adjacent(adj, i, j) -> bool:
    return bool((adj[i] >> j) & 1)


def graph_hom(h_label: str, g_label: str) -> int:
    """Injections ``V(H) -> V(G)`` that are induced-subgraph embeddings."""
    h, g = parse_graph_label(h_label), parse_graph_label(g_label)
    n = len(h)
    count = 0
    for f in permutations(range(len(g)), n):
        if all(
            _adjacent(h, i, j) == _adjacent(g, f[i], f[j]) for i in range(n) for j in range(i + 1, n)
        ):
            count += 1
    return count


def graph_aut(label: str) -> int:
    g = parse_graph_label(label)
    n = len(g)
    return sum(
        1
        for f in permutations(range(n))
        if all(_adjacent(g, i, j) == _adjacent(g, f[i], f[j]) for i in range(n) for j in range(i + 1, n))
    )


# -- necklaces -----------------------------------------------------------------------------


def _cyclically_increasing(seq: tuple[int, ...]) -> bool:
    m = len(seq)
    return any(all(seq[(r + k) % m] < seq[(r + k + 1) % m] for k in range(m - 1)) for r in range(m)) if m else True


def necklace_hom(f_label: str, g_label: str) -> int:
    f, g = _word(f_label), _word(g_label)
    return sum(
        1
        for h in permutations(range(len(g)), len(f))
        if _cyclically_increasing(h) and all(f[a] == g[h[a]] for a in range(len(f)))
    )


def necklace_aut(label: str) -> int:
    return necklace_hom(label, label)


# -- compositions --------------------------------------------------------------------------


def composition_hom(i_label: str, j_label: str) -> int:
    i, j = _tuple(i_label), _tuple(j_label)
    return sum(1 for f in combinations(range(len(j)), len(i)) if all(i[a] <= j[f[a]] for a in range(len(i))))


# -- planar trees -----------------------------------------------------------------------------


def planar_hom(f_label: str, g_label: str, *, leaf_only: bool = True) -> int:
    """Order-preserving injections ``[2n] -> [2n+2]`` missing two consecutive places.

    With ``leaf_only`` the two missed places of ``g`` must read up-then-down,
    i.e. the morphism forgets a leaf; without it, a valley pair also counts.
    """
    f, g = _dyck(f_label), _dyck(g_label)
    count = 0
    for h in combinations(range(len(g)), len(f)):
        missing = sorted(set(range(len(g))) - set(h))
        if len(missing) != 2 or missing[1] != missing[0] + 1:
            continue
        if any(f[a] != g[h[a]] for a in range(len(f))):
            continue
        if leaf_only and (g[missing[0]], g[missing[1]]) != (1, -1):
            continue
        count += 1
    return count


# -- binary trees ----------------------------------------------------------------------------


def _leaf_paths(t, prefix=()):
    if t == LEAF:
        return [prefix]
    return _leaf_paths(t[0], prefix + (0,)) + _leaf_paths(t[1], prefix + (1,))


def _leaf_metric(paths):
    """Number of internal vertices on the path between two leaves."""

    def delta(a, b):
        if a == b:
            return 0
        k = 0
        while k < min(len(a), len(b)) and a[k] == b[k]:
            k += 1
        return len(a) + len(b) - 2 * k - 1

    n = len(paths)
    return [[delta(paths[i], paths[j]) for j in range(n)] for i in range(n)]


def btree_hom(p_label: str, q_label: str, *, literal: bool = False) -> int:
    """Leaf injections ``L(P) -> L(Q)`` whose one missed leaf has a sibling in the image.

    By default distances must match ``Q`` with the missed leaf pruned: they are
    preserved, except that distances from the missed leaf's sibling drop by
    one.  ``literal=True`` only asks that no distance shrinks, which admits
    maps that are not a bud insertion.
    """
    lp = _leaf_paths(parse_btree_label(p_label))
    lq = _leaf_paths(parse_btree_label(q_label))
    dp, dq = _leaf_metric(lp), _leaf_metric(lq)
    n = len(lp)
    count = 0
    for f in permutations(range(len(lq)), n):
        image = set(f)
        missed = [r for r in range(len(lq)) if r not in image]
        if not all(any(dq[r][s] == 1 for s in image) for r in missed):
            continue
        if literal:
            ok = all(dq[f[a]][f[b]] >= dp[a][b] for a in range(n) for b in range(a + 1, n))
        else:
            sib = {s for r in missed for s in image if dq[r][s] == 1}
            ok = all(
                dq[f[a]][f[b]] - (f[a] in sib) - (f[b] in sib) == dp[a][b]
                for a in range(n)
                for b in range(a + 1, n)
            )
        count += ok
    return count


def btree_aut(label: str) -> int:
    paths = _leaf_paths(parse_btree_label(label))
    d = _leaf_metric(paths)
    n = len(paths)
    return sum(
        1 for f in permutations(range(n)) if all(d[f[a]][f[b]] == d[a][b] for a in range(n) for b in range(n))
    )


# -- rooted trees --------------------------------------------------------------------------------


def _parents(t) -> list[int | None]:
    """Parent index of each vertex, vertices numbered in preorder (root = 0)."""
    out: list[int | None] = []

    def walk(node, parent):
        me = len(out)
        out.append(parent)
        for c in node:
            walk(c, me)

    walk(t, None)
    return out


def rtree_hom(p_label: str, q_label: str) -> int:
    """Injections sending root to root and each parent link to a parent link."""
    pp, pq = _parents(parse_tree_label(p_label)), _parents(parse_tree_label(q_label))
    count = 0
    for f in permutations(range(len(pq)), len(pp)):
        if f[0] != 0:
            continue
        if all(pq[f[v]] == f[pp[v]] for v in range(1, len(pp))):
            count += 1
    return count


def rtree_aut(label: str) -> int:
    return rtree_hom(label, label)


# -- partitions and the base one-object-per-rank category ----------------------------------------


def kingman_hom(l_label: str, m_label: str) -> int:
    lam, mu = _tuple(l_label), _tuple(m_label)
    return sum(
        1 for f in permutations(range(len(mu)), len(lam)) if all(lam[i] <= mu[f[i]] for i in range(len(lam)))
    )


def kingman_aut(label: str) -> int:
    return kingman_hom(label, label)


def base_s_hom(p_label: str, q_label: str) -> int:
    m, n = int(p_label.strip("[]")), int(q_label.strip("[]"))
    return sum(1 for _ in permutations(range(n), m))


HOM_ORACLES = {
    "graphs": graph_hom,
    "necklaces": necklace_hom,
    "compositions": composition_hom,
    "planar-trees": planar_hom,
    "binary-trees": btree_hom,
    "rooted-trees": rtree_hom,
    "partitions-kingman": kingman_hom,
    "S": base_s_hom,
}

AUT_ORACLES = {
    "graphs": graph_aut,
    "necklaces": necklace_aut,
    "binary-trees": btree_aut,
    "rooted-trees": rtree_aut,
    "partitions-kingman": kingman_aut,
}


def hom_oracle(family: str, p_label: str, q_label: str) -> int:
    """``|Hom(p, q)|`` for ``q`` one rank above ``p``, by exhaustive enumeration."""
    try:
        fn = HOM_ORACLES[family]
    except KeyError:
        raise UnsupportedFamily(f"no explicit morphism model for {family!r}") from None
    return fn(p_label, q_label)


def aut_oracle(family: str, label: str) -> int:
    try:
        fn = AUT_ORACLES[family]
    except KeyError:
        raise UnsupportedFamily(f"no explicit automorphism model for {family!r}") from None
    return fn(label)
