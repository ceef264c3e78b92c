from fractions import Fraction
from itertools import combinations, permutations, product as iproduct
from math import comb, factorial

import pytest

from _support import catalan, partitions
from updown import ZERO, builtin, classify, ext_mult, hom_oracle, validate
from updown.catalog import EXPECTED_FLAGS, FAMILIES, FamilySpec, aut_oracle, base_s, generate
from updown.catalog.elementary import min_rotation, partition_aut
from updown.catalog.isoclass import (
    btree_label,
    canonical_graph,
    graph_from_code,
    parse_btree_label,
    parse_tree_label,
    tree_aut,
    tree_factorial,
)
from updown.catalog.oracles import btree_hom, planar_hom
from updown.errors import BudgetExceeded, UnknownFamily, UnsupportedFamily


@pytest.fixture(scope="module", params=list(FAMILIES))
def family_table(request):
    return request.param, builtin(request.param)


def test_builtins_validate_and_classify(family_table):
    family, table = family_table
    assert validate(table).ok
    f = classify(table)
    assert (f.univalent, f.evenly_up, f.factorial) == EXPECTED_FLAGS[family]


def test_family_spec_checks():
    with pytest.raises(UnknownFamily):
        FamilySpec("trees", 3)
    with pytest.raises(ValueError):
        FamilySpec("necklaces", 3, (0,))
    with pytest.raises(BudgetExceeded):
        generate(FamilySpec("graphs", 7))
    with pytest.raises(UnknownFamily):
        builtin("trees")


def test_builds_are_deterministic():
    for family in FAMILIES:
        assert builtin(family, max_rank=4) == builtin(family, max_rank=4)


# -- elementary families --------------------------------------------------------------------


def test_compositions_rank_three():
    c = builtin("compositions", max_rank=3)
    assert c.rank_size(3) == 4
    assert [c.rank_size(n) for n in range(1, 4)] == [2 ** (n - 1) for n in range(1, 4)]


def test_compositions_up_sum():
    c = builtin("compositions", max_rank=7)
    for p in c.objects():
        if p.rank < c.max_rank:
            length = len(c.label(p).strip("()").split(",")) if p.rank else 0
            assert sum(e.u for e in c.covers(p)) == 2 * length + 1


def test_necklace_orbit_sum():
    t = builtin("necklaces", 2, max_rank=4)
    assert sum(Fraction(1, t.aut(p)) for p in t.objects(4)) == 4
    # orbit/stabilizer: every word of length 4 lies in exactly one orbit of size 4/aut
    words = list(iproduct((1, 2), repeat=4))
    assert len({min_rotation(w) for w in words}) == t.rank_size(4)


def test_kingman_covers(kingman):
    p = kingman.find("(1,1)")
    ups = {kingman.label(e.dst): e.u for e in kingman.covers(p)}
    assert ups == {"(2,1)": 2, "(1,1,1)": 1}
    for lam in kingman.objects():
        if lam.rank < kingman.max_rank:
            length = len(kingman.label(lam).strip("()").split(",")) if lam.rank else 0
            assert sum(e.u for e in kingman.covers(lam)) == 1 + length
            assert kingman.aut(lam) == partition_aut(tuple(int(x) for x in kingman.label(lam).strip("()").split(",") if x))


def test_kingman_aut_matches_brute_force(kingman):
    for p in kingman.objects():
        assert aut_oracle("partitions-kingman", kingman.label(p)) == kingman.aut(p)


def test_partition_ranks(young):
    for n in range(young.max_rank + 1):
        assert young.rank_size(n) == len(list(partitions(n)))


def test_subsets_and_monomials_are_products():
    s = builtin("subsets", 3)
    assert [s.rank_size(n) for n in range(4)] == [1, 3, 3, 1]
    m = builtin("monomials", 2, max_rank=3)
    assert m.aut(m.find("t1^2*t2")) == 2
    assert m.rank_size(3) == 4


def test_base_s_injections():
    s = base_s(3)
    assert hom_oracle("S", "[2]", "[3]") == 6
    assert s.edge(s.find("[2]"), s.find("[3]")).hom_size == 6


def test_planar_tree_counts():
    p = builtin("planar-trees", max_rank=7)
    assert [p.rank_size(n) for n in range(8)] == [catalan(n) for n in range(8)]


# -- iso-class families -------------------------------------------------------------------------


def test_graph_rank_three():
    g = builtin("graphs", max_rank=3)
    assert sorted(g.aut(p) for p in g.objects(3)) == [2, 2, 6, 6]
    assert sum(Fraction(1, g.aut(p)) for p in g.objects(3)) == Fraction(4, 3)


def test_graph_canonical_form_against_full_search():
    # degree-refined search against the minimum over every permutation
    def full(adj):
        n = len(adj)
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        codes = []
        for order in permutations(range(n)):
            c = 0
            for i, j in pairs:
                c = (c << 1) | ((adj[order[i]] >> order[j]) & 1)
            codes.append(c)
        return codes.count(min(codes))

    n = 5
    pairs = list(combinations(range(n), 2))
    seen = {}
    for mask in range(1 << len(pairs)):
        adj = [0] * n
        for k, (i, j) in enumerate(pairs):
            if (mask >> k) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
        key = canonical_graph(tuple(adj))
        assert key[2] == full(adj)
        seen.setdefault(key[:2], 0)
        seen[key[:2]] += 1
    assert len(seen) == 34
    # orbit sizes add up to the labelled count
    assert sum(factorial(n) // canonical_graph(graph_from_code(n, code))[2] for (_, code) in seen) == 2 ** comb(n, 2)


def test_graph_up_sums():
    g = builtin("graphs", max_rank=5)
    f = classify(g)
    assert f.up_sequence[:5] == tuple(2**n for n in range(5))


def test_rooted_tree_multiplicities():
    r = builtin("rooted-trees", max_rank=7)
    for n in range(r.max_rank + 1):
        total = 0
        for p in r.objects(n):
            tree = parse_tree_label(r.label(p))
            u = ext_mult(r, ZERO, p)[0]
            assert u == factorial(n + 1) // (tree_factorial(tree) * tree_aut(tree))
            assert tree_aut(tree) == r.aut(p) == aut_oracle("rooted-trees", r.label(p))
            total += u * tree_factorial(tree)
        assert total == (n + 1) ** n


def test_rooted_tree_rank_two():
    r = builtin("rooted-trees", max_rank=2)
    path, cherry = r.find("((()))"), r.find("(()())")
    assert ext_mult(r, ZERO, path)[0] * tree_factorial(parse_tree_label("((()))")) == 6
    assert ext_mult(r, ZERO, cherry)[0] * tree_factorial(parse_tree_label("(()())")) == 3


def test_binary_tree_counts():
    b = builtin("binary-trees", max_rank=8)
    for n in range(b.max_rank + 1):
        assert sum(Fraction(2**n, b.aut(p)) for p in b.objects(n)) == catalan(n)
    assert classify(b).up_sequence[:8] == tuple(n + 1 for n in range(8))


def test_binary_tree_worked_pair():
    b = builtin("binary-trees", max_rank=3)
    p, q = b.find("(o (o o))"), b.find("((o o) (o o))")
    e = b.edge(p, q)
    assert (e.hom_size, e.u, e.d) == (8, 1, 4)
    assert (b.aut(p), b.aut(q)) == (2, 8)
    assert hom_oracle("binary-trees", "(o (o o))", "((o o) (o o))") == 8
    for x in b.objects():
        assert aut_oracle("binary-trees", b.label(x)) == b.aut(x)


def test_binary_label_round_trip():
    b = builtin("binary-trees", max_rank=5)
    for p in b.objects():
        assert btree_label(parse_btree_label(b.label(p))) == b.label(p)


# -- oracles ------------------------------------------------------------------------------------------

ORACLE_RANKS = {
    "graphs": 5,
    "necklaces": 6,
    "compositions": 6,
    "planar-trees": 5,
    "binary-trees": 5,
    "rooted-trees": 5,
    "partitions-kingman": 6,
}


@pytest.mark.parametrize("family, rank", sorted(ORACLE_RANKS.items()))
def test_oracle_equivalence(family, rank):
    table = builtin(family, max_rank=rank)
    for (p, q), e in table.edges.items():
        assert hom_oracle(family, table.label(p), table.label(q)) == e.hom_size, (table.label(p), table.label(q))


def test_base_s_oracle():
    s = base_s(5)
    for (p, q), e in s.edges.items():
        assert hom_oracle("S", s.label(p), s.label(q)) == e.hom_size


def test_composition_oracle_example():
    assert hom_oracle("compositions", "(1)", "(1,1)") == 2


def test_unsupported_oracle():
    with pytest.raises(UnsupportedFamily):
        hom_oracle("partitions-unit", "()", "(1)")
    with pytest.raises(UnsupportedFamily):
        aut_oracle("compositions", "(1)")


def test_literal_predicates_overcount():
    # two consecutive missed places may form a valley rather than a new leaf
    assert planar_hom("+-", "+-+-", leaf_only=False) == 3
    assert planar_hom("+-", "+-+-") == 2
    # the bare distance inequality admits leaf maps that insert no bud
    assert btree_hom("(o (o o))", "(o (o (o o)))", literal=True) == 12
    assert btree_hom("(o (o o))", "(o (o (o o)))") == 4
    assert btree_hom("(o (o o))", "((o o) (o o))", literal=True) == 8
