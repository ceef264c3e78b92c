from collections import Counter
from fractions import Fraction
from math import comb, factorial, prod

import pytest
from hypothesis import given
from hypothesis import strategies as st

from _support import catalan, partitions, tables
from updown import (
    ZERO,
    RationalSeries,
    builtin,
    classify,
    gram_series,
    morphism_gf,
    object_gf,
    reference_gf,
    universal_cover,
)
from updown.catalog import FAMILIES, category_a
from updown.errors import InvalidConstantTerm, OrderExceedsTable, UnknownFamily
from updown.series import t

F = Fraction
ORDER = 8

small = st.fractions(min_value=-3, max_value=3, max_denominator=5)


def series(const=None):
    tail = st.lists(small, min_size=ORDER, max_size=ORDER)
    if const is None:
        return st.builds(lambda c, xs: RationalSeries([c] + xs), small, tail)
    return tail.map(lambda xs: RationalSeries([F(const)] + xs))


# -- arithmetic -------------------------------------------------------------------------


def test_exp_of_t_over_one_minus_t():
    x = t(3)
    assert list((x / (1 - x)).exp()) == [1, 1, F(3, 2), F(13, 6)]


def test_exp_matches_partition_sum():
    x = t(7)
    got = (x / (1 - x)).exp()
    for n in range(8):
        expected = sum(F(1, prod(factorial(m) for m in Counter(lam).values())) for lam in partitions(n))
        assert got[n] == expected


def test_catalan_from_sqrt():
    x = t(5)
    cat = ((1 - (1 - 4 * x).sqrt()) / 2).shift(-1)
    assert list(cat.truncate(4)) == [1, 1, 2, 5, 14]


def test_one_minus_log():
    x = t(3)
    assert list(1 - (1 - 2 * x).log()) == [1, 2, 2, F(8, 3)]


@given(series(const=0))
def test_log_inverts_exp(s):
    assert s.exp().log() == s


@given(series(const=1))
def test_sqrt_squares_back(s):
    r = s.sqrt()
    assert r * r == s
    assert r[0] == 1


@given(series())
def test_reciprocal(s):
    if s[0] == 0:
        with pytest.raises(InvalidConstantTerm):
            s.reciprocal()
        return
    assert s * s.reciprocal() == RationalSeries.constant(1, ORDER)


@given(series(), series(), series())
def test_ring_laws(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a - a == RationalSeries.constant(0, ORDER)


@given(series(), series())
def test_derivative_product_rule(a, b):
    assert (a * b).derivative() == a.derivative() * b.truncate(ORDER - 1) + a.truncate(ORDER - 1) * b.derivative()
    assert a.integral().derivative() == a


@given(series(), series(const=0), series(const=0))
def test_composition_associative(a, b, c):
    assert a.compose(b).compose(c) == a.compose(b.compose(c))


def test_compose_needs_zero_constant():
    with pytest.raises(InvalidConstantTerm):
        t(3).compose(1 + t(3))


def test_constant_term_errors():
    with pytest.raises(InvalidConstantTerm):
        (1 + t(3)).exp()
    with pytest.raises(InvalidConstantTerm):
        (2 + t(3)).log()
    with pytest.raises(InvalidConstantTerm):
        (2 + t(3)).sqrt()
    with pytest.raises(InvalidConstantTerm):
        (1 + t(3)).shift(-1)


def test_tree_function_inverts():
    # the rooted-tree object series solves O = exp(t O); t O(t) is the inverse of t e^{-t}
    order = 7
    obj, _ = reference_gf("rooted-trees", (), order)
    x = t(order)
    w = (x * obj).truncate(order)
    assert w.compose(x * (-x).exp()) == x
    assert (x * obj).exp().truncate(order) == obj


def test_binary_ops_truncate_to_shorter():
    assert (t(3) + t(5)).order == 3
    assert (t(3) * t(5)).order == 3


def test_subs_power_and_shift():
    s = RationalSeries([1, 2, 3])
    # a series known through t^2 in t is known through t^5 in t^2
    assert list(s.subs_power(2)) == [1, 0, 2, 0, 3, 0]
    assert list(s.subs_power(2, 3)) == [1, 0, 6, 0, 27, 0]
    assert list(s.shift(1)) == [0, 1, 2, 3]
    assert list(RationalSeries([0, 2, 3]).shift(-1)) == [2, 3]


def test_power_operator():
    assert (1 + t(4)) ** 4 == RationalSeries([comb(4, k) for k in range(5)])
    assert (1 + t(4)) ** 0 == RationalSeries.constant(1, 4)
    assert ((1 + t(4)) ** -1) * (1 + t(4)) == RationalSeries.constant(1, 4)


# -- generating functions of tables ---------------------------------------------------------------


def test_graphs_object_series():
    assert list(object_gf(builtin("graphs", max_rank=4), 4)) == [1, 1, 1, F(4, 3), F(8, 3)]


def test_young_object_series(young):
    assert list(object_gf(young, 5)) == [1, 1, 2, 3, 5, 7]


def test_binary_trees_object_series():
    assert list(object_gf(builtin("binary-trees", max_rank=2), 2)) == [1, F(1, 2), F(1, 2)]


def test_category_a_series():
    a = category_a()
    assert list(object_gf(a, 3)) == [1, 1, 0, 0]
    assert list(morphism_gf(a, 5)) == [0, 1, 0, 0, 0, 0]


def test_compositions_t3():
    assert morphism_gf(builtin("compositions", max_rank=3), 3)[3] == 3


def test_young_t7(young):
    m = morphism_gf(young, 7)
    # covering pairs out of the three partitions of 3: (3) has 2, (2,1) has 3, (1,1,1) has 2
    assert m[7] == 7
    assert m[7] == sum(len(young.covers(p)) for p in young.objects(3))


def test_order_exceeds_table():
    c = builtin("compositions", max_rank=3)
    with pytest.raises(OrderExceedsTable):
        object_gf(c, 4)
    with pytest.raises(OrderExceedsTable):
        morphism_gf(c, 7)
    assert morphism_gf(c, 6).order == 6


def test_unknown_family():
    with pytest.raises(UnknownFamily):
        reference_gf("posets")


def test_reference_examples():
    obj, _ = reference_gf("compositions", order=5)
    assert list(obj) == [1, 1, 2, 4, 8, 16]
    obj, _ = reference_gf("rooted-trees", order=6)
    assert list(obj) == [F((n + 1) ** n, factorial(n + 1)) for n in range(7)]
    _, mor = reference_gf("binary-trees", order=7)
    x = t(7)
    assert mor == x * (1 - 2 * x * x).sqrt().reciprocal()


def test_reference_closed_forms_by_coefficient():
    order = 9
    _, mor = reference_gf("compositions", order=order)
    assert [mor[2 * n + 1] for n in range(order // 2)] == [F((n + 2) * 2**n, 2) for n in range(order // 2)]
    obj, mor = reference_gf("planar-trees", order=order)
    assert [obj[n] for n in range(order + 1)] == [catalan(n) for n in range(order + 1)]
    assert [mor[2 * n + 1] for n in range(order // 2)] == [comb(2 * n + 1, n + 1) for n in range(order // 2)]
    obj, mor = reference_gf("binary-trees", order=order)
    assert [obj[n] for n in range(order + 1)] == [F(catalan(n), 2**n) for n in range(order + 1)]
    assert [mor[2 * n + 1] for n in range(order // 2)] == [F(catalan(n) * (n + 1), 2**n) for n in range(order // 2)]
    obj, _ = reference_gf("graphs", order=order)
    assert [obj[n] for n in range(order + 1)] == [F(2 ** comb(n, 2), factorial(n)) for n in range(order + 1)]


@pytest.mark.parametrize("family", list(FAMILIES))
def test_builtin_series_match_closed_forms(family):
    table = builtin(family, max_rank=min(FAMILIES[family][0], 7))
    order = table.max_rank
    obj, mor = reference_gf(family, FAMILIES[family][2], order)
    assert object_gf(table, order) == obj
    assert morphism_gf(table, order) == mor


# -- identities between the series -------------------------------------------------------------------


@given(tables())
def test_gram_series(tbl):
    order = 2 * tbl.max_rank + 1 if tbl.complete else tbl.max_rank
    ss, uss, sds = gram_series(tbl, order)
    assert ss == object_gf(tbl, order // 2).subs_power(2).truncate(order)
    assert uss == sds == morphism_gf(tbl, order)


@given(tables())
def test_u_and_d_forms_agree(tbl):
    top = 2 * tbl.max_rank + 1 if tbl.complete else 2 * tbl.max_rank - 1
    morphism_gf(tbl, top)


def _even_covering_checks(table):
    f = classify(table)
    a = object_gf(table, table.max_rank)
    m = morphism_gf(table, 2 * table.max_rank - 1)
    checked = 0
    if f.evenly_up:
        for n in range(table.max_rank):
            assert m[2 * n + 1] == a[n] * f.up_sequence[n]
            checked += 1
    if f.evenly_down:
        for n in range(1, table.max_rank):
            assert m[2 * n - 1] == a[n] * f.down_sequence[n]
            checked += 1
    if f.evenly_up and f.evenly_down:
        for n in range(table.max_rank - 1):
            assert a[n] * f.up_sequence[n] == a[n + 1] * f.down_sequence[n + 1]
    if f.evenly_up and f.factorial:
        for n in range(table.max_rank):
            assert a[n] == F(prod(f.up_sequence[:n]), factorial(n) * table.aut(ZERO))
    return checked


@pytest.mark.parametrize("family", list(FAMILIES))
def test_even_covering_series(family):
    table = builtin(family, max_rank=min(FAMILIES[family][0], 6))
    f = classify(table)
    checked = _even_covering_checks(table)
    assert checked > 0 or not (f.evenly_up or f.evenly_down)


def _simple_and_factorial_forms(table):
    f = classify(table)
    n = table.max_rank
    o, m = object_gf(table, n), morphism_gf(table, 2 * n - 1)
    if f.factorial:
        assert m == (t(2 * n - 1) * o.derivative().subs_power(2)).truncate(2 * n - 1)
    if f.simple:
        assert o.subs_power(2).truncate(2 * n) == 1 + m.shift(1)
    return f


@pytest.mark.parametrize("family", list(FAMILIES))
def test_simple_and_factorial_forms(family):
    _simple_and_factorial_forms(builtin(family, max_rank=min(FAMILIES[family][0], 6)))


def test_simple_series_identity_on_covers():
    cov = universal_cover(builtin("planar-trees", max_rank=5), 5).cover
    assert _simple_and_factorial_forms(cov).simple
    assert _simple_and_factorial_forms(builtin("subsets", 1)).simple
