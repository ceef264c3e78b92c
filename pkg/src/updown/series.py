"""Truncated power series over the rationals and the generating functions of a table."""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Callable, Iterable, Sequence

from .core import UpdownTable
from .errors import InvalidConstantTerm, OrderExceedsTable, UnknownFamily, UpdownError
from .freemod import down_op, inner, rank_slice, up_op


class RationalSeries:
    """Coefficients ``c_0 .. c_order`` of a power series in ``t``.

    Binary operations truncate to the smaller order of their operands.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[object]):
        c = tuple(Fraction(x) for x in coeffs)
        if not c:
            raise ValueError("a series needs at least the constant coefficient")
        self.coeffs = c

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    # -- constructors ----------------------------------------------------
    @classmethod
    def constant(cls, value, order: int) -> RationalSeries:
        return cls([value] + [0] * order)

    @classmethod
    def variable(cls, order: int) -> RationalSeries:
        """The series ``t``."""
        return cls([0, 1][: order + 1] + [0] * max(0, order - 1))

    @classmethod
    def from_function(cls, f: Callable[[int], object], order: int) -> RationalSeries:
        return cls(f(n) for n in range(order + 1))

    # -- container protocol ------------------------------------------------
    def __getitem__(self, n):
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RationalSeries):
            return self.coeffs == other.coeffs
        if isinstance(other, (list, tuple)):
            return self.coeffs == tuple(Fraction(x) for x in other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"RationalSeries([{', '.join(str(c) for c in self.coeffs)}])"

    def truncate(self, order: int) -> RationalSeries:
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return RationalSeries(self.coeffs[: order + 1])

    # -- ring operations ---------------------------------------------------
    def _coerce(self, other) -> RationalSeries:
        if isinstance(other, RationalSeries):
            return other
        return RationalSeries.constant(other, self.order)

    def __add__(self, other) -> RationalSeries:
        o = self._coerce(other)
        n = min(self.order, o.order)
        return RationalSeries(self.coeffs[k] + o.coeffs[k] for k in range(n + 1))

    __radd__ = __add__

    def __neg__(self) -> RationalSeries:
        return RationalSeries(-c for c in self.coeffs)

    def __sub__(self, other) -> RationalSeries:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> RationalSeries:
        return self._coerce(other) - self

    def __mul__(self, other) -> RationalSeries:
        if not isinstance(other, RationalSeries):
            s = Fraction(other)
            return RationalSeries(c * s for c in self.coeffs)
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            ai = a[i]
            if ai:
                for j in range(n + 1 - i):
                    out[i + j] += ai * b[j]
        return RationalSeries(out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> RationalSeries:
        if not isinstance(other, RationalSeries):
            return self * (Fraction(1) / Fraction(other))
        return self * other.reciprocal()

    def __rtruediv__(self, other) -> RationalSeries:
        return self._coerce(other) * self.reciprocal()

    def __pow__(self, k: int) -> RationalSeries:
        if k < 0:
            return self.reciprocal() ** (-k)
        result = RationalSeries.constant(1, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- calculus ----------------------------------------------------------
    def derivative(self) -> RationalSeries:
        if self.order == 0:
            return RationalSeries([0])
        return RationalSeries(k * self.coeffs[k] for k in range(1, self.order + 1))

    def integral(self) -> RationalSeries:
        """Antiderivative with zero constant term; order grows by one."""
        return RationalSeries([0] + [c / (k + 1) for k, c in enumerate(self.coeffs)])

    def shift(self, k: int) -> RationalSeries:
        """Multiply by ``t**k``; negative ``k`` divides, which needs a zero low part."""
        if k >= 0:
            return RationalSeries([0] * k + list(self.coeffs))
        if any(self.coeffs[: -k]):
            raise InvalidConstantTerm(f"cannot divide by t^{-k}: low coefficients are nonzero")
        return RationalSeries(self.coeffs[-k:])

    def subs_power(self, k: int, scale=1) -> RationalSeries:
        """Substitute ``scale * t**k`` for ``t``."""
        scale = Fraction(scale)
        order = k * self.order + k - 1
        out = [Fraction(0)] * (order + 1)
        for n, c in enumerate(self.coeffs):
            out[k * n] = c * scale**n
        return RationalSeries(out)

    # -- transcendental operations -------------------------------------------
    def reciprocal(self) -> RationalSeries:
        a = self.coeffs
        if not a[0]:
            raise InvalidConstantTerm("reciprocal needs a nonzero constant term")
        inv0 = 1 / a[0]
        b = [inv0]
        for n in range(1, len(a)):
            b.append(-inv0 * sum(a[k] * b[n - k] for k in range(1, n + 1)))
        return RationalSeries(b)

    def compose(self, inner_series: RationalSeries) -> RationalSeries:
        """``self(inner_series(t))``; the inner series must vanish at 0."""
        if inner_series.coeffs[0]:
            raise InvalidConstantTerm("composition needs an inner series with zero constant term")
        n = min(self.order, inner_series.order)
        g = inner_series.truncate(n)
        result = RationalSeries.constant(self.coeffs[n], n)
        for k in range(n - 1, -1, -1):
            result = result * g + self.coeffs[k]
        return result

    def exp(self) -> RationalSeries:
        a = self.coeffs
        if a[0]:
            raise InvalidConstantTerm("exp needs a zero constant term to stay rational")
        b = [Fraction(1)]
        for n in range(1, len(a)):
            b.append(sum(k * a[k] * b[n - k] for k in range(1, n + 1)) / n)
        return RationalSeries(b)

    def log(self) -> RationalSeries:
        if self.coeffs[0] != 1:
            raise InvalidConstantTerm("log needs constant term 1")
        q = self.derivative() * self.reciprocal()
        return q.integral().truncate(self.order) if self.order else RationalSeries([0])

    def sqrt(self) -> RationalSeries:
        a = self.coeffs
        if a[0] != 1:
            raise InvalidConstantTerm("sqrt needs constant term 1")
        b = [Fraction(1)]
        for n in range(1, len(a)):
            b.append((a[n] - sum(b[k] * b[n - k] for k in range(1, n))) / 2)
        return RationalSeries(b)


def t(order: int) -> RationalSeries:
    return RationalSeries.variable(order)


# -- generating functions of a table -------------------------------------------


class InconsistentTable(UpdownError):
    pass


def object_gf(table: UpdownTable, order: int) -> RationalSeries:
    if order > table.max_rank and not table.complete:
        raise OrderExceedsTable(f"order {order} exceeds max rank {table.max_rank} of {table.name}")
    coeffs = []
    for n in range(order + 1):
        if n > table.max_rank:
            coeffs.append(Fraction(0))
            continue
        coeffs.append(sum((Fraction(1, table.aut(p)) for p in table.objects(n)), Fraction(0)))
    return RationalSeries(coeffs)


def _morphism_coeffs(table: UpdownTable, order: int) -> tuple[list[Fraction], list[Fraction]]:
    by_u = [Fraction(0)] * (order + 1)
    by_d = [Fraction(0)] * (order + 1)
    for e in table.edges.values():
        power = 2 * e.src.rank + 1
        if power <= order:
            by_u[power] += Fraction(e.u, table.aut(e.src))
            by_d[power] += Fraction(e.d, table.aut(e.dst))
    return by_u, by_d


def morphism_gf(table: UpdownTable, order: int) -> RationalSeries:
    """Covering pairs weighted by ``u(p;q)/|Aut p|`` at ``t^(2|p|+1)``.

    The same series is accumulated with the ``d(p;q)/|Aut q|`` weighting and
    the two must agree.
    """
    # t^(2n+1) needs every edge out of rank n
    needed = (order - 1) // 2 if order >= 1 else -1
    if needed >= 0 and not table.up_defined(needed):
        raise OrderExceedsTable(
            f"order {order} needs covering data out of rank {needed}; {table.name} stops at {table.max_rank}"
        )
    by_u, by_d = _morphism_coeffs(table, order)
    if by_u != by_d:
        bad = next(i for i in range(order + 1) if by_u[i] != by_d[i])
        raise InconsistentTable(f"u- and d-weighted morphism series differ at t^{bad}")
    return RationalSeries(by_u)


def gram_series(table: UpdownTable, order: int) -> tuple[RationalSeries, RationalSeries, RationalSeries]:
    """``<S,S>``, ``<US,S>`` and ``<S,DS>`` for the formal series ``S`` of the table.

    Computed in the free module, rank slice by rank slice, so it is an
    independent route to ``O(t^2)`` and ``M(t)``.
    """
    top = table.max_rank
    ss = [Fraction(0)] * (order + 1)
    uss = [Fraction(0)] * (order + 1)
    sds = [Fraction(0)] * (order + 1)
    slices = [rank_slice(table, n) for n in range(top + 1)]
    for n in range(top + 1):
        if 2 * n <= order:
            ss[2 * n] = inner(table, slices[n], slices[n])
        if 2 * n + 1 <= order and n + 1 <= top:
            uss[2 * n + 1] = inner(table, up_op(table, slices[n]), slices[n + 1])
            sds[2 * n + 1] = inner(table, slices[n], down_op(table, slices[n + 1]))
    return RationalSeries(ss), RationalSeries(uss), RationalSeries(sds)


# -- closed forms of the example families -------------------------------------------


def _catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def _partition_product(order: int, step: int = 1) -> RationalSeries:
    """``prod_{k>=1} 1/(1 - t^(step*k))`` truncated at ``order``."""
    result = RationalSeries.constant(1, order)
    k = step
    while k <= order:
        factor = RationalSeries([1 if i % k == 0 else 0 for i in range(order + 1)])
        result = result * factor
        k += step
    return result


def _poly(coeffs: Sequence[object], order: int) -> RationalSeries:
    c = list(coeffs)[: order + 1]
    return RationalSeries(c + [0] * (order + 1 - len(c)))


def _ref_subsets(order: int, n: int = 5):
    T = t(order)
    return (1 + T) ** n, n * T * (1 + T.subs_power(2).truncate(order)) ** (n - 1)


def _ref_monomials(order: int, n: int = 3):
    T = t(order)
    obj = (n * T).exp()
    mor = n * T * (n * T.subs_power(2).truncate(order)).exp()
    return obj, mor


def _ref_graphs(order: int):
    obj = RationalSeries.from_function(lambda m: Fraction(2 ** comb(m, 2), factorial(m)), order)
    mor = RationalSeries.from_function(
        lambda k: Fraction(2 ** comb((k + 1) // 2, 2), factorial((k - 1) // 2)) if k % 2 else 0, order
    )
    return obj, mor


def _ref_necklaces(order: int, c: int = 2):
    T = t(order)
    obj = 1 - (1 - c * T).log()
    mor = c * T * (1 - c * T.subs_power(2).truncate(order)).reciprocal()
    return obj, mor


def _ref_partitions_unit(order: int):
    T = t(order)
    obj = _partition_product(order)
    mor = T * (1 - T.subs_power(2).truncate(order)).reciprocal() * _partition_product(order, 2)
    return obj, mor


def _ref_kingman(order: int):
    T = t(order)
    obj = (T / (1 - T)).exp()
    T2 = T.subs_power(2).truncate(order)
    mor = T / (1 - T2) * (T2 / (1 - T2)).exp()
    return obj, mor


def _ref_compositions(order: int):
    T = t(order)
    obj = (1 - T) / (1 - 2 * T)
    T2 = T.subs_power(2).truncate(order)
    mor = T * (1 - T2) / (1 - 2 * T2) ** 2
    return obj, mor


def _ref_planar_trees(order: int):
    # numerators are computed one order higher so that dividing by t keeps `order`
    T = t(order + 1)
    obj = ((1 - (1 - 4 * T).sqrt()) / 2).shift(-1)
    T2 = T.subs_power(2).truncate(order + 1)
    root = (1 - 4 * T2).sqrt()
    mor = ((1 - root) / (2 * root)).shift(-1)
    return obj, mor


def _ref_rooted_trees(order: int):
    obj = RationalSeries.from_function(lambda n: Fraction((n + 1) ** n, factorial(n + 1)), order)
    mor = RationalSeries.from_function(
        lambda k: Fraction(((k - 1) // 2 + 1) ** ((k - 1) // 2), factorial((k - 1) // 2)) if k % 2 else 0,
        order,
    )
    return obj, mor


def _ref_binary_trees(order: int):
    T = t(order + 1)
    obj = (1 - (1 - 2 * T).sqrt()).shift(-1)
    T2 = t(order).subs_power(2).truncate(order)
    mor = t(order) * (1 - 2 * T2).sqrt().reciprocal()
    return obj, mor


REFERENCE_FAMILIES: dict[str, Callable] = {
    "subsets": _ref_subsets,
    "monomials": _ref_monomials,
    "graphs": _ref_graphs,
    "necklaces": _ref_necklaces,
    "partitions-unit": _ref_partitions_unit,
    "partitions-kingman": _ref_kingman,
    "compositions": _ref_compositions,
    "planar-trees": _ref_planar_trees,
    "rooted-trees": _ref_rooted_trees,
    "binary-trees": _ref_binary_trees,
}


def reference_gf(family: str, params: Sequence[int] = (), order: int = 8) -> tuple[RationalSeries, RationalSeries]:
    """Closed-form object and morphism series of a builtin family, to ``order``."""
    try:
        fn = REFERENCE_FAMILIES[family]
    except KeyError:
        raise UnknownFamily(f"unknown family {family!r}") from None
    obj, mor = fn(order, *params)
    return obj.truncate(order), mor.truncate(order)
