"""The free module on the objects of a table, with the up/down operators."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .core import ObjectId, UpdownTable
from .errors import TruncationError


class ModuleVector(Mapping[ObjectId, Fraction]):
    """Finitely supported ``ObjectId -> Fraction`` with zeros dropped."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[ObjectId, object] | Iterable[tuple[ObjectId, object]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        c: dict[ObjectId, Fraction] = {}
        for k, v in items:
            v = Fraction(v)
            if v:
                c[k] = c.get(k, Fraction(0)) + v
                if not c[k]:
                    del c[k]
        self._c = c

    @classmethod
    def basis(cls, p: ObjectId) -> ModuleVector:
        return cls({p: 1})

    @classmethod
    def _raw(cls, c: dict[ObjectId, Fraction]) -> ModuleVector:
        v = cls.__new__(cls)
        v._c = {k: x for k, x in c.items() if x}
        return v

    def __getitem__(self, p: ObjectId) -> Fraction:
        return self._c.get(p, Fraction(0))

    def __iter__(self) -> Iterator[ObjectId]:
        return iter(self._c)

    def __len__(self) -> int:
        return len(self._c)

    def __contains__(self, p: object) -> bool:
        return p in self._c

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ModuleVector):
            return self._c == other._c
        if isinstance(other, Mapping):
            return self._c == ModuleVector(other)._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def __add__(self, other: ModuleVector) -> ModuleVector:
        c = dict(self._c)
        for k, v in other._c.items():
            c[k] = c.get(k, Fraction(0)) + v
        return ModuleVector._raw(c)

    def __neg__(self) -> ModuleVector:
        return ModuleVector._raw({k: -v for k, v in self._c.items()})

    def __sub__(self, other: ModuleVector) -> ModuleVector:
        return self + (-other)

    def __mul__(self, scalar) -> ModuleVector:
        s = Fraction(scalar)
        return ModuleVector._raw({k: v * s for k, v in self._c.items()})

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return bool(self._c)

    def __repr__(self) -> str:
        body = ", ".join(f"{k}: {v}" for k, v in sorted(self._c.items()))
        return f"ModuleVector({{{body}}})"

    def support_ranks(self) -> set[int]:
        return {p.rank for p in self._c}


def up_op(table: UpdownTable, v: ModuleVector) -> ModuleVector:
    out: dict[ObjectId, Fraction] = {}
    for p, x in v.items():
        if not table.up_defined(p.rank):
            raise TruncationError(f"U applied at top tabulated rank {p.rank} of {table.name}")
        for e in table.covers(p):
            out[e.dst] = out.get(e.dst, Fraction(0)) + x * e.u
    return ModuleVector._raw(out)


def down_op(table: UpdownTable, v: ModuleVector) -> ModuleVector:
    out: dict[ObjectId, Fraction] = {}
    for q, x in v.items():
        for e in table.covered_by(q):
            out[e.src] = out.get(e.src, Fraction(0)) + x * e.d
    return ModuleVector._raw(out)


def inner(table: UpdownTable, v: ModuleVector, w: ModuleVector) -> Fraction:
    if len(w) < len(v):
        v, w = w, v
    return sum((x * w[p] * table.aut(p) for p, x in v.items() if p in w), Fraction(0))


def rank_slice(table: UpdownTable, n: int) -> ModuleVector:
    """Rank-``n`` part of the formal series: the sum of ``p / |Aut p|`` over ``C_n``."""
    return ModuleVector._raw({p: Fraction(1, table.aut(p)) for p in table.objects(n)})
