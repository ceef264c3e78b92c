"""Tables for the ten example families.

>>> t = builtin("compositions", max_rank=3)
>>> t.rank_size(3)
4
"""

from __future__ import annotations

from dataclasses import dataclass

from ..core import UpdownTable
from ..errors import BudgetExceeded, UnknownFamily
from .elementary import (
    base_s,
    category_a,
    compositions,
    monomials,
    necklaces,
    partitions_kingman,
    partitions_unit,
    planar_trees,
    subsets,
)
from .isoclass import binary_trees, graphs, rooted_trees
from .oracles import aut_oracle, hom_oracle

# family -> (default max rank, hard max rank, default parameters)
FAMILIES: dict[str, tuple[int, int, tuple[int, ...]]] = {
    "subsets": (5, 12, (5,)),
    "monomials": (8, 10, (3,)),
    "graphs": (6, 6, ()),
    "necklaces": (10, 12, (2,)),
    "partitions-unit": (12, 20, ()),
    "partitions-kingman": (12, 20, ()),
    "compositions": (12, 14, ()),
    "planar-trees": (8, 10, ()),
    "rooted-trees": (8, 10, ()),
    "binary-trees": (9, 11, ()),
}

ELEMENTARY = ("subsets", "monomials", "necklaces", "partitions-unit", "partitions-kingman", "compositions", "planar-trees")
ISOCLASS = ("graphs", "rooted-trees", "binary-trees")

# U / UC / F columns of the summary of examples
EXPECTED_FLAGS: dict[str, tuple[bool, bool, bool]] = {
    "subsets": (True, True, True),
    "monomials": (False, True, True),
    "graphs": (False, True, True),
    "necklaces": (False, True, True),
    "partitions-unit": (True, False, False),
    "partitions-kingman": (False, False, False),
    "compositions": (True, False, False),
    "planar-trees": (True, True, False),
    "rooted-trees": (False, True, False),
    "binary-trees": (False, True, False),
}


@dataclass(frozen=True)
class FamilySpec:
    family: str
    max_rank: int
    params: tuple[int, ...] = ()

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise UnknownFamily(f"unknown family {self.family!r}")
        if self.max_rank < 0 or any(p < 1 for p in self.params):
            raise ValueError(f"bad parameters for {self.family}: {self.params}, max rank {self.max_rank}")


def _check_budget(spec: FamilySpec) -> None:
    hard = FAMILIES[spec.family][1]
    if spec.max_rank > hard:
        raise BudgetExceeded(f"{spec.family} is capped at rank {hard}; asked for {spec.max_rank}")


def gen_elementary(spec: FamilySpec) -> UpdownTable:
    _check_budget(spec)
    f, r = spec.family, spec.max_rank
    if f == "subsets":
        (n,) = spec.params or FAMILIES[f][2]
        return subsets(n, r)
    if f == "monomials":
        (n,) = spec.params or FAMILIES[f][2]
        return monomials(n, r)
    if f == "necklaces":
        (c,) = spec.params or FAMILIES[f][2]
        return necklaces(c, r)
    if f == "partitions-unit":
        return partitions_unit(r)
    if f == "partitions-kingman":
        return partitions_kingman(r)
    if f == "compositions":
        return compositions(r)
    if f == "planar-trees":
        return planar_trees(r)
    raise UnknownFamily(f"{f} is not an elementary family")


def gen_isoclass(spec: FamilySpec) -> UpdownTable:
    _check_budget(spec)
    fn = {"graphs": graphs, "rooted-trees": rooted_trees, "binary-trees": binary_trees}.get(spec.family)
    if fn is None:
        raise UnknownFamily(f"{spec.family} is not an iso-class family")
    return fn(spec.max_rank)


def generate(spec: FamilySpec) -> UpdownTable:
    if spec.family in ISOCLASS:
        return gen_isoclass(spec)
    return gen_elementary(spec)


def builtin(family: str, *params: int, max_rank: int | None = None) -> UpdownTable:
    """Build a family's table; ``max_rank`` defaults to the family budget."""
    if family not in FAMILIES:
        raise UnknownFamily(f"unknown family {family!r}")
    default_rank, _, default_params = FAMILIES[family]
    return generate(FamilySpec(family, default_rank if max_rank is None else max_rank, tuple(params) or default_params))


__all__ = [
    "FAMILIES",
    "EXPECTED_FLAGS",
    "FamilySpec",
    "aut_oracle",
    "base_s",
    "builtin",
    "category_a",
    "gen_elementary",
    "gen_isoclass",
    "generate",
    "hom_oracle",
]
