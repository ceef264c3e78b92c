"""Graded categories with covering multiplicities, tabulated rank by rank.

>>> from updown import builtin, object_gf
>>> object_gf(builtin("subsets", 3), 3)
RationalSeries([1, 3, 3, 1])
"""

from .catalog import EXPECTED_FLAGS, FAMILIES, builtin, hom_oracle
from .constructions import (
    dn_quotient,
    fiber_count,
    power,
    product,
    universal_cover,
    unique_iso,
    up_quotient,
    wrp_export,
)
from .core import (
    ZERO,
    ClassificationFlags,
    CoverEdge,
    ObjectId,
    UpdownTable,
    build_table,
    classify,
    ext_mult,
    truncate,
    validate,
)
from .errors import UpdownError
from .freemod import ModuleVector, down_op, inner, up_op
from .jsonio import export_json, import_json
from .series import RationalSeries, gram_series, morphism_gf, object_gf, reference_gf

__all__ = [
    "ZERO",
    "ClassificationFlags",
    "CoverEdge",
    "EXPECTED_FLAGS",
    "FAMILIES",
    "ModuleVector",
    "ObjectId",
    "RationalSeries",
    "UpdownError",
    "UpdownTable",
    "build_table",
    "builtin",
    "classify",
    "dn_quotient",
    "down_op",
    "export_json",
    "ext_mult",
    "fiber_count",
    "gram_series",
    "hom_oracle",
    "import_json",
    "inner",
    "morphism_gf",
    "object_gf",
    "power",
    "product",
    "reference_gf",
    "truncate",
    "unique_iso",
    "universal_cover",
    "up_op",
    "up_quotient",
    "validate",
    "wrp_export",
]
