"""Exact computer algebra for the (h, w)-deformed oscillator, its reflection
equation algebra and their braided structure."""

from .coeffring import (
    PolyHW,
    PolynomialModel,
    RatHW,
    RationalModel,
    SeriesModel,
    TruncSeriesHW,
    invert_unit,
    subst_param,
)
from .ncalg import (
    NCElem,
    Presentation,
    adjoin_inverse,
    apply_hom,
    commutator,
    local_confluence_check,
    normal_form,
)
from .report import Report

__version__ = "0.1.0"

__all__ = [
    "NCElem",
    "PolyHW",
    "PolynomialModel",
    "Presentation",
    "RatHW",
    "RationalModel",
    "Report",
    "SeriesModel",
    "TruncSeriesHW",
    "adjoin_inverse",
    "apply_hom",
    "commutator",
    "invert_unit",
    "local_confluence_check",
    "normal_form",
    "subst_param",
]
