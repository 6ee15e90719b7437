"""Alexander-type invariants of long and closed virtual knots from Gauss codes."""

from .diagram import (
    CLOSED,
    Diagram,
    GaussCodeError,
    LONG,
    Passage,
    TRIVIAL_LONG,
    UNKNOT,
    arc_structure,
    close,
    concatenate,
    dn_family,
    parse_gauss,
    serialize_gauss,
    switch_all_crossings,
)
from .alexander import (
    GroupPresentationZ2,
    OpLetter,
    OpRelation,
    PresentationMatrix,
    abelianize,
    diagonal_t,
    end_generator_columns,
    extended_presentation,
    one_var_matrix,
    one_variable,
    quotient_kill,
    tietze_eliminate,
)
from .invariants import (
    BudgetExceeded,
    ColoringReport,
    char_poly,
    coloring_count,
    determinant_long,
    elementary_minors,
    hom_count_to_cyclic,
    smith_normal_form,
    transfer_condition,
    unit_minor_check,
)
from .laurent import LaurentPoly, parse_poly
from .moves import IllegalMove, MoveSite, apply_move, random_walk

__version__ = "0.1.0"

__all__ = [
    "CLOSED",
    "ColoringReport",
    "BudgetExceeded",
    "Diagram",
    "GaussCodeError",
    "GroupPresentationZ2",
    "IllegalMove",
    "LONG",
    "LaurentPoly",
    "MoveSite",
    "OpLetter",
    "OpRelation",
    "Passage",
    "PresentationMatrix",
    "TRIVIAL_LONG",
    "UNKNOT",
    "abelianize",
    "apply_move",
    "arc_structure",
    "char_poly",
    "close",
    "coloring_count",
    "concatenate",
    "determinant_long",
    "diagonal_t",
    "dn_family",
    "elementary_minors",
    "end_generator_columns",
    "extended_presentation",
    "hom_count_to_cyclic",
    "one_var_matrix",
    "one_variable",
    "parse_gauss",
    "parse_poly",
    "quotient_kill",
    "random_walk",
    "serialize_gauss",
    "smith_normal_form",
    "switch_all_crossings",
    "tietze_eliminate",
    "transfer_condition",
    "unit_minor_check",
]
