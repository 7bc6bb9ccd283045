"""
Anchors of the facts each verdict rests on.
"""

CASTELNUOVO_BOUND = "castelnuovo-genus-bound"
NONSPECIAL_IRREDUCIBLE = "nonspecial-curves-irreducible"
SPECIALITY_ONE = "speciality-one-existence-irreducibility"
SPECIALITY_TWO = "speciality-two-existence-irreducibility"
SPECIALITY_THREE = "speciality-three-existence"
SPECIALITY_THREE_LARGE_GENUS = "speciality-three-irreducible-large-genus"
SPECIALITY_FOUR = "speciality-four-existence"
SPECIALITY_FIVE = "speciality-five-existence"
OUT_OF_RANGE = "speciality-outside-census"

EXTREMAL_CURVES = "extremal-curves-irreducible-except-r5"
GONAL_CONSTRUCTION = "general-k-gonal-residual-construction"
COMPOUNDED_NOT_VERY_AMPLE = "compounded-residual-not-very-ample"
QUADRIC_MODELS = "residual-series-quadric-models"
LIAISON_IRREDUCIBLE = "linked-family-irreducible"
CUBIC_SURFACE_CLASSES = "cubic-surface-curve-classes"
SINGULAR_CUBICS_EXCLUDED = "singular-cubic-exclusion"
NORMAL_CUBIC_SPECIALIZATION = "normal-cubic-specialization"
TRIPLE_COVER_VERY_AMPLE = "triple-cover-residual-very-ample-assumed"
SCROLL_CURVES = "rational-normal-scroll-curves"
BORDIGA_CURVES = "bordiga-surface-curves"
IRREDUCIBILITY_TABLE = "speciality-four-irreducibility-table"
