"""
This package contains divisor class calculus on the smooth quadric
and on blow-ups of the plane at up to eight general points.
"""

from .ampleness import contracted_multisecant as contracted_multisecant
from .ampleness import is_criterion_only as is_criterion_only
from .ampleness import is_very_ample as is_very_ample
from .blowup import canonical_degree as canonical_degree
from .blowup import intersect_blowup as intersect_blowup
from .blowup import pa_blowup as pa_blowup
from .classes import MAX_POINTS as MAX_POINTS
from .classes import BlowupClass as BlowupClass
from .classes import DivisorClass as DivisorClass
from .classes import QuadricClass as QuadricClass
from .classes import parse_blowup_class as parse_blowup_class
from .classes import parse_class as parse_class
from .classes import parse_quadric_class as parse_quadric_class
from .exceptional import is_neg_curve as is_neg_curve
from .exceptional import neg_curves as neg_curves
from .quadric import AUTOMORPHISM_DIM as AUTOMORPHISM_DIM
from .quadric import QUADRIC_CANONICAL as QUADRIC_CANONICAL
from .quadric import QUADRIC_HYPERPLANE as QUADRIC_HYPERPLANE
from .quadric import dim_linear_system_quadric as dim_linear_system_quadric
from .lattice import intersect as intersect
from .quadric import intersect_quadric as intersect_quadric
from .quadric import pa_quadric as pa_quadric
from .riemann_roch import expected_h0_blowup as expected_h0_blowup
from .errors import ClassSyntaxError as ClassSyntaxError
from .errors import LatticeParityError as LatticeParityError
from .errors import MismatchedRankError as MismatchedRankError
from .errors import MixedSurfacesError as MixedSurfacesError
from .errors import NotACurveClassError as NotACurveClassError
from .errors import SurfaceError as SurfaceError
from .errors import VanishingNotJustifiedError as VanishingNotJustifiedError
