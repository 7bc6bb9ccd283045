"""
This package contains quadric models of residual series:
their enumeration, resolution on blow-ups, and dimension counts.
"""

from .enumeration import enumerate_quadric_models as enumerate_quadric_models
from .record import ModelRecord as ModelRecord
from .record import SurfaceTag as SurfaceTag
from .resolution import ResidualAnalysis as ResidualAnalysis
from .resolution import analyse_model as analyse_model
from .resolution import base_point_obstructed as base_point_obstructed
from .resolution import model_residual as model_residual
from .resolution import proper_transform as proper_transform
from .resolution import quadric_residual_very_ample as quadric_residual_very_ample
from .resolution import residual_class_blowup as residual_class_blowup
from .resolution import residual_class_quadric as residual_class_quadric
from .resolution import resolve_model as resolve_model
from .resolution import (
    secant_obstruction_base_point as secant_obstruction_base_point,
)
from .severi import glevel_dim as glevel_dim
from .severi import hilbert_dim as hilbert_dim
from .severi import severi_dim as severi_dim
