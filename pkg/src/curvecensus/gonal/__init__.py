"""
This package contains the k-gonal constructions
and the classification of compounded series.
"""

from .compounded import compounded_cases as compounded_cases
from .compounded import compounded_excludes_very_ample as compounded_excludes_very_ample
from .compounded import describe_compounded as describe_compounded
from .recipe import GonalRecipe as GonalRecipe
from .recipe import RecipeCheck as RecipeCheck
from .recipe import build_recipe as build_recipe
from .recipe import ckm_condition as ckm_condition
from .recipe import existence_recipe as existence_recipe
from .recipe import gonality_name as gonality_name
