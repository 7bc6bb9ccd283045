"""
This package classifies smooth curves on cubic surfaces
and contains the tests excluding singular cubics.
"""

from .classification import CUBIC_HYPERPLANE as CUBIC_HYPERPLANE
from .classification import CubicClassSolution as CubicClassSolution
from .classification import brute_force_cubic_classes as brute_force_cubic_classes
from .classification import brute_force_cubic_table as brute_force_cubic_table
from .classification import classify_cubic_classes as classify_cubic_classes
from .classification import cubic_residual as cubic_residual
from .classification import line_decomposition as line_decomposition
from .classification import schwartz_range as schwartz_range
from .residual import CubicAnalysis as CubicAnalysis
from .residual import analyse_cubic_class as analyse_cubic_class
from .residual import cubic_family_dim as cubic_family_dim
from .singular import ConeGenusCase as ConeGenusCase
from .singular import SingularCubicReport as SingularCubicReport
from .singular import cone_genus_test as cone_genus_test
from .singular import covering_family_dim as covering_family_dim
from .singular import mumford_bound as mumford_bound
from .singular import ruled_cubic_genus_solvable as ruled_cubic_genus_solvable
from .singular import singular_cubic_report as singular_cubic_report
from .singular import triple_cover_dim_bound as triple_cover_dim_bound
