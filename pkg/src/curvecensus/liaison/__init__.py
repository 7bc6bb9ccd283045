"""
This package contains linkage arithmetic for space curves
and the dimension count of families of linked curves.
"""

from .accounting import LinkageAccount as LinkageAccount
from .accounting import linkage_dimension_account as linkage_dimension_account
from .errors import LiaisonError as LiaisonError
from .errors import NoIntegralLinkageError as NoIntegralLinkageError
from .errors import SpecialTwistError as SpecialTwistError
from .linkage import LiaisonStep as LiaisonStep
from .linkage import grassmann_dim as grassmann_dim
from .linkage import linked_genus as linked_genus
from .linkage import surfaces_through as surfaces_through
from .quoted import QuotedHilbertScheme as QuotedHilbertScheme
from .quoted import quoted_dimension as quoted_dimension
