"""
This package contains closed-form invariants of triples (d, g, r).
"""

from .brill_noether import chi_min as chi_min
from .brill_noether import lambda_ as lambda_
from .brill_noether import pgl_dim as pgl_dim
from .brill_noether import rho as rho
from .castelnuovo import castelnuovo_pi as castelnuovo_pi
from .castelnuovo import castelnuovo_pi1_r3 as castelnuovo_pi1_r3
from .castelnuovo import exceeds_castelnuovo as exceeds_castelnuovo
from .summary import InvariantSummary as InvariantSummary
from .summary import summarise as summarise
from .triple import Triple as Triple
