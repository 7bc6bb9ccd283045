"""
This package contains utility code used throughout the project.
"""

from .datatypes import Tristate as Tristate
from .enumeration import bounded_partitions as bounded_partitions
from .enumeration import bounded_vectors as bounded_vectors
from .enumeration import orbit_size as orbit_size
