"""
This package contains the census of Hilbert schemes of linearly normal
curves: verdicts, components, tables and scans.
"""

from .components import component_dims as component_dims
from .components import known_components as known_components
from .errors import UnknownFamilyError as UnknownFamilyError
from .pipeline import pipeline_components as pipeline_components
from .pipeline import pipeline_existence as pipeline_existence
from .records import ComponentRecord as ComponentRecord
from .records import Verdict as Verdict
from .render import SCHEMA_VERSION as SCHEMA_VERSION
from .render import dump_json as dump_json
from .render import render_table_json as render_table_json
from .render import render_table_markdown as render_table_markdown
from .render import render_verdict_json as render_verdict_json
from .render import render_verdict_markdown as render_verdict_markdown
from .scan import ScanReport as ScanReport
from .scan import scan as scan
from .tables import CensusTable as CensusTable
from .tables import TableFamily as TableFamily
from .tables import build_table as build_table
from .theorems import read_theorems as read_theorems
from .theorems import theorem_existence as theorem_existence
from .verdict import verdict as verdict
