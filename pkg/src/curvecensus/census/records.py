"""
This module defines the records produced by the census.
"""

from typing import Optional, Self

from pydantic import BaseModel, ConfigDict, Field, model_validator

from curvecensus.cubic import CubicClassSolution
from curvecensus.gonal import GonalRecipe
from curvecensus.invariants import Triple
from curvecensus.liaison import LiaisonStep
from curvecensus.models import ModelRecord
from curvecensus.utils import Tristate

type ComponentModel = ModelRecord | CubicClassSolution | GonalRecipe | LiaisonStep


class ComponentRecord(BaseModel):
    """
    An irreducible component of a Hilbert scheme.

    Attributes:
        description (str): How the general curve arises.
        model (ComponentModel | None): The data the component is built from.
        glevel_dim (int | None): Dimension of the family of pairs
            (curve, series), modulo automorphisms.
        dim (int | None): Dimension of the component.
        dim_expected (int): Minimal dimension of any component.
    """

    model_config = ConfigDict(frozen=True)

    description: str
    model: Optional[ComponentModel] = None
    glevel_dim: Optional[int] = None
    dim: Optional[int] = None
    dim_expected: int

    @model_validator(mode="after")
    def _check_lower_bound(self) -> Self:
        if self.dim is not None and self.dim < self.dim_expected:
            raise ValueError(
                f"dim={self.dim} is below the minimal dimension {self.dim_expected}"
            )
        return self


class Verdict(BaseModel):
    """
    Existence and irreducibility of a Hilbert scheme of linearly normal curves.

    Attributes:
        triple (Triple): Degree, genus and ambient dimension.
        alpha (int): Index of speciality.
        exists (Tristate): Whether smooth curves exist.
        irreducible (Tristate): Whether the Hilbert scheme is irreducible.
        components (list[ComponentRecord]): Known components.
        citations (list[str]): Anchors of the facts used.
        notes (list[str]): Remarks on the verdict.
    """

    model_config = ConfigDict(frozen=True)

    triple: Triple
    alpha: int
    exists: Tristate
    irreducible: Tristate
    components: list[ComponentRecord] = []
    citations: list[str] = Field(min_length=1)
    notes: list[str] = []

    @model_validator(mode="after")
    def _check_consistency(self) -> Self:
        if self.alpha != self.triple.alpha:
            raise ValueError(f"alpha={self.alpha} but g - d + r = {self.triple.alpha}")
        if self.exists is Tristate.NO:
            if self.components:
                raise ValueError("an empty Hilbert scheme has no components")
            if self.irreducible is Tristate.YES:
                raise ValueError("an empty Hilbert scheme is not irreducible")
        if self.irreducible is Tristate.YES and len(self.components) > 1:
            raise ValueError("an irreducible Hilbert scheme has one component")
        return self
