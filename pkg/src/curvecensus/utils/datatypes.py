"""
This module defines custom datatypes used throughout the project.
"""

from __future__ import annotations

from enum import StrEnum
from typing import Annotated

from annotated_types import Ge


class Tristate(StrEnum):
    """
    A three-valued answer.

    `UNKNOWN` is never upgraded to `YES` or `NO` by combining answers.
    """

    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"

    @classmethod
    def from_bool(cls, value: bool) -> Tristate:
        return cls.YES if value else cls.NO

    def __and__(self, other: Tristate) -> Tristate:
        if Tristate.NO in (self, other):
            return Tristate.NO
        if Tristate.UNKNOWN in (self, other):
            return Tristate.UNKNOWN
        return Tristate.YES


type PositiveInt = Annotated[int, Ge(1)]
type NonNegativeInt = Annotated[int, Ge(0)]
