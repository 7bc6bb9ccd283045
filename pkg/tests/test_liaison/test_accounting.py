"""Unit tests for accounting module."""

import pytest

from curvecensus.errors import ScopeError
from curvecensus.liaison import linkage_dimension_account
from curvecensus.utils.library import ItemNotFoundError


def test_account_degree_ten() -> None:
    account = linkage_dimension_account(10, 11, 4, 4)
    assert (account.step.e, account.step.h) == (6, 3)
    assert account.surfaces_residual == 13
    assert account.surfaces_source == 5
    assert account.dim_residual_hilbert == 24
    assert account.fiber_down == 22
    assert account.sigma_dim == 46
    assert account.fiber_up == 6
    assert account.component_dim == 40


def test_account_degree_eleven() -> None:
    account = linkage_dimension_account(11, 12, 4, 4)
    assert account.sigma_dim == 44
    assert account.fiber_up == 0
    assert account.component_dim == 44


def test_account_explicit_dimension() -> None:
    account = linkage_dimension_account(10, 11, 4, 4, dim_residual_hilbert=30)
    assert account.component_dim == 46
    assert account.citations


def test_account_errors() -> None:
    with pytest.raises(ScopeError):
        linkage_dimension_account(10, 11, 3, 4)
    with pytest.raises(ItemNotFoundError):
        linkage_dimension_account(9, 7, 4, 4)
