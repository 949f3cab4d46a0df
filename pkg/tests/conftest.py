from __future__ import annotations

import pytest

from core.braid import BraidMonoid
from core.ore import OreGroup
from core.toy import CyclicGroup, FreeAbelianMonoid


@pytest.fixture
def b3() -> BraidMonoid:
    return BraidMonoid(3)


@pytest.fixture
def n2() -> FreeAbelianMonoid:
    return FreeAbelianMonoid(2)


@pytest.fixture
def z6() -> CyclicGroup:
    return CyclicGroup(6)


@pytest.fixture
def g3(b3: BraidMonoid) -> OreGroup:
    return OreGroup(b3)
