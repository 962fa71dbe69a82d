from functools import lru_cache

import pytest

from schur_eq.shapes import SkewShape, connected_skew_shapes, parse_shape


@lru_cache(maxsize=None)
def shapes_up_to(max_boxes: int) -> tuple:
    return tuple(connected_skew_shapes(max_boxes))


def sh(text: str) -> SkewShape:
    return parse_shape(text)


@pytest.fixture(scope="session")
def shapes8():
    return shapes_up_to(8)


@pytest.fixture(scope="session")
def shapes9():
    return shapes_up_to(9)


@pytest.fixture(scope="session")
def shapes10():
    return shapes_up_to(10)
