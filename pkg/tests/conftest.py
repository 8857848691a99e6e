import pytest

from gaugemods import affine_space, circle_variety, sphere_variety


@pytest.fixture(scope="session")
def sphere():
    return sphere_variety()


@pytest.fixture(scope="session")
def circle():
    return circle_variety()


@pytest.fixture(scope="session")
def affine1():
    return affine_space(["x"])


@pytest.fixture(scope="session")
def affine2():
    return affine_space(["x", "y"])


@pytest.fixture(scope="session")
def affine3():
    return affine_space(["x", "y", "z"])
