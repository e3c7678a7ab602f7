import pytest

from tamewild.localfield import eisenstein_root, qp, qp_zeta


@pytest.fixture(scope="session")
def q5():
    return qp(5, 16)


@pytest.fixture(scope="session")
def q3():
    return qp(3, 16)


@pytest.fixture(scope="session")
def q2():
    return qp(2, 16)


@pytest.fixture(scope="session")
def z3():
    """Q_3(zeta_3)."""
    return qp_zeta(3, 16)


@pytest.fixture(scope="session")
def z5():
    """Q_5(zeta_5)."""
    return qp_zeta(5, 16)


@pytest.fixture(scope="session")
def sqrt3():
    return eisenstein_root(3, 2, 16)


@pytest.fixture(scope="session")
def cbrt3():
    return eisenstein_root(3, 3, 16)
