import numpy as np
import pytest

from qpfloquet.qpseq import EquationCoefficients


def random_complex(rng, n, lo=0.5, hi=2.0):
    """n complex numbers with modulus in [lo, hi] and uniform phase."""
    return rng.uniform(lo, hi, n) * np.exp(1j * rng.uniform(0, 2 * np.pi, n))


def random_coeffs(rng, p, ratio=None, real=False):
    if real:
        a = rng.uniform(0.5, 2, p) * rng.choice([-1, 1], p)
        c = rng.uniform(0.5, 2, p) * rng.choice([-1, 1], p)
        b = rng.uniform(-2, 2, p)
        r = 1.0 if ratio is None else ratio
        return EquationCoefficients.from_values(a, b, c, r)
    if ratio is None:
        ratio = random_complex(rng, 1)[0]
    return EquationCoefficients.from_values(
        random_complex(rng, p), random_complex(rng, p, 0.0, 2.0), random_complex(rng, p), ratio
    )


def rel_err(x, y):
    return abs(x - y) / (1 + max(abs(x), abs(y)))


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


_ACCEPTANCE = {}


def pytest_runtest_logreport(report):
    if "test_acceptance" not in report.nodeid:
        return
    props = dict(report.user_properties)
    if "criterion" not in props:
        return
    if report.when == "call" or (report.when == "setup" and report.failed):
        _ACCEPTANCE[props["criterion"]] = ("PASS" if report.passed else "FAIL", props["detail"])


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        status, detail = _ACCEPTANCE[number]
        terminalreporter.write_line(f"ACCEPTANCE {number} {status}: {detail}")
