import pytest


def pytest_sessionstart(session):
    try:
        import peakfn  # noqa: F401
    except ImportError:
        pytest.exit("peakfn is not installed (pip install --no-build-isolation -e .)", returncode=77)
