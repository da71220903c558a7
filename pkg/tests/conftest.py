import pytest

import bpactuator as bp
from bpactuator import _backend


@pytest.fixture(scope="session", autouse=True)
def _warm_backend():
    # pay any JIT compilation once, outside timed assertions
    _backend.warm_up()


@pytest.fixture(scope="session")
def fitted() -> bp.FittedParameters:
    """Parameters fitted to the bundled anchor targets."""
    return bp.fit(bp.anchor_dataset())


@pytest.fixture(scope="session")
def fitted_balloon(fitted) -> bp.BalloonModel:
    return fitted.balloon()
