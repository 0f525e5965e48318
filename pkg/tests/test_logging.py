"""
Tests for the structlog configuration
"""

import logging

import pytest
import structlog

import fusion_nilpotency  # noqa: F401
from fusion_nilpotency.logging_setup import configure_library_logging, configure_logging


@pytest.fixture
def fresh_logging():
    structlog.reset_defaults()
    yield
    structlog.reset_defaults()
    configure_library_logging()


@pytest.mark.unit
def test_package_import_configures_logging():
    assert structlog.is_configured()


@pytest.mark.unit
def test_library_default_drops_debug_events(fresh_logging, caplog, capsys):
    configure_library_logging()
    log = structlog.get_logger("fusion_nilpotency.tests")
    with caplog.at_level(logging.DEBUG):
        log.debug("hidden event")
        log.info("quiet event")
        log.warning("visible event", degree=2)
    assert "hidden event" not in caplog.text
    assert "quiet event" not in caplog.text
    assert "visible event" in caplog.text
    assert "hidden event" not in capsys.readouterr().out


@pytest.mark.unit
def test_library_default_keeps_existing_configuration(fresh_logging, caplog):
    configure_logging("DEBUG")
    configure_library_logging()
    log = structlog.get_logger("fusion_nilpotency.tests")
    with caplog.at_level(logging.DEBUG):
        log.debug("debug event")
    assert "debug event" in caplog.text
