import io
import logging

import pytest

from mealygrowth import LOG_VERBOSE, configure_default_logger
from mealygrowth.logger import verbosity_level


@pytest.fixture
def package_logger():
    log = logging.getLogger("mealygrowth")
    handlers, level = list(log.handlers), log.level
    yield log
    for handler in list(log.handlers):
        if handler not in handlers:
            log.removeHandler(handler)
    log.setLevel(level)


@pytest.mark.parametrize("count, level", [(0, logging.INFO), (1, logging.DEBUG), (2, LOG_VERBOSE), (5, LOG_VERBOSE)])
def test_verbosity_level(count, level):
    assert verbosity_level(count) == level


def test_configure_replaces_previous_handlers(package_logger):
    first, second = io.StringIO(), io.StringIO()
    configure_default_logger(logging.DEBUG, stream=first)
    configure_default_logger(LOG_VERBOSE, stream=second)
    logging.getLogger("mealygrowth.semigroup").verbose("level %d done", 3)
    assert first.getvalue() == ""
    assert "[VERBOSE] mealygrowth.semigroup" in second.getvalue()
    assert second.getvalue().rstrip().endswith("level 3 done")


def test_verbose_filtered_at_debug(package_logger):
    stream = io.StringIO()
    configure_default_logger(logging.DEBUG, stream=stream)
    log = logging.getLogger("mealygrowth.search")
    log.verbose("hidden")
    log.debug("shown")
    assert "hidden" not in stream.getvalue()
    assert "shown" in stream.getvalue()
