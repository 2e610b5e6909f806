# -*- coding: utf-8 -*-
#
# Copyright (c) 2026 The mealygrowth developers
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.
#

import logging
import sys
from typing import Optional, TextIO

__all__ = ["configure_default_logger", "verbosity_level", "LOG_VERBOSE"]

LOG_VERBOSE = 5

_FORMAT = "{asctime} [{levelname}] {name}.{funcName}(): {message}"
_PACKAGE = "mealygrowth"

_logger = logging.getLogger(_PACKAGE)
_logger.addHandler(logging.NullHandler())


def _verbose(self: logging.Logger, msg, *args, **kwargs):
    if self.isEnabledFor(LOG_VERBOSE):
        self._log(LOG_VERBOSE, msg, args, **kwargs)


logging.addLevelName(LOG_VERBOSE, "VERBOSE")
logging.verbose = _verbose
logging.Logger.verbose = _verbose


def verbosity_level(count: int) -> int:
    """``-v`` flags to a level: none is INFO, one DEBUG, two or more VERBOSE"""
    return {0: logging.INFO, 1: logging.DEBUG}.get(count, LOG_VERBOSE)


def configure_default_logger(
    level: int = logging.INFO,
    filename: Optional[str] = None,
    logger: Optional[str] = None,
    stream: Optional[TextIO] = None,
):
    """
    Configure basic logging for the package.  `level` sets the logging level, the default is ``logging.INFO``.
    Per-level enumeration details, refinement rounds and search progress are only logged at the
    ``LOG_VERBOSE`` level, import it from the `mealygrowth.logger` module to see them.

    Records go to `stream`, stderr by default, so data written to stdout is never mixed with the log.
    Set `filename` to also write the log to a file.

    Only the 'mealygrowth' logger is configured unless `logger` names another one to configure
    as well, use an empty string (``''``) for the root logger.  Calling this again replaces the
    handlers installed by the previous call.
    """
    loggers = [logging.getLogger(_PACKAGE)]
    if logger is not None and logger != _PACKAGE:
        loggers.append(logging.getLogger(logger or None))

    formatter = logging.Formatter(fmt=_FORMAT, style="{")
    handlers = [logging.StreamHandler(stream=stream or sys.stderr)]
    if filename:
        handlers.append(logging.FileHandler(filename, encoding="utf-8"))
    for handler in handlers:
        handler.setFormatter(formatter)
        handler._mealygrowth_default = True

    for log in loggers:
        for old in [h for h in log.handlers if getattr(h, "_mealygrowth_default", False)]:
            log.removeHandler(old)
            old.close()
        log.setLevel(level)
        for handler in handlers:
            log.addHandler(handler)
