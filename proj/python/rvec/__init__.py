"""Python bindings for the rvec interpreter and shape checker."""

import json as _json

from ._rvec import (
    EXIT_CLEAN,
    EXIT_ERRORS,
    EXIT_IO,
    EXIT_SYNTAX,
    EXIT_WARNINGS,
    CommandResult,
    RSyntaxError,
    deparse,
    diff,
    parse,
    run,
    tokenize,
)
from ._rvec import check as _check

__all__ = [
    "EXIT_CLEAN",
    "EXIT_ERRORS",
    "EXIT_IO",
    "EXIT_SYNTAX",
    "EXIT_WARNINGS",
    "CommandResult",
    "RSyntaxError",
    "check",
    "check_json",
    "deparse",
    "diff",
    "parse",
    "run",
    "tokenize",
]


def check(source, *, types=False, strict_recycle=False, name="<string>"):
    return _check(source, types=types, strict_recycle=strict_recycle, name=name)


def check_json(source, *, types=False, strict_recycle=False):
    """Run the checker and decode its JSON report."""
    r = _check(source, types=types, strict_recycle=strict_recycle)
    if r.exit_code == EXIT_SYNTAX:
        raise RSyntaxError(r.err.strip())
    return _json.loads(r.out)
