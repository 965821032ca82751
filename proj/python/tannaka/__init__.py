"""Exact Tannaka reconstruction: End^v(F) and its structure from a presented category."""

import json
import os

from . import _core
from ._core import (
    DimensionMismatch,
    InvalidInput,
    ParseError,
    UnsupportedProblem,
    WellDefinednessError,
    coherence_equal,
    eval_in_vec,
    permutation,
)

__all__ = [
    "DimensionMismatch",
    "InvalidInput",
    "ParseError",
    "UnsupportedProblem",
    "WellDefinednessError",
    "characters",
    "coherence",
    "coherence_equal",
    "eval_in_vec",
    "fixture",
    "lift",
    "nat",
    "permutation",
    "reconstruct",
    "rho_tilde",
    "validate",
]


def fixture(name):
    """A shipped fixture document as a dict."""
    directory = os.environ.get("TANNAKA_FIXTURES", _core.fixture_dir)
    with open(os.path.join(directory, name + ".json")) as f:
        return json.load(f)


def _text(doc):
    return doc if isinstance(doc, str) else json.dumps(doc)


def _command(fn):
    def run(doc, field=None):
        return json.loads(fn(_text(doc), field))

    run.__name__ = fn.__name__
    run.__doc__ = "Runs `%s` on a document (dict or JSON text); returns the report dict." % fn.__name__
    return run


validate = _command(_core.validate)
reconstruct = _command(_core.reconstruct)
lift = _command(_core.lift)
rho_tilde = _command(_core.rho_tilde)
nat = _command(_core.nat)
characters = _command(_core.characters)


def coherence(lhs, rhs, dims=None):
    """Equality of two symmetry expressions, with a matrix cross-check."""
    return json.loads(_core.coherence(lhs, rhs, dims))
