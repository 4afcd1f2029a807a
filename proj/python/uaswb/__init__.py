"""Python front end to the uaswb core library."""

import json

from . import _core
from ._core import CapExceeded, SpecError, WindowExceeded, catalog, configure, gamma, parse_ideal, suites
from ._core import truncation_dim, truncation_kernel_dim

__all__ = [
    "CapExceeded",
    "SpecError",
    "WindowExceeded",
    "catalog",
    "character",
    "classify",
    "codim",
    "configure",
    "gamma",
    "gen_degree",
    "ideal",
    "parse_ideal",
    "quotient_series",
    "suites",
    "truncation_dim",
    "truncation_kernel_dim",
    "verify",
    "verify_schema",
]


def ideal(spec, window=-1):
    """Window of the ideal described by an ideal expression, as a dict."""
    return json.loads(_core.ideal_json(spec, window))


def quotient_series(spec):
    return json.loads(_core.series_json(spec))


def gen_degree(spec):
    return json.loads(_core.gen_degree_json(spec))["gen_degree"]


def character(spec, n, top=False):
    """Irreducible multiplicities of the arity-n component, keyed by partition."""
    return json.loads(_core.character_json(spec, n, top))["multiplicities"]


def classify(gkdim):
    return json.loads(_core.classify_json(gkdim))


def codim(algebra, n, mode="auto", seed=0, samples=0):
    result = json.loads(_core.codim_json(algebra, n, mode, seed, samples))
    result["value"] = int(result["value"])
    return result


def verify(suite):
    return json.loads(_core.verify_json(suite))


def verify_schema():
    return json.loads(_core.verify_schema())
