"""Exact Dolbeault, de Rham, Bott-Chern and Aeppli cohomology of bigraded complexes."""

import json

from ._hodgekit import (
    DEFAULT_SEED,
    HodgekitError,
    catalog_names,
    catalog_text,
    homotopy_coefficients,
    normalize_model,
    run_cli,
    run_json,
)

__all__ = [
    "DEFAULT_SEED",
    "HodgekitError",
    "catalog_names",
    "catalog_text",
    "compute",
    "homotopy_coefficients",
    "normalize_model",
    "run_cli",
    "verify",
]


def _call(command, model, flavors, checks, seed):
    code, out, err = run_json(command, model, list(flavors), list(checks), seed)
    if code == 2:
        raise HodgekitError(err.strip())
    result = json.loads(out) if out else {}
    result["exit_code"] = code
    return result


def compute(model, flavors=("dolbeault",), seed=DEFAULT_SEED):
    """Cohomology tables of a catalog model or model file, as a dict."""
    return _call("compute", model, flavors, (), seed)


def verify(model, checks=(), flavors=(), seed=DEFAULT_SEED):
    """Runs checks (the model's defaults when empty); `exit_code` is 1 if any failed."""
    return _call("verify", model, flavors, checks, seed)
