"""t-spread principal Borel ideals: generators, duality, Rees algebra and powers."""

import json

from ._tspread import (
    ClaimViolation,
    GuardExceeded,
    HypothesisViolation,
    associated_primes,
    buchberger_verify,
    closure_oracle,
    decompose,
    dual,
    ell_exchange,
    facets,
    fiber_dimension,
    generators,
    limdepth_witness,
    persistence,
    power_depth,
    rees_gb,
    reproduce_json,
    scm_profile,
    sort,
)


def reproduce(seed=None):
    """Run the worked-example checks; returns the report as a dict."""
    raw = reproduce_json() if seed is None else reproduce_json(seed)
    return json.loads(raw)


__all__ = [
    "ClaimViolation",
    "GuardExceeded",
    "HypothesisViolation",
    "associated_primes",
    "buchberger_verify",
    "closure_oracle",
    "decompose",
    "dual",
    "ell_exchange",
    "facets",
    "fiber_dimension",
    "generators",
    "limdepth_witness",
    "persistence",
    "power_depth",
    "rees_gb",
    "reproduce",
    "scm_profile",
    "sort",
]
