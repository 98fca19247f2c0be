"""Exact automorphism groups of Frobenius groups (prod C_p^d) : C_n.

Thin dict/int front end over the compiled core. Specs are plain dicts:

    {"n": 15, "components": [{"p": 31, "constituents": [{"r": 1, "e": 4}]}]}
"""

import json

from ._frobaut import (
    OracleBoundError,
    ValidationError,
    __version__,
    analyze_json,
    analyze_text,
    aut_oracle_str,
    aut_order_str,
    normalizer_oracle_str,
    prime_power_complement_report as _pp_report,
    structure as _structure,
    sweep_json,
)

__all__ = [
    "OracleBoundError",
    "ValidationError",
    "__version__",
    "analyze",
    "analyze_to_text",
    "aut_order",
    "normalizer_oracle",
    "aut_oracle",
    "prime_power_complement_report",
    "structure",
    "sweep",
    "verify",
]

_ORDER_KEYS = ("centralizer_order", "normalizer_order", "kernel_order", "aut_order")


def _dump(spec):
    return spec if isinstance(spec, str) else json.dumps(spec)


def analyze(spec, with_timestamp=False):
    """Full report as a dict; exact orders are converted to python ints."""
    doc = json.loads(analyze_json(_dump(spec), with_timestamp))
    for key in _ORDER_KEYS:
        doc[key] = int(doc[key])
    for comp in doc["components"]:
        comp["centralizer_order"] = int(comp["centralizer_order"])
    return doc


def analyze_to_text(spec):
    return analyze_text(_dump(spec))


def aut_order(spec):
    """Exact |Aut(G)| as a python int."""
    return int(aut_order_str(_dump(spec)))


def structure(spec):
    return _structure(_dump(spec))


def normalizer_oracle(spec, limit=1 << 26):
    """Brute-force |N_{Aut(V)}(<h>)|; independent of the formula route."""
    return int(normalizer_oracle_str(_dump(spec), limit))


def aut_oracle(spec, limit=float(1 << 32)):
    """Brute-force |Aut(G)| on the explicit element table."""
    return int(aut_oracle_str(_dump(spec), limit))


def verify(spec, oracle="both", limit=1 << 26):
    """Cross-check formula vs oracle; returns {oracle_name: (formula, counted)}."""
    doc = analyze(spec)
    out = {}
    if oracle in ("normalizer", "both"):
        out["normalizer"] = (doc["normalizer_order"], normalizer_oracle(spec, limit))
    if oracle in ("aut", "both"):
        out["aut"] = (doc["aut_order"], aut_oracle(spec, float(limit) * limit))
    return out


def sweep(p, n, max_d):
    """Canonical single-prime specs for (p, n) up to dimension max_d."""
    return [json.loads(s) for s in sweep_json(p, n, max_d)]


def prime_power_complement_report(spec):
    return _pp_report(_dump(spec))
