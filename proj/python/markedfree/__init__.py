"""Exact free-ball markings of the real-line Thompson group.

Thin convenience layer over the C++ core: PLMap is the native class; composite
artifacts (bundles, certificates, witnesses, reports) travel as JSON-compatible
dicts with exact "num/den" rational strings.
"""

import json as _json

from ._core import (  # noqa: F401
    PLMap,
    Word,
    f1,
    f2,
    compose,
    invert,
    conjugate,
    commutator,
    eval_word,
    express_word,
    is_thompson_element,
    is_special,
    transport_to_unit,
    transport_from_unit,
    __version__,
)
from . import _core as _c

__all__ = [
    "PLMap", "Word", "f1", "f2", "compose", "invert", "conjugate", "commutator",
    "eval_word", "express_word", "is_thompson_element", "is_special",
    "transport_to_unit", "transport_from_unit", "build_marking",
    "verify_free_ball", "generation_witness", "check_no_relations",
    "distance_to_free", "free_pair", "__version__",
]


def build_marking(n, seed=42, budget=256):
    """Construct the marking bundle (g_n, h_n) as a dict."""
    return _json.loads(_c.build_marking_json(n, seed, budget))


def verify_free_ball(bundle, threads=1):
    """Exhaustively verify a bundle's free ball; returns the certificate dict."""
    return _json.loads(_c.verify_free_ball_json(_json.dumps(bundle), threads))


def generation_witness(bundle):
    """Generation witness SLPs for p_n and q_n, verified bit-exactly."""
    return _json.loads(_c.generation_witness_json(_json.dumps(bundle)))


def check_no_relations(maps, radius, threads=1):
    """Exhaustive relation check on a tuple of PLMaps."""
    return _json.loads(_c.check_no_relations_json(list(maps), radius, threads))


def distance_to_free(maps, cutoff, threads=1):
    """Distance report for a marked tuple against the free group."""
    return _json.loads(_c.distance_to_free_json(list(maps), cutoff, threads))


def free_pair(n, seed=42, budget=256):
    """Certified free pair (a_n, b_n); returns (a, b, certificate_dict)."""
    a, b, cert = _c.free_pair_json(n, seed, budget)
    return a, b, _json.loads(cert)


def bundle_maps(bundle):
    """The marking tuple (g, h) of a bundle dict, as PLMaps."""
    return PLMap.from_json(_json.dumps(bundle["g"])), PLMap.from_json(_json.dumps(bundle["h"]))
