"""Crossout correspondence between permutations and labeled Dyck path pairs,
identity checks, and the dinner game engine."""

import json
from fractions import Fraction

from . import _core
from ._core import (
    ConstraintViolation,
    GameService,
    GuardLimitError,
    MAX_SWEEP_SIZE,
    MoveError,
    StateError,
    ValidationError,
    canonical_suite,
    crossout_mark,
    down_steps,
    enumerate_dyck,
    enumerate_hermite,
    heights,
    hermite_to_matching,
    mark_order,
    matching_to_hermite,
    random_permutation,
    suite_names,
)

__all__ = [
    "ConstraintViolation",
    "GameService",
    "GuardLimitError",
    "MAX_SWEEP_SIZE",
    "MoveError",
    "StateError",
    "ValidationError",
    "alice_probability",
    "canonical_suite",
    "crossout_mark",
    "decode",
    "down_steps",
    "encode",
    "enumerate_dyck",
    "enumerate_hermite",
    "heights",
    "hermite_to_matching",
    "mark_order",
    "matching_to_hermite",
    "playout_optimal",
    "random_permutation",
    "run_suite",
    "stats",
    "suite_names",
]


def encode(w):
    """Tuple dict {pa, pb, ell, em, parity} of a permutation (list of 1..N)."""
    return json.loads(_core.encode_json(list(w)))


def decode(t):
    """Permutation (list) of a tuple dict, inverse of encode."""
    return _core.decode_json(json.dumps(t))


def stats(w):
    """aa, ab, ba, bb, inv, and z for even N."""
    return json.loads(_core.stats_json(list(w)))


def alice_probability(n, ranks):
    num, den = _core.alice_probability_parts(n, list(ranks))
    return Fraction(int(num), int(den))


def run_suite(suite, n, force=False):
    """IdentityReport dicts for one suite at parameter n."""
    return [json.loads(r) for r in _core.run_suite_json(suite, n, force)]


def playout_optimal(w):
    """Move records of optimal play by both sides."""
    return json.loads(_core.playout_optimal_json(list(w)))
