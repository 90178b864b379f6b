"""Exact stable commutator length for words in free groups."""

import json
from fractions import Fraction

from . import _core
from ._core import InputError, InvariantViolation, ResourceLimit, reduce

__all__ = [
    "InputError",
    "InvariantViolation",
    "ResourceLimit",
    "reduce",
    "scl",
    "compute",
    "surface",
    "turn_graph_dot",
    "oracle_bound",
]


def compute(word, max_circuits=1_000_000, verify=False):
    """Full result record as a dict (same schema as ``scl --json``)."""
    return json.loads(_core.compute_scl(word, max_circuits, verify))


def scl(word, max_circuits=1_000_000):
    """scl as a Fraction, or ``float('inf')`` outside [F, F]."""
    value = compute(word, max_circuits)["scl"]
    if value == "infinite":
        return float("inf")
    return Fraction(int(value["num"]), int(value["den"]))


def surface(word, max_circuits=1_000_000):
    return json.loads(_core.surface(word, max_circuits))


def turn_graph_dot(word):
    return _core.dot(word)


def oracle_bound(word, n_max):
    """Minimum of |w|/4 - inner/(2n) over all surfaces of degree n <= n_max."""
    return Fraction(_core.oracle(word, n_max))
