"""Frobenius-Schur indicators of group-theoretical fusion categories C(G, H).

Groups are given as spec strings such as ``"sym:6"``, ``"tilde-sym:7"`` or
``"gens:(1,2)(3,4);(1,3)@4"``. Reports are plain dicts with the same layout
as the ``fsind`` command's ``--json`` output.
"""

import json

from ._fsind import BoundExceeded, ParseError, canonical_spec, claims, group_order
from . import _fsind

__all__ = [
    "BoundExceeded",
    "ParseError",
    "canonical_spec",
    "census",
    "claims",
    "double_cosets",
    "group_order",
    "indicators",
    "indicators_csv",
    "verify",
    "verify_all",
]


def indicators(G, H, m=2, *, threads=0, enumeration_bound=1_000_000, index_bound=100_000):
    """Indicator report for every simple object of C(G, H)."""
    return json.loads(_fsind.indicators_json(G, H, m, threads, enumeration_bound, index_bound))


def indicators_csv(G, H, m=2):
    return _fsind.indicators_csv(G, H, m)


def double_cosets(G, H):
    return json.loads(_fsind.double_cosets_json(G, H))


def census(l, n, method="orbit"):
    """(total, null) counts of S_l double cosets in S_n."""
    return _fsind.census(l, n, method)


def verify(claim, **params):
    return json.loads(_fsind.verify_json(claim, params))


def verify_all(profile="quick"):
    return json.loads(_fsind.verify_all_json(profile))
