"""Finite groups realized as automorphism groups of finite posets."""

import json

from ._core import (
    FintopError,
    Group,
    Space,
    automorphisms,
    build_base,
    build_space,
    check_names,
    core,
    expected_b1,
    group,
    group_from_json,
    homology,
    space_from_json,
)
from ._core import verify_all as _verify_all


def verify_all(group, gens=None, mode="sandt:1", family_range=(1, 2, 3), skip=(), only=None):
    """Run the checks and return the report as a dict without timing fields."""
    return json.loads(_verify_all(group, gens, mode, list(family_range), set(skip), only))


__all__ = [
    "FintopError",
    "Group",
    "Space",
    "automorphisms",
    "build_base",
    "build_space",
    "check_names",
    "core",
    "expected_b1",
    "group",
    "group_from_json",
    "homology",
    "space_from_json",
    "verify_all",
]
