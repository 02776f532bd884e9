"""Enumeration size guards shared by the group/graph builders."""

import os

DEFAULT_CAP = 2 ** 22        # elements in an exhaustive enumeration
DENSE_VERTEX_CAP = 2 ** 15   # vertices in a dense adjacency store


class CapExceeded(RuntimeError):
    """An enumeration would exceed the configured size cap."""


def enumeration_cap(override=None):
    """Active element cap: explicit override > HEISENLAB_CAP env var > default."""
    if override is not None:
        return int(override)
    env = os.environ.get("HEISENLAB_CAP")
    if env is not None:
        return int(env)
    return DEFAULT_CAP


def check_cap(size, cap=None, what="enumeration"):
    cap = enumeration_cap(cap)
    if size > cap:
        raise CapExceeded(f"{what} needs {size} elements, cap is {cap} "
                          f"(override via HEISENLAB_CAP or the cap argument)")
    return size
