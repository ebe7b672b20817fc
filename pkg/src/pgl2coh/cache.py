"""On-disk cache of reduced Groebner bases.

Entries are keyed by (genus, mode, degree cap, engine version) and stored as
canonical polynomial text, so a cached basis is exactly the computed one.
Set PGL2COH_CACHE_DIR to move the cache and PGL2COH_NO_CACHE=1 to bypass it.
"""

import json
import os
from pathlib import Path

from . import __version__
from .expr import parse_polynomial
from .polynomial import format_poly


def cache_dir():
    if os.environ.get("PGL2COH_NO_CACHE"):
        return None
    root = os.environ.get("PGL2COH_CACHE_DIR")
    if root:
        return Path(root)
    base = os.environ.get("XDG_CACHE_HOME") or Path.home() / ".cache"
    return Path(base) / "pgl2coh"


def _path(genus, mode, cap):
    d = cache_dir()
    if d is None:
        return None
    return d / f"basis-g{genus}-{mode}-cap{cap}-v{__version__}.json"


def prime(ideal, genus, mode):
    """Fill ideal's Groebner basis from the cache, computing and storing it on a miss."""
    path = _path(genus, mode, ideal.degree_cap)
    if path is None:
        return ideal.basis
    generators = [format_poly(f) for f in ideal.generators]
    try:
        data = json.loads(path.read_text())
        if data["generators"] == generators:
            ideal.set_basis(parse_polynomial(t) for t in data["basis"])
            return ideal.basis
    except (OSError, ValueError, KeyError):
        pass
    basis = ideal.basis
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".tmp")
        tmp.write_text(json.dumps({"generators": generators, "basis": [format_poly(f) for f in basis]}))
        tmp.replace(path)
    except OSError:
        pass
    return basis
