"""Step-kernel backends.

Two interchangeable implementations of the walk step kernel live here: a
compiled Cython extension (``_walkcore``) and a pure-numpy fallback
(``_purepy``).  They are bit-identical by construction; the compiled one is
simply faster and releases the GIL.

Selection happens once at import time.  The ``HANOIHASH_KERNEL`` environment
variable forces a backend: ``compiled`` / ``purepy`` (``auto`` or unset picks
the extension when it is importable).
"""

from __future__ import annotations

import os


def _load(name: str):
    if name == "compiled":
        from . import _walkcore

        return _walkcore
    from . import _purepy

    return _purepy


_ALIASES = {
    "": "auto",
    "auto": "auto",
    "compiled": "compiled",
    "cython": "compiled",
    "purepy": "purepy",
    "python": "purepy",
    "numpy": "purepy",
}

_choice = os.environ.get("HANOIHASH_KERNEL", "").strip().lower()
if _choice not in _ALIASES:
    raise ImportError(
        f"HANOIHASH_KERNEL={_choice!r} not understood; use 'compiled', 'purepy' or 'auto'"
    )

if _ALIASES[_choice] == "auto":
    try:
        _impl = _load("compiled")
        BACKEND = "compiled"
    except ImportError:
        _impl = _load("purepy")
        BACKEND = "purepy"
else:
    BACKEND = _ALIASES[_choice]
    _impl = _load(BACKEND)

run_schedule = _impl.run_schedule


def available_backends() -> tuple[str, ...]:
    """Names of the backends importable in this installation."""
    names = []
    try:
        _load("compiled")
        names.append("compiled")
    except ImportError:
        pass
    names.append("purepy")
    return tuple(names)


def get_backend(name: str):
    """Return a specific backend module (for benchmarks and equivalence tests)."""
    key = _ALIASES.get(name.strip().lower())
    if key not in ("compiled", "purepy"):
        raise ValueError(f"unknown kernel backend {name!r}")
    return _load(key)
