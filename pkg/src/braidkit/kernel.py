"""Kernel backend selection.

The permutation-level operations exist twice: a compiled Cython extension
(``braidkit._kernel_c``) and a pure-Python reference (``braidkit._kernel_py``)
with identical semantics.  The compiled one is preferred when it imported
successfully; set ``BRAIDKIT_KERNEL=python`` (or ``c``) to force a choice.

Everything above this module calls through the thin delegators below, so the
active backend can also be swapped at runtime with :func:`use_backend` --
that hook exists for the backend-comparison benchmark and for tests, not for
concurrent use.
"""

from __future__ import annotations

import os

from . import _kernel_py

_BACKENDS = {"python": _kernel_py}

try:
    from . import _kernel_c  # type: ignore[attr-defined]

    _BACKENDS["c"] = _kernel_c
except ImportError:
    _kernel_c = None

_FORCED = os.environ.get("BRAIDKIT_KERNEL", "").strip().lower()
if _FORCED in ("", "auto"):
    _impl = _BACKENDS.get("c", _kernel_py)
elif _FORCED in _BACKENDS:
    _impl = _BACKENDS[_FORCED]
else:
    raise ImportError(
        f"BRAIDKIT_KERNEL={_FORCED!r} is not available; "
        f"choices: {sorted(_BACKENDS)} or 'auto'"
    )


def available_backends() -> tuple[str, ...]:
    return tuple(sorted(_BACKENDS))


def backend_name() -> str:
    return "c" if _impl is _BACKENDS.get("c") else "python"


def use_backend(name: str) -> str:
    """Switch the active backend; returns the previous backend's name."""
    global _impl
    if name not in _BACKENDS:
        raise ValueError(f"unknown kernel backend {name!r}; have {sorted(_BACKENDS)}")
    previous = backend_name()
    _impl = _BACKENDS[name]
    return previous


def identity(n):
    return _impl.identity(n)


def delta(n):
    return _impl.delta(n)


def compose(a, b):
    return _impl.compose(a, b)


def invert(a):
    return _impl.invert(a)


def inv_count(a):
    return _impl.inv_count(a)


def tau(a):
    return _impl.tau(a)


def right_complement(a):
    return _impl.right_complement(a)


def left_complement(a):
    return _impl.left_complement(a)


def join(a, b):
    return _impl.join(a, b)


def meet(a, b):
    return _impl.meet(a, b)


def is_prefix(a, b):
    return _impl.is_prefix(a, b)


def is_left_weighted(s, t):
    return _impl.is_left_weighted(s, t)


def normalize_factors(factors, n):
    return _impl.normalize_factors(factors, n)


def is_normal(factors, n):
    return _impl.is_normal(factors, n)
