"""Scalar arithmetic kernel with import-time backend selection.

The compiled Cython kernel is used when its extension module is built;
otherwise the pure-Python twin takes over. Set FMCOLOR_PURE_KERNEL=1 to
force the fallback (used by the benchmark and parity tests). Both backends
produce bit-identical canonical scalars.
"""

import os

if os.environ.get("FMCOLOR_PURE_KERNEL"):
    from fmcolor._kernel import pure as _impl
else:
    try:
        from fmcolor._kernel import _compiled as _impl  # type: ignore[attr-defined]
    except ImportError:
        from fmcolor._kernel import pure as _impl

Context = _impl.Context
Scalar = _impl.Scalar
make_context = _impl.make_context
make_scalar = _impl.make_scalar
coerce = _impl.coerce
KERNEL_NAME = _impl.KERNEL_NAME

__all__ = [
    "Context",
    "Scalar",
    "make_context",
    "make_scalar",
    "coerce",
    "KERNEL_NAME",
]
