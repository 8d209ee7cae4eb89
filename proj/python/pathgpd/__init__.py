"""Finite groupoid verification engine (native core)."""

try:
    from ._pathgpd import *  # noqa: F401,F403  (installed layout)
except ImportError:  # development layout: extension on sys.path directly
    from _pathgpd import *  # noqa: F401,F403
