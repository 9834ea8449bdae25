"""Strong vertex/edge span of trees: python bindings over the C++ core."""

try:
    from ._treespan import *  # noqa: F401,F403  (installed package layout)
except ImportError:
    from _treespan import *  # noqa: F401,F403  (in-tree build: module on sys.path)
