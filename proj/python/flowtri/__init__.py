"""Flow polytope triangulations, tau-tilting posets and h*-vectors.

Graphs are passed as JSON text, an edge list, or a dict in the graph JSON
format. Every function returns a decoded JSON report.
"""

import json
import os
import sys

if os.environ.get("FLOWTRI_EXT_DIR"):
    sys.path.insert(0, os.environ["FLOWTRI_EXT_DIR"])
    import _flowtri as _ext
else:
    from . import _flowtri as _ext

FlowtriError = _ext.FlowtriError

__all__ = ["FlowtriError", "generate", "contract", "framings", "analyze", "oracle", "fuzz"]


def _text(graph):
    return graph if isinstance(graph, str) else json.dumps(graph)


def generate(family, *args):
    """`generate("car", 8)` or `generate("gkn", 2, 7)`."""
    return json.loads(_ext.generate(family, list(args)))


def contract(graph, strip=True):
    """Complete contraction; `strip` drops source-to-sink edges."""
    return json.loads(_ext.contract(_text(graph), strip))


def framings(graph, enumerate=False):
    return json.loads(_ext.framings(_text(graph), enumerate))


def analyze(graph, framing="length", seed=1):
    """Full report; graphs that are not full are contracted first."""
    return json.loads(_ext.analyze(_text(graph), framing, seed))


def oracle(graph):
    return json.loads(_ext.oracle(_text(graph)))


def fuzz(count=200, seed=1):
    return json.loads(_ext.fuzz(count, seed))
