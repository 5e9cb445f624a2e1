"""Monotone metric embeddings, graph sphericity certificates and spectral
near-bipartite recovery."""

from ._specmono import *  # noqa: F401,F403
from ._specmono import __version__  # noqa: F401
