"""Exact computation of crossing numbers of rectilinear drawings of uniform hypergraphs."""

__version__ = "0.1.0"
