"""Spanning-tree packing and the spectral extremal graphs around it."""

__version__ = "0.1.0"
