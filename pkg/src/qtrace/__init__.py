"""Exact SL_n quantum traces on triangulated polygons and their behaviour under flips."""

__version__ = "0.1.0"
