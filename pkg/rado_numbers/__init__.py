"""Rado numbers package.

Search and verification toolkit for two-color Rado numbers of x+y+kz=lw.
"""

__version__ = "0.1.0"
