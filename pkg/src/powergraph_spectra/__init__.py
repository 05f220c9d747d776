"""Power graph spectra - exact spectral toolkit for power graphs of finite groups."""

__version__ = "0.1.0"
