"""Shared graphs and expected spectra for the test suite."""
