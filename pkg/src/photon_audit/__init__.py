"""Numerical reproduction and audit of a classical guided-photon model."""

__version__ = "0.1.0"
