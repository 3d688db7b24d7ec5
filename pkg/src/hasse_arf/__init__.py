"""Ramification of Artin-Schreier-Witt towers over F_p((x)) and the Hasse-Arf property."""

__version__ = "0.1.0"
