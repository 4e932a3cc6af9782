"""Exact constructions of cyclotomic Hecke and Schur algebras."""

__version__ = "0.1.0"
