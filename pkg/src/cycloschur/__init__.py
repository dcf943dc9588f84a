"""Exact computations for cyclotomic q-Schur algebras and Ariki-Koike algebras."""

__version__ = "0.1.0"
