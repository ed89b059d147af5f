"""Intensional type theory with senses: types, formulas, predicativity, finite models."""

__version__ = "0.1.0"
