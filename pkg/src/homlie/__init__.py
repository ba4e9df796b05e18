"""Hom-Lie algebras, coalgebras and bialgebras over exact scalars."""

__version__ = "0.1.0"
