"""Borcherds products of Del Pezzo lattices, Eguchi-Hanson numerics and torsion bookkeeping."""

__version__ = "0.1.0"
