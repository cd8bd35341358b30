"""Cellular chains of associahedra, the Saneblidze-Umble diagonal and A∞ tensor products."""

__version__ = "0.1.0"
