"""Explicit extremal colourings and the properties they witness."""
