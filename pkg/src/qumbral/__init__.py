"""Exact umbral calculus for the Carlitz-Tsallis deformed exponential."""
