"""Exact computations for finite-group gauge theory: groupoids, group
cohomology, twisted Drinfeld doubles, bundles, bibranes and
Dijkgraaf-Witten state sums."""

__version__ = "0.1.0"
