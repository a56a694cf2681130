"""polyfoci - critical points, affinely regular polygons and their midpoint inellipses"""
__version__ = "0.1.0"
__author__ = "polyfoci developers"
