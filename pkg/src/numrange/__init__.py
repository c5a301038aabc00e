"""Fields of values, numerical radii and half-radial matrices."""
__version__ = "0.1.0"
