"""Learn code transformations from before/after method pairs of merged code changes."""

__version__ = "0.1.0"
