"""Multi-target self-organizing pursuit in a partially observable grid world."""

__version__ = "0.1.0"
