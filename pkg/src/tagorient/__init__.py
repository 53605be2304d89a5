"""Tag-informed orientation of partially directed causal graphs."""

__version__ = "0.1.0"
