"""Bundled parameter sets and reference vectors."""

from . import mnt170

__all__ = ["mnt170"]
