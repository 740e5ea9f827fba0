"""Log del Pezzo surfaces of Picard number one with a torus action, sorted by Gorenstein index."""

from __future__ import annotations

__version__ = "0.1.0"
