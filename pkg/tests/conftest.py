"""Shared pytest configuration.

Registers a deterministic hypothesis profile so that repeated runs of
the suite exercise identical inputs, which keeps the acceptance-level
byte-determinism checks meaningful.
"""

from hypothesis import settings

settings.register_profile("deterministic", deadline=None, derandomize=True, max_examples=80)
settings.load_profile("deterministic")
