"""Deterministic seeding: one master seed, named sub-streams.

Every random choice in the toolkit flows from a single integer seed
through named sub-streams, so any sub-result (a sampled circuit, one
quadruple out of a hundred) can be regenerated in isolation.
"""

from __future__ import annotations

import hashlib
import random

from .bitstring import BitString


def substream_seed(master: int, *names) -> int:
    """64-bit seed derived from the master seed and a name path."""
    tag = ":".join([str(master)] + [str(n) for n in names])
    digest = hashlib.sha256(tag.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big")


def substream(master: int, *names) -> random.Random:
    return random.Random(substream_seed(master, *names))


def random_bits(rng: random.Random, n: int) -> BitString:
    if n == 0:
        return BitString()
    return BitString.from_int(rng.getrandbits(n), n)
