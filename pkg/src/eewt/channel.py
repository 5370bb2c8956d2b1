"""Fixed-count erasure channel: exactly ``revealed_count`` of ``n`` symbols get through."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidParams, LengthMismatch
from .wiretap import Observation


@dataclass(frozen=True)
class ErasureChannelSpec:
    n: int
    revealed_count: int
    seed: int

    def __post_init__(self):
        if not 0 <= self.revealed_count <= self.n:
            raise InvalidParams(f"revealed_count {self.revealed_count} outside [0, {self.n}]")


class ErasureChannel:
    """Stateful sampler of revealed index sets.

    Each instance owns its own PCG64 stream seeded from ``spec.seed``;
    successive draws advance it.  Not meant to be shared between threads.
    """

    def __init__(self, spec: ErasureChannelSpec):
        self.spec = spec
        self._rng = np.random.default_rng(spec.seed)

    def sample_revealed_set(self) -> tuple[int, ...]:
        # partial Fisher-Yates: the first `count` slots end up uniformly chosen
        n, count = self.spec.n, self.spec.revealed_count
        perm = list(range(n))
        for i in range(count):
            r = i + int(self._rng.integers(0, n - i))
            perm[i], perm[r] = perm[r], perm[i]
        return tuple(sorted(perm[:count]))

    def transmit(self, codeword) -> Observation:
        if len(codeword) != self.spec.n:
            raise LengthMismatch(f"codeword has length {len(codeword)}, channel expects {self.spec.n}")
        return Observation.of(codeword, self.sample_revealed_set())


def sample_revealed_set(spec: ErasureChannelSpec) -> tuple[int, ...]:
    """One draw from a fresh channel (same result for the same seed)."""
    return ErasureChannel(spec).sample_revealed_set()


def transmit(codeword, spec: ErasureChannelSpec) -> Observation:
    return ErasureChannel(spec).transmit(codeword)
