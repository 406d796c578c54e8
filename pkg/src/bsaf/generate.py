"""Seeded random framework generation with a portable PRNG.

The generator is built on a splitmix-style 64-bit stream so that a seed
produces the same framework in any implementation of this format:

* state update: ``s = (s + 0x9E3779B97F4A7C15) mod 2**64``
* output mix:   ``z = s; z ^= z >> 30; z *= 0xBF58476D1CE4E5B9;
  z ^= z >> 27; z *= 0x94D049BB133111EB; z ^= z >> 31`` (mod 2**64)
* ``unit()`` is ``(z >> 11) * 2**-53``; ``below(n)`` is ``z % n``;
  ``sample(pool, k)`` is a partial Fisher-Yates shuffle taking the
  first ``k`` slots, returned in ascending order.

Arguments are named ``a0 .. a{n-1}``.  For each head index ``h`` the
generator makes two attack trials and two support trials; a trial that
fires (probability ``p_attack`` resp. ``p_support``) draws a tail size
uniformly from ``1 .. max_tail`` and then the tail itself.  Support
tails are restricted to indices below the head while ``support_dag``
is set, which keeps the support relation acyclic.  Empty tails are
never generated; only the splitting pipelines create them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Framework, make_framework

_MASK64 = (1 << 64) - 1
_TRIALS_PER_HEAD = 2


class SplitMix64:
    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 & _MASK64
        z = (z ^ (z >> 27)) * 0x94D049BB133111EB & _MASK64
        return z ^ (z >> 31)

    def unit(self) -> float:
        return (self.next_u64() >> 11) * 2.0**-53

    def below(self, n: int) -> int:
        return self.next_u64() % n

    def chance(self, p: float) -> bool:
        return self.unit() < p

    def sample(self, pool: list[int], k: int) -> list[int]:
        slots = list(pool)
        for i in range(k):
            j = i + self.below(len(slots) - i)
            slots[i], slots[j] = slots[j], slots[i]
        return sorted(slots[:k])


@dataclass(frozen=True)
class GenConfig:
    """Parameters of one deterministic framework draw."""

    seed: int
    n_args: int
    p_attack: float
    p_support: float
    max_tail: int
    support_dag: bool = True

    def validate(self) -> None:
        if self.n_args < 1:
            raise ValueError("n_args must be at least 1")
        if self.max_tail < 1:
            raise ValueError("max_tail must be at least 1")
        for p in (self.p_attack, self.p_support):
            if not 0.0 <= p <= 1.0:
                raise ValueError("probabilities must lie in [0, 1]")
        if not 0 <= self.seed <= _MASK64:
            raise ValueError("seed must fit in 64 bits")


def gen_random(cfg: GenConfig) -> Framework:
    """Draw the framework determined by ``cfg``; identical config, identical frame."""
    cfg.validate()
    rng = SplitMix64(cfg.seed)
    n = cfg.n_args
    names = [f"a{i}" for i in range(n)]
    attacks = []
    supports = []
    for head in range(n):
        for _ in range(_TRIALS_PER_HEAD):
            if rng.chance(cfg.p_attack):
                k = 1 + rng.below(min(cfg.max_tail, n))
                tail = rng.sample(list(range(n)), k)
                attacks.append((tuple(names[i] for i in tail), names[head]))
        for _ in range(_TRIALS_PER_HEAD):
            if rng.chance(cfg.p_support):
                pool = list(range(head)) if cfg.support_dag else list(range(n))
                if not pool:
                    continue
                k = 1 + rng.below(min(cfg.max_tail, len(pool)))
                tail = rng.sample(pool, k)
                supports.append((tuple(names[i] for i in tail), names[head]))
    return make_framework(names, attacks, supports)
