"""Deterministic sampling and batch verification of catalog relations.

The sample stream is part of the report contract, so the generator is
specified here rather than borrowed from :mod:`random`:

* seeding: ``state = splitmix64(seed + position * 0x9E3779B97F4A7C15)``
* step: ``state = state * 6364136223846793005 + 1442695040888963407 (mod 2**64)``
* output: the high 32 bits of the new state
* ``below(k) = (output * k) >> 32``

``position`` identifies one sample: ``crc32(id) << 32 | index``.
"""

import json
import time
import zlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from . import __version__
from .catalog import _values, check_identity, expand_ids, get_entry

__all__ = [
    "Lcg64",
    "SuiteConfig",
    "SuiteReport",
    "IdentityCounts",
    "GuardExhaustion",
    "sample_params",
    "stream_position",
    "run_suite",
]

MASK64 = (1 << 64) - 1
LCG_MULT = 6364136223846793005
LCG_INC = 1442695040888963407
GOLDEN = 0x9E3779B97F4A7C15
RETRY_CAP = 1000


def splitmix64(x):
    x = (x + GOLDEN) & MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & MASK64
    return x ^ (x >> 31)


class Lcg64:
    """64-bit linear congruential generator with the constants above."""

    def __init__(self, seed, position=0):
        self.state = splitmix64((seed + position * GOLDEN) & MASK64)

    def next32(self):
        self.state = (self.state * LCG_MULT + LCG_INC) & MASK64
        return self.state >> 32

    def below(self, k):
        return (self.next32() * k) >> 32

    def between(self, lo, hi):
        return lo + self.below(hi - lo + 1)


class GuardExhaustion(RuntimeError):
    pass


@dataclass
class SuiteConfig:
    ids: list = field(default_factory=lambda: ["all"])
    samples_per_identity: int = 200
    n_max: int = 8
    seed: int = 0
    numerator_bound: int = 12
    denominator_set: tuple = (1, 2, 3, 5, 7)

    def __post_init__(self):
        if self.samples_per_identity <= 0:
            raise ValueError("samples_per_identity must be positive")
        if self.n_max < 0:
            raise ValueError("n_max must be nonnegative")
        if self.numerator_bound <= 0:
            raise ValueError("numerator_bound must be positive")
        if not self.denominator_set or any(d <= 0 for d in self.denominator_set):
            raise ValueError("denominator_set must hold positive integers")
        if not 0 <= self.seed <= MASK64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        self.denominator_set = tuple(self.denominator_set)

    def resolved_ids(self):
        ids = expand_ids(",".join(self.ids))
        if not ids:
            raise ValueError("no identity ids selected")
        return ids


def stream_position(id_, index):
    return (zlib.crc32(id_.encode()) << 32) | index


def _draw(rng, config, arity):
    n = rng.between(0, config.n_max)
    dens = config.denominator_set
    params = []
    for _ in range(arity):
        num = rng.between(-config.numerator_bound, config.numerator_bound)
        params.append(Fraction(num, dens[rng.below(len(dens))]))
    return n, params


def sample_params(config, arity, position, accept=None):
    """Draw ``(n, params)`` for one stream position.

    Draws rejected by ``accept(n, params)`` are redrawn from the same stream,
    up to :data:`RETRY_CAP` times.
    """
    rng = Lcg64(config.seed, position)
    for _ in range(RETRY_CAP):
        n, params = _draw(rng, config, arity)
        if accept is None or accept(n, params):
            return n, params
    raise GuardExhaustion(f"no admissible sample after {RETRY_CAP} draws at position {position}")


def _guard_acceptor(entry):
    def accept(n, params):
        return entry.failed_guard(_values(params, entry.params, n), n) is None

    return accept


@dataclass
class IdentityCounts:
    id: str
    holds: int = 0
    fails: int = 0
    skipped: int = 0
    counterexample: dict = None


def _run_identity(args):
    id_, config = args
    entry = get_entry(id_)
    accept = _guard_acceptor(entry)
    counts = IdentityCounts(id_)
    for i in range(config.samples_per_identity):
        try:
            n, params = sample_params(config, entry.arity, stream_position(id_, i), accept)
        except GuardExhaustion:
            counts.skipped += 1
            continue
        verdict = check_identity(id_, n, params)
        if verdict.status == "holds":
            counts.holds += 1
        elif verdict.status == "fails":
            counts.fails += 1
            if counts.counterexample is None:
                counts.counterexample = verdict.to_json()
        else:
            counts.skipped += 1
    return counts


@dataclass
class SuiteReport:
    config: SuiteConfig
    identities: list
    wall_time: float = 0.0
    version: str = __version__

    @property
    def fails(self):
        return sum(c.fails for c in self.identities)

    @property
    def skipped(self):
        return sum(c.skipped for c in self.identities)

    @property
    def holds(self):
        return sum(c.holds for c in self.identities)

    @property
    def exit_code(self):
        return 1 if self.fails else 0

    def to_json(self, timing=False):
        cfg = asdict(self.config)
        cfg["denominator_set"] = list(cfg["denominator_set"])
        out = {
            "schema": 1,
            "version": self.version,
            "config": cfg,
            "identities": [
                {
                    "id": c.id,
                    "holds": c.holds,
                    "fails": c.fails,
                    "skipped": c.skipped,
                    "counterexample": c.counterexample,
                }
                for c in self.identities
            ],
            "totals": {"holds": self.holds, "fails": self.fails, "skipped": self.skipped},
        }
        if timing:
            out["wall_time_s"] = round(self.wall_time, 3)
        return out

    def dumps(self, timing=False):
        return json.dumps(self.to_json(timing), indent=2, sort_keys=True) + "\n"

    def summary(self):
        lines = []
        for c in self.identities:
            mark = "FAIL" if c.fails else "ok"
            lines.append(f"{c.id:<14} {mark:<4} holds={c.holds} fails={c.fails} skipped={c.skipped}")
            if c.counterexample:
                ce = c.counterexample
                lines.append(f"    counterexample n={ce['n']} params={ce['params']} lhs={ce['lhs']} rhs={ce['rhs']}")
        lines.append(
            f"total: {self.holds} holds, {self.fails} fails, {self.skipped} skipped "
            f"over {len(self.identities)} identities in {self.wall_time:.2f}s"
        )
        return "\n".join(lines)


def run_suite(config, jobs=1):
    """Check every selected identity at ``samples_per_identity`` samples."""
    ids = config.resolved_ids()
    start = time.perf_counter()
    work = [(id_, config) for id_ in ids]
    if jobs > 1 and len(ids) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            counts = list(pool.map(_run_identity, work))
    else:
        counts = [_run_identity(w) for w in work]
    return SuiteReport(config, counts, time.perf_counter() - start)
