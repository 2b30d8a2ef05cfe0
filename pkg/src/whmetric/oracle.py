"""Brute-force ground truth for codes in a weighted space.

Everything here enumerates exhaustively and exactly: minimum weighted
distance, error-correction capability, block-weight enumerators,
ambient ball counts, and end-to-end decoder verification.  Enumerations
that would exceed the configured limits are refused outright.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, product

from .code import LinearCode, vec_add
from .construct import GccCode
from .decode import gcc_decode
from .errors import ExhaustionError, ParameterError
from .metric import WeightedSpace


@dataclass(frozen=True)
class OracleLimits:
    max_codewords: int = 1 << 20
    max_ambient: int = 1 << 22


DEFAULT_LIMITS = OracleLimits()


def _check_code(code: LinearCode, space: WeightedSpace, limits: OracleLimits):
    if code.n != space.n:
        raise ParameterError(f"code length {code.n} != space length {space.n}")
    count = code.field.order**code.k
    if count > limits.max_codewords:
        raise ExhaustionError(
            f"exhaustion refused: {count} codewords exceeds the limit {limits.max_codewords}"
        )


def exact_min_weighted_distance(code, space, limits=DEFAULT_LIMITS) -> int:
    """Minimum weighted weight over the nonzero codewords."""
    _check_code(code, space, limits)
    best = None
    first = True
    for c in code.codewords():
        if first:
            first = False
            continue
        w = space.vector_weight(c)
        if best is None or w < best:
            best = w
    return best


def exact_capability(code, space, limits=DEFAULT_LIMITS) -> int:
    """Exact error-correction capability: the smallest per-codeword
    capability over the nonzero codewords."""
    _check_code(code, space, limits)
    cache = {}
    best = None
    first = True
    for c in code.codewords():
        if first:
            first = False
            continue
        profile = space.block_profile(c)
        t = cache.get(profile)
        if t is None:
            t = space.profile_capability(profile)
            cache[profile] = t
        if best is None or t < best:
            best = t
    return best


def block_weight_enumerator(code, space, limits=DEFAULT_LIMITS) -> dict:
    """Map block profile -> number of codewords attaining it."""
    _check_code(code, space, limits)
    out = {}
    for c in code.codewords():
        profile = space.block_profile(c)
        out[profile] = out.get(profile, 0) + 1
    return out


def exhaustive_unique_correction_check(code, space, t, limits=DEFAULT_LIMITS) -> bool:
    """True iff the code corrects every weighted error of weight <= t
    uniquely, i.e. no nonzero codeword lies in the radius-t difference set."""
    if t < 0:
        raise ParameterError("radius must be non-negative")
    _check_code(code, space, limits)
    cache = {}
    first = True
    for c in code.codewords():
        if first:
            first = False
            continue
        profile = space.block_profile(c)
        cap = cache.get(profile)
        if cap is None:
            cap = space.profile_capability(profile)
            cache[profile] = cap
        if cap <= t - 1:
            return False
    return True


def ambient_ball_count(space, t, limits=DEFAULT_LIMITS) -> int:
    """|{v : weighted weight <= t}| by direct enumeration of the whole
    ambient space; deliberately independent of the profile-sum formula."""
    total = space.q**space.n
    if total > limits.max_ambient:
        raise ExhaustionError(
            f"exhaustion refused: ambient space of {total} exceeds the limit {limits.max_ambient}"
        )
    scaled = []
    for (lo, hi), s in zip(space.block_ranges(), space.scales):
        scaled.extend([s] * (hi - lo))
    count = 0
    for v in product(range(space.q), repeat=space.n):
        weight = sum(s for x, s in zip(v, scaled) if x)
        if weight <= t:
            count += 1
    return count


def weighted_error_vectors(space, t):
    """All vectors of weighted weight <= t, zero first, otherwise grouped
    by support block."""
    yield (0,) * space.n
    ranges = space.block_ranges()

    def rec(l, budget, prefix):
        if l == space.m:
            yield tuple(prefix)
            return
        lo, hi = ranges[l]
        width = hi - lo
        scale = space.scales[l]
        top = min(width, budget // scale)
        for w in range(top + 1):
            for positions in combinations(range(width), w):
                for values in product(range(1, space.q), repeat=w):
                    block = [0] * width
                    for p, v in zip(positions, values):
                        block[p] = v
                    yield from rec(l + 1, budget - w * scale, prefix + block)

    for v in rec(0, t, []):
        if any(v):
            yield v


@dataclass
class DecoderCheckReport:
    trials: int
    failures: int
    first_failure: tuple  # (codeword, error) or None

    @property
    def ok(self):
        return self.failures == 0


def exhaustive_decoder_check(
    gcc: GccCode, t, limits=DEFAULT_LIMITS, seed=1, sample_size=100
) -> DecoderCheckReport:
    """Decode c + e for every weighted error of weight <= t around every
    codeword (a seeded sample of codewords above 2^10 of them); reports
    the decoding failures."""
    if t < 0:
        raise ParameterError("radius must be non-negative")
    space = gcc.space
    errors = list(weighted_error_vectors(space, t))
    total_codewords = gcc.field.order**gcc.k
    checked = total_codewords if total_codewords <= 1 << 10 else sample_size
    if len(errors) * checked > limits.max_ambient:
        raise ExhaustionError(
            f"exhaustion refused: {len(errors) * checked} trials exceeds the limit "
            f"{limits.max_ambient}"
        )
    if total_codewords <= 1 << 10:
        codewords = list(gcc.as_linear_code().codewords())
    else:
        rng = random.Random(seed)
        codewords = []
        for _ in range(sample_size):
            flat = tuple(rng.randrange(gcc.field.order) for _ in range(gcc.k))
            codewords.append(gcc.encode(gcc.split_message(flat)))
    trials = 0
    failures = 0
    first_failure = None
    for c in codewords:
        for e in errors:
            r = vec_add(gcc.field, c, e)
            report = gcc_decode(gcc, r)
            trials += 1
            if report.codeword != c or not report.ok:
                failures += 1
                if first_failure is None:
                    first_failure = (c, e)
    return DecoderCheckReport(trials=trials, failures=failures, first_failure=first_failure)
