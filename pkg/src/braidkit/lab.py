"""Statistics lab: reproducible sampling, brute-force oracles, experiments, benchmarks.

Sampling is deterministic across platforms: the generator is splitmix64 (the
standard 64-bit mixer with increment 0x9E3779B97F4A7C15), and the stream for
sample ``i`` of a spec is seeded with ``seed XOR i``, so samples are
independent of processing order and the whole stream is reproducible from
``(spec, seed)`` alone.  Uniform ranges use the multiply-shift reduction
``(next64() * bound) >> 64``.

Both sampling models draw words, not elements, so neither is the uniform
distribution on a ball of the Cayley graph over simple generators; the
experiment output headers carry that caveat.
"""

from __future__ import annotations

import csv
import functools
import io
import itertools
import json
import time
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from . import kernel
from .conjugacy import SlidingBoundExceeded, is_uss_minimal, slide_to_rigid
from .core import BraidWord, SimpleElement, normalize
from .roots import NonGeneric, Root, extract_root, verify_root

_MASK64 = (1 << 64) - 1

SIGNED_ARTIN_WORD = "signed-artin-word"
POSITIVE_SIMPLE_PRODUCT = "positive-simple-product"
SAMPLE_MODELS = (SIGNED_ARTIN_WORD, POSITIVE_SIMPLE_PRODUCT)

SAMPLING_NOTE = (
    "sampling: uniform random words per model, not uniform on a Cayley-graph ball"
)


class SplitMix64:
    """splitmix64: fixed mixing constants, 64-bit state, platform independent."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound) by multiply-shift reduction."""
        return (self.next64() * bound) >> 64

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


@dataclass(frozen=True, slots=True)
class SampleSpec:
    """A reproducible stream of random braid words."""

    n: int
    r: int
    model: str
    seed: int
    count: int

    def __post_init__(self):
        if self.model not in SAMPLE_MODELS:
            raise ValueError(f"unknown sampling model {self.model!r}")
        if self.count <= 0 or self.r <= 0:
            raise ValueError("count and r must be positive")
        if self.n < 2:
            raise ValueError("a braid group needs at least 2 strands")


def _sample_rng(seed: int, index: int) -> SplitMix64:
    return SplitMix64((seed ^ index) & _MASK64)


def _draw_signed_word(n: int, r: int, rng: SplitMix64) -> BraidWord:
    letters = []
    for _ in range(r):
        u = rng.below(2 * (n - 1))
        index = (u >> 1) + 1
        letters.append(index if u & 1 == 0 else -index)
    return BraidWord(n, tuple(letters))


def _draw_nontrivial_simple(n: int, rng: SplitMix64) -> SimpleElement:
    perm = list(range(n))
    while True:
        rng.shuffle(perm)
        if any(perm[i] != i for i in range(n)):
            return SimpleElement(n, tuple(perm))


def _draw_positive_product(n: int, r: int, rng: SplitMix64) -> BraidWord:
    letters: list[int] = []
    for _ in range(r):
        letters.extend(_draw_nontrivial_simple(n, rng).canonical_letters())
    return BraidWord(n, tuple(letters))


def sample(spec: SampleSpec) -> Iterator[BraidWord]:
    """The deterministic word stream of a spec, in sample-index order."""
    for i in range(spec.count):
        rng = _sample_rng(spec.seed, i)
        if spec.model == SIGNED_ARTIN_WORD:
            yield _draw_signed_word(spec.n, spec.r, rng)
        else:
            yield _draw_positive_product(spec.n, spec.r, rng)


# --- brute-force lattice oracles (factorial enumeration, n <= 6) ---

_BRUTE_LIMIT = 6


def _check_brute_n(n: int) -> None:
    if n > _BRUTE_LIMIT:
        raise ValueError(f"brute-force oracles enumerate n! permutations; n <= {_BRUTE_LIMIT}")


@functools.lru_cache(maxsize=None)
def _brute_tables(n: int):
    """All simple elements of B_n plus the prefix relation built by enumeration.

    The relation is derived only from the defining property: u is a prefix of
    t when some simple s satisfies u*s = t with crossing numbers adding.  It
    shares no code with the kernel's prefix test or meet.
    """
    perms = [tuple(p) for p in itertools.permutations(range(n))]
    index = {p: i for i, p in enumerate(perms)}
    lengths = [sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])
               for p in perms]
    prefixes_of: list[set[int]] = [set() for _ in perms]
    for ui, u in enumerate(perms):
        for s in perms:
            t = tuple(s[x] for x in u)
            ti = index[t]
            if lengths[ui] + lengths[index[s]] == lengths[ti]:
                prefixes_of[ti].add(ui)
    return perms, index, lengths, prefixes_of


def brute_prefix(s: SimpleElement, t: SimpleElement) -> bool:
    """Oracle prefix test by exhaustive enumeration (n <= 6)."""
    _check_brute_n(s.n)
    if s.n != t.n:
        raise ValueError("mixed strand counts")
    _, index, _, prefixes_of = _brute_tables(s.n)
    return index[s.perm] in prefixes_of[index[t.perm]]


def brute_meet(s: SimpleElement, t: SimpleElement) -> SimpleElement:
    """Oracle meet: filter common prefixes, return the unique dominating one."""
    _check_brute_n(s.n)
    if s.n != t.n:
        raise ValueError("mixed strand counts")
    perms, index, lengths, prefixes_of = _brute_tables(s.n)
    common = prefixes_of[index[s.perm]] & prefixes_of[index[t.perm]]
    best = [u for u in common if all(c in prefixes_of[u] for c in common)]
    assert len(best) == 1, "prefix lattice lost its unique meet"
    return SimpleElement(s.n, perms[best[0]])


# --- genericity experiment ---

@dataclass(frozen=True, slots=True)
class ExperimentRow:
    r: int
    fraction_rigid_within_bound: float
    fraction_uss_minimal: float
    mean_slidings: float
    samples: int

    def record(self) -> dict:
        return {
            "r": self.r,
            "fractionRigidWithinBound": self.fraction_rigid_within_bound,
            "fractionUssMinimal": self.fraction_uss_minimal,
            "meanSlidings": self.mean_slidings,
            "samples": self.samples,
        }


EXPERIMENT_FIELDS = ("r", "fractionRigidWithinBound", "fractionUssMinimal",
                     "meanSlidings", "samples")


def run_genericity_experiment(specs: Iterable[SampleSpec]) -> list[ExperimentRow]:
    """Fraction of samples that reach a rigid conjugate in bound, and of those
    whose ultra summit set is minimal; rows come back in increasing r."""
    rows = []
    for spec in specs:
        rigid = minimal = 0
        slidings = 0
        for word in sample(spec):
            x = normalize(word)
            try:
                cert = slide_to_rigid(x)
            except SlidingBoundExceeded as exc:
                slidings += exc.iterations
                continue
            slidings += cert.iterations
            rigid += 1
            if is_uss_minimal(cert.target):
                minimal += 1
        rows.append(ExperimentRow(
            r=spec.r,
            fraction_rigid_within_bound=rigid / spec.count,
            fraction_uss_minimal=minimal / spec.count,
            mean_slidings=slidings / spec.count,
            samples=spec.count,
        ))
    return sorted(rows, key=lambda row: row.r)


# --- planted-root round trip ---

@dataclass(frozen=True, slots=True)
class RootRoundtripSummary:
    n: int
    l: int
    k: int
    samples: int
    roots: int
    non_generic: int
    no_root: int
    verify_failures: int
    mean_seconds: float
    max_seconds: float

    def record(self) -> dict:
        return {
            "n": self.n, "l": self.l, "k": self.k, "samples": self.samples,
            "roots": self.roots, "nonGeneric": self.non_generic,
            "noRoot": self.no_root, "verifyFailures": self.verify_failures,
            "meanSeconds": self.mean_seconds, "maxSeconds": self.max_seconds,
        }


def run_root_roundtrip(n: int, l: int, k: int, count: int, seed: int,
                       model: str = SIGNED_ARTIN_WORD) -> RootRoundtripSummary:
    """Plant roots (x = a^k for sampled a), extract, and verify.

    Planted roots always exist, so any NoRoot outcome or verification failure
    is counted as a defect; callers treat nonzero counts as test failures.
    """
    spec = SampleSpec(n=n, r=l, model=model, seed=seed, count=count)
    roots = non_generic = no_root = failures = 0
    times = []
    for word in sample(spec):
        a = normalize(word)
        x = a ** k
        started = time.perf_counter()
        outcome = extract_root(x, k)
        times.append(time.perf_counter() - started)
        if isinstance(outcome, Root):
            if verify_root(x, k, outcome.root):
                roots += 1
            else:
                failures += 1
        elif isinstance(outcome, NonGeneric):
            non_generic += 1
        else:
            no_root += 1
    return RootRoundtripSummary(
        n=n, l=l, k=k, samples=count, roots=roots, non_generic=non_generic,
        no_root=no_root, verify_failures=failures,
        mean_seconds=sum(times) / len(times), max_seconds=max(times),
    )


# --- runtime benchmark ---

@dataclass(frozen=True, slots=True)
class BenchCell:
    n: int
    l: int
    k: int
    samples: int
    generic: int
    non_generic: int
    mean_seconds: float | None
    ratio_to_half_l: float | None

    def record(self) -> dict:
        return {
            "n": self.n, "l": self.l, "k": self.k, "samples": self.samples,
            "generic": self.generic, "nonGeneric": self.non_generic,
            "meanSeconds": self.mean_seconds, "ratioToHalfL": self.ratio_to_half_l,
        }


BENCH_FIELDS = ("n", "l", "k", "samples", "generic", "nonGeneric",
                "meanSeconds", "ratioToHalfL")


def _bench_cell(n: int, l: int, k: int, count: int, seed: int,
                model: str) -> tuple[int, int, float | None]:
    spec = SampleSpec(n=n, r=l, model=model, seed=seed, count=count)
    generic = non_generic = 0
    total = 0.0
    for word in sample(spec):
        x = normalize(word) ** k
        started = time.perf_counter()
        outcome = extract_root(x, k)
        elapsed = time.perf_counter() - started
        if isinstance(outcome, NonGeneric):
            non_generic += 1
        else:
            generic += 1
            total += elapsed
    mean = total / generic if generic else None
    return generic, non_generic, mean


def benchmark_root(ns: Sequence[int], ls: Sequence[int], k: int, count: int,
                   seed: int, model: str = POSITIVE_SIMPLE_PRODUCT) -> list[BenchCell]:
    """Mean extract_root wall time per (n, l) cell over planted generic instances.

    Non-generic instances are excluded from the mean but counted.  Each cell
    also carries the runtime ratio against the cell at half its l, the shape
    probe for the expected roughly quadratic growth in l at fixed n.
    """
    means: dict[tuple[int, int], float | None] = {}
    raw = {}
    for n in ns:
        for l in ls:
            generic, non_generic, mean = _bench_cell(n, l, k, count, seed, model)
            raw[(n, l)] = (generic, non_generic)
            means[(n, l)] = mean
    cells = []
    for n in ns:
        for l in ls:
            generic, non_generic = raw[(n, l)]
            mean = means[(n, l)]
            half = means.get((n, l // 2)) if l % 2 == 0 else None
            ratio = mean / half if (mean is not None and half) else None
            cells.append(BenchCell(n=n, l=l, k=k, samples=count, generic=generic,
                                   non_generic=non_generic, mean_seconds=mean,
                                   ratio_to_half_l=ratio))
    return cells


@dataclass(frozen=True, slots=True)
class KernelBenchRow:
    backend: str
    n: int
    l: int
    k: int
    samples: int
    generic: int
    non_generic: int
    mean_seconds: float | None

    def record(self) -> dict:
        return {
            "backend": self.backend, "n": self.n, "l": self.l, "k": self.k,
            "samples": self.samples, "generic": self.generic,
            "nonGeneric": self.non_generic, "meanSeconds": self.mean_seconds,
        }


KERNEL_BENCH_FIELDS = ("backend", "n", "l", "k", "samples", "generic",
                       "nonGeneric", "meanSeconds")


def benchmark_backends(n: int, l: int, k: int, count: int, seed: int,
                       model: str = POSITIVE_SIMPLE_PRODUCT) -> list[KernelBenchRow]:
    """Run the same benchmark cell under every available kernel backend."""
    rows = []
    previous = kernel.backend_name()
    try:
        for backend in kernel.available_backends():
            kernel.use_backend(backend)
            generic, non_generic, mean = _bench_cell(n, l, k, count, seed, model)
            rows.append(KernelBenchRow(backend=backend, n=n, l=l, k=k,
                                       samples=count, generic=generic,
                                       non_generic=non_generic, mean_seconds=mean))
    finally:
        kernel.use_backend(previous)
    return rows


# --- serialization (CSV and JSON, floats at 6 significant digits) ---

def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.6g}"
    return str(value)


def _round6(value):
    if isinstance(value, float):
        return float(f"{value:.6g}")
    return value


def rows_to_csv(rows: Iterable, fields: Sequence[str], note: str | None = None) -> str:
    out = io.StringIO()
    if note:
        out.write(f"# {note}\n")
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(fields)
    for row in rows:
        record = row.record()
        writer.writerow([_fmt(record[field]) for field in fields])
    return out.getvalue()


def rows_to_json(rows: Iterable, note: str | None = None) -> str:
    payload: dict = {}
    if note:
        payload["note"] = note
    payload["rows"] = [
        {key: _round6(value) for key, value in row.record().items()} for row in rows
    ]
    return json.dumps(payload, indent=2)
