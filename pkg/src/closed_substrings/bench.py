"""Benchmark harness for the two MRC engines.

Inputs are named by spec strings:

- ``fibonacci:N``, ``tribonacci:N``, ``thue_morse:N`` for the N-th word,
- ``random:SIGMA:N[:SEED]`` for N uniform symbols over the first SIGMA letters,
- ``file:PATH[:N]`` for the first N bytes of a file (all of it by default).

Every input is run through every selected engine; the engines' outputs are
compared before any time is reported. The SA/LCP engine's time includes
building the suffix and LCP arrays.
"""

from __future__ import annotations

import csv
import io
import statistics
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterable, Sequence

import numpy as np

from .core import MrcArray, alphabet_size
from .mrc_partition import compute_mrc_partition
from .mrc_salcp import compute_mrc_salcp
from .words import fibonacci_word, thue_morse_word, tribonacci_word

ENGINES: dict[str, Callable[[bytes], MrcArray]] = {
    "salcp": compute_mrc_salcp,
    "partition": compute_mrc_partition,
}
CSV_COLUMNS = ["class", "n", "sigma", "engine", "run_index", "wall_ms", "median_ms", "outputs_equal"]
DEFAULT_SEED = 42
LETTERS = b"abcdefghijklmnopqrstuvwxyz"


def generate_random(n: int, sigma: int, seed: int) -> bytes:
    """``n`` symbols drawn uniformly from the first ``sigma`` lowercase letters.

    Uses numpy's PCG64 generator, whose stream is stable for a given seed.
    """
    if sigma < 1:
        raise ValueError("sigma must be at least 1")
    if sigma > len(LETTERS):
        raise ValueError(f"sigma must be at most {len(LETTERS)}")
    rng = np.random.Generator(np.random.PCG64(seed))
    codes = rng.integers(0, sigma, size=n, dtype=np.uint8)
    return np.frombuffer(LETTERS, dtype=np.uint8)[codes].tobytes()


@dataclass(frozen=True)
class BenchInput:
    cls: str
    text: bytes

    @property
    def n(self) -> int:
        return len(self.text)

    @property
    def sigma(self) -> int:
        return alphabet_size(self.text)


def parse_spec(spec: str) -> BenchInput:
    kind, _, rest = spec.partition(":")
    args = rest.split(":") if rest else []
    try:
        if kind == "fibonacci" and len(args) == 1:
            return BenchInput(kind, fibonacci_word(int(args[0])))
        if kind == "tribonacci" and len(args) == 1:
            return BenchInput(kind, tribonacci_word(int(args[0])))
        if kind == "thue_morse" and len(args) == 1:
            return BenchInput(kind, thue_morse_word(int(args[0])))
        if kind == "random" and len(args) in (2, 3):
            sigma, n = int(args[0]), int(args[1])
            seed = int(args[2]) if len(args) == 3 else DEFAULT_SEED
            return BenchInput(f"random{sigma}", generate_random(n, sigma, seed))
    except ValueError as exc:
        raise ValueError(f"bad bench spec {spec!r}: {exc}") from exc
    if kind == "file" and args:
        # a path may itself contain colons; a trailing integer is the length
        limit = None
        if len(args) > 1 and args[-1].isdigit():
            limit = int(args.pop())
        path = Path(":".join(args))
        data = path.read_bytes()
        return BenchInput(f"file:{path.name}", data[:limit] if limit is not None else data)
    raise ValueError(f"bad bench spec {spec!r}")


@dataclass(frozen=True)
class BenchRow:
    cls: str
    n: int
    sigma: int
    engine: str
    run_index: int
    wall_ms: float
    median_ms: float
    outputs_equal: bool

    def as_list(self) -> list:
        return [
            self.cls, self.n, self.sigma, self.engine, self.run_index,
            f"{self.wall_ms:.3f}", f"{self.median_ms:.3f}", str(self.outputs_equal).lower(),
        ]


def time_engine(engine: str, text: bytes, repeats: int) -> tuple[list[float], MrcArray]:
    """Wall times in ms of ``repeats`` runs, and the output of the last run."""
    fn = ENGINES[engine]
    times = []
    out = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn(text)
        times.append((time.perf_counter() - t0) * 1000)
    return times, out


def run_bench(
    specs: Iterable[str | BenchInput],
    engines: Sequence[str] = ("salcp", "partition"),
    repeats: int = 3,
) -> list[BenchRow]:
    """Time each engine on each input; one row per run.

    ``outputs_equal`` is true when every selected engine produced the same
    MRC array on that input.
    """
    if repeats < 1:
        raise ValueError("repeats must be at least 1")
    unknown = [e for e in engines if e not in ENGINES]
    if unknown:
        raise ValueError(f"unknown engines: {unknown}")
    rows: list[BenchRow] = []
    for spec in specs:
        item = spec if isinstance(spec, BenchInput) else parse_spec(spec)
        timed = {e: time_engine(e, item.text, repeats) for e in engines}
        outputs = [out for _, out in timed.values()]
        equal = all(out == outputs[0] for out in outputs[1:])
        for engine, (times, _) in timed.items():
            med = statistics.median(times)
            rows.extend(
                BenchRow(item.cls, item.n, item.sigma, engine, k, t, med, equal)
                for k, t in enumerate(times)
            )
    return rows


def rows_to_csv(rows: Iterable[BenchRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow(row.as_list())
    return buf.getvalue()
