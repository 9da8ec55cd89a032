"""Verified sweeps of |zeta(1/2+it)| against A t^(1/6) log t.

A range is cut into pieces [a, a + w]. For each piece an enclosure [x, y]
of |zeta(1/2+it)| over the whole piece is computed and compared with the
threshold A a^(1/6) log a, taken at the left endpoint (the threshold is
increasing for t > 1). Record sweeps keep the running maximum of y, from
which Table-style constants are read off.

Also here: the Lehman bound, rigorous crossover location, and the least Q
for the bound at t = 0.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from decimal import ROUND_CEILING, Decimal
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Callable, Iterable

import numpy as np

from . import kernels
from .bounds_chain import fraction_text as _text
from .interval import TWO_PI, DomainError, RInterval, as_interval, cabs, exp, log
from .zeta_eval import DEFAULT_EM_K, DEFAULT_EM_TOL, EMParams, em_zeta

RECORD_HEADER = "# zeta-records v1"
LONG_RUN_LIMIT = 1000  # record sweeps beyond this height need allow_long=True
CHUNK = 4096

_SIXTH = RInterval.exact(Fraction(1, 6))
_QUARTER = RInterval.exact(Fraction(1, 4))


def _exact(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        return Fraction(x)
    return Fraction(str(x).strip())


def _down(q: Fraction) -> float:
    f = float(q)
    return f if Fraction(f) <= q else math.nextafter(f, -math.inf)


def _up(q: Fraction) -> float:
    f = float(q)
    return f if Fraction(f) >= q else math.nextafter(f, math.inf)


@dataclass(frozen=True)
class SweepConfig:
    """Piece width, bisection depth and evaluator settings.

    Pieces are first evaluated with ``fast_terms`` Riemann-Siegel corrections;
    pieces that matter (threshold not met, or a potential record) are
    re-evaluated with ``rs_terms`` and the smaller upper bound is kept.
    """

    piece_width: Fraction = Fraction(1, 1024)
    max_depth: int = 20
    rs_terms: int = 2
    fast_terms: int = 0
    em_k: int = DEFAULT_EM_K
    em_tol: float = DEFAULT_EM_TOL
    threads: int = 1
    backend: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "piece_width", _exact(self.piece_width))
        if not self.piece_width > 0:
            raise ValueError("piece_width must be positive")
        if self.max_depth < 0:
            raise ValueError("max_depth must be >= 0")
        for name in ("rs_terms", "fast_terms"):
            if not 0 <= getattr(self, name) <= 4:
                raise ValueError(f"{name} must be in [0, 4]")
        if self.threads < 1:
            raise ValueError("threads must be >= 1")

    @property
    def kernel(self):
        return kernels.get_backend(self.backend)


class PieceStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class PieceResult:
    a: float
    b: float
    x: float
    y: float
    threshold: float  # lower bound of A a^(1/6) log a
    status: PieceStatus


@dataclass(frozen=True)
class Record:
    """Piece start ``a`` and the upper end ``y`` of |zeta| on that piece."""

    a: float
    y: float


@dataclass
class VerifyReport:
    lo: Fraction
    hi: Fraction
    A: Fraction
    pieces: int = 0
    refined: int = 0
    deepest: int = 0
    failures: list[tuple[float, float, str]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"verify-range [{_text(self.lo)}, {_text(self.hi)}] A={_text(self.A)}: {status} "
            f"pieces={self.pieces} refined={self.refined} depth={self.deepest} failures={len(self.failures)}"
        )


# -- piece grid ---------------------------------------------------------------


def piece_edges(lo, hi, w) -> np.ndarray:
    """Float edges e_0 <= lo < e_1 < ... < e_n >= hi with spacing w.

    Interior edges are lo + i w rounded to nearest; the outer ones are rounded
    outward. Consecutive pieces share their endpoint, so the pieces cover
    [lo, hi] without gaps. The last piece may be shorter than w.
    """
    lo, hi, w = _exact(lo), _exact(hi), _exact(w)
    if not lo < hi:
        raise ValueError(f"need lo < hi, got [{lo}, {hi}]")
    n = math.ceil((hi - lo) / w)
    edges = np.empty(n + 1)
    edges[0] = _down(lo)
    for i in range(1, n):
        edges[i] = float(lo + i * w)
    edges[n] = _up(hi)
    return edges


_GRID_CACHE: dict[tuple, tuple[np.ndarray, np.ndarray, np.ndarray]] = {}


def clear_cache() -> None:
    _GRID_CACHE.clear()


def _grid_chunk(edges: np.ndarray, start: int, stop: int, cfg: SweepConfig, terms: int):
    key = (
        cfg.kernel.NAME,
        float(edges[start]),
        float(edges[stop]),
        stop - start,
        terms,
        cfg.em_k,
        cfg.em_tol,
    )
    hit = _GRID_CACHE.get(key)
    if hit is None:
        hit = cfg.kernel.abs_zeta_grid(np.ascontiguousarray(edges[start : stop + 1]), terms, cfg.em_k, cfg.em_tol)
        _GRID_CACHE[key] = hit
    return hit


def enclose_pieces(edges: np.ndarray, cfg: SweepConfig, terms: int | None = None):
    """(lo, hi, method) arrays for all pieces, computed in chunks.

    Chunks run on ``cfg.threads`` threads (the compiled kernel releases the
    GIL) and are concatenated in order, so results do not depend on the
    thread count.
    """
    terms = cfg.fast_terms if terms is None else terms
    n = len(edges) - 1
    bounds = [(s, min(s + CHUNK, n)) for s in range(0, n, CHUNK)]
    if cfg.threads > 1 and len(bounds) > 1:
        with ThreadPoolExecutor(max_workers=cfg.threads) as ex:
            parts = list(ex.map(lambda b: _grid_chunk(edges, b[0], b[1], cfg, terms), bounds))
    else:
        parts = [_grid_chunk(edges, s, e, cfg, terms) for s, e in bounds]
    return tuple(np.concatenate([p[i] for p in parts]) for i in range(3))


def _piece(a: float, b: float, cfg: SweepConfig, terms: int) -> tuple[float, float, int]:
    lo, hi, m = cfg.kernel.abs_zeta_grid(np.array([a, b]), terms, cfg.em_k, cfg.em_tol)
    return float(lo[0]), float(hi[0]), int(m[0])


def _tight(a: float, b: float, x: float, y: float, method: int, cfg: SweepConfig) -> tuple[float, float]:
    """Re-evaluate an RS piece with the full correction count; keep the tighter bounds."""
    if method != 1 or cfg.rs_terms == cfg.fast_terms:
        return x, y
    x2, y2, _ = _piece(a, b, cfg, cfg.rs_terms)
    return max(x, x2), min(y, y2)


def threshold(A, a) -> RInterval:
    """A a^(1/6) log a."""
    a = as_interval(a)
    la = log(a)
    return as_interval(A) * exp(la * _SIXTH) * la


def _classify(x: float, y: float, a: float, b: float, A: RInterval) -> tuple[PieceStatus, float]:
    thr_a = threshold(A, RInterval(a)).lo
    if y < thr_a:
        return PieceStatus.PASS, thr_a
    if x > threshold(A, RInterval(b)).hi:
        return PieceStatus.FAIL, thr_a
    return PieceStatus.INCONCLUSIVE, thr_a


def verify_piece(a, w, A, cfg: SweepConfig | None = None) -> PieceResult:
    """Check y < A a^(1/6) log a for the enclosure [x, y] on [a, a + w].

    FAIL means x exceeds the threshold at a + w, so the inequality is false
    somewhere on the piece; INCONCLUSIVE means the enclosure is too wide.
    """
    cfg = cfg or SweepConfig()
    a, w = _exact(a), _exact(w)
    if a < 2:
        raise DomainError(f"a must be >= 2, got {a}")
    if not w > 0:
        raise DomainError("piece width must be positive")
    A = RInterval.exact(_exact(A))
    fa, fb = _down(a), _up(a + w)
    x, y, m = _piece(fa, fb, cfg, cfg.fast_terms)
    status, thr = _classify(x, y, fa, fb, A)
    if status is not PieceStatus.PASS:
        x, y = _tight(fa, fb, x, y, m, cfg)
        status, thr = _classify(x, y, fa, fb, A)
    return PieceResult(fa, fb, x, y, thr, status)


def _bisect(a: float, b: float, A: RInterval, cfg: SweepConfig, depth: int, report: VerifyReport) -> None:
    report.deepest = max(report.deepest, depth)
    mid = a + (b - a) / 2
    if not a < mid < b:
        report.failures.append((a, b, "piece cannot be split further"))
        return
    for lo, hi in ((a, mid), (mid, b)):
        report.refined += 1
        x, y, m = _piece(lo, hi, cfg, cfg.fast_terms)
        status, _ = _classify(x, y, lo, hi, A)
        if status is not PieceStatus.PASS:
            x, y = _tight(lo, hi, x, y, m, cfg)
            status, _ = _classify(x, y, lo, hi, A)
        if status is PieceStatus.PASS:
            continue
        if status is PieceStatus.FAIL:
            report.failures.append((lo, hi, f"|zeta| >= {x!r} exceeds the threshold"))
        elif depth >= cfg.max_depth:
            report.failures.append((lo, hi, f"inconclusive at bisection depth {depth}, y = {y!r}"))
        else:
            _bisect(lo, hi, A, cfg, depth + 1, report)


def verify_range(lo, hi, A, cfg: SweepConfig | None = None, max_failures: int = 100) -> VerifyReport:
    """Verify |zeta(1/2+it)| < A t^(1/6) log t on [lo, hi].

    Inconclusive pieces are bisected up to ``cfg.max_depth`` levels. The run
    stops early after ``max_failures`` failures.
    """
    cfg = cfg or SweepConfig()
    lo, hi, A_exact = _exact(lo), _exact(hi), _exact(A)
    if lo < 2:
        raise DomainError(f"lo must be >= 2, got {lo}")
    A = RInterval.exact(A_exact)
    edges = piece_edges(lo, hi, cfg.piece_width)
    report = VerifyReport(lo, hi, A_exact, pieces=len(edges) - 1)
    x, y, method = enclose_pieces(edges, cfg)
    thr = cfg.kernel.threshold_lo(np.ascontiguousarray(edges[:-1]), A.lo)
    for i in np.flatnonzero(~(y < thr)):
        a, b = float(edges[i]), float(edges[i + 1])
        xi, yi = _tight(a, b, float(x[i]), float(y[i]), int(method[i]), cfg)
        status, _ = _classify(xi, yi, a, b, A)
        if status is PieceStatus.PASS:
            continue
        if status is PieceStatus.FAIL:
            report.failures.append((a, b, f"|zeta| >= {xi!r} exceeds the threshold"))
        elif cfg.max_depth == 0:
            report.failures.append((a, b, f"inconclusive, y = {yi!r}"))
        else:
            _bisect(a, b, A, cfg, 1, report)
        if len(report.failures) >= max_failures:
            break
    return report


# -- records ------------------------------------------------------------------


class LongRunRequired(RuntimeError):
    pass


@dataclass
class RecordSet:
    lo: Fraction
    hi: Fraction
    piece_width: Fraction
    records: list[Record]

    def header(self) -> str:
        return f"{RECORD_HEADER} range=[{_text(self.lo)},{_text(self.hi)}] piece={_text(self.piece_width)}"

    def to_text(self) -> str:
        lines = [self.header()]
        lines.extend(f"{r.a!r} {r.y!r}" for r in self.records)
        return "\n".join(lines) + "\n"

    def write(self, path: str | Path) -> None:
        Path(path).write_text(self.to_text())

    def __iter__(self):
        return iter(self.records)

    def __len__(self) -> int:
        return len(self.records)


def record_sweep(
    lo,
    hi,
    cfg: SweepConfig | None = None,
    path: str | Path | None = None,
    allow_long: bool = False,
) -> RecordSet:
    """Left-to-right scan keeping every piece whose y beats all earlier y.

    Writes the record file to ``path`` when given. Heights above 1000 need
    ``allow_long=True``.
    """
    cfg = cfg or SweepConfig()
    lo, hi = _exact(lo), _exact(hi)
    if lo < 2:
        raise DomainError(f"lo must be >= 2, got {lo}")
    if hi > LONG_RUN_LIMIT and not allow_long:
        raise LongRunRequired(f"record sweeps above t = {LONG_RUN_LIMIT} need the long-run flag")
    edges = piece_edges(lo, hi, cfg.piece_width)
    x, y, method = enclose_pieces(edges, cfg)
    records: list[Record] = []
    best = -math.inf
    for i in range(len(y)):
        yi = float(y[i])
        if not yi > best:
            continue
        a, b = float(edges[i]), float(edges[i + 1])
        _, yi = _tight(a, b, float(x[i]), yi, int(method[i]), cfg)
        if yi > best:
            records.append(Record(a, yi))
            best = yi
    rs = RecordSet(lo, hi, cfg.piece_width, records)
    if path is not None:
        rs.write(path)
    return rs


def read_records(source: str | Path | Iterable[str]) -> RecordSet:
    """Parse a record file (path or lines)."""
    if isinstance(source, (str, Path)):
        lines = Path(source).read_text().splitlines()
    else:
        lines = list(source)
    if not lines or not lines[0].startswith(RECORD_HEADER):
        raise ValueError("missing record file header")
    fields_ = dict(part.split("=", 1) for part in lines[0][len(RECORD_HEADER) :].split())
    rng = fields_["range"].strip("[]").split(",")
    rs = RecordSet(_exact(rng[0]), _exact(rng[1]), _exact(fields_["piece"]), [])
    prev_a = -math.inf
    prev_y = -math.inf
    for lineno, line in enumerate(lines[1:], 2):
        if not line.strip() or line.startswith("#"):
            continue
        a_s, y_s = line.split()
        a, y = float(a_s), float(y_s)
        if not (a > prev_a and y > prev_y):
            raise ValueError(f"line {lineno}: records must increase in both a and y")
        rs.records.append(Record(a, y))
        prev_a, prev_y = a, y
    return rs


@dataclass(frozen=True)
class TableEntry:
    constant: Decimal
    max_ratio: RInterval
    at: float  # the a at which the maximal ratio occurs
    records_used: int


def ceil_decimal(x: float, places: int = 4) -> Decimal:
    """Smallest multiple of 10^-places that is >= x (exact)."""
    return Decimal(x).quantize(Decimal(1).scaleb(-places), rounding=ROUND_CEILING)


def table_entry(records: RecordSet | Iterable[Record], lo, hi) -> TableEntry:
    """Maximal y / (a^(1/6) log a) over the records relevant to [lo, hi].

    Relevant are the records with lo <= a < hi and the record in force at lo
    (the last one with a < lo), whose ratio is taken at a = lo: it bounds
    |zeta| until the next record, and the threshold only grows from lo on.
    """
    lo_f, hi_f = _exact(lo), _exact(hi)
    recs = list(records)
    if not recs:
        raise ValueError("empty record set")
    if isinstance(records, RecordSet) and (records.lo > lo_f or records.hi < hi_f):
        raise ValueError(f"records cover [{records.lo}, {records.hi}], not [{lo_f}, {hi_f}]")
    used: list[tuple[float, float]] = []
    before = [r for r in recs if Fraction(r.a) < lo_f]
    if before:
        used.append((_down(lo_f), before[-1].y))
    used.extend((r.a, r.y) for r in recs if lo_f <= Fraction(r.a) < hi_f)
    if not used:
        raise ValueError(f"no records apply to [{lo_f}, {hi_f}]")
    best: tuple[float, RInterval, float] | None = None
    for a, y in used:
        ratio = RInterval(y) / threshold(1.0, RInterval(a))
        if best is None or ratio.hi > best[0]:
            best = (ratio.hi, ratio, a)
    return TableEntry(ceil_decimal(best[0]), best[1], best[2], len(used))


def table_constant(records: RecordSet | Iterable[Record] | str | Path, lo, hi) -> Decimal:
    """The least 4-decimal A with y <= A a^(1/6) log a for the relevant records."""
    if isinstance(records, (str, Path)):
        records = read_records(records)
    return table_entry(records, lo, hi).constant


# -- Lehman bound, crossovers, least Q ---------------------------------------------


_LEHMAN_C = RInterval(4.0) / exp(log(TWO_PI) * _QUARTER)


def lehman_bound(t) -> RInterval:
    """4 (2pi)^(-1/4) t^(1/4)."""
    t = as_interval(t)
    if t.lo < 0.2:
        raise DomainError(f"the Lehman bound needs t >= 0.2, got {t}")
    return _LEHMAN_C * exp(log(t) * _QUARTER)


def power_log_bound(A) -> Callable[[RInterval], RInterval]:
    """t -> A t^(1/6) log t."""
    A = as_interval(A)
    return lambda t: threshold(A, t)


class NoSignChange(ValueError):
    pass


def _sign(v: RInterval) -> int:
    if v.lo > 0:
        return 1
    if v.hi < 0:
        return -1
    return 0


def crossover(f_lo: Callable, f_hi: Callable, bracket, tol: float = 1e-3) -> RInterval:
    """Rigorous bisection for a zero of f_hi - f_lo inside ``bracket``.

    The returned interval has endpoints with certified opposite signs. It is
    narrowed to width <= tol, or until the sign at the midpoint can no longer
    be decided.
    """
    br = as_interval(bracket)
    a, b = br.lo, br.hi

    def g(t: float) -> int:
        T = RInterval(t)
        return _sign(f_hi(T) - f_lo(T))

    sa, sb = g(a), g(b)
    if sa == 0 or sb == 0 or sa == sb:
        raise NoSignChange(f"no certified sign change of the difference on [{a!r}, {b!r}]")
    while b - a > tol:
        m = a + (b - a) / 2
        if not a < m < b:
            break
        sm = g(m)
        if sm == 0:
            break
        if sm == sa:
            a = m
        else:
            b = m
    return RInterval(a, b)


def zeta_half_abs() -> RInterval:
    """|zeta(1/2)|."""
    return cabs(em_zeta(RInterval(0.5), EMParams(64, 20)))


def min_Q(target, bracket=(1.0 + 2**-20, 1e6), tol: float = 1e-12) -> RInterval:
    """Enclosure of the least Q with |zeta(1/2)| < target Q^(1/6) log Q.

    The right side increases for Q > 1, so the answer is the point where the
    two sides meet; it is located by rigorous bisection.
    """
    A = as_interval(target)
    if not A.lo > 0:
        raise DomainError("target constant must be positive")
    z = zeta_half_abs()
    return crossover(lambda q: RInterval(z.lo, z.hi), power_log_bound(A), RInterval(*bracket), tol)


def certify_Q(target, Q) -> bool:
    """True if |zeta(1/2)| < target Q^(1/6) log Q holds rigorously."""
    z = zeta_half_abs()
    return z.hi < threshold(as_interval(target), as_interval(Q)).lo


def default_threads() -> int:
    return len(os.sched_getaffinity(0)) if hasattr(os, "sched_getaffinity") else (os.cpu_count() or 1)
