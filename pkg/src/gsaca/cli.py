"""Command-line front end.

Suffix array files cover the original bytes only: the internal sentinel
entry (always first) is dropped on write and restored on read.  Formats are
``raw32``/``raw64`` (little-endian unsigned, no header) and ``text`` (one
decimal index per line).  ``auto`` writes raw32 when the indices fit and
raw64 otherwise; on read it picks raw32 or raw64 from the file size and
falls back to text.

Exit codes: 0 success, 1 verification failure (or an oracle mismatch in
``inspect --oracle``), 2 input, I/O or format errors.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import statistics
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import generators, oracles
from .errors import SuffixArrayError, WidthTooSmall
from .lyndon import compute_pss, derive_nss, lyndon_lengths
from .phase2 import DEFAULT_QUEUE_CAPACITY
from .pipeline import resolve_width, lyndon_grouping, suffix_array_with_stats, verify_suffix_array, warm_up
from .text import APPEND_SENTINEL, REMAP, make_text

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_ERROR = 2

RAW32_MAX = 2**31 - 2
FORMATS = ("auto", "raw32", "raw64", "text")
POLICIES = {"strict": APPEND_SENTINEL, "remap": REMAP}
DUMPS = ("pss", "nss", "lyndon", "grouping", "sa")


class FormatError(Exception):
    pass


@dataclass
class CliConfig:
    command: str
    input_path: str | None = None
    output_path: str | None = None
    sa_path: str | None = None
    format: str = "auto"
    queue_capacity: int = DEFAULT_QUEUE_CAPACITY
    sentinel_policy: str = "strict"
    iterations: int = 1
    json: bool = False
    width: int | None = None
    dump: str = "sa"
    oracle: bool = False
    kind: str = "random"
    size: int = 0
    sigma: int = generators.DEFAULT_SIGMA
    seed: int = 0
    period: int = generators.DEFAULT_PERIOD

    def validate(self) -> None:
        if self.format not in FORMATS:
            raise FormatError(f"unknown format {self.format!r}")
        if self.sentinel_policy not in POLICIES:
            raise FormatError(f"unknown sentinel policy {self.sentinel_policy!r}")
        if self.iterations < 1:
            raise FormatError("iterations must be at least 1")
        if self.queue_capacity < 1:
            raise FormatError("queue capacity must be at least 1")


def _err(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return EXIT_ERROR


def _load_text(cfg: CliConfig):
    raw = Path(cfg.input_path).read_bytes()
    return raw, make_text(raw, POLICIES[cfg.sentinel_policy])


def _write_format(fmt: str, m: int) -> str:
    if fmt == "auto":
        return "raw32" if m <= RAW32_MAX else "raw64"
    if fmt == "raw32" and m > RAW32_MAX:
        raise WidthTooSmall(f"raw32 cannot hold indices of a {m}-byte input")
    return fmt


def write_sa(path: str, sa: np.ndarray, fmt: str) -> None:
    """Write ``sa`` (external, sentinel entry already dropped)."""
    fmt = _write_format(fmt, sa.shape[0])
    if fmt == "text":
        with open(path, "w") as fh:
            if sa.shape[0]:
                fh.write("\n".join(map(str, sa.tolist())))
                fh.write("\n")
    else:
        dt = "<u4" if fmt == "raw32" else "<u8"
        Path(path).write_bytes(sa.astype(dt).tobytes())


def read_sa(path: str, fmt: str, m: int) -> np.ndarray:
    data = Path(path).read_bytes()
    if fmt == "auto":
        if len(data) == 4 * m:
            fmt = "raw32"
        elif len(data) == 8 * m:
            fmt = "raw64"
        else:
            fmt = "text"
    if fmt in ("raw32", "raw64"):
        item = 4 if fmt == "raw32" else 8
        if len(data) != item * m:
            raise FormatError(f"{fmt} file holds {len(data) / item:g} entries, expected {m}")
        vals = np.frombuffer(data, "<u4" if item == 4 else "<u8")
        if item == 8 and vals.size and vals.max() > np.iinfo(np.int64).max:
            return np.full(m, -1, np.int64)
        return vals.astype(np.int64)
    try:
        vals = np.array([int(tok) for tok in data.split()], dtype=np.int64)
    except (ValueError, OverflowError) as exc:
        raise FormatError(f"malformed text SA: {exc}") from None
    if vals.shape[0] != m:
        raise FormatError(f"text SA has {vals.shape[0]} entries, expected {m}")
    return vals


def cmd_build(cfg: CliConfig) -> int:
    try:
        cfg.validate()
        raw, text = _load_text(cfg)
        fmt = _write_format(cfg.format, len(raw))
        sa, _ = suffix_array_with_stats(text, cfg.queue_capacity, cfg.width)
        write_sa(cfg.output_path, sa[1:], fmt)
    except (OSError, SuffixArrayError, FormatError) as exc:
        return _err(str(exc))
    return EXIT_OK


def cmd_verify(cfg: CliConfig) -> int:
    try:
        cfg.validate()
        raw, text = _load_text(cfg)
        ext = read_sa(cfg.sa_path, cfg.format, len(raw))
    except (OSError, SuffixArrayError, FormatError) as exc:
        return _err(str(exc))
    sa = np.concatenate([np.array([len(raw)], np.int64), ext])
    if verify_suffix_array(text, sa):
        print("OK")
        return EXIT_OK
    print("FAILED: not the suffix array of the input")
    return EXIT_VERIFY_FAILED


def _sa_checksum(sa: np.ndarray) -> str:
    return hashlib.sha256(sa.astype("<u8").tobytes()).hexdigest()


def cmd_bench(cfg: CliConfig) -> int:
    try:
        cfg.validate()
        _, text = _load_text(cfg)
        warm_up((resolve_width(text.n, cfg.width),))
        runs = [suffix_array_with_stats(text, cfg.queue_capacity, cfg.width) for _ in range(cfg.iterations)]
    except (OSError, SuffixArrayError, FormatError) as exc:
        return _err(str(exc))
    sa, last = runs[-1]
    stats = [s for _, s in runs]
    report = {
        "init_s": statistics.fmean(s.init_time for s in stats),
        "phase1_s": statistics.fmean(s.phase1_time for s in stats),
        "phase2_s": statistics.fmean(s.phase2_time for s in stats),
        "total_s": statistics.fmean(s.total_time for s in stats),
        "aux_bytes_per_char": last.aux_bytes_per_char,
        "peak_aux_bytes": last.peak_aux_bytes,
        "n": last.n,
        "groups": last.group_count,
        "width": last.width.bits,
        "iterations": cfg.iterations,
        "queue_capacity": cfg.queue_capacity,
        "sa_sha256": _sa_checksum(sa),
    }
    if cfg.json:
        print(json.dumps(report))
    else:
        for key, val in report.items():
            print(f"{key:<20}{val:.6f}" if isinstance(val, float) else f"{key:<20}{val}")
    return EXIT_OK


def _dump_rows(kind: str, text) -> list[list[int]]:
    if kind == "pss":
        return [compute_pss(text).tolist()]
    if kind == "nss":
        return [derive_nss(compute_pss(text)).tolist()]
    if kind == "lyndon":
        return [lyndon_lengths(derive_nss(compute_pss(text))).tolist()]
    if kind == "grouping":
        return lyndon_grouping(text)[0].partition()
    return [suffix_array_with_stats(text)[0].tolist()]


def _oracle_rows(kind: str, text) -> list[list[int]]:
    if kind in ("pss", "nss", "lyndon"):
        pss, nss = oracles.oracle_pss_nss(text)
        if kind == "pss":
            return [pss]
        if kind == "nss":
            return [nss]
        return [[e - i for i, e in enumerate(nss)]]
    if kind == "grouping":
        return oracles.canonical_lyndon_grouping(text).partition
    return [oracles.brute_force_sa(text)]


def _row(vals) -> str:
    return " ".join(map(str, vals))


def cmd_inspect(cfg: CliConfig) -> int:
    try:
        cfg.validate()
        if cfg.dump not in DUMPS:
            raise FormatError(f"unknown dump {cfg.dump!r}")
        _, text = _load_text(cfg)
        rows = _dump_rows(cfg.dump, text)
        ref = _oracle_rows(cfg.dump, text) if cfg.oracle else None
    except (OSError, SuffixArrayError, FormatError, ValueError) as exc:
        return _err(str(exc))
    if ref is None:
        for r in rows:
            print(_row(r))
        return EXIT_OK
    for r in rows:
        print("impl   " + _row(r))
    for r in ref:
        print("oracle " + _row(r))
    same = rows == ref
    print("SAME" if same else "DIFF")
    return EXIT_OK if same else EXIT_VERIFY_FAILED


def cmd_gen(cfg: CliConfig) -> int:
    try:
        data = generators.generate(cfg.kind, cfg.size, cfg.sigma, cfg.seed, cfg.period)
        Path(cfg.output_path).write_bytes(data)
    except (OSError, ValueError) as exc:
        return _err(str(exc))
    return EXIT_OK


COMMANDS = {"build": cmd_build, "verify": cmd_verify, "bench": cmd_bench, "inspect": cmd_inspect, "gen": cmd_gen}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gsaca", description="Suffix arrays by grouping.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, fmt=True):
        p.add_argument("input_path")
        p.add_argument("--sentinel-policy", choices=sorted(POLICIES), default="strict", dest="sentinel_policy")
        p.add_argument("--queue-capacity", type=int, default=DEFAULT_QUEUE_CAPACITY, dest="queue_capacity")
        if fmt:
            p.add_argument("--format", choices=FORMATS, default="auto")

    p = sub.add_parser("build", help="write the suffix array of a file")
    common(p)
    p.add_argument("-o", "--output", dest="output_path", required=True)
    p.add_argument("--width", type=int, choices=(32, 64))

    p = sub.add_parser("verify", help="check a suffix array file against its input")
    common(p)
    p.add_argument("sa_path")

    p = sub.add_parser("bench", help="time the construction")
    common(p, fmt=False)
    p.add_argument("--iterations", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.add_argument("--width", type=int, choices=(32, 64))

    p = sub.add_parser("inspect", help="print internal arrays of a small input")
    common(p, fmt=False)
    p.add_argument("--dump", choices=DUMPS, default="sa")
    p.add_argument("--oracle", action="store_true")

    p = sub.add_parser("gen", help="write a generated corpus")
    p.add_argument("-o", "--output", dest="output_path", required=True)
    p.add_argument("--kind", choices=generators.KINDS, default="random")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--sigma", type=int, default=generators.DEFAULT_SIGMA)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--period", type=int, default=generators.DEFAULT_PERIOD)
    return ap


def main(argv=None) -> int:
    ns = build_parser().parse_args(argv)
    cfg = CliConfig(**vars(ns))
    return COMMANDS[cfg.command](cfg)


if __name__ == "__main__":
    sys.exit(main())
