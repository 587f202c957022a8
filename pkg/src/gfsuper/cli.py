"""Command-line harness: compute cohomology tables, compare with models, cache."""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import os
import sys
import tempfile
import time
from dataclasses import asdict, dataclass
from math import comb
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence

from . import __version__
from .algebras import gl, invariant_test_module, invariants_dim
from .cohomology import ResourceCapError, gl_coefficient_cohomology, vfield_cohomology
from .diagrams import Partition, fits_thick_hook, invariant_diagram_count, parse_partition
from .topmodels import exterior_betti, predicted_betti

CLAIMS = ("A", "B", "C", "D", "CONJ", "LEMMA-GL11", "PROP-GLN1", "LEMMA-INV", "V1N")
DEFAULT_MAX_BLOCK = 200_000
EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(ValueError):
    pass


@dataclass
class VerificationReport:
    claim: str
    params: Dict[str, object]
    betti: List[int]
    expected: List[int]
    verdict: str
    degrees_checked: int
    wall_time_ms: int = 0

    def to_json(self) -> str:
        return json.dumps(asdict(self))

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        return cls(**json.loads(text))

    @property
    def ok(self) -> bool:
        return self.verdict == "MATCH" or self.verdict.startswith("PARTIAL")


def compare(computed: Sequence[int], expected_full: Sequence[int], P: int) -> str:
    """MATCH when degrees 0..P agree and nothing is expected above P;
    PARTIAL(0..P) when they agree but the expected table goes on."""
    exp = list(expected_full) + [0] * (P + 1)
    if list(computed)[:P + 1] != exp[:P + 1]:
        return "MISMATCH"
    if any(list(expected_full)[P + 1:]):
        return f"PARTIAL(0..{P})"
    return "MATCH"


def pad(table: Sequence[int], P: int) -> List[int]:
    return (list(table) + [0] * (P + 1))[:P + 1]


# cache


class ResultCache:
    """Flat-file JSON store, one file per key, written once."""

    def __init__(self, root: Optional[Path]):
        self.root = root

    @staticmethod
    def key(op: str, params: Dict[str, object]) -> str:
        return json.dumps({"op": op, "params": params, "version": __version__}, sort_keys=True)

    def _path(self, key: str) -> Path:
        return self.root / (hashlib.sha256(key.encode()).hexdigest()[:32] + ".json")

    def get(self, op: str, params: Dict[str, object]):
        if self.root is None:
            return None
        key = self.key(op, params)
        path = self._path(key)
        try:
            entry = json.loads(path.read_text())
        except (OSError, ValueError):
            return None
        return entry["value"] if entry.get("key") == key else None

    def put(self, op: str, params: Dict[str, object], value) -> None:
        if self.root is None:
            return
        self.root.mkdir(parents=True, exist_ok=True)
        key = self.key(op, params)
        path = self._path(key)
        fd, tmp = tempfile.mkstemp(dir=self.root, suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as fh:
                json.dump({"key": key, "value": value}, fh)
            try:
                os.link(tmp, path)  # atomic and fails if another writer got there first
            except FileExistsError:
                pass
        finally:
            os.unlink(tmp)

    def cached(self, op: str, params: Dict[str, object], compute: Callable[[], object]):
        hit = self.get(op, params)
        if hit is not None:
            return hit
        value = compute()
        self.put(op, params, value)
        return value


def resolve_cache(args) -> ResultCache:
    if args.no_cache:
        return ResultCache(None)
    root = os.environ.get("GFSUPER_CACHE_DIR") or args.cache_dir
    if not root:
        root = Path.home() / ".cache" / "gfsuper"
    return ResultCache(Path(root))


# computations


def computed_vfield(cache: ResultCache, m: int, n: int, P: int, dmax: Optional[int], max_block: int) -> List[int]:
    params = {"m": m, "n": n, "P": P, "dmax": P if dmax is None else dmax}
    return cache.cached("vfield", params,
                        lambda: vfield_cohomology(m, n, P, dmax, max_block=max_block).to_list())


def computed_gl(cache: ResultCache, n: int, lam: Partition, P: int, max_block: int) -> List[int]:
    params = {"n": n, "lambda": str(lam), "P": P}
    return cache.cached("gl-delta", params,
                        lambda: gl_coefficient_cohomology(n, lam, P, max_block=max_block).to_list())


def expected_gl(n: int, lam: Partition) -> List[int]:
    """Exterior algebra on e_1, .., e_{2n-1}, plus e'_1 once the diagram is
    taller than n - 1; zero if Sigma^lam V vanishes."""
    if not fits_thick_hook(lam, n, 1):
        return [0]
    degrees = [2 * i - 1 for i in range(1, n + 1)]
    if lam.height > n - 1:
        degrees.append(1)
    return exterior_betti(degrees).to_list()


def exterior_power_dim(even: int, odd: int, p: int) -> int:
    # even factors strict, odd factors repeat
    return sum(comb(even, j) * (comb(odd + p - j - 1, p - j) if p > j else 1) for j in range(min(p, even) + 1))


def invariant_module_dim(m: int, n: int, p: int) -> int:
    s2e = comb(m + 1, 2) + comb(n, 2)
    s2o = m * n
    inner_even, inner_odd = s2e * m + s2o * n, s2e * n + s2o * m
    return exterior_power_dim(m, n, p) * exterior_power_dim(inner_even, inner_odd, p)


def computed_invariants(cache: ResultCache, m: int, n: int, p: int, max_block: int) -> int:
    est = invariant_module_dim(m, n, p) * (m + n) ** 2
    if est > max_block:
        raise ResourceCapError(f"invariant test module for gl({m},{n}), p={p}: about {est} action entries, "
                               f"cap is {max_block}")

    def run():
        g = gl(m, n)
        return invariants_dim(g, invariant_test_module(g, p))

    return cache.cached("invariants", {"m": m, "n": n, "p": p}, run)


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--{name.replace('_', '-')} is required here")


def _nonneg(**vals):
    for k, v in vals.items():
        if v is not None and v < 0:
            raise UsageError(f"--{k} must be >= 0")


def _lambda(args) -> Partition:
    if args.lam is None:
        raise UsageError("--lambda is required here")
    try:
        return parse_partition(args.lam)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def vfield_report(claim: str, args, cache: ResultCache, m: int, n: int, expected_full: List[int]) -> VerificationReport:
    P = args.max_degree
    betti = computed_vfield(cache, m, n, P, args.dmax, args.max_block)
    params = {"m": m, "n": n, "P": P}
    return VerificationReport(claim, params, betti, pad(expected_full, P), compare(betti, expected_full, P), P + 1)


def gl_report(claim: str, args, cache: ResultCache, n: int, lam: Partition) -> VerificationReport:
    P = args.max_degree
    betti = computed_gl(cache, n, lam, P, args.max_block)
    exp = expected_gl(n, lam)
    return VerificationReport(claim, {"n": n, "lambda": str(lam), "P": P}, betti, pad(exp, P),
                              compare(betti, exp, P), P + 1)


def invariants_report(args, cache: ResultCache) -> VerificationReport:
    _need(args, "m", "n", "p")
    _nonneg(m=args.m, n=args.n, p=args.p)
    direct = computed_invariants(cache, args.m, args.n, args.p, args.max_block)
    count = invariant_diagram_count(args.m, args.n, args.p)
    verdict = "MATCH" if direct == count else "MISMATCH"
    return VerificationReport("LEMMA-INV", {"m": args.m, "n": args.n, "p": args.p}, [direct], [count], verdict, 1)


def verify_report(args, cache: ResultCache) -> VerificationReport:
    claim = args.claim
    if claim == "LEMMA-INV":
        return invariants_report(args, cache)
    if claim == "LEMMA-GL11":
        _need(args, "max_degree")
        return gl_report(claim, args, cache, 1, _lambda(args))
    if claim == "PROP-GLN1":
        _need(args, "n", "max_degree")
        if args.n < 1:
            raise UsageError("--n must be >= 1")
        return gl_report(claim, args, cache, args.n, _lambda(args))
    _need(args, "max_degree")
    if claim == "A":
        _need(args, "m")
        if args.m < 1 or (args.n or 0) != 0:
            raise UsageError("claim A needs --m >= 1 and n = 0")
        m, n = args.m, 0
    elif claim == "B":
        _need(args, "n")
        m, n = args.m or 0, args.n
        if not m < n:
            raise UsageError("claim B needs m < n")
    elif claim == "C":
        n = args.n if args.n is not None else args.m
        if n is None or n < 1:
            raise UsageError("claim C needs --n >= 1")
        m = n
    elif claim == "D":
        _need(args, "m")
        if args.m < 1:
            raise UsageError("claim D needs --m >= 1")
        m, n = args.m, 1
    elif claim == "CONJ":
        _need(args, "m", "n")
        m, n = args.m, args.n
        if m < 0 or n < 0 or m + n == 0:
            raise UsageError("claim CONJ needs m, n >= 0, not both zero")
    elif claim == "V1N":
        _need(args, "n")
        if args.n < 2:
            raise UsageError("claim V1N needs --n >= 2")
        m, n = 1, args.n
        return vfield_report(claim, args, cache, m, n, exterior_betti([2 * n - 1]).to_list())
    else:
        raise UsageError(f"unknown claim {claim!r}")
    return vfield_report(claim, args, cache, m, n, predicted_betti(m, n).to_list())


# output


def render(report: VerificationReport, fmt: str) -> str:
    if fmt == "json":
        return report.to_json() + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["claim", "degree", "computed", "expected", "verdict"])
        for p in range(max(len(report.betti), len(report.expected))):
            comp = report.betti[p] if p < len(report.betti) else ""
            exp = report.expected[p] if p < len(report.expected) else ""
            w.writerow([report.claim, p, comp, exp, report.verdict])
        return buf.getvalue()
    params = " ".join(f"{k}={v}" for k, v in report.params.items())
    width = max(3, *(len(str(x)) for x in report.betti + report.expected))
    cells = lambda xs: " ".join(str(x).rjust(width) for x in xs)
    lines = [
        f"claim     {report.claim}",
        f"params    {params}",
        f"degree    {cells(range(len(report.betti)))}",
        f"computed  {cells(report.betti)}",
        f"expected  {cells(report.expected)}",
        f"verdict   {report.verdict}",
        f"time      {report.wall_time_ms} ms",
    ]
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--m", type=int)
    common.add_argument("--n", type=int)
    common.add_argument("--lambda", dest="lam", metavar="PARTS", help='comma-separated parts, "" for empty')
    common.add_argument("--max-degree", type=int)
    common.add_argument("--dmax", type=int, help="truncation weight for vector fields (default: max degree)")
    common.add_argument("--p", type=int, help="exterior degree for the invariant count")
    common.add_argument("--format", choices=("table", "json", "csv"), default="table")
    common.add_argument("--output", "-o", help="write the report here instead of stdout")
    common.add_argument("--cache-dir", help="result cache directory (GFSUPER_CACHE_DIR wins)")
    common.add_argument("--no-cache", action="store_true")
    common.add_argument("--max-block", type=int, default=DEFAULT_MAX_BLOCK,
                        help="refuse blocks with more estimated nonzeros than this")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="gfsuper", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("compute-vfield", parents=[common], help="cohomology of formal vector fields")
    sub.add_parser("compute-gl", parents=[common], help="gl(n,1) cohomology with Sigma^lam V (x) Sigma^lam V* coefficients")
    sub.add_parser("invariants", parents=[common], help="invariant count against the diagram count")
    v = sub.add_parser("verify", parents=[common], help="compare a computed table with its model")
    v.add_argument("--claim", required=True, choices=CLAIMS)
    return parser


def run(args) -> VerificationReport:
    cache = resolve_cache(args)
    _nonneg(m=args.m, n=args.n, max_degree=args.max_degree, dmax=args.dmax)
    if args.dmax is not None and args.max_degree is not None and args.dmax < args.max_degree:
        raise UsageError("--dmax must be >= --max-degree")
    if args.max_block < 1:
        raise UsageError("--max-block must be positive")
    if args.command == "compute-vfield":
        _need(args, "m", "n", "max_degree")
        if args.m + args.n == 0:
            raise UsageError("m and n cannot both be zero")
        return vfield_report("compute-vfield", args, cache, args.m, args.n,
                             predicted_betti(args.m, args.n).to_list())
    if args.command == "compute-gl":
        _need(args, "n", "max_degree")
        if args.n < 1:
            raise UsageError("--n must be >= 1")
        lam = _lambda(args)
        return gl_report("LEMMA-GL11" if args.n == 1 else "PROP-GLN1", args, cache, args.n, lam)
    if args.command == "invariants":
        return invariants_report(args, cache)
    return verify_report(args, cache)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.verbose:
        import logging
        logging.basicConfig(level=logging.DEBUG, format="%(relativeCreated)8d ms  %(message)s")
    start = time.perf_counter()
    try:
        report = run(args)
    except UsageError as exc:
        parser.error(str(exc))
    except ResourceCapError as exc:
        print(f"gfsuper: resource cap exceeded: {exc}; raise --max-block to run anyway", file=sys.stderr)
        return EXIT_CAP
    report.wall_time_ms = int((time.perf_counter() - start) * 1000)
    text = render(report, args.format)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    if args.command in ("compute-vfield",):
        return EXIT_OK
    return EXIT_OK if report.ok else EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
