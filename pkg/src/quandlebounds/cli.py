"""Command-line front end.

    quandlebounds colorings --braid "m=3: (s1 s2^-1)^4" --p 3
    quandlebounds shadow    --braid "m=5: s1^3 s2^3 s3^3 s4^3" --p 3
    quandlebounds cocycle   --blocks "m=3: 1:1 2:1" --p 5 --n 1 --mode 2n
    quandlebounds bounds    --blocks "m=3: 1:1 2:1" --p 7 --n 1 --mode 2n
    quandlebounds verify    --p 5 --m 3
    quandlebounds batch     requests.ndjson

Exit codes: 0 success, 1 usage / bad input / failed verification,
2 enumeration budget exceeded, 3 some batch lines failed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import asdict, dataclass
from typing import Any, Dict, Iterator, Optional

from . import oracle
from .bounds import MODES, bounds_report, effective_exponent
from .braid import BraidWord, PowerBlockWord, closure_components, format_braid_word, parse_blocks, parse_braid_word
from .cocycle import DEFAULT_CAP, shadow_multiset
from .errors import BudgetExceeded, QuandleBoundsError
from .modp import check_prime
from .quandle import action_matrix, coloring_space
from .toruscover import phi_direct, phi_power_block, phi_simplified

EXIT_OK, EXIT_USAGE, EXIT_BUDGET, EXIT_PARTIAL = 0, 1, 2, 3
COMMANDS = ("colorings", "shadow", "cocycle", "bounds", "verify")
METHODS = ("auto", "simplified", "direct", "closed", "all")


@dataclass
class Request:
    command: str
    p: int
    braid: Optional[str] = None
    blocks: Optional[str] = None
    n: int = 1
    mode: str = "raw"
    method: str = "auto"
    m: Optional[int] = None
    cap: int = DEFAULT_CAP
    format: str = "json"
    verify: bool = False
    figure_dir: Optional[str] = None

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Request":
        known = set(cls.__dataclass_fields__)
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown request fields: {sorted(unknown)}")
        if "command" not in data or "p" not in data:
            raise ValueError("a request needs 'command' and 'p'")
        return cls(**data)


def _word(req: Request):
    if (req.braid is None) == (req.blocks is None):
        if req.command == "verify" and req.braid is None and req.blocks is None:
            return None
        raise ValueError("give exactly one of --braid or --blocks")
    if req.blocks is not None:
        return parse_blocks(req.blocks, req.p)
    return parse_braid_word(req.braid)


def _expanded(w) -> BraidWord:
    return w.expand() if isinstance(w, PowerBlockWord) else w


def _figure(req: Request, report: dict, ms, name: str, title: str):
    if not req.figure_dir:
        return
    from .plotting import plot_multiset

    path = plot_multiset(ms, os.path.join(req.figure_dir, f"{name}.png"), title)
    report.setdefault("figures", []).append(path)


def _verify_word(word: BraidWord, p: int) -> Dict[str, Any]:
    out: Dict[str, Any] = {}
    if p**word.degree <= oracle.LEMMA_CAP:
        brute = oracle.brute_colorings(word, p)
        out["colorings_match_enumeration"] = len(brute) == coloring_space(word, p).size
        out["linear_vanishing"] = oracle.verify_linear_vanishing(word, p)
    if p ** (word.degree + 1) <= oracle.LEMMA_CAP:
        out["shadow_lemmas"] = oracle.verify_shadow_lemmas(word, p)
        out["shadow_multiset_matches_enumeration"] = oracle.brute_shadow_multiset(word, p) == shadow_multiset(word, p)
    if not out:
        out["skipped"] = "instance too large for exhaustive checks"
    return out


def run(req: Request) -> Dict[str, Any]:
    """Execute one request and return a JSON-ready report."""
    started = time.perf_counter()
    if req.command not in COMMANDS:
        raise ValueError(f"unknown command {req.command!r}")
    if req.mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    if req.method not in METHODS:
        raise ValueError(f"method must be one of {METHODS}")
    p = check_prime(req.p)
    w = _word(req)
    report: Dict[str, Any] = {"request": {k: v for k, v in asdict(req).items() if v is not None}}

    if req.command == "verify":
        m = req.m if req.m is not None else (w.degree if w is not None else 3)
        results = oracle.run_all(p, m, _expanded(w) if w is not None else None)
        report["verify"] = results
        report["all_passed"] = all(results.values())
    else:
        word = _expanded(w)
        space = coloring_space(word, p)
        report["m"] = word.degree
        report["word"] = str(w) if isinstance(w, PowerBlockWord) else format_braid_word(word)
        report["k"] = space.k
        report["colorings"] = str(space.size)

        if req.command == "colorings":
            report["basis"] = [list(v) for v in space.basis]
            report["components"] = closure_components(word)
            report["is_knot"] = report["components"] == 1
            report["action_matrix"] = action_matrix(word, p).tolist()

        elif req.command == "shadow":
            ms = shadow_multiset(word, p, req.cap)
            report["shadow"] = ms.to_json()
            report["a0"] = str(ms.a0())
            _figure(req, report, ms, "shadow", f"shadow invariant, p={p}")

        elif req.command == "cocycle":
            e = effective_exponent(word.degree, p, req.n, req.mode)
            report["exponent"] = e
            closed_ok = isinstance(w, PowerBlockWord) and e % 2 == 0
            method = req.method
            if method == "auto":
                method = "closed" if closed_ok else "simplified"
            if method in ("closed",) and not closed_ok:
                raise ValueError("the closed form needs --blocks and an even full-twist exponent")
            results = {}
            if method in ("simplified", "all"):
                results["simplified"] = phi_simplified(word, e, p, req.cap)
            if method in ("direct", "all"):
                results["direct"] = phi_direct(word, e, p, req.cap)
            if method == "closed" or (method == "all" and closed_ok):
                results["closed"] = phi_power_block(w, e // 2)
            first = next(iter(results.values()))
            report["method"] = method
            report["phi"] = first.to_json()
            report["a0"] = str(first.a0())
            if len(results) > 1:
                report["methods_agree"] = all(r == first for r in results.values())
                report["by_method"] = {k: v.to_json() for k, v in results.items()}
            _figure(req, report, first, "phi", f"Phi_p of S_m(b, Delta^{e}), p={p}")

        elif req.command == "bounds":
            br = bounds_report(w, p, req.n, req.mode, req.cap)
            report["bounds"] = br.to_json()

        if req.verify:
            report["verify"] = _verify_word(word, p)

    report["elapsed_seconds"] = round(time.perf_counter() - started, 6)
    return report


# -- rendering --------------------------------------------------------------


def _flatten(obj, prefix=""):
    if isinstance(obj, dict):
        for k, v in obj.items():
            yield from _flatten(v, f"{prefix}.{k}" if prefix else str(k))
    elif isinstance(obj, list) and obj and isinstance(obj[0], dict):
        for i, v in enumerate(obj):
            yield from _flatten(v, f"{prefix}[{i}]")
    else:
        yield prefix, obj


def render(report: Dict[str, Any], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, sort_keys=False)
    lines = []
    for key, value in _flatten(report):
        if isinstance(value, (list, tuple)):
            value = json.dumps(value)
        elif value is None:
            value = "-"
        lines.append(f"{key}: {value}")
    return "\n".join(lines)


# -- batch ------------------------------------------------------------------


def batch(lines) -> Iterator[Dict[str, Any]]:
    """One report (or error record) per non-blank line, in input order."""
    for lineno, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            data = json.loads(line)
            if not isinstance(data, dict):
                raise ValueError("each line must be a JSON object")
            data.pop("format", None)
            yield run(Request.from_dict(data))
        except BudgetExceeded as exc:
            yield {"line": lineno, "error": str(exc), "kind": "budget"}
        except (QuandleBoundsError, ValueError, TypeError) as exc:
            yield {"line": lineno, "error": str(exc), "kind": type(exc).__name__}


# -- argument parsing -------------------------------------------------------


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group()
    src.add_argument("--braid", help='braid word, e.g. "m=3: (s1 s2^-1)^4"')
    src.add_argument("--blocks", help='power blocks, e.g. "m=3: 1:1 2:1" for sigma_1^p sigma_2^p')
    common.add_argument("--p", type=int, required=True, help="odd prime")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="enumeration budget (default 10^7)")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--verify", action="store_true", help="also run the brute-force verifiers")
    common.add_argument("--figure-dir", help="write bar charts of multisets into this directory")

    twist = argparse.ArgumentParser(add_help=False)
    twist.add_argument("--n", type=int, default=1, help="full-twist parameter")
    twist.add_argument("--mode", choices=MODES, default="raw", help="exponent is n, l*n or 2n")

    parser = argparse.ArgumentParser(prog="quandlebounds", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("colorings", parents=[common], help="p-coloring space of the closed braid")
    sub.add_parser("shadow", parents=[common], help="shadow cocycle invariant multiset")
    cp = sub.add_parser("cocycle", parents=[common, twist], help="Phi_p of S_m(b, Delta^e)")
    cp.add_argument("--method", choices=METHODS, default="auto")
    sub.add_parser("bounds", parents=[common, twist], help="bounds on u and tau")
    vp = sub.add_parser("verify", parents=[common], help="run the brute-force verifiers")
    vp.add_argument("--m", type=int, help="strand count for the generic checks")
    bp = sub.add_parser("batch", help="newline-delimited JSON requests")
    bp.add_argument("path")
    bp.add_argument("--format", choices=("text", "json"), default="json")
    return parser


def main(argv=None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK

    if args.command == "batch":
        try:
            with open(args.path, encoding="utf-8") as fh:
                lines = fh.readlines()
        except OSError as exc:
            print(f"error: cannot read {args.path}: {exc}", file=sys.stderr)
            return EXIT_USAGE
        failed = False
        for rep in batch(lines):
            failed |= "error" in rep
            print(render(rep, "json") if args.format == "json" else render(rep, "text") + "\n")
        return EXIT_PARTIAL if failed else EXIT_OK

    fields = {k: v for k, v in vars(args).items() if k in Request.__dataclass_fields__}
    req = Request(**fields)
    try:
        report = run(req)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (QuandleBoundsError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(render(report, args.format))
    if req.command == "verify" and not report["all_passed"]:
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
