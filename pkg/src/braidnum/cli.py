"""Command-line interface: ``braidnum <subcommand> ...``.

Exit codes: 0 success, 1 verification failure, 2 refused or malformed input,
3 disagreement between numerator methods.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

from . import cfhp, kernels, verify
from .braid import chain_from_pair, lambda_word
from .perms import BudgetExceeded, eulerian_polynomial, format_perm, parse_perm
from .poly import T, Y, MultiPoly, format_text, to_latex, to_records
from .pwy import InadmissibleY, build_pwy, poset_stats
from .qsym import descent_generating_function

EXIT_OK, EXIT_FAIL, EXIT_REFUSED, EXIT_DISAGREE = 0, 1, 2, 3


@dataclass
class RunConfig:
    n: int
    method: str = "statistic"
    format: str = "text"
    parallelism: int = 1
    output_path: str | None = None

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if self.parallelism < 1:
            raise ValueError("parallelism must be at least 1")


class _Refusal(Exception):
    pass


def _emit(text: str, path: str | None) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _poly_out(p: MultiPoly, fmt: str):
    if fmt == "json":
        return to_records(p)
    if fmt == "latex":
        return to_latex(p)
    if fmt == "csv":
        buf = io.StringIO()
        wr = csv.writer(buf, lineterminator="\n")
        wr.writerow(["y", "t", "coeff"])
        for mono, c in p.sorted_terms():
            d = dict(mono)
            wr.writerow([d.get(Y, 0), d.get(T, 0), c])
        return buf.getvalue().rstrip("\n")
    return format_text(p)


# ---------------------------------------------------------------------------


def cmd_numerator(cfg: RunConfig) -> int:
    methods = cfhp.METHODS if cfg.method == "all" else (cfg.method,)
    rep = cfhp.numerator_report(cfg.n, methods, workers=cfg.parallelism)
    if cfg.format == "json":
        doc = {"n": cfg.n, "polynomials": {m: _poly_out(p, "json") for m, p in rep.polys.items()}}
        if cfg.method == "all":
            doc["agree"] = rep.agree
        text = json.dumps(doc)
    elif cfg.method == "all":
        lines = [f"{m}: {_poly_out(p, cfg.format)}" for m, p in rep.polys.items()]
        lines.append(f"agree={'true' if rep.agree else 'false'}")
        text = "\n".join(lines)
    else:
        text = _poly_out(rep.polys[cfg.method], cfg.format)
    _emit(text, cfg.output_path)
    if cfg.method == "all":
        # wall times vary run to run; keep them off stdout
        for m, sec in rep.timings.items():
            print(f"time[{m}] = {sec:.3f}s", file=sys.stderr)
    return EXIT_OK if rep.agree else EXIT_DISAGREE


def _chain_display(w, sigma) -> str:
    chain = [str(c) for c in chain_from_pair(w, sigma)]
    lam = lambda_word(w, sigma)
    top = " < ".join(chain)
    # each label sits under the "<" of its cover
    under = [" "] * len(top)
    col = 0
    for comp, lab in zip(chain, lam):
        col += len(comp) + 1
        text = str(lab)
        start = max(0, col - (len(text) - 1) // 2)
        under[start:start + len(text)] = text
        col += 2
    return f"{top}\n{''.join(under).rstrip()}\nlambda = ({', '.join(str(x) for x in lam)})"


def cmd_label(w, sigma, fmt: str = "text") -> tuple[int, str]:
    if len(w) != len(sigma) + 1:
        raise _Refusal(f"need |w| = |sigma| + 1, got {len(w)} and {len(sigma)}")
    lam = lambda_word(w, sigma)
    Ino = sorted(x for x in lam if x > 0)
    if fmt == "json":
        doc = {"w": list(w), "sigma": list(sigma),
               "chain": [str(c) for c in chain_from_pair(w, sigma)],
               "lambda": list(lam), "ino": len(Ino), "Ino": Ino}
        return EXIT_OK, json.dumps(doc, indent=2)
    lines = [_chain_display(w, sigma), f"ino = {len(Ino)}",
             "Ino = {" + ",".join(map(str, Ino)) + "}"]
    return EXIT_OK, "\n".join(lines)


def cmd_poset(w, Y, fmt: str = "text", list_extensions: bool = False) -> tuple[int, str]:
    try:
        P = build_pwy(w, Y)
    except InadmissibleY as exc:
        raise _Refusal(f"error: {exc}") from None
    exts = list(P.linear_extensions()) if list_extensions else None
    if fmt == "dot":
        return EXIT_OK, P.to_dot()
    if fmt == "json":
        doc = P.to_dict()
        doc["w"] = list(w)
        doc["Y"] = sorted(Y)
        if exts is not None:
            doc["linear_extensions"] = [list(s) for s in exts]
        return EXIT_OK, json.dumps(doc, indent=2)
    st = poset_stats(P)
    lines = [f"P_(w={format_perm(w)}, Y={{{','.join(map(str, sorted(Y)))}}}) on bars 1..{P.n}",
             "Lambda: " + ", ".join(f"{k}:{lab}" for k, lab in enumerate(P.Lambda, 1)),
             "covers: " + (", ".join(f"{a}<{b}" for a, b in P.covers()) or "(none)"),
             f"linear extensions: {st['linear_extensions']}"]
    if exts is not None:
        lines += ["  " + format_perm(s) + "  Lambda=" + ",".join(map(str, P.vertex_word(s))) for s in exts]
        lines.append("descent generating function: " + format_text(descent_generating_function(exts)))
    return EXIT_OK, "\n".join(lines)


def cmd_verify(n: int, suites: list[str] | None, fmt: str = "text") -> tuple[int, str]:
    results = verify.run_suites(n, suites)
    ok = all(r.ok for r in results)
    if fmt == "json":
        text = json.dumps({"n": n, "ok": ok, "suites": [r.to_dict() for r in results]}, indent=2)
    else:
        lines = [f"{'PASS' if r.ok else 'FAIL'} {r.name:<18} n<={r.n} checked={r.checked}"
                 + ("" if r.ok else f" failures={r.failures}") for r in results]
        lines.append(f"{'all suites pass' if ok else 'FAILURES'}")
        text = "\n".join(lines)
    return (EXIT_OK if ok else EXIT_FAIL), text


QSYM_BUDGET = 4
QSYM_M_BUDGET = 6


def cmd_qsym_check(n: int, m: int, fmt: str = "text") -> tuple[int, str]:
    if n > QSYM_BUDGET:
        raise BudgetExceeded(f"qsym-check: n={n} exceeds the budget of {QSYM_BUDGET}")
    if not 1 <= m <= QSYM_M_BUDGET:
        raise BudgetExceeded(f"qsym-check: m must be in 1..{QSYM_M_BUDGET}")
    res = verify.suite_qsym(n, max_m=m)
    if fmt == "json":
        return (EXIT_OK if res.ok else EXIT_FAIL), json.dumps(res.to_dict(), indent=2)
    line = f"{'PASS' if res.ok else 'FAIL'} qsym n<={n} m<={m} checked={res.checked}"
    if not res.ok:
        line += f" failures={res.failures}"
    return (EXIT_OK if res.ok else EXIT_FAIL), line


def cmd_eulerian(n: int, fmt: str = "text") -> tuple[int, str]:
    p = eulerian_polynomial(n)
    out = _poly_out(p, fmt)
    return EXIT_OK, json.dumps(out) if fmt == "json" else out


# ---------------------------------------------------------------------------


def _parse_set(text: str) -> frozenset[int]:
    text = text.strip().strip("{}")
    if not text or text in ("-", "empty"):
        return frozenset()
    return frozenset(int(x) for x in text.replace(" ", "").split(","))


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="braidnum", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="store_true", help="print kernel backend and exit")
    sub = ap.add_subparsers(dest="cmd")

    p = sub.add_parser("numerator", help="numerator polynomial N(y,t)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=list(cfhp.METHODS) + ["all"], default="statistic")
    p.add_argument("--format", choices=["text", "json", "latex", "csv"], default="text")
    p.add_argument("--workers", type=int, default=None,
                   help="process pool size (default: $BRAIDNUM_WORKERS or 1)")
    p.add_argument("--output", default=None)

    p = sub.add_parser("label", help="chain and signed labels of a pair (w, sigma)")
    p.add_argument("--w", required=True)
    p.add_argument("--sigma", required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("poset", help="the poset P_(w,Y) with its vertex labels")
    p.add_argument("--w", required=True)
    p.add_argument("--Y", "--y", dest="Y", default="", help="comma-separated values, empty for none")
    p.add_argument("--format", choices=["text", "json", "dot"], default="text")
    p.add_argument("--list-extensions", action="store_true")

    p = sub.add_parser("verify", help="run the exhaustive verification suites")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--suites", default=None, help="comma-separated; available: " + ",".join(verify.SUITES))
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("qsym-check", help="K_(P,omega) against its fundamental expansion")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=4)
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("eulerian", help="Eulerian polynomial by enumeration")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["text", "json", "latex"], default="text")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.version:
        print(f"braidnum kernels: {kernels.BACKEND}")
        return EXIT_OK
    if args.cmd is None:
        ap.print_help()
        return EXIT_REFUSED
    try:
        if args.cmd == "numerator":
            workers = args.workers if args.workers is not None else cfhp.default_workers()
            cfg = RunConfig(args.n, args.method, args.format, workers, args.output)
            return cmd_numerator(cfg)
        if args.cmd == "label":
            code, text = cmd_label(parse_perm(args.w), parse_perm(args.sigma), args.format)
        elif args.cmd == "poset":
            code, text = cmd_poset(parse_perm(args.w), _parse_set(args.Y), args.format,
                                   args.list_extensions)
        elif args.cmd == "verify":
            names = [x.strip() for x in args.suites.split(",")] if args.suites else None
            code, text = cmd_verify(args.n, names, args.format)
        elif args.cmd == "qsym-check":
            code, text = cmd_qsym_check(args.n, args.m, args.format)
        elif args.cmd == "eulerian":
            code, text = cmd_eulerian(args.n, args.format)
        else:  # pragma: no cover
            ap.error(f"unknown command {args.cmd}")
    except (BudgetExceeded, _Refusal, ValueError) as exc:
        print(f"braidnum: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    _emit(text, None)
    return code


if __name__ == "__main__":
    sys.exit(main())
