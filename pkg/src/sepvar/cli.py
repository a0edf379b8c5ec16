"""Command-line front end: ``sepvar <subcommand> [options]``.

Exit codes: 0 success, 2 invalid input, 3 a cross-check mismatch.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .ew import (
    closed_form_checks,
    gamma_minimum,
    gamma_set,
    lambda_prime,
    level_of_reduction,
    resolution,
)
from .generators import GeneratorPreconditionError, generator, verify_generator
from .hilbert import hs_I, hs_kernel, hs_L, weyl_dim_gl
from .oracle import ColumnLimitError, dim_H, dim_I, dim_ker_sigma, dim_ker_total, dim_P
from .partitions import (
    NotInSigmaError,
    Partition,
    enumerate_sigma,
    in_sigma0,
    narrow_decompose,
    require_sigma_nk,
    sigma_sharp,
)
from .polyalg import R_KIND, X_KIND, MPoly, weight_of

SCHEMA = "sepvar/1"
EXIT_OK, EXIT_INPUT, EXIT_MISMATCH = 0, 2, 3


class InputError(ValueError):
    pass


class Output:
    """A payload plus optional table and LaTeX renderings."""

    def __init__(self, payload: dict, table=None, latex: str | None = None, text: list[str] | None = None):
        self.payload = {"schema": SCHEMA, **payload}
        self.table = table
        self.latex = latex
        self.text = text

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.payload, indent=2, sort_keys=True)
        if fmt == "csv":
            header, rows = self.table or (["key", "value"], _flatten(self.payload))
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(header)
            w.writerows(rows)
            return buf.getvalue().rstrip("\n")
        if fmt == "latex":
            if self.latex is not None:
                return self.latex
            header, rows = self.table or (["key", "value"], _flatten(self.payload))
            lines = ["\\begin{tabular}{" + "l" * len(header) + "}", " & ".join(header) + " \\\\ \\hline"]
            lines += [" & ".join(str(c) for c in row) + " \\\\" for row in rows]
            lines.append("\\end{tabular}")
            return "\n".join(lines)
        if self.text is not None:
            return "\n".join(self.text)
        return "\n".join(f"{k}: {v}" for k, v in _flatten(self.payload))


def _flatten(d: dict, prefix: str = "") -> list[list]:
    rows = []
    for key in sorted(d):
        v = d[key]
        name = f"{prefix}{key}"
        if isinstance(v, dict):
            rows.extend(_flatten(v, name + "."))
        elif isinstance(v, list):
            rows.append([name, json.dumps(v)])
        else:
            rows.append([name, v])
    return rows


def _tex_weight(w) -> str:
    parts = []
    for c in w.coords:
        parts.append(str(c.numerator) if c.denominator == 1 else f"{'-' if c < 0 else ''}\\tfrac{{{abs(c.numerator)}}}{{{c.denominator}}}")
    return "(" + ",".join(parts) + ")"


# --- subcommands ----------------------------------------------------------------


def cmd_resolve(n: int, k: int, sigma: Partition) -> Output:
    res = resolution(sigma, n, k)
    payload = res.to_json(sigma, n, k)
    rows = [[i, str(t.weight), t.shift] for i, stage in enumerate(res.stages) for t in stage]
    text = [f"sigma={sigma or '()'} n={n} k={k} lambda=({res.lam}) r={res.r}"]
    for i, stage in enumerate(res.stages):
        label = "N(lambda)" if i == 0 else f"Z_{i}"
        text.append(f"{label}: " + " + ".join(f"N({t.weight})[q^{t.shift}]" for t in stage))
    pieces = [" \\oplus ".join(f"N{_tex_weight(t.weight)}" for t in stage) for stage in reversed(res.stages)]
    latex = "0 \\to " + " \\to ".join(pieces) + f" \\to L{_tex_weight(res.lam)} \\to 0"
    return Output(payload, (["stage", "weight", "shift"], rows), latex, text)


def cmd_hilbert(n: int, k: int, sigma: Partition, terms: int) -> Output:
    hk, hl, hi = hs_kernel(sigma, n, k), hs_L(sigma, n, k), hs_I(n, k)
    dim_f = weyl_dim_gl(sigma_sharp(sigma, n, k))
    coeffs = hk.expand(terms - 1) if terms > 0 else []
    payload = {
        "sigma": str(sigma),
        "n": n,
        "k": k,
        "dim_F": dim_f,
        "invariants": hi.to_json(),
        "irreducible": hl.to_json(),
        "kernel": hk.to_json(),
        "kernel_coefficients": coeffs,
    }
    rows = [[d, c] for d, c in enumerate(coeffs)]
    text = [
        f"kernel: {hk.render()}",
        f"L: {hl.render()}",
        f"invariants: {hi.render()}",
        f"dim F: {dim_f}",
        "coefficients: " + " ".join(map(str, coeffs)),
    ]
    return Output(payload, (["degree", "dim_kernel"], rows), _tex_series(hk), text)


def _tex_series(s) -> str:
    s = s.normalized()
    if s.is_zero():
        return "0"
    num = "+".join(
        (f"{c}" if i == 0 else f"{'' if c == 1 else c}q^{{{i}}}") for i, c in enumerate(s.numerator) if c
    ).replace("+-", "-")
    return f"\\frac{{{num}}}{{(1-q)^{{{s.pole_order}}}}}"


def cmd_generator(n: int, k: int, sigma: Partition, verify: bool) -> Output:
    payload: dict = {"sigma": str(sigma), "n": n, "k": k}
    if not sigma.depth or not in_sigma0(sigma, n, k):
        reason = "trivial diagram" if not sigma.depth else "sigma is not in Sigma0; the kernel component is zero"
        payload.update({"generator": None, "reason": reason})
        return Output(payload, text=[f"no generator: {reason}"], latex="0")
    t, d, mu = narrow_decompose(sigma)
    T = generator(t, d, mu, n, k)
    payload.update(
        {
            "t": t,
            "d": d,
            "mu": str(mu),
            "window": [d - n + k, t - n + k],
            "weight": weight_of(T, n, k).to_json(),
            "generator": T.to_json(),
        }
    )
    text = [f"(t,d)=({t},{d}) mu=({mu}) weight=({weight_of(T, n, k)})", str(T)]
    if verify:
        report = verify_generator(t, d, mu, n, k)
        payload["verification"] = report
        text.append("all_pass=" + str(report["all_pass"]).lower())
    rows = []
    for m, c in T.sorted_terms():
        left = MPoly.from_monomial(tuple(p for p in m if p[0][0] == R_KIND))
        right = MPoly.from_monomial(tuple(p for p in m if p[0][0] == X_KIND))
        rows.append([str(c), str(left), str(right)])
    return Output(payload, (["coefficient", "invariant", "harmonic"], rows), T.latex(tensor=True), text)


def cmd_sigma0(n: int, k: int, max_boxes: int) -> Output:
    items, rows = [], []
    for s in enumerate_sigma(n, k, max_boxes):
        member = in_sigma0(s, n, k)
        item = {"sigma": str(s), "in_sigma0": member}
        if member:
            lam = sigma_sharp(s, n, k)
            item.update(
                {
                    "gamma_min": str(gamma_minimum(lam)),
                    "level": level_of_reduction(s, n, k),
                    "lambda_prime": lambda_prime(s, n, k).to_json(),
                }
            )
        items.append(item)
        rows.append([str(s), member, item.get("gamma_min", ""), item.get("level", ""), ",".join(item.get("lambda_prime", []))])
    payload = {"n": n, "k": k, "max_boxes": max_boxes, "diagrams": items}
    text = [f"{r[0] or '()'}: " + (f"gamma={r[2]} level={r[3]} lambda'=({r[4]})" if r[1] else "irreducible") for r in rows]
    return Output(payload, (["sigma", "in_sigma0", "gamma_min", "level", "lambda_prime"], rows), text=text)


def cmd_oracle(n: int, k: int, sigma: Partition | None, max_degree: int) -> Output:
    rows = []
    for m in range(max_degree + 1):
        row = {
            "degree": m,
            "dim_P": dim_P(n, k, m),
            "dim_H": dim_H(n, k, m),
            "dim_I": dim_I(n, k, m),
            "dim_ker_total": dim_ker_total(n, k, m),
        }
        if sigma is not None:
            row["dim_ker_sigma"] = dim_ker_sigma(n, k, sigma, m)
        rows.append(row)
    header = list(rows[0]) if rows else ["degree"]
    payload = {"n": n, "k": k, "sigma": None if sigma is None else str(sigma), "rows": rows}
    table = (header, [[r[h] for h in header] for r in rows])
    text = [" ".join(f"{h:>14}" for h in header)] + [" ".join(f"{r[h]:>14}" for h in header) for r in rows]
    return Output(payload, table, text=text)


def _check_cell(args) -> list[dict]:
    """All checks for one diagram; each entry records both sides."""
    n, k, sigma, max_degree = args
    out = []

    def record(name, expected, got):
        out.append({"sigma": str(sigma), "check": name, "expected": expected, "got": got, "ok": expected == got})

    series = hs_kernel(sigma, n, k).expand(max_degree)
    record("hilbert_vs_oracle", series, [dim_ker_sigma(n, k, sigma, d) for d in range(max_degree + 1)])
    lam = sigma_sharp(sigma, n, k)
    record("sigma0_vs_gamma", in_sigma0(sigma, n, k), bool(gamma_set(lam)))
    if sigma.depth and in_sigma0(sigma, n, k):
        t, d, mu = narrow_decompose(sigma)
        T = generator(t, d, mu, n, k)
        record("lambda_prime_vs_weight_of", lambda_prime(sigma, n, k).to_json(), weight_of(T, n, k).to_json())
        record("generator_verified", True, verify_generator(t, d, mu, n, k)["all_pass"])
    for name, res in closed_form_checks(n, k, sigma).items():
        if res["status"] != "skipped":
            record(f"closed_form_{name}", "pass", res["status"])
    return out


def cmd_crosscheck(n: int, k: int, max_boxes: int, max_degree: int, jobs: int = 1) -> tuple[Output, bool]:
    cells = [(n, k, s, max_degree) for s in enumerate_sigma(n, k, max_boxes)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_check_cell, cells))
    else:
        results = [_check_cell(c) for c in cells]
    checks = [c for cell in results for c in cell]
    ok = all(c["ok"] for c in checks)
    payload = {"n": n, "k": k, "max_boxes": max_boxes, "max_degree": max_degree, "all_pass": ok, "checks": checks}
    rows = [[c["sigma"], c["check"], json.dumps(c["expected"]), json.dumps(c["got"]), c["ok"]] for c in checks]
    text = [f"{len(checks)} checks, {sum(not c['ok'] for c in checks)} mismatches"]
    for c in checks:
        if not c["ok"]:
            text.append(f"MISMATCH sigma=({c['sigma']}) {c['check']}: expected {c['expected']}, got {c['got']}")
    return Output(payload, (["sigma", "check", "expected", "got", "ok"], rows), text=text), ok


# --- argument handling ------------------------------------------------------------


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sepvar", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, sigma=True):
        p.add_argument("--n", type=_positive, required=True)
        p.add_argument("--k", type=_positive, required=True)
        if sigma:
            p.add_argument("--sigma", default=None, help='diagram as comma-separated rows, e.g. "4,3,1"')
        p.add_argument("--format", choices=["json", "text", "latex", "csv"], default="json")

    common(sub.add_parser("resolve", help="resolution of L(sigma#) by generalized Verma modules"))
    p = sub.add_parser("hilbert", help="Hilbert series of the invariants, L(sigma#) and Ker phi_sigma")
    common(p)
    p.add_argument("--terms", type=_nonneg, default=6)
    p = sub.add_parser("generator", help="highest weight generator of Ker phi_sigma")
    common(p)
    p.add_argument("--verify", action="store_true")
    p = sub.add_parser("sigma0", help="list Sigma0 with levels and lambda'")
    common(p, sigma=False)
    p.add_argument("--max-boxes", type=_nonneg, default=4)
    p = sub.add_parser("oracle", help="brute-force graded dimensions")
    common(p)
    p.add_argument("--max-degree", type=_nonneg, default=4)
    p = sub.add_parser("crosscheck", help="agreement of series, oracle, generators and closed forms")
    common(p, sigma=False)
    p.add_argument("--max-boxes", type=_nonneg, default=4)
    p.add_argument("--max-degree", type=_nonneg, default=3)
    p.add_argument("--jobs", type=_positive, default=1)
    return parser


def _parse_sigma(text: str | None, n: int, k: int, required: bool) -> Partition | None:
    if text is None:
        return Partition(()) if required else None
    try:
        sigma = Partition.parse(text)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    try:
        require_sigma_nk(sigma, n, k)
    except NotInSigmaError as exc:
        raise InputError(f"sigma not in Sigma_{{n,k}}: {exc}") from None
    return sigma


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        sigma = None
        if hasattr(args, "sigma"):
            sigma = _parse_sigma(args.sigma, args.n, args.k, required=args.command != "oracle")
        status = EXIT_OK
        if args.command == "resolve":
            result = cmd_resolve(args.n, args.k, sigma)
        elif args.command == "hilbert":
            result = cmd_hilbert(args.n, args.k, sigma, args.terms)
        elif args.command == "generator":
            result = cmd_generator(args.n, args.k, sigma, args.verify)
        elif args.command == "sigma0":
            result = cmd_sigma0(args.n, args.k, args.max_boxes)
        elif args.command == "oracle":
            result = cmd_oracle(args.n, args.k, sigma, args.max_degree)
        else:
            result, ok = cmd_crosscheck(args.n, args.k, args.max_boxes, args.max_degree, args.jobs)
            if not ok:
                status = EXIT_MISMATCH
                for line in result.text[1:]:
                    print(line, file=err)
    except (InputError, ColumnLimitError, GeneratorPreconditionError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT
    print(result.render(args.format), file=out)
    return status


def main() -> None:
    sys.exit(run())


__all__ = ["run", "main", "build_parser", "SCHEMA"]
