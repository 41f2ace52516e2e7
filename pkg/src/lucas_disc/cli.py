"""lucas-disc command line.

Exit codes: 0 ok, 2 usage error, 3 k not covered, 4 a cap was hit,
5 a verification suite failed.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from dataclasses import dataclass
from fractions import Fraction

from . import charsets, verify
from .appearance import z
from .dioph import np_threshold
from .disc import disc, disc_values, exceptional_set, runs
from .errors import (CapExceeded, FactorizationIncomplete, NotCovered,
                     PreconditionViolated, SearchCapExceeded)
from .incong import iota_scan
from .numth import factorize, format_factored
from .ratios import DEFAULT_PRIME_CAP, count_classes, ratios
from .wild import enumerate_Mp, potentially_wild

EXIT_OK, EXIT_USAGE, EXIT_NOT_COVERED, EXIT_CAP, EXIT_VERIFY = 0, 2, 3, 4, 5


@dataclass
class OutputRecord:
    command: str
    inputs: dict
    result: object
    method: str | None
    timing_ms: float

    def to_json(self) -> str:
        return json.dumps(self.__dict__, ensure_ascii=False)

    @classmethod
    def from_json(cls, text: str) -> "OutputRecord":
        return cls(**json.loads(text))


class VerificationFailed(Exception):
    pass


def big_int(text: str) -> int:
    """Exact integer from '167042', '10^50' or '1e50'."""
    s = text.strip().replace("_", "")
    m = re.fullmatch(r"(\d+)(?:[eE](\d+)|\^(\d+))?", s)
    if not m:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    base = int(m.group(1))
    if m.group(2):
        return base * 10 ** int(m.group(2))
    if m.group(3):
        return base ** int(m.group(3))
    return base


def fraction(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a fraction: {text!r}") from None


def _factored(v: int) -> str:
    return format_factored(factorize(v).pairs)


# Each handler returns (result, method, text); text is what plain mode prints.

def cmd_disc(a):
    d = disc(a.k, a.n, a.method)
    return d.value, d.method, str(d.value)


def cmd_disc_table(a):
    rows = runs(disc_values(a.k, a.n_max, a.method))
    result = [dict(n_lo=lo, n_hi=hi, value=v, value_factored=_factored(v)) for lo, hi, v in rows]
    if a.format == "csv":
        text = verify.runs_to_csv(rows)
    else:
        text = json.dumps(result, indent=1) + "\n"
    if a.out:
        with open(a.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        text = f"wrote {len(rows)} rows to {a.out}\n"
    return result, a.method, text.rstrip("\n")


def cmd_appearance(a):
    v = z(a.k, a.m)
    comps = [dict(prime_power=q, z=zq) for q, zq in v.components]
    return dict(z=v.z, components=comps), "factorization", str(v.z)


def cmd_iota(a):
    v = iota_scan(a.k, a.m)
    return v.iota, v.method, str(v.iota)


def cmd_sets(a):
    if a.lo > a.hi:
        raise PreconditionViolated("need --lo <= --hi")
    A = charsets.enumerate_A(a.k, a.lo, a.hi)
    B = charsets.enumerate_B(a.k, a.lo, a.hi)
    text = f"A: {' '.join(map(str, A))}\nB: {' '.join(map(str, B))}"
    return dict(A=A, B=B), None, text


def cmd_min_s(a):
    v = charsets.min_S(a.k, a.n)
    return v, None, str(v)


def cmd_fk(a):
    c = exceptional_set(a.k, a.n_max)
    result = dict(values=list(c.values), scanned_up_to=c.scanned_up_to,
                  certified=c.certified, certifying_prime=c.certifying_prime,
                  threshold=c.threshold)
    lines = [f"F_{c.k} = {{{', '.join(map(str, c.values))}}}",
             f"scanned n <= {c.scanned_up_to}"]
    if c.certifying_prime:
        lines.append(f"n_{c.certifying_prime}(5/3) = {c.threshold}")
    lines.append("complete" if c.certified else "not certified complete")
    return result, "auto", "\n".join(lines)


def cmd_ratios(a):
    rs = ratios(a.k, a.cap)
    result = {r.kind: dict(value=str(r.value) if r.exact else None, witness=r.witness,
                           cap=r.cap) for r in rs}
    return result, None, "\n".join(f"{r.kind} = {r}" for r in rs)


def cmd_np(a):
    t = np_threshold(a.p, a.alpha, even_required=not a.odd)
    result = dict(value=t.value, largest_failing_n=t.witness_bad_n)
    return result, "gap_scan", str(t.value)


def cmd_mp(a):
    es = enumerate_Mp(a.p, a.e_max)
    return es, "exact", " ".join(map(str, es))


def cmd_wildpowers(a):
    pairs = potentially_wild(a.limit, a.p_min, a.p_max, a.mod4)
    grouped: dict[int, list[int]] = {}
    for p, e in pairs:
        grouped.setdefault(p, []).append(e)
    result = [dict(p=p, exponents=es) for p, es in grouped.items()]
    text = "\n".join(f"{p}: {','.join(map(str, es))}" for p, es in grouped.items())
    return result, "exact", text


def cmd_classes(a):
    n, hits = count_classes(a.p, a.case)
    return dict(count=n, classes=hits), None, f"{n} classes: {' '.join(map(str, hits))}"


def cmd_verify(a):
    rep = verify.run_suite(a.suite)
    checks = [dict(label=c.label, ok=c.ok, detail=c.detail) for c in rep.checks]
    lines = [f"{'ok  ' if c.ok else 'FAIL'} {c.label}" + ("" if c.ok else f"  [{c.detail}]")
             for c in rep.checks]
    lines.append(rep.summary())
    result = dict(suite=a.suite, ok=rep.ok, checks=checks)
    if not rep.ok:
        raise VerificationFailed(result, "\n".join(lines))
    return result, None, "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON OutputRecord")
    p = argparse.ArgumentParser(prog="lucas-disc",
                                description="Discriminators of the sequences U(k).")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(fn=fn)
        return sp

    sp = add("disc", cmd_disc, "D_k(n)")
    sp.add_argument("--k", type=big_int, required=True)
    sp.add_argument("--n", type=big_int, required=True)
    sp.add_argument("--method", choices=["auto", "brute", "structured", "closed"], default="auto")

    sp = add("disc-table", cmd_disc_table, "run-length table of D_k(1..N)")
    sp.add_argument("--k", type=big_int, required=True)
    sp.add_argument("--n-max", type=big_int, required=True)
    sp.add_argument("--format", choices=["csv", "json"], default="csv")
    sp.add_argument("--method", choices=["auto", "brute", "structured"], default="auto")
    sp.add_argument("--out")

    sp = add("appearance", cmd_appearance, "index of appearance z_k(m)")
    sp.add_argument("--k", type=big_int, required=True)
    sp.add_argument("--m", type=big_int, required=True)

    sp = add("iota", cmd_iota, "incongruence index iota_k(m)")
    sp.add_argument("--k", type=big_int, required=True)
    sp.add_argument("--m", type=big_int, required=True)

    sp = add("sets", cmd_sets, "members of A_k and B_k in [lo, hi]")
    sp.add_argument("--k", type=big_int, required=True)
    sp.add_argument("--lo", type=big_int, required=True)
    sp.add_argument("--hi", type=big_int, required=True)

    sp = add("min-s", cmd_min_s, "least element of A_k u B_k that is >= n")
    sp.add_argument("--k", type=big_int, required=True)
    sp.add_argument("--n", type=big_int, required=True)

    sp = add("fk", cmd_fk, "exceptional set F_k")
    sp.add_argument("--k", type=big_int, required=True)
    sp.add_argument("--n-max", type=big_int)

    sp = add("ratios", cmd_ratios, "rho_k, sigma_k, tau_k")
    sp.add_argument("--k", type=big_int, required=True)
    sp.add_argument("--cap", type=big_int, default=DEFAULT_PRIME_CAP)

    sp = add("np", cmd_np, "threshold n_p(alpha)")
    sp.add_argument("--p", type=big_int, required=True)
    sp.add_argument("--alpha", type=fraction, required=True)
    sp.add_argument("--odd", action="store_true", help="drop the evenness requirement")

    sp = add("mp", cmd_mp, "exponent set M_p up to e_max")
    sp.add_argument("--p", type=big_int, required=True)
    sp.add_argument("--e-max", type=big_int, required=True)

    sp = add("wildpowers", cmd_wildpowers, "potentially wild prime powers")
    sp.add_argument("--limit", type=big_int, required=True)
    sp.add_argument("--p-max", type=big_int, required=True)
    sp.add_argument("--p-min", type=big_int, default=3)
    sp.add_argument("--mod4", type=int, choices=[1, 3])

    sp = add("classes", cmd_classes, "residues of k with a given z_k(p), z_k(p^2)")
    sp.add_argument("--p", type=big_int, required=True)
    sp.add_argument("--case", choices=["a", "b", "c", "d"], required=True)

    sp = add("verify", cmd_verify, "recompute a published table")
    sp.add_argument("--suite", choices=list(verify.SUITES), required=True)
    return p


def _inputs(ns) -> dict:
    out = {}
    for key, v in vars(ns).items():
        if key in ("fn", "command", "json"):
            continue
        out[key] = str(v) if isinstance(v, Fraction) else v
    return out


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    t0 = time.perf_counter()
    code = EXIT_OK
    try:
        result, method, text = ns.fn(ns)
    except VerificationFailed as exc:
        (result, text), method, code = exc.args, None, EXIT_VERIFY
    except NotCovered as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_NOT_COVERED
    except (CapExceeded, SearchCapExceeded, FactorizationIncomplete) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_CAP
    except (PreconditionViolated, ValueError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE
    ms = (time.perf_counter() - t0) * 1000
    if ns.json:
        rec = OutputRecord(ns.command, _inputs(ns), result, method, round(ms, 3))
        print(rec.to_json(), file=stdout)
    else:
        print(text, file=stdout)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
