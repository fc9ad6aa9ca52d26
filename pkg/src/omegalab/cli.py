"""Command-line harness: single checks and multi-ring campaigns.

Every invocation produces one report: a config echo, a list of records
(one per check instance), and a summary. Formats: json (stable, sorted
keys, millis zeroed so reruns and different --jobs settings produce
byte-identical bytes), csv (same stability), text (human-oriented, real
timings). Exit code 0 means every record passed or was merely capped,
2 means at least one counterexample record exists, 1 means an error
(bad arguments, bad config, or a failed record).

Campaign configs are JSON objects with keys: rings (list of ring specs),
checks (list of check names), bounds (object), seed (int, required when
any selected check can sample), jobs (int), output (path). Unknown keys
anywhere are rejected. Records are computed grouped by ring (rings may be
processed in parallel; records within one ring stay sequential so shared
caches are race-free) and sorted by (ring, ideal, check) before output.
Per-record sampling seeds are derived from the campaign seed and the
record coordinates, so results do not depend on scheduling.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import itertools
import json
import os
import random
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence

from .absorbing import DEFAULT_CAP, omega, omega_agreement_table, strong_omega
from .content_checks import (
    DEFAULT_BUDGET,
    DEFAULT_SAMPLE,
    armendariz_search,
    bezout_factor,
    certify_content_product,
    certify_pair_sweep,
    dm_exponent_table,
    gaussian_search,
    verify_poly_omega,
)
from .errors import SpecParseError
from .ideals import (
    DEFAULT_LATTICE_CAP,
    all_ideals,
    ideal_display,
    ideal_from_generators,
    ideal_spec,
    is_radical_ideal,
    parse_ideal_spec,
)
from .integers import conjecture_check_int, omega_int
from .polys import (
    Polynomial,
    display_poly,
    make_poly,
    monomials_up_to,
    parse_poly,
)
from .rings import FiniteRing, ZmodRing, parse_ring_spec, var_names

VERSION = "0.1.0"

CAMPAIGN_CHECKS = (
    "omega-table",
    "conjecture1",
    "gaussian",
    "armendariz",
    "dm-bound",
    "poly-omega",
    "bezout",
    "certify-radical",
    "int-conjecture",
)
SAMPLING_CHECKS = frozenset(
    {"gaussian", "armendariz", "dm-bound", "poly-omega", "bezout", "int-conjecture"}
)
BOUND_KEYS = (
    "max_deg",
    "cap",
    "vars",
    "height",
    "sample",
    "order_cap",
    "budget",
    "lattice_cap",
)


@dataclass(frozen=True)
class Bounds:
    max_deg: int = 1
    cap: int = DEFAULT_CAP
    vars: int = 1
    height: int = 2
    sample: int = DEFAULT_SAMPLE
    order_cap: int = 4096
    budget: int = DEFAULT_BUDGET
    lattice_cap: int = DEFAULT_LATTICE_CAP


class ConfigError(ValueError):
    """Malformed campaign config."""


class _Parser(argparse.ArgumentParser):
    """argparse variant that exits 1 on usage errors (2 is reserved for
    counterexample outcomes)."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


# ---------------------------------------------------------------------------
# record assembly


def _record(
    ring: str,
    ideal: str,
    check: str,
    mode: str,
    result: str,
    witness: Optional[str],
    status: str,
    millis: int,
) -> dict:
    return {
        "ring": ring,
        "ideal": ideal,
        "check": check,
        "mode": mode,
        "result": result,
        "witness": witness,
        "status": status,
        "millis": millis,
    }


def _elements_tuple(ring: FiniteRing, values) -> str:
    return "(" + ",".join(ring.display(v) for v in values) + ")"


def _ideal_tuple(ideals) -> str:
    return "(" + ",".join(ideal_display(i) for i in ideals) + ")"


def _poly_pair(f: Polynomial, g: Polynomial) -> str:
    return f"f={display_poly(f)}; g={display_poly(g)}"


def _mono_display(exp: tuple[int, ...]) -> str:
    names = var_names(len(exp))
    parts = [
        name if e == 1 else f"{name}^{e}"
        for name, e in zip(names, exp)
        if e > 0
    ]
    return "*".join(parts) if parts else "1"


def _derive_seed(base: int, *parts: str) -> int:
    key = ":".join([str(base), *parts]).encode()
    return int.from_bytes(hashlib.sha256(key).digest()[:8], "big")


def _timed(fn):
    start = time.perf_counter()
    out = fn()
    millis = int((time.perf_counter() - start) * 1000)
    return out, millis


# ---------------------------------------------------------------------------
# check runners; each returns (mode, result, witness, status)


def _run_omega(ring: FiniteRing, ideal_text: str, bounds: Bounds):
    ideal = parse_ideal_spec(ring, ideal_text)
    res = omega(ideal, bounds.cap)
    witness = (
        _elements_tuple(ring, res.lower_witness) if res.lower_witness else None
    )
    status = "pass" if res.is_exact else "cap"
    return "exact", f"omega={res.describe()}", witness, status


def _run_strong_omega(ring: FiniteRing, ideal_text: str, bounds: Bounds):
    ideal = parse_ideal_spec(ring, ideal_text)
    res = strong_omega(ideal, bounds.cap, bounds.lattice_cap)
    witness = _ideal_tuple(res.lower_witness) if res.lower_witness else None
    status = "pass" if res.is_exact else "cap"
    return "exact", f"strong-omega={res.describe()}", witness, status


def _run_conjecture1(ring: FiniteRing, bounds: Bounds):
    report = omega_agreement_table(ring, bounds.cap, bounds.lattice_cap)
    agreeing = sum(1 for row in report.rows if row.agree is True)
    result = (
        f"rows={len(report.rows)} agree={agreeing} "
        f"capped={len(report.capped)}"
    )
    if report.counterexamples:
        row = report.counterexamples[0]
        witness = (
            f"ideal={ideal_spec(row.ideal)} omega={row.omega.describe()} "
            f"strong={row.strong.describe()}"
        )
        return "exact", result, witness, "counterexample"
    status = "cap" if report.capped else "pass"
    return "exact", result, None, status


def _run_pair_search(kind: str, ring: FiniteRing, bounds: Bounds, seed: int):
    search = gaussian_search if kind == "gaussian" else armendariz_search
    out = search(
        ring, bounds.vars, bounds.max_deg, bounds.budget, bounds.sample, seed
    )
    result = f"found={'yes' if out.found else 'no'} checked={out.checked}"
    witness = _poly_pair(*out.witness) if out.witness else None
    status = "counterexample" if out.found else "pass"
    return out.mode, result, witness, status


def _run_dm(ring: FiniteRing, bounds: Bounds, seed: int):
    table = dm_exponent_table(
        ring,
        bounds.vars,
        bounds.max_deg,
        bounds.cap,
        bounds.budget,
        bounds.sample,
        seed,
    )
    hist = ",".join(f"{n}:{c}" for n, c in table.histogram) or "-"
    bound = {True: "ok", False: "violated", None: "n/a"}[table.bound_holds]
    result = (
        f"max={table.max_exponent} bound={bound} hist={hist} "
        f"cap_exceeded={table.cap_exceeded} checked={table.checked}"
    )
    witness = _poly_pair(*table.witness) if table.witness else None
    if table.bound_holds is False:
        status = "counterexample"
    elif table.cap_exceeded:
        status = "cap"
    else:
        status = "pass"
    return table.mode, result, witness, status


def _run_bezout_single(ring: FiniteRing, poly_text: str, bounds: Bounds):
    g = parse_poly(ring, bounds.vars, poly_text)
    fact = bezout_factor(g)
    result = (
        f"b={ring.display(fact.b.index)} d={ring.display(fact.d.index)} "
        f"terms={len(g.terms)}"
    )
    witness = (
        f"r={_elements_tuple(ring, fact.r)}; s={_elements_tuple(ring, fact.s)}; "
        f"fresh={_mono_display(fact.fresh_exponent)}; "
        f"g'={display_poly(fact.unit_part)}"
    )
    return "exact", result, witness, "pass"


def _run_bezout_sweep(ring: FiniteRing, bounds: Bounds, seed: int):
    slots = monomials_up_to(bounds.vars, bounds.max_deg)
    total = ring.order ** len(slots)
    checked = 0
    if total <= bounds.budget:
        mode = "exhaustive"
        for coeffs in itertools.product(range(ring.order), repeat=len(slots)):
            if all(c == ring.zero for c in coeffs):
                continue
            g = make_poly(
                ring,
                bounds.vars,
                {e: c for e, c in zip(slots, coeffs) if c != ring.zero},
            )
            bezout_factor(g)
            checked += 1
    else:
        mode = f"sampled:{bounds.sample}"
        rng = random.Random(seed)
        for _ in range(bounds.sample):
            coeffs = [rng.randrange(ring.order) for _ in slots]
            if all(c == ring.zero for c in coeffs):
                continue
            g = make_poly(
                ring,
                bounds.vars,
                {e: c for e, c in zip(slots, coeffs) if c != ring.zero},
            )
            bezout_factor(g)
            checked += 1
    return mode, f"checked={checked} invariants=ok", None, "pass"


def _run_certify_single(
    ring: FiniteRing, ideal_text: str, poly_texts: Sequence[str], bounds: Bounds
):
    ideal = parse_ideal_spec(ring, ideal_text)
    polys = [parse_poly(ring, bounds.vars, t) for t in poly_texts]
    cert = certify_content_product(ideal, polys, bounds.cap)
    exps = ",".join(str(l) for l in cert.exponents)
    result = (
        f"exponents=({exps}) chain={'ok' if cert.chain_containment else 'FAIL'} "
        f"final={'ok' if cert.final_containment else 'no'} "
        f"radical={'yes' if cert.ideal_radical else 'no'}"
    )
    if not cert.chain_containment:
        status = "counterexample"
    elif cert.ideal_radical and not cert.final_containment:
        status = "counterexample"
    else:
        status = "pass"
    return "exact", result, None, status


def _run_certify_sweep(ring: FiniteRing, ideal, bounds: Bounds, seed: int):
    sweep = certify_pair_sweep(
        ideal,
        bounds.vars,
        bounds.max_deg,
        max(bounds.cap, bounds.max_deg + 2),
        bounds.budget,
        bounds.sample,
        seed,
    )
    result = (
        f"pairs={sweep.pairs} qualifying={sweep.qualifying} "
        f"max_exponent={sweep.max_exponent} "
        f"exp_bound={'ok' if sweep.exp_bound_holds else 'violated'} "
        f"chain={'ok' if sweep.chain_holds else 'FAIL'} "
        f"final={'ok' if sweep.final_holds else 'FAIL'}"
    )
    ok = sweep.exp_bound_holds and sweep.chain_holds and sweep.final_holds
    witness = _poly_pair(*sweep.witness) if sweep.witness else None
    return sweep.mode, result, witness, "pass" if ok else "counterexample"


def _run_poly_omega(ring: FiniteRing, ideal, bounds: Bounds, seed: int):
    report = verify_poly_omega(
        ideal,
        bounds.max_deg,
        bounds.vars,
        bounds.cap,
        bounds.budget,
        bounds.sample,
        seed,
    )
    base = report.omega_base
    if base.value is None:
        return report.mode, f"omega={base.describe()}", None, "cap"
    wv = {True: "valid", False: "INVALID", None: "n/a"}[report.lower_witness_valid]
    viol = "found" if report.violation else "none"
    result = (
        f"omega={base.value} witness={wv} violation={viol} "
        f"checked={report.checked}"
    )
    witness = None
    if report.violation:
        witness = "; ".join(display_poly(p) for p in report.violation)
        status = "counterexample"
    elif report.lower_witness_valid is False:
        status = "error"
    else:
        status = "pass"
    return report.mode, result, witness, status


def _run_int(m: int, bounds: Bounds, seed: int):
    report = conjecture_check_int(
        m, bounds.max_deg, bounds.height, bounds.sample, seed, bounds.budget
    )
    factors = "(" + ",".join(str(p) for p in report.omega.factors) + ")"
    viol = "found" if report.violation else "none"
    result = (
        f"omega={report.omega.value} factors={factors} "
        f"witness={'valid' if report.witness_valid else 'INVALID'} "
        f"violation={viol} checked={report.checked} drawn={report.drawn}"
    )
    witness = None
    if report.violation:
        witness = "; ".join(p.display() for p in report.violation)
    if report.violation or not report.witness_valid:
        status = "counterexample"
    else:
        status = "pass"
    return report.mode, result, witness, status


# ---------------------------------------------------------------------------
# campaign execution


def _campaign_records(
    spec_text: str, checks: Sequence[str], bounds: Bounds, seed: int
) -> list[dict]:
    """All records for one ring, sequentially (shared caches stay safe)."""
    records: list[dict] = []

    def add(ideal_text: str, check: str, fn) -> None:
        try:
            (mode, result, witness, status), millis = _timed(fn)
        except Exception as exc:  # per-record isolation
            mode, result, witness, status = (
                "error",
                f"error={type(exc).__name__}: {exc}",
                None,
                "error",
            )
            millis = 0
        records.append(
            _record(spec_text, ideal_text, check, mode, result, witness, status, millis)
        )

    try:
        ring = parse_ring_spec(spec_text, bounds.order_cap)
    except Exception as exc:
        for check in checks:
            records.append(
                _record(
                    spec_text,
                    "-",
                    check,
                    "error",
                    f"error={type(exc).__name__}: {exc}",
                    None,
                    "error",
                    0,
                )
            )
        return records

    for check in checks:
        rec_seed = _derive_seed(seed, spec_text, check)
        if check == "omega-table":

            def run_table(ring=ring):
                zero_ideal = ideal_from_generators(ring, ())
                res = omega(zero_ideal, bounds.cap)
                if isinstance(ring, ZmodRing):
                    arith = omega_int(ring.modulus)
                    agree = res.value == arith.value
                    result = (
                        f"omega={res.describe()} arithmetic={arith.value} "
                        f"agree={'yes' if agree else 'NO'}"
                    )
                    witness = (
                        _elements_tuple(ring, res.lower_witness)
                        if res.lower_witness
                        else None
                    )
                    if res.value is None:
                        return "exact", result, witness, "cap"
                    return (
                        "exact",
                        result,
                        witness,
                        "pass" if agree else "counterexample",
                    )
                witness = (
                    _elements_tuple(ring, res.lower_witness)
                    if res.lower_witness
                    else None
                )
                status = "pass" if res.is_exact else "cap"
                return "exact", f"omega={res.describe()}", witness, status

            add("gen:none", "omega-table", run_table)
        elif check == "conjecture1":
            add("-", check, lambda ring=ring: _run_conjecture1(ring, bounds))
        elif check in ("gaussian", "armendariz"):
            add(
                "-",
                check,
                lambda ring=ring, check=check, s=rec_seed: _run_pair_search(
                    check, ring, bounds, s
                ),
            )
        elif check == "dm-bound":
            add("-", check, lambda ring=ring, s=rec_seed: _run_dm(ring, bounds, s))
        elif check == "bezout":
            add(
                "-",
                check,
                lambda ring=ring, s=rec_seed: _run_bezout_sweep(ring, bounds, s),
            )
        elif check == "poly-omega":
            for ideal in all_ideals(ring, bounds.lattice_cap):
                if not ideal.is_proper:
                    continue
                itext = ideal_spec(ideal)
                s = _derive_seed(seed, spec_text, check, itext)
                add(
                    itext,
                    check,
                    lambda ring=ring, ideal=ideal, s=s: _run_poly_omega(
                        ring, ideal, bounds, s
                    ),
                )
        elif check == "certify-radical":
            for ideal in all_ideals(ring, bounds.lattice_cap):
                if not ideal.is_proper or not is_radical_ideal(ideal):
                    continue
                itext = ideal_spec(ideal)
                s = _derive_seed(seed, spec_text, check, itext)
                add(
                    itext,
                    check,
                    lambda ring=ring, ideal=ideal, s=s: _run_certify_sweep(
                        ring, ideal, bounds, s
                    ),
                )
        elif check == "int-conjecture":

            def run_int(ring=ring, s=rec_seed):
                if not isinstance(ring, ZmodRing):
                    raise ValueError(
                        "int-conjecture needs a zmod ring spec as its modulus"
                    )
                return _run_int(ring.modulus, bounds, s)

            add("-", check, run_int)
        else:  # load_campaign_config validates names; defensive
            records.append(
                _record(
                    spec_text, "-", check, "error",
                    f"error=ValueError: unknown check {check}", None, "error", 0,
                )
            )
    return records


def load_campaign_config(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            raw = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config is not valid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise ConfigError("config must be a JSON object")
    allowed = {"rings", "checks", "bounds", "seed", "jobs", "output"}
    unknown = set(raw) - allowed
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    rings = raw.get("rings")
    if not isinstance(rings, list) or not rings or not all(
        isinstance(r, str) for r in rings
    ):
        raise ConfigError("config needs 'rings': a nonempty list of ring specs")
    checks = raw.get("checks")
    if not isinstance(checks, list) or not checks or not all(
        isinstance(c, str) for c in checks
    ):
        raise ConfigError("config needs 'checks': a nonempty list of check names")
    bad = [c for c in checks if c not in CAMPAIGN_CHECKS]
    if bad:
        raise ConfigError(
            f"unknown checks {bad}; valid: {list(CAMPAIGN_CHECKS)}"
        )
    bounds_raw = raw.get("bounds", {})
    if not isinstance(bounds_raw, dict):
        raise ConfigError("'bounds' must be an object")
    unknown_b = set(bounds_raw) - set(BOUND_KEYS)
    if unknown_b:
        raise ConfigError(f"unknown bounds keys: {sorted(unknown_b)}")
    for key, value in bounds_raw.items():
        if not isinstance(value, int) or isinstance(value, bool):
            raise ConfigError(f"bounds.{key} must be an integer")
    seed = raw.get("seed")
    if seed is None and any(c in SAMPLING_CHECKS for c in checks):
        raise ConfigError(
            "config needs an explicit 'seed' when sampling-capable checks "
            "are selected"
        )
    if seed is not None and (not isinstance(seed, int) or isinstance(seed, bool)):
        raise ConfigError("'seed' must be an integer")
    jobs = raw.get("jobs", 1)
    if not isinstance(jobs, int) or isinstance(jobs, bool) or jobs < 1:
        raise ConfigError("'jobs' must be a positive integer")
    output = raw.get("output")
    if output is not None and not isinstance(output, str):
        raise ConfigError("'output' must be a path string")
    return {
        "rings": rings,
        "checks": checks,
        "bounds": Bounds(**bounds_raw),
        "seed": 0 if seed is None else seed,
        "jobs": jobs,
        "output": output,
    }


def run_campaign(config: dict, jobs_override: Optional[int] = None) -> list[dict]:
    bounds: Bounds = config["bounds"]
    seed: int = config["seed"]
    jobs = jobs_override if jobs_override is not None else config["jobs"]
    ring_specs = list(dict.fromkeys(config["rings"]))
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        chunks = list(
            pool.map(
                lambda spec: _campaign_records(spec, config["checks"], bounds, seed),
                ring_specs,
            )
        )
    records = [rec for chunk in chunks for rec in chunk]
    records.sort(key=lambda r: (r["ring"], r["ideal"], r["check"]))
    return records


# ---------------------------------------------------------------------------
# serialization


def _summary(records: list[dict]) -> dict:
    counter_idx = [
        i for i, r in enumerate(records) if r["status"] == "counterexample"
    ]
    return {
        "records": len(records),
        "pass": sum(1 for r in records if r["status"] == "pass"),
        "counterexamples": counter_idx,
        "cap_exceeded": sum(1 for r in records if r["status"] == "cap"),
        "errors": sum(1 for r in records if r["status"] == "error"),
    }


def render_report(
    records: list[dict], config_echo: dict, fmt: str
) -> tuple[str, dict]:
    summary = _summary(records)
    if fmt == "json":
        cleaned = [dict(r, millis=0) for r in records]
        payload = {
            "version": VERSION,
            "config": config_echo,
            "records": cleaned,
            "summary": summary,
        }
        return json.dumps(payload, sort_keys=True, indent=2) + "\n", summary
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(
            ["ring", "ideal", "check", "mode", "status", "result", "witness", "millis"]
        )
        for r in records:
            writer.writerow(
                [
                    r["ring"],
                    r["ideal"],
                    r["check"],
                    r["mode"],
                    r["status"],
                    r["result"],
                    r["witness"] or "",
                    0,
                ]
            )
        return buf.getvalue(), summary
    lines = [f"omegalab {VERSION}"]
    for r in records:
        witness = f" witness[{r['witness']}]" if r["witness"] else ""
        lines.append(
            f"{r['ring']} {r['ideal']} {r['check']} [{r['mode']}] "
            f"{r['status'].upper()}: {r['result']}{witness} ({r['millis']}ms)"
        )
    s = summary
    lines.append(
        f"summary: records={s['records']} pass={s['pass']} "
        f"counterexamples={len(s['counterexamples'])} "
        f"cap_exceeded={s['cap_exceeded']} errors={s['errors']}"
    )
    for i in s["counterexamples"]:
        r = records[i]
        lines.append(f"counterexample: {r['ring']} {r['ideal']} {r['check']}")
    return "\n".join(lines) + "\n", summary


def _write_output(text: str, path: Optional[str]) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    tmp = f"{path}.tmp.{os.getpid()}"
    with open(tmp, "w", encoding="utf-8") as fh:
        fh.write(text)
    os.replace(tmp, path)


def _exit_code(summary: dict) -> int:
    if summary["counterexamples"]:
        return 2
    if summary["errors"]:
        return 1
    return 0


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> _Parser:
    parser = _Parser(prog="omegalab", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"omegalab {VERSION}")
    subs = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, ring=True, ideal=False):
        if ring:
            sp.add_argument("--ring", required=True, help="ring spec, e.g. zmod:12")
        if ideal:
            sp.add_argument(
                "--ideal",
                default="gen:none",
                help="ideal spec, e.g. gen:4 (default gen:none)",
            )
        sp.add_argument(
            "--format", choices=("json", "csv", "text"), default="json"
        )
        sp.add_argument("--out", default=None, help="write the report to a file")

    sp = subs.add_parser("omega", help="absorbing degree of an ideal")
    common(sp, ideal=True)
    sp.add_argument("--cap", type=int, default=DEFAULT_CAP)

    sp = subs.add_parser("strong-omega", help="strong absorbing degree")
    common(sp, ideal=True)
    sp.add_argument("--cap", type=int, default=DEFAULT_CAP)
    sp.add_argument("--lattice-cap", type=int, default=DEFAULT_LATTICE_CAP)

    sp = subs.add_parser(
        "conjecture1", help="omega vs strong omega over every proper ideal"
    )
    common(sp)
    sp.add_argument("--cap", type=int, default=DEFAULT_CAP)
    sp.add_argument("--lattice-cap", type=int, default=DEFAULT_LATTICE_CAP)

    for name, blurb in (
        ("gaussian", "search for content-multiplicativity violations"),
        ("armendariz", "search for annihilating pairs with nonzero contents"),
    ):
        sp = subs.add_parser(name, help=blurb)
        common(sp)
        sp.add_argument("--vars", type=int, default=1)
        sp.add_argument("--max-deg", type=int, default=1)
        sp.add_argument("--sample", type=int, default=DEFAULT_SAMPLE)
        sp.add_argument("--seed", type=int, default=0)

    sp = subs.add_parser("dm", help="distribution of content-peeling exponents")
    common(sp)
    sp.add_argument("--vars", type=int, default=1)
    sp.add_argument("--max-deg", type=int, default=1)
    sp.add_argument("--cap", type=int, default=DEFAULT_CAP)
    sp.add_argument("--sample", type=int, default=DEFAULT_SAMPLE)
    sp.add_argument("--seed", type=int, default=0)

    sp = subs.add_parser("bezout", help="principal-content factorization")
    common(sp)
    sp.add_argument("--vars", type=int, default=1)
    sp.add_argument("--poly", required=True, help="polynomial literal, e.g. 8x+4")

    sp = subs.add_parser("certify", help="iterated peeling certificate")
    common(sp, ideal=True)
    sp.add_argument("--vars", type=int, default=1)
    sp.add_argument("--cap", type=int, default=8)
    sp.add_argument(
        "--poly",
        action="append",
        required=True,
        help="polynomial literal; repeat for each factor (at least two)",
    )

    sp = subs.add_parser(
        "poly-omega", help="absorbing degree transfer to the polynomial ring"
    )
    common(sp, ideal=True)
    sp.add_argument("--vars", type=int, default=1)
    sp.add_argument("--max-deg", type=int, default=1)
    sp.add_argument("--cap", type=int, default=DEFAULT_CAP)
    sp.add_argument("--sample", type=int, default=DEFAULT_SAMPLE)
    sp.add_argument("--seed", type=int, default=0)

    sp = subs.add_parser(
        "int", help="integer-coefficient absorbing check for a modulus"
    )
    common(sp)
    sp.add_argument("--max-deg", type=int, default=1)
    sp.add_argument("--height", type=int, default=2)
    sp.add_argument("--sample", type=int, default=1000)
    sp.add_argument("--seed", type=int, default=0)

    sp = subs.add_parser("campaign", help="run a JSON-configured campaign")
    sp.add_argument("--config", required=True, help="path to the campaign config")
    sp.add_argument("--jobs", type=int, default=None, help="override config jobs")
    sp.add_argument("--format", choices=("json", "csv", "text"), default="json")
    sp.add_argument("--out", default=None, help="override config output path")
    return parser


def _bounds_from_args(args) -> Bounds:
    kwargs = {}
    for key in BOUND_KEYS:
        attr = key.replace("-", "_")
        if hasattr(args, attr) and getattr(args, attr) is not None:
            kwargs[key] = getattr(args, attr)
    return Bounds(**kwargs)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "campaign":
        try:
            config = load_campaign_config(args.config)
        except (ConfigError, OSError) as exc:
            print(f"omegalab: config error: {exc}", file=sys.stderr)
            return 1
        records = run_campaign(config, args.jobs)
        echo = {
            "command": "campaign",
            "rings": config["rings"],
            "checks": config["checks"],
            "bounds": dict(
                (k, getattr(config["bounds"], k)) for k in BOUND_KEYS
            ),
            "seed": config["seed"],
        }
        text, summary = render_report(records, echo, args.format)
        out_path = args.out if args.out is not None else config["output"]
        _write_output(text, out_path)
        return _exit_code(summary)

    bounds = _bounds_from_args(args)
    seed = getattr(args, "seed", 0)
    echo = {"command": args.command}
    for key in ("ring", "ideal", "poly", "vars", "max_deg", "cap", "height",
                "sample", "seed", "lattice_cap"):
        if hasattr(args, key):
            echo[key] = getattr(args, key)

    try:
        if args.command in ("omega", "strong-omega", "conjecture1", "gaussian",
                            "armendariz", "dm", "bezout", "certify",
                            "poly-omega", "int"):
            ring = parse_ring_spec(args.ring, bounds.order_cap)
        else:  # unreachable; subparsers are required
            raise ValueError(args.command)

        def run():
            if args.command == "omega":
                return _run_omega(ring, args.ideal, bounds)
            if args.command == "strong-omega":
                return _run_strong_omega(ring, args.ideal, bounds)
            if args.command == "conjecture1":
                return _run_conjecture1(ring, bounds)
            if args.command in ("gaussian", "armendariz"):
                return _run_pair_search(args.command, ring, bounds, seed)
            if args.command == "dm":
                return _run_dm(ring, bounds, seed)
            if args.command == "bezout":
                return _run_bezout_single(ring, args.poly, bounds)
            if args.command == "certify":
                if len(args.poly) < 2:
                    raise ValueError("certify needs at least two --poly factors")
                return _run_certify_single(ring, args.ideal, args.poly, bounds)
            if args.command == "poly-omega":
                ideal = parse_ideal_spec(ring, args.ideal)
                return _run_poly_omega(ring, ideal, bounds, seed)
            if args.command == "int":
                if not isinstance(ring, ZmodRing):
                    raise ValueError("the int check takes its modulus from a zmod ring spec")
                return _run_int(ring.modulus, bounds, seed)
            raise ValueError(args.command)

        (mode, result, witness, status), millis = _timed(run)
    except SpecParseError as exc:
        print(f"omegalab: parse error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:
        print(f"omegalab: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1

    ideal_field = getattr(args, "ideal", "-")
    records = [
        _record(args.ring, ideal_field, args.command, mode, result, witness,
                status, millis)
    ]
    text, summary = render_report(records, echo, args.format)
    _write_output(text, args.out)
    return _exit_code(summary)


if __name__ == "__main__":
    sys.exit(main())
