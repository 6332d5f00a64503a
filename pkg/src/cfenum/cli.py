"""Command-line front end: verification, expansion, enumeration,
statistics, path encoding/decoding, machine-readable reports.

All reports are emitted as byte-stable JSON (sorted keys, fixed
indentation) embedding the artifact version, the theorem id, the n range,
the truncation order, and the seed.  Exit codes: 0 success, 1
verification failure, 2 usage or I/O error.
"""

import json
import os
import re
import sys
import time

import click

from . import __version__
from .mpoly import Indeterminate, MultiPoly, ParseError, as_poly, \
    from_text, to_text
from .series import SFractionSpec, JFractionSpec, expand_sfraction, \
    expand_jfraction
from .permstats import Permutation, NotABijection, perm_index_profile, \
    perm_stat_totals, enumerate_perm_polynomial
from .setpartstats import SetPartition, NotAPartition, setpart_from_blocks, \
    sp_stat_totals, enumerate_sp_polynomial
from .matchstats import Matching, NotAMatching, matching_stat_totals, \
    enumerate_matching_polynomial
from . import paths as pathmod
from . import theorems as thm


_ENUMERATORS = {
    "perm": enumerate_perm_polynomial,
    "setpart": enumerate_sp_polynomial,
    "match": enumerate_matching_polynomial,
}

_INDET_KEY = re.compile(
    r"^([A-Za-z_][A-Za-z0-9_]*?)(?:\[(\d+(?:,\d+)*)\])?$")


def _report_json(obj):
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _emit(report, fmt):
    if fmt == "json":
        click.echo(_report_json(report), nl=False)
    else:
        for k in sorted(report):
            click.echo("%s\t%s" % (k, json.dumps(report[k], sort_keys=True)))


def _fail_usage(message):
    click.echo("error: %s" % message, err=True)
    sys.exit(2)


def _stamp(report, theorem_id=None, n_max=None, order=None, seed=None):
    report["artifact_version"] = __version__
    report["theorem_id"] = theorem_id
    report["n_max"] = n_max
    report["order"] = order
    report["seed"] = seed
    return report


def load_substitution(path):
    """Read a JSON substitution file: keys are indeterminate texts
    (e.g. "w[3]") or family names (e.g. "v1"); values are polynomial
    texts."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, ValueError) as exc:
        _fail_usage("cannot read substitution file %s: %s" % (path, exc))
    if not isinstance(data, dict):
        _fail_usage("substitution file must be a JSON object")
    subst = {}
    for key, val in data.items():
        m = _INDET_KEY.match(key)
        if not m:
            _fail_usage("bad substitution key %r" % (key,))
        try:
            poly = from_text(val) if isinstance(val, str) else as_poly(val)
        except (ParseError, TypeError) as exc:
            _fail_usage("bad substitution value for %r: %s" % (key, exc))
        if m.group(2) is None:
            subst[m.group(1)] = poly
        else:
            indices = tuple(int(t) for t in m.group(2).split(","))
            subst[Indeterminate(m.group(1), *indices)] = poly
    return subst


def _parse_oneline(text):
    try:
        word = [int(t) for t in text.split(",") if t.strip() != ""]
        return Permutation(word)
    except (ValueError, NotABijection) as exc:
        _fail_usage("bad one-line permutation %r: %s" % (text, exc))


def _parse_blocks(text):
    try:
        blocks = [[int(t) for t in blk.split(",") if t.strip() != ""]
                  for blk in text.split(";") if blk.strip() != ""]
        return setpart_from_blocks(blocks)
    except (ValueError, NotAPartition) as exc:
        _fail_usage("bad block list %r: %s" % (text, exc))


def _parse_pairs(text):
    try:
        pairs = []
        for tok in text.split(","):
            tok = tok.strip()
            if not tok:
                continue
            a, b = tok.split("-")
            pairs.append((int(a), int(b)))
        return Matching(pairs)
    except (ValueError, NotAMatching) as exc:
        _fail_usage("bad pair list %r: %s" % (text, exc))


def _workers_option(f):
    return click.option(
        "--workers", type=click.IntRange(min=1),
        default=lambda: int(os.environ.get("CFENUM_WORKERS", "1")),
        help="Worker count (output is identical for any value).")(f)


_FMT = click.option("--format", "fmt", type=click.Choice(["json", "text"]),
                    default="json", help="Output format.")


@click.group()
@click.version_option(version=__version__)
def main():
    """Exact continued-fraction enumeration toolkit."""


# ---------------------------------------------------------------------------
# verify / verify-all / conjecture

def _run_verify(tid, n, order, seed):
    try:
        report = thm.verify_theorem(tid, n_max=n, order=order, seed=seed)
    except (thm.UnknownTheorem, thm.UnknownIdentity):
        _fail_usage("unknown theorem id %r (see list in README or "
                    "`verify-all` output)" % (tid,))
    return report


@main.command()
@click.argument("theorem_id")
@click.option("--n", type=int, default=None, help="Largest n to check.")
@click.option("--order", type=int, default=None, help="Truncation order.")
@click.option("--seed", type=int, default=0, help="Seed for witnesses.")
@_workers_option
@_FMT
def verify(theorem_id, n, order, seed, workers, fmt):
    """Verify one registered theorem, corollary, identity, or witness."""
    report = _run_verify(theorem_id, n, order, seed)
    out = _stamp(report.to_dict(), theorem_id=report.theorem_id,
                 n_max=report.n_max, order=report.order, seed=report.seed)
    _emit(out, fmt)
    sys.exit(0 if report.ok else 1)


@main.command("verify-all")
@click.option("--budget", type=float, default=600.0,
              help="Wall-time budget in seconds.")
@click.option("--seed", type=int, default=0, help="Seed for witnesses.")
@_workers_option
@_FMT
def verify_all(budget, seed, workers, fmt):
    """Verify every registered entry at its default n_max."""
    t0 = time.time()
    results = []
    all_ok = True
    for tid in thm.list_theorems():
        if time.time() - t0 > budget:
            results.append({"id": tid, "skipped": True})
            continue
        report = thm.verify_theorem(tid, seed=seed)
        all_ok = all_ok and report.ok
        results.append({"id": tid, "ok": report.ok,
                        "n_max": report.n_max,
                        "wall_time": round(report.wall_time, 6),
                        "first_discrepancy": report.first_discrepancy})
    out = _stamp({"results": results, "ok": all_ok,
                  "budget": budget,
                  "total_wall_time": round(time.time() - t0, 6)},
                 theorem_id="ALL", seed=seed)
    _emit(out, fmt)
    sys.exit(0 if all_ok else 1)


@main.command()
@click.option("--n", type=int, default=None, help="Largest n to check.")
@click.option("--order", type=int, default=None, help="Truncation order.")
@_workers_option
@_FMT
def conjecture(n, order, workers, fmt):
    """Forward-check the conjectured second J-fraction."""
    report = thm.test_conjecture_v2(n_max=n, order=order)
    out = _stamp(report.to_dict(), theorem_id=report.theorem_id,
                 n_max=report.n_max, order=report.order, seed=report.seed)
    _emit(out, fmt)
    sys.exit(0 if report.ok else 1)


# ---------------------------------------------------------------------------
# expand / enumerate / stats

@main.command()
@click.option("--theorem", "theorem_id", required=True,
              help="Registered fraction id.")
@click.option("--order", type=int, default=8, help="Truncation order.")
@_FMT
def expand(theorem_id, order, fmt):
    """Expand a registered continued fraction to a truncation order."""
    if order < 0:
        _fail_usage("order must be nonnegative")
    try:
        coeffs = thm.expand_registered(theorem_id, order)
    except thm.UnknownTheorem as exc:
        _fail_usage("cannot expand: %s" % exc)
    out = _stamp({"coefficients": [to_text(as_poly(c)) for c in coeffs]},
                 theorem_id=theorem_id, order=order)
    _emit(out, fmt)


@main.command()
@click.option("--object", "obj", required=True,
              type=click.Choice(sorted(_ENUMERATORS)))
@click.option("--n", type=int, required=True,
              help="Object size (pairs for matchings).")
@click.option("--family", default="all", help="Object family.")
@click.option("--weight", default="unit", help="Registered weight map id.")
@click.option("--subst", "subst_path", default=None,
              help="JSON substitution file.")
@click.option("--zeta", is_flag=True,
              help="Multiply each weight by zeta^cc.")
@_FMT
def enumerate(obj, n, family, weight, subst_path, zeta, fmt):
    """Exact weighted enumeration as a polynomial."""
    if n < 0:
        _fail_usage("n must be nonnegative")
    subst = load_substitution(subst_path) if subst_path else None
    try:
        poly = _ENUMERATORS[obj](n, family=family, weight=weight,
                                 substitution=subst, with_cc_zeta=zeta)
    except KeyError as exc:
        _fail_usage("unknown weight or family: %s" % exc)
    except Exception as exc:
        _fail_usage(str(exc))
    out = _stamp({"object": obj, "n": n, "family": family,
                  "weight": weight, "zeta": zeta,
                  "polynomial": to_text(poly)}, n_max=n)
    _emit(out, fmt)


@main.command()
@click.option("--object", "obj", required=True,
              type=click.Choice(["perm", "setpart", "match"]))
@click.option("--oneline", default=None,
              help="Permutation in one-line notation, e.g. 2,1.")
@click.option("--blocks", default=None,
              help="Set partition blocks, e.g. 1,3,6;2,4,5.")
@click.option("--pairs", default=None,
              help="Matching pairs, e.g. 1-3,2-4.")
@_FMT
def stats(obj, oneline, blocks, pairs, fmt):
    """All statistic totals of one combinatorial object."""
    if obj == "perm":
        if oneline is None:
            _fail_usage("--object perm requires --oneline")
        sigma = _parse_oneline(oneline)
        totals = perm_stat_totals(sigma, perm_index_profile(sigma))
        payload = {"object": "perm", "oneline": list(sigma.oneline)}
    elif obj == "setpart":
        if blocks is None:
            _fail_usage("--object setpart requires --blocks")
        pi = _parse_blocks(blocks)
        totals = sp_stat_totals(pi)
        payload = {"object": "setpart",
                   "blocks": [list(b) for b in pi.blocks]}
    else:
        if pairs is None:
            _fail_usage("--object match requires --pairs")
        m = _parse_pairs(pairs)
        totals = matching_stat_totals(m)
        payload = {"object": "match", "pairs": m.as_blocks()}
    payload["stats"] = totals.to_dict()
    _emit(_stamp(payload), fmt)


# ---------------------------------------------------------------------------
# encode / decode

_BIJECTION_NAMES = {
    "fz": "FZ", "biane": "Biane", "kz": "KZ", "flajolet": "Flajolet",
    "hybrid3": "Hybrid3", "hybrid4": "Hybrid4",
}


def _lookup_bijection(name):
    canon = _BIJECTION_NAMES.get(name.lower())
    if canon is None:
        _fail_usage("unknown bijection %r (choose from %s)"
                    % (name, ", ".join(sorted(_BIJECTION_NAMES.values()))))
    return canon


@main.command()
@click.option("--bijection", required=True,
              help="FZ, Biane, KZ, Flajolet, Hybrid3, or Hybrid4.")
@click.option("--oneline", default=None,
              help="Permutation in one-line notation (FZ, Biane).")
@click.option("--blocks", default=None,
              help="Set partition blocks (KZ, Flajolet, Hybrid3, Hybrid4).")
@_FMT
def encode(bijection, oneline, blocks, fmt):
    """Encode an object as a labeled Motzkin path."""
    canon = _lookup_bijection(bijection)
    if canon in ("FZ", "Biane"):
        if oneline is None:
            _fail_usage("%s requires --oneline" % canon)
        obj = _parse_oneline(oneline)
    else:
        if blocks is None:
            _fail_usage("%s requires --blocks" % canon)
        obj = _parse_blocks(blocks)
    try:
        path = pathmod.encode(obj, canon)
    except (pathmod.TypeMismatch, pathmod.InvalidPath) as exc:
        _fail_usage(str(exc))
    out = _stamp({"bijection": canon,
                  "path": pathmod.path_to_json_obj(path)})
    _emit(out, fmt)


@main.command()
@click.option("--bijection", required=True,
              help="FZ, Biane, KZ, Flajolet, Hybrid3, or Hybrid4.")
@click.option("--path", "path_file", required=True,
              help="Path JSON file, or - for standard input.")
@_FMT
def decode(bijection, path_file, fmt):
    """Decode a labeled Motzkin path back to its object."""
    canon = _lookup_bijection(bijection)
    try:
        if path_file == "-":
            text = sys.stdin.read()
        else:
            with open(path_file, "r", encoding="utf-8") as fh:
                text = fh.read()
        path = pathmod.path_from_json(text)
    except (OSError, ValueError, KeyError) as exc:
        _fail_usage("cannot read path: %s" % exc)
    try:
        obj = pathmod.decode(path, canon)
    except (pathmod.TypeMismatch, pathmod.InvalidPath) as exc:
        _fail_usage(str(exc))
    if canon in ("FZ", "Biane"):
        payload = {"object": "perm", "oneline": list(obj.oneline)}
    else:
        payload = {"object": "setpart",
                   "blocks": [list(b) for b in obj.blocks]}
    payload["bijection"] = canon
    _emit(_stamp(payload), fmt)


if __name__ == "__main__":
    main()
