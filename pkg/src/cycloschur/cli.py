"""Command-line front end: build contexts, run verifier suites, emit
decomposition matrices as JSON, and manage the structure-constant cache.

Design rules: JSON is the only output format, every scalar is rendered as
an exact string, multipartitions appear as nested integer arrays, and a
rerun with the same configuration and seed produces byte-identical output
(which is why no wall-clock timings appear in the documents).
"""

from __future__ import annotations

import argparse
import hashlib
import itertools
import json
import os
import random
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import modified_ak as mod
from . import parabolic as par
from .ariki_koike import HeckeContext
from .combinatorics import ParabolicShape, generate_lambda, std_tableaux
from .exact_linear import PrimeField, Rationals, RepeatedParameter
from .schur import SchurContext, check_decomposition_invariants

CODE_VERSION = "0.1.0"
DESK_LIMIT = 20000

SUITES = (
    "cellular",
    "standardly-based",
    "structure",
    "product-formula",
    "presentation",
    "duality",
    "separation",
    "transfer",
)


class InvalidConfig(ValueError):
    """The requested run is malformed or over the desk-scale guardrail."""


class HypothesisNotMet(RuntimeError):
    """A suite's mathematical hypothesis fails for these parameters."""


# ---------------------------------------------------------------------------
# configuration


@dataclass(frozen=True)
class RunConfig:
    command: str
    n: int
    r: int
    m: tuple
    p: tuple
    field: str
    q: object
    Q: tuple
    seed: int
    out: str | None
    cache_dir: str
    force: bool
    suite: str | None = None
    action: str | None = None


def _parse_scalar(text):
    try:
        return int(text)
    except ValueError:
        return Fraction(text)


def _parse_ints(text, what):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise InvalidConfig(f"{what} must be comma-separated integers") from exc


def make_domain(field):
    if field == "rational":
        return Rationals()
    if field.startswith("fp:"):
        try:
            return PrimeField(int(field[3:]))
        except ValueError as exc:
            raise InvalidConfig(str(exc)) from exc
    raise InvalidConfig("field must be 'rational' or 'fp:<prime>'")


def _fact(k):
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


def build_config(args):
    n, r = args.n, args.r
    if n < 1 or r < 1:
        raise InvalidConfig("n and r must be positive")
    m = _parse_ints(args.m, "--m") if args.m else (n,) * r
    if len(m) != r or any(x < 0 for x in m):
        raise InvalidConfig("--m must list one nonnegative bound per component")
    p = _parse_ints(args.p, "--p") if args.p else (r,)
    if sum(p) != r or any(x <= 0 for x in p):
        raise InvalidConfig("--p must be a composition of r with positive parts")
    Q = (
        tuple(_parse_scalar(x) for x in args.Q.split(","))
        if args.Q
        else tuple(range(1, r + 1))
    )
    if len(Q) != r:
        raise InvalidConfig("--Q must list exactly r values")
    q = _parse_scalar(args.q)
    make_domain(args.field)  # validate early
    rank = _fact(n) * r ** n
    if rank > DESK_LIMIT and not args.force:
        raise InvalidConfig(
            f"free rank n!*r^n = {rank} exceeds the desk-scale limit "
            f"{DESK_LIMIT}; pass --force to override"
        )
    return RunConfig(
        command=args.command,
        n=n,
        r=r,
        m=m,
        p=p,
        field=args.field,
        q=q,
        Q=Q,
        seed=args.seed,
        out=args.out,
        cache_dir=args.cache_dir,
        force=args.force,
        suite=getattr(args, "suite", None),
        action=getattr(args, "action", None),
    )


def config_echo(cfg):
    return {
        "n": cfg.n,
        "r": cfg.r,
        "m": list(cfg.m),
        "p": list(cfg.p),
        "field": cfg.field,
        "q": str(cfg.q),
        "Q": [str(x) for x in cfg.Q],
        "seed": cfg.seed,
    }


def content_key(cfg):
    blob = json.dumps(
        {
            "n": cfg.n,
            "r": cfg.r,
            "m": list(cfg.m),
            "p": list(cfg.p),
            "field": cfg.field,
            "q": str(cfg.q),
            "Q": [str(x) for x in cfg.Q],
            "version": CODE_VERSION,
        },
        sort_keys=True,
    )
    return hashlib.sha256(blob.encode()).hexdigest()[:24]


# ---------------------------------------------------------------------------
# context assembly


def build_stack(cfg, with_corner=False):
    dom = make_domain(cfg.field)
    h = HeckeContext(cfg.n, cfg.r, dom, cfg.q, cfg.Q)
    s = SchurContext(h, cfg.m)
    pc = par.ParabolicContext(s, ParabolicShape(cfg.p))
    if not with_corner:
        return dom, h, s, pc, None
    fac = lambda nn, rr, QQ: HeckeContext(nn, rr, dom, cfg.q, QQ)
    mc = mod.ModifiedContext(pc, hecke_factory=fac)
    return dom, h, s, pc, mc


def _checks_from_flags(prefix, report, witness_keys=()):
    """Flatten a {name: bool-or-list} report into check rows."""
    rows = []
    for name, val in report.items():
        if isinstance(val, bool):
            rows.append((f"{prefix}{name}", val, None))
        elif isinstance(val, list):
            rows.append((f"{prefix}{name}", not val, _short(val)))
        elif name in witness_keys:
            rows.append((f"{prefix}{name}", True, _short(val)))
    return rows


def _short(val, limit=3):
    if isinstance(val, list) and len(val) > limit:
        return [_jsonable(v) for v in val[:limit]] + [f"... {len(val)} total"]
    return _jsonable(val)


def _jsonable(v):
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, bool) or v is None:
        return v
    if isinstance(v, int):
        return v
    if hasattr(v, "as_lists"):
        return v.as_lists()
    return str(v)


# ---------------------------------------------------------------------------
# commands


def cmd_dim(cfg):
    dom, h, s, pc, _ = build_stack(cfg)
    hecke_dim = _fact(cfg.n) * cfg.r ** cfg.n
    _, lam_plus = generate_lambda(cfg.n, cfg.r, cfg.m)
    cellular = sum(len(std_tableaux(lam)) ** 2 for lam in lam_plus)
    q = pc.quotient()
    g = len(cfg.p)
    prop53 = 0
    per_alpha = {}
    for alpha in itertools.product(range(cfg.n + 1), repeat=g):
        if sum(alpha) != cfg.n:
            continue
        na = _fact(cfg.n)
        for x in alpha:
            na //= _fact(x)
        d = na * na
        for k in range(g):
            d *= _fact(alpha[k]) * (cfg.p[k] ** alpha[k])
        per_alpha[",".join(map(str, alpha))] = d
        prop53 += d
    checks = [
        ("hecke_rank_matches", h.N == hecke_dim, None),
        ("cellular_count_matches", cellular == hecke_dim, cellular),
        ("corner_formula_matches_rank", prop53 == hecke_dim, prop53),
    ]
    doc = _document(cfg, checks)
    doc["dimensions"] = {
        "hecke": hecke_dim,
        "cellular_pairs": cellular,
        "schur": s.size,
        "quotient": q.size,
        "corner": prop53,
        "corner_per_block": per_alpha,
    }
    return doc


def cmd_decomp(cfg):
    dom, h, s, pc, _ = build_stack(cfg)
    rows, cols, D = s.decomposition_matrix()
    bad = check_decomposition_invariants(s, rows, cols, D)
    checks = [
        ("unitriangular_and_dim_sums", not bad, _short(bad)),
        ("columns_subset_rows", set(cols) <= set(rows), None),
    ]
    doc = _document(cfg, checks)
    doc["matrices"] = {
        "decomposition": {
            "rows": [lam.as_lists() for lam in rows],
            "cols": [mu.as_lists() for mu in cols],
            "entries": [[int(x) for x in row] for row in D],
        }
    }
    return doc


def _suite_cellular(cfg, rng):
    dom, h, s, pc, _ = build_stack(cfg)
    checks = _checks_from_flags("hecke_relation:", h.relations_report())
    _, lam_plus = generate_lambda(cfg.n, cfg.r, cfg.m)
    cellular = sum(len(std_tableaux(lam)) ** 2 for lam in lam_plus)
    checks.append(("standard_basis_count", cellular == h.N, cellular))
    checks.append(
        (
            "endomorphism_basis_count",
            s.size == sum(s.dims[lam] ** 2 for lam in s.lam_plus),
            s.size,
        )
    )
    pairs = [
        (rng.randrange(s.size), rng.randrange(s.size)) for _ in range(30)
    ]
    bad = []
    for g1, g2 in pairs:
        lhs = s.compose(g1, g2)
        rhs = {
            s.star_index(g): cf
            for g, cf in s.compose(s.star_index(g2), s.star_index(g1)).items()
        }
        if lhs != rhs:
            bad.append((g1, g2))
    checks.append(("star_antiautomorphism_sampled", not bad, _short(bad)))
    return checks


def _suite_standardly_based(cfg, rng):
    dom, h, s, pc, _ = build_stack(cfg)
    pairs = [(rng.choice(pc.cp), rng.choice(pc.cp)) for _ in range(150)]
    checks = [
        ("closure_sampled", not pc.closure_check(pairs), None),
        ("support_sampled", not pc.support_check(pairs), None),
    ]
    eps_sample = rng.sample(pc.sigma, min(3, len(pc.sigma)))
    phis = rng.sample(pc.cp, min(2, len(pc.cp)))
    bad = pc.standardly_based_check(eps_list=eps_sample, phis=phis)
    checks.append(("standardly_based_sampled", not bad, _short(bad)))
    checks.append(("factorization", not pc.factorization_check(), None))
    return checks


def _suite_structure(cfg, rng):
    dom, h, s, pc, _ = build_stack(cfg)
    fac = lambda nn, rr, QQ: HeckeContext(nn, rr, dom, cfg.q, QQ)
    rep = par.structure_iso_check(pc, fac)
    return [
        ("index_bijective", rep["bijective"], None),
        ("block_dimensions", rep["dims"], None),
        ("structure_constants", not rep["mismatches"], _short(rep["mismatches"])),
    ]


def _suite_product_formula(cfg, rng):
    dom, h, s, pc, _ = build_stack(cfg)
    fac = lambda nn, rr, QQ: HeckeContext(nn, rr, dom, cfg.q, QQ)
    rep = par.product_formula_report(pc, fac)
    return [
        (
            "factorwise_multiplicities",
            not rep["disagree"],
            _short(rep["disagree"]),
        ),
        ("pairs_compared", True, len(rep["agree"]) + len(rep["disagree"])),
    ]


def _suite_presentation(cfg, rng):
    _, _, _, _, mc = build_stack(cfg, with_corner=True)
    checks = []
    for alpha in sorted(mc.alphas):
        rep = mod.presentation_report(mc, alpha)
        tag = f"alpha={','.join(map(str, alpha))}:"
        for name, val in rep.items():
            if isinstance(val, bool):
                checks.append((tag + name, val, None))
        checks.append(
            (
                tag + "span",
                rep["span_rank"] == rep["span_dim"],
                [rep["span_rank"], rep["span_dim"]],
            )
        )
        conv = rep.get("A11_A12_conventions")
        if conv is not None:
            checks.append((tag + "convention_probe", True, _jsonable(conv)))
    return checks


def _suite_duality(cfg, rng):
    _, _, _, _, mc = build_stack(cfg, with_corner=True)
    checks = _checks_from_flags("commutant:", mod.commutant_report(mc))
    checks += _checks_from_flags("cells:", mod.cell_element_report(mc))
    checks += _checks_from_flags("duality:", mod.duality_report(mc))
    return checks


def _suite_separation(cfg, rng):
    dom, h, s, pc, mc = build_stack(cfg, with_corner=True)
    sep = mod.separation_holds(h)
    checks = [("separation_condition", True, sep)]
    rep = mod.rho0_report(mc)
    checks += _checks_from_flags("embedding:", rep)
    if sep:
        checks.append(("separated_implies_bijective", rep["bijective"], None))
    return checks


def _suite_transfer(cfg, rng):
    dom, h, s, pc, _ = build_stack(cfg)
    rep = par.decomposition_transfer_report(pc)
    return [
        ("multiplicities_agree", not rep["disagree"], _short(rep["disagree"])),
        (
            "no_cross_block_composition_factors",
            not rep["nonzero_crossing"],
            _short(rep["nonzero_crossing"]),
        ),
        ("pairs_compared", True, len(rep["agree"])),
    ]


_SUITE_FNS = {
    "cellular": _suite_cellular,
    "standardly-based": _suite_standardly_based,
    "structure": _suite_structure,
    "product-formula": _suite_product_formula,
    "presentation": _suite_presentation,
    "duality": _suite_duality,
    "separation": _suite_separation,
    "transfer": _suite_transfer,
}


def cmd_verify(cfg):
    rng = random.Random(cfg.seed)
    try:
        checks = _SUITE_FNS[cfg.suite](cfg, rng)
    except RepeatedParameter as exc:
        raise HypothesisNotMet(
            f"suite '{cfg.suite}' needs pairwise-distinct block parameters: {exc}"
        ) from exc
    doc = _document(cfg, checks)
    doc["suite"] = cfg.suite
    return doc


# ---------------------------------------------------------------------------
# structure-constant cache


def _cache_path(cfg):
    return os.path.join(cfg.cache_dir, content_key(cfg) + ".json")


def cmd_cache(cfg):
    os.makedirs(cfg.cache_dir, exist_ok=True)
    doc = _document(cfg, [])
    doc["action"] = cfg.action
    if cfg.action == "build":
        path = _cache_path(cfg)
        if os.path.exists(path):
            doc["cache"] = {"status": "hit", "entry": os.path.basename(path)}
            return doc
        _, _, _, _, mc = build_stack(cfg, with_corner=True)
        dom = mc.dom
        table = {}
        for i in range(mc.N):
            for j in range(mc.N):
                prod = mc.cmul({i: dom.one}, {j: dom.one})
                entries = {
                    str(k): dom.scalar_str(cf) for k, cf in sorted(prod.items())
                }
                if entries:
                    table[f"{i},{j}"] = entries
        payload = {
            "config": config_echo(cfg),
            "version": CODE_VERSION,
            "rank": mc.N,
            "structure_constants": table,
        }
        tmp = path + ".tmp"
        with open(tmp, "w") as fh:
            json.dump(payload, fh, sort_keys=True)
        os.replace(tmp, path)
        doc["cache"] = {"status": "built", "entry": os.path.basename(path)}
    elif cfg.action == "inspect":
        entries = []
        for name in sorted(os.listdir(cfg.cache_dir)):
            if not name.endswith(".json"):
                continue
            with open(os.path.join(cfg.cache_dir, name)) as fh:
                payload = json.load(fh)
            entries.append(
                {
                    "entry": name,
                    "config": payload.get("config"),
                    "rank": payload.get("rank"),
                }
            )
        doc["cache"] = {"status": "ok", "entries": entries}
    elif cfg.action == "purge":
        removed = 0
        for name in os.listdir(cfg.cache_dir):
            if name.endswith(".json"):
                os.remove(os.path.join(cfg.cache_dir, name))
                removed += 1
        doc["cache"] = {"status": "purged", "removed": removed}
    else:
        raise InvalidConfig("cache action must be build, inspect, or purge")
    return doc


# ---------------------------------------------------------------------------
# document plumbing


def _document(cfg, checks):
    return {
        "command": cfg.command,
        "config": config_echo(cfg),
        "checks": [
            {
                "name": name,
                "status": "pass" if ok else "fail",
                "witness": _jsonable(witness),
            }
            for name, ok, witness in checks
        ],
    }


def _emit(doc, out):
    text = json.dumps(doc, sort_keys=True, indent=2) + "\n"
    sys.stdout.write(text)
    if out:
        with open(out, "w") as fh:
            fh.write(text)


def build_parser():
    ap = argparse.ArgumentParser(
        prog="cyclo-schur",
        description="Exact verification of cyclotomic Hecke/Schur structures.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--r", type=int, required=True)
        p.add_argument("--m", help="comma-separated bounds, default n per slot")
        p.add_argument("--p", help="comma-separated composition of r")
        p.add_argument("--field", default="fp:5")
        p.add_argument("--q", default="2")
        p.add_argument("--Q", help="comma-separated parameters, default 1..r")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--out")
        p.add_argument("--cache-dir", default=".cyclo-schur-cache")
        p.add_argument("--force", action="store_true")

    common(sub.add_parser("dim", help="rank and dimension bookkeeping"))
    common(sub.add_parser("decomp", help="decomposition matrix"))
    pv = sub.add_parser("verify", help="run a verifier suite")
    common(pv)
    pv.add_argument("--suite", choices=SUITES, required=True)
    pcache = sub.add_parser("cache", help="structure-constant cache")
    common(pcache)
    pcache.add_argument("--action", choices=("build", "inspect", "purge"),
                        required=True)
    return ap


_COMMANDS = {
    "dim": cmd_dim,
    "decomp": cmd_decomp,
    "verify": cmd_verify,
    "cache": cmd_cache,
}


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        cfg = build_config(args)
        doc = _COMMANDS[cfg.command](cfg)
    except MemoryError:
        _emit(
            {
                "command": args.command,
                "error": "InvalidConfig",
                "message": "configuration exceeds available memory; the "
                "multiplication tables are cubic in the free rank",
            },
            getattr(args, "out", None),
        )
        return 2
    except (InvalidConfig, HypothesisNotMet) as exc:
        _emit(
            {
                "command": args.command,
                "error": type(exc).__name__,
                "message": str(exc),
            },
            getattr(args, "out", None),
        )
        return 2
    _emit(doc, cfg.out)
    failed = any(c["status"] == "fail" for c in doc.get("checks", []))
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
