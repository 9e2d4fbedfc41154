"""Batch command-line front end with deterministic JSON output.

Exit status: 0 on success, 1 when a checked property fails or a
membership/containment verdict is negative (the certificate is still
printed on stdout), 2 on usage errors.  Diagnostics go to stderr only.

Subgroup specs:  H<k> (order-2 family, n=2), K<d>,<j>, D<d>:<m1>,...,<mr>,
or index<i> into the deterministic family enumeration.
Ideal specs: any subgroup spec (its restriction kernel), I (intersection
over the whole family), or gen:<poly>;<poly>;... (generated ideal).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import family as fam
from .character_ring import (
    CharacterPolynomial,
    format_polynomial,
    in_intersection,
    parse_polynomial,
    restrict,
)
from .config import SessionConfig, read_config_file
from .homotopy import (
    Parity,
    band_matrix,
    binomial_expansion_one_minus_t,
    det_exact,
    homotopy_trace,
)
from .ideal_reports import (
    GeneratedIdeal,
    KernelIdeal,
    containment_report,
    ideal_member,
    power_ideal_member,
    topology_equivalence_report,
)
from .stiefel import (
    fixed_point_factors,
    fixed_set_dimension,
    fixed_support_pattern,
    random_frame,
)
from .verify import action_suite, equivariance_suite, freeness_suite


def emit(obj) -> None:
    sys.stdout.write(json.dumps(obj) + "\n")


def fail_usage(message: str) -> int:
    sys.stderr.write(f"error: {message}\n")
    return 2


def parse_subgroup_spec(text: str, n: int, r: int) -> fam.SubgroupRep:
    text = text.strip()
    if text.upper().startswith("H"):
        if n != 2:
            raise ValueError("H<k> subgroups live in the n=2 family")
        return fam.subgroup_Hk(int(text[1:]), r)
    if text.upper().startswith("K"):
        d_str, j_str = text[1:].split(",")
        return fam.subgroup_K(int(d_str), int(j_str), n, r)
    if text.upper().startswith("D"):
        d_str, m_str = text[1:].split(":")
        m = tuple(int(x) for x in m_str.split(","))
        return fam.SubgroupRep(n=n, d=int(d_str), r=len(m), m=m)
    if text.lower().startswith("index"):
        members = fam.enumerate_family(n, r)
        idx = int(text[5:])
        if not 0 <= idx < len(members):
            raise ValueError(f"index {idx} outside 0..{len(members) - 1}")
        return members[idx]
    raise ValueError(f"cannot parse subgroup spec {text!r}")


def parse_ideal_spec(text: str, n: int, r: int):
    text = text.strip()
    if text == "I":
        return KernelIdeal(tuple(fam.enumerate_family(n, r)))
    if text.startswith("gen:"):
        polys = tuple(
            parse_polynomial(chunk, (n, r))
            for chunk in text[4:].split(";")
            if chunk.strip()
        )
        return GeneratedIdeal(polys)
    return KernelIdeal((parse_subgroup_spec(text, n, r),))


def add_session_flags(parser: argparse.ArgumentParser, *names: str) -> None:
    flags = {
        "n": lambda: parser.add_argument("--n", type=int, default=None),
        "r": lambda: parser.add_argument("--r", type=int, default=None),
        "s": lambda: parser.add_argument("--s", type=int, default=None),
        "tol": lambda: parser.add_argument("--tol", type=float, default=None),
        "seed": lambda: parser.add_argument("--seed", type=int, default=None),
        "degree": lambda: parser.add_argument("--degree", type=int, default=None),
        "window": lambda: parser.add_argument("--window", type=int, default=None),
        "maxpow": lambda: parser.add_argument("--maxpow", type=int, default=None),
    }
    for name in names:
        flags[name]()


def resolve_config(args) -> SessionConfig:
    overrides = read_config_file(args.config) if getattr(args, "config", None) else {}
    values = {}
    for key in ("n", "r", "s", "tol", "seed", "degree", "window", "maxpow"):
        flag = getattr(args, key, None)
        if flag is not None:
            values[key] = flag
        elif key in overrides:
            values[key] = overrides[key]
    return SessionConfig(**values)


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="znframes",
        description="Cyclic-group actions on unitary frames: families, ideals, "
        "fixed points, bundle checks, homotopies.",
    )
    top.add_argument("--config", default=None, help="key=value defaults file")
    groups = top.add_subparsers(dest="group", required=True)

    p_family = groups.add_parser("family").add_subparsers(dest="command", required=True)
    p_enum = p_family.add_parser("enumerate")
    add_session_flags(p_enum, "n", "r")

    p_stiefel = groups.add_parser("stiefel").add_subparsers(dest="command", required=True)
    p_fixed = p_stiefel.add_parser("fixed")
    p_fixed.add_argument("--subgroup", required=True)
    add_session_flags(p_fixed, "n", "r", "s")
    p_action = p_stiefel.add_parser("verify-action")
    p_action.add_argument("--trials", type=int, default=200)
    add_session_flags(p_action, "seed", "tol")

    p_bundle = groups.add_parser("bundle").add_subparsers(dest="command", required=True)
    p_equiv = p_bundle.add_parser("check-equivariance")
    p_equiv.add_argument("--trials", type=int, default=200)
    add_session_flags(p_equiv, "seed", "tol")

    p_ring = groups.add_parser("ring").add_subparsers(dest="command", required=True)
    p_restrict = p_ring.add_parser("restrict")
    p_restrict.add_argument("--poly", required=True)
    p_restrict.add_argument("--subgroup", required=True)
    add_session_flags(p_restrict, "n", "r")
    p_member = p_ring.add_parser("member")
    p_member.add_argument("--poly", required=True)
    p_member.add_argument("--ideal", required=True)
    p_member.add_argument("--power", type=int, default=1)
    add_session_flags(p_member, "n", "r", "window")
    p_contain = p_ring.add_parser("contain")
    p_contain.add_argument("--A", required=True)
    p_contain.add_argument("--B", required=True)
    add_session_flags(p_contain, "n", "r", "degree", "window")
    p_topology = p_ring.add_parser("topology")
    p_topology.add_argument("--A", required=True)
    p_topology.add_argument("--B", required=True)
    add_session_flags(p_topology, "n", "r", "degree", "window", "maxpow")

    p_homotopy = groups.add_parser("homotopy").add_subparsers(dest="command", required=True)
    p_det = p_homotopy.add_parser("det")
    p_det.add_argument("--nmax", type=int, default=12)
    p_trace = p_homotopy.add_parser("trace")
    p_trace.add_argument("--parity", default="even")
    p_trace.add_argument("--grid", type=int, default=11)
    add_session_flags(p_trace, "r", "s", "seed")

    return top


def cmd_family_enumerate(cfg: SessionConfig) -> int:
    members = fam.enumerate_family(cfg.n, cfg.r)
    emit({"n": cfg.n, "r": cfg.r, "count": len(members), "subgroups": [h.to_json() for h in members]})
    return 0


def cmd_stiefel_fixed(cfg: SessionConfig, subgroup_spec: str) -> int:
    h = parse_subgroup_spec(subgroup_spec, cfg.n, cfg.r)
    s = cfg.truncation
    mask = fixed_support_pattern(h, s)
    factors = fixed_point_factors(h, s)
    emit(
        {
            "subgroup": h.to_json(),
            "s": s,
            "mask": [[int(x) for x in row] for row in mask],
            "factors": [[si, ci] for si, ci in factors],
            "real_dimension": fixed_set_dimension(h, s),
        }
    )
    return 0


def cmd_ring_restrict(cfg: SessionConfig, poly: str, subgroup_spec: str) -> int:
    f = parse_polynomial(poly, (cfg.n, cfg.r))
    h = parse_subgroup_spec(subgroup_spec, cfg.n, cfg.r)
    value = restrict(f, fam.restriction_hom(h))
    emit(
        {
            "poly": format_polynomial(f),
            "subgroup": h.to_json(),
            "target_order": value.order,
            "coefficients": list(value.coefficients),
            "zero": value.is_zero(),
        }
    )
    return 0


def cmd_ring_member(cfg: SessionConfig, poly: str, ideal_spec: str, power: int) -> int:
    f = parse_polynomial(poly, (cfg.n, cfg.r))
    ideal = parse_ideal_spec(ideal_spec, cfg.n, cfg.r)
    if isinstance(ideal, GeneratedIdeal) and power > 1:
        result = power_ideal_member(f, ideal.generators, m=power, window=cfg.window)
        emit({"member": result.member, **result.to_json()})
        return 0 if result.member else 1
    if isinstance(ideal, KernelIdeal) and len(ideal.subgroups) > 1:
        verdict = in_intersection(f, list(ideal.subgroups))
        payload = {"member": verdict.member}
        if verdict.certificate is not None:
            payload["certificate"] = {
                "failing_subgroup": verdict.certificate.to_json(),
                "restriction": list(
                    restrict(f, fam.restriction_hom(verdict.certificate)).coefficients
                ),
            }
        emit(payload)
        return 0 if verdict.member else 1
    outcome = ideal_member(f, ideal, window=cfg.window)
    payload = {"member": outcome.member, "certificate": outcome.certificate_json()}
    if outcome.power_result is not None and outcome.member:
        payload["witness"] = [t.to_json() for t in outcome.power_result.witness]
    emit(payload)
    return 0 if outcome.member else 1


def cmd_ring_contain(cfg: SessionConfig, spec_a: str, spec_b: str) -> int:
    ambient = (cfg.n, cfg.r)
    A = parse_ideal_spec(spec_a, cfg.n, cfg.r)
    B = parse_ideal_spec(spec_b, cfg.n, cfg.r)
    report = containment_report(A, B, ambient, cfg.degree, cfg.window)
    emit({"A": A.describe(), "B": B.describe(), **report.to_json()})
    return 0 if report.verdict == "CONTAINED" else 1


def cmd_ring_topology(cfg: SessionConfig, spec_a: str, spec_b: str) -> int:
    ambient = (cfg.n, cfg.r)
    A = parse_ideal_spec(spec_a, cfg.n, cfg.r)
    B = parse_ideal_spec(spec_b, cfg.n, cfg.r)
    report = topology_equivalence_report(
        A, B, ambient, maxpow=cfg.maxpow, degree=cfg.degree, window=cfg.window
    )
    emit({"A": A.describe(), "B": B.describe(), **report.to_json()})
    both = report.forward.verdict == "CONTAINED" and report.backward.verdict == "CONTAINED"
    return 0 if both else 1


def cmd_homotopy_det(nmax: int) -> int:
    results = []
    ok = True
    for n in range(1, nmax + 1):
        expected = binomial_expansion_one_minus_t(n)
        for parity in (Parity.EVEN, Parity.ODD):
            det = det_exact(band_matrix(n, parity))
            match = det == expected
            ok = ok and match
            results.append(
                {
                    "n": n,
                    "parity": parity.value,
                    "determinant": str(det),
                    "matches_binomial": match,
                }
            )
    emit({"nmax": nmax, "all_match": ok, "determinants": results})
    return 0 if ok else 1


def cmd_homotopy_trace(cfg: SessionConfig, parity_text: str, grid: int) -> int:
    parity = Parity.parse(parity_text)
    s = cfg.s if cfg.s is not None else max(2 * cfg.r, 8)
    frame = random_frame(cfg.r, s, seed=cfg.seed)
    for point in homotopy_trace(frame, parity, grid):
        emit(point)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = resolve_config(args)
        if args.group == "family" and args.command == "enumerate":
            return cmd_family_enumerate(cfg)
        if args.group == "stiefel" and args.command == "fixed":
            return cmd_stiefel_fixed(cfg, args.subgroup)
        if args.group == "stiefel" and args.command == "verify-action":
            report = {
                "action": action_suite(args.trials, cfg.seed, tol=cfg.tol),
                "freeness": freeness_suite(args.trials, cfg.seed),
            }
            report["pass"] = report["action"]["pass"] and report["freeness"]["pass"]
            emit(report)
            return 0 if report["pass"] else 1
        if args.group == "bundle" and args.command == "check-equivariance":
            report = equivariance_suite(args.trials, cfg.seed, tol=cfg.tol)
            emit(report)
            return 0 if report["pass"] else 1
        if args.group == "ring" and args.command == "restrict":
            return cmd_ring_restrict(cfg, args.poly, args.subgroup)
        if args.group == "ring" and args.command == "member":
            return cmd_ring_member(cfg, args.poly, args.ideal, args.power)
        if args.group == "ring" and args.command == "contain":
            return cmd_ring_contain(cfg, args.A, args.B)
        if args.group == "ring" and args.command == "topology":
            return cmd_ring_topology(cfg, args.A, args.B)
        if args.group == "homotopy" and args.command == "det":
            return cmd_homotopy_det(args.nmax)
        if args.group == "homotopy" and args.command == "trace":
            return cmd_homotopy_trace(cfg, args.parity, args.grid)
        return fail_usage(f"unknown command {args.group} {args.command}")
    except (ValueError, ArithmeticError) as exc:
        return fail_usage(str(exc))


if __name__ == "__main__":
    sys.exit(main())
