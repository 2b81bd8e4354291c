"""Command-line front end.

JSON reports go to stdout (or --out); a one-line human summary goes to
stderr.  Exit codes: 0 command completed with no theorem violation, 2
hypotheses not satisfied (verdict still emitted), 3 input validation
error, 4 degenerate-input certification failure, 1 internal error or
theorem violation.

Reports are byte-identical for identical argv and input files: keys are
sorted, seeds are echoed, and no timing or host information is embedded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .complex_core import load_family
from .errors import (
    ContractViolation,
    DegenerateInput,
    GenerationFailure,
    HellyTopoError,
    MalformedInput,
    ValidationError,
)
from .homology import CoefficientField, reduced_betti
from . import helly_engine as engine
from . import transversal_plane as tp

CONVENTION_NOTE = (
    "open sets are modeled as face-closed subcomplexes of a single ambient "
    "triangulation; polygons are open interiors with rational vertices"
)

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_HYPOTHESES_FAILED = 2
EXIT_VALIDATION = 3
EXIT_DEGENERATE = 4

ENGINE_VERIFY_TAGS = set(engine.ENGINE_THEOREMS)
TRANSVERSAL_VERIFY_TAGS = set(tp.TRANSVERSAL_THEOREMS)


def _envelope(command: str, params: dict, result: dict) -> dict:
    return {
        "tool": "helly-topo",
        "version": __version__,
        "command": command,
        "params": params,
        "convention": CONVENTION_NOTE,
        "result": result,
    }


def _emit(report: dict, out_path) -> None:
    text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _say(message: str) -> None:
    print(message, file=sys.stderr)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="helly-topo",
        description=(
            "Verify homological Helly-type intersection criteria on simplicial "
            "families and compute transversal-line spaces of planar convex polygons."
        ),
    )
    parser.add_argument("--version", action="version", version=f"helly-topo {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_hom = sub.add_parser("homology", help="reduced Betti vector of one family member")
    p_hom.add_argument("--in", dest="infile", required=True)
    p_hom.add_argument("--member", required=False, help="member label (optional for a single-member family)")
    p_hom.add_argument("--field", choices=["gf2", "q"], default="gf2")
    p_hom.add_argument("--out")

    p_ver = sub.add_parser("verify", help="check a theorem's hypotheses and conclusion")
    p_ver.add_argument(
        "theorem",
        choices=sorted(ENGINE_VERIFY_TAGS | TRANSVERSAL_VERIFY_TAGS),
    )
    p_ver.add_argument("--in", dest="infile", required=True)
    p_ver.add_argument("--field", choices=["gf2", "q"], default="gf2")
    p_ver.add_argument("--d", type=int, default=2)
    p_ver.add_argument("--lambda", dest="lam", type=int, default=0)
    p_ver.add_argument("--out")

    p_sweep = sub.add_parser("sweep", help="randomized hypothesis/conclusion tallies")
    p_sweep.add_argument(
        "--theorem",
        required=True,
        choices=sorted(ENGINE_VERIFY_TAGS | TRANSVERSAL_VERIFY_TAGS),
    )
    p_sweep.add_argument("--trials", type=int, default=100)
    p_sweep.add_argument("--seed", type=int, default=0)
    p_sweep.add_argument("--field", choices=["gf2", "q"], default="gf2")
    p_sweep.add_argument("--grid", type=int, default=12)
    p_sweep.add_argument("--m", type=int, default=None)
    p_sweep.add_argument("--growth", type=int, default=40)
    p_sweep.add_argument("--d", type=int, default=2)
    p_sweep.add_argument("--lambda", dest="lam", type=int, default=0)
    p_sweep.add_argument("--out")

    p_tr = sub.add_parser("transversal", help="exact transversal-space computations")
    p_tr.add_argument("action", choices=["profile", "components"])
    p_tr.add_argument("--in", dest="infile", required=True)
    p_tr.add_argument("--resolution", type=int, default=None,
                      help="also run the sampling oracle at this resolution (components only)")
    p_tr.add_argument("--out")
    return parser


def _cmd_homology(args) -> int:
    family = load_family(args.infile)
    if args.member is None:
        if family.size != 1:
            raise ValidationError("--member is required for multi-member families")
        member = family.members[0]
        label = family.labels[0]
    else:
        member = family.member_by_label(args.member)
        label = args.member
    field = CoefficientField.from_tag(args.field)
    bv = reduced_betti(member, field)
    report = _envelope(
        "homology",
        {"in": args.infile, "member": label, "field": args.field},
        bv.to_dict(),
    )
    _emit(report, args.out)
    _say(f"homology of {label}: {bv.to_dict()['betti']} (nonempty={bv.nonempty})")
    return EXIT_OK


def _cmd_verify(args) -> int:
    tag = args.theorem
    params = {"in": args.infile, "theorem": tag, "field": args.field}
    if tag in ENGINE_VERIFY_TAGS:
        family = load_family(args.infile)
        field = CoefficientField.from_tag(args.field)
        if tag in ("prop-a", "thm-b"):
            params["lambda"] = args.lam
        if tag in ("helly", "breen"):
            params["d"] = args.d
        verdict = engine.run_verifier(tag, family, field, d=args.d, lam=args.lam)
        hyp, concl = verdict.hypotheses_hold, verdict.conclusion_holds
        result = verdict.to_dict()
    else:
        family = tp.load_polygon_family(args.infile)
        if tag == "lemma-311":
            if family.size != 1:
                raise ValidationError("lemma-311 needs a family with exactly 1 member")
            lv = tp.verify_lemma_311_plane(family.members[0])
            hyp, concl, result = True, lv.passed, lv.to_dict()
        elif tag == "lemma-312":
            if family.size != 2:
                raise ValidationError("lemma-312 needs a family with exactly 2 members")
            lv = tp.verify_lemma_312_plane(family.members[0], family.members[1])
            hyp, concl, result = True, lv.passed, lv.to_dict()
        elif tag == "lemma-313":
            if family.size != 3:
                raise ValidationError(
                    "lemma-313 needs a family with exactly 3 members "
                    "(the first two form the disjoint pair)"
                )
            lv = tp.verify_lemma_313(family.members[0], family.members[1], family.members[2])
            hyp, concl, result = True, lv.passed, lv.to_dict()
        else:  # thm-321
            verdict = tp.verify_theorem_321(family)
            hyp, concl, result = verdict.hypotheses_hold, verdict.conclusion_holds, verdict.to_dict()
    _emit(_envelope("verify", params, result), args.out)
    if not hyp:
        _say(f"{tag}: hypotheses not satisfied")
        return EXIT_HYPOTHESES_FAILED
    if not concl:
        _say(f"{tag}: THEOREM VIOLATION - hypotheses hold but the conclusion fails")
        return EXIT_INTERNAL
    _say(f"{tag}: hypotheses hold and the conclusion holds")
    return EXIT_OK


def _cmd_sweep(args) -> int:
    tag = args.theorem
    if tag in ENGINE_VERIFY_TAGS:
        field = CoefficientField.from_tag(args.field)
        m = args.m if args.m is not None else 4
        report = engine.sweep(
            tag,
            args.trials,
            grid_n=args.grid,
            m=m,
            growth_steps=args.growth,
            seed=args.seed,
            field=field,
            d=args.d,
            lam=args.lam,
        )
    else:
        m = args.m if args.m is not None else 6
        report = tp.sweep_transversal(tag, args.trials, seed=args.seed, m=m)
    data = report.to_dict()
    _emit(_envelope("sweep", {"theorem": tag}, data), args.out)
    counts = data["counts"]
    _say(
        f"{tag} sweep: {counts['hypotheses_satisfied']}/{counts['total']} satisfied, "
        f"{counts['conclusion_violated']} violations"
    )
    return EXIT_OK if counts["conclusion_violated"] == 0 else EXIT_INTERNAL


def _cmd_transversal(args) -> int:
    family = tp.load_polygon_family(args.infile)
    if args.action == "profile":
        prof = tp.transversal_profile(family)
        pieces = []
        for upper, lower, panel in zip(prof.upper_pieces(), prof.lower_pieces(), prof.panels):
            pieces.append(
                {
                    "start_angle": panel.start_angle,
                    "end_angle": panel.end_angle,
                    "upper": {
                        "member": panel.upper_member,
                        "a": str(upper.a),
                        "b": str(upper.b),
                    },
                    "lower": {
                        "member": panel.lower_member,
                        "a": str(lower.a),
                        "b": str(lower.b),
                    },
                    "feasible": panel.feasible_sign > 0,
                }
            )
        result = {
            "panels": pieces,
            "breakpoints": list(prof.breakpoints),
            "identification": "(theta, p) ~ (theta + pi, -p)",
        }
        _emit(_envelope("transversal-profile", {"in": args.infile}, result), args.out)
        _say(f"profile with {len(pieces)} panels")
        return EXIT_OK
    summary = tp.components(tp.transversal_profile(family))
    result = summary.to_dict()
    params = {"in": args.infile}
    if args.resolution is not None:
        oracle = tp.sample_oracle(family, args.resolution)
        result = {
            "exact": result,
            "oracle": oracle.to_dict(),
            "counts_agree": summary.component_count == oracle.component_count
            and summary.full_circle == oracle.full_circle,
        }
        params["resolution"] = args.resolution
    _emit(_envelope("transversal-components", params, result), args.out)
    _say(
        f"components: {summary.component_count} "
        f"(full_circle={summary.full_circle})"
    )
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "homology":
            return _cmd_homology(args)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "sweep":
            return _cmd_sweep(args)
        if args.command == "transversal":
            return _cmd_transversal(args)
        raise ContractViolation(f"unknown command {args.command!r}")
    except (ValidationError, MalformedInput, ContractViolation) as exc:
        _say(f"input error: {exc}")
        return EXIT_VALIDATION
    except OSError as exc:
        _say(f"input error: {exc}")
        return EXIT_VALIDATION
    except DegenerateInput as exc:
        _say(f"degenerate input: {exc}")
        return EXIT_DEGENERATE
    except GenerationFailure as exc:
        _say(f"generation failure: {exc}")
        return EXIT_INTERNAL
    except HellyTopoError as exc:
        _say(f"internal error: {exc}")
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
