"""Command-line front end.

Reads a JSON problem description (stdin or --input), dispatches to the
library, and prints a machine-readable report on stdout.  Exponents are
printed as reduced rationals in [0, ell) and scalars as "q^{p/q}"
strings; no value is ever rendered through floating point.

Exit codes:
  0  report produced (verdict commands exit 0 on clean negative verdicts)
  2  malformed input: bad JSON, bad rationals, unknown Dynkin type,
     dimension mismatches, an odd generator that is not half-odd
  3  hypothesis violated: ell < 3, r <= max gcd(d_i, r), or a non-ADE
     series passed to the triplet command
  4  a lattice generator (or the odd generator) is outside the
     simple-current lattice
  5  the command needs a spec the input fails to provide: the
     (super)commutativity check fails, the census is infinite, or a
     weight is not local
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .algebra import AlgebraSpec, check_commutative, check_supercommutative
from .cartan import (
    CartanDatum,
    ExponentModL,
    Weight,
    build_cartan_datum,
    weight,
)
from .errors import (
    AlgebraInvalid,
    HypothesisViolated,
    InfiniteCensus,
    NonADESeries,
    NotInSimpleCurrentLattice,
    NotLocal,
    NotSubgroup,
    UprollError,
)
from .extensions import (
    BqSpec,
    ExtWeight,
    bq_check_commutative,
    bq_equivalent,
    bq_is_local,
    bq_monodromy_exponent,
    bq_ribbon_verdict,
    bq_transparent,
    bq_twist_exponent,
    triplet_report,
)
from .localmod import (
    check_ribbon,
    monodromy_exponent,
    muger_center,
    simple_census,
    twist_exponent,
)
from .oracle import brute_census_order, brute_cocycle, brute_commutativity


def _frac_str(value) -> str:
    return str(Fraction(value))


def _weight_json(w: Weight) -> list[str]:
    return [_frac_str(c) for c in w.coords]


def _exponent_json(e: ExponentModL) -> dict:
    return {"exponent": _frac_str(e.canonical), "scalar": e.scalar_str()}


def _load_document(args) -> dict:
    if args.input:
        with open(args.input, "r", encoding="utf-8") as handle:
            doc = json.load(handle)
    else:
        doc = json.load(sys.stdin)
    if not isinstance(doc, dict):
        raise ValueError("problem document must be a JSON object")
    return doc


def _doc_datum(doc: dict) -> CartanDatum:
    return build_cartan_datum(str(doc["series"]), int(doc["rank"]), int(doc["ell"]))


def _doc_row(row, rank: int) -> Weight:
    if not isinstance(row, list) or len(row) != rank:
        raise ValueError(f"weight row must be a list of {rank} rationals")
    return weight([Fraction(str(x)) for x in row])


def _doc_spec(doc: dict) -> tuple[CartanDatum, AlgebraSpec]:
    datum = _doc_datum(doc)
    rows = doc.get("lattice", [])
    gens = [_doc_row(row, datum.rank) for row in rows]
    mu = None
    if doc.get("mu") is not None:
        mu = _doc_row(doc["mu"], datum.rank)
    return datum, AlgebraSpec(datum, gens, mu)


def _witness_json(witness) -> dict:
    return {
        "kind": witness.kind,
        "i": witness.i,
        "j": witness.j,
        "value": _frac_str(witness.value),
    }


def _census_json(census) -> dict:
    return {
        "finite": census.finite,
        "order": census.order,
        "free_rank": census.free_rank,
        "invariant_factors": list(census.invariant_factors),
        "complement_dimension": census.complement_dimension,
        "reps": [_weight_json(r) for r in census.reps] if census.reps else None,
    }


def _cmd_datum(args) -> dict:
    if args.series is not None:
        datum = build_cartan_datum(args.series, args.rank, args.ell)
    else:
        datum = _doc_datum(_load_document(args))
    return {
        "series": datum.series,
        "rank": datum.rank,
        "ell": datum.ell,
        "r": datum.r,
        "symmetrizers": list(datum.symmetrizers),
        "r_i": list(datum.r_i),
        "cartan": [list(row) for row in datum.cartan],
        "gram": [[_frac_str(x) for x in row] for row in datum.gram],
        "rho": _weight_json(datum.rho),
    }


def _cmd_check_algebra(args) -> dict:
    _, spec = _doc_spec(_load_document(args))
    if spec.mu is None:
        verdict = check_commutative(spec)
        return {
            "commutative": verdict.commutative,
            "witnesses": [_witness_json(w) for w in verdict.witnesses],
        }
    verdict = check_supercommutative(spec)
    return {
        "supercommutative": verdict.supercommutative,
        "witnesses": [_witness_json(w) for w in verdict.witnesses],
    }


def _twist_rows(datum, census) -> list[dict]:
    rows = []
    for rep in census.reps or ():
        e = twist_exponent(datum, rep)
        rows.append({"rep": _weight_json(rep), **_exponent_json(e)})
    return rows


def _census_tsv(datum, census) -> str:
    lines = []
    for rep in census.reps or ():
        e = twist_exponent(datum, rep)
        coords = ",".join(_weight_json(rep))
        lines.append(f"{coords}\t{_frac_str(e.canonical)}\t{e.scalar_str()}")
    return "\n".join(lines)


def _cmd_census(args):
    datum, spec = _doc_spec(_load_document(args))
    census = simple_census(spec)
    if args.format == "tsv":
        if not census.finite:
            raise InfiniteCensus("tsv output needs a finite census")
        return _census_tsv(datum, census)
    return _census_json(census)


def _cmd_twists(args):
    datum, spec = _doc_spec(_load_document(args))
    census = simple_census(spec)
    if not census.finite:
        raise InfiniteCensus("twist table needs a finite census")
    if args.format == "tsv":
        return _census_tsv(datum, census)
    out = _census_json(census)
    out["twists"] = _twist_rows(datum, census)
    return out


def _cmd_monodromy(args) -> dict:
    doc = _load_document(args)
    datum = _doc_datum(doc)
    pairs = []
    if doc.get("pairs"):
        for item in doc["pairs"]:
            if not isinstance(item, list) or len(item) != 2:
                raise ValueError("each monodromy pair must be a list of two rows")
            a = _doc_row(item[0], datum.rank)
            b = _doc_row(item[1], datum.rank)
            pairs.append((a, b))
    else:
        _, spec = _doc_spec(doc)
        census = simple_census(spec)
        if not census.finite:
            raise InfiniteCensus("monodromy table needs a finite census")
        reps = census.reps
        pairs = [(a, b) for i, a in enumerate(reps) for b in reps[i:]]
    return {
        "pairs": [
            {
                "a": _weight_json(a),
                "b": _weight_json(b),
                **_exponent_json(monodromy_exponent(datum, a, b)),
            }
            for a, b in pairs
        ]
    }


def _cmd_ribbon(args) -> dict:
    _, spec = _doc_spec(_load_document(args))
    verdict = check_ribbon(spec)
    return {
        "verdict": verdict.status,
        "witnesses": [
            {"kind": kind, "index": idx, "value": _frac_str(val)}
            for kind, idx, val in verdict.witnesses
        ],
    }


def _cmd_muger(args) -> dict:
    _, spec = _doc_spec(_load_document(args))
    report = muger_center(spec)
    return {
        "transparent_reps": [_weight_json(w) for w in report.transparent_reps],
        "trivial": report.trivial,
        "hypothesis_ok": report.hypothesis_ok,
    }


def _cmd_triplet(args) -> dict:
    report = triplet_report(args.series, args.rank, args.r)
    muger = report.report.muger
    return {
        "series": report.series,
        "rank": report.rank,
        "r": report.r,
        "ell": report.ell,
        "commutative": report.commutative.commutative,
        "order": report.report.census.order,
        "expected_order": report.expected_order,
        "match": report.match,
        "invariant_factors": list(report.report.census.invariant_factors),
        "ribbon": report.report.ribbon.status,
        "muger": {
            "transparent_reps": [_weight_json(w) for w in muger.transparent_reps],
            "trivial": muger.trivial,
            "hypothesis_ok": muger.hypothesis_ok,
        },
        "twists": _twist_rows(
            build_cartan_datum(report.series, report.rank, report.ell),
            report.report.census,
        ),
    }


def _cmd_bq(args) -> dict:
    doc = _load_document(args)
    datum = _doc_datum(doc)
    a_squared = None
    if doc.get("heisenberg") is not None:
        a_squared = Fraction(str(doc["heisenberg"]["a_squared"]))
    gens = None
    if doc.get("lattice"):
        gens = [_doc_row(row, datum.rank) for row in doc["lattice"]]
    spec = BqSpec(datum, gens, a_squared)
    out = {
        "a_squared": _frac_str(spec.a_squared),
        "commutative": bq_check_commutative(spec),
        "ribbon": bq_ribbon_verdict(datum),
    }
    ext_weights = []
    for item in doc.get("ext_weights", []):
        ext_weights.append(
            ExtWeight(
                _doc_row(item["qg"], datum.rank),
                _doc_row(item["fock"], datum.rank),
            )
        )
    standard = spec.is_full_weight_lattice and spec.a_squared == Fraction(-1, datum.r)
    rows = []
    for w in ext_weights:
        row = {
            "qg": _weight_json(w.qg),
            "fock": _weight_json(w.fock_tilde),
            "twist": _exponent_json(bq_twist_exponent(datum, w)),
            "local": None,
            "transparent": None,
        }
        if standard:
            row["local"] = bq_is_local(spec, w)
            if row["local"]:
                row["transparent"] = bq_transparent(spec, w, args.probes)
        rows.append(row)
    pairs = []
    for i in range(len(ext_weights)):
        for j in range(i + 1, len(ext_weights)):
            entry = {
                "i": i,
                "j": j,
                "monodromy": _exponent_json(
                    bq_monodromy_exponent(datum, ext_weights[i], ext_weights[j])
                ),
                "equivalent": None,
            }
            if standard and rows[i]["local"] and rows[j]["local"]:
                entry["equivalent"] = bq_equivalent(
                    spec, ext_weights[i], ext_weights[j]
                )
            pairs.append(entry)
    out["weights"] = rows
    out["pairs"] = pairs
    return out


def _cmd_oracle(args) -> dict:
    _, spec = _doc_spec(_load_document(args))
    out = {
        "box": args.box,
        "brute_commutativity": brute_commutativity(spec, args.box),
        "brute_cocycle": brute_cocycle(spec, args.box),
        "brute_census_order": None,
    }
    try:
        out["brute_census_order"] = brute_census_order(spec)
    except (InfiniteCensus, AlgebraInvalid):
        pass
    return out


_COMMANDS = {
    "datum": _cmd_datum,
    "check-algebra": _cmd_check_algebra,
    "census": _cmd_census,
    "twists": _cmd_twists,
    "monodromy": _cmd_monodromy,
    "ribbon": _cmd_ribbon,
    "muger": _cmd_muger,
    "triplet": _cmd_triplet,
    "bq": _cmd_bq,
    "oracle": _cmd_oracle,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="uproll",
        description="Exact reports on lattice simple-current extension algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--input", default=None, help="problem JSON file (default stdin)")
        p.add_argument("--format", choices=("json", "tsv"), default="json")
        p.add_argument("--box", type=int, default=3, help="oracle coefficient bound")
        p.add_argument("--probes", type=int, default=8, help="transparency probe count")
        if name in ("datum", "triplet"):
            p.add_argument("--series", default=None)
            p.add_argument("--rank", type=int, default=None)
            if name == "triplet":
                p.add_argument("--r", type=int, default=None)
            else:
                p.add_argument("--ell", type=int, default=None)
    return parser


def run(argv=None) -> int:
    """Entry point returning the process exit code."""
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "triplet" and (
        args.series is None or args.rank is None or args.r is None
    ):
        print("triplet needs --series, --rank and --r", file=sys.stderr)
        return 2
    try:
        result = _COMMANDS[args.command](args)
    except (HypothesisViolated, NonADESeries) as exc:
        print(f"hypothesis violated: {exc}", file=sys.stderr)
        return 3
    except NotInSimpleCurrentLattice as exc:
        print(f"not in the simple-current lattice: {exc}", file=sys.stderr)
        return 4
    except (AlgebraInvalid, InfiniteCensus, NotLocal, NotSubgroup) as exc:
        print(f"spec does not meet the command's precondition: {exc}", file=sys.stderr)
        return 5
    except (UprollError, ValueError, KeyError, TypeError, OSError) as exc:
        print(f"malformed input: {exc}", file=sys.stderr)
        return 2
    if isinstance(result, str):
        print(result)
    else:
        print(json.dumps(result, indent=2))
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
