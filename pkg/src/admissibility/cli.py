"""Command line: ``field inspect``, ``decide`` and ``corpus``."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from importlib import resources
from typing import Optional

from .engine import Budgets, ConsistencyError, Status, decide, replay
from .groups.group import (
    FiniteGroup,
    GroupError,
    build_from_metacyclic,
    build_from_permutations,
    direct_product,
)
from .numberfield import (
    FieldError,
    IndexObstruction,
    NumberField,
    decompose_prime,
    is_galois,
)
from .algebra.poly import Poly

SCHEMA = 1

EXIT_OK, EXIT_CORPUS, EXIT_PARSE, EXIT_OBSTRUCTION, EXIT_UNDETERMINED = 0, 1, 2, 3, 4


class QueryParseError(ValueError):
    """Bad query input; ``where`` says which part failed."""

    def __init__(self, where, msg):
        self.where = where
        super().__init__(f"{where}: {msg}")


# -- query specs ------------------------------------------------------------------------

@dataclass
class QuerySpec:
    field: list  # ascending integer coefficients
    group: dict  # {"metacyclic": {...}} | {"permutations": [...]} | {"product": [...]}
    mode: str = "admissible"
    budgets: dict = field(default_factory=dict)

    def to_json(self):
        out = {"field": list(self.field), "group": self.group, "mode": self.mode}
        if self.budgets:
            out["budgets"] = dict(self.budgets)
        return out

    @classmethod
    def from_json(cls, obj):
        return cls(list(obj["field"]), obj["group"], obj.get("mode", "admissible"),
                   dict(obj.get("budgets", {})))

    def budget_obj(self):
        b = Budgets()
        return Budgets(self.budgets.get("order", b.order),
                       self.budgets.get("demuskin", b.demuskin),
                       self.budgets.get("demuskin_order", b.demuskin_order))

    def build_field(self):
        return build_field(self.field)

    def build_group(self):
        return build_group(self.group, self.budget_obj().order)


def parse_int_list(text, where):
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t != ""]
    except ValueError:
        bad = next(t for t in text.split(",") if not t.strip().lstrip("-").isdigit())
        pos = text.index(bad)
        raise QueryParseError(where, f"not an integer at position {pos}: {bad!r}") from None


def poly_from_cli(text):
    """--poly lists coefficients from the leading one down: '1,0,-2' is x^2 - 2."""
    coeffs = parse_int_list(text, "--poly")
    if not coeffs:
        raise QueryParseError("--poly", "empty coefficient list")
    return list(reversed(coeffs))


def build_field(ascending):
    try:
        return NumberField(Poly([int(c) for c in ascending]))
    except FieldError as exc:
        raise QueryParseError("field", str(exc)) from None


def build_group(spec, budget):
    try:
        if "metacyclic" in spec:
            m = spec["metacyclic"]
            return build_from_metacyclic(m["e"], m["f"], m["i"], m["q"], budget=budget)
        if "permutations" in spec:
            return build_from_permutations(list(spec["permutations"]), budget=budget)
        if "product" in spec:
            parts = [build_group(s, budget) for s in spec["product"]]
            return direct_product(*parts, budget=budget)
    except GroupError as exc:
        raise QueryParseError("group", str(exc)) from None
    except (KeyError, TypeError) as exc:
        raise QueryParseError("group", f"malformed group spec {spec!r}: {exc}") from None
    raise QueryParseError("group", f"unknown group kind in {spec!r}")


def metacyclic_spec(text):
    vals = parse_int_list(text, "--metacyclic")
    if len(vals) != 4:
        raise QueryParseError("--metacyclic", f"expected e,f,i,q, got {text!r}")
    return {"metacyclic": dict(zip("efiq", vals))}


def product_spec(text):
    """'perm:(1 2 3);meta:4,2,0,3' -- factors separated by ';', a perm factor
    may list several generators separated by '|'."""
    parts = []
    for k, piece in enumerate(p.strip() for p in text.split(";")):
        if not piece:
            continue
        kind, _, body = piece.partition(":")
        kind = kind.strip().lower()
        if kind == "perm":
            parts.append({"permutations": [g.strip() for g in body.split("|") if g.strip()]})
        elif kind in ("meta", "metacyclic"):
            parts.append(metacyclic_spec(body))
        else:
            raise QueryParseError("--product", f"factor {k}: unknown kind {kind!r}")
    if not parts:
        raise QueryParseError("--product", "no factors")
    return {"product": parts}


def group_spec_from_args(args):
    given = [x for x in (args.metacyclic, args.perm, args.product) if x]
    if len(given) != 1:
        raise QueryParseError("group", "give exactly one of --metacyclic, --perm, --product")
    if args.metacyclic:
        return metacyclic_spec(args.metacyclic)
    if args.perm:
        return {"permutations": list(args.perm)}
    return product_spec(args.product)


# -- running queries ---------------------------------------------------------------------

def run_query(q: QuerySpec, do_replay=False):
    K = q.build_field()
    G = q.build_group()
    b = q.budget_obj()
    v = decide(G, K, q.mode, b)
    out = {"schema": SCHEMA}
    out.update(v.to_json())
    out["replay"] = False
    if do_replay:
        bad = replay(v.certificate, G, K, b)
        out["replay"] = not bad
        if bad:
            out["replay_failures"] = [list(map(str, x)) for x in bad]
    return v, out


def _dump(obj, compact):
    if compact:
        return json.dumps(obj, sort_keys=True, separators=(",", ":"))
    return json.dumps(obj, sort_keys=True, indent=2)


def cmd_field_inspect(args):
    K = build_field(poly_from_cli(args.poly))
    primes = parse_int_list(args.primes, "--primes") if args.primes else []
    out = {"schema": SCHEMA, "poly": [int(c) for c in K.defining_poly.coeffs],
           "degree": K.degree, "disc_defpoly": int(K.disc_defpoly),
           "galois": is_galois(K)}
    dec = {}
    for p in primes:
        d = decompose_prime(K, p, dedekind_only=args.dedekind_only)
        dec[str(p)] = {"pairs": [list(x) for x in d.pairs], "method": d.method}
    out["primes"] = dec
    print(_dump(out, args.json))
    return EXIT_OK


def cmd_decide(args):
    budgets = {}
    if args.budget_order is not None:
        budgets["order"] = args.budget_order
    if args.budget_demuskin is not None:
        budgets["demuskin"] = args.budget_demuskin
    q = QuerySpec(poly_from_cli(args.poly), group_spec_from_args(args), args.mode, budgets)
    v, out = run_query(q, args.replay)
    print(_dump(out, args.json))
    if args.replay and not out["replay"]:
        return EXIT_CORPUS
    if v.status is Status.UNDETERMINED:
        cause = str(v.certificate.witnesses.get("cause", ""))
        if cause.startswith("IndexObstruction"):
            return EXIT_OBSTRUCTION
        if args.strict:
            return EXIT_UNDETERMINED
    return EXIT_OK


def load_corpus(path=None):
    if path:
        with open(path) as fh:
            return json.load(fh)
    text = resources.files("admissibility").joinpath("data/corpus.json").read_text()
    return json.loads(text)


def run_corpus(cases, flt=None, do_replay=True):
    rows = []
    for idx, case in enumerate(cases):
        if flt and not _matches(case, flt):
            continue
        q = QuerySpec.from_json(case["query"])
        try:
            v, out = run_query(q, do_replay)
            status, theorem = out["status"], out["theorem"]
            replay_ok = out["replay"] if do_replay else None
        except ConsistencyError as exc:
            status, theorem, replay_ok = "ConsistencyError", str(exc), False
        ok = status == case["expected"]
        if "theorem" in case:
            ok = ok and theorem == case["theorem"]
        if do_replay and status != "Undetermined":
            ok = ok and bool(replay_ok)
        rows.append({"index": idx, "id": case["id"], "expected": case["expected"],
                     "status": status, "theorem": theorem, "replay": replay_ok, "pass": ok})
    return rows


def _matches(case, flt):
    flt = flt.lower()
    return flt in case["id"].lower() or any(flt in t.lower() for t in case.get("tags", []))


def cmd_corpus(args):
    cases = load_corpus(args.corpus)
    rows = run_corpus(cases, args.filter, not args.no_replay)
    failed = [r for r in rows if not r["pass"]]
    if args.json:
        print(_dump({"schema": SCHEMA, "results": rows, "passed": len(rows) - len(failed),
                     "failed": len(failed)}, True))
    else:
        w = max([len(r["id"]) for r in rows] + [4])
        print(f"{'case':<{w}}  {'expected':<20} {'actual':<20} theorem")
        for r in rows:
            mark = "ok  " if r["pass"] else "FAIL"
            print(f"{r['id']:<{w}}  {r['expected']:<20} {r['status']:<20} {r['theorem']}  {mark}")
        print(f"{len(rows) - len(failed)}/{len(rows)} passed")
    return EXIT_CORPUS if failed else EXIT_OK


# -- argument parsing ------------------------------------------------------------------

def build_parser():
    ap = argparse.ArgumentParser(prog="admissibility",
                                 description="Admissibility of finite groups over number fields.")
    sub = ap.add_subparsers(dest="command", required=True)

    fp = sub.add_parser("field", help="number field utilities")
    fsub = fp.add_subparsers(dest="field_command", required=True)
    ins = fsub.add_parser("inspect", help="degree, discriminant, Galois flag, prime splitting")
    ins.add_argument("--poly", required=True, help="coefficients, leading first: 1,0,-2")
    ins.add_argument("--primes", default="", help="comma-separated primes to decompose")
    ins.add_argument("--galois", action="store_true", help="report the Galois flag (always on)")
    ins.add_argument("--dedekind-only", action="store_true",
                     help="fail with exit 3 instead of splitting a maximal order")
    ins.add_argument("--json", action="store_true", help="compact JSON")
    ins.set_defaults(func=cmd_field_inspect)

    dp = sub.add_parser("decide", help="decide admissibility of G over K")
    dp.add_argument("--poly", required=True)
    dp.add_argument("--metacyclic", help="e,f,i,q")
    dp.add_argument("--perm", action="append", help="a generator in cycle notation (repeatable)")
    dp.add_argument("--product", help="'perm:(1 2 3);meta:4,2,0,3'")
    dp.add_argument("--mode", choices=["admissible", "tame"], default="admissible")
    dp.add_argument("--strict", action="store_true", help="exit 4 on Undetermined")
    dp.add_argument("--replay", action="store_true", help="re-verify every hypothesis")
    dp.add_argument("--json", action="store_true", help="compact JSON")
    dp.add_argument("--budget-order", type=int)
    dp.add_argument("--budget-demuskin", type=int)
    dp.set_defaults(func=cmd_decide)

    cp = sub.add_parser("corpus", help="run the regression corpus")
    cp.add_argument("--filter", help="substring of case id or tag")
    cp.add_argument("--json", action="store_true")
    cp.add_argument("--corpus", help="path to a corpus file (default: bundled)")
    cp.add_argument("--no-replay", action="store_true")
    cp.set_defaults(func=cmd_corpus)
    return ap


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except QueryParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except IndexObstruction as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_OBSTRUCTION


if __name__ == "__main__":
    sys.exit(main())
