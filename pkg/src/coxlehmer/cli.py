"""Command line front end.

    coxlehmer code     --type A --rank 3 --word "s2 s1 s3 s2"
    coxlehmer hpoly    --type A --rank 3 --perm 3412 --route all
    coxlehmer complex  --type H3 [--word ...]
    coxlehmer classify --type H3 --what unimodal
    coxlehmer verify   catalan --n 5

Exit status: 0 success, 1 verification failure, 2 usage or parse error.
All JSON output uses exact integers.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path

from . import intervals
from .codes import dual_code, shared_standard_code
from .coxeter import CACHE_FORMAT, BruhatPoset, load_poset, save_poset, shared_poset
from .verify import SUITES, run_suite


class CLIError(Exception):
    """Usage-level problem; reported on stderr with exit status 2."""


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="coxlehmer",
        description="Lehmer codes, Bruhat intervals and their complexes "
                    "for finite Coxeter groups of types A, B, D, H3, I2(m).")
    p.add_argument("--cache", default=os.environ.get("COXLEHMER_CACHE"),
                   help="directory for the on-disk poset cache (opt-in)")
    sub = p.add_subparsers(dest="command", required=True)

    def add_system(sp, with_element=True):
        sp.add_argument("--type", dest="label", required=True,
                        choices=["A", "B", "D", "H3", "I2"])
        sp.add_argument("--rank", type=int, help="rank for types A, B, D")
        sp.add_argument("--m", type=int, help="m for type I2(m)")
        sp.add_argument("--code", default="standard",
                        choices=["standard", "dual", "variant"])
        sp.add_argument("--limit", type=int, default=10 ** 6,
                        help="enumeration size limit")
        if with_element:
            sp.add_argument("--word", help='generator word like "s2 s1 s3 s2"; "" is e')
            sp.add_argument("--perm", help="one-line element, e.g. 3412 or 2,-1,3")

    sp = sub.add_parser("code", help="print the code vector and length of an element")
    add_system(sp)
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--dump-table", action="store_true",
                    help="emit the whole code as a JSON table")

    sp = sub.add_parser("hpoly", help="interval rank generating function")
    add_system(sp)
    sp.add_argument("--route", default="all",
                    choices=[*intervals.ROUTES, "all"])
    sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("complex", help="interval or group complex as JSON")
    add_system(sp)

    sp = sub.add_parser("classify", help="principal/unimodal/smooth/palindromic listings")
    add_system(sp, with_element=False)
    sp.add_argument("--what", default="unimodal",
                    choices=["principal", "unimodal", "smooth", "pal"])

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("suite", help=f"one of: {', '.join([*SUITES, 'all'])}")
    sp.add_argument("--n", type=int, help="size bound where the suite takes one")
    sp.add_argument("--max-rank", type=int, dest="max_rank",
                    help="only systems up to this rank")
    sp.add_argument("--seed", type=int, default=2024)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--out", help="also write the JSON report to this file")
    sp.add_argument("--json", action="store_true")
    return p


def _get_poset(args) -> BruhatPoset:
    label, rank, m = args.label, args.rank, args.m
    if label == "I2" and m is None:
        raise CLIError("type I2 needs --m")
    if label in ("A", "B", "D") and rank is None:
        raise CLIError(f"type {label} needs --rank")
    if args.cache:
        name = f"{label}{rank if rank is not None else ''}"
        if m is not None:
            name += f"m{m}"
        path = Path(args.cache) / f"{name}-v{CACHE_FORMAT}.json"
        if path.exists():
            try:
                return load_poset(path, limit=args.limit)
            except ValueError:
                pass  # stale or foreign; rebuild below
        poset = shared_poset(label, rank, m, args.limit)
        path.parent.mkdir(parents=True, exist_ok=True)
        save_poset(poset, path)
        return poset
    return shared_poset(label, rank, m, args.limit)


def _get_code(args):
    variant = args.code == "variant"
    code = shared_standard_code(args.label, args.rank, args.m, variant=variant)
    if args.code == "dual":
        code = dual_code(code)
    return code


def _parse_word(poset: BruhatPoset, text: str) -> int:
    word = []
    for pos, tok in enumerate(text.split(), start=1):
        if not tok.startswith("s") or not tok[1:].isdigit():
            raise CLIError(f"cannot read generator {tok!r} at position {pos}; "
                           f"expected s<index> like s2")
        try:
            word.append(poset.system.gen_index(int(tok[1:])))
        except ValueError as exc:
            raise CLIError(f"at position {pos}: {exc}") from None
    return poset.apply_word(word)


def _parse_perm(poset: BruhatPoset, text: str) -> int:
    label = poset.system.label
    if label not in ("A", "B", "D"):
        raise CLIError(f"--perm applies to types A, B, D; use --word for {label}")
    text = text.strip()
    if any(c in text for c in ", -"):
        try:
            vals = tuple(int(t) for t in text.replace(",", " ").split())
        except ValueError:
            raise CLIError(f"cannot read one-line element {text!r}") from None
    else:
        vals = tuple(int(c) for c in text)
    if vals not in poset.index:
        n = poset.system.rank + 1 if label == "A" else poset.system.rank
        raise CLIError(f"{vals} is not an element of {poset.system.describe()} "
                       f"(need a {'signed ' if label != 'A' else ''}permutation "
                       f"of 1..{n})")
    return poset.index[vals]


def _parse_element(poset: BruhatPoset, args) -> int | None:
    if getattr(args, "word", None) is not None and getattr(args, "perm", None) is not None:
        raise CLIError("give --word or --perm, not both")
    if getattr(args, "word", None) is not None:
        return _parse_word(poset, args.word)
    if getattr(args, "perm", None) is not None:
        return _parse_perm(poset, args.perm)
    return None


def cmd_code(args) -> int:
    poset = _get_poset(args)
    code = _get_code(args)
    if args.dump_table:
        print(json.dumps(code.to_json(), sort_keys=True))
        return 0
    w = _parse_element(poset, args)
    if w is None:
        raise CLIError("code needs an element: --word or --perm")
    vec = code.of(w)
    if args.json:
        print(json.dumps({"system": poset.system.describe(), "code_name": code.name,
                          "element": poset.render(w), "code": list(vec),
                          "length": poset.length[w]}))
    else:
        print(f"{code.name}({poset.render(w)}) = ({', '.join(map(str, vec))})")
        print(f"length = {poset.length[w]}")
    return 0


def cmd_hpoly(args) -> int:
    poset = _get_poset(args)
    code = _get_code(args)
    w = _parse_element(poset, args)
    if w is None:
        raise CLIError("hpoly needs an element: --word or --perm")
    routes = intervals.ROUTES if args.route == "all" else (args.route,)
    polys = {route: intervals.interval_poincare(w, code, route) for route in routes}
    agree = len({p for p in polys.values()}) == 1
    if args.json:
        print(json.dumps({"system": poset.system.describe(),
                          "element": poset.render(w),
                          "routes": {r: p.to_json() for r, p in polys.items()},
                          "agree": agree}))
    else:
        for route, p in polys.items():
            print(f"{route:8s} {p.text()}")
    if not agree:
        print("routes disagree", file=sys.stderr)
        return 1
    return 0


def cmd_complex(args) -> int:
    poset = _get_poset(args)
    w = _parse_element(poset, args)
    if w is None:
        sc = intervals.group_complex(poset)
    else:
        sc = intervals.interval_complex(w, _get_code(args))
    doc = sc.to_json()
    doc["facet_count"] = sc.facet_count
    print(json.dumps(doc))
    return 0


def cmd_classify(args) -> int:
    poset = _get_poset(args)
    code = _get_code(args)
    if args.what == "pal":
        polys = sorted(intervals.palindromic_intervals(poset),
                       key=lambda p: (p.degree, p.coeffs))
        doc = {"system": poset.system.describe(), "class": "pal",
               "count": len(polys), "polynomials": [p.to_json() for p in polys]}
    elif args.what == "smooth":
        if poset.system.label != "A":
            raise CLIError("--what smooth applies to type A only")
        from .schubert import smooth_permutations

        perms = smooth_permutations(poset.system.rank + 1)
        polys = sorted(intervals.interval_polynomials(
            poset, (poset.index[p] for p in perms)),
            key=lambda p: (p.degree, p.coeffs))
        doc = {"system": poset.system.describe(), "class": "smooth",
               "count": len(perms),
               "polynomials": [p.to_json() for p in polys]}
    else:
        elems = (intervals.principal_set(code) if args.what == "principal"
                 else intervals.unimodal_set(code))
        polys = sorted(intervals.interval_polynomials(poset, elems),
                       key=lambda p: (p.degree, p.coeffs))
        doc = {"system": poset.system.describe(), "code_name": code.name,
               "class": args.what, "count": len(elems),
               "elements": [poset.render(w) for w in elems],
               "codes": [list(code.of(w)) for w in elems],
               "polynomials": [p.to_json() for p in polys]}
    print(json.dumps(doc))
    return 0


def cmd_verify(args) -> int:
    opts = {"seed": args.seed, "jobs": args.jobs, "max_rank": args.max_rank}
    if args.n is not None:
        opts["n"] = args.n
    started = time.monotonic()
    report = run_suite(args.suite, **opts)
    seconds = round(time.monotonic() - started, 3)
    doc = report.to_json()
    doc.update({"suite": args.suite, "seconds": seconds, "seed": args.seed})
    if args.out:
        Path(args.out).write_text(json.dumps(doc, indent=1))
    if args.json:
        print(json.dumps(doc))
    else:
        status = "PASS" if report.passed else "FAIL"
        print(f"{args.suite}: {status} ({report.instances} checks, "
              f"{report.failures} failures, {seconds}s)")
        for w in report.witnesses:
            print(f"  witness: {w}")
        for note in report.notes:
            print(f"  note: {note}")
    return 0 if report.passed else 1


COMMANDS = {
    "code": cmd_code,
    "hpoly": cmd_hpoly,
    "complex": cmd_complex,
    "classify": cmd_classify,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except CLIError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
