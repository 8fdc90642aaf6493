"""Command-line surface: compute canonical forms, enumerate the monoid, and
run the verification suites.

Exit codes: 0 on success, 1 on verification failure, 2 on usage errors.
The alphabet size is always passed explicitly (-n) because the involution
and evacuation depend on the ambient alphabet, not just on the letters used.
"""

from __future__ import annotations

import argparse
import json
import sys

from .core import Alphabet, parse_word, render_word, theta
from .evacuation import (
    delta_direct,
    evac,
    evac_via_pyramid,
    jdt,
    skew_from_json,
)
from .monoid import (
    enumerate_styl,
    n_tableau,
    parse_partition,
    pi,
    render_letter,
)
from .tableaux import p_tableau
from .verify import run_suite

ENUMERATION_DEFAULT_CAP = 6
ENUMERATION_FORCE_CAP = 7

COMPUTE_KINDS = ("P", "N", "pi", "evac", "theta", "delta", "jdt")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="styl",
        description="Schensted combinatorics and the finite monoid of the column action",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="compute a canonical form")
    compute.add_argument("kind", choices=COMPUTE_KINDS)
    compute.add_argument("input", help="word, partition (a/bc or 13/28), or skew JSON")
    compute.add_argument("-n", type=int, required=True, help="alphabet size")
    compute.add_argument("--json", action="store_true", dest="as_json")

    enum = sub.add_parser("enumerate", help="enumerate the monoid")
    enum.add_argument("what", choices=("monoid", "idempotents", "jorder"))
    enum.add_argument("-n", type=int, required=True)
    enum.add_argument("--json", action="store_true", dest="as_json")
    enum.add_argument("--dot", action="store_true")
    enum.add_argument("--force", action="store_true", help="allow n = 7")

    verify = sub.add_parser("verify", help="run a verification suite")
    verify.add_argument(
        "suite",
        choices=(
            "bijection",
            "presentation",
            "evacuation",
            "graded",
            "syntactic",
            "confluence",
            "all",
        ),
    )
    verify.add_argument("-n", type=int, required=True)
    verify.add_argument("--maxlen", type=int, default=6)
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--force", action="store_true", help="allow n = 7")
    return parser


def _enumeration_cap(args) -> int:
    cap = ENUMERATION_FORCE_CAP if getattr(args, "force", False) else ENUMERATION_DEFAULT_CAP
    if args.n > cap:
        raise ValueError(
            f"n = {args.n} exceeds the enumeration ceiling {cap}"
            + ("" if cap == ENUMERATION_FORCE_CAP else " (use --force for 7)")
        )
    return cap


def _cmd_compute(args) -> int:
    alphabet = Alphabet(args.n)
    digits = any(ch.isdigit() for ch in args.input)
    if args.kind in ("P", "N", "pi", "theta"):
        word = parse_word(args.input)
        alphabet.check_word(word)
    if args.kind == "P":
        tableau = p_tableau(word)
        print(json.dumps(tableau.to_json()) if args.as_json else tableau.render())
    elif args.kind == "N":
        tableau = n_tableau(word)
        print(json.dumps(tableau.to_json()) if args.as_json else tableau.render())
    elif args.kind == "theta":
        image = theta(word, alphabet)
        print(json.dumps({"word": render_word(image)}) if args.as_json else (render_word(image) or "1"))
    elif args.kind == "pi":
        partition = pi(word)
        print(json.dumps(partition.to_json()) if args.as_json else partition.render(digits))
    elif args.kind == "delta":
        partition = parse_partition(args.input)
        for x in partition.ground():
            alphabet.check_letter(x)
        image = delta_direct(partition)
        print(json.dumps(image.to_json()) if args.as_json else image.render(digits))
    elif args.kind == "evac":
        partition = parse_partition(args.input)
        for x in partition.ground():
            alphabet.check_letter(x)
        chain = []
        current = partition
        while current.blocks:
            chain.append(current)
            current = delta_direct(current)
        result = evac(partition, alphabet)
        assert result == evac_via_pyramid(partition, alphabet)
        if args.as_json:
            print(
                json.dumps(
                    {
                        "deltaChain": [r.to_json() for r in chain],
                        "evac": result.to_json(),
                    }
                )
            )
        else:
            for i, r in enumerate(chain):
                print(f"delta^{i}: {r.render(digits)}")
            print(f"evac:    {result.render(digits)}")
    elif args.kind == "jdt":
        data = json.loads(args.input)
        skew = skew_from_json(data)
        digits = any(str(letter).isdigit() for _, letter in data.get("labels", []))
        for v in skew.label_map().values():
            alphabet.check_letter(v)
        partition = jdt(skew)
        print(json.dumps(partition.to_json()) if args.as_json else partition.render(digits))
    return 0


def _cmd_enumerate(args) -> int:
    _enumeration_cap(args)
    if args.n == ENUMERATION_FORCE_CAP:
        print(
            f"note: n = {args.n} runs over 2^{args.n} column states and "
            "thousands of elements; expect noticeable memory use",
            file=sys.stderr,
        )
    alphabet = Alphabet(args.n)
    monoid = enumerate_styl(alphabet, max_size=args.n)
    if args.what == "monoid":
        if args.as_json:
            print(json.dumps(monoid.to_json()))
        else:
            idem = set(monoid.idempotents())
            print(f"{len(monoid)} elements (n = {args.n})")
            for e in monoid.elements:
                support = "".join(render_letter(x) for x in sorted(e.tableau.supp()))
                flags = " idempotent" if e.index in idem else ""
                print(
                    f"{e.index:4d}  {e.render_word():<{2 * args.n + 2}} "
                    f"supp={support or '-':<{args.n}} boxes={e.tableau.boxes():2d}{flags}"
                )
    elif args.what == "idempotents":
        idem = monoid.idempotents()
        if args.as_json:
            print(
                json.dumps(
                    [{"index": i, "word": monoid.elements[i].render_word()} for i in idem]
                )
            )
        else:
            print(f"{len(idem)} idempotents (n = {args.n})")
            for i in idem:
                print(f"{i:4d}  {monoid.elements[i].render_word()}")
    elif args.what == "jorder":
        if args.dot:
            print(monoid.jorder_dot())
        else:
            order = monoid.j_order()
            if args.as_json:
                print(
                    json.dumps(
                        {
                            "elements": len(monoid),
                            "height": order.height,
                            "coranks": order.coranks,
                            "covers": order.hasse_edges,
                        }
                    )
                )
            else:
                print(
                    f"graded order on {len(monoid)} elements, height {order.height}, "
                    f"{len(order.hasse_edges)} covering pairs"
                )
                for corank in range(order.height + 1):
                    row = [
                        monoid.elements[i].render_word()
                        for i in range(len(monoid))
                        if order.coranks[i] == corank
                    ]
                    if row:
                        print(f"co-rank {corank:2d}: {' '.join(row)}")
    return 0


def _cmd_verify(args) -> int:
    cap = ENUMERATION_FORCE_CAP if args.force else ENUMERATION_DEFAULT_CAP
    if args.n > cap:
        raise ValueError(
            f"n = {args.n} exceeds the verification ceiling {cap}"
            + ("" if args.force else " (use --force for 7)")
        )
    results = run_suite(args.suite, args.n, maxlen=args.maxlen, seed=args.seed)
    ok = True
    for result in results:
        print(result.render())
        ok = ok and result.ok
    return 0 if ok else 1


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "compute":
            return _cmd_compute(args)
        if args.command == "enumerate":
            return _cmd_enumerate(args)
        if args.command == "verify":
            return _cmd_verify(args)
    except (ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
