"""
Command-line front end

Caret words contain parentheses, so quote pair text in the shell:

    python -m src.cli accept 'ree,rae'
    python -m src.cli mult 'r,r' x0 x1inv
"""
import argparse
import json
import sys
from typing import Optional, Sequence

from ..acceptor import get_acceptor
from ..automata import to_dot
from ..multipliers import get_multipliers
from ..treecalc import (
    TreePair,
    ball,
    decode_pair,
    encode_pair,
    evaluate,
    is_reduced,
    reduce,
)
from ..treecalc.pairs import canonical_generator, parse_generator_word, pair_to_conv
from ..utils.config import VERIFY_CONFIG
from ..utils.exceptions import ThompsonAutomataError, VerificationError, get_error_response
from ..utils.logging_config import get_logger, setup_logging

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_REJECT = 1
EXIT_USAGE = 2

MACHINE_NAMES = ("m_int", "m_tree", "l_tt", "r", "f", "n0", "l_x0", "n1", "k1", "case5b", "l_x1")

def _emit(args, payload: dict, text: str) -> None:
    if args.json_output:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)

def _verdict(accepted: bool) -> str:
    return "ACCEPT" if accepted else "REJECT"

def _read_json(source: str):
    if source.startswith("@"):
        with open(source[1:], encoding="utf-8") as handle:
            return handle.read()
    return source

def cmd_encode(args) -> int:
    pair = TreePair.from_json(_read_json(args.tree_pair))
    text = pair.text()
    _emit(args, {"pair": text, "reduced": is_reduced(pair)}, text)
    return EXIT_OK

def cmd_decode(args) -> int:
    pair = decode_pair(args.pair)
    if not args.unreduced and not get_acceptor().f_machine.accepts(encode_pair(pair)):
        print(f"{args.pair} is not a normal form (unreduced); pass --unreduced to decode anyway",
              file=sys.stderr)
        return EXIT_REJECT
    print(json.dumps(pair.to_json(), indent=2 if args.json_output else None))
    return EXIT_OK

def cmd_accept(args) -> int:
    result = get_acceptor().f_machine.run(pair_to_conv(args.pair), trace=args.trace)
    payload = {"pair": args.pair, "accepted": result.accepted, "reason": result.reason}
    lines = [_verdict(result.accepted)]
    if args.trace:
        payload["trace"] = [{"state": repr(state), "counters": list(counters)}
                            for state, counters in result.trace]
        lines.extend(f"{step}\t{state!r}\t{list(counters)}" for step, (state, counters) in enumerate(result.trace))
        lines.append(result.reason)
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if result.accepted else EXIT_REJECT

def cmd_check_mult(args) -> int:
    name = canonical_generator(args.generator)
    result = get_multipliers().check(name, args.u, args.v)
    _emit(args, {"generator": name, "u": args.u, "v": args.v, "accepted": result.accepted,
                 "reason": result.reason}, _verdict(result.accepted))
    return EXIT_OK if result.accepted else EXIT_REJECT

def cmd_mult(args) -> int:
    word = parse_generator_word(args.word)
    product = evaluate(word, reduce(decode_pair(args.pair)))
    text = product.text()
    _emit(args, {"pair": args.pair, "word": word, "product": text}, text)
    return EXIT_OK

def cmd_ball(args) -> int:
    entries = ball(args.radius)
    rows = [{"pair": key, "length": entry.length} for key, entry in entries.items()]
    _emit(args, {"radius": args.radius, "elements": rows},
          "\n".join(f"{row['pair']}\t{row['length']}" for row in rows))
    return EXIT_OK

def _machine(name: str):
    acceptor = get_acceptor().machines()
    if name in acceptor:
        return acceptor[name]
    return get_multipliers().machines()[name]

def cmd_export_dot(args) -> int:
    dot = to_dot(_machine(args.machine))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(dot)
        logger.info(f"Wrote {args.machine} to {args.output}")
    else:
        sys.stdout.write(dot)
    return EXIT_OK

def cmd_verify(args) -> int:
    from ..verify import run_all

    report = run_all(
        max_carets=args.max_carets,
        radius=args.radius,
        seed=args.seed,
        wrong_samples=args.wrong_samples,
        quasigeodesic_radius=args.qg_radius,
    )
    if args.json_path:
        with open(args.json_path, "w", encoding="utf-8") as handle:
            handle.write(report.to_json())
    if args.json_output:
        print(report.to_json())
    else:
        print(report.summary())
    return EXIT_OK if report.passed else EXIT_REJECT

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="thompson-automata",
        description="Counter automata for the caret-type normal form of Thompson's group F. "
                    "Pair words are written TOP,BOTTOM over r e ( ) a b; quote them in the shell.",
    )
    parser.add_argument("--json", dest="json_output", action="store_true",
                        help="Machine-readable output")
    flags = argparse.ArgumentParser(add_help=False)
    flags.add_argument("--json", dest="json_output", action="store_true", default=argparse.SUPPRESS,
                       help="Machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encode", parents=[flags], help="Tree pair JSON to pair word")
    p.add_argument("tree_pair", help='{"domain": tree, "range": tree}, or @file')
    p.set_defaults(handler=cmd_encode)

    p = sub.add_parser("decode", parents=[flags], help="Pair word to tree pair JSON")
    p.add_argument("pair", help="TOP,BOTTOM")
    p.add_argument("--unreduced", action="store_true", help="Decode pairs that are not normal forms")
    p.set_defaults(handler=cmd_decode)

    p = sub.add_parser("accept", parents=[flags], help="Run the normal-form acceptor")
    p.add_argument("pair", help="TOP,BOTTOM")
    p.add_argument("--trace", action="store_true", help="Print every configuration of the run")
    p.set_defaults(handler=cmd_accept)

    p = sub.add_parser("check-mult", parents=[flags], help="Run a generator multiplier on (u, v)")
    p.add_argument("-s", "--generator", required=True, help="x0, x1, x0inv or x1inv")
    p.add_argument("u", help="TOP,BOTTOM")
    p.add_argument("v", help="TOP,BOTTOM")
    p.set_defaults(handler=cmd_check_mult)

    p = sub.add_parser("mult", parents=[flags], help="Multiply a pair by generators, left to right")
    p.add_argument("pair", help="TOP,BOTTOM")
    p.add_argument("word", nargs="*", help="Generator names")
    p.set_defaults(handler=cmd_mult)

    p = sub.add_parser("ball", parents=[flags], help="Normal forms within a word-length radius")
    p.add_argument("radius", type=int)
    p.set_defaults(handler=cmd_ball)

    p = sub.add_parser("verify", help="Cross-check every machine against the tree pair oracle")
    p.add_argument("--max-carets", type=int, default=VERIFY_CONFIG["max_carets"])
    p.add_argument("--radius", type=int, default=VERIFY_CONFIG["radius"])
    p.add_argument("--seed", type=int, default=VERIFY_CONFIG["seed"])
    p.add_argument("--wrong-samples", type=int, default=VERIFY_CONFIG["wrong_samples"])
    p.add_argument("--qg-radius", type=int, default=VERIFY_CONFIG["quasigeodesic_radius"])
    p.add_argument("--json", dest="json_path", metavar="PATH", help="Also write the report as JSON")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("export-dot", help="Graphviz source for a named machine")
    p.add_argument("machine", choices=MACHINE_NAMES)
    p.add_argument("-o", "--output", help="Write to a file instead of stdout")
    p.set_defaults(handler=cmd_export_dot)

    return parser

def main(argv: Optional[Sequence[str]] = None) -> int:
    setup_logging()
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except VerificationError as e:
        logger.error(f"Verification failed: {e}")
        print(str(e), file=sys.stderr)
        return EXIT_REJECT
    except ThompsonAutomataError as e:
        logger.warning(f"{args.command}: {e}")
        if args.json_output:
            print(json.dumps(get_error_response(e), sort_keys=True), file=sys.stderr)
        else:
            print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

if __name__ == "__main__":
    sys.exit(main())
