import argparse
import json
import logging
import sys
from typing import List, Optional

from eqtree.automorphism import NormalCase, check_structure_laws, cycle_type, normalize
from eqtree.bench import bench, print_report
from eqtree.canonical import canon_quotient, canonical_code
from eqtree.colored_tree import Mode
from eqtree.errors import InputError, ParameterError
from eqtree.evaluator import Evaluator, IsoMethods
from eqtree.file_loaders import (
    document_kind,
    graph_to_document,
    instance_to_document,
    load_graph,
    load_instance,
    load_quotient,
    parse_instance,
    parse_quotient,
    quotient_to_document,
    read_document,
    write_document,
)
from eqtree.generator import GenSpec, gen_equipped
from eqtree.modules.brute_force_module import iso_brute
from eqtree.morse_smale import ms_report
from eqtree.planar_reduction import recover_quotient, reduce_to_graph
from eqtree.quotient import build_dynamics_quotient, build_quotient, expand_quotient

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NOT_ISOMORPHIC = 1
EXIT_INPUT = 2
EXIT_BREACH = 3


def _emit(result):
    print(json.dumps(result, ensure_ascii=False))


def _load_equipped(path: str):
    """Instance document, or a loop-free quotient document expanded"""
    document = read_document(path)
    if document_kind(document) == "quotient":
        return expand_quotient(parse_quotient(document))
    return parse_instance(document)


def cmd_validate(args) -> int:
    et = load_instance(args.file)
    _emit({"valid": True, "n": et.n, "k": et.tree.k, "mode": et.tree.mode.value})
    return EXIT_OK


def cmd_ranks(args) -> int:
    ranks = load_instance(args.file).ranks
    _emit(
        {
            "rank": list(ranks.rank),
            "strip_sequence": [list(stage) for stage in ranks.strip_sequence],
            "centers": list(ranks.centers),
            "central_edge": list(ranks.central_edge) if ranks.central_edge else None,
        }
    )
    return EXIT_OK


def cmd_orbits(args) -> int:
    et = load_instance(args.file)
    _emit(
        {
            "orbits": [list(orbit) for orbit in et.orbits.orbits],
            "sizes": list(et.orbits.sizes),
            "cycle_type": list(cycle_type(et)),
        }
    )
    return EXIT_OK


def cmd_quotient(args) -> int:
    et = load_instance(args.file)
    q = build_dynamics_quotient(et) if args.dynamics else build_quotient(et)
    _emit(quotient_to_document(q))
    return EXIT_OK


def cmd_expand(args) -> int:
    _emit(instance_to_document(expand_quotient(load_quotient(args.file))))
    return EXIT_OK


def cmd_reduce(args) -> int:
    _emit(graph_to_document(reduce_to_graph(load_quotient(args.file))))
    return EXIT_OK


def cmd_recover(args) -> int:
    _emit(quotient_to_document(recover_quotient(load_graph(args.file), args.k)))
    return EXIT_OK


def cmd_canon(args) -> int:
    document = read_document(args.file)
    if document_kind(document) == "quotient":
        code = canon_quotient(parse_quotient(document))
    else:
        code = canonical_code(parse_instance(document))
    print(code.hex())
    return EXIT_OK


def cmd_iso(args) -> int:
    first, second = _load_equipped(args.file1), _load_equipped(args.file2)
    method = IsoMethods(args.method)
    if method == IsoMethods.BRUTE:
        witness = iso_brute(first, second)
        result = {"isomorphic": witness is not None}
        if witness is not None:
            result["witness"] = list(witness.mapping)
    else:
        evaluator = Evaluator(methods=[method])
        result = {"isomorphic": evaluator.decide(first, second, method)}
        evaluator.close()
    _emit(result)
    return EXIT_OK if result["isomorphic"] else EXIT_NOT_ISOMORPHIC


def cmd_report(args) -> int:
    _emit(ms_report(load_instance(args.file)).to_dict())
    return EXIT_OK


def cmd_laws(args) -> int:
    _emit(check_structure_laws(load_instance(args.file)).to_dict())
    return EXIT_OK


def cmd_normalize(args) -> int:
    normalized = normalize(load_instance(args.file))
    result = {"case": normalized.case.value}
    if normalized.case == NormalCase.SWAPPED:
        half = normalized.half
        result["half"] = instance_to_document(half.equipped)
        result["root"] = half.root
        result["central_color"] = half.central_color
        result["original"] = list(half.original)
    else:
        result["equipped"] = instance_to_document(normalized.equipped)
    _emit(result)
    return EXIT_OK


def cmd_gen(args) -> int:
    spec = GenSpec(
        n=args.n,
        k=args.k,
        max_orbit=args.max_orbit,
        seed=args.seed,
        loop_probability=args.loop_probability,
        mode=Mode(args.mode),
    )
    document = instance_to_document(gen_equipped(spec))
    if args.out:
        write_document(args.out, document)
        _emit({"out": args.out, "n": document["n"]})
    else:
        _emit(document)
    return EXIT_OK


def _parse_sizes(text: str) -> List[int]:
    try:
        return [int(size) for size in text.split(",") if size.strip()]
    except ValueError:
        raise ParameterError(f"sizes must be comma-separated integers, got {text!r}", "sizes")


def cmd_bench(args) -> int:
    report = bench(
        _parse_sizes(args.sizes),
        args.trials,
        args.seed,
        k=args.k,
        max_orbit=args.max_orbit,
        warmup=args.warmup,
    )
    print_report(report)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eqtree",
        description="Isomorphism of edge-colored trees equipped with automorphisms",
    )
    parser.add_argument("--log-file", help="Append log records to this file", default=None)
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    for name, handler, help_text in (
        ("validate", cmd_validate, "Validate an instance document"),
        ("ranks", cmd_ranks, "Leaf-stripping ranks and centers"),
        ("orbits", cmd_orbits, "Orbits of the automorphism"),
        ("expand", cmd_expand, "Expand a quotient document to an instance"),
        ("reduce", cmd_reduce, "Reduce a quotient document to a simple graph"),
        ("canon", cmd_canon, "Canonical code of an instance or quotient, hex"),
        ("report", cmd_report, "Morse-Smale report of a morse-smale instance"),
        ("laws", cmd_laws, "Check the structure laws of the orbits"),
        ("normalize", cmd_normalize, "Normal form of an instance"),
    ):
        command = commands.add_parser(name, help=help_text)
        command.add_argument("file")
        command.set_defaults(handler=handler)

    quotient = commands.add_parser("quotient", help="Quotient of an instance")
    quotient.add_argument("file")
    quotient.add_argument(
        "--dynamics", action="store_true", help="Keep a swapped central edge as a loop"
    )
    quotient.set_defaults(handler=cmd_quotient)

    recover = commands.add_parser("recover", help="Recover a quotient from a graph document")
    recover.add_argument("file")
    recover.add_argument("--k", type=int, default=None, help="Palette size of the quotient")
    recover.set_defaults(handler=cmd_recover)

    iso = commands.add_parser("iso", help="Decide isomorphism of two instances")
    iso.add_argument("file1")
    iso.add_argument("file2")
    iso.add_argument(
        "--method", choices=[method.value for method in IsoMethods], default="canon"
    )
    iso.set_defaults(handler=cmd_iso)

    gen = commands.add_parser("gen", help="Generate a random instance")
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--k", type=int, required=True)
    gen.add_argument("--seed", type=int, required=True)
    gen.add_argument("--max-orbit", type=int, default=6)
    gen.add_argument("--loop-probability", type=float, default=0.0)
    gen.add_argument("--mode", choices=[mode.value for mode in Mode], default="generic")
    gen.add_argument("--out", default=None, help="Write the instance here (.xz compresses)")
    gen.set_defaults(handler=cmd_gen)

    bench_parser = commands.add_parser("bench", help="Time iso decisions and fit the scaling")
    bench_parser.add_argument("--sizes", required=True, help="Ascending sizes, comma-separated")
    bench_parser.add_argument("--trials", type=int, required=True)
    bench_parser.add_argument("--seed", type=int, required=True)
    bench_parser.add_argument("--k", type=int, default=3)
    bench_parser.add_argument("--max-orbit", type=int, default=6)
    bench_parser.add_argument("--warmup", type=int, default=1)
    bench_parser.set_defaults(handler=cmd_bench)
    return parser


def _configure_logging(args):
    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    if args.log_file:
        logging.basicConfig(
            filename=args.log_file,
            filemode="a",
            format="%(message)s",
            datefmt="%H:%M:%S",
            level=level,
        )
    else:
        logging.basicConfig(
            stream=sys.stderr, format="%(message)s", datefmt="%H:%M:%S", level=level
        )


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    _configure_logging(args)
    try:
        return args.handler(args)
    except InputError as error:
        _emit(error.to_dict())
        return EXIT_INPUT
    except Exception:
        logger.exception("internal error in %s", args.command)
        return EXIT_BREACH


if __name__ == "__main__":
    sys.exit(main())
