import argparse
import logging
import sys
from typing import Callable, Sequence

from pydantic import BaseModel

from app.api.schemas import (
    ApiResponse,
    BlockDimensionSchema,
    BlockSchema,
    ClassificationSchema,
    DecompositionSchema,
    DimensionSchema,
    EqualitySchema,
    GraphSchema,
    HeadSchema,
    IsoSchema,
    K0Schema,
    MonoidSchema,
    ReductionSchema,
    RingFormSchema,
    StrongGradingSchema,
    StructuredEdgeSchema,
    WitnessSchema,
)
from app.config import analysis_config
from app.exceptions import GraphFormatError, InvalidInputError, UnsupportedGraphError
from app.graded.decompose import BaseRingKind, Block, decompose, describe
from app.graded.ring_forms import RingForm, crossed_product_status, is_group_ring
from app.graded.strong import is_strongly_graded
from app.graph.classify import classify
from app.graph.combinators import associated_weighted, opposite, tensor_attach
from app.graph.parser import dump_graph, load_graph
from app.ktheory.k0 import k0, unit_class
from app.ktheory.monoid import (
    group_completion,
    monoid_equal,
    monoid_presentation,
    parse_monoid_element,
)
from app.ktheory.properties import discover_checks, monoid_property_search
from app.matrix.iso import graded_iso
from app.matrix.shifts import component_dim, zero_component_decomp
from app.models import HeadDescriptor, Verdict, WeightedGraph
from app.symbolic.element import degree_of
from app.symbolic.expressions import format_element, parse_expression
from app.symbolic.rewriting import collapse, normal_form

logging.basicConfig(
    level=analysis_config.LOG_LEVEL, format="%(asctime)s - %(levelname)s - %(message)s"
)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_UNSUPPORTED = 2
EXIT_INCONCLUSIVE = 3


class _Parser(argparse.ArgumentParser):
    """Reports usage errors as InvalidInputError instead of exiting."""

    def error(self, message: str):
        raise InvalidInputError(message)


def _base_vertex(value: str) -> tuple[str, str]:
    cycle, sep, vertex = value.partition("=")
    if not sep or not cycle or not vertex:
        raise argparse.ArgumentTypeError(f"expected CYCLE=V, got '{value}'")
    return cycle, vertex


def _positive(value: str) -> int:
    try:
        n = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got '{value}'") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {n}")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print machine-readable JSON")

    parser = _Parser(prog="lpakit", description="Graded structure of Leavitt path algebras.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    sub.add_parser("classify", parents=[common], help="classify a graph").add_argument("graph")
    sub.add_parser("strongly-graded", parents=[common], help="decide strong gradedness").add_argument("graph")

    p = sub.add_parser("decompose", parents=[common], help="graded matrix decomposition")
    p.add_argument("graph")
    p.add_argument("--base-vertex", action="append", type=_base_vertex, default=[], metavar="CYCLE=V")

    p = sub.add_parser("iso", parents=[common], help="decide graded isomorphism")
    p.add_argument("graph")
    p.add_argument("other")

    sub.add_parser("crossed", parents=[common], help="group ring and crossed product status").add_argument("graph")

    p = sub.add_parser("dim", parents=[common], help="dimensions of a homogeneous component")
    p.add_argument("graph")
    p.add_argument("--degree", type=int, required=True)

    p = sub.add_parser("k0", parents=[common], help="Grothendieck group K0")
    p.add_argument("graph")
    p.add_argument("--unit", action="store_true", help="also report the class of the identity")

    p = sub.add_parser("monoid", parents=[common], help="monoid presentation and property searches")
    p.add_argument("graph")
    p.add_argument("--check", choices=sorted(discover_checks()))
    p.add_argument("--bound", type=_positive)

    p = sub.add_parser("eq", parents=[common], help="compare monoid or algebra elements")
    p.add_argument("graph")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--bound", type=_positive)
    p.add_argument("--algebra", action="store_true", help="compare algebra expressions")

    p = sub.add_parser("reduce", parents=[common], help="normal form of an algebra expression")
    p.add_argument("graph")
    p.add_argument("expression")

    p = sub.add_parser("transform", parents=[common], help="graph combinators")
    p.add_argument("graph")
    p.add_argument("other", nargs="?")
    p.add_argument("--op", choices=["opposite", "weighted", "tensor"], required=True)
    return parser


def _head_schema(h: HeadDescriptor) -> HeadSchema:
    return HeadSchema(
        kind=h.kind.value, base=h.base, vertices=list(h.vertices), edges=list(h.edges), weights=list(h.weights)
    )


def _block_base(block: Block):
    base = block.base
    if base.kind is BaseRingKind.FIELD:
        return "field"
    if base.kind is BaseRingKind.LAURENT:
        return {"laurent": base.period}
    if base.kind is BaseRingKind.ROSE:
        return {"rose": base.petals}
    return {"wrose": {"petals": base.petals, "weights": list(base.weights)}}


def _graph_schema(g: WeightedGraph) -> GraphSchema:
    return GraphSchema(
        vertices=list(g.vertices),
        sedges=[StructuredEdgeSchema.model_validate(e) for e in g.sedges],
    )


class Outcome:
    """Text lines, a JSON payload and the exit code of one command."""

    def __init__(self, lines: list[str], payload: BaseModel, code: int = EXIT_OK):
        self.lines = lines
        self.payload = payload
        self.code = code


def _verdict_code(verdict: Verdict) -> int:
    return EXIT_OK if verdict.is_conclusive else EXIT_INCONCLUSIVE


def cmd_classify(args) -> Outcome:
    result = classify(load_graph(args.graph))
    lines = [f"class: {result}"]
    lines += [f"head: {h}" for h in result.heads]
    if result.reason:
        lines.append(f"reason: {result.reason}")
    payload = ClassificationSchema(
        tag=result.tag.value,
        comet_length=result.comet_length,
        heads=[_head_schema(h) for h in result.heads],
        reason=result.reason,
    )
    return Outcome(lines, payload)


def cmd_strongly_graded(args) -> Outcome:
    value = is_strongly_graded(load_graph(args.graph))
    return Outcome([f"strongly-graded: {str(value).lower()}"], StrongGradingSchema(strongly_graded=value))


def cmd_decompose(args) -> Outcome:
    d = decompose(load_graph(args.graph), dict(args.base_vertex))
    payload = DecompositionSchema(
        blocks=[
            BlockSchema(
                size=b.size,
                base=_block_base(b),
                shifts=list(b.shifts.entries),
                head=_head_schema(b.head),
                label=str(b),
            )
            for b in d.blocks
        ],
        removed_edges=list(d.removed_edges),
        text=describe(d),
    )
    return Outcome([describe(d)], payload)


def cmd_iso(args) -> Outcome:
    result = graded_iso(decompose(load_graph(args.graph)), decompose(load_graph(args.other)))
    line = f"graded-isomorphic: {result.verdict.value}"
    if result.tag_level:
        line += " (tag-level match of rose blocks)"
    payload = IsoSchema(graded_isomorphic=result.verdict.value, tag_level=result.tag_level, reason=result.reason)
    return Outcome([line], payload, _verdict_code(result.verdict))


def cmd_crossed(args) -> Outcome:
    graph = load_graph(args.graph)
    status = crossed_product_status(decompose(graph))
    lines = [f"form: {status.form.value}"]
    group_ring = None
    if status.form is RingForm.GROUP_RING:
        group_ring = is_group_ring(graph).description
        lines.append(f"group ring: {group_ring}")
    if status.automorphism:
        lines.append(f"automorphism: {status.automorphism}")
    lines += [f"unit of degree 1 at {w.base}: {w.element}" for w in status.witnesses]
    if status.reason:
        lines.append(f"reason: {status.reason}")
    payload = RingFormSchema(
        form=status.form.value,
        witnesses=[WitnessSchema(base=w.base, entries=list(w.entries), element=w.element) for w in status.witnesses],
        automorphism=status.automorphism,
        group_ring=group_ring,
        reason=status.reason,
    )
    code = EXIT_INCONCLUSIVE if status.form is RingForm.UNDECIDED else EXIT_OK
    return Outcome(lines, payload, code)


def cmd_dim(args) -> Outcome:
    d = decompose(load_graph(args.graph))
    lines, blocks = [], []
    finite = True
    for b in d.blocks:
        if b.base.kind in (BaseRingKind.ROSE, BaseRingKind.WEIGHTED_ROSE):
            finite = False
            blocks.append(BlockDimensionSchema(label=str(b), infinite=True))
            lines.append(f"{b}: infinite")
            continue
        dim = component_dim(b.shifts, args.degree)
        shape = None
        if args.degree == 0:
            shape = list(zero_component_decomp(b.shifts).multiplicities)
        blocks.append(BlockDimensionSchema(label=str(b), dimension=dim, zero_component=shape))
        suffix = f" (zero component blocks {shape})" if shape else ""
        lines.append(f"{b}: {dim}{suffix}")
    total = sum(b.dimension for b in blocks) if finite else None
    lines.append(f"total: {total if finite else 'infinite'}")
    return Outcome(lines, DimensionSchema(degree=args.degree, blocks=blocks, total=total))


def cmd_k0(args) -> Outcome:
    graph = load_graph(args.graph)
    group = k0(graph)
    lines = [str(group)]
    unit = None
    if args.unit:
        unit = list(unit_class(graph))
        lines.append(f"unit class: {tuple(unit)}")
    payload = K0Schema(free_rank=group.free_rank, invariant_factors=list(group.invariant_factors), unit_class=unit)
    return Outcome(lines, payload)


def cmd_monoid(args) -> Outcome:
    p = monoid_presentation(load_graph(args.graph))
    completion = group_completion(p)
    relations = [f"{p.format(r.lhs)} = {p.format(r.rhs)}" for r in p.relations]
    lines = [f"monoid: {p}", f"group completion: {completion}"]
    payload = MonoidSchema(generators=list(p.generators), relations=relations, group_completion=str(completion))
    if args.check:
        result = monoid_property_search(p, args.check, args.bound)
        if result.verdict is Verdict.TRUE:
            lines.append(f"{result.property_name}: holds up to bound {result.bound}")
        else:
            lines.append(f"{result.property_name}: {result.verdict.value}")
        if result.witness:
            lines.append("witness: " + ", ".join(f"{k}={v}" for k, v in result.witness.items()))
        payload.property = result.property_name
        payload.verdict = result.verdict.value
        payload.bound = result.bound
        payload.witness = result.witness or None
        payload.note = result.note
    return Outcome(lines, payload)


def _eq_algebra(args) -> Outcome:
    graph = load_graph(args.graph)
    difference = parse_expression(graph, args.left) - parse_expression(graph, args.right)
    if classify(graph).is_polycephaly:
        verdict = Verdict.from_bool(normal_form(difference).is_zero)
    else:
        # collapse proves identities but cannot refute them
        verdict = Verdict.TRUE if collapse(difference).is_zero else Verdict.UNKNOWN
    return Outcome([f"equal: {verdict.value}"], EqualitySchema(verdict=verdict.value), _verdict_code(verdict))


def cmd_eq(args) -> Outcome:
    if args.algebra:
        return _eq_algebra(args)
    p = monoid_presentation(load_graph(args.graph))
    a, b = parse_monoid_element(p, args.left), parse_monoid_element(p, args.right)
    result = monoid_equal(p, a, b, args.bound)
    lines = [f"equal: {result.verdict.value}"]
    payload = EqualitySchema(verdict=result.verdict.value)
    if result.verdict is Verdict.TRUE:
        payload.chain = [p.format(v) for v in result.chain]
        lines.append("chain: " + " -> ".join(payload.chain))
    if result.certificate:
        payload.certificate_kind = result.certificate.kind.value
        payload.certificate = result.certificate.detail
        lines.append(f"certificate ({result.certificate.kind.value}): {result.certificate.detail}")
    return Outcome(lines, payload, _verdict_code(result.verdict))


def cmd_reduce(args) -> Outcome:
    graph = load_graph(args.graph)
    reduced = normal_form(parse_expression(graph, args.expression))
    degree = degree_of(reduced)
    text = format_element(reduced)
    lines = [text, f"degree: {degree if degree is not None else 'not homogeneous'}"]
    return Outcome(lines, ReductionSchema(normal_form=text, degree=degree, homogeneous=degree is not None))


def cmd_transform(args) -> Outcome:
    if args.op == "tensor" and not args.other:
        raise InvalidInputError("--op tensor needs a second graph file")
    if args.op != "tensor" and args.other:
        raise InvalidInputError(f"--op {args.op} takes a single graph file")
    graph = load_graph(args.graph)
    if args.op == "opposite":
        result = opposite(graph)
    elif args.op == "weighted":
        result = associated_weighted(graph)
    else:
        result = tensor_attach(graph, load_graph(args.other))
    return Outcome([dump_graph(result).rstrip("\n")], _graph_schema(result))


COMMANDS: dict[str, Callable[[argparse.Namespace], Outcome]] = {
    "classify": cmd_classify,
    "strongly-graded": cmd_strongly_graded,
    "decompose": cmd_decompose,
    "iso": cmd_iso,
    "crossed": cmd_crossed,
    "dim": cmd_dim,
    "k0": cmd_k0,
    "monoid": cmd_monoid,
    "eq": cmd_eq,
    "reduce": cmd_reduce,
    "transform": cmd_transform,
}


def _report_error(message: str, as_json: bool) -> None:
    if as_json:
        print(ApiResponse(status="error", message=message).model_dump_json(exclude_none=True))
    else:
        print(f"error: {message}", file=sys.stderr)


def run(argv: Sequence[str]) -> int:
    """Runs one lpakit command and returns its exit code."""
    as_json = "--json" in argv
    try:
        args = build_parser().parse_args(list(argv))
        outcome = COMMANDS[args.verb](args)
    except (GraphFormatError, InvalidInputError) as e:
        _report_error(str(e), as_json)
        return EXIT_INVALID
    except UnsupportedGraphError as e:
        _report_error(str(e), as_json)
        return EXIT_UNSUPPORTED
    except OSError as e:
        _report_error(f"cannot read {e.filename}: {e.strerror}", as_json)
        return EXIT_INVALID
    except Exception as e:
        logging.error(f"Unexpected failure: {e}", exc_info=True)
        _report_error("internal error", as_json)
        return EXIT_INVALID

    if as_json:
        print(outcome.payload.model_dump_json(exclude_none=True))
    else:
        print("\n".join(outcome.lines))
    return outcome.code


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
