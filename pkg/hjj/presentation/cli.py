"""Command-line front end.

Exit codes: 0 when the computation ran and every verdict is positive, 1 when a verdict is
negative, 2 on bad input.
"""
import argparse
import json
import sys
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field

from pydantic import BaseModel

from hjj.application.algebra.dtos import (
    AnnihilatorResponse,
    AxiomReportResponse,
    IdentityCheckDTO,
    SubspaceDTO,
)
from hjj.application.algebra.services import AlgebraService
from hjj.application.cohomology.dtos import CohomologyReportResponse
from hjj.application.cohomology.services import CohomologyService
from hjj.application.deformation.dtos import (
    FormalDeformationReportResponse,
    RBFormalReportResponse,
    RigidityReportResponse,
)
from hjj.application.deformation.services import DeformationService
from hjj.application.derivation.dtos import DerivationSpaceResponse
from hjj.application.derivation.services import DerivationService
from hjj.application.extension.dtos import ExtensionResponse
from hjj.application.extension.services import ExtensionService
from hjj.application.representation.dtos import RepresentationReportResponse, VerifyResponse
from hjj.application.representation.services import RepresentationService
from hjj.application.rotabaxter.dtos import (
    NijenhuisReportResponse,
    RBReportResponse,
    RBResponse,
    module_labels,
)
from hjj.application.rotabaxter.services import RotaBaxterService
from hjj.core.config import Settings, get_settings
from hjj.core.errors import AppError
from hjj.core.logging import get_logger, setup_logging
from hjj.domain.algebra.entities import HomAlgebra
from hjj.domain.derivation.entities import DerivationQuery, map_from_coordinates
from hjj.domain.representation.entities import Representation
from hjj.domain.rotabaxter.entities import RBOperator
from hjj.infrastructure.files.loaders import (
    algebra_to_document,
    load_algebra,
    load_form,
    load_operator,
    load_representation,
    load_series,
    map_series_from_document,
    product_series_from_document,
    product_series_to_document,
    representation_to_document,
    source_context,
)

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_VERDICT = 1
EXIT_INPUT = 2


@dataclass(frozen=True)
class Services:
    """Service graph sharing one Settings object."""

    algebras: AlgebraService
    representations: RepresentationService
    derivations: DerivationService
    cohomology: CohomologyService
    extensions: ExtensionService
    rota_baxter: RotaBaxterService
    deformation: DeformationService

    @classmethod
    def build(cls, settings: Settings) -> "Services":
        algebras = AlgebraService()
        representations = RepresentationService(algebras)
        derivations = DerivationService(representations)
        cohomology = CohomologyService(settings, algebras, representations)
        rota_baxter = RotaBaxterService(settings, algebras, representations, derivations, cohomology)
        return cls(
            algebras=algebras,
            representations=representations,
            derivations=derivations,
            cohomology=cohomology,
            extensions=ExtensionService(algebras, representations, derivations, cohomology),
            rota_baxter=rota_baxter,
            deformation=DeformationService(
                settings, algebras, representations, derivations, cohomology, rota_baxter
            ),
        )


@dataclass
class Outcome:
    payload: BaseModel
    ok: bool
    lines: list[str] = field(default_factory=list)


# ==========================================
# Rendering
# ==========================================

def _check_lines(check: IdentityCheckDTO) -> list[str]:
    if check.holds:
        return [f"  {check.name}: holds"]
    witness = check.witness
    assert witness is not None
    return [
        f"  {check.name}: FAILS at ({', '.join(witness.args)}) with residual "
        f"[{', '.join(witness.residual)}]; {len(check.failures)} failing tuple(s)"
    ]


def _subspace_lines(title: str, s: SubspaceDTO) -> list[str]:
    return [f"{title}: dim {s.dim}", *(f"  [{', '.join(v)}]" for v in s.basis)]


def _cohomology_lines(r: CohomologyReportResponse) -> list[str]:
    dim_h = "undefined" if r.dim_h is None else str(r.dim_h)
    lines = [
        f"degree {r.degree}: dim C={r.dim_c}, dim A={r.dim_a}, dim Z={r.dim_z}, "
        f"dim B={r.dim_b}, dim H={dim_h}"
    ]
    for v in r.representatives or []:
        lines.append(f"  [{', '.join(v)}]")
    lines.extend(f"  warning: {w}" for w in r.warnings)
    return lines


def _verdict(ok: bool) -> str:
    return "all checks hold" if ok else "checks FAILED"


# ==========================================
# Commands
# ==========================================

def _representation(args: argparse.Namespace, a: HomAlgebra, services: Services) -> Representation:
    if getattr(args, "rep", None):
        return load_representation(args.rep, a)
    if getattr(args, "trivial", False):
        return services.representations.trivial_rep(a)
    return services.representations.adjoint_rep(a, getattr(args, "adjoint", None) or 0)


def _verify(args: argparse.Namespace, services: Services) -> Outcome:
    a = load_algebra(args.algebra)
    labels = list(a.basis_labels)
    algebra = AxiomReportResponse.from_report(services.algebras.verify_algebra(a), labels)
    representation = None
    if args.rep:
        report = services.representations.verify_representation(load_representation(args.rep, a))
        representation = RepresentationReportResponse.from_report(report, labels)
    payload = VerifyResponse(algebra=algebra, representation=representation)
    lines = [f"Hom-Jacobi-Jordan axioms ({a.dim}-dimensional algebra):"]
    for check in (algebra.commutative, algebra.multiplicative, algebra.hom_jacobi):
        lines.extend(_check_lines(check))
    if representation is not None:
        lines.append(f"Representation identities ({args.rep}):")
        lines.extend(_check_lines(representation.twist))
        lines.extend(_check_lines(representation.product))
    lines.append(_verdict(payload.valid))
    return Outcome(payload, payload.valid, lines)


def _annihilator(args: argparse.Namespace, services: Services) -> Outcome:
    a = load_algebra(args.algebra)
    s = SubspaceDTO.from_subspace(services.algebras.hom_annihilator(a))
    payload = AnnihilatorResponse(annihilator=s, basis_labels=list(a.basis_labels))
    return Outcome(payload, True, _subspace_lines("Hom-annihilator", s))


def _derivations(args: argparse.Namespace, services: Services) -> Outcome:
    a = load_algebra(args.algebra)
    rep = load_representation(args.rep, a) if args.rep else None
    q = DerivationQuery(a, rep, args.k, args.anti)
    space = services.derivations.derivation_space(q)
    dim_v = rep.dim_v if rep else a.dim
    maps = [map_from_coordinates(v, dim_v, a.dim) for v in space.vectors]
    payload = DerivationSpaceResponse.from_space(q, space, maps)
    lines = [f"{payload.space}: dim {payload.dim}"]
    for m in payload.maps:
        lines.append("  " + "; ".join(" ".join(row) for row in m))
    return Outcome(payload, True, lines)


def _cohomology(args: argparse.Namespace, services: Services) -> Outcome:
    a = load_algebra(args.algebra)
    report = services.cohomology.cohomology(_representation(args, a, services), args.n)
    payload = CohomologyReportResponse.from_report(report)
    return Outcome(payload, report.dim_h is not None, _cohomology_lines(payload))


def _rb(args: argparse.Namespace, services: Services) -> Outcome:
    a = load_algebra(args.algebra)
    rep = _representation(args, a, services)
    op = RBOperator(rep, load_operator(args.op, (a.dim, rep.dim_v)))
    module = module_labels(rep.dim_v)
    report = services.rota_baxter.verify_rb(op)
    payload = RBResponse(report=RBReportResponse.from_report(report, module))
    lines = ["Relative Rota-Baxter identities:"]
    lines.extend(_check_lines(payload.report.twist))
    lines.extend(_check_lines(payload.report.product))
    if report.valid:
        induced = services.rota_baxter.induced_algebra(op)
        payload.induced_algebra = algebra_to_document(induced)
        payload.induced_algebra_valid = services.algebras.verify_algebra(induced).valid
        induced_rep = services.rota_baxter.induced_rep(op)
        payload.induced_representation = representation_to_document(induced_rep)
        payload.induced_representation_valid = services.representations.verify_representation(induced_rep).valid
        lines.append(f"induced algebra: {_verdict(payload.induced_algebra_valid)}")
        lines.append(f"induced representation: {_verdict(payload.induced_representation_valid)}")
        if args.n is not None:
            payload.cohomology = CohomologyReportResponse.from_report(
                services.rota_baxter.rb_cohomology(op, args.n)
            )
            lines.extend(_cohomology_lines(payload.cohomology))
    lines.append(_verdict(report.valid))
    return Outcome(payload, report.valid, lines)


def _nijenhuis(args: argparse.Namespace, services: Services) -> Outcome:
    a = load_algebra(args.algebra)
    report = services.rota_baxter.nijenhuis_check(a, load_operator(args.op, (a.dim, a.dim)))
    payload = NijenhuisReportResponse.from_report(report, a.basis_labels)
    lines = ["Nijenhuis operator:", *_check_lines(payload.twist), *_check_lines(payload.nijenhuis)]
    if payload.valid:
        lines.append(f"deformed product: {json.dumps(payload.deformed_product)}")
    lines.append(_verdict(payload.valid))
    return Outcome(payload, payload.valid, lines)


def _deform(args: argparse.Namespace, services: Services) -> Outcome:
    a = load_algebra(args.algebra)
    labels = list(a.basis_labels)
    if args.series is None:
        rigidity = RigidityReportResponse.from_report(services.deformation.rigidity_probe(a))
        lines = ["Second cohomology of the alpha^-1-adjoint representation:"]
        lines.extend(_cohomology_lines(rigidity.cohomology))
        lines.append(f"rigid (sufficient criterion): {rigidity.rigid_sufficient}")
        lines.extend(f"warning: {w}" for w in rigidity.warnings)
        return Outcome(rigidity, True, lines)

    doc = load_series(args.series)
    if isinstance(doc.coeffs[0], dict):
        with source_context(args.series):
            series = product_series_from_document(doc, a)
        formal = FormalDeformationReportResponse.from_report(
            services.deformation.formal_deformation_check(series), labels
        )
        lines = [f"Formal deformation of order {series.order}:"]
        for check in formal.orders:
            lines.extend(_check_lines(check))
        lines.append(_verdict(formal.valid))
        return Outcome(formal, formal.valid, lines)

    rep = _representation(args, a, services)
    with source_context(args.series):
        ts = map_series_from_document(doc, (a.dim, rep.dim_v))
    op = RBOperator(rep, ts.coeffs[0])
    report = services.deformation.rb_formal_deformation_check(op, ts)
    rb = RBFormalReportResponse.from_report(report, module_labels(rep.dim_v))
    lines = [f"Formal deformation of a Rota-Baxter operator, order {ts.order}:"]
    lines.extend(_check_lines(rb.twist))
    for check in rb.orders:
        lines.extend(_check_lines(check))
    if report.valid:
        induced = services.deformation.induced_formal_deformation(op, ts)
        rb.induced_series = product_series_to_document(induced)
        lines.append(f"induced product series: {rb.induced_series.model_dump_json()}")
    lines.append(_verdict(rb.valid))
    return Outcome(rb, rb.valid, lines)


def _extend(args: argparse.Namespace, services: Services) -> Outcome:
    a = load_algebra(args.algebra)
    if args.theta:
        result = services.extensions.central_extension(a, load_form(args.theta, a))
    else:
        result = services.extensions.d_extension(a, load_operator(args.op, (a.dim, a.dim)))
    payload = ExtensionResponse.from_result(result)
    lines = [f"extension of dimension {result.algebra.dim}: {'valid' if result.valid else 'INVALID'}"]
    lines.extend(f"  {reason}" for reason in result.reasons)
    return Outcome(payload, result.valid, lines)


COMMANDS: dict[str, Callable[[argparse.Namespace, Services], Outcome]] = {
    "verify": _verify,
    "annihilator": _annihilator,
    "derivations": _derivations,
    "cohomology": _cohomology,
    "rb": _rb,
    "nijenhuis": _nijenhuis,
    "deform": _deform,
    "extend": _extend,
}


# ==========================================
# Parser
# ==========================================

def _non_negative(value: str) -> int:
    n = int(value)
    if n < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return n


def _add_representation_selector(parser: argparse.ArgumentParser, required: bool, default: str = "") -> None:
    selector = parser.add_mutually_exclusive_group(required=required)
    selector.add_argument("--adjoint", type=int, metavar="S", help=f"alpha^S-adjoint representation{default}")
    selector.add_argument("--trivial", action="store_true", help="Trivial representation")
    selector.add_argument("--rep", help="Representation file")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("algebra", help="Algebra file (JSON)")
    common.add_argument("--json", action="store_true", help="Write JSON to stdout")
    common.add_argument("--max-degree", type=_non_negative, help="Cap on cochain degrees")
    common.add_argument("--log-level", help="Logging level written to stderr")

    parser = argparse.ArgumentParser(prog="hjj", description="Hom-Jacobi-Jordan algebra toolkit")
    parser.add_argument("--version", action="version", version=f"%(prog)s {get_settings().APP_VERSION}")
    subparsers = parser.add_subparsers(dest="command", required=True)

    verify = subparsers.add_parser("verify", parents=[common], help="Check the axioms")
    verify.add_argument("--rep", help="Also check a representation file")

    subparsers.add_parser("annihilator", parents=[common], help="Hom-annihilator")

    derivations = subparsers.add_parser("derivations", parents=[common], help="(Anti)derivation spaces")
    derivations.add_argument("--k", type=int, default=0, help="Power of alpha")
    derivations.add_argument("--anti", action="store_true", help="Antiderivations")
    derivations.add_argument("--rep", help="Values in a representation file")

    cohomology = subparsers.add_parser("cohomology", parents=[common], help="Zigzag cohomology")
    cohomology.add_argument("--n", type=_non_negative, required=True, help="Degree")
    _add_representation_selector(cohomology, required=True)

    rb = subparsers.add_parser("rb", parents=[common], help="Relative Rota-Baxter operator")
    rb.add_argument("--op", required=True, help="Operator file, a map V -> A")
    _add_representation_selector(rb, required=False, default=" (the default, S = 0)")
    rb.add_argument("--n", type=_non_negative, help="Also compute the operator's cohomology")

    nijenhuis = subparsers.add_parser("nijenhuis", parents=[common], help="Nijenhuis operator")
    nijenhuis.add_argument("--op", required=True, help="Operator file, a map A -> A")

    deform = subparsers.add_parser("deform", parents=[common], help="Deformations and rigidity")
    deform.add_argument("--series", help="Series file; the rigidity probe runs when omitted")
    _add_representation_selector(deform, required=False, default=" for operator series (the default, S = 0)")

    extend = subparsers.add_parser("extend", parents=[common], help="One-dimensional extensions")
    source = extend.add_mutually_exclusive_group(required=True)
    source.add_argument("--theta", help="Form file for a central extension")
    source.add_argument("--op", help="Operator file for an extension by an antiderivation")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging(args.log_level)
    settings = get_settings()
    if args.max_degree is not None:
        settings = settings.model_copy(update={"MAX_DEGREE": args.max_degree})

    try:
        outcome = COMMANDS[args.command](args, Services.build(settings))
    except AppError as e:
        logger.debug("Command %s failed: %s", args.command, e.code)
        print(f"error: {e.message}", file=sys.stderr)
        if args.json:
            print(json.dumps({"error": e.payload()}, indent=2))
        return EXIT_INPUT

    if args.json:
        print(json.dumps(outcome.payload.model_dump(mode="json", by_alias=True), indent=2))
    else:
        print("\n".join(outcome.lines))
    return EXIT_OK if outcome.ok else EXIT_VERDICT


if __name__ == "__main__":
    sys.exit(main())
