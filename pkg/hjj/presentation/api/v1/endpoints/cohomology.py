"""Cohomology API endpoints."""
from fastapi import APIRouter

from hjj.application.cohomology.dtos import CohomologyReportResponse, CohomologyRequest
from hjj.application.cohomology.services import cohomology_service
from hjj.application.representation.services import representation_service
from hjj.core.async_utils import run_sync
from hjj.infrastructure.files.loaders import algebra_from_document, representation_from_document

router = APIRouter(prefix="/cohomology", tags=["cohomology"])


@router.post("", response_model=CohomologyReportResponse, response_model_by_alias=True)
async def cohomology(body: CohomologyRequest) -> CohomologyReportResponse:
    """Zigzag cohomology in one degree."""
    a = algebra_from_document(body.algebra)
    if body.representation is not None:
        rep = representation_from_document(body.representation, a)
    elif body.trivial:
        rep = representation_service.trivial_rep(a)
    else:
        rep = representation_service.adjoint_rep(a, body.adjoint or 0)
    report = await run_sync(cohomology_service.cohomology, rep, body.degree)
    return CohomologyReportResponse.from_report(report)
