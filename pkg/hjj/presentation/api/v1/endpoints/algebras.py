"""Algebra API endpoints."""
from fastapi import APIRouter

from hjj.application.algebra.dtos import AnnihilatorResponse, AxiomReportResponse, SubspaceDTO
from hjj.application.algebra.services import algebra_service
from hjj.core.async_utils import run_sync
from hjj.infrastructure.files.loaders import algebra_from_document
from hjj.infrastructure.files.schemas import AlgebraFile

router = APIRouter(prefix="/algebras", tags=["algebras"])


@router.post("/verify", response_model=AxiomReportResponse)
async def verify_algebra(body: AlgebraFile) -> AxiomReportResponse:
    """Check commutativity, multiplicativity and the Hom-Jacobi identity."""
    a = algebra_from_document(body)
    report = await run_sync(algebra_service.verify_algebra, a)
    return AxiomReportResponse.from_report(report, a.basis_labels)


@router.post("/annihilator", response_model=AnnihilatorResponse)
async def hom_annihilator(body: AlgebraFile) -> AnnihilatorResponse:
    a = algebra_from_document(body)
    s = await run_sync(algebra_service.hom_annihilator, a)
    return AnnihilatorResponse(annihilator=SubspaceDTO.from_subspace(s), basis_labels=list(a.basis_labels))
