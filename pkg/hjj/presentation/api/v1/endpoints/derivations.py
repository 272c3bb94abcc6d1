"""Derivation API endpoints."""
from fastapi import APIRouter

from hjj.application.derivation.dtos import DerivationRequest, DerivationSpaceResponse
from hjj.application.derivation.services import derivation_service
from hjj.core.async_utils import run_sync
from hjj.domain.derivation.entities import DerivationQuery, map_from_coordinates
from hjj.infrastructure.files.loaders import algebra_from_document, representation_from_document

router = APIRouter(prefix="/derivations", tags=["derivations"])


@router.post("", response_model=DerivationSpaceResponse)
async def derivation_space(body: DerivationRequest) -> DerivationSpaceResponse:
    """Basis of the alpha^k-(anti)derivations, with values in a representation when one is given."""
    a = algebra_from_document(body.algebra)
    rep = representation_from_document(body.representation, a) if body.representation else None
    q = DerivationQuery(a, rep, body.k, body.anti)
    space = await run_sync(derivation_service.derivation_space, q)
    dim_v = rep.dim_v if rep else a.dim
    maps = [map_from_coordinates(v, dim_v, a.dim) for v in space.vectors]
    return DerivationSpaceResponse.from_space(q, space, maps)
