"""API v1 main router."""
from fastapi import APIRouter

from hjj.presentation.api.v1.endpoints import algebras, cohomology, derivations

api_router = APIRouter(prefix="/api/v1")

api_router.include_router(algebras.router)
api_router.include_router(derivations.router)
api_router.include_router(cohomology.router)
