"""Pytest configuration and fixtures."""
from collections.abc import AsyncGenerator

import pytest
import pytest_asyncio
from httpx import ASGITransport, AsyncClient

from hjj.application.algebra.services import AlgebraService
from hjj.application.cohomology.services import CohomologyService
from hjj.application.deformation.services import DeformationService
from hjj.application.derivation.services import DerivationService
from hjj.application.extension.services import ExtensionService
from hjj.application.representation.services import RepresentationService
from hjj.application.rotabaxter.services import RotaBaxterService
from hjj.core.config import Settings
from hjj.domain.algebra.entities import HomAlgebra
from hjj.domain.representation.entities import Representation
from hjj.main import create_app
from hjj.presentation.cli import Services
from tests import factories


# ==========================================
# Algebras
# ==========================================

@pytest.fixture
def alg2() -> HomAlgebra:
    return factories.alg2()


@pytest.fixture
def alg3() -> HomAlgebra:
    return factories.alg3()


@pytest.fixture
def abel1() -> HomAlgebra:
    return factories.abel1()


@pytest.fixture
def point1() -> HomAlgebra:
    return factories.point1()


# ==========================================
# Services
# ==========================================

@pytest.fixture
def settings() -> Settings:
    return Settings(MAX_DEGREE=4, ASSERT_INVARIANTS=True)


@pytest.fixture
def services(settings: Settings) -> Services:
    return Services.build(settings)


@pytest.fixture
def algebras(services: Services) -> AlgebraService:
    return services.algebras


@pytest.fixture
def representations(services: Services) -> RepresentationService:
    return services.representations


@pytest.fixture
def derivations(services: Services) -> DerivationService:
    return services.derivations


@pytest.fixture
def cohomology(services: Services) -> CohomologyService:
    return services.cohomology


@pytest.fixture
def extensions(services: Services) -> ExtensionService:
    return services.extensions


@pytest.fixture
def rota_baxter(services: Services) -> RotaBaxterService:
    return services.rota_baxter


@pytest.fixture
def deformation(services: Services) -> DeformationService:
    return services.deformation


@pytest.fixture
def alg2_adjoint(representations: RepresentationService, alg2: HomAlgebra) -> Representation:
    return representations.adjoint_rep(alg2, 0)


@pytest.fixture
def alg2_trivial(representations: RepresentationService, alg2: HomAlgebra) -> Representation:
    return representations.trivial_rep(alg2)


# ==========================================
# HTTP
# ==========================================

@pytest_asyncio.fixture
async def client() -> AsyncGenerator[AsyncClient, None]:
    """Create test client."""
    transport = ASGITransport(app=create_app())
    async with AsyncClient(transport=transport, base_url="http://test") as ac:
        yield ac
