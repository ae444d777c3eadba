"""
FastAPI Web API for germ-lab
Exposes the tree, continued-fraction, resolution, classification and verification queries
"""

from datetime import datetime
from typing import List, Optional

from fastapi import FastAPI, HTTPException, Query
from pydantic import BaseModel, Field

from . import __version__
from .config.loader import Cfg, check_max_degree, default_config
from .core.blowup import resolve
from .core.chains import hj_expand
from .core.monodromy import classify
from .core.pairs_tree import enumerate_to_level
from .output.schemas import GermClassModel, OrbitModel, ResolutionModel, VerifyReportModel, WeightedChainModel
from .pipeline.harness import run_suites
from .utils.errors import EnumerationRefused, InvalidInputError
from .utils.logging_config import get_logger

app = FastAPI(
    title="germ-lab API",
    description="Invariants of germs branched along x^k1 - y^k2 = 0",
    version=__version__,
    docs_url="/docs",
    redoc_url="/redoc",
)

logger = get_logger(__name__)

config: Cfg = default_config()

# Above this level a tree response holds more than 2**18 orbits
MAX_TREE_LEVEL = 20


class HealthResponse(BaseModel):
    status: str = Field(..., description="Service health status")
    version: str = Field(..., description="API version")
    uptime_seconds: int = Field(..., description="Service uptime")


class TreeResponse(BaseModel):
    level: int = Field(..., description="Tree level; {1,1} is level 1")
    count: int = Field(..., description="Number of orbits at the level")
    orbits: List[OrbitModel] = Field(..., description="Orbits in breadth-first order")


class VerifyRequest(BaseModel):
    suite: str = Field("all", description="Suite name or alias")
    bound: Optional[int] = Field(None, description="Sweep bound; per-suite default when omitted", ge=1)


class VerifyResponse(BaseModel):
    ok: bool = Field(..., description="True when no suite reported a failure")
    reports: List[VerifyReportModel] = Field(..., description="Reports sorted by suite name")


start_time = datetime.now()


def _bad_input(e: Exception) -> HTTPException:
    logger.info(f"rejected request: {e}")
    return HTTPException(status_code=422, detail=str(e))


@app.get("/health", response_model=HealthResponse)
async def health_check() -> HealthResponse:
    """Health check endpoint"""
    uptime = (datetime.now() - start_time).total_seconds()
    return HealthResponse(status="healthy", version=__version__, uptime_seconds=int(uptime))


@app.get("/tree/{level}", response_model=TreeResponse)
def tree(level: int) -> TreeResponse:
    """Orbits at one level of the orbit tree"""
    if level > MAX_TREE_LEVEL:
        raise HTTPException(status_code=413, detail=f"level above {MAX_TREE_LEVEL}")
    try:
        orbits = enumerate_to_level(level)
    except InvalidInputError as e:
        raise _bad_input(e)
    return TreeResponse(level=level, count=len(orbits), orbits=[OrbitModel.from_domain(o) for o in orbits])


@app.get("/hj", response_model=WeightedChainModel)
def hj(k: int = Query(..., description="Numerator"), q: int = Query(..., description="Denominator")) -> WeightedChainModel:
    """Hirzebruch-Jung expansion of k/q"""
    try:
        return WeightedChainModel.from_domain(hj_expand(k, q))
    except InvalidInputError as e:
        raise _bad_input(e)


@app.get("/resolve", response_model=ResolutionModel)
def resolve_pair(k1: int, k2: int) -> ResolutionModel:
    """Blowup resolution of x^k1 - y^k2 with its trace"""
    try:
        return ResolutionModel.from_domain(resolve(k1, k2))
    except InvalidInputError as e:
        raise _bad_input(e)


@app.get("/classify", response_model=GermClassModel)
def classify_pair(k1: int, k2: int, max_degree: Optional[int] = None) -> GermClassModel:
    """Lowest-degree germ family over x^k1 - y^k2"""
    try:
        cap = config.enumeration.max_degree if max_degree is None else check_max_degree(max_degree)
        return GermClassModel.from_domain(classify(k1, k2, cap, config.workers.threads))
    except InvalidInputError as e:
        raise _bad_input(e)
    except EnumerationRefused as e:
        raise HTTPException(status_code=413, detail=str(e))


@app.post("/verify", response_model=VerifyResponse)
def verify(request: VerifyRequest) -> VerifyResponse:
    """Run a verification suite (or alias) and return its reports"""
    try:
        reports = run_suites([request.suite], request.bound, cfg=config)
    except InvalidInputError as e:
        raise _bad_input(e)
    logger.info(f"verify {request.suite}: {sum(len(r.failures) for r in reports)} failures")
    return VerifyResponse(
        ok=all(r.ok for r in reports),
        reports=[VerifyReportModel.from_domain(r) for r in reports],
    )
