"""FastAPI service wrapping the library.

Every endpoint is a stateless wrapper over a pure function; domain errors
(bad permutation or pattern text, brute-force bound exceeded) surface as
HTTP 400.  Run with ``cyclemesh serve`` or ``uvicorn cyclemesh.service:app``.
"""

from __future__ import annotations

from dataclasses import asdict

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import __version__, counting, schemas
from .counting import VerificationReport
from .foata import foata_forward, foata_inverse
from .mesh import count_occurrences, named_pattern, occurrences, parse_pattern
from .perms import (
    Permutation,
    cycle_decomposition,
    left_to_right_minima,
    q_cycle_profile,
    strong_fixed_points,
)

app = FastAPI(
    title="cyclemesh",
    version=__version__,
    description="Adjacent q-cycle statistics, the fundamental transformation, "
    "mesh-pattern queries, exact series, and exhaustive verification runs.",
)


@app.exception_handler(ValueError)
async def _value_error(_request: Request, exc: ValueError) -> JSONResponse:
    return JSONResponse(status_code=400, content={"detail": str(exc)})


def _report_response(report: VerificationReport) -> schemas.ReportResponse:
    return schemas.ReportResponse(
        title=report.title,
        passed=report.passed,
        checks=[schemas.CheckModel(**asdict(check)) for check in report.checks],
    )


@app.get("/health")
def health() -> dict[str, str]:
    return {"status": "ok", "version": __version__}


@app.post("/foata", response_model=schemas.PermResponse)
def foata_route(req: schemas.FoataRequest) -> schemas.PermResponse:
    perm = Permutation.from_text(req.perm)
    image = foata_forward(perm) if req.direction == "forward" else foata_inverse(perm)
    return schemas.PermResponse(perm=image.to_text())


@app.post("/perm/info", response_model=schemas.PermInfoResponse)
def perm_info(req: schemas.PermInfoRequest) -> schemas.PermInfoResponse:
    perm = Permutation.from_text(req.perm)
    return schemas.PermInfoResponse(
        perm=perm.to_text(),
        size=len(perm),
        cycles=cycle_decomposition(perm).to_text(),
        left_to_right_minima=list(left_to_right_minima(perm)),
        strong_fixed_points=list(strong_fixed_points(perm)),
        adjacent_cycle_counts=q_cycle_profile(perm).as_dict(),
    )


@app.post("/pattern/parse", response_model=schemas.PatternResponse)
def pattern_parse(req: schemas.PatternRequest) -> schemas.PatternResponse:
    pattern = parse_pattern(req.pattern)
    return schemas.PatternResponse(
        canonical=pattern.to_text(),
        word=pattern.word.to_text(),
        shaded=sorted(pattern.shaded),
    )


@app.post("/mesh/count", response_model=schemas.CountResponse)
def mesh_count(req: schemas.MeshQueryRequest) -> schemas.CountResponse:
    pattern = parse_pattern(req.pattern)
    perm = Permutation.from_text(req.perm)
    return schemas.CountResponse(count=count_occurrences(pattern, perm))


@app.post("/mesh/occurrences", response_model=schemas.OccurrencesResponse)
def mesh_occurrences(req: schemas.MeshQueryRequest) -> schemas.OccurrencesResponse:
    pattern = parse_pattern(req.pattern)
    perm = Permutation.from_text(req.perm)
    return schemas.OccurrencesResponse(
        occurrences=[list(occ) for occ in occurrences(pattern, perm)]
    )


@app.post("/mesh/avoiders", response_model=schemas.AvoidersResponse)
def mesh_avoiders(req: schemas.AvoidersRequest) -> schemas.AvoidersResponse:
    pattern = parse_pattern(req.pattern)
    avoiders = counting.avoiding_permutations(pattern, req.n)
    return schemas.AvoidersResponse(
        count=len(avoiders),
        avoiders=[perm.to_text() for perm in avoiders] if req.list_avoiders else None,
    )


@app.post("/series", response_model=schemas.SeriesResponse)
def series(req: schemas.SeriesRequest) -> schemas.SeriesResponse:
    if req.which == "a2":
        result = counting.a2_series(req.terms)
    elif req.which == "f":
        result = counting.f_series(req.terms)
    else:
        result = counting.avoider_series(named_pattern("p"), req.terms)
    return schemas.SeriesResponse(which=req.which, coefficients=[str(c) for c in result.coeffs])


@app.post("/verify/theorem1", response_model=schemas.ReportResponse)
def verify_theorem1(req: schemas.Theorem1Request) -> schemas.ReportResponse:
    return _report_response(counting.verify_theorem1(req.max_n))


@app.post("/verify/conjecture", response_model=schemas.ReportResponse)
def verify_conjecture(req: schemas.ConjectureRequest) -> schemas.ReportResponse:
    return _report_response(counting.verify_conjecture(req.max_n, req.series_terms))
