"""Pydantic request and response models for the HTTP service.

Series coefficients travel as decimal strings: they outgrow what many JSON
consumers accept as numbers long before the default 200-term truncation.
"""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field


class FoataRequest(BaseModel):
    perm: str
    direction: Literal["forward", "inverse"] = "forward"


class PermResponse(BaseModel):
    perm: str


class PermInfoRequest(BaseModel):
    perm: str


class PermInfoResponse(BaseModel):
    perm: str
    size: int
    cycles: str
    left_to_right_minima: list[int]
    strong_fixed_points: list[int]
    adjacent_cycle_counts: dict[int, int]


class PatternRequest(BaseModel):
    pattern: str


class PatternResponse(BaseModel):
    canonical: str
    word: str
    shaded: list[tuple[int, int]]


class MeshQueryRequest(BaseModel):
    pattern: str
    perm: str


class CountResponse(BaseModel):
    count: int


class OccurrencesResponse(BaseModel):
    occurrences: list[list[int]]


class AvoidersRequest(BaseModel):
    pattern: str
    n: int = Field(ge=0)
    list_avoiders: bool = False


class AvoidersResponse(BaseModel):
    count: int
    avoiders: list[str] | None = None


class SeriesRequest(BaseModel):
    which: Literal["a2", "f", "avoiders-p"]
    terms: int = Field(ge=0)


class SeriesResponse(BaseModel):
    which: str
    coefficients: list[str]


class Theorem1Request(BaseModel):
    max_n: int = Field(ge=0)


class ConjectureRequest(BaseModel):
    max_n: int = Field(ge=0)
    series_terms: int = Field(default=100, ge=0)


class CheckModel(BaseModel):
    name: str
    passed: bool
    scanned: int
    detail: str
    counterexample: dict[str, str] | None = None


class ReportResponse(BaseModel):
    title: str
    passed: bool
    checks: list[CheckModel]
