"""Pydantic request/response models for the compute service.

Every request carries the quiver spec inline (the documented JSON schema)
plus an optional scalar field override; responses are plain JSON documents
produced by the library's to_json methods.
"""

from typing import Any, Optional

from pydantic import BaseModel, Field


class QuiverRequest(BaseModel):
    quiver: dict
    field: Optional[str] = Field(default=None, description='"Q" or "Fp:<prime>"')


class PathsRequest(QuiverRequest):
    source: str
    target: str


class QPlusRequest(QuiverRequest):
    depth: int = 6


class RepRequest(QuiverRequest):
    rep: str
    depth: int = 0


class TranslateRequest(QuiverRequest):
    rep: str
    direction: str = "DTr"


class AssRequest(QuiverRequest):
    rep: str
    side: str = "ending_at"


class OrbitRequest(QuiverRequest):
    rep: str


class SigmaRequest(QuiverRequest):
    side: str = "L"
    lo: int = -10
    hi: int = 10


class ComponentRequest(QuiverRequest):
    seed: str  # "preprojective" | "preinjective:<vertex>" | "regular:<rep>"
    depth: int = 4
    width: int = 6


class DerivedRequest(QuiverRequest):
    rep: str
    side: str = "ending_at"


class ConnectingRequest(QuiverRequest):
    depth: int = 3
    width: int = 6


class ErrorResponse(BaseModel):
    error: str
    detail: str = ""
    data: Optional[Any] = None
