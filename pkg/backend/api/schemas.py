from typing import Any, List, Literal, Optional

from pydantic import BaseModel, Field

from backend.config import get_settings


class CommandRequest(BaseModel):
    verb: str
    arguments: List[str] = Field(default_factory=list)
    m: int = Field(default_factory=lambda: get_settings().default_m)
    monoid: Literal["nat", "weak"] = Field(default_factory=lambda: get_settings().default_monoid)
    basis: Literal["M", "F"] = "M"
    trunc: int = Field(default_factory=lambda: get_settings().default_trunc)
    seed: Optional[int] = None
    random: Optional[int] = None


class CommandResponse(BaseModel):
    exit_code: int
    output: Any = None


class BatchItem(BaseModel):
    command: str
    exit_code: Optional[int] = None
    output: Any = None
    error: Optional[str] = None
