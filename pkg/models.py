# tanh-KG Data Models

import math
from typing import Any, Dict, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class MCPRequest(BaseModel):
    jsonrpc: str = "2.0"
    id: int
    method: str
    params: Dict[str, Any] = {}


class MCPResponse(BaseModel):
    jsonrpc: str = "2.0"
    id: Optional[int] = None
    result: Any = None
    error: Optional[str] = None
    debug_response: Optional[Dict[str, Any]] = None


class PotentialParams(BaseModel):
    """V(x) = a·tanh(b·x) と粒子質量 m（自然単位 ħ = c = 1）"""
    model_config = ConfigDict(frozen=True)

    a: float = 0.0
    b: float = Field(default=1.0, gt=0.0)
    m: float = Field(default=1.0, ge=0.0)

    @field_validator("a", "b", "m")
    @classmethod
    def _finite(cls, value: float) -> float:
        if not math.isfinite(value):
            raise ValueError("parameters must be finite")
        return value


class SweepConfig(BaseModel):
    """エネルギースイープ設定"""
    a: float
    b: float = Field(gt=0.0)
    m: float = Field(ge=0.0)
    e_min: float
    e_max: float
    steps: int = Field(ge=2)
    exclusion_margin: float = Field(default=0.02, ge=0.0)
    output_path: str = "sweep.csv"
    format: Literal["csv", "plot-script"] = "csv"
    workers: int = Field(default=1, ge=1)

    @model_validator(mode="after")
    def _ordered_range(self) -> "SweepConfig":
        if not self.e_min < self.e_max:
            raise ValueError(f"e_min ({self.e_min}) must be below e_max ({self.e_max})")
        return self

    @property
    def params(self) -> PotentialParams:
        return PotentialParams(a=self.a, b=self.b, m=self.m)


class SweepRow(BaseModel):
    """スイープ1行分（閾値近傍では R, T は空）"""
    E: float
    R: Optional[float] = None
    T: Optional[float] = None
    region: str
    superradiant: Optional[bool] = None
