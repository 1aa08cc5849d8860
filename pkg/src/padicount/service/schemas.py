"""Request and response models for the counting service."""

from pydantic import BaseModel, Field


class TaskParams(BaseModel):
    p: int = Field(ge=3, description="odd prime base of the modulus")
    e: int = Field(ge=1, description="exponent of the modulus p^e")
    budget: int | None = Field(default=None, ge=1, description="enumeration budget")


class FixedPointsRequest(TaskParams):
    g: int = Field(description="base of the exponential map")
    enumerate: bool = Field(default=False, description="include the solutions")
    oracle: bool = Field(default=False, description="cross-check by brute force")


class WalksRequest(TaskParams):
    g: int
    k: int = Field(ge=1, description="walk length")
    enumerate: bool = False
    oracle: bool = False


class TwoCyclesRequest(TaskParams):
    g: int | None = Field(default=None, description="fixed base; omit for the total")
    enumerate: bool = False
    oracle: bool = False


class SelfPowerRequest(TaskParams):
    c: int = Field(description="target value of x^x")
    enumerate: bool = False
    oracle: bool = False


class CollisionsRequest(TaskParams):
    enumerate: bool = False
    oracle: bool = False


class ConjectureRequest(TaskParams):
    pass


class VerifyRequest(BaseModel):
    max_p: int = Field(ge=3, description="sweep odd primes up to this bound")
    max_e: int = Field(ge=1, description="sweep exponents up to this bound")
    budget: int | None = Field(default=None, ge=1)


class CountReport(BaseModel):
    task: str
    params: dict[str, int]
    formula_count: int | None = None
    enumerated_count: int | None = None
    oracle_count: int | None = None
    solutions: list[int] | list[list[int]] | None = None
    agree: bool


class Bucket(BaseModel):
    residue: int
    count: int


class ConjectureReport(BaseModel):
    task: str
    params: dict[str, int]
    enumerated_count: int
    reference_count: int
    bucket_reference_count: int
    buckets: list[Bucket]
    agree: bool


class Check(BaseModel):
    label: str
    agree: bool


class VerifyReport(BaseModel):
    task: str
    params: dict[str, int]
    checks_run: int
    failures: list[str]
    checks: list[Check]
    agree: bool


class Health(BaseModel):
    status: str
    version: str


class Error(BaseModel):
    error: str
    detail: str
