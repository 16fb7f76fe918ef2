import re
from typing import List, Literal, Optional, Tuple

from pydantic import BaseModel, field_validator, model_validator

from configs.settings import settings
from roots.root_systems import RootSystemId
from scalars.field import FieldMode, Scalar, parse_rational

_RANGE = re.compile(r"^\s*(\d+)\s*\.\.\s*(\d+)\s*$")

# accepted spellings of the closed-form candidate source, canonical first
CANDIDATE_SOURCES = ("closed-form", "paper")


def parse_support(text: str) -> List[int]:
    """``"1..5"`` or ``"1,2,4"`` to a sorted list of 1-based coordinates."""
    match = _RANGE.match(text)
    if match:
        low, high = int(match.group(1)), int(match.group(2))
        points = list(range(low, high + 1))
    else:
        try:
            points = [int(part) for part in text.split(",") if part.strip()]
        except ValueError:
            raise ValueError(f"malformed support {text!r}")
    if not points or min(points) < 1:
        raise ValueError(f"support {text!r} must list positive coordinates")
    return sorted(set(points))


class AnalysisRequest(BaseModel):
    """One idempotent of one Matsuo algebra to analyse."""

    family: Literal["A", "D", "E"]
    rank: int
    alpha: str = settings.DEFAULT_ALPHA
    hat: bool = False
    axis: Optional[int] = None
    identity: Optional[str] = None
    coset: Optional[str] = None
    candidates: Optional[Literal["closed-form", "paper"]] = None
    output_format: Literal["json", "table"] = "json"
    kac_hits: Optional[Tuple[int, int]] = None

    @field_validator("alpha")
    @classmethod
    def _alpha_parses(cls, value: str) -> str:
        value = value.strip()
        if value != "symbolic":
            parse_rational(value)
        return value

    @field_validator("candidates")
    @classmethod
    def _canonical_candidates(cls, value: Optional[str]) -> Optional[str]:
        return CANDIDATE_SOURCES[0] if value is not None else None

    @model_validator(mode="after")
    def _one_target(self) -> "AnalysisRequest":
        chosen = [name for name in ("axis", "identity", "coset") if getattr(self, name) is not None]
        if len(chosen) != 1:
            raise ValueError("exactly one of axis, identity, coset must be given")

        system = self.root_system()
        if self.axis is not None and not 0 <= self.axis < system.positive_root_count:
            raise ValueError(f"axis index {self.axis} outside 0..{system.positive_root_count - 1}")
        supports = []
        if self.identity is not None:
            supports = [parse_support(self.identity)]
        if self.coset is not None:
            supports = list(self.coset_supports())
        for support in supports:
            if max(support) > system.ambient_dimension:
                raise ValueError(
                    f"support {support} exceeds the {system.ambient_dimension} coordinates of {system}"
                )
        return self

    @property
    def mode(self) -> FieldMode:
        return FieldMode.SYMBOLIC if self.alpha == "symbolic" else FieldMode.RATIONAL

    def alpha_scalar(self) -> Scalar:
        if self.mode == FieldMode.SYMBOLIC:
            return Scalar.symbol()
        return parse_rational(self.alpha)

    def root_system(self) -> RootSystemId:
        return RootSystemId(self.family, self.rank)

    def identity_support(self) -> List[int]:
        return parse_support(self.identity)

    def coset_supports(self) -> Tuple[List[int], List[int]]:
        outer, sep, inner = self.coset.partition("/")
        if not sep:
            raise ValueError(f"coset {self.coset!r} must read OUTER/INNER, e.g. 1..5/1..4")
        outer_points, inner_points = parse_support(outer), parse_support(inner)
        if not set(inner_points) <= set(outer_points):
            raise ValueError(f"inner support {inner_points} is not inside {outer_points}")
        return outer_points, inner_points
