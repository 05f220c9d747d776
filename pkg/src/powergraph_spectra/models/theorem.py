"""Theorem parameter and closed-form report models."""

import re

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.powergraph_spectra.config.constants import THEOREM_PARAMS
from src.powergraph_spectra.core.enums import TheoremId
from src.powergraph_spectra.core.exceptions import InvalidTheoremParamsError, PowerGraphSpectraError
from src.powergraph_spectra.models.polynomial import SpectrumFactorization
from src.powergraph_spectra.utils.decorators import translate_validation_errors

_PARAM_PATTERN = re.compile(r"^\s*([a-z])\s*=\s*(-?\d+)\s*$")


def parse_assignments(text: str, error_cls: type[PowerGraphSpectraError]) -> dict[str, int]:
    """Parse ``p=7,q=3,r=2`` into a name to value mapping.

    Raises:
        error_cls: On a malformed pair
    """
    values: dict[str, int] = {}
    for token in (t for t in text.split(",") if t.strip()):
        match = _PARAM_PATTERN.match(token)
        if match is None:
            raise error_cls(f"Malformed parameter: {token.strip()!r}")
        values[match.group(1)] = int(match.group(2))
    return values


def theorem_family(theorem: TheoremId) -> str:
    """Family key of a theorem id, e.g. DL-Fpqr-i -> Fpqr."""
    body = theorem.value.split("-", 1)[1]
    return body.split("-", 1)[0]


class TheoremParams(BaseModel):
    """Named integer parameters of a closed-form theorem."""

    theorem: TheoremId = Field(..., description="Theorem identifier")
    values: dict[str, int] = Field(default_factory=dict, description="Parameter values by name")

    @model_validator(mode="after")
    def validate_names(self) -> "TheoremParams":
        """Require exactly the parameter names of the theorem family."""
        expected = THEOREM_PARAMS[theorem_family(self.theorem)]
        given = set(self.values)
        if given != set(expected):
            missing = [n for n in expected if n not in given]
            extra = sorted(given - set(expected))
            parts = []
            if missing:
                parts.append(f"missing {', '.join(missing)}")
            if extra:
                parts.append(f"unexpected {', '.join(extra)}")
            raise ValueError(f"{self.theorem.value} parameters: " + "; ".join(parts))
        return self

    @classmethod
    @translate_validation_errors(InvalidTheoremParamsError)
    def parse(cls, theorem: TheoremId | str, text: str = "") -> "TheoremParams":
        """Parse ``p=7,q=3,r=2``.

        Raises:
            InvalidTheoremParamsError: On malformed pairs or wrong names
        """
        values = parse_assignments(text, InvalidTheoremParamsError)
        try:
            theorem_id = TheoremId(theorem)
        except ValueError as e:
            raise InvalidTheoremParamsError(f"Unknown theorem: {theorem!r}") from e
        return cls(theorem=theorem_id, values=values)

    def ordered(self) -> tuple[int, ...]:
        """Values in the family's canonical order."""
        return tuple(self.values[n] for n in THEOREM_PARAMS[theorem_family(self.theorem)])

    def __str__(self) -> str:
        names = THEOREM_PARAMS[theorem_family(self.theorem)]
        return ",".join(f"{n}={self.values[n]}" for n in names)


class CandidateForm(BaseModel):
    """Alternative factorization offered for oracle adjudication."""

    label: str = Field(..., description="Short identifier of the alternative")
    factorization: SpectrumFactorization
    note: str = Field(default="", description="What differs from the stated form")

    def to_payload(self) -> dict[str, object]:
        return {"label": self.label, "note": self.note, **self.factorization.to_json_dict()}


class ClosedFormReport(BaseModel):
    """A theorem evaluated at concrete parameters."""

    model_config = ConfigDict(frozen=True)

    theorem: TheoremId
    params: dict[str, int] = Field(default_factory=dict)
    graph_order: int = Field(..., ge=1, description="Order of the graph the polynomial belongs to")
    factorization: SpectrumFactorization = Field(..., description="Stated factors and multiplicities")
    candidates: tuple[CandidateForm, ...] = ()
    caveats: tuple[str, ...] = ()
    cross_checks: dict[str, bool] = Field(default_factory=dict)

    @model_validator(mode="after")
    def validate_degree_caveat(self) -> "ClosedFormReport":
        """A degree that differs from the graph order must come with a caveat."""
        if self.factorization.product_degree != self.graph_order and not self.caveats:
            raise ValueError(
                f"{self.theorem.value}: product degree {self.factorization.product_degree} "
                f"differs from graph order {self.graph_order} without a caveat"
            )
        return self

    @property
    def degree_gap(self) -> int:
        return self.graph_order - self.factorization.product_degree

    def to_payload(self) -> dict[str, object]:
        return {
            "theorem": self.theorem.value,
            "params": {k: str(v) for k, v in self.params.items()},
            "graph_order": str(self.graph_order),
            "product_degree": str(self.factorization.product_degree),
            **self.factorization.to_json_dict(),
            "candidates": [c.to_payload() for c in self.candidates],
            "caveats": list(self.caveats),
            "cross_checks": dict(sorted(self.cross_checks.items())),
        }
