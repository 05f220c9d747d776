"""Verification, lemma, scan and inequality report models.

Payloads write exact integers as decimal strings; runtimes are logged,
never stored here.
"""

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.powergraph_spectra.core.enums import NumberClass, TheoremId, Verdict
from src.powergraph_spectra.models.polynomial import IntPolynomial, SpectrumFactorization


class FactorVerdict(BaseModel):
    """Divisibility of the oracle polynomial by one stated factor."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    factor: IntPolynomial
    stated_mult: int = Field(..., ge=1, description="Multiplicity claimed by the closed form")
    observed_mult: int = Field(..., ge=0, description="Multiplicity in the oracle polynomial")

    @property
    def ok(self) -> bool:
        return self.observed_mult >= self.stated_mult

    def to_payload(self) -> dict[str, object]:
        return {
            "poly": self.factor.to_json_dict()["coeffs"],
            "stated_mult": self.stated_mult,
            "observed_mult": self.observed_mult,
            "ok": self.ok,
        }


class VerificationReport(BaseModel):
    """A closed form adjudicated against the brute-force oracle."""

    model_config = ConfigDict(frozen=True)

    theorem: TheoremId
    params: dict[str, int] = Field(default_factory=dict)
    graph_order: int = Field(..., ge=1)
    factors: tuple[FactorVerdict, ...] = ()
    equal: bool = Field(..., description="Stated product equals the oracle polynomial")
    degree_gap: int = Field(..., description="Oracle degree minus stated product degree")
    verdict: Verdict
    confirmed_candidate: str | None = Field(
        default=None, description="Label of the alternative form the oracle confirms"
    )
    caveats: tuple[str, ...] = ()
    cross_checks: dict[str, bool] = Field(default_factory=dict)

    @model_validator(mode="after")
    def validate_equality(self) -> "VerificationReport":
        """Full equality implies every factor divides and no degree gap."""
        if self.equal and (self.degree_gap != 0 or not all(f.ok for f in self.factors)):
            raise ValueError("equal report with a failing factor or a degree gap")
        if self.equal != (self.verdict == Verdict.EQUAL):
            raise ValueError(f"verdict {self.verdict.value} inconsistent with equal={self.equal}")
        return self

    @property
    def confirmed(self) -> bool:
        """The stated form or one of its candidates matches the oracle."""
        return self.verdict in (Verdict.EQUAL, Verdict.CANDIDATE_CONFIRMED)

    def to_payload(self) -> dict[str, object]:
        return {
            "theorem": self.theorem.value,
            "params": {k: str(v) for k, v in self.params.items()},
            "graph_order": str(self.graph_order),
            "factors": [f.to_payload() for f in self.factors],
            "equal": self.equal,
            "degree_gap": str(self.degree_gap),
            "verdict": self.verdict.value,
            "confirmed_candidate": self.confirmed_candidate,
            "caveats": list(self.caveats),
            "cross_checks": dict(sorted(self.cross_checks.items())),
        }


class StructureReport(BaseModel):
    """Structural decomposition compared with the group-built graph."""

    family: str
    params: tuple[int, ...] = ()
    group: str = Field(..., description="Group spec the structure describes")
    structure_order: int
    group_order: int
    degree_sequences_equal: bool
    charpolys_equal: dict[str, bool] = Field(
        default_factory=dict, description="Per matrix kind (A, L, DL)"
    )

    @property
    def equal(self) -> bool:
        return (
            self.structure_order == self.group_order
            and self.degree_sequences_equal
            and bool(self.charpolys_equal)
            and all(self.charpolys_equal.values())
        )

    def to_payload(self) -> dict[str, object]:
        return {
            "family": self.family,
            "params": [str(v) for v in self.params],
            "group": self.group,
            "structure_order": str(self.structure_order),
            "group_order": str(self.group_order),
            "degree_sequences_equal": self.degree_sequences_equal,
            "charpolys_equal": self.charpolys_equal,
            "equal": self.equal,
        }


class TwinLemmaReport(BaseModel):
    """Twin-class factors predicted from transmissions against the D^L polynomial."""

    model_config = ConfigDict(frozen=True)

    graph: str
    order: int
    predicted: SpectrumFactorization
    violations: tuple[str, ...] = ()

    @property
    def holds(self) -> bool:
        return not self.violations

    def to_payload(self) -> dict[str, object]:
        return {
            "graph": self.graph,
            "order": str(self.order),
            "predicted": self.predicted.to_json_dict()["factors"],
            "holds": self.holds,
            "violations": list(self.violations),
        }


class Diameter2Report(BaseModel):
    """Laplacian to distance Laplacian transform checked on one graph."""

    graph: str
    order: int
    diameter: int
    holds: bool

    def to_payload(self) -> dict[str, object]:
        return {
            "graph": self.graph,
            "order": str(self.order),
            "diameter": str(self.diameter),
            "holds": self.holds,
        }


class ConjectureRow(BaseModel):
    """Integrality facts of P(Z_n) for one n."""

    n: int = Field(..., ge=2)
    number_class: NumberClass
    algebraic_connectivity_integral: bool
    laplacian_integral: bool
    largest_distance_root_integral: bool
    distance_laplacian_integral: bool
    witness: str | None = Field(
        default=None, description="Residual factor without integer roots, when one exists"
    )

    @property
    def conjectured_integral(self) -> bool:
        return self.number_class != NumberClass.OTHER

    @property
    def violates_laplacian_conjecture(self) -> bool:
        """mu_{n-1} integral, L-integral and the class of n must agree."""
        expected = self.conjectured_integral
        return not (
            self.algebraic_connectivity_integral == expected
            and self.laplacian_integral == expected
        )

    @property
    def violates_distance_conjecture(self) -> bool:
        """Largest D^L root integral, D^L-integral and the class of n must agree."""
        expected = self.conjectured_integral
        return not (
            self.largest_distance_root_integral == expected
            and self.distance_laplacian_integral == expected
        )

    def to_payload(self) -> dict[str, object]:
        return {
            "n": str(self.n),
            "class": self.number_class.value,
            "algebraic_connectivity_integral": self.algebraic_connectivity_integral,
            "laplacian_integral": self.laplacian_integral,
            "largest_distance_root_integral": self.largest_distance_root_integral,
            "distance_laplacian_integral": self.distance_laplacian_integral,
            "violation": self.violates_laplacian_conjecture or self.violates_distance_conjecture,
            "witness": self.witness,
        }


class InequalityCheck(BaseModel):
    """One eigenvalue inequality or spectrum identity evaluated on one graph."""

    name: str
    holds: bool
    detail: str = ""
    asserted: bool = Field(
        default=True, description="False for statements recorded but not claimed to hold"
    )
    applicable: bool = True

    def to_payload(self) -> dict[str, object]:
        return {
            "name": self.name,
            "holds": self.holds,
            "detail": self.detail,
            "asserted": self.asserted,
            "applicable": self.applicable,
        }


class InequalityReport(BaseModel):
    """All applicable eigenvalue inequalities for one group."""

    group: str
    proper: bool = False
    order: int
    checks: tuple[InequalityCheck, ...] = ()

    @property
    def failures(self) -> list[InequalityCheck]:
        return [c for c in self.checks if c.applicable and c.asserted and not c.holds]

    @property
    def holds(self) -> bool:
        return not self.failures

    def check(self, name: str) -> InequalityCheck:
        """Look up a check by name."""
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_payload(self) -> dict[str, object]:
        return {
            "group": self.group,
            "proper": self.proper,
            "order": str(self.order),
            "holds": self.holds,
            "checks": [c.to_payload() for c in self.checks],
        }
