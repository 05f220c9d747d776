"""Finite group and group spec models."""

import re
from dataclasses import dataclass, field
from functools import cached_property

from pydantic import BaseModel, Field, field_validator, model_validator

from src.powergraph_spectra.core.enums import GroupFamily
from src.powergraph_spectra.core.exceptions import InvalidGroupSpecError
from src.powergraph_spectra.utils.decorators import translate_validation_errors
from src.powergraph_spectra.utils.numbers import is_prime


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """Finite group stored as an explicit multiplication table.

    Elements are the indices 0..order-1 and ``table[i][j]`` is the index of
    the product i*j.
    """

    table: tuple[tuple[int, ...], ...]
    identity: int
    labels: tuple[str, ...]
    name: str = field(default="")

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def elements(self) -> range:
        return range(self.order)

    def op(self, a: int, b: int) -> int:
        return self.table[a][b]

    @cached_property
    def inverses(self) -> tuple[int, ...]:
        result = [-1] * self.order
        for a in self.elements:
            row = self.table[a]
            for b in self.elements:
                if row[b] == self.identity:
                    result[a] = b
                    break
        return tuple(result)

    def inverse(self, a: int) -> int:
        return self.inverses[a]

    def power(self, a: int, k: int) -> int:
        """a^k for k >= 0."""
        result = self.identity
        for _ in range(k % self.element_order(a)):
            result = self.table[result][a]
        return result

    @cached_property
    def cyclic_subgroups(self) -> tuple[frozenset[int], ...]:
        """<a> for every element a, indexed by a."""
        subgroups = []
        for a in self.elements:
            members = {self.identity}
            current = a
            while current != self.identity:
                members.add(current)
                current = self.table[current][a]
            subgroups.append(frozenset(members))
        return tuple(subgroups)

    def cyclic_subgroup(self, a: int) -> frozenset[int]:
        return self.cyclic_subgroups[a]

    @cached_property
    def element_orders(self) -> tuple[int, ...]:
        return tuple(len(h) for h in self.cyclic_subgroups)

    def element_order(self, a: int) -> int:
        return self.element_orders[a]

    def order_census(self) -> dict[int, int]:
        """Number of elements of each order."""
        census: dict[int, int] = {}
        for k in self.element_orders:
            census[k] = census.get(k, 0) + 1
        return dict(sorted(census.items()))

    def commutes(self, a: int, b: int) -> bool:
        return self.table[a][b] == self.table[b][a]

    def is_abelian(self) -> bool:
        return all(self.commutes(a, b) for a in self.elements for b in range(a))

    def center(self) -> list[int]:
        return [a for a in self.elements if all(self.commutes(a, b) for b in self.elements)]

    def is_cyclic(self) -> bool:
        return self.order in self.element_orders

    def label_of(self, a: int) -> str:
        return self.labels[a]


# Parameter count per family (gi5 accepts three and defaults i to 1)
PARAM_COUNTS: dict[GroupFamily, tuple[int, ...]] = {
    GroupFamily.CYCLIC: (1,),
    GroupFamily.DIHEDRAL: (1,),
    GroupFamily.DICYCLIC: (1,),
    GroupFamily.FROBENIUS: (2,),
    GroupFamily.F_P_QR: (3,),
    GroupFamily.G_I5: (3, 4),
    GroupFamily.ZP_ZP2: (1,),
    GroupFamily.ELEM_ABELIAN_P3: (1,),
    GroupFamily.ZP_SEMIDIRECT_ZP2: (1,),
    GroupFamily.HEISENBERG: (1,),
    GroupFamily.Z2_SEMIDIRECT_Z4: (0,),
}


def precondition_errors(family: GroupFamily, params: tuple[int, ...]) -> list[str]:
    """Arithmetic preconditions of a family that the parameters violate.

    Args:
        family: Group family
        params: Integer parameters in grammar order

    Returns:
        Human-readable violations (empty when valid)
    """
    if len(params) not in PARAM_COUNTS[family]:
        expected = " or ".join(str(c) for c in PARAM_COUNTS[family])
        return [f"{family.value} takes {expected} parameter(s), got {len(params)}"]

    errors: list[str] = []

    def need_prime(name: str, value: int) -> None:
        if not is_prime(value):
            errors.append(f"{name}={value} must be prime")

    if family == GroupFamily.CYCLIC:
        if params[0] < 1:
            errors.append("n must be >= 1")
    elif family in (GroupFamily.DIHEDRAL, GroupFamily.DICYCLIC):
        if params[0] < 2:
            errors.append("n must be >= 2")
    elif family == GroupFamily.FROBENIUS:
        p, q = params
        need_prime("p", p)
        need_prime("q", q)
        if not errors and (p - 1) % q != 0:
            errors.append(f"p={p} must satisfy p = 1 (mod q={q})")
    elif family == GroupFamily.F_P_QR:
        p, q, r = params
        need_prime("p", p)
        need_prime("q", q)
        need_prime("r", r)
        if not errors and (p - 1) % (q * r) != 0:
            errors.append(f"p={p} must satisfy p = 1 (mod qr={q * r})")
    elif family == GroupFamily.G_I5:
        p, q, r = params[:3]
        i = params[3] if len(params) == 4 else 1
        need_prime("p", p)
        need_prime("q", q)
        need_prime("r", r)
        if not errors:
            if p == q:
                errors.append("p and q must be distinct")
            if (p - 1) % r != 0:
                errors.append(f"p={p} must satisfy p = 1 (mod r={r})")
            if (q - 1) % r != 0:
                errors.append(f"q={q} must satisfy q = 1 (mod r={r})")
            if not 1 <= i <= r - 1:
                errors.append(f"i={i} must satisfy 1 <= i <= r-1")
    elif family != GroupFamily.Z2_SEMIDIRECT_Z4:
        need_prime("p", params[0])
    return errors


def check_preconditions(family: GroupFamily, params: tuple[int, ...]) -> None:
    """Raise if the parameters violate the family's preconditions.

    Raises:
        InvalidGroupSpecError: On any violation
    """
    errors = precondition_errors(family, params)
    if errors:
        raise InvalidGroupSpecError(f"{family.value}: " + "; ".join(errors))


class GroupFactor(BaseModel):
    """One factor of a group spec: a family tag with integer parameters."""

    family: GroupFamily = Field(..., description="Family tag")
    params: tuple[int, ...] = Field(default=(), description="Integer parameters")

    @model_validator(mode="after")
    def validate_preconditions(self) -> "GroupFactor":
        """Check family parameter arithmetic."""
        errors = precondition_errors(self.family, self.params)
        if errors:
            raise ValueError(f"{self.family.value}: " + "; ".join(errors))
        return self

    def __str__(self) -> str:
        if not self.params:
            return self.family.value
        return f"{self.family.value}:{','.join(str(v) for v in self.params)}"


_FACTOR_PATTERN = re.compile(r"^\s*([a-z0-9]+)\s*(?::\s*([0-9,\s]*))?\s*$")
_PRODUCT_SPLIT = re.compile(r"\s+x\s+")


class GroupSpec(BaseModel):
    """Group description: a direct product of one or more family factors."""

    factors: tuple[GroupFactor, ...] = Field(..., min_length=1)

    @field_validator("factors", mode="before")
    @classmethod
    def parse_factors(cls, v):
        """Accept a single factor or a list."""
        if isinstance(v, GroupFactor | dict):
            return (v,)
        return v

    @classmethod
    @translate_validation_errors(InvalidGroupSpecError)
    def parse(cls, text: str) -> "GroupSpec":
        """Parse the text grammar, e.g. ``cyclic:2 x frobenius:7,3``.

        Raises:
            InvalidGroupSpecError: On unknown families, malformed parameters
                or violated preconditions
        """
        factors = []
        for token in _PRODUCT_SPLIT.split(text.strip()):
            match = _FACTOR_PATTERN.match(token)
            if match is None:
                raise InvalidGroupSpecError(f"Malformed group factor: {token!r}")
            name, raw = match.group(1), match.group(2)
            try:
                family = GroupFamily(name)
            except ValueError as e:
                raise InvalidGroupSpecError(f"Unknown group family: {name!r}") from e
            values = [v.strip() for v in (raw or "").split(",") if v.strip()]
            factors.append({"family": family, "params": tuple(int(v) for v in values)})
        return cls(factors=factors)

    @property
    def is_product(self) -> bool:
        return len(self.factors) > 1

    def __str__(self) -> str:
        return " x ".join(str(f) for f in self.factors)
