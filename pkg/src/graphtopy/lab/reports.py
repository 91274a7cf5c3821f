"""Demo reports: claims, the evidence computed for them, and verdicts."""

from typing import Any

from pydantic import BaseModel, ConfigDict, Field, computed_field

COMPUTATIONAL_SCOPE = (
    "Only the computational steps are checked: cycle counts and the "
    "constructed (co)limits. Statements about every possible model structure "
    "are not verified by these computations."
)


class Claim(BaseModel):
    """One checked statement.

    `expected` is None for informational rows, which never fail a report.
    """

    model_config = ConfigDict(frozen=True)

    claim: str
    evidence: dict[str, Any] = Field(default_factory=dict)
    holds: bool
    expected: bool | None = True

    @property
    def as_expected(self) -> bool:
        return self.expected is None or self.holds == self.expected


class DemoReport(BaseModel):
    demo: str
    claims: list[Claim] = Field(default_factory=list)
    note: str = COMPUTATIONAL_SCOPE

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        return all(c.as_expected for c in self.claims)

    def add(
        self,
        claim: str,
        holds: bool,
        expected: bool | None = True,
        **evidence: Any,
    ) -> "DemoReport":
        self.claims.append(
            Claim(claim=claim, evidence=evidence, holds=holds, expected=expected)
        )
        return self

    def extend(self, other: "DemoReport", prefix: str = "") -> "DemoReport":
        for c in other.claims:
            self.claims.append(c.model_copy(update={"claim": prefix + c.claim}))
        return self
