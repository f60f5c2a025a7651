"""Command report schemas.

Every CLI command prints one RunReport as JSON on standard output.
"""
from typing import Any

from pydantic import BaseModel, ConfigDict, Field


class CheckResult(BaseModel):
    """One named pass/fail check.

    Attributes:
        name (str): Check identifier
        passed (bool): Whether the check passed
        details (dict[str, Any]): Quantities the check compared
    """

    model_config = ConfigDict(frozen=True)

    name: str = Field(description="Check identifier")
    passed: bool = Field(description="Whether the check passed")
    details: dict[str, Any] = Field(default_factory=dict, description="Compared quantities")


class RunReport(BaseModel):
    """Machine-readable result of one command.

    Attributes:
        command (str): Subcommand name
        inputs (dict[str, Any]): Echo of the parameters
        outputs (dict[str, Any]): JSON-ready operation results
        checks (list[CheckResult]): Checks performed
        version (str): Artifact version
    """

    command: str = Field(description="Subcommand name")
    inputs: dict[str, Any] = Field(default_factory=dict, description="Echo of the parameters")
    outputs: dict[str, Any] = Field(default_factory=dict, description="Operation results")
    checks: list[CheckResult] = Field(default_factory=list, description="Checks performed")
    version: str = Field(description="Artifact version")

    @property
    def passed(self) -> bool:
        """True when every check passed."""
        return all(check.passed for check in self.checks)
