from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .errors import TheoremViolation


@dataclass(frozen=True)
class Verdict:
    """A yes/no decision together with the data that justifies it.

    ``method`` is ``"homological"``, ``"linear-algebraic"`` or ``"both"``.
    ``decision`` is None when the question does not apply.
    """

    decision: bool | None
    method: str
    certificate: dict[str, Any] = field(default_factory=dict)

    def __bool__(self):
        return bool(self.decision)

    @classmethod
    def agreeing(cls, decisions: dict[str, bool], method: str, certificate=None, algebra=None):
        """Build a verdict from several independent decisions that must coincide."""
        values = set(decisions.values())
        if len(values) != 1:
            raise TheoremViolation(f"decision procedures disagree: {decisions}", algebra)
        cert = dict(certificate or {})
        cert["decisions"] = dict(decisions)
        return cls(values.pop(), method, cert)
