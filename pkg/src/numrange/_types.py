from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Check:
    """Outcome of a numerical yes/no test together with the evidence."""

    ok: bool
    residual: float = 0.0
    detail: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "ok", bool(self.ok))
        object.__setattr__(self, "residual", float(self.residual))

    def __bool__(self):
        return bool(self.ok)

    def as_dict(self):
        return {"ok": bool(self.ok), "residual": float(self.residual), **self.detail}
