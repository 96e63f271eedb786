"""Run configuration shared by the CLI and the experiment scripts."""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Optional

from .tableaux import DEFAULT_BOUNDS

REPORT_SCHEMA = 1

# per-suite ceilings for checks that are not plain family enumerations
EXTRA_BOUNDS = {"corners-runs": 6, "runs": 9, "nat-words": 5, "displacement": 8, "poly": 7}


@dataclass(frozen=True)
class Bounds:
    families: dict = field(default_factory=lambda: dict(DEFAULT_BOUNDS))
    extra: dict = field(default_factory=lambda: dict(EXTRA_BOUNDS))
    override: Optional[int] = None

    @classmethod
    def from_env(cls) -> "Bounds":
        env = os.environ.get("TABLEAUX_MAX_N")
        return cls(override=int(env) if env else None)

    def limit(self, key: str) -> int:
        if self.override is not None:
            return self.override
        if key in self.families:
            return self.families[key]
        return self.extra[key]


@dataclass(frozen=True)
class RunConfig:
    max_n: Optional[int] = None
    parallel: int = 1
    report: str = "text"
    timings: bool = False
    seed: Optional[int] = None  # reserved; every computation here is deterministic
    bounds: Bounds = field(default_factory=Bounds.from_env)

    def clamp(self, key: str, default: int) -> tuple[int, Optional[str]]:
        """Effective upper index for a check, and a warning when the request was clamped."""
        want = default if self.max_n is None else self.max_n
        cap = self.bounds.limit(key)
        if want > cap:
            return cap, f"max-n {want} clamped to {cap} for {key} (set TABLEAUX_MAX_N to raise it)"
        return want, None
