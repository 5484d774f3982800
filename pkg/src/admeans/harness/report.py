"""Property-suite reports and their JSON schema.

A serialized report is a JSON object::

    {
      "schema": "admeans.report/1",
      "suite": str,
      "polarity": "normal" | "inverted",
      "trials": int,
      "violations": int,
      "passed": bool,
      "wall_time": float,            # seconds
      "spec": {dim, seed, conditioning, count, min_dim} | null,
      "stats": {...},                # suite-specific aggregates
      "witnesses": [
        {"seed": int, "index": int, "dim": int,
         "inputs": {name: matrix-object | number | str},
         "observed": {...},
         "oracle": "genuine" | "roundoff" | "unsupported"  # only with oracle mode
        }, ...]
    }

Matrix objects use the ``{"rows", "cols", "data"}`` layout of
:mod:`admeans.harness.io`.  Inverted-polarity suites count refutations
as "violations" and pass when at least one is found.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

SCHEMA = "admeans.report/1"


@dataclass
class PropertyReport:
    suite: str
    trials: int
    violations: int = 0
    witnesses: list[dict] = field(default_factory=list)
    wall_time: float = 0.0
    inverted: bool = False
    spec: dict | None = None
    stats: dict = field(default_factory=dict)

    def __post_init__(self):
        if not 0 <= self.violations <= self.trials:
            raise ValueError("violations must lie in [0, trials]")

    @property
    def passed(self) -> bool:
        if self.inverted:
            return self.violations > 0
        return self.violations == 0

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "suite": self.suite,
            "polarity": "inverted" if self.inverted else "normal",
            "trials": self.trials,
            "violations": self.violations,
            "passed": self.passed,
            "wall_time": self.wall_time,
            "spec": self.spec,
            "stats": self.stats,
            "witnesses": self.witnesses,
        }

    @classmethod
    def from_dict(cls, obj: dict) -> "PropertyReport":
        if obj.get("schema") != SCHEMA:
            raise ValueError(f"unsupported report schema {obj.get('schema')!r}")
        return cls(
            suite=obj["suite"],
            trials=obj["trials"],
            violations=obj["violations"],
            witnesses=list(obj["witnesses"]),
            wall_time=obj["wall_time"],
            inverted=obj["polarity"] == "inverted",
            spec=obj["spec"],
            stats=dict(obj["stats"]),
        )

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_json(cls, text: str) -> "PropertyReport":
        return cls.from_dict(json.loads(text))

    def summary(self) -> str:
        polarity = " [inverted: refutations expected]" if self.inverted else ""
        status = "PASS" if self.passed else "FAIL"
        return (f"{status} {self.suite}{polarity}: {self.violations}/{self.trials} "
                f"{'refutations' if self.inverted else 'violations'} in {self.wall_time:.2f}s")


def spec_dict(spec) -> dict:
    return asdict(spec)
