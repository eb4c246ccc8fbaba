"""Run configuration, loadable from JSON or TOML and overridable from the command line."""

from __future__ import annotations

import json
import sys
from dataclasses import asdict, dataclass, field, fields, replace
from pathlib import Path

from sympy import isprime

from ..arith.poly import DEFAULT_SEED

if sys.version_info >= (3, 11):
    import tomllib
else:  # pragma: no cover
    import tomli as tomllib

DEFAULT_DISCS = (4, 28, 36, 267)


@dataclass(frozen=True)
class ScreenConfig:
    q: int = 251
    p_min: int = 2
    p_max: int = 500
    primes: tuple[int, ...] | None = None
    discs: tuple[int, ...] | None = DEFAULT_DISCS  # None: suggest automatically
    disc_search_bound: int = 300
    max_class_number: int = 2
    class_number_bound: int = 10**7
    normalization: str = "aut"
    out: str | None = None
    cache_dir: str | None = None
    jobs: int = 1
    seed: int = DEFAULT_SEED  # root splitting over F_{q^2}

    def __post_init__(self):
        if not isprime(self.q) or self.q % 4 != 3:
            raise ValueError(f"q = {self.q} must be a prime congruent to 3 mod 4")
        if self.p_min < 1 or self.p_max < self.p_min:
            raise ValueError(f"bad p range [{self.p_min}, {self.p_max}]")
        if self.jobs < 1:
            raise ValueError("jobs must be positive")
        if self.normalization not in ("aut", "units"):
            raise ValueError(f"unknown normalization {self.normalization!r}")
        for name in ("primes", "discs"):
            v = getattr(self, name)
            if v is not None and not isinstance(v, tuple):
                object.__setattr__(self, name, tuple(int(x) for x in v))

    @classmethod
    def from_file(cls, path) -> ScreenConfig:
        path = Path(path)
        text = path.read_text()
        if path.suffix == ".toml":
            data = tomllib.loads(text)
        else:
            data = json.loads(text)
        known = {f.name for f in fields(cls)}
        extra = set(data) - known
        if extra:
            raise ValueError(f"unknown config keys: {sorted(extra)}")
        return cls(**data)

    def override(self, **kw) -> ScreenConfig:
        return replace(self, **{k: v for k, v in kw.items() if v is not None})

    def to_json(self) -> dict:
        d = asdict(self)
        for k in ("primes", "discs"):
            if d[k] is not None:
                d[k] = list(d[k])
        return d
