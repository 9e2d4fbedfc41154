"""Session defaults shared by the CLI subcommands."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path


@dataclass(frozen=True)
class SessionConfig:
    """Resolved per-invocation parameters.

    The truncation default 2*r*n keeps every coordinate residue class
    nonempty for every subgroup of the (n, r) family.
    """

    n: int = 2
    r: int = 2
    s: int | None = None
    tol: float = 1e-10
    seed: int = 0
    degree: int = 3
    window: int = 4
    maxpow: int = 3

    def __post_init__(self):
        if self.n < 1 or self.r < 1:
            raise ValueError("n and r must be positive")
        if self.s is not None and self.s < self.r:
            raise ValueError("truncation must be at least r")
        if self.tol <= 0:
            raise ValueError("tolerance must be positive")
        if self.degree < 0 or self.window < 0 or self.maxpow < 1:
            raise ValueError("bounds must be positive")

    @property
    def truncation(self) -> int:
        return self.s if self.s is not None else 2 * self.r * self.n


_INT_KEYS = {"n", "r", "s", "seed", "degree", "window", "maxpow"}
_FLOAT_KEYS = {"tol"}


def read_config_file(path: str | Path) -> dict:
    """Parse a key=value file; blank lines and #-comments are ignored."""
    out: dict = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{lineno}: expected key=value, got {raw!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if key in _INT_KEYS:
            out[key] = int(value)
        elif key in _FLOAT_KEYS:
            out[key] = float(value)
        else:
            raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
    return out
