"""Runtime configuration shared by the CLI."""

import os
from dataclasses import dataclass, field

from subsemi.enumeration import DEFAULT_CEILING


def _machine_workers():
    return os.cpu_count() or 1


@dataclass
class Config:
    ceiling_n: int = DEFAULT_CEILING
    k: int = 5
    workers: int = field(default_factory=_machine_workers)
    output_format: str = "table"   # table | json | csv

    def __post_init__(self):
        assert self.ceiling_n >= 1 and self.k >= 1 and self.workers >= 1


def from_env_and_args(args):
    ceiling = getattr(args, "ceiling", None)
    if ceiling is None:
        env = os.environ.get("SUBUNIV_CEILING")
        ceiling = int(env) if env else DEFAULT_CEILING
    fmt = "table"
    if getattr(args, "json", False):
        fmt = "json"
    elif getattr(args, "csv", False):
        fmt = "csv"
    return Config(
        ceiling_n=ceiling,
        k=getattr(args, "k", 5) or 5,
        workers=getattr(args, "workers", None) or _machine_workers(),
        output_format=fmt,
    )
