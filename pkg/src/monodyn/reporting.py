"""Serialization of results: exact-rational JSON envelopes and CSV tables.

Every number crossing the output boundary is an integer or a
{"num", "den"} pair; floats are rejected at render time so a lossy
value cannot slip into a report.  Envelopes carry the schema tag, the
command, the seed, and a hash of the configuration so identical runs
produce byte-identical files.
"""

from __future__ import annotations

import dataclasses
import json
from fractions import Fraction
from hashlib import sha256

from . import __version__

SCHEMA = "monodyn/1"


def jsonable(obj):
    """Recursively convert a result object to JSON-safe primitives.

    Fractions become {"num": ..., "den": ...}; dataclasses become
    dicts; dict keys are stringified and sorted when integral.
    Floats raise TypeError: exact pipelines have no business
    producing them.
    """
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, float):
        raise TypeError(f"refusing to serialize float {obj!r}")
    if isinstance(obj, int):
        return obj
    if isinstance(obj, Fraction):
        return {"num": obj.numerator, "den": obj.denominator}
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {
            f.name: jsonable(getattr(obj, f.name))
            for f in dataclasses.fields(obj)
        }
    if isinstance(obj, dict):
        items = [(str(k), jsonable(v)) for k, v in obj.items()]
        if all(isinstance(k, int) for k in obj):
            items.sort(key=lambda kv: int(kv[0]))
        return dict(items)
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def render_json(doc) -> str:
    return json.dumps(jsonable(doc), indent=2) + "\n"


def config_hash(config: dict) -> str:
    blob = json.dumps(jsonable(config), sort_keys=True, separators=(",", ":"))
    return "sha256:" + sha256(blob.encode()).hexdigest()


def envelope(command: str, config: dict, seed: int, result) -> dict:
    return {
        "schema": SCHEMA,
        "version": __version__,
        "command": command,
        "seed": seed,
        "config": config,
        "input_hash": config_hash(config),
        "result": result,
    }


def comment_header(command: str, config: dict, seed: int) -> list[str]:
    return [
        f"schema: {SCHEMA}",
        f"command: {command}",
        f"seed: {seed}",
        f"input_hash: {config_hash(config)}",
    ]


def sweep_csv(report, header: list[str]) -> str:
    """CSV of a prime-sweep report, one row per checkpoint."""
    lines = [f"# {h}" for h in header]
    lines.append("t,pi_t,empirical_num,empirical_den,analytic_num,analytic_den")
    a = report.analytic
    for cp in report.checkpoints:
        m = cp.mean
        lines.append(
            f"{cp.t},{cp.prime_count},{m.numerator},{m.denominator},"
            f"{a.numerator},{a.denominator}"
        )
    return "\n".join(lines) + "\n"


def ff_csv(report, header: list[str]) -> str:
    """CSV of a function-field oscillation report, one row per degree."""
    lines = [f"# {h}" for h in header]
    lines.append("t,pi_K,C_r,ratio_num,ratio_den,subsequence_tag")
    for pt in report.series:
        lines.append(
            f"{pt.t},{pt.pi_K},{pt.c_r},{pt.ratio.numerator},"
            f"{pt.ratio.denominator},{pt.tag}"
        )
    return "\n".join(lines) + "\n"
