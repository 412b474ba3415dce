"""JSON job configuration.

    {
      "gamma": [4, 4, 4],
      "generators": [{"num": [1, 3, 0], "den": 4}],
      "order_bound": 36,
      "output_dir": "out"
    }

``test_hooks.perturb_milnor_gram = [row, col, delta]`` adds ``delta`` to one
symmetric pair of Milnor Gram entries before verification; it exists so the
failure path of ``verify`` can be exercised.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .cusp import CuspTriple
from .errors import InputError
from .symmetry import GroupElement, SymmetryGroup, close_generators

DEFAULT_ORDER_BOUND = 36


@dataclass(frozen=True)
class JobConfig:
    triple: CuspTriple
    generators: tuple[GroupElement, ...]
    order_bound: int = DEFAULT_ORDER_BOUND
    output_dir: Path | None = None
    perturb_gram: tuple[int, int, int] | None = None

    def group(self) -> SymmetryGroup:
        return close_generators(self.triple, self.generators)


def _int(x, what: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise InputError(f"config: {what} must be an integer, got {x!r}")
    return x


def parse_config(doc) -> JobConfig:
    if not isinstance(doc, dict):
        raise InputError("config: top level must be a JSON object")
    if "gamma" not in doc:
        raise InputError("config: missing key 'gamma'")
    gamma = doc["gamma"]
    if not isinstance(gamma, list) or len(gamma) != 3:
        raise InputError("config: 'gamma' must be an array of three integers")
    triple = CuspTriple(tuple(_int(x, "gamma entry") for x in gamma))

    gens = []
    for n, gen in enumerate(doc.get("generators", [])):
        if not isinstance(gen, dict) or "num" not in gen or "den" not in gen:
            raise InputError(f"config: generator {n} needs keys 'num' and 'den'")
        num = gen["num"]
        if not isinstance(num, list) or len(num) != 3:
            raise InputError(f"config: generator {n} 'num' must have three entries")
        den = _int(gen["den"], f"generator {n} 'den'")
        if den <= 0:
            raise InputError(f"config: generator {n} 'den' must be positive")
        gens.append(GroupElement.from_ints([_int(a, f"generator {n} numerator") for a in num], den))

    order_bound = _int(doc.get("order_bound", DEFAULT_ORDER_BOUND), "'order_bound'")
    if order_bound < 1:
        raise InputError("config: 'order_bound' must be at least 1")
    out = doc.get("output_dir")

    perturb = None
    hooks = doc.get("test_hooks") or {}
    if "perturb_milnor_gram" in hooks:
        entry = hooks["perturb_milnor_gram"]
        if not isinstance(entry, list) or len(entry) != 3:
            raise InputError("config: perturb_milnor_gram is [row, col, delta]")
        perturb = tuple(_int(x, "perturb_milnor_gram entry") for x in entry)

    cfg = JobConfig(triple, tuple(gens), order_bound, Path(out) if out else None, perturb)
    cfg.group()  # validates generators against the triple
    return cfg


def load_config(path) -> JobConfig:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read config {path}: {exc.strerror}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"config {path} is not valid JSON: {exc}") from None
    return parse_config(doc)
