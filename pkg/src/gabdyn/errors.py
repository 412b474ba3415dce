"""Exception hierarchy.

Input problems (bad triples, bad generators, malformed configs) derive from
``InputError``; the CLI maps them to exit code 2.  ``VerificationError`` is a
failed identity check (exit code 1).  ``ConsistencyError`` means an internal
invariant broke and points at a bug rather than bad input.
"""
from __future__ import annotations


class GabdynError(Exception):
    pass


class InputError(GabdynError, ValueError):
    pass


class InvalidTripleError(InputError):
    def __init__(self, gamma: tuple[int, ...], delta: int):
        self.gamma = tuple(gamma)
        self.delta = delta
        super().__init__(
            f"invalid cusp triple {self.gamma}: Delta = {delta} is not positive"
        )


class NotInSLError(InputError):
    def __init__(self, exponents, total):
        self.exponents = exponents
        self.total = total
        super().__init__(
            f"generator {_fmt(exponents)} is not in SL(3,C): "
            f"exponent sum {total} is not an integer"
        )


class NotSymmetryError(InputError):
    def __init__(self, exponents, gamma, axis: int):
        self.exponents = exponents
        self.gamma = gamma
        self.axis = axis
        super().__init__(
            f"generator {_fmt(exponents)} is not a symmetry of f for gamma' = "
            f"{tuple(gamma)}: gamma'_{axis} * alpha_{axis} is not an integer"
        )


class ConsistencyError(GabdynError):
    pass


class VerificationError(GabdynError):
    def __init__(self, check: str, detail: str):
        self.check = check
        self.detail = detail
        super().__init__(f"{check}: {detail}")


def _fmt(exponents) -> str:
    return "(" + ", ".join(str(a) for a in exponents) + ")"
