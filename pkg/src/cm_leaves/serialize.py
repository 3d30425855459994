"""Text forms: rationals as ``"p/q"`` (reduced, ``q > 0``) or bare integers,
vectors as ``"[-1, 0, 1/2]"``, residue sets as ``"0,2"``."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable


def format_rational(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


def format_vector(v: Iterable) -> str:
    return "[" + ", ".join(format_rational(x) for x in v) + "]"


def parse_vector(text: str) -> tuple[Fraction, ...]:
    text = text.strip()
    if text.startswith("[") and text.endswith("]"):
        text = text[1:-1]
    if not text.strip():
        return ()
    return tuple(parse_rational(t) for t in text.split(","))


def parse_int_vector(text: str) -> tuple[int, ...]:
    values = parse_vector(text)
    if any(v.denominator != 1 for v in values):
        raise ValueError(f"expected integers: {text!r}")
    return tuple(int(v) for v in values)


def parse_residue_set(text: str, ell: int) -> frozenset[int]:
    text = text.strip()
    if not text:
        return frozenset()
    return frozenset(int(t) % ell for t in text.split(","))


def format_residue_set(J: Iterable[int]) -> str:
    return ",".join(str(j) for j in sorted(J))
