"""Exact scalar arithmetic over the rationals or a prime field.

Scalars are `fractions.Fraction` over the rationals and canonical residues
in ``range(p)`` over F_p, so structural equality is exact and hashing works.
All values are immutable; every operation is a pure function.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Scalar = Union[Fraction, int]


class FieldError(ValueError):
    """Malformed scalar literal or unsupported field request."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class Field:
    """The rationals (``char == 0``) or the prime field F_char."""

    char: int = 0

    def __post_init__(self) -> None:
        if self.char and not _is_prime(self.char):
            raise FieldError(f"field characteristic must be 0 or a prime, got {self.char}")

    # -- naming / construction ----------------------------------------

    @property
    def name(self) -> str:
        return "Q" if self.char == 0 else f"F{self.char}"

    @classmethod
    def from_name(cls, name: str) -> Field:
        text = name.strip()
        if text in ("Q", "QQ", "rationals"):
            return cls(0)
        if text.startswith("F") and text[1:].isdigit():
            return cls(int(text[1:]))
        raise FieldError(f"unknown field spec {name!r} (expected Q or F<p>)")

    @property
    def is_prime_field(self) -> bool:
        return self.char != 0

    @property
    def zero(self) -> Scalar:
        return 0 if self.char else Fraction(0)

    @property
    def one(self) -> Scalar:
        return 1 if self.char else Fraction(1)

    def from_int(self, n: int) -> Scalar:
        return n % self.char if self.char else Fraction(n)

    def from_fraction(self, num: int, den: int) -> Scalar:
        if den == 0:
            raise FieldError("zero denominator")
        if self.char == 0:
            return Fraction(num, den)
        return (num * self.inv(den % self.char)) % self.char

    # -- arithmetic -----------------------------------------------------

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        return (a + b) % self.char if self.char else a + b

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        return (a - b) % self.char if self.char else a - b

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        return (a * b) % self.char if self.char else a * b

    def neg(self, a: Scalar) -> Scalar:
        return (-a) % self.char if self.char else -a

    def inv(self, a: Scalar) -> Scalar:
        if a == self.zero:
            raise ZeroDivisionError("inverse of zero")
        if self.char:
            return pow(a, -1, self.char)
        return Fraction(1) / a

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        return self.mul(a, self.inv(b))

    def pow(self, a: Scalar, n: int) -> Scalar:
        if n < 0:
            return self.pow(self.inv(a), -n)
        result = self.one
        base = a
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    # -- text form --------------------------------------------------------

    def parse(self, text: str) -> Scalar:
        """Parse an integer or fraction literal; fractions over F_p resolve
        through the modular inverse of the denominator."""
        token = text.strip()
        try:
            if "/" in token:
                num, den = token.split("/", 1)
                return self.from_fraction(int(num), int(den))
            return self.from_int(int(token))
        except (ValueError, ZeroDivisionError) as exc:
            raise FieldError(f"cannot parse scalar {text!r} over {self.name}: {exc}") from None

    def format(self, a: Scalar) -> str:
        return str(a)


RATIONALS = Field(0)


def multiplicative_order(a: Scalar, field: Field) -> int:
    """Exact order of a nonzero element of F_p (rationals: only 1 and -1 have one)."""
    if a == field.zero:
        raise FieldError("zero has no multiplicative order")
    power = a
    order = 1
    limit = field.char if field.char else 2
    while power != field.one:
        power = field.mul(power, a)
        order += 1
        if order > limit:
            raise FieldError(f"{field.format(a)} has infinite multiplicative order")
    return order


def primitive_root_of_unity(n: int, field: Field) -> Scalar:
    """Smallest element of exact multiplicative order n, when one exists.

    Over F_p this requires n | p - 1; over the rationals only n in {1, 2}
    are available (1 and -1).
    """
    if n < 1:
        raise FieldError(f"order must be positive, got {n}")
    if not field.is_prime_field:
        if n == 1:
            return field.one
        if n == 2:
            return field.from_int(-1)
        raise FieldError(f"the rationals contain no root of unity of order {n}")
    p = field.char
    if (p - 1) % n != 0:
        raise FieldError(f"F{p} has no root of unity of order {n} ({n} does not divide {p - 1})")
    for candidate in range(1, p):
        if field.pow(candidate, n) != field.one:
            continue
        if multiplicative_order(candidate, field) == n:
            return candidate
    raise FieldError(f"no root of order {n} found in F{p}")
