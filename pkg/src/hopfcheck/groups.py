"""Finite groups given by explicit Cayley tables with 0-based element indices."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import Sequence


class GroupError(ValueError):
    """A Cayley table violating a group axiom; the message names the first failure."""


@dataclass(frozen=True)
class FiniteGroup:
    """Verified finite group: Cayley table, identity index and inverse table."""

    cayley: tuple[tuple[int, ...], ...]
    identity: int
    inverse: tuple[int, ...]
    name: str = dc_field(default="", compare=False)

    @property
    def order(self) -> int:
        return len(self.cayley)

    def elements(self) -> range:
        return range(self.order)

    def mul(self, a: int, b: int) -> int:
        return self.cayley[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def conj(self, q: int, p: int) -> int:
        """qpq^-1, the adjoint action of q on p."""
        return self.mul(self.mul(q, p), self.inv(q))

    @property
    def is_abelian(self) -> bool:
        n = self.order
        return all(self.cayley[a][b] == self.cayley[b][a] for a in range(n) for b in range(n))


def validate_group(cayley: Sequence[Sequence[int]], name: str = "") -> FiniteGroup:
    """Check the group axioms on an index table, reporting the first violation."""
    n = len(cayley)
    if n == 0:
        raise GroupError("empty Cayley table")
    table = tuple(tuple(int(x) for x in row) for row in cayley)
    for i, row in enumerate(table):
        if len(row) != n:
            raise GroupError(f"row {i} has length {len(row)}, expected {n}")
        for x in row:
            if not 0 <= x < n:
                raise GroupError(f"entry {x} in row {i} out of range 0..{n - 1}")

    identity = next(
        (e for e in range(n) if all(table[e][a] == a and table[a][e] == a for a in range(n))),
        None,
    )
    if identity is None:
        raise GroupError("no identity element")

    inverse = []
    for a in range(n):
        inv = next((b for b in range(n) if table[a][b] == identity and table[b][a] == identity), None)
        if inv is None:
            raise GroupError(f"element {a} has no two-sided inverse")
        inverse.append(inv)

    for a in range(n):
        for b in range(n):
            for c in range(n):
                left = table[table[a][b]][c]
                right = table[a][table[b][c]]
                if left != right:
                    raise GroupError(
                        f"associativity fails at ({a}, {b}, {c}): ({a}{b}){c} = {left}, {a}({b}{c}) = {right}"
                    )

    return FiniteGroup(table, identity, tuple(inverse), name)


def cyclic_group(n: int) -> FiniteGroup:
    if n < 1:
        raise GroupError(f"cyclic group order must be positive, got {n}")
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return validate_group(table, name=f"Z{n}")


def symmetric_group(n: int) -> FiniteGroup:
    """S_n on permutations of range(n), listed in lexicographic order.

    The identity permutation comes first, so index 0 is the unit.
    Composition convention: (s * t)(x) = s(t(x)).
    """
    perms = sorted(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = []
    for s in perms:
        table.append([index[tuple(s[t[x]] for x in range(n))] for t in perms])
    return validate_group(table, name=f"S{n}")


def group_from_name(spec: str) -> FiniteGroup:
    """Parse specs like Z3, C4 or S3 into a verified group."""
    text = spec.strip().upper()
    if text[:1] in ("Z", "C") and text[1:].isdigit():
        return cyclic_group(int(text[1:]))
    if text[:1] == "S" and text[1:].isdigit():
        return symmetric_group(int(text[1:]))
    raise GroupError(f"unknown group spec {spec!r} (expected Z<n>, C<n> or S<n>)")


def conjugacy_classes(group: FiniteGroup) -> tuple[tuple[int, ...], ...]:
    """Conjugacy classes as sorted tuples, ordered by smallest member."""
    seen: set[int] = set()
    classes = []
    for a in group.elements():
        if a in seen:
            continue
        orbit = sorted({group.conj(q, a) for q in group.elements()})
        seen.update(orbit)
        classes.append(tuple(orbit))
    return tuple(classes)
