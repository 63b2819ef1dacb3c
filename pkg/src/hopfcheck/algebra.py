"""Graded algebras with vanishing cross products, and their multiplier pairs.

An algebra graded over a finite group G keeps one finite-dimensional component
per group element; products of distinct components vanish by construction, so
multiplication is computed per grade. Multipliers are stored as compatible
left/right action pairs even where components are unital, which keeps the
non-unital machinery exercised and testable.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field as dc_field

from .fields import Field, Scalar
from .groups import FiniteGroup
from .linalg import (
    Matrix,
    Vector,
    hstack,
    solve_linear,
    unit_vec,
    vec_add,
    vec_is_zero,
    vec_scale,
    vstack,
    zero_vec,
)
from .report import CheckResult, Witness, failed, passed


class AlgebraError(ValueError):
    """Structural defect in an algebra, element, or multiplier."""


_UNSET = object()


@dataclass(frozen=True)
class ComponentAlgebra:
    """Finite-dimensional associative algebra given by structure constants.

    ``left_mult[i]`` is the matrix of left multiplication by basis element i,
    so its column j holds the coefficients of e_i * e_j.
    """

    field: Field
    left_mult: tuple[Matrix, ...]
    label: str = dc_field(default="", compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_unit_memo", _UNSET)

    @property
    def dim(self) -> int:
        return len(self.left_mult)

    def basis_product(self, i: int, j: int) -> Vector:
        return self.left_mult[i].col(j)

    def multiply(self, u: Vector, v: Vector) -> Vector:
        out = zero_vec(self.field, self.dim)
        for i, c in enumerate(u):
            if c != self.field.zero:
                out = vec_add(self.field, out, vec_scale(self.field, c, self.left_mult[i].apply(v)))
        return out

    def left_mult_of(self, u: Vector) -> Matrix:
        """Matrix of x -> u * x."""
        out = Matrix.zeros(self.field, self.dim, self.dim)
        for i, c in enumerate(u):
            if c != self.field.zero:
                out = out.add(self.left_mult[i].scale(c))
        return out

    def right_mult_of(self, v: Vector) -> Matrix:
        """Matrix of x -> x * v."""
        cols = [self.left_mult[i].apply(v) for i in range(self.dim)]
        return Matrix.from_cols(self.field, cols, self.dim)

    def unit(self) -> Vector | None:
        memo = getattr(self, "_unit_memo")
        if memo is _UNSET:
            memo = _component_unit(self)
            object.__setattr__(self, "_unit_memo", memo)
        return memo

    def tensor(self, other: ComponentAlgebra, label: str = "") -> ComponentAlgebra:
        mats = tuple(a.kron(b) for a in self.left_mult for b in other.left_mult)
        out = ComponentAlgebra(self.field, mats, label or f"{self.label}(x){other.label}")
        # The tensor square of non-degenerate algebras is unital iff both
        # factors are; seed the memo so big units are never solved for.
        u1, u2 = self.unit(), other.unit()
        from .linalg import vec_kron

        object.__setattr__(out, "_unit_memo", vec_kron(self.field, u1, u2) if u1 is not None and u2 is not None else None)
        return out

    def associativity_witness(self) -> tuple[int, int, int, int, Scalar, Scalar] | None:
        """First basis triple with (e_i e_j) e_k != e_i (e_j e_k), if any."""
        for i in range(self.dim):
            for j in range(self.dim):
                ij = self.basis_product(i, j)
                for k in range(self.dim):
                    left = self.multiply(ij, unit_vec(self.field, self.dim, k))
                    right = self.left_mult[i].apply(self.basis_product(j, k))
                    for coord, (a, b) in enumerate(zip(left, right)):
                        if a != b:
                            return (i, j, k, coord, a, b)
        return None

    def nondegeneracy_defect(self) -> tuple[str, Vector] | None:
        """A nonzero element killing the algebra from one side, if one exists."""
        if self.dim == 0:
            return None
        right_action = vstack(self.field, [self.right_mult_of(unit_vec(self.field, self.dim, j)) for j in range(self.dim)])
        for v in right_action.kernel():
            return ("left", v)
        left_action = vstack(self.field, [self.left_mult[j] for j in range(self.dim)])
        for v in left_action.kernel():
            return ("right", v)
        return None


def _component_unit(alg: ComponentAlgebra) -> Vector | None:
    if alg.dim == 0:
        return None
    f = alg.field
    # u e_j = e_j (rows from right multiplication) and e_j u = e_j (left).
    blocks = [alg.right_mult_of(unit_vec(f, alg.dim, j)) for j in range(alg.dim)]
    blocks += [alg.left_mult[j] for j in range(alg.dim)]
    rhs: list[Scalar] = []
    for _ in range(2):
        for j in range(alg.dim):
            rhs.extend(unit_vec(f, alg.dim, j))
    sol = solve_linear(vstack(f, blocks), tuple(rhs))
    return sol.solution if sol.solvable else None


@dataclass(frozen=True)
class GradedAlgebra:
    """G-graded algebra: one component per group element, cross products zero."""

    group: FiniteGroup
    field: Field
    components: tuple[ComponentAlgebra, ...]

    def __post_init__(self) -> None:
        if len(self.components) != self.group.order:
            raise AlgebraError(
                f"{len(self.components)} components for a group of order {self.group.order}"
            )
        object.__setattr__(self, "_tensor_cache", {})

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(c.dim for c in self.components)

    def dim(self, p: int) -> int:
        return self.components[p].dim

    def component(self, p: int) -> ComponentAlgebra:
        return self.components[p]

    def tensor_component(self, grades: tuple[int, ...]) -> ComponentAlgebra:
        cache: dict = getattr(self, "_tensor_cache")
        if grades not in cache:
            out = self.components[grades[0]]
            for g in grades[1:]:
                out = out.tensor(self.components[g])
            cache[grades] = out
        return cache[grades]

    def zero(self) -> AlgebraElement:
        return AlgebraElement(self, tuple(zero_vec(self.field, d) for d in self.dims))

    def basis_element(self, p: int, i: int) -> AlgebraElement:
        coeffs = [zero_vec(self.field, d) for d in self.dims]
        coeffs[p] = unit_vec(self.field, self.dim(p), i)
        return AlgebraElement(self, tuple(coeffs))

    def element(self, coeffs_by_grade: dict[int, Vector]) -> AlgebraElement:
        coeffs = []
        for p, d in enumerate(self.dims):
            v = coeffs_by_grade.get(p, zero_vec(self.field, d))
            if len(v) != d:
                raise AlgebraError(f"grade {p} expects {d} coefficients, got {len(v)}")
            coeffs.append(tuple(v))
        return AlgebraElement(self, tuple(coeffs))

    def multiply(self, a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
        """Componentwise product; cross-grade terms vanish identically."""
        if a.algebra is not self and a.algebra != self:
            raise AlgebraError("elements from different algebras")
        coeffs = tuple(
            comp.multiply(a.coeffs[p], b.coeffs[p]) for p, comp in enumerate(self.components)
        )
        return AlgebraElement(self, coeffs)


@dataclass(frozen=True)
class AlgebraElement:
    """Grade-indexed coefficient vectors over the parent algebra's basis."""

    algebra: GradedAlgebra
    coeffs: tuple[Vector, ...]

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        f = self.algebra.field
        return AlgebraElement(
            self.algebra,
            tuple(vec_add(f, u, v) for u, v in zip(self.coeffs, other.coeffs)),
        )

    def __mul__(self, other: AlgebraElement) -> AlgebraElement:
        return self.algebra.multiply(self, other)

    def scale(self, c: Scalar) -> AlgebraElement:
        f = self.algebra.field
        return AlgebraElement(self.algebra, tuple(vec_scale(f, c, v) for v in self.coeffs))

    def is_zero(self) -> bool:
        f = self.algebra.field
        return all(vec_is_zero(f, v) for v in self.coeffs)

    def support(self) -> tuple[int, ...]:
        f = self.algebra.field
        return tuple(p for p, v in enumerate(self.coeffs) if not vec_is_zero(f, v))


# -- structural checks -------------------------------------------------------


def check_associative(algebra: GradedAlgebra) -> CheckResult:
    started = time.perf_counter()
    for p, comp in enumerate(algebra.components):
        witness = comp.associativity_witness()
        if witness is not None:
            i, j, k, coord, lhs, rhs = witness
            f = algebra.field
            return failed(
                "algebra associativity",
                "algebra-assoc",
                Witness((p,), (i, j, k), coord, f.format(lhs), f.format(rhs)),
                started,
            )
    return passed("algebra associativity", "algebra-assoc", started)


def check_nondegenerate(algebra: GradedAlgebra) -> CheckResult:
    """Non-degeneracy of the product as a bilinear form, reduced per grade."""
    started = time.perf_counter()
    f = algebra.field
    for p, comp in enumerate(algebra.components):
        defect = comp.nondegeneracy_defect()
        if defect is not None:
            side, v = defect
            return failed(
                "product non-degeneracy",
                "algebra-nondegenerate",
                Witness(
                    (p,),
                    note=f"{side} annihilator element ({', '.join(f.format(x) for x in v)})",
                ),
                started,
            )
    return passed("product non-degeneracy", "algebra-nondegenerate", started)


# -- multipliers -------------------------------------------------------------


class MultiplierError(AlgebraError):
    """Left/right action pair violating the multiplier compatibility law."""


@dataclass(frozen=True)
class Multiplier:
    """A pair (lam, rho) with a * lam(b) = rho(a) * b for all a, b.

    lam is left action (m * b), rho the right action (a * m). Over a
    non-degenerate algebra the pair determines the multiplier uniquely.
    """

    algebra: ComponentAlgebra
    lam: Matrix
    rho: Matrix

    @classmethod
    def from_element(cls, algebra: ComponentAlgebra, element: Vector) -> Multiplier:
        return cls(algebra, algebra.left_mult_of(element), algebra.right_mult_of(element))

    @classmethod
    def from_maps(cls, algebra: ComponentAlgebra, lam: Matrix, rho: Matrix) -> Multiplier:
        """Validated constructor; raises MultiplierError naming the first bad pair."""
        witness = compatibility_witness(algebra, lam, rho)
        if witness is not None:
            i, j, lhs, rhs = witness
            f = algebra.field
            raise MultiplierError(
                f"multiplier compatibility fails at basis pair ({i}, {j}): "
                f"a*lam(b) = ({', '.join(f.format(x) for x in lhs)}) but "
                f"rho(a)*b = ({', '.join(f.format(x) for x in rhs)})"
            )
        return cls(algebra, lam, rho)

    @classmethod
    def unit(cls, algebra: ComponentAlgebra) -> Multiplier:
        eye = Matrix.identity(algebra.field, algebra.dim)
        return cls(algebra, eye, eye)

    def product(self, other: Multiplier) -> Multiplier:
        # (m1 m2) * b = m1 * (m2 * b); b * (m1 m2) = (b * m1) * m2
        return Multiplier(self.algebra, self.lam @ other.lam, other.rho @ self.rho)

    def apply(self, v: Vector) -> Vector:
        return self.lam.apply(v)

    def as_element(self) -> Vector:
        unit = self.algebra.unit()
        if unit is None:
            raise AlgebraError("component has no unit; multiplier is not an element")
        return self.lam.apply(unit)

    def is_invertible(self) -> bool:
        return self.lam.is_invertible() and self.rho.is_invertible()


def compatibility_witness(
    algebra: ComponentAlgebra, lam: Matrix, rho: Matrix
) -> tuple[int, int, Vector, Vector] | None:
    f = algebra.field
    for i in range(algebra.dim):
        e_i = unit_vec(f, algebra.dim, i)
        rho_i = rho.apply(e_i)
        for j in range(algebra.dim):
            lhs = algebra.multiply(e_i, lam.col(j))
            rhs = algebra.multiply(rho_i, unit_vec(f, algebra.dim, j))
            if lhs != rhs:
                return (i, j, lhs, rhs)
    return None


def multiplier_from_element(algebra: ComponentAlgebra, element: Vector) -> Multiplier:
    return Multiplier.from_element(algebra, element)


def multiplier_product(m1: Multiplier, m2: Multiplier) -> Multiplier:
    return m1.product(m2)


def multiplier_apply(m: Multiplier, v: Vector) -> Vector:
    return m.apply(v)


def compatible_pair_space_dim(algebra: ComponentAlgebra) -> int:
    """Dimension of the space of all compatible (lam, rho) pairs.

    The canonical embedding a -> (a*, *a) is onto the multiplier algebra
    exactly when this equals the component dimension.
    """
    f = algebra.field
    d = algebra.dim
    if d == 0:
        return 0
    n_unknowns = 2 * d * d  # lam entries then rho entries, row-major
    rows: list[Vector] = []
    for i in range(d):
        for j in range(d):
            # sum_k lam[k][j] * (e_i e_k) - sum_k rho[k][i] * (e_k e_j) = 0
            for coord in range(d):
                row = [f.zero] * n_unknowns
                for k in range(d):
                    row[k * d + j] = f.add(row[k * d + j], algebra.basis_product(i, k)[coord])
                    idx = d * d + k * d + i
                    row[idx] = f.sub(row[idx], algebra.basis_product(k, j)[coord])
                rows.append(tuple(row))
    system = Matrix.from_rows(f, rows, n_unknowns)
    return n_unknowns - system.rank()


def canonical_map_bijective(algebra: ComponentAlgebra) -> tuple[bool, str]:
    """Whether a -> (left mult, right mult) is a bijection onto all compatible pairs."""
    f = algebra.field
    d = algebra.dim
    embed_cols = []
    for i in range(d):
        lam = algebra.left_mult[i]
        flat = tuple(x for row in lam.rows for x in row)
        embed_cols.append(flat)
    injective = d == 0 or Matrix.from_cols(f, embed_cols, d * d).rank() == d
    pair_dim = compatible_pair_space_dim(algebra)
    if not injective:
        return False, "canonical map has a kernel"
    if pair_dim != d:
        return False, f"compatible pair space has dimension {pair_dim}, component has {d}"
    return True, ""


def multiplier_equal(m1: Multiplier, m2: Multiplier) -> bool:
    """Equality decided on the finite basis; sound because the product is non-degenerate."""
    return m1.lam == m2.lam and m1.rho == m2.rho


# -- extension of non-degenerate homomorphisms -------------------------------


def extend_homomorphism(
    source: ComponentAlgebra,
    target: ComponentAlgebra,
    images: tuple[Multiplier, ...],
    m: Multiplier,
) -> Multiplier:
    """Evaluate the unique multiplier extension of f: A -> M(B) at m.

    ``images[i]`` is f(e_i). Requires f non-degenerate: f(A)B and Bf(A) must
    span B; the extension is computed by factorizing elements of B through
    those spanning sets.
    """
    if len(images) != source.dim:
        raise AlgebraError(f"{len(images)} images for a {source.dim}-dimensional source")
    f = target.field
    d_b = target.dim

    left_cols = [img.lam.col(b) for img in images for b in range(d_b)]
    right_cols = [img.rho.col(b) for img in images for b in range(d_b)]
    left_span = Matrix.from_cols(f, left_cols, d_b)
    right_span = Matrix.from_cols(f, right_cols, d_b)
    if left_span.rank() != d_b or right_span.rank() != d_b:
        raise AlgebraError("degenerate homomorphism: f(A)B or Bf(A) does not span B")

    def extended_column(span: Matrix, x: Vector, action: str) -> Vector:
        sol = solve_linear(span, x)
        out = zero_vec(f, d_b)
        for idx, c in enumerate(sol.solution):
            if c == f.zero:
                continue
            i, b = divmod(idx, d_b)
            source_col = m.lam.col(i) if action == "left" else m.rho.col(i)
            for k, ck in enumerate(source_col):
                if ck == f.zero:
                    continue
                img = images[k]
                contrib = img.lam.col(b) if action == "left" else img.rho.col(b)
                out = vec_add(f, out, vec_scale(f, f.mul(c, ck), contrib))
        return out

    eye = Matrix.identity(f, d_b)
    lam_cols = [extended_column(left_span, eye.col(c), "left") for c in range(d_b)]
    rho_cols = [extended_column(right_span, eye.col(c), "right") for c in range(d_b)]
    return Multiplier.from_maps(
        target,
        Matrix.from_cols(f, lam_cols, d_b),
        Matrix.from_cols(f, rho_cols, d_b),
    )
