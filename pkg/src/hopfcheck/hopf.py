"""Componentwise comultiplication: cograded spans, coassociativity, the
bijectivity of the two Galois maps, and derivation of counit and antipode.

The comultiplication is stored as honest linear maps A_{pq} -> A_p (x) A_q.
For finite-dimensional components this makes the classical "products land in
the tensor square" conditions automatic; the multiplier picture is recovered
by composing with one-sided multiplications.

Grade bookkeeping fixes the antipode family as maps A_p -> A_{p^-1}: products
of distinct grades vanish, so the only surviving constraint of the defining
equation reads, per grade q, m(S (x) id)(Delta_{q^-1,q}(a)(1 (x) b)) = eps(a) b
for a in the identity component and b in grade q. The right-handed equation is
verified as a post-check.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .algebra import GradedAlgebra
from .linalg import Matrix, Vector, solve_linear, unit_vec, vec_add, vec_scale, zero_vec
from .report import CheckResult, Witness, failed, passed


class DerivationError(ValueError):
    """Counit/antipode system has no admissible solution, or several."""


@dataclass(frozen=True)
class Comultiplication:
    """Family of linear maps A_{pq} -> A_p (x) A_q, one per pair (p, q).

    ``maps[p][q]`` has shape (dim_p * dim_q, dim_{pq}); column j is the image
    of the j-th basis vector of the source component, indexed row-major in the
    tensor basis.
    """

    algebra: GradedAlgebra
    maps: tuple[tuple[Matrix, ...], ...]

    def __post_init__(self) -> None:
        group = self.algebra.group
        dims = self.algebra.dims
        for p in group.elements():
            for q in group.elements():
                mat = self.maps[p][q]
                src = group.mul(p, q)
                if mat.shape != (dims[p] * dims[q], dims[src]):
                    raise ValueError(
                        f"component ({p}, {q}) has shape {mat.shape}, "
                        f"expected {(dims[p] * dims[q], dims[src])}"
                    )

    def component(self, p: int, q: int) -> Matrix:
        return self.maps[p][q]


@dataclass(frozen=True)
class Antipode:
    """Family of maps S_p: A_p -> A_{p^-1} (grading forced by the product)."""

    algebra: GradedAlgebra
    maps: tuple[Matrix, ...]

    def __post_init__(self) -> None:
        group = self.algebra.group
        dims = self.algebra.dims
        for p in group.elements():
            expected = (dims[group.inv(p)], dims[p])
            if self.maps[p].shape != expected:
                raise ValueError(f"antipode at grade {p} has shape {self.maps[p].shape}, expected {expected}")

    def component(self, p: int) -> Matrix:
        return self.maps[p]


# -- leg-wise multiplication helpers ----------------------------------------


def mult_second_leg(algebra: GradedAlgebra, p: int, q: int, w: Vector, b: Vector) -> Vector:
    """(id (x) right-mult-by-b) applied to w in A_p (x) A_q."""
    rb = algebra.component(q).right_mult_of(b)
    return Matrix.identity(algebra.field, algebra.dim(p)).kron(rb).apply(w)


def mult_first_leg(algebra: GradedAlgebra, p: int, q: int, a: Vector, w: Vector) -> Vector:
    """(left-mult-by-a (x) id) applied to w in A_p (x) A_q."""
    la = algebra.component(p).left_mult_of(a)
    return la.kron(Matrix.identity(algebra.field, algebra.dim(q))).apply(w)


def galois_t1_matrix(algebra: GradedAlgebra, delta: Comultiplication, p: int, q: int) -> Matrix:
    """Matrix of a (x) b -> Delta_{p,q}(a)(1 (x) b) on A_{pq} (x) A_q."""
    f = algebra.field
    src = algebra.group.mul(p, q)
    cols = []
    for alpha in range(algebra.dim(src)):
        image = delta.component(p, q).col(alpha)
        for beta in range(algebra.dim(q)):
            cols.append(mult_second_leg(algebra, p, q, image, unit_vec(f, algebra.dim(q), beta)))
    return Matrix.from_cols(f, cols, algebra.dim(p) * algebra.dim(q))


def galois_t2_matrix(algebra: GradedAlgebra, delta: Comultiplication, p: int, q: int) -> Matrix:
    """Matrix of a (x) b -> (a (x) 1)Delta_{p,q}(b) on A_p (x) A_{pq}."""
    f = algebra.field
    src = algebra.group.mul(p, q)
    cols = []
    for alpha in range(algebra.dim(p)):
        a = unit_vec(f, algebra.dim(p), alpha)
        for beta in range(algebra.dim(src)):
            image = delta.component(p, q).col(beta)
            cols.append(mult_first_leg(algebra, p, q, a, image))
    return Matrix.from_cols(f, cols, algebra.dim(p) * algebra.dim(q))


# -- checks -------------------------------------------------------------------


def check_cograded(algebra: GradedAlgebra, delta: Comultiplication) -> CheckResult:
    """One-sided products of each component must span the full tensor square."""
    started = time.perf_counter()
    group = algebra.group
    for p in group.elements():
        for q in group.elements():
            target = algebra.dim(p) * algebra.dim(q)
            if target == 0:
                continue
            t1_rank = galois_t1_matrix(algebra, delta, p, q).rank()
            if t1_rank != target:
                return failed(
                    "cograded spans",
                    "2.2-cograded",
                    Witness((p, q), note=f"Delta(A_pq)(1 x A_q) has rank {t1_rank} < {target}"),
                    started,
                )
            t2_rank = galois_t2_matrix(algebra, delta, p, q).rank()
            if t2_rank != target:
                return failed(
                    "cograded spans",
                    "2.2-cograded",
                    Witness((p, q), note=f"(A_p x 1)Delta(A_pq) has rank {t2_rank} < {target}"),
                    started,
                )
    return passed("cograded spans", "2.2-cograded", started)


def check_coassoc(algebra: GradedAlgebra, delta: Comultiplication) -> CheckResult:
    """Componentwise coassociativity on all basis vectors of every A_{pqr}."""
    started = time.perf_counter()
    f = algebra.field
    group = algebra.group
    for p in group.elements():
        for q in group.elements():
            for r in group.elements():
                qr = group.mul(q, r)
                pq = group.mul(p, q)
                src = group.mul(p, qr)
                d_p, d_q, d_r = algebra.dim(p), algebra.dim(q), algebra.dim(r)
                # (id x Delta_{q,r}) Delta_{p,qr} vs (Delta_{p,q} x id) Delta_{pq,r}
                lhs = Matrix.identity(f, d_p).kron(delta.component(q, r)) @ delta.component(p, qr)
                rhs = delta.component(p, q).kron(Matrix.identity(f, d_r)) @ delta.component(pq, r)
                for col in range(algebra.dim(src)):
                    u, v = lhs.col(col), rhs.col(col)
                    if u != v:
                        coord = next(i for i, (x, y) in enumerate(zip(u, v)) if x != y)
                        return failed(
                            "coassociativity",
                            "coassoc",
                            Witness(
                                (p, q, r),
                                (col,),
                                coord,
                                f.format(u[coord]),
                                f.format(v[coord]),
                            ),
                            started,
                        )
    return passed("coassociativity", "coassoc", started)


def check_galois_maps(algebra: GradedAlgebra, delta: Comultiplication) -> CheckResult:
    """Both one-sided product operators must be square and invertible per pair."""
    started = time.perf_counter()
    group = algebra.group
    dims = algebra.dims
    for p in group.elements():
        for q in group.elements():
            src = group.mul(p, q)
            if dims[src] != dims[p]:
                return failed(
                    "galois maps bijective",
                    "galois",
                    Witness((p, q), note=f"dimension condition fails: d_pq = {dims[src]} != d_p = {dims[p]}"),
                    started,
                )
            if dims[src] != dims[q]:
                return failed(
                    "galois maps bijective",
                    "galois",
                    Witness((p, q), note=f"dimension condition fails: d_pq = {dims[src]} != d_q = {dims[q]}"),
                    started,
                )
            t1 = galois_t1_matrix(algebra, delta, p, q)
            if not t1.is_invertible():
                return failed(
                    "galois maps bijective",
                    "galois",
                    Witness((p, q), note=f"left operator singular (rank {t1.rank()} of {t1.nrows})"),
                    started,
                )
            t2 = galois_t2_matrix(algebra, delta, p, q)
            if not t2.is_invertible():
                return failed(
                    "galois maps bijective",
                    "galois",
                    Witness((p, q), note=f"right operator singular (rank {t2.rank()} of {t2.nrows})"),
                    started,
                )
    return passed("galois maps bijective", "galois", started)


# -- counit ---------------------------------------------------------------------


def derive_counit(algebra: GradedAlgebra, delta: Comultiplication) -> Vector:
    """Solve both defining counit equations for the functional on the unit component.

    Raises DerivationError when the linear system is unsolvable or
    underdetermined, or when the unique candidate is not an algebra
    homomorphism (so no admissible counit exists).
    """
    f = algebra.field
    group = algebra.group
    e = group.identity
    d_e = algebra.dim(e)
    rows: list[Vector] = []
    rhs: list = []
    for q in group.elements():
        d_q = algebra.dim(q)
        comp = algebra.component(q)
        for alpha in range(d_q):
            image = delta.component(e, q).col(alpha)
            for beta in range(d_q):
                b = unit_vec(f, d_q, beta)
                w = mult_second_leg(algebra, e, q, image, b)
                product = comp.basis_product(alpha, beta)
                for k in range(d_q):
                    rows.append(tuple(w[i * d_q + k] for i in range(d_e)))
                    rhs.append(product[k])
        for beta in range(d_q):
            image = delta.component(q, e).col(beta)
            for alpha in range(d_q):
                a = unit_vec(f, d_q, alpha)
                w = mult_first_leg(algebra, q, e, a, image)
                product = comp.basis_product(alpha, beta)
                for k in range(d_q):
                    rows.append(tuple(w[k * d_e + i] for i in range(d_e)))
                    rhs.append(product[k])
    solution = solve_linear(Matrix.from_rows(f, rows, d_e), tuple(rhs))
    if solution.status == "none":
        raise DerivationError("counit: defining equations have no solution")
    if solution.status == "many":
        raise DerivationError("counit: defining equations are degenerate (solution not unique)")
    eps = solution.solution
    hom = _counit_homomorphism_witness(algebra, eps)
    if hom is not None:
        i, j = hom
        raise DerivationError(
            f"counit: no solution; the linear candidate is not multiplicative "
            f"at unit-component basis pair ({i}, {j})"
        )
    return eps


def _counit_homomorphism_witness(algebra: GradedAlgebra, eps: Vector) -> tuple[int, int] | None:
    f = algebra.field
    comp = algebra.component(algebra.group.identity)
    for i in range(comp.dim):
        for j in range(comp.dim):
            product = comp.basis_product(i, j)
            lhs = f.zero
            for k, c in enumerate(product):
                lhs = f.add(lhs, f.mul(eps[k], c))
            if lhs != f.mul(eps[i], eps[j]):
                return (i, j)
    return None


def verify_counit(algebra: GradedAlgebra, delta: Comultiplication, eps: Vector) -> CheckResult:
    """Check both counit equations and multiplicativity for a supplied functional."""
    started = time.perf_counter()
    f = algebra.field
    group = algebra.group
    e = group.identity
    d_e = algebra.dim(e)
    if len(eps) != d_e:
        return failed(
            "counit equations",
            "2.1-counit",
            Witness((e,), note=f"counit has {len(eps)} coefficients, unit component has {d_e}"),
            started,
        )
    for q in group.elements():
        d_q = algebra.dim(q)
        comp = algebra.component(q)
        for alpha in range(d_q):
            for beta in range(d_q):
                b = unit_vec(f, d_q, beta)
                w = mult_second_leg(algebra, e, q, delta.component(e, q).col(alpha), b)
                lhs = zero_vec(f, d_q)
                for i in range(d_e):
                    lhs = vec_add(f, lhs, vec_scale(f, eps[i], tuple(w[i * d_q + k] for k in range(d_q))))
                product = comp.basis_product(alpha, beta)
                if lhs != product:
                    coord = next(i for i, (x, y) in enumerate(zip(lhs, product)) if x != y)
                    return failed(
                        "counit equations",
                        "2.1-counit",
                        Witness((q,), (alpha, beta), coord, f.format(lhs[coord]), f.format(product[coord]),
                                note="left equation"),
                        started,
                    )
                a = unit_vec(f, d_q, alpha)
                w2 = mult_first_leg(algebra, q, e, a, delta.component(q, e).col(beta))
                lhs2 = zero_vec(f, d_q)
                for i in range(d_e):
                    lhs2 = vec_add(f, lhs2, vec_scale(f, eps[i], tuple(w2[k * d_e + i] for k in range(d_q))))
                if lhs2 != product:
                    coord = next(i for i, (x, y) in enumerate(zip(lhs2, product)) if x != y)
                    return failed(
                        "counit equations",
                        "2.1-counit",
                        Witness((q,), (alpha, beta), coord, f.format(lhs2[coord]), f.format(product[coord]),
                                note="right equation"),
                        started,
                    )
    hom = _counit_homomorphism_witness(algebra, eps)
    if hom is not None:
        return failed(
            "counit equations",
            "2.1-counit",
            Witness((e,), hom, note="counit is not multiplicative"),
            started,
        )
    return passed("counit equations", "2.1-counit", started)


# -- antipode --------------------------------------------------------------------


def derive_antipode(algebra: GradedAlgebra, delta: Comultiplication, eps: Vector) -> Antipode:
    """Solve the left antipode equation per grade, then post-check the right one."""
    f = algebra.field
    group = algebra.group
    e = group.identity
    d_e = algebra.dim(e)
    maps: list[Matrix | None] = [None] * group.order
    for q in group.elements():
        qi = group.inv(q)
        d_q, d_qi = algebra.dim(q), algebra.dim(qi)
        comp_q = algebra.component(q)
        n_unknowns = d_q * d_qi  # S_{q^-1}[k', i] row-major
        rows: list[Vector] = []
        rhs: list = []
        for alpha in range(d_e):
            image = delta.component(qi, q).col(alpha)
            for beta in range(d_q):
                w = mult_second_leg(algebra, qi, q, image, unit_vec(f, d_q, beta))
                for k in range(d_q):
                    row = [f.zero] * n_unknowns
                    for i in range(d_qi):
                        for j in range(d_q):
                            weight = w[i * d_q + j]
                            if weight == f.zero:
                                continue
                            for kp in range(d_q):
                                row[kp * d_qi + i] = f.add(
                                    row[kp * d_qi + i],
                                    f.mul(weight, comp_q.basis_product(kp, j)[k]),
                                )
                    rows.append(tuple(row))
                    rhs.append(f.mul(eps[alpha], f.one if k == beta else f.zero))
        solution = solve_linear(Matrix.from_rows(f, rows, n_unknowns) if rows else Matrix.zeros(f, 0, n_unknowns), tuple(rhs))
        if solution.status == "none":
            raise DerivationError(f"antipode: no solution at grade {qi}")
        if solution.status == "many" and n_unknowns > 0:
            raise DerivationError(f"antipode: solution at grade {qi} is not unique")
        entries = solution.solution
        maps[qi] = Matrix.from_rows(
            f, [tuple(entries[kp * d_qi + i] for i in range(d_qi)) for kp in range(d_q)], d_qi
        )
    antipode = Antipode(algebra, tuple(maps))
    right = _antipode_right_equation_witness(algebra, delta, eps, antipode)
    if right is not None:
        raise DerivationError(
            f"antipode: left solution fails the right-handed equation at grade {right[0]}"
        )
    return antipode


def _antipode_right_equation_witness(
    algebra: GradedAlgebra, delta: Comultiplication, eps: Vector, antipode: Antipode
) -> tuple[int, int, int] | None:
    """First (grade, a-index, b-index) violating m(id (x) S)((a (x) 1)Delta(b)) = eps(b) a."""
    f = algebra.field
    group = algebra.group
    e = group.identity
    d_e = algebra.dim(e)
    for p in group.elements():
        pi = group.inv(p)
        d_p, d_pi = algebra.dim(p), algebra.dim(pi)
        comp_p = algebra.component(p)
        s_pi = antipode.component(pi)  # A_{p^-1} -> A_p
        for beta in range(d_e):
            image = delta.component(p, pi).col(beta)
            for alpha in range(d_p):
                w = mult_first_leg(algebra, p, pi, unit_vec(f, d_p, alpha), image)
                acc = zero_vec(f, d_p)
                for i in range(d_p):
                    for j in range(d_pi):
                        weight = w[i * d_pi + j]
                        if weight == f.zero:
                            continue
                        term = comp_p.multiply(unit_vec(f, d_p, i), s_pi.col(j))
                        acc = vec_add(f, acc, vec_scale(f, weight, term))
                expected = vec_scale(f, eps[beta], unit_vec(f, d_p, alpha))
                if acc != expected:
                    return (p, alpha, beta)
    return None


def verify_antipode(
    algebra: GradedAlgebra, delta: Comultiplication, eps: Vector, antipode: Antipode
) -> CheckResult:
    """Check both antipode equations and the anti-homomorphism law on basis pairs."""
    started = time.perf_counter()
    f = algebra.field
    group = algebra.group
    e = group.identity
    d_e = algebra.dim(e)
    for q in group.elements():
        qi = group.inv(q)
        d_q, d_qi = algebra.dim(q), algebra.dim(qi)
        comp_q = algebra.component(q)
        s_qi = antipode.component(qi)
        for alpha in range(d_e):
            image = delta.component(qi, q).col(alpha)
            for beta in range(d_q):
                w = mult_second_leg(algebra, qi, q, image, unit_vec(f, d_q, beta))
                acc = zero_vec(f, d_q)
                for i in range(d_qi):
                    for j in range(d_q):
                        weight = w[i * d_q + j]
                        if weight == f.zero:
                            continue
                        term = comp_q.multiply(s_qi.col(i), unit_vec(f, d_q, j))
                        acc = vec_add(f, acc, vec_scale(f, weight, term))
                expected = vec_scale(f, eps[alpha], unit_vec(f, d_q, beta))
                if acc != expected:
                    coord = next(i for i, (x, y) in enumerate(zip(acc, expected)) if x != y)
                    return failed(
                        "antipode equations",
                        "2.1-antipode",
                        Witness((q,), (alpha, beta), coord, f.format(acc[coord]), f.format(expected[coord]),
                                note="left equation"),
                        started,
                    )
    right = _antipode_right_equation_witness(algebra, delta, eps, antipode)
    if right is not None:
        p, alpha, beta = right
        return failed(
            "antipode equations",
            "2.1-antipode",
            Witness((p,), (alpha, beta), note="right equation"),
            started,
        )
    anti = _antihomomorphism_witness(algebra, antipode)
    if anti is not None:
        p, i, j = anti
        return failed(
            "antipode equations",
            "2.1-antipode",
            Witness((p,), (i, j), note="S(ab) != S(b)S(a)"),
            started,
        )
    return passed("antipode equations", "2.1-antipode", started)


def _antihomomorphism_witness(algebra: GradedAlgebra, antipode: Antipode) -> tuple[int, int, int] | None:
    f = algebra.field
    group = algebra.group
    for p in group.elements():
        pi = group.inv(p)
        comp_p = algebra.component(p)
        comp_pi = algebra.component(pi)
        s_p = antipode.component(p)
        for i in range(comp_p.dim):
            for j in range(comp_p.dim):
                lhs = s_p.apply(comp_p.basis_product(i, j))
                rhs = comp_pi.multiply(s_p.col(j), s_p.col(i))
                if lhs != rhs:
                    return (p, i, j)
    return None


def check_regular(algebra: GradedAlgebra, antipode: Antipode) -> CheckResult:
    """Regularity: every antipode component has full rank."""
    started = time.perf_counter()
    group = algebra.group
    for p in group.elements():
        mat = antipode.component(p)
        if mat.nrows != mat.ncols or not mat.is_invertible():
            return failed(
                "antipode bijective (regularity)",
                "regular",
                Witness((p,), note=f"rank {mat.rank()} on a {mat.nrows}x{mat.ncols} component"),
                started,
            )
    return passed("antipode bijective (regularity)", "regular", started)
