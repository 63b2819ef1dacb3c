"""The category of crossed graded modules: objects, morphisms, tensor product,
unit object, coherence morphisms, and the braiding defined by an R-matrix.

Blocks of a tensor product module at grade p are indexed by the factorizations
p = s t, listed in group-element order of s; all flattening is row-major over
that order, which keeps block addressing stable in failure reports.

Categorical checks walk grade tuples in the same canonical orders as their
generator-side counterparts in ``crossing``, so paired checks report first
failures at matching grade tuples.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .algebra import ComponentAlgebra, GradedAlgebra, Multiplier
from .crossing import Crossing, RMatrix, hexagon_one_triples, hexagon_two_triples
from .hopf import Comultiplication
from .linalg import Matrix, Vector, flip_matrix, hstack, solve_linear, unit_vec
from .report import CheckResult, Witness, failed, passed


class ModuleError(ValueError):
    """Malformed module, crossing, or morphism input."""


@dataclass(frozen=True)
class AGModule:
    """Family of spaces M_p with unital actions of the matching components.

    ``actions[p][i]`` is the m_p x m_p matrix of the i-th basis element of the
    grade-p component acting on M_p.
    """

    algebra: GradedAlgebra
    dims: tuple[int, ...]
    actions: tuple[tuple[Matrix, ...], ...]

    def __post_init__(self) -> None:
        if len(self.dims) != self.algebra.group.order:
            raise ModuleError("one dimension per group element required")
        for p, mats in enumerate(self.actions):
            if len(mats) != self.algebra.dim(p):
                raise ModuleError(f"grade {p}: {len(mats)} action matrices for {self.algebra.dim(p)} basis elements")
            for mat in mats:
                if mat.shape != (self.dims[p], self.dims[p]):
                    raise ModuleError(f"grade {p}: action matrix of shape {mat.shape}, expected square {self.dims[p]}")

    def dim(self, p: int) -> int:
        return self.dims[p]

    def action(self, p: int, i: int) -> Matrix:
        return self.actions[p][i]

    def action_of(self, p: int, coeffs: Vector) -> Matrix:
        f = self.algebra.field
        out = Matrix.zeros(f, self.dims[p], self.dims[p])
        for i, c in enumerate(coeffs):
            if c != f.zero:
                out = out.add(self.actions[p][i].scale(c))
        return out


@dataclass(frozen=True)
class ModuleCrossing:
    """Family of isomorphisms M_p -> M_{qpq^-1}; blocks[q][p] = (target, matrix)."""

    algebra: GradedAlgebra
    blocks: tuple[tuple[tuple[int, Matrix], ...], ...]

    def block(self, q: int, p: int) -> tuple[int, Matrix]:
        return self.blocks[q][p]

    def matrix(self, q: int, p: int) -> Matrix:
        return self.blocks[q][p][1]


@dataclass(frozen=True)
class CrossedModule:
    """Named pairing of a module with its crossing, for test families."""

    name: str
    module: AGModule
    crossing: ModuleCrossing


@dataclass(frozen=True)
class AGMorphism:
    """Graded linear map between modules; one matrix per grade."""

    source: AGModule
    target: AGModule
    maps: tuple[Matrix, ...]

    def __post_init__(self) -> None:
        for p, mat in enumerate(self.maps):
            expected = (self.target.dims[p], self.source.dims[p])
            if mat.shape != expected:
                raise ModuleError(f"morphism component {p} has shape {mat.shape}, expected {expected}")

    def component(self, p: int) -> Matrix:
        return self.maps[p]

    def then(self, other: AGMorphism) -> AGMorphism:
        """Composite self followed by other."""
        if other.source.dims != self.target.dims:
            raise ModuleError("composition dimension mismatch")
        return AGMorphism(self.source, other.target, tuple(g @ f for f, g in zip(self.maps, other.maps)))

    def is_iso(self) -> bool:
        return all(m.nrows == m.ncols and m.is_invertible() for m in self.maps)


@dataclass(frozen=True)
class CrossedMorphism:
    """Morphism between crossed modules, carrying both endpoints."""

    name: str
    source: CrossedModule
    target: CrossedModule
    morphism: AGMorphism


# -- structural checks --------------------------------------------------------


def check_module(algebra: GradedAlgebra, module: AGModule) -> CheckResult:
    """Module law on basis triples, unitality, and non-degeneracy, per grade."""
    started = time.perf_counter()
    f = algebra.field
    for p in algebra.group.elements():
        comp = algebra.component(p)
        d, m = comp.dim, module.dim(p)
        if m == 0:
            continue
        for i in range(d):
            for j in range(d):
                composed = module.action(p, i) @ module.action(p, j)
                product_action = module.action_of(p, comp.basis_product(i, j))
                if composed != product_action:
                    return failed(
                        "module law",
                        "module",
                        Witness((p,), (i, j), note="(ab)m != a(bm)"),
                        started,
                    )
        if d == 0:
            continue
        cols = [module.action(p, i).col(j) for i in range(d) for j in range(m)]
        span = Matrix.from_cols(f, cols, m)
        if span.rank() != m:
            return failed(
                "module law",
                "module",
                Witness((p,), note=f"not unital: action image has rank {span.rank()} < {m}"),
                started,
            )
        stacked = Matrix.from_rows(f, [row for i in range(d) for row in module.action(p, i).rows], m)
        kernel = stacked.kernel()
        if kernel:
            v = kernel[0]
            return failed(
                "module law",
                "module",
                Witness((p,), note=f"degenerate: ({', '.join(f.format(x) for x in v)}) is killed by the action"),
                started,
            )
    return passed("module law", "module", started)


def check_crossed(
    algebra: GradedAlgebra,
    crossing: Crossing,
    module: AGModule,
    module_crossing: ModuleCrossing,
) -> CheckResult:
    """Invertibility, action compatibility, and multiplicativity of the module crossing."""
    started = time.perf_counter()
    group = algebra.group

    def fail(clause: str, grades: tuple[int, ...], basis: tuple[int, ...] = ()) -> CheckResult:
        return failed("crossed module axioms", "crossed-module", Witness(grades, basis, note=clause), started)

    for q in group.elements():
        for p in group.elements():
            target, mat = module_crossing.block(q, p)
            if target != group.conj(q, p):
                return fail(f"clause (1): block maps grade {p} to {target} instead of {group.conj(q, p)}", (q, p))
            if mat.shape != (module.dim(target), module.dim(p)):
                return fail("clause (1): block shape mismatch", (q, p))
            if mat.nrows != mat.ncols or (mat.nrows and not mat.is_invertible()):
                return fail("clause (1): block not invertible", (q, p))

    for q in group.elements():
        for p in group.elements():
            target, mat = module_crossing.block(q, p)
            pi_target, pi_mat = crossing.block(q, p)
            if pi_target != target:
                return fail("clause (2): algebra and module crossings route grades differently", (q, p))
            for i in range(algebra.dim(p)):
                lhs = mat @ module.action(p, i)
                rhs = module.action_of(target, pi_mat.col(i)) @ mat
                if lhs != rhs:
                    return fail("clause (2): pi(a.m) != pi(a).pi(m)", (q, p), (i,))

    for q1 in group.elements():
        for q2 in group.elements():
            q12 = group.mul(q1, q2)
            for p in group.elements():
                mid, mat2 = module_crossing.block(q2, p)
                tgt1, mat1 = module_crossing.block(q1, mid)
                tgt, mat = module_crossing.block(q12, p)
                if tgt1 != tgt:
                    return fail("clause (3): grade routing mismatch", (q1, q2, p))
                if mat1 @ mat2 != mat:
                    return fail("clause (3): crossing not multiplicative", (q1, q2, p))

    return passed("crossed module axioms", "crossed-module", started)


def check_module_morphism(algebra: GradedAlgebra, morphism: AGMorphism) -> tuple[int, int] | None:
    """First (grade, basis) where the map fails to commute with the action."""
    for p in algebra.group.elements():
        f_p = morphism.component(p)
        for i in range(algebra.dim(p)):
            if f_p @ morphism.source.action(p, i) != morphism.target.action(p, i) @ f_p:
                return (p, i)
    return None


def validate_crossed_morphism(algebra: GradedAlgebra, cm: CrossedMorphism) -> None:
    """Reject broken morphisms before they reach naturality testing."""
    linear = check_module_morphism(algebra, cm.morphism)
    if linear is not None:
        p, i = linear
        raise ModuleError(f"morphism {cm.name!r} is not action-linear at grade {p}, basis {i}")
    group = algebra.group
    for q in group.elements():
        for p in group.elements():
            src_target, src_mat = cm.source.crossing.block(q, p)
            tgt_target, tgt_mat = cm.target.crossing.block(q, p)
            if src_target != tgt_target:
                raise ModuleError(f"morphism {cm.name!r}: crossings route grade {p} differently under {q}")
            if tgt_mat @ cm.morphism.component(p) != cm.morphism.component(src_target) @ src_mat:
                raise ModuleError(f"morphism {cm.name!r} is not crossed at (q={q}, p={p})")


# -- multiplier actions --------------------------------------------------------


def module_multiplier_action(mult: Multiplier, action_mats: Sequence[Matrix], m_dim: int) -> Matrix:
    """Matrix of the extended action of a multiplier on a unital module.

    With a unital ambient component the factorization through the unit is
    used; otherwise elements are factorized through the action's image by an
    exact solve, which fails precisely when the module is not unital.
    """
    alg = mult.algebra
    f = alg.field
    d = alg.dim
    unit = alg.unit()
    if unit is not None:
        elem = mult.lam.apply(unit)
        out = Matrix.zeros(f, m_dim, m_dim)
        for i, c in enumerate(elem):
            if c != f.zero:
                out = out.add(action_mats[i].scale(c))
        return out
    if m_dim == 0:
        return Matrix.zeros(f, 0, 0)
    image = hstack(f, [action_mats[i] for i in range(d)])
    acted: list[Matrix | None] = [None] * d
    cols = []
    for c in range(m_dim):
        sol = solve_linear(image, unit_vec(f, m_dim, c))
        if not sol.solvable:
            raise ModuleError("module is not unital: action image does not span the space")
        col = [f.zero] * m_dim
        for idx, z in enumerate(sol.solution):
            if z == f.zero:
                continue
            i, j = divmod(idx, m_dim)
            if acted[i] is None:
                lam_col = mult.lam.col(i)
                mat = Matrix.zeros(f, m_dim, m_dim)
                for k, ck in enumerate(lam_col):
                    if ck != f.zero:
                        mat = mat.add(action_mats[k].scale(ck))
                acted[i] = mat
            contrib = acted[i].col(j)
            col = [f.add(x, f.mul(z, y)) for x, y in zip(col, contrib)]
        cols.append(tuple(col))
    return Matrix.from_cols(f, cols, m_dim)


def multiplier_act(mult: Multiplier, action_mats: Sequence[Matrix], vec: Vector) -> Vector:
    return module_multiplier_action(mult, action_mats, len(vec)).apply(vec)


# -- canonical modules ----------------------------------------------------------


def regular_crossed(algebra: GradedAlgebra, crossing: Crossing) -> CrossedModule:
    """The algebra acting on itself, with its own crossing."""
    actions = tuple(
        tuple(algebra.component(p).left_mult[i] for i in range(algebra.dim(p)))
        for p in algebra.group.elements()
    )
    module = AGModule(algebra, algebra.dims, actions)
    return CrossedModule("A", module, ModuleCrossing(algebra, crossing.blocks))


def unit_module(algebra: GradedAlgebra, eps: Vector) -> CrossedModule:
    """One-dimensional space at the unit grade, acted on through the counit."""
    group = algebra.group
    f = algebra.field
    e = group.identity
    dims = tuple(1 if p == e else 0 for p in group.elements())
    actions = []
    for p in group.elements():
        if p == e:
            actions.append(tuple(Matrix(f, 1, 1, ((eps[i],),)) for i in range(algebra.dim(p))))
        else:
            actions.append(tuple(Matrix.zeros(f, 0, 0) for _ in range(algebra.dim(p))))
    blocks = tuple(
        tuple(
            (group.conj(q, p), Matrix.identity(f, 1) if p == e else Matrix.zeros(f, 0, 0))
            for p in group.elements()
        )
        for q in group.elements()
    )
    return CrossedModule("K", AGModule(algebra, dims, tuple(actions)), ModuleCrossing(algebra, blocks))


# -- tensor product ----------------------------------------------------------------


def tensor_blocks(group, mdims: Sequence[int], ndims: Sequence[int], p: int) -> tuple[list[tuple[int, int, int, int]], int]:
    """Ordered (s, t, offset, size) blocks of the grade-p tensor component."""
    out = []
    offset = 0
    for s in group.elements():
        t = group.mul(group.inv(s), p)
        size = mdims[s] * ndims[t]
        out.append((s, t, offset, size))
        offset += size
    return out, offset


def tensor_dims(group, mdims: Sequence[int], ndims: Sequence[int]) -> tuple[int, ...]:
    return tuple(tensor_blocks(group, mdims, ndims, p)[1] for p in group.elements())


def tensor_module(algebra: GradedAlgebra, delta: Comultiplication, m: AGModule, n: AGModule) -> AGModule:
    """Blockwise tensor product module, acting through the comultiplication."""
    f = algebra.field
    group = algebra.group
    dims = tensor_dims(group, m.dims, n.dims)
    actions = []
    for p in group.elements():
        blocks, total = tensor_blocks(group, m.dims, n.dims, p)
        mats = []
        for i in range(algebra.dim(p)):
            rows = [[f.zero] * total for _ in range(total)]
            for s, t, offset, size in blocks:
                if size == 0:
                    continue
                image = delta.component(s, t).col(i)
                block = Matrix.zeros(f, size, size)
                d_t = algebra.dim(t)
                for a in range(algebra.dim(s)):
                    for b in range(d_t):
                        c = image[a * d_t + b]
                        if c != f.zero:
                            block = block.add(m.action(s, a).kron(n.action(t, b)).scale(c))
                for r_idx in range(size):
                    row = rows[offset + r_idx]
                    brow = block.rows[r_idx]
                    for c_idx in range(size):
                        row[offset + c_idx] = brow[c_idx]
            mats.append(Matrix(f, total, total, tuple(tuple(r) for r in rows)))
        actions.append(tuple(mats))
    return AGModule(algebra, dims, tuple(actions))


def tensor_crossing(
    algebra: GradedAlgebra,
    m: AGModule,
    pim: ModuleCrossing,
    n: AGModule,
    pin: ModuleCrossing,
) -> ModuleCrossing:
    """Blockwise tensor of crossings along the conjugated block matching."""
    f = algebra.field
    group = algebra.group
    blocks_out = []
    for q in group.elements():
        row = []
        for p in group.elements():
            target = group.conj(q, p)
            src_blocks, src_total = tensor_blocks(group, m.dims, n.dims, p)
            tgt_blocks, tgt_total = tensor_blocks(group, m.dims, n.dims, target)
            tgt_offsets = {(s, t): (off, size) for s, t, off, size in tgt_blocks}
            rows = [[f.zero] * src_total for _ in range(tgt_total)]
            for s, t, offset, size in src_blocks:
                if size == 0:
                    continue
                ts, mat_m = pim.block(q, s)
                tt, mat_n = pin.block(q, t)
                t_off, t_size = tgt_offsets[(ts, tt)]
                block = mat_m.kron(mat_n)
                for r_idx in range(t_size):
                    brow = block.rows[r_idx]
                    row_out = rows[t_off + r_idx]
                    for c_idx in range(size):
                        row_out[offset + c_idx] = brow[c_idx]
            row.append((target, Matrix(f, tgt_total, src_total, tuple(tuple(r) for r in rows))))
        blocks_out.append(tuple(row))
    return ModuleCrossing(algebra, tuple(blocks_out))


def tensor_crossed(
    algebra: GradedAlgebra,
    delta: Comultiplication,
    first: CrossedModule,
    second: CrossedModule,
    name: str = "",
) -> CrossedModule:
    module = tensor_module(algebra, delta, first.module, second.module)
    crossing = tensor_crossing(algebra, first.module, first.crossing, second.module, second.crossing)
    return CrossedModule(name or f"{first.name}(x){second.name}", module, crossing)


def identity_morphism(module: AGModule) -> AGMorphism:
    f = module.algebra.field
    return AGMorphism(module, module, tuple(Matrix.identity(f, d) for d in module.dims))


def scale_morphism(module: AGModule, c) -> AGMorphism:
    f = module.algebra.field
    return AGMorphism(module, module, tuple(Matrix.identity(f, d).scale(c) for d in module.dims))


def tensor_morphism(
    algebra: GradedAlgebra,
    f_mor: AGMorphism,
    g_mor: AGMorphism,
    source: AGModule,
    target: AGModule,
) -> AGMorphism:
    """Blockwise f (x) g between tensor product modules with aligned blocks."""
    f = algebra.field
    group = algebra.group
    maps = []
    for p in group.elements():
        src_blocks, src_total = tensor_blocks(group, f_mor.source.dims, g_mor.source.dims, p)
        tgt_blocks, tgt_total = tensor_blocks(group, f_mor.target.dims, g_mor.target.dims, p)
        rows = [[f.zero] * src_total for _ in range(tgt_total)]
        for (s, t, s_off, s_size), (_, _, t_off, t_size) in zip(src_blocks, tgt_blocks):
            if s_size == 0 or t_size == 0:
                continue
            block = f_mor.component(s).kron(g_mor.component(t))
            for r_idx in range(t_size):
                brow = block.rows[r_idx]
                row_out = rows[t_off + r_idx]
                for c_idx in range(s_size):
                    row_out[s_off + c_idx] = brow[c_idx]
        maps.append(Matrix(f, tgt_total, src_total, tuple(tuple(r) for r in rows)))
    return AGMorphism(source, target, tuple(maps))


# -- coherence morphisms -------------------------------------------------------------


def associator_index_maps(
    group, ldims: Sequence[int], mdims: Sequence[int], ndims: Sequence[int]
) -> list[list[int]]:
    """Per grade, the basis permutation ((L x M) x N) -> (L x (M x N))."""
    lm = tensor_dims(group, ldims, mdims)
    mn = tensor_dims(group, mdims, ndims)
    out = []
    for p in group.elements():
        src_blocks, total = tensor_blocks(group, lm, ndims, p)
        tgt_blocks, tgt_total = tensor_blocks(group, ldims, mn, p)
        tgt_offsets = {s: off for s, _, off, _ in tgt_blocks}
        index_map = [0] * total
        for s, t, offset, size in src_blocks:
            if size == 0:
                continue
            inner_blocks, _ = tensor_blocks(group, ldims, mdims, s)
            for q, r, ioff, isize in inner_blocks:
                if isize == 0:
                    continue
                u = group.mul(r, t)
                mn_blocks, _ = tensor_blocks(group, mdims, ndims, u)
                inner_tgt = next(off for rr, tt, off, sz in mn_blocks if rr == r)
                for a in range(ldims[q]):
                    for b in range(mdims[r]):
                        for c in range(ndims[t]):
                            src = offset + (ioff + a * mdims[r] + b) * ndims[t] + c
                            tgt = tgt_offsets[q] + a * mn[u] + inner_tgt + b * ndims[t] + c
                            index_map[src] = tgt
        out.append(index_map)
    return out


def associator(
    algebra: GradedAlgebra,
    delta: Comultiplication,
    l: AGModule,
    m: AGModule,
    n: AGModule,
) -> AGMorphism:
    """The regrouping isomorphism as an explicit graded morphism."""
    f = algebra.field
    group = algebra.group
    source = tensor_module(algebra, delta, tensor_module(algebra, delta, l, m), n)
    target = tensor_module(algebra, delta, l, tensor_module(algebra, delta, m, n))
    index_maps = associator_index_maps(group, l.dims, m.dims, n.dims)
    maps = []
    for p in group.elements():
        total = source.dims[p]
        rows = [[f.zero] * total for _ in range(target.dims[p])]
        for src, tgt in enumerate(index_maps[p]):
            rows[tgt][src] = f.one
        maps.append(Matrix(f, target.dims[p], total, tuple(tuple(r) for r in rows)))
    return AGMorphism(source, target, tuple(maps))


def unit_constraints(
    algebra: GradedAlgebra,
    delta: Comultiplication,
    eps: Vector,
    module: AGModule,
) -> tuple[AGMorphism, AGMorphism]:
    """The strip maps K (x) M -> M and M (x) K -> M."""
    f = algebra.field
    group = algebra.group
    e = group.identity
    k = unit_module(algebra, eps).module
    km = tensor_module(algebra, delta, k, module)
    mk = tensor_module(algebra, delta, module, k)
    left_maps = []
    right_maps = []
    for p in group.elements():
        blocks, total = tensor_blocks(group, k.dims, module.dims, p)
        rows = [[f.zero] * total for _ in range(module.dims[p])]
        for s, t, offset, size in blocks:
            if size == 0 or s != e:
                continue
            for i in range(module.dims[p]):
                rows[i][offset + i] = f.one
        left_maps.append(Matrix(f, module.dims[p], total, tuple(tuple(r) for r in rows)))

        blocks_r, total_r = tensor_blocks(group, module.dims, k.dims, p)
        rows_r = [[f.zero] * total_r for _ in range(module.dims[p])]
        for s, t, offset, size in blocks_r:
            if size == 0 or t != e:
                continue
            for i in range(module.dims[p]):
                rows_r[i][offset + i] = f.one
        right_maps.append(Matrix(f, module.dims[p], total_r, tuple(tuple(r) for r in rows_r)))
    return (
        AGMorphism(km, module, tuple(left_maps)),
        AGMorphism(mk, module, tuple(right_maps)),
    )


# -- the braiding ----------------------------------------------------------------------


def braiding_block(
    algebra: GradedAlgebra,
    rmatrix: RMatrix,
    cm_m: CrossedModule,
    cm_n: CrossedModule,
    s: int,
    t: int,
) -> Matrix:
    """Matrix of M_s (x) N_t -> N_{sts^-1} (x) M_s: crossing-twisted flip of the R action."""
    f = algebra.field
    m, n = cm_m.module, cm_n.module
    m_s, n_t = m.dim(s), n.dim(t)
    target_grade, pi_mat = cm_n.crossing.block(s, t)
    if m_s * n_t == 0:
        return Matrix.zeros(f, n.dim(target_grade) * m_s, m_s * n_t)
    d_t = algebra.dim(t)
    rvec = rmatrix.component(s, t)
    action = Matrix.zeros(f, m_s * n_t, m_s * n_t)
    for a in range(algebra.dim(s)):
        for b in range(d_t):
            c = rvec[a * d_t + b]
            if c != f.zero:
                action = action.add(m.action(s, a).kron(n.action(t, b)).scale(c))
    flip = flip_matrix(f, m_s, n_t)
    return pi_mat.kron(Matrix.identity(f, m_s)) @ flip @ action


def braiding(
    algebra: GradedAlgebra,
    delta: Comultiplication,
    rmatrix: RMatrix,
    cm_m: CrossedModule,
    cm_n: CrossedModule,
) -> AGMorphism:
    """The assembled braiding morphism M (x) N -> N (x) M."""
    f = algebra.field
    group = algebra.group
    m, n = cm_m.module, cm_n.module
    source = tensor_module(algebra, delta, m, n)
    target = tensor_module(algebra, delta, n, m)
    maps = []
    for p in group.elements():
        src_blocks, src_total = tensor_blocks(group, m.dims, n.dims, p)
        tgt_blocks, tgt_total = tensor_blocks(group, n.dims, m.dims, p)
        tgt_offsets = {s: off for s, _, off, _ in tgt_blocks}
        rows = [[f.zero] * src_total for _ in range(tgt_total)]
        for s, t, offset, size in src_blocks:
            if size == 0:
                continue
            block = braiding_block(algebra, rmatrix, cm_m, cm_n, s, t)
            t_off = tgt_offsets[group.conj(s, t)]
            for r_idx in range(block.nrows):
                brow = block.rows[r_idx]
                row_out = rows[t_off + r_idx]
                for c_idx in range(size):
                    row_out[offset + c_idx] = brow[c_idx]
        maps.append(Matrix(f, tgt_total, src_total, tuple(tuple(r) for r in rows)))
    return AGMorphism(source, target, tuple(maps))


class _BlockCache:
    """Braiding blocks per (module pair, grade pair), computed once."""

    def __init__(self, algebra: GradedAlgebra, rmatrix: RMatrix) -> None:
        self.algebra = algebra
        self.rmatrix = rmatrix
        self._cache: dict[tuple[int, int, int, int], Matrix] = {}

    def block(self, cm_m: CrossedModule, cm_n: CrossedModule, s: int, t: int) -> Matrix:
        key = (id(cm_m), id(cm_n), s, t)
        if key not in self._cache:
            self._cache[key] = braiding_block(self.algebra, self.rmatrix, cm_m, cm_n, s, t)
        return self._cache[key]


def _module_pairs(family: Sequence[CrossedModule]):
    for cm_m in family:
        for cm_n in family:
            yield cm_m, cm_n


# -- categorical checks ---------------------------------------------------------------


def check_braiding_invertibility(
    algebra: GradedAlgebra,
    rmatrix: RMatrix,
    family: Sequence[CrossedModule],
) -> CheckResult:
    """Every braiding block on every pair from the family must be invertible."""
    started = time.perf_counter()
    cache = _BlockCache(algebra, rmatrix)
    group = algebra.group
    for s in group.elements():
        for t in group.elements():
            for cm_m, cm_n in _module_pairs(family):
                block = cache.block(cm_m, cm_n, s, t)
                if block.nrows == 0 and block.ncols == 0:
                    continue
                if block.nrows != block.ncols or not block.is_invertible():
                    return failed(
                        "braiding blocks invertible",
                        "L4.1-invertibility",
                        Witness((s, t), note=f"singular block on {cm_m.name} (x) {cm_n.name}"),
                        started,
                    )
    return passed("braiding blocks invertible", "L4.1-invertibility", started)


def check_braiding_module_morphism(
    algebra: GradedAlgebra,
    delta: Comultiplication,
    rmatrix: RMatrix,
    family: Sequence[CrossedModule],
) -> CheckResult:
    """Action-linearity of every braiding block (the categorical side of commutation)."""
    started = time.perf_counter()
    f = algebra.field
    cache = _BlockCache(algebra, rmatrix)
    group = algebra.group
    for s in group.elements():
        for t in group.elements():
            p = group.mul(s, t)
            twisted = group.conj(s, t)
            for cm_m, cm_n in _module_pairs(family):
                m, n = cm_m.module, cm_n.module
                if m.dim(s) * n.dim(t) == 0:
                    continue
                block = cache.block(cm_m, cm_n, s, t)
                for alpha in range(algebra.dim(p)):
                    dom_image = delta.component(s, t).col(alpha)
                    dom = _pair_action(f, m, s, n, t, algebra.dim(s), algebra.dim(t), dom_image)
                    cod_image = delta.component(twisted, s).col(alpha)
                    cod = _pair_action(f, n, twisted, m, s, algebra.dim(twisted), algebra.dim(s), cod_image)
                    lhs = block @ dom
                    rhs = cod @ block
                    if lhs != rhs:
                        coord = _first_matrix_diff(lhs, rhs)
                        return failed(
                            "braiding is a module morphism",
                            "L4.1",
                            Witness((s, t), (alpha,), coord,
                                    f.format(lhs.entry(coord // lhs.ncols, coord % lhs.ncols)),
                                    f.format(rhs.entry(coord // rhs.ncols, coord % rhs.ncols)),
                                    note=f"{cm_m.name} (x) {cm_n.name}"),
                            started,
                        )
    return passed("braiding is a module morphism", "L4.1", started)


def _pair_action(f, m: AGModule, s: int, n: AGModule, t: int, d_s: int, d_t: int, image: Vector) -> Matrix:
    size = m.dim(s) * n.dim(t)
    out = Matrix.zeros(f, size, size)
    for a in range(d_s):
        for b in range(d_t):
            c = image[a * d_t + b]
            if c != f.zero:
                out = out.add(m.action(s, a).kron(n.action(t, b)).scale(c))
    return out


def _first_matrix_diff(a: Matrix, b: Matrix) -> int:
    for i in range(a.nrows):
        for j in range(a.ncols):
            if a.entry(i, j) != b.entry(i, j):
                return i * a.ncols + j
    raise AssertionError("matrices are equal")


def check_braiding_crossing_compat(
    algebra: GradedAlgebra,
    rmatrix: RMatrix,
    family: Sequence[CrossedModule],
) -> CheckResult:
    """The braiding intertwines the tensor crossings (categorical invariance)."""
    started = time.perf_counter()
    cache = _BlockCache(algebra, rmatrix)
    group = algebra.group
    for q in group.elements():
        for s in group.elements():
            for t in group.elements():
                qs, qt = group.conj(q, s), group.conj(q, t)
                twisted = group.conj(s, t)
                for cm_m, cm_n in _module_pairs(family):
                    m, n = cm_m.module, cm_n.module
                    if m.dim(s) * n.dim(t) == 0:
                        continue
                    _, pin_tw = cm_n.crossing.block(q, twisted)
                    _, pim_s = cm_m.crossing.block(q, s)
                    _, pin_t = cm_n.crossing.block(q, t)
                    lhs = pin_tw.kron(pim_s) @ cache.block(cm_m, cm_n, s, t)
                    rhs = cache.block(cm_m, cm_n, qs, qt) @ pim_s.kron(pin_t)
                    if lhs != rhs:
                        coord = _first_matrix_diff(lhs, rhs)
                        return failed(
                            "braiding respects crossings",
                            "L4.2",
                            Witness((q, s, t), (), coord, note=f"{cm_m.name} (x) {cm_n.name}"),
                            started,
                        )
    return passed("braiding respects crossings", "L4.2", started)


def check_braiding_hexagons(
    algebra: GradedAlgebra,
    delta: Comultiplication,
    rmatrix: RMatrix,
    family: Sequence[CrossedModule],
) -> tuple[CheckResult, CheckResult]:
    """Both hexagon composites, blockwise on basis tensors of family triples."""
    f = algebra.field
    group = algebra.group
    cache = _BlockCache(algebra, rmatrix)

    started = time.perf_counter()
    first: CheckResult | None = None
    for r, s, t in hexagon_one_triples(group):
        u = group.mul(s, t)
        rs_, rt_ = group.conj(r, s), group.conj(r, t)
        expanded = Matrix.identity(f, algebra.dim(r)).kron(delta.component(s, t)).apply(rmatrix.component(r, u))
        for cm_l in family:
            l = cm_l.module
            if l.dim(r) == 0:
                continue
            for cm_m in family:
                m = cm_m.module
                for cm_n in family:
                    n = cm_n.module
                    size = l.dim(r) * m.dim(s) * n.dim(t)
                    if size == 0:
                        continue
                    lhs = _hexagon_one_lhs(f, algebra, cm_l, cm_m, cm_n, r, s, t, expanded)
                    c_lm = cache.block(cm_l, cm_m, r, s)
                    c_ln = cache.block(cm_l, cm_n, r, t)
                    rhs = Matrix.identity(f, m.dim(rs_)).kron(c_ln) @ c_lm.kron(Matrix.identity(f, n.dim(t)))
                    if lhs != rhs:
                        coord = _first_matrix_diff(lhs, rhs)
                        first = failed(
                            "hexagon (braiding past a tensor target)",
                            "L4.3-1",
                            Witness((r, s, t), (), coord,
                                    note=f"{cm_l.name}, {cm_m.name}, {cm_n.name}"),
                            started,
                        )
                        break
                if first is not None:
                    break
            if first is not None:
                break
        if first is not None:
            break
    if first is None:
        first = passed("hexagon (braiding past a tensor target)", "L4.3-1", started)

    started = time.perf_counter()
    second: CheckResult | None = None
    for r, s, t in hexagon_two_triples(group):
        v = group.mul(r, s)
        expanded = delta.component(r, s).kron(Matrix.identity(f, algebra.dim(t))).apply(rmatrix.component(v, t))
        sts = group.conj(s, t)
        for cm_l in family:
            l = cm_l.module
            if l.dim(r) == 0:
                continue
            for cm_m in family:
                m = cm_m.module
                for cm_n in family:
                    n = cm_n.module
                    size = l.dim(r) * m.dim(s) * n.dim(t)
                    if size == 0:
                        continue
                    lhs = _hexagon_two_lhs(f, algebra, cm_l, cm_m, cm_n, r, s, t, expanded)
                    c_mn = cache.block(cm_m, cm_n, s, t)
                    c_ln = cache.block(cm_l, cm_n, r, sts)
                    rhs = c_ln.kron(Matrix.identity(f, m.dim(s))) @ Matrix.identity(f, l.dim(r)).kron(c_mn)
                    if lhs != rhs:
                        coord = _first_matrix_diff(lhs, rhs)
                        second = failed(
                            "hexagon (braiding out of a tensor source)",
                            "L4.3-2",
                            Witness((r, s, t), (), coord,
                                    note=f"{cm_l.name}, {cm_m.name}, {cm_n.name}"),
                            started,
                        )
                        break
                if second is not None:
                    break
            if second is not None:
                break
        if second is not None:
            break
    if second is None:
        second = passed("hexagon (braiding out of a tensor source)", "L4.3-2", started)

    return first, second


def _triple_action(f, l: AGModule, r: int, m: AGModule, s: int, n: AGModule, t: int,
                   d_s: int, d_t: int, image: Vector) -> Matrix:
    size = l.dim(r) * m.dim(s) * n.dim(t)
    out = Matrix.zeros(f, size, size)
    for idx, c in enumerate(image):
        if c == f.zero:
            continue
        a, rest = divmod(idx, d_s * d_t)
        b, g = divmod(rest, d_t)
        out = out.add(l.action(r, a).kron(m.action(s, b)).kron(n.action(t, g)).scale(c))
    return out


def _hexagon_one_lhs(f, algebra, cm_l, cm_m, cm_n, r, s, t, expanded: Vector) -> Matrix:
    """Block of the braiding of L past M (x) N at (r, (s, t))."""
    l, m, n = cm_l.module, cm_m.module, cm_n.module
    acted = _triple_action(f, l, r, m, s, n, t, algebra.dim(s), algebra.dim(t), expanded)
    rot = flip_matrix(f, l.dim(r), m.dim(s) * n.dim(t))
    _, pim = cm_m.crossing.block(r, s)
    _, pin = cm_n.crossing.block(r, t)
    return pim.kron(pin).kron(Matrix.identity(f, l.dim(r))) @ rot @ acted


def _hexagon_two_lhs(f, algebra, cm_l, cm_m, cm_n, r, s, t, expanded: Vector) -> Matrix:
    """Block of the braiding of L (x) M past N at ((r, s), t)."""
    l, m, n = cm_l.module, cm_m.module, cm_n.module
    v = algebra.group.mul(r, s)
    acted = _triple_action(f, l, r, m, s, n, t, algebra.dim(s), algebra.dim(t), expanded)
    rot = flip_matrix(f, l.dim(r) * m.dim(s), n.dim(t))
    _, pin = cm_n.crossing.block(v, t)
    return pin.kron(Matrix.identity(f, l.dim(r) * m.dim(s))) @ rot @ acted


def check_naturality(
    algebra: GradedAlgebra,
    rmatrix: RMatrix,
    morphism_pairs: Sequence[tuple[CrossedMorphism, CrossedMorphism]],
) -> CheckResult:
    """Braiding squares for crossed morphisms; inputs are validated first."""
    started = time.perf_counter()
    group = algebra.group
    cache = _BlockCache(algebra, rmatrix)
    for fm, gm in morphism_pairs:
        validate_crossed_morphism(algebra, fm)
        validate_crossed_morphism(algebra, gm)
    for s in group.elements():
        for t in group.elements():
            twisted = group.conj(s, t)
            for fm, gm in morphism_pairs:
                src_block = cache.block(fm.source, gm.source, s, t)
                tgt_block = cache.block(fm.target, gm.target, s, t)
                lhs = gm.morphism.component(twisted).kron(fm.morphism.component(s)) @ src_block
                rhs = tgt_block @ fm.morphism.component(s).kron(gm.morphism.component(t))
                if lhs != rhs:
                    coord = _first_matrix_diff(lhs, rhs)
                    return failed(
                        "braiding naturality",
                        "naturality",
                        Witness((s, t), (), coord, note=f"({fm.name}, {gm.name})"),
                        started,
                    )
    return passed("braiding naturality", "naturality", started)


# -- coherence checks --------------------------------------------------------------------


def _compose_index_maps(first: list[int], second: list[int]) -> list[int]:
    return [second[i] for i in first]


def check_pentagon(
    algebra: GradedAlgebra,
    dims_quadruple: Sequence[Sequence[int]],
) -> CheckResult:
    """Both regrouping routes around four factors agree on every basis tensor."""
    started = time.perf_counter()
    group = algebra.group
    ld, md, nd, pd = [tuple(d) for d in dims_quadruple]
    lm = tensor_dims(group, ld, md)
    mn = tensor_dims(group, md, nd)
    np_ = tensor_dims(group, nd, pd)
    mnp = tensor_dims(group, md, np_)

    a_lm_n_p = associator_index_maps(group, lm, nd, pd)
    a_l_m_np = associator_index_maps(group, ld, md, np_)
    a_l_m_n = associator_index_maps(group, ld, md, nd)
    a_l_mn_p = associator_index_maps(group, ld, mn, pd)
    a_m_n_p = associator_index_maps(group, md, nd, pd)

    for p_grade in group.elements():
        route_one = _compose_index_maps(a_lm_n_p[p_grade], a_l_m_np[p_grade])

        lifted_first = _lift_assoc_right(group, ld, md, nd, pd, a_l_m_n, p_grade)
        lifted_last = _lift_assoc_left(group, ld, md, nd, pd, a_m_n_p, mnp, p_grade)
        route_two = _compose_index_maps(_compose_index_maps(lifted_first, a_l_mn_p[p_grade]), lifted_last)
        if route_one != route_two:
            src = next(i for i, (x, y) in enumerate(zip(route_one, route_two)) if x != y)
            return failed(
                "pentagon identity",
                "pentagon",
                Witness((p_grade,), (src,), note="regrouping routes disagree"),
                started,
            )
    return passed("pentagon identity", "pentagon", started)


def _lift_assoc_right(group, ld, md, nd, pd, inner_maps, p_grade) -> list[int]:
    """Index map of (a_{L,M,N} (x) id_P) at one grade."""
    lm = tensor_dims(group, ld, md)
    lm_n = tensor_dims(group, lm, nd)
    l_mn = tensor_dims(group, ld, tensor_dims(group, md, nd))
    src_blocks, total = tensor_blocks(group, lm_n, pd, p_grade)
    tgt_blocks, _ = tensor_blocks(group, l_mn, pd, p_grade)
    out = [0] * total
    for (u, t, s_off, s_size), (_, _, t_off, _) in zip(src_blocks, tgt_blocks):
        if s_size == 0:
            continue
        inner = inner_maps[u]
        for i in range(lm_n[u]):
            for c in range(pd[t]):
                out[s_off + i * pd[t] + c] = t_off + inner[i] * pd[t] + c
    return out


def _lift_assoc_left(group, ld, md, nd, pd, inner_maps, mnp, p_grade) -> list[int]:
    """Index map of (id_L (x) a_{M,N,P}) at one grade."""
    mn = tensor_dims(group, md, nd)
    mn_p = tensor_dims(group, mn, pd)
    src_blocks, total = tensor_blocks(group, ld, mn_p, p_grade)
    tgt_blocks, _ = tensor_blocks(group, ld, mnp, p_grade)
    out = [0] * total
    for (q, u, s_off, s_size), (_, _, t_off, _) in zip(src_blocks, tgt_blocks):
        if s_size == 0:
            continue
        inner = inner_maps[u]
        for a in range(ld[q]):
            for i in range(mn_p[u]):
                out[s_off + a * mn_p[u] + i] = t_off + a * mnp[u] + inner[i]
    return out


def check_triangle(
    algebra: GradedAlgebra,
    delta: Comultiplication,
    eps: Vector,
    m: AGModule,
    n: AGModule,
) -> CheckResult:
    """(r_M (x) id_N) equals (id_M (x) l_N) after regrouping through the unit object."""
    started = time.perf_counter()
    f = algebra.field
    group = algebra.group
    k = unit_module(algebra, eps).module
    l_n, _ = unit_constraints(algebra, delta, eps, n)
    _, r_m = unit_constraints(algebra, delta, eps, m)
    assoc = associator(algebra, delta, m, k, n)
    mk = tensor_module(algebra, delta, m, k)
    mn = tensor_module(algebra, delta, m, n)
    kn = tensor_module(algebra, delta, k, n)
    left = tensor_morphism(algebra, r_m, identity_morphism(n), tensor_module(algebra, delta, mk, n), mn)
    right_inner = tensor_morphism(algebra, identity_morphism(m), l_n, tensor_module(algebra, delta, m, kn), mn)
    composite = assoc.then(right_inner)
    for p in group.elements():
        if left.component(p) != composite.component(p):
            coord = _first_matrix_diff(left.component(p), composite.component(p))
            return failed(
                "triangle identity",
                "triangle",
                Witness((p,), (), coord),
                started,
            )
    return passed("triangle identity", "triangle", started)


def check_associator_crossed(
    algebra: GradedAlgebra,
    delta: Comultiplication,
    crossing: Crossing,
    cm_l: CrossedModule,
    cm_m: CrossedModule,
    cm_n: CrossedModule,
) -> CheckResult:
    """The regrouping map is an invertible crossed module morphism."""
    started = time.perf_counter()
    assoc = associator(algebra, delta, cm_l.module, cm_m.module, cm_n.module)
    if not assoc.is_iso():
        return failed("associator is a crossed isomorphism", "unit-constraint",
                      Witness(note="associator not invertible"), started)
    lm = tensor_crossed(algebra, delta, cm_l, cm_m)
    source = tensor_crossed(algebra, delta, lm, cm_n)
    mn = tensor_crossed(algebra, delta, cm_m, cm_n)
    target = tensor_crossed(algebra, delta, cm_l, mn)
    case = CrossedMorphism("associator", source, target, assoc)
    try:
        validate_crossed_morphism(algebra, case)
    except ModuleError as exc:
        return failed("associator is a crossed isomorphism", "unit-constraint",
                      Witness(note=str(exc)), started)
    return passed("associator is a crossed isomorphism", "unit-constraint", started)


def check_unit_constraints_crossed(
    algebra: GradedAlgebra,
    delta: Comultiplication,
    eps: Vector,
    cm_m: CrossedModule,
) -> CheckResult:
    """Both unit strip maps are invertible crossed morphisms."""
    started = time.perf_counter()
    k = unit_module(algebra, eps)
    l_map, r_map = unit_constraints(algebra, delta, eps, cm_m.module)
    km = tensor_crossed(algebra, delta, k, cm_m)
    mk = tensor_crossed(algebra, delta, cm_m, k)
    for label, source, morphism in (("left unit", km, l_map), ("right unit", mk, r_map)):
        if not morphism.is_iso():
            return failed("unit constraints are crossed isomorphisms", "unit-constraint",
                          Witness(note=f"{label} constraint not invertible"), started)
        case = CrossedMorphism(label, source, cm_m, morphism)
        try:
            validate_crossed_morphism(algebra, case)
        except ModuleError as exc:
            return failed("unit constraints are crossed isomorphisms", "unit-constraint",
                          Witness(note=str(exc)), started)
    return passed("unit constraints are crossed isomorphisms", "unit-constraint", started)
