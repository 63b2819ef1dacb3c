"""Deterministic instance generators and mutation operators for negative tests.

Two shipped families: function algebras of finite groups (with bicharacter
R-matrix candidates over abelian groups), and the four-dimensional small
quantum algebra at trivial grading with its one-parameter R family. Mutations
never decide their own verdict; the checkers do.
"""

from __future__ import annotations

import dataclasses
import random
from dataclasses import dataclass, field as dc_field

from .algebra import ComponentAlgebra, GradedAlgebra
from .crossing import Crossing, RMatrix
from .fields import Field, Scalar
from .groups import FiniteGroup, conjugacy_classes
from .hopf import Antipode, Comultiplication
from .linalg import Matrix, Vector, unit_vec, zero_vec
from .modules import (
    AGModule,
    CrossedModule,
    CrossedMorphism,
    ModuleCrossing,
    identity_morphism,
    regular_crossed,
    scale_morphism,
    tensor_crossed,
    unit_module,
)


class InstanceError(ValueError):
    """Unsupported generator parameters or an unknown mutation descriptor."""


@dataclass(frozen=True)
class InstanceBundle:
    """A complete serializable package: algebra, coalgebra data, crossing,
    optional R-matrix and named crossed modules, plus free-form metadata."""

    algebra: GradedAlgebra
    delta: Comultiplication
    counit: Vector | None
    antipode: Antipode | None
    crossing: Crossing
    rmatrix: RMatrix | None = None
    modules: tuple[CrossedModule, ...] = ()
    metadata: tuple[tuple[str, str], ...] = ()

    @property
    def field(self) -> Field:
        return self.algebra.field

    @property
    def group(self) -> FiniteGroup:
        return self.algebra.group

    def with_metadata(self, key: str, value: str) -> InstanceBundle:
        return dataclasses.replace(self, metadata=self.metadata + ((key, value),))

    def named_module(self, name: str) -> CrossedModule:
        for cm in self.modules:
            if cm.name == name:
                return cm
        raise InstanceError(f"bundle has no module named {name!r}")


# -- function algebras ---------------------------------------------------------


def gen_function_algebra(group: FiniteGroup, field: Field) -> InstanceBundle:
    """Pointwise-function algebra of a finite group, fully equipped.

    One-dimensional components spanned by the indicator functions; the
    comultiplication splits indicators along the group law, the antipode
    relabels along inversion, and the crossing permutes grades by conjugation.
    """
    one = Matrix.from_rows(field, [[field.one]])
    comps = tuple(
        ComponentAlgebra(field, (one,), label=f"delta_{p}") for p in group.elements()
    )
    algebra = GradedAlgebra(group, field, comps)
    delta = Comultiplication(algebra, tuple(tuple(one for _ in group.elements()) for _ in group.elements()))
    counit = (field.one,)
    antipode = Antipode(algebra, tuple(one for _ in group.elements()))
    blocks = tuple(
        tuple((group.conj(q, p), one) for p in group.elements()) for q in group.elements()
    )
    crossing = Crossing(algebra, blocks)
    return InstanceBundle(
        algebra,
        delta,
        counit,
        antipode,
        crossing,
        metadata=(("family", "function-algebra"), ("group", group.name or str(group.order)),
                  ("field", field.name)),
    )


def power_bicharacter(group: FiniteGroup, field: Field, omega: Scalar) -> tuple[tuple[Scalar, ...], ...]:
    """beta(j, k) = omega^(j k) on a cyclic group presented additively."""
    n = group.order
    return tuple(tuple(field.pow(omega, j * k) for k in range(n)) for j in range(n))


def gen_bicharacter_r(
    bundle: InstanceBundle, beta: tuple[tuple[Scalar, ...], ...]
) -> RMatrix:
    """Candidate R-matrix beta(p, q) * (indicator pair) over an abelian group.

    Validity is not asserted here; the quasitriangularity checker decides.
    """
    group = bundle.group
    field = bundle.field
    if not group.is_abelian:
        raise InstanceError("bicharacter candidates require an abelian group")
    for row in beta:
        for entry in row:
            if entry == field.zero:
                raise InstanceError("bicharacter entries must be invertible")
    comps = tuple(tuple((beta[p][q],) for q in group.elements()) for p in group.elements())
    return RMatrix(bundle.algebra, comps)


def gen_bicharacter_instance(
    group: FiniteGroup, field: Field, beta: tuple[tuple[Scalar, ...], ...]
) -> InstanceBundle:
    bundle = gen_function_algebra(group, field)
    rmatrix = gen_bicharacter_r(bundle, beta)
    return dataclasses.replace(
        bundle,
        rmatrix=rmatrix,
        metadata=bundle.metadata + (("family", "bicharacter"),),
    )


def trivial_bicharacter(group: FiniteGroup, field: Field) -> tuple[tuple[Scalar, ...], ...]:
    return tuple(tuple(field.one for _ in group.elements()) for _ in group.elements())


def gen_trivial_r_instance(group: FiniteGroup, field: Field) -> InstanceBundle:
    """Function algebra with the all-ones candidate R; works for any group.

    Unlike ``gen_bicharacter_instance`` this does not require abelianness:
    the components are the unit elements of the grade pairs.
    """
    bundle = gen_function_algebra(group, field)
    comps = tuple(tuple((field.one,) for _ in group.elements()) for _ in group.elements())
    rmatrix = RMatrix(bundle.algebra, comps)
    return dataclasses.replace(
        bundle,
        rmatrix=rmatrix,
        metadata=bundle.metadata + (("family", "trivial-r"),),
    )


# -- the four-dimensional small quantum algebra ---------------------------------


def gen_sweedler_h4(field: Field, lam: Scalar) -> InstanceBundle:
    """Trivially graded four-dimensional instance <1, g, x, gx> with its
    one-parameter R family; requires characteristic != 2 (it divides by 2)."""
    if field.char == 2:
        raise InstanceError("the four-dimensional instance needs characteristic != 2")
    f = field
    one, zero = f.one, f.zero
    m_one = f.from_int(-1)

    def col(*entries: Scalar) -> Vector:
        return tuple(entries)

    # Basis 0:1, 1:g, 2:x, 3:gx with g^2 = 1, x^2 = 0, xg = -gx.
    products = {
        (0, 0): col(one, zero, zero, zero),
        (0, 1): col(zero, one, zero, zero),
        (0, 2): col(zero, zero, one, zero),
        (0, 3): col(zero, zero, zero, one),
        (1, 0): col(zero, one, zero, zero),
        (1, 1): col(one, zero, zero, zero),
        (1, 2): col(zero, zero, zero, one),
        (1, 3): col(zero, zero, one, zero),
        (2, 0): col(zero, zero, one, zero),
        (2, 1): col(zero, zero, zero, m_one),
        (2, 2): col(zero, zero, zero, zero),
        (2, 3): col(zero, zero, zero, zero),
        (3, 0): col(zero, zero, zero, one),
        (3, 1): col(zero, zero, m_one, zero),
        (3, 2): col(zero, zero, zero, zero),
        (3, 3): col(zero, zero, zero, zero),
    }
    left_mult = tuple(
        Matrix.from_cols(f, [products[(i, j)] for j in range(4)], 4) for i in range(4)
    )
    group = FiniteGroup(((0,),), 0, (0,), name="E")
    algebra = GradedAlgebra(group, f, (ComponentAlgebra(f, left_mult, label="H4"),))

    def tensor_index(i: int, j: int) -> int:
        return 4 * i + j

    delta_cols = []
    half = f.inv(f.from_int(2))
    for basis, pairs in (
        (0, [((0, 0), one)]),
        (1, [((1, 1), one)]),
        (2, [((2, 0), one), ((1, 2), one)]),
        (3, [((3, 1), one), ((0, 3), one)]),
    ):
        v = [zero] * 16
        for (i, j), c in pairs:
            v[tensor_index(i, j)] = c
        delta_cols.append(tuple(v))
    delta = Comultiplication(algebra, ((Matrix.from_cols(f, delta_cols, 16),),))

    counit = (one, one, zero, zero)
    antipode_cols = [
        col(one, zero, zero, zero),     # S(1) = 1
        col(zero, one, zero, zero),     # S(g) = g
        col(zero, zero, zero, m_one),   # S(x) = -gx
        col(zero, zero, one, zero),     # S(gx) = x
    ]
    antipode = Antipode(algebra, (Matrix.from_cols(f, antipode_cols, 4),))
    crossing = Crossing.identity(algebra)

    rvec = [zero] * 16
    for (i, j), c in (
        ((0, 0), half), ((0, 1), half), ((1, 0), half), ((1, 1), f.neg(half)),
    ):
        rvec[tensor_index(i, j)] = c
    # The one-parameter nilpotent part compatible with Delta(x) = x(x)1 + g(x)x;
    # the sign pattern is pinned by an exhaustive scan of all candidates.
    lam_half = f.mul(lam, half)
    for (i, j), c in (
        ((2, 2), lam_half), ((2, 3), f.neg(lam_half)), ((3, 2), lam_half), ((3, 3), lam_half),
    ):
        rvec[tensor_index(i, j)] = f.add(rvec[tensor_index(i, j)], c)
    rmatrix = RMatrix(algebra, ((tuple(rvec),),))

    return InstanceBundle(
        algebra,
        delta,
        counit,
        antipode,
        crossing,
        rmatrix=rmatrix,
        metadata=(("family", "sweedler-h4"), ("field", f.name), ("lambda", f.format(lam))),
    )


# -- crossed module generation ----------------------------------------------------


def gen_module(
    bundle: InstanceBundle,
    dims: tuple[int, ...],
    character: tuple[Scalar, ...] | None = None,
    crossing_blocks: tuple[tuple[tuple[int, Matrix], ...], ...] | None = None,
    name: str = "M",
) -> CrossedModule:
    """Module over a function-algebra instance: indicators act as the identity.

    The crossing is either scalar multiplication by a character value per
    acting element, or explicitly supplied block matrices. Whether the result
    is actually crossed is for ``check_crossed`` to decide.
    """
    algebra = bundle.algebra
    group = bundle.group
    f = bundle.field
    if any(d != 1 for d in algebra.dims):
        raise InstanceError("gen_module expects a function-algebra instance (one-dimensional components)")
    if len(dims) != group.order:
        raise InstanceError(f"need {group.order} dimensions, got {len(dims)}")
    actions = tuple((Matrix.identity(f, dims[p]),) for p in group.elements())
    module = AGModule(algebra, tuple(dims), actions)
    if crossing_blocks is None:
        values = character if character is not None else tuple(f.one for _ in group.elements())
        blocks = []
        for q in group.elements():
            row = []
            for p in group.elements():
                target = group.conj(q, p)
                if dims[target] != dims[p]:
                    raise InstanceError(
                        f"dimension mismatch: grade {p} has {dims[p]}, conjugate {target} has {dims[target]}"
                    )
                row.append((target, Matrix.identity(f, dims[p]).scale(values[q])))
            blocks.append(tuple(row))
        crossing_blocks = tuple(blocks)
    return CrossedModule(name, module, ModuleCrossing(algebra, crossing_blocks))


def characters_of(group: FiniteGroup, field: Field) -> tuple[tuple[Scalar, ...], ...]:
    """All multiplicative characters with values in the field, by brute force.

    Candidate values for element q are the field roots of unity of order
    dividing the order of q; group orders here are desk scale, so the product
    search is cheap.
    """
    f = field
    orders = []
    for q in group.elements():
        n = 1
        power = q
        while power != group.identity:
            power = group.mul(power, q)
            n += 1
        orders.append(n)
    candidate_values = []
    for n in orders:
        values = [f.one]
        if f.is_prime_field:
            values = sorted(
                {f.from_int(v) for v in range(1, f.char) if f.pow(f.from_int(v), n) == f.one}
            )
        elif n % 2 == 0:
            values = [f.one, f.from_int(-1)]
        candidate_values.append(values)

    found: list[tuple[Scalar, ...]] = []

    def extend(assignment: list[Scalar]) -> None:
        idx = len(assignment)
        if idx == group.order:
            found.append(tuple(assignment))
            return
        for v in candidate_values[idx]:
            assignment.append(v)
            ok = True
            for a in range(idx + 1):
                for b in range(idx + 1):
                    c = group.mul(a, b)
                    if c <= idx and f.mul(assignment[a], assignment[b]) != assignment[c]:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                extend(assignment)
            assignment.pop()

    extend([])
    return tuple(sorted(set(found)))


def default_module_family(
    bundle: InstanceBundle, seed: int, count: int = 6
) -> tuple[CrossedModule, ...]:
    """K, the regular module, and seeded crossed modules from a deterministic catalog.

    For function-algebra instances the catalog holds character-crossed lines
    and conjugacy-class-supported lines; for the four-dimensional instance it
    holds the sign line and two-dimensional nilpotent-action modules. When the
    catalog runs short, tensor products of earlier picks fill the family.
    """
    rng = random.Random(seed)
    algebra = bundle.algebra
    group = bundle.group
    f = bundle.field
    if bundle.counit is None:
        raise InstanceError("module family needs a counit on the bundle")
    family: list[CrossedModule] = [
        unit_module(algebra, bundle.counit),
        regular_crossed(algebra, bundle.crossing),
    ]
    catalog: list[CrossedModule] = []
    if all(d == 1 for d in algebra.dims):
        chars = characters_of(group, f)
        all_one = tuple(1 for _ in group.elements())
        for idx, chi in enumerate(chars):
            catalog.append(gen_module(bundle, all_one, character=chi, name=f"X{idx}"))
        for cls_idx, cls in enumerate(conjugacy_classes(group)):
            dims = tuple(1 if p in cls else 0 for p in group.elements())
            if all(dims):
                continue  # whole-group support is already covered by characters
            for chi_idx, chi in enumerate(chars):
                catalog.append(
                    gen_module(bundle, dims, character=chi, name=f"C{cls_idx}.{chi_idx}")
                )
    else:
        catalog.extend(_small_quantum_modules(bundle))
    rng.shuffle(catalog)
    for cm in catalog:
        if len(family) >= count:
            break
        family.append(cm)
    while len(family) < count:
        # Fill with tensor squares of the smallest members so block sizes in
        # the triple checks stay at desk scale.
        candidates = sorted(
            (cm for cm in family if cm.name != "K"),
            key=lambda cm: (sum(cm.module.dims), cm.name),
        )
        left = candidates[0]
        right = candidates[1] if len(candidates) > 1 else candidates[0]
        name = f"T{len(family)}:{left.name}*{right.name}"
        family.append(tensor_crossed(algebra, bundle.delta, left, right, name=name))
    return tuple(family)


def _small_quantum_modules(bundle: InstanceBundle) -> list[CrossedModule]:
    algebra = bundle.algebra
    f = bundle.field
    if algebra.group.order != 1 or algebra.dims != (4,):
        return []
    out = []
    # Sign line: g -> -1, x -> 0.
    sign = AGModule(
        algebra,
        (1,),
        ((Matrix.from_rows(f, [[f.one]]), Matrix.from_rows(f, [[f.from_int(-1)]]),
          Matrix.zeros(f, 1, 1), Matrix.zeros(f, 1, 1)),),
    )
    identity_blocks = ((0, Matrix.identity(f, 1)),)
    out.append(CrossedModule("sign", sign, ModuleCrossing(algebra, (identity_blocks,))))
    # Two-dimensional modules: g diagonal, x strictly upper triangular.
    for name, g_diag in (("V+", (f.one, f.from_int(-1))), ("V-", (f.from_int(-1), f.one))):
        g_mat = Matrix.from_rows(f, [[g_diag[0], f.zero], [f.zero, g_diag[1]]])
        x_mat = Matrix.from_rows(f, [[f.zero, f.one], [f.zero, f.zero]])
        gx_mat = g_mat @ x_mat
        mats = (Matrix.identity(f, 2), g_mat, x_mat, gx_mat)
        module = AGModule(algebra, (2,), (mats,))
        blocks = ((0, Matrix.identity(f, 2)),)
        out.append(CrossedModule(name, module, ModuleCrossing(algebra, (blocks,))))
    return out


def default_morphism_pairs(
    bundle: InstanceBundle, family: tuple[CrossedModule, ...], seed: int
) -> tuple[tuple[CrossedMorphism, CrossedMorphism], ...]:
    """Crossed morphism pairs for naturality: identities, scalings, and a
    class-function right multiplication on the regular module."""
    rng = random.Random(seed ^ 0x5EED)
    f = bundle.field
    algebra = bundle.algebra
    morphisms: list[CrossedMorphism] = []
    for cm in family:
        morphisms.append(CrossedMorphism(f"id_{cm.name}", cm, cm, identity_morphism(cm.module)))
    scalars = [f.from_int(n) for n in (2, 3, 5) if f.from_int(n) != f.zero]
    for cm in family[: min(3, len(family))]:
        c = scalars[rng.randrange(len(scalars))] if scalars else f.one
        morphisms.append(CrossedMorphism(f"scale_{cm.name}", cm, cm, scale_morphism(cm.module, c)))
    regular = next((cm for cm in family if cm.name == "A"), None)
    if regular is not None and all(d == 1 for d in algebra.dims):
        # Right multiplication by a class function commutes with the left
        # action and the conjugation crossing.
        values = {}
        for cls in conjugacy_classes(bundle.group):
            values[cls] = f.from_int(rng.randrange(1, max(2, (f.char or 7))))
        maps = []
        for p in bundle.group.elements():
            cls_value = next(v for cls, v in values.items() if p in cls)
            maps.append(Matrix.from_rows(f, [[cls_value]]))
        morphisms.append(
            CrossedMorphism(
                "classfn",
                regular,
                regular,
                _graded_morphism(regular.module, regular.module, tuple(maps)),
            )
        )
    pairs = []
    for i, fm in enumerate(morphisms):
        gm = morphisms[(i * 7 + 3) % len(morphisms)]
        pairs.append((fm, gm))
    return tuple(pairs)


def _graded_morphism(source: AGModule, target: AGModule, maps: tuple[Matrix, ...]):
    from .modules import AGMorphism

    return AGMorphism(source, target, maps)


# -- mutations --------------------------------------------------------------------


MUTATIONS = (
    "scale-delta",
    "zero-r",
    "perturb-beta",
    "break-character",
    "replace-pi-by-identity",
)


def mutate(bundle: InstanceBundle, descriptor: str) -> InstanceBundle:
    """Apply a named deterministic mutation; the descriptor is recorded in metadata.

    Descriptors:
      scale-delta:all=<c> | scale-delta:<p>,<q>=<c>
      zero-r:<p>,<q>
      perturb-beta:<p>,<q>=<v>            (one-dimensional components only)
      break-character:<module>,<q>=<v>    (scales one crossing slice)
      replace-pi-by-identity:<q>
    """
    name, _, args = descriptor.partition(":")
    if name not in MUTATIONS:
        raise InstanceError(f"unknown mutation {name!r} (known: {', '.join(MUTATIONS)})")
    f = bundle.field
    group = bundle.group
    mutated: InstanceBundle
    if name == "scale-delta":
        target, _, scalar_text = args.partition("=")
        c = f.parse(scalar_text)
        maps = [list(row) for row in bundle.delta.maps]
        if target == "all":
            for p in group.elements():
                for q in group.elements():
                    maps[p][q] = maps[p][q].scale(c)
        else:
            p, q = _parse_pair(target)
            maps[p][q] = maps[p][q].scale(c)
        mutated = dataclasses.replace(
            bundle, delta=Comultiplication(bundle.algebra, tuple(tuple(row) for row in maps))
        )
    elif name == "zero-r":
        p, q = _parse_pair(args)
        rmatrix = _require_r(bundle)
        comps = [list(row) for row in rmatrix.components]
        comps[p][q] = zero_vec(f, len(comps[p][q]))
        mutated = dataclasses.replace(
            bundle, rmatrix=RMatrix(bundle.algebra, tuple(tuple(row) for row in comps))
        )
    elif name == "perturb-beta":
        target, _, scalar_text = args.partition("=")
        p, q = _parse_pair(target)
        v = f.parse(scalar_text)
        rmatrix = _require_r(bundle)
        if len(rmatrix.component(p, q)) != 1:
            raise InstanceError("perturb-beta needs one-dimensional components")
        comps = [list(row) for row in rmatrix.components]
        comps[p][q] = (v,)
        mutated = dataclasses.replace(
            bundle, rmatrix=RMatrix(bundle.algebra, tuple(tuple(row) for row in comps))
        )
    elif name == "break-character":
        target, _, scalar_text = args.partition("=")
        module_name, _, q_text = target.partition(",")
        q = int(q_text)
        v = f.parse(scalar_text)
        cm = bundle.named_module(module_name)
        blocks = [list(row) for row in cm.crossing.blocks]
        blocks[q] = [(tgt, mat.scale(v)) for tgt, mat in blocks[q]]
        new_cm = CrossedModule(cm.name, cm.module, ModuleCrossing(bundle.algebra, tuple(tuple(b) if isinstance(b, list) else b for b in blocks)))
        new_modules = tuple(new_cm if existing.name == module_name else existing for existing in bundle.modules)
        mutated = dataclasses.replace(bundle, modules=new_modules)
    else:  # replace-pi-by-identity
        q = int(args)
        blocks = [list(row) for row in bundle.crossing.blocks]
        blocks[q] = [
            (p, Matrix.identity(f, bundle.algebra.dim(p))) for p in group.elements()
        ]
        mutated = dataclasses.replace(
            bundle,
            crossing=Crossing(bundle.algebra, tuple(tuple(b) if isinstance(b, list) else b for b in blocks), bundle.crossing.rho),
        )
    return mutated.with_metadata("mutation", descriptor)


def _parse_pair(text: str) -> tuple[int, int]:
    try:
        p_text, q_text = text.split(",", 1)
        return int(p_text), int(q_text)
    except ValueError:
        raise InstanceError(f"expected a grade pair like 1,2 but got {text!r}") from None


def _require_r(bundle: InstanceBundle) -> RMatrix:
    if bundle.rmatrix is None:
        raise InstanceError("bundle has no R-matrix to mutate")
    return bundle.rmatrix


def unit_rmatrix(bundle: InstanceBundle) -> RMatrix:
    """The unit multiplier as a candidate R; needs unital components."""
    algebra = bundle.algebra
    comps = []
    for p in algebra.group.elements():
        row = []
        for q in algebra.group.elements():
            pair = algebra.tensor_component((p, q))
            unit = pair.unit()
            if unit is None:
                raise InstanceError(f"tensor component ({p}, {q}) has no unit")
            row.append(unit)
        comps.append(tuple(row))
    return RMatrix(algebra, tuple(comps))


# -- shipped instances and the negative matrix -------------------------------------


@dataclass(frozen=True)
class NegativeCase:
    """A mutated bundle with the check class it is expected to fail."""

    label: str
    bundle: InstanceBundle
    expected_tag: str
    grades: tuple[int, ...] | None = None
    sides: tuple[str, str] | None = None
    basis: tuple[int, ...] | None = None


def z3_bicharacter_bundle(omega: int = 2) -> InstanceBundle:
    from .groups import cyclic_group

    field = Field(7)
    group = cyclic_group(3)
    beta = power_bicharacter(group, field, field.from_int(omega))
    return gen_bicharacter_instance(group, field, beta)


def s3_trivial_r_bundle() -> InstanceBundle:
    from .groups import symmetric_group

    return gen_trivial_r_instance(symmetric_group(3), Field(0))


def shipped_positive_bundles() -> tuple[tuple[str, InstanceBundle], ...]:
    return (
        ("z3-bicharacter", z3_bicharacter_bundle()),
        ("h4-lambda0", gen_sweedler_h4(Field(7), Field(7).from_int(0))),
        ("h4-lambda1", gen_sweedler_h4(Field(7), Field(7).from_int(1))),
    )


def negative_matrix() -> tuple[NegativeCase, ...]:
    """The shipped mutations with their expected failing check classes."""
    z3 = z3_bicharacter_bundle()
    h4 = gen_sweedler_h4(Field(7), Field(7).from_int(0))
    h4_unit_r = dataclasses.replace(h4, rmatrix=unit_rmatrix(h4)).with_metadata(
        "replacement", "unit-r"
    )
    s3 = s3_trivial_r_bundle()
    z3_with_module = dataclasses.replace(
        z3,
        modules=(gen_module(z3, (1, 1, 1), character=(Field(7).one, Field(7).from_int(2), Field(7).from_int(4)), name="M"),),
    )
    return (
        NegativeCase(
            "z3-perturb-beta",
            mutate(z3, "perturb-beta:1,2=5"),
            "QT-hexagon-1",
            grades=(1, 1, 2),
            sides=("1", "3"),
        ),
        NegativeCase(
            "z3-zero-r",
            mutate(z3, "zero-r:1,2"),
            "QT-invertibility",
            grades=(1, 2),
        ),
        NegativeCase(
            "h4-unit-r",
            h4_unit_r,
            "QT-commutation",
            grades=(0, 0),
            basis=(2,),
        ),
        NegativeCase(
            "s3-zero-r",
            mutate(s3, "zero-r:1,2"),
            "QT-invariance",
        ),
        NegativeCase(
            "z3-scale-delta-all",
            mutate(z3, "scale-delta:all=2"),
            "2.1-counit",
        ),
        NegativeCase(
            "z3-scale-delta-one",
            mutate(z3, "scale-delta:1,1=2"),
            "coassoc",
        ),
        NegativeCase(
            "s3-pi-identity",
            mutate(s3, "replace-pi-by-identity:1"),
            "2.2-crossing",
        ),
        NegativeCase(
            "z3-break-character",
            mutate(z3_with_module, "break-character:M,1=5"),
            "crossed-module",
        ),
    )
