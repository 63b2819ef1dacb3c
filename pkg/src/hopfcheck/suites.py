"""Composed check suites: structural, generator-side, and categorical."""

from __future__ import annotations

import time

from .algebra import (
    Multiplier,
    canonical_map_bijective,
    check_associative,
    check_nondegenerate,
)
from .crossing import check_crossing, check_quasitriangular
from .hopf import (
    DerivationError,
    check_cograded,
    check_coassoc,
    check_galois_maps,
    check_regular,
    derive_antipode,
    derive_counit,
    verify_antipode,
    verify_counit,
)
from .instances import InstanceBundle, InstanceError, default_module_family, default_morphism_pairs
from .modules import (
    CrossedModule,
    check_braiding_crossing_compat,
    check_braiding_hexagons,
    check_braiding_invertibility,
    check_braiding_module_morphism,
    check_crossed,
    check_module,
    check_naturality,
    module_multiplier_action,
    regular_crossed,
)
from .report import CheckReport, CheckResult, Witness, failed, passed


def structural_suite(bundle: InstanceBundle, title: str = "structural") -> CheckReport:
    """Non-degeneracy, cograding, coassociativity, Galois bijectivity, counit
    and antipode derivation, regularity, crossing axioms, and module axioms."""
    report = CheckReport(title)
    algebra, delta = bundle.algebra, bundle.delta
    report.results.append(check_associative(algebra))
    report.results.append(check_nondegenerate(algebra))
    report.results.append(check_cograded(algebra, delta))
    report.results.append(check_coassoc(algebra, delta))
    report.results.append(check_galois_maps(algebra, delta))

    eps = None
    started = time.perf_counter()
    try:
        eps = derive_counit(algebra, delta)
    except DerivationError as exc:
        report.results.append(
            failed("counit derivation", "2.1-counit", Witness(note=str(exc)), started)
        )
    if eps is not None:
        if bundle.counit is not None and bundle.counit != eps:
            report.results.append(
                failed(
                    "counit derivation",
                    "2.1-counit",
                    Witness(note="derived counit differs from the stored one"),
                    started,
                )
            )
        else:
            result = verify_counit(algebra, delta, eps)
            result.millis += (time.perf_counter() - started) * 1000.0
            report.results.append(result)

    antipode = None
    if eps is not None:
        started = time.perf_counter()
        try:
            antipode = derive_antipode(algebra, delta, eps)
        except DerivationError as exc:
            report.results.append(
                failed("antipode derivation", "2.1-antipode", Witness(note=str(exc)), started)
            )
        if antipode is not None:
            if bundle.antipode is not None and bundle.antipode.maps != antipode.maps:
                report.results.append(
                    failed(
                        "antipode derivation",
                        "2.1-antipode",
                        Witness(note="derived antipode differs from the stored one"),
                        started,
                    )
                )
            else:
                result = verify_antipode(algebra, delta, eps, antipode)
                result.millis += (time.perf_counter() - started) * 1000.0
                report.results.append(result)
            report.results.append(check_regular(algebra, antipode))

    if eps is not None:
        report.results.append(check_crossing(algebra, delta, eps, bundle.crossing))

    for cm in bundle.modules:
        module_result = check_module(algebra, cm.module)
        module_result.name = f"module law [{cm.name}]"
        report.results.append(module_result)
        crossed_result = check_crossed(algebra, bundle.crossing, cm.module, cm.crossing)
        crossed_result.name = f"crossed module axioms [{cm.name}]"
        report.results.append(crossed_result)

    if bundle.rmatrix is not None:
        report.results.append(check_multiplier_formalism(bundle))
    return report


def check_multiplier_formalism(bundle: InstanceBundle) -> CheckResult:
    """Canonical embedding bijectivity, unit-multiplier identity action, and
    compatibility of every R component as a left/right action pair."""
    started = time.perf_counter()
    algebra = bundle.algebra
    for p in algebra.group.elements():
        ok, why = canonical_map_bijective(algebra.component(p))
        if not ok:
            return failed(
                "multiplier formalism",
                "multiplier",
                Witness((p,), note=why),
                started,
            )
    regular = regular_crossed(algebra, bundle.crossing).module
    for p in algebra.group.elements():
        if algebra.dim(p) == 0:
            continue
        unit_mult = Multiplier.unit(algebra.component(p))
        action = module_multiplier_action(unit_mult, regular.actions[p], regular.dim(p))
        from .linalg import Matrix

        if action != Matrix.identity(algebra.field, regular.dim(p)):
            return failed(
                "multiplier formalism",
                "multiplier",
                Witness((p,), note="unit multiplier does not act as the identity"),
                started,
            )
    if bundle.rmatrix is not None:
        from .algebra import MultiplierError

        for p in algebra.group.elements():
            for q in algebra.group.elements():
                pair = bundle.rmatrix.pair_algebra(p, q)
                mult = bundle.rmatrix.as_multiplier(p, q)
                try:
                    Multiplier.from_maps(pair, mult.lam, mult.rho)
                except MultiplierError as exc:
                    return failed(
                        "multiplier formalism",
                        "multiplier",
                        Witness((p, q), note=str(exc)),
                        started,
                    )
    return passed("multiplier formalism", "multiplier", started)


def validate_family(bundle: InstanceBundle, family: tuple[CrossedModule, ...]) -> CheckResult:
    """Precondition for the categorical checks: every member is a crossed module.

    With a broken algebra crossing the family itself degenerates, so this is
    part of the categorical verdict: the crossed-module category fails to
    exist at all, matching the generator side failing its axioms.
    """
    started = time.perf_counter()
    for cm in family:
        result = check_module(bundle.algebra, cm.module)
        if not result.passed:
            witness = result.witness
            witness = Witness(witness.grades, witness.basis, witness.coord, witness.lhs, witness.rhs,
                              note=f"[{cm.name}] {witness.note}")
            return failed("test family is crossed", "family", witness, started)
        result = check_crossed(bundle.algebra, bundle.crossing, cm.module, cm.crossing)
        if not result.passed:
            witness = result.witness
            witness = Witness(witness.grades, witness.basis, witness.coord, witness.lhs, witness.rhs,
                              note=f"[{cm.name}] {witness.note}")
            return failed("test family is crossed", "family", witness, started)
    return passed("test family is crossed", "family", started)


def qt_suite(bundle: InstanceBundle, title: str = "quasitriangularity") -> CheckReport:
    if bundle.rmatrix is None:
        raise InstanceError("bundle has no R-matrix")
    report = CheckReport(title)
    report.extend(
        check_quasitriangular(bundle.algebra, bundle.delta, bundle.crossing, bundle.rmatrix)
    )
    return report


def braiding_suite(
    bundle: InstanceBundle,
    seed: int = 0,
    family: tuple[CrossedModule, ...] | None = None,
    family_size: int = 6,
    title: str = "braided category",
) -> CheckReport:
    """Categorical checks over a module family, the generator-side checks, and
    the agreement verdict between the two aggregates."""
    if bundle.rmatrix is None:
        raise InstanceError("bundle has no R-matrix")
    if bundle.counit is None:
        raise InstanceError("bundle has no counit")
    algebra, delta, rmatrix = bundle.algebra, bundle.delta, bundle.rmatrix
    if family is None:
        family = default_module_family(bundle, seed, count=family_size)
    if not any(cm.name == "A" for cm in family):
        family = (regular_crossed(algebra, bundle.crossing),) + tuple(family)
    report = CheckReport(title, seed=seed)

    categorical = [validate_family(bundle, family)]
    categorical += [
        check_braiding_invertibility(algebra, rmatrix, family),
        check_braiding_module_morphism(algebra, delta, rmatrix, family),
        check_braiding_crossing_compat(algebra, rmatrix, family),
    ]
    hex1, hex2 = check_braiding_hexagons(algebra, delta, rmatrix, family)
    categorical.extend([hex1, hex2])
    morphism_pairs = default_morphism_pairs(bundle, family, seed)
    categorical.append(check_naturality(algebra, rmatrix, morphism_pairs))
    report.extend(categorical)

    generator_side = check_quasitriangular(algebra, delta, bundle.crossing, rmatrix)
    report.extend(generator_side)

    categorical_ok = all(r.passed for r in categorical)
    generator_ok = all(r.passed for r in generator_side)
    started = time.perf_counter()
    if categorical_ok == generator_ok:
        agreement = passed("categorical and generator verdicts agree", "theorem-4.4", started)
    else:
        agreement = failed(
            "categorical and generator verdicts agree",
            "theorem-4.4",
            Witness(note=f"categorical={categorical_ok} generator={generator_ok}"),
            started,
        )
    report.results.append(agreement)
    return report


def full_report(bundle: InstanceBundle, seed: int = 0, title: str = "report") -> CheckReport:
    report = CheckReport(title, seed=seed)
    report.extend(structural_suite(bundle).results)
    if bundle.rmatrix is not None:
        braided = braiding_suite(bundle, seed=seed)
        report.extend(braided.results)
    return report
