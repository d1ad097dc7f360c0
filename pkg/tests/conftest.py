import random

import pytest

from weakhopf.constructions import catalog, catalog_names
from weakhopf.core import direct_sum, transport
from weakhopf.exactlin import Matrix, Q, rank


@pytest.fixture(scope="session")
def entries():
    return {name: catalog(name) for name in catalog_names()}


def monomial_scramble(algebra, rng):
    """Scaled permutation basis change; keeps presentations sparse."""
    n = algebra.dim
    perm = list(range(n))
    rng.shuffle(perm)
    scales = [Q(rng.randint(1, 5), rng.randint(1, 3)) for _ in range(n)]
    t = Matrix(
        [
            [scales[j] if i == perm[j] else 0 for j in range(n)]
            for i in range(n)
        ]
    )
    return transport(algebra, t)


def dense_scramble(algebra, rng):
    n = algebra.dim
    while True:
        t = Matrix([[Q(rng.randint(-2, 2)) for _ in range(n)] for _ in range(n)])
        if rank(t) == n:
            return transport(algebra, t)


def instance_pool(entries, minimum=100, seed=74111):
    """Catalog instances plus randomized small perturbations and duals."""
    rng = random.Random(seed)
    pool = []
    for name in catalog_names():
        if name == "example2-rigidity":
            continue
        pool.append(("catalog:" + name, entries[name].algebra))
    small = [
        "trivial",
        "group:z2",
        "group:z3",
        "dualgroup:z2",
        "dualgroup:z3",
        "bsz-dual:2",
        "adcross:z2,z2",
    ]
    variants = []
    for name in small:
        base = entries[name].algebra
        variants.append((name + ".dual", base.dual))
        variants.append((name + ".op", base.opposite))
        variants.append((name + ".cop", base.coopposite))
        variants.append((name + ".opcop", base.opposite.coopposite))
    ex1 = entries["example1"].algebra
    variants.append(("example1.dual", ex1.dual))
    variants.append(("example1.op", ex1.opposite))
    variants.append(("example1.cop", ex1.coopposite))
    variants.append(("example1.opcop", ex1.opposite.coopposite))
    variants.append(
        ("sum:z2+example1", direct_sum(entries["group:z2"].algebra, ex1))
    )
    variants.append(
        ("sum:bsz2+dualz3", direct_sum(entries["bsz-dual:2"].algebra, entries["dualgroup:z3"].algebra))
    )
    extra_fixed = 12  # dense scrambles and big-instance scrambles added below
    k = 0
    while len(variants) + extra_fixed < minimum:
        name = small[k % len(small)]
        variants.append(
            ("%s.mono%d" % (name, k), monomial_scramble(entries[name].algebra, rng))
        )
        k += 1
    for i, name in enumerate(["group:z2", "dualgroup:z2", "bsz-dual:2", "adcross:z2,z2"]):
        variants.append(
            ("%s.dense%d" % (name, i), dense_scramble(entries[name].algebra, rng))
        )
        variants.append(
            (
                "%s.dense%d.dual" % (name, i),
                dense_scramble(entries[name].algebra, rng).dual,
            )
        )
    variants.append(("example1.mono", monomial_scramble(ex1, rng)))
    variants.append(("example1.mono.dual", monomial_scramble(ex1, rng).dual))
    variants.append(
        ("adcross:z4,z2.mono", monomial_scramble(entries["adcross:z4,z2"].algebra, rng))
    )
    variants.append(
        ("bsz-dual:3.mono", monomial_scramble(entries["bsz-dual:3"].algebra, rng))
    )
    return pool + variants


def run_instance_suite(algebra, with_repcat=True):
    """Every theorem whose hypotheses hold must conclude; returns failures."""
    from weakhopf.antipode import (
        antipode_theorem_suite,
        classify_weak_hopf,
        solve_antipode,
    )
    from weakhopf.core import structural_theorem_suite, suite_failures
    from weakhopf.rigidity import (
        RigidityStructure,
        sqcap_suite,
        uniqueness_intertwiners,
        verify_rigidity,
    )

    errors = []
    checks = structural_theorem_suite(algebra)
    errors += ["structural:" + c.name for c in suite_failures(checks)]
    ac, status = antipode_theorem_suite(algebra)
    errors += ["antipode:" + c.name for c in ac if c.failed]
    classify_weak_hopf(algebra)  # raises on an equivalence-chain failure
    if status.exists and status.normal_rigidity:
        sq = sqcap_suite(algebra, status.matrix)
        errors += ["sqcap:" + t for t, ok in sq.checks if not ok]
        r = RigidityStructure(
            algebra, status.matrix, algebra.unit, algebra.unit
        )
        chk = verify_rigidity(algebra, r)
        if chk.status != "normal":
            errors.append("rigidity:antipode-not-normal")
        uniqueness_intertwiners(r, r)  # raises if the identity table breaks
    if with_repcat and algebra.dim <= 9:
        from weakhopf.core import decide_axioms
        from weakhopf.repcat import (
            coherence_report,
            regular_module,
            unit_module_report,
        )

        report = decide_axioms(algebra)
        _, left_natural, right_natural = coherence_report(regular_module(algebra))
        if left_natural != report.left_monoidal:
            errors.append("repcat:left-naturality-mismatch")
        if right_natural != report.right_monoidal:
            errors.append("repcat:right-naturality-mismatch")
        _, _, unit_checks = unit_module_report(algebra)
        errors += ["repcat:" + c.name for c in unit_checks if c.failed]
        from weakhopf.repcat import unit_representation_suite

        errors += [
            "repcat:" + c.name for c in unit_representation_suite(algebra) if c.failed
        ]
    return errors
