import pytest

from weakhopf.core import decide_axioms
from weakhopf.exactlin import Matrix, Q, rank
from weakhopf.repcat import (
    Comodule,
    ModuleRep,
    associativity_check,
    coherence_report,
    comodule_tensor,
    end_of_unit,
    intertwiner_space,
    monoidal_coherence_suite,
    regular_comodule,
    regular_module,
    tensor_module,
    unit_module,
    unit_module_report,
    unit_representation_suite,
)


def test_ordinary_tensor_has_no_truncation(entries):
    alg = entries["group:z3"].algebra
    v = regular_module(alg)
    trunc = tensor_module(v, v)
    assert trunc.rep.dim == v.dim * v.dim


def test_example1_regular_square_truncates(entries):
    alg = entries["example1"].algebra
    v = regular_module(alg)
    trunc = tensor_module(v, v)
    assert trunc.rep.dim == rank(trunc.projector)
    assert trunc.rep.dim < 81


def test_tensor_action_is_unital_module(entries):
    alg = entries["bsz-dual:2"].algebra
    v = regular_module(alg)
    trunc = tensor_module(v, v)
    trunc.rep.check()


def test_associativity_small(entries):
    for name in ("group:z2", "bsz-dual:2", "dualgroup:z3", "adcross:z2,z2"):
        alg = entries[name].algebra
        v = regular_module(alg)
        assert associativity_check(v, v, v), name


def test_unit_module_ordinary(entries):
    alg = entries["group:z3"].algebra
    rep, carrier = unit_module(alg)
    assert rep.dim == 1
    # one-dimensional action through the counit
    for t in range(alg.dim):
        assert rep.action[t] == Matrix([[alg.counit[t]]])


def test_unit_module_dual_example1(entries):
    dual = entries["example1"].algebra.dual
    rep, carrier, checks = unit_module_report(dual)
    assert rep.dim == 3
    assert all(not c.failed for c in checks)


def test_unit_module_realizations_monoidal(entries):
    for name in ("bsz-dual:2", "adcross:z2,z2"):
        rep, carrier, checks = unit_module_report(entries[name].algebra)
        assert all(not c.failed for c in checks), name


def test_coherence_retractions_always(entries):
    for name in ("example1", "group:z2", "bsz-dual:2"):
        module = regular_module(entries[name].algebra)
        maps, _, _ = coherence_report(module)
        assert all(not c.failed for c in maps.checks), name


def test_coherence_naturality_matches_flags(entries):
    for name in ("example1", "group:z3", "bsz-dual:2", "adcross:z2,z2"):
        alg = entries[name].algebra
        module = regular_module(alg)
        _, left_natural, right_natural = coherence_report(module)
        report = decide_axioms(alg)
        assert left_natural == report.left_monoidal, name
        assert right_natural == report.right_monoidal, name


def test_coherence_naturality_dual_example1(entries):
    dual = entries["example1"].algebra.dual
    _, left_natural, right_natural = coherence_report(regular_module(dual))
    assert left_natural and right_natural


def test_monoidal_coherence_suite(entries):
    for name in ("group:z3", "bsz-dual:2"):
        alg = entries[name].algebra
        v = regular_module(alg)
        checks = monoidal_coherence_suite(v, v)
        assert all(not c.failed for c in checks), (
            name,
            [c.name for c in checks if c.failed],
        )


def test_monoidal_coherence_suite_dual_example1(entries):
    dual = entries["example1"].algebra.dual
    v = regular_module(dual)
    checks = monoidal_coherence_suite(v, v)
    assert all(not c.failed for c in checks)


def test_intertwiners_of_regular_module(entries):
    alg = entries["bsz-dual:2"].algebra
    v = regular_module(alg)
    space = intertwiner_space(v, v)
    # self-intertwiners of the regular module = right multiplications
    assert space.dim == alg.dim


def test_end_of_unit_ordinary(entries):
    report = end_of_unit(entries["group:z2"].algebra)
    assert report.dim_end == 1 and report.ok


def test_end_of_unit_matrix_instance(entries):
    alg = entries["bsz-dual:2"].algebra
    report = end_of_unit(alg)
    dual = alg.dual
    z_dual = dual.subspaces["A_L"].intersect(dual.subspaces["A_R"])
    assert report.dim_end == z_dual.dim
    assert report.ok


def test_end_of_unit_comodule_route(entries):
    report = end_of_unit(entries["example1"].algebra)
    alg = entries["example1"].algebra
    z = alg.subspaces["A_L"].intersect(alg.subspaces["A_R"])
    assert report.dim_end == z.dim
    assert report.ok


def test_comodule_validation_rejects_bad_coaction(entries):
    alg = entries["group:z2"].algebra
    with pytest.raises(ValueError):
        Comodule.build(alg, [Matrix([[1, 1]]), Matrix([[0, 0]])])


def test_regular_comodule_dual_module(entries):
    alg = entries["bsz-dual:2"].algebra
    com = regular_comodule(alg)
    rep = com.to_dual_module()
    rep.check()
    assert rep.dim == alg.dim


def test_comodule_tensor_square(entries):
    alg = entries["bsz-dual:2"].algebra
    com = regular_comodule(alg)
    report = comodule_tensor(com, com)
    assert report.ok, [c.name for c in report.checks if c.failed]
    assert report.amalgamated.dim == report.truncated.dim


def test_comodule_tensor_needs_bimonoidal(entries):
    alg = entries["example1"].algebra
    with pytest.raises(ValueError):
        comodule_tensor(regular_comodule(alg), regular_comodule(alg))


def test_comodule_tensor_ordinary_is_plain(entries):
    alg = entries["group:z2"].algebra
    com = regular_comodule(alg)
    report = comodule_tensor(com, com)
    assert report.amalgamated.dim == alg.dim * alg.dim
    assert report.ok


def test_unit_comodule_wedge_actions(entries):
    # the unit comodule carried by the right wedge: its coaction is the
    # restricted coproduct and the recovery laws single out the wedge unit
    alg = entries["adcross:z2,z2"].algebra
    space = alg.subspaces["A_R"]
    k = space.dim
    rows = []
    for b in space.basis.data:
        db = alg.delta(b)
        mat = []
        for w in range(k):
            mat.append([Q(0)] * alg.dim)
        for amb in range(alg.dim):
            col = tuple(db[i, amb] for i in range(alg.dim))
            coords = space.coordinates(col)
            assert coords is not None
            for w in range(k):
                mat[w][amb] = coords[w]
        rows.append(Matrix(mat))
    com = Comodule.build(alg, rows)
    rep = com.to_dual_module()
    rep.check()


def test_unit_representation_suite(entries):
    for name in ("bsz-dual:2", "example1", "adcross:z2,z2", "dualgroup:z3"):
        checks = unit_representation_suite(entries[name].algebra)
        assert all(not c.failed for c in checks), (
            name,
            [c.name for c in checks if c.failed],
        )
