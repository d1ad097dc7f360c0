"""Modules, comodules and the truncated tensor functor.

The tensor product of two modules over a weak bialgebra is carried by the
image of the operator representing the coproduct of the unit; restricting
the diagonal action to this image gives a unital module again and the
functor is strictly associative on the nose.  The cyclic submodule of the
dual generated by the counit acts as the unit object when the instance is
monoidal, with explicit unit-constraint maps in both directions.

Comodules are handled through the dual-module correspondence and, on
bimonoidal instances, through the amalgamated tensor product over the right
wedge subalgebra, which is naturally isomorphic to the truncated one.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import TheoremCheck, WeakBialgebra, decide_axioms
from .exactlin import (
    Matrix,
    QZERO,
    Subspace,
    image,
    kernel,
    kron,
    rank,
    unit_vec,
    vadd,
    vscale,
    zero_vec,
)


@dataclass
class ModuleRep:
    algebra: WeakBialgebra
    dim: int
    action: tuple  # one operator matrix per algebra basis vector

    @staticmethod
    def build(algebra, matrices) -> "ModuleRep":
        matrices = tuple(matrices)
        rep = ModuleRep(algebra, matrices[0].rows if matrices else 0, matrices)
        rep.check()
        return rep

    def operator(self, a) -> Matrix:
        acc = Matrix.zero(self.dim, self.dim)
        for i, c in enumerate(a):
            if c:
                acc = acc + self.action[i].scale(c)
        return acc

    def check(self):
        alg = self.algebra
        n = alg.dim
        if self.operator(alg.unit) != Matrix.identity(self.dim):
            raise ValueError("module action does not send the unit to the identity")
        for i in range(n):
            for j in range(n):
                prod = self.operator(alg.mul(alg.basis_vector(i), alg.basis_vector(j)))
                if prod != self.action[i] * self.action[j]:
                    raise ValueError(
                        "module action is not multiplicative at (%d,%d)" % (i, j)
                    )


def regular_module(algebra: WeakBialgebra) -> ModuleRep:
    return ModuleRep(algebra, algebra.dim, algebra.left_mult)


@dataclass
class TruncatedTensor:
    rep: ModuleRep
    left: ModuleRep
    right: ModuleRep
    carrier: Subspace  # inside the plain tensor coordinates
    projector: Matrix


def _diagonal_operator(algebra, v: ModuleRep, w: ModuleRep, a) -> Matrix:
    acc = Matrix.zero(v.dim * w.dim, v.dim * w.dim)
    da = algebra.delta(a)
    for i, row in enumerate(da.data):
        for j, c in enumerate(row):
            if c:
                acc = acc + kron(v.action[i], w.action[j]).scale(c)
    return acc


def tensor_module(v: ModuleRep, w: ModuleRep) -> TruncatedTensor:
    """Truncated tensor product carried by the image of the unit operator."""
    algebra = v.algebra
    if w.algebra is not algebra:
        raise ValueError("modules live over different algebras")
    projector = _diagonal_operator(algebra, v, w, algebra.unit)
    if projector * projector != projector:
        raise ValueError("unit operator failed to be idempotent")
    carrier = image(projector)
    basis = carrier.basis.data
    mats = []
    for t in range(algebra.dim):
        big = _diagonal_operator(algebra, v, w, algebra.basis_vector(t))
        cols = []
        for b in basis:
            moved = big.apply(b)
            coords = carrier.coordinates(moved)
            if coords is None:
                raise ValueError("diagonal action does not preserve the carrier")
            cols.append(coords)
        mats.append(
            Matrix([[cols[k][i] for k in range(len(basis))] for i in range(len(basis))])
            if basis
            else Matrix._empty(0)
        )
    rep = ModuleRep.build(algebra, mats) if basis else ModuleRep(algebra, 0, tuple(mats))
    return TruncatedTensor(rep, v, w, carrier, projector)


def embedding(trunc: TruncatedTensor) -> Matrix:
    """Carrier basis as a (plain tensor dim) x (truncated dim) matrix."""
    return trunc.carrier.basis.transpose()


def unit_module(algebra: WeakBialgebra):
    """The cyclic submodule of the dual generated by the counit."""
    algebra.require_valid()
    carrier = algebra.subspaces["Ahat_R"]
    basis = carrier.basis.data
    mats = []
    for t in range(algebra.dim):
        op = algebra.right_mult[t].transpose()
        cols = []
        for b in basis:
            coords = carrier.coordinates(op.apply(b))
            if coords is None:
                raise ValueError("dual action does not preserve the unit carrier")
            cols.append(coords)
        mats.append(
            Matrix([[cols[k][i] for k in range(len(basis))] for i in range(len(basis))])
        )
    rep = ModuleRep.build(algebra, mats)
    return rep, carrier


def unit_module_report(algebra: WeakBialgebra):
    """Unit module plus the wedge realizations available on monoidal input."""
    rep, carrier = unit_module(algebra)
    report = decide_axioms(algebra)
    checks = []
    if report.left_monoidal or report.right_monoidal:
        sigmas = []
        if report.left_monoidal:
            sigmas.append("R")
        if report.right_monoidal:
            sigmas.append("L")
        eps_r = algebra.eps_maps["eps_r"]
        for sigma in sigmas:
            space = algebra.subspaces["A_%sR" % sigma]
            proj = algebra.projection(sigma, "R")
            rep_ok = True
            inter_ok = True
            sbasis = space.basis.data
            for t in range(algebra.dim):
                cols = []
                for x in sbasis:
                    moved = proj.apply(algebra.mul(algebra.basis_vector(t), x))
                    coords = space.coordinates(moved)
                    if coords is None:
                        rep_ok = False
                        break
                    cols.append(coords)
                if not rep_ok:
                    break
                for k, x in enumerate(sbasis):
                    lhs = carrier.coordinates(eps_r.apply(proj.apply(algebra.mul(algebra.basis_vector(t), x))))
                    step = carrier.coordinates(eps_r.apply(x))
                    rhs = rep.action[t].apply(step)
                    if lhs != rhs:
                        inter_ok = False
            for x in sbasis:
                for y in sbasis:
                    if proj.apply(algebra.mul(x, y)) != algebra.mul(x, y):
                        rep_ok = False
            checks.append(
                TheoremCheck("unit-realization-%s" % sigma, True, rep_ok and inter_ok)
            )
            # the restricted counit map is a module isomorphism with the
            # hatted counit map as its inverse
            ehat = algebra.eps_maps["epshat_l" if sigma == "L" else "epshat_r"]
            iso_ok = True
            for x in sbasis:
                if ehat.apply(eps_r.apply(x)) != x:
                    iso_ok = False
            for phi in carrier.basis.data:
                back = ehat.apply(phi)
                if space.coordinates(back) is None:
                    iso_ok = False
                elif eps_r.apply(back) != phi:
                    iso_ok = False
            checks.append(TheoremCheck("unit-realization-inverse-%s" % sigma, True, iso_ok))
    return rep, carrier, checks


# ----------------------------------------------------------------------
# unit-constraint (coherence) maps
# ----------------------------------------------------------------------


@dataclass
class CoherenceMaps:
    l_map: Matrix
    r_map: Matrix
    l_bar: Matrix
    r_bar: Matrix
    e_rep: ModuleRep
    e_carrier: Subspace
    checks: list = field(default_factory=list)


def coherence_maps(v: ModuleRep) -> CoherenceMaps:
    """Insertion of the counit on either side plus the retraction maps."""
    algebra = v.algebra
    e_rep, e_carrier = unit_module(algebra)
    de = e_rep.dim
    dv = v.dim
    eps_coords = e_carrier.coordinates(algebra.counit)
    if eps_coords is None:
        raise ValueError("counit does not lie in the unit carrier")
    one_ev = _diagonal_operator(algebra, e_rep, v, algebra.unit)
    one_ve = _diagonal_operator(algebra, v, e_rep, algebra.unit)
    l_cols = []
    for k in range(dv):
        vec = [QZERO] * (de * dv)
        for i, c in enumerate(eps_coords):
            if c:
                vec[i * dv + k] += c
        l_cols.append(one_ev.apply(vec))
    l_map = Matrix([[l_cols[k][i] for k in range(dv)] for i in range(de * dv)])
    r_cols = []
    for k in range(dv):
        vec = [QZERO] * (dv * de)
        for i, c in enumerate(eps_coords):
            if c:
                vec[k * de + i] += c
        r_cols.append(one_ve.apply(vec))
    r_map = Matrix([[r_cols[k][i] for k in range(dv)] for i in range(dv * de)])
    # retractions pair the unit coproduct legs against the dual carrier:
    # phi (x) v goes to <phi | 1_(1)> 1_(2) . v and its mirror
    d1 = algebra.delta1
    ebasis = e_carrier.basis.data
    lbar_rows = []
    rbar_rows = []
    act_cache = [v.operator(algebra.basis_vector(w)) for w in range(algebra.dim)]
    for out in range(dv):
        lrow = []
        rrow = []
        for i in range(de):
            phi = ebasis[i]
            op_l = Matrix.zero(dv, dv)
            op_r = Matrix.zero(dv, dv)
            for u, drow in enumerate(d1.data):
                pu = phi[u]
                for w, c in enumerate(drow):
                    if c:
                        if pu:
                            op_l = op_l + act_cache[w].scale(c * pu)
                        pw = phi[w]
                        if pw:
                            op_r = op_r + act_cache[u].scale(c * pw)
            for k in range(dv):
                lrow.append(op_l[out, k])
                rrow.append(op_r[out, k])
        lbar_rows.append(lrow)
        rbar_rows.append(rrow)
    l_bar = Matrix(lbar_rows)  # acts on E (x) V coordinates, phi-major
    r_bar = _reorder_rbar(rbar_rows, de, dv)
    checks = [
        TheoremCheck("left-retraction", True, l_bar * l_map == Matrix.identity(dv)),
        TheoremCheck("right-retraction", True, r_bar * r_map == Matrix.identity(dv)),
        TheoremCheck(
            "retraction-truncation-stability",
            True,
            l_bar * one_ev == l_bar and r_bar * one_ve == r_bar,
        ),
    ]
    return CoherenceMaps(l_map, r_map, l_bar, r_bar, e_rep, e_carrier, checks)


def _reorder_rbar(rbar_rows, de, dv):
    """Convert retraction columns from phi-major to v-major ordering."""
    out = []
    for row in rbar_rows:
        new = [QZERO] * (dv * de)
        for i in range(de):
            for k in range(dv):
                new[k * de + i] = row[i * dv + k]
        out.append(new)
    return Matrix(out)


def coherence_report(v: ModuleRep):
    """Coherence maps with naturality of the insertions under the module
    action; on the regular module the two one-sided naturality statements
    decide the corresponding monoidality flags exactly."""
    algebra = v.algebra
    maps = coherence_maps(v)
    e_rep = maps.e_rep
    left_natural = True
    right_natural = True
    for t in range(algebra.dim):
        big_ev = _diagonal_operator(algebra, e_rep, v, algebra.basis_vector(t))
        if maps.l_map * v.action[t] != big_ev * maps.l_map:
            left_natural = False
            break
    for t in range(algebra.dim):
        big_ve = _diagonal_operator(algebra, v, e_rep, algebra.basis_vector(t))
        if maps.r_map * v.action[t] != big_ve * maps.r_map:
            right_natural = False
            break
    return maps, left_natural, right_natural


# ----------------------------------------------------------------------
# intertwiners
# ----------------------------------------------------------------------


def intertwiner_space(v: ModuleRep, w: ModuleRep) -> Subspace:
    """Module maps v -> w as a subspace of flattened operator matrices."""
    if w.algebra is not v.algebra:
        raise ValueError("modules live over different algebras")
    rows = []
    n = v.algebra.dim
    for t in range(n):
        # T pi_v(e_t) - pi_w(e_t) T = 0, linear in the entries of T
        av = v.action[t]
        aw = w.action[t]
        for i in range(w.dim):
            for j in range(v.dim):
                line = [QZERO] * (w.dim * v.dim)
                for k in range(v.dim):
                    c = av[k, j]
                    if c:
                        line[i * v.dim + k] += c
                for k in range(w.dim):
                    c = aw[i, k]
                    if c:
                        line[k * v.dim + j] -= c
                rows.append(line)
    return kernel(Matrix.from_rows(rows, w.dim * v.dim))


@dataclass
class EndOfUnitReport:
    dim_end: int
    checks: list

    @property
    def ok(self):
        return all(not c.failed for c in self.checks)


def end_of_unit(algebra: WeakBialgebra) -> EndOfUnitReport:
    """Self-intertwiners of the unit object, matched against the relative
    centers (monoidal route) or the wedge intersection (comonoidal route)."""
    report = decide_axioms(algebra)
    checks = []
    if report.monoidal:
        rep, carrier = unit_module(algebra)
        endo = intertwiner_space(rep, rep)
        spans = {}
        for tag, center in (("R", algebra.center_r), ("L", algebra.center_l)):
            vecs = []
            for z in center.basis.data:
                op = Matrix.zero(rep.dim, rep.dim)
                for i, c in enumerate(z):
                    if c:
                        op = op + rep.action[i].scale(c)
                vecs.append(op.flatten())
            spans[tag] = Subspace.from_spanning(vecs, rep.dim * rep.dim)
        checks.append(
            TheoremCheck(
                "unit-endomorphisms-are-central-actions",
                True,
                endo == spans["R"] == spans["L"],
            )
        )
        dual = algebra.dual
        z_dual = dual.subspaces["A_L"].intersect(dual.subspaces["A_R"])
        checks.append(
            TheoremCheck(
                "unit-endomorphism-dimension", True, endo.dim == z_dual.dim
            )
        )
        # right multiplications by the dual wedge intersection realize them
        vecs = []
        for xi in z_dual.basis.data:
            op_amb = dual.right_mult_of(xi)
            cols = []
            good = True
            for b in carrier.basis.data:
                coords = carrier.coordinates(op_amb.apply(b))
                if coords is None:
                    good = False
                    break
                cols.append(coords)
            if good:
                vecs.append(
                    Matrix(
                        [[cols[k][i] for k in range(rep.dim)] for i in range(rep.dim)]
                    ).flatten()
                )
        checks.append(
            TheoremCheck(
                "unit-endomorphisms-as-dual-multiplications",
                True,
                Subspace.from_spanning(vecs, rep.dim * rep.dim) == endo,
            )
        )
        dim_end = endo.dim
    elif report.comonoidal:
        space = algebra.subspaces["A_R"]
        basis = space.basis.data
        k = len(basis)
        n = algebra.dim
        rows = []
        # the unit comodule coaction is the restricted coproduct
        for t_out in range(k):
            for amb in range(n):
                for src in range(k):
                    line = [QZERO] * (k * k)
                    # (T (x) id) rho - rho T = 0 entrywise
                    for m in range(k):
                        c = _coact_coeff(algebra, space, basis, src, m, amb)
                        if c:
                            line[t_out * k + m] += c
                    for m in range(k):
                        c2 = _coact_coeff(algebra, space, basis, m, t_out, amb)
                        if c2:
                            line[m * k + src] -= c2
                    rows.append(line)
        endo = kernel(Matrix.from_rows(rows, k * k))
        z = algebra.subspaces["A_L"].intersect(space)
        vecs = []
        for zv in z.basis.data:
            cols = []
            good = True
            for b in basis:
                coords = space.coordinates(algebra.mul(b, zv))
                if coords is None:
                    good = False
                    break
                cols.append(coords)
            if good:
                vecs.append(
                    Matrix([[cols[t][i] for t in range(k)] for i in range(k)]).flatten()
                )
        checks.append(
            TheoremCheck(
                "unit-comodule-endomorphisms",
                True,
                Subspace.from_spanning(vecs, k * k) == endo,
            )
        )
        dim_end = endo.dim
    else:
        return EndOfUnitReport(0, [TheoremCheck("end-of-unit", False, True)])
    return EndOfUnitReport(dim_end, checks)


def _coact_coeff(algebra, space, basis, src, dst, amb):
    """Coefficient of (basis dst) (x) e_amb in the coproduct of basis src."""
    db = algebra.delta(basis[src])
    col = tuple(db[i, amb] for i in range(algebra.dim))
    coords = space.coordinates(col)
    if coords is None:
        raise ValueError("coproduct does not restrict to the wedge comodule")
    return coords[dst]


# ----------------------------------------------------------------------
# comodules
# ----------------------------------------------------------------------


@dataclass
class Comodule:
    algebra: WeakBialgebra
    dim: int
    coaction: tuple  # coaction[v] is a (dim x algebra.dim) matrix

    @staticmethod
    def build(algebra, coaction):
        coaction = tuple(
            m if isinstance(m, Matrix) else Matrix(m) for m in coaction
        )
        com = Comodule(algebra, len(coaction), coaction)
        com.check()
        return com

    def check(self):
        algebra = self.algebra
        n = algebra.dim
        for v in range(self.dim):
            row = self.coaction[v]
            if row.rows != self.dim or row.cols != n:
                raise ValueError("coaction slice has wrong shape")
            got = [QZERO] * self.dim
            for w in range(self.dim):
                for k in range(n):
                    c = row[w, k]
                    if c:
                        got[w] += c * algebra.counit[k]
            if tuple(got) != tuple(unit_vec(self.dim, v)):
                raise ValueError("coaction fails the counit law at %d" % v)
        for v in range(self.dim):
            lhs = {}
            for w in range(self.dim):
                for k in range(n):
                    c = self.coaction[v][w, k]
                    if not c:
                        continue
                    for x in range(self.dim):
                        for m in range(n):
                            c2 = self.coaction[w][x, m]
                            if c2:
                                key = (x, m, k)
                                val = lhs.get(key, QZERO) + c * c2
                                if val:
                                    lhs[key] = val
                                else:
                                    lhs.pop(key, None)
            rhs = {}
            for w in range(self.dim):
                for k in range(n):
                    c = self.coaction[v][w, k]
                    if not c:
                        continue
                    for i, drow in enumerate(algebra.comult[k].data):
                        for j, c2 in enumerate(drow):
                            if c2:
                                key = (w, i, j)
                                val = rhs.get(key, QZERO) + c * c2
                                if val:
                                    rhs[key] = val
                                else:
                                    rhs.pop(key, None)
            if lhs != rhs:
                raise ValueError("coaction fails coassociativity at %d" % v)

    def to_dual_module(self) -> ModuleRep:
        dual = self.algebra.dual
        mats = []
        for k in range(dual.dim):
            mats.append(
                Matrix(
                    [
                        [self.coaction[v][w, k] for v in range(self.dim)]
                        for w in range(self.dim)
                    ]
                )
            )
        return ModuleRep.build(dual, mats)


def regular_comodule(algebra: WeakBialgebra) -> Comodule:
    mats = []
    for v in range(algebra.dim):
        mats.append(algebra.comult[v])
    return Comodule.build(algebra, mats)


@dataclass
class ComoduleTensorReport:
    amalgamated: Comodule
    truncated: Comodule
    quotient_of_plain: Matrix  # projection from the plain tensor
    truncated_carrier: Subspace
    checks: list = field(default_factory=list)

    @property
    def ok(self):
        return all(not c.failed for c in self.checks)


def comodule_tensor(v: Comodule, w: Comodule) -> ComoduleTensorReport:
    """Tensor product of comodules over the right wedge subalgebra together
    with the truncated realization and the isomorphism between them."""
    algebra = v.algebra
    if w.algebra is not algebra:
        raise ValueError("comodules live over different algebras")
    report = decide_axioms(algebra)
    if not report.bimonoidal:
        raise ValueError("comodule tensor products need a bimonoidal instance")
    checks = []
    space = algebra.subspaces["A_R"]
    rbasis = space.basis.data

    def act_left(m, com, idx):
        """m . f_idx = f_(0) eps(m f_(1))."""
        out = zero_vec(com.dim)
        row = com.coaction[idx]
        for t in range(com.dim):
            s = QZERO
            for k in range(algebra.dim):
                c = row[t, k]
                if c:
                    s += c * algebra.eps(algebra.mul(m, algebra.basis_vector(k)))
            out = vadd(out, vscale(s, unit_vec(com.dim, t)))
        return out

    def act_right(com, idx, m):
        out = zero_vec(com.dim)
        row = com.coaction[idx]
        for t in range(com.dim):
            s = QZERO
            for k in range(algebra.dim):
                c = row[t, k]
                if c:
                    s += c * algebra.eps(algebra.mul(algebra.basis_vector(k), m))
            out = vadd(out, vscale(s, unit_vec(com.dim, t)))
        return out

    # bimodule compatibility of the coactions with the wedge actions
    bi_ok = True
    for m in rbasis:
        dm = algebra.delta(m)
        for idx in range(v.dim):
            lhs = {}
            acted = act_left(m, v, idx)
            for t, c in enumerate(acted):
                if c:
                    row = v.coaction[t]
                    for x in range(v.dim):
                        for k in range(algebra.dim):
                            cc = row[x, k]
                            if cc:
                                key = (x, k)
                                lhs[key] = lhs.get(key, QZERO) + c * cc
            rhs = {}
            row = v.coaction[idx]
            for x in range(v.dim):
                for k in range(algebra.dim):
                    c = row[x, k]
                    if not c:
                        continue
                    for u, drow in enumerate(dm.data):
                        for z, c2 in enumerate(drow):
                            if not c2:
                                continue
                            # (m_(1) . f_x) (x) m_(2) e_k
                            moved = act_left(algebra.basis_vector(u), v, x)
                            prod = algebra.mul(algebra.basis_vector(z), algebra.basis_vector(k))
                            for xx, c3 in enumerate(moved):
                                if c3:
                                    for kk, c4 in enumerate(prod):
                                        if c4:
                                            key = (xx, kk)
                                            val = rhs.get(key, QZERO) + c * c2 * c3 * c4
                                            if val:
                                                rhs[key] = val
                                            else:
                                                rhs.pop(key, None)
            if lhs != {k: val for k, val in rhs.items() if val}:
                bi_ok = False
            # mirror: the right action moves through the second coproduct leg
            lhs_r = {}
            acted_r = act_right(v, idx, m)
            for t, c in enumerate(acted_r):
                if c:
                    row = v.coaction[t]
                    for x in range(v.dim):
                        for k in range(algebra.dim):
                            cc = row[x, k]
                            if cc:
                                key = (x, k)
                                lhs_r[key] = lhs_r.get(key, QZERO) + c * cc
            rhs_r = {}
            row = v.coaction[idx]
            for x in range(v.dim):
                for k in range(algebra.dim):
                    c = row[x, k]
                    if not c:
                        continue
                    for u, drow in enumerate(dm.data):
                        for z, c2 in enumerate(drow):
                            if not c2:
                                continue
                            moved = act_right(v, x, algebra.basis_vector(u))
                            prod = algebra.mul(
                                algebra.basis_vector(k), algebra.basis_vector(z)
                            )
                            for xx, c3 in enumerate(moved):
                                if c3:
                                    for kk, c4 in enumerate(prod):
                                        if c4:
                                            key = (xx, kk)
                                            val = rhs_r.get(key, QZERO) + c * c2 * c3 * c4
                                            if val:
                                                rhs_r[key] = val
                                            else:
                                                rhs_r.pop(key, None)
            if lhs_r != {k: val for k, val in rhs_r.items() if val}:
                bi_ok = False
    checks.append(TheoremCheck("coaction-bimodule-compatibility", True, bi_ok))

    # counit recovery through the mixed projections
    rec_ok = True
    p_rr = algebra.projection("R", "R")
    p_rl = algebra.projection("R", "L")
    for idx in range(v.dim):
        row = v.coaction[idx]
        acc1 = zero_vec(v.dim)
        acc2 = zero_vec(v.dim)
        for t in range(v.dim):
            for k in range(algebra.dim):
                c = row[t, k]
                if c:
                    acc1 = vadd(
                        acc1,
                        vscale(c, act_left(p_rr.apply(algebra.basis_vector(k)), v, t)),
                    )
                    acc2 = vadd(
                        acc2,
                        vscale(c, act_right(v, t, p_rl.apply(algebra.basis_vector(k)))),
                    )
        if acc1 != unit_vec(v.dim, idx) or acc2 != unit_vec(v.dim, idx):
            rec_ok = False
    checks.append(TheoremCheck("counit-recovery", True, rec_ok))

    # quotient carrier of the amalgamated product
    plain = v.dim * w.dim
    rel = []
    for m in rbasis:
        for a in range(v.dim):
            va = act_right(v, a, m)
            for b in range(w.dim):
                wb = act_left(m, w, b)
                vecr = [QZERO] * plain
                for x, c in enumerate(va):
                    if c:
                        vecr[x * w.dim + b] += c
                for y, c in enumerate(wb):
                    if c:
                        vecr[a * w.dim + y] -= c
                if any(vecr):
                    rel.append(tuple(vecr))
    relspace = Subspace.from_spanning(rel, plain)
    pivots = set()
    for row in relspace.basis.data:
        pivots.add(next(c for c, x in enumerate(row) if x))
    free = [c for c in range(plain) if c not in pivots]

    def reduce_vec(vecr):
        vecr = list(vecr)
        for row in relspace.basis.data:
            pc = next(c for c, x in enumerate(row) if x)
            f = vecr[pc]
            if f:
                vecr = [p - f * q for p, q in zip(vecr, row)]
        return tuple(vecr[c] for c in free)

    def plain_coaction(a, b):
        """Coaction of f_a (x) g_b on the plain tensor."""
        out = {}
        rowa = v.coaction[a]
        rowb = w.coaction[b]
        for x in range(v.dim):
            for k in range(algebra.dim):
                c1 = rowa[x, k]
                if not c1:
                    continue
                for y in range(w.dim):
                    for m in range(algebra.dim):
                        c2 = rowb[y, m]
                        if not c2:
                            continue
                        prod = algebra.mul(
                            algebra.basis_vector(k), algebra.basis_vector(m)
                        )
                        for kk, c3 in enumerate(prod):
                            if c3:
                                key = (x * w.dim + y, kk)
                                val = out.get(key, QZERO) + c1 * c2 * c3
                                if val:
                                    out[key] = val
                                else:
                                    out.pop(key, None)
        return out

    qdim = len(free)
    amalg_coaction = [Matrix.zero(qdim, algebra.dim) for _ in range(qdim)]
    lift = [unit_vec(plain, free[t]) for t in range(qdim)]
    for t in range(qdim):
        a, b = divmod(free[t], w.dim)
        rows = [[QZERO] * algebra.dim for _ in range(qdim)]
        for (pos, k), c in plain_coaction(a, b).items():
            red = reduce_vec(unit_vec(plain, pos))
            for x, c2 in enumerate(red):
                if c2:
                    rows[x][k] += c * c2
        amalg_coaction[t] = Matrix(rows)
    amalgamated = Comodule.build(algebra, amalg_coaction)

    # truncated realization inside the plain tensor
    trunc_op_rows = [[QZERO] * plain for _ in range(plain)]
    for a in range(v.dim):
        for b in range(w.dim):
            for (pos, k), c in plain_coaction(a, b).items():
                e = algebra.counit[k]
                if e:
                    trunc_op_rows[pos][a * w.dim + b] += c * e
    trunc_op = Matrix(trunc_op_rows)
    carrier = image(trunc_op)
    tbasis = carrier.basis.data
    tdim = len(tbasis)
    t_coaction = []
    for bvec in tbasis:
        rows = [[QZERO] * algebra.dim for _ in range(tdim)]
        for pos, c in enumerate(bvec):
            if not c:
                continue
            a, b = divmod(pos, w.dim)
            for (pos2, k), c2 in plain_coaction(a, b).items():
                part = carrier.coordinates(_scaled_unit(plain, pos2, c * c2))
                if part is None:
                    raise ValueError("truncated coaction left its carrier")
                for x, c3 in enumerate(part):
                    if c3:
                        rows[x][k] += c3
        t_coaction.append(Matrix(rows))
    truncated = Comodule.build(algebra, t_coaction)

    # mutually inverse comodule maps between the two realizations
    fwd_cols = []
    for bvec in tbasis:
        fwd_cols.append(reduce_vec(bvec))
    fwd = Matrix([[fwd_cols[t][i] for t in range(tdim)] for i in range(qdim)])
    bwd_cols = []
    for t in range(qdim):
        a, b = divmod(free[t], w.dim)
        acc = [QZERO] * plain
        for (pos, k), c in plain_coaction(a, b).items():
            e = algebra.counit[k]
            if e:
                acc[pos] += c * e
        coords = carrier.coordinates(acc)
        if coords is None:
            raise ValueError("inverse comodule map left the truncated carrier")
        bwd_cols.append(coords)
    bwd = Matrix([[bwd_cols[t][i] for t in range(qdim)] for i in range(tdim)])
    iso_ok = fwd * bwd == Matrix.identity(qdim) and bwd * fwd == Matrix.identity(tdim)
    # the forward map is a comodule morphism
    morph_ok = True
    for t in range(tdim):
        lhs = {}
        for x in range(qdim):
            for k in range(algebra.dim):
                c = amalg_coaction_entry(amalgamated, t, x, k, fwd)
                if c:
                    lhs[(x, k)] = c
        rhs = {}
        for x in range(tdim):
            for k in range(algebra.dim):
                c = truncated.coaction[t][x, k]
                if not c:
                    continue
                col = fwd.col(x)
                for y, c2 in enumerate(col):
                    if c2:
                        key = (y, k)
                        val = rhs.get(key, QZERO) + c * c2
                        if val:
                            rhs[key] = val
                        else:
                            rhs.pop(key, None)
        if {k: val for k, val in lhs.items() if val} != rhs:
            morph_ok = False
    checks.append(TheoremCheck("amalgamated-truncated-isomorphism", True, iso_ok and morph_ok))
    return ComoduleTensorReport(
        amalgamated=amalgamated,
        truncated=truncated,
        quotient_of_plain=fwd,
        truncated_carrier=carrier,
        checks=checks,
    )


def _scaled_unit(n, pos, c):
    out = [QZERO] * n
    out[pos] = c
    return tuple(out)


def amalg_coaction_entry(amalgamated, t, x, k, fwd):
    """Coefficient of (quotient x) (x) e_k in the coaction of fwd column t."""
    s = QZERO
    col = fwd.col(t)
    for src, c in enumerate(col):
        if c:
            s += c * amalgamated.coaction[src][x, k]
    return s


# ----------------------------------------------------------------------
# monoidal coherence suite
# ----------------------------------------------------------------------


def morphism_tensor_matrix(f: Matrix, g: Matrix, src: TruncatedTensor) -> Matrix:
    """(f (x) g) applied to the truncated carrier, valued in ambient coords."""
    return kron(f, g) * embedding(src)


def monoidal_coherence_suite(v: ModuleRep, w: ModuleRep):
    """Triangle identities of the unit-constraint maps on a monoidal
    instance, plus naturality of the insertions along intertwiners."""
    algebra = v.algebra
    report = decide_axioms(algebra)
    checks = []
    maps_v = coherence_maps(v)
    maps_w = coherence_maps(w)
    e_rep = maps_v.e_rep
    de = e_rep.dim
    vw = tensor_module(v, w)
    if report.monoidal:
        ev = tensor_module(e_rep, v)
        ve = tensor_module(v, e_rep)
        checks.append(
            TheoremCheck(
                "unit-constraints-bijective",
                True,
                rank(maps_v.l_map) == ev.rep.dim == v.dim
                and rank(maps_v.r_map) == ve.rep.dim == v.dim,
            )
        )
        # middle-insertion triangle
        lhs = kron(maps_v.r_map, Matrix.identity(w.dim)) * embedding(vw)
        rhs = kron(Matrix.identity(v.dim), maps_w.l_map) * embedding(vw)
        checks.append(TheoremCheck("middle-insertion-triangle", True, lhs == rhs))
        # left insertion is computed by the truncated module directly
        maps_vw = coherence_maps(vw.rep)
        lhs2 = kron(maps_v.l_map, Matrix.identity(w.dim)) * embedding(vw)
        rhs2 = kron(Matrix.identity(de), embedding(vw)) * maps_vw.l_map
        checks.append(TheoremCheck("left-insertion-stability", True, lhs2 == rhs2))
        wv = tensor_module(w, v)
        maps_wv = coherence_maps(wv.rep)
        lhs3 = kron(Matrix.identity(w.dim), maps_v.r_map) * embedding(wv)
        rhs3 = kron(embedding(wv), Matrix.identity(de)) * maps_wv.r_map
        checks.append(TheoremCheck("right-insertion-stability", True, lhs3 == rhs3))
        maps_e = coherence_maps(e_rep)
        checks.append(
            TheoremCheck(
                "unit-insertions-coincide", True, maps_e.l_map == maps_e.r_map
            )
        )
    # naturality along every intertwiner
    inter = intertwiner_space(v, w)
    nat_ok = True
    for frow in inter.basis.data:
        f = Matrix(
            [
                [frow[i * v.dim + j] for j in range(v.dim)]
                for i in range(w.dim)
            ]
        )
        if maps_w.l_map * f != kron(Matrix.identity(de), f) * maps_v.l_map:
            nat_ok = False
        if maps_w.r_map * f != kron(f, Matrix.identity(de)) * maps_v.r_map:
            nat_ok = False
    checks.append(TheoremCheck("insertion-naturality", True, nat_ok))
    return checks


def associativity_check(u: ModuleRep, v: ModuleRep, w: ModuleRep) -> bool:
    """Strict associativity: both double truncations carve out the same
    subspace of the triple tensor and carry the same action."""
    uv = tensor_module(u, v)
    left = tensor_module(uv.rep, w)
    vw = tensor_module(v, w)
    right = tensor_module(u, vw.rep)
    amb_left = kron(embedding(uv), Matrix.identity(w.dim)) * embedding(left)
    amb_right = kron(Matrix.identity(u.dim), embedding(vw)) * embedding(right)
    dim_amb = u.dim * v.dim * w.dim
    space_left = Subspace.from_spanning(
        [amb_left.col(t) for t in range(amb_left.cols)], dim_amb
    )
    space_right = Subspace.from_spanning(
        [amb_right.col(t) for t in range(amb_right.cols)], dim_amb
    )
    if space_left != space_right:
        return False
    algebra = u.algebra
    triple = {}
    da = algebra.delta2(algebra.unit)
    for t in range(algebra.dim):
        op = Matrix.zero(dim_amb, dim_amb)
        for (p, q, r), c in algebra.delta2(algebra.basis_vector(t)).items():
            op = op + kron(kron(u.action[p], v.action[q]), w.action[r]).scale(c)
        for b in space_left.basis.data:
            if space_left.coordinates(op.apply(b)) is None:
                return False
    return True


# ----------------------------------------------------------------------
# the unit representation of the whole algebra
# ----------------------------------------------------------------------


def unit_representation_suite(algebra: WeakBialgebra):
    """Image and kernel facts of the action on the unit module: the image
    sits inside the endomorphisms over the dual wedge intersection with
    equality exactly when the dual wedge product amalgamates freely, and
    faithfulness picks out instances whose dual is generated by its wedges."""
    algebra.require_valid()
    report = decide_axioms(algebra)
    checks = []
    if report.monoidal:
        rep, carrier = unit_module(algebra)
        de = rep.dim
        dual = algebra.dual
        z = dual.subspaces["A_L"].intersect(dual.subspaces["A_R"])
        # endomorphisms commuting with right multiplication by z
        rows = []
        for zv in z.basis.data:
            op_cols = []
            good = True
            for b in carrier.basis.data:
                coords = carrier.coordinates(dual.right_mult_of(zv).apply(b))
                if coords is None:
                    good = False
                    break
                op_cols.append(coords)
            if not good:
                continue
            zmat = Matrix([[op_cols[k][i] for k in range(de)] for i in range(de)])
            for i in range(de):
                for j in range(de):
                    line = [QZERO] * (de * de)
                    for k in range(de):
                        c = zmat[k, j]
                        if c:
                            line[i * de + k] += c
                        c2 = zmat[i, k]
                        if c2:
                            line[k * de + j] -= c2
                    rows.append(line)
        commutant = (
            kernel(Matrix.from_rows(rows, de * de))
            if rows
            else Subspace.full(de * de)
        )
        img = Subspace.from_spanning(
            [rep.action[t].flatten() for t in range(algebra.dim)], de * de
        )
        checks.append(
            TheoremCheck("unit-action-in-commutant", True, commutant.contains_subspace(img))
        )
        prod_dim = dual.subspace_product(
            dual.subspaces["A_L"], dual.subspaces["A_R"]
        ).dim
        rel = []
        lb = dual.subspaces["A_L"].basis.data
        rb = dual.subspaces["A_R"].basis.data
        for zv in z.basis.data:
            for x in lb:
                xz = dual.mul(x, zv)
                for y in rb:
                    zy = dual.mul(zv, y)
                    vecr = [QZERO] * (len(lb) * len(rb))
                    cx = dual.subspaces["A_L"].coordinates(xz)
                    cy = dual.subspaces["A_R"].coordinates(zy)
                    for i, c in enumerate(cx):
                        for j, yv in enumerate(dual.subspaces["A_R"].coordinates(y)):
                            if c and yv:
                                vecr[i * len(rb) + j] += c * yv
                    for i, xv in enumerate(dual.subspaces["A_L"].coordinates(x)):
                        for j, c in enumerate(cy):
                            if xv and c:
                                vecr[i * len(rb) + j] -= xv * c
                    if any(vecr):
                        rel.append(tuple(vecr))
        amalg_dim = len(lb) * len(rb) - Subspace.from_spanning(
            rel, len(lb) * len(rb)
        ).dim
        checks.append(
            TheoremCheck(
                "free-amalgamation-equivalence",
                True,
                (img == commutant) == (prod_dim == amalg_dim),
            )
        )
        ker_rows = []
        for i in range(de):
            for j in range(de):
                ker_rows.append(
                    [rep.action[t][i, j] for t in range(algebra.dim)]
                )
        faithful = kernel(Matrix.from_rows(ker_rows, algebra.dim)).dim == 0
        checks.append(
            TheoremCheck("faithfulness-cominimality", True, faithful == report.cominimal)
        )
    if report.comonoidal:
        # the dual statement: kernel of the dual acting on the right wedge
        space = algebra.subspaces["A_R"]
        k = space.dim
        mats = []
        for phi_idx in range(algebra.dim):
            cols = []
            for b in space.basis.data:
                db = algebra.delta(b)
                moved = tuple(db[i, phi_idx] for i in range(algebra.dim))
                coords = space.coordinates(moved)
                if coords is None:
                    raise ValueError("dual action does not preserve the right wedge")
                cols.append(coords)
            mats.append(Matrix([[cols[t][i] for t in range(k)] for i in range(k)]))
        ker_rows = []
        for i in range(k):
            for j in range(k):
                ker_rows.append([mats[t][i, j] for t in range(algebra.dim)])
        ker = kernel(Matrix.from_rows(ker_rows, algebra.dim))
        prod = algebra.subspace_product(
            algebra.subspaces["A_L"], algebra.subspaces["A_R"]
        )
        ann_rows = [list(b) for b in prod.basis.data]
        annihilator = kernel(Matrix.from_rows(ann_rows, algebra.dim))
        checks.append(
            TheoremCheck("dual-unit-action-kernel", True, ker == annihilator)
        )
    return checks
