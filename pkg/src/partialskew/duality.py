"""The matrix picture of the smash product and its exact verification.

The smash product maps into square matrices over the base algebra, indexed
by the group: a homogeneous generator a#p_h of grade g goes to
h^{-1}·(g^{-1}·a) placed in row gh, column h.  Everything the theory
promises about this map is re-proved here per instance, by linear algebra:

  * the map is multiplicative and sends the unit to the corner idempotent
    (the diagonal matrix of the idempotents of the inverses);
  * its kernel equals the explicit block formula (two independent routes);
  * its image equals both the entrywise-constrained subspace and the Pierce
    corner cut out by the corner idempotent (three independent routes);
  * the smash product splits as (kernel) × (complementary ideal), with the
    map restricting to a bijection from the ideal onto the corner;
  * the canonical separating element of B⊗B over the embedded twisted
    group ring centralizes it and multiplies to the unit.
"""

from __future__ import annotations

from .algebras import AlgebraMap, matrix_algebra
from .errors import InternalCheckFailed
from .linalg import Mat, Subspace, image_basis, vadd, vzero
from .report import check


class DualityData:
    __slots__ = ("smash", "mat", "phi", "corner_idempotent", "kernel", "image",
                 "ideal")

    def __init__(self, smash, mat, phi, corner_idempotent, kernel, image, ideal):
        self.smash = smash
        self.mat = mat
        self.phi = phi
        self.corner_idempotent = corner_idempotent
        self.kernel = kernel
        self.image = image
        self.ideal = ideal


def _block_subspace(smash, multiplier):
    """Span of {x·multiplier(g,h) placed at grade g with dual index h}."""
    skew = smash.skew
    pa = skew.action
    alg = pa.algebra
    field = alg.field
    n = pa.group.order
    dim = smash.dim
    vectors = []
    for g in range(n):
        for h in range(n):
            m = multiplier(g, h)
            for i in range(alg.dim):
                v = alg._basis_times_vec(i, m)
                if not any(v):
                    continue
                coords = pa.ideals[g].coordinates_of(v)
                if coords is None:
                    raise InternalCheckFailed("block generator left its ideal")
                vec = list(vzero(field, dim))
                for t, c in enumerate(coords):
                    vec[smash.index(skew.offsets[g] + t, h)] = c
                vectors.append(tuple(vec))
    return Subspace.from_vectors(field, dim, vectors)


def kernel_formula_subspace(smash):
    """Blockwise kernel formula: A(1-1_{gh})1_g in grade g, dual index h."""
    pa = smash.skew.action
    alg = pa.algebra
    grp = pa.group

    def multiplier(g, h):
        comp = tuple(u - e for u, e in zip(alg.unit, pa.idempotents[grp.mul(g, h)]))
        return alg.mul_vec(comp, pa.idempotents[g])

    return _block_subspace(smash, multiplier)


def complement_ideal_subspace(smash):
    """Blockwise complement: A·1_{gh}·1_g in grade g, dual index h."""
    pa = smash.skew.action
    grp = pa.group

    def multiplier(g, h):
        return pa.algebra.mul_vec(pa.idempotents[grp.mul(g, h)], pa.idempotents[g])

    return _block_subspace(smash, multiplier)


def _verify_twisted_entry_identity(pa):
    """The entry identity behind multiplicativity, checked exhaustively:
    k^{-1}·((gh)^{-1}·(a(g·b))) = ((hk)^{-1}·(g^{-1}·a)) (k^{-1}·(h^{-1}·b))
    for all group triples and all basis pairs a of D_g, b of D_h."""
    alg, grp = pa.algebra, pa.group
    n = grp.order
    for g in range(n):
        for h in range(n):
            gh = grp.mul(g, h)
            for k in range(n):
                hk = grp.mul(h, k)
                for a in pa.ideals[g].basis:
                    ga_part = pa.dot_vec(grp.inv(hk), pa.dot_vec(grp.inv(g), a))
                    for b in pa.ideals[h].basis:
                        lhs = pa.dot_vec(
                            grp.inv(k),
                            pa.dot_vec(grp.inv(gh),
                                       alg.mul_vec(a, pa.dot_vec(g, b))))
                        rhs = alg.mul_vec(
                            ga_part,
                            pa.dot_vec(grp.inv(k), pa.dot_vec(grp.inv(h), b)))
                        if lhs != rhs:
                            raise InternalCheckFailed(
                                f"entry identity fails at ({grp.label(g)},"
                                f"{grp.label(h)},{grp.label(k)})")


def build_duality(smash):
    """Assemble the matrix map, verify it is a homomorphism, and compute the
    kernel, image and complementary ideal."""
    skew = smash.skew
    pa = skew.action
    alg, grp = pa.algebra, pa.group
    n = grp.order
    mat = matrix_algebra(alg, grp)

    cols = []
    for j in range(skew.dim):
        g, i = skew.grade_of(j)
        a = skew.component_bases[g][i]
        ginv_a = pa.dot_vec(grp.inv(g), a)
        for h in range(n):
            c = pa.dot_vec(grp.inv(h), ginv_a)
            cols.append(mat.place(grp.mul(g, h), h, c))
    phi = AlgebraMap.from_columns(smash.algebra, mat, cols)

    _verify_twisted_entry_identity(pa)
    if not phi.is_multiplicative():
        raise InternalCheckFailed("matrix map is not multiplicative")

    bold_e = vzero(alg.field, mat.dim)
    for g in range(n):
        bold_e = vadd(bold_e, mat.place(g, g, pa.idempotents[grp.inv(g)]))
    if phi.apply_vec(smash.algebra.unit) != bold_e:
        raise InternalCheckFailed("unit does not map to the corner idempotent")
    if mat.mul_vec(bold_e, bold_e) != bold_e:
        raise InternalCheckFailed("corner element is not idempotent")

    return DualityData(smash, mat, phi, bold_e, phi.kernel(), phi.image(),
                       complement_ideal_subspace(smash))


# -- report-producing checks ---------------------------------------------

def kernel_report(d):
    formula = kernel_formula_subspace(d.smash)
    agree = formula == d.kernel
    witnesses = [] if agree else ["kernel of the matrix map differs from the block formula"]
    return [check("duality.kernel_formula", agree,
                  {"kernel_dim": d.kernel.dim, "formula_dim": formula.dim},
                  witnesses)]


def corner_report(d):
    pa = d.smash.skew.action
    alg, grp, mat = pa.algebra, pa.group, d.mat
    n = grp.order

    vectors = []
    for r in range(n):
        for s in range(n):
            m = alg.mul_vec(pa.idempotents[grp.inv(r)], pa.idempotents[grp.inv(s)])
            for i in range(alg.dim):
                v = alg._basis_times_vec(i, m)
                if any(v):
                    vectors.append(mat.place(r, s, v))
    entrywise = Subspace.from_vectors(alg.field, mat.dim, vectors)

    pierce = Subspace.from_vectors(
        alg.field, mat.dim,
        [mat.mul_vec(d.corner_idempotent,
                     mat.mul_vec(mat.basis_element(b).coeffs,
                                 d.corner_idempotent))
         for b in range(mat.dim)])

    results = [
        check("duality.image_entrywise", d.image == entrywise,
              {"image_dim": d.image.dim, "entrywise_dim": entrywise.dim}),
        check("duality.image_pierce", d.image == pierce,
              {"image_dim": d.image.dim, "pierce_dim": pierce.dim}),
        check("duality.corner_idempotent",
              d.phi.apply_vec(d.smash.algebra.unit) == d.corner_idempotent
              and mat.mul_vec(d.corner_idempotent, d.corner_idempotent)
              == d.corner_idempotent,
              {"matrix_dim": mat.dim}),
    ]
    return results


def _is_two_sided_ideal(algebra, subspace):
    for b in range(algebra.dim):
        for v in subspace.basis:
            if not subspace.contains_vector(algebra._basis_times_vec(b, v)):
                return False, f"left multiple of {algebra.labels[b]} escapes"
            if not subspace.contains_vector(algebra._vec_times_basis(v, b)):
                return False, f"right multiple of {algebra.labels[b]} escapes"
    return True, ""


def _block_of(smash, vec):
    """(grade, dual index) of a vector supported in a single block."""
    found = None
    for idx, c in enumerate(vec):
        if not c:
            continue
        j, h = smash.parts(idx)
        g, _ = smash.skew.grade_of(j)
        if found is None:
            found = (g, h)
        elif found != (g, h):
            return None
    return found


def _delta_convention_tally(d):
    """Which printed Kronecker condition reproduces the true left product of
    the complementary ideal by basis elements: l = gh (the product rule),
    k = gh, or h = kl."""
    smash = d.smash
    skew = smash.skew
    pa = skew.action
    alg, grp = pa.algebra, pa.group
    B = smash.algebra
    conventions = {"l=gh": True, "k=gh": True, "h=kl": True}
    for v in d.ideal.basis:
        blk = _block_of(smash, v)
        if blk is None:
            continue
        g, h = blk
        a_part = skew.project(
            tuple(v[smash.index(j, h)] for j in range(skew.dim)), g)
        for idx in range(B.dim):
            j, l = smash.parts(idx)
            k, pos = skew.grade_of(j)
            y = skew.component_bases[k][pos]
            true = B._basis_times_vec(idx, v)
            w = alg.mul_vec(y, pa.dot_vec(k, a_part))
            kg = grp.mul(k, g)
            coords = pa.ideals[kg].coordinates_of(w)
            if coords is None:
                raise InternalCheckFailed("ideal product left its graded block")
            payload = list(vzero(alg.field, B.dim))
            for t, c in enumerate(coords):
                payload[smash.index(skew.offsets[kg] + t, h)] = c
            payload = tuple(payload)
            zero = tuple(vzero(alg.field, B.dim))
            for name, cond in (("l=gh", l == grp.mul(g, h)),
                               ("k=gh", k == grp.mul(g, h)),
                               ("h=kl", h == grp.mul(k, l))):
                if true != (payload if cond else zero):
                    conventions[name] = False
    return conventions


def decomposition_report(d):
    """The splitting of the smash product into the kernel and an ideal that
    maps bijectively onto the Pierce corner."""
    B = d.smash.algebra
    results = []

    ok, why = _is_two_sided_ideal(B, d.ideal)
    results.append(check("duality.ideal_two_sided", ok,
                         {"ideal_dim": d.ideal.dim}, [why] if why else []))
    ok, why = _is_two_sided_ideal(B, d.kernel)
    results.append(check("duality.kernel_two_sided", ok,
                         {"kernel_dim": d.kernel.dim}, [why] if why else []))

    inter = d.ideal.intersect(d.kernel)
    total = d.ideal + d.kernel
    results.append(check("duality.direct_sum",
                         inter.is_zero() and total.dim == B.dim,
                         {"intersection_dim": inter.dim, "sum_dim": total.dim,
                          "dim": B.dim}))

    restricted = [d.phi.apply_vec(v) for v in d.ideal.basis]
    restricted_matrix = Mat.from_columns(B.field, restricted, rows=d.mat.dim)
    image = image_basis(restricted_matrix)
    results.append(check("duality.restricted_bijection",
                         image == d.image and restricted_matrix.rank() == d.ideal.dim,
                         {"restricted_rank": restricted_matrix.rank(),
                          "corner_dim": d.image.dim}))

    cross_ok = True
    for v in d.ideal.basis:
        for w in d.kernel.basis:
            if any(B.mul_vec(v, w)) or any(B.mul_vec(w, v)):
                cross_ok = False
    results.append(check("duality.cross_products_zero", cross_ok, {}))

    conv = _delta_convention_tally(d)
    results.append(check("duality.ideal_product_delta", conv["l=gh"],
                         {f"matches[{k}]": v for k, v in sorted(conv.items())}))
    return results


def skew_injectivity_report(d):
    """The embedded twisted group ring meets the kernel trivially, and the
    blockwise reason holds: A(1-1_g)1_g = 0 for every g."""
    smash = d.smash
    pa = smash.skew.action
    alg = pa.algebra
    composite = d.phi.compose(smash.embed_skew())
    ker = composite.kernel()

    argument_ok = True
    for g in range(pa.group.order):
        comp = tuple(u - e for u, e in zip(alg.unit, pa.idempotents[g]))
        m = alg.mul_vec(comp, pa.idempotents[g])
        span = Subspace.from_vectors(
            alg.field, alg.dim,
            [alg._basis_times_vec(i, m) for i in range(alg.dim)])
        if not span.is_zero():
            argument_ok = False
    return [
        check("duality.skew_embedding_injective", ker.is_zero(),
              {"kernel_dim": ker.dim, "skew_dim": smash.skew.dim}),
        check("duality.skew_embedding_argument", argument_ok, {}),
    ]


class TensorOverSubring:
    """B⊗B modulo the balancing relations over an embedded subring.

    Equality in the quotient is decided by membership of the difference in
    the relation subspace, which is spanned by xb⊗y - x⊗by over basis x, y
    of B and a basis b of the subring's image.
    """

    def __init__(self, algebra, subring_vectors):
        self.algebra = algebra
        dim = algebra.dim
        self.ambient = dim * dim
        field = algebra.field
        gens = []
        for b in subring_vectors:
            for x in range(dim):
                xb = algebra._basis_times_vec(x, b)
                for y in range(dim):
                    by = algebra._vec_times_basis(b, y)
                    gen = [field.zero] * self.ambient
                    for m, c in enumerate(xb):
                        if c:
                            gen[m * dim + y] = gen[m * dim + y] + c
                    for m, c in enumerate(by):
                        if c:
                            gen[x * dim + m] = gen[x * dim + m] - c
                    if any(gen):
                        gens.append(tuple(gen))
        self.relations = Subspace.from_vectors(field, self.ambient, gens)

    def tensor(self, x, y):
        dim = self.algebra.dim
        out = [self.algebra.field.zero] * self.ambient
        for i, a in enumerate(x):
            if not a:
                continue
            for j, b in enumerate(y):
                if b:
                    out[i * dim + j] = a * b
        return tuple(out)

    def equal_mod_relations(self, u, v):
        diff = tuple(a - b for a, b in zip(u, v))
        return self.relations.contains_vector(diff)


def separability_report(smash):
    """The canonical element sum of (unit#p_g)⊗(unit#p_g) centralizes the
    embedded twisted group ring and multiplies to the unit."""
    B = smash.algebra
    grp = smash.group
    field = B.field
    n = grp.order

    embed = smash.embed_skew()
    sub_vectors = embed.matrix.columns()
    tensor = TensorOverSubring(B, sub_vectors)

    unit_slices = []
    skew_unit = smash.skew.algebra.unit
    for g in range(n):
        u = [field.zero] * B.dim
        for j, c in enumerate(skew_unit):
            if c:
                u[smash.index(j, g)] = c
        unit_slices.append(tuple(u))

    def tsum(pairs):
        acc = tuple(vzero(field, tensor.ambient))
        for x, y in pairs:
            acc = vadd(acc, tensor.tensor(x, y))
        return acc

    f = tsum((u, u) for u in unit_slices)

    central = True
    for a in sub_vectors:
        fa = tsum((u, B.mul_vec(u, a)) for u in unit_slices)
        af = tsum((B.mul_vec(a, u), u) for u in unit_slices)
        if not tensor.equal_mod_relations(fa, af):
            central = False
            break

    mu = tuple(vzero(field, B.dim))
    for u in unit_slices:
        mu = vadd(mu, B.mul_vec(u, u))
    splits = mu == B.unit

    return [
        check("separability.centralizes", central,
              {"ambient_dim": tensor.ambient,
               "relation_dim": tensor.relations.dim}),
        check("separability.splits_multiplication", splits, {}),
        check("separability.element_nonzero", any(f),
              {"tensor_terms": n}),
    ]
