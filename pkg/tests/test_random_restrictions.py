"""Randomized instances: any permutation of split coordinates restricted to
any nonzero 0/1 idempotent is a valid partial action, and the whole duality
layer must come out green on it."""

from math import lcm

from hypothesis import assume, given, settings, strategies as st

from partialskew.actions import (dot_identities_report, global_action,
                                 restrict_global)
from partialskew.algebras import product_of_fields
from partialskew.duality import (build_duality, corner_report,
                                 decomposition_report, kernel_report,
                                 skew_injectivity_report)
from partialskew.fields import GF, QQ
from partialskew.groups import cyclic
from partialskew.linalg import Mat
from partialskew.skew import build_skew, strong_grading_test
from partialskew.smash import build_smash


def _perm_order(perm):
    seen = [False] * len(perm)
    order = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length, x = 0, start
        while not seen[x]:
            seen[x] = True
            x = perm[x]
            length += 1
        order = lcm(order, length)
    return order


def _perm_matrix(field, perm):
    n = len(perm)
    return Mat(field, [[field.one if i == perm[j] else field.zero
                        for j in range(n)] for i in range(n)])


@settings(max_examples=12, deadline=None)
@given(st.permutations(range(4)), st.lists(st.booleans(), min_size=4, max_size=4),
       st.sampled_from([QQ, GF(5)]))
def test_random_restriction_duality(perm, bits, field):
    order = _perm_order(perm)
    assume(order <= 3)          # keeps the smash product small
    assume(any(bits))
    algebra = product_of_fields(field, 4)
    p = _perm_matrix(field, perm)
    mats = [Mat.identity(field, 4)]
    for _ in range(order - 1):
        mats.append(p @ mats[-1])
    parent = global_action(cyclic(order), algebra, mats)
    e = algebra.element(tuple(field.one if b else field.zero for b in bits))
    pa = restrict_global(parent, e)

    assert all(c.status == "pass" for c in dot_identities_report(pa))
    skew = build_skew(pa)
    st_result = strong_grading_test(skew)
    assert st_result["agree"]
    duality = build_duality(build_smash(skew))
    assert duality.kernel.dim + duality.image.dim == duality.smash.dim
    for rep in (kernel_report(duality), corner_report(duality),
                decomposition_report(duality), skew_injectivity_report(duality)):
        for c in rep:
            assert c.status == "pass", (c.name, c.witnesses)
