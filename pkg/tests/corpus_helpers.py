"""Builders for the standing examples and their deliberately broken variants."""

from fractions import Fraction

from partialskew.actions import (global_action, make_partial_action,
                                 restrict_global, trivial_from_split)
from partialskew.algebras import (field_algebra, matrix_algebra,
                                  product_of_fields)
from partialskew.errors import (AxiomIFails, AxiomIIFails, AxiomIIIFails,
                                NotCentralIdempotent, NotIsoOnIdeal)
from partialskew.fields import QQ
from partialskew.groups import cyclic
from partialskew.linalg import Mat


def qmat(rows):
    return Mat(QQ, [[Fraction(x) for x in row] for row in rows])


def qvec(entries):
    return tuple(Fraction(x) for x in entries)


def split_action():
    """The two-field split action of the order-2 group (scenario s1)."""
    k = product_of_fields(QQ, 1)
    return trivial_from_split(k, k, cyclic(2))


def global_swap_action():
    """The coordinate swap of the order-2 group on the split plane."""
    algebra = product_of_fields(QQ, 2)
    swap = qmat([[0, 1], [1, 0]])
    return global_action(cyclic(2), algebra, [Mat.identity(QQ, 2), swap])


def z3_restricted_action():
    """Order-3 rotation of three split coordinates, cut down to two of them."""
    algebra = product_of_fields(QQ, 3)
    shift = qmat([[0, 0, 1], [1, 0, 0], [0, 1, 0]])
    parent = global_action(cyclic(3), algebra,
                           [Mat.identity(QQ, 3), shift, shift @ shift])
    return restrict_global(parent, algebra.element(qvec([1, 1, 0])))


def split_field2_z3_action():
    return trivial_from_split(product_of_fields(QQ, 2),
                              product_of_fields(QQ, 1), cyclic(3))


def split_m2_z2_action():
    return trivial_from_split(matrix_algebra(field_algebra(QQ), 2),
                              product_of_fields(QQ, 1), cyclic(2))


def corrupted_action_variants():
    """(name, thunk, expected error) triples; each thunk must raise."""
    variants = []

    def non_idempotent():
        algebra = product_of_fields(QQ, 2)
        proj = qmat([[1, 0], [0, 0]])
        return make_partial_action(
            cyclic(2), algebra,
            [qvec([1, 1]), qvec([1, -1])],
            [Mat.identity(QQ, 2), proj])
    variants.append(("non-idempotent marker", non_idempotent,
                     NotCentralIdempotent))

    def non_central():
        m2 = matrix_algebra(field_algebra(QQ), 2)
        # E00 + E01 squares to itself but does not commute with E00
        e = qvec([1, 1, 0, 0])
        keep = Mat.identity(QQ, 4)
        return make_partial_action(cyclic(2), m2, [m2.unit, e],
                                   [keep, keep])
    variants.append(("non-central idempotent", non_central,
                     NotCentralIdempotent))

    def identity_map_wrong():
        algebra = product_of_fields(QQ, 2)
        swap = qmat([[0, 1], [1, 0]])
        return make_partial_action(
            cyclic(2), algebra,
            [qvec([1, 1]), qvec([1, 1])],
            [swap, swap])
    variants.append(("identity component broken", identity_map_wrong,
                     AxiomIFails))

    def full_marker_with_projection():
        algebra = product_of_fields(QQ, 2)
        proj = qmat([[1, 0], [0, 0]])
        return make_partial_action(
            cyclic(2), algebra,
            [qvec([1, 1]), qvec([1, 1])],
            [Mat.identity(QQ, 2), proj])
    variants.append(("projection claimed bijective", full_marker_with_projection,
                     NotIsoOnIdeal))

    def intersection_mismatch():
        # markers (1,1,0) and (0,1,1) with maps that are fine ideal-wise but
        # send the overlap of the source ideals to the wrong intersection
        algebra = product_of_fields(QQ, 3)
        beta_g = qmat([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
        beta_g2 = qmat([[0, 0, 0], [1, 0, 0], [0, 1, 0]])
        return make_partial_action(
            cyclic(3), algebra,
            [qvec([1, 1, 1]), qvec([1, 1, 0]), qvec([0, 1, 1])],
            [Mat.identity(QQ, 3), beta_g, beta_g2])
    variants.append(("overlap image mismatch", intersection_mismatch,
                     AxiomIIFails))

    def composition_mismatch():
        # both non-identity maps rotate the first three split coordinates,
        # so the double map disagrees with the direct one
        algebra = product_of_fields(QQ, 4)
        cycle = qmat([[0, 0, 1, 0], [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 0]])
        marker = qvec([1, 1, 1, 0])
        return make_partial_action(
            cyclic(3), algebra,
            [qvec([1, 1, 1, 1]), marker, marker],
            [Mat.identity(QQ, 4), cycle, cycle])
    variants.append(("double map disagrees", composition_mismatch,
                     AxiomIIIFails))

    return variants
