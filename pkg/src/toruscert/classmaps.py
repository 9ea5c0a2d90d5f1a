"""Slope maps of typed compatibility classes.

A compatibility class of surfaces meeting both boundary tori determines a
determinant-one rational matrix carrying each member's slope on the second
torus to its slope on the first.  Two constructions are provided: from the
boundary classes of two surfaces with distinct slopes (the matrix is forced),
and from a single slope pair (a canonical choice among the many possible
maps).  Classes enumerated by external normal-surface software can be loaded
as raw matrices with provenance "external".
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    BoundaryCountError,
    DegenerateClassError,
    InvalidInputError,
)
from .matrices import PrimitiveClass, UnimodularQ, compose
from .normal import curve_types, from_slope
from .serialize import matrix_from_json, matrix_to_json

__all__ = [
    "SurfaceBoundaryData",
    "ClassMap",
    "ThirdSurfaceCheck",
    "build_from_two_surfaces",
    "build_from_single_slope",
    "verify_third_surface",
    "class_count_bound",
    "classmap_to_json",
    "classmap_from_json",
]

PROVENANCES = ("single-slope", "two-surface", "external")


@dataclass(frozen=True)
class SurfaceBoundaryData:
    """Boundary classes of one surface on the two tori."""

    on_t1: PrimitiveClass
    on_t2: PrimitiveClass


@dataclass(frozen=True)
class ClassMap:
    """A slope map with provenance metadata.

    type_pair records the shared boundary-curve type on each torus when it
    is determined by the construction data (None when unknown, e.g. for
    some external matrices).  basis retains the defining boundary vectors
    of a two-surface construction so third surfaces can be checked later.
    """

    phi: UnimodularQ
    type_pair: tuple | None
    complexity_bound: int
    provenance: str
    basis: tuple | None = None  # (r1, s1, r2, s2) integer vectors

    def __post_init__(self):
        if self.provenance not in PROVENANCES:
            raise InvalidInputError(f"unknown provenance {self.provenance!r}")
        if self.complexity_bound < 0:
            raise InvalidInputError("complexity bound must be a natural number")
        if self.type_pair is not None:
            t1, t2 = self.type_pair
            if t1 not in (1, 2, 3) or t2 not in (1, 2, 3):
                raise InvalidInputError(f"bad type pair {self.type_pair!r}")

    @classmethod
    def external(cls, phi, type_pair=None, complexity_bound=0):
        return cls(phi, type_pair, complexity_bound, "external")

    @classmethod
    def identity(cls):
        return cls.external(UnimodularQ(1, 0, 0, 1))


def _as_vector(v):
    if isinstance(v, PrimitiveClass):
        return v.vector()
    x, y = v
    out = []
    for entry in (x, y):
        if isinstance(entry, bool):
            raise InvalidInputError("boundary vectors must be integer pairs")
        if isinstance(entry, Fraction) and entry.denominator == 1:
            entry = int(entry)
        if not isinstance(entry, int):
            raise InvalidInputError("boundary vectors must be integer pairs")
        out.append(entry)
    return tuple(out)


def _det(u, v):
    return u[0] * v[1] - u[1] * v[0]


def _shared_type(s, t):
    """Least common curve type of two slopes on one torus, None if disjoint."""
    common = curve_types(from_slope(s)) & curve_types(from_slope(t))
    return min(common) if common else None


def build_from_two_surfaces(r1, s1, r2, s2, complexity_bound=0):
    """Class map forced by two member surfaces with distinct slopes.

    The inputs are the integer boundary classes (possibly non-primitive:
    several parallel components) of surfaces R and S on the tori, columns
    of the matrices Psi_1 = (r1 s1) and Psi_2 = (r2 s2).  The counting
    lemma for compatible surfaces forces det(Psi_1) = det(Psi_2); the map
    is then Psi_1 Psi_2^(-1), which has determinant one and carries r2 to
    r1 and s2 to s1.
    """
    r1, s1, r2, s2 = (_as_vector(v) for v in (r1, s1, r2, s2))
    det2 = _det(r2, s2)
    if det2 == 0:
        raise DegenerateClassError(
            "r2 and s2 are dependent; use build_from_single_slope"
        )
    det1 = _det(r1, s1)
    if det1 != det2:
        raise BoundaryCountError(
            f"det(r1 s1) = {det1} differs from det(r2 s2) = {det2}; "
            "boundary data violates the intersection-count constraint"
        )
    # Psi_1 * adj(Psi_2) / det(Psi_2), written out.
    d = Fraction(det2)
    phi = UnimodularQ(
        (r1[0] * s2[1] - s1[0] * r2[1]) / d,
        (-r1[0] * s2[0] + s1[0] * r2[0]) / d,
        (r1[1] * s2[1] - s1[1] * r2[1]) / d,
        (-r1[1] * s2[0] + s1[1] * r2[0]) / d,
    )
    type1 = _shared_type(
        PrimitiveClass.from_vector(*r1).slope(),
        PrimitiveClass.from_vector(*s1).slope(),
    )
    type2 = _shared_type(
        PrimitiveClass.from_vector(*r2).slope(),
        PrimitiveClass.from_vector(*s2).slope(),
    )
    type_pair = (type1, type2) if type1 is not None and type2 is not None else None
    return ClassMap(
        phi,
        type_pair,
        complexity_bound,
        "two-surface",
        basis=(r1, s1, r2, s2),
    )


def _complete_to_basis(s):
    """Canonical integer matrix with first column the primitive vector of s.

    Solves p v - q u = 1 with 0 <= u < |p| when p != 0; for the slope 0/1
    the analogous normalization 0 <= v < q gives u = -1, v = 0.
    """
    p, q = s.p, s.q
    # Extended Euclid on (p, q).
    old_r, r = p, q
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        quot = old_r // r
        old_r, r = r, old_r - quot * r
        old_x, x = x, old_x - quot * x
        old_y, y = y, old_y - quot * y
    if old_r < 0:
        old_x, old_y = -old_x, -old_y
    # p*old_x + q*old_y = 1, so (u, v) = (-old_y, old_x) solves p v - q u = 1.
    u0, v0 = -old_y, old_x
    if p != 0:
        u = u0 % abs(p)
        t = (u - u0) // p
        v = v0 + t * q
    else:
        u, v = -1, 0
    return ((p, u), (q, v))


def build_from_single_slope(tau1, tau2, complexity_bound=0):
    """Canonical determinant-one map sending the slope tau2 to tau1.

    Completes each slope's primitive vector to a unimodular basis by
    extended Euclid with the minimal complement, and composes.  Any other
    valid choice differs by a parabolic fixing tau1; this one is fixed so
    certificates are reproducible.
    """
    b1 = _complete_to_basis(tau1)
    b2 = _complete_to_basis(tau2)
    m1 = UnimodularQ(b1[0][0], b1[0][1], b1[1][0], b1[1][1])
    m2 = UnimodularQ(b2[0][0], b2[0][1], b2[1][0], b2[1][1])
    phi = compose(m1, m2.invert())
    type1 = min(curve_types(from_slope(tau1)))
    type2 = min(curve_types(from_slope(tau2)))
    return ClassMap(phi, (type1, type2), complexity_bound, "single-slope")


@dataclass(frozen=True)
class ThirdSurfaceCheck:
    """Outcome of checking a third surface's boundary data against a map.

    Truthy exactly when the map carries q2 to q1.  The two determinant
    identities det(phi q2, r1) = det(q1, r1) and det(phi q2, s1) =
    det(q1, s1) are reported individually; together they are equivalent to
    the mapping statement because r1, s1 are independent.
    """

    mapped: bool
    det_identity_r: bool
    det_identity_s: bool

    def __bool__(self):
        return self.mapped


def verify_third_surface(cm, q1, q2):
    """Check that cm maps the boundary class q2 to q1.

    Requires a ClassMap built from two surfaces (its defining vectors are
    retained for the determinant identities).
    """
    if cm.basis is None:
        raise InvalidInputError(
            "third-surface checks need a two-surface class map with retained basis"
        )
    q1 = _as_vector(q1)
    q2 = _as_vector(q2)
    r1, s1 = cm.basis[0], cm.basis[1]
    image = (
        cm.phi.a * q2[0] + cm.phi.b * q2[1],
        cm.phi.c * q2[0] + cm.phi.d * q2[1],
    )
    return ThirdSurfaceCheck(
        mapped=(image[0] == q1[0] and image[1] == q1[1]),
        det_identity_r=(_det(image, r1) == _det(q1, r1)),
        det_identity_s=(_det(image, s1) == _det(q1, s1)),
    )


def class_count_bound(t):
    """Upper bound 9 * 3^t on typed compatibility classes of complexity zero.

    t is the number of tetrahedra; t = 0 is accepted as a degenerate
    formula value even though a triangulation has at least one.
    """
    if isinstance(t, bool) or not isinstance(t, int) or t < 0:
        raise InvalidInputError(f"tetrahedron count must be a natural, got {t!r}")
    return 9 * 3**t


def classmap_to_json(cm):
    record = {
        "phi": matrix_to_json(cm.phi),
        "type_pair": list(cm.type_pair) if cm.type_pair is not None else None,
        "complexity_bound": cm.complexity_bound,
        "provenance": cm.provenance,
    }
    if cm.basis is not None:
        record["basis"] = {
            "r1": list(cm.basis[0]),
            "s1": list(cm.basis[1]),
            "r2": list(cm.basis[2]),
            "s2": list(cm.basis[3]),
        }
    return record


def classmap_from_json(record):
    if not isinstance(record, dict) or "phi" not in record:
        raise InvalidInputError(f"class map record must have a 'phi' key: {record!r}")
    phi = matrix_from_json(record["phi"])
    type_pair = record.get("type_pair")
    if type_pair is not None:
        if not isinstance(type_pair, list) or len(type_pair) != 2:
            raise InvalidInputError(f"bad type_pair {type_pair!r}")
        type_pair = (type_pair[0], type_pair[1])
    basis = None
    if "basis" in record:
        raw = record["basis"]
        try:
            basis = tuple(
                (int(raw[k][0]), int(raw[k][1])) for k in ("r1", "s1", "r2", "s2")
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInputError(f"bad basis block {raw!r}") from exc
    return ClassMap(
        phi,
        type_pair,
        record.get("complexity_bound", 0),
        record.get("provenance", "external"),
        basis=basis,
    )
