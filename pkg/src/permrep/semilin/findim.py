"""Triviality of finite-dimensional cocycles given in two-block form Phi(X, Y).

Phi satisfies Phi(X, Z) = Phi(X, Y) Phi(Y, Z); specializing the middle block
at a regular integer point Y0 gives Phi(X, Z) = C(X) C(Z)^-1 with
C(X) = Phi(X, Y0).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .. import linalg
from ..exact import PoleError, RationalFunctionField
from ..linalg import Matrix


class FindimError(ValueError):
    pass


def block_names(r: int):
    if r == 1:
        return ["X"], ["Y"], ["Z"]
    return ([f"{c}{i}" for i in range(1, r + 1)] for c in "XYZ")


def block_field(r: int, base=None) -> RationalFunctionField:
    """The field k(X, Y) in which Phi is written."""
    X, Y, _ = block_names(r)
    return RationalFunctionField(X + Y) if base is None else RationalFunctionField(X + Y, base)


def _rename(Phi: Matrix, target: RationalFunctionField, first, second) -> Matrix:
    images = [target.convert(v) for v in list(first) + list(second)]
    return Phi.map(lambda f: f.compose(images, target), target)


def _coordinate_order(c: int):
    return (abs(c), c < 0)


def regular_points(r: int, max_box: int = 64):
    """Integer points by shells |Y0|_inf = 0, 1, 2, ...; inside a shell 0, 1, -1, 2, -2, ... per coordinate."""
    for k in range(max_box + 1):
        coords = sorted(range(-k, k + 1), key=_coordinate_order)
        for pt in product(coords, repeat=r):
            if max(map(abs, pt), default=0) == k:
                yield pt


@dataclass
class FindimResult:
    matrix: Matrix  # C(X), written in k(X, Y) but free of Y
    point: tuple
    tried: int
    verified: bool


def trivialize_findim(Phi: Matrix, r: int, max_box: int = 64) -> FindimResult:
    field = Phi.field
    X, Y, Z = block_names(r)
    if list(field.names) != X + Y:
        raise FindimError(f"Phi must be written in variables {', '.join(X + Y)}")
    d = Phi.nrows
    if Phi.ncols != d:
        raise FindimError("Phi must be square")
    big = RationalFunctionField(X + Y + Z, field.base)
    gx = [big.var(v) for v in X]
    gy = [big.var(v) for v in Y]
    gz = [big.var(v) for v in Z]
    xy = _rename(Phi, big, gx, gy)
    yz = _rename(Phi, big, gy, gz)
    xz = _rename(Phi, big, gx, gz)
    yx = _rename(Phi, big, gy, gx)
    if xz != xy @ yz:
        raise FindimError("Phi(X,Z) != Phi(X,Y) Phi(Y,Z)")
    if yx @ xy != Matrix.identity(d, big):
        raise FindimError("Phi(Y,X) != Phi(X,Y)^-1")

    xs = [field.var(v) for v in X]
    for tried, pt in enumerate(regular_points(r, max_box), start=1):
        y0 = [field.convert(c) for c in pt]
        try:
            C = _rename(Phi, field, xs, y0)
            # regularity of Phi(Y0, Z) as well
            _rename(Phi, field, y0, xs)
        except PoleError:
            continue
        if linalg.rank(C) < d:
            continue
        Cx = _rename(C, big, gx, gy)
        Cz = _rename(C, big, gz, gy)
        verified = xz == Cx @ linalg.inverse(Cz)
        return FindimResult(C, pt, tried, verified)
    raise FindimError(f"no regular point with coordinates in [-{max_box}, {max_box}]")


def examples(r: int = 1) -> dict:
    """Identity, the e1 ratio and the unipotent example, as Phi(X, Y) over QQ."""
    field = block_field(r)
    X, Y, _ = block_names(r)
    e1x = field.var(X[0])
    e1y = field.var(Y[0])
    one, zero = field.one, field.zero
    return {
        "identity": Matrix.identity(2, field),
        "e1-ratio": Matrix([[e1x / e1y]], field),
        "unipotent": Matrix([[one, e1x - e1y], [zero, one]], field),
    }
