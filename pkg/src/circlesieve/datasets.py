"""Builtin weight datasets.

Small named datasets used throughout the tests and exposed by the CLI:
genuine-action fixtures (the 2-sphere rotations, the linear action on the
complex projective plane, the two-fixed-point family on the 6-sphere), a
2-point dataset that violates the vanishing condition, and a 3-point,
dimension-4 dataset that passes every localization condition yet fails
the pairing condition.
"""

from __future__ import annotations

from .core import FixedPointData


def remark() -> FixedPointData:
    """Three points in complex dimension 4, all with weight sum 14.

    Passes vanishing and integrality (top table: 3 for the single-part
    monomial, 0 elsewhere) and the equal-sum condition, but its global
    weight multiset is not negation-symmetric, so pairing is infeasible.
    """
    return FixedPointData(4, ((-7, -1, 10, 12), (-8, 3, 5, 14), (-8, 3, 5, 14)))


def s6(a: int, b: int) -> FixedPointData:
    """The two-fixed-point family {a, b, -a-b} / {-a, -b, a+b} on the 6-sphere."""
    if a < 1 or b < 1:
        raise ValueError(f"s6 parameters must be positive integers, got a={a}, b={b}")
    return FixedPointData(3, ((a, b, -a - b), (-a, -b, a + b)))


def cp2() -> FixedPointData:
    """The standard linear circle action on the complex projective plane.

    Exponents (0, 1, 2) give three fixed points with weights (1,2), (-1,1),
    (-2,-1); its Chern numbers are 9 for (1,1) and 3 for (2).
    """
    return FixedPointData(2, ((1, 2), (-1, 1), (-2, -1)))


def sphere2(a: int) -> FixedPointData:
    """Speed-a rotation of the 2-sphere: one weight a and one weight -a."""
    if a < 1:
        raise ValueError(f"sphere2 parameter must be a positive integer, got {a}")
    return FixedPointData(1, ((a,), (-a,)))


def t1_contradiction() -> FixedPointData:
    """Two points with weights (2,-1) and (-2,1); the degree-0 sum is -1, not 0."""
    return FixedPointData(2, ((2, -1), (-2, 1)))


# name -> (factory, parameter names); parameters are positive integers
BUILTINS = {
    "remark": (remark, ()),
    "s6": (s6, ("a", "b")),
    "cp2": (cp2, ()),
    "sphere2": (sphere2, ("a",)),
    "t1-contradiction": (t1_contradiction, ()),
}


def builtin(name: str, params: tuple[int, ...] = ()) -> FixedPointData:
    """Instantiate a builtin dataset by name; unknown names or bad params raise."""
    if name not in BUILTINS:
        raise KeyError(f"unknown builtin dataset {name!r}; choose from {sorted(BUILTINS)}")
    factory, param_names = BUILTINS[name]
    if len(params) != len(param_names):
        raise ValueError(
            f"builtin {name!r} takes {len(param_names)} parameter(s) "
            f"{param_names}, got {len(params)}"
        )
    return factory(*params)
