"""Built-in example models: group algebras and function algebras with the
classical crossed decorations, expressed as exact structure constants."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exact import FieldSpec, ObjectSpace, SchemaError
from .model import HopfDatumModel


class NotAGroup(Exception):
    pass


class ZeroCocycleValue(Exception):
    pass


class BadCharacteristic(Exception):
    pass


@dataclass(frozen=True)
class GroupPresentation:
    """A finite group as a multiplication table over element indices."""

    order: int
    mult_table: tuple[tuple[int, ...], ...]
    identity_index: int = 0

    def __post_init__(self):
        n = self.order
        if len(self.mult_table) != n or any(len(row) != n for row in self.mult_table):
            raise NotAGroup(f"table is not {n}x{n}")
        if any(not 0 <= x < n for row in self.mult_table for x in row):
            raise NotAGroup("table entry out of range")
        e = self.identity_index
        if any(self.mult_table[e][i] != i or self.mult_table[i][e] != i for i in range(n)):
            raise NotAGroup(f"index {e} is not an identity")
        for i in range(n):
            if all(self.mult_table[i][j] != e for j in range(n)):
                raise NotAGroup(f"element {i} has no inverse")
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if (self.mult_table[self.mult_table[a][b]][c]
                            != self.mult_table[a][self.mult_table[b][c]]):
                        raise NotAGroup(f"not associative at ({a},{b},{c})")

    def mul(self, a: int, b: int) -> int:
        return self.mult_table[a][b]


def cyclic_group(n: int) -> GroupPresentation:
    return GroupPresentation(
        n, tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    )


def klein_four_group() -> GroupPresentation:
    # elements e, a, b, ab with xor composition
    return GroupPresentation(
        4, tuple(tuple(i ^ j for j in range(4)) for i in range(4))
    )


# -- matrix builders ---------------------------------------------------------

def _obj(rows, cols, entries) -> np.ndarray:
    m = np.zeros((rows, cols), dtype=object)
    for (r, c), v in entries.items():
        m[r, c] = v
    return m


def group_algebra(g: GroupPresentation) -> dict[str, np.ndarray]:
    """(mul, unit, comul, counit) of the group algebra, group-like basis."""
    n = g.order
    return {
        "mul": _obj(n, n * n, {(g.mul(a, b), a * n + b): 1
                               for a in range(n) for b in range(n)}),
        "unit": _obj(n, 1, {(g.identity_index, 0): 1}),
        "comul": _obj(n * n, n, {(a * n + a, a): 1 for a in range(n)}),
        "counit": _obj(1, n, {(0, a): 1 for a in range(n)}),
    }


def function_algebra(g: GroupPresentation) -> dict[str, np.ndarray]:
    """(mul, unit, comul, counit) of the dual function algebra, delta basis."""
    n = g.order
    return {
        "mul": _obj(n, n * n, {(a, a * n + a): 1 for a in range(n)}),
        "unit": _obj(n, 1, {(a, 0): 1 for a in range(n)}),
        "comul": _obj(n * n, n, {(a * n + b, g.mul(a, b)): 1
                                 for a in range(n) for b in range(n)}),
        "counit": _obj(1, n, {(0, g.identity_index): 1}),
    }


def flip(dim_left: int, dim_right: int) -> np.ndarray:
    return _obj(
        dim_left * dim_right,
        dim_left * dim_right,
        {(y * dim_left + x, x * dim_right + y): 1
         for x in range(dim_left) for y in range(dim_right)},
    )


def _trivial_decorations(dimB: int, dimF: int, unitB, counitB, unitF, counitF):
    eyeB = np.asarray(np.eye(dimB, dtype=np.int64), dtype=object)
    eyeF = np.asarray(np.eye(dimF, dtype=np.int64), dtype=object)
    return {
        "left_action": np.kron(counitB, eyeF),
        "right_action": np.kron(eyeB, counitF),
        "sigma": unitB @ np.kron(counitF, counitF),
        "right_coaction": np.kron(eyeB, unitF),
        "left_coaction": np.kron(unitB, eyeF),
        "rho_prime": np.kron(unitB, unitB) @ counitF,
        "tau_BF": flip(dimB, dimF),
        "tau_FB": flip(dimF, dimB),
        "tau_BB": flip(dimB, dimB),
        "tau_FF": flip(dimF, dimF),
    }


def _assemble(field, B_space, F_space, B_struct, F_struct, overrides=None,
              dimension_cap=None) -> HopfDatumModel:
    gens = {
        "mul_B": B_struct["mul"], "unit_B": B_struct["unit"],
        "comul_B": B_struct["comul"], "counit_B": B_struct["counit"],
        "mul_F": F_struct["mul"], "unit_F": F_struct["unit"],
        "comul_F": F_struct["comul"], "counit_F": F_struct["counit"],
    }
    gens.update(_trivial_decorations(
        B_space.dim, F_space.dim,
        B_struct["unit"], B_struct["counit"],
        F_struct["unit"], F_struct["counit"],
    ))
    if overrides:
        gens.update(overrides)
    kwargs = {} if dimension_cap is None else {"dimension_cap": dimension_cap}
    return HopfDatumModel(field, B_space, F_space, gens, **kwargs)


# -- the example models ------------------------------------------------------

def trivial(field: FieldSpec) -> HopfDatumModel:
    """B = F = the order-2 group algebra, every decoration trivial."""
    c2 = cyclic_group(2)
    ga = group_algebra(c2)
    B = ObjectSpace("B", 2, ("1", "g"))
    F = ObjectSpace("F", 2, ("1", "t"))
    return _assemble(field, B, F, ga, ga)


def trivial_c2xc2(field: FieldSpec) -> HopfDatumModel:
    """B = F = the Klein four-group algebra (dim 4), every decoration trivial."""
    v4 = klein_four_group()
    ga = group_algebra(v4)
    B = ObjectSpace("B", 4, ("1", "a", "b", "ab"))
    F = ObjectSpace("F", 4, ("1", "u", "v", "uv"))
    return _assemble(field, B, F, ga, ga)


def twisted_group_algebra(group: GroupPresentation, cocycle,
                          field: FieldSpec) -> HopfDatumModel:
    """B = the base field as a one-dimensional object, F = the group algebra,
    sigma given by the cocycle table (indexed [g][h])."""
    n = group.order
    vals = [[field.of_fraction(*v) if isinstance(v, tuple) else field.of_int(int(v))
             for v in row] for row in cocycle]
    if len(vals) != n or any(len(row) != n for row in vals):
        raise SchemaError(f"cocycle table is not {n}x{n}")
    for a in range(n):
        for b in range(n):
            if vals[a][b] == field.zero():
                raise ZeroCocycleValue(f"cocycle value at ({a},{b}) is zero")
    one = GroupPresentation(1, ((0,),))
    B_struct = group_algebra(one)
    F_struct = group_algebra(group)
    B = ObjectSpace("B", 1, ("1",))
    F = ObjectSpace("F", n, tuple(f"u{i}" for i in range(n)))
    sigma = _obj(1, n * n, {(0, a * n + b): vals[a][b]
                            for a in range(n) for b in range(n)})
    return _assemble(field, B, F, B_struct, F_struct, {"sigma": sigma})


def quaternion_cocycle() -> list[list[int]]:
    """The +-1 cocycle on the Klein four-group whose twisted group algebra is
    the quaternion algebra (u_a, u_b, u_ab acting as i, j, k)."""
    e, a, b, ab = 0, 1, 2, 3
    table = [[1] * 4 for _ in range(4)]
    table[a][a] = table[b][b] = table[ab][ab] = -1
    table[a][b] = 1
    table[b][a] = -1
    table[a][ab] = -1
    table[ab][a] = 1
    table[b][ab] = 1
    table[ab][b] = -1
    return table


def smash_product_s3(field: FieldSpec) -> HopfDatumModel:
    """B = the order-2 group algebra acting on F = the order-3 group algebra
    by inversion; the composite FB is the symmetric-group algebra on 3 letters."""
    if field.kind == FieldSpec.PRIME and field.p in (2, 3):
        raise BadCharacteristic(
            f"characteristic {field.p} divides the group order 6"
        )
    c2, c3 = cyclic_group(2), cyclic_group(3)
    B_struct, F_struct = group_algebra(c2), group_algebra(c3)
    B = ObjectSpace("B", 2, ("1", "s"))
    F = ObjectSpace("F", 3, ("1", "t", "t2"))
    # s acts by t^i -> t^{-i}
    act = _obj(3, 6, {})
    for i in range(3):
        act[i, 0 * 3 + i] = 1
        act[(-i) % 3, 1 * 3 + i] = 1
    return _assemble(field, B, F, B_struct, F_struct, {"left_action": act})


def radford_h4(field: FieldSpec) -> HopfDatumModel:
    """B = the order-2 group algebra, F = k[x]/(x^2) with primitive x, the
    sign action and the group-like left coaction; the composite FB is the
    4-dimensional Taft algebra."""
    if field.kind == FieldSpec.PRIME and field.p == 2:
        raise BadCharacteristic("the sign action degenerates in characteristic 2")
    c2 = cyclic_group(2)
    B_struct = group_algebra(c2)
    B = ObjectSpace("B", 2, ("1", "g"))
    F = ObjectSpace("F", 2, ("1", "x"))
    F_struct = {
        # 1*1=1, 1*x=x*1=x, x*x=0
        "mul": _obj(2, 4, {(0, 0): 1, (1, 1): 1, (1, 2): 1}),
        "unit": _obj(2, 1, {(0, 0): 1}),
        # Delta(1)=1x1, Delta(x)=x x 1 + 1 x x
        "comul": _obj(4, 2, {(0, 0): 1, (2, 1): 1, (1, 1): 1}),
        "counit": _obj(1, 2, {(0, 0): 1}),
    }
    minus_one = field.of_int(-1)
    # g |> x = -x
    act = _obj(2, 4, {(0, 0): 1, (1, 1): 1, (0, 2): 1})
    act[1, 3] = minus_one
    # 1 -> 1 x 1, x -> g x x  (rows enumerate B x F pairs)
    lco = _obj(4, 2, {(0, 0): 1, (3, 1): 1})
    return _assemble(
        field, B, F, B_struct, F_struct,
        {"left_action": act, "left_coaction": lco},
    )


def bicrossproduct_s3(field: FieldSpec) -> HopfDatumModel:
    """B = functions on the order-3 group, F = the order-2 group algebra, with
    the right coaction of F on B given by the grading of B into eigenspaces of
    the inversion symmetry; the composite FB is the 6-dimensional dual smash."""
    if field.kind == FieldSpec.PRIME and field.p in (2, 3):
        raise BadCharacteristic(
            f"characteristic {field.p} divides the group order 6"
        )
    c2, c3 = cyclic_group(2), cyclic_group(3)
    B_struct = function_algebra(c3)
    F_struct = group_algebra(c2)
    B = ObjectSpace("B", 3, ("d0", "d1", "d2"))
    F = ObjectSpace("F", 2, ("1", "s"))
    half = field.of_fraction(1, 2)
    minus_half = field.of_fraction(-1, 2)
    # d0 -> d0 x 1; d1, d2 split into even/odd parts of the inversion symmetry
    rco = _obj(6, 3, {(0, 0): 1})
    rco[2, 1] = half      # d1 x 1 component of d1
    rco[4, 1] = half      # d2 x 1
    rco[3, 1] = half      # d1 x s
    rco[5, 1] = minus_half  # d2 x s
    rco[2, 2] = half
    rco[4, 2] = half
    rco[3, 2] = minus_half
    rco[5, 2] = half
    return _assemble(field, B, F, B_struct, F_struct, {"right_coaction": rco})


EXAMPLES = {
    "trivial": trivial,
    "trivial-c2xc2": trivial_c2xc2,
    "twisted-group-algebra-q8": lambda field: twisted_group_algebra(
        klein_four_group(), quaternion_cocycle(), field
    ),
    "smash-product-s3": smash_product_s3,
    "radford-h4": radford_h4,
    "bicrossproduct-s3": bicrossproduct_s3,
}


def example(name: str, field: FieldSpec) -> HopfDatumModel:
    if name not in EXAMPLES:
        raise KeyError(f"unknown example {name!r}; have {sorted(EXAMPLES)}")
    return EXAMPLES[name](field)
