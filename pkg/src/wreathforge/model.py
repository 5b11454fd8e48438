"""The Hopf-datum model: all primitive structure 2-cells as exact linear maps,
base validation, triviality detection, and derived 2-cells obtained by
evaluating their defining catalog diagrams."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

import numpy as np

from . import diagram as dg
from .exact import (
    FieldSpec,
    LinearMap,
    ObjectSpace,
    SchemaError,
    UnknownGenerator,
    compose,
    equal,
    juxtapose,
)


class IndexOutOfRange(Exception):
    pass


DEFAULT_DIMENSION_CAP = 1 << 20

# name -> (dom word, cod word) over the wire labels B, F
PRIMITIVE_SIGNATURES: dict[str, tuple[tuple[str, ...], tuple[str, ...]]] = {
    "mul_B": (("B", "B"), ("B",)),
    "unit_B": ((), ("B",)),
    "comul_B": (("B",), ("B", "B")),
    "counit_B": (("B",), ()),
    "mul_F": (("F", "F"), ("F",)),
    "unit_F": ((), ("F",)),
    "comul_F": (("F",), ("F", "F")),
    "counit_F": (("F",), ()),
    "left_action": (("B", "F"), ("F",)),
    "right_action": (("B", "F"), ("B",)),
    "right_coaction": (("B",), ("B", "F")),
    "left_coaction": (("F",), ("B", "F")),
    "sigma": (("F", "F"), ("B",)),
    "rho_prime": (("F",), ("B", "B")),
    "tau_BF": (("B", "F"), ("F", "B")),
    "tau_FB": (("F", "B"), ("B", "F")),
    "tau_BB": (("B", "B"), ("B", "B")),
    "tau_FF": (("F", "F"), ("F", "F")),
}

DERIVED_SIGNATURES: dict[str, tuple[tuple[str, ...], tuple[str, ...]]] = {
    "psi": (("B", "F"), ("F", "B")),
    "phi_prime": (("F", "B"), ("B", "F")),
    "mu_M": (("F", "F"), ("F", "B")),
    "eta_M": ((), ("F", "B")),
    "delta_C_prime": (("F", "B"), ("B", "B")),
    "epsilon_C_prime": (("F", "B"), ()),
    "lambda_B": (("B", "B"), ("B", "B")),
    "lambda_F": (("F", "F"), ("F", "F")),
    "lambda_rad": (("F", "F"), ("F", "F")),
    "lambda_left_B": (("B", "B"), ("B", "B")),
    "lambda_right_B": (("B", "B"), ("B", "B")),
}


@dataclass(frozen=True)
class DerivedGenerators:
    psi: LinearMap
    phi_prime: LinearMap
    mu_M: LinearMap
    eta_M: LinearMap
    delta_C_prime: LinearMap
    epsilon_C_prime: LinearMap
    lambda_B: LinearMap
    lambda_F: LinearMap
    lambda_rad: LinearMap
    lambda_left_B: LinearMap
    lambda_right_B: LinearMap


class HopfDatumModel:
    """Immutable bundle of a field, the two objects B and F, and the eighteen
    primitive generator matrices. Derived generators are cached lazily."""

    def __init__(
        self,
        field: FieldSpec,
        B: ObjectSpace,
        F: ObjectSpace,
        generators: dict[str, np.ndarray],
        dimension_cap: int = DEFAULT_DIMENSION_CAP,
    ):
        self.field = field
        self.B = B
        self.F = F
        self.dimension_cap = dimension_cap
        missing = sorted(set(PRIMITIVE_SIGNATURES) - set(generators))
        if missing:
            raise SchemaError(f"missing primitive generators: {missing}")
        extra = sorted(set(generators) - set(PRIMITIVE_SIGNATURES))
        if extra:
            raise SchemaError(f"unknown generators: {extra}")
        dims = {"B": B.dim, "F": F.dim}
        self._matrices: dict[str, np.ndarray] = {}
        for name, (dom, cod) in PRIMITIVE_SIGNATURES.items():
            mat = field.normalize(generators[name])
            shape = (_word_dim(cod, dims), _word_dim(dom, dims))
            if mat.shape != shape:
                raise SchemaError(
                    f"generator {name!r}: matrix shape {mat.shape}, expected {shape}"
                )
            self._matrices[name] = mat
        self._derived_matrices: dict[str, np.ndarray] | None = None
        self._mirror_cache: dict[str, np.ndarray] | None = None

    # -- basic accessors -----------------------------------------------
    @property
    def spaces(self) -> dict[str, ObjectSpace]:
        return {"B": self.B, "F": self.F}

    def space_word(self, labels: tuple[str, ...]) -> tuple[ObjectSpace, ...]:
        return tuple(self.spaces[x] for x in labels)

    def linear_map(self, name: str) -> LinearMap:
        table = self.generator_matrices()
        if name not in table:
            raise UnknownGenerator(name)
        sig = {**PRIMITIVE_SIGNATURES, **DERIVED_SIGNATURES}[name]
        return LinearMap(
            self.field, self.space_word(sig[0]), self.space_word(sig[1]), table[name]
        )

    # -- derived generators --------------------------------------------
    def generator_matrices(self) -> dict[str, np.ndarray]:
        if self._derived_matrices is None:
            self._derived_matrices = self._compute_derived()
        return {**self._matrices, **self._derived_matrices}

    def _compute_derived(self) -> dict[str, np.ndarray]:
        from .catalog import DERIVED_DEFINITIONS

        signatures = dict(PRIMITIVE_SIGNATURES)
        matrices = dict(self._matrices)
        ctx = dg.EvalContext(
            self.field, self.spaces, signatures, matrices, self.dimension_cap
        )
        out: dict[str, np.ndarray] = {}
        for name, d in DERIVED_DEFINITIONS.items():
            lm = dg.evaluate(d, ctx)
            expected = DERIVED_SIGNATURES[name]
            if (lm.dom_names, lm.cod_names) != expected:
                raise SchemaError(
                    f"derived generator {name!r} evaluated to boundary "
                    f"{(lm.dom_names, lm.cod_names)}, expected {expected}"
                )
            out[name] = lm.entries
            signatures[name] = expected
            matrices[name] = lm.entries
        return out

    def derive(self) -> DerivedGenerators:
        return DerivedGenerators(
            **{name: self.linear_map(name) for name in DERIVED_SIGNATURES}
        )

    # -- evaluation contexts -------------------------------------------
    def eval_context(self, dimension_cap: int | None = None) -> dg.EvalContext:
        table = self.generator_matrices()
        signatures = {**PRIMITIVE_SIGNATURES, **DERIVED_SIGNATURES}
        return dg.EvalContext(
            self.field,
            self.spaces,
            dict(signatures),
            dict(table),
            dimension_cap if dimension_cap is not None else self.dimension_cap,
        )

    def mirror_context(self, dimension_cap: int | None = None) -> dg.EvalContext:
        """Context that additionally knows the mirror partner g~ of every
        generator g (reversed words, matrix conjugated by reversal perms)."""
        ctx = self.eval_context(dimension_cap)
        if self._mirror_cache is None:
            cache: dict[str, np.ndarray] = {}
            dims = {"B": self.B.dim, "F": self.F.dim}
            all_sigs = {**PRIMITIVE_SIGNATURES, **DERIVED_SIGNATURES}
            for name, (dom, cod) in all_sigs.items():
                dom_dims = tuple(dims[x] for x in dom)
                cod_dims = tuple(dims[x] for x in cod)
                cache[name + dg.MIRROR_SUFFIX] = dg.mirrored_matrix(
                    self.generator_matrices()[name], dom_dims, cod_dims
                )
            self._mirror_cache = cache
        all_sigs = {**PRIMITIVE_SIGNATURES, **DERIVED_SIGNATURES}
        for name, (dom, cod) in all_sigs.items():
            ctx.signatures[name + dg.MIRROR_SUFFIX] = (
                tuple(reversed(dom)),
                tuple(reversed(cod)),
            )
            ctx.matrices[name + dg.MIRROR_SUFFIX] = self._mirror_cache[
                name + dg.MIRROR_SUFFIX
            ]
        return ctx

    # -- validation and classification ---------------------------------
    def validate_base(self):
        from .catalog import run_suite

        return run_suite("base", self)

    def trivial_forms(self) -> dict[str, LinearMap]:
        """The explicit trivial shape of each decoration 2-cell."""
        idB = _identity(self, ("B",))
        idF = _identity(self, ("F",))
        uB, uF = self.linear_map("unit_B"), self.linear_map("unit_F")
        eB, eF = self.linear_map("counit_B"), self.linear_map("counit_F")
        return {
            "left_action": juxtapose(eB, idF),
            "right_action": juxtapose(idB, eF),
            "sigma": compose(juxtapose(eF, eF), uB),
            "left_coaction": juxtapose(uB, idF),
            "right_coaction": juxtapose(idB, uF),
            "rho_prime": compose(eF, juxtapose(uB, uB)),
        }

    def triviality_flags(self) -> tuple[int, int, int, int, int, int]:
        """(i, j, k, ibar, jbar, kbar): 1 iff the 2-cell differs from its
        trivial form. Order: left action, right action, cocycle sigma;
        left coaction, right coaction, cycle rho'."""
        forms = self.trivial_forms()
        order = (
            "left_action",
            "right_action",
            "sigma",
            "left_coaction",
            "right_coaction",
            "rho_prime",
        )
        return tuple(
            0 if equal(self.linear_map(name), forms[name]) else 1 for name in order
        )

    # -- perturbation ----------------------------------------------------
    def perturb(self, generator_name: str, row: int, col: int, delta) -> "HopfDatumModel":
        if generator_name not in PRIMITIVE_SIGNATURES:
            raise UnknownGenerator(generator_name)
        mat = self._matrices[generator_name]
        if not (0 <= row < mat.shape[0] and 0 <= col < mat.shape[1]):
            raise IndexOutOfRange(
                f"({row},{col}) outside shape {mat.shape} of {generator_name}"
            )
        if self.field.kind == FieldSpec.PRIME:
            d = int(delta) % self.field.p
        else:
            d = delta
        if d == 0:
            raise ValueError("delta must be nonzero")
        new = mat.copy()
        if self.field.kind == FieldSpec.PRIME:
            new[row, col] = (int(new[row, col]) + d) % self.field.p
        else:
            new[row, col] = new[row, col] + d
        gens = dict(self._matrices)
        gens[generator_name] = new
        return HopfDatumModel(self.field, self.B, self.F, gens, self.dimension_cap)

    # -- hashing ---------------------------------------------------------
    def model_hash(self) -> str:
        h = hashlib.sha256()
        h.update(repr(self.field.to_json()).encode())
        for space in (self.B, self.F):
            h.update(f"{space.name}:{space.dim}:{','.join(space.basis_labels)}".encode())
        for name in sorted(self._matrices):
            h.update(name.encode())
            mat = self._matrices[name]
            for idx in np.ndindex(mat.shape):
                h.update(self.field.format_scalar(mat[idx]).encode())
                h.update(b",")
        return h.hexdigest()


def _word_dim(word: tuple[str, ...], dims: dict[str, int]) -> int:
    d = 1
    for x in word:
        d *= dims[x]
    return d


def _identity(m: HopfDatumModel, word: tuple[str, ...]) -> LinearMap:
    from .exact import identity_map

    return identity_map(m.field, m.space_word(word))


def extract_actions(psi: LinearMap, phi_prime: LinearMap, m: HopfDatumModel):
    """Recover the four (co)actions from the crossing 2-cells psi and phi'."""
    idB = _identity(m, ("B",))
    idF = _identity(m, ("F",))
    uB, uF = m.linear_map("unit_B"), m.linear_map("unit_F")
    eB, eF = m.linear_map("counit_B"), m.linear_map("counit_F")
    left_action = compose(psi, juxtapose(idF, eB))
    right_action = compose(psi, juxtapose(eF, idB))
    right_coaction = compose(juxtapose(uF, idB), phi_prime)
    left_coaction = compose(juxtapose(idF, uB), phi_prime)
    return left_action, right_action, right_coaction, left_coaction
