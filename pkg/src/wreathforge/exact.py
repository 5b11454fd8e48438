"""Exact scalar arithmetic and typed linear maps between tensor words.

Scalars live in one of two fields: the rationals (gmpy2.mpq, falling back to
fractions.Fraction) or a prime field F_p (canonical representatives in [0, p)).
Matrices are dense numpy arrays: dtype=object holding rationals, or int64 for
prime fields. Prime-field matrix products are routed through float64 BLAS when
the inner dimension guarantees exactness (inner * (p-1)^2 < 2^53), otherwise
through object-int arithmetic.

Index convention: a tensor word (X1, ..., Xn) is enumerated in mixed radix with
the leftmost wire most significant.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

try:
    from gmpy2 import mpq as _mpq
except ImportError:  # pragma: no cover
    from fractions import Fraction as _mpq

_FLOAT_EXACT_LIMIT = 1 << 53
_FLOAT32_EXACT_LIMIT = 1 << 24


class BoundaryMismatch(Exception):
    pass


class DimensionCapExceeded(Exception):
    pass


class UnknownGenerator(Exception):
    pass


class SchemaError(Exception):
    pass


@dataclass(frozen=True)
class FieldSpec:
    """The base field of a model: kind 'rationals' or 'prime_field' with modulus p."""

    kind: str
    p: int | None = None

    RATIONALS = "rationals"
    PRIME = "prime_field"

    def __post_init__(self):
        if self.kind not in (FieldSpec.RATIONALS, FieldSpec.PRIME):
            raise SchemaError(f"unknown field kind {self.kind!r}")
        if self.kind == FieldSpec.PRIME:
            p = self.p
            if not isinstance(p, int) or p < 2 or not _is_prime(p):
                raise SchemaError(f"modulus {p!r} is not prime")
        elif self.p is not None:
            raise SchemaError("rationals take no modulus")

    # -- scalar helpers -------------------------------------------------
    def zero(self):
        return 0 if self.kind == FieldSpec.PRIME else _mpq(0)

    def one(self):
        return 1 if self.kind == FieldSpec.PRIME else _mpq(1)

    def of_int(self, n: int):
        if self.kind == FieldSpec.PRIME:
            return n % self.p
        return _mpq(n)

    def of_fraction(self, num: int, den: int = 1):
        if self.kind == FieldSpec.PRIME:
            d = den % self.p
            if d == 0:
                raise SchemaError(f"denominator {den} is 0 mod {self.p}")
            return (num * pow(d, -1, self.p)) % self.p
        return _mpq(num, den)

    def parse_scalar(self, text: str):
        text = text.strip()
        if self.kind == FieldSpec.PRIME:
            try:
                n = int(text)
            except ValueError as e:
                raise SchemaError(f"bad prime-field scalar {text!r}") from e
            if not 0 <= n < self.p:
                raise SchemaError(
                    f"prime-field scalar {text!r} outside canonical range [0,{self.p})"
                )
            return n
        try:
            if "/" in text:
                num, den = text.split("/")
                return _mpq(int(num), int(den))
            return _mpq(int(text))
        except (ValueError, ZeroDivisionError) as e:
            raise SchemaError(f"bad rational scalar {text!r}") from e

    def format_scalar(self, value) -> str:
        if self.kind == FieldSpec.PRIME:
            return str(int(value) % self.p)
        q = _mpq(value)
        num, den = q.numerator, q.denominator
        if den == 1:
            return str(num)
        return f"{num}/{den}"

    # -- matrix helpers -------------------------------------------------
    def zeros(self, rows: int, cols: int) -> np.ndarray:
        if self.kind == FieldSpec.PRIME:
            return np.zeros((rows, cols), dtype=np.int64)
        m = np.empty((rows, cols), dtype=object)
        m[:, :] = _mpq(0)
        return m

    def eye(self, n: int) -> np.ndarray:
        m = self.zeros(n, n)
        one = self.one()
        for i in range(n):
            m[i, i] = one
        return m

    def normalize(self, mat: np.ndarray) -> np.ndarray:
        """Coerce a matrix into this field's canonical storage."""
        if self.kind == FieldSpec.PRIME:
            arr = np.asarray(mat)
            if arr.dtype == object:
                out = np.zeros(arr.shape, dtype=np.int64)
                for idx in np.ndindex(arr.shape):
                    out[idx] = int(arr[idx]) % self.p
                return out
            return np.asarray(arr, dtype=np.int64) % self.p
        arr = np.asarray(mat, dtype=object)
        out = np.empty(arr.shape, dtype=object)
        for idx in np.ndindex(arr.shape):
            out[idx] = _mpq(arr[idx])
        return out

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.kind == FieldSpec.PRIME:
            inner = a.shape[1]
            if inner * (self.p - 1) ** 2 < _FLOAT_EXACT_LIMIT:
                prod = (a.astype(np.float64) @ b.astype(np.float64)) % self.p
                return prod.astype(np.int64)
            prod = a.astype(object) @ b.astype(object)
            return (prod % self.p).astype(np.int64)
        return a @ b

    # internal evaluation carrier: for small primes states travel as floats
    # (float32 when the prime is tiny, halving memory traffic) so repeated
    # applications avoid per-step int64 round trips; every product stays exact
    # because entries are reduced below p after each step and each inner
    # product is bounded below the float type's exact-integer limit
    def _carrier_dtype(self):
        if self.kind != FieldSpec.PRIME:
            return None
        sq = (self.p - 1) ** 2
        if sq < _FLOAT32_EXACT_LIMIT:
            return np.float32
        if sq < _FLOAT_EXACT_LIMIT:
            return np.float64
        return None

    def eval_state(self, mat: np.ndarray) -> np.ndarray:
        dt = self._carrier_dtype()
        if dt is not None:
            return mat.astype(dt)
        return mat

    def apply_to_state(self, g: np.ndarray, state: np.ndarray) -> np.ndarray:
        if self.kind != FieldSpec.PRIME:
            return g @ state
        if state.dtype in (np.float32, np.float64):
            bound = g.shape[1] * (self.p - 1) ** 2
            if state.dtype == np.float32 and bound < _FLOAT32_EXACT_LIMIT:
                out = g.astype(np.float32) @ state
                out %= self.p
                return out
            if bound < _FLOAT_EXACT_LIMIT:
                out = g.astype(np.float64) @ state.astype(np.float64)
                out %= self.p
                # entries are reduced below p, exact in the carrier type
                return out.astype(state.dtype)
            prod = g.astype(object) @ state.astype(object)
            return (prod % self.p).astype(state.dtype)
        return self.matmul(g, state)

    def finish_state(self, state: np.ndarray) -> np.ndarray:
        if self.kind == FieldSpec.PRIME and state.dtype in (np.float32,
                                                            np.float64):
            return state.astype(np.int64)
        return state

    def kron(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        out = np.kron(a, b)
        if self.kind == FieldSpec.PRIME:
            return np.asarray(out, dtype=np.int64) % self.p
        return out

    def mats_equal(self, a: np.ndarray, b: np.ndarray) -> bool:
        if a.shape != b.shape:
            return False
        if self.kind == FieldSpec.PRIME:
            return bool(np.array_equal(a % self.p, b % self.p))
        return all(a[idx] == b[idx] for idx in np.ndindex(a.shape))

    def to_json(self) -> dict:
        if self.kind == FieldSpec.PRIME:
            return {"kind": self.kind, "p": self.p}
        return {"kind": self.kind}

    @staticmethod
    def from_json(data: dict) -> "FieldSpec":
        if not isinstance(data, dict) or "kind" not in data:
            raise SchemaError("field spec must be an object with a 'kind'")
        if data["kind"] == FieldSpec.PRIME:
            return FieldSpec(FieldSpec.PRIME, data.get("p"))
        return FieldSpec(data["kind"])


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class ObjectSpace:
    """A named finite-dimensional space with labelled basis."""

    name: str
    dim: int
    basis_labels: tuple[str, ...]

    def __post_init__(self):
        if self.dim < 1:
            raise SchemaError(f"object {self.name!r} has dim {self.dim} < 1")
        if len(self.basis_labels) != self.dim:
            raise SchemaError(
                f"object {self.name!r}: {len(self.basis_labels)} labels for dim {self.dim}"
            )
        if len(set(self.basis_labels)) != self.dim:
            raise SchemaError(f"object {self.name!r}: basis labels not distinct")


def word_dim(word: tuple[ObjectSpace, ...]) -> int:
    d = 1
    for space in word:
        d *= space.dim
    return d


def word_names(word: tuple[ObjectSpace, ...]) -> tuple[str, ...]:
    return tuple(space.name for space in word)


@dataclass(frozen=True)
class LinearMap:
    """An exact matrix with typed domain/codomain words.

    entries has shape (dim cod word, dim dom word); column index enumerates the
    domain basis in leftmost-most-significant mixed radix.
    """

    field: FieldSpec
    dom: tuple[ObjectSpace, ...]
    cod: tuple[ObjectSpace, ...]
    entries: np.ndarray = field(hash=False)

    def __post_init__(self):
        expected = (word_dim(self.cod), word_dim(self.dom))
        if self.entries.shape != expected:
            raise SchemaError(
                f"matrix shape {self.entries.shape} != boundary shape {expected}"
            )

    @property
    def dom_names(self):
        return word_names(self.dom)

    @property
    def cod_names(self):
        return word_names(self.cod)


def identity_map(fs: FieldSpec, word: tuple[ObjectSpace, ...]) -> LinearMap:
    return LinearMap(fs, word, word, fs.eye(word_dim(word)))


def compose(f: LinearMap, g: LinearMap) -> LinearMap:
    """Return g after f (f first). Requires cod(f) = dom(g)."""
    if f.cod_names != g.dom_names:
        raise BoundaryMismatch(
            f"compose: cod {f.cod_names} != dom {g.dom_names}"
        )
    return LinearMap(f.field, f.dom, g.cod, f.field.matmul(g.entries, f.entries))


def juxtapose(f: LinearMap, g: LinearMap) -> LinearMap:
    """Side-by-side tensor of maps; leftmost factor most significant."""
    return LinearMap(
        f.field,
        f.dom + g.dom,
        f.cod + g.cod,
        f.field.kron(f.entries, g.entries),
    )


def equal(f: LinearMap, g: LinearMap) -> bool:
    if f.dom_names != g.dom_names or f.cod_names != g.cod_names:
        return False
    return f.field.mats_equal(f.entries, g.entries)


def first_difference(f: LinearMap, g: LinearMap):
    """Lexicographically smallest (column, row) where entries differ, or None."""
    a, b = f.entries, g.entries
    if a.dtype != object and b.dtype != object:
        mask = a != b
        if not mask.any():
            return None
        cols = np.nonzero(mask.any(axis=0))[0]
        col = int(cols[0])
        row = int(np.nonzero(mask[:, col])[0][0])
        return col, row
    rows, cols = a.shape
    for col in range(cols):
        for row in range(rows):
            if a[row, col] != b[row, col]:
                return col, row
    return None
