"""Diagram IR: expression trees over named generators.

A diagram is read top-to-bottom: Vertical(d1, d2) performs d1 first, then d2.
Horizontal(d1, d2) places d1 on the left. The left-to-right wire order is the
tensor-factor order of the evaluated map.

Evaluation is apply-style: a diagram is applied to the identity matrix of its
domain, and Horizontal is handled by reshape/transpose so that large composite
2-cells are never materialized as square matrices.

Text form (bit-exact round-trip): s-expressions with constructors `id`,
a bare generator name, `v`, and `h`, e.g. `(v (h (id B) mu_B) tau_BB)`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from .exact import (
    BoundaryMismatch,
    DimensionCapExceeded,
    FieldSpec,
    LinearMap,
    ObjectSpace,
    UnknownGenerator,
)


class Diagram:
    __slots__ = ()


@dataclass(frozen=True)
class Identity(Diagram):
    word: tuple[str, ...]


@dataclass(frozen=True)
class Generator(Diagram):
    name: str


@dataclass(frozen=True)
class Vertical(Diagram):
    top: Diagram
    bottom: Diagram


@dataclass(frozen=True)
class Horizontal(Diagram):
    left: Diagram
    right: Diagram


# -- construction helpers ----------------------------------------------------

def ident(*labels: str) -> Identity:
    return Identity(tuple(labels))


def gen(name: str) -> Generator:
    return Generator(name)


def vert(*parts: Diagram) -> Diagram:
    if not parts:
        raise ValueError("vert needs at least one part")
    d = parts[0]
    for p in parts[1:]:
        d = Vertical(d, p)
    return d


def horiz(*parts: Diagram) -> Diagram:
    if not parts:
        raise ValueError("horiz needs at least one part")
    d = parts[0]
    for p in parts[1:]:
        d = Horizontal(d, p)
    return d


# -- boundary inference ------------------------------------------------------

def infer_boundary(d: Diagram, table: dict[str, tuple[tuple[str, ...], tuple[str, ...]]],
                   _path: str = "") -> tuple[tuple[str, ...], tuple[str, ...]]:
    """Return (dom word, cod word) of wire labels; raise on ill-formed trees."""
    if isinstance(d, Identity):
        return d.word, d.word
    if isinstance(d, Generator):
        if d.name not in table:
            raise UnknownGenerator(f"{d.name!r} at {_path or 'root'}")
        return table[d.name]
    if isinstance(d, Vertical):
        dom1, cod1 = infer_boundary(d.top, table, _path + "v.top/")
        dom2, cod2 = infer_boundary(d.bottom, table, _path + "v.bottom/")
        if cod1 != dom2:
            raise BoundaryMismatch(
                f"vertical at {_path or 'root'}: {cod1} then {dom2}"
            )
        return dom1, cod2
    if isinstance(d, Horizontal):
        dom1, cod1 = infer_boundary(d.left, table, _path + "h.left/")
        dom2, cod2 = infer_boundary(d.right, table, _path + "h.right/")
        return dom1 + dom2, cod1 + cod2
    raise TypeError(f"not a diagram: {d!r}")


# -- evaluation --------------------------------------------------------------

@dataclass
class EvalContext:
    """Everything needed to turn a diagram into a matrix."""

    field: FieldSpec
    spaces: dict[str, ObjectSpace]
    signatures: dict[str, tuple[tuple[str, ...], tuple[str, ...]]]
    matrices: dict[str, np.ndarray]
    dimension_cap: int = 1 << 20

    def space_word(self, labels: tuple[str, ...]) -> tuple[ObjectSpace, ...]:
        try:
            return tuple(self.spaces[name] for name in labels)
        except KeyError as e:
            raise UnknownGenerator(f"unknown wire label {e.args[0]!r}") from e

    def word_dim(self, labels: tuple[str, ...]) -> int:
        d = 1
        for name in labels:
            d *= self.spaces[name].dim
        self._check_cap(d, labels)
        return d

    def _check_cap(self, d: int, labels) -> None:
        if d > self.dimension_cap:
            raise DimensionCapExceeded(
                f"word {labels} has dimension {d} > cap {self.dimension_cap}"
            )


def evaluate(d: Diagram, ctx: EvalContext) -> LinearMap:
    dom, cod = infer_boundary(d, ctx.signatures)
    dom_dim = ctx.word_dim(dom)
    ctx.word_dim(cod)
    state = ctx.field.eval_state(ctx.field.eye(dom_dim))
    mat = ctx.field.finish_state(_apply(d, state, ctx))
    return LinearMap(ctx.field, ctx.space_word(dom), ctx.space_word(cod), mat)


def _apply(d: Diagram, m: np.ndarray, ctx: EvalContext) -> np.ndarray:
    """Apply diagram d to matrix m of shape (dim dom(d), rest)."""
    if isinstance(d, Identity):
        return m
    if isinstance(d, Generator):
        return ctx.field.apply_to_state(ctx.matrices[d.name], m)
    if isinstance(d, Vertical):
        return _apply(d.bottom, _apply(d.top, m, ctx), ctx)
    if isinstance(d, Horizontal):
        dom1, cod1 = infer_boundary(d.left, ctx.signatures)
        dom2, cod2 = infer_boundary(d.right, ctx.signatures)
        m1, r1 = ctx.word_dim(dom1), ctx.word_dim(cod1)
        m2, r2 = ctx.word_dim(dom2), ctx.word_dim(cod2)
        rest = m.shape[1]
        if isinstance(d.right, Identity):
            # the right block is untouched: act on the leading factor in place
            a = _apply(d.left, m.reshape(m1, m2 * rest), ctx)
            return a.reshape(r1 * m2, rest)
        if isinstance(d.left, Identity):
            # one transpose round instead of two
            a = m.reshape(m1, m2, rest).transpose(1, 0, 2).reshape(m2, m1 * rest)
            b = _apply(d.right, np.ascontiguousarray(a), ctx)
            return np.ascontiguousarray(
                b.reshape(r2, m1, rest).transpose(1, 0, 2).reshape(m1 * r2, rest)
            )
        a = _apply(d.left, np.ascontiguousarray(m.reshape(m1, m2 * rest)), ctx)
        a = a.reshape(r1, m2, rest).transpose(1, 0, 2).reshape(m2, r1 * rest)
        b = _apply(d.right, np.ascontiguousarray(a), ctx)
        return np.ascontiguousarray(
            b.reshape(r2, r1, rest).transpose(1, 0, 2).reshape(r1 * r2, rest)
        )
    raise TypeError(f"not a diagram: {d!r}")


# -- mirror transform --------------------------------------------------------

MIRROR_SUFFIX = "~"


class MissingMirrorPartner(Exception):
    pass


def mirror(d: Diagram, involution: dict[str, str] | None = None) -> Diagram:
    """Left-right mirror: swap horizontal children, reverse identity words,
    remap generator names through an involution (default: toggle a '~' suffix)."""
    if isinstance(d, Identity):
        return Identity(tuple(reversed(d.word)))
    if isinstance(d, Generator):
        if involution is None:
            name = (
                d.name[: -len(MIRROR_SUFFIX)]
                if d.name.endswith(MIRROR_SUFFIX)
                else d.name + MIRROR_SUFFIX
            )
        else:
            if d.name not in involution:
                raise MissingMirrorPartner(d.name)
            name = involution[d.name]
        return Generator(name)
    if isinstance(d, Vertical):
        return Vertical(mirror(d.top, involution), mirror(d.bottom, involution))
    if isinstance(d, Horizontal):
        return Horizontal(mirror(d.right, involution), mirror(d.left, involution))
    raise TypeError(f"not a diagram: {d!r}")


def reversal_permutation(dims: tuple[int, ...]) -> np.ndarray:
    """perm[i] = index of basis vector i after reversing the tensor factors."""
    total = 1
    for d in dims:
        total *= d
    perm = np.arange(total)
    if len(dims) > 1:
        perm = perm.reshape(dims).transpose(tuple(reversed(range(len(dims))))).reshape(-1)
    return perm


def mirrored_matrix(mat: np.ndarray, dom_dims: tuple[int, ...],
                    cod_dims: tuple[int, ...]) -> np.ndarray:
    """Matrix of the mirrored generator: conjugate by word-reversal permutations."""
    rp_dom = reversal_permutation(dom_dims)
    rp_cod = reversal_permutation(cod_dims)
    # mirrored(v_rev) = rev(original(v)): rows permuted by cod reversal,
    # columns by dom reversal.
    return mat[np.ix_(rp_cod, rp_dom)]


# -- text form ---------------------------------------------------------------

_TOKEN = re.compile(r"\(|\)|[^\s()]+")


def to_sexpr(d: Diagram) -> str:
    if isinstance(d, Identity):
        return "(id" + "".join(" " + w for w in d.word) + ")"
    if isinstance(d, Generator):
        return d.name
    if isinstance(d, Vertical):
        return f"(v {to_sexpr(d.top)} {to_sexpr(d.bottom)})"
    if isinstance(d, Horizontal):
        return f"(h {to_sexpr(d.left)} {to_sexpr(d.right)})"
    raise TypeError(f"not a diagram: {d!r}")


def from_sexpr(text: str) -> Diagram:
    tokens = _TOKEN.findall(text)
    if not tokens:
        raise ValueError("empty diagram text")
    d, rest = _parse(tokens)
    if rest:
        raise ValueError(f"trailing tokens: {rest}")
    return d


def _parse(tokens: list[str]) -> tuple[Diagram, list[str]]:
    tok, rest = tokens[0], tokens[1:]
    if tok == ")":
        raise ValueError("unexpected ')'")
    if tok != "(":
        return Generator(tok), rest
    if not rest:
        raise ValueError("unterminated '('")
    head, rest = rest[0], rest[1:]
    if head == "id":
        word = []
        while rest and rest[0] != ")":
            if rest[0] == "(":
                raise ValueError("nested form inside (id ...)")
            word.append(rest[0])
            rest = rest[1:]
        if not rest:
            raise ValueError("unterminated (id ...)")
        return Identity(tuple(word)), rest[1:]
    if head in ("v", "h"):
        d1, rest = _parse(rest)
        d2, rest = _parse(rest)
        if not rest or rest[0] != ")":
            raise ValueError(f"({head} ...) needs exactly two parts")
        cls = Vertical if head == "v" else Horizontal
        return cls(d1, d2), rest[1:]
    raise ValueError(f"unknown constructor {head!r}")
