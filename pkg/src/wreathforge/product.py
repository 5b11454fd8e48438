"""Construction of the composite bialgebra on FB: multiplication,
comultiplication, unit, counit and (lazily) the composite crossing, all
obtained by evaluating the catalog's product macros on a model."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from . import catalog as cat
from .diagram import evaluate
from .exact import FieldSpec, LinearMap, ObjectSpace


@dataclass
class ProductStructure:
    """The composite object FB with its bialgebra data.

    Basis pairs are enumerated F-major: index f * dim(B) + b, matching the
    leftmost-most-significant convention of the evaluation engine, so the
    matrices produced on (F, B) words reindex verbatim."""

    parent: object
    FB: ObjectSpace
    nabla: LinearMap
    eta: LinearMap
    delta: LinearMap
    epsilon: LinearMap
    _tau: LinearMap | None = dc_field(default=None, repr=False)

    @property
    def tau(self) -> LinearMap:
        if self._tau is None:
            self._tau = _regroup(
                evaluate(cat.tau_fbfb_diagram(), self.parent.eval_context()),
                self.parent.field,
                self.FB,
            )
        return self._tau

    def check_tau_bimonad(self):
        """Run the product-level bimonad suite directly on the parent model."""
        return cat.run_suite("tau-bimonad-FB", self.parent)


def build_product(m) -> ProductStructure:
    dim = m.F.dim * m.B.dim
    labels = tuple(
        f"{f}*{b}" for f in m.F.basis_labels for b in m.B.basis_labels
    )
    FB = ObjectSpace("FB", dim, labels)
    ctx = m.eval_context()
    nabla = _regroup(evaluate(cat.nabla_diagram(), ctx), m.field, FB)
    eta = _regroup(evaluate(cat.eta_fb_diagram(), ctx), m.field, FB)
    delta = _regroup(evaluate(cat.delta_diagram(), ctx), m.field, FB)
    epsilon = _regroup(evaluate(cat.eps_fb_diagram(), ctx), m.field, FB)
    return ProductStructure(m, FB, nabla, eta, delta, epsilon)


def _regroup(lm: LinearMap, field: FieldSpec, FB: ObjectSpace) -> LinearMap:
    """Reinterpret a map on (F,B,...)-words as a map on FB-words.

    Index enumeration is unchanged (F is the more significant factor in each
    pair), so the matrix carries over as is."""
    def group(word):
        names = [s.name for s in word]
        assert len(names) % 2 == 0 and all(
            names[i:i + 2] == ["F", "B"] for i in range(0, len(names), 2)
        ), f"not an FB word: {names}"
        return tuple(FB for _ in range(len(names) // 2))

    return LinearMap(field, group(lm.dom), group(lm.cod), lm.entries)


def product_as_generators(p: ProductStructure) -> dict[str, np.ndarray]:
    """The product bialgebra as plain generator matrices on the single object FB."""
    return {
        "mul": p.nabla.entries,
        "unit": p.eta.entries,
        "comul": p.delta.entries,
        "counit": p.epsilon.entries,
    }
