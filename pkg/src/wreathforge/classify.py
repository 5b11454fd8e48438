"""Signature extraction and classification of models: which decoration cells
are nontrivial, whether the datum sits in the trivalent admissible range, and
which named construction (if any) the signature matches."""

from __future__ import annotations

from dataclasses import dataclass

from . import catalog as cat

Triple = tuple[tuple[int, int], int]


@dataclass(frozen=True)
class Signature:
    """((i, j), k) for the action side, ((ibar, jbar), kbar) for the coaction
    side; a bit is 1 iff the corresponding cell differs from its trivial form.
    Order: i = left action, j = right action, k = cocycle; ibar = left
    coaction, jbar = right coaction, kbar = cycle."""

    monad: Triple
    comonad: Triple

    def __str__(self) -> str:
        (i, j), k = self.monad
        (ib, jb), kb = self.comonad
        return f"(({i},{j}),{k}),(({ib},{jb}),{kb})"

    @property
    def valence(self) -> int:
        return self.monad[0][0] + self.monad[0][1] + self.comonad[0][0] + self.comonad[0][1]

    @property
    def is_trivalent(self) -> bool:
        return self.monad[1] == 0 and self.comonad[1] == 0 and self.valence <= 3


def signature_of(model) -> Signature:
    i, j, k, ibar, jbar, kbar = model.triviality_flags()
    return Signature(((i, j), k), ((ibar, jbar), kbar))


# Admissible action-side rows of the crossed-product construction and the
# coaction-side rows of the dual construction.
WREATH_ROWS: frozenset[Triple] = frozenset({
    ((1, 0), 0), ((0, 1), 0), ((0, 1), 1), ((1, 1), 0),
})
COWREATH_ROWS: frozenset[Triple] = frozenset({
    ((0, 1), 0), ((1, 0), 0), ((1, 0), 1), ((1, 1), 0),
})

# For each admissible action row, the coaction rows it pairs with.
COMPATIBILITY: dict[Triple, frozenset[Triple]] = {
    ((0, 1), 1): frozenset({((1, 0), 0), ((1, 0), 1)}),
    ((0, 1), 0): COWREATH_ROWS,
    ((1, 0), 0): frozenset({((0, 1), 0), ((1, 0), 0), ((1, 1), 0)}),
    ((1, 1), 0): frozenset({((0, 1), 0), ((1, 0), 0), ((1, 1), 0)}),
    ((0, 0), 0): COWREATH_ROWS | {((0, 0), 0)},
}


def is_compatible(sig: Signature) -> bool:
    trivial: Triple = ((0, 0), 0)
    if sig.monad == trivial or sig.comonad == trivial:
        return True
    allowed = COMPATIBILITY.get(sig.monad)
    return allowed is not None and sig.comonad in allowed


NAMED_EXAMPLES: dict[tuple[Triple, Triple], str] = {
    (((1, 0), 0), ((1, 0), 0)): "radford-biproduct",
    (((1, 0), 0), ((0, 1), 0)): "bicrossproduct",
    (((0, 1), 1), ((0, 0), 0)): "twisted-group-algebra",
    # with a one-dimensional B every right action equals its trivial form,
    # so the twisted-group-algebra family degenerates to this signature
    (((0, 0), 1), ((0, 0), 0)): "twisted-group-algebra",
    (((0, 1), 1), ((1, 0), 1)): "cocycle-bicrossproduct",
    (((1, 1), 0), ((0, 0), 0)): "matched-pair",
    (((1, 1), 1), ((1, 0), 0)): "cosmash-product",
}


def named_example(sig: Signature) -> str | None:
    exact = NAMED_EXAMPLES.get((sig.monad, sig.comonad))
    if exact is not None:
        return exact
    if sig.monad == ((0, 1), 1):
        return "crossed-product-with-cocycle"
    return None


CLASSIFY_SUITES = (
    "hopf-datum",
    "ybe",
    "naturality",
    "paired-wreath-extras",
    "wreath",
    "tau-bimonad-FB",
)


@dataclass(frozen=True)
class ClassificationReport:
    model_hash: str
    signature: Signature
    is_trivalent: bool
    compatible: bool
    theorem_applies: bool
    named_example: str | None
    suite_reports: tuple[cat.SuiteReport, ...]

    @property
    def suite_verdicts(self) -> dict[str, bool]:
        return {r.suite: r.passed for r in self.suite_reports}

    def to_json(self) -> dict:
        return {
            "model_hash": self.model_hash,
            "signature": str(self.signature),
            "is_trivalent": self.is_trivalent,
            "compatible": self.compatible,
            "theorem_applies": self.theorem_applies,
            "named_example": self.named_example,
            "suites": {r.suite: r.passed for r in self.suite_reports},
        }


def classify(model) -> ClassificationReport:
    sig = signature_of(model)
    reports = tuple(cat.run_suite(name, model) for name in CLASSIFY_SUITES)
    verdicts = {r.suite: r.passed for r in reports}
    theorem = (
        sig.is_trivalent
        and is_compatible(sig)
        and verdicts["ybe"]
        and verdicts["naturality"]
        and verdicts["hopf-datum"]
    )
    return ClassificationReport(
        model_hash=model.model_hash(),
        signature=sig,
        is_trivalent=sig.is_trivalent,
        compatible=is_compatible(sig),
        theorem_applies=theorem,
        named_example=named_example(sig),
        suite_reports=reports,
    )
