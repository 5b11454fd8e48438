import wreathforge as wf
from wreathforge.classify import (
    COMPATIBILITY,
    COWREATH_ROWS,
    WREATH_ROWS,
    Signature,
    is_compatible,
    named_example,
    signature_of,
)


def test_signature_string():
    s = Signature(((1, 0), 0), ((0, 1), 0))
    assert str(s) == "((1,0),0),((0,1),0)"


def test_trivalence():
    assert Signature(((1, 0), 0), ((1, 0), 0)).is_trivalent
    assert Signature(((1, 1), 0), ((1, 0), 0)).is_trivalent
    assert not Signature(((1, 1), 0), ((1, 1), 0)).is_trivalent  # valence 4
    assert not Signature(((0, 1), 1), ((0, 0), 0)).is_trivalent  # cocycle on


def test_admissible_rows():
    assert WREATH_ROWS == {((1, 0), 0), ((0, 1), 0), ((0, 1), 1), ((1, 1), 0)}
    assert COWREATH_ROWS == {((0, 1), 0), ((1, 0), 0), ((1, 0), 1), ((1, 1), 0)}
    for row, allowed in COMPATIBILITY.items():
        assert row == ((0, 0), 0) or row in WREATH_ROWS
        assert allowed <= COWREATH_ROWS | {((0, 0), 0)}


def test_compatibility_rules():
    assert is_compatible(Signature(((0, 0), 0), ((1, 1), 1)))  # trivial side
    assert is_compatible(Signature(((1, 0), 0), ((1, 0), 0)))
    assert is_compatible(Signature(((0, 1), 1), ((1, 0), 1)))
    assert not is_compatible(Signature(((0, 1), 1), ((0, 1), 0)))
    assert not is_compatible(Signature(((1, 0), 0), ((1, 0), 1)))


def test_trivalent_count_is_13():
    """13 non-isomorphic admissible combinations: the cocycle row pairs with
    2, the plain right-action row with all 4, the left-action row with 3 (its
    mirror duplicates are not recounted), and the fully trivial action side
    with the 4 cycle-free coaction rows."""
    c = COMPATIBILITY
    row_cocycle = len(c[((0, 1), 1)])
    row_right = len(c[((0, 1), 0)])
    row_left = len(c[((1, 0), 0)])
    row_trivial = len([x for x in c[((0, 0), 0)] if x[1] == 0])
    assert (row_cocycle, row_right, row_left, row_trivial) == (2, 4, 3, 4)
    assert row_cocycle + row_right + row_left + row_trivial == 13


def test_named_examples():
    assert named_example(Signature(((1, 0), 0), ((1, 0), 0))) == "radford-biproduct"
    assert named_example(Signature(((1, 0), 0), ((0, 1), 0))) == "bicrossproduct"
    assert named_example(Signature(((0, 1), 1), ((0, 0), 0))) == "twisted-group-algebra"
    assert named_example(Signature(((0, 0), 1), ((0, 0), 0))) == "twisted-group-algebra"
    assert named_example(Signature(((1, 1), 0), ((0, 0), 0))) == "matched-pair"
    assert named_example(Signature(((0, 0), 0), ((0, 0), 0))) is None


def test_classify_radford(Q):
    r = wf.classify(wf.radford_h4(Q))
    assert str(r.signature) == "((1,0),0),((1,0),0)"
    assert r.is_trivalent and r.compatible and r.theorem_applies
    assert r.named_example == "radford-biproduct"
    assert all(r.suite_verdicts.values())
    doc = r.to_json()
    assert doc["theorem_applies"] is True
    assert doc["model_hash"] == wf.radford_h4(Q).model_hash()


def test_classify_twisted_not_trivalent(Q):
    r = wf.classify(wf.example("twisted-group-algebra-q8", Q))
    assert not r.is_trivalent
    assert not r.theorem_applies
    assert r.named_example == "twisted-group-algebra"
    # wreath laws hold even though the composite is not a bialgebra
    assert r.suite_verdicts["wreath"]
    assert not r.suite_verdicts["tau-bimonad-FB"]


def test_classify_bicrossproduct_signature(Q):
    """The built-in order-6 model has a trivial action side, so it does not
    match the named bicrossproduct signature (which needs both sides on)."""
    r = wf.classify(wf.bicrossproduct_s3(Q))
    assert str(r.signature) == "((0,0),0),((0,1),0)"
    assert r.theorem_applies
    assert r.named_example is None


def test_theorem_never_claimed_on_failed_numerics(Q):
    m = wf.radford_h4(Q).perturb("tau_FF", 0, 1, 1)
    r = wf.classify(m)
    assert not r.theorem_applies


def test_signature_of_matches_flags(Q):
    for name in sorted(wf.library.EXAMPLES):
        m = wf.example(name, Q)
        i, j, k, ib, jb, kb = m.triviality_flags()
        s = signature_of(m)
        assert s.monad == ((i, j), k)
        assert s.comonad == ((ib, jb), kb)
