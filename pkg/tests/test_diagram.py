import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import wreathforge.diagram as dg
from wreathforge import (
    BoundaryMismatch,
    DimensionCapExceeded,
    FieldSpec,
    ObjectSpace,
    UnknownGenerator,
    equal,
    evaluate,
    from_sexpr,
    gen,
    horiz,
    ident,
    mirror,
    to_sexpr,
    vert,
)

SIGS = {
    "tau_BF": (("B", "F"), ("F", "B")),
    "counit_B": (("B",), ()),
    "mul_B": (("B", "B"), ("B",)),
    "f": (("B",), ("F",)),
    "g": (("F",), ("B",)),
}


def test_boundary_examples():
    d = vert(gen("tau_BF"), horiz(ident("F"), gen("counit_B")))
    assert dg.infer_boundary(d, SIGS) == (("B", "F"), ("F",))
    assert dg.infer_boundary(ident("B", "F", "B"), SIGS) == (
        ("B", "F", "B"), ("B", "F", "B"))
    assert dg.infer_boundary(horiz(gen("f"), gen("g")), SIGS) == (
        ("B", "F"), ("F", "B"))


def test_boundary_errors_have_paths():
    with pytest.raises(UnknownGenerator) as e:
        dg.infer_boundary(vert(gen("f"), gen("nope")), SIGS)
    assert "v.bottom" in str(e.value)
    with pytest.raises(BoundaryMismatch) as e:
        dg.infer_boundary(vert(gen("f"), gen("f")), SIGS)
    assert "vertical" in str(e.value)


def _ctx(fs):
    B = ObjectSpace("B", 2, ("b0", "b1"))
    F = ObjectSpace("F", 3, ("f0", "f1", "f2"))
    rng = np.random.default_rng(7)

    def rand(rows, cols):
        return fs.normalize(rng.integers(0, 5, size=(rows, cols)))

    sigs = {
        "f": (("B",), ("F",)),
        "g": (("F",), ("B",)),
        "m": (("B", "F"), ("F",)),
        "w": (("F",), ("B", "B")),
    }
    dims = {"B": 2, "F": 3}

    def wdim(word):
        d = 1
        for x in word:
            d *= dims[x]
        return d

    mats = {name: rand(wdim(cod), wdim(dom)) for name, (dom, cod) in sigs.items()}
    return dg.EvalContext(fs, {"B": B, "F": F}, sigs, mats)


def test_evaluate_identity_and_generator(Q):
    ctx = _ctx(Q)
    idm = evaluate(ident("B", "F"), ctx)
    assert idm.entries.shape == (6, 6)
    assert all(idm.entries[i, i] == 1 for i in range(6))
    f = evaluate(gen("f"), ctx)
    assert f.entries.shape == (3, 2)
    assert Q.mats_equal(f.entries, ctx.matrices["f"])


def test_horizontal_matches_kron(Q):
    """Apply-style juxtaposition agrees with the explicit Kronecker product."""
    ctx = _ctx(Q)
    got = evaluate(horiz(gen("f"), gen("g")), ctx)
    expect = Q.kron(ctx.matrices["f"], ctx.matrices["g"])
    assert Q.mats_equal(got.entries, expect)
    # three-fold, mixed with identity
    got = evaluate(horiz(gen("f"), ident("F"), gen("g")), ctx)
    expect = Q.kron(Q.kron(ctx.matrices["f"], Q.eye(3)), ctx.matrices["g"])
    assert Q.mats_equal(got.entries, expect)


def test_vertical_matches_matmul(Q):
    ctx = _ctx(Q)
    got = evaluate(vert(gen("f"), gen("g")), ctx)
    expect = Q.matmul(ctx.matrices["g"], ctx.matrices["f"])
    assert Q.mats_equal(got.entries, expect)


@settings(max_examples=25, deadline=None)
@given(data=st.data())
def test_functoriality_random_trees(data):
    """Evaluation of a random tree equals the naive kron/matmul semantics."""
    fs = FieldSpec(FieldSpec.PRIME, 7)
    ctx = _ctx(fs)

    def naive(d):
        from wreathforge.exact import LinearMap, compose, juxtapose
        if isinstance(d, dg.Identity):
            from wreathforge.exact import identity_map
            return identity_map(fs, ctx.space_word(d.word))
        if isinstance(d, dg.Generator):
            dom, cod = ctx.signatures[d.name]
            return LinearMap(fs, ctx.space_word(dom), ctx.space_word(cod),
                             ctx.matrices[d.name])
        if isinstance(d, dg.Vertical):
            return compose(naive(d.top), naive(d.bottom))
        return juxtapose(naive(d.left), naive(d.right))

    def build(depth, dom_needed=None):
        choices = ["gen", "id"] if depth == 0 else ["gen", "id", "h", "v"]
        kind = data.draw(st.sampled_from(choices))
        if kind == "gen":
            name = data.draw(st.sampled_from(sorted(ctx.signatures)))
            return gen(name)
        if kind == "id":
            word = data.draw(st.lists(st.sampled_from(["B", "F"]), max_size=2))
            return dg.Identity(tuple(word))
        if kind == "h":
            return dg.Horizontal(build(depth - 1), build(depth - 1))
        left = build(depth - 1)
        _, cod = dg.infer_boundary(left, ctx.signatures)
        return dg.Vertical(left, dg.Identity(cod))

    d = build(3)
    got = evaluate(d, ctx)
    want = naive(d)
    assert equal(got, want)


def test_mirror_is_involution():
    d = vert(horiz(gen("f"), ident("B", "F")), horiz(gen("g"), gen("m")))
    assert mirror(mirror(d)) == d


def test_mirror_structure():
    d = horiz(gen("f"), ident("B", "F"))
    md = mirror(d)
    assert isinstance(md, dg.Horizontal)
    assert md.left == dg.Identity(("F", "B"))
    assert md.right == gen("f" + dg.MIRROR_SUFFIX)


def test_mirror_involution_table():
    inv = {"f": "fr", "fr": "f"}
    assert mirror(gen("f"), inv) == gen("fr")
    with pytest.raises(dg.MissingMirrorPartner):
        mirror(gen("g"), inv)


def test_mirrored_matrix_oracle(Q):
    # m: X x Y -> Z with dims (2,3) -> 6; reversal permutes columns
    mat = Q.normalize(np.arange(12).reshape(2, 6))
    got = dg.mirrored_matrix(mat, (2, 3), (2,))
    # column for (y, x) in the mirrored map = column for (x, y) originally
    for x in range(2):
        for y in range(3):
            assert list(got[:, y * 2 + x]) == list(mat[:, x * 3 + y])


def test_reversal_permutation_involutive():
    for dims in [(2, 3), (2, 2, 2), (4,), ()]:
        p = dg.reversal_permutation(dims)
        q = dg.reversal_permutation(tuple(reversed(dims)))
        assert list(p[q]) == list(range(len(p)))


def test_dimension_cap(Q):
    ctx = _ctx(Q)
    ctx.dimension_cap = 5
    with pytest.raises(DimensionCapExceeded):
        evaluate(ident("B", "F"), ctx)


def test_sexpr_round_trip_examples():
    for d in [
        gen("mul_B"),
        ident(),
        ident("B", "F"),
        vert(gen("tau_BF"), horiz(ident("F"), gen("counit_B"))),
        horiz(vert(gen("f"), gen("g")), ident("B")),
    ]:
        assert from_sexpr(to_sexpr(d)) == d


@settings(max_examples=50, deadline=None)
@given(data=st.data())
def test_sexpr_round_trip_random(data):
    name = st.sampled_from(["mul_B", "f", "g~", "tau_FF"])

    def build(depth):
        kinds = ["gen", "id"] if depth == 0 else ["gen", "id", "v", "h"]
        kind = data.draw(st.sampled_from(kinds))
        if kind == "gen":
            return gen(data.draw(name))
        if kind == "id":
            return dg.Identity(tuple(
                data.draw(st.lists(st.sampled_from(["B", "F"]), max_size=3))))
        if kind == "v":
            return dg.Vertical(build(depth - 1), build(depth - 1))
        return dg.Horizontal(build(depth - 1), build(depth - 1))

    d = build(3)
    assert from_sexpr(to_sexpr(d)) == d


def test_sexpr_parse_errors():
    for bad in ["", "(v f)", "(h f g h)", "(id (v f g))", "(q f g)", "f g", "(v f g"]:
        with pytest.raises(ValueError):
            from_sexpr(bad)
