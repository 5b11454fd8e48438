"""End-to-end acceptance checks. Each test pins one headline capability with
an independent oracle and a wall-clock budget."""

import json
import time

from click.testing import CliRunner

import wreathforge as wf
import wreathforge.catalog as cat
from wreathforge.cli import main as cli_main
from wreathforge.product import build_product


class _Budget:
    def __init__(self, seconds):
        self.seconds = seconds

    def __enter__(self):
        self.start = time.monotonic()
        return self

    def __exit__(self, *exc):
        elapsed = time.monotonic() - self.start
        assert elapsed < self.seconds, f"took {elapsed:.1f}s, budget {self.seconds}s"
        return False


def _brute_force_cocycle(fs, sigma, n, mul):
    """Independent loop: sigma(g,h) sigma(gh,k) == sigma(h,k) sigma(g,hk)
    over all n^3 triples, reading sigma off the 1 x n^2 matrix."""
    val = lambda g, h: sigma[0, g * n + h]
    for g in range(n):
        for h in range(n):
            for k in range(n):
                if val(g, h) * val(mul(g, h), k) != val(h, k) * val(g, mul(h, k)):
                    return False
    return True


def test_cocycle_verdict_matches_brute_force(Q):
    with _Budget(1):
        m = wf.example("twisted-group-algebra-q8", Q)
        for axiom_id in ("hopf.2-cocycle", "hopf.normalized-2-cocycle"):
            assert cat.check_axiom(cat.axiom_by_id(axiom_id), m).passed
        xor = lambda a, b: a ^ b
        assert _brute_force_cocycle(Q, m._matrices["sigma"], 4, xor)
        # a one-entry perturbation flips both the axiom verdict and the oracle
        bad = m.perturb("sigma", 0, 1 * 4 + 2, 1)
        assert not cat.check_axiom(cat.axiom_by_id("hopf.2-cocycle"), bad).passed
        assert not _brute_force_cocycle(Q, bad._matrices["sigma"], 4, xor)


def test_composite_multiplication_is_a_monoid(Q, F7):
    """Every library model that passes the crossed-product suite yields a
    composite (FB, mul, unit) satisfying the monoid laws, checked by plain
    matrix algebra; the cocycle model's product matches the classical
    twisted-group-algebra formula computed by an independent double loop."""
    with _Budget(5):
        for name in sorted(wf.library.EXAMPLES):
            fs = F7 if name == "trivial-c2xc2" else Q
            m = wf.example(name, fs)
            if not cat.run_suite("wreath", m).passed:
                continue
            p = build_product(m)
            mul, unit = p.nabla.entries, p.eta.entries
            n = p.FB.dim
            left = fs.matmul(mul, fs.kron(mul, fs.eye(n)))
            right = fs.matmul(mul, fs.kron(fs.eye(n), mul))
            assert fs.mats_equal(left, right), name
            assert fs.mats_equal(fs.matmul(mul, fs.kron(unit, fs.eye(n))),
                                 fs.eye(n)), name
            assert fs.mats_equal(fs.matmul(mul, fs.kron(fs.eye(n), unit)),
                                 fs.eye(n)), name

        m = wf.example("twisted-group-algebra-q8", Q)
        nabla = build_product(m).nabla.entries
        table = wf.quaternion_cocycle()
        for g in range(4):
            for h in range(4):
                for k in range(4):
                    want = Q.of_int(table[g][h]) if k == g ^ h else Q.zero()
                    assert nabla[k, g * 4 + h] == want


def test_sign_action_model_full_classification(Q):
    with _Budget(5):
        m = wf.radford_h4(Q)
        r = wf.classify(m)
        assert str(r.signature) == "((1,0),0),((1,0),0)"
        assert r.theorem_applies
        assert build_product(m).check_tau_bimonad().passed
        lf = m.linear_map("lambda_F")
        lrad = m.linear_map("lambda_rad")
        assert Q.mats_equal(lf.entries, lrad.entries)
        assert cat.run_suite("lambda-distributive", m).passed


def test_trivalent_models_yield_composite_bimonads(Q, F7):
    """The composite of each built-in three-valent model is a bimonad with
    crossing, over the rationals and over F_7, including the four-wire
    compatibility identity on the doubled space."""
    with _Budget(60):
        for name in ("trivial", "smash-product-s3", "radford-h4",
                     "bicrossproduct-s3"):
            for fs in (Q, F7):
                m = wf.example(name, fs)
                for suite in ("hopf-datum", "ybe", "naturality"):
                    rep = cat.run_suite(suite, m)
                    assert rep.passed, (name, fs, suite)
                rep = build_product(m).check_tau_bimonad()
                assert rep.passed, (name, fs)
                biprod = next(r for r in rep.results
                              if r.axiom_id == "fb.biproduct")
                assert biprod.passed
                assert biprod.eval_dims == (m.B.dim * m.F.dim) ** 4


def test_cocycle_model_is_a_wreath_until_crossing_breaks(Q):
    with _Budget(5):
        m = wf.example("twisted-group-algebra-q8", Q)
        assert cat.run_suite("wreath", m).passed
        bad = m.perturb("tau_FF", 0, 1, 1)
        assert not cat.check_axiom(cat.axiom_by_id("ybe.ff"), bad).passed
        rep = cat.run_suite("wreath", bad)
        assert not rep.passed
        assert len(rep.failures) >= 1


def test_mirror_verdicts_coincide(Q, F7):
    """For every axiom and every library model the direct and mirrored
    evaluations agree, pass or fail. The dim 4/4 model runs over F_7 where
    exact machine-word arithmetic keeps the sweep fast."""
    with _Budget(60):
        for name in sorted(wf.library.EXAMPLES):
            fs = F7 if name == "trivial-c2xc2" else Q
            m = wf.example(name, fs)
            for a in cat.catalog():
                direct = cat.check_axiom(a, m)
                mirrored = cat.check_axiom(a, m, use_mirror=True)
                assert direct.verdict == mirrored.verdict, (name, a.id)


def test_alpha_partner_verdicts_pair_up(Q, F7):
    with _Budget(10):
        for name in ("trivial", "trivial-c2xc2", "smash-product-s3",
                     "radford-h4", "bicrossproduct-s3"):
            fs = F7 if name == "trivial-c2xc2" else Q
            m = wf.example(name, fs)
            flags = m.triviality_flags()
            assert flags[2] == 0 and flags[5] == 0
            for a_id, b_id in cat.ALPHA_PARTNERS.items():
                va = cat.check_axiom(cat.axiom_by_id(a_id), m).verdict
                vb = cat.check_axiom(cat.axiom_by_id(b_id), m).verdict
                assert va == vb, (name, a_id, b_id)


def test_cli_full_sweep_dim_four(tmp_path):
    """Full catalog on a dim 4 / dim 4 model over F_7 via the CLI, within the
    default intermediate-dimension cap of 2^20."""
    with _Budget(60):
        runner = CliRunner()
        res = runner.invoke(cli_main,
                            ["examples", "emit", "trivial-c2xc2",
                             "--field", "fp:7"])
        assert res.exit_code == 0
        path = tmp_path / "model.json"
        path.write_text(res.output)
        res = runner.invoke(cli_main,
                            ["check", str(path), "--format", "json"])
        assert res.exit_code == 0, res.output
        doc = json.loads(res.output)
        axioms = [a for s in doc["suites"] for a in s["axioms"]]
        assert len(axioms) == 167
        assert all(a["verdict"] == "pass" for a in axioms)
        assert max(a["eval_dims"] for a in axioms) <= 1 << 20
