"""The identity catalog: every law is a pair of diagrams over the generator
vocabulary, organized into suites, plus the defining diagrams of the derived
generators and the inlined product-level composites.

Composite product 2-cells (the wreath multiplication, comultiplication and the
composite crossing on the tensor square) never appear as stored generators:
they are spliced into axioms as diagram macros, so evaluation stays in the
apply-style regime and no square matrix on a product word is materialized.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache

from .diagram import Diagram, evaluate, gen, horiz, ident, mirror, vert
from .exact import first_difference

CATALOG_VERSION = "1"

# shorthand diagram atoms
mB, uB, cB, eB = gen("mul_B"), gen("unit_B"), gen("comul_B"), gen("counit_B")
mF, uF, cF, eF = gen("mul_F"), gen("unit_F"), gen("comul_F"), gen("counit_F")
act, ract = gen("left_action"), gen("right_action")
rco, lco = gen("right_coaction"), gen("left_coaction")
sg, rho = gen("sigma"), gen("rho_prime")
tBF, tFB = gen("tau_BF"), gen("tau_FB")
tBB, tFF = gen("tau_BB"), gen("tau_FF")
psi, phi = gen("psi"), gen("phi_prime")
muM, etaM = gen("mu_M"), gen("eta_M")
dC, eC = gen("delta_C_prime"), gen("epsilon_C_prime")
lB, lF = gen("lambda_B"), gen("lambda_F")
lR = gen("lambda_rad")
lL, lRt = gen("lambda_left_B"), gen("lambda_right_B")
iB, iF = ident("B"), ident("F")


# -- derived generator definitions (evaluation order matters) ----------------

DERIVED_DEFINITIONS: dict[str, Diagram] = {
    # psi: BF -> FB, the crossing built from both actions:
    # (act x ract) . (id tau_BF id) . (comul_B x comul_F)
    "psi": vert(
        horiz(cB, cF),
        horiz(iB, tBF, iF),
        horiz(act, ract),
    ),
    # phi': FB -> BF, the co-crossing built from both coactions.
    "phi_prime": vert(
        horiz(lco, rco),
        horiz(iB, tFB, iF),
        horiz(mB, mF),
    ),
    # mu_M: FF -> FB, the twisted multiplication cell with cocycle tail.
    "mu_M": vert(
        horiz(cF, cF),
        horiz(iF, lco, iF, iF),
        horiz(iF, iB, tFF, iF),
        horiz(iF, act, iF, iF),
        horiz(mF, sg),
    ),
    "eta_M": horiz(uF, uB),
    # delta_C': FB -> BB, the twisted comultiplication cell with cycle head.
    "delta_C_prime": vert(
        horiz(rho, cB),
        horiz(iB, iB, rco, iB),
        horiz(iB, tBB, iF, iB),
        horiz(iB, iB, ract, iB),
        horiz(mB, mB),
    ),
    "epsilon_C_prime": horiz(eF, eB),
    # lambda_B: BB -> BB, right-handed entwining through the right coaction.
    "lambda_B": vert(
        horiz(iB, cB),
        horiz(iB, rco, iB),
        horiz(tBB, iF, iB),
        horiz(iB, ract, iB),
        horiz(iB, mB),
    ),
    # lambda_F: FF -> FF, left-handed entwining through the left coaction.
    "lambda_F": vert(
        horiz(cF, iF),
        horiz(iF, lco, iF),
        horiz(iF, iB, tFF),
        horiz(iF, act, iF),
        horiz(mF, iF),
    ),
    # Same linear map as lambda_F, nested as a conjugated fusion core.
    "lambda_rad": vert(
        horiz(cF, iF),
        horiz(
            iF,
            vert(horiz(lco, iF), horiz(iB, tFF), horiz(act, iF)),
        ),
        horiz(mF, iF),
    ),
    # Plain crossed shuffles of B against itself.
    "lambda_left_B": vert(horiz(cB, iB), horiz(iB, tBB), horiz(mB, iB)),
    "lambda_right_B": vert(horiz(iB, cB), horiz(tBB, iB), horiz(iB, mB)),
}


# -- product-level macros ----------------------------------------------------

def nabla_diagram() -> Diagram:
    """Multiplication on the composite FB, domain FBFB."""
    return vert(
        horiz(iF, psi, iB),
        horiz(muM, mB),
        horiz(iF, mB),
    )


def delta_diagram() -> Diagram:
    """Comultiplication on the composite FB, codomain FBFB."""
    return vert(
        horiz(cF, iB),
        horiz(cF, dC),
        horiz(iF, phi, iB),
    )


def tau_fbfb_diagram() -> Diagram:
    """Composite crossing FBFB -> FBFB assembled from the four small ones."""
    return vert(
        horiz(iF, tBF, iB),
        horiz(tFF, tBB),
        horiz(iF, tFB, iB),
    )


def eta_fb_diagram() -> Diagram:
    return horiz(uF, uB)


def eps_fb_diagram() -> Diagram:
    return horiz(eF, eB)


# corner projections of the product word FBFB
_O = {
    1: horiz(eF, iB, iF, eB),  # FBFB -> BF
    2: horiz(eF, iB, eF, iB),  # FBFB -> BB
    3: horiz(iF, eB, iF, eB),  # FBFB -> FF
}
_I = {
    1: horiz(uF, iB, iF, uB),  # BF -> FBFB
    2: horiz(iF, uB, iF, uB),  # FF -> FBFB
    3: horiz(uF, iB, uF, iB),  # BB -> FBFB
}


def biproduct_sides() -> tuple[Diagram, Diagram]:
    """Both sides of the bimonad compatibility on the product word FBFB."""
    nabla, delta, tau = nabla_diagram(), delta_diagram(), tau_fbfb_diagram()
    lhs = vert(nabla, delta)
    rhs = vert(
        horiz(delta, delta),
        horiz(iF, iB, tau, iF, iB),
        horiz(nabla, nabla),
    )
    return lhs, rhs


def corner_identity(i: int, j: int) -> tuple[Diagram, Diagram]:
    """The biproduct identity squeezed through corner (O_i, I_j)."""
    lhs, rhs = biproduct_sides()
    return vert(_I[j], lhs, _O[i]), vert(_I[j], rhs, _O[i])


# -- the catalog -------------------------------------------------------------

@dataclass(frozen=True)
class Axiom:
    id: str
    suite: str
    lhs: Diagram
    rhs: Diagram
    note: str
    hypotheses: tuple[str, ...] = ()


def _base_axioms() -> list[Axiom]:
    A = lambda i, l, r, n: Axiom(i, "base", l, r, n)
    return [
        A("base.assoc-B", vert(horiz(mB, iB), mB), vert(horiz(iB, mB), mB),
          "multiplication of B is associative"),
        A("base.unit-left-B", vert(horiz(uB, iB), mB), iB,
          "unit of B is a left unit"),
        A("base.unit-right-B", vert(horiz(iB, uB), mB), iB,
          "unit of B is a right unit"),
        A("base.coassoc-F", vert(cF, horiz(cF, iF)), vert(cF, horiz(iF, cF)),
          "comultiplication of F is coassociative"),
        A("base.counit-left-F", vert(cF, horiz(eF, iF)), iF,
          "counit of F is a left counit"),
        A("base.counit-right-F", vert(cF, horiz(iF, eF)), iF,
          "counit of F is a right counit"),
        A("base.eta-eps-B", vert(uB, eB), ident(),
          "counit of the unit of B is 1"),
        A("base.eta-eps-F", vert(uF, eF), ident(),
          "counit of the unit of F is 1"),
        A("base.eps-mul-B", vert(mB, eB), horiz(eB, eB),
          "counit of B is multiplicative"),
        A("base.comul-eta-F", vert(uF, cF), horiz(uF, uF),
          "unit of F is group-like for the comultiplication"),
        A("base.comul-eta-B", vert(uB, cB), horiz(uB, uB),
          "unit of B is group-like for the pre-comultiplication"),
        A("base.eps-mul-F", vert(mF, eF), horiz(eF, eF),
          "counit of F is multiplicative for the pre-multiplication"),
    ]


_TAU_CASES = {
    "bf": (tBF, "B", "F"),
    "fb": (tFB, "F", "B"),
    "bb": (tBB, "B", "B"),
    "ff": (tFF, "F", "F"),
}


def _structure(label: str):
    if label == "B":
        return mB, uB, cB, eB, ident("B")
    return mF, uF, cF, eF, ident("F")


def _tau_axioms() -> list[Axiom]:
    out = []
    for key, (tau, X, Y) in _TAU_CASES.items():
        mX, uX, cX, eX, iX = _structure(X)
        mY, uY, cY, eY, iY = _structure(Y)
        s = f"tau.{key}"
        note = f"crossing {X}{Y} -> {Y}{X}"
        out += [
            Axiom(f"{s}-left-mul", "tau-distributive",
                  vert(horiz(mX, iY), tau),
                  vert(horiz(iX, tau), horiz(tau, iX), horiz(iY, mX)),
                  f"{note}: compatible with multiplication of {X}"),
            Axiom(f"{s}-left-unit", "tau-distributive",
                  vert(horiz(uX, iY), tau), horiz(iY, uX),
                  f"{note}: compatible with unit of {X}"),
            Axiom(f"{s}-right-mul", "tau-distributive",
                  vert(horiz(iX, mY), tau),
                  vert(horiz(tau, iY), horiz(iY, tau), horiz(mY, iX)),
                  f"{note}: compatible with multiplication of {Y}"),
            Axiom(f"{s}-right-unit", "tau-distributive",
                  vert(horiz(iX, uY), tau), horiz(uY, iX),
                  f"{note}: compatible with unit of {Y}"),
            Axiom(f"{s}-left-comul", "tau-distributive",
                  vert(horiz(iX, cY), horiz(tau, iY), horiz(iY, tau)),
                  vert(tau, horiz(cY, iX)),
                  f"{note}: compatible with comultiplication of {Y}"),
            Axiom(f"{s}-left-counit", "tau-distributive",
                  vert(tau, horiz(eY, iX)), horiz(iX, eY),
                  f"{note}: compatible with counit of {Y}"),
            Axiom(f"{s}-right-comul", "tau-distributive",
                  vert(horiz(cX, iY), horiz(iX, tau), horiz(tau, iX)),
                  vert(tau, horiz(iY, cX)),
                  f"{note}: compatible with comultiplication of {X}"),
            Axiom(f"{s}-right-counit", "tau-distributive",
                  vert(tau, horiz(iY, eX)), horiz(eX, iY),
                  f"{note}: compatible with counit of {X}"),
        ]
    return out


def _wreath_axioms() -> list[Axiom]:
    A = lambda i, l, r, n: Axiom(i, "wreath", l, r, n)
    return [
        A("wreath.psi-mul",
          vert(horiz(iB, psi), horiz(psi, iB), horiz(iF, mB)),
          vert(horiz(mB, iF), psi),
          "crossing psi is a distributive law over the multiplication of B"),
        A("wreath.psi-unit",
          vert(horiz(uB, iF), psi), horiz(iF, uB),
          "crossing psi is a distributive law over the unit of B"),
        A("wreath.phi-comul",
          vert(horiz(cF, iB), horiz(iF, phi), horiz(phi, iF)),
          vert(phi, horiz(iB, cF)),
          "co-crossing phi' is a distributive law over the comultiplication of F"),
        A("wreath.phi-counit",
          vert(phi, horiz(iB, eF)), horiz(eF, iB),
          "co-crossing phi' is a distributive law over the counit of F"),
        A("wreath.cell-mu",
          vert(horiz(psi, iF), horiz(iF, psi), horiz(muM, iB), horiz(iF, mB)),
          vert(horiz(iB, muM), horiz(psi, iB), horiz(iF, mB)),
          "the twisted multiplication cell commutes with psi in the wreath sense"),
        A("wreath.cell-eta",
          vert(horiz(etaM, iB), horiz(iF, mB)),
          vert(horiz(iB, etaM), horiz(psi, iB), horiz(iF, mB)),
          "the unit cell commutes with psi in the wreath sense"),
        A("wreath.cell-delta",
          vert(horiz(cF, iB), horiz(iF, phi), horiz(dC, iF)),
          vert(horiz(cF, iB), horiz(iF, dC), horiz(phi, iB), horiz(iB, phi)),
          "the twisted comultiplication cell commutes with phi' in the co-wreath sense"),
        A("wreath.cell-epsilon",
          vert(horiz(cF, iB), horiz(iF, phi), horiz(eC, iF)),
          vert(horiz(cF, iB), horiz(iF, eC)),
          "the counit cell commutes with phi' in the co-wreath sense"),
        A("wreath.monad-assoc",
          vert(horiz(iF, muM), horiz(muM, iB), horiz(iF, mB)),
          vert(horiz(muM, iF), horiz(iF, psi), horiz(muM, iB), horiz(iF, mB)),
          "wreath-product multiplication restricted to F is associative"),
        A("wreath.monad-unit-left",
          vert(horiz(etaM, iF), horiz(iF, psi), horiz(muM, iB), horiz(iF, mB)),
          horiz(iF, uB),
          "wreath unit cell is a left unit for the twisted multiplication"),
        A("wreath.monad-unit-right",
          vert(horiz(iF, etaM), horiz(muM, iB), horiz(iF, mB)),
          horiz(iF, uB),
          "wreath unit cell is a right unit for the twisted multiplication"),
        A("wreath.comonad-coassoc",
          vert(horiz(cF, iB), horiz(iF, dC), horiz(phi, iB), horiz(iB, dC)),
          vert(horiz(cF, iB), horiz(iF, dC), horiz(dC, iB)),
          "co-wreath comultiplication restricted to B is coassociative"),
        A("wreath.comonad-counit-left",
          vert(horiz(cF, iB), horiz(iF, dC), horiz(phi, iB), horiz(iB, eC)),
          horiz(eF, iB),
          "co-wreath counit cell is a left counit for the twisted comultiplication"),
        A("wreath.comonad-counit-right",
          vert(horiz(cF, iB), horiz(iF, dC), horiz(eC, iB)),
          horiz(eF, iB),
          "co-wreath counit cell is a right counit for the twisted comultiplication"),
        A("wreath.trivial-phi-eps",
          vert(phi, horiz(eB, iF)), horiz(iF, eB),
          "counit of B absorbs the co-crossing"),
        A("wreath.trivial-psi-eta",
          vert(horiz(iB, uF), psi), horiz(uF, iB),
          "unit of F absorbs the crossing"),
    ]


def _clean_identity_3() -> tuple[Diagram, Diagram]:
    """Comultiplicativity of the left action, fully decoded form (dom BF)."""
    lhs = vert(act, cF)
    rhs = vert(
        horiz(cB, cF),
        horiz(rco, iB, iF, iF),
        horiz(iB, iF, tBF, iF),
        horiz(iB, tFF, iB, iF),
        horiz(iB, iF, iF, act),
        horiz(act, mF),
    )
    return lhs, rhs


def _clean_identity_6() -> tuple[Diagram, Diagram]:
    """Multiplicativity of the right coaction, fully decoded form (dom BB)."""
    lhs = vert(mB, rco)
    rhs = vert(
        horiz(cB, iB),
        horiz(rco, iB, rco),
        horiz(iB, iF, tBB, iF),
        horiz(iB, tFB, iB, iF),
        horiz(iB, iB, iF, act),
        horiz(mB, mF),
    )
    return lhs, rhs


def _hopf_axioms() -> list[Axiom]:
    A = lambda i, l, r, n, h=(): Axiom(i, "hopf-datum", l, r, n, h)
    c3l, c3r = _clean_identity_3()
    c6l, c6r = _clean_identity_6()
    co11 = corner_identity(1, 1)
    co21 = corner_identity(2, 1)
    co12 = corner_identity(1, 2)
    co22 = corner_identity(2, 2)
    co13 = corner_identity(1, 3)
    return [
        A("hopf.module-assoc",
          vert(horiz(mB, iF), act), vert(horiz(iB, act), act),
          "the left action of B on F is associative"),
        A("hopf.module-unit",
          vert(horiz(uB, iF), act), iF,
          "the unit of B acts as identity on F"),
        A("hopf.comodule-coassoc",
          vert(rco, horiz(rco, iF)), vert(rco, horiz(iB, cF)),
          "the right coaction of F on B is coassociative"),
        A("hopf.comodule-counit",
          vert(rco, horiz(iB, eF)), iB,
          "the counit of F collapses the right coaction"),
        A("hopf.mod-alg",
          vert(horiz(psi, iF), horiz(iF, act), mF),
          vert(horiz(iB, mF), act),
          "F is a module algebra over B through the crossing psi"),
        A("hopf.mod-alg-unit",
          vert(horiz(iB, uF), act), vert(eB, uF),
          "the left action preserves the unit of F"),
        A("hopf.comod-coalg",
          vert(cB, horiz(rco, iB), horiz(iB, phi)),
          vert(rco, horiz(cB, iF)),
          "B is a comodule coalgebra over F through the co-crossing phi'"),
        A("hopf.comod-coalg-counit",
          vert(rco, horiz(eB, iF)), vert(eB, uF),
          "the right coaction is counital against the counit of B"),
        A("hopf.weak-assoc",
          vert(horiz(iF, mF), mF),
          vert(horiz(muM, iF), horiz(iF, act), mF),
          "pre-multiplication of F is associative up to the twisted cell"),
        A("hopf.weak-unit-left",
          vert(horiz(etaM, iF), horiz(iF, act), mF), iF,
          "twisted left unit law for the pre-multiplication of F"),
        A("hopf.weak-unit-right",
          vert(horiz(iF, uF), mF), iF,
          "plain right unit law for the pre-multiplication of F"),
        A("hopf.weak-coassoc",
          vert(cB, horiz(cB, iB)),
          vert(cB, horiz(rco, iB), horiz(iB, dC)),
          "pre-comultiplication of B is coassociative up to the twisted cell"),
        A("hopf.weak-counit-left",
          vert(cB, horiz(rco, iB), horiz(iB, eC)), iB,
          "twisted left counit law for the pre-comultiplication of B"),
        A("hopf.weak-counit-right",
          vert(cB, horiz(eB, iB)), iB,
          "plain left counit law for the pre-comultiplication of B"),
        A("hopf.f-mod-alg",
          vert(horiz(iB, psi), horiz(ract, iB), mB),
          vert(horiz(mB, iF), ract),
          "B carries a right-action compatibility through the crossing psi"),
        A("hopf.f-mod-alg-unit",
          vert(horiz(uB, iF), ract), vert(eF, uB),
          "the right action preserves the unit of B"),
        A("hopf.b-comod-coalg",
          vert(cF, horiz(iF, lco), horiz(phi, iF)),
          vert(lco, horiz(iB, cF)),
          "F carries a left-coaction compatibility through the co-crossing phi'"),
        A("hopf.b-comod-coalg-counit",
          vert(lco, horiz(iB, eF)), vert(eF, uB),
          "the left coaction is counital against the counit of F"),
        A("hopf.twisted-action",
          vert(horiz(psi, iF), horiz(iF, psi), horiz(sg, iB), mB),
          vert(horiz(iB, muM), horiz(ract, iB), mB),
          "the cocycle twists the right action along the crossed multiplication"),
        A("hopf.twisted-action-unit",
          vert(horiz(vert(etaM, horiz(eF, iB)), iB), mB),
          vert(horiz(iB, etaM), horiz(ract, iB), mB),
          "unit form of the twisted-action compatibility"),
        A("hopf.twisted-coaction",
          vert(cF, horiz(iF, lco), horiz(dC, iF)),
          vert(cF, horiz(iF, rho), horiz(phi, iB), horiz(iB, phi)),
          "the cycle twists the left coaction along the crossed comultiplication"),
        A("hopf.twisted-coaction-counit",
          vert(cF, horiz(iF, lco), horiz(eC, iF)),
          vert(cF, horiz(iF, vert(horiz(iF, uB), eC))),
          "counit form of the twisted-coaction compatibility"),
        A("hopf.2-cocycle",
          vert(horiz(iF, muM), horiz(sg, iB), mB),
          vert(horiz(muM, iF), horiz(iF, psi), horiz(sg, iB), mB),
          "sigma is a 2-cocycle for the twisted multiplication"),
        A("hopf.normalized-2-cocycle",
          vert(horiz(etaM, iF), horiz(iF, psi), horiz(sg, iB), mB),
          vert(eF, uB),
          "sigma is normalized on the left against the unit cell"),
        A("hopf.normalized-2-cocycle-right",
          vert(horiz(iF, etaM), horiz(sg, iB), mB),
          vert(eF, uB),
          "sigma is normalized on the right against the unit cell"),
        A("hopf.2-cycle",
          vert(cF, horiz(iF, rho), horiz(phi, iB), horiz(iB, dC)),
          vert(cF, horiz(iF, rho), horiz(dC, iB)),
          "rho' is a 2-cycle for the twisted comultiplication"),
        A("hopf.normalized-2-cycle",
          vert(cF, horiz(iF, rho), horiz(phi, iB), horiz(iB, eC)),
          vert(eF, uB),
          "rho' is normalized on the left against the counit cell"),
        A("hopf.normalized-2-cycle-right",
          vert(cF, horiz(iF, rho), horiz(eC, iB)),
          vert(eF, uB),
          "rho' is normalized on the right against the counit cell"),
        A("hopf.epsilon-sigma",
          vert(sg, eB), horiz(eF, eF),
          "the counit of B collapses the cocycle"),
        A("hopf.unit-rho",
          vert(uF, rho), horiz(uB, uB),
          "the cycle of the unit of F is the unit square"),
        A("hopf.cor-actions-1",
          vert(psi, horiz(iF, eB)), act,
          "left corner of psi recovers the left action"),
        A("hopf.cor-actions-2",
          vert(psi, horiz(eF, iB)), ract,
          "right corner of psi recovers the right action"),
        A("hopf.cor-actions-3",
          vert(horiz(iF, uB), phi), lco,
          "left corner of phi' recovers the left coaction"),
        A("hopf.cor-actions-4",
          vert(horiz(uF, iB), phi), rco,
          "right corner of phi' recovers the right coaction"),
        A("hopf.cor-actions-5",
          vert(horiz(uB, iF), psi), horiz(iF, uB),
          "psi is unital on the B strand"),
        A("hopf.cor-actions-6",
          vert(phi, horiz(iB, eF)), horiz(eF, iB),
          "phi' is counital on the F strand"),
        A("hopf.eq-1-3-first", co11[0], co11[1],
          "corner (act side, act side) of the product bimonad compatibility"),
        A("hopf.eq-1-3-second", co21[0], co21[1],
          "corner (B output, act side) of the product bimonad compatibility"),
        A("hopf.eq-1-3-third", c3l, c3r,
          "the left action is comultiplicative up to crossings and coactions"),
        A("hopf.eq-4-6-first", co12[0], co12[1],
          "corner (act side, F input) of the product bimonad compatibility"),
        A("hopf.eq-4-6-second", co22[0], co22[1],
          "corner (B output, F input) of the product bimonad compatibility"),
        A("hopf.eq-4-6-third", c6l, c6r,
          "the right coaction is multiplicative up to crossings and actions"),
        A("hopf.proj-B-bialg",
          vert(mB, cB),
          vert(horiz(cB, iB), horiz(iB, lB), horiz(mB, iB)),
          "B is a bialgebra relative to its entwining lambda_B"),
        A("hopf.proj-F-bialg",
          vert(mF, cF),
          vert(horiz(iF, cF), horiz(lF, iF), horiz(iF, mF)),
          "F is a bialgebra relative to its entwining lambda_F"),
    ]


def _paired_axioms() -> list[Axiom]:
    A = lambda i, l, r, n: Axiom(i, "paired-wreath-extras", l, r, n)
    proj_b_rhs = vert(
        horiz(cB, cB),
        horiz(rco, iB, rco, iB),
        horiz(iB, iF, tBB, iF, iB),
        horiz(iB, tFB, iB, iF, iB),
        horiz(iB, iB, iF, psi, iB),
        horiz(iB, iB, sg, iB, iB),
        horiz(iB, iB, mB, iB),
        horiz(iB, iB, mB),
    )
    proj_f_rhs = vert(
        horiz(cF, iF, iF),
        horiz(iF, cF, iF, iF),
        horiz(iF, iF, rho, iF, iF),
        horiz(iF, phi, iB, iF, iF),
        horiz(iF, iB, iF, tBF, iF),
        horiz(iF, iB, tFF, iB, iF),
        horiz(iF, iB, iF, iF, act),
        horiz(iF, act, iF, iF),
        horiz(iF, iF, mF),
        horiz(mF, iF),
    )
    return [
        A("hopf.proj-B",
          vert(horiz(cB, iB), horiz(iB, lB)), proj_b_rhs,
          "the entwining of B expands into crossings, coactions and the cocycle"),
        A("hopf.proj-F",
          vert(horiz(lF, iF), horiz(iF, mF)), proj_f_rhs,
          "the entwining of F expands into crossings, the cycle and actions"),
        A("paired.mu-M-closed",
          muM,
          vert(horiz(iF, cF), horiz(lF, iF), horiz(iF, sg)),
          "the twisted multiplication cell factors through the entwining of F"),
        A("paired.delta-closed",
          dC,
          vert(horiz(rho, iB), horiz(iB, lB), horiz(mB, iB)),
          "the twisted comultiplication cell factors through the entwining of B"),
        A("paired.psi-unital-add-1",
          vert(psi, horiz(eF, eB)), horiz(eB, eF),
          "the crossing preserves the full counit"),
        A("paired.psi-unital-add-2",
          vert(horiz(uF, uB), phi), horiz(uB, uF),
          "the co-crossing preserves the full unit"),
    ]


def _ybe_axioms() -> list[Axiom]:
    A = lambda i, l, r, n: Axiom(i, "ybe", l, r, n)
    return [
        A("ybe.fbf",
          vert(horiz(iF, tBF), horiz(tFF, iB), horiz(iF, tFB)),
          vert(horiz(tFB, iF), horiz(iB, tFF), horiz(tBF, iF)),
          "hexagon relation on the word FBF"),
        A("ybe.bfb",
          vert(horiz(tBF, iB), horiz(iF, tBB), horiz(tFB, iB)),
          vert(horiz(iB, tFB), horiz(tBB, iF), horiz(iB, tBF)),
          "hexagon relation on the word BFB"),
        A("ybe.bff",
          vert(horiz(iB, tFF), horiz(tBF, iF), horiz(iF, tBF)),
          vert(horiz(tBF, iF), horiz(iF, tBF), horiz(tFF, iB)),
          "hexagon relation on the word BFF"),
        A("ybe.fbb",
          vert(horiz(tFB, iB), horiz(iB, tFB), horiz(tBB, iF)),
          vert(horiz(iF, tBB), horiz(tFB, iB), horiz(iB, tFB)),
          "hexagon relation on the word FBB"),
        A("ybe.bb",
          vert(horiz(tBB, iB), horiz(iB, tBB), horiz(tBB, iB)),
          vert(horiz(iB, tBB), horiz(tBB, iB), horiz(iB, tBB)),
          "braid relation for the self-crossing of B"),
        A("ybe.ff",
          vert(horiz(tFF, iF), horiz(iF, tFF), horiz(tFF, iF)),
          vert(horiz(iF, tFF), horiz(tFF, iF), horiz(iF, tFF)),
          "braid relation for the self-crossing of F"),
    ]


def _naturality_axioms() -> list[Axiom]:
    A = lambda i, l, r, n: Axiom(i, "naturality", l, r, n)
    return [
        A("nat.rm",
          vert(horiz(ract, iF), tBF),
          vert(horiz(iB, tFF), horiz(tBF, iF), horiz(iF, ract)),
          "the right action slides through the BF crossing"),
        A("nat.rm-var",
          vert(horiz(ract, iB), tBB),
          vert(horiz(iB, tFB), horiz(tBB, iF), horiz(iB, ract)),
          "the right action slides through the BB crossing"),
        A("nat.lm",
          vert(horiz(iB, act), tBF),
          vert(horiz(tBB, iF), horiz(iB, tBF), horiz(act, iB)),
          "the left action slides through the BF crossing"),
        A("nat.lm-var",
          vert(horiz(iF, act), tFF),
          vert(horiz(tFB, iF), horiz(iB, tFF), horiz(act, iF)),
          "the left action slides through the FF crossing"),
        A("nat.sigma",
          vert(horiz(iF, tFF), horiz(tFF, iF), horiz(iF, sg)),
          vert(horiz(sg, iF), tBF),
          "the cocycle slides through the FF crossing"),
        A("nat.sigma-var",
          vert(horiz(iF, tFB), horiz(tFB, iF), horiz(iB, sg)),
          vert(horiz(sg, iB), tBB),
          "the cocycle slides through the FB crossing"),
        A("nat.lcm",
          vert(tFB, horiz(iB, lco)),
          vert(horiz(lco, iB), horiz(iB, tFB), horiz(tBB, iF)),
          "the left coaction slides through the FB crossing"),
        A("nat.lcm-var",
          vert(tFF, horiz(iF, lco)),
          vert(horiz(lco, iF), horiz(iB, tFF), horiz(tBF, iF)),
          "the left coaction slides through the FF crossing"),
        A("nat.rcm",
          vert(tFB, horiz(rco, iF)),
          vert(horiz(iF, rco), horiz(tFB, iF), horiz(iB, tFF)),
          "the right coaction slides through the FB crossing"),
        A("nat.rcm-var",
          vert(tBB, horiz(rco, iB)),
          vert(horiz(iB, rco), horiz(tBB, iF), horiz(iB, tBF)),
          "the right coaction slides through the BB crossing"),
        A("nat.rho",
          vert(horiz(rho, iB), horiz(iB, tBB), horiz(tBB, iB)),
          vert(tFB, horiz(iB, rho)),
          "the cycle slides through the FB crossing"),
        A("nat.rho-var",
          vert(horiz(rho, iF), horiz(iB, tBF), horiz(tBF, iB)),
          vert(tFF, horiz(iF, rho)),
          "the cycle slides through the FF crossing"),
    ]


def _fb_axioms() -> list[Axiom]:
    A = lambda i, l, r, n: Axiom(i, "tau-bimonad-FB", l, r, n)
    N, D, T = nabla_diagram(), delta_diagram(), tau_fbfb_diagram()
    E, X = eta_fb_diagram(), eps_fb_diagram()
    iP = ident("F", "B")
    big = biproduct_sides()
    return [
        A("fb.assoc",
          vert(horiz(N, iP), N), vert(horiz(iP, N), N),
          "the product multiplication on FB is associative"),
        A("fb.unit-left", vert(horiz(E, iP), N), iP,
          "the product unit is a left unit"),
        A("fb.unit-right", vert(horiz(iP, E), N), iP,
          "the product unit is a right unit"),
        A("fb.coassoc",
          vert(D, horiz(D, iP)), vert(D, horiz(iP, D)),
          "the product comultiplication on FB is coassociative"),
        A("fb.counit-left", vert(D, horiz(X, iP)), iP,
          "the product counit is a left counit"),
        A("fb.counit-right", vert(D, horiz(iP, X)), iP,
          "the product counit is a right counit"),
        A("fb.eps-nabla", vert(N, X), horiz(X, X),
          "the product counit is multiplicative"),
        A("fb.delta-eta", vert(E, D), horiz(E, E),
          "the product unit is group-like"),
        A("fb.eps-eta", vert(E, X), ident(),
          "counit of the product unit is 1"),
        A("fb.biproduct", big[0], big[1],
          "multiplication and comultiplication on FB entwine through the composite crossing"),
        A("fb.tau-left-mul",
          vert(horiz(N, iP), T),
          vert(horiz(iP, T), horiz(T, iP), horiz(iP, N)),
          "composite crossing is compatible with the product multiplication (left)"),
        A("fb.tau-left-unit",
          vert(horiz(E, iP), T), horiz(iP, E),
          "composite crossing is compatible with the product unit (left)"),
        A("fb.tau-right-mul",
          vert(horiz(iP, N), T),
          vert(horiz(T, iP), horiz(iP, T), horiz(N, iP)),
          "composite crossing is compatible with the product multiplication (right)"),
        A("fb.tau-right-unit",
          vert(horiz(iP, E), T), horiz(E, iP),
          "composite crossing is compatible with the product unit (right)"),
        A("fb.tau-left-comul",
          vert(horiz(iP, D), horiz(T, iP), horiz(iP, T)),
          vert(T, horiz(D, iP)),
          "composite crossing is compatible with the product comultiplication (left)"),
        A("fb.tau-left-counit",
          vert(T, horiz(X, iP)), horiz(iP, X),
          "composite crossing is compatible with the product counit (left)"),
        A("fb.tau-right-comul",
          vert(horiz(D, iP), horiz(iP, T), horiz(T, iP)),
          vert(T, horiz(iP, D)),
          "composite crossing is compatible with the product comultiplication (right)"),
        A("fb.tau-right-counit",
          vert(T, horiz(iP, X)), horiz(X, iP),
          "composite crossing is compatible with the product counit (right)"),
    ]


def _lambda_axioms() -> list[Axiom]:
    A = lambda i, l, r, n: Axiom(i, "lambda-distributive", l, r, n)
    out = []
    for key, lam in (("F", lF), ("rad", lR)):
        out += [
            A(f"lambda.{key}-mul",
              vert(horiz(mF, iF), lam),
              vert(horiz(iF, lam), horiz(lam, iF), horiz(iF, mF)),
              "the entwining of F is compatible with its multiplication"),
            A(f"lambda.{key}-unit",
              vert(horiz(uF, iF), lam), horiz(iF, uF),
              "the entwining of F is compatible with its unit"),
            A(f"lambda.{key}-comul",
              vert(horiz(iF, cF), horiz(lam, iF), horiz(iF, lam)),
              vert(lam, horiz(cF, iF)),
              "the entwining of F is compatible with its comultiplication"),
            A(f"lambda.{key}-counit",
              vert(lam, horiz(eF, iF)), horiz(iF, eF),
              "the entwining of F is compatible with its counit"),
        ]
    out.append(A("lambda.rad-equals-F", lR, lF,
                 "both nestings of the F entwining give the same linear map"))
    out += [
        A("lambda.B-mul",
          vert(horiz(iB, mB), lB),
          vert(horiz(lB, iB), horiz(iB, lB), horiz(mB, iB)),
          "the entwining of B is compatible with its multiplication"),
        A("lambda.B-unit",
          vert(horiz(iB, uB), lB), horiz(uB, iB),
          "the entwining of B is compatible with its unit"),
        A("lambda.B-comul",
          vert(horiz(cB, iB), horiz(iB, lB), horiz(lB, iB)),
          vert(lB, horiz(iB, cB)),
          "the entwining of B is compatible with its comultiplication"),
        A("lambda.B-counit",
          vert(lB, horiz(iB, eB)), horiz(eB, iB),
          "the entwining of B is compatible with its counit"),
        A("lambda.left-B-mul",
          vert(horiz(mB, iB), lL),
          vert(horiz(iB, lL), horiz(lL, iB), horiz(iB, mB)),
          "left shuffle of B against itself is compatible with its multiplication"),
        A("lambda.left-B-unit",
          vert(horiz(uB, iB), lL), horiz(iB, uB),
          "left shuffle of B against itself is compatible with its unit"),
        A("lambda.left-B-comul",
          vert(horiz(iB, cB), horiz(lL, iB), horiz(iB, lL)),
          vert(lL, horiz(cB, iB)),
          "left shuffle of B against itself is compatible with its comultiplication"),
        A("lambda.left-B-counit",
          vert(lL, horiz(eB, iB)), horiz(iB, eB),
          "left shuffle of B against itself is compatible with its counit"),
        A("lambda.right-B-mul",
          vert(horiz(iB, mB), lRt),
          vert(horiz(lRt, iB), horiz(iB, lRt), horiz(mB, iB)),
          "right shuffle of B against itself is compatible with its multiplication"),
        A("lambda.right-B-unit",
          vert(horiz(iB, uB), lRt), horiz(uB, iB),
          "right shuffle of B against itself is compatible with its unit"),
        A("lambda.right-B-comul",
          vert(horiz(cB, iB), horiz(iB, lRt), horiz(lRt, iB)),
          vert(lRt, horiz(iB, cB)),
          "right shuffle of B against itself is compatible with its comultiplication"),
        A("lambda.right-B-counit",
          vert(lRt, horiz(iB, eB)), horiz(eB, iB),
          "right shuffle of B against itself is compatible with its counit"),
    ]
    return out


@lru_cache(maxsize=1)
def catalog() -> tuple[Axiom, ...]:
    axioms = (
        _base_axioms()
        + _tau_axioms()
        + _wreath_axioms()
        + _hopf_axioms()
        + _paired_axioms()
        + _ybe_axioms()
        + _naturality_axioms()
        + _fb_axioms()
        + _lambda_axioms()
    )
    ids = [a.id for a in axioms]
    assert len(ids) == len(set(ids)), "duplicate axiom ids"
    return tuple(axioms)


def axiom_by_id(axiom_id: str) -> Axiom:
    for a in catalog():
        if a.id == axiom_id:
            return a
    raise KeyError(axiom_id)


def suites() -> tuple[str, ...]:
    seen = []
    for a in catalog():
        if a.suite not in seen:
            seen.append(a.suite)
    return tuple(seen)


# Axioms that hold automatically once both twist cells are trivial.
TRIVIALITY_COLLAPSE: frozenset[str] = frozenset({
    "hopf.2-cocycle",
    "hopf.normalized-2-cocycle",
    "hopf.normalized-2-cocycle-right",
    "hopf.2-cycle",
    "hopf.normalized-2-cycle",
    "hopf.normalized-2-cycle-right",
    "hopf.eq-4-6-second",
})

# Axioms exchanged by the left-right mirror symmetry of the datum.
_ALPHA_BASE = {
    "hopf.mod-alg": "hopf.f-mod-alg",
    "hopf.mod-alg-unit": "hopf.f-mod-alg-unit",
    "hopf.comod-coalg": "hopf.b-comod-coalg",
    "hopf.comod-coalg-counit": "hopf.b-comod-coalg-counit",
    "hopf.eq-1-3-first": "hopf.eq-1-3-first",
    "hopf.eq-1-3-second": "hopf.eq-1-3-third",
    "hopf.eq-4-6-first": "hopf.eq-4-6-third",
    "hopf.proj-B-bialg": "hopf.proj-F-bialg",
}
ALPHA_PARTNERS: dict[str, str] = {
    **_ALPHA_BASE,
    **{v: k for k, v in _ALPHA_BASE.items()},
}


# -- checking ----------------------------------------------------------------

@dataclass(frozen=True)
class CheckResult:
    axiom_id: str
    verdict: str  # "pass" | "fail" | "skipped"
    counterexample: dict | None = None
    eval_dims: int = 0
    reason: str | None = None

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"


@dataclass(frozen=True)
class SuiteReport:
    suite: str
    results: tuple[CheckResult, ...] = dc_field(default=())

    @property
    def passed(self) -> bool:
        return all(r.verdict != "fail" for r in self.results)

    @property
    def failures(self) -> tuple[CheckResult, ...]:
        return tuple(r for r in self.results if r.verdict == "fail")


def _max_word_dim(d: Diagram, ctx) -> int:
    from .diagram import Generator, Horizontal, Identity, Vertical, infer_boundary

    dom, cod = infer_boundary(d, ctx.signatures)
    best = max(ctx.word_dim(dom), ctx.word_dim(cod))
    if isinstance(d, Vertical):
        best = max(best, _max_word_dim(d.top, ctx), _max_word_dim(d.bottom, ctx))
    elif isinstance(d, Horizontal):
        best = max(best, _max_word_dim(d.left, ctx), _max_word_dim(d.right, ctx))
    return best


def check_axiom(axiom: Axiom, model, ctx=None, use_mirror: bool = False) -> CheckResult:
    """Evaluate both sides of one axiom on a model; exact comparison."""
    from .diagram import (
        BoundaryMismatch,
        DimensionCapExceeded,
        MissingMirrorPartner,
        UnknownGenerator,
    )

    if ctx is None:
        ctx = model.mirror_context() if use_mirror else model.eval_context()
    lhs, rhs = axiom.lhs, axiom.rhs
    if use_mirror:
        lhs, rhs = mirror(lhs), mirror(rhs)
    try:
        left = evaluate(lhs, ctx)
        right = evaluate(rhs, ctx)
        dims = max(_max_word_dim(lhs, ctx), _max_word_dim(rhs, ctx))
    except (BoundaryMismatch, DimensionCapExceeded, UnknownGenerator,
            MissingMirrorPartner) as e:
        return CheckResult(axiom.id, "skipped", reason=f"{type(e).__name__}: {e}")
    if (left.dom_names, left.cod_names) != (right.dom_names, right.cod_names):
        return CheckResult(
            axiom.id, "skipped",
            reason=f"boundary mismatch between sides: "
                   f"{(left.dom_names, left.cod_names)} vs "
                   f"{(right.dom_names, right.cod_names)}",
        )
    diff = first_difference(left, right)
    if diff is None:
        return CheckResult(axiom.id, "pass", eval_dims=dims)
    col, row = diff
    fs = ctx.field
    counter = {
        "column": col,
        "row": row,
        "lhs_entry": fs.format_scalar(left.entries[row, col]),
        "rhs_entry": fs.format_scalar(right.entries[row, col]),
        "dom": list(left.dom_names),
        "cod": list(left.cod_names),
    }
    return CheckResult(axiom.id, "fail", counterexample=counter, eval_dims=dims)


def run_suite(name: str, model, use_mirror: bool = False) -> SuiteReport:
    axioms = [a for a in catalog() if a.suite == name]
    if not axioms:
        raise KeyError(f"unknown suite {name!r}")
    ctx = model.mirror_context() if use_mirror else model.eval_context()
    results = tuple(
        check_axiom(a, model, ctx=ctx, use_mirror=use_mirror) for a in axioms
    )
    return SuiteReport(name, results)


def run_all(model, suite_names=None, use_mirror: bool = False) -> list[SuiteReport]:
    names = suite_names if suite_names is not None else suites()
    return [run_suite(n, model, use_mirror=use_mirror) for n in names]


def report_json(model, suite_reports) -> dict:
    return {
        "catalog_version": CATALOG_VERSION,
        "model_hash": model.model_hash(),
        "suites": [
            {
                "name": rep.suite,
                "passed": rep.passed,
                "axioms": [
                    {
                        "id": r.axiom_id,
                        "verdict": r.verdict,
                        **(
                            {"eval_dims": r.eval_dims}
                            if r.eval_dims is not None
                            else {}
                        ),
                        **(
                            {"counterexample": r.counterexample}
                            if r.counterexample is not None
                            else {}
                        ),
                        **({"reason": r.reason} if r.reason is not None else {}),
                    }
                    for r in rep.results
                ],
            }
            for rep in suite_reports
        ],
    }
