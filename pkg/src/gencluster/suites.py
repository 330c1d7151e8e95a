"""Named verification suites shared by the command line and the acceptance tests.

A suite maps ``(n, points, rng_seed)`` to a list of :class:`Check`. The
``negative-controls`` suite reruns the others on corrupted input; each of its
checks passes exactly when the corrupted run fails.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction

import numpy as np

from . import identities as ids
from . import mutation_walks as mw
from . import poisson as ps
from .double_seed.dual import build_dual_seed
from .double_seed.functions import Context, label_name
from .double_seed.sampling import sample_point, sample_points
from .double_seed.seed import SPECIAL, build_initial_seed, evaluate_seed
from .double_seed.weights import toric_weights
from .exact_core import equal
from .gcs_core import EvaluatedSeed, make_seed
from .normal_form_checks import check_formulas, check_round_trips
from .normal_forms import gauss
from .seed_checks import check_rank_and_isolated, check_toric_annihilation, check_torus_action


@dataclass
class Check:
    suite: str
    name: str
    claim: str
    passed: bool
    report: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"suite": self.suite, "check": self.name, "claim": self.claim, "passed": self.passed,
                "report": self.report}

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}  {self.suite}/{self.name}  {self.claim}"


def _wrap(suite, claim, rep) -> Check:
    return Check(suite, rep.name, claim, bool(rep.passed), rep.to_json())


def _witness(rep):
    """First failing entry of a report, as plain text."""
    if isinstance(rep, ps.BracketReport):
        return str(rep.failures[0]) if rep.failures else ""
    f = rep.first_failure
    return str(f) if f else ""


# -- suites -----------------------------------------------------------------------


def suite_log_canonical(n, points, rng_seed=0):
    rep = ps.verify_log_canonical(n, points, "D")
    W = rep.details.pop("omega_matrix")
    labels = list(build_initial_seed(n).labels)
    cas = ps.casimir_rows(W, labels, n)
    return [
        _wrap("log-canonical", "the initial family is log-canonical for the double bracket", rep),
        Check("log-canonical", "casimirs", "det X, det Y and the c_i Poisson-commute with the family",
              all(cas.values()), {label_name(k): v for k, v in cas.items()}),
    ]


def _compat(suite, seed, omega, claim, name):
    rep = ps.verify_compatibility(seed, omega, name)
    return Check(suite, name, claim, rep.passed, rep.to_json())


def suite_compatibility(n, points, rng_seed=0):
    seed = build_initial_seed(n)
    X, Y = points[0]
    W = ps.family_omega_D(seed.labels, X, Y)
    return [_compat("compatibility", seed, W, "{log x_u, log y_v} = -delta_uv for the initial seed", "compatibility")]


def suite_dual(n, points, rng_seed=0):
    rep = ps.verify_log_canonical(n, points, "star")
    W = rep.details.pop("omega_matrix")
    return [
        _wrap("dual", "the dual family is log-canonical for the bracket on U", rep),
        _compat("dual", build_dual_seed(n), W, "the dual seed is compatible with the bracket on U",
                "dual_compatibility"),
    ]


def suite_rank(n, points, rng_seed=0):
    return [_wrap("rank", "rank of the exchange matrix is maximal; the isolated block is the identity",
                  check_rank_and_isolated(n))]


def suite_toric(n, points, rng_seed=0):
    return [
        _wrap("toric", "every y-variable has zero left and right torus weight", check_toric_annihilation(n)),
        _wrap("toric", "closed-form weights and p-hat invariance under diagonal scaling",
              check_torus_action(n, points, rng_seed)),
    ]


def suite_identities(n, points, rng_seed=0):
    out = []
    if n >= 3:
        out.append(_wrap("identities", "determinantal identities behind the exchange relations",
                         ids.check_plucker_suite(n, points)))
        out.append(_wrap("identities", "exchange values match their closed forms",
                         ids.check_exchange_partners(n, points)))
        out.append(_wrap("identities", "functions at the fixture matrices take the stated values",
                         ids.check_fixture_evaluations(n)))
    out.append(_wrap("identities", "the generalized exchange relation at phi_11", ids.check_phi11_exchange(n, points)))
    out.append(_wrap("identities", "invariance under the unipotent actions", ids.check_invariance(n, points, rng_seed)))
    return out


def suite_phi11_symbolic(n, points, rng_seed=0):
    if n > 3:
        return []
    try:
        res = ids.phi11_symbolic(n)
        ok, detail = True, {"quotient_terms": res["terms"]}
        if "matches_printed" in res:
            ok = res["matches_printed"]
            detail["matches_printed"] = ok
    except ids.PolyDivisionError as e:
        ok, detail = False, {"error": str(e)}
    return [Check("phi11-symbolic", "phi11_divisibility", "phi_11 divides the expanded relation with zero remainder",
                  ok, detail)]


def suite_normal_forms(n, points, rng_seed=0, round_trips=None):
    out = [
        _wrap("normal-forms", "normal forms reconstruct the matrix",
              check_round_trips(n, round_trips or max(len(points), 1), rng_seed)),
        _wrap("normal-forms", "closed formulas for normal-form entries", check_formulas(n, points)),
    ]
    if n >= 3:
        for rep, claim in ((ps.verify_zmap_poisson(n, points), "the Gauss-factor map is Poisson"),
                           (ps.verify_poisson_b(n, points), "the push-forward to B'_+ is the stated bracket")):
            out.append(Check("normal-forms", rep.name, claim, rep.passed, rep.to_json()))
    return out


def suite_long_identity(n, points, rng_seed=0):
    return [_wrap("long-identity", "the Krylov determinant identity",
                  ids.check_long_identity(n, max(10, len(points)), rng_seed))]


def suite_mutation(n, points, rng_seed=0):
    if n == 2:
        out = []
        for k in (rng_seed, rng_seed + 1):
            g = mw.enumerate_exchange_graph_n2(k)
            b3 = mw.b3_cluster_count()
            ok = g.degrees == {3: g.vertices} and g.vertices == b3
            out.append(Check("mutation", f"exchange_graph_{k}", "finite 3-regular exchange graph of type B3 size",
                             ok, dict(g.to_json(), b3_oracle=b3)))
        return out
    points = mw.walk_points(n, len(points), rng_seed)
    return [
        _wrap("mutation", "S produces the dual family and keeps the strings", mw.check_S(n, points)),
        _wrap("mutation", "S gives the same values for a random order within diagonals",
              mw.check_S(n, points, order_seed=rng_seed + 1)),
        _wrap("mutation", "every entry of X is a stable or cluster variable",
              mw.verify_all_x_recovered(n, points, rng_seed=rng_seed)),
    ]


# -- negative controls ---------------------------------------------------------------


def _perturbed(relations):
    return [ids.Relation(r.name, r.index, lambda c, f=r.lhs: 2 * f(c), r.rhs, r.mode) for r in relations]


def _control(name, claim, corrupted_passed, detail=""):
    return Check("negative-controls", name, claim, not corrupted_passed, {"witness": detail})


def _wrong_weights(n, lab):
    wl, wr = toric_weights(n, lab)
    return (wl[0] + 1,) + tuple(wl[1:]), wr


def suite_negative_controls(n, points, rng_seed=0):
    out = []
    bump = {("g", n, 2) if n > 2 else ("g", 2, 2): lambda v: v + 1}
    rep = ps.verify_log_canonical(n, points, "D", corrupt=bump)
    out.append(_control("log_canonical", "a perturbed function breaks log-canonicity", rep.passed, _witness(rep)))

    seed = build_initial_seed(n)
    X, Y = points[0]
    W = ps.family_omega_D(seed.labels, X, Y)
    rep = ps.verify_compatibility(seed, -W)
    out.append(_control("compatibility", "a sign-flipped bracket is not compatible", rep.passed, _witness(rep)))

    rep = ps.verify_log_canonical(n, points, "star", corrupt={("phi", 1, 1): lambda v: v + 1})
    out.append(_control("dual", "a perturbed dual function breaks log-canonicity", rep.passed, _witness(rep)))

    b = seed.b.copy()
    b[-1] = b[0]
    bad = replace(seed, b=b)
    rep = check_rank_and_isolated(n, bad)
    out.append(_control("rank", "a repeated row lowers the rank", rep.passed, _witness(rep)))

    b = seed.b.copy()
    b[0, seed.index(("g", 1, 1))] += 1
    rep = check_toric_annihilation(n, replace(seed, b=b))
    out.append(_control("toric", "an extra arrow to g_11 gives a y-variable nonzero weight", rep.passed,
                        _witness(rep)))
    rep = check_torus_action(n, points[:1], rng_seed, weights=_wrong_weights)
    out.append(_control("torus_action", "a wrong weight table is detected", rep.passed, _witness(rep)))

    rels = ids.plucker_relations(n) if n >= 3 else []
    rep = ids.check_relations("perturbed", n, _perturbed(rels[:40]) + _perturbed(
        [ids.Relation("phi11", (), ids.phi11_lhs, ids.phi11_rhs)]), points)
    out.append(_control("identities", "doubling one side of each relation breaks it", rep.passed, _witness(rep)))
    if not rep.passed:
        each = all(not r[2] for r in rep.results)
        out.append(Check("negative-controls", "identities_each", "every perturbed relation fails on its own", each))

    U = Context(X, Y).U
    P, D, L = gauss(U)
    D2 = D.copy()
    D2[0, 0] += 1
    out.append(_control("normal_forms", "a perturbed Gauss factor does not reconstruct U", equal(P.dot(D2).dot(L), U)))
    if n >= 3:
        rep = ps.verify_zmap_poisson(n, points[:1], sign=-1)
        out.append(_control("zmap", "the opposite sign of the Poisson-map identity fails", rep.passed, _witness(rep)))

    A = np.array([[Fraction(i * n + j + 2) ** 2 % 11 - 5 for j in range(n)] for i in range(n)], dtype=object)
    u = np.array([Fraction(j + 1) for j in range(n)], dtype=object)
    v = np.array([Fraction((-1) ** j * (j + 2)) for j in range(n)], dtype=object)
    A2 = A.copy()
    A2[0, 0] += 1
    lhs = ids.long_identity_sides(A, u, v)[0]
    rhs = ids.long_identity_sides(A2, u, v)[1]
    out.append(_control("long_identity", "sides at different matrices differ", lhs == rhs, f"{lhs} vs {rhs}"))

    if n >= 3:
        points = mw.walk_points(n, 1, rng_seed)
        first = mw.s_word(n)[0]
        rep = mw.check_S(n, points[:1], corrupt={first: lambda v: 2 * v})
        out.append(_control("sequence_S", "a wrong initial value breaks the stage formulas", rep.passed,
                            _witness(rep)))
        rep = mw.verify_all_x_recovered(n, points[:1], rng_seed=rng_seed, corrupt={("g", n, 2): lambda v: 2 * v})
        out.append(_control("all_x_recovered", "a wrong initial value breaks the walk", rep.passed, _witness(rep)))
    else:
        # forgetting the multiplicity of the special vertex changes the finite type
        es = evaluate_seed(seed, *mw.locator_point(2, rng_seed))
        bh = seed.b_hat()
        plain = make_seed(seed.labels, seed.n_mutable, bh, None, None)
        g = mw.enumerate_exchange_graph(EvaluatedSeed(plain, es.values))
        out.append(_control("exchange_graph", "without the multiplicity the graph is not of type B3",
                            g.vertices == mw.b3_cluster_count(), str(g.to_json())))
    return out


SUITES = {
    "log-canonical": suite_log_canonical,
    "compatibility": suite_compatibility,
    "dual": suite_dual,
    "rank": suite_rank,
    "toric": suite_toric,
    "identities": suite_identities,
    "phi11-symbolic": suite_phi11_symbolic,
    "normal-forms": suite_normal_forms,
    "long-identity": suite_long_identity,
    "mutation": suite_mutation,
    "negative-controls": suite_negative_controls,
}


def run_suite(name: str, n: int, points: int = 3, rng_seed: int = 0) -> list:
    pts = sample_points(n, points, rng_seed)
    return SUITES[name](n, pts, rng_seed)


__all__ = ["Check", "SUITES", "run_suite", "SPECIAL", "sample_point"]
