"""Acceptance suite: nine criteria, each with a time budget.

Run ``pytest tests/test_acceptance.py`` (summary lines are printed at the end
of the session) or ``python tests/test_acceptance.py`` for the bare report.
"""
import json
import random
import sys
import time
from fractions import Fraction as F
from itertools import product
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from cm_leaves.affine_weyl import (  # noqa: E402
    act_dim,
    act_param,
    decompose_dim,
    pairing,
    reflect_dim,
    reflect_param,
    standardize,
    translate_dim,
    translate_param,
    translation_word,
)
from cm_leaves.cli import run  # noqa: E402
from cm_leaves.leaves import (  # noqa: E402
    CMParams,
    closure_leq,
    cm_from_theta,
    e_theta_membership,
    enumerate_leaves,
    leaves_of,
    nu_r_criterion,
    theta_from_cm,
)
from cm_leaves.partitions import (  # noqa: E402
    ell_core,
    enumerate_partitions,
    is_j_core,
    j_core,
    residue_vector,
    staircase,
)
from cm_leaves.quiver_rep import build_fixed_point_rep, is_moment_exact, is_simple_framed  # noqa: E402

from conftest import random_standard_theta  # noqa: E402
from oracles import (  # noqa: E402
    random_order_core,
    random_order_j_core,
    terminal_cores,
    terminal_j_cores,
)

SEED = 20260101
RESULTS: list[str] = []
_LAW_POSETS: list = []


def partitions_up_to(n):
    return [lam for m in range(n + 1) for lam in enumerate_partitions(m)]


# -- criteria ----------------------------------------------------------------------

def criterion_1():
    run(["core", "--l", "3", "--partition", "4,2,1"])  # warm up imports
    start = time.perf_counter()
    code, text = run(["core", "--l", "3", "--partition", "4,2,1"])
    elapsed = time.perf_counter() - start
    assert code == 0
    assert json.loads(text) == {"core": "1", "r": 2, "residues": [3, 2, 2]}
    assert elapsed < 1e-3, f"single run took {elapsed * 1e3:.3f} ms"
    return elapsed


def _law(m, n):
    labels, k = set(), 0
    while n >= k * (m + 1 + k):
        labels.add(staircase(m + 2 * k))
        k += 1
    return labels


def criterion_2():
    # a = 1, k = (0, 0) gives theta = (-1, 0), which is J-standard for J = {1}
    theta = theta_from_cm(CMParams(2, 0, 1, (0, 0)))
    assert theta == (-1, 0)
    _LAW_POSETS.clear()
    for m in (1, 3):
        for n in range(13):
            d = tuple(x + n for x in residue_vector(staircase(m), 2))
            poset = leaves_of(d, theta)
            assert poset.J == {1} and poset.word == []
            assert poset.labels() == _law(m, n), (m, n, poset.labels())
            # the same family reached from the CM side: nu_m sits over n delta
            cm = cm_from_theta(act_param(decompose_dim(d).word, theta), n)
            assert cm.a == 1
            via_cm = enumerate_leaves(cm)
            assert via_cm.J == {1} and via_cm.theta_std == theta
            assert via_cm.labels() == poset.labels()
            _LAW_POSETS.extend([(poset, n, F(1)), (via_cm, n, F(1))])


def criterion_3():
    rng = random.Random(SEED)
    for ell in (2, 3, 4):
        for mu in partitions_up_to(10):
            for _ in range(20):
                theta, _ = random_standard_theta(ell, rng)
                _, rep = build_fixed_point_rep(mu, theta, ell)
                assert is_moment_exact(rep, theta), (mu, theta)


def criterion_4():
    rng = random.Random(SEED + 4)
    for ell in (2, 3, 4):
        for mask in range(2 ** ell - 1):
            J = frozenset(i for i in range(ell) if mask >> i & 1)
            theta, _ = random_standard_theta(ell, rng, J)
            for mu in partitions_up_to(10):
                _, rep = build_fixed_point_rep(mu, theta, ell)
                report = is_simple_framed(rep, J)
                if is_j_core(mu, J, ell):
                    assert report.simple, (mu, J)
                else:
                    assert not report.simple, (mu, J)
                    assert report.witness.vertex in J


def criterion_5():
    rng = random.Random(SEED + 5)
    everything = partitions_up_to(12)
    for ell in (1, 2, 3, 4):
        for lam in everything:
            core, r = ell_core(lam, ell)
            assert terminal_cores(lam.parts, ell) == {core.parts}
            assert random_order_core(lam.parts, ell, rng) == (core.parts, r)
    for _ in range(500):
        ell = rng.randint(1, 4)
        J = frozenset(i for i in range(ell) if rng.random() < 0.5)
        for lam in everything:
            got = j_core(lam, J, ell)
            assert terminal_j_cores(lam.parts, J, ell) == {got.parts}
            assert random_order_j_core(lam.parts, J, ell, rng) == got.parts


def criterion_6():
    rng = random.Random(SEED + 6)

    def rand_theta(ell):
        return tuple(F(rng.randint(-9, 9), rng.randint(1, 6)) for _ in range(ell))

    for _ in range(1000):
        ell = rng.randint(2, 5)
        j = rng.randrange(ell)
        d = tuple(rng.randint(-5, 8) for _ in range(ell))
        theta = rand_theta(ell)
        lhs = pairing(reflect_dim(j, d), reflect_param(j, theta))
        assert lhs == pairing(d, theta) - (theta[0] if j == 0 else 0)
    for _ in range(1000):
        ell = rng.randint(2, 4)
        alpha = tuple(rng.randint(-2, 2) for _ in range(ell))
        theta = rand_theta(ell)
        d = tuple(rng.randint(-5, 8) for _ in range(ell))
        word = translation_word(alpha)
        # t_alpha(theta) = theta + sigma(theta) bar(alpha), realized by a group element
        assert act_param(word, theta) == translate_param(alpha, theta)
        # t_alpha(d) = d - alpha mod Z delta, for the same group element
        moved = act_dim(word, d)
        assert translate_dim(alpha, d) == moved
        assert len({x - y + a for x, y, a in zip(moved, d, alpha)}) == 1


def _random_params(rng, max_ell, max_n):
    ell = rng.randint(1, max_ell)
    a = F(0)
    while a == 0:
        a = F(rng.randint(-6, 6), rng.randint(1, 4))
    k = [F(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(ell - 1)]
    k.append(-sum(k, F(0)))
    return CMParams(ell, rng.randint(0, max_n), a, tuple(k))


def criterion_7():
    rng = random.Random(SEED + 7)
    for _ in range(300):
        p = _random_params(rng, 4, 6)
        std = standardize((p.n,) * p.ell, theta_from_cm(p))
        assert e_theta_membership(std.d, std.theta, std.J)
        assert decompose_dim(std.d).r == p.n


def _grid():
    values = (F(-2), F(-1), F(0), F(1), F(2), F(1, 2))
    for ell in (1, 2, 3):
        for n in range(6):
            for a in (F(1), F(-1), F(2), F(1, 2)):
                for head in product(values, repeat=ell - 1):
                    k = head + (-sum(head, F(0)),)
                    yield CMParams(ell, n, a, k)


def criterion_8():
    count = 0
    for p in _grid():
        poset = enumerate_leaves(p)
        for lower in poset.leaves:
            for upper in poset.leaves:
                assert closure_leq(lower, upper, poset.J) == nu_r_criterion(lower, upper, poset.J, p.ell), p
                count += 1
    assert count > 0


def criterion_9():
    if not _LAW_POSETS:
        criterion_2()
    for poset, n, a in _LAW_POSETS:
        top = [leaf for leaf in poset.leaves if leaf.r == n]
        assert len(top) == 1
        for leaf in poset.leaves:
            norm = leaf.normalization
            assert 0 <= leaf.r <= n
            assert norm.a == a and sum(norm.k) == 0
            CMParams(poset.ell, leaf.r, norm.a, norm.k)  # raises if not a valid parameter


CRITERIA = [
    (1, "worked example core --l 3 --partition 4,2,1", 1e-3, criterion_1),
    (2, "l=2 leaf law for m in {1,3}, n <= 12", 30, criterion_2),
    (3, "moment exactness |mu| <= 10, l in {2,3,4}, 20 theta", 60, criterion_3),
    (4, "A_nu simple iff J-core, witness in J", 60, criterion_4),
    (5, "core and J-core confluence oracles", 30, criterion_5),
    (6, "twist identity and translation laws", 5, criterion_6),
    (7, "standardize(n delta) lands in E_theta with r = n", 30, criterion_7),
    (8, "closure order agrees with (nu, r) criterion", 120, criterion_8),
    (9, "normalization shape on the l=2 law runs", None, criterion_9),
]


def evaluate(number, title, budget, fn):
    start = time.perf_counter()
    error, measured = None, None
    try:
        measured = fn()
    except AssertionError as exc:
        error = f"assertion failed: {exc}" if str(exc) else "assertion failed"
    # a criterion may time its own core step (criterion 1 excludes warm-up)
    elapsed = measured if measured is not None else time.perf_counter() - start
    if error is None and budget is not None and elapsed > budget:
        error = f"over budget ({elapsed:.2f}s > {budget}s)"
    status = "PASS" if error is None else "FAIL"
    line = f"[{status}] criterion {number}: {title} ({elapsed:.4f}s" + (f", budget {budget}s)" if budget else ")")
    if error:
        line += f" -- {error}"
    return error is None, line


@pytest.mark.parametrize("number,title,budget,fn", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, title, budget, fn):
    ok, line = evaluate(number, title, budget, fn)
    RESULTS.append(line)
    print(line)
    assert ok, line


if __name__ == "__main__":
    outcomes = [evaluate(*c) for c in CRITERIA]
    for _, line in outcomes:
        print(line)
    sys.exit(0 if all(ok for ok, _ in outcomes) else 1)
