"""Smoke test for the pyptqm extension module.

Build and install with `maturin build -m crates/python/Cargo.toml` and
`pip install target/wheels/pyptqm-*.whl`, then run this file.
"""

import cmath
import math

import pyptqm as pt


def close(a, b, tol=1e-12):
    return abs(a - b) < tol


def main():
    p = pt.PTParams(1.0, 2.0, math.pi / 6)
    d = p.derive()
    assert close(d.alpha, 0.25268025514207865), d
    assert close(d.omega, math.sqrt(15.0)), d
    assert d.phase == "unbroken"

    ops = p.operators()
    assert ops.max_residual() < 1e-12
    a = ops.alpha
    expected_c = [[1j * math.tan(a), 1 / math.cos(a)], [1 / math.cos(a), -1j * math.tan(a)]]
    for i in range(2):
        for j in range(2):
            assert close(ops.c[i][j], expected_c[i][j]), ops.c

    ep, em = p.eigenvectors()
    assert close(pt.pt_product(ep, ep), 1.0)
    assert close(pt.pt_product(em, em), -1.0)
    assert close(pt.cpt_product(em, em, p), 1.0)
    assert close(pt.cpt_product(ep, em, p), 0.0)

    nu1 = pt.cpt_normalize([1, 0], p)
    nu2 = pt.cpt_normalize([0, 1], p)
    beta = pt.angular_distance(nu1, nu2, p)
    assert close(beta, math.acos(abs(math.sin(a))))

    t = pt.tau_star(p)
    assert close(t.tau, 0.9416392578721505)
    u = pt.propagator_pt(p, t.tau)
    final = [u[0][0] * nu1[0] + u[0][1] * nu1[1], u[1][0] * nu1[0] + u[1][1] * nu1[1]]
    assert abs(final[0]) < 1e-9
    assert close(abs(pt.cpt_product(nu2, final, p)), 1.0, 1e-9)

    tr = pt.evolve(p, t.tau, steps=21)
    assert len(tr.times) == 21
    assert max(abs(n - 1.0) for n in tr.cpt_norms) < 1e-10
    assert max(tr.dirac_norms) - min(tr.dirac_norms) > 1e-3

    h = pt.propagator_hermitian(0.0, 0.0, 1.0, 0.0, math.pi / 2)
    assert close(abs(h[0][1]), 1.0)

    rows = pt.sweep()
    assert len(rows) == 151
    assert max(r.equivalence_residual() for r in rows) < 1e-12

    suites = pt.selftest()
    assert len(suites) == 10 and all(s.passed for s in suites), [
        (s.name, s.worst) for s in suites if not s.passed
    ]

    try:
        pt.PTParams(2.0, 1.0, math.pi / 2).derive()
    except pt.BrokenPhaseError as e:
        assert "broken PT phase" in str(e)
    else:
        raise AssertionError("expected BrokenPhaseError")

    try:
        pt.PTParams(1.0, 1.0, math.pi / 2).operators()
    except pt.ExceptionalPointError:
        pass
    else:
        raise AssertionError("expected ExceptionalPointError")

    assert issubclass(pt.PTError, ValueError)
    assert cmath.isclose(pt.dirac_product([1j, 0], [1j, 0]), 1.0)
    print("pyptqm smoke test: OK")


if __name__ == "__main__":
    main()
