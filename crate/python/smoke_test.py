"""Smoke test for the nullcone_py extension.

Build and run from the repository root:

    cargo build -p nullcone-python --features extension-module --release
    cp target/release/libnullcone_py.so python/nullcone_py.so
    python3 python/smoke_test.py
"""

import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import nullcone_py as nc


def main():
    assert nc.symplectic_block_matrix(2, 4) == [[1, 3, 1, 0], [2, 2, 0, 0], [0, 1, 3, 1], [0, 0, 2, 2]]
    x, y = nc.gl_block_matrices(2, 1, 2)
    assert (x, y) == ([[2], [1]], [[2, 1]])

    p = nc.Ideal("symplectic", 1, 3, field="qq")
    assert len(p) == 3
    assert p.has_squarefree_initial_ideal()
    assert p.height() == 2
    gb = p.groebner_basis()
    assert all(p.contains(g) for g in gb)
    assert p.normal_form(gb[0]) == "0"

    yz = nc.Ideal("gl", 1, 2, m=2, ideal="yz", p=3)
    assert yz.height() >= 1
    print("yz lead terms:", yz.initial_terms())

    rep = nc.check("lemma33", t=2, n=4)
    assert rep["summary"]["fail"] == 0, rep
    rep = nc.suite("paper-examples")
    print("paper-examples:", rep["summary"])
    assert rep["schema"] == 1
    show = nc.show("symplectic-order", t=2, n=3)
    assert show["output"] is not None

    try:
        nc.Ideal("symplectic", 3, 6, budget=5).groebner_basis()
    except nc.BudgetExceeded as e:
        print("budget:", e)
    else:
        raise AssertionError("expected BudgetExceeded")

    try:
        nc.check("no-such-check")
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError")

    print("smoke test ok")


if __name__ == "__main__":
    main()
