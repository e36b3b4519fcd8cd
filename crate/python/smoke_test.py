"""Smoke test for the k3fix extension module.

Build with `maturin develop -m crates/python/Cargo.toml`, or copy
target/release/libk3fix_py.so to k3fix.so somewhere on PYTHONPATH.
"""

from fractions import Fraction

import k3fix


def main():
    assert k3fix.euler_phi(60) == 16
    assert k3fix.cyclotomic_poly(60) == [1, 0, 1, 0, 0, 0, -1, 0, -1, 0, -1, 0, 0, 0, 1, 0, 1]

    table = k3fix.admissible_orders()
    assert table[20] == [66, 50, 44, 33, 25]
    assert sum(len(v) for v in table.values()) == 40

    sys60 = k3fix.LefschetzSystem(60, 1)
    assert sys60.shape == (16, 30)
    assert sys60.rank == 8
    assert sys60.aliases["m_1"] == "m_2_59"
    assert all(isinstance(x, Fraction) for row in sys60.matrix for x in row)

    result = sys60.feasibility()
    assert result.verdict == "INTEGER_INFEASIBLE", result
    assert result.witness is None
    assert "mod-2 obstruction" in result.explanation
    assert k3fix.check_certificate(sys60.matrix, sys60.rhs, result.certificate)
    assert sys60.relation_implied(
        "4*m_1 = -1 + 2*m_2 + 2*m_20 - 2*m_21 + 4*m_22 - 4*m_23 + 2*m_26 - 2*m_27"
        " + 4*m_28 - 4*m_29 - 2*m_3 + 4*m_6 - 4*m_7 + 2*m_8 - 2*m_9 + 8*n"
    )
    assert not sys60.relation_implied("4*m_1 = 0")

    sys66 = k3fix.build_system(66)
    assert sys66.feasibility().verdict == "FEASIBLE"

    assert k3fix.verify(2, 0, [(1, 1, 8)]) == [0]
    assert k3fix.verify(2, 0, [(1, 1, 7)]) != [0]
    sys5 = k3fix.build_system(5, 0)
    assert sys5.search(8) == [([(1, 4, 2), (2, 3, 2)], None)]
    assert sys5.accepts([(1, 4, 2), (2, 3, 2)])

    odd = k3fix.feasibility([[2]], [3])
    assert odd.verdict == "INTEGER_INFEASIBLE"
    assert odd.certificate == [Fraction(1, 2)]

    try:
        k3fix.LefschetzSystem(60, 2)
    except ValueError:
        pass
    else:
        raise AssertionError("impure rotation accepted")

    print("k3fix smoke test: OK")


if __name__ == "__main__":
    main()
