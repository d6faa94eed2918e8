"""Smoke test for the pyquandle extension.

Build and install first, e.g. `maturin develop -m crates/py/Cargo.toml`,
then run `python crates/py/python/smoke_test.py`.
"""

import json

import pyquandle as pq


def main():
    q = pq.alexander_quandle(5, 2)
    assert len(q) == 5
    assert q.op(1, 0) == 2 and q.op(0, 1) == 4
    assert q.op_inv(0, 1) == 3
    assert q.rho(0) == [0, 2, 4, 1, 3]
    assert q.evaluate(1, "0 1^-1") == 4
    assert q.equivalent("0^4", "")
    assert q.is_connected()
    assert q.operator_group_order() == 20
    assert len(q.automorphisms()) == 20
    assert q.generated_subquandle([0, 1]) == [0, 1, 2, 3, 4]
    assert q.extended_axiom_check(500, 1) == (True, 0)

    valid, violations = pq.validate_axioms([[0, 0], [0, 1]])
    assert not valid and violations == [(1, [0, 0, 1])]
    try:
        pq.FiniteQuandle([[0, 0], [0, 1]])
    except ValueError:
        pass
    else:
        raise AssertionError("invalid table accepted")
    try:
        pq.alexander_quandle(6, 2)
    except ValueError as e:
        assert "not a unit" in str(e)
    try:
        q.op(7, 0)
    except IndexError:
        pass

    p = pq.AlexanderParams(5, 2)
    assert (p.order_of_t(), p.t_inv) == (4, 3)
    assert p.power(1, 0, 3) == 3 and p.power(1, 0, -1) == 3
    assert p.cycle_orbit(1, 0) == [1, 2, 3, 4]
    assert p.cycle_sum(0, 1, 3) == 4
    assert p.alternating_word_value(1, 0, "a", [1, 1]) == 3
    assert p.solve_transport(1, 0) == 2
    assert p.generating_word(1, 0, 3) == "0^-1 1 0^-1 1 0^-1 1"
    assert p.pair_automorphism(0, 1, 1, 3) == [1, 3, 0, 2, 4]
    assert p.verify_two_generation()

    s3 = [[0, 1, 2, 3, 4, 5], [1, 0, 5, 4, 3, 2], [2, 4, 0, 5, 1, 3],
          [3, 5, 4, 0, 2, 1], [4, 2, 3, 1, 5, 0], [5, 3, 1, 2, 0, 4]]
    conj = pq.FiniteQuandle.conjugation(s3)
    assert conj.op(1, 2) == 3
    assert pq.FiniteQuandle.from_json(q.to_json()).table() == q.table()
    assert pq.FiniteQuandle.trivial(3).automorphisms().__len__() == 6
    assert pq.reduce_word("0 1 1^-1 2") == "0 2"

    report = json.loads(pq.verify("gens", 13))
    assert report["pass"] and report["witnesses"] == []
    print("pyquandle smoke test: ok")


if __name__ == "__main__":
    main()
