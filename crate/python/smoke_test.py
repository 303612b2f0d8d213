"""Smoke test for the pyjacmap extension module."""

import pyjacmap as jm

SPEC = """partition 1 2
perm 1 2
0
3 _
5
2 _
"""

m = jm.Matrix([[0, 13, -13, 9, 10, -19],
               [12, 11, -11, 7, 8, -15],
               [12, 11, -11, 7, 8, -15],
               [6, 4, 5, 1, 2, -3],
               [6, 4, 5, 1, 2, -3],
               [6, 4, 5, 1, 2, -3]])
assert m.n == 6 and m.rank() == 3
assert m.is_universal() and m.is_nilpotent()
assert m.block_row_sums().rows() == [["0", "0", "0"], ["12", "0", "0"], ["6", "9", "0"]]
assert m.partition() == [1, 2, 3]
assert jm.Matrix.parse(str(m)) == m

u = jm.Matrix.universal(SPEC)
assert u.n == 3 and u.is_universal()

order, comps = jm.newton_inverse(m, 2)
assert order == 3 and len(comps) == 6
assert jm.newton_order_of(m, 3)[0] == 3

assert jm.is_good_pair(m, "pow:3")
assert jm.is_good_pair(m, "exp", mode="float")
assert not jm.is_good_pair(jm.Matrix([[1, 0], [0, 1]]), "pow:2")
assert jm.is_good_pair(jm.Matrix([[0, 1, -1], [-1, 0, 1], [1, -1, 0]]), "log")
try:
    jm.is_good_pair(m, "exp")
except ValueError:
    pass
else:
    raise AssertionError("exact exp check should be refused")

eqs = jm.jacobian_equations(2, 2)
assert len(eqs) == 5, eqs

idem = jm.fixture("idempotent_centrosymmetric_dim4")
assert idem.mul(idem) == idem and not idem.is_universal()

results = jm.run_fixtures("log")
assert results and all(ok for _, ok in results), results

print("smoke test passed:", len(eqs), "equations,", len(results), "log fixtures")
