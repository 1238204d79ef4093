import random

from fractions import Fraction

from brownalg.qi import QI, ONE, ZERO
from brownalg.linalg import (Echelon, QMatrix, dense_det, dense_inverse,
                             dense_mat_mul, rank_rows, rank_rows_int, vadd,
                             veq, vscale)


def test_rank_rows_int_matches_fraction_path():
    rng = random.Random(1)
    for _ in range(20):
        rows = []
        for _ in range(rng.randint(1, 8)):
            row = {}
            for _ in range(rng.randint(1, 6)):
                row[rng.randrange(10)] = QI(Fraction(rng.randint(-4, 4), rng.randint(1, 3)),
                                            Fraction(rng.randint(-4, 4), rng.randint(1, 2)))
            rows.append({k: c for k, c in row.items() if c})
        assert rank_rows_int(rows) == rank_rows(rows)


def test_echelon_rank_and_membership():
    e = Echelon()
    assert e.add({0: QI(2), 1: ONE})
    assert e.add({1: ONE, 2: ONE})
    assert not e.add({0: QI(2), 2: QI(-1)})   # dependent combination
    assert e.rank == 2
    assert e.contains({0: QI(4), 1: QI(2)})
    assert not e.contains({2: ONE})


def test_echelon_coords():
    e = Echelon(track=True)
    e.add({0: ONE, 1: ONE}, "a")
    e.add({1: QI(2)}, "b")
    c = e.coords({0: QI(3), 1: QI(5)})
    # 3*(e0+e1) + 1*(2 e1) = (3,5)
    assert c == {0: QI(3), 1: ONE}
    assert e.coords({2: ONE}) is None


def test_kernel_basis():
    e = Echelon()
    e.add({0: ONE, 1: ONE, 2: ONE})
    e.add({1: ONE, 2: QI(2)})
    kb = e.kernel_basis(3)
    assert len(kb) == 1
    v = kb[0]
    assert v[0] + v[1] + v[2] == ZERO and v[1] + QI(2) * v[2] == ZERO


def test_rank_rows_random_consistency():
    rng = random.Random(0)
    rows = []
    base = [{0: ONE, 2: QI(1, 1)}, {1: QI(3)}, {3: ONE, 4: QI(-2)}]
    for _ in range(10):
        v = {}
        for b in base:
            c = QI(rng.randint(-3, 3), rng.randint(-3, 3))
            for k, val in b.items():
                v[k] = v.get(k, ZERO) + c * val
        rows.append({k: c for k, c in v.items() if c})
    assert rank_rows(rows) <= 3
    assert rank_rows(base) == 3


def test_qmatrix_compose_convention():
    # f = shift up, g = scale index 0 by 2; (f o g)(e0) = f(2 e0) = 2 e1
    f = QMatrix(2, [{1: ONE}, {}])
    g = QMatrix(2, [{0: QI(2)}, {1: ONE}])
    fg = f.compose(g)
    assert veq(fg.cols[0], {1: QI(2)})


def test_qmatrix_flat_round_trip():
    m = QMatrix(3, [{1: QI(5)}, {0: QI(0, 1)}, {2: QI(-1)}])
    assert QMatrix.from_flat(3, m.flat()) == m


def test_dense_det_and_inverse():
    m = [[QI(1), QI(2), QI(0), QI(0)],
         [QI(0), QI(1), QI(0), QI(0)],
         [QI(0), QI(0), QI(0, 1), QI(0)],
         [QI(0), QI(0), QI(0), QI(3)]]
    assert dense_det(m) == QI(0, 3)
    inv = dense_inverse(m)
    prod = dense_mat_mul(m, inv)
    for i in range(4):
        for j in range(4):
            assert prod[i][j] == (ONE if i == j else ZERO)
