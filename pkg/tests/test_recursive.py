import json
from fractions import Fraction

import pytest

from zeta2k.recursive import ZetaCoeffTable, consistency_residual

KNOWN = {
    1: Fraction(1, 6),
    2: Fraction(1, 90),
    3: Fraction(1, 945),
    4: Fraction(1, 9450),
    5: Fraction(1, 93555),
    6: Fraction(691, 638512875),
}


@pytest.mark.parametrize("k,expected", sorted(KNOWN.items()))
def test_known_coefficients(k, expected):
    assert ZetaCoeffTable(6).coeff(k) == expected


def test_k6_equals_691_times_2p11_over_15_factorial():
    from math import factorial

    assert ZetaCoeffTable(6).coeff(6) == Fraction(691 * 2**11, factorial(15))


def test_constructor_rejects_nonpositive():
    with pytest.raises(ValueError):
        ZetaCoeffTable(0)
    with pytest.raises(ValueError):
        ZetaCoeffTable(-3)


def test_coeff_grows_table_on_demand():
    table = ZetaCoeffTable(2)
    assert table.max_k == 2
    assert table.coeff(5) == KNOWN[5]
    assert table.max_k == 5


def test_extend_is_idempotent_and_preserves_prefix():
    table = ZetaCoeffTable(8)
    before = table.coeffs
    table.extend(4)  # shrinking is a no-op
    assert table.coeffs == before
    table.extend(12)
    assert table.coeffs[:8] == before
    assert table.max_k == 12


def test_all_coefficients_positive():
    # zeta(2k) > 1 and pi^(2k) > 0, so every c_k must be positive
    for c in ZetaCoeffTable(60).coeffs:
        assert c > 0


def test_consistency_identity_holds_exactly():
    table = ZetaCoeffTable(40)
    for k in range(1, 41):
        assert consistency_residual(table, k) == 0


def test_consistency_residual_detects_corruption():
    table = ZetaCoeffTable(5)
    # residual is computed from the table's entries, so a wrong table
    # must produce a nonzero residual somewhere
    table._coeffs[2] += Fraction(1, 7)
    assert any(consistency_residual(table, k) != 0 for k in range(1, 6))


def test_rows_shape():
    rows = ZetaCoeffTable(3).rows()
    assert rows == [
        {"k": 1, "num": "1", "den": "6"},
        {"k": 2, "num": "1", "den": "90"},
        {"k": 3, "num": "1", "den": "945"},
    ]


def test_json_round_trips():
    payload = json.loads(ZetaCoeffTable(4).to_json())
    assert [row["k"] for row in payload] == [1, 2, 3, 4]
    assert Fraction(int(payload[3]["num"]), int(payload[3]["den"])) == KNOWN[4]


def test_csv_layout():
    text = ZetaCoeffTable(2).to_csv()
    assert text == "k,num,den\n1,1,6\n2,1,90\n"
