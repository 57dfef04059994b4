import os
import subprocess
from fractions import Fraction

import pytest

import cochad


def test_groups():
    g = cochad.make_group("d", 3)
    assert g.order == 12
    assert g.mul(2, 7) == 8
    assert g.mul(7, 2) == 12
    assert not g.is_commutative()
    assert cochad.load_custom_group(g.to_text()) == g
    with pytest.raises(ValueError):
        cochad.make_group("z", 4)
    with pytest.raises(cochad.GroupParseError):
        cochad.load_custom_group("order 4\n1 3 2 4\n2 1 4 3\n3 4 1 2\n4 3 2 1\n")


def test_basis_and_partner_index():
    b = cochad.family_basis("z", 3)
    assert b.cob_indices == list(range(2, 11))
    assert b.required_rows == [5, 6, 7, 8]
    assert b.m_rho[1][1] == -1
    assert cochad.j_index("d", 3, 2, 7) == 8
    assert cochad.is_hadamard(cochad.family_basis("z", 1).m_rho)


def test_enumerate_and_search_agree():
    g = cochad.make_group("z", 3)
    assert cochad.cocycle_space_dim(g) == 12
    res = cochad.enumerate_hadamard_cocycles(g, count_only=False)
    assert res["count"] == 24
    assert all(cochad.is_hadamard(m) and cochad.is_cocycle(g, m) for m in res["cocycles"])
    found = cochad.search("z", 3)
    assert found["count"] == 24
    assert [2, 5, 6, 7, 8, 10] in found["solutions"]
    assert cochad.search("d", 5, count_only=True)["count"] == 1400
    with pytest.raises(cochad.ResourceLimitError):
        cochad.enumerate_hadamard_cocycles(cochad.make_group("d", 9))


def test_filters_and_masks():
    sols = cochad.search("z", 5, filters=["symmetry", "parity"])["solutions"]
    everything = cochad.search("z", 5)["solutions"]
    assert set(map(tuple, sols)) <= set(map(tuple, everything))
    target = [2, 3, 5, 7, 10, 11, 12, 17]
    fix = ",".join(f"{i}={int(i in target)}" for i in range(2, 19) if i not in (10, 11, 12))
    assert target in cochad.search("d", 5, fix=fix)["solutions"]
    with pytest.raises(ValueError):
        cochad.search("d", 3, filters=["parity"])


def test_verify_and_diagram():
    ok, matrix = cochad.verify_support("d", 5, [2, 3, 5, 7, 10, 11, 12, 17])
    assert ok and len(matrix) == 20
    assert cochad.row_sum_test(matrix, [2, 3, 4])
    assert not cochad.verify_support("z", 3, [2])[0]
    d = cochad.diagram_of(7, [3, 11, 12, 13, 14, 17, 18, 23, 24])
    assert d["col"] == [0, 2, 2]
    assert d["dist"] == [2, 2, 2, 2]
    assert d["parity"]


def test_ideals():
    text = cochad.emit_ideal("jg", "d", 3)
    assert text.startswith("ring QQ vars x1,")
    values = cochad.eval_generators(text, [1, 0, 0, 1, 1, 1, 0, 1, 0])
    assert all(v == 0 for v in values)
    assert cochad.eval_generators(text, [0] * 9)[9] == Fraction(8)
    assert "ideal IG =" in cochad.emit_ideal("ig", "z", 1, syntax="singular")


@pytest.mark.skipif("COCHAD_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_roundtrip():
    cli = os.environ["COCHAD_CLI"]
    out = subprocess.run([cli, "enumerate", "--group", "z", "--t", "3", "--count-only"],
                         capture_output=True, text=True)
    assert out.returncode == 0
    assert out.stdout == "count=24\n"
    bad = subprocess.run([cli, "verify", "--group", "z", "--t", "3", "--cob", "2"], capture_output=True, text=True)
    assert bad.returncode == 1
    assert bad.stdout.startswith("NOT HADAMARD")
