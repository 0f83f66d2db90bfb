import pytest

from trivial_limits.errors import DomainError
from trivial_limits.plane import h0_plane_curve, hi_p2, plane_genus, prop4_certificate


def test_hi_p2_examples():
    assert hi_p2(0, 2) == 6
    assert all(hi_p2(1, n) == 0 for n in range(-10, 10))
    assert hi_p2(2, -3) == 1
    assert hi_p2(0, -1) == 0
    with pytest.raises(DomainError):
        hi_p2(3, 0)


def test_euler_characteristic_on_p2():
    # chi(O(n)) = (n+1)(n+2)/2 for every n
    for n in range(-12, 12):
        assert hi_p2(0, n) - hi_p2(1, n) + hi_p2(2, n) == (n + 1) * (n + 2) // 2


def test_plane_genus():
    assert plane_genus(5) == 6
    assert plane_genus(1) == plane_genus(2) == 0
    assert plane_genus(4) == 3


def test_h0_plane_curve_against_riemann_roch():
    # for n > d - 3 the bundle O_C(n) is nonspecial: h0 = nd - g + 1
    for d in range(1, 12):
        g = plane_genus(d)
        for n in range(max(0, d - 2), d + 6):
            assert h0_plane_curve(d, n) == n * d - g + 1


def test_prop4_examples():
    cert = prop4_certificate(5, 1)
    assert cert.verdict and cert.genus == 6
    assert cert.steps[1].lhs == hi_p2(2, -2) == 0
    assert prop4_certificate(9, 2).verdict
    cert = prop4_certificate(4, 1)
    assert not cert.verdict
    assert not cert.steps[0].passed
    assert not cert.steps[1].passed and cert.steps[1].lhs == hi_p2(2, -3) == 1
    assert cert.first_failure(start=2) == 2


def test_prop4_grid():
    for k in range(1, 6):
        for d in range(1, 21):
            cert = prop4_certificate(d, k)
            assert cert.verdict == (0 < k and 4 * k < d)
            assert len(cert.steps) == 6
            if d == 4 * k:
                assert cert.first_failure(start=2) == 2


def test_prop4_json_and_render():
    cert = prop4_certificate(5, 1)
    obj = cert.to_json()
    assert obj["verdict"] is True and len(obj["steps"]) == 6 and obj["destabilizing_degree"] == 5
    assert all(isinstance(s["lhs"], int) for s in obj["steps"])
    assert "verdict: indecomposable limit exists" in cert.render()


def test_prop4_rejects_nonpositive():
    with pytest.raises(DomainError):
        prop4_certificate(0, 1)
    with pytest.raises(DomainError):
        prop4_certificate(5, 0)
