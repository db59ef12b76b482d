"""Named series registry: recipes, aliases, cache behavior, frozen values."""

import threading

import pytest

import oracle
from qser import catalog
from qser.products import ProductSpec, expand_product
from qser.series import Series

# brute-force reference prefixes, frozen from tests/oracle.py
D_PREFIX = [1, -1, 1, 0, -1, 1, -1, 1, 0, -1, 2, -3, 2, 0, -2,
            4, -4, 3, -1, -3, 6, -7, 5, 0, -5, 9, -10, 7, -1, -7]
C_PREFIX = [1, 1, 0, -1, 0, 1, 1, -1, -2, 0, 2, 2, -1, -3, -1,
            3, 3, -2, -5, -1, 6, 5, -3, -8, -2, 8, 7, -5, -12, -2]
A_PREFIX = [1, 5, 10, 5, -15, -24, 15, 70, 30, -125, -175,
            95, 420, 180, -615, -826, 410, 1760, 705, -2415, -3100]
B_PREFIX = [1, -5, 15, -30, 40, -26, -30, 125, -220, 245, -124]
CC_PREFIX = [1, -5, 15, -30, 40, -25, -35, 140, -250, 285, -150,
             -210, 740, -1230, 1330, -675]
DD_PREFIX = [1, 5, 10, 5, -15, -25, 10]
G_PREFIX = [1, 1, 1, 1, 2, 2, 3, 3, 4, 5, 6, 7, 9]
H_PREFIX = [1, 0, 1, 1, 1, 1, 2, 2, 3, 3, 4, 4, 6]


@pytest.fixture(autouse=True)
def fresh_cache():
    catalog.clear_cache()
    yield


def test_every_name_builds():
    for name in catalog.NAMES:
        s = catalog.build(name, 25)
        assert s.prec == 25
        assert s[0] == 1, name


@pytest.mark.parametrize(
    "name,prefix",
    [
        ("d", D_PREFIX),
        ("c", C_PREFIX),
        ("A", A_PREFIX),
        ("B", B_PREFIX),
        ("C", CC_PREFIX),
        ("D", DD_PREFIX),
        ("G", G_PREFIX),
        ("H", H_PREFIX),
    ],
)
def test_frozen_prefixes(name, prefix):
    assert list(catalog.build(name, len(prefix))) == prefix


@pytest.mark.parametrize("alias,canonical", sorted(catalog.ALIASES.items()))
def test_aliases_build_the_same_series(alias, canonical):
    assert catalog.build(alias, 30) == catalog.build(canonical, 30)


def test_families_match_oracle():
    assert list(catalog.build("d", 30)) == oracle.rr_d(30)
    assert list(catalog.build("c", 30)) == oracle.rr_c(30)
    assert list(catalog.build("A", 21)) == oracle.rr_A(21)
    assert list(catalog.build("B", 11)) == oracle.rr_B(11)
    assert list(catalog.build("C", 16)) == oracle.rr_C(16)
    assert list(catalog.build("D", 7)) == oracle.rr_D(7)


def test_sum_forms_equal_product_forms():
    assert catalog.build_sum_form("G_sum", 200) == catalog.build("G", 200)
    assert catalog.build_sum_form("H_sum", 200) == catalog.build("H", 200)


def test_sum_form_small_prefixes():
    assert list(catalog.build_sum_form("G_sum", 1)) == [1]
    assert list(catalog.build_sum_form("H_sum", 2)) == [1, 0]


def test_sum_form_restricted_to_sum_names():
    with pytest.raises(ValueError):
        catalog.build_sum_form("G", 10)


@pytest.mark.parametrize("a,b", [("R", "Rinv"), ("R5", "R5inv"), ("Cratio", "Dratio")])
def test_inverse_pairs_multiply_to_one(a, b):
    assert catalog.build(a, 150) * catalog.build(b, 150) == Series.one(150)


def test_fifth_powers():
    r = catalog.build("R", 60)
    assert catalog.build("R5", 60) == r**5
    assert catalog.build("R5inv", 60) == (r**5).inverse()


def test_rq5_is_r_with_spread_support():
    rq5 = catalog.build("Rq5", 101)
    assert all(v == 0 for i, v in enumerate(rq5) if i % 5)
    assert rq5.dissect(5, 0) == catalog.build("R", 21)


def test_r_equals_its_four_factor_product_form():
    spec = ProductSpec(((1, 5, 1), (4, 5, 1), (2, 5, -1), (3, 5, -1)))
    assert catalog.build("R", 120) == expand_product(spec, 120)


def test_r_is_h_over_g():
    assert catalog.build("R", 120) == catalog.build("H", 120) / catalog.build("G", 120)


def test_cratio_times_rq5_recovers_r5():
    prec = 80
    assert catalog.build("Cratio", prec) * catalog.build("Rq5", prec) == catalog.build("R5", prec)


def test_coefficient_values():
    assert catalog.coefficient("C", 0) == 1
    assert catalog.coefficient("D", 0) == 1
    assert catalog.coefficient("B", 5) == -26
    assert catalog.coefficient("c", 9) == 0
    assert catalog.coefficient("d", 23) == 0
    assert catalog.coefficient("A", 0) == 1
    assert catalog.coefficient("A", 10) == -175
    assert catalog.coefficient("D", 1) == 5


def test_coefficient_grows_cache_geometrically():
    catalog.coefficient("d", 0)
    with catalog._cache_lock:
        first = catalog._cache["R"].prec  # "d" is an alias of "R"
    assert first >= 64
    catalog.coefficient("d", first)  # one past the cache forces a regrow
    with catalog._cache_lock:
        second = catalog._cache["R"].prec
    assert second >= 2 * first
    assert catalog.coefficient("d", 500) == catalog.build("d", 501)[500]


def test_coefficient_validation():
    with pytest.raises(ValueError):
        catalog.coefficient("d", -1)
    with pytest.raises(ValueError):
        catalog.coefficient("nope", 3)


def test_build_validation():
    with pytest.raises(ValueError):
        catalog.build("nope", 5)
    with pytest.raises(ValueError):
        catalog.build("R", -1)
    assert catalog.build("R", 0).prec == 0


def test_rebuild_preserves_prefix():
    for name in catalog.NAMES:
        small = catalog.build(name, 30)
        assert catalog.build(name, 90).truncate(30) == small, name


def test_cache_returns_truncations_of_one_build():
    big = catalog.build("Cratio", 200)
    assert catalog.build("Cratio", 50) == big.truncate(50)


def test_concurrent_builds_agree():
    results = {}

    def worker(tag, name, prec):
        results[tag] = catalog.build(name, prec)

    threads = [
        threading.Thread(target=worker, args=(i, name, 120))
        for i, name in enumerate(["A", "A", "B", "B", "Cratio", "Dratio", "R", "Rinv"])
    ]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert results[0] == results[1]
    assert results[2] == results[3]
    assert results[0] == catalog.build("A", 120)
    assert results[4] * results[5] == Series.one(120)
