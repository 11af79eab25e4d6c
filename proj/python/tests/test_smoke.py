import pytest

import skein


def test_pretzel_and_bracket():
    d = skein.pretzel([1, 1, 1])
    assert d.crossing_count == 3
    assert d.region_sizes == [1, 1, 1]
    b = skein.bracket(d)
    assert min(b) == skein.predicted_min_degree(d, 1) == -9


def test_unknot_colored():
    u = skein.unknot()
    assert skein.reduced_jones(u, 3) == {0: 1}
    assert skein.colored_bracket(u, 1) == {-2: -1, 2: -1}


def test_table_rows():
    assert skein.jones_window(skein.pretzel([8, 6, 10]), 2, 11) == [1, -1, 3, -4, 6, -8, 10, -11, 13, -13, 14]
    assert skein.jones_window(skein.pretzel([3, 5, 2]), 4, 4) == [1, -1, -1, 0]


def test_stability_calculus():
    assert skein.normalize([-1, 4, 0, 0, -6]) == [1, -4, 0, 0, 6]
    assert skein.stable_prefix([1, -1, 3, -3], [1, -1, 3, -4, 5]) == 3
    assert skein.n_equivalent([1, -1, 3, -3], [1, -1, 3, -4, 5], 3)
    with pytest.raises(skein.InsufficientWindowError):
        skein.n_equivalent([1, 2], [1, 2], 3)
    report = skein.family_tail("P(k,k,2)", color=2, k_min=1, k_max=10)
    assert report["passed"]
    assert report["tail"] == [1, -1, 3, -3, 5, -6, 7, -8, 9, -10, 11]


def test_errors_and_graphs():
    with pytest.raises(skein.ParseError):
        skein.parse_pd("PD[X[1,2,3]]")
    curl = skein.parse_pd("PD[X[1,1,2,2]]")
    assert not skein.is_adequate(curl)
    with pytest.raises(skein.PreconditionError):
        skein.predicted_min_degree(curl, 2)
    assert skein.minus_graph_dot(skein.pretzel([2, 2, 2])).count("--") == 6
    assert skein.minus_graph_dot(skein.pretzel([2, 2, 2]), reduced=True).count("--") == 3
    d = skein.from_json(skein.pretzel([2, 3, 2]).to_json())
    assert d.name == "P(2,3,2)"


def test_verify_suite():
    assert skein.verify("tl-identities")["passed"]
