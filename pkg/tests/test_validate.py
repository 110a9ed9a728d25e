import pytest

from vmconn.coloring import VertexColoring
from vmconn.families import complete_digraph, cycle, figure1_family, long_path_tournament
from vmconn.graph import Digraph
from vmconn.validate import (
    Analysis,
    check_all,
    check_bad_pair_lemma,
    check_corollary,
    check_diameter_characterization,
    check_diameter_upper_bound,
    check_dstar,
    check_ell_bound,
    check_line_digraph_theorem,
    check_line_proposition,
    check_lower_bound,
    check_smc_formula,
    check_tournament_theorem,
    corpus_instances,
    int_range,
    parse_corpus,
    run_corpus,
)


def test_parse_corpus_and_ranges():
    assert parse_corpus("random-strong:n=5,count=3,seed=1") == (
        "random-strong", {"n": "5", "count": "3", "seed": "1"})
    assert parse_corpus("strong-digraphs") == ("strong-digraphs", {})
    assert list(int_range("4-6")) == [4, 5, 6]
    assert list(int_range("7")) == [7]
    with pytest.raises(ValueError):
        parse_corpus("x:n")
    with pytest.raises(ValueError):
        list(corpus_instances("nope:n=3"))
    with pytest.raises(ValueError):
        list(corpus_instances("strong-digraphs:n=3,bogus=1"))


def test_corpus_instances_are_reproducible():
    a = list(corpus_instances("random-strong:n=5,count=20,seed=9"))
    b = list(corpus_instances("random-strong:n=5,count=20,seed=9"))
    assert a == b
    assert [name for name, _ in a][:2] == ["random-strong:n=5#0", "random-strong:n=5#1"]
    fam = list(corpus_instances("family:name=figure1,n=4-6"))
    assert [d.n for _, d in fam] == [4, 5, 6]


def test_girth_filter():
    items = list(corpus_instances("strong-digraphs:n=4,min_girth=4"))
    # only the 4-cycles survive a girth-4 filter on four vertices
    assert len(items) == 6
    assert all(d.m == 4 for _, d in items)


def test_bound_checks_on_figure1():
    d = figure1_family(6)
    an = Analysis(d, "f6")
    assert check_diameter_characterization(d, an).status == "pass"
    v = check_diameter_upper_bound(d, an)
    assert v.status == "pass" and v.details["tight"] is True
    v = check_lower_bound(d, an)
    assert v.status == "pass" and v.details["bound"] == 4
    v = check_ell_bound(d, an)
    # girth 3, so the ell bound has no hypothesis here
    assert v.status == "vacuous"
    assert an.verify_certificates()[1] == 0


def test_ell_bound_and_corollary_on_cycles():
    for n in (4, 5, 6):
        d = cycle(n)
        an = Analysis(d)
        v = check_ell_bound(d, an)
        assert v.status == "pass"
        assert v.details["ell"] == n
        assert check_corollary(d, an).status == "pass"


def test_corollary_observation_mode_on_short_girth():
    v = check_corollary(complete_digraph(3))
    assert v.status in ("pass", "vacuous")
    assert "observed_violations" in v.tallies


def test_dstar_on_cycle_and_explicit_coloring():
    d = cycle(5)
    v = check_dstar(d)
    assert v.status == "pass"
    assert v.tallies["iii.holds"] == 1
    v = check_dstar(d, coloring=VertexColoring([1] * 5))
    assert v.details["dstar.strong"] is True


def test_line_checks():
    d = Digraph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    an = Analysis(d)
    assert check_smc_formula(d, an).status == "pass"
    assert check_line_proposition(d, an).status == "pass"
    assert check_line_digraph_theorem(d, an).status == "pass"
    assert check_bad_pair_lemma(d, an=an).status in ("pass", "vacuous")
    assert an.verify_certificates()[1] == 0


def test_triangle_is_the_line_exception():
    v = check_line_digraph_theorem(cycle(3))
    assert v.status == "vacuous"
    assert v.details["smc_v_line"] == 3 and v.details["smc"] == 1
    assert v.tallies["c3_exception_confirmed"] == 1


def test_smc_formula_vacuous_with_digons():
    assert check_smc_formula(complete_digraph(3)).status == "vacuous"


def test_tournament_check():
    assert check_tournament_theorem(long_path_tournament(5)).status == "vacuous"
    v = check_tournament_theorem(long_path_tournament(8))
    assert v.status == "pass"
    assert v.details == {
        "diameter": 7, "omega": 8, "omega_v": 6, "smc_v": 3, "n_minus_omega_v_plus_1": 3,
    }


def test_check_all_skips_large_line_instances():
    verdicts, _ = check_all(complete_digraph(4), "k4", line_max_m=6)
    status = {v.theorem: v.status for v in verdicts}
    assert status["line-digraph"] == "skipped"
    assert status["diameter-characterization"] == "pass"
    assert "tournament" not in status


def test_run_corpus_small():
    result = run_corpus("strong-digraphs:n=3")
    assert result.ok
    assert result.instances == 18
    assert result.certificates_failed == 0
    assert result.certificates_checked > 0
    with pytest.raises(ValueError):
        run_corpus("strong-digraphs:n=3", theorems=["nope"])


def test_non_strong_rejected():
    with pytest.raises(ValueError):
        Analysis(Digraph(2, [(0, 1)]))
