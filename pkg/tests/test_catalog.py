import math
from fractions import Fraction

import pytest

from rhokit import (
    DomainError,
    blowup_upper_bound,
    complete,
    cycle,
    finiteness,
    general_lower_bounds,
    majorization_chain,
    majorizes,
    multipartite,
    parse_graph_spec,
    part_sizes,
    path,
    rho_exact,
)
from rhokit.catalog import RhoResult


class TestMajorization:
    def test_part_sizes_normalization(self):
        assert part_sizes([1, 3, 0, 2]) == (3, 2, 1, 0)
        with pytest.raises(DomainError):
            part_sizes([0, 0])
        with pytest.raises(DomainError):
            part_sizes([-1, 2])

    def test_majorizes_basics(self):
        assert majorizes((4, 1, 1), (2, 2, 2))
        assert majorizes((3, 3), (3, 3))
        assert not majorizes((2, 2, 2), (4, 1, 1))
        assert not majorizes((3, 2, 1), (4, 1, 1))

    def test_majorizes_requires_equal_totals(self):
        with pytest.raises(DomainError):
            majorizes((3, 1), (2, 1))

    def test_chain_endpoints_and_steps(self):
        chain = majorization_chain((4, 1, 1), (2, 2, 2))
        assert chain == [(4, 1, 1), (3, 2, 1), (2, 2, 2)]
        for a, b in zip(chain, chain[1:]):
            assert majorizes(a, b)
            diffs = [x - y for x, y in zip(a, b)]
            assert sum(abs(d) for d in diffs) == 2  # one unit moved

    def test_chain_trivial(self):
        assert majorization_chain((3, 2), (3, 2)) == [(3, 2)]

    def test_chain_rejects_incomparable(self):
        with pytest.raises(DomainError):
            majorization_chain((2, 2, 2), (4, 1, 1))


class TestFinitenessAndBounds:
    def test_finiteness(self):
        assert finiteness("K3", "K2")
        assert not finiteness("K2", "K3")  # no triangle maps into an edge
        assert finiteness("C4", "C6")
        assert not finiteness("C4", "C5")  # odd cycle needs an odd cycle
        with pytest.raises(DomainError):
            finiteness("3xK1" if False else parse_graph_spec("2xK1"), "K2")

    def test_general_lower_bounds(self):
        # edges ratio dominates for (P1, P2); vertices ratio for (K3, K2)... etc.
        assert general_lower_bounds("P1", "P2") == Fraction(2)
        assert general_lower_bounds("C3", "C4") >= Fraction(4, 3)
        assert general_lower_bounds("K3", "K2") >= Fraction(1, 3)

    def test_blowup_upper(self):
        assert blowup_upper_bound(complete(2), cycle(4)) == Fraction(4)
        assert blowup_upper_bound(complete(3), multipartite([2, 1, 1])) == Fraction(2)
        assert blowup_upper_bound(complete(3), complete(3)) == Fraction(1)


class TestRhoResult:
    def test_exact_forces_bracket(self):
        r = RhoResult("exact", value=Fraction(3, 4))
        assert r.lower == r.upper == Fraction(3, 4)

    def test_interval_order_checked(self):
        with pytest.raises(DomainError):
            RhoResult("interval", lower=Fraction(2), upper=Fraction(1))

    def test_json_rationals(self):
        j = RhoResult("exact", value=Fraction(8, 5)).to_json()
        assert j["value"] == 1.6
        assert j["value_exact"] == "8/5"

    def test_infinite_json_has_no_tokens(self):
        j = RhoResult("infinite").to_json()
        assert j["status"] == "infinite"
        assert j["lower"] is None


SPOT_TABLE = [
    # (G, H, status, value or (lower, upper), required provenance tag)
    ("P1", "P2", "exact", Fraction(2), "paths-exact"),
    ("P2", "P3", "exact", Fraction(2), "paths-exact"),
    ("P3", "P2", "exact", Fraction(3, 4), "paths-exact"),
    ("C5", "C4", "exact", Fraction(4, 5), "even-cycles-spectral"),
    ("C4", "P2", "exact", Fraction(3, 4), "cycle-vs-path"),
    ("C3", "P4", "exact", Fraction(2), "cycle-vs-path"),
    ("P2", "C4", "exact", Fraction(2), "path-vs-even-cycle"),
    ("K3", "K2", "exact", Fraction(2, 3), "complete-kruskal-katona"),
    ("K[2,1]", "K[3,2]", "exact", Fraction(3), "bipartite-case-1"),
    ("K3", "Khub[1,1,1]", "exact", Fraction(4), "hub-clique"),
    ("K[2,2,1]", "K[3,1,1]", "exact", Fraction(1), "multipartite-majorization"),
    ("K2", "K3", "infinite", None, "infinite-no-hom"),
    ("C3", "C4", "interval", (Fraction(3, 2), Fraction(8, 5)), "cycle-in-even-cycle"),
    ("P5", "P3", "interval", (Fraction(7, 10), Fraction(3, 4)), "paths-open"),
    ("paw", "C4", "exact", Fraction(4, 3), "paw-square"),
]


class TestCatalog:
    @pytest.mark.parametrize("g,h,status,val,tag", SPOT_TABLE)
    def test_spot_table(self, g, h, status, val, tag):
        res = rho_exact(g, h)
        assert res.status == status
        if status == "exact":
            assert res.value == val
        elif status == "interval":
            assert (res.lower, res.upper) == val
        assert tag in res.provenance

    def test_identity(self):
        res = rho_exact("C7", "C7")
        assert res.status == "exact" and res.value == 1
        assert "identity" in res.provenance

    def test_edgeless_target(self):
        res = rho_exact("K2", "3xK1")
        assert res.status == "exact" and res.value == 0
        assert "edgeless-target" in res.provenance

    def test_edgeless_base_rejected(self):
        with pytest.raises(DomainError):
            rho_exact("2xK1", "K2")

    def test_graph_inputs_accepted(self):
        assert rho_exact(path(1), path(2)).value == Fraction(2)

    def test_interval_invariant(self):
        for g, h in (("C3", "C6"), ("P7", "P4"), ("C3", "C7")):
            res = rho_exact(g, h)
            if res.status == "interval":
                assert res.lower <= res.upper

    def test_odd_cycle_pair(self):
        res = rho_exact("C3", "C5")
        assert res.lower >= Fraction(2)
        assert res.upper == Fraction(3)

    def test_bipartite_cases_2_to_5(self):
        assert rho_exact("K[3,2]", "K[2,3]" if False else "K[2,2]").status in ("exact",)
        assert rho_exact("K[3,1]", "K[2,2]").value == Fraction(2)  # case 2
        assert rho_exact("K[3,3]", "K[2,2]").value == Fraction(2, 3)  # case 3
        assert rho_exact("K[2,2]", "K[3,1]").value == Fraction(4, 4)  # case 4
        assert rho_exact("K[2,2]", "K[4,1]").value == Fraction(4, 3)  # case 5

    def test_bipartite_case_4_when_totals_match(self):
        assert rho_exact("K[3,3]", "K[4,2]").value == Fraction(1)  # case 4

    def test_bipartite_conjecture_flagged(self):
        res = rho_exact("K[3,3]", "K[5,2]")
        assert res.status == "conjectured"
        assert "bipartite-conjecture" in res.provenance
        assert res.value is not None

    def test_paths_divisible_case_exact(self):
        res = rho_exact("P7", "P3")  # 4 divides 8: subdivision argument closes it
        assert res.status == "exact"
        assert res.value == Fraction(1, 2)

    def test_paths_open_case_brackets(self):
        res = rho_exact("P7", "P5")
        assert res.status == "interval"
        assert "paths-open" in res.provenance
        assert res.lower >= Fraction(5, 7)
        assert res.upper <= Fraction(1)

    def test_composition_can_tighten(self):
        # star targets beyond the exact cases keep a finite certified upper
        res = rho_exact("C4", "C6")
        assert res.status == "interval"
        assert res.upper is not None
