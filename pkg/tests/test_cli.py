"""Command-line interface: output formats, exit codes, determinism."""

import csv
import io

import pytest

from qbg.cli import main

WEAK_SPEC = """\
[game]
mode = builtin-bg
theta = 1
a = 2
b = 2
"""

STRONG_SPEC = WEAK_SPEC.replace("theta = 1", "theta = 0")

MATCHED_SPEC = WEAK_SPEC + """
[quantum]
prob_ll = 0.8
prob_lh = 0
prob_hl = 0
prob_hh = 0.2

[candidate]
p = 1
q = 1
"""

MISMATCH_SPEC = WEAK_SPEC + """
[quantum]
prob_ll = 0
prob_lh = 0.5
prob_hl = 0.5
prob_hh = 0

[candidate]
p = 1
q = 1
"""

EVEN_MIX_SPEC = WEAK_SPEC + """
[quantum]
prob_ll = 0.25
prob_lh = 0.25
prob_hl = 0.25
prob_hh = 0.25

[candidate]
p = 1/2
q = 1/2
"""

ZERO_GAME_SPEC = """\
[game]
mode = custom
row_payoffs = 0,0,0,0
col_payoffs = 0,0,0,0
"""

PURE_LL_SPEC = WEAK_SPEC + """
[quantum]
prob_ll = 1
prob_lh = 0
prob_hl = 0
prob_hh = 0

[candidate]
p = 1
q = 1
"""


@pytest.fixture
def spec_path(tmp_path):
    def write(text, name="game.spec"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return write


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def parse_csv(text):
    return list(csv.reader(io.StringIO(text)))


class TestClassical:
    def test_weak_game_table_and_nash(self, capsys, spec_path):
        code, out, _ = run_cli(capsys, "classical", "--spec", spec_path(WEAK_SPEC))
        assert code == 0
        assert "(1, -1)" in out and "(-2, -1)" in out
        assert "Pure Nash equilibria: (H, H)" in out
        assert "Dominated rows: L (strict)" in out

    def test_strong_game(self, capsys, spec_path):
        code, out, _ = run_cli(capsys, "classical", "--spec", spec_path(STRONG_SPEC))
        assert code == 0
        assert "Pure Nash equilibria: (L, L)" in out
        assert "Dominated rows: H (strict)" in out

    def test_csv_table(self, capsys, spec_path):
        code, out, _ = run_cli(capsys, "classical", "--csv",
                               "--spec", spec_path(WEAK_SPEC))
        assert code == 0
        rows = parse_csv(out)
        assert rows[0] == ["row_label", "col_label", "row_payoff", "col_payoff"]
        assert rows[1:] == [["L", "L", "0", "0"], ["L", "H", "-2", "-1"],
                            ["H", "L", "1", "-1"], ["H", "H", "-1", "0"]]

    def test_zero_custom_game_all_nash(self, capsys, spec_path):
        code, out, _ = run_cli(capsys, "classical",
                               "--spec", spec_path(ZERO_GAME_SPEC))
        assert code == 0
        assert out.count("(") >= 4  # all four profiles listed as equilibria
        assert "Dominated rows: none" in out

    def test_missing_spec_flag(self, capsys):
        code, _, err = run_cli(capsys, "classical")
        assert code == 2
        assert "--spec" in err

    def test_missing_spec_file(self, capsys):
        code, _, err = run_cli(capsys, "classical", "--spec", "/no/such/file")
        assert code == 2
        assert "cannot read" in err

    def test_parse_error_exit_code(self, capsys, spec_path):
        path = spec_path("[game]\nmode = builtin-bg\ntheta = 5\na = 2\nb = 2\n")
        code, _, err = run_cli(capsys, "classical", "--spec", path)
        assert code == 2
        assert "theta" in err


class TestQuantize:
    def test_matched_state_candidate(self, capsys, spec_path):
        code, out, _ = run_cli(capsys, "quantize",
                               "--spec", spec_path(MATCHED_SPEC))
        assert code == 0
        assert "trace=-0.2" in out and "closed-form=-0.2" in out
        assert "Nash (weak): yes" in out

    def test_mismatch_state_not_nash(self, capsys, spec_path):
        code, out, _ = run_cli(capsys, "quantize",
                               "--spec", spec_path(MISMATCH_SPEC))
        assert code == 0
        assert "public payoff: trace=-1, closed-form=-1" in out
        assert "Nash (weak): no" in out

    def test_even_mixing_payoffs(self, capsys, spec_path):
        code, out, _ = run_cli(capsys, "quantize",
                               "--spec", spec_path(EVEN_MIX_SPEC))
        assert code == 0
        assert "policy payoff: trace=-0.5, closed-form=-0.5" in out
        assert "public payoff: trace=-0.5, closed-form=-0.5" in out

    def test_csv_items(self, capsys, spec_path):
        code, out, _ = run_cli(capsys, "quantize", "--csv",
                               "--spec", spec_path(MATCHED_SPEC))
        assert code == 0
        rows = dict((r[0], r[1]) for r in parse_csv(out)[1:])
        assert rows["policy_payoff.closed_form"] == "-0.2"
        assert rows["public_payoff.trace"] == "0"
        assert rows["nash.weak"] == "true"
        assert rows["policy.coeff_pq"] == "0"

    def test_requires_quantum_block(self, capsys, spec_path):
        code, _, err = run_cli(capsys, "quantize", "--spec", spec_path(WEAK_SPEC))
        assert code == 2
        assert "quantum" in err


class TestEquilibria:
    def test_matched_state_has_identity_corner(self, capsys, spec_path):
        code, out, _ = run_cli(capsys, "equilibria",
                               "--spec", spec_path(MATCHED_SPEC))
        assert code == 0
        assert "point: p=1, q=1" in out

    def test_csv(self, capsys, spec_path):
        code, out, _ = run_cli(capsys, "equilibria", "--csv",
                               "--spec", spec_path(MATCHED_SPEC))
        assert code == 0
        rows = parse_csv(out)
        assert rows[0] == ["kind", "p_min", "p_max", "q_min", "q_max"]
        assert ["point", "1", "1", "1", "1"] in rows

    def test_requires_quantum_block(self, capsys, spec_path):
        code, _, err = run_cli(capsys, "equilibria",
                               "--spec", spec_path(WEAK_SPEC))
        assert code == 2
        assert "quantum" in err


class TestSweep:
    def test_hh_weight_threshold(self, capsys, spec_path):
        code, out, _ = run_cli(capsys, "sweep", "--spec", spec_path(MATCHED_SPEC),
                               "--axis", "prob_hh=0:1:11")
        assert code == 0
        rows = parse_csv(out)
        assert rows[0] == ["prob_hh", "policy_payoff", "public_payoff", "nash"]
        assert len(rows) == 12
        for value, _, _, nash in rows[1:]:
            assert (nash == "true") == (float(value) <= 0.5)

    def test_payoff_affine_in_p(self, capsys, spec_path):
        code, out, _ = run_cli(capsys, "sweep", "--spec", spec_path(PURE_LL_SPEC),
                               "--axis", "p=0:1:11")
        assert code == 0
        rows = parse_csv(out)
        values = [float(r[1]) for r in rows[1:]]
        diffs = [b - a for a, b in zip(values, values[1:])]
        for d in diffs[1:]:
            assert d == pytest.approx(diffs[0], abs=1e-9)

    def test_two_axis_surface_matches_product_form(self, capsys, spec_path):
        code, out, _ = run_cli(capsys, "sweep", "--spec", spec_path(MATCHED_SPEC),
                               "--axis", "p=0:1:5", "--axis", "q=0:1:5")
        assert code == 0
        rows = parse_csv(out)
        assert rows[0][:2] == ["p", "q"]
        assert len(rows) == 26
        # outer axis slow, inner fast
        assert [r[0] for r in rows[1:6]] == ["0"] * 5
        mismatch = 0.0  # matched state has no LH/HL weight
        for p_txt, q_txt, _, public, _ in rows[1:]:
            p, q = float(p_txt), float(q_txt)
            expected = (1 - 2 * mismatch) * (q * (2 * p - 1) - p) - mismatch
            assert float(public) == pytest.approx(expected, abs=1e-9)

    def test_byte_identical_runs(self, capsys, spec_path):
        path = spec_path(MATCHED_SPEC)
        _, first, _ = run_cli(capsys, "sweep", "--spec", path,
                              "--axis", "prob_hh=0:1:21")
        _, second, _ = run_cli(capsys, "sweep", "--spec", path,
                               "--axis", "prob_hh=0:1:21")
        assert first == second

    def test_underconstrained_without_candidate(self, capsys, spec_path):
        text = WEAK_SPEC + """
[quantum]
prob_ll = 1
prob_lh = 0
prob_hl = 0
prob_hh = 0
"""
        code, _, err = run_cli(capsys, "sweep", "--spec", spec_path(text),
                               "--axis", "p=0:1:5")
        assert code == 2
        assert "unresolved" in err

    def test_overconstrained_weights(self, capsys, spec_path):
        code, _, err = run_cli(capsys, "sweep", "--spec", spec_path(MATCHED_SPEC),
                               "--axis", "prob_lh=0:1:3", "--axis",
                               "prob_hl=0:1:3")
        assert code == 2
        assert "exceed" in err

    def test_duplicate_axis_rejected(self, capsys, spec_path):
        code, _, err = run_cli(capsys, "sweep", "--spec", spec_path(MATCHED_SPEC),
                               "--axis", "p=0:1:3", "--axis", "p=0:1:3")
        assert code == 2
        assert "distinct" in err

    def test_unknown_axis_rejected(self, capsys, spec_path):
        code, _, err = run_cli(capsys, "sweep", "--spec", spec_path(MATCHED_SPEC),
                               "--axis", "prob_ll=0:1:3")
        assert code == 2
        assert "bad axis" in err


class TestReproduce:
    def test_passes_and_exits_zero(self, capsys):
        code, out, _ = run_cli(capsys, "reproduce")
        assert code == 0
        assert ", 0 failed" in out

    def test_csv_lists_all_checks(self, capsys):
        code, out, _ = run_cli(capsys, "reproduce", "--csv")
        assert code == 0
        rows = parse_csv(out)
        assert rows[0] == ["check_id", "expected", "computed", "tolerance",
                           "passed", "detail"]
        assert all(r[4] == "true" for r in rows[1:])

    def test_injected_fault_fails_and_names_check(self, capsys):
        code, out, err = run_cli(capsys, "reproduce", "--inject-fault",
                                 "case-c.policy-payoff")
        assert code == 1
        assert "case-c.policy-payoff" in err
        assert "FAIL" in out

    def test_unknown_fault_id_is_usage_error(self, capsys):
        code, _, err = run_cli(capsys, "reproduce", "--inject-fault", "nope")
        assert code == 2
        assert "unknown check id" in err

    def test_csv_byte_identical(self, capsys):
        _, first, _ = run_cli(capsys, "reproduce", "--csv")
        _, second, _ = run_cli(capsys, "reproduce", "--csv")
        assert first == second
