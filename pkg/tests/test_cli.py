import shlex
import textwrap

import pytest
from click.testing import CliRunner

from credal.cli import main
from tests.conftest import REPO_ROOT

DOC = textwrap.dedent("""\
    frame w: w1 w2 w3
    mass nested over w:
      {w1} 0.5
      {w1 w2} 0.3
      {w1 w2 w3} 0.2
    mass torn over w:
      {w1 w2} 0.5
      {w2 w3} 0.5
    pi ramp over w: 1.0 0.7 0.3
    prob flat over w: 0.2 0.3 0.5
    statement likely over w: core {w1 w2} alpha 0.9
    scale age: 20..24
    fuzzy young over age: (20,1.0) (21,1.0) (24,0.0)
    prob ages over age: 0.2 0.2 0.2 0.2 0.2
""")


def run(*args: str, doc: str = DOC, expect_exit: int = 0):
    runner = CliRunner()
    result = runner.invoke(main, ["--doc", "-", *args], input=doc)
    assert result.exit_code == expect_exit, result.output + result.stderr
    return result


def parse_session(path) -> list[tuple[str, list[str], str]]:
    """Split a session file into (argv-line, argv, expected-stdout) blocks."""
    blocks = []
    command = None
    expected: list[str] = []

    def flush():
        if command is not None:
            while expected and not expected[-1].strip():
                expected.pop()  # blank separator lines are not output
            blocks.append((command, shlex.split(command)[1:], "\n".join(expected) + "\n"))

    for raw in path.read_text().splitlines():
        if raw.startswith("$ "):
            flush()
            command = raw[2:]
            expected = []
        elif raw.strip() or expected:
            expected.append(raw)
    flush()
    return blocks


SESSION_BLOCKS = [
    pytest.param(argv, stdout, id=f"{path.stem}:{line}")
    for path in sorted(REPO_ROOT.glob("samples/*.session"))
    for line, argv, stdout in parse_session(path)
]


@pytest.mark.parametrize("argv,stdout", SESSION_BLOCKS)
def test_recorded_sessions_replay_exactly(repo_root, argv, stdout):
    result = CliRunner().invoke(main, argv)
    assert result.exit_code == 0, result.stderr
    assert result.output == stdout


class TestQuery:
    def test_belief_human(self):
        assert run("query", "Bel", "nested", "{w1 w2}").output == "Bel = 0.8\n"

    def test_plausibility_on_prob(self):
        assert run("query", "Pl", "flat", "{w2 w3}").output == "Pl = 0.8\n"

    def test_possibility(self):
        assert run("query", "Pi", "ramp", "{w2 w3}").output == "Pi = 0.7\n"

    def test_necessity(self):
        assert run("query", "N", "ramp", "{w1}").output == "N = 0.3\n"

    def test_csv(self):
        out = run("--csv", "query", "N", "ramp", "{w1}").output
        assert out == "measure,object,subset,value\nN,ramp,{w1},0.300000\n"

    def test_unknown_object(self):
        result = run("query", "Bel", "ghost", "{w1}", expect_exit=1)
        assert "unknown mass or prob 'ghost'" in result.stderr

    def test_pi_measure_needs_pi_object(self):
        result = run("query", "Pi", "nested", "{w1}", expect_exit=1)
        assert "unknown pi 'nested'" in result.stderr

    def test_bad_subset_literal(self):
        result = run("query", "Bel", "nested", "{w9}", expect_exit=1)
        assert "unknown" in result.stderr

    def test_bad_measure_is_usage_error(self):
        run("query", "Q", "nested", "{w1}", expect_exit=2)


class TestConvert:
    def test_pi_to_mass(self):
        out = run("convert", "ramp").output
        assert out == (
            "mass ramp_mass over w:\n"
            "  {w1} 0.3\n"
            "  {w1 w2} 0.4\n"
            "  {w1 w2 w3} 0.3\n"
        )

    def test_mass_to_pi(self):
        out = run("convert", "nested").output
        assert out == "pi nested_pi over w: 1 0.5 0.2\n"

    def test_round_trip_through_rendered_document(self):
        # feed the rendered mass block back in as a document and convert again
        block = run("convert", "ramp").output
        doc2 = "frame w: w1 w2 w3\n" + block
        out = run("convert", "ramp_mass", doc=doc2).output
        assert out == "pi ramp_mass_pi over w: 1 0.7 0.3\n"

    def test_dissonant_mass_refused(self):
        result = run("convert", "torn", expect_exit=1)
        assert "not consonant" in result.stderr
        assert "approx" in result.stderr

    def test_csv_pi_to_mass(self):
        out = run("--csv", "convert", "ramp").output
        assert out.splitlines()[0] == "subset,weight"
        assert "{w1 w2},0.400000" in out

    def test_unknown_name(self):
        result = run("convert", "ghost", expect_exit=1)
        assert "unknown pi or mass 'ghost'" in result.stderr


class TestApprox:
    def test_consistent_mass(self):
        out = run("approx", "nested").output
        assert out == "pi nested_approx over w: 1 0.5 0.2\n# consistent: true\n"

    def test_conflicting_mass_reports_subnormalization(self):
        doc = "frame w: w1 w2\nmass split over w:\n  {w1} 0.5\n  {w2} 0.5\n"
        out = run("approx", "split", doc=doc).output
        assert out == "pi split_approx over w: 1 1\n# consistent: false (subnormalization 0.5)\n"

    def test_csv(self):
        out = run("--csv", "approx", "nested").output
        lines = out.splitlines()
        assert lines[0] == "atom,pi,consistent,subnormalization"
        assert lines[1] == "w1,1.000000,true,1.000000"

    def test_probs_are_not_masses_here(self):
        result = run("approx", "flat", expect_exit=1)
        assert "unknown mass 'flat'" in result.stderr


class TestCondition:
    def test_possibilistic(self):
        out = run("condition", "young").output
        lines = out.splitlines()
        assert lines[0].startswith("pi young_pi over age: 1 1 ")
        assert lines[1].startswith("# certainty: 0 0 ")

    def test_bayesian_with_prior(self):
        out = run("condition", "young", "--prior", "ages").output
        assert out.startswith("prob young_posterior over age: ")

    def test_csv_possibilistic(self):
        out = run("--csv", "condition", "young").output
        assert out.splitlines()[0] == "point,pi,certainty"

    def test_unknown_prior(self):
        result = run("condition", "young", "--prior", "ghost", expect_exit=1)
        assert "unknown prob 'ghost'" in result.stderr

    def test_unknown_fuzzy(self):
        result = run("condition", "old", expect_exit=1)
        assert "unknown fuzzy set 'old'" in result.stderr


class TestElicit:
    def test_statement_both(self):
        out = run("elicit", "--statement", "likely").output
        assert out == (
            "prob likely_maxent over w: 0.45 0.45 0.1\n"
            "mass likely_minspec over w:\n"
            "  {w1 w2} 0.9\n"
            "  {w1 w2 w3} 0.1\n"
            "pi likely_minspec_pi over w: 1 1 0.1\n"
        )

    def test_inline_statement(self):
        out = run("elicit", "--frame", "w", "--core", "{w3}", "--alpha", "1.0",
                  "--method", "maxent").output
        assert out == "prob elicited_maxent over w: 0 0 1\n"

    def test_check_method(self):
        out = run("elicit", "--statement", "likely", "--method", "check").output
        assert "subsets checked: 8" in out
        assert "bracket holds: yes" in out

    def test_statement_excludes_inline(self):
        result = run("elicit", "--statement", "likely", "--alpha", "0.5", expect_exit=2)
        assert "excludes" in result.stderr

    def test_inline_requires_all_three(self):
        result = run("elicit", "--frame", "w", "--core", "{w1}", expect_exit=2)
        assert "all of" in result.stderr

    def test_unknown_statement(self):
        result = run("elicit", "--statement", "ghost", expect_exit=1)
        assert "unknown statement 'ghost'" in result.stderr

    def test_csv_parts(self):
        out = run("--csv", "elicit", "--statement", "likely").output
        lines = out.splitlines()
        assert lines[0] == "part,key,value"
        assert "p,w1,0.450000" in lines
        assert "focal,{w1 w2},0.900000" in lines
        assert "pi,w3,0.100000" in lines


class TestTriangle:
    def test_always_csv_row(self):
        assert run("triangle", "nested", "{w1}").output == "nested,0.500000,0.000000,possibilistic-axes,\n"

    def test_prob_object(self):
        assert run("triangle", "flat", "{w1}").output == "flat,0.200000,0.800000,probabilistic-edge,\n"

    def test_trivial_subset_rejected(self):
        result = run("triangle", "nested", "{}", expect_exit=1)
        assert "contingent" in result.stderr


class TestSimpleCommands:
    def test_cardinality(self):
        assert run("cardinality", "nested").output == "expected cardinality = 1.7\n"

    def test_cardinality_csv(self):
        assert run("--csv", "cardinality", "nested").output == (
            "mass,expected_cardinality\nnested,1.700000\n")

    def test_classify(self):
        assert run("classify", "nested").output == "classification = consonant (labels: consonant)\n"

    def test_classify_csv(self):
        assert run("--csv", "classify", "torn").output == "mass,tag,labels\ntorn,general,general\n"

    def test_check(self):
        out = run("check", "likely").output
        assert out.splitlines()[-1] == "bracket holds: yes"

    def test_check_csv(self):
        out = run("--csv", "check", "likely").output
        lines = out.splitlines()
        assert lines[0] == "subsets_checked,max_violation,tightest_width,tightest_subset,holds"
        assert lines[1].startswith("8,0.000000,0.100000,{w1 w2},true")

    def test_check_unknown(self):
        result = run("check", "ghost", expect_exit=1)
        assert "unknown statement 'ghost'" in result.stderr


class TestPlumbing:
    def test_out_writes_file(self, tmp_path):
        target = tmp_path / "result.txt"
        runner = CliRunner()
        result = runner.invoke(
            main, ["--doc", "-", "--out", str(target), "cardinality", "nested"], input=DOC)
        assert result.exit_code == 0
        assert result.output == ""
        assert target.read_text() == "expected cardinality = 1.7\n"

    def test_doc_parse_error_is_one_line(self):
        result = run("classify", "nested", doc="frame w: w1\nnonsense here", expect_exit=1)
        assert result.stderr.startswith("Error: line 2:")
        assert "Traceback" not in result.stderr

    def test_missing_doc_is_usage_error(self):
        result = CliRunner().invoke(main, ["classify", "nested"])
        assert result.exit_code == 2

    def test_doc_file_path(self, repo_root):
        result = CliRunner().invoke(
            main, ["--doc", "samples/horse_race.txt", "cardinality", "horse_leaky"])
        assert result.exit_code == 0
        assert result.output == "expected cardinality = 2.2\n"
