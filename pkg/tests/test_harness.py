import pytest

from elps.harness import (
    FIXTURE_CASES,
    FixtureMismatch,
    PROPERTY_ROWS,
    SEMANTICS_COLUMNS,
    build_property_matrix,
    require_fixtures,
    run_fixture_checks,
)
from elps.semantics import SemanticsId


def test_fixture_expectations_all_pass():
    results = require_fixtures()
    assert results and all(r.ok for r in results)


def test_every_expectation_carries_provenance():
    for case in FIXTURE_CASES:
        assert case.provenance.strip()


def test_fixture_mismatch_aborts_with_diff(tmp_path):
    src = __import__("elps.harness", fromlist=["fixtures_dir"]).fixtures_dir()
    for path in src.glob("*.elp"):
        (tmp_path / path.name).write_text(path.read_text(encoding="utf-8"), encoding="utf-8")
    # tamper with one fixture: ka.elp becomes a plain fact
    (tmp_path / "ka.elp").write_text("a.\n", encoding="utf-8")
    with pytest.raises(FixtureMismatch) as exc:
        require_fixtures(corpus_dir=tmp_path)
    assert any(f.fixture == "ka" for f in exc.value.failures)
    assert "expected" in str(exc.value)


# the expected checkmark pattern per property row, in column order
# (g91, g11, f15, k15, s17, c19)
EXPECTED_ROWS = {
    "supra_s5": ["holds"] * 6,
    "supra_asp": ["holds"] * 6,
    "subjective_constraint_monotonicity": ["holds", "holds", "violated", "violated", "violated", "holds"],
    "epistemic_splitting": ["holds", "violated", "violated", "violated", "violated", "holds"],
}


@pytest.fixture(scope="module")
def matrix():
    return build_property_matrix(seed=2025, count=6)


def test_matrix_reproduces_published_rows(matrix):
    for prop, expected in EXPECTED_ROWS.items():
        actual = [matrix.cell(prop, s).verdict for s in SEMANTICS_COLUMNS]
        assert actual == expected, (prop, actual)


def test_blank_cells_carry_witnesses(matrix):
    for prop in PROPERTY_ROWS:
        for semantics in SEMANTICS_COLUMNS:
            cell = matrix.cell(prop, semantics)
            if cell.verdict == "violated":
                assert cell.violations, (prop, semantics)
                for report in cell.violations:
                    assert report.witness() is not None
            if cell.verdict == "holds":
                assert cell.checks > 0 and not cell.violations


def test_foundness_column(matrix):
    assert matrix.foundness[SemanticsId.C19.value].verdict == "holds"
    g91 = matrix.foundness[SemanticsId.G91.value]
    assert g91.verdict == "violated"  # the self-supported world view is the witness
    assert any("K a" in v.program for v in g91.violations)
    for semantics in (SemanticsId.G11, SemanticsId.K15, SemanticsId.S17, SemanticsId.F15):
        assert matrix.foundness[semantics.value].verdict == "untested"


def test_matrix_json_shape(matrix):
    payload = matrix.to_json()
    assert payload["columns"] == [s.value for s in SEMANTICS_COLUMNS]
    assert set(payload["rows"]) == set(PROPERTY_ROWS)
    cell = payload["rows"]["epistemic_splitting"]["g11"]
    assert cell["verdict"] == "violated"
    assert cell["violations"][0]["property"] == "epistemic_splitting"


def test_matrix_render_contains_marks(matrix):
    text = matrix.render()
    assert "Supra-S5" in text and "Splitting" in text and "✓" in text


def test_run_fixture_checks_includes_f15_on_tiny_corpus():
    results = run_fixture_checks()
    f15_checked = {r.fixture for r in results if r.semantics == "f15"}
    assert {"ab", "ce1a", "ce1b", "ce2", "ka"} <= f15_checked
    assert "college" not in f15_checked  # capacity skip, recorded as such
