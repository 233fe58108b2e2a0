import json

from octacolor.emg import EnhancedMultigraph
from octacolor.families import gen_spiral, load_bundled
from octacolor.pipeline import frac_str, run_check, run_survey


def test_check_report_spiral3(spiral3):
    report = run_check(spiral3, name="spiral-k3", max_len=2)
    assert report.ok
    assert report.system["rank"] == 10
    assert report.form["signature"] == [1, 3, 0]
    assert all(r["identity_holds"] for r in report.realizations)
    # serializes without floats in exact fields
    data = json.dumps(report.to_json_dict())
    assert "signature" in data


def test_check_report_stops_on_implausible(spiral3):
    red = spiral3.red_edges()[0]
    edges = tuple(e for e in spiral3.edges if e.id != red.id)
    rotations = tuple((vid, tuple(d for d in rot if d[0] != red.id))
                      for vid, rot in spiral3.rotations)
    broken = EnhancedMultigraph(spiral3.vertices, edges, rotations)
    report = run_check(broken, name="broken")
    assert not report.ok
    assert not report.validation["plausible"]
    assert report.realizations == []


def test_check_exact_values_are_strings(hexpair):
    report = run_check(hexpair, name="hexagon-pair", max_len=1)
    for row in report.form["global_matrix"]:
        assert all(isinstance(x, str) for x in row)
    for point in report.lattice["points"]:
        assert all(isinstance(x, str) for x in point["vector"])
    for entry in report.realizations:
        for c in entry["cone_points"]:
            assert set(c) == {"x", "ys3"}


def test_survey_rows():
    out = run_survey([("hexagon-pair", load_bundled("hexagon-pair"))])
    row = out["survey"][0]
    assert row["plausible"] and row["signature"] == [1, 3, 0]


def test_frac_str():
    from fractions import Fraction
    assert frac_str(Fraction(3, 6)) == "1/2"
    assert frac_str(7) == "7"
