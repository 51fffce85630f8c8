from fractions import Fraction as F

from jtqes.records import ResultRecord, rat, unrat


def test_rational_strings_roundtrip():
    vals = [F(1, 3), F(-7, 2), F(5), F(0), F(10**40 + 1, 10**39)]
    for v in vals:
        assert unrat(rat(v)) == v


def test_record_roundtrip_preserves_exact_strings():
    rec = ResultRecord(
        command="juddian",
        inputs={"k": rat(F(1, 2)), "j": rat(F(-3, 2))},
        outputs={"points": [{"kappa_sq_lower": rat(F(21, 160))}], "count": 1},
        notes=["a note"],
        timing_seconds=0.25,
    )
    back = ResultRecord.from_json(rec.to_json())
    assert back.inputs == rec.inputs
    assert back.outputs == rec.outputs
    assert unrat(back.outputs["points"][0]["kappa_sq_lower"]) == F(21, 160)


def test_records_are_deterministic_up_to_timing():
    a = ResultRecord("spectrum", {"j": "0"}, {"rows": [{"e0": 1.5}]}, [], 0.1)
    b = ResultRecord("spectrum", {"j": "0"}, {"rows": [{"e0": 1.5}]}, [], 99.0)
    ja = ResultRecord.from_json(a.to_json())
    jb = ResultRecord.from_json(b.to_json())
    assert ja.inputs == jb.inputs and ja.outputs == jb.outputs


def test_csv_flattens_rows_to_floats():
    rec = ResultRecord("spectrum", {}, {"rows": [
        {"kappa": 0.5, "e0": 1.25, "exact": "1/4"},
        {"kappa": 1.0, "e0": 0.75, "exact": "3/4"},
    ]})
    text = rec.to_csv()
    lines = text.strip().splitlines()
    assert lines[0] == "kappa,e0,exact"
    assert lines[1] == "0.5,1.25,0.25"
    assert lines[2] == "1.0,0.75,0.75"


def test_csv_scalar_fallback():
    rec = ResultRecord("compare-printed", {}, {"verdict": "MATCH", "constant": "1/2"})
    lines = rec.to_csv().strip().splitlines()
    assert lines[0] == "verdict,constant"
    assert lines[1] == "MATCH,0.5"


def test_schema_version_present():
    rec = ResultRecord("presets", {}, {})
    assert '"schema_version": "1"' in rec.to_json()
