from pgl2coh.report import consistency_report, format_report


def test_recorded_findings_are_flagged_with_locations():
    findings = {f.key: f for f in consistency_report()}
    for key in ("sector-count", "g2-sign-convention", "missing-8Q"):
        f = findings[key]
        assert f.recorded and f.confirmed
        assert "paper.md line" in f.location
    assert "15" in findings["sector-count"].evidence
    assert "a^2 - b" in findings["g2-sign-convention"].evidence


def test_extra_findings():
    findings = {f.key: f for f in consistency_report()}
    assert findings["beta-threshold"].confirmed
    assert findings["recursion-start"].confirmed
    assert not findings["beta-threshold"].recorded


def test_format():
    text = format_report()
    assert text.count("[FLAG]") == len(consistency_report())
