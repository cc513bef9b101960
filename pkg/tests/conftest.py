from hypothesis import settings

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

# criterion number -> (passed, seconds, limit, note), filled by test_acceptance
ACCEPTANCE: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, secs, limit, note = ACCEPTANCE[k]
        verdict = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"criterion {k}: {verdict} ({secs:.2f}s, limit {limit}s) {note}")
