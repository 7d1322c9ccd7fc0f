import pytest

from finfpp import assembly, fixtest, formats, library, scomplex

_ACCEPTANCE = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(n, title): acceptance criterion n")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("acceptance")
    if mark is None:
        return
    n, title = mark.args
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        _ACCEPTANCE[n] = (title, rep.outcome, getattr(item, "acceptance_detail", ""))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_ACCEPTANCE):
        title, outcome, detail = _ACCEPTANCE[n]
        status = "PASS" if outcome == "passed" else "FAIL"
        line = f"[{status}] {n:>2}. {title}"
        if detail:
            line += f" -- {detail}"
        terminalreporter.write_line(line)


# -- shared spaces ------------------------------------------------------------

@pytest.fixture(scope="session")
def boundary3():
    return library.simplex_boundary(3)


@pytest.fixture(scope="session")
def asym_boundary3(boundary3):
    """Asymmetrized boundary of the tetrahedron; its parent chain ends at ``boundary3``."""
    return fixtest.asymmetrize(boundary3)


@pytest.fixture(scope="session")
def realization10(boundary3, asym_boundary3):
    M = asym_boundary3.complex
    return assembly.RealizationDatum(2, M, scomplex.approximation_to_identity(M, boundary3))


@pytest.fixture(scope="session")
def realization24(boundary3):
    S = boundary3
    for f in boundary3.facets:
        S = scomplex.stellar_subdivide(S, f)
    M = fixtest.asymmetrize(S).complex
    return assembly.RealizationDatum(2, M, scomplex.approximation_to_identity(M, boundary3))


@pytest.fixture(scope="session")
def kun():
    return assembly.build_kun()


@pytest.fixture
def write_realization(tmp_path):
    """Write ``K`` plus realization files and return their paths."""
    def write(K, realizations):
        kpath = tmp_path / "K.scx"
        formats.write_json(kpath, K.to_json())
        items = []
        for i, r in enumerate(realizations):
            mname, fname = f"M{i}.scx", f"phi{i}.json"
            formats.write_json(tmp_path / mname, {"facets": [list(f) for f in r.M.facets]})
            formats.write_json(tmp_path / fname, formats.map_to_json(r.phi, mname, "K.scx"))
            items.append({"k": r.k, "M": mname, "map": fname})
        rpath = tmp_path / "R.json"
        formats.write_json(rpath, items)
        return str(kpath), str(rpath)
    return write
