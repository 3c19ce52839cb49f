import io
import subprocess
import sys
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from wittenlab.cli import run
from wittenlab.psi import CorrelatorCache, psi_correlator
from wittenlab.records import (
    CACHE_HEADER,
    CacheFormatError,
    TableRecord,
    cache_roundtrip,
    export_cache,
    import_cache,
    psi_record,
    read_cache,
)


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@given(st.fractions(max_denominator=10**12))
def test_record_line_roundtrip(x):
    rec = TableRecord.exact("hodge", ("1", "0", "1"), x)
    back = TableRecord.from_line(rec.to_line())
    assert back == rec and back.rational == x


def test_record_validation():
    with pytest.raises(ValueError):
        TableRecord("psi", ("1",), "1")
    with pytest.raises(ValueError):
        TableRecord("weird", ("1", "1"), "1")
    with pytest.raises(ValueError):
        TableRecord("psi", ("1", "1"), "1", "guessed")
    with pytest.raises(ValueError):
        TableRecord("psi", ("1", "1\t2"), "1")


def test_empty_cache_writes_header_only(tmp_path):
    path = tmp_path / "empty.cache"
    assert export_cache(path, CorrelatorCache()) == 0
    assert path.read_text() == CACHE_HEADER + "\n"
    assert read_cache(path) == []


def test_cache_line_for_base_value(tmp_path):
    cache = CorrelatorCache()
    psi_correlator(1, [1], cache)
    path = tmp_path / "one.cache"
    export_cache(path, cache)
    lines = path.read_text().splitlines()
    assert lines[0] == CACHE_HEADER
    assert "psi\t1\t1\t1/24\tcomputed" in lines


def test_roundtrip_is_exact(tmp_path):
    cache = CorrelatorCache()
    psi_correlator(3, [3, 3, 2, 2], cache)
    assert len(cache) > 10
    assert cache_roundtrip(tmp_path / "rt.cache", cache)


def test_corrupt_line_reports_line_number(tmp_path):
    path = tmp_path / "bad.cache"
    path.write_text(f"{CACHE_HEADER}\npsi\t1\t1\t1/24\tcomputed\npsi\t2\t4\tone\tcomputed\n")
    with pytest.raises(CacheFormatError) as info:
        read_cache(path)
    assert info.value.lineno == 3
    assert ":3:" in str(info.value)


def test_missing_header_rejected(tmp_path):
    path = tmp_path / "nohdr.cache"
    path.write_text("psi\t1\t1\t1/24\tcomputed\n")
    with pytest.raises(CacheFormatError) as info:
        read_cache(path)
    assert info.value.lineno == 1


def test_import_loads_values(tmp_path):
    path = tmp_path / "v.cache"
    path.write_text(f"{CACHE_HEADER}\n" + psi_record(2, (4,), Fraction(1, 1152)).to_line() + "\n")
    cache = CorrelatorCache()
    records = import_cache(path, cache)
    assert len(records) == 1
    assert dict(cache.items())[next(iter(dict(cache.items())))] == Fraction(1, 1152)


def test_cli_psi():
    code, out, _ = cli("psi", "--genus", "2", "--exponents", "4")
    assert code == 0
    assert "1/1152" in out


def test_cli_lines_format_is_a_record():
    code, out, _ = cli("--format", "lines", "psi", "--genus", "1", "--exponents", "1")
    rec = TableRecord.from_line(out.strip())
    assert code == 0 and rec.kind == "psi" and rec.rational == Fraction(1, 24)


def test_cli_hurwitz_brute():
    code, out, _ = cli("hurwitz", "--nu", "1,1,1", "--mu", "1,1,1", "--r", "4", "--connected", "--method", "brute")
    assert code == 0
    assert out.split()[-2] == "4"


def test_cli_hurwitz_frobenius_disconnected():
    code, out, _ = cli("--format", "lines", "hurwitz", "--nu", "1,1", "--mu", "1,1", "--r", "0",
                       "--method", "frobenius")
    assert code == 0 and TableRecord.from_line(out.strip()).rational == Fraction(1, 2)


@pytest.mark.parametrize("argv", [
    ("hurwitz", "--nu", "2", "--mu", "2", "--r", "0", "--connected", "--method", "frobenius"),
    ("hurwitz", "--nu", "2", "--mu", "1", "--r", "0"),
    ("hurwitz", "--nu", "1,1,1,1,1,1", "--mu", "6", "--r", "5"),
    ("psi", "--genus", "1", "--exponents", "a"),
    ("verify", "nothing"),
    ("verify", "dvv", "--precision-bits", "16"),
    (),
    ("import-cache", "/nonexistent/path.cache"),
])
def test_cli_usage_errors(argv):
    code, _, _ = cli(*argv)
    assert code == 2


def test_cli_verify_virasoro():
    code, out, _ = cli("verify", "virasoro", "--max-index", "7", "--max-degree", "6")
    assert code == 0
    assert "virasoro-convention" in out and "fail" not in out


def test_cli_verify_failure_exit_code():
    code, out, _ = cli("--format", "lines", "verify", "starstar")
    assert code == 1
    recs = [TableRecord.from_line(line) for line in out.splitlines()]
    assert all(r.value == "fail" for r in recs)
    assert all(r.key[2] != "-" for r in recs)


def test_cli_extract_hodge():
    code, out, _ = cli("--format", "lines", "extract-hodge")
    recs = [TableRecord.from_line(line) for line in out.splitlines()]
    assert code == 0
    values = {r.key: r.rational for r in recs if r.kind == "hodge"}
    assert values[("1", "0", "1")] == Fraction(1, 24)
    assert recs[-1].kind == "check" and recs[-1].value == "pass"


def test_cli_output_is_deterministic():
    argv = ("--format", "lines", "--threads", "3", "verify", "dvv", "sharp", "--max-genus", "1", "--max-points", "4")
    first, second = cli(*argv), cli(*argv)
    assert first == second
    assert first[0] == 0


def test_cli_cache_roundtrip(tmp_path):
    path = tmp_path / "c.cache"
    code, out, _ = cli("export-cache", str(path), "--genus", "1", "--points", "3")
    assert code == 0 and "records" in out
    code, out, _ = cli("--format", "lines", "import-cache", str(path))
    assert code == 0
    code, out, _ = cli("--format", "lines", "--cache", str(path), "psi", "--genus", "1", "--exponents", "1")
    assert TableRecord.from_line(out.strip()).provenance == "cached"


def test_cli_import_detects_wrong_value(tmp_path):
    path = tmp_path / "w.cache"
    path.write_text(f"{CACHE_HEADER}\n" + psi_record(2, (4,), Fraction(1, 1151)).to_line() + "\n")
    code, out, _ = cli("--format", "lines", "import-cache", str(path))
    assert code == 1
    assert "recomputed 1/1152" in out


def test_cli_import_reports_line_number(tmp_path):
    path = tmp_path / "m.cache"
    path.write_text(f"{CACHE_HEADER}\npsi\t1\t1\t1/24\tcomputed\nnot a record\n")
    code, _, err = cli("import-cache", str(path))
    assert code == 2
    assert ":3:" in err


def test_installed_entry_point():
    proc = subprocess.run([sys.executable, "-m", "wittenlab.cli", "psi", "--genus", "3", "--exponents", "7"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert "1/82944" in proc.stdout
