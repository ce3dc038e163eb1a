"""Command-line interface: formats, exit codes, CSV files."""

from click.testing import CliRunner

from repstab.cli import format_charpoly, main
from repstab.charpoly import young_to_charpoly
from repstab.partitions import Partition, parse_partition


def invoke(*args):
    return CliRunner().invoke(main, list(args))


def test_series_standard_family():
    result = invoke("series", "1", "--max-degree", "4")
    assert result.exit_code == 0
    assert result.output.strip() == "-z^1 + 2z^2 - 2z^3 + 2z^4"


def test_series_trivial_family():
    result = invoke("series", "0", "--max-degree", "2")
    assert result.exit_code == 0
    assert result.output.strip() == "1 - z^1"


def test_series_accepts_comma_form():
    assert invoke("series", "2,1", "--max-degree", "4").output.strip() == (
        "2z^2 - 7z^3 + 16z^4"
    )


def test_series_rejects_malformed_partition():
    result = invoke("series", "1,0", "--max-degree", "4")
    assert result.exit_code == 2
    assert "non-increasing positive parts" in result.output


def test_series_rejects_increasing_parts():
    assert invoke("series", "1,2").exit_code == 2


def test_series_writes_csv(tmp_path):
    path = tmp_path / "row.csv"
    result = invoke("series", "1", "--max-degree", "2", "--csv", str(path))
    assert result.exit_code == 0
    assert path.read_text() == "partition,i,d_i\n1,0,0\n1,1,1\n1,2,2\n"


def test_cohomology_degree_zero():
    result = invoke("cohomology", "0")
    assert result.exit_code == 0
    assert result.output.strip() == "V(0)"


def test_cohomology_degree_one():
    result = invoke("cohomology", "1")
    assert result.exit_code == 0
    assert result.output.strip() == "V(0) + V(1) + V(2)"


def test_cohomology_degree_two_ends_at_3_1():
    result = invoke("cohomology", "2")
    terms = result.output.strip().split(" + ")
    assert len(terms) == 6
    assert terms[-1] == "V(3,1)"


def test_cohomology_csv(tmp_path):
    path = tmp_path / "h1.csv"
    invoke("cohomology", "1", "--csv", str(path))
    assert path.read_text() == "partition,i,d_i\n0,1,1\n1,1,1\n2,1,1\n"


def test_table_writes_published_rows(tmp_path):
    path = tmp_path / "table.csv"
    result = invoke(
        "table", "--max-size", "2", "--max-degree", "4", "--out", str(path)
    )
    assert result.exit_code == 0
    lines = path.read_text().splitlines()
    assert lines[0] == "partition,i,d_i"
    assert "1,2,2" in lines
    assert "2,4,6" in lines
    assert len(lines) == 1 + 4 * 5  # four families, degrees 0..4


def test_table_threads_are_byte_identical(tmp_path):
    one = tmp_path / "one.csv"
    four = tmp_path / "four.csv"
    invoke("table", "--max-size", "3", "--max-degree", "6", "--out", str(one))
    invoke(
        "table", "--max-size", "3", "--max-degree", "6", "--out", str(four),
        "--threads", "4",
    )
    assert one.read_bytes() == four.read_bytes()


def test_charpoly_standard_family():
    result = invoke("charpoly", "1")
    assert result.exit_code == 0
    assert result.output.strip() == "(X1 C 1) - 1"


def test_charpoly_wedge_square():
    result = invoke("charpoly", "1+1")
    assert result.output.strip() == "(X1 C 2) - (X1 C 1) - (X2 C 1) + 1"


def test_format_charpoly_round_trip_sanity():
    text = format_charpoly(young_to_charpoly(Partition((2,))))
    assert text == "(X1 C 2) - (X1 C 1) + (X2 C 1)"


def test_chartable_output():
    result = invoke("chartable", "3")
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert lines[0].split() == ["mu", "\\", "rho", "3", "2+1", "1+1+1"]
    assert lines[1].split() == ["3", "1", "1", "1"]
    assert lines[2].split() == ["2+1", "-1", "0", "2"]
    assert lines[3].split() == ["1+1+1", "1", "-1", "1"]


def test_chartable_csv(tmp_path):
    path = tmp_path / "s2.csv"
    invoke("chartable", "2", "--csv", str(path))
    assert path.read_text() == (
        "mu,rho,value\n2,2,1\n2,1+1,1\n1+1,2,-1\n1+1,1+1,1\n"
    )


def test_verify_passes():
    result = invoke("verify", "--max-i", "2")
    assert result.exit_code == 0
    assert "RESULT: PASS" in result.output


def test_verify_rejects_negative():
    assert invoke("verify", "--max-i", "-1").exit_code == 2


def test_partition_round_trip_through_cli_output():
    # every partition printed by cohomology re-parses to the same value
    result = invoke("cohomology", "2")
    for term in result.output.strip().split(" + "):
        inside = term.split("(")[1].split(")")[0]
        if inside == "0":
            assert parse_partition(inside) == Partition()
        else:
            assert parse_partition(inside.replace(",", "+")).parts == tuple(
                int(x) for x in inside.split(",")
            )


def test_usage_error_exit_codes():
    assert invoke("series", "not-a-partition").exit_code == 2
    assert invoke("cohomology", "-3").exit_code == 2
    assert invoke("table", "--max-size", "2", "--max-degree", "-1",
                  "--out", "x.csv").exit_code == 2
