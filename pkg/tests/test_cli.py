import numpy as np
import pytest

from onefacemaps import cli, read_records
from onefacemaps.stats import mckay_density


def run(*argv) -> int:
    return cli.main([str(a) for a in argv])


def test_generate_ncpp_records(tmp_path):
    out = tmp_path / "ens.jsonl"
    assert run("generate", "--sampler", "ncpp", "--n", 40, "--samples", 6, "--seed", 7, "--out", out) == 0
    records = read_records(out)
    assert len(records) == 6
    assert [r.sample_index for r in records] == list(range(6))
    assert all(r.genus == 0 for r in records)
    assert all(r.seed == 7 for r in records)
    assert all(r.n == 40 for r in records)


def test_generate_is_byte_deterministic(tmp_path):
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    for out in (a, b):
        assert run("generate", "--sampler", "uniform", "--n", 30, "--samples", 10,
                   "--seed", 123, "--out", out) == 0
    assert a.read_bytes() == b.read_bytes()


def test_generate_genus_filtered(tmp_path):
    out = tmp_path / "filtered.jsonl"
    assert run("generate", "--sampler", "genus-filtered", "--n", 4, "--samples", 5,
               "--genus", 0, "--budget", 1000, "--seed", 3, "--out", out) == 0
    records = read_records(out)
    assert len(records) == 5
    assert all(r.genus == 0 for r in records)


def test_generate_budget_exhausted_exit_code(tmp_path):
    out = tmp_path / "never.jsonl"
    code = run("generate", "--sampler", "genus-filtered", "--n", 50, "--samples", 1,
               "--genus", 0, "--budget", 50, "--seed", 3, "--out", out)
    assert code == 3


def test_generate_validation_exit_code(tmp_path):
    code = run("generate", "--sampler", "genus-filtered", "--n", 10, "--samples", 1,
               "--seed", 0, "--out", tmp_path / "x.jsonl")
    assert code == 2  # --genus missing
    code = run("generate", "--sampler", "uniform", "--n", 10, "--samples", 1,
               "--genus", 2, "--seed", 0, "--out", tmp_path / "y.jsonl")
    assert code == 2  # --genus without genus-filtered


def test_count_and_table(capsys):
    assert run("count", 1, 2) == 0
    assert capsys.readouterr().out.strip() == "1"
    assert run("count", 0, 10) == 0
    assert capsys.readouterr().out.strip() == "16796"
    assert run("table", 3) == 0
    assert capsys.readouterr().out.strip() == "0:5 1:10 total:15"


def test_count_out_of_range_exit_code():
    assert run("count", 3, 4) == 2


def test_enumerate_ncpp(tmp_path):
    out = tmp_path / "all.jsonl"
    assert run("enumerate", "--n", 4, "--kind", "ncpp", "--out", out) == 0
    records = read_records(out)
    assert len(records) == 14
    assert all(r.genus == 0 for r in records)


def test_enumerate_all(tmp_path):
    out = tmp_path / "all.jsonl"
    assert run("enumerate", "--n", 3, "--out", out) == 0
    assert len(read_records(out)) == 15


@pytest.fixture()
def small_ensemble(tmp_path):
    path = tmp_path / "ens.jsonl"
    assert run("generate", "--sampler", "uniform", "--n", 25, "--samples", 8,
               "--seed", 11, "--out", path) == 0
    return path


def test_spectrum_rows(small_ensemble, tmp_path):
    out = tmp_path / "spec.csv"
    assert run("spectrum", small_ensemble, "--out", out) == 0
    rows = out.read_text().strip().splitlines()
    assert len(rows) == 8
    values = [float(v) for v in rows[0].split(",")]
    assert len(values) == 50
    assert values == sorted(values)
    assert abs(values[-1] - 3.0) < 1e-8


def test_density_csv_with_reference_column(small_ensemble, tmp_path):
    out = tmp_path / "density.csv"
    assert run("density", small_ensemble, "--bins", 40, "--out", out) == 0
    rows = out.read_text().strip().splitlines()
    assert rows[0] == "bin_center,density,mckay"
    assert len(rows) == 41
    centers, densities, refs = zip(*(map(float, r.split(",")) for r in rows[1:]))
    assert np.allclose(refs, mckay_density(np.array(centers), 3), atol=1e-9)
    widths = 6.0 / 40
    assert abs(sum(d * widths for d in densities) - 1.0) < 1e-9


def test_spacings_csv(small_ensemble, tmp_path):
    out = tmp_path / "spacings.csv"
    assert run("spacings", small_ensemble, "--bins", 30, "--bulk-fraction", 0.9,
               "--out", out) == 0
    rows = out.read_text().strip().splitlines()
    assert rows[0] == "bin_center,density,goe_surmise,exponential"
    assert len(rows) == 31


def test_meanjth_csv(small_ensemble, tmp_path):
    out = tmp_path / "meanjth.csv"
    assert run("meanjth", small_ensemble, "--out", out) == 0
    rows = out.read_text().strip().splitlines()
    assert rows[0] == "j,mean_spacing"
    assert len(rows) == 50  # header + 2n-1 spacings
    assert rows[1].startswith("1,")


def test_genus_csv_and_json(small_ensemble, tmp_path):
    out = tmp_path / "genus.csv"
    assert run("genus", small_ensemble, "--out", out) == 0
    rows = out.read_text().strip().splitlines()
    assert rows[0] == "sample_index,genus"
    assert len(rows) == 9
    out_json = tmp_path / "genus.jsonl"
    assert run("genus", small_ensemble, "--format", "json", "--out", out_json) == 0
    assert out_json.read_text().count('"genus"') == 8


def test_degrees_csv(small_ensemble, tmp_path):
    out = tmp_path / "degrees.csv"
    assert run("degrees", small_ensemble, "--out", out) == 0
    rows = out.read_text().strip().splitlines()
    assert rows[0] == "degree,mean_count"
    assert len(rows) > 1


def test_walks_csv(small_ensemble, tmp_path):
    out = tmp_path / "walks.csv"
    assert run("walks", small_ensemble, "--rmax", 5, "--out", out) == 0
    rows = out.read_text().strip().splitlines()
    assert rows[0] == "sample_index,w1,w2,w3,w4,w5"
    assert len(rows) == 9
    first = rows[1].split(",")
    assert first[1] == "0"  # w1 = 0, zero diagonal


def test_statistics_outputs_deterministic(small_ensemble, tmp_path):
    outs = []
    for tag in ("x", "y"):
        out = tmp_path / f"density_{tag}.csv"
        assert run("density", small_ensemble, "--out", out) == 0
        outs.append(out.read_bytes())
    assert outs[0] == outs[1]


def test_missing_input_file_is_io_error(tmp_path):
    assert run("spectrum", tmp_path / "nope.jsonl", "--out", tmp_path / "o.csv") == 4


def test_corrupt_ensemble_is_validation_error(tmp_path):
    bad = tmp_path / "bad.jsonl"
    bad.write_text('{"n": 2, "partner": [1, 2')
    assert run("genus", bad, "--out", tmp_path / "o.csv") == 2
