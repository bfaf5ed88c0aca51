"""Command-line surface: reproducible ensembles and figure-ready CSVs.

Subcommands: generate, count, table, spectrum, density, spacings, meanjth,
genus, degrees, walks, enumerate.  Exit codes: 0 success, 2 validation
error, 3 sampling budget exhausted, 4 I/O error.
"""

from __future__ import annotations

import argparse
import contextlib
import sys
from dataclasses import dataclass

from . import counting, samplers, stats, topology
from .errors import (
    BudgetExhaustedError,
    EmptyEnsembleError,
    GluingError,
    MixedSizesError,
    OutOfRangeError,
    ParseError,
    TooLargeError,
)
from .mapcore import EnsembleRecord, build_adjacency, read_records, write_records
from .samplers import RngStream
from .spectra import eigenvalues_symmetric

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_BUDGET = 3
EXIT_IO = 4


@dataclass
class ExperimentConfig:
    """Validated knobs for one generation run."""

    n: int
    samples: int
    sampler: str
    master_seed: int
    target_genus: int | None = None
    budget: int = 10_000
    bulk_fraction: float = stats.DEFAULT_BULK_FRACTION
    bins: int = stats.DEFAULT_BINS
    output_path: str | None = None
    format: str = "csv"

    def validate(self) -> None:
        if self.samples < 1:
            raise OutOfRangeError("need --samples >= 1")
        if self.n < 1:
            raise OutOfRangeError("need --n >= 1")
        if not 0.0 < self.bulk_fraction <= 1.0:
            raise OutOfRangeError("--bulk-fraction must lie in (0, 1]")
        if self.sampler == "genus-filtered":
            if self.target_genus is None:
                raise OutOfRangeError("--genus is required with --sampler genus-filtered")
        elif self.target_genus is not None:
            raise OutOfRangeError("--genus only applies to --sampler genus-filtered")


def _fmt(x: float) -> str:
    return f"{x:.12g}"


@contextlib.contextmanager
def _open_out(path: str | None):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            yield fh


def _records_to_spectra(records: list[EnsembleRecord]):
    return [eigenvalues_symmetric(build_adjacency(rec.gluing)) for rec in records]


def cmd_generate(args) -> int:
    config = ExperimentConfig(
        n=args.n,
        samples=args.samples,
        sampler=args.sampler,
        master_seed=args.seed,
        target_genus=args.genus,
        budget=args.budget,
        output_path=args.out,
    )
    config.validate()
    records = []
    if config.sampler == "genus-filtered":
        result = samplers.sample_genus_filtered(
            config.n,
            config.target_genus,
            config.budget,
            RngStream(config.master_seed, 0),
            num_samples=config.samples,
        )
        gluings = result.gluings
    else:
        draw = (
            samplers.sample_uniform_gluing
            if config.sampler == "uniform"
            else samplers.sample_ncpp
        )
        gluings = [
            draw(config.n, RngStream(config.master_seed, i)) for i in range(config.samples)
        ]
    for i, g in enumerate(gluings):
        records.append(
            EnsembleRecord(
                gluing=g, genus=topology.genus(g), seed=config.master_seed, sample_index=i
            )
        )
    with _open_out(config.output_path) as fh:
        write_records(fh, records)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    stream = (
        samplers.enumerate_ncpp(args.n) if args.kind == "ncpp" else samplers.enumerate_all_gluings(args.n)
    )
    with _open_out(args.out) as fh:
        for i, g in enumerate(stream):
            rec = EnsembleRecord(gluing=g, genus=topology.genus(g), seed=0, sample_index=i)
            fh.write(rec.to_json() + "\n")
    return EXIT_OK


def cmd_count(args) -> int:
    print(counting.harer_zagier(args.g, args.n))
    return EXIT_OK


def cmd_table(args) -> int:
    dist = counting.genus_distribution(args.n)
    parts = [f"{g}:{count}" for g, count in enumerate(dist)]
    parts.append(f"total:{sum(dist)}")
    print(" ".join(parts))
    return EXIT_OK


def cmd_spectrum(args) -> int:
    records = read_records(args.ensemble)
    if not records:
        raise EmptyEnsembleError("ensemble file has no records")
    with _open_out(args.out) as fh:
        for rec in records:
            spectrum = eigenvalues_symmetric(build_adjacency(rec.gluing))
            fh.write(",".join(_fmt(v) for v in spectrum.values) + "\n")
    return EXIT_OK


def cmd_density(args) -> int:
    records = read_records(args.ensemble)
    spectra = _records_to_spectra(records)
    hist = stats.empirical_density(spectra, bins=args.bins)
    mckay = stats.mckay_density(hist.bin_centers, k=3)
    with _open_out(args.out) as fh:
        fh.write("bin_center,density,mckay\n")
        for c, d, m in zip(hist.bin_centers, hist.densities, mckay):
            fh.write(f"{_fmt(c)},{_fmt(d)},{_fmt(m)}\n")
    return EXIT_OK


def cmd_spacings(args) -> int:
    records = read_records(args.ensemble)
    spectra = _records_to_spectra(records)
    hist = stats.spacing_distribution(spectra, bulk_fraction=args.bulk_fraction, bins=args.bins)
    surmise = stats.goe_surmise_density(hist.bin_centers)
    expo = stats.exponential_density(hist.bin_centers)
    with _open_out(args.out) as fh:
        fh.write("bin_center,density,goe_surmise,exponential\n")
        for c, d, s, e in zip(hist.bin_centers, hist.densities, surmise, expo):
            fh.write(f"{_fmt(c)},{_fmt(d)},{_fmt(s)},{_fmt(e)}\n")
    return EXIT_OK


def cmd_meanjth(args) -> int:
    records = read_records(args.ensemble)
    spectra = _records_to_spectra(records)
    means = stats.mean_jth_spacing(spectra)
    with _open_out(args.out) as fh:
        fh.write("j,mean_spacing\n")
        for j, value in enumerate(means, start=1):
            fh.write(f"{j},{_fmt(value)}\n")
    return EXIT_OK


def cmd_genus(args) -> int:
    records = read_records(args.ensemble)
    with _open_out(args.out) as fh:
        if args.format == "json":
            for rec in records:
                fh.write(
                    f'{{"sample_index":{rec.sample_index},"genus":{topology.genus(rec.gluing)}}}\n'
                )
        else:
            fh.write("sample_index,genus\n")
            for rec in records:
                fh.write(f"{rec.sample_index},{topology.genus(rec.gluing)}\n")
    return EXIT_OK


def cmd_degrees(args) -> int:
    records = read_records(args.ensemble)
    if not records:
        raise EmptyEnsembleError("ensemble file has no records")
    totals: dict[int, int] = {}
    for rec in records:
        for degree, count in topology.degree_distribution(rec.gluing).items():
            totals[degree] = totals.get(degree, 0) + count
    with _open_out(args.out) as fh:
        if args.format == "json":
            for degree in sorted(totals):
                fh.write(
                    f'{{"degree":{degree},"mean_count":{_fmt(totals[degree] / len(records))}}}\n'
                )
        else:
            fh.write("degree,mean_count\n")
            for degree in sorted(totals):
                fh.write(f"{degree},{_fmt(totals[degree] / len(records))}\n")
    return EXIT_OK


def cmd_walks(args) -> int:
    records = read_records(args.ensemble)
    with _open_out(args.out) as fh:
        header = ",".join(f"w{r}" for r in range(1, args.rmax + 1))
        fh.write(f"sample_index,{header}\n")
        for rec in records:
            walks = topology.closed_walk_counts(build_adjacency(rec.gluing), args.rmax)
            fh.write(f"{rec.sample_index}," + ",".join(str(w) for w in walks) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="onefacemaps",
        description="Random one-face maps, their topology, and eigenvalue statistics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="sample an ensemble to a JSON-lines file")
    p.add_argument("--n", type=int, required=True, help="number of map edges")
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--sampler", choices=["uniform", "ncpp", "genus-filtered"], default="uniform")
    p.add_argument("--genus", type=int, default=None, help="target genus (genus-filtered only)")
    p.add_argument("--budget", type=int, default=10_000, help="max draws for genus filtering")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("enumerate", help="stream every gluing of a small map size")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kind", choices=["all", "ncpp"], default="all")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("count", help="print the exact number of genus-g maps with n edges")
    p.add_argument("g", type=int)
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("table", help="print the full genus distribution for n edges")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("spectrum", help="eigenvalues of each map, one CSV row per record")
    p.add_argument("ensemble")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("density", help="pooled eigenvalue density with reference curve")
    p.add_argument("ensemble")
    p.add_argument("--bins", type=int, default=stats.DEFAULT_BINS)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("spacings", help="scaled bulk spacing distribution with references")
    p.add_argument("ensemble")
    p.add_argument("--bins", type=int, default=stats.DEFAULT_BINS)
    p.add_argument("--bulk-fraction", type=float, default=stats.DEFAULT_BULK_FRACTION)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_spacings)

    p = sub.add_parser("meanjth", help="mean j-th spacing as a function of j")
    p.add_argument("ensemble")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_meanjth)

    p = sub.add_parser("genus", help="genus of each record")
    p.add_argument("ensemble")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_genus)

    p = sub.add_parser("degrees", help="mean vertex-degree counts over an ensemble")
    p.add_argument("ensemble")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_degrees)

    p = sub.add_parser("walks", help="closed-walk counts per record")
    p.add_argument("ensemble")
    p.add_argument("--rmax", type=int, default=10)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_walks)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExhaustedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (GluingError, OutOfRangeError, TooLargeError, ParseError, EmptyEnsembleError,
            MixedSizesError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
