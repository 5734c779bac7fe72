"""Command line front end.

Subcommands: gsvd, tikhonov, anova, ellipse, angles, reduce, jacobi,
verify.  Matrices come in as headerless CSV (RFC-4180 quoting, '.'
decimal); structured output is JSON with round-trip-exact floats, and
infinite generalized values are spelled as the token "inf", never as an
IEEE infinity.  Exit codes: 0 ok, 2 parse, 3 dimension/partition, 4 rank
precondition, 5 numeric failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

import numpy as np

from . import gsvd, jacobi, stats, subgeom, tikhonov
from .errors import (
    CsvParseError,
    DimensionMismatch,
    DomainError,
    GsvdKitError,
    InvalidPartition,
)
from .matcore import Tolerance

CSV_FMT = "%.17g"


# ---------------------------------------------------------------- file I/O

def read_matrix(path: str, header: bool = False) -> np.ndarray:
    rows = []
    try:
        with open(path, newline="", encoding="utf-8") as fh:
            reader = csv.reader(fh)
            for lineno, cells in enumerate(reader, start=1):
                if header and lineno == 1:
                    continue
                if not cells:
                    continue
                try:
                    row = [float(cell) for cell in cells]
                except ValueError as exc:
                    raise CsvParseError(f"{path}:{lineno}: {exc}") from exc
                if any(not np.isfinite(x) for x in row):
                    raise CsvParseError(f"{path}:{lineno}: non-finite value")
                if rows and len(row) != len(rows[0]):
                    raise CsvParseError(
                        f"{path}:{lineno}: expected {len(rows[0])} columns, got {len(row)}"
                    )
                rows.append(row)
    except OSError as exc:
        raise CsvParseError(f"{path}: {exc}") from exc
    if not rows:
        raise CsvParseError(f"{path}: no data rows")
    return np.array(rows, dtype=np.float64)


def read_vector(path: str, header: bool = False) -> np.ndarray:
    m = read_matrix(path, header)
    if 1 not in m.shape:
        raise DimensionMismatch(f"{path}: expected a single row or column, got {m.shape}")
    return m.ravel()


def write_matrix(path: str, m: np.ndarray) -> None:
    m = np.atleast_2d(m)
    with open(path, "w", encoding="utf-8") as fh:
        for row in m:
            fh.write(",".join(CSV_FMT % x for x in row))
            fh.write("\n")


def _listify(a: np.ndarray):
    return np.asarray(a, dtype=float).tolist()


# ----------------------------------------------------------- factor documents

def generalized_value_tokens(f: gsvd.GsvdFactors):
    """Finite values as numbers, infinite ones as the token "inf"."""
    out = []
    for i in range(f.r):
        if f.s[i] == 0.0:
            out.append("inf")
        else:
            out.append(float(f.c[i] / f.s[i]))
    return out


def factors_to_document(f: gsvd.GsvdFactors, tol: Tolerance, convention: str) -> dict:
    counts = gsvd.structure_counts(f)
    app = stats.apportion(f)
    return {
        "m1": f.m1, "m2": f.m2, "n": f.n,
        "r": f.r, "ra": f.r_a, "rb": f.r_b,
        "convention": convention,
        "compact": f.compact,
        "tolerance": {"rel": tol.rel, "abs": tol.abs},
        "u": f.u.tolist(),
        "v": f.v.tolist(),
        "c": _listify(f.c),
        "s": _listify(f.s),
        "h": f.h.tolist(),
        "v_col_of": [int(j) for j in f.v_col_of],
        "structure": {
            "n_infinite": counts.n_infinite,
            "n_finite": counts.n_finite,
            "n_zero": counts.n_zero,
            "zero_rows_c": counts.zero_rows_c,
            "zero_rows_s": counts.zero_rows_s,
        },
        "generalized_values": generalized_value_tokens(f),
        "angles": _listify(f.theta()),
        "apportionment": {
            "theta_lo": float(np.pi / 8),
            "theta_hi": float(3 * np.pi / 8),
            "labels": list(app.labels),
        },
    }


def factors_from_document(doc: dict) -> gsvd.GsvdFactors:
    return gsvd.GsvdFactors(
        u=np.array(doc["u"], dtype=float),
        v=np.array(doc["v"], dtype=float),
        c=np.array(doc["c"], dtype=float),
        s=np.array(doc["s"], dtype=float),
        h=np.array(doc["h"], dtype=float),
        r=int(doc["r"]), r_a=int(doc["ra"]), r_b=int(doc["rb"]),
        m1=int(doc["m1"]), m2=int(doc["m2"]), n=int(doc["n"]),
        v_col_of=np.array(doc["v_col_of"], dtype=int),
        compact=bool(doc["compact"]),
    )


def _write_json(path: str, doc: dict) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=1)
        fh.write("\n")


def _fmt_values(tokens) -> str:
    return ", ".join(t if isinstance(t, str) else repr(t) for t in tokens)


def _tol_from_args(args) -> Tolerance:
    return Tolerance(rel=args.tol) if args.tol is not None else Tolerance()


# ---------------------------------------------------------------- subcommands

def cmd_gsvd(args) -> int:
    a = read_matrix(args.a, args.header)
    b = read_matrix(args.b, args.header)
    tol = _tol_from_args(args)
    f = gsvd.gsvd_decompose(a, b, tol)
    if args.convention == "top":
        f = gsvd.with_top_convention(f)
    if args.compact:
        f = gsvd.compact(f)
    doc = factors_to_document(f, tol, args.convention)
    print(f"m1={f.m1} m2={f.m2} n={f.n}  r={f.r} ra={f.r_a} rb={f.r_b}")
    c = doc["structure"]
    print(
        f"structure: infinite={c['n_infinite']} finite={c['n_finite']} "
        f"zero={c['n_zero']} (zero rows C={c['zero_rows_c']}, S={c['zero_rows_s']})"
    )
    print(f"generalized values: {_fmt_values(doc['generalized_values'])}")
    print(f"angles: {_fmt_values(doc['angles'])}")
    if args.json:
        _write_json(args.json, doc)
    if args.csv_prefix:
        write_matrix(args.csv_prefix + "_U.csv", f.u)
        write_matrix(args.csv_prefix + "_V.csv", f.v)
        write_matrix(args.csv_prefix + "_C.csv", f.c_matrix())
        write_matrix(args.csv_prefix + "_S.csv", f.s_matrix())
        write_matrix(args.csv_prefix + "_H.csv", f.h)
    return 0


def cmd_verify(args) -> int:
    a = read_matrix(args.a, args.header)
    b = read_matrix(args.b, args.header)
    with open(args.json, encoding="utf-8") as fh:
        doc = json.load(fh)
    f = factors_from_document(doc)
    stacked = np.vstack([a, b])
    resid = np.linalg.norm(f.reconstruct() - stacked)
    denom = max(np.linalg.norm(stacked), 1e-300)
    rel = resid / denom
    print(f"reconstruction residual: {rel:.3e} (relative Frobenius)")
    if rel > 1e-10:
        print("verify: FAIL", file=sys.stderr)
        return 5
    print("verify: OK")
    return 0


def cmd_tikhonov(args) -> int:
    a = read_matrix(args.a, args.header)
    l = read_matrix(args.l, args.header)
    b = read_vector(args.b, args.header)
    lambdas = _parse_float_list(args.lambdas, "--lambdas")
    if any(x < 0 for x in lambdas):
        raise DomainError("--lambdas entries must be nonnegative")
    problem = tikhonov.TikhonovProblem(a, l, b)
    path = tikhonov.solve_path(problem, lambdas)
    print(f"{'lambda':>12} {'||x||':>18}")
    doc_rows = []
    for lam, x, damp in path:
        print(f"{lam:>12g} {np.linalg.norm(x):>18.12g}")
        doc_rows.append({
            "lambda": lam,
            "x": _listify(x),
            "damping": _listify(damp),
            "x_norm": float(np.linalg.norm(x)),
        })
    if args.json:
        _write_json(args.json, {"solutions": doc_rows})
    return 0


def cmd_anova(args) -> int:
    v = read_vector(args.data, args.header)
    partition = _parse_int_list(args.partition, "--partition")
    if sum(partition) != v.size:
        raise InvalidPartition(
            f"partition sums to {sum(partition)} but data has {v.size} entries"
        )
    design = stats.cluster_design(partition)
    report = stats.anova_f(design, v)
    print(f"between sum of squares: {report.between_norm_sq!r} (df={report.df_between})")
    print(f"within  sum of squares: {report.within_norm_sq!r} (df={report.df_within})")
    print(f"F = {report.f_value!r}")
    return 0


def cmd_ellipse(args) -> int:
    a = read_matrix(args.a, args.header)
    b = read_matrix(args.b, args.header)
    tol = _tol_from_args(args)
    f = gsvd.gsvd_decompose(a, b, tol)
    data = subgeom.ellipse_data(f)
    doc = {
        "cosine_lengths": _listify(data.cosine_lengths),
        "cosine_directions": data.cosine_directions.tolist(),
        "sine_lengths": _listify(data.sine_lengths),
        "sine_directions": data.sine_directions.tolist(),
        "sphere_points": data.sphere_points.tolist(),
        "angles": _listify(data.angles),
        "cosine_boundary": _ellipse_boundary(data.cosine_lengths, data.cosine_directions),
        "sine_boundary": _ellipse_boundary(data.sine_lengths[::-1], data.sine_directions[:, ::-1]),
    }
    print(f"cosine semi-axis lengths: {_fmt_values(doc['cosine_lengths'])}")
    print(f"sine semi-axis lengths:   {_fmt_values(doc['sine_lengths'])}")
    print(f"angles: {_fmt_values(doc['angles'])}")
    if args.json:
        _write_json(args.json, doc)
    return 0


def _ellipse_boundary(lengths: np.ndarray, directions: np.ndarray, samples: int = 64):
    # Boundary of the shadow ellipse in the plane of the two leading
    # semi-axes, sampled on a parameter grid and emitted in ambient
    # coordinates for external plotting.
    if lengths.size == 0:
        return []
    ts = np.linspace(0.0, 2 * np.pi, samples, endpoint=False)
    pts = np.outer(lengths[0] * np.cos(ts), directions[:, 0])
    if lengths.size > 1:
        pts = pts + np.outer(lengths[1] * np.sin(ts), directions[:, 1])
    return pts.tolist()


def cmd_angles(args) -> int:
    a1 = read_matrix(args.a1, args.header)
    a2 = read_matrix(args.a2, args.header)
    result = subgeom.principal_angles(a1, a2)
    print(f"{'cosine':>20} {'angle (rad)':>20}")
    for cos_t, theta in zip(result.cosines, result.angles):
        print(f"{float(cos_t)!r:>20} {float(theta)!r:>20}")
    return 0


def cmd_reduce(args) -> int:
    m = read_matrix(args.data, args.header)
    partition = _parse_int_list(args.partition, "--partition")
    if sum(partition) != m.shape[0]:
        raise InvalidPartition(
            f"partition sums to {sum(partition)} but data has {m.shape[0]} rows"
        )
    design = stats.cluster_design(partition)
    g, mg = stats.discriminant_reduce(m, design)
    write_matrix(args.out, mg)
    if args.g_out:
        write_matrix(args.g_out, g)
    print(f"wrote {mg.shape[0]}x{mg.shape[1]} reduced data to {args.out}")
    return 0


def cmd_jacobi(args) -> int:
    params = jacobi.JacobiParams(m1=args.m1, m2=args.m2, n=args.n, beta=args.beta)
    rng = jacobi.SeededRng(seed=args.seed)
    report = jacobi.empirical_check(params, args.samples, rng)
    print(f"samples={report.n_samples} beta={report.beta} "
          f"(m1={report.m1}, m2={report.m2}, n={report.n})")
    print(f"mean eigenvalue sum: {report.mean_sum!r} (se {report.se_sum!r})")
    if report.ks_distance is not None:
        print(f"KS distance to Beta CDF: {report.ks_distance!r}")
    print(f"split-half gap: {report.half_gap_z!r} standard errors")
    if args.out:
        gen = rng.generator()
        rows = [jacobi.sample_manova(params, gen) for _ in range(args.samples)]
        write_matrix(args.out, np.array(rows))
    return 0


# ------------------------------------------------------------------- parsing

def _parse_float_list(text: str, flag: str):
    try:
        return [float(x) for x in text.split(",") if x.strip() != ""]
    except ValueError as exc:
        raise CsvParseError(f"{flag}: {exc}") from exc


def _parse_int_list(text: str, flag: str):
    try:
        return [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError as exc:
        raise CsvParseError(f"{flag}: {exc}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gsvdkit",
        description="GH-form generalized SVD and the analyses built on it",
    )
    parser.add_argument("--header", action="store_true",
                        help="skip the first row of every CSV input")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gsvd", help="factor a pair of CSV matrices")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--tol", type=float, default=None, metavar="REAL",
                   help="relative rank tolerance (default max(m,n)*eps)")
    p.add_argument("--convention", choices=("bottom", "top"), default="bottom")
    p.add_argument("--compact", action="store_true")
    p.add_argument("--json", metavar="OUT")
    p.add_argument("--csv-prefix", metavar="OUT")
    p.set_defaults(func=cmd_gsvd)

    p = sub.add_parser("verify", help="check a factors JSON against the inputs")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("json")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("tikhonov", help="regularization path for (A, L, b)")
    p.add_argument("a")
    p.add_argument("l")
    p.add_argument("b")
    p.add_argument("--lambdas", default="0,1", metavar="CSV-LIST")
    p.add_argument("--json", metavar="OUT")
    p.set_defaults(func=cmd_tikhonov)

    p = sub.add_parser("anova", help="one-way ANOVA F statistic")
    p.add_argument("data")
    p.add_argument("--partition", required=True, metavar="CSV-LIST")
    p.set_defaults(func=cmd_anova)

    p = sub.add_parser("ellipse", help="plot data for the cosine/sine ellipses")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--tol", type=float, default=None, metavar="REAL")
    p.add_argument("--json", metavar="OUT")
    p.set_defaults(func=cmd_ellipse)

    p = sub.add_parser("angles", help="principal angles between two column spaces")
    p.add_argument("a1")
    p.add_argument("a2")
    p.set_defaults(func=cmd_angles)

    p = sub.add_parser("reduce", help="discriminant reduction of clustered data")
    p.add_argument("data")
    p.add_argument("--partition", required=True, metavar="CSV-LIST")
    p.add_argument("--out", required=True, metavar="MG.csv")
    p.add_argument("--g-out", metavar="G.csv")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("jacobi", help="MANOVA sampling and ensemble checks")
    p.add_argument("--m1", type=int, required=True)
    p.add_argument("--m2", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--beta", type=float, default=1.0)
    p.add_argument("--samples", type=int, default=10000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", metavar="SAMPLES.csv")
    p.set_defaults(func=cmd_jacobi)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GsvdKitError as exc:
        print(f"gsvdkit {args.command}: {exc}", file=sys.stderr)
        return exc.exit_code
    except (ValueError, OSError) as exc:
        print(f"gsvdkit {args.command}: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
