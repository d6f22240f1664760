"""Command line front end.

Subcommands:
  gen            build a family polytope and write its JSON
  describe       f-vector, dimension, simple/simplicial flags, Euler check
  verify-bounds  exact ratio-bound report plus the minimum-count,
                 few-vertex and unimodality checks
  angles         angle sums, curvature checks, angle-sum floors, and the
                 projection angle bound
  project        shadow, facet partition, diagram vertices, interior-vertex
                 and gap checks for sampled directions
  corpus         batch bound verification over families x dimensions (CSV)

Exit code 0 means every hard check passed (WARN verdicts do not fail a
run).  Failures print a JSON counterexample dump to stderr and exit 1.
Parallelism for the corpus command is capped by POLYFACE_THREADS; output
is byte-identical for a given seed regardless of thread count.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ThreadPoolExecutor

from ._rng import derive_seed, thread_count
from .angles import (
    angle_sum,
    angle_sum_lower_check,
    curvature_check,
    projection_angle_check,
)
from .bounds import (
    few_vertex_check,
    min_face_check,
    unimodality_check,
    verify_main_bounds,
)
from .errors import PolyfaceError, TooLargeError
from .generators import FamilySpec, generate
from .polytope import Polytope, load_polytope, save_polytope
from .projection import (
    build_shadow_diagram,
    sample_direction,
)

DEFAULT_SAMPLES = 1_000_000
DEFAULT_DIRECTIONS = 20

CSV_COLUMNS = ["family", "dim", "n", "k", "f_k", "ratio_vertices",
               "rho_vertices", "ratio_facets", "rho_facets",
               "equality_flags", "verdicts"]


def _add_family_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", help="simplex|cube|cross|cyclic|pyramid|prism|random-sphere")
    p.add_argument("--dim", type=int)
    p.add_argument("--n", type=int, help="vertex count (cyclic, random-sphere)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--in", dest="input", help="polytope JSON file")


def _load(args) -> Polytope:
    if args.input:
        return load_polytope(args.input)
    if not args.family or args.dim is None:
        raise PolyfaceError("need either --in FILE or --family and --dim")
    return generate(FamilySpec(args.family, args.dim, args.n, args.seed))


def _emit(payload: dict, out: str | None) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_gen(args) -> int:
    p = _load(args)
    if args.out:
        save_polytope(p, args.out)
    else:
        _emit({"ambient_dim": p.ambient_dim,
               "vertices": [[str(c) for c in v] for v in p.ambient_vertices()]},
              None)
    return 0


def cmd_describe(args) -> int:
    p = _load(args)
    fv = p.f_vector()  # raises on an Euler violation
    _emit({
        "dim": p.dim,
        "ambient_dim": p.ambient_dim,
        "n_vertices": p.n_vertices,
        "n_facets": p.n_facets,
        "f_vector": list(fv.counts),
        "simple": p.is_simple(),
        "simplicial": p.is_simplicial(),
        "euler_ok": True,
        "face_total": len(p.face_lattice()),
    }, args.out)
    return 0


def cmd_verify_bounds(args) -> int:
    p = _load(args)
    report = verify_main_bounds(p)  # raises BoundViolationError on failure
    min_face = min_face_check(p)
    payload = {
        "bounds": report.to_json(),
        "min_face": min_face.to_json(),
        "few_vertex": few_vertex_check(p),
        "unimodality": unimodality_check(p),
    }
    _emit(payload, args.out)
    hard_ok = (report.all_ok() and min_face.ok
               and payload["few_vertex"].get("ok", True)
               and payload["unimodality"].get("ok", True))
    return 0 if hard_ok else 1


def cmd_angles(args) -> int:
    p = _load(args)
    samples = args.samples
    seed = args.seed
    sigma = args.tolerance_sigma
    sums = [angle_sum(p, k, samples, derive_seed(seed, "sum", k)).to_json()
            for k in range(p.dim)]
    floors = [
        angle_sum_lower_check(p, k, samples, derive_seed(seed, "floor", k),
                              sigma=sigma).to_json()
        for k in range(p.dim)
    ]
    curvature = []
    lattice = p.face_lattice()
    for k in range(0, p.dim - 1):
        for face in lattice.faces_of_dim(k):
            rep = curvature_check(p, face, samples,
                                  derive_seed(seed, "curv", k), sigma=sigma)
            curvature.append(rep.to_json())
    projection = []
    try:
        for k in range(p.dim):
            projection.append(projection_angle_check(
                p, k, args.directions, samples,
                derive_seed(seed, "proj", k), sigma=sigma).to_json())
        projection_skipped = False
    except TooLargeError as exc:
        projection = str(exc)
        projection_skipped = True
    payload = {"angle_sums": sums, "floors": floors,
               "curvature": curvature, "projection_bound": projection}
    _emit(payload, args.out)
    ok = (all(f["passed"] for f in floors)
          and all(c["ok"] for c in curvature)
          and (projection_skipped
               or all(r["verdict"] in ("PASS", "WARN") for r in projection)))
    return 0 if ok else 1


def cmd_project(args) -> int:
    p = _load(args)
    if p.dim < 2:
        raise PolyfaceError("projection reports need dim >= 2")
    diagrams = []
    ok = True
    for i in range(args.directions):
        d = sample_direction(p, derive_seed(args.seed, "dir", i))
        diagram = build_shadow_diagram(p, d)
        ok = ok and diagram.boundary_ok
        ok = ok and all(g.ok for g in diagram.gap_reports)
        ok = ok and len(diagram.interior_vertices) >= 1
        diagrams.append(diagram.to_json())
    _emit({"directions": args.directions, "diagrams": diagrams}, args.out)
    return 0 if ok else 1


def _corpus_grid(families: list[str], dims: list[int], seed: int):
    specs = []
    for fam in families:
        for d in dims:
            if fam == "cyclic":
                specs.append(FamilySpec(fam, d, n=d + 2, seed=seed))
            elif fam == "random-sphere":
                specs.append(FamilySpec(fam, d, n=min(12, 2 * d + 4), seed=seed))
            else:
                if fam in ("pyramid", "prism") and d < 2:
                    continue
                specs.append(FamilySpec(fam, d))
    return specs


def _corpus_entry_rows(spec: FamilySpec) -> list[dict]:
    p = generate(spec)
    report = verify_main_bounds(p)
    minf = min_face_check(p)
    few = few_vertex_check(p)
    uni = unimodality_check(p)
    extra = []
    if not minf.ok:
        extra.append("min-face:VIOLATED")
    if few.get("applicable") and not few.get("ok", True):
        extra.append("few-vertex:VIOLATED")
    if uni.get("applicable") and not uni.get("ok", True):
        extra.append("unimodality:VIOLATED")
    rows = []
    for r in report.csv_rows():
        row = {"family": spec.family, "dim": spec.dim,
               "n": p.n_vertices, **r}
        if extra:
            row["verdicts"] = row["verdicts"] + ";" + ";".join(extra)
        rows.append(row)
    return rows


def cmd_corpus(args) -> int:
    families = [f.strip() for f in args.families.split(",") if f.strip()]
    dims = _parse_dims(args.dims)
    specs = _corpus_grid(families, dims, args.seed)
    workers = thread_count()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_corpus_entry_rows, specs))
    else:
        results = [_corpus_entry_rows(s) for s in specs]
    rows = [row for batch in results for row in batch]
    rows.sort(key=lambda r: (r["family"], r["dim"], r["n"], r["k"]))
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    text = buf.getvalue()
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    violated = [r for r in rows if "VIOLATED" in r["verdicts"]]
    return 1 if violated else 0


def _parse_dims(text: str) -> list[int]:
    text = text.strip()
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(t) for t in text.split(",") if t.strip()]


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="polyface",
        description="Exact polytope analysis: f-vectors, face-count bounds, "
                    "solid angles, projections.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a family polytope as JSON")
    _add_family_flags(p)
    p.add_argument("--out", help="output JSON path")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("describe", help="f-vector and basic flags")
    _add_family_flags(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_describe)

    p = sub.add_parser("verify-bounds", help="exact face-count bound checks")
    _add_family_flags(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify_bounds)

    p = sub.add_parser("angles", help="solid-angle checks (Monte Carlo)")
    _add_family_flags(p)
    p.add_argument("--out")
    p.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    p.add_argument("--directions", type=int, default=DEFAULT_DIRECTIONS)
    p.add_argument("--tolerance-sigma", type=float, default=4.0)
    p.set_defaults(func=cmd_angles)

    p = sub.add_parser("project", help="shadows and diagram checks")
    _add_family_flags(p)
    p.add_argument("--out")
    p.add_argument("--directions", type=int, default=DEFAULT_DIRECTIONS)
    p.set_defaults(func=cmd_project)

    p = sub.add_parser("corpus", help="batch bound verification (CSV)")
    p.add_argument("--families", default="simplex,cube,cross,cyclic")
    p.add_argument("--dims", default="2..5")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_corpus)

    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except PolyfaceError as exc:
        sys.stderr.write(json.dumps({
            "error": type(exc).__name__,
            "message": str(exc),
        }) + "\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
