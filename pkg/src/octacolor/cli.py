"""Command-line interface: one subcommand per pipeline stage.

Exit status: 0 on success, 1 on an invariant failure (the report is still
written), 2 on input errors.  All JSON output encodes exact values as
integer or rational strings.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile

from . import pipeline, svg
from .cone import (EnumerationBudgetError, enumerate_lattice_points,
                   extreme_rays, lattice_basis, restrict_to_kernel)
from .emg import EmgError, parse_emg, render_emg, validate_plausible
from .families import (ConstructionError, FamilySpec, bundled_names,
                       load_bundled)
from .geometry import (AngleError, ClosureError, ColorError, GluingError,
                       MeshError, build_triangulation, cone_point_coordinates,
                       develop_net, develop_surface, four_color,
                       realize_polygons)
from .labeling import (BoundaryError, HolonomyError, assign_labels,
                       polygon_boundaries)
from .pipeline import matrix_json, run_check, run_survey, vector_json
from .qform import assemble_form, restrict_form
from .shapesys import build_constraints, kernel_basis, verify_lemmas


class InputError(Exception):
    pass


def _load_instance(args) -> tuple[str, object]:
    if getattr(args, "family", None):
        if args.k is None:
            raise InputError("--family spiral requires --k")
        try:
            spec = FamilySpec(args.family, args.k)
            return f"spiral-k{args.k}", spec.generate()
        except (ConstructionError, ValueError) as exc:
            raise InputError(str(exc)) from exc
    if getattr(args, "bundled", None):
        try:
            return args.bundled, load_bundled(args.bundled)
        except KeyError as exc:
            raise InputError(str(exc)) from exc
    if getattr(args, "input", None):
        try:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {args.input}: {exc}") from exc
        try:
            return os.path.basename(args.input), parse_emg(text)
        except EmgError as exc:
            raise InputError(f"{args.input}: {exc}") from exc
    raise InputError("no instance given; use --input, --family, or --bundled")


def _emit(args, payload: str) -> None:
    if getattr(args, "out", None):
        directory = os.path.dirname(os.path.abspath(args.out)) or "."
        fd, tmp = tempfile.mkstemp(dir=directory, prefix=".octacolor-")
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(payload)
        os.replace(tmp, args.out)
    else:
        sys.stdout.write(payload)


def _emit_json(args, data: dict) -> None:
    _emit(args, json.dumps(data, indent=2, sort_keys=True) + "\n")


def _solution_context(g):
    boundaries = polygon_boundaries(g)
    labels = assign_labels(g, boundaries)
    system = build_constraints(g, boundaries, labels)
    kernel = kernel_basis(system)
    return boundaries, labels, system, kernel


def _cmd_validate(args) -> int:
    name, g = _load_instance(args)
    rep = validate_plausible(g)
    _emit_json(args, {
        "instance": name,
        "plausible": rep.plausible,
        "counts": rep.counts,
        "findings": [{"rule": f.rule, "severity": f.severity, "message": f.message}
                     for f in rep.findings],
    })
    return 0 if rep.plausible else 1


def _cmd_labels(args) -> int:
    name, g = _load_instance(args)
    boundaries = polygon_boundaries(g)
    seed = None
    if args.seed_flag:
        try:
            v, e = args.seed_flag.split(":")
            seed = (int(v), int(e))
        except ValueError as exc:
            raise InputError(f"--seed-flag must be 'vertex:edge', got {args.seed_flag!r}") from exc
    try:
        labels = assign_labels(g, boundaries, seed)
    except HolonomyError as exc:
        _emit_json(args, {"instance": name, "consistent": False, "error": str(exc)})
        return 1
    _emit_json(args, {
        "instance": name,
        "consistent": True,
        "seed": list(labels.seed),
        "exponents": {str(eid): e for eid, e in labels.exponents},
    })
    return 0


def _cmd_solve(args) -> int:
    name, g = _load_instance(args)
    _, _, system, kernel = _solution_context(g)
    lemmas = verify_lemmas(system, kernel)
    _emit_json(args, {
        "instance": name,
        "matrix": matrix_json(system.matrix),
        "columns": list(system.col_edges),
        "rank": kernel.rank,
        "dimension": kernel.dimension,
        "kernel_basis": [vector_json(v) for v in kernel.basis],
        "lemmas": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in lemmas.checks],
    })
    return 0 if lemmas.all_passed else 1


def _cmd_rays(args) -> int:
    name, g = _load_instance(args)
    _, _, _, kernel = _solution_context(g)
    cd = extreme_rays(restrict_to_kernel(kernel))
    _emit_json(args, {
        "instance": name,
        "dimension": cd.dimension,
        "inequalities": matrix_json(cd.inequalities),
        "rays": [vector_json(r) for r in (cd.extreme_rays or ())],
        "lineality": [vector_json(l) for l in cd.lineality],
        "has_positive_point": cd.has_positive_point,
    })
    return 0


def _cmd_lattice(args) -> int:
    name, g = _load_instance(args)
    _, _, _, kernel = _solution_context(g)
    cd = extreme_rays(restrict_to_kernel(kernel))
    lb = lattice_basis(kernel)
    try:
        points = enumerate_lattice_points(cd, lb, args.max_len, budget=args.budget)
    except EnumerationBudgetError as exc:
        _emit_json(args, {"instance": name, "error": str(exc), "budget": exc.budget})
        return 1
    _emit_json(args, {
        "instance": name,
        "max_len": args.max_len,
        "columns": list(kernel.col_edges),
        "lattice_basis": [vector_json(v) for v in lb.vectors],
        "count": len(points),
        "strictly_positive": sum(1 for p in points if p.strictly_positive),
        "points": [{"vector": vector_json(p.vector), "strictly_positive": p.strictly_positive}
                   for p in points],
    })
    return 0


def _select_point(args, g, kernel):
    cd = extreme_rays(restrict_to_kernel(kernel))
    lb = lattice_basis(kernel)
    if args.point and "," in args.point:
        vec = tuple(int(x) for x in args.point.split(","))
        if len(vec) != len(kernel.col_edges):
            raise InputError(f"--point vector needs {len(kernel.col_edges)} entries")
        return vec
    points = [p for p in enumerate_lattice_points(cd, lb, args.max_len, budget=args.budget)
              if p.strictly_positive]
    if not points:
        raise InputError(f"no strictly positive lattice point with lengths <= {args.max_len}")
    idx = int(args.point) if args.point else 0
    if not 0 <= idx < len(points):
        raise InputError(f"--point index {idx} out of range (have {len(points)})")
    return points[idx].vector


def _cmd_realize(args) -> int:
    name, g = _load_instance(args)
    boundaries, labels, system, kernel = _solution_context(g)
    vec = _select_point(args, g, kernel)
    lengths = dict(zip(kernel.col_edges, vec))
    charts = realize_polygons(g, boundaries, labels, lengths)
    surface = develop_surface(g, boundaries, charts)
    tri = four_color(build_triangulation(surface), surface)
    _emit_json(args, {
        "instance": name,
        "point": vector_json(vec),
        "polygons": {
            str(pid): [pipeline.grid_point_json(p) for p in ch.chain]
            for pid, ch in sorted(surface.placed.items())
        },
        "cone_points": [pipeline.grid_point_json(c) for c in cone_point_coordinates(surface)],
        "triangulation": {
            "vertices": len(tri.positions),
            "edges": len(tri.edges),
            "triangles": len(tri.triangles),
            "degree_histogram": {str(d): c for d, c in sorted(tri.degree_histogram().items())},
            "vertex_colors": list(tri.vertex_colors),
        },
    })
    return 0


def _cmd_qform(args) -> int:
    name, g = _load_instance(args)
    boundaries, _, system, kernel = _solution_context(g)
    qf = assemble_form(g, boundaries)
    qfr = restrict_form(qf, kernel)
    sig = list(qfr.signature)
    _emit_json(args, {
        "instance": name,
        "global_matrix": matrix_json(qf.global_matrix),
        "restricted": matrix_json(qfr.restricted),
        "signature": sig,
        "expected_signature": [1, 3, 0],
        "signature_as_expected": sig == [1, 3, 0],
        "non_degenerate": sig[2] == 0,
    })
    return 0


def _cmd_check(args) -> int:
    name, g = _load_instance(args)
    report = run_check(g, name=name, max_len=args.max_len, budget=args.budget)
    _emit_json(args, report.to_json_dict())
    return 0 if report.ok else 1


def _cmd_gen(args) -> int:
    try:
        g = FamilySpec(args.family, args.k).generate()
    except (ConstructionError, ValueError) as exc:
        raise InputError(str(exc)) from exc
    _emit(args, render_emg(g))
    return 0


def _parse_k_range(text: str) -> list[int]:
    try:
        if ".." in text:
            lo, hi = text.split("..")
            return list(range(int(lo), int(hi) + 1))
        return [int(text)]
    except ValueError as exc:
        raise InputError(f"bad k range {text!r}; use A..B") from exc


def _cmd_survey(args) -> int:
    ks = _parse_k_range(args.k_range)
    instances = []
    for k in ks:
        try:
            instances.append((f"spiral-k{k}", FamilySpec(args.family, k).generate()))
        except (ConstructionError, ValueError) as exc:
            raise InputError(f"k={k}: {exc}") from exc
    _emit_json(args, run_survey(instances, max_len=args.max_len, budget=args.budget))
    return 0


def _cmd_render(args) -> int:
    name, g = _load_instance(args)
    boundaries, labels, system, kernel = _solution_context(g)
    vec = _select_point(args, g, kernel)
    lengths = dict(zip(kernel.col_edges, vec))
    charts = realize_polygons(g, boundaries, labels, lengths)
    surface = develop_surface(g, boundaries, charts)
    net = develop_net(surface)
    _emit(args, svg.render_net(g, surface, net,
                               triangles=args.triangles,
                               vertex_colors=args.vertex_colors,
                               overlay_dual=args.overlay_dual))
    return 0


def _add_instance_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", help="path to an EMG file")
    p.add_argument("--family", choices=["spiral"], help="generate a family member instead")
    p.add_argument("--k", type=int, help="family parameter")
    p.add_argument("--bundled", choices=bundled_names(), help="load a bundled instance")


def _add_common_out(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", help="write output to this file (atomic)")
    p.add_argument("--json", action="store_true",
                   help="machine-readable output (the default for report subcommands)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="octacolor",
        description="Exact toolkit for nice colorings of flat cone octahedra.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, instance=True, point=False, lattice=False):
        p = sub.add_parser(name, help=help_)
        if instance:
            _add_instance_args(p)
        _add_common_out(p)
        if lattice or point:
            p.add_argument("--max-len", type=int, default=3, help="edge length bound")
            p.add_argument("--budget", type=int, default=10 ** 6,
                           help="candidate budget for lattice enumeration")
        if point:
            p.add_argument("--point", help="index into the positive lattice points, or a comma vector")
        p.set_defaults(fn=fn)
        return p

    add("validate", _cmd_validate, "check the plausibility axioms")
    p_labels = add("labels", _cmd_labels, "assign direction exponents to blue edges")
    p_labels.add_argument("--seed-flag", help="vertex:edge pair anchoring exponent 0")
    add("solve", _cmd_solve, "closure system, rank, and exact kernel basis")
    add("rays", _cmd_rays, "extreme rays of the cone of positive solutions")
    add("lattice", _cmd_lattice, "enumerate integer points with bounded lengths", lattice=True)
    add("realize", _cmd_realize, "realize a lattice point as a triangulated sphere", point=True)
    add("qform", _cmd_qform, "global and restricted quadratic form with signature")
    add("check", _cmd_check, "full pipeline with every invariant verdict", lattice=True)

    p_gen = sub.add_parser("gen", help="generate a family member as an EMG file")
    p_gen.add_argument("--family", choices=["spiral"], required=True)
    p_gen.add_argument("--k", type=int, required=True)
    _add_common_out(p_gen)
    p_gen.set_defaults(fn=_cmd_gen)

    p_survey = sub.add_parser("survey", help="run the pipeline over a family range")
    p_survey.add_argument("--family", choices=["spiral"], required=True)
    p_survey.add_argument("--k-range", required=True, help="A..B inclusive")
    p_survey.add_argument("--max-len", type=int, default=0)
    p_survey.add_argument("--budget", type=int, default=10 ** 6)
    _add_common_out(p_survey)
    p_survey.set_defaults(fn=_cmd_survey)

    p_render = add("render", _cmd_render, "emit an SVG of the net", point=True)
    p_render.add_argument("--triangles", action="store_true", help="draw the unit triangle grid")
    p_render.add_argument("--vertex-colors", action="store_true", help="draw 4-coloring dots")
    p_render.add_argument("--overlay-dual", action="store_true", help="overlay the red/blue multigraph")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (InputError, EmgError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except EnumerationBudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (HolonomyError, BoundaryError, ClosureError, GluingError,
            AngleError, MeshError, ColorError) as exc:
        print(f"invariant failure: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
