"""Command-line front end: construction, pipeline runs, and exports."""
from __future__ import annotations

import argparse
import json
import math
import os
import sys
import time
from pathlib import Path

from . import fixtures, polygonal
from .embedder import universal_embed
from .graphcore import PlaneGraph, from_json_dict, to_json_dict
from .polygonal import PolygonalEmbedding, Signature, sew, validate
from .reduce import hamiltonian_major, outerplanarize, outerplanarize_full
from .universal import UniversalEmbedding, build_universal, universal_counts
from .verify import verify_hamiltonian, verify_p_minor, verify_witness


def _default_seed() -> int:
    return int(os.environ.get("MINOR_UNIVERSAL_SEED", "0"))


def _write_json(path: str, data) -> None:
    Path(path).write_text(json.dumps(data, indent=1, sort_keys=True) + "\n")


def _load_embedding(path: str) -> PolygonalEmbedding:
    return polygonal.from_json(json.loads(Path(path).read_text()))


def _load_plane(path: str) -> PlaneGraph:
    return from_json_dict(json.loads(Path(path).read_text()))


def _witness_json(w) -> dict:
    return {"format": 1,
            "witness": {str(k): sorted(v) for k, v in w.items()}}


def _load_witness(path: str) -> dict[int, frozenset]:
    data = json.loads(Path(path).read_text())
    return {int(k): frozenset(v) for k, v in data["witness"].items()}


def _universal_json(u: UniversalEmbedding) -> dict:
    data = polygonal.to_json(u.embedding)
    data["coords"] = {str(v): list(ij) for v, ij in sorted(u.coords.items())}
    data["corner_ids"] = list(u.corner_ids)
    data["m"] = u.m
    return data


def _steps_json(steps) -> list:
    return [st.to_json() for st in steps]


# ---------------------------------------------------------------------------
# exports


def _layout(p: PolygonalEmbedding, coords: dict | None) -> dict[int, tuple[float, float]]:
    pos: dict[int, tuple[float, float]] = {}
    if coords:
        pos = {v: (float(j), -float(i)) for v, (i, j) in coords.items()
               if v in p.graph.vertices}
    else:
        cyc = p.outer_cycle()
        n = len(cyc)
        for t, v in enumerate(cyc):
            ang = 2 * math.pi * t / n
            pos[v] = (math.cos(ang), math.sin(ang))
    inner = [v for v in p.graph.vertices if v not in pos]
    for v in inner:
        pos[v] = (0.0, 0.0)
    for _ in range(40):   # barycentric relaxation of the interior
        for v in inner:
            nb = p.graph.neighbors(v)
            if nb:
                pos[v] = (sum(pos[w][0] for w in nb) / len(nb),
                          sum(pos[w][1] for w in nb) / len(nb))
    return pos


_COLORS = ["lightblue", "lightgreen", "lightpink", "khaki", "plum", "orange",
           "cyan", "salmon", "palegreen", "gold"]


def export_dot(p: PolygonalEmbedding, witness=None, coords=None) -> str:
    lines = ["graph embedding {", "  node [shape=circle];"]
    pos = _layout(p, coords)
    branch_of: dict[int, int] = {}
    if witness:
        s = sew(p)
        for bi, (k, branch) in enumerate(sorted(witness.items())):
            for v in p.graph.vertices:
                if s.projection[v] in branch:
                    branch_of[v] = bi
    for v in sorted(p.graph.vertices):
        attrs = [f'pos="{pos[v][0]:.3f},{pos[v][1]:.3f}!"']
        if v in branch_of:
            c = _COLORS[branch_of[v] % len(_COLORS)]
            attrs.append(f'style=filled fillcolor="{c}"')
        lines.append(f"  {v} [{' '.join(attrs)}];")
    for e, (u, v) in sorted(p.graph.edges.items()):
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_svg(p: PolygonalEmbedding, coords=None) -> str:
    pos = _layout(p, coords)
    xs = [x for x, _ in pos.values()]
    ys = [y for _, y in pos.values()]
    pad, scale = 20.0, 40.0
    x0, y0 = min(xs), min(ys)
    def pt(v):
        x, y = pos[v]
        return (pad + scale * (x - x0), pad + scale * (y - y0))
    w = pad * 2 + scale * (max(xs) - x0)
    h = pad * 2 + scale * (max(ys) - y0)
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{w:.0f}" height="{h:.0f}">']
    for e, (u, v) in sorted(p.graph.edges.items()):
        (x1, y1), (x2, y2) = pt(u), pt(v)
        out.append(f'<line x1="{x1:.1f}" y1="{y1:.1f}" x2="{x2:.1f}" y2="{y2:.1f}" '
                   'stroke="black" stroke-width="1"/>')
    corner = p.corners()
    for v in sorted(p.graph.vertices):
        x, y = pt(v)
        fill = "red" if v in corner else "white"
        out.append(f'<circle cx="{x:.1f}" cy="{y:.1f}" r="4" fill="{fill}" stroke="black"/>')
        out.append(f'<text x="{x + 5:.1f}" y="{y - 5:.1f}" font-size="8">{v}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# subcommands


def cmd_universal(args) -> int:
    try:
        sig = Signature.parse(args.signature)
        u = build_universal(sig, args.m)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _write_json(args.out, _universal_json(u))
    counts = universal_counts(sig, args.m)
    print(json.dumps({"format": 1, "counts": counts,
                      "measured_size": list(u.embedding.measured_size())}))
    if args.dot:
        Path(args.dot).write_text(export_dot(u.embedding, coords=u.coords))
    if args.svg:
        Path(args.svg).write_text(export_svg(u.embedding, coords=u.coords))
    return 0


def cmd_outerplanarize(args) -> int:
    p = _load_embedding(args.input)
    bad = validate(p)
    if bad:
        print(json.dumps({"format": 1, "violations": [v.__dict__ for v in bad]}))
        return 1
    res = outerplanarize_full(p)
    _write_json(args.out, polygonal.to_json(res.swapped))
    if args.witness:
        _write_json(args.witness, _witness_json(res.witness))
    if args.trace:
        _write_json(args.trace, {
            "format": 1,
            "stages": {name: _steps_json(steps) for name, steps in res.steps.items()},
        })
    ok = not verify_p_minor(p, res.swapped, res.witness)
    print(json.dumps({"format": 1, "size": list(res.swapped.measured_size()),
                      "verified": ok}))
    return 0 if ok else 1


def cmd_embed(args) -> int:
    p = _load_embedding(args.input)
    bad = validate(p)
    if bad:
        print(json.dumps({"format": 1, "violations": [v.__dict__ for v in bad]}))
        return 1
    u, w = universal_embed(p)
    _write_json(args.out_universal, _universal_json(u))
    _write_json(args.out_witness, _witness_json(w))
    ok = not verify_p_minor(p, u.embedding, w)
    print(json.dumps({"format": 1, "m": u.m, "verified": ok}))
    return 0 if ok else 1


def cmd_verify_witness(args) -> int:
    h = _load_embedding(args.minor)
    g = _load_embedding(args.major)
    w = _load_witness(args.witness)
    bad = verify_p_minor(h, g, w)
    print(json.dumps({"format": 1,
                      "violations": [{"kind": v.kind, "detail": v.detail} for v in bad]}))
    return 0 if not bad else 1


def cmd_hamiltonian_major(args) -> int:
    g = _load_plane(args.input)
    try:
        res = hamiltonian_major(g, args.circuit)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    data = to_json_dict(res.graph)
    data["cycle"] = list(res.cycle)
    data["steps"] = _steps_json(res.steps)
    _write_json(args.out, data)
    ok = verify_hamiltonian(res.graph, res.cycle)
    print(json.dumps({"format": 1, "vertices": len(res.graph.vertices),
                      "hamiltonian": ok}))
    return 0 if ok else 1


def cmd_gen_fixture(args) -> int:
    seed = args.seed if args.seed is not None else _default_seed()
    if args.kind == "k6-torus":
        p = fixtures.k6_torus()
    elif args.kind == "sphere-outerplanar":
        p = fixtures.sphere_outerplanar(args.m)
    elif args.kind == "fig3-tree":
        p = fixtures.tree_fixture()
    elif args.kind == "random-triangulated":
        sig = Signature.parse(args.signature or ["a1", "a2", "~a1", "~a2"])
        p = fixtures.random_triangulated(sig, args.m, args.n, seed)
    else:
        print(f"error: unknown fixture kind {args.kind!r}", file=sys.stderr)
        return 2
    _write_json(args.out, polygonal.to_json(p))
    print(json.dumps({"format": 1, "size": list(p.measured_size())}))
    return 0


def cmd_export(args) -> int:
    data = json.loads(Path(args.input).read_text())
    p = polygonal.from_json(data)
    coords = None
    if "coords" in data:
        coords = {int(k): tuple(v) for k, v in data["coords"].items()}
    if args.format == "dot":
        w = _load_witness(args.witness) if args.witness else None
        Path(args.out).write_text(export_dot(p, witness=w, coords=coords))
    elif args.format == "svg":
        Path(args.out).write_text(export_svg(p, coords=coords))
    else:
        print(f"error: unknown format {args.format!r}", file=sys.stderr)
        return 2
    return 0


def cmd_pipeline(args) -> int:
    outdir = Path(args.out_dir)
    outdir.mkdir(parents=True, exist_ok=True)
    p = _load_embedding(args.input)
    bad = validate(p)
    if bad:
        report = {"format": 1,
                  "violations": [v.__dict__ for v in bad]}
        print(json.dumps(report))
        _write_json(str(outdir / "manifest.json"), report)
        return 1

    manifest: dict = {"format": 1, "input": args.input,
                      "signature": p.signature.tokens(),
                      "stages": {}, "seconds": {}, "verifications": {}}
    m, n = p.measured_size()

    t0 = time.time()
    res = outerplanarize_full(p)
    manifest["seconds"]["outerplanarize"] = round(time.time() - t0, 3)
    k = len(res.forest.trees)
    for name, stage in [("input", p), ("guarded", res.guarded),
                        ("triangulated", res.triangulated), ("blown", res.blown),
                        ("split", res.split), ("swapped", res.swapped)]:
        manifest["stages"][name] = list(stage.measured_size())
        manifest["verifications"][f"validate_{name}"] = not validate(stage)
    manifest["verifications"]["blowup_internal_2n_minus_k"] = (
        res.blown.measured_size()[1] == 2 * n - k)
    manifest["verifications"]["swapped_outerplanar"] = (
        res.swapped.measured_size()[1] == 0
        and res.swapped.measured_size()[0] <= m + 2 * n)

    t0 = time.time()
    u, w = universal_embed(p)
    manifest["seconds"]["embed"] = round(time.time() - t0, 3)
    manifest["stages"]["universal"] = list(u.embedding.measured_size())
    manifest["verifications"]["universal_side_m_plus_2n"] = (u.m == m + 2 * n)

    upath, wpath = str(outdir / "universal.json"), str(outdir / "witness.json")
    _write_json(upath, _universal_json(u))
    _write_json(wpath, _witness_json(w))
    manifest["universal"] = upath
    manifest["witness"] = wpath

    t0 = time.time()
    bad = verify_p_minor(p, u.embedding, w)
    manifest["seconds"]["verify"] = round(time.time() - t0, 3)
    manifest["verifications"]["witness"] = not bad
    if bad:
        manifest["violations"] = [{"kind": v.kind, "detail": v.detail} for v in bad]

    ok = all(manifest["verifications"].values())
    _write_json(str(outdir / "manifest.json"), manifest)
    print(json.dumps(manifest))
    return 0 if ok else 1


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(prog="minor-universal")
    sub = ap.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("universal", help="build the universal embedding")
    s.add_argument("--signature", nargs="+", required=True)
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--out", required=True)
    s.add_argument("--dot")
    s.add_argument("--svg")
    s.set_defaults(fn=cmd_universal)

    s = sub.add_parser("outerplanarize", help="reduce to an outerplanar embedding")
    s.add_argument("input")
    s.add_argument("--out", required=True)
    s.add_argument("--witness")
    s.add_argument("--trace")
    s.set_defaults(fn=cmd_outerplanarize)

    s = sub.add_parser("embed", help="embed into the universal embedding")
    s.add_argument("input")
    s.add_argument("--out-universal", required=True)
    s.add_argument("--out-witness", required=True)
    s.set_defaults(fn=cmd_embed)

    s = sub.add_parser("verify-witness", help="check a minor witness")
    s.add_argument("minor")
    s.add_argument("major")
    s.add_argument("witness")
    s.set_defaults(fn=cmd_verify_witness)

    s = sub.add_parser("hamiltonian-major", help="planar Hamiltonian major")
    s.add_argument("input")
    s.add_argument("--circuit", type=int, nargs="+", required=True)
    s.add_argument("--out", required=True)
    s.set_defaults(fn=cmd_hamiltonian_major)

    s = sub.add_parser("gen-fixture", help="write an example embedding")
    s.add_argument("--kind", required=True,
                   choices=["random-triangulated", "k6-torus",
                            "sphere-outerplanar", "fig3-tree"])
    s.add_argument("--seed", type=int)
    s.add_argument("--m", type=int, default=3)
    s.add_argument("--n", type=int, default=4)
    s.add_argument("--signature", nargs="+")
    s.add_argument("--out", required=True)
    s.set_defaults(fn=cmd_gen_fixture)

    s = sub.add_parser("export", help="render DOT or SVG")
    s.add_argument("input")
    s.add_argument("--format", required=True, choices=["dot", "svg"])
    s.add_argument("--out", required=True)
    s.add_argument("--witness")
    s.set_defaults(fn=cmd_export)

    s = sub.add_parser("pipeline", help="full certified run with manifest")
    s.add_argument("input")
    s.add_argument("--out-dir", required=True)
    s.set_defaults(fn=cmd_pipeline)

    args = ap.parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
