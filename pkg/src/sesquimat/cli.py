"""Command-line interface.

Subcommands parse matrices and graphs from small text files, run the library
computations, and print deterministic text (or JSON with ``--json``).  Exit
codes: 0 on success, 1 on a domain error (reported with the originating
error name), 2 on usage or input-format errors.

Matrix file format::

    # comments allowed anywhere
    field 2 2 1 1 1          # p k c0 c1 ... ck (modulus optional, canonical default)
    sigma 1 1                # optional: j and s (s in element syntax)
    labels x y z
    0 1 a
    1 0 0
    a2 0 1

Graph file formats::

    digraph 3                # vertices 1..n
    arc 1 2

    fgraph
    field 2 1
    vertices x y z           # optional; defaults to endpoints of edges
    edge x y 1
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence, Union

from .chaingroup import (
    Chain,
    ChainGroup,
    eulerian_chain,
    standard_pair,
)
from .deltamatroid import DeltaMatroid, branch_width_bound
from .errors import NotSigmaEpsSymmetric, SesquimatError
from .field import Field, SesquiMorphism, field_make, identity_sesqui, sesqui_make, sesqui_morphisms
from .graphs import (
    DirectedGraph,
    FStarGraph,
    digraph_to_gf4,
    loop_pivot,
    pivot,
    pivot_class,
    pivot_minor_check,
    rank_width_layout,
    sigma4,
)
from .matrix import LabeledMatrix, cut_rank, ppt, schur_complement, sigma_eps_check, tucker_check
from .verify import CHECKS, run_checks


# ---------------------------------------------------------------------------
# input parsing
# ---------------------------------------------------------------------------

def _content_lines(path: str) -> list[list[str]]:
    with open(path, "r", encoding="utf-8") as fh:
        raw = fh.read().splitlines()
    out = []
    for line in raw:
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(line.split())
    return out


def _field_from_tokens(tokens: Sequence[str]) -> Field:
    if not tokens:
        raise ValueError("field line needs at least a characteristic")
    p = int(tokens[0])
    k = int(tokens[1]) if len(tokens) > 1 else 1
    if len(tokens) > 2:
        modulus = tuple(int(t) for t in tokens[2:])
        return field_make(p, k, modulus)
    return field_make(p, k)


def read_matrix(path: str) -> tuple[LabeledMatrix, Optional[SesquiMorphism]]:
    lines = _content_lines(path)
    if not lines or lines[0][0] != "field":
        raise ValueError(f"{path}: expected a 'field p k ...' header line")
    fld = _field_from_tokens(lines[0][1:])
    i = 1
    sigma = None
    if i < len(lines) and lines[i][0] == "sigma":
        if len(lines[i]) != 3:
            raise ValueError(f"{path}: sigma line must be 'sigma j s'")
        sigma = sesqui_make(fld, int(lines[i][1]), fld.parse_element(lines[i][2]))
        i += 1
    if i >= len(lines) or lines[i][0] != "labels":
        raise ValueError(f"{path}: expected a 'labels ...' line")
    labels = lines[i][1:]
    if len(set(labels)) != len(labels):
        raise ValueError(f"{path}: duplicate labels")
    i += 1
    n = len(labels)
    if len(lines) - i != n:
        raise ValueError(f"{path}: expected {n} matrix rows, found {len(lines) - i}")
    rows = []
    for line in lines[i:]:
        if len(line) != n:
            raise ValueError(f"{path}: row has {len(line)} entries, expected {n}")
        rows.append([fld.parse_element(t) for t in line])
    order = sorted(range(n), key=lambda idx: labels[idx])
    m = LabeledMatrix(
        fld,
        [labels[idx] for idx in order],
        [[rows[r][c] for c in order] for r in order],
    )
    return m, sigma


def read_graph(path: str) -> Union[DirectedGraph, FStarGraph]:
    lines = _content_lines(path)
    if not lines:
        raise ValueError(f"{path}: empty graph file")
    head = lines[0]
    if head[0] == "digraph":
        if len(head) != 2:
            raise ValueError(f"{path}: digraph header must be 'digraph n'")
        n = int(head[1])
        arcs = []
        for line in lines[1:]:
            if line[0] != "arc" or len(line) != 3:
                raise ValueError(f"{path}: expected 'arc u v' lines")
            u, v = int(line[1]), int(line[2])
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"{path}: arc ({u},{v}) outside 1..{n}")
            arcs.append((u, v))
        return DirectedGraph(range(1, n + 1), arcs)
    if head[0] == "fgraph":
        if len(lines) < 2 or lines[1][0] != "field":
            raise ValueError(f"{path}: fgraph needs a 'field ...' line")
        fld = _field_from_tokens(lines[1][1:])
        i = 2
        vertices: list[str] = []
        if i < len(lines) and lines[i][0] == "vertices":
            vertices = lines[i][1:]
            i += 1
        edges = {}
        for line in lines[i:]:
            if line[0] != "edge" or len(line) != 4:
                raise ValueError(f"{path}: expected 'edge u v color' lines")
            u, v, color = line[1], line[2], fld.parse_element(line[3])
            if color == 0:
                raise ValueError(f"{path}: edge colors must be nonzero")
            edges[(u, v)] = color
        verts = set(vertices)
        for u, v in edges:
            verts.update((u, v))
        return FStarGraph(fld, verts, edges)
    raise ValueError(f"{path}: unknown graph header {head[0]!r}")


def _parse_set(text: str) -> list[str]:
    return [t for t in text.split(",") if t]


def _parse_kvector(fld: Field, text: str) -> tuple[int, int]:
    parts = _parse_set(text)
    if len(parts) != 2:
        raise ValueError(f"expected two comma-separated components, got {text!r}")
    return fld.parse_element(parts[0]), fld.parse_element(parts[1])


def _parse_diag(fld: Field, text: Optional[str]) -> Optional[dict]:
    if text is None:
        return None
    out = {}
    for item in _parse_set(text):
        if "=" not in item:
            raise ValueError(f"diagonal entries look like label=value, got {item!r}")
        key, val = item.split("=", 1)
        out[key] = fld.parse_element(val)
    return out


def _resolve_sigma(fld: Field, file_sigma: Optional[SesquiMorphism], flag: Optional[Sequence[str]]) -> SesquiMorphism:
    if flag is not None:
        return sesqui_make(fld, int(flag[0]), fld.parse_element(flag[1]))
    if file_sigma is not None:
        return file_sigma
    return identity_sesqui(fld)


# ---------------------------------------------------------------------------
# output helpers
# ---------------------------------------------------------------------------

def _field_json(fld: Field) -> dict:
    return {"p": fld.p, "k": fld.k, "modulus": list(fld.modulus)}


def _field_header(fld: Field) -> str:
    return "field " + " ".join(str(t) for t in (fld.p, fld.k, *fld.modulus))


def matrix_text(m: LabeledMatrix) -> str:
    fld = m.field
    lines = [_field_header(fld), "labels " + " ".join(str(x) for x in m.labels)]
    for row in m.rows:
        lines.append(" ".join(fld.format_element(v) for v in row))
    return "\n".join(lines)


def matrix_json(m: LabeledMatrix) -> dict:
    fld = m.field
    return {
        "field": _field_json(fld),
        "labels": [str(x) for x in m.labels],
        "rows": [[fld.format_element(v) for v in row] for row in m.rows],
    }


def graph_text(g: FStarGraph) -> str:
    fld = g.field
    lines = ["fgraph", _field_header(fld), "vertices " + " ".join(str(v) for v in g.vertices)]
    for (u, v), color in sorted(g.edges.items(), key=lambda kv: (str(kv[0][0]), str(kv[0][1]))):
        lines.append(f"edge {u} {v} {fld.format_element(color)}")
    return "\n".join(lines)


def graph_json(g: FStarGraph) -> dict:
    fld = g.field
    return {
        "field": _field_json(fld),
        "vertices": [str(v) for v in g.vertices],
        "edges": [
            {"from": str(u), "to": str(v), "color": fld.format_element(c)}
            for (u, v), c in sorted(g.edges.items(), key=lambda kv: (str(kv[0][0]), str(kv[0][1])))
        ],
    }


def chain_text(ch: Chain) -> str:
    fld = ch.field
    parts = []
    for x in ch.ground:
        u, v = ch[x]
        parts.append(f"{x}:({fld.format_element(u)},{fld.format_element(v)})")
    return " ".join(parts)


def group_json(group: ChainGroup) -> dict:
    fld = group.field
    return {
        "ground": [str(x) for x in group.ground],
        "dim": group.dim,
        "basis": [[fld.format_element(v) for v in row] for row in group.basis],
    }


def _emit(args, text: str, payload: dict) -> int:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)
    return 0


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_sesqui_list(args) -> int:
    fld = _field_from_tokens(args.field)
    morphisms = sesqui_morphisms(fld)
    lines = [f"GF({fld.q}) has {len(morphisms)} sesqui-morphism(s):"]
    payload = {"field": _field_json(fld), "sesqui_morphisms": []}
    for m in morphisms:
        fixed = ",".join(fld.format_element(x) for x in m.fixed_elements())
        lines.append(f"  j={m.j} s={fld.format_element(m.s)} fixed={{{fixed}}}")
        payload["sesqui_morphisms"].append(
            {"j": m.j, "s": fld.format_element(m.s), "fixed": [fld.format_element(x) for x in m.fixed_elements()]}
        )
    return _emit(args, "\n".join(lines), payload)


def _load_any_graph(args) -> tuple[Union[DirectedGraph, FStarGraph], Optional[SesquiMorphism]]:
    if getattr(args, "digraph", None):
        return read_graph(args.digraph), None
    g = read_graph(args.fgraph)
    if isinstance(g, DirectedGraph):
        raise ValueError("--fgraph file contains a digraph; use --digraph")
    sig = None
    if args.sigma is not None:
        sig = sesqui_make(g.field, int(args.sigma[0]), g.field.parse_element(args.sigma[1]))
    return g, sig


def cmd_rank_width(args) -> int:
    g, sig = _load_any_graph(args)
    width, layout = rank_width_layout(g, sig)
    term = layout.serialize()
    return _emit(
        args,
        f"rank-width: {width}\nlayout: {term}",
        {"rank_width": width, "layout": term},
    )


def cmd_cut_rank(args) -> int:
    m, _ = read_matrix(args.matrix)
    value = cut_rank(m, _parse_set(args.set))
    return _emit(args, str(value), {"cut_rank": value, "set": _parse_set(args.set)})


def cmd_schur(args) -> int:
    m, _ = read_matrix(args.matrix)
    out = schur_complement(m, _parse_set(args.set))
    return _emit(args, matrix_text(out), {"schur": matrix_json(out)})


def cmd_ppt(args) -> int:
    m, _ = read_matrix(args.matrix)
    out = ppt(m, _parse_set(args.set))
    return _emit(args, matrix_text(out), {"ppt": matrix_json(out)})


def cmd_tucker_check(args) -> int:
    m, _ = read_matrix(args.matrix)
    x = _parse_set(args.x)
    z = _parse_set(args.z)
    ok = tucker_check(m, x, z)
    text = "tucker identity holds" if ok else "tucker identity VIOLATED"
    if args.json:
        print(json.dumps({"holds": ok, "x": x, "z": z}, sort_keys=True))
    else:
        print(text)
    return 0 if ok else 1


def _build_group(args) -> tuple[LabeledMatrix, SesquiMorphism, ChainGroup, "object"]:
    m, file_sigma = read_matrix(args.matrix)
    sigma = _resolve_sigma(m.field, file_sigma, args.sigma)
    eps = sigma_eps_check(m, sigma)
    if eps is None:
        raise NotSigmaEpsSymmetric("matrix is not (sigma, eps)-symmetric for any signs")
    pair = standard_pair(sigma, m.labels, eps)
    return m, sigma, ChainGroup.from_matrix(m, pair), eps


def cmd_chaingroup_build(args) -> int:
    m, sigma, group, eps = _build_group(args)
    minus = ",".join(str(x) for x in sorted(eps.minus, key=str))
    fld = m.field
    lines = [
        f"ground: {' '.join(str(x) for x in group.ground)}",
        f"dim: {group.dim}",
        f"eps-minus: {{{minus}}}",
    ]
    for row in group.basis:
        lines.append("basis " + " ".join(fld.format_element(v) for v in row))
    payload = group_json(group)
    payload["eps_minus"] = [str(x) for x in sorted(eps.minus, key=str)]
    return _emit(args, "\n".join(lines), payload)


def cmd_chaingroup_eulerian(args) -> int:
    _, _, group, _ = _build_group(args)
    ch = eulerian_chain(group)
    return _emit(
        args,
        chain_text(ch),
        {"eulerian": {str(x): [group.field.format_element(v) for v in ch[x]] for x in group.ground}},
    )


def cmd_chaingroup_lambda(args) -> int:
    _, _, group, _ = _build_group(args)
    value = group.connectivity(_parse_set(args.set))
    return _emit(args, str(value), {"connectivity": value, "set": _parse_set(args.set)})


def cmd_chaingroup_minor(args) -> int:
    m, _, group, _ = _build_group(args)
    gamma = _parse_kvector(m.field, args.gamma)
    sub = group.minor(gamma, _parse_set(args.set))
    fld = m.field
    lines = [f"ground: {' '.join(str(x) for x in sub.ground)}", f"dim: {sub.dim}"]
    for row in sub.basis:
        lines.append("basis " + " ".join(fld.format_element(v) for v in row))
    return _emit(args, "\n".join(lines), group_json(sub))


def _pivot_common(args, keep_loops: bool) -> int:
    g = read_graph(args.fgraph)
    if isinstance(g, DirectedGraph):
        raise ValueError("pivot commands need an fgraph file")
    fld = g.field
    sigma = _resolve_sigma(fld, None, args.sigma)
    fn = loop_pivot if keep_loops else pivot
    out = fn(
        g,
        sigma,
        _parse_set(args.x),
        _parse_set(args.neg_rows),
        _parse_set(args.neg_cols),
        _parse_diag(fld, args.p_diag),
        _parse_diag(fld, args.q_diag),
    )
    return _emit(args, graph_text(out), {"graph": graph_json(out)})


def cmd_pivot(args) -> int:
    return _pivot_common(args, keep_loops=False)


def cmd_loop_pivot(args) -> int:
    return _pivot_common(args, keep_loops=True)


def _class_inputs(args) -> tuple[FStarGraph, SesquiMorphism]:
    if getattr(args, "digraph", None):
        g = read_graph(args.digraph)
        if not isinstance(g, DirectedGraph):
            raise ValueError("--digraph file does not start with 'digraph'")
        return digraph_to_gf4(g), sigma4()
    g = read_graph(args.fgraph)
    if isinstance(g, DirectedGraph):
        raise ValueError("--fgraph file contains a digraph; use --digraph")
    sigma = _resolve_sigma(g.field, None, args.sigma)
    return g, sigma


def cmd_pivot_class(args) -> int:
    g, sigma = _class_inputs(args)
    result = pivot_class(g, sigma, args.mode, max_class_size=args.max_class_size)
    lines = [f"class size: {len(result.members)}", f"truncated: {str(result.truncated).lower()}"]
    members = []
    for i, mem in enumerate(result.members):
        edges = " ".join(
            f"({u},{v})={mem.field.format_element(c)}"
            for (u, v), c in sorted(mem.edges.items(), key=lambda kv: (str(kv[0][0]), str(kv[0][1])))
        )
        lines.append(f"member {i}: {edges}" if edges else f"member {i}: (edgeless)")
        members.append(graph_json(mem))
    return _emit(
        args,
        "\n".join(lines),
        {"size": len(result.members), "truncated": result.truncated, "members": members},
    )


def cmd_pivot_minor_check(args) -> int:
    hg = read_graph(args.h)
    gg = read_graph(args.g)
    if isinstance(hg, DirectedGraph):
        hg = digraph_to_gf4(hg)
    if isinstance(gg, DirectedGraph):
        gg = digraph_to_gf4(gg)
    if args.sigma is not None:
        sigma = sesqui_make(gg.field, int(args.sigma[0]), gg.field.parse_element(args.sigma[1]))
    elif gg.field == sigma4().field:
        sigma = sigma4()
    else:
        sigma = identity_sesqui(gg.field)
    witness = pivot_minor_check(hg, gg, sigma, args.mode, max_class_size=args.max_class_size)
    if witness is None:
        return _emit(args, "no pivot-minor witness", {"witness": None})
    moves = ["{}{{{}}}".format(kind, ",".join(str(t) for t in targets)) for kind, targets in witness.trace]
    mapping = " ".join(f"{k}->{v}" for k, v in sorted(witness.mapping.items(), key=lambda kv: str(kv[0])))
    lines = [
        "pivot-minor witness found",
        f"member: {witness.member_index}",
        f"subset: {{{','.join(str(v) for v in witness.subset)}}}",
        f"mapping: {mapping}",
        "trace: " + ("; ".join(moves) if moves else "(none needed)"),
    ]
    return _emit(
        args,
        "\n".join(lines),
        {
            "witness": {
                "member": witness.member_index,
                "subset": [str(v) for v in witness.subset],
                "mapping": {str(k): str(v) for k, v in witness.mapping.items()},
                "trace": moves,
            }
        },
    )


def cmd_delta_matroid(args) -> int:
    m, _ = read_matrix(args.matrix)
    dm = DeltaMatroid.from_matrix(m)
    lines = [f"ground: {' '.join(str(x) for x in dm.ground)}", f"feasible sets: {len(dm.feasible)}"]
    for f in dm.feasible:
        lines.append("  {" + ",".join(str(x) for x in f) + "}")
    bound = branch_width_bound(m) if args.branch_width else None
    if bound is not None:
        lines.append(f"branch-width bound: {bound}")
    payload = dm.to_json_dict()
    if bound is not None:
        payload["branch_width_bound"] = bound
    return _emit(args, "\n".join(lines), payload)


def cmd_sea_check(args) -> int:
    m, _ = read_matrix(args.matrix)
    dm = DeltaMatroid.from_matrix(m)
    violation = dm.sea_check()
    if violation is None:
        return _emit(args, "symmetric exchange axiom holds", {"holds": True})
    f1, f2, x = violation
    text = (
        "symmetric exchange axiom VIOLATED: "
        f"F1={{{','.join(map(str, f1))}}} F2={{{','.join(map(str, f2))}}} x={x}"
    )
    if args.json:
        print(json.dumps({"holds": False, "f1": list(map(str, f1)), "f2": list(map(str, f2)), "x": str(x)}, sort_keys=True))
    else:
        print(text)
    return 1


def cmd_verify(args) -> int:
    names = _parse_set(args.checks) if args.checks else None
    known = {name for name, _ in CHECKS}
    if names:
        unknown = [n for n in names if n not in known]
        if unknown:
            raise ValueError(f"unknown check name(s): {', '.join(unknown)}; known: {', '.join(sorted(known))}")
    fields = [int(t) for t in _parse_set(args.fields)] if args.fields else None
    results = run_checks(seed=args.seed, max_n=args.max_n, fields=fields, names=names)
    passed = sum(1 for r in results if r.passed)
    if args.json:
        print(
            json.dumps(
                {
                    "seed": args.seed,
                    "passed": passed,
                    "total": len(results),
                    "checks": [
                        {"name": r.name, "passed": r.passed, "cases": r.cases, "detail": r.detail}
                        for r in results
                    ],
                },
                sort_keys=True,
            )
        )
    else:
        print(f"seed: {args.seed}")
        for r in results:
            print(r.line())
        print(f"{passed}/{len(results)} checks passed")
    return 0 if passed == len(results) else 1


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sesquimat",
        description="Exact calculus of (sigma, eps)-symmetric matrices, chain groups, "
        "pivot-minors, and representable delta-matroids over small finite fields.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("--json", action="store_true", help="emit JSON instead of text")
        p.set_defaults(func=fn)
        return p

    p = sub.add_parser("sesqui", help="sesqui-morphism utilities")
    ssub = p.add_subparsers(dest="subcommand", required=True)
    pl = ssub.add_parser("list", help="enumerate the sesqui-morphisms of a field")
    pl.add_argument("--field", nargs="+", required=True, metavar="P [K [C0...CK]]")
    pl.add_argument("--json", action="store_true")
    pl.set_defaults(func=cmd_sesqui_list)

    p = add("rank-width", cmd_rank_width, help="rank-width and an optimal layout")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--digraph", help="digraph file (encoded over GF(4))")
    src.add_argument("--fgraph", help="edge-colored graph file")
    p.add_argument("--sigma", nargs=2, metavar=("J", "S"), help="sesqui-morphism for fgraph input")

    p = add("cut-rank", cmd_cut_rank, help="rank of the off-diagonal block against a subset")
    p.add_argument("--matrix", required=True)
    p.add_argument("--set", required=True, help="comma-separated labels (empty for the empty set)")

    p = add("schur", cmd_schur, help="Schur complement by a nonsingular principal block")
    p.add_argument("--matrix", required=True)
    p.add_argument("--set", required=True)

    p = add("ppt", cmd_ppt, help="principal pivot transform at a nonsingular principal block")
    p.add_argument("--matrix", required=True)
    p.add_argument("--set", required=True)

    p = add("tucker-check", cmd_tucker_check, help="pivot determinant identity for one (X, Z)")
    p.add_argument("--matrix", required=True)
    p.add_argument("--x", required=True)
    p.add_argument("--z", required=True)

    p = sub.add_parser("chaingroup", help="chain groups represented by matrices")
    csub = p.add_subparsers(dest="subcommand", required=True)

    def add_cg(name, fn, **kwargs):
        q = csub.add_parser(name, **kwargs)
        q.add_argument("--matrix", required=True)
        q.add_argument("--sigma", nargs=2, metavar=("J", "S"))
        q.add_argument("--json", action="store_true")
        q.set_defaults(func=fn)
        return q

    add_cg("build", cmd_chaingroup_build, help="canonical basis of the represented group")
    add_cg("eulerian", cmd_chaingroup_eulerian, help="construct an eulerian chain")
    q = add_cg("lambda", cmd_chaingroup_lambda, help="connectivity of a subset")
    q.add_argument("--set", required=True)
    q = add_cg("minor", cmd_chaingroup_minor, help="constrain against a direction on a subset")
    q.add_argument("--gamma", required=True, help="direction as 'u,v' in element syntax")
    q.add_argument("--set", required=True)

    for name, fn, helptext in (
        ("pivot", cmd_pivot, "pivot complementation (diagonal zeroed)"),
        ("loop-pivot", cmd_loop_pivot, "loop pivot complementation (diagonal kept)"),
    ):
        p = add(name, fn, help=helptext)
        p.add_argument("--fgraph", required=True)
        p.add_argument("--sigma", nargs=2, metavar=("J", "S"))
        p.add_argument("--x", default="", help="pivot set")
        p.add_argument("--neg-rows", default="", help="row sign-flip set Z")
        p.add_argument("--neg-cols", default="", help="column sign-flip set Z'")
        p.add_argument("--p-diag", default=None, help="row scaling, e.g. 'x=2,y=1'")
        p.add_argument("--q-diag", default=None, help="column scaling (must pair with --p-diag)")

    p = add("pivot-class", cmd_pivot_class, help="BFS closure under pivot complementations")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--digraph")
    src.add_argument("--fgraph")
    p.add_argument("--sigma", nargs=2, metavar=("J", "S"))
    p.add_argument("--mode", choices=("loop", "loop-free"), default="loop")
    p.add_argument("--max-class-size", type=int, default=2000)

    p = add("pivot-minor-check", cmd_pivot_minor_check, help="search G's pivot class for H")
    p.add_argument("--h", required=True, help="candidate pivot-minor (digraph or fgraph file)")
    p.add_argument("--g", required=True, help="host graph (digraph or fgraph file)")
    p.add_argument("--sigma", nargs=2, metavar=("J", "S"))
    p.add_argument("--mode", choices=("loop", "loop-free"), default="loop")
    p.add_argument("--max-class-size", type=int, default=2000)

    p = add("delta-matroid", cmd_delta_matroid, help="feasible sets of nonsingular principal blocks")
    p.add_argument("--matrix", required=True)
    p.add_argument("--branch-width", action="store_true", help="also print the branch-width bound")

    p = add("sea-check", cmd_sea_check, help="symmetric exchange axiom on the matrix's set system")
    p.add_argument("--matrix", required=True)

    p = add("verify", cmd_verify, help="run the full verification suite")
    p.add_argument("--seed", type=int, default=2024)
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--fields", default=None, help="comma-separated field orders, e.g. 2,3,4,5")
    p.add_argument("--checks", default=None, help="comma-separated check names (default: all)")

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SesquimatError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
