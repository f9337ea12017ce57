"""Command-line client for the piece computations.

Every subcommand builds the same request model the HTTP service accepts.
By default the request is handled in-process; with ``--server`` it is sent
to a running service instead, and the rendering path is shared so the
bytes printed are identical either way.

Exit codes: 0 on success, 1 when `verify` finds a property failure,
2 for usage or configuration errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import formats
from .service import ops
from .service.models import (CellsRequest, CellsResponse, ClosureRequest,
                             ClosureResponse, DatumSpec, HasseRequest,
                             HasseResponse, OrderRequest, OrderResponse,
                             PieceRef, PiecesRequest, PiecesResponse,
                             VerifyRequest, VerifyResponse)


class UsageError(Exception):
    pass


def parse_piece_arg(text: str) -> PieceRef:
    """Parse the shell-friendly piece syntax ``J=1,2;w=121``."""
    subset: list[int] = []
    word: list[int] = []
    seen = set()
    for chunk in text.split(";"):
        key, eq, value = chunk.partition("=")
        key = key.strip()
        if not eq or key not in ("J", "w") or key in seen:
            raise UsageError(f"cannot parse piece argument: {text!r}")
        seen.add(key)
        value = value.strip()
        try:
            if key == "J":
                subset = [int(v) for v in value.split(",") if v != ""]
            elif "," in value:
                word = [int(v) for v in value.split(",") if v != ""]
            else:
                word = [int(ch) for ch in value]
        except ValueError:
            raise UsageError(f"cannot parse piece argument: {text!r}") from None
    if seen != {"J", "w"}:
        raise UsageError(f"cannot parse piece argument: {text!r}")
    return PieceRef(J=subset, w=word)


def datum_spec_from_args(args) -> DatumSpec:
    if args.cartan:
        try:
            with open(args.cartan, "r", encoding="utf-8") as handle:
                data = json.load(handle)
        except (OSError, json.JSONDecodeError):
            raise UsageError("invalid Cartan matrix") from None
        if not isinstance(data, dict):
            raise UsageError("invalid Cartan matrix")
        return DatumSpec.model_validate(data)
    if args.type:
        return DatumSpec(type=args.type)
    raise UsageError("one of --type or --cartan is required")


def _remote(server: str, path: str, request, response_cls):
    import httpx

    url = server.rstrip("/") + path
    reply = httpx.post(url, json=request.model_dump(by_alias=True),
                       timeout=600.0)
    if reply.status_code != 200:
        try:
            detail = reply.json().get("detail", reply.text)
        except ValueError:
            detail = reply.text
        raise UsageError(f"server error: {detail}")
    return response_cls.model_validate(reply.json())


# -- rendering ---------------------------------------------------------------


def _piece_row(piece) -> tuple[str, str, str, str]:
    return (
        ",".join(str(j) for j in piece.J),
        formats.word_str(piece.w),
        ",".join(str(j) for j in piece.j_inf or []),
        "" if piece.dim is None else str(piece.dim),
    )


def render_piece_listing(pieces, fmt: str) -> str:
    if fmt == "json":
        return formats.canonical_json(
            {"pieces": [p.model_dump(by_alias=True) for p in pieces]}
        )
    if fmt == "csv":
        return formats.csv_text(("J", "w", "j_inf", "dim"),
                                [_piece_row(p) for p in pieces])
    lines = []
    for p in pieces:
        parts = [formats.piece_arg(p.J, p.w)]
        if p.j_inf is not None:
            parts.append(f"j_inf={formats.subset_str(p.j_inf)}")
        if p.dim is not None:
            parts.append(f"dim={p.dim}")
        lines.append("  ".join(parts))
    return "\n".join(lines) + "\n"


def render_hasse(resp: HasseResponse, fmt: str) -> str:
    if fmt == "dot":
        return resp.dot
    if fmt == "json":
        return formats.canonical_json({
            "nodes": [n.model_dump(by_alias=True, exclude_none=True)
                      for n in resp.nodes],
            "edges": [e.model_dump(by_alias=True, exclude_none=True)
                      for e in resp.edges],
        })
    if fmt == "csv":
        return formats.csv_text(
            ("from", "to"),
            [
                (formats.piece_arg(e.from_.J, e.from_.w),
                 formats.piece_arg(e.to.J, e.to.w))
                for e in resp.edges
            ],
        )
    lines = [
        f"{formats.piece_arg(e.from_.J, e.from_.w)} -> "
        f"{formats.piece_arg(e.to.J, e.to.w)}"
        for e in resp.edges
    ]
    return "\n".join(lines) + "\n"


def render_cells(resp: CellsResponse, fmt: str) -> str:
    if fmt == "json":
        return formats.canonical_json(
            resp.model_dump(by_alias=True, exclude_none=True)
        )
    lines = [f"finite: {'true' if resp.finite else 'false'}"]
    if not resp.finite:
        lines.append(f"violator: w={formats.word_str(resp.violator or [])} "
                     f"i2={formats.subset_str(resp.violator_subset or [])}")
        return "\n".join(lines) + "\n"
    lines.append("alpha-order: "
                 + " ".join(formats.word_str(u) or "e"
                            for u in resp.alpha_order))
    lines.append("cells: " + " ".join(
        f"{dim}:{count}" for dim, count in sorted(resp.cells_by_dim.items())
    ))
    for grp in resp.groups:
        members = " ".join(formats.piece_arg(m.J, m.w) for m in grp.members)
        lines.append(
            f"group u={formats.word_str(grp.u) or 'e'} dim={grp.dim} "
            f"rank={grp.bundle_rank} members: {members}"
        )
    return "\n".join(lines) + "\n"


def render_order(resp: OrderResponse, fmt: str) -> str:
    if resp.comparison is not None:
        if fmt == "json":
            return formats.canonical_json(
                resp.comparison.model_dump(by_alias=True)
            )
        return (f"leq: {'true' if resp.comparison.leq else 'false'}\n"
                f"geq: {'true' if resp.comparison.geq else 'false'}\n")
    if fmt == "json":
        return formats.canonical_json({
            "pairs": [e.model_dump(by_alias=True, exclude_none=True)
                      for e in resp.pairs],
        })
    if fmt == "csv":
        return formats.csv_text(
            ("from", "to"),
            [
                (formats.piece_arg(e.from_.J, e.from_.w),
                 formats.piece_arg(e.to.J, e.to.w))
                for e in resp.pairs
            ],
        )
    lines = [
        f"{formats.piece_arg(e.from_.J, e.from_.w)} <= "
        f"{formats.piece_arg(e.to.J, e.to.w)}"
        for e in resp.pairs
    ]
    return "\n".join(lines) + "\n"


def render_verify(resp: VerifyResponse, fmt: str) -> str:
    if fmt == "json":
        return formats.canonical_json(resp.model_dump(by_alias=True))
    rows = [
        (r.datum, r.automorphism, r.prop,
         ("PASS" if r.ok else "FAIL") + (" (info)" if r.informational else ""),
         r.detail)
        for r in resp.rows
    ]
    if fmt == "csv":
        return formats.csv_text(
            ("datum", "automorphism", "property", "status", "detail"), rows
        )
    width = max((len(r.prop) for r in resp.rows), default=8)
    lines = [
        f"{datum:<8} {aut:<12} {prop:<{width}} {status:<12} {detail}"
        for datum, aut, prop, status, detail in rows
    ]
    lines.append("result: " + ("ok" if resp.ok else "property failure"))
    return "\n".join(lines) + "\n"


# -- subcommand drivers -------------------------------------------------------


def cmd_pieces(args) -> int:
    req = PiecesRequest(datum=datum_spec_from_args(args),
                        automorphism=args.automorphism)
    if args.server:
        resp = _remote(args.server, "/pieces", req, PiecesResponse)
    else:
        resp = ops.pieces_op(req, cache_dir=args.cache_dir)
    sys.stdout.write(render_piece_listing(resp.pieces, args.format))
    return 0


def cmd_closure(args) -> int:
    req = ClosureRequest(datum=datum_spec_from_args(args),
                         automorphism=args.automorphism,
                         piece=parse_piece_arg(args.piece))
    if args.server:
        resp = _remote(args.server, "/closure", req, ClosureResponse)
    else:
        resp = ops.closure_op(req, cache_dir=args.cache_dir)
    sys.stdout.write(render_piece_listing(resp.pieces, args.format))
    return 0


def cmd_hasse(args) -> int:
    req = HasseRequest(datum=datum_spec_from_args(args),
                       automorphism=args.automorphism)
    if args.server:
        resp = _remote(args.server, "/hasse", req, HasseResponse)
    else:
        resp = ops.hasse_op(req, cache_dir=args.cache_dir)
    sys.stdout.write(render_hasse(resp, args.format))
    return 0


def cmd_cells(args) -> int:
    req = CellsRequest(datum=datum_spec_from_args(args),
                       automorphism=args.automorphism,
                       piece=parse_piece_arg(args.piece))
    if args.server:
        resp = _remote(args.server, "/cells", req, CellsResponse)
    else:
        resp = ops.cells_op(req, cache_dir=args.cache_dir)
    sys.stdout.write(render_cells(resp, args.format))
    return 0


def cmd_order(args) -> int:
    if args.piece2 and not args.piece:
        raise UsageError("--piece2 requires --piece")
    req = OrderRequest(
        datum=datum_spec_from_args(args),
        automorphism=args.automorphism,
        piece=parse_piece_arg(args.piece) if args.piece else None,
        piece2=parse_piece_arg(args.piece2) if args.piece2 else None,
    )
    if req.piece is not None and req.piece2 is None:
        raise UsageError("--piece requires --piece2")
    if args.server:
        resp = _remote(args.server, "/order", req, OrderResponse)
    else:
        resp = ops.order_op(req, cache_dir=args.cache_dir)
    sys.stdout.write(render_order(resp, args.format))
    return 0


def cmd_verify(args) -> int:
    datum = None
    if args.type or args.cartan:
        datum = datum_spec_from_args(args)
    req = VerifyRequest(
        datum=datum,
        automorphism=args.automorphism,
        max_rank=args.max_rank,
        properties=args.props.split(",") if args.props else None,
    )
    if args.server:
        resp = _remote(args.server, "/verify", req, VerifyResponse)
    else:
        resp = ops.verify_op(req, cache_dir=args.cache_dir)
    sys.stdout.write(render_verify(resp, args.format))
    return 0 if resp.ok else 1


def cmd_serve(args) -> int:
    import uvicorn

    from .service.api import app

    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stablepieces",
        description=(
            "Piece posets, closures and cell decompositions of wonderful "
            "group compactifications."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, formats_allowed, default_format, aut_default="id"):
        p.add_argument("--type", help="root datum type, e.g. A2 or A1xA1")
        p.add_argument("--cartan", help="JSON file with the datum spec")
        p.add_argument("--automorphism", default=aut_default,
                       help="label mapping such as 1:2,2:1, or id")
        p.add_argument("--format", choices=formats_allowed,
                       default=default_format)
        p.add_argument("--cache-dir", default=None,
                       help="directory for the order/piece cache")
        p.add_argument("--server", default=None,
                       help="base URL of a running service")
        p.add_argument("--verbose", "-v", action="count", default=0)

    p = sub.add_parser("pieces", help="list every piece index")
    add_common(p, ("text", "json", "csv"), "text")
    p.set_defaults(driver=cmd_pieces)

    p = sub.add_parser("closure", help="pieces in the closure of one piece")
    add_common(p, ("text", "json", "csv"), "text")
    p.add_argument("--piece", required=True, help='piece such as "J=1,2;w=121"')
    p.set_defaults(driver=cmd_closure)

    p = sub.add_parser("hasse", help="covering relations of the piece order")
    add_common(p, ("dot", "json", "csv", "text"), "dot")
    p.set_defaults(driver=cmd_hasse)

    p = sub.add_parser("cells", help="cellular decomposition report")
    add_common(p, ("text", "json"), "text")
    p.add_argument("--piece", required=True, help='piece such as "J=;w=1"')
    p.set_defaults(driver=cmd_cells)

    p = sub.add_parser("order", help="the full order, or compare two pieces")
    add_common(p, ("text", "json", "csv"), "text")
    p.add_argument("--piece", default=None)
    p.add_argument("--piece2", default=None)
    p.set_defaults(driver=cmd_order)

    p = sub.add_parser("verify", help="run the brute-force property suite")
    add_common(p, ("text", "json", "csv"), "text", aut_default=None)
    p.add_argument("--max-rank", type=int, default=None)
    p.add_argument("--props", default=None,
                   help="comma-separated property names to run")
    p.set_defaults(driver=cmd_verify)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(driver=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.monotonic()
    try:
        code = args.driver(args)
    except UsageError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    if getattr(args, "verbose", 0):
        # diagnostics go to stderr so stdout stays byte-stable
        elapsed = time.monotonic() - started
        print(f"{args.command}: {elapsed:.3f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
