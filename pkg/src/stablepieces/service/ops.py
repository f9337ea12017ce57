"""Handlers turning request models into response models.

The FastAPI routes and the CLI's local mode both call these functions, so
output is identical whichever front end is used.  Service processes keep a
small in-memory registry of sessions keyed by datum digest; the registry
is write-once per key and safe for concurrent readers.
"""

from __future__ import annotations

import threading
from concurrent.futures import ThreadPoolExecutor

from .. import formats
from ..cartan import (CartanDatum, datum_from_type, product_matrix,
                      standard_matrix)
from ..cells import cellular_report
from ..closure import hasse_edges, piece_closure
from ..pieces import PieceIndex, piece_dimension, stable_subset
from ..session import Session
from ..shifts import leq_pieces
from ..verify import run_checks
from .models import (CellGroupModel, CellsRequest, CellsResponse,
                     ClosureRequest, ClosureResponse, ComparisonModel,
                     DatumSpec, EdgeModel, HasseRequest, HasseResponse,
                     OrderRequest, OrderResponse, PieceModel, PieceRef,
                     PiecesRequest, PiecesResponse, VerifyRequest,
                     VerifyResponse, VerifyRowModel)

# the standard desk-scale suite: every simple rank-2 datum, the smallest
# reducible one, and rank 3 with its diagram flip
DEFAULT_VERIFY_SUITE: tuple[tuple[str, tuple[str, ...]], ...] = (
    ("A1", ("id",)),
    ("A1xA1", ("id", "1:2,2:1")),
    ("A2", ("id", "1:2,2:1")),
    ("B2", ("id",)),
    ("G2", ("id",)),
    ("A3", ("id", "1:3,2:2,3:1")),
)


def datum_from_spec(spec: DatumSpec) -> tuple[CartanDatum, str]:
    """Build the datum and a display label from a request spec."""
    if spec.cartan is not None:
        return CartanDatum.from_matrix(spec.cartan), "cartan"
    if spec.factors:
        blocks = [standard_matrix(f.type, f.rank) for f in spec.factors]
        label = "x".join(f"{f.type.upper()}{f.rank}" for f in spec.factors)
        return CartanDatum.from_matrix(product_matrix(blocks)), label
    if spec.type:
        if spec.rank is not None:
            label = f"{spec.type.upper()}{spec.rank}"
        else:
            label = spec.type.upper()
        return datum_from_type(label), label
    raise ValueError("invalid Cartan matrix")


_registry: dict[str, Session] = {}
_registry_lock = threading.Lock()


def build_session(spec: DatumSpec, automorphism: str = "id",
                  cache_dir=None, shared: bool = False) -> Session:
    datum, label = datum_from_spec(spec)
    if not shared:
        return Session(datum, automorphism, label=label, cache_dir=cache_dir)
    probe = Session(datum, automorphism, label=label, cache_dir=cache_dir)
    with _registry_lock:
        found = _registry.get(probe.digest)
        if found is None:
            _registry[probe.digest] = probe
            found = probe
    return found


def _piece_model(session: Session, p: PieceIndex,
                 with_info: bool = True) -> PieceModel:
    if not with_info:
        return PieceModel(J=list(p.subset), w=list(p.w.reduced_word()))
    return PieceModel(
        J=list(p.subset),
        w=list(p.w.reduced_word()),
        j_inf=list(stable_subset(session.group, session.tw, p.subset, p.w)),
        dim=piece_dimension(session.group, session.tw, p),
    )


def _resolve_piece(session: Session, ref: PieceRef) -> PieceIndex:
    try:
        return session.piece(ref.J, ref.w)
    except ValueError as exc:
        if "minimal" in str(exc):
            raise ValueError("w is not minimal in its coset") from exc
        raise


def pieces_op(req: PiecesRequest, cache_dir=None,
              shared: bool = False) -> PiecesResponse:
    session = build_session(req.datum, req.automorphism, cache_dir, shared)
    return PiecesResponse(
        pieces=[_piece_model(session, p) for p in session.pieces()]
    )


def closure_op(req: ClosureRequest, cache_dir=None,
               shared: bool = False) -> ClosureResponse:
    session = build_session(req.datum, req.automorphism, cache_dir, shared)
    p = _resolve_piece(session, req.piece)
    closed = piece_closure(session.group, session.tw, p)
    return ClosureResponse(
        piece=_piece_model(session, p),
        pieces=[_piece_model(session, q) for q in closed],
    )


def hasse_op(req: HasseRequest, cache_dir=None,
             shared: bool = False) -> HasseResponse:
    session = build_session(req.datum, req.automorphism, cache_dir, shared)
    nodes = session.pieces()
    edges = hasse_edges(session.group, session.tw, nodes)
    labels = {
        p: formats.piece_label(p.subset, p.w.reduced_word()) for p in nodes
    }
    dot = formats.dot_graph(
        [labels[p] for p in nodes],
        [(labels[a], labels[b]) for a, b in edges],
    )
    return HasseResponse(
        nodes=[_piece_model(session, p, with_info=False) for p in nodes],
        edges=[
            EdgeModel(
                from_=_piece_model(session, a, with_info=False),
                to=_piece_model(session, b, with_info=False),
            )
            for a, b in edges
        ],
        dot=dot,
    )


def cells_op(req: CellsRequest, cache_dir=None,
             shared: bool = False) -> CellsResponse:
    session = build_session(req.datum, req.automorphism, cache_dir, shared)
    p = _resolve_piece(session, req.piece)
    report = cellular_report(session.group, session.tw, p)
    if not report.finite:
        return CellsResponse(
            finite=False,
            violator=list(report.violator.reduced_word()),
            violator_subset=list(report.violator_subset),
        )
    return CellsResponse(
        finite=True,
        alpha_order=[list(u.reduced_word()) for u in report.alpha_order],
        groups=[
            CellGroupModel(
                u=list(g.u.reduced_word()),
                members=[
                    _piece_model(session, q, with_info=False)
                    for q in g.members
                ],
                dim=g.dimension,
                bundle_rank=g.bundle_rank,
                cells_by_dim=dict(sorted(g.cells_by_dim.items())),
            )
            for g in report.groups
        ],
        cells_by_dim=dict(sorted(report.cells_by_dim.items())),
    )


def order_op(req: OrderRequest, cache_dir=None,
             shared: bool = False) -> OrderResponse:
    session = build_session(req.datum, req.automorphism, cache_dir, shared)
    if req.piece is not None and req.piece2 is not None:
        p = _resolve_piece(session, req.piece)
        q = _resolve_piece(session, req.piece2)
        return OrderResponse(comparison=ComparisonModel(
            leq=leq_pieces(p, q, session.tw),
            geq=leq_pieces(q, p, session.tw),
        ))
    nodes = session.pieces()
    pairs = []
    for p in nodes:
        for q in nodes:
            if p != q and leq_pieces(p, q, session.tw):
                pairs.append(EdgeModel(
                    from_=_piece_model(session, p, with_info=False),
                    to=_piece_model(session, q, with_info=False),
                ))
    return OrderResponse(pairs=pairs)


def verify_op(req: VerifyRequest, cache_dir=None,
              shared: bool = False) -> VerifyResponse:
    jobs: list[tuple[str, str, Session]] = []
    if req.datum is not None:
        session = build_session(req.datum, req.automorphism or "id",
                                cache_dir, shared)
        jobs.append((session.label, req.automorphism or "id", session))
    else:
        for label, specs in DEFAULT_VERIFY_SUITE:
            datum, _ = datum_from_spec(DatumSpec(type=label))
            if req.max_rank is not None and datum.rank > req.max_rank:
                continue
            for spec in specs:
                if req.automorphism is not None and spec != req.automorphism:
                    continue
                jobs.append((
                    label, spec,
                    build_session(DatumSpec(type=label), spec,
                                  cache_dir, shared),
                ))
    def sweep(job):
        label, spec, session = job
        return [
            VerifyRowModel(
                datum=label,
                automorphism=spec,
                prop=row.prop,
                ok=row.ok,
                informational=row.informational,
                detail=row.detail,
            )
            for row in run_checks(session.group, session.tw, req.properties)
        ]

    # sweeps are independent; results are collected in job order so the
    # emitted table does not depend on scheduling
    rows = []
    if jobs:
        with ThreadPoolExecutor(max_workers=min(4, len(jobs))) as pool:
            for chunk in pool.map(sweep, jobs):
                rows.extend(chunk)
    ok = all(row.ok or row.informational for row in rows)
    return VerifyResponse(ok=ok, rows=rows)
