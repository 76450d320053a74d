"""FastAPI service exposing the calculator.

All operations are pure functions of the request, so the service is
stateless; the CLI drives the same handlers in-process by default and over
HTTP when pointed at a running server (`arq serve`).
"""

from fastapi import FastAPI, HTTPException

from ..ar import Unavailable, almost_split, ar_translate
from ..components import (
    ar_capabilities,
    component_shape,
    knit_component,
    regular_census,
)
from ..derived import (
    connecting_window,
    derived_ar_triangle,
    derived_capabilities,
)
from ..errors import DomainError
from ..linalg import field_from_name
from ..naming import parse_derived, parse_rep
from ..quiver import build_quiver
from ..strings import QRQLSet, orbit_classify, qr_ql_sets
from .models import (
    AssRequest,
    ComponentRequest,
    ConnectingRequest,
    DerivedRequest,
    OrbitRequest,
    PathsRequest,
    QPlusRequest,
    QuiverRequest,
    RepRequest,
    SigmaRequest,
    TranslateRequest,
)

app = FastAPI(
    title="arquiver",
    description="Auslander-Reiten data for strongly locally finite quivers",
)


def _quiver(req):
    field = field_from_name(req.field)
    return build_quiver(req.quiver, field=field)


def _wrap(fn):
    try:
        return fn()
    except DomainError as e:
        raise HTTPException(status_code=400, detail=e.to_json())


@app.post("/validate")
def validate(req: QuiverRequest):
    def run():
        qu = _quiver(req)
        return {
            "ok": True,
            "connected": qu.is_connected(),
            "interval_finite": True,
            "quiver": qu.to_json(),
        }

    return _wrap(run)


@app.post("/classify")
def classify(req: QuiverRequest):
    def run():
        qu = _quiver(req)
        kind, sub = qu.classify()
        return {"class": kind, "subtype": sub}

    return _wrap(run)


@app.post("/paths")
def paths(req: PathsRequest):
    def run():
        qu = _quiver(req)
        src = qu.vertex_by_label(req.source)
        tgt = qu.vertex_by_label(req.target)
        ps = qu.paths_between(src, tgt)
        return {
            "count": len(ps),
            "paths": [[a[2] for a in p] for p in ps],
        }

    return _wrap(run)


@app.post("/qplus")
def qplus(req: QPlusRequest):
    def run():
        qu = _quiver(req)
        return {
            "components": qu.q_plus_components(tail_depth=req.depth),
            "profile": qu.infinite_path_profile(),
        }

    return _wrap(run)


@app.post("/rep")
def rep(req: RepRequest):
    def run():
        qu = _quiver(req)
        return parse_rep(qu, req.rep).to_json()

    return _wrap(run)


@app.post("/dims")
def dims(req: RepRequest):
    def run():
        qu = _quiver(req)
        m = parse_rep(qu, req.rep)
        return {"rep": m.name(), "dim_vector": m.dim_vector(req.depth).to_json()}

    return _wrap(run)


@app.post("/translate")
def translate(req: TranslateRequest):
    def run():
        qu = _quiver(req)
        m = parse_rep(qu, req.rep)
        return ar_translate(m, req.direction).to_json()

    return _wrap(run)


@app.post("/ass")
def ass(req: AssRequest):
    def run():
        qu = _quiver(req)
        m = parse_rep(qu, req.rep)
        seq = almost_split(m, req.side)
        if isinstance(seq, Unavailable):
            return seq.to_json()
        return seq.to_json()

    return _wrap(run)


@app.post("/orbit")
def orbit(req: OrbitRequest):
    def run():
        qu = _quiver(req)
        m = parse_rep(qu, req.rep)
        return orbit_classify(qu, m)

    return _wrap(run)


@app.post("/sigma")
def sigma(req: SigmaRequest):
    def run():
        qu = _quiver(req)
        s = QRQLSet(qu, req.side.upper())
        out = s.to_json(req.lo, req.hi)
        out["chain"] = s.chain_text(req.lo, req.hi)
        return out

    return _wrap(run)


@app.post("/component")
def component(req: ComponentRequest):
    def run():
        qu = _quiver(req)
        seed = _parse_seed(qu, req.seed)
        cw = knit_component(qu, seed, depth=req.depth, width=req.width)
        out = cw.to_json()
        out["dot"] = cw.to_dot()
        return out

    return _wrap(run)


def _parse_seed(qu, text):
    if text == "preprojective":
        return ("preprojective",)
    if text.startswith("preinjective:"):
        return ("preinjective", text.split(":", 1)[1])
    if text.startswith("regular:"):
        return ("regular", parse_rep(qu, text.split(":", 1)[1]))
    raise DomainError(f"unknown seed {text!r}")


@app.post("/shape")
def shape(req: RepRequest):
    def run():
        qu = _quiver(req)
        m = parse_rep(qu, req.rep)
        return component_shape(qu, m, depth=max(req.depth, 6))

    return _wrap(run)


@app.post("/census")
def census(req: QuiverRequest):
    def run():
        qu = _quiver(req)
        out = regular_census(qu)
        if isinstance(out.get("breakdown"), list) and len(out["breakdown"]) == 1:
            out["shape"] = out["breakdown"][0]["shape"]
        return out

    return _wrap(run)


@app.post("/caps")
def caps(req: QuiverRequest):
    def run():
        qu = _quiver(req)
        return {
            "rep_plus": ar_capabilities(qu),
            "derived": derived_capabilities(qu),
        }

    return _wrap(run)


@app.post("/derived")
def derived(req: DerivedRequest):
    def run():
        qu = _quiver(req)
        obj = parse_derived(qu, req.rep)
        tri = derived_ar_triangle(obj, req.side)
        return tri.to_json()

    return _wrap(run)


@app.post("/connecting")
def connecting(req: ConnectingRequest):
    def run():
        qu = _quiver(req)
        cw = connecting_window(qu, depth=req.depth, width=req.width)
        out = cw.to_json()
        out["dot"] = cw.to_dot()
        return out

    return _wrap(run)
