"""Command line front end.

`arq` is a thin client over the service layer: each subcommand builds the
same request model the HTTP endpoint takes and dispatches it in-process by
default, or to a running server when --server (or ARQ_SERVER) is set.
ARQ_FIELD selects the scalar field ("Q" or "Fp:<prime>").

Exit codes: 0 success, 1 usage error, 2 domain error.
"""

import json
import os
import sys

import click

from .errors import DomainError

_SERVER_OPT = click.option(
    "--server", default=None, envvar="ARQ_SERVER", help="dispatch to a running service"
)
_FIELD_OPT = click.option(
    "--field", default=None, envvar="ARQ_FIELD", help='scalar field: Q or Fp:<prime>'
)


def _dispatch(server, endpoint, payload):
    if server:
        import httpx

        resp = httpx.post(server.rstrip("/") + endpoint, json=payload, timeout=120)
        if resp.status_code == 400:
            _raise_domain(resp.json())
        resp.raise_for_status()
        return resp.json()
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        from fastapi.testclient import TestClient

        from .service.app import app

        client = TestClient(app, raise_server_exceptions=True)
        resp = client.post(endpoint, json=payload)
    if resp.status_code == 400:
        _raise_domain(resp.json())
    resp.raise_for_status()
    return resp.json()


def _raise_domain(body):
    detail = body.get("detail", {})
    if isinstance(detail, dict):
        err = detail.get("error", "DomainError")
        msg = detail.get("detail", "")
        data = detail.get("data") or {}
    else:
        err, msg, data = "DomainError", str(detail), {}
    e = DomainError(msg, **data)
    e.name = err
    raise e


def _load_quiver(path):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _emit(data, fmt, text_key=None, dot_key="dot"):
    if fmt == "dot":
        click.echo(data.get(dot_key, ""), nl=False)
    elif fmt == "text" and text_key:
        click.echo(data.get(text_key, ""))
    else:
        data = {k: v for k, v in data.items() if k != "dot"}
        click.echo(json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False))


@click.group()
def cli():
    """Auslander-Reiten data for strongly locally finite quivers."""


@cli.command()
@click.argument("quiver", type=click.Path(exists=True))
@_SERVER_OPT
@_FIELD_OPT
def validate(quiver, server, field):
    """Validate a quiver-spec JSON file."""
    _emit(_dispatch(server, "/validate", {"quiver": _load_quiver(quiver), "field": field}), "json")


@cli.command()
@click.argument("quiver", type=click.Path(exists=True))
@_SERVER_OPT
@_FIELD_OPT
def classify(quiver, server, field):
    """Underlying-graph classification."""
    _emit(_dispatch(server, "/classify", {"quiver": _load_quiver(quiver), "field": field}), "json")


@cli.command()
@click.argument("quiver", type=click.Path(exists=True))
@click.option("--source", "--from", "source", required=True)
@click.option("--target", "--to", "target", required=True)
@_SERVER_OPT
@_FIELD_OPT
def paths(quiver, source, target, server, field):
    """All paths between two vertices."""
    _emit(
        _dispatch(
            server,
            "/paths",
            {"quiver": _load_quiver(quiver), "source": source, "target": target, "field": field},
        ),
        "json",
    )


@cli.command()
@click.argument("quiver", type=click.Path(exists=True))
@click.option("--depth", default=6)
@_SERVER_OPT
@_FIELD_OPT
def qplus(quiver, depth, server, field):
    """Q^+ membership and its connected components."""
    _emit(
        _dispatch(server, "/qplus", {"quiver": _load_quiver(quiver), "depth": depth, "field": field}),
        "json",
    )


@cli.command()
@click.argument("quiver", type=click.Path(exists=True))
@click.option("--rep", required=True)
@click.option("--depth", default=0)
@_SERVER_OPT
@_FIELD_OPT
def rep(quiver, rep, depth, server, field):
    """A representation by name, with its dimension vector."""
    _emit(
        _dispatch(
            server, "/rep", {"quiver": _load_quiver(quiver), "rep": rep, "depth": depth, "field": field}
        ),
        "json",
    )


@cli.command()
@click.argument("quiver", type=click.Path(exists=True))
@click.option("--rep", required=True)
@click.option("--depth", default=0)
@_SERVER_OPT
@_FIELD_OPT
def dims(quiver, rep, depth, server, field):
    """Exact dimension vector with tail asymptotics."""
    _emit(
        _dispatch(
            server, "/dims", {"quiver": _load_quiver(quiver), "rep": rep, "depth": depth, "field": field}
        ),
        "json",
    )


@cli.command()
@click.argument("quiver", type=click.Path(exists=True))
@click.option("--rep", required=True)
@click.option("--dir", "direction", default="DTr", type=click.Choice(["DTr", "TrD"]))
@_SERVER_OPT
@_FIELD_OPT
def translate(quiver, rep, direction, server, field):
    """DTr / TrD with a finiteness certificate."""
    _emit(
        _dispatch(
            server,
            "/translate",
            {"quiver": _load_quiver(quiver), "rep": rep, "direction": direction, "field": field},
        ),
        "json",
    )


@cli.command()
@click.argument("quiver", type=click.Path(exists=True))
@click.option("--rep", required=True)
@click.option("--side", default="ending_at", type=click.Choice(["ending_at", "starting_at"]))
@_SERVER_OPT
@_FIELD_OPT
def ass(quiver, rep, side, server, field):
    """The almost split sequence ending or starting at a representation."""
    _emit(
        _dispatch(
            server, "/ass", {"quiver": _load_quiver(quiver), "rep": rep, "side": side, "field": field}
        ),
        "json",
    )


@cli.command()
@click.argument("quiver", type=click.Path(exists=True))
@click.option("--rep", required=True)
@_SERVER_OPT
@_FIELD_OPT
def orbit(quiver, rep, server, field):
    """Classify the tau-orbit of a string representation."""
    _emit(
        _dispatch(server, "/orbit", {"quiver": _load_quiver(quiver), "rep": rep, "field": field}),
        "json",
    )


@cli.command()
@click.argument("quiver", type=click.Path(exists=True))
@click.option("--side", default="L", type=click.Choice(["R", "L"]))
@click.option("--lo", default=-10)
@click.option("--hi", default=10)
@click.option("--format", "fmt", default="json", type=click.Choice(["json", "text"]))
@_SERVER_OPT
@_FIELD_OPT
def sigma(quiver, side, lo, hi, fmt, server, field):
    """Q_R / Q_L with the source-translation chain."""
    data = _dispatch(
        server,
        "/sigma",
        {"quiver": _load_quiver(quiver), "side": side, "lo": lo, "hi": hi, "field": field},
    )
    _emit(data, fmt, text_key="chain")


@cli.command()
@click.argument("quiver", type=click.Path(exists=True))
@click.option("--seed", required=True, help="preprojective | preinjective:<v> | regular:<rep>")
@click.option("--depth", default=4)
@click.option("--width", default=6)
@click.option("--format", "fmt", default="json", type=click.Choice(["json", "dot"]))
@_SERVER_OPT
@_FIELD_OPT
def component(quiver, seed, depth, width, fmt, server, field):
    """Knit an AR-quiver component window."""
    data = _dispatch(
        server,
        "/component",
        {"quiver": _load_quiver(quiver), "seed": seed, "depth": depth, "width": width, "field": field},
    )
    _emit(data, fmt)


@cli.command()
@click.argument("quiver", type=click.Path(exists=True))
@click.option("--rep", required=True)
@click.option("--depth", default=8)
@_SERVER_OPT
@_FIELD_OPT
def shape(quiver, rep, depth, server, field):
    """Shape certificate for the component containing a representation."""
    _emit(
        _dispatch(
            server, "/shape", {"quiver": _load_quiver(quiver), "rep": rep, "depth": depth, "field": field}
        ),
        "json",
    )


@cli.command()
@click.argument("quiver", type=click.Path(exists=True))
@_SERVER_OPT
@_FIELD_OPT
def census(quiver, server, field):
    """Count of regular components with their shapes."""
    _emit(_dispatch(server, "/census", {"quiver": _load_quiver(quiver), "field": field}), "json")


@cli.command()
@click.argument("quiver", type=click.Path(exists=True))
@_SERVER_OPT
@_FIELD_OPT
def caps(quiver, server, field):
    """Auslander-Reiten capability predicates (abelian and derived)."""
    _emit(_dispatch(server, "/caps", {"quiver": _load_quiver(quiver), "field": field}), "json")


@cli.command()
@click.argument("quiver", type=click.Path(exists=True))
@click.option("--rep", required=True, help='derived object, e.g. "P(1)" or "I(0)[-1]"')
@click.option("--side", default="ending_at", type=click.Choice(["ending_at", "starting_at"]))
@_SERVER_OPT
@_FIELD_OPT
def derived(quiver, rep, side, server, field):
    """The almost split triangle at a derived stalk object."""
    _emit(
        _dispatch(
            server, "/derived", {"quiver": _load_quiver(quiver), "rep": rep, "side": side, "field": field}
        ),
        "json",
    )


@cli.command()
@click.argument("quiver", type=click.Path(exists=True))
@click.option("--depth", default=3)
@click.option("--width", default=6)
@click.option("--format", "fmt", default="json", type=click.Choice(["json", "dot"]))
@_SERVER_OPT
@_FIELD_OPT
def connecting(quiver, depth, width, fmt, server, field):
    """The connecting component of the derived category."""
    data = _dispatch(
        server,
        "/connecting",
        {"quiver": _load_quiver(quiver), "depth": depth, "width": width, "field": field},
    )
    _emit(data, fmt)


@cli.command()
@click.argument("window", type=click.Path(exists=True))
def export(window):
    """Re-render a saved component window JSON as DOT."""
    from .components import dot_from_json

    with open(window, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    click.echo(dot_from_json(data), nl=False)


@cli.command()
@click.option("--host", default="127.0.0.1")
@click.option("--port", default=8432)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=host, port=port)


def main():
    try:
        cli(standalone_mode=False)
    except DomainError as e:
        click.echo(json.dumps(e.to_json(), sort_keys=True), err=True)
        sys.exit(2)
    except click.UsageError as e:
        click.echo(f"usage error: {e}", err=True)
        sys.exit(1)
    except click.ClickException as e:
        e.show()
        sys.exit(1)
    except click.exceptions.Abort:
        sys.exit(1)
    return 0


if __name__ == "__main__":
    sys.exit(main())
