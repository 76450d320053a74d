import json
import warnings

import pytest

with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    from fastapi.testclient import TestClient

from arquiver.service.app import app

from conftest import DATA
import os


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def _spec(name):
    with open(os.path.join(DATA, name + ".json")) as fh:
        return json.load(fh)


def test_validate_ok(client):
    r = client.post("/validate", json={"quiver": _spec("qc")})
    assert r.status_code == 200
    assert r.json()["ok"] and r.json()["connected"]


def test_validate_cycle_rejected(client):
    bad = {
        "core": {
            "vertices": ["a", "b"],
            "arrows": [
                {"from": "a", "to": "b", "label": "x"},
                {"from": "b", "to": "a", "label": "y"},
            ],
        }
    }
    r = client.post("/validate", json={"quiver": bad})
    assert r.status_code == 400
    assert r.json()["detail"]["error"] == "CoreCycle"


def test_classify_and_paths(client):
    r = client.post("/classify", json={"quiver": _spec("qc")})
    assert r.json() == {"class": "InfDynkin", "subtype": "A_biinf"}
    r = client.post(
        "/paths", json={"quiver": _spec("qc"), "source": "2", "target": "-2"}
    )
    assert r.json()["count"] == 1


def test_qplus_endpoint(client):
    r = client.post("/qplus", json={"quiver": _spec("qf")})
    comps = r.json()["components"]
    assert [c["vertices"] for c in comps] == [["0"], ["2", "3", "4"]]


def test_rep_and_translate(client):
    r = client.post("/rep", json={"quiver": _spec("qc"), "rep": "M(p_inf)"})
    body = r.json()
    assert body["name"] == "M(p_inf)" and not body["finite_dimensional"]
    r = client.post(
        "/translate", json={"quiver": _spec("qc"), "rep": "M(p_inf)", "direction": "DTr"}
    )
    assert r.json()["value"]["name"] == "M(p_{4,3})"


def test_sigma_chain(client):
    r = client.post("/sigma", json={"quiver": _spec("qc"), "side": "L"})
    assert r.json()["chain"] == "ε_5 ⇢ p_{4,3} ⇢ p_∞"


def test_census_shape_key(client):
    r = client.post("/census", json={"quiver": _spec("dinf_noinf")})
    body = r.json()
    assert body["regular"] == 1 and body["shape"] == "ZAinf"


def test_component_endpoint(client):
    r = client.post(
        "/component",
        json={"quiver": _spec("qc"), "seed": "regular:M(p_inf)", "depth": 4},
    )
    body = r.json()
    assert body["shape"] == {"tag": "Wing", "n": 3}
    assert len(body["cells"]) == 6
    assert body["dot"].startswith("digraph")


def test_bad_rep_name_is_domain_error(client):
    r = client.post("/rep", json={"quiver": _spec("qc"), "rep": "Z(1)"})
    assert r.status_code == 400
    assert r.json()["detail"]["error"] == "BadRepName"


def test_field_override(client):
    r = client.post(
        "/dims", json={"quiver": _spec("qc"), "rep": "S(0)", "field": "Fp:5"}
    )
    assert r.status_code == 200
