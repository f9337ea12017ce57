import pytest
from fastapi.testclient import TestClient

from stablepieces.service.api import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def test_health(client):
    reply = client.get("/health")
    assert reply.status_code == 200
    assert reply.json() == {"status": "ok"}


def test_pieces_endpoint(client):
    reply = client.post("/pieces", json={"datum": {"type": "A1"}})
    assert reply.status_code == 200
    pieces = reply.json()["pieces"]
    assert pieces == [
        {"J": [1], "w": [], "j_inf": [1], "dim": 3},
        {"J": [], "w": [], "j_inf": [], "dim": 2},
        {"J": [], "w": [1], "j_inf": [], "dim": 1},
    ]


def test_pieces_with_automorphism(client):
    reply = client.post("/pieces", json={
        "datum": {"type": "A2"}, "automorphism": "1:2,2:1",
    })
    assert reply.status_code == 200
    assert len(reply.json()["pieces"]) == 13


def test_pieces_from_matrix_and_factors(client):
    reply = client.post("/pieces", json={
        "datum": {"cartan": [[2, -1], [-2, 2]]},
    })
    assert reply.status_code == 200
    assert len(reply.json()["pieces"]) == 17
    reply = client.post("/pieces", json={
        "datum": {"factors": [{"type": "A", "rank": 1},
                              {"type": "A", "rank": 1}]},
    })
    assert reply.status_code == 200
    assert len(reply.json()["pieces"]) == 9


def test_closure_endpoint(client):
    reply = client.post("/closure", json={
        "datum": {"type": "A2"}, "piece": {"J": [1], "w": [2]},
    })
    assert reply.status_code == 200
    body = reply.json()
    assert body["piece"]["J"] == [1]
    assert [(tuple(p["J"]), tuple(p["w"])) for p in body["pieces"]] == [
        ((1,), (2,)), ((1,), (1, 2)),
        ((), (2,)), ((), (1, 2)), ((), (2, 1)), ((), (1, 2, 1)),
    ]


def test_hasse_endpoint(client):
    reply = client.post("/hasse", json={"datum": {"type": "A1"}})
    assert reply.status_code == 200
    body = reply.json()
    assert len(body["nodes"]) == 3
    assert sorted(edge["from"]["w"] == [1] for edge in body["edges"]) \
        == [False, True]
    assert body["dot"].startswith("digraph pieces {")
    assert '"J:{}|w:1" -> "J:{}|w:";' in body["dot"]


def test_cells_endpoint(client):
    reply = client.post("/cells", json={
        "datum": {"type": "A1"}, "piece": {"J": [], "w": []},
    })
    assert reply.status_code == 200
    body = reply.json()
    assert body["finite"] is True
    assert body["cells_by_dim"] == {"0": 1, "1": 2, "2": 1}

    reply = client.post("/cells", json={
        "datum": {"type": "A1"}, "piece": {"J": [1], "w": []},
    })
    body = reply.json()
    assert body["finite"] is False
    assert body["violator"] == []
    assert body["violator_subset"] == [1]


def test_order_endpoint(client):
    reply = client.post("/order", json={"datum": {"type": "A1"}})
    assert reply.status_code == 200
    assert len(reply.json()["pairs"]) == 3

    reply = client.post("/order", json={
        "datum": {"type": "A1"},
        "piece": {"J": [], "w": [1]},
        "piece2": {"J": [], "w": []},
    })
    assert reply.json()["comparison"] == {"leq": True, "geq": False}


def test_verify_endpoint(client):
    reply = client.post("/verify", json={"datum": {"type": "A1"}})
    assert reply.status_code == 200
    body = reply.json()
    assert body["ok"] is True
    assert {row["prop"] for row in body["rows"]} >= {
        "bruhat-order-oracle", "piece-order-axioms", "closure-witnesses"}


def test_error_mapping(client):
    reply = client.post("/cells", json={
        "datum": {"type": "A1"}, "piece": {"J": [1], "w": [1]},
    })
    assert reply.status_code == 400
    assert reply.json()["detail"] == "w is not minimal in its coset"

    reply = client.post("/pieces", json={"datum": {"cartan": [[2, -2], [-2, 2]]}})
    assert reply.status_code == 400
    assert reply.json()["detail"] == "not finite type"

    reply = client.post("/pieces", json={"datum": {}})
    assert reply.status_code == 400
    assert reply.json()["detail"] == "invalid Cartan matrix"

    reply = client.post("/pieces", json={"datum": {"cartan": "zzz"}})
    assert reply.status_code == 422


def test_sessions_are_shared_between_requests(client):
    from stablepieces.service import ops
    client.post("/pieces", json={"datum": {"type": "G2"}})
    before = len(ops._registry)
    client.post("/hasse", json={"datum": {"type": "G2"}})
    assert len(ops._registry) == before
