import pytest
from fastapi.testclient import TestClient

from app import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def test_root_and_health(client):
    assert client.get("/").status_code == 200
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json() == {"status": "healthy", "message": "MQSym is running!"}


def test_docs_redirect(client):
    response = client.get("/docs", follow_redirects=False)
    assert response.status_code in (302, 307)
    assert response.headers["location"] == "/api/docs"


def test_run_f2m(client):
    response = client.post("/api/run", json={"verb": "f2m", "arguments": ["F[[1],[2]]"], "m": 2})
    assert response.status_code == 200
    body = response.json()
    assert body["exit_code"] == 0
    assert body["output"]["verb"] == "f2m"
    assert [r["matrix"] for r in body["output"]["result"]] == [
        [[1], [2]],
        [[1, 0], [0, 2]],
        [[1, 0], [1, 1]],
        [[1, 0, 0], [0, 1, 1]],
    ]


def test_run_random_check(client):
    response = client.post("/api/run", json={"verb": "rb-check", "random": 20, "seed": 1})
    assert response.status_code == 200
    assert response.json()["output"]["result"]["passed"] == 20


def test_run_reports_domain_errors(client):
    response = client.post("/api/run", json={"verb": "f2m", "arguments": ["F[[0],[0]]"]})
    assert response.status_code == 400
    assert "zero" in response.json()["detail"]

    response = client.post("/api/run", json={"verb": "rb-check", "random": 5})
    assert response.status_code == 400

    response = client.post("/api/run", json={"verb": "f2m", "arguments": ["3/0*F[[1],[2]]"]})
    assert response.status_code == 400
    assert "zero denominator" in response.json()["detail"]


def test_run_validates_the_request_body(client):
    response = client.post("/api/run", json={"verb": "f2m", "monoid": "integers"})
    assert response.status_code == 422


def test_batch(client):
    response = client.post(
        "/api/batch",
        json=[
            {"verb": "product", "arguments": ["M[[1],[0]]", "M[[0],[1]]"]},
            {"verb": "antipode", "arguments": ["M[[1],[e]]"]},
        ],
    )
    assert response.status_code == 200
    first, second = response.json()
    assert first["command"] == "product M[[1],[0]] M[[0],[1]]"
    assert first["exit_code"] == 0
    assert len(first["output"]["result"]) == 3
    assert second["exit_code"] is None
    assert second["error"]


def test_transition(client):
    response = client.get("/api/transition/2", params={"m": 1})
    assert response.status_code == 200
    body = response.json()
    assert body["compositions"] == ["[[2]]", "[[1,1]]"]
    assert body["rows"][0] == {"F": "[[2]]", "[[2]]": 1, "[[1,1]]": 1}
    assert client.get("/api/transition/0").status_code == 400
    assert client.get("/api/transition/2", params={"m": 0}).status_code == 400


def test_bad_environment_is_reported_per_request(client, monkeypatch):
    monkeypatch.setenv("MQSYM_DEFAULT_M", "zero")
    response = client.post("/api/run", json={"verb": "f2m", "arguments": ["F[[1],[2]]"]})
    assert response.status_code == 400
    assert "MQSYM_DEFAULT_M" in response.json()["detail"]

    explicit = {"verb": "f2m", "arguments": ["F[[1],[2]]"], "m": 2, "monoid": "nat", "trunc": 7}
    response = client.post("/api/run", json=explicit)
    assert response.status_code == 200
