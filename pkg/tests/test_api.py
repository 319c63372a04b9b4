"""
Tests for the HTTP surface
"""
import pytest
import sys
from pathlib import Path

sys.path.append(str(Path(__file__).parent.parent))

from fastapi.testclient import TestClient

from api.main import app
from src.treecalc import generator

@pytest.fixture(scope="module")
def client():
    with TestClient(app) as client:
        yield client

def test_root_and_health(client):
    assert client.get("/").json()["status"] == "online"
    health = client.get("/health").json()
    assert health["status"] == "healthy"
    assert health["acceptor_built"] and health["multipliers_built"]

def test_encode(client):
    response = client.post("/encode", json=generator("x1").to_json())
    assert response.status_code == 200
    assert response.json() == {"pair": "ree,rae"}
    response = client.post("/encode", json={"domain": {"left": None, "right": None}})
    assert response.status_code == 422
    assert response.json()["detail"]["error_code"] == "PARSE_ERROR"

def test_decode(client):
    response = client.post("/decode", json={"pair": "re,er"})
    assert response.status_code == 200
    assert response.json() == generator("x0").to_json()
    assert client.post("/decode", json={"pair": "er,er"}).status_code == 400
    assert client.post("/decode", json={"pair": "er,er", "unreduced": True}).status_code == 200
    assert client.post("/decode", json={"pair": "re,e"}).status_code == 422

def test_accept(client):
    assert client.post("/accept", json={"pair": "ree,rae"}).json()["accepted"] is True
    rejected = client.post("/accept", json={"pair": "rr,rr", "trace": True}).json()
    assert rejected["accepted"] is False
    assert rejected["trace"]

def test_multiply(client):
    response = client.post("/multiply", json={"pair": "r,r", "word": ["x1"]})
    assert response.json() == {"pair": "ree,rae"}
    response = client.post("/multiply", json={"pair": "r,r", "word": ["x0", "x0inv"]})
    assert response.json() == {"pair": "r,r"}
    assert client.post("/multiply", json={"pair": "r,r", "word": ["y"]}).status_code == 422

def test_check_mult(client):
    response = client.post("/check-mult", json={"generator": "x0", "u": "r,r", "v": "re,er"})
    assert response.json()["accepted"] is True
    response = client.post("/check-mult", json={"generator": "x0^-1", "u": "re,er", "v": "r,r"})
    assert response.json() == {"generator": "x0inv", "accepted": True, "reason": "accepted"}
    assert client.post("/check-mult", json={"generator": "x5", "u": "r,r", "v": "r,r"}).status_code == 422

def test_ball(client):
    response = client.get("/ball", params={"radius": 1})
    assert response.status_code == 200
    assert len(response.json()) == 5
    assert client.get("/ball", params={"radius": -1}).status_code == 422

if __name__ == "__main__":
    pytest.main([__file__, "-v"])
