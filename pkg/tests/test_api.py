import sys
import os
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))
from fastapi.testclient import TestClient
from germlab.api import MAX_TREE_LEVEL, app

client = TestClient(app)

def test_health_check():
    response = client.get("/health")
    assert response.status_code == 200
    data = response.json()
    assert data["status"] == "healthy"
    assert data["version"] == "0.1.0"
    assert "uptime_seconds" in data

def test_tree_level():
    response = client.get("/tree/4")
    assert response.status_code == 200
    data = response.json()
    assert data["count"] == 4
    assert [(o["k1"], o["k2"]) for o in data["orbits"]] == [(4, 1), (4, 3), (5, 2), (5, 3)]
    assert all(o["level"] == 4 for o in data["orbits"])

def test_tree_level_limits():
    assert client.get(f"/tree/{MAX_TREE_LEVEL + 1}").status_code == 413
    assert client.get("/tree/0").status_code == 422

def test_hj():
    response = client.get("/hj", params={"k": 7, "q": 3})
    assert response.status_code == 200
    data = response.json()
    assert data["weights"] == [3, 2, 2]
    assert data["continuant"] == 7

def test_hj_rejects_non_coprime():
    response = client.get("/hj", params={"k": 4, "q": 2})
    assert response.status_code == 422
    assert "coprime" in response.json()["detail"]

def test_resolve():
    response = client.get("/resolve", params={"k1": 3, "k2": 5})
    assert response.status_code == 200
    data = response.json()
    assert (data["k1"], data["k2"]) == (5, 3)
    assert data["chain"]["weights"] == [3, 2, 1, 3]
    assert data["chain"]["center_index"] == 2
    assert data["sbar"] == {"dlt0": 5, "drt0": 3, "dlt1": 3, "drt1": 1}
    assert data["blowups"] == 4
    assert len(data["trace"]) == 4

def test_classify():
    response = client.get("/classify", params={"k1": 6, "k2": 5})
    assert response.status_code == 200
    data = response.json()
    assert data["family"] == "O"
    assert data["degree"] == 5
    assert data["class_count"] == 1
    assert data["subcase"] == "(2,1)_{2_0}"
    assert data["witness"]["t"]["cycles"].count("(") == 1

def test_classify_above_cap():
    response = client.get("/classify", params={"k1": 10, "k2": 9, "max_degree": 4})
    assert response.status_code == 200
    data = response.json()
    assert data["family"] == "N"
    assert data["cross_checked"] is False

def test_classify_rejects_non_coprime():
    assert client.get("/classify", params={"k1": 6, "k2": 4}).status_code == 422

def test_classify_rejects_max_degree_out_of_range():
    response = client.get("/classify", params={"k1": 3, "k2": 2, "max_degree": 50})
    assert response.status_code == 422
    assert "max_degree" in response.json()["detail"]

def test_classify_smooth_branch():
    data = client.get("/classify", params={"k1": 5, "k2": 1}).json()
    assert (data["family"], data["degree"], data["class_count"]) == ("DOUBLE", 2, 1)

def test_verify():
    response = client.post("/verify", json={"suite": "stmt5-3", "bound": 4})
    assert response.status_code == 200
    data = response.json()
    assert data["ok"] is True
    assert len(data["reports"]) == 1
    assert data["reports"][0]["suite"] == "stmt5-3"
    assert data["reports"][0]["cases"] > 0

def test_verify_large_bound_capped():
    response = client.post("/verify", json={"suite": "stmt5-3", "bound": 100})
    assert response.status_code == 200
    assert response.json()["reports"][0]["bound"] == 7

def test_verify_unknown_suite():
    response = client.post("/verify", json={"suite": "nope"})
    assert response.status_code == 422
    assert "unknown suite" in response.json()["detail"]
