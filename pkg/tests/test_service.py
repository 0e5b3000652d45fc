"""HTTP API: endpoint contracts, status codes, purity, CLI parity."""

import hashlib

import pytest
from fastapi.testclient import TestClient

from gcelltree.service import create_app


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


class TestHealth:
    def test_liveness(self, client):
        r = client.get("/api/v1/health")
        assert r.status_code == 200
        assert r.json() == {"status": "ok"}


class TestTrajectoryEndpoint:
    def test_reference_sequence_from_seven(self, client):
        r = client.get("/api/v1/trajectory/7")
        assert r.status_code == 200
        body = r.json()
        assert body["steps"] == [7, 11, 17, 26, 13, 20, 10, 5, 8, 4, 2, 1]
        assert body["length"] == 11
        assert body["peak"] == 26

    def test_seventy_steps_for_27(self, client):
        assert client.get("/api/v1/trajectory/27").json()["length"] == 70

    def test_terminal_start(self, client):
        body = client.get("/api/v1/trajectory/1").json()
        assert body == {"start": 1, "steps": [1], "length": 0, "peak": 1}

    @pytest.mark.parametrize("bad", ["0", "-5", "x", "1.5"])
    def test_invalid_starts_are_400(self, client, bad):
        r = client.get(f"/api/v1/trajectory/{bad}")
        assert r.status_code == 400
        assert "reason" in r.json()

    def test_out_of_range_start_is_400(self, client):
        r = client.get(f"/api/v1/trajectory/{2**64}")
        assert r.status_code == 400

    def test_overflowing_trajectory_is_422(self, client):
        huge_odd = ((2**64 - 2) // 3 + 1) | 1
        r = client.get(f"/api/v1/trajectory/{huge_odd}")
        assert r.status_code == 422
        assert "reason" in r.json()


class TestRegionEndpoint:
    def test_root_cycle(self, client):
        r = client.get("/api/v1/region", params={"seed": "1", "max_value": "2"})
        assert r.status_code == 200
        assert r.headers["content-type"].startswith("application/json")
        body = r.json()
        assert [n["value"] for n in body["nodes"]] == [1, 2]
        assert len(body["arcs"]) == 2

    def test_interchange_contains_node_21(self, client):
        r = client.get("/api/v1/region",
                       params={"seed": "1", "max_value": "32", "format": "interchange"})
        assert 21 in [n["value"] for n in r.json()["nodes"]]

    def test_wrl_media_type_and_header(self, client):
        r = client.get("/api/v1/region", params={"max_value": "64", "format": "wrl"})
        assert r.status_code == 200
        assert r.headers["content-type"].startswith("model/vrml")
        assert r.text.split("\n")[0] == "#VRML V2.0 utf8"

    def test_wrl_sphere_count_matches_network(self, client):
        from gcelltree.gcell import generate_network
        from gcelltree.scene import vrml_stats

        r = client.get("/api/v1/region", params={"max_value": "1024", "format": "wrl"})
        stats = vrml_stats(r.text)
        net = generate_network(1, 1024)
        assert sum(1 for x in stats.sphere_radii if x == 0.25) == net.node_count

    def test_responses_are_cacheable_and_pure(self, client):
        params = {"seed": "1", "max_value": "512", "format": "interchange"}
        first = client.get("/api/v1/region", params=params)
        second = client.get("/api/v1/region", params=params)
        assert first.headers.get("cache-control") == "public, max-age=3600"
        assert hashlib.sha256(first.content).hexdigest() == \
            hashlib.sha256(second.content).hexdigest()

    def test_max_gen_limits_depth(self, client):
        shallow = client.get("/api/v1/region",
                             params={"max_value": "10000", "max_gen": "2"}).json()
        deep = client.get("/api/v1/region",
                          params={"max_value": "10000", "max_gen": "6"}).json()
        assert len(shallow["nodes"]) < len(deep["nodes"])

    @pytest.mark.parametrize("params", [
        {},                                            # missing max_value
        {"max_value": "0"},
        {"max_value": "ten"},
        {"max_value": "10", "seed": "0"},
        {"max_value": "10", "seed": "100"},            # seed beyond bound
        {"max_value": "10", "format": "x3d"},
        {"max_value": "10", "max_gen": "-1"},
    ])
    def test_invalid_parameters_are_400(self, client, params):
        r = client.get("/api/v1/region", params=params)
        assert r.status_code == 400
        assert "reason" in r.json()

    def test_value_ceiling_is_422(self, client):
        r = client.get("/api/v1/region", params={"max_value": str(10**7 + 1)})
        assert r.status_code == 422
        assert "ceiling" in r.json()["reason"]

    def test_generation_ceiling_is_422(self, client):
        r = client.get("/api/v1/region", params={"max_value": "100", "max_gen": "65"})
        assert r.status_code == 422


class TestCliParity:
    def test_generate_bytes_match_region_body(self, client, tmp_path):
        from gcelltree.cli import main

        for fmt in ("interchange", "wrl"):
            out = tmp_path / f"region.{fmt}"
            rc = main(["generate", "--max-value", "1024", "--seed", "1",
                       "--format", fmt, "-o", str(out)])
            assert rc == 0
            response = client.get(
                "/api/v1/region",
                params={"seed": "1", "max_value": "1024", "format": fmt},
            )
            assert out.read_bytes() == response.content


class TestStaticAssets:
    def test_boots_without_assets_directory(self):
        app = create_app(assets_dir="/nonexistent/frontier")
        c = TestClient(app)
        assert c.get("/api/v1/health").status_code == 200

    def test_serves_assets_when_present(self, tmp_path):
        (tmp_path / "index.html").write_text("<html>explorer</html>")
        app = create_app(assets_dir=tmp_path)
        c = TestClient(app)
        assert c.get("/api/v1/health").status_code == 200
        page = c.get("/")
        assert page.status_code == 200
        assert "explorer" in page.text
