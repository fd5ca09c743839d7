"""Record real API responses over the bundled corpus for the UI tests.

Rewrites frontend/tests/fixtures/*.json. Run from the repository root:
    python3 tools/record_api_fixtures.py
"""

import json
from pathlib import Path

from fastapi.testclient import TestClient

from nichebench.service import ServiceConfig, create_app

ROOT = Path(__file__).resolve().parent.parent
OUT = ROOT / "frontend" / "tests" / "fixtures"


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    client = TestClient(create_app(ServiceConfig(data_dir=str(ROOT / "data" / "fixture"))))

    recordings = {
        "taxonomy.json": client.get("/api/taxonomy"),
        "institutions.json": client.get("/api/institutions"),
        "rate_equal_cs.json": client.post(
            "/api/rate",
            json={"subject": 4000, "level": 1, "years": [2008, 2013],
                  "weights": "equal", "min_pubs": 40},
        ),
        "benchmark_ee.json": client.post(
            "/api/benchmark",
            json={"institutions": ["U001", "U002", "U004", "U008", "U011"],
                  "subject": 5201, "level": 3, "years": [2008, 2013]},
        ),
        "overall_volume.json": client.get(
            "/api/overall", params={"preset": "volume", "min_pubs": 10}
        ),
        "rate_empty_422.json": client.post(
            "/api/rate", json={"subject": 4000, "level": 1, "min_pubs": 100000}
        ),
    }
    for name, response in recordings.items():
        assert response.status_code in (200, 422), (name, response.status_code)
        path = OUT / name
        path.write_text(json.dumps(response.json(), indent=2, sort_keys=True) + "\n",
                        encoding="utf-8")
        print(f"{name}: {response.status_code}, {path.stat().st_size} bytes")


if __name__ == "__main__":
    main()
