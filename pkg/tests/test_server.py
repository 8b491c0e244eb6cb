from fastapi.testclient import TestClient

from main import app

client = TestClient(app)


def _call(name, arguments, request_id=1):
    payload = {"jsonrpc": "2.0", "id": request_id, "method": "tools/call",
               "params": {"name": name, "arguments": arguments}}
    return client.post("/mcp", json=payload).json()


def test_health():
    body = client.get("/health").json()
    assert body["status"] == "healthy"
    assert body["service"] == "tanhKG-MCP"


def test_initialize():
    body = client.post("/mcp", json={"jsonrpc": "2.0", "id": 1, "method": "initialize"}).json()
    assert body["result"]["serverInfo"]["name"] == "tanhKG-MCP"
    assert body["result"]["protocolVersion"] == "2024-11-05"


def test_tools_list():
    body = client.post("/mcp", json={"jsonrpc": "2.0", "id": 2, "method": "tools/list"}).json()
    names = [tool["name"] for tool in body["result"]["tools"]]
    assert names == ["scattering_coefficients", "energy_sweep", "oracle_verification", "wavefunction_samples"]
    assert client.get("/tools").json()["tools"][0]["inputSchema"]["required"] == ["E"]
    assert len(client.get("/tools/descriptions").json()["tools"]) == 4


def test_scattering_coefficients_tool():
    body = _call("scattering_coefficients", {"a": 5, "b": 2, "m": 1, "E": 2}, request_id=7)
    assert body["id"] == 7
    assert body["error"] is None
    assert "superradiant=true" in body["result"]
    assert body["debug_response"]["region"] == "Superradiant"


def test_scattering_coefficients_text_input():
    body = _call("scattering_coefficients", {"text_input": "a=0 b=1 m=1 E=2"})
    assert body["error"] is None
    assert "R=0," in body["result"]


def test_scattering_coefficients_threshold_error():
    body = _call("scattering_coefficients", {"a": 5, "b": 2, "m": 1, "E": 6})
    assert body["error"] is not None
    assert body["debug_response"]["error_type"] == "ThresholdError"


def test_energy_sweep_tool():
    body = _call("energy_sweep", {"preset": "fig2", "steps": 20})
    assert body["error"] is None
    assert body["result"].startswith("E,R,T,region,superradiant\n")
    assert body["debug_response"]["results_count"] == 20
    assert body["debug_response"]["max_unitarity_defect"] <= 1e-10


def test_energy_sweep_rejects_bad_range():
    body = _call("energy_sweep", {"a": 5, "b": 2, "m": 1, "e_min": 3, "e_max": 1})
    assert body["error"] is not None


def test_oracle_verification_tool():
    body = _call("oracle_verification", {"a": 5, "b": 2, "m": 1, "E": 8})
    assert body["error"] is None
    assert body["result"].startswith("PASS: 1/1")
    assert body["debug_response"]["instances"][0]["passed"] is True


def test_wavefunction_samples_tool():
    body = _call("wavefunction_samples", {"a": 5, "b": 2, "m": 1, "E": 8, "points": 5})
    assert body["error"] is None
    assert len(body["result"].strip().split("\n")) == 6
    assert body["debug_response"]["current_spread"] < 1e-8


def test_unknown_tool_and_method():
    assert _call("no_such_tool", {})["error"] == "Unknown tool: no_such_tool"
    body = client.post("/mcp", json={"jsonrpc": "2.0", "id": 3, "method": "resources/list"}).json()
    assert body["error"] == "Unknown method: resources/list"


def test_unknown_tool_lists_available_tools():
    body = _call("no_such_tool", {})
    assert "energy_sweep" in body["debug_response"]["available_tools"]
    body = client.post("/mcp", json={"jsonrpc": "2.0", "id": 4, "method": "prompts/list"}).json()
    assert body["debug_response"]["supported_methods"] == ["initialize", "tools/call", "tools/list"]


def test_tool_loading_failure_is_reported(monkeypatch):
    import main

    async def broken(tool_name):
        raise ImportError(f"cannot load {tool_name}")

    monkeypatch.setattr(main.tools_manager, "get_tool_function", broken)
    body = _call("energy_sweep", {"preset": "fig2", "steps": 3}, request_id=9)
    assert body["id"] == 9
    assert body["error"] == "cannot load energy_sweep"
    assert body["debug_response"] == {"method": "tools/call", "tool": "energy_sweep", "exception": "ImportError"}
