# tanh-KG MCP Server Main Application

import logging
from datetime import datetime
from typing import Any, Awaitable, Callable, Dict

from fastapi import FastAPI

from config import MCP_CONFIG
from models import MCPRequest, MCPResponse
from tools_manager import ToolsManager

logger = logging.getLogger(__name__)

app = FastAPI(title="tanhKG-MCP Server", version=MCP_CONFIG["version"])

tools_manager = ToolsManager()


def _server_info() -> Dict[str, Any]:
    return {"name": MCP_CONFIG["server_name"], "version": MCP_CONFIG["version"]}


async def _initialize(request: MCPRequest) -> MCPResponse:
    result = {"protocolVersion": MCP_CONFIG["protocol_version"], "capabilities": {}, "serverInfo": _server_info()}
    return MCPResponse(id=request.id, result=result)


async def _tools_list(request: MCPRequest) -> MCPResponse:
    return MCPResponse(id=request.id, result={"tools": await tools_manager.get_mcp_tools_format()})


async def _tools_call(request: MCPRequest) -> MCPResponse:
    """散乱ツールの実行。ツール側の例外は各ハンドラが MCPResponse.error に詰める"""
    tool_name = request.params.get("name")
    arguments = request.params.get("arguments") or {}
    logger.info(f"[tools/call] {tool_name} {arguments}")

    if not await tools_manager.is_valid_tool(tool_name):
        message = f"Unknown tool: {tool_name}"
        return MCPResponse(id=request.id, result=message, error=message,
                           debug_response={"tool": tool_name, "available_tools": await tools_manager.get_tool_names()})

    tool_function = await tools_manager.get_tool_function(tool_name)
    response = await tool_function(arguments)
    response.id = request.id
    return response


_HANDLERS: Dict[str, Callable[[MCPRequest], Awaitable[MCPResponse]]] = {
    "initialize": _initialize,
    "tools/list": _tools_list,
    "tools/call": _tools_call,
}


@app.get("/health")
async def health_check():
    """ヘルスチェック"""
    return {"status": "healthy", "service": MCP_CONFIG["server_name"], "timestamp": datetime.now().isoformat()}


@app.post("/mcp")
async def mcp_endpoint(request: MCPRequest):
    """JSON-RPC 風の MCP エンドポイント（initialize / tools/list / tools/call）"""
    logger.info(f"[mcp] id={request.id} method={request.method}")

    handler = _HANDLERS.get(request.method)
    if handler is None:
        message = f"Unknown method: {request.method}"
        return MCPResponse(id=request.id, result=message, error=message,
                           debug_response={"supported_methods": sorted(_HANDLERS)})

    try:
        return await handler(request)
    except Exception as e:
        # ハンドラ外で起きた例外（ツール読み込み失敗など）
        logger.exception(f"[mcp] {request.method} failed")
        return MCPResponse(
            id=request.id,
            result=f"サーバーエラー: {e}",
            error=str(e),
            debug_response={
                "method": request.method,
                "tool": request.params.get("name"),
                "exception": type(e).__name__,
            },
        )


@app.get("/tools")
async def list_available_tools():
    """MCP形式のツール定義（inputSchema 付き）"""
    return {"tools": await tools_manager.get_tools_list()}


@app.get("/tools/descriptions")
async def get_tool_descriptions():
    return {"tools": await tools_manager.get_tools_descriptions()}


if __name__ == "__main__":
    import uvicorn
    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(name)s %(message)s")
    uvicorn.run(app, host=MCP_CONFIG["host"], port=MCP_CONFIG["port"])
