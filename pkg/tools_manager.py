import logging
from typing import Any, Dict, List

logger = logging.getLogger(__name__)


def _number(description: str) -> Dict[str, str]:
    return {"type": "number", "description": description}


_PHYSICS_PROPERTIES = {
    "a": _number("ポテンシャルの高さ a"),
    "b": _number("なめらかさ b (> 0)"),
    "m": _number("粒子質量 m (>= 0)"),
}

# ツール定義（ローカルで一元管理）
TOOL_DEFINITIONS: List[Dict[str, Any]] = [
    {
        "tool_key": "scattering_coefficients",
        "tool_name": "散乱係数計算",
        "description": "Reflection R, transmission T, amplitudes A, B and energy region at one energy E",
        "properties": {**_PHYSICS_PROPERTIES, "E": _number("エネルギー E")},
        "required": ["E"],
    },
    {
        "tool_key": "energy_sweep",
        "tool_name": "エネルギースイープ",
        "description": "CSV of R(E), T(E) over a uniform energy grid (preset fig2 / fig3 available)",
        "properties": {
            **_PHYSICS_PROPERTIES,
            "e_min": _number("最小エネルギー"),
            "e_max": _number("最大エネルギー"),
            "steps": {"type": "integer", "description": "点数 (>= 2)"},
            "exclusion_margin": _number("閾値の除外幅"),
            "preset": {"type": "string", "description": "fig2 または fig3"},
        },
        "required": [],
    },
    {
        "tool_key": "oracle_verification",
        "tool_name": "オラクル検証",
        "description": "Compare the closed-form R, T with a direct numerical integration",
        "properties": {
            **_PHYSICS_PROPERTIES,
            "E": _number("エネルギー（省略時はランダム問題）"),
            "n": {"type": "integer", "description": "ランダム問題数"},
            "seed": {"type": "integer", "description": "乱数シード"},
            "tol": _number("許容誤差"),
        },
        "required": [],
    },
    {
        "tool_key": "wavefunction_samples",
        "tool_name": "波動関数サンプル",
        "description": "CSV of the wavefunction, its derivative and the current on an x grid",
        "properties": {
            **_PHYSICS_PROPERTIES,
            "E": _number("エネルギー E"),
            "xmin": _number("x 最小値"),
            "xmax": _number("x 最大値"),
            "points": {"type": "integer", "description": "点数"},
            "branch": {"type": "string", "description": "incident / reflected / transmitted / total"},
        },
        "required": ["E"],
    },
]


class ToolsManager:
    """ツール定義の一元管理クラス - ローカル定義・直接呼び出し設計"""

    def __init__(self, definitions: List[Dict[str, Any]] = None):
        self.definitions = definitions if definitions is not None else TOOL_DEFINITIONS

    async def get_tools_list(self) -> List[Dict[str, Any]]:
        """tools/list用のツール一覧"""
        return [
            {
                "name": tool["tool_key"],
                "description": tool["description"],
                "inputSchema": {
                    "type": "object",
                    "properties": tool["properties"],
                    "required": tool["required"],
                },
            }
            for tool in self.definitions
        ]

    async def get_tools_descriptions(self) -> List[Dict[str, Any]]:
        """/tools/descriptions用の詳細情報"""
        return [
            {
                "name": tool["tool_key"],
                "description": tool["description"],
                "usage_context": f"{tool['tool_name']}を使用",
                "parameters": tool["properties"],
            }
            for tool in self.definitions
        ]

    async def get_mcp_tools_format(self) -> List[Dict[str, Any]]:
        """MCPプロトコル用のツール一覧"""
        return await self.get_tools_list()

    async def is_valid_tool(self, tool_name: str) -> bool:
        """ツール名の有効性チェック"""
        result = tool_name in await self.get_tool_names()
        logger.info(f"[ToolsManager] is_valid_tool({tool_name}) -> {result}")
        return result

    async def get_tool_function(self, tool_name: str):
        """ツール名から関数を直接取得 - マッピングなし"""
        if tool_name == "scattering_coefficients":
            from tools.scattering_coefficients import scattering_coefficients
            return scattering_coefficients
        elif tool_name == "energy_sweep":
            from tools.energy_sweep import energy_sweep
            return energy_sweep
        elif tool_name == "oracle_verification":
            from tools.oracle_verification import oracle_verification
            return oracle_verification
        elif tool_name == "wavefunction_samples":
            from tools.wavefunction_samples import wavefunction_samples
            return wavefunction_samples
        else:
            logger.info(f"[ToolsManager] Unknown tool: {tool_name}")
            return None

    async def get_tool_names(self) -> List[str]:
        """全ツール名のリスト"""
        return [tool["tool_key"] for tool in self.definitions]
