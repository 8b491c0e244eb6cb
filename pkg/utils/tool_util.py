"""
Tool Utility - MCPツール共通ユーティリティ

引数の標準化（型変換と検証）と、重い数値計算のスレッド実行。
"""

import asyncio
import functools
import logging
import time
from typing import Any, Callable, Dict, Iterable

from models import PotentialParams

logger = logging.getLogger(__name__)


def elapsed_ms(start_time: float) -> float:
    return round((time.time() - start_time) * 1000, 2)


def standardize_arguments(raw: Dict[str, Any], numeric_keys: Iterable[str], tool_debug: Dict) -> Dict[str, Any]:
    """
    ツール引数を標準化（参照渡しで tool_debug に記録）

    Args:
        raw: MCP arguments
        numeric_keys: float に変換するキー
        tool_debug: デバッグ情報

    Returns:
        Dict: 標準化済み引数（未指定キーは含めない）
    """
    # 防御構文: text_input のみ渡された場合は "key=value" 列として解釈
    if set(raw) == {"text_input"}:
        raw = dict(
            part.split("=", 1) for part in str(raw["text_input"]).replace(",", " ").split() if "=" in part
        )
    standardized = {}
    for key in numeric_keys:
        if raw.get(key) is not None:
            standardized[key] = float(raw[key])
    for key, value in raw.items():
        if key not in standardized and value is not None:
            standardized[key] = value
    tool_debug["standardize_parameter"] = standardized
    logger.info(f"[standardize_arguments] {standardized}")
    return standardized


def potential_params(args: Dict[str, Any]) -> PotentialParams:
    return PotentialParams(**{k: args[k] for k in ("a", "b", "m") if k in args})


async def run_blocking(func: Callable, *args, **kwargs):
    """同期の数値計算をエグゼキュータで実行"""
    loop = asyncio.get_running_loop()
    return await loop.run_in_executor(None, functools.partial(func, *args, **kwargs))
