# tanh-KG Scattering Configuration

import os
from dotenv import load_dotenv

# .env ファイル読み込み
load_dotenv()

# 特殊関数・閾値判定の数値設定
NUMERICS_CONFIG = {
    "pole_tol": float(os.getenv("TANHKG_POLE_TOL", 1e-12)),
    "degenerate_tol": float(os.getenv("TANHKG_DEGENERATE_TOL", 1e-10)),
    "series_max_terms": int(os.getenv("TANHKG_SERIES_MAX_TERMS", 10000)),
    "series_radius": 0.5,
    "pfaff_radius": 2.0,
    "threshold_rel_tol": float(os.getenv("TANHKG_THRESHOLD_TOL", 1e-9)),
    "log_overflow": 700.0,
    "representation_tol": float(os.getenv("TANHKG_REPRESENTATION_TOL", 1e-9)),
}

# 数値積分オラクル設定
ORACLE_CONFIG = {
    "tol": float(os.getenv("TANHKG_ORACLE_TOL", 1e-10)),
    "max_steps": int(os.getenv("TANHKG_ORACLE_MAX_STEPS", 10_000_000)),
    "method": os.getenv("TANHKG_ORACLE_METHOD", "DOP853"),
    "window_decay": 1e-13,
    "min_wavenumber": 0.5,
}

# スイープ設定（図のプリセットを含む）
SWEEP_CONFIG = {
    "exclusion_margin": float(os.getenv("TANHKG_EXCLUSION_MARGIN", 0.02)),
    "steps": int(os.getenv("TANHKG_SWEEP_STEPS", 500)),
    "workers": int(os.getenv("TANHKG_SWEEP_WORKERS", 1)),
    "presets": {
        "fig2": {"a": 5.0, "b": 2.0, "m": 1.0, "e_min": 1.05, "e_max": 10.0, "steps": 500},
        "fig3": {"a": 5.0, "b": 50.0, "m": 1.0, "e_min": 1.05, "e_max": 10.0, "steps": 500},
    },
    "potential_preset": {"a": 5.0, "b_values": (2.0, 50.0), "x_min": -3.0, "x_max": 3.0, "points": 601},
    "verify_n": 20,
    "verify_seed": 7,
    "verify_tol": 1e-6,
    "step_limit_b": (10.0, 1e2, 1e3, 1e4),
}

# MCP設定
MCP_CONFIG = {
    "server_name": "tanhKG-MCP",
    "version": "1.0.0",
    "protocol_version": "2024-11-05",
    "host": os.getenv("TANHKG_HOST", "0.0.0.0"),
    "port": int(os.getenv("TANHKG_PORT", 8004)),
}
