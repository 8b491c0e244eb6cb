"""
Scattering Errors
tanh ポテンシャル散乱計算で使う例外階層
"""


class ScatteringError(Exception):
    """本パッケージが送出する物理ドメインエラーの基底クラス"""


# --- 特殊関数 --- #

class PoleError(ScatteringError):
    """引数がガンマ関数の極（非正整数）上にある"""


class DegenerateTransformError(ScatteringError):
    """z -> 1/z 接続公式で p - q が整数に近い"""


class NonConvergenceError(ScatteringError):
    """超幾何級数が項数上限内で収束しない"""


class DomainError(ScatteringError, ValueError):
    """契約された評価領域の外"""


# --- 散乱 --- #

class ThresholdError(ScatteringError):
    """エネルギーがチャネル閾値上（許容誤差内）"""


class PropagationError(ScatteringError):
    """入射チャネルが伝播しない"""


class AmplitudeRangeError(ScatteringError, OverflowError):
    """ガンマ比の指数が表現可能範囲外"""


class RepresentationMismatchError(ScatteringError):
    """x = 0 で全波動関数の二つの表現が一致しない"""


# --- オラクル --- #

class StiffnessError(ScatteringError):
    """積分器がステップ上限を超えた"""
