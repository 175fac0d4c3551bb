"""
Classical lower bounds for comparison

Earlier eigenvalue estimates for unweighted n-manifolds with Ric >= K and
diameter <= D. Each row records the condition under which it is stated; the
sharp values computed by the dispatcher dominate every applicable row.
"""

import math
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional

from ..means.dimension import is_inf
from ..solvers.ptrig import pi_p


@dataclass(frozen=True)
class ReferenceBound:
    name: str
    year: int
    value: float
    condition: str

    def to_dict(self) -> Dict[str, Any]:
        return {"name": self.name, "year": self.year, "value": self.value, "condition": self.condition}


@dataclass(frozen=True)
class _Row:
    name: str
    year: int
    condition: str
    applies: Callable[[float, float, float, Optional[float]], bool]
    formula: Callable[[float, float, float, Optional[float]], float]


def _finite_dimension(n: float) -> bool:
    return not is_inf(n) and n > 1


_POINCARE_ROWS = (
    _Row("Lichnerowicz", 1958, "K > 0",
         lambda K, n, D, p: K > 0 and _finite_dimension(n),
         lambda K, n, D, p: n * K / (n - 1.0)),
    _Row("Li-Yau", 1980, "K >= 0, D < inf",
         lambda K, n, D, p: K >= 0 and not is_inf(D),
         lambda K, n, D, p: math.pi ** 2 / (2.0 * D * D)),
    _Row("Zhong-Yang", 1984, "K >= 0, D < inf",
         lambda K, n, D, p: K >= 0 and not is_inf(D),
         lambda K, n, D, p: math.pi ** 2 / (D * D)),
    _Row("D.G. Yang", 1999, "K >= 0, D < inf",
         lambda K, n, D, p: K >= 0 and not is_inf(D),
         lambda K, n, D, p: math.pi ** 2 / (D * D) + K / 4.0),
    _Row("Cai", 1991, "K <= 0, D < inf",
         lambda K, n, D, p: K <= 0 and not is_inf(D),
         lambda K, n, D, p: math.pi ** 2 / (D * D) + K),
    _Row("Zhao", 1999, "K <= 0, D < inf",
         lambda K, n, D, p: K <= 0 and not is_inf(D),
         lambda K, n, D, p: math.pi ** 2 / (D * D) + 0.52 * K),
    _Row("Chen-Scacciatelli-Yao", 2002, "K real, D < inf",
         lambda K, n, D, p: not is_inf(D),
         lambda K, n, D, p: math.pi ** 2 / (D * D) + K / 2.0),
)

_P_POINCARE_ROWS = (
    _Row("Kawai-Nakauchi", 2003, "K = 0, p >= 2, D < inf",
         lambda K, n, D, p: K == 0 and p is not None and p >= 2 and not is_inf(D),
         lambda K, n, D, p: (pi_p(p) / (4.0 * D)) ** p / (p - 1.0)),
    _Row("Zhang", 2007, "K = 0 with Ric > 0 somewhere, D < inf",
         lambda K, n, D, p: K == 0 and p is not None and not is_inf(D),
         lambda K, n, D, p: (p - 1.0) * (pi_p(p) / (2.0 * D)) ** p),
    _Row("Valtorta", 2012, "K = 0, D < inf",
         lambda K, n, D, p: K == 0 and p is not None and not is_inf(D),
         lambda K, n, D, p: (p - 1.0) * pi_p(p) ** p / D ** p),
)


def reference_bounds(K: float, n: float, D: float, p: Optional[float] = None) -> List[ReferenceBound]:
    """
    Classical bounds applicable at (K, n, D)

    Args:
        K: Ricci lower bound
        n: Dimension (the rows needing a dimension are skipped for n = inf)
        D: Diameter bound, possibly inf
        p: Exponent; selects the p-Laplacian table when given and != 2

    Returns:
        list[ReferenceBound]: Rows whose stated condition holds, positive values only
    """
    rows = _P_POINCARE_ROWS if p is not None and p != 2 else _POINCARE_ROWS
    bounds = []
    for row in rows:
        if not row.applies(K, n, D, p):
            continue
        value = row.formula(K, n, D, p)
        if value > 0:
            bounds.append(ReferenceBound(row.name, row.year, value, row.condition))
    return bounds
