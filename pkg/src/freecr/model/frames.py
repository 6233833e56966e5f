"""The flat quadric frame and its one-term deformation."""

from ..errors import UnsupportedDimension
from ..exactfield import Chart, symbol
from ..vfields import VectorField


def flat_frame(n):
    """``Z_j = d/dz_j - sum_{p >= j} zb_p d/dw_jp`` on the standard chart."""
    if n < 2:
        raise UnsupportedDimension("the flat frame needs n >= 2")
    chart = Chart(n)
    out = []
    for j in range(1, n + 1):
        comps = {f"z{j}": 1}
        for p in range(j, n + 1):
            comps[f"w{j}{p}"] = -symbol(f"zb{p}")
        out.append(VectorField(chart, comps))
    return out


def deformed_frame(n):
    """The flat frame with ``Z_1`` replaced by ``Z_1 + wb12 d/dw34``."""
    if n < 4:
        raise UnsupportedDimension("the deformed frame needs n >= 4")
    fields = flat_frame(n)
    fields[0] = fields[0] + VectorField.coordinate(fields[0].chart, "w34", symbol("wb12"))
    return fields
