"""Free-CR checks on a frame: non-degeneracy, totally real Levi bracket,
integrability of ``D^{1,0}``, and the Nijenhuis tensor in CR dimension 2."""

from dataclasses import dataclass, field

from .errors import DegenerateFrame, WrongDimension
from .vfields import NOT_IN_SPAN, bracket, build_frame


@dataclass(frozen=True)
class Witness:
    check: str
    pair: tuple  # 1-based field indices
    residual: object  # VectorField or message


@dataclass(frozen=True)
class CRReport:
    nondegenerate: bool
    totally_real: bool
    integrable: bool
    nijenhuis: dict = None  # (i, j, k) -> Scalar, n == 2 only
    witnesses: tuple = ()
    frame: object = field(default=None, compare=False, repr=False)

    @property
    def passed(self):
        return self.nondegenerate and self.totally_real and self.integrable


def _holo_brackets(frame):
    n = frame.n
    for i in range(n):
        for j in range(i + 1, n):
            yield i, j, frame.expand(bracket(frame.holo[i], frame.holo[j]))


def _residual(frame, coeffs, keep):
    drop = [c if k not in keep else 0 for k, c in enumerate(coeffs)]
    return frame.recombine(drop)


def check_totally_real(frame):
    """``[X_i, X_j]`` has no Levi component for all ``i < j``.

    The conjugate condition on ``[X_ib, X_jb]`` follows by conjugating.
    Returns ``(ok, witnesses)``.
    """
    keep = set(range(2 * frame.n))
    bad = []
    for i, j, c in _holo_brackets(frame):
        if c is NOT_IN_SPAN or any(c[k] for k in range(2 * frame.n, frame.dimension)):
            bad.append(Witness("totally_real", (i + 1, j + 1), _residual(frame, c, keep)))
    return not bad, tuple(bad)


def check_integrability(frame):
    """``[X_i, X_j]`` lies in the span of the ``X_k`` alone."""
    keep = set(range(frame.n))
    bad = []
    for i, j, c in _holo_brackets(frame):
        if any(c[k] for k in range(frame.n, frame.dimension)):
            bad.append(Witness("integrable", (i + 1, j + 1), _residual(frame, c, keep)))
    return not bad, tuple(bad)


def nijenhuis_tensor(frame):
    """Components ``N[i, j, k]``: the ``X_kb`` coefficient of ``[X_i, X_j]``.

    On ``D^{1,0}`` the Nijenhuis tensor is ``N(X_i, X_j) = 4 sum_k N[i,j,k] X_kb``;
    the tensor is stored without the factor 4.  Indices are 1-based, and only
    nonzero entries are kept.
    """
    n = frame.n
    if n != 2:
        raise WrongDimension("the Nijenhuis tensor is an independent invariant only for n = 2")
    out = {}
    for i, j, c in _holo_brackets(frame):
        for k in range(n):
            v = c[n + k]
            if v:
                out[(i + 1, j + 1, k + 1)] = v
                out[(j + 1, i + 1, k + 1)] = -v
    return dict(sorted(out.items()))


def verify(fields_or_frame, base_point=None):
    """Run every check and collect a :class:`CRReport`."""
    frame = fields_or_frame
    if not hasattr(frame, "expand"):
        try:
            frame = build_frame(fields_or_frame, base_point)
        except DegenerateFrame as e:
            return CRReport(False, False, False, None, (Witness("nondegenerate", (), str(e)),))
    tr, w1 = check_totally_real(frame)
    ig, w2 = check_integrability(frame)
    nij = nijenhuis_tensor(frame) if frame.n == 2 else None
    return CRReport(True, tr, ig, nij, w1 + w2, frame)
