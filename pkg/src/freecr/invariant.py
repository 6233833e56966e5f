"""Structure functions, homogeneity-one normalization and the invariant P.

Index conventions (all stored keys are 0-based, target indices first):

* ``sf.f_r_ijk[r, i, j, k]``          coefficient ``f^r_{i [j kb]}``
* ``sf.f_r_bijk[r, i, j, k]``         ``f^r_{ib [j kb]}``
* ``sf.f_r_ijkl[r, i, j, k, l]``      ``f^r_{[i jb][k lb]}``
* ``sf.f_rs_ijk[r, s, i, j, k]``      ``f^{[r sb]}_{i [j kb]}``
* ``sf.f_rs_bijk[r, s, i, j, k]``     ``f^{[r sb]}_{ib [j kb]}``
* ``sf.f_rs_ijkl[r, s, i, j, k, l]``  ``f^{[r sb]}_{[i jb][k lb]}``

Each value is read off a frame bracket with ``dθ^a(X_b, X_c) = -θ^a([X_b, X_c])``;
the Levi-Levi families carry an extra 1/2 because both orderings of the
pair appear in the structure equations.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .crverify import check_integrability, check_totally_real
from .errors import MissingNijenhuis, NonCommutingFrame, NotFree, TraceResidual, UnsupportedDimension
from .exactfield import ZERO, Scalar
from .vfields import NOT_IN_SPAN, bracket

HALF = Fraction(1, 2)

FAMILIES = ("f_r_ijk", "f_r_bijk", "f_r_ijkl", "f_rs_ijk", "f_rs_bijk", "f_rs_ijkl")


@dataclass(frozen=True)
class StructureFunctions:
    n: int
    f_r_ijk: dict = field(default_factory=dict)
    f_r_bijk: dict = field(default_factory=dict)
    f_r_ijkl: dict = field(default_factory=dict)
    f_rs_ijk: dict = field(default_factory=dict)
    f_rs_bijk: dict = field(default_factory=dict)
    f_rs_ijkl: dict = field(default_factory=dict)

    def families(self):
        return {name: getattr(self, name) for name in FAMILIES}

    def is_zero(self):
        return not any(self.families().values())

    def get(self, family, key):
        return getattr(self, family).get(key, ZERO)

    def entries(self):
        """All nonzero entries as ``(family, key, value)``, sorted."""
        return [(name, k, v) for name, fam in self.families().items() for k, v in sorted(fam.items())]


def _put(d, key, value):
    if value:
        d[key] = value


def structure_functions(frame):
    """Read the six coefficient families off the brackets of ``frame``.

    Requires a free frame whose holomorphic fields commute (for ``n = 2``
    up to a ``D^{0,1}`` part, which is the Nijenhuis tensor); the leading
    term ``θ^r ∧ θ^sb`` of ``dθ^[r sb]`` is checked along the way.
    """
    ok, w = check_totally_real(frame)
    if not ok:
        raise NotFree(f"Levi bracket is not totally real (pair {w[0].pair})")
    n = frame.n
    if n > 2:
        ok, w = check_integrability(frame)
        if not ok:
            raise NotFree(f"D^(1,0) is not involutive (pair {w[0].pair})")
    for i in range(n):
        for j in range(i + 1, n):
            V = bracket(frame.holo[i], frame.holo[j])
            if not V:
                continue
            # for n = 2 a pure D^(0,1) bracket is the Nijenhuis tensor, reported separately
            if n == 2:
                c = frame.expand(V)
                if not any(c[k] for k in range(n)) and not any(c[k] for k in range(2 * n, frame.dimension)):
                    continue
            raise NonCommutingFrame(
                f"[X{i + 1}, X{j + 1}] is not zero; the structure equations assume commuting X_i")

    levi = [(j, k) for j in range(n) for k in range(n)]
    lslot = frame.slot_levi

    def coeffs(V):
        if not V:
            return None
        c = frame.expand(V)
        if c is NOT_IN_SPAN:  # cannot happen for a full-rank frame
            raise NotFree("bracket outside the span of the frame")
        return c

    for i, j in product(range(n), repeat=2):
        c = coeffs(bracket(frame.holo[i], frame.antiholo[j]))
        want = [ZERO] * frame.dimension
        want[lslot(i, j)] = Scalar.coerce(-1)
        if c is None or list(c) != want:
            raise NotFree(f"[X{i + 1}, X{j + 1}b] is not -X[{i + 1}{j + 1}b]")

    sf = StructureFunctions(n)
    for (src, conj), i, (j, k) in product(((frame.holo, False), (frame.antiholo, True)), range(n), levi):
        c = coeffs(bracket(src[i], frame.levi[j][k]))
        if c is None:
            continue
        fr, frs = (sf.f_r_bijk, sf.f_rs_bijk) if conj else (sf.f_r_ijk, sf.f_rs_ijk)
        for r in range(n):
            _put(fr, (r, i, j, k), -c[r])
        for r, s in levi:
            _put(frs, (r, s, i, j, k), -c[lslot(r, s)])

    for a, b in product(range(len(levi)), repeat=2):
        if a >= b:
            continue
        (i, j), (k, l) = levi[a], levi[b]
        c = coeffs(bracket(frame.levi[i][j], frame.levi[k][l]))
        if c is None:
            continue
        for r in range(n):
            v = -c[r] * HALF
            _put(sf.f_r_ijkl, (r, i, j, k, l), v)
            _put(sf.f_r_ijkl, (r, k, l, i, j), -v)
        for r, s in levi:
            v = -c[lslot(r, s)] * HALF
            _put(sf.f_rs_ijkl, (r, s, i, j, k, l), v)
            _put(sf.f_rs_ijkl, (r, s, k, l, i, j), -v)
    return sf


def independent_entries(sf):
    """Nonzero entries up to the storage symmetries.

    ``f^{[r sb]}_{i [j kb]}`` is symmetric in ``i, j``; the barred family
    ``f^{[r sb]}_{ib [j kb]}`` is the conjugate of ``f^{[s rb]}_{k [i jb]}``;
    Levi-Levi families are antisymmetric in their two slots.
    """
    seen = {}
    for name, key, v in sf.entries():
        if name == "f_rs_ijk":
            r, s, i, j, k = key
            canon = (name, (r, s, min(i, j), max(i, j), k))
        elif name == "f_rs_bijk":
            r, s, i, j, k = key
            canon = ("f_rs_ijk", (s, r, min(k, i), max(k, i), j))
        elif name == "f_r_ijkl":
            r, i, j, k, l = key
            canon = (name, (r,) + min((i, j, k, l), (k, l, i, j)))
        elif name == "f_rs_ijkl":
            r, s, i, j, k, l = key
            canon = (name, (r, s) + min((i, j, k, l), (k, l, i, j)))
        else:
            canon = (name, key)
        seen.setdefault(canon, (name, key, v))
    return sorted(seen.values(), key=lambda e: (FAMILIES.index(e[0]), e[1]))


@dataclass(frozen=True)
class NormalizationCoefficients:
    """``A[i, k, j] = A^i_{kj}``, ``B[i, k, j] = B^i_{kb j}``, ``C[i, j, k] = C^i_{j kb}``."""

    n: int
    A: dict
    B: dict
    C: dict
    gauge: tuple
    c_variant: str = "plain"

    def is_zero(self):
        return not (self.A or self.B or self.C)


def _sparse(d):
    return {k: v for k, v in d.items() if v}


def solve_normalization(sf):
    """Coefficients making the assembled ``P`` totally trace-free.

    Uses the gauge ``A^i_{is} = 0``.  For ``n >= 3`` the C-relation is tried
    both with and without conjugating the B-trace, and the variant that
    makes ``P`` trace-free is recorded.
    """
    n = sf.n
    if n < 2:
        raise UnsupportedDimension("the normalization needs n >= 2")
    R = range(n)
    f = sf.f_rs_ijk

    def F(i, j, r, s, t):
        return f.get((i, j, r, s, t), ZERO)

    def d(a, b):
        return 1 if a == b else 0

    # bb[s] is the conjugate of the trace b_s = sum_j B^j_{sb j}
    if n == 2:
        a2 = [sum((F(i, j, i, s, j) for i in R for j in R), ZERO) * Fraction(-1, 4) for s in R]
        bb = [ZERO] * n
        A = {(i, r, s): sum((F(i, j, r, s, j) for j in R), ZERO) * (-HALF) - a2[s] * d(i, r)
             for i, r, s in product(R, repeat=3)}
        Bb = {(j, s, t): (sum((F(i, j, i, s, t) for i in R), ZERO) + a2[s] * (2 * d(j, t))) * Fraction(-1, 3)
              for j, s, t in product(R, repeat=3)}
        Cb = {(j, t, s): Bb[j, s, t] + a2[s] * d(j, t) for j, s, t in product(R, repeat=3)}
        gauge = ("A^i_{is} = 0", "B^j_{sb j} = 0")
        variant = "n=2"
    else:
        m = Fraction(n - 2, 2 * n * n - n - 2)
        bb = [sum((F(i, j, i, s, j) for i in R for j in R), ZERO) * (-m) for s in R]
        beta = Fraction(1, n - 2)
        Bb = {(j, s, t): (sum((F(i, j, i, s, t) for i in R), ZERO) + bb[s] * (Fraction(n, n - 2) * d(j, t)))
              * Fraction(-1, n + 1) for j, s, t in product(R, repeat=3)}
        sym = Fraction(3 * n - 4, 2 * (n - 2))
        A = {}
        for i, r, s in product(R, repeat=3):
            S = (sum((F(i, j, r, s, j) for j in R), ZERO) + (bb[s] * d(i, r) + bb[r] * d(i, s)) * sym) * Fraction(-1, n)
            K = (bb[r] * d(i, s) - bb[s] * d(i, r)) * (beta * HALF)
            A[i, r, s] = S + K
        gauge = ("A^i_{is} = 0",)
        plain = {(j, t, s): Bb[j, s, t] + bb[s] * (beta * d(j, t)) for j, s, t in product(R, repeat=3)}
        conj_b = [x.conjugate() for x in bb]
        conjd = {(j, t, s): Bb[j, s, t] + conj_b[s] * (beta * d(j, t)) for j, s, t in product(R, repeat=3)}
        ok_plain = not _trace_residuals(n, f, A, Bb, plain)
        ok_conj = not _trace_residuals(n, f, A, Bb, conjd)
        if ok_plain and ok_conj:
            variant = "both"
        elif ok_conj:
            variant = "conjugated"
        else:
            variant = "plain"
        Cb = conjd if variant == "conjugated" else plain

    # stored unbarred: B^j_{sb t} = conj(Bb[j, s, t]),  C^j_{t sb} = conj(Cb[j, t, s])
    B = {(j, s, t): v.conjugate() for (j, s, t), v in Bb.items()}
    C = {(j, t, s): v.conjugate() for (j, t, s), v in Cb.items()}
    return NormalizationCoefficients(n, _sparse(A), _sparse(B), _sparse(C), gauge, variant)


def _assemble(n, f, A, Bb, Cb):
    R = range(n)
    P = {}
    for i, j, r, s, t in product(R, repeat=5):
        v = f.get((i, j, r, s, t), ZERO)
        if j == t:
            v = v + A.get((i, r, s), ZERO)
        if i == s:
            v = v + Bb.get((j, r, t), ZERO)
        if i == r:
            v = v + Cb.get((j, t, s), ZERO)
        if v:
            P[i, j, r, s, t] = v
    return P


def contractions(n, P):
    """The three traces of ``P`` that must vanish, as dicts of nonzero residuals."""
    R = range(n)
    g = lambda *k: P.get(k, ZERO)
    c1 = _sparse({(i, r, s): sum((g(i, j, r, s, j) for j in R), ZERO) for i, r, s in product(R, repeat=3)})
    c2 = _sparse({(s,): sum((g(i, j, i, s, j) for i in R for j in R), ZERO) for s in R})
    c3 = _sparse({(j, s, t): sum((g(i, j, i, s, t) for i in R), ZERO) for j, s, t in product(R, repeat=3)})
    return {"P^{i jb}_{rs jb}": c1, "P^{i jb}_{is jb}": c2, "P^{i jb}_{is tb}": c3}


def _trace_residuals(n, f, A, Bb, Cb):
    P = _assemble(n, f, A, Bb, Cb)
    return {k: v for k, v in contractions(n, P).items() if v}


@dataclass(frozen=True)
class InvariantTensor:
    """``P[i, j, r, s, t] = P^{i jb}_{r s tb}`` (nonzero entries only)."""

    n: int
    P: dict
    coefficients: NormalizationCoefficients

    def is_zero(self):
        return not self.P

    def independent_entries(self):
        """Nonzero entries with ``r <= s`` (``P`` is symmetric in ``r, s``)."""
        return [(k, v) for k, v in sorted(self.P.items()) if k[2] <= k[3]]


def assemble_P(sf, coeffs):
    """``P = f + A δ_jt + conj(B^j_{rb t}) δ^i_s + conj(C^j_{t sb}) δ^i_r``.

    Raises :class:`TraceResidual` if a contraction or the antisymmetric part
    in ``r, s`` survives.
    """
    n = sf.n
    Bb = {k: v.conjugate() for k, v in coeffs.B.items()}
    Cb = {k: v.conjugate() for k, v in coeffs.C.items()}
    P = _assemble(n, sf.f_rs_ijk, coeffs.A, Bb, Cb)
    bad = {k: v for k, v in contractions(n, P).items() if v}
    if bad:
        raise TraceResidual(f"P is not trace-free: {sorted(bad)}")
    for (i, j, r, s, t), v in P.items():
        if P.get((i, j, s, r, t), ZERO) != v:
            raise TraceResidual(f"P is not symmetric in r, s at {(i + 1, j + 1, r + 1, s + 1, t + 1)}")
    return InvariantTensor(n, P, coeffs)


@dataclass(frozen=True)
class Verdict:
    flat: bool
    P_entries: tuple
    nijenhuis_entries: tuple

    @property
    def label(self):
        return "flat" if self.flat else "not_flat"


def flatness_verdict(P, nijenhuis=None):
    """Flat iff ``P`` vanishes (and, for ``n = 2``, the Nijenhuis tensor too)."""
    if P.n == 2 and nijenhuis is None:
        raise MissingNijenhuis("n = 2 needs the Nijenhuis tensor")
    nij = tuple(sorted((nijenhuis or {}).items()))
    entries = tuple(sorted(P.P.items()))
    return Verdict(not entries and not nij, entries, nij)
