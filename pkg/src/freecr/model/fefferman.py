"""Lie-algebra level Fefferman embedding su(n+1, n) -> su(n+1, n+1).

``C^{2n+1}`` sits in ``C^{2n+2}`` by doubling the middle coordinate,
``(x, ζ, y) -> (x, ζ, ζ, y)``; ``x`` extends by acting as itself on that
copy and by zero on the complement ``(0, 1, -1, 0)``.  Blockwise::

    [[A, B, C],        [[A, B/2, B/2, C],
     [D, E, F],   ->    [D, α,   α,   F],
     [G, H, K]]         [D, α,   α,   F],
                        [G, H/2, H/2, K]]     α = E/2 = -i Im tr A

The target form is ``[[0,0,0,2I],[0,0,1,0],[0,1,0,0],[2I,0,0,0]]``.  It
is the standard split form conjugated by ``S = diag(I, √2, √2, I)``
rescaled; only ``S^2 = diag(1, 2, 2, 1)`` enters, so all entries stay in
``Q(i)``.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from ..exactfield import GaussianRational
from ..liealg import Algebra, commutator

G0 = GaussianRational(0)
G1 = GaussianRational(1)
HALF = Fraction(1, 2)


class Matrix:
    """Sparse square exact matrix of arbitrary size."""

    __slots__ = ("size", "entries")

    def __init__(self, size, entries):
        self.size = size
        self.entries = {k: v for k, v in entries.items() if v}

    def matmul(self, other):
        rows = {}
        for (r, k), v in self.entries.items():
            rows.setdefault(k, []).append((r, v))
        out = {}
        for (k, c), w in other.entries.items():
            for r, v in rows.get(k, ()):
                out[r, c] = out.get((r, c), G0) + v * w
        return Matrix(self.size, out)

    def __add__(self, other):
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = out.get(k, G0) + v
        return Matrix(self.size, out)

    def __sub__(self, other):
        return self + Matrix(other.size, {k: -v for k, v in other.entries.items()})

    def adjoint(self):
        return Matrix(self.size, {(c, r): v.conjugate() for (r, c), v in self.entries.items()})

    def trace(self):
        return sum((v for (r, c), v in self.entries.items() if r == c), G0)

    def __bool__(self):
        return bool(self.entries)

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.size == other.size and self.entries == other.entries

    def __hash__(self):
        return hash((self.size, frozenset(self.entries.items())))


def target_form(n):
    m = 2 * n + 2
    e = {(n, n + 1): G1, (n + 1, n): G1}
    for k in range(n):
        e[k, n + 2 + k] = GaussianRational(2)
        e[n + 2 + k, k] = GaussianRational(2)
    return Matrix(m, e)


def _source_map(n):
    """Index maps: source row/col -> list of (target index, weight)."""
    rows, cols = {}, {}
    for k in range(n):
        rows[k] = [(k, G1)]
        cols[k] = [(k, G1)]
        rows[n + 1 + k] = [(n + 2 + k, G1)]
        cols[n + 1 + k] = [(n + 2 + k, G1)]
    rows[n] = [(n, G1), (n + 1, G1)]
    cols[n] = [(n, GaussianRational(HALF)), (n + 1, GaussianRational(HALF))]
    return rows, cols


@dataclass(frozen=True)
class FeffermanEmbedding:
    n: int
    scaling_squared: tuple  # diagonal of S^2
    form: Matrix

    def __call__(self, x):
        rows, cols = _source_map(self.n)
        out = {}
        for (r, c), v in x.entries.items():
            for tr, a in rows[r]:
                for tc, b in cols[c]:
                    out[tr, tc] = out.get((tr, tc), G0) + v * a * b
        return Matrix(2 * self.n + 2, out)


def embedding(n):
    return FeffermanEmbedding(n, (1,) * n + (2, 2) + (1,) * n, target_form(n))


def fefferman_embed(x):
    return embedding(x.n)(x)


def in_target(M, emb):
    F = emb.form
    return not (M.adjoint().matmul(F) + F.matmul(M)) and not M.trace()


def target_grade(n, rc):
    """Grade in the |1|-grading of the target (blocks of size n+1)."""
    r, c = rc
    br, bc = int(r > n), int(c > n)
    return bc - br


def check_homomorphism(n, pairs=None):
    """Failures of ``[e(x), e(y)] = e([x, y])`` over basis pairs."""
    alg = Algebra(n)
    emb = embedding(n)
    img = [emb(e.matrix) for e in alg.basis]
    bad = []
    it = pairs if pairs is not None else product(range(alg.dimension), repeat=2)
    for a, b in it:
        lhs = img[a].matmul(img[b]) - img[b].matmul(img[a])
        if lhs != emb(commutator(alg.element(a), alg.element(b))):
            bad.append((a, b))
    return bad


def check_image_relations(n):
    alg = Algebra(n)
    emb = embedding(n)
    return [k for k, e in enumerate(alg.basis) if not in_target(emb(e.matrix), emb)]


def check_injective(n):
    from ..exactfield.linalg import Eliminator

    alg = Algebra(n)
    emb = embedding(n)
    m = 2 * n + 2
    vecs = []
    for e in alg.basis:
        M = emb(e.matrix)
        row = []
        for r, c in product(range(m), repeat=2):
            v = M.entries.get((r, c), G0)
            row += [v.re, v.im]
        vecs.append(row)
    return Eliminator(vecs, Fraction(0), Fraction(1)).rank == alg.dimension


def grade_map(n):
    """Source grade -> set of target grades hit by its basis images.

    ``g_0`` lands in grade 0 apart from its ``α`` entries, which also
    reach the off-diagonal middle positions of grades -1 and 1.
    """
    alg = Algebra(n)
    emb = embedding(n)
    out = {}
    for e in alg.basis:
        M = emb(e.matrix)
        out.setdefault(e.grade, set()).update(target_grade(n, rc) for rc in M.entries)
    return {g: sorted(v) for g, v in sorted(out.items())}
