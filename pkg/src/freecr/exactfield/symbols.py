"""Coordinate symbols, their ordering, and the conjugation involution.

Symbol names are a family stem, an optional ``b`` marking the formal
conjugate, and single-digit indices: ``z1``, ``zb1``, ``w12``, ``wb12``.
"""

import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement

from ..errors import UnknownSymbol

_NAME = re.compile(r"^([A-Za-z]+?)(b?)(\d+)$")

# z's, then w's, then everything else alphabetically
_FAMILY_RANK = {"z": 0, "w": 1}


@lru_cache(maxsize=None)
def parse_symbol(name):
    """Split a symbol name into ``(family, barred, indices)``.

    Names without a trailing index are their own family with no indices.
    """
    m = _NAME.match(name)
    if m is None:
        if not name.isidentifier():
            raise UnknownSymbol(f"invalid symbol name {name!r}")
        return name, False, ()
    stem, bar, digits = m.groups()
    return stem, bool(bar), tuple(int(c) for c in digits)


@lru_cache(maxsize=None)
def symbol_key(name):
    """Sort key realising the fixed symbol order z, zb, w, wb, others."""
    family, barred, idx = parse_symbol(name)
    return (_FAMILY_RANK.get(family, 2), family, barred, idx)


def symbol_name(family, indices, barred=False):
    return family + ("b" if barred else "") + "".join(str(k) for k in indices)


@dataclass(frozen=True)
class Involution:
    """Symbol-level complex conjugation ``name -> (name', sign)``.

    ``complex_families`` pair ``x<idx>`` with ``xb<idx>``.  ``skew_families``
    carry two indices ``k <= l`` modelling a skew-Hermitian matrix: ``x<kl>``
    with ``k < l`` pairs with ``xb<kl>`` and the diagonal ``x<kk>`` is purely
    imaginary, so its conjugate is ``-x<kk>``.  ``real_families`` are
    self-conjugate.
    """

    complex_families: frozenset = frozenset({"z"})
    skew_families: frozenset = frozenset({"w"})
    real_families: frozenset = frozenset()

    def __call__(self, name):
        return _conj_symbol(self, name)

    def knows(self, name):
        try:
            self(name)
        except UnknownSymbol:
            return False
        return True


@lru_cache(maxsize=None)
def _conj_symbol(inv, name):
    family, barred, idx = parse_symbol(name)
    if family in inv.complex_families and idx:
        return symbol_name(family, idx, not barred), 1
    if family in inv.skew_families and len(idx) == 2:
        k, l = idx
        if k < l:
            return symbol_name(family, idx, not barred), 1
        if k == l and not barred:
            return name, -1
    elif family in inv.real_families and not barred:
        return name, 1
    raise UnknownSymbol(f"no conjugation rule for symbol {name!r}")


CHART_INVOLUTION = Involution()


@dataclass(frozen=True)
class Chart:
    """Standard coordinates on the flat model of CR dimension ``n``.

    Symbols: ``z_j``, ``zb_j``, ``w_kl`` for ``k <= l`` and ``wb_kl`` for
    ``k < l``; the diagonal ``w_kk`` are single purely-imaginary symbols, so
    there are exactly ``2n + n^2`` of them.
    """

    n: int
    symbols: tuple = field(init=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1 or self.n > 9:
            raise ValueError("chart dimension must be an integer in 1..9")
        n = self.n
        zs = [f"z{j}" for j in range(1, n + 1)]
        zbs = [f"zb{j}" for j in range(1, n + 1)]
        ws = [f"w{k}{l}" for k, l in combinations_with_replacement(range(1, n + 1), 2)]
        wbs = [f"wb{k}{l}" for k, l in combinations_with_replacement(range(1, n + 1), 2) if k < l]
        object.__setattr__(self, "symbols", tuple(zs + zbs + ws + wbs))

    @property
    def involution(self):
        return CHART_INVOLUTION

    @property
    def dimension(self):
        return len(self.symbols)

    def __contains__(self, name):
        return name in self._index

    @property
    def _index(self):
        return _chart_index(self.n)

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise UnknownSymbol(f"symbol {name!r} is not a coordinate of the n={self.n} chart") from None

    def conj(self, name):
        self.index(name)
        return CHART_INVOLUTION(name)


@lru_cache(maxsize=None)
def _chart_index(n):
    return {s: k for k, s in enumerate(Chart(n).symbols)}
