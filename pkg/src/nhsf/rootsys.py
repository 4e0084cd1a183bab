"""Root systems, Weyl words and Dynkin-graph combinatorics for types A-G.

Numbering follows the classical (Onishchik-Vinberg style) vertex order:

* A_n, B_n, C_n, D_n: a path 1-2-...-n, with the D-fork {n-1, n} attached
  to node n-2; B_n has the short root last, C_n the long root last.
* E_n: chain 1-...-(n-1) with node n attached to the branch vertex
  (node 3 for E6, 4 for E7, 5 for E8).
* F4: chain 1-2-3-4 with nodes 1,2 short; G2: node 1 short.

The Cartan matrix convention is a[i][j] = <alpha_j, alpha_i^vee>, so the
coroot coordinates of alpha_j form the j-th column of A.  Weights are stored
either in coroot coordinates ("coroot": pairings with simple coroots, the
fundamental-weight coefficients) or in simple-root coordinates ("root").
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .linalg import Q, solve

COROOT = "coroot"
SIMPLEROOT = "root"

_POSITIVE_ROOT_COUNT = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


class InvalidCartanType(ValueError):
    pass


@dataclass(frozen=True)
class CartanMatrixSpec:
    type_letter: str
    rank: int

    def __post_init__(self):
        t, n = self.type_letter, self.rank
        ok = (
            (t == "A" and n >= 1)
            or (t in ("B", "C") and n >= 2)
            or (t == "D" and n >= 3)
            or (t == "E" and n in (6, 7, 8))
            or (t == "F" and n == 4)
            or (t == "G" and n == 2)
        )
        if not ok:
            raise InvalidCartanType(
                f"({t},{n}) is not a valid simple type: need A>=1, B,C>=2, "
                f"D>=3, E in {{6,7,8}}, F=4, G=2"
            )

    @property
    def name(self) -> str:
        return f"{self.type_letter}{self.rank}"


def _dynkin_edges(spec: CartanMatrixSpec) -> list[tuple[int, int]]:
    """Undirected Dynkin edges as 1-based (i, j) pairs, i < j."""
    t, n = spec.type_letter, spec.rank
    if t in ("A", "B", "C", "F", "G"):
        return [(i, i + 1) for i in range(1, n)]
    if t == "D":
        return [(i, i + 1) for i in range(1, n - 1)] + [(n - 2, n)]
    branch = {6: 3, 7: 4, 8: 5}[n]
    return [(i, i + 1) for i in range(1, n - 1)] + [(branch, n)]


def _cartan_matrix(spec: CartanMatrixSpec) -> list[list[int]]:
    t, n = spec.type_letter, spec.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in _dynkin_edges(spec):
        a[i - 1][j - 1] = -1
        a[j - 1][i - 1] = -1
    if t == "B":
        a[n - 2][n - 1] = -1
        a[n - 1][n - 2] = -2  # alpha_n short
    elif t == "C":
        a[n - 2][n - 1] = -2  # alpha_n long
        a[n - 1][n - 2] = -1
    elif t == "F":
        a[1][2] = -2  # nodes 1,2 short, 3,4 long
        a[2][1] = -1
    elif t == "G":
        a[0][1] = -3  # node 1 short
        a[1][0] = -1
    return a


def _symmetrizer(a: list[list[int]]) -> list[Fraction]:
    """Minimal positive d_i with d_i a_ij = d_j a_ji ((alpha_i,alpha_i)/2)."""
    n = len(a)
    d: list[Fraction | None] = [None] * n
    d[0] = Q(1)
    changed = True
    while changed:
        changed = False
        for i in range(n):
            for j in range(n):
                if i != j and a[i][j] != 0 and d[i] is not None and d[j] is None:
                    d[j] = d[i] * Fraction(a[i][j], a[j][i])
                    changed = True
    assert all(x is not None for x in d)
    lcm_den = 1
    for x in d:
        lcm_den = lcm_den * x.denominator // _gcd(lcm_den, x.denominator)
    vals = [x * lcm_den for x in d]
    g = 0
    for x in vals:
        g = _gcd(g, x.numerator)
    return [x / g for x in vals]


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


@dataclass(frozen=True)
class Weight:
    coords: tuple[Fraction, ...]
    basis_tag: str  # COROOT | SIMPLEROOT

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(Q(c) for c in self.coords))
        if self.basis_tag not in (COROOT, SIMPLEROOT):
            raise ValueError(f"unknown basis tag {self.basis_tag!r}")

    def ints(self) -> tuple[int, ...]:
        if any(c.denominator != 1 for c in self.coords):
            raise ValueError(f"non-integral coordinates {self.coords}")
        return tuple(int(c) for c in self.coords)


@dataclass(frozen=True)
class WeylWord:
    """Reduced word s_{i1} o s_{i2} o ... (applied right to left)."""

    reflections: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.reflections)


class RootSystem:
    def __init__(self, spec: CartanMatrixSpec):
        self.spec = spec
        self.rank = spec.rank
        self.cartan_matrix = _cartan_matrix(spec)
        self.dynkin_edges = _dynkin_edges(spec)
        self.symmetrizer = _symmetrizer(self.cartan_matrix)
        self.positive_roots = self._enumerate_positive_roots()
        self.root_index = {r: k for k, r in enumerate(self.positive_roots)}
        self.maximal_root = self.positive_roots[-1]
        self.rho = Weight((Q(1),) * self.rank, COROOT)
        n_expected = _POSITIVE_ROOT_COUNT[spec.type_letter](spec.rank)
        if len(self.positive_roots) != n_expected:
            raise AssertionError(
                f"{spec.name}: found {len(self.positive_roots)} positive roots, "
                f"expected {n_expected}"
            )
        if any(self.maximal_root[i] < r[i] for r in self.positive_roots for i in range(self.rank)):
            raise AssertionError(f"{spec.name}: maximal root fails to dominate")

    # -- construction ---------------------------------------------------

    def _enumerate_positive_roots(self) -> list[tuple[int, ...]]:
        """All positive roots in simple-root coordinates, by height then lex."""
        n = self.rank
        simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
        found = set(simple)
        frontier = list(simple)
        while frontier:
            new = []
            for beta in frontier:
                for i in range(n):
                    # p = length of the alpha_i-string below beta (stays positive
                    # unless beta = alpha_i, in which case p = 0).
                    p = 0
                    down = _sub(beta, simple[i])
                    while down in found:
                        p += 1
                        down = _sub(down, simple[i])
                    q = p - self.pair_with_coroot(beta, i)
                    if q > 0:
                        up = _add(beta, simple[i])
                        if up not in found:
                            found.add(up)
                            new.append(up)
            frontier = new
        return sorted(found, key=lambda r: (sum(r), r))

    # -- pairings and coordinates ---------------------------------------

    def pair_with_coroot(self, root_coords: tuple[int, ...], i: int) -> int:
        """<beta, alpha_i^vee> for beta in simple-root coordinates (0-based i)."""
        a = self.cartan_matrix
        return sum(a[i][j] * root_coords[j] for j in range(self.rank))

    def root_coroot_coords(self, root_coords) -> tuple[int, ...]:
        return tuple(self.pair_with_coroot(tuple(root_coords), i) for i in range(self.rank))

    def inner(self, beta, gamma) -> Fraction:
        """(beta, gamma) for roots in simple-root coordinates."""
        d = self.symmetrizer
        a = self.cartan_matrix
        acc = Q(0)
        for i in range(self.rank):
            if beta[i] == 0:
                continue
            for j in range(self.rank):
                if gamma[j] != 0:
                    acc += beta[i] * gamma[j] * d[i] * a[i][j]
        return acc

    def norm2(self, beta) -> Fraction:
        return self.inner(beta, beta)

    def is_root(self, coords) -> bool:
        t = tuple(coords)
        return t in self.root_index or tuple(-c for c in t) in self.root_index

    # -- Weyl group ------------------------------------------------------

    def reflect_root(self, i: int, beta: tuple[int, ...]) -> tuple[int, ...]:
        """s_i(beta) in simple-root coordinates (0-based i)."""
        c = self.pair_with_coroot(beta, i)
        out = list(beta)
        out[i] -= c
        return tuple(out)

    def apply_word_to_root(self, word: WeylWord, beta) -> tuple[int, ...]:
        out = tuple(beta)
        for i in reversed(word.reflections):
            out = self.reflect_root(i, out)
        return out

    def apply_word_to_weight(self, word: WeylWord, w: Weight) -> Weight:
        out = w if w.basis_tag == COROOT else convert_weight(w, COROOT, self)
        for i in reversed(word.reflections):
            out = reflect(self, i, out)
        return out

    def inversions_of_inverse(self, word: WeylWord) -> list[tuple[int, ...]]:
        """{beta > 0 : w^{-1}(beta) < 0}, the paper's R_W^- for w."""
        inv = self.word_inverse(word)
        out = []
        for beta in self.positive_roots:
            img = self.apply_word_to_root(inv, beta)
            if all(c <= 0 for c in img):
                out.append(beta)
        return out

    @staticmethod
    def word_inverse(word: WeylWord) -> WeylWord:
        return WeylWord(tuple(reversed(word.reflections)))

    def words_equal(self, w1: WeylWord, w2: WeylWord) -> bool:
        """Equality as Weyl-group elements, tested by the action on rho."""
        return self.apply_word_to_weight(w1, self.rho) == self.apply_word_to_weight(w2, self.rho)


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


@lru_cache(maxsize=None)
def build_root_system(type_letter: str, rank: int) -> RootSystem:
    return RootSystem(CartanMatrixSpec(type_letter, rank))


def convert_weight(w: Weight, target: str, rs: RootSystem) -> Weight:
    """Change of basis via the Cartan matrix: coroot = A . simple-root."""
    if target == w.basis_tag:
        return w
    a = rs.cartan_matrix
    n = rs.rank
    if target == COROOT:
        coords = tuple(sum(Q(a[i][j]) * w.coords[j] for j in range(n)) for i in range(n))
        return Weight(coords, COROOT)
    sol = solve([[Q(a[i][j]) for j in range(n)] for i in range(n)], list(w.coords))
    assert sol is not None
    return Weight(tuple(sol), SIMPLEROOT)


def reflect(rs: RootSystem, i: int, w: Weight) -> Weight:
    """Simple reflection s_i on a weight in coroot coordinates (0-based i)."""
    if w.basis_tag != COROOT:
        raise ValueError("reflect expects coroot coordinates")
    a = rs.cartan_matrix
    wi = w.coords[i]
    coords = tuple(w.coords[j] - wi * a[j][i] for j in range(rs.rank))
    return Weight(coords, COROOT)


def enumerate_w_i(rs: RootSystem, selected: frozenset[int] | set[int], length: int) -> list[WeylWord]:
    """W(I)_length: reduced words w with w^{-1} positive on unselected simples.

    ``selected`` holds 1-based node indices.  Only lengths 0..2 are needed
    (H^0, H^1, H^2); larger lengths are rejected.  Words are brute-forced and
    deduplicated by their action on rho.
    """
    if length > 2:
        raise ValueError("only Weyl words of length <= 2 are supported")
    if not selected:
        raise ValueError("selected node set must be nonempty")
    sel0 = {i - 1 for i in selected}
    if not sel0 <= set(range(rs.rank)):
        raise ValueError(f"selected nodes {sorted(selected)} out of range 1..{rs.rank}")
    unselected = [j for j in range(rs.rank) if j not in sel0]
    if length == 0:
        return [WeylWord(())]

    def admissible(word: WeylWord) -> bool:
        inv = RootSystem.word_inverse(word)
        for j in unselected:
            img = tuple(1 if t == j else 0 for t in range(rs.rank))
            img = rs.apply_word_to_root(inv, img)
            if all(c <= 0 for c in img):
                return False
        return True

    candidates = []
    if length == 1:
        candidates = [WeylWord((i,)) for i in range(rs.rank)]
    else:
        candidates = [
            WeylWord((i, j))
            for i in range(rs.rank)
            for j in range(rs.rank)
            if i != j
        ]
    out: list[WeylWord] = []
    for w in candidates:
        if len(rs.inversions_of_inverse(w)) != length:
            continue  # not reduced
        if not admissible(w):
            continue
        if any(rs.words_equal(w, u) for u in out):
            continue
        out.append(w)
    return out


@dataclass(frozen=True)
class DynkinSplit:
    components: tuple[tuple[int, ...], ...]  # 1-based nodes of B_I, per component
    c: int
    c_values: tuple[int, ...]
    s: int


def dynkin_split(rs: RootSystem, selected: set[int] | frozenset[int]) -> DynkinSplit:
    """Split B_I = unselected nodes into Dynkin components; c = card B_I.

    c_i counts the selected neighbours of each component, minus one.
    """
    sel = set(selected)
    nodes = [i for i in range(1, rs.rank + 1) if i not in sel]
    adj: dict[int, set[int]] = {i: set() for i in nodes}
    for i, j in rs.dynkin_edges:
        if i in adj and j in adj:
            adj[i].add(j)
            adj[j].add(i)
    seen: set[int] = set()
    comps: list[tuple[int, ...]] = []
    for start in nodes:
        if start in seen:
            continue
        comp = []
        stack = [start]
        seen.add(start)
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in sorted(adj[v]):
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        comps.append(tuple(sorted(comp)))
    comps.sort()
    edge_set = {frozenset(e) for e in rs.dynkin_edges}
    c_values = []
    for comp in comps:
        touching = {
            s
            for s in sel
            for v in comp
            if frozenset((s, v)) in edge_set
        }
        c_values.append(len(touching) - 1)
    return DynkinSplit(tuple(comps), len(nodes), tuple(c_values), len(comps))


def weyl_dim(rs: RootSystem, hw_coroot: tuple) -> Fraction:
    """Weyl dimension formula for a dominant weight in coroot coordinates."""
    lam = [Q(c) for c in hw_coroot]
    if any(c < 0 for c in lam):
        raise ValueError(f"{hw_coroot} is not dominant")
    num = Q(1)
    den = Q(1)
    d = rs.symmetrizer
    for beta in rs.positive_roots:
        dbeta = rs.norm2(beta) / 2
        lam_b = sum(lam[i] * beta[i] * d[i] for i in range(rs.rank)) / dbeta
        rho_b = sum(Q(beta[i]) * d[i] for i in range(rs.rank)) / dbeta
        num *= lam_b + rho_b
        den *= rho_b
    return num / den
