"""Coefficient modules: adjoint, Riemannian, co-Riemannian, irreducibles.

A ``GradedModule`` is a g_- module given degreewise with exact rational
action matrices, plus optional named "actors" (Levi generators and Cartan
elements) used later to decompose cohomology.  Weights are coroot-coordinate
tuples; modules without a torus carry ``None`` weights and are only used
where no decomposition is required.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .linalg import Q, Reducer, solve
from .liealg import (
    Element,
    GradedNilpotent,
    GradingSpec,
    LeviPieces,
    ZGradedLieAlgebra,
    abelian_nilpotent,
    gminus_of,
    graded_algebra,
    levi_pieces,
)
from .rootsys import COROOT, RootSystem, Weight, weyl_dim

SparseMat = dict[int, dict[int, Fraction]]  # column -> {row: coeff}


@dataclass
class Actor:
    """A decomposition operator acting on both g_- and the module."""

    name: str
    kind: str  # "cartan" | "raise" | "lower"
    node: int | None  # 1-based node for raise/lower, 0-based slot for cartan
    weight: tuple[int, ...] | None
    on_gminus: SparseMat
    on_module: SparseMat


@dataclass
class ModuleElt:
    label: str
    degree: int
    weight: tuple[int, ...] | None


class GradedModule:
    def __init__(self, gminus: GradedNilpotent, basis: list[ModuleElt],
                 act: list[SparseMat], truncation_bound: int | None,
                 actors: list[Actor] | None = None, name: str = ""):
        self.gminus = gminus
        self.basis = basis
        self.act = act  # indexed like gminus basis
        self.truncation_bound = truncation_bound
        self.actors = actors or []
        self.name = name
        self.min_degree = min((b.degree for b in basis), default=0)
        self.by_degree: dict[int, list[int]] = {}
        for k, b in enumerate(basis):
            self.by_degree.setdefault(b.degree, []).append(k)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def complete_at(self, degree: int) -> bool:
        """Is the degree-d component fully represented (not truncated away)?"""
        if self.truncation_bound is None:
            return True
        return degree <= self.truncation_bound

    def apply(self, mat: SparseMat, col: int) -> dict[int, Fraction]:
        return dict(mat.get(col, {}))

    def verify_representation(self) -> None:
        """act([u,v]) = [act(u), act(v)] on every g_- pair and basis column."""
        gm = self.gminus
        for i in range(gm.dim):
            for j in range(i + 1, gm.dim):
                br = gm.bracket(i, j)
                for col in range(self.dim):
                    lhs: dict[int, Fraction] = {}
                    for k, c in br.items():
                        for row, v in self.act[k].get(col, {}).items():
                            _acc(lhs, row, c * v)
                    rhs: dict[int, Fraction] = {}
                    for mid, v in self.act[j].get(col, {}).items():
                        for row, w in self.act[i].get(mid, {}).items():
                            _acc(rhs, row, v * w)
                    for mid, v in self.act[i].get(col, {}).items():
                        for row, w in self.act[j].get(mid, {}).items():
                            _acc(rhs, row, -v * w)
                    if _clean(lhs) != _clean(rhs):
                        raise AssertionError(
                            f"representation property fails on pair ({i},{j}), column {col}"
                        )

    def verify_weight_additivity(self) -> None:
        for k in range(self.gminus.dim):
            wk = self.gminus.weights[k]
            if wk is None:
                return
            for col, outs in self.act[k].items():
                wc = self.basis[col].weight
                for row in outs:
                    wr = self.basis[row].weight
                    expect = tuple(a + b for a, b in zip(wc, wk))
                    if wr != expect:
                        raise AssertionError("weight additivity violated")


def _acc(d: dict[int, Fraction], k: int, v: Fraction) -> None:
    nv = d.get(k, Q(0)) + v
    if nv == 0:
        d.pop(k, None)
    else:
        d[k] = nv


def _clean(d: dict[int, Fraction]) -> dict[int, Fraction]:
    return {k: v for k, v in d.items() if v != 0}


class FlagCase:
    """All per-grading data for one (algebra, selected nodes) flag case."""

    def __init__(self, type_letter: str, rank: int, nodes: tuple[int, ...]):
        self.type_letter = type_letter
        self.rank = rank
        self.nodes = tuple(sorted(nodes))
        self.alg = graded_algebra(type_letter, rank, self.nodes)
        self.rs = self.alg.rs
        self.levi: LeviPieces = levi_pieces(self.alg)
        self.gminus, self.ambient = gminus_of(self.alg)
        self._pos_of_ambient = {amb: k for k, amb in enumerate(self.ambient)}
        self.unselected = [j + 1 for j, d in enumerate(self.alg.grading.degrees) if d == 0]

    # -- actor plumbing ----------------------------------------------------

    def _ad_on_gminus(self, actor_idx: int) -> SparseMat:
        out: SparseMat = {}
        for col, amb in enumerate(self.ambient):
            br = self.alg.bracket_basis(actor_idx, amb)
            col_out = {}
            for m, v in br.items():
                col_out[self._pos_of_ambient[m]] = v
            if col_out:
                out[col] = col_out
        return out

    def _actors_for(self, on_module) -> list[Actor]:
        """Cartan + unselected raise/lower actors; on_module maps ambient idx."""
        actors = []
        for i in range(self.rank):
            actors.append(Actor(f"h{i + 1}", "cartan", i, (0,) * self.rank, {}, {}))
        for j in self.unselected:
            k = self.rs.root_index[tuple(1 if t == j - 1 else 0 for t in range(self.rank))]
            for kind, amb, sgn in (
                ("raise", self.alg.x_index(k), 1),
                ("lower", self.alg.y_index(k), -1),
            ):
                w = self.alg.basis[amb].weight
                actors.append(Actor(
                    f"{'x' if sgn > 0 else 'y'}{j}", kind, j, w,
                    self._ad_on_gminus(amb), on_module(amb),
                ))
        return actors

    # -- modules -------------------------------------------------------------

    def adjoint_module(self) -> GradedModule:
        alg = self.alg
        order = sorted(range(alg.dim), key=lambda i: (alg.basis[i].degree, i))
        pos = {amb: k for k, amb in enumerate(order)}
        basis = [ModuleElt(_amb_label(alg, i), alg.basis[i].degree, alg.basis[i].weight)
                 for i in order]

        def mat_of(actor_amb: int) -> SparseMat:
            out: SparseMat = {}
            for col, amb in enumerate(order):
                br = alg.bracket_basis(actor_amb, amb)
                if br:
                    out[col] = {pos[m]: v for m, v in br.items()}
            return out

        act = [mat_of(amb) for amb in self.ambient]
        mod = GradedModule(self.gminus, basis, act, None,
                           self._actors_for(mat_of), name="adjoint")
        return mod

    def riemann_module(self) -> GradedModule:
        """g_- (+) l1 with the induced action (a p-submodule of the adjoint)."""
        alg = self.alg
        sub = sorted(self.levi.g_minus + self.levi.l1,
                     key=lambda i: (alg.basis[i].degree, i))
        pos = {amb: k for k, amb in enumerate(sub)}
        basis = [ModuleElt(_amb_label(alg, i), alg.basis[i].degree, alg.basis[i].weight)
                 for i in sub]

        def mat_of(actor_amb: int) -> SparseMat:
            out: SparseMat = {}
            for col, amb in enumerate(sub):
                br = alg.bracket_basis(actor_amb, amb)
                col_out = {}
                for m, v in br.items():
                    if m not in pos:
                        raise AssertionError("g_- + l1 is not closed under this actor")
                    col_out[pos[m]] = v
                if col_out:
                    out[col] = col_out
            return out

        return GradedModule(self.gminus, basis, [mat_of(a) for a in self.ambient],
                            None, self._actors_for(mat_of), name="riemann")

    def coriemann_module(self) -> GradedModule:
        """g/(g_- (+) l1), the quotient realization of (g_- (+) z)^*."""
        alg = self.alg
        pos_idx = [i for i, lab in enumerate(alg.basis) if lab.degree > 0]
        pos_idx.sort(key=lambda i: (alg.basis[i].degree, i))
        zbasis = self.levi.z
        basis = [ModuleElt(f"z{k}", 0, (0,) * self.rank) for k in range(len(zbasis))]
        basis += [ModuleElt(_amb_label(alg, i), alg.basis[i].degree, alg.basis[i].weight)
                  for i in pos_idx]
        pos_of = {amb: len(zbasis) + k for k, amb in enumerate(pos_idx)}

        # Cartan splits as l1-Cartan (unselected coroots) + z; build projector.
        unsel0 = [j - 1 for j in self.unselected]
        cart_cols = []  # columns: l1-coroots then z-basis
        for j in unsel0:
            cart_cols.append([Q(1) if i == j else Q(0) for i in range(self.rank)])
        for zel in zbasis:
            cart_cols.append([zel.get(i, Q(0)) for i in range(self.rank)])
        nz = len(zbasis)

        def project(vec: Element) -> dict[int, Fraction]:
            """Image of an ambient element in the quotient basis."""
            out: dict[int, Fraction] = {}
            cart_rhs = [Q(0)] * self.rank
            for amb, c in vec.items():
                lab = alg.basis[amb]
                if lab.kind == "h":
                    cart_rhs[lab.index] += c
                elif lab.degree > 0:
                    _acc(out, pos_of[amb], c)
                # negative-degree and degree-0 root vectors die in the quotient
            if any(x != 0 for x in cart_rhs):
                rows = [[cart_cols[c][i] for c in range(len(cart_cols))]
                        for i in range(self.rank)]
                sol = solve(rows, cart_rhs)
                assert sol is not None
                for k in range(nz):
                    _acc(out, k, sol[len(unsel0) + k])
            return out

        def mat_of(actor_amb: int) -> SparseMat:
            out: SparseMat = {}
            for col in range(len(basis)):
                if col < nz:
                    vec = dict(zbasis[col])
                else:
                    vec = {pos_idx[col - nz]: Q(1)}
                res: dict[int, Fraction] = {}
                for amb, c in vec.items():
                    for m, v in alg.bracket_basis(actor_amb, amb).items():
                        _acc(res, m, c * v)
                proj = project(res)
                if proj:
                    out[col] = proj
            return out

        return GradedModule(self.gminus, basis, [mat_of(a) for a in self.ambient],
                            None, self._actors_for(mat_of), name="coriemann")

    def trivial_module(self) -> GradedModule:
        basis = [ModuleElt("1", 0, (0,) * self.rank)]
        act: list[SparseMat] = [{} for _ in range(self.gminus.dim)]
        actors = self._actors_for(lambda amb: {})
        return GradedModule(self.gminus, basis, act, None, actors, name="trivial")

    def levi_g0(self):
        """The Levi l as a degree-0 acting algebra for prolongation."""
        from .prolong import G0

        alg = self.alg
        lidx = self.levi.l
        pos = {amb: k for k, amb in enumerate(lidx)}
        labels = [_amb_label(alg, i) for i in lidx]
        weights = [alg.basis[i].weight for i in lidx]
        act = [self._ad_on_gminus(i) for i in lidx]
        bracket: dict[tuple[int, int], dict[int, Fraction]] = {}
        for a in range(len(lidx)):
            for b in range(a + 1, len(lidx)):
                br = alg.bracket_basis(lidx[a], lidx[b])
                if br:
                    bracket[(a, b)] = {pos[m]: v for m, v in br.items()}
        return G0(labels, weights, act, bracket)


def _amb_label(alg: ZGradedLieAlgebra, i: int) -> str:
    lab = alg.basis[i]
    if lab.kind == "h":
        return f"h{lab.index + 1}"
    root = ",".join(str(c) for c in alg.rs.positive_roots[lab.index])
    return f"{lab.kind}[{root}]"


# -- irreducible highest weight modules -----------------------------------


class IrreducibleModule:
    """L(lambda) built by lowering with contravariant-form pruning."""

    def __init__(self, rs: RootSystem, hw_coroot: tuple[int, ...], dim_bound: int = 1000):
        self.rs = rs
        self.hw = tuple(int(c) for c in hw_coroot)
        if any(c < 0 for c in self.hw):
            raise ValueError(f"highest weight {self.hw} is not dominant")
        pred = weyl_dim(rs, self.hw)
        if pred.denominator != 1:
            raise AssertionError("Weyl dimension is not an integer")
        self.predicted_dim = int(pred)
        if self.predicted_dim > dim_bound:
            raise ValueError(
                f"predicted dimension {self.predicted_dim} exceeds bound {dim_bound}")
        self.weights: list[tuple[int, ...]] = []
        self.e_mat: list[SparseMat] = [{} for _ in range(rs.rank)]
        self.f_mat: list[SparseMat] = [{} for _ in range(rs.rank)]
        self._build()
        if len(self.weights) != self.predicted_dim:
            raise AssertionError(
                f"built dim {len(self.weights)} != Weyl dim {self.predicted_dim}")

    @property
    def dim(self) -> int:
        return len(self.weights)

    def _build(self):
        rs = self.rs
        n = rs.rank
        alpha_cw = [tuple(rs.cartan_matrix[i][j] for i in range(n)) for j in range(n)]
        self.weights = [self.hw]
        self._levels: dict[tuple, list[int]] = {self.hw: [0]}
        self._grams: dict[tuple, list[list[Fraction]]] = {self.hw: [[Q(1)]]}
        self._local: dict[int, int] = {0: 0}
        frontier = [self.hw]
        while frontier:
            cand: dict[tuple, list[tuple[int, int]]] = {}
            for mu in frontier:
                for j in range(n):
                    nu = tuple(m - a for m, a in zip(mu, alpha_cw[j]))
                    for b in self._levels[mu]:
                        cand.setdefault(nu, []).append((j, b))
            created = []
            for nu in sorted(cand):
                if nu in self._levels:
                    raise AssertionError("weight revisited; level order broken")
                pairs = sorted(cand[nu])
                gram = [[self._form_ff(j, b, j2, b2) for (j2, b2) in pairs]
                        for (j, b) in pairs]
                red = Reducer(len(pairs))
                chosen: list[int] = []
                for r, row in enumerate(gram):
                    if red.add(row):
                        chosen.append(r)
                if not chosen:
                    continue
                ids = []
                for t, r in enumerate(chosen):
                    self._local[len(self.weights)] = t
                    ids.append(len(self.weights))
                    self.weights.append(nu)
                self._levels[nu] = ids
                self._grams[nu] = [[gram[r][c] for c in chosen] for r in chosen]
                # f-action: each candidate (j, b) expressed in the chosen basis
                sub = self._grams[nu]
                for r, (j, b) in enumerate(pairs):
                    rhs = [gram[r][c] for c in chosen]
                    coords = solve(sub, rhs)
                    assert coords is not None
                    col = {ids[t]: c for t, c in enumerate(coords) if c != 0}
                    if col:
                        self.f_mat[j][b] = col
                # e-action on the new vectors: e_i(f_j v_b) = f_j(e_i v_b) + d_ij h_i v_b
                for t, r in enumerate(chosen):
                    j, b = pairs[r]
                    for i in range(n):
                        res: dict[int, Fraction] = {}
                        for m, v in self.e_mat[i].get(b, {}).items():
                            for row, w in self.f_mat[j].get(m, {}).items():
                                _acc(res, row, v * w)
                        if i == j:
                            hval = Q(self.weights[b][i])
                            if hval != 0:
                                _acc(res, b, hval)
                        if res:
                            self.e_mat[i][ids[t]] = res
                created.append(nu)
            frontier = created

    def _form_ff(self, j: int, b: int, j2: int, b2: int) -> Fraction:
        """<f_j v_b, f_{j2} v_{b2}> = <v_b, f_{j2}(e_j v_{b2}) + d_jj2 h_j v_{b2}>."""
        res: dict[int, Fraction] = {}
        for m, v in self.e_mat[j].get(b2, {}).items():
            for row, w in self.f_mat[j2].get(m, {}).items():
                _acc(res, row, v * w)
        if j == j2:
            _acc(res, b2, Q(self.weights[b2][j]))
        if not res:
            return Q(0)
        # pair <v_b, res> through the Gram matrix of b's weight space
        mu = self.weights[b]
        gram = self._grams[mu]
        lb = self._local[b]
        acc = Q(0)
        for m, v in res.items():
            if self.weights[m] != mu:
                raise AssertionError("contravariant form pairing across weights")
            acc += v * gram[lb][self._local[m]]
        return acc


def build_irreducible(rs: RootSystem, lam: Weight, dim_bound: int = 1000) -> IrreducibleModule:
    if lam.basis_tag != COROOT:
        raise ValueError("highest weight must be in coroot coordinates")
    return IrreducibleModule(rs, lam.ints(), dim_bound)


def abelian_negative(irr: IrreducibleModule, include_center: bool,
                     alg: ZGradedLieAlgebra) -> tuple[GradedNilpotent, GradedModule]:
    """Package V = L(lambda) as abelian g_{-1} with g_0 = g (+ optional center).

    Coefficients are V (degree -1) + g_0 (degree 0); the actors are the
    Chevalley generators of g (plus the center scalar), so cohomology can be
    decomposed into irreducible g_0-constituents.
    """
    rs = irr.rs
    n = rs.rank
    nil = abelian_nilpotent(irr.dim, weights=irr.weights)

    g_order = sorted(range(alg.dim), key=lambda i: (alg.basis[i].degree, i))
    gpos = {amb: k for k, amb in enumerate(g_order)}
    nV = irr.dim
    basis = [ModuleElt(f"v{k}", -1, irr.weights[k]) for k in range(nV)]
    basis += [ModuleElt(_amb_label(alg, i), 0, alg.basis[i].weight) for i in g_order]
    if include_center:
        basis.append(ModuleElt("z", 0, (0,) * n))

    def irr_action(amb: int) -> SparseMat:
        """Action of an ambient g-basis element on V, via Chevalley words."""
        lab = alg.basis[amb]
        if lab.kind == "h":
            return {k: {k: Q(w[lab.index])} for k, w in enumerate(irr.weights)
                    if w[lab.index] != 0}
        beta = rs.positive_roots[lab.index]
        if sum(beta) == 1:
            j = beta.index(1)
            return dict(irr.e_mat[j] if lab.kind == "x" else irr.f_mat[j])
        # non-simple root vector: peel one simple root off
        for j in range(n):
            down = tuple(b - (1 if t == j else 0) for t, b in enumerate(beta))
            if min(down) >= 0 and down in rs.root_index:
                break
        simple_amb = alg.x_index(rs.root_index[tuple(1 if t == j else 0 for t in range(n))])
        rest_amb = alg.x_index(rs.root_index[down])
        if lab.kind == "y":
            simple_amb = alg.y_index(rs.root_index[tuple(1 if t == j else 0 for t in range(n))])
            rest_amb = alg.y_index(rs.root_index[down])
        br = alg.bracket_basis(simple_amb, rest_amb)
        coeff = br[amb]
        m1, m2 = irr_action(simple_amb), irr_action(rest_amb)
        out: SparseMat = {}
        for col in range(nV):
            res: dict[int, Fraction] = {}
            for m, v in m2.get(col, {}).items():
                for row, w in m1.get(m, {}).items():
                    _acc(res, row, v * w)
            for m, v in m1.get(col, {}).items():
                for row, w in m2.get(m, {}).items():
                    _acc(res, row, -v * w)
            res = {r: v / coeff for r, v in res.items() if v != 0}
            if res:
                out[col] = res
        return out

    irr_acts = {amb: irr_action(amb) for amb in range(alg.dim)}

    def module_action_of(amb_or_z) -> SparseMat:
        """Action on V (+) g0 of one g-basis element (or the center scalar)."""
        out: SparseMat = {}
        if amb_or_z == "z":
            for k in range(nV):
                out[k] = {k: Q(1)}
            return out
        amb = amb_or_z
        for col, c in irr_acts[amb].items():
            out[col] = dict(c)
        for col, gamb in enumerate(g_order):
            br = alg.bracket_basis(amb, gamb)
            if br:
                out[nV + col] = {nV + gpos[m]: v for m, v in br.items()}
        return out

    # g_- action on the coefficients: v . (w (+) X (+) z) = -X(v) - z(v)
    act: list[SparseMat] = []
    for k in range(nV):
        mat: SparseMat = {}
        for col, gamb in enumerate(g_order):
            res = {row: -v for row, v in irr_acts[gamb].get(k, {}).items()}
            if res:
                mat[nV + col] = res
        if include_center:
            mat[nV + len(g_order)] = {k: Q(-1)}
        act.append(mat)

    actors: list[Actor] = []
    for i in range(n):
        actors.append(Actor(f"h{i + 1}", "cartan", i, (0,) * n, {}, {}))
    for j in range(n):
        simple = tuple(1 if t == j else 0 for t in range(n))
        for kind, amb in (("raise", alg.x_index(rs.root_index[simple])),
                          ("lower", alg.y_index(rs.root_index[simple]))):
            on_gm: SparseMat = {c: dict(r) for c, r in irr_acts[amb].items()}
            actors.append(Actor(f"{'x' if kind == 'raise' else 'y'}{j + 1}", kind,
                                j + 1, alg.basis[amb].weight, on_gm,
                                module_action_of(amb)))
    mod = GradedModule(nil, basis, act, None, actors,
                       name="abelian_negative" + ("+center" if include_center else ""))
    return nil, mod
