"""Representations of finite quivers with relations over a prime field.

Both the base categories (vector spaces, representations of an acyclic
quiver) and the category of Z/2-graded complexes over them are module
categories of a bound quiver, so Hom spaces, isomorphism tests,
automorphism counts, extensions and subobjects are all computed here by
one piece of linear algebra.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from fractions import Fraction

from .finfield import (
    batch_invertible,
    complement_columns,
    enumerate_subspaces,
    inverse_array,
    kernel_array,
    rank_array,
    row_space_array,
    rref_array,
)


class BudgetError(RuntimeError):
    """An enumeration would exceed its configured size budget."""


DEFAULT_BUDGET = 1 << 16

Path = tuple[int, ...]
Relation = tuple[tuple[int, Path], ...]


@dataclass(frozen=True)
class BoundQuiver:
    """Quiver with linear relations.

    A path is a tuple of arrow indices in the order the arrows are applied.
    A relation ``((c1, path1), (c2, path2), ...)`` asserts that
    ``c1*path1 + c2*path2 + ... = 0``.
    """

    n_vertices: int
    arrows: tuple[tuple[int, int], ...]
    relations: tuple[Relation, ...] = ()

    def source(self, a: int) -> int:
        return self.arrows[a][0]

    def target(self, a: int) -> int:
        return self.arrows[a][1]

    @cached_property
    def length_two_paths(self) -> tuple[Path, ...]:
        return tuple(
            (a, b)
            for a, (_, t) in enumerate(self.arrows)
            for b, (s, _) in enumerate(self.arrows)
            if s == t
        )


@dataclass(frozen=True, eq=False)
class Rep:
    """A representation: a dimension per vertex and a matrix per arrow.

    The matrix of arrow ``a: s -> t`` has shape ``(dims[t], dims[s])`` and
    acts on column vectors.
    """

    dims: tuple[int, ...]
    maps: tuple[np.ndarray, ...]

    @cached_property
    def key(self) -> bytes:
        parts = [bytes(self.dims)]
        parts.extend(m.astype(np.int8).tobytes() for m in self.maps)
        return b"|".join(parts)

    def __eq__(self, other) -> bool:
        return isinstance(other, Rep) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    @property
    def total_dim(self) -> int:
        return sum(self.dims)


def _freeze(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a, dtype=np.int64)
    a.setflags(write=False)
    return a


def make_rep(dims, maps, p: int) -> Rep:
    return Rep(tuple(int(d) for d in dims), tuple(_freeze(np.asarray(m, dtype=np.int64) % p) for m in maps))


@dataclass
class RepEngine:
    """Linear algebra for representations of ``quiver`` over F_p."""

    quiver: BoundQuiver
    p: int
    budget: int = DEFAULT_BUDGET
    _hom_cache: dict = field(default_factory=dict, repr=False)
    _aut_cache: dict = field(default_factory=dict, repr=False)

    # basic constructions ------------------------------------------------------

    def zero_rep(self, dims) -> Rep:
        dims = tuple(dims)
        maps = [np.zeros((dims[t], dims[s]), dtype=np.int64) for s, t in self.quiver.arrows]
        return make_rep(dims, maps, self.p)

    def path_matrix(self, rep: Rep, path: Path) -> np.ndarray:
        if not path:
            raise ValueError("empty path")
        out = rep.maps[path[0]]
        for a in path[1:]:
            out = (rep.maps[a] @ out) % self.p
        return out

    def satisfies_relations(self, rep: Rep) -> bool:
        for rel in self.quiver.relations:
            total = None
            for c, path in rel:
                m = (c * self.path_matrix(rep, path)) % self.p
                total = m if total is None else (total + m) % self.p
            if total is not None and total.any():
                return False
        return True

    def direct_sum(self, m: Rep, n: Rep) -> Rep:
        dims = tuple(a + b for a, b in zip(m.dims, n.dims))
        maps = []
        for a, (s, t) in enumerate(self.quiver.arrows):
            block = np.zeros((dims[t], dims[s]), dtype=np.int64)
            block[: m.dims[t], : m.dims[s]] = m.maps[a]
            block[m.dims[t] :, m.dims[s] :] = n.maps[a]
            maps.append(block)
        return make_rep(dims, maps, self.p)

    def transport(self, rep: Rep, g: tuple[np.ndarray, ...]) -> Rep:
        """The representation ``g . rep`` obtained by base change ``g_v``."""
        p = self.p
        ginv = [inverse_array(x, p) for x in g]
        maps = [(g[t] @ rep.maps[a] @ ginv[s]) % p for a, (s, t) in enumerate(self.quiver.arrows)]
        return make_rep(rep.dims, maps, p)

    # morphisms ------------------------------------------------------------------

    def _hom_system(self, m: Rep, n: Rep) -> np.ndarray:
        """Matrix whose kernel is Hom(m, n), unknowns f_v flattened row-major."""
        p = self.p
        offsets = [0]
        for v in range(self.quiver.n_vertices):
            offsets.append(offsets[-1] + n.dims[v] * m.dims[v])
        blocks = []
        for a, (s, t) in enumerate(self.quiver.arrows):
            rows = n.dims[t] * m.dims[s]
            if rows == 0:
                continue
            block = np.zeros((rows, offsets[-1]), dtype=np.int64)
            # n_a f_s - f_t m_a = 0
            if n.dims[s] * m.dims[s]:
                block[:, offsets[s] : offsets[s + 1]] += np.kron(n.maps[a], np.eye(m.dims[s], dtype=np.int64))
            if n.dims[t] * m.dims[t]:
                block[:, offsets[t] : offsets[t + 1]] -= np.kron(np.eye(n.dims[t], dtype=np.int64), m.maps[a].T)
            blocks.append(block % p)
        if not blocks:
            return np.zeros((0, offsets[-1]), dtype=np.int64)
        return np.vstack(blocks)

    def hom_basis(self, m: Rep, n: Rep) -> np.ndarray:
        """Basis of Hom(m, n) as rows of flattened vertex matrices."""
        key = (m.key, n.key)
        cached = self._hom_cache.get(key)
        if cached is None:
            system = self._hom_system(m, n)
            total = system.shape[1]
            if total == 0:
                cached = np.zeros((0, 0), dtype=np.int64)
            else:
                cached = kernel_array(system, self.p)
            cached = _freeze(cached)
            self._hom_cache[key] = cached
        return cached

    def hom_dim(self, m: Rep, n: Rep) -> int:
        return self.hom_basis(m, n).shape[0]

    def unflatten(self, m: Rep, n: Rep, vec: np.ndarray) -> tuple[np.ndarray, ...]:
        out = []
        pos = 0
        for v in range(self.quiver.n_vertices):
            size = n.dims[v] * m.dims[v]
            out.append(np.asarray(vec[pos : pos + size]).reshape(n.dims[v], m.dims[v]))
            pos += size
        return tuple(out)

    def _span(self, basis: np.ndarray) -> np.ndarray:
        """All F_p-combinations of the rows of ``basis``."""
        k = basis.shape[0]
        if self.p**k > self.budget:
            raise BudgetError(f"span of dimension {k} over F_{self.p} exceeds budget")
        coeffs = np.array(list(itertools.product(range(self.p), repeat=k)), dtype=np.int64).reshape(-1, k)
        return (coeffs @ basis) % self.p

    def _invertible_mask(self, dims: tuple[int, ...], elems: np.ndarray) -> np.ndarray:
        ok = np.ones(elems.shape[0], dtype=bool)
        pos = 0
        for d in dims:
            size = d * d
            if d:
                mats = elems[:, pos : pos + size].reshape(-1, d, d)
                ok &= batch_invertible(mats, self.p)
            pos += size
        return ok

    def aut_count(self, m: Rep) -> int:
        """|Aut(m)|: enumeration of End(m) when it fits the budget, else Krull-Schmidt.

        With m = sum X_i^{m_i} and End(X_i)/rad = F_{Q_i}, End(m)/rad is the
        product of the matrix rings M_{m_i}(F_{Q_i}), so
        |Aut(m)| = |End(m)| * prod_i prod_{j=1..m_i} (1 - Q_i^{-j}).
        """
        cached = self._aut_cache.get(m.key)
        if cached is None:
            basis = self.hom_basis(m, m)
            if basis.shape[1] == 0:
                cached = 1
            elif self.p ** basis.shape[0] <= self.budget:
                cached = int(self._invertible_mask(m.dims, self._span(basis)).sum())
            else:
                cached = self._aut_count_split(m, basis.shape[0])
            self._aut_cache[m.key] = cached
        return cached

    def _aut_count_split(self, m: Rep, end_dim: int) -> int:
        groups: list[list] = []  # [representative, multiplicity]
        for x in self.indecomposable_summands(m):
            for g in groups:
                if self.is_iso(x, g[0]):
                    g[1] += 1
                    break
            else:
                groups.append([x, 1])
        total = Fraction(self.p**end_dim)
        for x, mult in groups:
            e = self.hom_dim(x, x)
            if self.p**e > self.budget:
                raise BudgetError(f"endomorphism ring of dimension {e} over F_{self.p} exceeds budget")
            rad = self.p**e - self.aut_count(x)
            d = e - _exact_log(rad, self.p)
            big_q = self.p**d
            for j in range(1, mult + 1):
                total *= Fraction(big_q**j - 1, big_q**j)
        return int(total)

    def indecomposable_summands(self, m: Rep, trials: int = 64) -> list[Rep]:
        """Split m by Fitting decompositions m = ker f^N + im f^N of endomorphisms f.

        A representation is indecomposable iff every endomorphism is
        nilpotent or invertible, so small End rings are searched
        exhaustively and large ones by ``trials`` seeded random draws.
        """
        basis = self.hom_basis(m, m)
        k = basis.shape[0]
        if k <= 1 or m.total_dim <= 1:
            return [m]
        if self.p**k <= self.budget:
            elems = self._span(basis)
        else:
            rng = np.random.default_rng(k)
            elems = (rng.integers(0, self.p, size=(trials, k)) @ basis) % self.p
        n = m.total_dim
        for vec in elems:
            f = self.unflatten(m, m, vec)
            fn = list(f)
            for _ in range(n.bit_length()):  # f^(2^b) with 2^b > n
                fn = [(x @ x) % self.p if x.size else x for x in fn]
            ker = tuple(kernel_array(x, self.p) if x.size else np.zeros((0, x.shape[1]), dtype=np.int64) for x in fn)
            kdim = sum(u.shape[0] for u in ker)
            if 0 < kdim < n:
                img = tuple(row_space_array(x.T, self.p) if x.size else np.zeros((0, x.shape[0]), dtype=np.int64) for x in fn)
                left = self.sub_and_quotient(m, ker)[0]
                right = self.sub_and_quotient(m, img)[0]
                return self.indecomposable_summands(left, trials) + self.indecomposable_summands(right, trials)
        return [m]

    def find_isomorphism(self, m: Rep, n: Rep, rng: np.random.Generator | None = None):
        """An isomorphism m -> n as vertex matrices, or None."""
        if m.dims != n.dims:
            return None
        if m.key == n.key:
            return tuple(np.eye(d, dtype=np.int64) for d in m.dims)
        basis = self.hom_basis(m, n)
        if basis.shape[1] == 0:
            return ()
        k = basis.shape[0]
        if k == 0:
            return None
        if self.p**k > 64:
            rng = rng or np.random.default_rng(k)
            sample = (rng.integers(0, self.p, size=(64, k)) @ basis) % self.p
            mask = self._invertible_mask(m.dims, sample)
            if mask.any():
                return self.unflatten(m, n, sample[int(np.argmax(mask))])
        elems = self._span(basis)
        mask = self._invertible_mask(m.dims, elems)
        if mask.any():
            return self.unflatten(m, n, elems[int(np.argmax(mask))])
        return None

    def is_iso(self, m: Rep, n: Rep) -> bool:
        """Isomorphism test that stays within budget for large Hom spaces.

        Hom dimensions rule out most pairs; a seeded random search finds
        most isomorphisms; otherwise small Hom spaces are searched
        exhaustively and large ones are settled by comparing
        indecomposable summands, whose Hom spaces are small.
        """
        if m.dims != n.dims:
            return False
        if m.key == n.key:
            return True
        k = self.hom_dim(m, n)
        if k != self.hom_dim(m, m) or k != self.hom_dim(n, n) or k != self.hom_dim(n, m):
            return False
        if self.p**k <= self.budget:
            return self.find_isomorphism(m, n) is not None
        basis = self.hom_basis(m, n)
        sample = (np.random.default_rng(k).integers(0, self.p, size=(64, k)) @ basis) % self.p
        if self._invertible_mask(m.dims, sample).any():
            return True
        left, right = self.indecomposable_summands(m), self.indecomposable_summands(n)
        if len(left) != len(right):
            return False
        if len(left) == 1:
            raise BudgetError(f"isomorphism test between indecomposables with Hom of dimension {k}")
        unmatched = list(right)
        for x in left:
            hit = next((i for i, y in enumerate(unmatched) if self.is_iso(x, y)), None)
            if hit is None:
                return False
            unmatched.pop(hit)
        return True

    # invariants and classification ------------------------------------------------

    def signature(self, rep: Rep) -> tuple:
        p = self.p
        ranks = tuple(rank_array(x, p) for x in rep.maps)
        paths = tuple(rank_array(self.path_matrix(rep, path), p) for path in self.quiver.length_two_paths)
        return (rep.dims, ranks, paths, self.hom_dim(rep, rep))

    # extensions ------------------------------------------------------------------

    def _cochain_offsets(self, m: Rep, n: Rep) -> list[int]:
        offsets = [0]
        for s, t in self.quiver.arrows:
            offsets.append(offsets[-1] + n.dims[t] * m.dims[s])
        return offsets

    def cocycle_basis(self, m: Rep, n: Rep) -> tuple[np.ndarray, list[int]]:
        """Cocycles c = (c_a: m_s -> n_t) making [[n_a, c_a], [0, m_a]] satisfy the relations."""
        p = self.p
        q = self.quiver
        offsets = self._cochain_offsets(m, n)
        total = offsets[-1]
        rows = []
        for rel in q.relations:
            s0 = q.source(rel[0][1][0])
            t0 = q.target(rel[0][1][-1])
            size = n.dims[t0] * m.dims[s0]
            if size == 0:
                continue
            block = np.zeros((size, total), dtype=np.int64)
            for c, path in rel:
                for i, a in enumerate(path):
                    s, t = q.arrows[a]
                    left = np.eye(n.dims[t], dtype=np.int64)
                    for b in path[i + 1 :]:
                        left = (n.maps[b] @ left) % p
                    right = np.eye(m.dims[s0], dtype=np.int64)
                    for b in path[:i]:
                        right = (m.maps[b] @ right) % p
                    if n.dims[t] * m.dims[s]:
                        block[:, offsets[a] : offsets[a + 1]] += c * np.kron(left, right.T)
            rows.append(block % p)
        if total == 0:
            return np.zeros((0, 0), dtype=np.int64), offsets
        if not rows:
            return np.eye(total, dtype=np.int64), offsets
        return kernel_array(np.vstack(rows), p), offsets

    def coboundary_basis(self, m: Rep, n: Rep) -> np.ndarray:
        """Row space of the coboundaries g -> (n_a g_s - g_t m_a)."""
        p = self.p
        offsets = self._cochain_offsets(m, n)
        goff = [0]
        for v in range(self.quiver.n_vertices):
            goff.append(goff[-1] + n.dims[v] * m.dims[v])
        if offsets[-1] == 0 or goff[-1] == 0:
            return np.zeros((0, offsets[-1]), dtype=np.int64)
        delta = np.zeros((offsets[-1], goff[-1]), dtype=np.int64)
        for a, (s, t) in enumerate(self.quiver.arrows):
            r0, r1 = offsets[a], offsets[a + 1]
            if r0 == r1:
                continue
            if n.dims[s] * m.dims[s]:
                delta[r0:r1, goff[s] : goff[s + 1]] += np.kron(n.maps[a], np.eye(m.dims[s], dtype=np.int64))
            if n.dims[t] * m.dims[t]:
                delta[r0:r1, goff[t] : goff[t + 1]] -= np.kron(np.eye(n.dims[t], dtype=np.int64), m.maps[a].T)
        r, piv = rref_array(delta.T % p, p)
        return r[: len(piv)]

    def extension_data(self, m: Rep, n: Rep):
        """Representatives of Ext^1(m, n) together with dim of the coboundary space.

        Returns ``(reps, dim_b, offsets)`` where ``reps`` runs over one cocycle
        per class of Ext^1(m, n) (so ``len(reps) == |Ext^1(m, n)|``).
        """
        p = self.p
        z, offsets = self.cocycle_basis(m, n)
        b = self.coboundary_basis(m, n)
        dim_b = b.shape[0]
        if z.shape[0] == dim_b:
            return np.zeros((1, offsets[-1]), dtype=np.int64), dim_b, offsets
        # complement of B inside Z: reduce Z against B, keep independent rows
        stacked = np.vstack([b, z]) if dim_b else z
        _, piv = rref_array(stacked.T % p, p)
        extra = [z[i - dim_b] for i in piv if i >= dim_b]
        comp = np.array(extra, dtype=np.int64)
        return self._span(comp), dim_b, offsets

    def middle_term(self, m: Rep, n: Rep, cocycle: np.ndarray, offsets: list[int]) -> Rep:
        """The extension 0 -> n -> R -> m -> 0 defined by ``cocycle`` (n first in each R_v)."""
        dims = tuple(a + b for a, b in zip(n.dims, m.dims))
        maps = []
        for a, (s, t) in enumerate(self.quiver.arrows):
            block = np.zeros((dims[t], dims[s]), dtype=np.int64)
            block[: n.dims[t], : n.dims[s]] = n.maps[a]
            block[n.dims[t] :, n.dims[s] :] = m.maps[a]
            block[: n.dims[t], n.dims[s] :] = np.asarray(cocycle[offsets[a] : offsets[a + 1]]).reshape(n.dims[t], m.dims[s])
            maps.append(block)
        return make_rep(dims, maps, self.p)

    # subobjects ----------------------------------------------------------------------

    def subreps(self, rep: Rep, dims) -> list[tuple[np.ndarray, ...]]:
        """All subrepresentations of ``rep`` of dimension vector ``dims``.

        Each is a tuple of RREF bases (rows) of the subspaces U_v.
        """
        q = self.quiver
        p = self.p
        n = q.n_vertices
        count = 1
        from .finfield import gaussian_binomial

        for v in range(n):
            count *= gaussian_binomial(rep.dims[v], dims[v], p)
        if count > self.budget:
            raise BudgetError("subrepresentation enumeration exceeds budget")
        choices = [enumerate_subspaces(rep.dims[v], dims[v], p) for v in range(n)]
        checks: dict[int, list[int]] = {v: [] for v in range(n)}
        for a, (s, t) in enumerate(q.arrows):
            checks[max(s, t)].append(a)
        out = []
        current: list[np.ndarray | None] = [None] * n

        def closed(a: int) -> bool:
            s, t = q.arrows[a]
            us, ut = current[s], current[t]
            if us.shape[0] == 0:
                return True
            img = (us @ rep.maps[a].T) % p
            if not img.any():
                return True
            return rank_array(np.vstack([ut, img]), p) == ut.shape[0]

        def rec(v: int):
            if v == n:
                out.append(tuple(current))
                return
            for u in choices[v]:
                current[v] = u
                if all(closed(a) for a in checks[v]):
                    rec(v + 1)
            current[v] = None

        rec(0)
        return out

    def sub_and_quotient(self, rep: Rep, sub: tuple[np.ndarray, ...]) -> tuple[Rep, Rep]:
        p = self.p
        pivots = []
        comps = []
        for v, u in enumerate(sub):
            piv = rref_array(u, p)[1] if u.shape[0] else []
            pivots.append(list(piv))
            comps.append(complement_columns(u, rep.dims[v], p))
        sub_maps = []
        quo_maps = []
        for a, (s, t) in enumerate(self.quiver.arrows):
            us, ut = sub[s], sub[t]
            img = (us @ rep.maps[a].T) % p  # rows: images of basis of U_s
            sub_maps.append(img[:, pivots[t]].T if us.shape[0] else np.zeros((ut.shape[0], 0), dtype=np.int64))
            w = rep.maps[a][:, comps[s]].T % p  # rows: images of complement basis
            if ut.shape[0] and w.size:
                w = (w - w[:, pivots[t]] @ ut) % p
            quo_maps.append(w[:, comps[t]].T if w.size else np.zeros((len(comps[t]), len(comps[s])), dtype=np.int64))
        sub_rep = make_rep(tuple(u.shape[0] for u in sub), sub_maps, p)
        quo_rep = make_rep(tuple(len(c) for c in comps), quo_maps, p)
        return sub_rep, quo_rep

    # enumeration ------------------------------------------------------------------------

    def all_reps(self, dims) -> list[Rep]:
        """Every representation of dimension vector ``dims`` satisfying the relations."""
        dims = tuple(dims)
        q = self.quiver
        shapes = [(dims[t], dims[s]) for s, t in q.arrows]
        n_entries = sum(r * c for r, c in shapes)
        if self.p**n_entries > self.budget:
            raise BudgetError(f"{self.p}^{n_entries} representations of {dims} exceed budget")
        out = []
        for values in itertools.product(range(self.p), repeat=n_entries):
            pos = 0
            maps = []
            for r, c in shapes:
                maps.append(np.array(values[pos : pos + r * c], dtype=np.int64).reshape(r, c))
                pos += r * c
            rep = make_rep(dims, maps, self.p)
            if self.satisfies_relations(rep):
                out.append(rep)
        return out


def _exact_log(x: int, p: int) -> int:
    k = 0
    while x % p == 0:
        x //= p
        k += 1
    if x != 1:
        raise ValueError("radical size is not a power of p")
    return k


class Classifier:
    """Assigns stable integer ids to isomorphism classes as they are met."""

    def __init__(self, engine: RepEngine):
        self.engine = engine
        self.reps: list[Rep] = []
        self._by_sig: dict[tuple, list[int]] = {}
        self._by_key: dict[bytes, int] = {}

    def __len__(self) -> int:
        return len(self.reps)

    def lookup(self, rep: Rep) -> int | None:
        hit = self._by_key.get(rep.key)
        if hit is not None:
            return hit
        sig = self.engine.signature(rep)
        for idx in self._by_sig.get(sig, ()):
            if self.engine.is_iso(rep, self.reps[idx]):
                self._by_key[rep.key] = idx
                return idx
        return None

    def classify(self, rep: Rep) -> int:
        idx = self.lookup(rep)
        if idx is not None:
            return idx
        idx = len(self.reps)
        self.reps.append(rep)
        self._by_sig.setdefault(self.engine.signature(rep), []).append(idx)
        self._by_key[rep.key] = idx
        return idx
