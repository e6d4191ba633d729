"""Z/2-graded complexes over a base category.

A complex ``M0 <-> M1`` with differentials ``d0: M0 -> M1`` and
``d1: M1 -> M0`` over representations of a quiver Q is the same thing as a
representation of a doubled quiver with relations: vertex ``(v, i)`` (index
``v + i*n``) carries ``M^i_v``, each arrow of Q appears once per layer, and
arrows ``d0_v: (v,0) -> (v,1)``, ``d1_v: (v,1) -> (v,0)`` carry the
differentials subject to

* ``d1_v d0_v = 0`` and ``d0_v d1_v = 0``;
* ``d0_t a = a' d0_s`` and ``d1_t a' = a d1_s`` (the differentials are
  morphisms of representations).

So the complex category reuses the bound-quiver engine for Hom spaces,
automorphisms, extensions and subobjects, and its isomorphism classes are
``Iso`` values whose dimension vector is ``(class of M0) + (class of M1)``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .backends import CategoryBackend, EnumeratedBackend, Iso, K0, k0_add
from .finfield import kernel_array, rank_array, row_space_array, rref_array
from .reps import BoundQuiver, Rep, make_rep

# (class of Im d0, class of Im d1, H^0, H^1): the data of a normal form
Invariants = tuple


def doubled_quiver(base: BoundQuiver) -> BoundQuiver:
    if base.relations:
        raise ValueError("the base quiver must be hereditary (no relations)")
    n = base.n_vertices
    m = len(base.arrows)
    arrows = [(s, t) for s, t in base.arrows]
    arrows += [(s + n, t + n) for s, t in base.arrows]
    arrows += [(v, v + n) for v in range(n)]
    arrows += [(v + n, v) for v in range(n)]
    d0 = lambda v: 2 * m + v  # noqa: E731
    d1 = lambda v: 2 * m + n + v  # noqa: E731
    rels = []
    for v in range(n):
        rels.append(((1, (d0(v), d1(v))),))
        rels.append(((1, (d1(v), d0(v))),))
    for a, (s, t) in enumerate(base.arrows):
        rels.append(((1, (a, d0(t))), (-1, (d0(s), m + a))))
        rels.append(((1, (m + a, d1(t))), (-1, (d1(s), a))))
    return BoundQuiver(2 * n, tuple(arrows), tuple(rels))


@dataclass(frozen=True, eq=False)
class Z2Complex:
    """Concrete complex: carriers ``m0``, ``m1`` and per-vertex differentials.

    ``d0[v]`` has shape ``(m1.dims[v], m0.dims[v])``; ``d1[v]`` the transpose
    shape. Construction rejects anything that is not a complex.
    """

    p: int
    arrows: tuple[tuple[int, int], ...]
    m0: Rep
    m1: Rep
    d0: tuple[np.ndarray, ...]
    d1: tuple[np.ndarray, ...]

    def __post_init__(self):
        p = self.p
        d0 = tuple(np.asarray(x, dtype=np.int64).reshape(b, a) % p for x, a, b in zip(self.d0, self.m0.dims, self.m1.dims))
        d1 = tuple(np.asarray(x, dtype=np.int64).reshape(a, b) % p for x, a, b in zip(self.d1, self.m0.dims, self.m1.dims))
        object.__setattr__(self, "d0", d0)
        object.__setattr__(self, "d1", d1)
        for v in range(len(d0)):
            if ((d1[v] @ d0[v]) % p).any() or ((d0[v] @ d1[v]) % p).any():
                raise ValueError(f"differentials do not compose to zero at vertex {v}")
        for a, (s, t) in enumerate(self.arrows):
            if ((d0[t] @ self.m0.maps[a] - self.m1.maps[a] @ d0[s]) % p).any():
                raise ValueError(f"d0 is not a morphism along arrow {a}")
            if ((d1[t] @ self.m1.maps[a] - self.m0.maps[a] @ d1[s]) % p).any():
                raise ValueError(f"d1 is not a morphism along arrow {a}")

    @property
    def n(self) -> int:
        return len(self.m0.dims)

    def dim(self) -> K0:
        return self.m0.dims + self.m1.dims

    def to_rep(self) -> Rep:
        return make_rep(self.dim(), self.m0.maps + self.m1.maps + self.d0 + self.d1, self.p)

    def shift(self) -> Z2Complex:
        """Swap the components and negate both differentials."""
        p = self.p
        return Z2Complex(p, self.arrows, self.m1, self.m0, tuple(-x % p for x in self.d1), tuple(-x % p for x in self.d0))

    def to_json(self) -> dict:
        return {
            "dims": [list(self.m0.dims), list(self.m1.dims)],
            "arrows": [list(a) for a in self.arrows],
            "m0": [x.tolist() for x in self.m0.maps],
            "m1": [x.tolist() for x in self.m1.maps],
            "d0": [x.tolist() for x in self.d0],
            "d1": [x.tolist() for x in self.d1],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


class ComplexBackend(EnumeratedBackend):
    """The category of Z/2-graded complexes over ``base``.

    Twisted products use the component-wise Euler form, so that is what
    ``euler_form`` returns here.
    """

    def __init__(self, base: CategoryBackend):
        super().__init__(doubled_quiver(base.engine.quiver), base.q, base.budget)
        self.base = base
        self.n = base.k0_rank
        self.arrows = base.engine.quiver.arrows
        self.descriptor = f"complexes({base.descriptor})"
        self._inv: dict = {}

    # K_0 data -----------------------------------------------------------------------

    def split(self, d: K0) -> tuple[K0, K0]:
        d = tuple(d)
        return d[: self.n], d[self.n :]

    def euler_form(self, x: K0, y: K0) -> int:
        x0, x1 = self.split(x)
        y0, y1 = self.split(y)
        return self.base.euler_form(x0, y0) + self.base.euler_form(x1, y1)

    cw_euler_form = euler_form

    # complexes <-> representations ---------------------------------------------------------

    def from_rep(self, rep: Rep) -> Z2Complex:
        n, m = self.n, len(self.arrows)
        m0 = make_rep(rep.dims[:n], rep.maps[:m], self.q)
        m1 = make_rep(rep.dims[n:], rep.maps[m : 2 * m], self.q)
        return Z2Complex(self.q, self.arrows, m0, m1, rep.maps[2 * m : 2 * m + n], rep.maps[2 * m + n :])

    def complex_of(self, c: Iso) -> Z2Complex:
        return self.from_rep(self.representative(c))

    def classify_complex(self, c: Z2Complex) -> Iso:
        return self.classify(c.to_rep())

    def make_complex(self, m0: Rep, m1: Rep, d0, d1) -> Z2Complex:
        return Z2Complex(self.q, self.arrows, m0, m1, tuple(d0), tuple(d1))

    def standard_complexes(self, x: Iso) -> tuple[Z2Complex, Z2Complex, Z2Complex, Z2Complex]:
        """(K_X, K*_X, C_X, C*_X)."""
        r = self.base.representative(x)
        z = self.base.engine.zero_rep((0,) * self.n)
        eye = tuple(np.eye(d, dtype=np.int64) for d in r.dims)
        zero = tuple(np.zeros((d, d), dtype=np.int64) for d in r.dims)
        none = tuple(np.zeros((0, d), dtype=np.int64) for d in r.dims)
        k = self.make_complex(r, r, eye, zero)
        ks = self.make_complex(r, r, zero, eye)
        c = self.make_complex(z, r, tuple(x.T for x in none), none)
        cs = self.make_complex(r, z, none, tuple(x.T for x in none))
        return k, ks, c, cs

    def direct_sum_complex(self, *cs: Z2Complex) -> Z2Complex:
        out = cs[0]
        for c in cs[1:]:
            out = self.from_rep(self.engine.direct_sum(out.to_rep(), c.to_rep()))
        return out

    def key_complex(self, alpha: K0, beta: K0, a: Iso, b: Iso) -> Z2Complex:
        """K_alpha + K*_beta + C*_A + C_B with semisimple carriers for alpha, beta."""
        base = self.base
        ka = self.standard_complexes(base.objects_of_class(alpha)[0])[0]
        kb = self.standard_complexes(base.objects_of_class(beta)[0])[1]
        return self.direct_sum_complex(ka, kb, self.standard_complexes(a)[3], self.standard_complexes(b)[2])

    # homology -------------------------------------------------------------------------------

    def _diff(self, c: Z2Complex, i: int):
        return (c.d0, c.m0, c.m1) if i == 0 else (c.d1, c.m1, c.m0)

    def image_class(self, c: Z2Complex, i: int) -> K0:
        d, _, _ = self._diff(c, i)
        return tuple(rank_array(x, self.q) if x.size else 0 for x in d)

    def homology_rep(self, c: Z2Complex, i: int) -> Rep:
        """ker d^i / Im d^(i-1) as a representation of the base quiver."""
        p = self.q
        eng = self.base.engine
        d, src, _ = self._diff(c, i)
        d_in, _, _ = self._diff(c, 1 - i)
        ker = tuple(_kernel(x, src.dims[v], p) for v, x in enumerate(d))
        ker_rep, _ = eng.sub_and_quotient(src, ker)
        img = []
        for v, x in enumerate(d_in):
            rows = row_space_array(x.T % p, p) if x.size else np.zeros((0, src.dims[v]), dtype=np.int64)
            piv = _pivots(ker[v], p)
            coords = rows[:, piv] if rows.shape[0] else np.zeros((0, len(piv)), dtype=np.int64)
            img.append(row_space_array(coords, p) if coords.size else np.zeros((0, len(piv)), dtype=np.int64))
        _, h = eng.sub_and_quotient(ker_rep, tuple(img))
        return h

    def homology(self, c: Z2Complex, i: int) -> Iso:
        return self.base.classify(self.homology_rep(c, i))

    def is_acyclic(self, c: Z2Complex) -> bool:
        return not any(self.homology_rep(c, 0).dims) and not any(self.homology_rep(c, 1).dims)

    def invariants(self, c: Z2Complex) -> Invariants:
        """(class Im d0, class Im d1, H^0, H^1)."""
        return (self.image_class(c, 0), self.image_class(c, 1), self.homology(c, 0), self.homology(c, 1))

    def invariants_of(self, x: Iso) -> Invariants:
        hit = self._inv.get(x)
        if hit is None:
            hit = self.invariants(self.complex_of(x))
            self._inv[x] = hit
        return hit

    def shift_class(self, x: Iso) -> Iso:
        return self.classify_complex(self.complex_of(x).shift())

    # enumeration and extensions -----------------------------------------------------------------

    def enumerate_complexes(self, bound: K0) -> list[Iso]:
        """All complex classes with both components within ``bound``."""
        return self.objects_up_to(tuple(bound) + tuple(bound))

    def extension_invariants(self, m: Rep, n: Rep) -> dict[Invariants, Fraction]:
        """Invariants of R -> summed h^R_{MN}, by cocycle counting.

        Middle terms are never classified as complexes, only their images
        and homology, so this scales past the enumerated truncation.
        """
        eng = self.engine
        reps, dim_b, offsets = eng.extension_data(m, n)
        denom = self.q ** sum(x * y for x, y in zip(m.dims, n.dims))
        counts: dict = {}
        for cocycle in reps:
            inv = self.invariants(self.from_rep(eng.middle_term(m, n, cocycle, offsets)))
            counts[inv] = counts.get(inv, 0) + 1
        scale = Fraction(self.q**dim_b, denom)
        return {k: v * scale for k, v in counts.items()}


def _kernel(x: np.ndarray, cols: int, p: int) -> np.ndarray:
    if x.shape[0] == 0:
        return np.eye(cols, dtype=np.int64)
    return row_space_array(kernel_array(x, p), p) if cols else np.zeros((0, 0), dtype=np.int64)


def _pivots(basis: np.ndarray, p: int) -> list[int]:
    if basis.shape[0] == 0:
        return []
    return rref_array(basis, p)[1]


def complex_class_data(backend: ComplexBackend, x: Iso) -> dict:
    """Debug summary of a complex class."""
    inv = backend.invariants_of(x)
    return {
        "class": x.label(),
        "components": [list(c) for c in backend.split(x.dim)],
        "image_d0": list(inv[0]),
        "image_d1": list(inv[1]),
        "H0": inv[2].label(),
        "H1": inv[3].label(),
        "complex": backend.complex_of(x).to_json(),
    }


def k0_components_sum(backend: ComplexBackend, inv: Invariants) -> K0:
    """Class in K_0 of the complex category determined by its invariants."""
    a0, a1, h0, h1 = inv
    c0 = k0_add(k0_add(a0, a1), h0.dim)
    c1 = k0_add(k0_add(a0, a1), h1.dim)
    return c0 + c1

