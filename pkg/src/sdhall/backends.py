"""Finitary hereditary F_q-linear categories.

Two concrete categories are provided behind one interface:

* ``VectBackend``: finite-dimensional F_q-vector spaces, answered by closed
  forms (Gaussian binomials, |GL_n|). It doubles as a golden oracle for
  the generic path.
* ``QuiverBackend``: F_q-representations of a small acyclic quiver, with
  isomorphism classes found by orbit enumeration.

Isomorphism classes are ``Iso(dim, index)``: the dimension vector (which is
also the class in K_0) and the position of the class among all classes of
that dimension vector, in a fixed enumeration order.
"""

from __future__ import annotations

import graphlib
import itertools
import json
from dataclasses import dataclass
from pathlib import Path
from typing import NamedTuple

from .finfield import gaussian_binomial, gl_order, is_prime
from .reps import DEFAULT_BUDGET, BoundQuiver, Classifier, Rep, RepEngine, make_rep

K0 = tuple  # integer vector of length k0_rank


class Iso(NamedTuple):
    """Canonical identifier of an isomorphism class of objects."""

    dim: tuple[int, ...]
    index: int = 0

    def label(self) -> str:
        if len(self.dim) == 1 and self.index == 0:
            return f"V{self.dim[0]}"
        return "(" + ",".join(map(str, self.dim)) + f")#{self.index}"

    def __repr__(self) -> str:
        return self.label()


def k0_add(x: K0, y: K0) -> K0:
    return tuple(a + b for a, b in zip(x, y))


def k0_sub(x: K0, y: K0) -> K0:
    return tuple(a - b for a, b in zip(x, y))


def k0_neg(x: K0) -> K0:
    return tuple(-a for a in x)


def k0_le(x: K0, y: K0) -> bool:
    return all(a <= b for a, b in zip(x, y))


def k0_nonneg(x: K0) -> bool:
    return all(a >= 0 for a in x)


def k0_box(bound: K0):
    """All effective classes componentwise <= bound."""
    return [tuple(c) for c in itertools.product(*(range(b + 1) for b in bound))]


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class QuiverSpec:
    """A finite acyclic quiver with 0-indexed vertices."""

    vertices: int
    arrows: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "arrows", tuple(tuple(int(x) for x in a) for a in self.arrows))
        for s, t in self.arrows:
            if not (0 <= s < self.vertices and 0 <= t < self.vertices):
                raise ConfigError(f"arrow ({s},{t}) references a missing vertex")
        sorter = graphlib.TopologicalSorter({v: set() for v in range(self.vertices)})
        for s, t in self.arrows:
            sorter.add(t, s)
        try:
            tuple(sorter.static_order())
        except graphlib.CycleError as exc:
            raise ConfigError("quiver is not acyclic") from exc

    @property
    def acyclic(self) -> bool:
        return True

    def bound_quiver(self) -> BoundQuiver:
        return BoundQuiver(self.vertices, self.arrows)

    @classmethod
    def from_json(cls, data: dict) -> tuple[QuiverSpec, int | None]:
        try:
            spec = cls(int(data["vertices"]), tuple(tuple(a) for a in data["arrows"]))
        except (KeyError, TypeError) as exc:
            raise ConfigError(f"malformed quiver file: {exc}") from exc
        return spec, data.get("q")

    @classmethod
    def load(cls, path: str | Path) -> tuple[QuiverSpec, int | None]:
        return cls.from_json(json.loads(Path(path).read_text()))

    def to_json(self, q: int | None = None) -> dict:
        out = {"vertices": self.vertices, "arrows": [list(a) for a in self.arrows]}
        if q is not None:
            out["q"] = q
        return out


A2 = QuiverSpec(2, ((0, 1),))


class CategoryBackend:
    """Interface shared by all backends; subclasses fill in the counting."""

    q: int
    k0_rank: int
    descriptor: str
    engine: RepEngine

    def __init__(self, q: int, budget: int = DEFAULT_BUDGET):
        if not is_prime(q):
            raise ConfigError(f"q={q} is not prime (only prime fields are supported)")
        self.q = q
        self.budget = budget
        self._subquot: dict = {}

    # objects ------------------------------------------------------------------

    @property
    def zero(self) -> Iso:
        return Iso((0,) * self.k0_rank, 0)

    def objects_of_class(self, d: K0) -> list[Iso]:
        raise NotImplementedError

    def objects_up_to(self, bound: K0) -> list[Iso]:
        bound = tuple(bound)
        if len(bound) != self.k0_rank or not k0_nonneg(bound):
            raise ConfigError(f"bound {bound} must be a nonnegative vector of length {self.k0_rank}")
        out = []
        for d in sorted(k0_box(bound), key=lambda c: (sum(c), c)):
            out.extend(self.objects_of_class(d))
        return out

    def class_of(self, m: Iso) -> K0:
        return m.dim

    def representative(self, m: Iso) -> Rep:
        raise NotImplementedError

    def classify(self, rep: Rep) -> Iso:
        raise NotImplementedError

    # counting --------------------------------------------------------------------

    def hom_dim(self, m: Iso, n: Iso) -> int:
        return self.engine.hom_dim(self.representative(m), self.representative(n))

    def hom_count(self, m: Iso, n: Iso) -> int:
        return self.q ** self.hom_dim(m, n)

    def aut_count(self, m: Iso) -> int:
        return self.engine.aut_count(self.representative(m))

    def euler_form(self, x: K0, y: K0) -> int:
        raise NotImplementedError

    def symmetric_form(self, x: K0, y: K0) -> int:
        return self.euler_form(x, y) + self.euler_form(y, x)

    def ext_dim(self, m: Iso, n: Iso) -> int:
        """dim Ext^1(m, n) from the hereditary identity dim Ext^1 = dim Hom - <m, n>."""
        return self.hom_dim(m, n) - self.euler_form(m.dim, n.dim)

    def sub_quotient_count(self, r: Iso, m: Iso, n: Iso) -> int:
        """Number of subobjects N' of R with N' = N and R/N' = M."""
        if k0_add(m.dim, n.dim) != r.dim:
            return 0
        key = (r, m, n)
        hit = self._subquot.get(key)
        if hit is None:
            hit = self._count_sub_quotient(r, m, n)
            self._subquot[key] = hit
        return hit

    def _count_sub_quotient(self, r: Iso, m: Iso, n: Iso) -> int:
        eng = self.engine
        rep = self.representative(r)
        count = 0
        for sub in eng.subreps(rep, n.dim):
            s, quo = eng.sub_and_quotient(rep, sub)
            if self.classify(s) == n and self.classify(quo) == m:
                count += 1
        return count

    def direct_sum(self, m: Iso, n: Iso) -> Iso:
        return self.classify(self.engine.direct_sum(self.representative(m), self.representative(n)))

    def simples(self) -> list[Iso]:
        out = []
        for v in range(self.k0_rank):
            d = tuple(int(i == v) for i in range(self.k0_rank))
            out.append(self.objects_of_class(d)[0])
        return out


class EnumeratedBackend(CategoryBackend):
    """Modules over a bound quiver, classified by building extensions.

    Every nonzero module has a simple submodule S_v (the bound quivers used
    here have finite-dimensional path algebras, so the vertex simples are
    the only simples). Hence every module of dimension vector d is a middle
    term of an extension of a module of class d - e_v by S_v, and running
    over one cocycle per Ext^1 class for every v and every class of
    d - e_v reaches all classes. Classes of a dimension vector are fixed the
    first time it is met, so indices are stable for the life of the backend.
    """

    def __init__(self, quiver: BoundQuiver, q: int, budget: int = DEFAULT_BUDGET):
        super().__init__(q, budget)
        self.k0_rank = quiver.n_vertices
        self.engine = RepEngine(quiver, q, budget)
        self._classes: dict[K0, Classifier] = {}

    def _classifier(self, d: K0) -> Classifier:
        d = tuple(d)
        cl = self._classes.get(d)
        if cl is None:
            if not k0_nonneg(d) or len(d) != self.k0_rank:
                raise ValueError(f"not an effective dimension vector: {d}")
            eng = self.engine
            cl = Classifier(eng)
            # the all-zero representative comes first so it gets index 0
            cl.classify(eng.zero_rep(d))
            for v, dv in enumerate(d):
                if not dv or sum(d) == 1:
                    continue
                ev = tuple(int(i == v) for i in range(len(d)))
                simple = eng.zero_rep(ev)
                for rest in self._classifier(k0_sub(d, ev)).reps:
                    cocycles, _, offsets = eng.extension_data(rest, simple)
                    for c in cocycles:
                        cl.classify(eng.middle_term(rest, simple, c, offsets))
            self._classes[d] = cl
        return cl

    def objects_of_class(self, d: K0) -> list[Iso]:
        return [Iso(tuple(d), i) for i in range(len(self._classifier(d)))]

    def representative(self, m: Iso) -> Rep:
        return self._classifier(m.dim).reps[m.index]

    def classify(self, rep: Rep) -> Iso:
        cl = self._classifier(rep.dims)
        idx = cl.lookup(rep)
        if idx is None:
            raise RuntimeError("representation missing from a complete enumeration")
        return Iso(rep.dims, idx)


class QuiverBackend(EnumeratedBackend):
    """Representations of an acyclic quiver over F_q."""

    def __init__(self, spec: QuiverSpec, q: int, budget: int = DEFAULT_BUDGET):
        super().__init__(spec.bound_quiver(), q, budget)
        self.spec = spec
        self.descriptor = f"quiver(n={spec.vertices},arrows={list(map(list, spec.arrows))},q={q})"

    def euler_form(self, x: K0, y: K0) -> int:
        return sum(a * b for a, b in zip(x, y)) - sum(x[s] * y[t] for s, t in self.spec.arrows)


class VectBackend(CategoryBackend):
    """Finite-dimensional vector spaces over F_q, via closed forms."""

    k0_rank = 1

    def __init__(self, q: int, budget: int = DEFAULT_BUDGET):
        super().__init__(q, budget)
        self.descriptor = f"vect(q={q})"
        self.engine = RepEngine(BoundQuiver(1, ()), q, budget)

    def objects_of_class(self, d: K0) -> list[Iso]:
        (n,) = d
        if n < 0:
            raise ValueError("negative dimension")
        return [Iso((n,), 0)]

    def representative(self, m: Iso) -> Rep:
        return make_rep(m.dim, (), self.q)

    def classify(self, rep: Rep) -> Iso:
        return Iso(tuple(rep.dims), 0)

    def hom_dim(self, m: Iso, n: Iso) -> int:
        return m.dim[0] * n.dim[0]

    def aut_count(self, m: Iso) -> int:
        return gl_order(m.dim[0], self.q)

    def euler_form(self, x: K0, y: K0) -> int:
        return x[0] * y[0]

    def _count_sub_quotient(self, r: Iso, m: Iso, n: Iso) -> int:
        return gaussian_binomial(r.dim[0], n.dim[0], self.q)

    def direct_sum(self, m: Iso, n: Iso) -> Iso:
        return Iso(k0_add(m.dim, n.dim), 0)


def make_backend(kind: str, q: int, quiver: QuiverSpec | None = None, budget: int = DEFAULT_BUDGET) -> CategoryBackend:
    if kind == "vect":
        return VectBackend(q, budget)
    if kind == "quiver":
        if quiver is None:
            raise ConfigError("quiver backend needs a quiver")
        return QuiverBackend(quiver, q, budget)
    raise ConfigError(f"unknown backend {kind!r}")
