"""Ringel-Hall algebra, twisted product, Green's coproduct and identity checks.

Structure constants are ``h^R_{MN} = |Ext^1(M,N)_R| / |Hom(M,N)|``: the
number of ways to build R as an extension with subobject N and quotient M,
normalised so that ``[M]*[N] = sum_R h^R_{MN} [R]``.

Two independent counting chains are implemented:

* ``hall_number`` converts the filtration count F^R_{MN} (subobjects of R
  isomorphic to N with quotient M) by ``h = F * a_M * a_N / a_R``.
* ``hall_number_direct`` counts cocycles: extensions are block-triangular
  representations ``[[n_a, c_a], [0, m_a]]``; summing over one cocycle per
  class of Ext^1 (each class has |B| cocycles, |B| the coboundary space)
  gives ``h = |B| * #{classes with middle term R} / q^(sum_v m_v n_v)``,
  because ``|Hom(M,N)| * |B| = q^(sum_v m_v n_v)``.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .backends import CategoryBackend, Iso, K0, k0_add, k0_box, k0_le, k0_sub
from .coefficients import QSqrt, vpow
from .report import Report, TruncationError

HallElement = dict  # Iso -> QSqrt, zero coefficients never stored


def _clean(d: dict) -> dict:
    return {k: v for k, v in d.items() if v}


class HallAlgebra:
    """The Hall algebra H(A) and its twist H_tw(A) over a backend."""

    def __init__(self, backend: CategoryBackend, bound: K0 | None = None):
        self.backend = backend
        self.q = backend.q
        self.bound = tuple(bound) if bound is not None else None
        self._h: dict = {}
        self._hd: dict = {}
        self._ext: dict = {}
        self._dec: dict = {}
        # fault injection: (M, N, R) -> Fraction overriding h
        self.overrides: dict = {}

    # basic numbers ---------------------------------------------------------------

    def a(self, m: Iso) -> int:
        return self.backend.aut_count(m)

    def euler(self, x, y) -> int:
        return self.backend.euler_form(_cls(x), _cls(y))

    def sym(self, x, y) -> int:
        return self.backend.symmetric_form(_cls(x), _cls(y))

    def objects_of_class(self, d: K0) -> list[Iso]:
        return self.backend.objects_of_class(d)

    def h(self, m: Iso, n: Iso, r: Iso) -> Fraction:
        """h^R_{MN} as an exact rational (filtration-count route)."""
        if self.overrides:
            hit = self.overrides.get((m, n, r))
            if hit is not None:
                return Fraction(hit)
        key = (m, n, r)
        val = self._h.get(key)
        if val is None:
            b = self.backend
            if k0_add(m.dim, n.dim) != r.dim:
                val = Fraction(0)
            else:
                f = b.sub_quotient_count(r, m, n)
                val = Fraction(f * b.aut_count(m) * b.aut_count(n), b.aut_count(r)) if f else Fraction(0)
            self._h[key] = val
        return val

    def hall_number(self, m: Iso, n: Iso, r: Iso) -> QSqrt:
        return QSqrt(self.h(m, n, r), 0, self.q)

    def extension_distribution(self, m: Iso, n: Iso) -> dict[Iso, Fraction]:
        """R -> h^R_{MN} for all R, by cocycle counting."""
        key = (m, n)
        hit = self._ext.get(key)
        if hit is None:
            b = self.backend
            eng = b.engine
            mr, nr = b.representative(m), b.representative(n)
            reps, dim_b, offsets = eng.extension_data(mr, nr)
            denom = self.q ** sum(x * y for x, y in zip(mr.dims, nr.dims))
            counts: dict[Iso, int] = {}
            for c in reps:
                r = b.classify(eng.middle_term(mr, nr, c, offsets))
                counts[r] = counts.get(r, 0) + 1
            hit = {r: Fraction(cnt * self.q**dim_b, denom) for r, cnt in counts.items()}
            self._ext[key] = hit
        return hit

    def hall_number_direct(self, m: Iso, n: Iso, r: Iso) -> QSqrt:
        return QSqrt(self.extension_distribution(m, n).get(r, Fraction(0)), 0, self.q)

    def middle_terms(self, m: Iso, n: Iso) -> dict[Iso, Fraction]:
        """Nonzero h^R_{MN}, R ranging over the class of M + N."""
        if self.overrides:
            out = {r: self.h(m, n, r) for r in self.objects_of_class(k0_add(m.dim, n.dim))}
            return {r: v for r, v in out.items() if v}
        key = ("mid", m, n)
        hit = self._h.get(key)
        if hit is None:
            out = {r: self.h(m, n, r) for r in self.objects_of_class(k0_add(m.dim, n.dim))}
            hit = {r: v for r, v in out.items() if v}
            self._h[key] = hit
        return hit

    def decompositions(self, r: Iso) -> list[tuple[Iso, Iso, Fraction]]:
        """All (M, N, h^R_{MN}) with h nonzero."""
        if not self.overrides:
            hit = self._dec.get(r)
            if hit is not None:
                return hit
        out = []
        for dm in k0_box(r.dim):
            dn = k0_sub(r.dim, dm)
            for m in self.objects_of_class(dm):
                for n in self.objects_of_class(dn):
                    v = self.h(m, n, r)
                    if v:
                        out.append((m, n, v))
        if not self.overrides:
            self._dec[r] = out
        return out

    def iterated(self, ms: list[Iso] | tuple[Iso, ...], k: Iso) -> Fraction:
        """h^K_{M1 M2 ... Mn}: h^K_{M1 T} h^T_{M2...Mn} summed over T."""
        ms = tuple(ms)
        if len(ms) == 0:
            return Fraction(int(k == self.backend.zero))
        if len(ms) == 1:
            return Fraction(int(ms[0] == k))
        if len(ms) == 2:
            return self.h(ms[0], ms[1], k)
        rest_cls = ms[1].dim
        for x in ms[2:]:
            rest_cls = k0_add(rest_cls, x.dim)
        if k0_add(ms[0].dim, rest_cls) != k.dim:
            return Fraction(0)
        total = Fraction(0)
        for t in self.objects_of_class(rest_cls):
            ht = self.h(ms[0], t, k)
            if ht:
                total += ht * self.iterated(ms[1:], t)
        return total

    def iterated_hall_number(self, ms, k: Iso) -> QSqrt:
        if len(ms) < 2:
            raise ValueError("iterated Hall numbers need at least two objects")
        return QSqrt(self.iterated(ms, k), 0, self.q)

    def iterated_decompositions(self, x: Iso, length: int) -> list[tuple[tuple[Iso, ...], Fraction]]:
        """All (M1, ..., Mn) with h^X_{M1...Mn} nonzero, with that value."""
        if length == 1:
            return [((x,), Fraction(1))]
        out = []
        for m1, t, h1 in self.decompositions(x):
            for rest, h2 in self.iterated_decompositions(t, length - 1):
                out.append(((m1,) + rest, h1 * h2))
        merged: dict = {}
        for key, v in out:
            merged[key] = merged.get(key, 0) + v
        return [(k, v) for k, v in merged.items() if v]

    # algebra operations ------------------------------------------------------------

    def basis(self, m: Iso) -> HallElement:
        return {m: QSqrt.one(self.q)}

    def _check_bound(self, r: Iso) -> None:
        if self.bound is not None and not k0_le(r.dim, self.bound):
            raise TruncationError(f"class {r.dim} exceeds bound {self.bound}")

    def product(self, x: HallElement, y: HallElement, twisted: bool = True) -> HallElement:
        out: dict = {}
        for m, cm in x.items():
            for n, cn in y.items():
                c = cm * cn
                if twisted:
                    c = c * vpow(self.euler(m, n), self.q)
                for r, h in self.middle_terms(m, n).items():
                    self._check_bound(r)
                    out[r] = out.get(r, 0) + c * h
        return _clean(out)

    def green_coproduct(self, x: HallElement) -> dict:
        """Delta([R]) = sum v^<M,N> h^R_{MN} a_R/(a_M a_N) [M] (x) [N]."""
        out: dict = {}
        for r, cr in x.items():
            for m, n, h in self.decompositions(r):
                c = cr * QSqrt.scaled_vpow(h * Fraction(self.a(r), self.a(m) * self.a(n)), self.euler(m, n), self.q)
                out[(m, n)] = out.get((m, n), 0) + c
        return _clean(out)

    def counit(self, x: HallElement) -> QSqrt:
        return x.get(self.backend.zero, QSqrt.zero(self.q))

    def tensor_product(self, x: dict, y: dict, twist: bool = True) -> dict:
        """(a (x) b)(c (x) d) = v^{(b, c)} ac (x) bd on H_tw (x) H_tw."""
        out: dict = {}
        for (a, b), c1 in x.items():
            for (c, d), c2 in y.items():
                base = c1 * c2
                if twist:
                    base = base * vpow(self.sym(b, c), self.q)
                left = self.product({a: QSqrt.one(self.q)}, {c: QSqrt.one(self.q)})
                right = self.product({b: QSqrt.one(self.q)}, {d: QSqrt.one(self.q)})
                for u, cu in left.items():
                    for w, cw in right.items():
                        out[(u, w)] = out.get((u, w), 0) + base * cu * cw
        return _clean(out)

    def coproduct_left(self, t: dict) -> dict:
        """(Delta (x) id) on a tensor."""
        out: dict = {}
        for (a, b), c in t.items():
            for (a1, a2), ca in self.green_coproduct(self.basis(a)).items():
                out[(a1, a2, b)] = out.get((a1, a2, b), 0) + c * ca
        return _clean(out)

    def coproduct_right(self, t: dict) -> dict:
        out: dict = {}
        for (a, b), c in t.items():
            for (b1, b2), cb in self.green_coproduct(self.basis(b)).items():
                out[(a, b1, b2)] = out.get((a, b1, b2), 0) + c * cb
        return _clean(out)

    # verification suites -------------------------------------------------------------

    def verify_double_entry(self, bound: K0) -> Report:
        """hall_number == hall_number_direct on every triple within bound."""
        rep = Report("hall_double_entry")
        objs = self.backend.objects_up_to(bound)
        for m, n in itertools.product(objs, repeat=2):
            d = k0_add(m.dim, n.dim)
            if not k0_le(d, bound):
                continue
            direct = self.extension_distribution(m, n)
            for r in self.objects_of_class(d):
                lhs = self.h(m, n, r)
                rhs = direct.get(r, Fraction(0))
                rep.check(lhs == rhs, M=m, N=n, R=r, riedtmann=lhs, cocycle=rhs)
        return rep

    def verify_associativity(self, bound: K0) -> Report:
        """sum_R h^R_{MN} h^K_{RL} == sum_T h^K_{MT} h^T_{NL} for all M, N, L, K."""
        rep = Report("associativity")
        objs = self.backend.objects_up_to(bound)
        for m, n, l in itertools.product(objs, repeat=3):
            d = k0_add(k0_add(m.dim, n.dim), l.dim)
            if not k0_le(d, bound):
                continue
            for k in self.objects_of_class(d):
                lhs = sum((self.h(m, n, r) * self.h(r, l, k) for r in self.objects_of_class(k0_add(m.dim, n.dim))), Fraction(0))
                rhs = sum((self.h(m, t, k) * self.h(n, l, t) for t in self.objects_of_class(k0_add(n.dim, l.dim))), Fraction(0))
                rep.check(lhs == rhs, M=m, N=n, L=l, K=k, lhs=lhs, rhs=rhs)
        return rep

    def green_sides(self, m: Iso, n: Iso, k1: Iso, k2: Iso) -> tuple[Fraction, Fraction]:
        a = self.a
        lhs = Fraction(0)
        for k in self.objects_of_class(k0_add(m.dim, n.dim)):
            hk = self.h(m, n, k)
            if hk:
                lhs += a(k) * hk * self.h(k1, k2, k)
        rhs = Fraction(0)
        outer = Fraction(a(m) * a(n) * a(k1) * a(k2))
        for m1, m2, hm in self.decompositions(m):
            for n1, n2, hn in self.decompositions(n):
                if k0_add(m1.dim, n1.dim) != k1.dim or k0_add(m2.dim, n2.dim) != k2.dim:
                    continue
                hk1 = self.h(m1, n1, k1)
                if not hk1:
                    continue
                hk2 = self.h(m2, n2, k2)
                if not hk2:
                    continue
                scale = Fraction(self.q) ** (-self.euler(m1, n2))  # v^{-2<M1,N2>}
                rhs += scale * outer / (a(m1) * a(m2) * a(n1) * a(n2)) * hm * hn * hk1 * hk2
        return lhs, rhs

    def verify_green_formula(self, bound: K0, tuples=None) -> Report:
        rep = Report("green_formula")
        if tuples is None:
            objs = self.backend.objects_up_to(bound)
            tuples = (
                t for t in itertools.product(objs, repeat=4) if k0_add(t[0].dim, t[1].dim) == k0_add(t[2].dim, t[3].dim)
            )
        for m, n, k1, k2 in tuples:
            lhs, rhs = self.green_sides(m, n, k1, k2)
            rep.check(lhs == rhs, M=m, N=n, K1=k1, K2=k2, lhs=lhs, rhs=rhs)
        return rep

    def green_corollary_sides(self, m: Iso, n: Iso, k1: Iso, c: Iso, k2: Iso) -> tuple[Fraction, Fraction]:
        a = self.a
        lhs = Fraction(0)
        for k in self.objects_of_class(k0_add(m.dim, n.dim)):
            hk = self.h(m, n, k)
            if hk:
                lhs += a(k) * hk * self.iterated((k1, c, k2), k)
        rhs = Fraction(0)
        outer = Fraction(a(m) * a(n) * a(k1) * a(k2) * a(c))
        for (m1, c1, m2), hm in self.iterated_decompositions(m, 3):
            for (n1, c2, n2), hn in self.iterated_decompositions(n, 3):
                if k0_add(m1.dim, n1.dim) != k1.dim or k0_add(m2.dim, n2.dim) != k2.dim:
                    continue
                if k0_add(c1.dim, c2.dim) != c.dim:
                    continue
                hk1 = self.h(m1, n1, k1)
                hk2 = self.h(m2, n2, k2)
                hc = self.h(c1, c2, c)
                if not (hk1 and hk2 and hc):
                    continue
                e = -self.euler(m1, k0_add(c2.dim, n2.dim)) - self.euler(c1, n2)
                scale = Fraction(self.q) ** e  # v^{2e}
                den = a(m1) * a(n1) * a(c1) * a(m2) * a(c2) * a(n2)
                rhs += scale * outer / den * hm * hn * hk1 * hc * hk2
        return lhs, rhs

    def verify_green_corollary(self, bound: K0, tuples=None) -> Report:
        rep = Report("green_corollary")
        if tuples is None:
            objs = self.backend.objects_up_to(bound)
            tuples = (
                t
                for t in itertools.product(objs, repeat=5)
                if k0_add(t[0].dim, t[1].dim) == k0_add(k0_add(t[2].dim, t[3].dim), t[4].dim)
            )
        for m, n, k1, c, k2 in tuples:
            lhs, rhs = self.green_corollary_sides(m, n, k1, c, k2)
            rep.check(lhs == rhs, M=m, N=n, K1=k1, C=c, K2=k2, lhs=lhs, rhs=rhs)
        return rep

    def verify_coassociativity(self, bound: K0) -> Report:
        rep = Report("green_coassociativity")
        for r in self.backend.objects_up_to(bound):
            d = self.green_coproduct(self.basis(r))
            rep.check(self.coproduct_left(d) == self.coproduct_right(d), R=r)
        return rep

    def verify_counit(self, bound: K0) -> Report:
        rep = Report("green_counit")
        zero = self.backend.zero
        for r in self.backend.objects_up_to(bound):
            d = self.green_coproduct(self.basis(r))
            left = _clean({b: c for (a, b), c in d.items() if a == zero})
            right = _clean({a: c for (a, b), c in d.items() if b == zero})
            rep.check(left == self.basis(r) and right == self.basis(r), R=r)
        return rep

    def verify_bialgebra(self, bound: K0) -> Report:
        """Delta(xy) == Delta(x)Delta(y) on H_tw, tensor twist v^{(M2, N1)}."""
        rep = Report("green_bialgebra")
        objs = self.backend.objects_up_to(bound)
        for m, n in itertools.product(objs, repeat=2):
            if not k0_le(k0_add(m.dim, n.dim), bound):
                continue
            lhs = self.green_coproduct(self.product(self.basis(m), self.basis(n)))
            rhs = self.tensor_product(self.green_coproduct(self.basis(m)), self.green_coproduct(self.basis(n)))
            rep.check(lhs == rhs, M=m, N=n)
        return rep

    def hall_table(self, bound: K0) -> list[dict]:
        """Rows {M, N, R, h, direct, agree} for every nonzero h within bound."""
        rows = []
        objs = self.backend.objects_up_to(bound)
        for m, n in itertools.product(objs, repeat=2):
            d = k0_add(m.dim, n.dim)
            if not k0_le(d, bound):
                continue
            direct = self.extension_distribution(m, n)
            for r in self.objects_of_class(d):
                h = self.h(m, n, r)
                hd = direct.get(r, Fraction(0))
                if h or hd:
                    rows.append(
                        {
                            "M": m.label(),
                            "N": n.label(),
                            "R": r.label(),
                            "h": QSqrt(h, 0, self.q).to_json(),
                            "direct": QSqrt(hd, 0, self.q).to_json(),
                            "agree": h == hd,
                        }
                    )
        return rows


def _cls(x):
    return x.dim if isinstance(x, Iso) else tuple(x)
