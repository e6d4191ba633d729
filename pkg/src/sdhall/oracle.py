"""Reference computations in the quotient of the complex Hall algebra.

``QuotientOracle`` works straight from the definition of the semi-derived
algebra: in each K_0-degree it spans the two-sided ideal generated by
``[L] - [K + M]`` (``0 -> K -> L -> M -> 0`` with K acyclic) and reduces
elements modulo it. Acyclic classes are regular, so an identity between
elements with effective K-parts holds in the localisation iff it holds
in the quotient. Everything here is rational: the ideal is spanned by
untwisted products (twisting rescales a homogeneous product by a unit),
and the twist is tracked separately as an exponent of v.
"""

from __future__ import annotations

from fractions import Fraction

from .backends import Iso, K0, k0_add, k0_box, k0_sub
from .complexes import ComplexBackend
from .hallcore import HallAlgebra
from .reps import BudgetError


class RationalSpan:
    """Row-reduced span of sparse rational vectors (dict index -> Fraction)."""

    def __init__(self):
        self.rows: dict = {}  # pivot -> row with a 1 at the pivot

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, v: dict) -> dict:
        v = {k: Fraction(c) for k, c in v.items() if c}
        for piv in sorted(self.rows):
            c = v.get(piv)
            if c:
                for k, x in self.rows[piv].items():
                    nv = v.get(k, 0) - c * x
                    if nv:
                        v[k] = nv
                    else:
                        v.pop(k, None)
        return v

    def add(self, v: dict) -> bool:
        r = self.reduce(v)
        if not r:
            return False
        piv = min(r)
        c = r[piv]
        r = {k: x / c for k, x in r.items()}
        for p2, row in self.rows.items():
            d = row.get(piv)
            if d:
                for k, x in r.items():
                    nv = row.get(k, 0) - d * x
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
        self.rows[piv] = r
        return True


class QuotientOracle:
    def __init__(self, cb: ComplexBackend):
        self.cb = cb
        self.hall = HallAlgebra(cb)
        self._ideal: dict = {}
        self._acyclic: dict = {}

    def is_acyclic(self, x: Iso) -> bool:
        hit = self._acyclic.get(x)
        if hit is None:
            _, _, h0, h1 = self.cb.invariants_of(x)
            hit = not any(h0.dim) and not any(h1.dim)
            self._acyclic[x] = hit
        return hit

    def mul(self, x: dict, y: dict) -> dict:
        """Untwisted product of rational combinations of complex classes."""
        out: dict = {}
        for a, ca in x.items():
            for b, cb in y.items():
                for r, h in self.hall.extension_distribution(a, b).items():
                    out[r] = out.get(r, 0) + ca * cb * h
        return {k: v for k, v in out.items() if v}

    def generators(self, gamma: K0) -> list[dict]:
        cb = self.cb
        out = []
        for dk in k0_box(gamma):
            if not any(dk):
                continue
            dm = k0_sub(gamma, dk)
            for k in cb.objects_of_class(dk):
                if not self.is_acyclic(k):
                    continue
                for m in cb.objects_of_class(dm):
                    split = cb.direct_sum(k, m)
                    for l in self.hall.extension_distribution(m, k):
                        if l != split:
                            out.append({l: Fraction(1), split: Fraction(-1)})
        return out

    def ideal(self, gamma: K0) -> RationalSpan:
        gamma = tuple(gamma)
        hit = self._ideal.get(gamma)
        if hit is not None:
            return hit
        span = RationalSpan()
        for g in self.generators(gamma):
            span.add(g)
        for dx in k0_box(gamma):
            if not any(dx) or dx == gamma:
                continue
            sub = self.ideal(k0_sub(gamma, dx))
            if not len(sub):
                continue
            for x in self.cb.objects_of_class(dx):
                for row in list(sub.rows.values()):
                    span.add(self.mul({x: Fraction(1)}, row))
                    span.add(self.mul(row, {x: Fraction(1)}))
        self._ideal[gamma] = span
        return span

    def reduce(self, v: dict, gamma: K0) -> dict:
        return self.ideal(gamma).reduce(v)

    def ratio(self, u: dict, w: dict, gamma: K0) -> Fraction | None:
        """lambda with u = lambda * w modulo the ideal, or None if there is none."""
        ru = self.reduce(u, gamma)
        rw = self.reduce(w, gamma)
        if not rw:
            return None
        piv = min(rw)
        lam = ru.get(piv, Fraction(0)) / rw[piv]
        diff = {k: ru.get(k, 0) - lam * rw.get(k, 0) for k in set(ru) | set(rw)}
        return lam if not any(diff.values()) else None

    def multipliers(self) -> list[Iso]:
        """Acyclic classes used to clear denominators of the localisation.

        The unit comes first, then K_S and K*_S for every simple S, then
        K_X and K*_X for the remaining base objects up to the class of
        the sum of all simples.
        """
        cb = self.cb
        base = cb.base
        out = [cb.zero]
        simples = base.simples()
        rest = [x for x in base.objects_up_to((1,) * base.k0_rank) if any(x.dim) and x not in simples]
        for x in simples + rest:
            k, ks, _, _ = cb.standard_complexes(x)
            out += [cb.classify_complex(k), cb.classify_complex(ks)]
        return out

    def localized_ratio(self, u: dict, w: dict, gamma: K0) -> tuple[Fraction, Iso] | None:
        """lambda with (u - lambda w) t in the ideal for some acyclic t.

        In the right localisation at acyclic classes x = 0 iff x t lies in
        the ideal for some acyclic t; the first multiplier that works is
        returned alongside lambda. Multipliers whose degree exceeds the
        enumeration budget are skipped.
        """
        for t in self.multipliers():
            one = {t: Fraction(1)}
            g = k0_add(tuple(gamma), t.dim)
            try:
                lam = self.ratio(self.mul(u, one), self.mul(w, one), g)
            except BudgetError:
                continue
            if lam is not None:
                return lam, t
        return None

    # the canonical basis, computed inside the quotient --------------------------------------

    def chain(self, xs: list[Iso]) -> tuple[dict, int]:
        """[x1] * ... * [xn] untwisted, plus the twist exponent of the twisted product."""
        cb = self.cb
        v = {cb.zero: Fraction(1)}
        e = 0
        d = tuple(cb.zero.dim)
        for x in xs:
            e += cb.euler_form(d, x.dim)
            v = self.mul(v, {x: Fraction(1)})
            d = k0_add(d, x.dim)
        return v, e

    def relative_exponent(self, xs: list[Iso], ys: list[Iso]) -> int | None:
        """f with (twisted product of xs) = v^f (twisted product of ys) in SDH, or None."""
        u, eu = self.chain(xs)
        w, ew = self.chain(ys)
        gamma = tuple(self.cb.zero.dim)
        for x in xs:
            gamma = k0_add(gamma, x.dim)
        found = self.localized_ratio(u, w, gamma)
        if found is None or found[0] <= 0:
            return None
        k = _log_q(found[0], self.cb.q)
        return None if k is None else 2 * k + eu - ew

    def key_chain(self, alpha: K0, beta: K0, a: Iso, b: Iso) -> tuple[dict, int]:
        """[K_alpha] [K*_beta] [C*_A + C_B] untwisted, plus the twist exponent.

        The twisted product equals v^e times the returned rational vector.
        """
        cb = self.cb
        base = cb.base
        ka = cb.classify_complex(cb.standard_complexes(base.objects_of_class(alpha)[0])[0])
        kb = cb.classify_complex(cb.standard_complexes(base.objects_of_class(beta)[0])[1])
        core = cb.classify_complex(cb.direct_sum_complex(cb.standard_complexes(a)[3], cb.standard_complexes(b)[2]))
        return self.chain([ka, kb, core])

    def normal_form_exponent(self, x: Iso) -> int | None:
        """f with [x] = v^f K_{Im d0} K*_{Im d1} [C*_{H0} + C_{H1}] in the quotient."""
        i0, i1, h0, h1 = self.cb.invariants_of(x)
        chain, e = self.key_chain(i0, i1, h0, h1)
        found = self.localized_ratio({x: Fraction(1)}, chain, x.dim)
        if found is None or found[0] <= 0:
            return None
        k = _log_q(found[0], self.cb.q)
        return None if k is None else 2 * k - e


def _log_q(x: Fraction, q: int) -> int | None:
    k = 0
    while x.denominator % q == 0 and x.numerator % q:
        x *= q
        k -= 1
    while x.numerator % q == 0:
        x /= q
        k += 1
    return k if x == 1 else None
