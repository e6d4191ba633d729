"""Extended Hall algebras, the Hopf pairing, and the Drinfeld double inside SDH.

Elements of H^ex are dicts ``ExtKey -> coeff``; ``ExtKey(m, alpha)`` stands
for ``[M] k_alpha``. The double is never multiplied intrinsically: every
relation is transported into SDH through ``I(x (x) y) = I+(x) * I-(y)`` with
``I+([A] k_a) = [C_A] K_a`` and ``I-([B] k_b) = [C*_B] K*_b``.

``ExtHallAlgebra(sign=...)`` fixes the sign of the ``(alpha, N)`` correction
in the product. The positive part uses ``+1``. For the negative part the
sign that makes ``I-`` an algebra map is also ``+1``; ``-1`` is kept
selectable so the discrepancy can be exhibited.

With ``Delta-`` as defined (the ``k`` factor on the right), the pairing is a
Hopf pairing and (D4) holds when the Sweedler factors of ``y`` are read from
``Delta-`` with its tensor factors exchanged (``minus_order="opposite"``).
"""

from __future__ import annotations

import itertools
from typing import NamedTuple

from .backends import CategoryBackend, Iso, K0, k0_add, k0_le
from .coefficients import QSqrt
from .hallcore import HallAlgebra
from .report import Report
from .sdh import SDHAlgebra


class ExtKey(NamedTuple):
    m: Iso
    alpha: K0

    def label(self) -> str:
        k = f"k{list(self.alpha)}" if any(self.alpha) else ""
        core = f"[{self.m.label()}]" if any(self.m.dim) or not k else ""
        return core + k

    def to_json(self) -> str:
        return self.label()

    def __repr__(self) -> str:
        return self.label()


def _clean(d: dict) -> dict:
    return {k: v for k, v in d.items() if v}


class ExtHallAlgebra:
    """H^ex+ (``positive=True``) or H^ex- with its coproduct."""

    def __init__(self, backend: CategoryBackend, positive: bool, sign: int | None = None, hall: HallAlgebra | None = None):
        self.backend = backend
        self.q = backend.q
        self.positive = positive
        self.sign = sign if sign is not None else 1
        self.hall = hall or HallAlgebra(backend)
        self.z0 = tuple(backend.zero.dim)

    def basis(self, k: ExtKey) -> dict:
        return {k: QSqrt.one(self.q)}

    def key(self, m: Iso | None = None, alpha: K0 | None = None) -> ExtKey:
        return ExtKey(m if m is not None else self.backend.zero, tuple(alpha) if alpha is not None else self.z0)

    def product_keys(self, x: ExtKey, y: ExtKey) -> dict:
        b = self.backend
        n = b.euler_form(x.m.dim, y.m.dim) + self.sign * b.symmetric_form(x.alpha, y.m.dim)
        alpha = k0_add(x.alpha, y.alpha)
        return {ExtKey(r, alpha): QSqrt.scaled_vpow(h, n, self.q) for r, h in self.hall.middle_terms(x.m, y.m).items()}

    def product(self, x: dict, y: dict) -> dict:
        out: dict = {}
        for a, ca in x.items():
            for b, cb in y.items():
                for k, c in self.product_keys(a, b).items():
                    out[k] = out.get(k, 0) + ca * cb * c
        return _clean(out)

    def coproduct_key(self, x: ExtKey) -> dict:
        """Delta+([R]k_a) = sum [M]k_{N+a} (x) [N]k_a; Delta- puts [N]k_a on the left."""
        hall = self.hall
        out: dict = {}
        for m, n, h in hall.decompositions(x.m):
            c = QSqrt.scaled_vpow(h * hall.a(x.m) / (hall.a(m) * hall.a(n)), self.backend.euler_form(m.dim, n.dim), self.q)
            big = ExtKey(m, k0_add(n.dim, x.alpha))
            small = ExtKey(n, x.alpha)
            t = (big, small) if self.positive else (small, big)
            out[t] = out.get(t, 0) + c
        return _clean(out)

    def coproduct(self, x: dict) -> dict:
        out: dict = {}
        for k, c in x.items():
            for t, ct in self.coproduct_key(k).items():
                out[t] = out.get(t, 0) + c * ct
        return _clean(out)

    def counit_key(self, x: ExtKey) -> QSqrt:
        return QSqrt(int(not any(x.m.dim)), 0, self.q)

    def tensor_product(self, x: dict, y: dict) -> dict:
        out: dict = {}
        for (a, b), c1 in x.items():
            for (c, d), c2 in y.items():
                for u, cu in self.product_keys(a, c).items():
                    for w, cw in self.product_keys(b, d).items():
                        out[(u, w)] = out.get((u, w), 0) + c1 * c2 * cu * cw
        return _clean(out)

    def keys_up_to(self, bound: K0) -> list[ExtKey]:
        objs = self.backend.objects_up_to(bound)
        classes = [o.dim for o in objs if o.index == 0]
        return [ExtKey(m, a) for m in objs for a in classes if k0_le(k0_add(m.dim, a), bound)]

    # bialgebra suites ----------------------------------------------------------------

    def verify_bialgebra(self, bound: K0) -> list[Report]:
        name = "ext_plus" if self.positive else "ext_minus"
        assoc, coass, compat, counit = (Report(f"{name}_{s}") for s in ("associativity", "coassociativity", "compatibility", "counit"))
        keys = self.keys_up_to(bound)
        for x, y, z in itertools.product(keys, repeat=3):
            if not k0_le(k0_add(k0_add(x.m.dim, y.m.dim), z.m.dim), bound):
                continue
            bx, by, bz = self.basis(x), self.basis(y), self.basis(z)
            assoc.check(self.product(self.product(bx, by), bz) == self.product(bx, self.product(by, bz)), x=x, y=y, z=z)
        for x in keys:
            d = self.coproduct_key(x)
            left: dict = {}
            right: dict = {}
            for (a, b), c in d.items():
                for (a1, a2), ca in self.coproduct_key(a).items():
                    left[(a1, a2, b)] = left.get((a1, a2, b), 0) + c * ca
                for (b1, b2), cb in self.coproduct_key(b).items():
                    right[(a, b1, b2)] = right.get((a, b1, b2), 0) + c * cb
            coass.check(_clean(left) == _clean(right), x=x)
            el: dict = {}
            er: dict = {}
            for (a, b), c in d.items():
                if self.counit_key(a):
                    el[b] = el.get(b, 0) + c
                if self.counit_key(b):
                    er[a] = er.get(a, 0) + c
            counit.check(_clean(el) == self.basis(x) and _clean(er) == self.basis(x), x=x)
        for x, y in itertools.product(keys, repeat=2):
            lhs = self.coproduct(self.product_keys(x, y))
            rhs = self.tensor_product(self.coproduct_key(x), self.coproduct_key(y))
            compat.check(lhs == rhs, x=x, y=y)
        return [assoc, coass, compat, counit]


class DrinfeldDouble:
    """H^ex+ and H^ex- together with the pairing and the map I into SDH."""

    def __init__(self, sdh: SDHAlgebra, minus_sign: int = 1, minus_order: str = "opposite"):
        self.sdh = sdh
        self.backend = sdh.backend
        self.q = sdh.q
        self.plus = ExtHallAlgebra(self.backend, True, 1, sdh.hall)
        self.minus = ExtHallAlgebra(self.backend, False, minus_sign, sdh.hall)
        # Sweedler factors of y seen by the pairing and by (D4): "opposite" reads
        # Delta-(y) with its tensor factors exchanged, "literal" reads it as is
        self.minus_order = minus_order

    # pairing ----------------------------------------------------------------------------

    def pairing_key(self, x: ExtKey, y: ExtKey) -> QSqrt:
        if x.m != y.m:
            return QSqrt.zero(self.q)
        return QSqrt.scaled_vpow(self.sdh.hall.a(x.m), self.backend.symmetric_form(x.alpha, y.alpha), self.q)

    def pairing(self, x: dict, y: dict) -> QSqrt:
        out = QSqrt.zero(self.q)
        for a, ca in x.items():
            for b, cb in y.items():
                c = self.pairing_key(a, b)
                if c:
                    out = out + ca * cb * c
        return out

    def pairing2(self, t: dict, u: dict) -> QSqrt:
        """phi(x (x) x', y (x) y') = phi(x, y) phi(x', y')."""
        out = QSqrt.zero(self.q)
        for (a, b), ct in t.items():
            for (c, d), cu in u.items():
                p = self.pairing_key(a, c)
                if p:
                    p2 = self.pairing_key(b, d)
                    if p2:
                        out = out + ct * cu * p * p2
        return out

    def minus_sweedler(self, y: ExtKey) -> dict:
        d = self.minus.coproduct_key(y)
        if self.minus_order == "literal":
            return d
        return {(b, a): c for (a, b), c in d.items()}

    def verify_hopf_pairing(self, bound: K0) -> Report:
        """phi(x x', y) = phi(x (x) x', y_(1) (x) y_(2)) and phi(x, y y') = phi(Delta+ x, y (x) y')."""
        rep = Report("hopf_pairing")
        plus, minus = self.plus, self.minus
        pk = plus.keys_up_to(bound)
        mk = minus.keys_up_to(bound)
        for x, x2 in itertools.product(pk, repeat=2):
            prod = plus.product_keys(x, x2)
            t = {(x, x2): QSqrt.one(self.q)}
            for y in mk:
                if k0_add(x.m.dim, x2.m.dim) != y.m.dim:
                    continue
                lhs = self.pairing(prod, minus.basis(y))
                rhs = self.pairing2(t, self.minus_sweedler(y))
                rep.check(lhs == rhs, side="product", x=x, x2=x2, y=y, lhs=lhs, rhs=rhs)
        for y, y2 in itertools.product(mk, repeat=2):
            prod = minus.product_keys(y, y2)
            t = {(y, y2): QSqrt.one(self.q)}
            for x in pk:
                if k0_add(y.m.dim, y2.m.dim) != x.m.dim:
                    continue
                lhs = self.pairing(plus.basis(x), prod)
                rhs = self.pairing2(plus.coproduct_key(x), t)
                rep.check(lhs == rhs, side="coproduct", x=x, y=y, y2=y2, lhs=lhs, rhs=rhs)
        return rep

    # the map I ------------------------------------------------------------------------

    def i_plus(self, x: ExtKey) -> dict:
        s = self.sdh
        return s.product(s.basis(s.key(b=x.m)), s.basis(s.key(alpha=x.alpha)))

    def i_minus(self, y: ExtKey) -> dict:
        s = self.sdh
        return s.product(s.basis(s.key(a=y.m)), s.basis(s.key(beta=y.alpha)))

    def iso_i(self, x: ExtKey, y: ExtKey) -> dict:
        """I([A]k_a (x) [B]k_b) = [C_A] K_a [C*_B] K*_b."""
        return self.sdh.product(self.i_plus(x), self.i_minus(y))

    def _apply(self, f, x: dict) -> dict:
        out: dict = {}
        for k, c in x.items():
            for k2, c2 in f(k).items():
                out[k2] = out.get(k2, 0) + c * c2
        return _clean(out)

    def verify_double_relations(self, bound: K0) -> list[Report]:
        s = self.sdh
        plus, minus = self.plus, self.minus
        d1, d2, d3, d4 = (Report(f"double_{r}") for r in ("D1", "D2", "D3", "D4"))
        pk = plus.keys_up_to(bound)
        mk = minus.keys_up_to(bound)
        one_p = plus.key()
        one_m = minus.key()
        for x, x2 in itertools.product(pk, repeat=2):
            lhs = self._apply(self.i_plus, plus.product_keys(x, x2))
            d1.check(lhs == s.product(self.i_plus(x), self.i_plus(x2)), x=x, x2=x2)
        for y, y2 in itertools.product(mk, repeat=2):
            lhs = self._apply(self.i_minus, minus.product_keys(y, y2))
            d2.check(lhs == s.product(self.i_minus(y), self.i_minus(y2)), y=y, y2=y2)
        for x, y in itertools.product(pk, mk):
            lhs = s.product(self.iso_i(x, one_m), self.iso_i(one_p, y))
            d3.check(lhs == self.iso_i(x, y), x=x, y=y)
        for x, y in itertools.product(pk, mk):
            dx = plus.coproduct_key(x)
            dy = self.minus_sweedler(y)
            lhs: dict = {}
            rhs: dict = {}
            for (x1, x2), cx in dx.items():
                for (y1, y2), cy in dy.items():
                    p = self.pairing_key(x2, y1)
                    if p:
                        for k, c in self.iso_i(x1, y2).items():
                            lhs[k] = lhs.get(k, 0) + cx * cy * p * c
                    p = self.pairing_key(x1, y2)
                    if p:
                        for k, c in s.product(self.i_minus(y1), self.i_plus(x2)).items():
                            rhs[k] = rhs.get(k, 0) + cx * cy * p * c
            d4.check(_clean(lhs) == _clean(rhs), x=x, y=y)
        return [d1, d2, d3, d4]

    def verify_bialgebra_iso(self, bound: K0) -> Report:
        """(I (x) I) Delta_DDH = Delta_SDH I on every generator [A]k_a (x) [B]k_b."""
        rep = Report("bialgebra_iso")
        s = self.sdh
        for x, y in itertools.product(self.plus.keys_up_to(bound), self.minus.keys_up_to(bound)):
            rhs = s.coproduct(self.iso_i(x, y))
            lhs: dict = {}
            for (x1, x2), cx in self.plus.coproduct_key(x).items():
                for (y1, y2), cy in self.minus.coproduct_key(y).items():
                    left = self.iso_i(x1, y1)
                    right = self.iso_i(x2, y2)
                    for a, ca in left.items():
                        for b, cb in right.items():
                            lhs[(a, b)] = lhs.get((a, b), 0) + cx * cy * ca * cb
            rep.check(_clean(lhs) == rhs, x=x, y=y)
        return rep

    def verify_injective(self, bound: K0) -> Report:
        """Distinct generators map to linearly independent SDH elements (leading terms differ)."""
        rep = Report("iso_injective")
        seen: dict = {}
        for x, y in itertools.product(self.plus.keys_up_to(bound), self.minus.keys_up_to(bound)):
            img = self.iso_i(x, y)
            lead = self.sdh.key(x.alpha, y.alpha, y.m, x.m)
            rep.check(bool(img.get(lead)) and lead not in seen, x=x, y=y)
            seen[lead] = (x, y)
        return rep

