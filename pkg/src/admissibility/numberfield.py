"""Number fields Q[x]/(f) and their prime decompositions.

A field is presented by a monic irreducible integer polynomial f with root
theta.  Decomposition of a rational prime uses Dedekind's criterion on theta,
and when p divides the index of Z[theta] it retries on integral generators
built from the enlargement element Dedekind's test produces.  If no tried
generator certifies, ``IndexObstruction`` is raised instead of guessing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import count

from .algebra import _dense as dn
from .algebra import finite_field as ff
from .algebra.poly import Poly, composed_sum, from_power_sums, gcd, power_sums
from .algebra.zassenhaus import factor_over_q
from .memo import InsertOnceMemo


class FieldError(ValueError):
    pass


class NotMonic(FieldError):
    pass


class NotIrreducible(FieldError):
    pass


class NotIrreducibleOverK(FieldError):
    pass


class NotGaloisField(FieldError):
    pass


class IndexObstruction(ArithmeticError):
    """Dedekind's criterion was inconclusive for every generator tried."""

    def __init__(self, field, p, tried):
        self.field, self.p, self.tried = field, p, tried
        super().__init__(f"p={p} divides the index of every generator tried ({tried}) for {field}")


def _as_poly(f) -> Poly:
    return f if isinstance(f, Poly) else Poly(f)


def bareiss_det(rows):
    """Exact determinant of an integer matrix (fraction-free elimination)."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class PrimeDecomposition:
    p: int
    pairs: tuple  # ((e, f), ...) sorted by local degree desc, then e desc
    certified: bool = True
    method: str = "dedekind"

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple(tuple(x) for x in self.pairs))

    @property
    def local_degrees(self):
        return [e * f for e, f in self.pairs]

    def to_json(self):
        return {"p": self.p, "pairs": [list(x) for x in self.pairs], "method": self.method}


class NumberField:
    __slots__ = ("defining_poly", "degree", "disc_defpoly", "label", "_memo", "_ps")

    def __init__(self, f, label=None, check=True):
        f = _as_poly(f)
        if not f.is_integral() or f.degree < 1:
            raise NotMonic(f"defining polynomial must be a nonconstant integer polynomial: {f}")
        if not f.is_monic():
            raise NotMonic(f"defining polynomial must be monic: {f}")
        if check:
            F = factor_over_q(f)
            if len(F.factors) != 1 or F.factors[0][1] != 1:
                raise NotIrreducible(f"{f} is reducible over Q")
        self.defining_poly = f
        self.degree = f.degree
        self.label = label
        self._memo = InsertOnceMemo()
        self._ps = power_sums(f, 2 * self.degree)
        self.disc_defpoly = self._discriminant()

    # equality is by presentation; isomorphism is a separate test
    def __eq__(self, other):
        return isinstance(other, NumberField) and self.defining_poly == other.defining_poly

    def __hash__(self):
        return hash(("NumberField", self.defining_poly))

    def __repr__(self):
        return f"NumberField({self.label or self.defining_poly})"

    @property
    def name(self):
        return self.label or f"Q[x]/({self.defining_poly})"

    # -- element helpers ------------------------------------------------
    def reduce(self, a):
        """Reduce a coefficient list modulo f (f monic, so exact over Z)."""
        return dn.divmod_exact_lc(list(a), list(self.defining_poly.coeffs))[1]

    def element(self, coeffs):
        return FieldElement(self, coeffs)

    def theta(self):
        return FieldElement(self, [0, 1] if self.degree > 1 else [-self.defining_poly[0]])

    def trace_of(self, a):
        """Trace of sum a_j theta^j."""
        ps = self._ps
        while len(ps) < len(a):
            ps = self._ps = power_sums(self.defining_poly, 2 * len(a))
        return sum(c * ps[j] for j, c in enumerate(a))

    def mult_matrix(self, a):
        n = self.degree
        cols = []
        cur = self.reduce(a)
        for _ in range(n):
            cols.append(cur + [0] * (n - len(cur)))
            cur = self.reduce([0] + cur)
        return [[cols[j][i] for j in range(n)] for i in range(n)]

    def norm_of(self, a):
        m = self.mult_matrix(a)
        den = 1
        for row in m:
            for c in row:
                if isinstance(c, Fraction):
                    den = den * c.denominator // _gcd(den, c.denominator)
        if den == 1:
            return bareiss_det(m)
        scaled = [[int(c * den) for c in row] for row in m]
        return Fraction(bareiss_det(scaled), den ** self.degree)

    def charpoly_of(self, a):
        """Characteristic polynomial (over Q) of sum a_j theta^j."""
        n = self.degree
        traces = [n]
        cur = [1]
        a = self.reduce(a)
        for _ in range(n):
            cur = self.reduce(dn.mul(cur, a)) if cur else []
            traces.append(self.trace_of(cur))
        return from_power_sums(traces, n)

    def _discriminant(self):
        n = self.degree
        if n == 1:
            return 1
        nd = self.norm_of(list(self.defining_poly.derivative().coeffs))
        return (-1) ** (n * (n - 1) // 2) * nd

    # -- arithmetic queries ------------------------------------------------
    def decompose(self, p):
        return decompose_prime(self, p)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


class FieldElement:
    __slots__ = ("K", "coords")

    def __init__(self, K, coeffs):
        self.K = K
        c = K.reduce([Fraction(x) for x in coeffs])
        c = c + [Fraction(0)] * (K.degree - len(c))
        self.coords = tuple(x.numerator if x.denominator == 1 else x for x in c)

    def _c(self, other):
        if isinstance(other, FieldElement):
            return list(other.coords)
        return [other]

    def __add__(self, other):
        return FieldElement(self.K, dn.add(list(self.coords), self._c(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.K, dn.sub(list(self.coords), self._c(other)))

    def __neg__(self):
        return FieldElement(self.K, [-c for c in self.coords])

    def __mul__(self, other):
        return FieldElement(self.K, dn.mul(list(self.coords), self._c(other)))

    __rmul__ = __mul__

    def __pow__(self, n):
        out = FieldElement(self.K, [1])
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.K == other.K and self.coords == other.coords
        return self == FieldElement(self.K, [other])

    def __hash__(self):
        return hash(self.coords)

    def is_zero(self):
        return not any(self.coords)

    def trace(self):
        return self.K.trace_of(list(self.coords))

    def norm(self):
        return self.K.norm_of(list(self.coords))

    def charpoly(self):
        return self.K.charpoly_of(list(self.coords))

    def inverse(self):
        a = Poly(self.coords)
        from .algebra.poly import xgcd
        g, s, _ = xgcd(a, self.K.defining_poly)
        if g.degree != 0:
            raise ZeroDivisionError("element is zero")
        return FieldElement(self.K, list(s.coeffs))

    def __truediv__(self, other):
        if not isinstance(other, FieldElement):
            return FieldElement(self.K, [c / Fraction(other) for c in self.coords])
        return self * other.inverse()

    def __repr__(self):
        return f"FieldElement({self.K.name}, {list(self.coords)})"


# -- prime decomposition ----------------------------------------------------------

def _dedekind(f: Poly, p: int):
    """Return (pairs, None) if Dedekind certifies f at p, else (None, U) where
    U(theta)/p is an integral element outside Z[theta]."""
    coeffs = f.int_coeffs()
    sqf = ff.squarefree_decomposition(coeffs, p)
    pieces = []  # (irreducible mod p, multiplicity)
    for part, m in sqf:
        for h in ff.irreducible_factors_mod_p(list(part), p):
            pieces.append((h, m))
    g = [1]
    h = [1]
    for u, m in pieces:
        g = dn.mul(g, u)
        for _ in range(m - 1):
            h = dn.mul(h, u)
    F = dn.sub(dn.mul(g, h), coeffs)
    F = [c // p for c in F]
    d = ff.gcd(ff.gcd(F, g, p), h, p)
    if len(d) <= 1:
        pairs = [(m, len(u) - 1) for u, m in pieces]
        return pairs, None
    U = ff.divmod_p(coeffs, d, p)[0]
    return None, U


def _sorted_pairs(pairs):
    # stable sort keeps the deterministic factor order for full ties
    return tuple(sorted(pairs, key=lambda ef: (-ef[0] * ef[1], -ef[0])))


_MAX_GENERATORS = 80


def _integral_charpoly(K, a):
    cp = K.charpoly_of(a)
    if not cp.is_integral():
        return None
    if cp.degree != K.degree or gcd(cp, cp.derivative()).degree > 0:
        return None
    return cp


def decompose_prime(K: NumberField, p: int, dedekind_only=False) -> PrimeDecomposition:
    """Splitting type of p in K.

    With ``dedekind_only`` the answer must come from Dedekind's criterion on
    some generator; otherwise a p-maximal order is split directly when no
    generator certifies.
    """
    if not ff.is_prime(p):
        raise ValueError(f"{p} is not prime")
    return K._memo.get_or_compute(("decomp", p, dedekind_only),
                                  lambda: _decompose(K, p, dedekind_only))


def _hnf_add(basis, row):
    """Row-style HNF of the Z-span of basis (upper triangular, n rows) plus row."""
    n = len(row)
    rows = [list(b) for b in basis] + [list(row)]
    out = []
    for col in range(n):
        piv = [r for r in rows if r[col] != 0]
        rest = [r for r in rows if r[col] == 0]
        while len(piv) > 1:
            piv.sort(key=lambda r: abs(r[col]))
            a = piv[0]
            nxt = [a]
            for r in piv[1:]:
                q = r[col] // a[col]
                r = [x - q * y for x, y in zip(r, a)]
                (nxt if r[col] != 0 else rest).append(r)
            piv = nxt
        if piv:
            a = piv[0]
            if a[col] < 0:
                a = [-x for x in a]
            out.append(a)
        rows = rest
    for i, r in enumerate(out):
        c = next(j for j, x in enumerate(r) if x)
        for k in range(i):
            q = out[k][c] // r[c]
            if q:
                out[k] = [x - q * y for x, y in zip(out[k], r)]
    return out


class _Order:
    """A Z-lattice span(rows)/den in theta coordinates, closed under products."""

    def __init__(self, K):
        self.K = K
        n = K.degree
        self.den = 1
        self.rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def elements(self):
        return [[Fraction(x, self.den) for x in r] for r in self.rows]

    def coordinates(self, v):
        """Coordinates of v in the order basis (rationals), via the triangular rows."""
        n = self.K.degree
        w = [Fraction(x) * self.den for x in v] + [0] * (n - len(v))
        out = []
        for r in self.rows:
            c = next(j for j, x in enumerate(r) if x)
            q = w[c] / r[c]
            out.append(q)
            w = [a - q * b for a, b in zip(w, r)]
        assert not any(w)
        return out

    def contains(self, v):
        return all(c.denominator == 1 for c in self.coordinates(v))

    def _set_span(self, gens):
        n = self.K.degree
        den = 1
        for g in gens:
            for x in g:
                d = Fraction(x).denominator
                den = den * d // _gcd(den, d)
        basis = []
        for g in gens:
            row = [int(Fraction(x) * den) for x in g] + [0] * (n - len(g))
            basis = _hnf_add(basis, row)
        g = den
        for r in basis:
            for x in r:
                g = _gcd(g, x)
        self.den = den // g
        self.rows = [[x // g for x in r] for r in basis]

    def adjoin(self, delta):
        """Replace self by self[delta]."""
        K = self.K
        gens = []
        power = [Fraction(1)]
        for _ in range(K.degree):
            for b in self.elements():
                gens.append(K.reduce(dn.mul(b, power)))
            power = K.reduce(dn.mul(power, delta))
        self._set_span(gens)

    def enlarge_at(self, p):
        """One ring-of-multipliers step for the p-radical; False if p-maximal."""
        K = self.K
        n = K.degree
        B = self.elements()

        def coords_mod_p(v):
            return [int(c) % p for c in self.coordinates(v)]

        # Frobenius power kills exactly the p-radical of O/pO
        j = 1
        while p ** j < n:
            j += 1
        frob_rows = []
        for b in B:
            x = b
            for _ in range(j):
                x = _pow_elem(K, x, p)
            frob_rows.append(coords_mod_p(x))
        rad = _nullspace_mod_p(frob_rows, p)  # combinations of basis elements
        gens = []
        for v in rad:
            gens.append(_combine(B, v, n))
        gens += [[p * c for c in b] for b in B]
        rad_order = _Order(K)
        rad_order._set_span(gens)
        I = rad_order.elements()
        # U/pO = kernel of O/pO -> End(I/pI)
        cols = []
        for b in B:
            row = []
            for beta in I:
                prod = K.reduce(dn.mul(b, beta))
                row.extend(int(c) % p for c in rad_order.coordinates(prod))
            cols.append(row)
        ker = _nullspace_mod_p(cols, p)
        new = [[Fraction(c, p) for c in _combine(B, v, n)] for v in ker]
        new = [v for v in new if not self.contains(v)]
        if not new:
            return False
        self._set_span(B + new)
        return True


def _combine(B, v, n):
    out = [Fraction(0)] * n
    for c, b in zip(v, B):
        if c:
            out = [x + c * y for x, y in zip(out, b + [0] * (n - len(b)))]
    return out


def _pow_elem(K, x, e):
    out = [Fraction(1)]
    base = list(x)
    while e:
        if e & 1:
            out = K.reduce(dn.mul(out, base))
        base = K.reduce(dn.mul(base, base))
        e >>= 1
    return out


def _nullspace_mod_p(rows, p):
    """Basis of {v : sum_i v_i rows[i] = 0 mod p} (left kernel)."""
    m = len(rows)
    if m == 0:
        return []
    width = len(rows[0])
    # augment with identity to track combinations
    aug = [list(r) + [1 if i == k else 0 for k in range(m)] for i, r in enumerate(rows)]
    r = 0
    for c in range(width):
        piv = next((i for i in range(r, m) if aug[i][c] % p), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = pow(aug[r][c], -1, p)
        aug[r] = [x * inv % p for x in aug[r]]
        for i in range(m):
            if i != r and aug[i][c] % p:
                t = aug[i][c]
                aug[i] = [(x - t * y) % p for x, y in zip(aug[i], aug[r])]
        r += 1
    return [row[width:] for row in aug[r:]]


def _element_poly_eval(K, U, gamma):
    out = [Fraction(0)]
    for c in reversed(U):
        out = K.reduce(dn.add(dn.mul(out, gamma), [c]))
    return out


def _decompose(K, p, dedekind_only=False):
    n = K.degree
    if n == 1:
        return PrimeDecomposition(p, ((1, 1),), True, "trivial")
    pairs, U = _dedekind(K.defining_poly, p)
    if pairs is not None:
        out = PrimeDecomposition(p, _sorted_pairs(pairs), True, "dedekind")
        _check_sum(out, n)
        return out
    # p divides the index of Z[theta].  Grow an order until it is p-maximal
    # (Dedekind's element first, then multiplier rings of the p-radical) and
    # look for a generator of it on which the criterion certifies.
    import random
    rng = random.Random(f"decompose:{K.defining_poly.coeffs}:{p}")
    order = _Order(K)
    order.adjoin([Fraction(c, p) for c in _element_poly_eval(K, U, [0, 1])])
    while order.enlarge_at(p):
        pass
    tried = 1
    span = 1
    while tried < _MAX_GENERATORS:
        elems = order.elements()
        coeffs = [rng.randint(-span, span) for _ in elems]
        gamma = _combine(elems, coeffs, n)
        if tried % 8 == 0:
            span = min(span + 1, 6)
        cp = _integral_charpoly(K, gamma)
        if cp is None:
            tried += 1
            continue
        tried += 1
        pairs, _ = _dedekind(cp, p)
        if pairs is not None:
            out = PrimeDecomposition(p, _sorted_pairs(pairs), True, "dedekind-enlarged")
            _check_sum(out, n)
            return out
    if dedekind_only:
        raise IndexObstruction(K.name, p, tried)
    out = PrimeDecomposition(p, _sorted_pairs(_split_maximal_order(order, p)), True,
                             "maximal-order")
    _check_sum(out, n)
    return out


class _ResidueAlgebra:
    """O/pO for a p-maximal order O, via structure constants mod p."""

    def __init__(self, order, p):
        K = order.K
        self.p = p
        B = order.elements()
        self.n = n = len(B)
        self.table = [[None] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                prod = K.reduce(dn.mul(B[i], B[j]))
                c = [int(x) % p for x in order.coordinates(prod)]
                self.table[i][j] = self.table[j][i] = c
        self.one = [int(x) % p for x in order.coordinates([Fraction(1)])]

    def mul(self, x, y):
        p, n = self.p, self.n
        out = [0] * n
        for i, a in enumerate(x):
            if not a:
                continue
            for j, b in enumerate(y):
                if b:
                    ab = a * b
                    for k, c in enumerate(self.table[i][j]):
                        if c:
                            out[k] += ab * c
        return [v % p for v in out]

    def power(self, x, e):
        out, base = self.one, x
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out

    def basis(self):
        return [[int(i == j) for j in range(self.n)] for i in range(self.n)]

    def rank(self, vecs):
        if not vecs:
            return 0
        return len(vecs) - len(_nullspace_mod_p(vecs, self.p))


def _split_maximal_order(order, p):
    """(e, f) pairs from the residue algebra O/pO = prod O/P^e.

    Elements with x^p = x form a copy of F_p^g (g primes); its primitive
    idempotents cut out the local factors, of dimension e*f, and the
    nilradical inside each factor has codimension f.
    """
    A = _ResidueAlgebra(order, p)
    n = A.n
    E = A.basis()
    frob = [A.power(b, p) for b in E]
    fixed = _nullspace_mod_p([[(a - b) % p for a, b in zip(fr, b0)]
                              for fr, b0 in zip(frob, E)], p)
    j = 1
    while p ** j < n:
        j += 1
    frob_j = [A.power(b, p ** j) for b in E]
    radical = _nullspace_mod_p(frob_j, p)

    def lin(v):
        return _combine_mod(E, v, p)

    idems = [A.one]
    for s in (lin(v) for v in fixed):
        refined = []
        for eps in idems:
            x = A.mul(s, eps)
            # x acts on eps*A with eigenvalues in F_p; split by Lagrange idempotents
            vals = [c for c in range(p) if _is_zero_divisor_shift(A, x, c, eps)]
            if len(vals) <= 1:
                refined.append(eps)
                continue
            for c in vals:
                part = eps
                for c2 in vals:
                    if c2 == c:
                        continue
                    inv = pow(c - c2, -1, p)
                    shifted = [(a - c2 * b) % p for a, b in zip(x, eps)]
                    part = [a * inv % p for a in A.mul(part, shifted)]
                refined.append(part)
        idems = refined
    rad = [lin(v) for v in radical]
    out = []
    for eps in idems:
        ef = A.rank([A.mul(eps, b) for b in E])
        er = A.rank([A.mul(eps, r) for r in rad]) if rad else 0
        f = ef - er
        out.append((ef // f, f))
    return out


def _combine_mod(E, v, p):
    out = [0] * len(E[0])
    for c, b in zip(v, E):
        if c:
            out = [(x + c * y) % p for x, y in zip(out, b)]
    return out


def _is_zero_divisor_shift(A, x, c, eps):
    """Does x - c*eps fail to be a unit of eps*A?  (x lies in the split part)"""
    y = [(a - c * b) % A.p for a, b in zip(x, eps)]
    # y^(p-1) is the idempotent of its support when y is Frobenius-fixed
    z = A.power(y, A.p - 1)
    return z != eps


def _check_sum(dec, n):
    total = sum(e * f for e, f in dec.pairs)
    assert total == n, f"decomposition {dec.pairs} does not sum to {n}"


def p_decomposes(K: NumberField, p: int) -> bool:
    return len(decompose_prime(K, p).pairs) >= 2


def ramification_indices(K, p):
    return [e for e, _ in decompose_prime(K, p).pairs]


def is_unramified(K, p):
    return all(e == 1 for e in ramification_indices(K, p))


# -- Trager norms: roots, factors over K, composita --------------------------------

def _squarefree_norm(K: NumberField, h: Poly, start=0):
    """Smallest c >= start with N(x) = prod (beta + c*theta) squarefree."""
    f = K.defining_poly
    for c in count(start):
        if K.degree > 1 and c == 0:
            continue
        N = composed_sum(h, f, c)
        if N.is_integral() and gcd(N, N.derivative()).degree == 0:
            return c, N
        if c > 64:
            raise ArithmeticError("no squarefree norm found")


def trager_factor_degrees(K: NumberField, h: Poly):
    """Degrees over K of the irreducible factors of a squarefree Q-irreducible h,
    together with the Q-factors of the norm that realize them."""
    h = _as_poly(h).monic()
    if h.degree == 0:
        return []
    if K.degree == 1:
        return [(h.degree, h)]
    key = ("trager", h.coeffs)

    def run():
        c, N = _squarefree_norm(K, h)
        out = []
        for g, _ in factor_over_q(N).factors:
            out.append((g.degree // K.degree, g))
        out.sort(key=lambda dg: (dg[0], dg[1].coeffs))
        return tuple(out)

    return list(K._memo.get_or_compute(key, run))


def has_root_in_field(K: NumberField, g) -> bool:
    g = _as_poly(g)
    if g.is_zero():
        raise ValueError("zero polynomial")
    if g.degree < 1:
        return False
    for h, _ in factor_over_q(g).factors:
        if h.degree == 1:
            return True
        if K.degree % h.degree:
            continue
        if any(d == 1 for d, _ in trager_factor_degrees(K, h)):
            return True
    return False


def is_galois(K: NumberField) -> bool:
    if K.degree <= 2:
        return True
    return K._memo.get_or_compute(
        ("galois",),
        lambda: all(d == 1 for d, _ in trager_factor_degrees(K, K.defining_poly)))


def is_isomorphic(K1: NumberField, K2: NumberField) -> bool:
    return K1.degree == K2.degree and has_root_in_field(K1, K2.defining_poly) \
        and has_root_in_field(K2, K1.defining_poly)


def compositum_fields(K: NumberField, g):
    """Absolute fields K(beta) for beta running over roots of the distinct
    irreducible factors of g over K, smallest degree first."""
    g = _as_poly(g)
    out = []
    for h, _ in factor_over_q(g).factors:
        for d, N in trager_factor_degrees(K, h):
            out.append(NumberField(_monic_int(N), check=False))
    out.sort(key=lambda L: (L.degree, L.defining_poly.coeffs))
    return out


def _monic_int(N: Poly) -> Poly:
    N = N.monic()
    if not N.is_integral():
        raise ArithmeticError("norm polynomial is not integral")
    return N


def adjoin_root(K: NumberField, g) -> NumberField:
    """Absolute field for K(beta), g(beta) = 0, with g irreducible over K."""
    g = _as_poly(g)
    F = factor_over_q(g)
    if len(F.factors) != 1 or F.factors[0][1] != 1:
        raise NotIrreducibleOverK(f"{g} is reducible over Q, hence over K")
    facs = trager_factor_degrees(K, g)
    if len(facs) != 1:
        raise NotIrreducibleOverK(f"{g} splits over {K.name}")
    return NumberField(_monic_int(facs[0][1]), check=False)


def field_from_coeffs(coeffs, label=None) -> NumberField:
    return NumberField(Poly([int(c) for c in coeffs]), label=label)


RATIONALS_POLY = Poly((-1, 1))


def rationals() -> NumberField:
    return NumberField(RATIONALS_POLY, label="Q", check=False)
