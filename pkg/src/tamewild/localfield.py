"""Arithmetic in F = F0(pi) for an Eisenstein polynomial f over O0.

Elements are dense coefficient vectors (a_0, ..., a_{e-1}) over O0 in the
basis 1, pi, ..., pi^{e-1}; all arithmetic is performed mod (f, p^N).  The
pi-adic valuation of a_i pi^i is e*val_p(a_i) + i, and these candidates are
pairwise distinct mod e, so the valuation of a vector is their minimum and
is attained at a unique index.

Working pi-precision is M = e*N.  An element whose canonical form is the
zero vector is indistinguishable from 0 at that precision.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as _iproduct

from .errors import (
    PRECISION_EXHAUSTED,
    BadInput,
    BelowThreshold,
    NotInIdeal,
    NotPrincipalUnit,
    PrecisionExhausted,
    UnsupportedField,
)
from .padic import O0Elem, PadicCtx, invert, val_p


class LocalFieldCtx:
    """F = F0(pi) with pi a root of the Eisenstein polynomial f.

    Derived data: ramification index e = deg f, q = p^d, e1 = e/(p-1) kept
    as an exact Fraction, pi-precision M = e*N, and the wild exponent k with
    #mu(F) = p^k (q-1) (computed lazily by compute_mu).
    """

    def __init__(self, base: PadicCtx, f, name=None):
        self.base = base
        self.p, self.N, self.d, self.q = base.p, base.N, base.d, base.q
        f = [c if isinstance(c, O0Elem) else base.from_int(c) for c in f]
        e = len(f) - 1
        if e < 1:
            raise ValueError("f must have degree >= 1")
        if f[e] != base.one:
            raise ValueError("f must be monic")
        for c in f[:e]:
            v = val_p(c)
            if not (v is PRECISION_EXHAUSTED or v >= 1):
                raise ValueError("f is not Eisenstein: a lower coefficient "
                                 "is a unit")
        if val_p(f[0]) != 1:
            raise ValueError("f is not Eisenstein: constant term must have "
                             "valuation exactly 1")
        self.f = tuple(f)
        self.e = e
        self.e1 = Fraction(e, self.p - 1)
        self.M = e * self.N
        self.name = name
        self._cache = {}

    def __repr__(self):
        tag = self.name or f"e={self.e},d={self.d}"
        return f"LocalFieldCtx(p={self.p}, {tag}, N={self.N})"

    # -- constructors ---------------------------------------------------

    def elem(self, coeffs):
        out = []
        for c in coeffs:
            out.append(c if isinstance(c, O0Elem) else self.base.from_int(c))
        if len(out) != self.e:
            raise ValueError("coefficient vector has wrong length")
        return FElem(self, tuple(out))

    def from_int(self, n):
        return self.elem([n] + [0] * (self.e - 1))

    def from_o0(self, c):
        return self.elem([c] + [0] * (self.e - 1))

    @property
    def zero(self):
        return self.from_int(0)

    @property
    def one(self):
        return self.from_int(1)

    @property
    def pi(self):
        if self.e == 1:
            # pi = -f[0] is the chosen uniformizer of an unramified field
            return self.from_o0(-self.f[0])
        return self.monomial(1)

    def monomial(self, i, c=1):
        """c * pi^i for 0 <= i < e."""
        coeffs = [0] * self.e
        coeffs[i] = c
        return self.elem(coeffs)

    # -- cached structural data ------------------------------------------

    @property
    def w_unit(self):
        """The unit pi^e / p (from the Eisenstein relation)."""
        if "w" not in self._cache:
            e = self.e
            coeffs = [(-c).div_exact_p(1) for c in self.f[:e]]
            self._cache["w"] = self.elem(coeffs)
        return self._cache["w"]

    @property
    def w_inv(self):
        if "w_inv" not in self._cache:
            self._cache["w_inv"] = self.w_unit.invert_unit()
        return self._cache["w_inv"]

    @property
    def p_over_pi(self):
        """p * pi^{-1} = pi^{e-1} * w^{-1}, used for division by pi."""
        if "p_over_pi" not in self._cache:
            if self.e == 1:
                self._cache["p_over_pi"] = self.w_inv
            else:
                self._cache["p_over_pi"] = self.monomial(self.e - 1) * self.w_inv
        return self._cache["p_over_pi"]

    @property
    def rho(self):
        """Residue of p * pi^{-e}; multiplication by rho is the graded
        p-power map on levels above e1."""
        if "rho" not in self._cache:
            self._cache["rho"] = self.w_inv.coeffs[0].residue()
        return self._cache["rho"]

    @property
    def omega(self):
        """Teichmuller lift of the fixed residue-field generator."""
        if "omega" not in self._cache:
            gen = self.base.kappa.generator()
            self._cache["omega"] = self.from_o0(self.base.teichmuller(gen))
        return self._cache["omega"]

    @property
    def k(self):
        """Wild exponent: #mu(F) = p^k (q-1)."""
        if "k" not in self._cache:
            self._cache["k"] = _wild_exponent(self)
        return self._cache["k"]

    def teichmuller_power(self, i):
        """omega^i reduced mod q-1 (cached small powers)."""
        i %= self.q - 1
        key = ("omega_pow", i)
        if key not in self._cache:
            self._cache[key] = self.omega ** i
        return self._cache[key]

    # -- descriptors ------------------------------------------------------

    def descriptor(self):
        return {
            "p": self.p,
            "d": self.d,
            "N": self.N,
            "gbar": list(self.base.kappa.gbar),
            "f": [list(c.coeffs) for c in self.f],
            "name": self.name,
        }

    @classmethod
    def from_descriptor(cls, desc):
        base = PadicCtx(desc["p"], desc.get("N", 64), desc.get("d", 1),
                        gbar=desc.get("gbar"))
        f = [base.elem(c) if isinstance(c, list) else base.from_int(c)
             for c in desc["f"]]
        return cls(base, f, name=desc.get("name"))

    @classmethod
    def from_json(cls, text):
        return cls.from_descriptor(json.loads(text))


# ---------------------------------------------------------------------------
# shipped presets
# ---------------------------------------------------------------------------

def qp(p, N=64):
    """Q_p itself (e = 1, f = T - p)."""
    base = PadicCtx(p, N, 1)
    return LocalFieldCtx(base, [-p, 1], name=f"qp-{p}")


def qp_zeta(p, N=64):
    """Q_p(zeta_p) with f = ((T+1)^p - 1)/T; pi = zeta_p - 1."""
    import math
    base = PadicCtx(p, N, 1)
    f = [math.comb(p, j + 1) for j in range(p)]
    return LocalFieldCtx(base, f, name=f"qp-zeta-{p}")


def eisenstein_root(p, e, N=64, d=1):
    """Q_p-extension with f = T^e - p (the e-th root of p), optionally over
    an unramified base of degree d."""
    base = PadicCtx(p, N, d)
    f = [-p] + [0] * (e - 1) + [1]
    name = {2: f"sqrt-{p}", 3: f"cbrt-{p}"}.get(e, f"root{e}-{p}")
    if d > 1:
        name += f"-unram{d}"
    return LocalFieldCtx(base, f, name=name)


def preset(name, N=64):
    """Resolve a preset name: qp-P, qp-zeta-P, sqrt-P, cbrt-P, rootE-P."""
    parts = name.split("-")
    try:
        if parts[0] == "qp" and len(parts) == 2:
            return qp(int(parts[1]), N)
        if parts[0] == "qp" and parts[1] == "zeta":
            return qp_zeta(int(parts[2]), N)
        if parts[0] == "sqrt":
            return eisenstein_root(int(parts[1]), 2, N)
        if parts[0] == "cbrt":
            return eisenstein_root(int(parts[1]), 3, N)
        if parts[0].startswith("root"):
            return eisenstein_root(int(parts[1]), int(parts[0][4:]), N)
    except (ValueError, IndexError):
        pass
    raise UnsupportedField(f"unknown field preset {name!r}")


# ---------------------------------------------------------------------------
# elements
# ---------------------------------------------------------------------------

class FElem:
    """An integral element of F as a coefficient vector over O0."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx, coeffs):
        self.ctx = ctx
        self.coeffs = coeffs

    def __repr__(self):
        return f"FElem({[list(c.coeffs) for c in self.coeffs]})"

    def __eq__(self, other):
        return (isinstance(other, FElem) and self.ctx is other.ctx
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash(tuple(c.coeffs for c in self.coeffs))

    def is_zero(self):
        return all(c.is_zero() for c in self.coeffs)

    def _coerce(self, other):
        if isinstance(other, FElem):
            if other.ctx is not self.ctx:
                raise ValueError("mixed contexts")
            return other
        if isinstance(other, int):
            return self.ctx.from_int(other)
        if isinstance(other, O0Elem):
            return self.ctx.from_o0(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FElem(self.ctx, tuple(a + b for a, b in
                                     zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FElem(self.ctx, tuple(a - b for a, b in
                                     zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        coerced = self._coerce(other)
        if coerced is NotImplemented:
            return NotImplemented
        return coerced - self

    def __neg__(self):
        return FElem(self.ctx, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, O0Elem)):
            scal = other
            return FElem(self.ctx, tuple(a * scal for a in self.coeffs))
        if not isinstance(other, FElem):
            return NotImplemented
        other = self._coerce(other)
        ctx = self.ctx
        e = ctx.e
        conv = [None] * (2 * e - 1) if e > 1 else [None]
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                t = a * b
                conv[i + j] = t if conv[i + j] is None else conv[i + j] + t
        zero = ctx.base.zero
        conv = [c if c is not None else zero for c in conv]
        # reduce by monic f: pi^e = -(f_0 + ... + f_{e-1} pi^{e-1})
        for i in range(2 * e - 2, e - 1, -1):
            c = conv[i]
            if not c.is_zero():
                for j in range(e):
                    conv[i - e + j] = conv[i - e + j] - c * ctx.f[j]
        return FElem(ctx, tuple(conv[:e]))

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            return self.invert_unit() ** (-n)
        r, b = self.ctx.one, self
        while n:
            if n & 1:
                r = r * b
            b = b * b
            n >>= 1
        return r

    # -- valuation-aware helpers ------------------------------------------

    def valuation(self):
        return valuation(self)

    def residue(self):
        """Image in the residue field (the constant coefficient's residue)."""
        return self.coeffs[0].residue()

    def div_p(self):
        """Exact division by p (valuation must be >= e).

        Dividing by pi^v is exact in value but costs v levels of certified
        pi-precision: results are certified mod pi^{M-v}.
        """
        return FElem(self.ctx, tuple(c.div_exact_p(1) for c in self.coeffs))

    def div_pi(self):
        """Exact division by pi (valuation must be >= 1); see div_p for the
        precision cost."""
        ctx = self.ctx
        if ctx.e == 1:
            return FElem(ctx, (self.coeffs[0].div_exact_p(1),)) * ctx.w_inv
        b = self.coeffs[0].div_exact_p(1)
        shifted = FElem(ctx, self.coeffs[1:] + (ctx.base.zero,))
        return shifted + ctx.p_over_pi * b

    def div_pi_pow(self, n):
        """Exact division by pi^n (valuation must be >= n).

        Uses pi^{-e} = p^{-1} w^{-1} blockwise (w is the unit pi^e/p), then
        single pi-divisions for the remainder.
        """
        x = self
        e = self.ctx.e
        k, r = divmod(n, e)
        if k:
            for _ in range(k):
                x = x.div_p()
            x = x * self.ctx.w_inv ** k
        for _ in range(r):
            x = x.div_pi()
        return x

    def invert_unit(self):
        """Inverse of a unit (valuation 0), by Newton from the residue."""
        v = valuation(self)
        if v is PRECISION_EXHAUSTED or v != 0:
            raise BadInput("invert_unit needs a unit (valuation 0)")
        ctx = self.ctx
        y = ctx.from_o0(invert(self.coeffs[0]))
        two = ctx.from_int(2)
        k = 1
        while k < ctx.M:
            y = y * (two - self * y)
            k *= 2
        assert self * y == ctx.one
        return y

    def to_json(self):
        return [c.to_json() for c in self.coeffs]


# ---------------------------------------------------------------------------
# valuation, unit structure
# ---------------------------------------------------------------------------

def valuation(x):
    """pi-adic valuation min_i (e*val_p(a_i) + i), PRECISION_EXHAUSTED if the
    canonical form is the zero vector."""
    e = x.ctx.e
    best = None
    seen = set()
    for i, c in enumerate(x.coeffs):
        v = val_p(c)
        if v is PRECISION_EXHAUSTED:
            continue
        cand = e * v + i
        assert cand not in seen  # candidates are distinct mod e
        seen.add(cand)
        if best is None or cand < best:
            best = cand
    return PRECISION_EXHAUSTED if best is None else best


@dataclass(frozen=True)
class UnitDecomposition:
    """x = pi^n * omega^i * u with u a principal unit."""
    n: int
    i: int
    u: FElem

    def reconstruct(self, ctx):
        return ctx.pi ** self.n * ctx.teichmuller_power(self.i) * self.u


def unit_decompose(x):
    """Split x (nonzero at precision) as pi^n * omega^i * u, u in U^1."""
    n = valuation(x)
    if n is PRECISION_EXHAUSTED:
        raise PrecisionExhausted("cannot decompose an element that is "
                                 "indistinguishable from 0")
    ctx = x.ctx
    y = x.div_pi_pow(n) if n else x
    i = ctx.base.kappa.dlog(y.residue())
    u = y * ctx.teichmuller_power(-i)
    lv = valuation(u - ctx.one)
    assert lv is PRECISION_EXHAUSTED or lv >= 1
    return UnitDecomposition(n, i, u)


def unit_level(u):
    """Largest r with u in U^r = 1 + m^r, i.e. v(u - 1).

    Returns PRECISION_EXHAUSTED when u is indistinguishable from 1.
    Raises NotPrincipalUnit when v(u - 1) <= 0.
    """
    lv = valuation(u - u.ctx.one)
    if lv is PRECISION_EXHAUSTED:
        return PRECISION_EXHAUSTED
    if lv <= 0:
        raise NotPrincipalUnit("v(u-1) <= 0")
    return lv


def leading_digit(u):
    """(level, residue digit) of a principal unit u != 1 at precision."""
    s = unit_level(u)
    if s is PRECISION_EXHAUSTED:
        raise PrecisionExhausted("unit is 1 at working precision")
    z = (u - u.ctx.one).div_pi_pow(s)
    return s, z.residue()


def spanning_units(ctx, lo, hi):
    """The spanning set {1 + omega^a pi^s : lo <= s < hi, 0 <= a < d} of
    U^lo / U^hi (graded pieces are F_q-spaces spanned by omega^a pi^s)."""
    out = []
    one = ctx.one
    for s in range(lo, hi):
        pis = ctx.pi ** s
        for a in range(ctx.d):
            out.append(one + ctx.teichmuller_power(a) * pis)
    return out


# ---------------------------------------------------------------------------
# Z_p-exponentiation
# ---------------------------------------------------------------------------

def zp_exp(u, alpha, ideal=1):
    """(1+x)^alpha = sum_l binom(alpha, l) x^l for u = 1+x in the selected
    ideal.

    `ideal` is a minimal unit-filtration level r >= 1, or any object with an
    ideal_contains(x) predicate (an OrderRm for 1 + maximal-ideal groups).
    alpha is an integer, read as a p-adic integer through its representative;
    binomial coefficients are computed exactly over Z, so for honest integer
    exponents the truncated series is exact mod pi^M.
    """
    ctx = u.ctx
    x = u - ctx.one
    if hasattr(ideal, "ideal_contains"):
        if not ideal.ideal_contains(x):
            raise NotInIdeal("u - 1 is not in the selected ideal")
    else:
        r = int(ideal)
        lv = valuation(x)
        if lv is not PRECISION_EXHAUSTED and lv < r:
            raise NotInIdeal(f"u - 1 has level {lv} < {r}")
    if x.is_zero():
        return ctx.one
    total = ctx.one
    xl = x
    binom = 1
    l = 0
    while not xl.is_zero():
        l += 1
        binom = binom * (alpha - l + 1) // l
        c = binom % ctx.base.mod
        if c:
            total = total + xl * c
        xl = xl * x
        if l > ctx.M + ctx.N:
            raise PrecisionExhausted("binomial series did not terminate")
    return total


# ---------------------------------------------------------------------------
# p-power maps along the unit filtration
# ---------------------------------------------------------------------------

@dataclass
class HasseForwardReport:
    """Observed landing levels of the p-power map on a spanning set of
    U^t / U^{t+depth}."""
    t: int
    required: int
    regime: str  # "below" (t <= e1, bound p*t) or "above" (t > e1, bound t+e)
    entries: list  # (s, a, landing)
    min_landing: int
    ok: bool
    precision: int

    def to_json(self):
        return {
            "t": self.t,
            "required": self.required,
            "regime": self.regime,
            "entries": [list(t) for t in self.entries],
            "min_landing": self.min_landing,
            "ok": self.ok,
            "certified_precision": self.precision,
        }


def hasse_forward(ctx, t, depth=None):
    """Empirically verify the p-power landing bounds on U^t.

    For t <= e1 the bound is (U^t)^p in U^{p*t}; for t > e1 it is
    (U^t)^p in U^{t+e}.  Landing levels are reported per spanning generator
    1 + omega^a pi^s.
    """
    if t < 1:
        raise BadInput("t must be >= 1")
    if depth is None:
        depth = ctx.e
    if depth * ctx.e >= ctx.M:
        raise PrecisionExhausted("spanning depth exceeds working precision")
    if not t * ctx.p < ctx.M // 2:
        raise BadInput("no room at working precision for t*p")
    below = Fraction(t) <= ctx.e1
    required = ctx.p * t if below else t + ctx.e
    entries = []
    one = ctx.one
    for s in range(t, t + depth):
        pis = ctx.pi ** s
        for a in range(ctx.d):
            g = one + ctx.teichmuller_power(a) * pis
            gp = g ** ctx.p
            lv = unit_level(gp)
            landing = ctx.M if lv is PRECISION_EXHAUSTED else lv
            entries.append((s, a, landing))
    min_landing = min(en[2] for en in entries)
    return HasseForwardReport(
        t=t,
        required=required,
        regime="below" if below else "above",
        entries=entries,
        min_landing=min_landing,
        ok=min_landing >= required,
        precision=ctx.M,
    )


def pth_root_in_filtration(w, t):
    """A u in U^t with u^p = w, for w in U^{t+e} and t > e1 (exact rational
    comparison).

    Solved level by level: above e1 the induced map on each graded piece is
    multiplication by the residue of p*pi^{-e}, a bijection, so every digit
    is one residue-field division.  The answer is unique up to mu_p(F).
    """
    ctx = w.ctx
    if not Fraction(t) > ctx.e1:
        raise BelowThreshold(f"t = {t} is not above e1 = {ctx.e1}")
    lv = unit_level(w)
    if lv is PRECISION_EXHAUSTED:
        return ctx.one
    if lv < t + ctx.e:
        raise NotInIdeal(f"w has level {lv} < t + e = {t + ctx.e}")
    kappa = ctx.base.kappa
    rho_inv = kappa.inv(ctx.rho)
    u = ctx.one
    defect = w
    for _ in range(ctx.M + 1):
        dl = valuation(defect - ctx.one)
        if dl is PRECISION_EXHAUSTED:
            break
        s = dl - ctx.e
        assert s >= t
        c = (defect - ctx.one).div_pi_pow(dl).residue()
        a = kappa.mul(c, rho_inv)
        corr = ctx.one + ctx.base.lift_residue(a) * (ctx.pi ** s)
        u = u * corr
        defect = defect * (corr ** ctx.p).invert_unit()
    else:  # pragma: no cover
        raise PrecisionExhausted("digit solving did not terminate")
    return u


# ---------------------------------------------------------------------------
# roots of unity
# ---------------------------------------------------------------------------

def compute_mu(ctx, verify_count=False):
    """#mu(F) as the pair (q-1, p^k).

    The prime-to-p part is q-1 (Teichmuller).  k is found by searching for
    primitive p^j-th roots of unity for j = 1, 2, ... while the necessary
    condition p^{j-1}(p-1) | e holds: candidates are enumerated by residue
    digits from the exact level e/(p^{j-1}(p-1)) up to a Newton-certifiable
    depth and refined; k is the largest j that produces a verified root.
    """
    k = 0
    p, e = ctx.p, ctx.e
    j = 0
    while True:
        j += 1
        eprime = p ** (j - 1) * (p - 1)
        if eprime > e or e % eprime:
            break
        root = _find_zeta(ctx, j, e // eprime, verify_count)
        if root is None:
            break
        k = j
    return ctx.q - 1, p ** k


def _wild_exponent(ctx):
    return _int_log(compute_mu(ctx)[1], ctx.p)


def _int_log(n, p):
    k = 0
    while n > 1:
        n //= p
        k += 1
    return k


def _cyclotomic_value(ctx, j, x):
    """Phi_{p^j}(x) = sum_{i<p} x^{i p^{j-1}} and its derivative at x."""
    z = x ** (ctx.p ** (j - 1))
    acc = ctx.one
    zi = ctx.one
    for _ in range(ctx.p - 1):
        zi = zi * z
        acc = acc + zi
    return acc


def _cyclotomic_derivative(ctx, j, x):
    pj1 = ctx.p ** (j - 1)
    acc = ctx.zero
    for i in range(1, ctx.p):
        acc = acc + (x ** (i * pj1 - 1)) * (i * pj1)
    return acc


def _newton_in_f(ctx, j, x):
    """Refine x against Phi_{p^j}; (root, decay) with decay the certified
    pi-precision spent on divisions, or None when the certificate fails."""
    decay = 0
    for _ in range(2 * ctx.M.bit_length() + 8):
        fx = _cyclotomic_value(ctx, j, x)
        if fx.is_zero():
            return x, decay
        vfx = valuation(fx)
        if vfx is PRECISION_EXHAUSTED or vfx >= ctx.M - decay:
            return x, decay  # vanishes at the certified precision
        fpx = _cyclotomic_derivative(ctx, j, x)
        vfp = valuation(fpx)
        if vfp is PRECISION_EXHAUSTED:
            return None
        if not vfx > 2 * vfp:
            return None
        delta = fx.div_pi_pow(vfp) * (fpx.div_pi_pow(vfp)).invert_unit()
        decay += 2 * vfp
        x = x - delta
        if decay > ctx.M // 2:
            return None  # not enough precision left to certify anything
    return None


def _find_zeta(ctx, j, sstar, verify_count=False):
    """Search for a primitive p^j-th root of unity, 1 + (level-sstar tail).

    Enumeration depth: at least ceil(2e/(p-1)) (documented engineering
    default) and at least the Newton-sufficiency bound
    ceil((j+1)e - ep/(p-1)) derived from the root separation of Phi_{p^j}.
    """
    p, e = ctx.p, ctx.e
    L0 = -((-2 * e) // (p - 1))  # ceil(2e/(p-1))
    bnd = Fraction((j + 1) * e) - Fraction(e * p, p - 1)
    Lsuff = -((-bnd.numerator) // bnd.denominator)  # ceil
    L = max(L0, Lsuff, sstar)
    kappa = ctx.base.kappa
    digits = list(kappa.elements())
    nonzero = [c for c in digits if c != kappa.zero]
    pis = [ctx.pi ** s for s in range(sstar, L + 1)]
    found = []
    for lead in nonzero:
        for tail in _iproduct(digits, repeat=L - sstar):
            x0 = ctx.one + ctx.base.lift_residue(lead) * pis[0]
            for idx, c in enumerate(tail):
                if c != kappa.zero:
                    x0 = x0 + ctx.base.lift_residue(c) * pis[idx + 1]
            refined = _newton_in_f(ctx, j, x0)
            if refined is None:
                continue
            root, decay = refined
            if not _is_primitive_root(ctx, j, root, decay):
                continue
            if not verify_count:
                return root
            # roots from different starts agree only up to division decay
            if all(_distinct_at_half_precision(ctx, root, other)
                   for other in found):
                found.append(root)
    if verify_count and found:
        expected = p ** j - p ** (j - 1)
        assert len(found) == expected, (
            f"found {len(found)} primitive p^{j} roots, expected {expected}")
        return found[0]
    return None


def _distinct_at_half_precision(ctx, a, b):
    v = valuation(a - b)
    return not (v is PRECISION_EXHAUSTED or v >= ctx.M // 2)


def _is_primitive_root(ctx, j, root, decay):
    """Verify root^{p^j} = 1 at the certified precision left after Newton
    (impostors fail already at level ~e/(p-1)) and primitivity."""
    p = ctx.p
    diff = root ** (p ** j) - ctx.one
    v = valuation(diff)
    if not (v is PRECISION_EXHAUSTED or v >= ctx.M - decay):
        return False
    low = root ** (p ** (j - 1)) - ctx.one
    vlow = valuation(low)
    return not (vlow is PRECISION_EXHAUSTED or vlow >= ctx.M - decay)
