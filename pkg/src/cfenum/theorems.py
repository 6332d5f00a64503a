"""Registry binding each continued-fraction theorem, corollary, identity,
conjecture and non-polynomiality witness to its object family, weight map,
optional substitution, and displayed coefficient formulas, together with
verification drivers that compare exact enumeration against expansion of
the fraction, coefficient by coefficient.
"""

from fractions import Fraction
from itertools import accumulate
from math import comb, factorial
import random
import time

from .mpoly import Indeterminate, Monomial, MultiPoly, as_poly, var
from .series import (SFractionSpec, JFractionSpec,
                     expand_sfraction, expand_jfraction,
                     attach_component_weight, indecomposable_series,
                     RationalSeries, jfraction_from_series,
                     TerminatedFraction, NonUnitConstantTerm)
from .permstats import enumerate_perm_polynomial
from .setpartstats import enumerate_sp_polynomial, sp_reverse, \
    sp_stat_totals, setpart_from_blocks, iter_set_partitions
from .matchstats import enumerate_matching_polynomial, touchard_riordan
from .permstats import iter_permutations, perm_index_profile, \
    perm_stat_totals


class UnknownTheorem(KeyError):
    """No theorem registered under that id."""


class UnknownIdentity(KeyError):
    """No identity registered under that id."""


# ---------------------------------------------------------------------------
# Small exact helpers

def pqint(n, p, q):
    """The (p,q)-integer [n]_{p,q} = sum_{j=0}^{n-1} p^j q^{n-1-j}."""
    total = as_poly(0)
    p = as_poly(p)
    q = as_poly(q)
    for j in range(n):
        total = total + p ** j * q ** (n - 1 - j)
    return total


def qint(n, q):
    """[n]_q = 1 + q + ... + q^(n-1)."""
    return pqint(n, q, 1)


def _bell_numbers(m):
    out = [1]
    row = [1]
    for _ in range(m):
        row = list(accumulate([row[-1]] + row))
        out.append(row[0])
    return out


def _zigzag_numbers(m):
    """Euler zigzag numbers 1,1,1,2,5,16,61,... via the boustrophedon
    triangle; entries at even positions are the secant numbers."""
    zz = [1]
    row = [1]
    for n in range(1, m + 1):
        new = [0]
        for k in range(n):
            new.append(new[-1] + row[n - 1 - k])
        row = new
        zz.append(row[-1])
    return zz


def _secant(n):
    return _zigzag_numbers(2 * n)[2 * n]


def _catalan(n):
    return comb(2 * n, n) // (n + 1)


def _double_factorial(n):
    out = 1
    for k in range(1, n + 1):
        out *= 2 * k - 1
    return out


def _stirling2(n):
    """Row S(n,0..n) of Stirling subset numbers."""
    table = [[1]]
    for m in range(1, n + 1):
        prev = table[-1]
        cur = [0] * (m + 1)
        for k in range(1, m + 1):
            cur[k] = (prev[k] * k if k <= m - 1 else 0) + prev[k - 1]
        table.append(cur)
    return table[n]


def _eulerian(n):
    """Row of Eulerian numbers <n,k> (k = number of excedances)."""
    row = [1]
    for m in range(1, n + 1):
        prev = row + [0]
        row = [0] * (m)
        row = [(k + 1) * (prev[k] if k < m else 0)
               + (m - k) * (prev[k - 1] if k >= 1 else 0)
               for k in range(m)]
    return row


# ---------------------------------------------------------------------------
# Shared indeterminates

X, Y, U, V = var("x"), var("y"), var("u"), var("v")
Q_, P_, R_, W_ = var("q"), var("p"), var("r"), var("w")
LAM, ZETA, CVAR = var("lam"), var("zeta"), var("c")
X1, X2, Y1, Y2 = var("x1"), var("x2"), var("y1"), var("y2")
U1, U2, V1, V2 = var("u1"), var("u2"), var("v1"), var("v2")
PP, PM, QP, QM = var("pp"), var("pm"), var("qp"), var("qm")
PP1, PP2, PM1, PM2 = var("pp1"), var("pp2"), var("pm1"), var("pm2")
QP1, QP2, QM1, QM2 = var("qp1"), var("qp2"), var("qm1"), var("qm2")
S_, RP, RM = var("s"), var("rp"), var("rm")
P1, P2, Q1, Q2 = var("p1"), var("p2"), var("q1"), var("q2")
A_, B_, C_, D_ = var("a"), var("b"), var("c"), var("d")
XB, YB = var("xb"), var("yb")


def _w(ell):
    return var("w", ell)


def _mono(pairs):
    exps = {}
    for fam, e in pairs:
        if e:
            v = var(fam)
            exps[v] = exps.get(v, 0) + e
    return Monomial(exps)


# custom weight maps used only by registry entries
def _w_inv_sixstat(sigma, profiles, t):
    return _mono([("a", t.cval), ("b", t.cdrise), ("c", t.cpeak),
                  ("d", t.cdfall), ("w", t.fix), ("q", t.inv)])


def _w_q_inv(sigma, profiles, t):
    return _mono([("q", t.inv)])


# ---------------------------------------------------------------------------
# Cached enumeration

_ENUM_CACHE = {}
_ENUMERATORS = {
    "perm": enumerate_perm_polynomial,
    "setpart": enumerate_sp_polynomial,
    "match": enumerate_matching_polynomial,
}


def _enum(obj, n, family="all", weight="unit", zeta=False):
    wkey = weight if isinstance(weight, str) else \
        "callable:" + getattr(weight, "__name__", str(id(weight)))
    key = (obj, n, family, wkey, zeta)
    hit = _ENUM_CACHE.get(key)
    if hit is None:
        hit = _ENUMERATORS[obj](n, family=family, weight=weight,
                                with_cc_zeta=zeta)
        _ENUM_CACHE[key] = hit
    return hit


def _poly(obj, family="all", weight="unit", subst=None, zeta=False,
          double=False):
    """Enumeration-side polynomial callable n -> MultiPoly.

    With double=True the object size is 2n (cycle-alternating permutations
    of [2n])."""
    def poly(n):
        p = _enum(obj, 2 * n if double else n, family, weight, zeta)
        if subst:
            p = p.substitute(subst)
        return p
    return poly


# ---------------------------------------------------------------------------
# Taylor coefficients of S- and J-fractions via weighted lattice-path
# sums.  Unlike nested series reciprocals, the intermediate polynomial
# sizes here are bounded by the weighted counts of path prefixes, which
# keeps symbolic master weights tractable.

def _jfraction_coeffs(gamma, beta, order):
    """[t^0..t^order] of the J-fraction: Motzkin paths with level steps
    at height h weighted gamma(h) and falls from height h weighted
    beta(h)."""
    coeffs = [as_poly(1)]
    gcache = {}
    bcache = {}

    def g(h):
        if h not in gcache:
            gcache[h] = as_poly(gamma(h))
        return gcache[h]

    def b(h):
        if h not in bcache:
            bcache[h] = as_poly(beta(h))
        return bcache[h]

    state = {0: as_poly(1)}
    for j in range(1, order + 1):
        nxt = {}
        for h, w in state.items():
            # a path at height h must still be able to return to 0
            if h > order - j + 1:
                continue
            nxt[h] = nxt.get(h, as_poly(0)) + w * g(h)
            nxt[h + 1] = nxt.get(h + 1, as_poly(0)) + w
            if h > 0:
                nxt[h - 1] = nxt.get(h - 1, as_poly(0)) + w * b(h)
        state = {h: w for h, w in nxt.items() if w and h <= order - j}
        coeffs.append(state.get(0, as_poly(0)))
    return coeffs


def _sfraction_coeffs(alpha, order):
    """[t^0..t^order] of the S-fraction: Dyck paths of semilength n with
    falls from height h weighted alpha(h)."""
    coeffs = [as_poly(1)]
    acache = {}

    def a(h):
        if h not in acache:
            acache[h] = as_poly(alpha(h))
        return acache[h]

    state = {0: as_poly(1)}
    for j in range(1, 2 * order + 1):
        nxt = {}
        for h, w in state.items():
            if h <= 2 * order - j - 1:
                nxt[h + 1] = nxt.get(h + 1, as_poly(0)) + w
            if h > 0:
                nxt[h - 1] = nxt.get(h - 1, as_poly(0)) + w * a(h)
        state = {h: w for h, w in nxt.items() if w}
        if j % 2 == 0:
            coeffs.append(state.get(0, as_poly(0)))
    return coeffs


# ---------------------------------------------------------------------------
# Master-formula coefficient builders (for coherence checks)

def _star(f, m):
    """sum_{l=0}^{m} f(l, m-l); zero when m < 0."""
    total = as_poly(0)
    for ell in range(m + 1):
        total = total + as_poly(f(ell, m - ell))
    return total


def _perm_master1_cf(afun, bfun, cfun, dfun, efun):
    def gamma(n):
        if n == 0:
            return as_poly(efun(0))
        return _star(cfun, n - 1) + _star(dfun, n - 1) + as_poly(efun(n))

    def beta(n):
        return _star(afun, n - 1) * _star(bfun, n - 1)

    return gamma, beta


def _sp_master_cf(afun, bfun, dfun, efun):
    def gamma(n):
        if n == 0:
            return as_poly(efun(0))
        return _star(dfun, n - 1) + as_poly(efun(n))

    def beta(n):
        return _star(afun, n - 1) * as_poly(bfun(n - 1))

    return gamma, beta


def _s_coherence(label, derived, displayed, count=8):
    out = []
    for k in range(1, count + 1):
        ok = as_poly(derived(k)) == as_poly(displayed(k))
        out.append({"check": "%s: alpha_%d" % (label, k), "ok": ok})
    return out


def _j_coherence(label, dg, db, gg, gb, count=8):
    out = []
    for n in range(count + 1):
        ok = as_poly(dg(n)) == as_poly(gg(n))
        out.append({"check": "%s: gamma_%d" % (label, n), "ok": ok})
    for n in range(1, count + 1):
        ok = as_poly(db(n)) == as_poly(gb(n))
        out.append({"check": "%s: beta_%d" % (label, n), "ok": ok})
    return out


# ---------------------------------------------------------------------------
# Registry machinery

class TheoremCase:
    """One registered theorem/corollary/identity/conjecture/witness."""

    def __init__(self, tid, kind, description, n_max,
                 poly=None, alpha=None, gamma=None, beta=None,
                 series=None, extra=None, identity=None, witness=None):
        self.id = tid
        self.kind = kind
        self.description = description
        self.n_max = n_max
        self.poly = poly
        self.alpha = alpha
        self.gamma = gamma
        self.beta = beta
        self.series = series
        self.extra = extra
        self.identity = identity
        self.witness = witness


class VerificationReport:
    """Outcome of one verification run."""

    def __init__(self, theorem_id, kind, n_max, order, ok, checks,
                 first_discrepancy=None, wall_time=0.0, seed=None):
        self.theorem_id = theorem_id
        self.kind = kind
        self.n_max = n_max
        self.order = order
        self.ok = ok
        self.checks = checks
        self.first_discrepancy = first_discrepancy
        self.wall_time = wall_time
        self.seed = seed

    def to_dict(self):
        return {
            "id": self.theorem_id,
            "kind": self.kind,
            "n_max": self.n_max,
            "order": self.order,
            "ok": self.ok,
            "checks": self.checks,
            "first_discrepancy": self.first_discrepancy,
            "wall_time": round(self.wall_time, 6),
            "seed": self.seed,
        }


REGISTRY = {}


def _register(case):
    if case.id in REGISTRY:
        raise ValueError("duplicate theorem id %r" % (case.id,))
    REGISTRY[case.id] = case
    return case


# alternate spellings accepted by the lookup functions
ALIASES = {
    "sp.master.J1": "sp.masterJ1",
    "sp.master.J2": "sp.masterJ2",
    "sp.master.J3": "sp.masterJ3",
    "sp.master.J4": "sp.masterJ4",
    "sp.master.S": "sp.masterS",
}


def list_theorems():
    return sorted(REGISTRY)


def list_identities():
    return sorted(t for t, c in REGISTRY.items() if c.kind == "Identity")


def _get(tid):
    tid = ALIASES.get(tid, tid)
    try:
        return REGISTRY[tid]
    except KeyError:
        raise UnknownTheorem(tid) from None


def verify_theorem(tid, n_max=None, order=None, seed=0):
    case = _get(tid)
    if case.kind == "Identity":
        return check_identity(tid, n_max)
    t0 = time.time()
    n_max = case.n_max if n_max is None else n_max
    checks = []
    ok = True
    first = None
    if case.kind == "Witness":
        checks = case.witness(seed)
        for e in checks:
            if not e["ok"]:
                ok = False
                if first is None:
                    first = e
    else:
        order = n_max if order is None else max(order, n_max)
        if case.series is not None:
            coeffs = case.series(order).coeffs
        elif case.alpha is not None:
            coeffs = _sfraction_coeffs(case.alpha, order)
        else:
            coeffs = _jfraction_coeffs(case.gamma, case.beta, order)
        for n in range(n_max + 1):
            expected = as_poly(case.poly(n))
            got = coeffs[n]
            good = expected == got
            entry = {"n": n, "ok": good}
            if not good:
                ok = False
                diff = expected - got
                mon, _ = diff.sorted_terms()[0]
                entry["discrepancy"] = {
                    "monomial": repr(mon),
                    "expected": expected.coeff_of(mon),
                    "got": got.coeff_of(mon)}
                if first is None:
                    first = entry["discrepancy"]
            checks.append(entry)
        if case.extra is not None:
            for e in case.extra(n_max):
                checks.append(e)
                if not e["ok"]:
                    ok = False
                    if first is None:
                        first = e
    return VerificationReport(tid, case.kind, n_max, order, ok, checks,
                              first, time.time() - t0, seed)


def check_identity(tid, n_max=None):
    case = REGISTRY.get(ALIASES.get(tid, tid))
    if case is None or case.kind != "Identity":
        raise UnknownIdentity(tid)
    t0 = time.time()
    n_max = case.n_max if n_max is None else n_max
    checks = []
    ok = True
    first = None
    for n in range(n_max + 1):
        good, detail = case.identity(n)
        entry = {"n": n, "ok": good}
        if detail is not None:
            entry["detail"] = detail
        if not good:
            ok = False
            if first is None:
                first = entry
        checks.append(entry)
    return VerificationReport(tid, "Identity", n_max, None, ok, checks,
                              first, time.time() - t0)


def test_conjecture_v2(n_max=None, order=None):
    return verify_theorem("conj.v2.full", n_max=n_max, order=order)


def expand_registered(tid, order):
    """Taylor coefficients [t^0..t^order] of a registered fraction."""
    case = _get(tid)
    if case.series is not None:
        return list(case.series(order).coeffs)
    if case.alpha is not None:
        return _sfraction_coeffs(case.alpha, order)
    if case.gamma is not None:
        return _jfraction_coeffs(case.gamma, case.beta, order)
    raise UnknownTheorem("%s is not a fraction entry" % (tid,))


def _alt(odd, even):
    """S-fraction coefficient function from odd/even formulas in k."""
    def alpha(m):
        k = (m + 1) // 2
        return odd(k) if m % 2 else even(k)
    return alpha


def _cmp_extra(label, lhs, rhs, n_lo=0):
    """Extra check comparing two n-indexed polynomial callables."""
    def extra(n_max):
        out = []
        for n in range(n_lo, n_max + 1):
            ok = as_poly(lhs(n)) == as_poly(rhs(n))
            out.append({"check": "%s: n=%d" % (label, n), "ok": ok})
        return out
    return extra


def _merge_extras(*extras):
    def extra(n_max):
        out = []
        for e in extras:
            if e is not None:
                out.extend(e(n_max))
        return out
    return extra


def _const_extra(checks):
    def extra(n_max):
        return checks
    return extra


def _capped_cmp(label, lhs, rhs, cap):
    """Extra check with its own cap on n, independent of n_max."""
    def extra(n_max):
        out = []
        for n in range(min(n_max, cap) + 1):
            ok = as_poly(lhs(n)) == as_poly(rhs(n))
            out.append({"check": "%s: n=%d" % (label, n), "ok": ok})
        return out
    return extra


# ===========================================================================
# Classics (verified against independent integer-sequence oracles)

_register(TheoremCase(
    "perm.euler.factorial", "SFraction",
    "n! has the S-fraction with alpha_{2k-1} = alpha_{2k} = k.",
    8,
    poly=lambda n: factorial(n),
    alpha=lambda m: (m + 1) // 2,
    extra=_capped_cmp("enumeration equals n!", _poly("perm"),
                      lambda n: factorial(n), 6),
))

_register(TheoremCase(
    "perm.catalan.classic", "SFraction",
    "321-avoiding permutations are counted by Catalan numbers; alpha_n = 1.",
    8,
    poly=lambda n: _catalan(n),
    alpha=lambda m: 1,
    extra=_capped_cmp("enumeration equals Catalan",
                      _poly("perm", family="avoid321"),
                      lambda n: _catalan(n), 7),
))

_register(TheoremCase(
    "perm.secant.classic", "SFraction",
    "Cycle-alternating permutations of [2n] are counted by secant numbers; "
    "alpha_n = n^2.",
    8,
    poly=lambda n: _secant(n),
    alpha=lambda m: m * m,
    extra=_capped_cmp("enumeration equals E_{2n}",
                      _poly("perm", family="cycle_alternating", double=True),
                      lambda n: _secant(n), 4),
))

_register(TheoremCase(
    "sp.bell.classic", "SFraction",
    "Bell numbers: alpha_{2k-1} = 1, alpha_{2k} = k.",
    8,
    poly=lambda n: _bell_numbers(n)[n],
    alpha=_alt(lambda k: 1, lambda k: k),
    extra=_capped_cmp("enumeration equals Bell",
                      _poly("setpart"),
                      lambda n: _bell_numbers(n)[n], 9),
))

_register(TheoremCase(
    "match.doublefact.classic", "SFraction",
    "(2n-1)!! counts perfect matchings of [2n]; alpha_n = n.",
    8,
    poly=lambda n: _double_factorial(n),
    alpha=lambda m: m,
    extra=_capped_cmp("enumeration equals (2n-1)!!",
                      _poly("match"),
                      lambda n: _double_factorial(n), 6),
))


# ===========================================================================
# Permutations: four-variable S-fraction and its specializations

_fourvar_alpha = _alt(lambda k: X + (k - 1) * U, lambda k: Y + (k - 1) * V)

_register(TheoremCase(
    "perm.S.2var", "SFraction",
    "Record classification: sum over S_n of x^arec y^erec u^(non-record "
    "anti-excedance part) v^(non-record excedance part).",
    8,
    poly=_poly("perm", weight="four-var-arec"),
    alpha=_fourvar_alpha,
))

_register(TheoremCase(
    "perm.S.2var.cyc", "SFraction",
    "Cycle form: x^cyc replaces x^arec; same S-fraction coefficients.",
    8,
    poly=_poly("perm", weight="four-var-cyc"),
    alpha=_fourvar_alpha,
))


def _rising_product(n, first, step):
    total = as_poly(1)
    for j in range(n):
        total = total * (as_poly(first) + j * as_poly(step))
    return total


_register(TheoremCase(
    "perm.stirling.cycle", "SFraction",
    "Stirling cycle polynomials x(x+1)...(x+n-1).",
    8,
    poly=_poly("perm", weight="four-var-cyc", subst={"y": 1, "u": 1, "v": 1}),
    alpha=_alt(lambda k: X + (k - 1), lambda k: k),
    extra=_merge_extras(
        _capped_cmp("product formula",
                    _poly("perm", weight="four-var-cyc",
                          subst={"y": 1, "u": 1, "v": 1}),
                    lambda n: _rising_product(n, X, 1), 8),
        _capped_cmp("homogeneous product formula",
                    _poly("perm", weight="four-var-cyc",
                          subst={"u": Y, "v": Y}),
                    lambda n: _rising_product(n, X, Y), 8)),
))


def _eulerian_poly(n):
    row = _eulerian(n)
    total = as_poly(0)
    for k, c in enumerate(row):
        total = total + c * as_poly(X) ** (n - k) * as_poly(Y) ** k
    return total


_register(TheoremCase(
    "perm.eulerian", "SFraction",
    "Homogenized Eulerian polynomials sum <n k> x^(n-k) y^k.",
    8,
    poly=_poly("perm", weight="four-var-arec", subst={"u": X, "v": Y}),
    alpha=_alt(lambda k: k * X, lambda k: k * Y),
    extra=_capped_cmp("Eulerian-number oracle",
                      _poly("perm", weight="four-var-arec",
                            subst={"u": X, "v": Y}),
                      _eulerian_poly, 8),
))

_register(TheoremCase(
    "perm.cyc.exc", "SFraction",
    "Cycle and excedance statistics: sum x^cyc y^exc u^(n-exc-cyc).",
    8,
    poly=_poly("perm", weight="four-var-cyc", subst={"v": Y}),
    alpha=_alt(lambda k: X + (k - 1) * U, lambda k: k * Y),
))

_register(TheoremCase(
    "perm.dumont.kreweras", "SFraction",
    "Record statistics with a joint non-record variable: "
    "sum x^arec y^erec c^nrar.",
    8,
    poly=_poly("perm", weight="four-var-arec", subst={"u": CVAR, "v": CVAR}),
    alpha=_alt(lambda k: X + (k - 1) * CVAR, lambda k: Y + (k - 1) * CVAR),
))


def _narayana_poly(n):
    if n == 0:
        return as_poly(1)
    total = as_poly(0)
    for k in range(1, n + 1):
        c = comb(n, k) * comb(n, k - 1) // n
        total = total + c * as_poly(X) ** k * as_poly(Y) ** (n - k)
    return total


_register(TheoremCase(
    "perm.narayana", "SFraction",
    "Narayana polynomials over 321-avoiding permutations: "
    "sum x^arec y^erec; alpha alternates x, y.",
    8,
    poly=_poly("perm", family="avoid321", weight="two-var"),
    alpha=_alt(lambda k: X, lambda k: Y),
    extra=_capped_cmp("Narayana closed form",
                      _poly("perm", family="avoid321", weight="two-var"),
                      _narayana_poly, 8),
))


# ===========================================================================
# Permutations: J-fractions

def _perm_j1_gamma(n):
    if n == 0:
        return as_poly(_w(0))
    return (X2 + (n - 1) * U2) + (Y2 + (n - 1) * V2) + _w(n)


def _perm_j1_beta(n):
    return (X1 + (n - 1) * U1) * (Y1 + (n - 1) * V1)


def _tenvar_master_families():
    afun = lambda l, lp: Y1 if lp == 0 else V1
    bfun = lambda l, lp: X1 if lp == 0 else U1
    cfun = lambda l, lp: X2 if lp == 0 else U2
    dfun = lambda l, lp: Y2 if lp == 0 else V2
    efun = lambda l: _w(l)
    return afun, bfun, cfun, dfun, efun


def _perm_j1_coherence(n_max):
    dg, db = _perm_master1_cf(*_tenvar_master_families())
    return _j_coherence("derived from first master J-fraction",
                        dg, db, _perm_j1_gamma, _perm_j1_beta)


_register(TheoremCase(
    "perm.J1", "JFraction",
    "Ten-variable record-and-cycle classification with fixed points "
    "refined by level.",
    7,
    poly=_poly("perm", weight="ten-var"),
    gamma=_perm_j1_gamma,
    beta=_perm_j1_beta,
    extra=_perm_j1_coherence,
))


def _conj_v2_gamma(n):
    if n == 0:
        return LAM * _w(0)
    return (X2 + (n - 1) * U2) + (Y2 + (n - 1) * V2) + LAM * _w(n)


def _conj_v2_beta(n):
    return (LAM + (n - 1)) * (X1 + (n - 1) * U1) * Y1


_register(TheoremCase(
    "conj.v2.full", "ConjectureForward",
    "Conjectured J-fraction for the ten-variable polynomial with "
    "lambda^cyc, specialized to v1 = y1.",
    7,
    poly=_poly("perm", weight="ten-var-cyc", subst={"v1": Y1}),
    gamma=_conj_v2_gamma,
    beta=_conj_v2_beta,
))

_register(TheoremCase(
    "perm.J2.weak", "JFraction",
    "Proven second J-fraction: v1 = y1 and v2 = y2, with lambda^cyc.",
    7,
    poly=_poly("perm", weight="ten-var-cyc", subst={"v1": Y1, "v2": Y2}),
    gamma=lambda n: LAM * _w(0) if n == 0 else
        (X2 + (n - 1) * U2) + n * Y2 + LAM * _w(n),
    beta=_conj_v2_beta,
))


def _perm_big_gamma(n):
    if n == 0:
        return as_poly(_w(0))
    return ((PM2 ** (n - 1)) * X2 + QM2 * pqint(n - 1, PM2, QM2) * U2) \
        + ((PP2 ** (n - 1)) * Y2 + QP2 * pqint(n - 1, PP2, QP2) * V2) \
        + (S_ ** n) * _w(n)


def _perm_big_beta(n):
    return ((PM1 ** (n - 1)) * X1 + QM1 * pqint(n - 1, PM1, QM1) * U1) \
        * ((PP1 ** (n - 1)) * Y1 + QP1 * pqint(n - 1, PP1, QP1) * V1)


def _big_master_families():
    afun = lambda l, lp: (PP1 ** l) * (QP1 ** lp) * (Y1 if lp == 0 else V1)
    bfun = lambda l, lp: (PM1 ** l) * (QM1 ** lp) * (X1 if lp == 0 else U1)
    cfun = lambda l, lp: (PM2 ** l) * (QM2 ** lp) * (X2 if lp == 0 else U2)
    dfun = lambda l, lp: (PP2 ** l) * (QP2 ** lp) * (Y2 if lp == 0 else V2)
    efun = lambda l: (S_ ** l) * _w(l)
    return afun, bfun, cfun, dfun, efun


def _perm_big_coherence(n_max):
    dg, db = _perm_master1_cf(*_big_master_families())
    return _j_coherence("derived from first master J-fraction",
                        dg, db, _perm_big_gamma, _perm_big_beta)


_register(TheoremCase(
    "perm.pq.J.BIG", "JFraction",
    "Grand J-fraction: ten record/cycle variables plus eight "
    "crossing/nesting variables and s for pseudo-nesting levels.",
    7,
    poly=_poly("perm", weight="big"),
    gamma=_perm_big_gamma,
    beta=_perm_big_beta,
    extra=_perm_big_coherence,
))


def _perm_pq11_gamma(n):
    if n == 0:
        return as_poly(1)
    return pqint(n, PP2, QP2) * RP + pqint(n, PM2, QM2) * RM + S_ ** n


def _perm_pq11_beta(n):
    return pqint(n, PP1, QP1) * pqint(n, PM1, QM1)


_PQ11_FROM_BIG = {"x1": 1, "y1": 1, "u1": 1, "v1": 1,
                  "x2": RM, "u2": RM, "y2": RP, "v2": RP,
                  "w": lambda *idx: 1}


def _perm_pq11_coherence(n_max):
    dg = lambda n: as_poly(_perm_big_gamma(n)).substitute(_PQ11_FROM_BIG)
    db = lambda n: as_poly(_perm_big_beta(n)).substitute(_PQ11_FROM_BIG)
    return _j_coherence("specialization of the grand J-fraction",
                        dg, db, _perm_pq11_gamma, _perm_pq11_beta)


_register(TheoremCase(
    "perm.pq.crossnest.J", "JFraction",
    "Pure crossing/nesting statistics: eleven-variable J-fraction with "
    "(p,q)-integer coefficients.",
    7,
    poly=_poly("perm", weight="pq-eleven"),
    gamma=_perm_pq11_gamma,
    beta=_perm_pq11_beta,
    extra=_perm_pq11_coherence,
))

_PQ_S_SPEC = {"pp1": PP, "pp2": PP, "qp1": QP, "qp2": QP,
              "pm1": PM, "pm2": PM, "qm1": QM, "qm2": QM,
              "rp": 1, "rm": PM, "s": QM}

_register(TheoremCase(
    "perm.pq.crossnest.S", "SFraction",
    "S-fraction corollary of the crossing/nesting J-fraction: "
    "alpha_{2k-1} = [k]_{p-,q-}, alpha_{2k} = [k]_{p+,q+}.",
    7,
    poly=_poly("perm", weight="pq-eleven", subst=_PQ_S_SPEC),
    alpha=_alt(lambda k: pqint(k, PM, QM), lambda k: pqint(k, PP, QP)),
))

_eightvar_alpha = _alt(
    lambda k: (PM ** (k - 1)) * X + QM * pqint(k - 1, PM, QM) * U,
    lambda k: (PP ** (k - 1)) * Y + QP * pqint(k - 1, PP, QP) * V)

_register(TheoremCase(
    "perm.pq.S.BIG1", "SFraction",
    "Eight-variable S-fraction: records with crossing/nesting refinements.",
    8,
    poly=_poly("perm", weight="eight-var-pq"),
    alpha=_eightvar_alpha,
))

_ZENG89_SPEC = {"x": X, "y": Q_ * Y, "u": 1, "v": Q_,
                "pp": Q_, "pm": Q_, "qp": Q_ ** 2, "qm": Q_ ** 2}

_zeng89_alpha = _alt(
    lambda k: (Q_ ** (k - 1)) * X + (Q_ ** k) * qint(k - 1, Q_),
    lambda k: (Q_ ** k) * Y + (Q_ ** (k + 1)) * qint(k - 1, Q_))


def _zeng89_coherence(n_max):
    derived = lambda m: as_poly(_eightvar_alpha(m)).substitute(_ZENG89_SPEC)
    return _s_coherence("specialization of the eight-variable S-fraction",
                        derived, _zeng89_alpha)


_register(TheoremCase(
    "perm.zeng89", "SFraction",
    "Inversion-weighted records: sum x^arec y^erec q^inv.",
    8,
    poly=_poly("perm", weight="two-var-inv"),
    alpha=_zeng89_alpha,
    extra=_zeng89_coherence,
))


# ===========================================================================
# Permutations: master fractions

def _master1_sym():
    afun = lambda l, lp: var("a", l, lp)
    bfun = lambda l, lp: var("b", l, lp)
    cfun = lambda l, lp: var("c", l, lp)
    dfun = lambda l, lp: var("d", l, lp)
    efun = lambda l: var("e", l)
    return afun, bfun, cfun, dfun, efun


_pm1_gamma, _pm1_beta = _perm_master1_cf(*_master1_sym())

_register(TheoremCase(
    "perm.masterJ1", "JFraction",
    "First master J-fraction: per-index weights a/b/c/d indexed by "
    "crossing and nesting counts, e by fixed-point level.",
    7,
    poly=_poly("perm", weight="master1"),
    gamma=_pm1_gamma,
    beta=_pm1_beta,
))

_MASTERS1_SPEC = {
    "a": lambda l, lp: (PP ** l) * (QP ** lp) * (Y if lp == 0 else V),
    "d": lambda l, lp: (PP ** l) * (QP ** lp) * (Y if lp == 0 else V),
    "b": lambda l, lp: (PM ** l) * (QM ** lp) * (X if lp == 0 else U),
    "c": lambda l, lp: (PM ** (l + 1)) * (QM ** lp) * (X if lp == 0 else U),
    "e": lambda l: as_poly(X) if l == 0 else (QM ** l) * U,
}

_register(TheoremCase(
    "perm.masterS1", "SFraction",
    "First master S-fraction realized with d = a; the substituted "
    "enumeration collapses to the eight-variable S-fraction.",
    7,
    poly=_poly("perm", weight="master1", subst=_MASTERS1_SPEC),
    alpha=_eightvar_alpha,
    extra=_capped_cmp("equals the eight-variable enumeration",
                      _poly("perm", weight="master1", subst=_MASTERS1_SPEC),
                      _poly("perm", weight="eight-var-pq"), 7),
))


def _perm_pqj2_gamma(n):
    if n == 0:
        return LAM * _w(0)
    return ((PM2 ** (n - 1)) * X2 + QM2 * pqint(n - 1, PM2, QM2) * U2) \
        + n * (PP2 ** (n - 1)) * Y2 + LAM * (S_ ** n) * _w(n)


def _perm_pqj2_beta(n):
    return (LAM + (n - 1)) \
        * ((PM1 ** (n - 1)) * X1 + QM1 * pqint(n - 1, PM1, QM1) * U1) \
        * (PP1 ** (n - 1)) * Y1


_register(TheoremCase(
    "perm.pq.J2", "JFraction",
    "Second grand J-fraction with lambda^cyc, at v1=y1, v2=y2, "
    "q+1=p+1 and q+2=p+2.",
    7,
    poly=_poly("perm", weight="big-cyc",
               subst={"v1": Y1, "v2": Y2, "qp1": PP1, "qp2": PP2}),
    gamma=_perm_pqj2_gamma,
    beta=_perm_pqj2_beta,
))

_register(TheoremCase(
    "perm.pq.S2.cyc", "SFraction",
    "Second (p,q) S-fraction with lambda^cyc over seven statistics.",
    8,
    poly=_poly("perm", weight="seven-var-cyc"),
    alpha=_alt(lambda k: (LAM + (k - 1)) * (PP ** (k - 1)) * Y,
               lambda k: (PM ** (k - 1)) * X + QM * pqint(k - 1, PM, QM) * U),
))


def _pm2_gamma(n):
    if n == 0:
        return LAM * var("e", 0)
    d_nat = as_poly(0)
    for ell in range(n):
        d_nat = d_nat + var("d", n - 1, ell)
    return _star(lambda l, lp: var("c", l, lp), n - 1) + d_nat \
        + LAM * var("e", n)


def _pm2_beta(n):
    return (LAM + (n - 1)) * var("a", n - 1) \
        * _star(lambda l, lp: var("b", l, lp), n - 1)


_register(TheoremCase(
    "perm.masterJ2", "JFraction",
    "Second master J-fraction with lambda^cyc; cycle valleys carry a "
    "single crossing+nesting index, double rises a second index from "
    "the cycle predecessor.",
    7,
    poly=_poly("perm", weight="master2"),
    gamma=_pm2_gamma,
    beta=_pm2_beta,
))

_MASTERS2_SPEC = {
    "c": lambda i, j: var("b", i, j),
    "d": lambda k, l: var("a", k + 1),
    "e": lambda l: var("a", l),
}

_register(TheoremCase(
    "perm.masterS2", "SFraction",
    "Second master S-fraction: c = b, d and e collapse onto a.",
    7,
    poly=_poly("perm", weight="master2", subst=_MASTERS2_SPEC),
    alpha=_alt(lambda k: (LAM + (k - 1)) * var("a", k - 1),
               lambda k: _star(lambda l, lp: var("b", l, lp), k - 1)),
))


# ===========================================================================
# Permutations: inversion-weighted J-fraction

_register(TheoremCase(
    "perm.inv.sixstat", "JFraction",
    "Weights a^cval b^cdrise c^cpeak d^cdfall w^fix q^inv.",
    7,
    poly=_poly("perm", weight=_w_inv_sixstat),
    gamma=lambda n: as_poly(W_) if n == 0 else
        (Q_ ** n) * qint(n, Q_) * (B_ + D_) + (Q_ ** (2 * n)) * W_,
    beta=lambda n: (Q_ ** (2 * n - 1)) * qint(n, Q_) ** 2 * A_ * C_,
))


# ===========================================================================
# Permutations: 321-avoiding

_register(TheoremCase(
    "perm.321.J", "JFraction",
    "321-avoiding permutations: nesting variables drop out.",
    7,
    poly=_poly("perm", family="avoid321", weight="big"),
    gamma=lambda n: as_poly(_w(0)) if n == 0 else
        (PM2 ** (n - 1)) * X2 + (PP2 ** (n - 1)) * Y2,
    beta=lambda n: (PM1 ** (n - 1)) * (PP1 ** (n - 1)) * X1 * Y1,
))

_register(TheoremCase(
    "perm.321.S", "SFraction",
    "321-avoiding S-fraction: alpha_{2k-1} = p-^(k-1) x, "
    "alpha_{2k} = p+^(k-1) y.",
    8,
    poly=_poly("perm", family="avoid321", weight="eight-var-pq"),
    alpha=_alt(lambda k: (PM ** (k - 1)) * X, lambda k: (PP ** (k - 1)) * Y),
))


# ===========================================================================
# Permutations: cycle-alternating (objects live in S_{2n})

_ca_alpha_1 = lambda m: (X1 + (m - 1) * U1) * (Y1 + (m - 1) * V1)

_register(TheoremCase(
    "perm.ca.S", "SFraction",
    "Cycle-alternating record statistics: "
    "alpha_n = [x1+(n-1)u1][y1+(n-1)v1].",
    4,
    poly=_poly("perm", family="cycle_alternating", weight="ten-var",
               double=True),
    alpha=_ca_alpha_1,
))

_ca_pq_alpha = lambda m: \
    ((PM1 ** (m - 1)) * X1 + QM1 * pqint(m - 1, PM1, QM1) * U1) \
    * ((PP1 ** (m - 1)) * Y1 + QP1 * pqint(m - 1, PP1, QP1) * V1)

_register(TheoremCase(
    "perm.ca.pq.S", "SFraction",
    "Cycle-alternating records with crossing/nesting refinements.",
    4,
    poly=_poly("perm", family="cycle_alternating", weight="big",
               double=True),
    alpha=_ca_pq_alpha,
))

_register(TheoremCase(
    "perm.ca.masterS1", "SFraction",
    "First master S-fraction for cycle-alternating permutations: "
    "alpha_n = a*_{n-1} b*_{n-1}.",
    4,
    poly=_poly("perm", family="cycle_alternating", weight="master1",
               double=True),
    alpha=lambda m: _star(lambda l, lp: var("a", l, lp), m - 1)
        * _star(lambda l, lp: var("b", l, lp), m - 1),
))

_register(TheoremCase(
    "perm.ca.S2", "SFraction",
    "Second cycle-alternating S-fraction with lambda^cyc (v1 = y1).",
    4,
    poly=_poly("perm", family="cycle_alternating", weight="ten-var-cyc",
               subst={"v1": Y1}, double=True),
    alpha=lambda m: (LAM + (m - 1)) * (X1 + (m - 1) * U1) * Y1,
))

_register(TheoremCase(
    "perm.ca.pq.S2", "SFraction",
    "Second cycle-alternating (p,q) S-fraction with lambda^cyc.",
    4,
    poly=_poly("perm", family="cycle_alternating", weight="big-cyc",
               subst={"v1": Y1, "qp1": PP1}, double=True),
    alpha=lambda m: (LAM + (m - 1))
        * ((PM1 ** (m - 1)) * X1 + QM1 * pqint(m - 1, PM1, QM1) * U1)
        * (PP1 ** (m - 1)) * Y1,
))

_register(TheoremCase(
    "perm.ca.masterS2", "SFraction",
    "Second master S-fraction for cycle-alternating permutations: "
    "alpha_n = (lambda+n-1) a_{n-1} b*_{n-1}.",
    4,
    poly=_poly("perm", family="cycle_alternating", weight="master2",
               double=True),
    alpha=lambda m: (LAM + (m - 1)) * var("a", m - 1)
        * _star(lambda l, lp: var("b", l, lp), m - 1),
))

_QSECANT_SPEC = {"x1": 1, "u1": 1, "y1": Q_, "v1": Q_,
                 "pp1": Q_, "pm1": Q_, "qp1": Q_ ** 2, "qm1": Q_ ** 2}

_qsecant_alpha = lambda m: (Q_ ** (2 * m - 1)) * qint(m, Q_) ** 2


def _qsecant_coherence(n_max):
    derived = lambda m: as_poly(_ca_pq_alpha(m)).substitute(_QSECANT_SPEC)
    return _s_coherence("specialization of the cycle-alternating "
                        "(p,q) S-fraction", derived, _qsecant_alpha)


_register(TheoremCase(
    "perm.ca.qsecant", "SFraction",
    "q-secant numbers: sum of q^inv over cycle-alternating permutations; "
    "alpha_n = q^(2n-1) [n]_q^2.",
    4,
    poly=_poly("perm", family="cycle_alternating", weight=_w_q_inv,
               double=True),
    alpha=_qsecant_alpha,
    extra=_qsecant_coherence,
))


# ===========================================================================
# Permutations: connected components

def _fourvar_spec():
    return SFractionSpec(_fourvar_alpha)


_register(TheoremCase(
    "perm.cc.zeta", "SFraction",
    "Insert zeta^cc into the four-variable polynomial: multiply alpha_1 "
    "by zeta.",
    6,
    poly=_poly("perm", weight="four-var-arec", zeta=True),
    alpha=lambda m: ZETA * _fourvar_alpha(1) if m == 1 else _fourvar_alpha(m),
))

_register(TheoremCase(
    "perm.indecomposable", "SFraction",
    "Indecomposable permutations: generating function 1 - 1/f.",
    6,
    poly=lambda n: as_poly(0) if n == 0 else
        _enum("perm", n, "indecomposable", "four-var-arec"),
    series=lambda order: indecomposable_series(
        expand_sfraction(_fourvar_spec(), order)),
))


# ===========================================================================
# Permutations: non-polynomiality witnesses

def _random_fraction(rng):
    return Fraction(rng.choice([i for i in range(-9, 10) if i != 0]),
                    rng.randint(1, 5))


def _witness_checks(seed, weights_id, names, admissible, gamma_formulas,
                    beta_formulas, count=20):
    rng = random.Random(seed)
    polys = [_enum("perm", n, "all", weights_id) for n in range(6)]
    vs = [var(nm) for nm in names]
    checks = []
    attempts = 0
    while len(checks) < count and attempts < 100000:
        attempts += 1
        vals = [_random_fraction(rng) for _ in names]
        if not admissible(*vals):
            continue
        point = dict(zip(vs, vals))
        coeffs = [Fraction(p.evaluate(point)) for p in polys]
        try:
            gammas, betas = jfraction_from_series(
                RationalSeries(coeffs), 2)
        except (TerminatedFraction, NonUnitConstantTerm, ZeroDivisionError):
            continue
        exp_g = [f(*vals) for f in gamma_formulas]
        exp_b = [f(*vals) for f in beta_formulas]
        ok = gammas == exp_g and betas == exp_b
        checks.append({
            "check": "point %s" % (tuple(str(v) for v in vals),),
            "ok": ok})
    return checks


def _witness_cyc_nonpoly(seed):
    def admissible(x, y, lam):
        bad = (x in (-1, 0, 1) or y in (-1, 0, 1) or lam in (-1, 0, 1)
               or lam * y == -1 or lam * x == -1 or x + y == 0
               or x * y == -1 or lam + x + y + lam * x * y == 0)
        return not bad

    return _witness_checks(
        seed, "two-var-cyc", ("x", "y", "lam"), admissible,
        gamma_formulas=[
            lambda x, y, lam: lam * x,
            lambda x, y, lam: lam + x + y,
            lambda x, y, lam: ((x + y) * (3 + x * y)
                               + (2 + x + x * x + y + 4 * x * y + y * y)
                               * lam
                               + (1 + x * y) * lam ** 2)
            / (lam + x + y + lam * x * y)],
        beta_formulas=[
            lambda x, y, lam: lam * x * y,
            lambda x, y, lam: lam + x + y + lam * x * y])


def _witness_invcyc_nonpoly(seed):
    def admissible(q, lam):
        bad = (q in (-1, 0, 1) or lam in (-1, 0, 1)
               or lam + 2 * q + lam * q * q == 0)
        return not bad

    return _witness_checks(
        seed, "inv-cyc", ("q", "lam"), admissible,
        gamma_formulas=[
            lambda q, lam: lam,
            lambda q, lam: q * (2 + lam * q),
            lambda q, lam: q * q * (2 + 6 * lam * q + 6 * q ** 2
                                    + lam ** 2 * q ** 2 + 4 * lam * q ** 3
                                    + lam ** 2 * q ** 4)
            / (lam + 2 * q + lam * q * q)],
        beta_formulas=[
            lambda q, lam: lam * q,
            lambda q, lam: q ** 3 * (lam + 2 * q + lam * q * q)])


_register(TheoremCase(
    "perm.cyc.nonpoly", "Witness",
    "x^arec y^erec lambda^cyc has no polynomial J-fraction: gamma_2 is a "
    "rational function, checked at random admissible rational points.",
    None,
    witness=_witness_cyc_nonpoly,
))

_register(TheoremCase(
    "perm.invcyc.nonpoly", "Witness",
    "q^inv lambda^cyc has no polynomial J-fraction: gamma_2 is a rational "
    "function, checked at random admissible rational points.",
    None,
    witness=_witness_invcyc_nonpoly,
))


# ===========================================================================
# Set partitions

_register(TheoremCase(
    "sp.S", "SFraction",
    "Three-variable S-fraction: sum x^|pi| y^erec v^(n-|pi|-erec).",
    9,
    poly=_poly("setpart", weight="three-var"),
    alpha=_alt(lambda k: X, lambda k: Y + (k - 1) * V),
))


def _sp_j_gamma(n):
    if n == 0:
        return as_poly(X1)
    return X1 + Y1 + (n - 1) * V1


def _sp_j_beta(n):
    return X2 * (Y2 + (n - 1) * V2)


def _sp_pqj_gamma(n):
    if n == 0:
        return as_poly(X1)
    return (R_ ** n) * X1 + (P1 ** (n - 1)) * Y1 \
        + Q1 * pqint(n - 1, P1, Q1) * V1


def _sp_pqj_beta(n):
    return X2 * ((P2 ** (n - 1)) * Y2 + Q2 * pqint(n - 1, P2, Q2) * V2)


_SP_J_FROM_PQ = {"p1": 1, "p2": 1, "q1": 1, "q2": 1, "r": 1}


def _sp_j_coherence(n_max):
    dg = lambda n: as_poly(_sp_pqj_gamma(n)).substitute(_SP_J_FROM_PQ)
    db = lambda n: as_poly(_sp_pqj_beta(n)).substitute(_SP_J_FROM_PQ)
    return _j_coherence("specialization of the (p,q) J-fraction",
                        dg, db, _sp_j_gamma, _sp_j_beta)


_register(TheoremCase(
    "sp.J", "JFraction",
    "Six-variable J-fraction for singleton/opener/insider record classes.",
    9,
    poly=_poly("setpart", weight="six-var"),
    gamma=_sp_j_gamma,
    beta=_sp_j_beta,
    extra=_sp_j_coherence,
))


def _sp_master_families_pq():
    afun = lambda l, lp: (P2 ** l) * (Q2 ** lp) * (Y2 if lp == 0 else V2)
    bfun = lambda l: X2
    dfun = lambda l, lp: (P1 ** l) * (Q1 ** lp) * (Y1 if lp == 0 else V1)
    efun = lambda l: (R_ ** l) * X1
    return afun, bfun, dfun, efun


def _sp_pqj_coherence(n_max):
    dg, db = _sp_master_cf(*_sp_master_families_pq())
    return _j_coherence("derived from the first master J-fraction",
                        dg, db, _sp_pqj_gamma, _sp_pqj_beta)


_register(TheoremCase(
    "sp.pq.J", "JFraction",
    "Eleven-variable first (p,q) J-fraction for set partitions.",
    9,
    poly=_poly("setpart", weight="pq-eleven"),
    gamma=_sp_pqj_gamma,
    beta=_sp_pqj_beta,
    extra=_sp_pqj_coherence,
))

_SP_PQ_S_SPEC = {"x1": X, "x2": X, "y1": Y, "y2": Y, "v1": V, "v2": V,
                 "p1": P_, "p2": R_ * P_, "q1": Q_, "q2": R_ * Q_}

_register(TheoremCase(
    "sp.pq.S", "SFraction",
    "S-fraction corollary: alpha_{2k-1} = r^(k-1) x, "
    "alpha_{2k} = p^(k-1) y + q [k-1]_{p,q} v.",
    9,
    poly=_poly("setpart", weight="pq-eleven", subst=_SP_PQ_S_SPEC),
    alpha=_alt(lambda k: (R_ ** (k - 1)) * X,
               lambda k: (P_ ** (k - 1)) * Y + Q_ * pqint(k - 1, P_, Q_) * V),
))

_register(TheoremCase(
    "sp.B2.equal", "JFraction",
    "The overlap/covering polynomial B^(2) satisfies the same J-fraction "
    "as the crossing/nesting polynomial.",
    9,
    poly=_poly("setpart", weight="ovcov-eleven"),
    gamma=_sp_pqj_gamma,
    beta=_sp_pqj_beta,
))


def _sp_four_equiv(n):
    base = _enum("setpart", n, "all", "pq-eleven")
    ok = (base == _enum("setpart", n, "all", "ovcov-eleven")
          and base == _enum("setpart", n, "all", "mixed-three")
          and base == _enum("setpart", n, "all", "mixed-four"))
    return ok, None


_register(TheoremCase(
    "sp.four.equiv", "Identity",
    "Equality of the crossing/nesting, overlap/covering and both mixed "
    "eleven-variable polynomials.",
    9,
    identity=_sp_four_equiv,
))


def _sp_master_sym_cf():
    afun = lambda l, lp: var("a", l, lp)
    bfun = lambda l: var("b", l)
    dfun = lambda l, lp: var("d", l, lp)
    efun = lambda l: var("e", l)
    return _sp_master_cf(afun, bfun, dfun, efun)


_spm_gamma, _spm_beta = _sp_master_sym_cf()

for _variant in (1, 2, 3, 4):
    _register(TheoremCase(
        "sp.masterJ%d" % _variant, "JFraction",
        "Master J-fraction for set partitions, variant %d (openers and "
        "insiders indexed by crossings/nestings or overlaps/coverings)."
        % _variant,
        9,
        poly=_poly("setpart", weight="master%d" % _variant),
        gamma=_spm_gamma,
        beta=_spm_beta,
    ))

_SP_MASTERS_SPEC = {
    "d": lambda l, lp: var("a", l, lp),
    "e": lambda l: var("b", l),
}

_register(TheoremCase(
    "sp.masterS", "SFraction",
    "Master S-fraction for set partitions (d = a, e = b): "
    "alpha_{2k-1} = b_{k-1}, alpha_{2k} = a*_{k-1}.",
    9,
    poly=_poly("setpart", weight="master1", subst=_SP_MASTERS_SPEC),
    alpha=_alt(lambda k: var("b", k - 1),
               lambda k: _star(lambda l, lp: var("a", l, lp), k - 1)),
))

_zeng1_alpha = _alt(lambda k: (Q_ ** (k - 1)) * X, lambda k: qint(k, Q_))

_ZENG_INV_SPEC = {"x1": X, "x2": X, "y1": 1, "y2": 1, "v1": 1, "v2": 1,
                  "p1": 1, "p2": Q_, "q1": Q_, "q2": Q_ ** 2, "r": Q_}

_register(TheoremCase(
    "sp.zeng1", "SFraction",
    "q-Stirling generating polynomials sum x^|pi| q^lb: "
    "alpha_{2k-1} = q^(k-1) x, alpha_{2k} = [k]_q.",
    9,
    poly=_poly("setpart", weight="x-lb"),
    alpha=_zeng1_alpha,
    extra=_capped_cmp(
        "independent route via the reversed rs statistic",
        _poly("setpart", weight="x-lb"),
        _poly("setpart", weight="pq-eleven", subst=_ZENG_INV_SPEC), 9),
))

_register(TheoremCase(
    "sp.zeng2", "SFraction",
    "Modified q-Stirling polynomials sum x^|pi| q^ls: "
    "alpha_{2k} contains a minus sign; pure verification target.",
    9,
    poly=_poly("setpart", weight="x-ls"),
    alpha=_alt(lambda k: (Q_ ** (2 * k - 2)) * X,
               lambda k: (1 + (Q_ ** (k - 1)) * (Q_ - 1) * X)
               * qint(k, Q_)),
))

_IOTA_SPEC = {"x1": X, "x2": X, "y1": 1, "y2": 1, "v1": 1, "v2": 1,
              "p1": Q_, "p2": Q_ ** 2, "q1": 1, "q2": Q_, "r": Q_}

_register(TheoremCase(
    "sp.iota.S", "SFraction",
    "Reduced intertwining statistic: sum x^|pi| q^iota' has the same "
    "S-fraction as the lb statistic.",
    9,
    poly=_poly("setpart", weight="x-iota-prime"),
    alpha=_zeng1_alpha,
    extra=_capped_cmp(
        "equals the eleven-variable polynomial specialization",
        _poly("setpart", weight="x-iota-prime"),
        _poly("setpart", weight="pq-eleven", subst=_IOTA_SPEC), 9),
))

_spS_alpha = _alt(lambda k: X, lambda k: Y + (k - 1) * V)

_register(TheoremCase(
    "sp.cc.zeta", "SFraction",
    "Insert zeta^cc into the three-variable polynomial: multiply alpha_1 "
    "by zeta.",
    8,
    poly=_poly("setpart", weight="three-var", zeta=True),
    alpha=lambda m: ZETA * _spS_alpha(1) if m == 1 else _spS_alpha(m),
))

_register(TheoremCase(
    "sp.indecomposable", "SFraction",
    "Indecomposable set partitions: generating function 1 - 1/f.",
    8,
    poly=lambda n: as_poly(0) if n == 0 else
        _enum("setpart", n, "indecomposable", "three-var"),
    series=lambda order: indecomposable_series(
        expand_sfraction(SFractionSpec(_spS_alpha), order)),
))


# ===========================================================================
# Perfect matchings

_match4_alpha = _alt(lambda k: X + (2 * k - 2) * U,
                     lambda k: Y + (2 * k - 1) * V)

_match_pq_alpha = lambda m: \
    ((PM ** (m - 1)) * X + QM * pqint(m - 1, PM, QM) * U) if m % 2 else \
    ((PP ** (m - 1)) * Y + QP * pqint(m - 1, PP, QP) * V)

_MATCH4_FROM_PQ = {"pp": 1, "pm": 1, "qp": 1, "qm": 1}


def _match4_coherence(n_max):
    derived = lambda m: \
        as_poly(_match_pq_alpha(m)).substitute(_MATCH4_FROM_PQ)
    out = _s_coherence("specialization of the (p,q) S-fraction",
                       derived, _match4_alpha)
    out.extend(_capped_cmp(
        "valley form equals peak form",
        _poly("match", weight="four-var-cp"),
        _poly("match", weight="four-var-cv"), 6)(n_max))
    return out


_register(TheoremCase(
    "match.S.fourvar", "SFraction",
    "Four-variable S-fraction over matchings: even/odd cycle peaks split "
    "by antirecord status (equivalently valleys by record status).",
    7,
    poly=_poly("match", weight="four-var-cp"),
    alpha=_match4_alpha,
    extra=_match4_coherence,
))

_register(TheoremCase(
    "match.S.sixvar", "SFraction",
    "Six-variable refinement with parity counts of cycle valleys.",
    7,
    poly=_poly("match", weight="six-var"),
    alpha=_alt(lambda k: (X + (2 * k - 2) * U) * XB,
               lambda k: (Y + (2 * k - 1) * V) * YB),
))


def _match_master_case(l, lp):
    if lp == 0:
        return (PM ** l) * X if l % 2 == 0 else (PP ** l) * Y
    if (l + lp) % 2 == 0:
        return (PM ** l) * (QM ** lp) * U
    return (PP ** l) * (QP ** lp) * V


def _match_pq_coherence(n_max):
    derived = lambda m: _star(_match_master_case, m - 1)
    out = _s_coherence("derived from the master S-fraction",
                       derived, _match_pq_alpha)
    out.extend(_capped_cmp(
        "valley form equals peak form",
        _poly("match", weight="pq"),
        _poly("match", weight="pq-cv"), 5)(n_max))
    return out


_register(TheoremCase(
    "match.pq.S", "SFraction",
    "Eight-variable (p,q) S-fraction over matchings.",
    7,
    poly=_poly("match", weight="pq"),
    alpha=_match_pq_alpha,
    extra=_match_pq_coherence,
))

_register(TheoremCase(
    "match.master.S", "SFraction",
    "Master S-fraction for matchings: alpha_n = a*_{n-1} b_{n-1}.",
    7,
    poly=_poly("match", weight="master"),
    alpha=lambda m: _star(lambda l, lp: var("a", l, lp), m - 1)
        * var("b", m - 1),
))

_register(TheoremCase(
    "match.crne.S", "SFraction",
    "Crossings and nestings jointly: alpha_n = [n]_{p,q}.",
    7,
    poly=_poly("match", weight="cr-ne"),
    alpha=lambda m: pqint(m, P_, Q_),
))


_touchard_series_cache = {}


def _touchard_series(order):
    s = _touchard_series_cache.get(order)
    if s is None:
        s = expand_sfraction(SFractionSpec(lambda m: qint(m, P_)), order)
        _touchard_series_cache[order] = s
    return s


def _touchard_identity(n):
    tr = touchard_riordan(n)
    ok = tr == _touchard_series(8 if n <= 8 else n).coeffs[n]
    if ok and n <= 6:
        ok = tr == _enum("match", n, "all", "cr")
    return ok, None


_register(TheoremCase(
    "match.touchard", "Identity",
    "Touchard-Riordan closed form for the crossing polynomial equals both "
    "the S-fraction with alpha_n = [n]_p and direct enumeration.",
    8,
    identity=_touchard_identity,
))


_MATCH_CC_TABLE = {
    0: [],
    1: [1],
    2: [2, 1],
    3: [10, 4, 1],
    4: [74, 24, 6, 1],
    5: [706, 188, 42, 8, 1],
    6: [8162, 1808, 350, 64, 10, 1],
    7: [110410, 20628, 3426, 568, 90, 12, 1],
    8: [1708394, 273064, 38886, 5696, 850, 120, 14, 1],
}

_match_cc_series_cache = {}


def _match_cc_series(order):
    s = _match_cc_series_cache.get(order)
    if s is None:
        spec = attach_component_weight(SFractionSpec(lambda m: m), ZETA)
        s = expand_sfraction(spec, order)
        _match_cc_series_cache[order] = s
    return s


def _match_cc_table_identity(n):
    row = _MATCH_CC_TABLE.get(n)
    if row is None:
        return False, "no table row for n=%d" % n
    expected = as_poly(0)
    for k, c in enumerate(row, start=1):
        expected = expected + c * as_poly(ZETA) ** k
    if n == 0:
        expected = as_poly(1)
    got = _match_cc_series(max(n, 8)).coeffs[n]
    ok = expected == got
    if ok and n <= 6:
        ok = expected == _enum("match", n, "all", "zeta-cc")
    return ok, None


_register(TheoremCase(
    "match.cc.table", "Identity",
    "Connected-component table for matchings, checked against the "
    "zeta-modified S-fraction and direct enumeration.",
    8,
    identity=_match_cc_table_identity,
))

_register(TheoremCase(
    "match.cc.zeta", "SFraction",
    "Insert zeta^cc into the four-variable matching polynomial.",
    6,
    poly=_poly("match", weight="four-var-cp", zeta=True),
    alpha=lambda m: ZETA * _match4_alpha(1) if m == 1 else _match4_alpha(m),
))

_register(TheoremCase(
    "match.indecomposable", "SFraction",
    "Indecomposable matchings: generating function 1 - 1/f.",
    6,
    poly=lambda n: as_poly(0) if n == 0 else
        _enum("match", n, "indecomposable", "four-var-cp"),
    series=lambda order: indecomposable_series(
        expand_sfraction(SFractionSpec(_match4_alpha), order)),
))


# ===========================================================================
# Identities

def _id_inv_decomp(n):
    for sigma in iter_permutations(n):
        profiles = perm_index_profile(sigma)
        t = perm_stat_totals(sigma, profiles)
        rhs = (t.exc + t.ucross + 2 * t.unest
               + t.lcross + t.ljoin + 2 * t.lnest + 2 * t.psnest)
        if t.inv != rhs:
            return False, "sigma=%r" % (sigma.oneline,)
    return True, None


_register(TheoremCase(
    "inv.decomp", "Identity",
    "inv = exc + ucross + 2 unest + lcross + ljoin + 2 lnest + 2 psnest.",
    8,
    identity=_id_inv_decomp,
))


def _id_321_nonesting(n):
    from .permstats import is_avoid321
    for sigma in iter_permutations(n):
        profiles = perm_index_profile(sigma)
        t = perm_stat_totals(sigma, profiles)
        avoid = is_avoid321(sigma, profiles, t)
        clean = not (t.unest or t.lnest or t.psnest)
        if avoid and not clean:
            return False, "sigma=%r" % (sigma.oneline,)
    return True, None


_register(TheoremCase(
    "avoid321.nonesting", "Identity",
    "A 321-avoiding permutation has no upper/lower nestings or "
    "pseudo-nestings.",
    8,
    identity=_id_321_nonesting,
))


def _id_crne_eq_ovcov(n):
    for pi in iter_set_partitions(n):
        t = sp_stat_totals(pi)
        if t.crop + t.neop != t.ov + t.cov:
            return False, "pi=%r" % (pi.blocks,)
        if t.crin + t.nein != t.ovin + t.covin:
            return False, "pi=%r" % (pi.blocks,)
    return True, None


_register(TheoremCase(
    "crne.eq.ovcov", "Identity",
    "crop + neop = ov + cov and crin + nein = ovin + covin.",
    9,
    identity=_id_crne_eq_ovcov,
))


def _id_crne_mod2(n):
    for pi in iter_set_partitions(n):
        t = sp_stat_totals(pi)
        if (t.cr - t.ov) % 2:
            return False, "pi=%r" % (pi.blocks,)
        if (t.crin + t.neop - t.cov) % 2:
            return False, "pi=%r" % (pi.blocks,)
        if (t.crop + t.nein - t.ov - t.ovin - t.covin) % 2:
            return False, "pi=%r" % (pi.blocks,)
        if (t.ne - t.cov - t.ovin - t.covin) % 2:
            return False, "pi=%r" % (pi.blocks,)
    return True, None


_register(TheoremCase(
    "crne.mod2", "Identity",
    "Crossing/nesting congruences modulo 2 with overlaps and coverings.",
    9,
    identity=_id_crne_mod2,
))


def _id_rs_formula(n):
    for pi in iter_set_partitions(n):
        t = sp_stat_totals(pi)
        tr = sp_stat_totals(sp_reverse(pi))
        if t.rs != tr.ov + 2 * tr.cov + tr.covin + tr.pscov:
            return False, "pi=%r" % (pi.blocks,)
    return True, None


_register(TheoremCase(
    "rs.formula", "Identity",
    "rs(pi) = ov + 2 cov + covin + pscov of the reversed partition.",
    9,
    identity=_id_rs_formula,
))


def _id_iota_formula(n):
    for pi in iter_set_partitions(n):
        t = sp_stat_totals(pi)
        if t.iota_prime != t.cr + t.ov + t.cov + t.pscov:
            return False, "pi=%r" % (pi.blocks,)
        if t.iota_prime != t.crin + 2 * t.crop + t.neop + t.psne:
            return False, "pi=%r" % (pi.blocks,)
        if t.iota != t.iota_prime + comb(t.blocks, 2):
            return False, "pi=%r" % (pi.blocks,)
    return True, None


_register(TheoremCase(
    "iota.formula", "Identity",
    "iota' = cr + ov + cov + pscov = crin + 2 crop + neop + psne.",
    9,
    identity=_id_iota_formula,
))


def _id_fig9(n):
    pi = setpart_from_blocks([[1, 3, 6], [2, 4, 5]])
    t = sp_stat_totals(pi)
    return (t.iota == 4 and t.iota_prime == 3), None


_register(TheoremCase(
    "fig9.iota", "Identity",
    "Worked example: the partition {{1,3,6},{2,4,5}} has intertwining "
    "number 4.",
    0,
    identity=_id_fig9,
))


def _id_ww(n):
    lhs = _enum("setpart", n, "all", "rs-rb")
    rhs = _enum("setpart", n, "all", "lb-ls")
    return lhs == rhs, None


_register(TheoremCase(
    "ww.equidistribution", "Identity",
    "The pair (rs, rb) is jointly equidistributed with (lb, ls) on "
    "partitions with a fixed number of blocks.",
    8,
    identity=_id_ww,
))

_register(TheoremCase(
    "B.equals.B2B3B4", "Identity",
    "The four eleven-variable set-partition polynomials coincide.",
    9,
    identity=_sp_four_equiv,
))


def _id_dillon(n):
    lhs = _enum("perm", n, "all", "four-var-cyc").substitute({"v": Y})
    s2 = _stirling2(n)
    rhs = as_poly(0)
    for k in range(n + 1):
        term = as_poly(s2[k]) * (as_poly(Y) - U) ** (n - k)
        for j in range(k):
            term = term * (X + j * as_poly(U))
        rhs = rhs + term
    return lhs == rhs, None


_register(TheoremCase(
    "dillon", "Identity",
    "Cycle-excedance polynomial as a Stirling-number sum of rising "
    "factorials.",
    7,
    identity=_id_dillon,
))


def _id_orderedbell(n):
    lhs = _eulerian_poly(n)
    s2 = _stirling2(n)
    rhs = as_poly(0)
    for k in range(n + 1):
        rhs = rhs + factorial(k) * s2[k] \
            * (as_poly(Y) - X) ** (n - k) * as_poly(X) ** k
    return lhs == rhs, None


_register(TheoremCase(
    "orderedbell", "Identity",
    "Homogenized Eulerian polynomial equals the ordered Bell expansion "
    "sum k! S(n,k) (y-x)^(n-k) x^k.",
    7,
    identity=_id_orderedbell,
))


def _id_mp(n):
    lhs = _enum("match", n, "all", "four-var-cp")
    rhs = _enum("perm", n, "all", "four-var-arec").substitute(
        {"y": Y + V, "u": 2 * as_poly(U), "v": 2 * as_poly(V)})
    return lhs == rhs, None


_register(TheoremCase(
    "MP.identity", "Identity",
    "M_n(x,y,u,v) = P_n(x, y+v, 2u, 2v).",
    6,
    identity=_id_mp,
))


def _id_mp_pq(n):
    lhs = _enum("match", n, "all", "pq").substitute({"u": QM * U})
    rhs = _enum("perm", n, "all", "eight-var-pq").substitute({
        "x": X, "y": PP * Y + QP * V,
        "u": (as_poly(PM) + QM) * U, "v": (as_poly(PP) + QP) * V,
        "pp": PP ** 2, "pm": PM ** 2, "qp": QP ** 2, "qm": QM ** 2})
    return lhs == rhs, None


_register(TheoremCase(
    "MP.identity.pq", "Identity",
    "(p,q)-refined matching/permutation identity, checked after scaling "
    "u by q- to stay polynomial.",
    5,
    identity=_id_mp_pq,
))
