"""Truncated formal power series in t with polynomial coefficients, and
expansion/extraction of Stieltjes- and Jacobi-type continued fractions.

An S-fraction is 1/(1 - a1 t/(1 - a2 t/(1 - ...))); a J-fraction is
1/(1 - g0 t - b1 t^2/(1 - g1 t - b2 t^2/(1 - ...))).  Contraction turns an
S-fraction into the J-fraction with g0 = a1, g_n = a_{2n} + a_{2n+1},
b_n = a_{2n-1} a_{2n}.
"""

from fractions import Fraction

from .mpoly import MultiPoly, as_poly


class NonUnitConstantTerm(ValueError):
    """Series operation requiring constant coefficient 1 got something else."""


class TerminatedFraction(ValueError):
    """The continued fraction terminates (a beta coefficient is zero)."""


class InsufficientOrder(ValueError):
    """The input series is too short for the requested extraction depth."""


class PowerSeries:
    """Power series truncated at t^order, coefficients are MultiPoly."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs, order=None):
        coeffs = [as_poly(c) for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        if len(coeffs) < order + 1:
            coeffs = coeffs + [MultiPoly.zero()] * (order + 1 - len(coeffs))
        self.order = order
        self.coeffs = coeffs[: order + 1]

    @staticmethod
    def one(order):
        return PowerSeries([MultiPoly.one()], order)

    @staticmethod
    def zero(order):
        return PowerSeries([], order)

    def __eq__(self, other):
        return (self.order == other.order and self.coeffs == other.coeffs)

    def __add__(self, other):
        n = min(self.order, other.order)
        return PowerSeries([self.coeffs[k] + other.coeffs[k]
                            for k in range(n + 1)], n)

    def __sub__(self, other):
        n = min(self.order, other.order)
        return PowerSeries([self.coeffs[k] - other.coeffs[k]
                            for k in range(n + 1)], n)

    def __mul__(self, other):
        if not isinstance(other, PowerSeries):
            return PowerSeries([c * other for c in self.coeffs], self.order)
        n = min(self.order, other.order)
        out = []
        for k in range(n + 1):
            acc = MultiPoly.zero()
            for j in range(k + 1):
                a = self.coeffs[j]
                b = other.coeffs[k - j]
                if a.terms and b.terms:
                    acc = acc + a * b
            out.append(acc)
        return PowerSeries(out, n)

    __rmul__ = __mul__

    def shift(self, k=1):
        """Multiply by t^k (same truncation order)."""
        return PowerSeries([MultiPoly.zero()] * k + self.coeffs, self.order)

    def reciprocal(self):
        """Series r with self*r = 1; requires constant coefficient 1."""
        if not self.coeffs[0].is_one():
            raise NonUnitConstantTerm(
                "constant coefficient is %r, not 1" % (self.coeffs[0],))
        out = [MultiPoly.one()]
        for k in range(1, self.order + 1):
            acc = MultiPoly.zero()
            for j in range(1, k + 1):
                c = self.coeffs[j]
                if c.terms and out[k - j].terms:
                    acc = acc + c * out[k - j]
            out.append(-acc)
        return PowerSeries(out, self.order)

    def __repr__(self):
        return "PowerSeries(order=%d, %r)" % (self.order, self.coeffs)


def series_reciprocal(s):
    return s.reciprocal()


class SFractionSpec:
    """Coefficient formula n >= 1 -> MultiPoly for an S-fraction."""

    def __init__(self, alpha):
        self._alpha = alpha

    def alpha(self, n):
        return as_poly(self._alpha(n))


class JFractionSpec:
    """Coefficient formulas gamma (n >= 0) and beta (n >= 1)."""

    def __init__(self, gamma, beta):
        self._gamma = gamma
        self._beta = beta

    def gamma(self, n):
        return as_poly(self._gamma(n))

    def beta(self, n):
        return as_poly(self._beta(n))


def expand_sfraction(spec, order, depth=None):
    """Taylor coefficients of the S-fraction through t^order.

    Nested evaluation from the innermost level (replaced by 1) upward;
    depth >= order+1 levels suffice because each level contributes t.
    """
    if depth is None:
        depth = order + 1
    f = PowerSeries.one(order)
    for k in range(depth, 0, -1):
        # f <- 1/(1 - alpha_k t f)
        inner = PowerSeries.one(order) - (f * spec.alpha(k)).shift()
        f = inner.reciprocal()
    return f


def expand_jfraction(spec, order, depth=None):
    """Taylor coefficients of the J-fraction through t^order.

    Each beta level contributes t^2, so depth >= order//2 + 1 suffices.
    """
    if depth is None:
        depth = order // 2 + 1
    f = PowerSeries.one(order)
    for k in range(depth - 1, -1, -1):
        # f <- 1/(1 - gamma_k t - beta_{k+1} t^2 f)
        inner = (PowerSeries.one(order)
                 - PowerSeries([MultiPoly.zero(), spec.gamma(k)], order)
                 - (f * spec.beta(k + 1)).shift(2))
        f = inner.reciprocal()
    return f


def contract_s_to_j(spec):
    """J-fraction equivalent of an S-fraction."""
    def gamma(n):
        if n == 0:
            return spec.alpha(1)
        return spec.alpha(2 * n) + spec.alpha(2 * n + 1)

    def beta(n):
        return spec.alpha(2 * n - 1) * spec.alpha(2 * n)

    return JFractionSpec(gamma, beta)


def attach_component_weight(spec, zeta):
    """Weight each connected component by zeta: multiply alpha_1 (S-case)
    or gamma_0 and beta_1 (J-case) by zeta."""
    zeta = as_poly(zeta)
    if isinstance(spec, SFractionSpec):
        return SFractionSpec(
            lambda n: zeta * spec.alpha(1) if n == 1 else spec.alpha(n))
    return JFractionSpec(
        lambda n: zeta * spec.gamma(0) if n == 0 else spec.gamma(n),
        lambda n: zeta * spec.beta(1) if n == 1 else spec.beta(n))


def indecomposable_series(f):
    """1 - 1/f: the generating series of indecomposable objects."""
    return PowerSeries.one(f.order) - f.reciprocal()


class RationalSeries:
    """Truncated series with exact rational coefficients."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs, order=None):
        coeffs = [Fraction(c) for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        if len(coeffs) < order + 1:
            coeffs = coeffs + [Fraction(0)] * (order + 1 - len(coeffs))
        self.order = order
        self.coeffs = coeffs[: order + 1]

    def __eq__(self, other):
        return self.order == other.order and self.coeffs == other.coeffs

    def reciprocal(self):
        c0 = self.coeffs[0]
        if c0 == 0:
            raise NonUnitConstantTerm("constant coefficient is 0")
        out = [1 / c0]
        for k in range(1, self.order + 1):
            acc = Fraction(0)
            for j in range(1, k + 1):
                acc += self.coeffs[j] * out[k - j]
            out.append(-acc / c0)
        return RationalSeries(out, self.order)

    def __repr__(self):
        return "RationalSeries(order=%d, %r)" % (self.order, self.coeffs)


def jfraction_from_series(s, depth):
    """Peel J-fraction coefficients level by level from a rational series
    with constant coefficient 1.

    Writing s = 1/(1 - g0 t - b1 t^2/(1 - g1 t - ...)), returns the pair
    (gammas, betas) with gammas = [g0..g_depth] and betas = [b1..b_depth].
    Requires s.order >= 2*depth + 1.
    """
    if s.coeffs[0] != 1:
        raise NonUnitConstantTerm("constant coefficient is %s" % s.coeffs[0])
    if s.order < 2 * depth + 1:
        raise InsufficientOrder(
            "need order >= %d, got %d" % (2 * depth + 1, s.order))
    gammas = []
    betas = []
    cur = s
    for k in range(depth + 1):
        r = cur.reciprocal()
        gamma = -r.coeffs[1]
        gammas.append(gamma)
        if k == depth:
            break
        # r = 1 - gamma t - beta t^2 s_next
        rest = [-(r.coeffs[j + 2]) for j in range(r.order - 1)]
        beta = rest[0]
        if beta == 0:
            raise TerminatedFraction("beta_%d = 0" % (k + 1,))
        betas.append(beta)
        cur = RationalSeries([c / beta for c in rest], r.order - 2)
    return gammas, betas
