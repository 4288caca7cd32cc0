"""Parameter environments for the algebra coefficients.

An environment assigns values to q, lam, q_0..q_{k-1} and A_0..A_{k-1} in a
target coefficient ring and extends the A_j to all integers j via the linear
recurrence sum_{i=0}^{k} q_i A_{i+s} = 0 with q_k := -1.  Three targets are
supported:

  * "omega"    -- the free Laurent ring Z[q^+-, lam^+-, q0^+-, q1.., A0^+-, A1..];
  * "rc"       -- the classical-limit ring Z[A0^+-, A1, .., A_{floor(k/2)}]
                  at q = 1, lam = +-1, q0 = 1, q_{i>0} = 0;
  * "rational" -- exact rational values.

Coefficients are LaurentPoly for the first two and Fraction for the last;
all arithmetic used downstream (+, -, *, is-zero, unit inverses) is uniform
across the three.
"""

from __future__ import annotations

from fractions import Fraction

from .laurent import LaurentPoly, LaurentRing


class MissingValue(KeyError):
    pass


def omega_ring(k):
    gens = ["q", "lam", "q0"]
    gens += ["q%d" % i for i in range(1, k)]
    gens += ["A%d" % i for i in range(k)]
    return LaurentRing(gens)


def rc_ring(k):
    return LaurentRing(["A%d" % i for i in range(k // 2 + 1)])


class ParamEnv:
    """Assignment of the algebra parameters into a coefficient ring."""

    def __init__(self, k, tag, q, lam, qs, As, ring=None, sign=None):
        assert k >= 1
        assert len(qs) == k and len(As) == k
        self.k = k
        self.tag = tag
        self.ring = ring
        self.sign = sign
        self.q = q
        self.lam = lam
        self.qs = list(qs)          # q_0 .. q_{k-1}
        self.As = list(As)          # A_0 .. A_{k-1}
        self.zero = ring.zero if ring is not None else Fraction(0)
        self.one = ring.one if ring is not None else Fraction(1)
        self.delta = q - self.inv(q)
        self.lam_inv = self.inv(lam)
        self.q_inv = self.inv(q)
        self.q0_inv = self.inv(qs[0])
        self.A0_inv = self.inv(As[0])
        self._A_memo = {j: As[j] for j in range(k)}
        self._adm = None

    # -- coefficient helpers -------------------------------------------------

    def const(self, n):
        if self.ring is not None:
            return self.ring.const(n)
        return Fraction(n)

    @staticmethod
    def inv(c):
        if isinstance(c, LaurentPoly):
            return c.inverse()
        if c == 0:
            raise ZeroDivisionError("parameter is not invertible")
        return Fraction(1) / Fraction(c)

    @staticmethod
    def is_zero(c):
        if isinstance(c, LaurentPoly):
            return c.is_zero()
        return c == 0

    def qi(self, i):
        """q_i with the convention q_k = -1; zero outside 0..k."""
        if i == self.k:
            return -self.one
        if 0 <= i < self.k:
            return self.qs[i]
        return self.zero

    def extend_A(self, j):
        """A_j for any integer j, memoized, via the defining recurrence."""
        memo = self._A_memo
        if j in memo:
            return memo[j]
        if j >= self.k:
            s = j - self.k
            # A_{s+k} = sum_{i=0}^{k-1} q_i A_{i+s}
            val = self.zero
            for i in range(self.k):
                val = val + self.qs[i] * self.extend_A(i + s)
        else:
            s = j
            # q_0 A_s = A_{s+k} - sum_{i=1}^{k-1} q_i A_{i+s}
            val = self.extend_A(s + self.k)
            for i in range(1, self.k):
                val = val - self.qs[i] * self.extend_A(i + s)
            val = self.q0_inv * val
        memo[j] = val
        return val

    @property
    def admissible(self):
        if self._adm is None:
            from .admissibility import is_admissible
            self._adm = is_admissible(self).verdict
        return self._adm

    def values(self):
        """Substitution map for specializing Omega polynomials."""
        vals = {"q": self.q, "lam": self.lam, "q0": self.qs[0]}
        for i in range(1, self.k):
            vals["q%d" % i] = self.qs[i]
        for i in range(self.k):
            vals["A%d" % i] = self.As[i]
        return vals

    def __repr__(self):
        return "ParamEnv(k=%d, %s)" % (self.k, self.tag)


def make_omega_env(k):
    """The fully symbolic environment: every parameter is its own generator."""
    R = omega_ring(k)
    qs = [R.gen("q0")] + [R.gen("q%d" % i) for i in range(1, k)]
    As = [R.gen("A%d" % i) for i in range(k)]
    return ParamEnv(k, "omega", R.gen("q"), R.gen("lam"), qs, As, ring=R)


def specialize(poly, env):
    """Apply the unique parameter-respecting map Omega -> env coefficients."""
    try:
        value = poly.substitute(env.values())
    except KeyError as exc:
        raise MissingValue(str(exc)) from exc
    if value is None:
        return env.zero
    if env.ring is not None and isinstance(value, int):
        return env.const(value)
    if env.ring is None:
        return Fraction(value)
    return value
