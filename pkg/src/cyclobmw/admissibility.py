"""Admissibility polynomials and admissible parameter environments.

The polynomials beta, h_l, h_l' and B_l live in the free Laurent ring Omega
on q, lam, q_0..q_{k-1}, A_0..A_{k-1} (with q_k := -1 inside every sum, and
empty sums equal to zero).  A parameter family is admissible when beta, h_0,
.., h_{z-eps}, h_1', .., h_{z-eps}' all vanish, where k = 2z - eps.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .envs import ParamEnv, make_omega_env, omega_ring, rc_ring, specialize


class IndexOutOfRange(IndexError):
    pass


class DegenerateParameters(ValueError):
    pass


def _zeps(k):
    z = (k + 1) // 2
    eps = k % 2
    assert k == 2 * z - eps
    return z, eps


def _q(R, k, i):
    """q_i as an element of Omega; q_k = -1."""
    assert 0 <= i <= k, i
    if i == k:
        return R.const(-1)
    return R.gen("q%d" % i) if i else R.gen("q0")


def compute_beta(k, variant="full"):
    assert k >= 1
    R = omega_ring(k)
    q0 = R.gen("q0")
    lam = R.gen("lam")
    q = R.gen("q")
    z, eps = _zeps(k)
    if variant == "full":
        delta = q - q.inverse()
        return q0 * lam - q0.inverse() * lam.inverse() + (1 - eps) * delta
    if variant == "plus":
        if eps:
            return q0 * lam - 1
        return q0 * lam - q.inverse()
    if variant == "minus":
        if eps:
            return q0.inverse() * lam.inverse() + 1
        return q * q0.inverse() * lam.inverse() + 1
    raise ValueError(variant)


def compute_B(k, l):
    """B_l, the A-linear part of h_l: h_l = lam^-1(q_l + q0^-1 q_{k-l}) + delta B_l."""
    if not 1 <= l <= k - 1:
        raise IndexOutOfRange("need 1 <= l <= k-1, got l=%d" % l)
    R = omega_ring(k)
    z, eps = _zeps(k)
    total = R.zero
    for r in range(1, k - l + 1):
        total = total + _q(R, k, r + l) * R.gen("A%d" % r)
    for i in range(max(l + 1, z), (l + k) // 2 + 1):
        total = total - _q(R, k, 2 * i - l)
    for i in range((l + 1) // 2, min(l, z - 1) + 1):
        total = total + _q(R, k, 2 * i - l)
    return total


def compute_h(k, l):
    """h_l for 0 <= l <= k-1 (the defining range is l <= z-eps)."""
    if not 0 <= l <= k - 1:
        raise IndexOutOfRange("need 0 <= l <= k-1, got l=%d" % l)
    R = omega_ring(k)
    lam = R.gen("lam")
    q = R.gen("q")
    delta = q - q.inverse()
    if l == 0:
        return lam - lam.inverse() + delta * (R.gen("A0") - R.one)
    q0 = R.gen("q0")
    head = lam.inverse() * (_q(R, k, l) + q0.inverse() * _q(R, k, k - l))
    return head + delta * compute_B(k, l)


def compute_h_prime(k, l):
    """h_l' for 1 <= l <= z-eps, defined by the delta-division identity."""
    z, eps = _zeps(k)
    if not 1 <= l <= z - eps:
        raise IndexOutOfRange("need 1 <= l <= z-eps = %d, got l=%d" % (z - eps, l))
    R = omega_ring(k)
    q0i = R.gen("q0").inverse()
    total = R.zero
    for r in range(1, l + 1):
        total = total + q0i * _q(R, k, r + k - l) * R.gen("A%d" % r)
    for r in range(0, k - l + 1):
        total = total - _q(R, k, r + l) * R.gen("A%d" % r)
    for i in range((l + 1) // 2, l):
        total = total - (q0i * _q(R, k, k - 2 * i + l) + _q(R, k, 2 * i - l))
    for i in range(z, (l + k) // 2 + 1):
        total = total + (q0i * _q(R, k, k - 2 * i + l) + _q(R, k, 2 * i - l))
    return total


class AdmissibilityReport:
    """Specialized values of all admissibility polynomials plus the verdict.

    The defining range for the h_l is 0..z-eps; the identity relating h_{k-l}
    to h_l' forces h_l = 0 up to l = k-1 whenever delta is invertible, so the
    report also evaluates the extended range and flags any discrepancy.
    """

    def __init__(self, k, beta, beta_plus, beta_minus, h, h_prime, h_extended):
        self.k = k
        self.z, self.eps = _zeps(k)
        self.beta = beta
        self.beta_plus = beta_plus
        self.beta_minus = beta_minus
        self.h = h                    # h_0 .. h_{z-eps}
        self.h_prime = h_prime        # h_1' .. h_{z-eps}'
        self.h_extended = h_extended  # h_{z-eps+1} .. h_{k-1}
        core = [beta] + h + h_prime
        self.verdict = all(ParamEnv.is_zero(v) for v in core)
        ext_ok = all(ParamEnv.is_zero(v) for v in h_extended)
        self.range_discrepancy = self.verdict and not ext_ok

    def to_json(self):
        def s(v):
            return str(v) if isinstance(v, (int, Fraction)) else v.text()

        return {
            "k": self.k,
            "z": self.z,
            "eps": self.eps,
            "beta": s(self.beta),
            "beta_plus": s(self.beta_plus),
            "beta_minus": s(self.beta_minus),
            "h": [s(v) for v in self.h],
            "h_prime": [s(v) for v in self.h_prime],
            "h_extended": [s(v) for v in self.h_extended],
            "verdict": self.verdict,
            "range_discrepancy": self.range_discrepancy,
        }

    def dumps(self):
        return json.dumps(self.to_json(), sort_keys=True)


def is_admissible(env):
    k = env.k
    z, eps = _zeps(k)
    beta = specialize(compute_beta(k, "full"), env)
    bplus = specialize(compute_beta(k, "plus"), env)
    bminus = specialize(compute_beta(k, "minus"), env)
    h = [specialize(compute_h(k, l), env) for l in range(0, z - eps + 1)]
    hp = [specialize(compute_h_prime(k, l), env) for l in range(1, z - eps + 1)]
    hx = [specialize(compute_h(k, l), env) for l in range(z - eps + 1, k)]
    return AdmissibilityReport(k, beta, bplus, bminus, h, hp, hx)


def extend_A(env, j):
    return env.extend_A(j)


def theta_neg(env, p):
    """theta_{-p} from the weak-admissibility recursion, p >= 1."""
    assert p >= 1
    memo = getattr(env, "_theta_memo", None)
    if memo is None:
        memo = env._theta_memo = {}

    def theta(j):
        if j >= 0:
            return env.extend_A(j)
        if j in memo:
            return memo[j]
        pp = -j
        val = env.lam * env.lam * theta(pp)
        dl = env.delta * env.lam
        for s in range(1, pp):
            val = val + dl * theta(2 * s - pp)
        for s in range(1, pp):
            val = val - dl * theta(s) * theta(s - pp)
        memo[j] = val
        return val

    return theta(-p)


def is_weak_admissible(env, depth):
    """Check the Goodman--Hauschild-Mosley conditions out to |shift| <= depth."""
    assert depth >= 1
    lhs = env.lam - env.lam_inv - env.delta * (env.one - env.extend_A(0))
    if not env.is_zero(lhs):
        return False

    def theta(j):
        return env.extend_A(j) if j >= 0 else theta_neg(env, -j)

    for s in range(-depth, depth + 1):
        acc = env.zero
        for r in range(0, env.k + 1):
            acc = acc + env.qi(r) * theta(r + s)
        if not env.is_zero(acc):
            return False
    return True


def make_Rc_env(k, sign="plus"):
    """The classical-limit ring R_c = Z[A0^+-, A1, .., A_{floor(k/2)}]."""
    assert k >= 1
    assert sign in ("plus", "minus")
    R = rc_ring(k)
    one = R.one
    lam = one if sign == "plus" else -one
    qs = [one] + [R.zero] * (k - 1)
    As = [R.gen("A%d" % min(j, k - j)) for j in range(k)]
    return ParamEnv(k, "rc", one, lam, qs, As, ring=R, sign=sign)


def make_admissible_env(k, q, lam, q_rest=(), sign="plus"):
    """Solve the admissibility conditions for rational parameter values.

    q and lam are free nonzero rationals, q_1..q_{k-1} free rationals; q_0 is
    pinned by beta_sign = 0, A_0 by h_0 = 0, and A_1..A_{k-1} by inverting the
    triangular map relating the B_l to the A_l.
    """
    assert sign in ("plus", "minus")
    q = Fraction(q)
    lam = Fraction(lam)
    q_rest = [Fraction(x) for x in q_rest]
    if len(q_rest) != k - 1:
        raise DegenerateParameters("need k-1 = %d values q_1..q_{k-1}" % (k - 1))
    delta = q - 1 / q
    if delta == 0:
        raise DegenerateParameters("delta = q - q^-1 must be nonzero")
    A0 = 1 / (delta * lam) - lam / delta + 1
    if A0 == 0:
        raise DegenerateParameters("A_0 = d^-1 lam^-1 - d^-1 lam + 1 vanishes")
    z, eps = _zeps(k)
    if eps:
        q0 = 1 / lam if sign == "plus" else -1 / lam
    else:
        q0 = 1 / (q * lam) if sign == "plus" else -q / lam
    if q0 == 0 or lam == 0 or q == 0:
        raise DegenerateParameters("q, lam, q_0 must be units")

    def qv(i):
        if i == k:
            return Fraction(-1)
        if i == 0:
            return q0
        return q_rest[i - 1]

    # target values for B_l, then peel off A_{k-l} by descending l
    A = [A0] + [Fraction(0)] * (k - 1)
    for l in range(k - 1, 0, -1):
        B = -(qv(l) + qv(k - l) / q0) / (delta * lam)
        s2 = sum((qv(2 * i - l) for i in range(max(l + 1, z), (l + k) // 2 + 1)),
                 Fraction(0))
        s3 = sum((qv(2 * i - l) for i in range((l + 1) // 2, min(l, z - 1) + 1)),
                 Fraction(0))
        t = B + s2 - s3
        for r in range(1, k - l):
            t = t - qv(r + l) * A[r]
        A[k - l] = -t

    env = ParamEnv(k, "rational", q, lam, [q0] + q_rest, A, ring=None, sign=sign)
    report = is_admissible(env)
    assert report.verdict, "constructed environment must be admissible"
    return env


def delta_h_prime_identity(k, l):
    """Residual of q0^-1 h_{k-l} - h_l + beta q0^-1 q_l - h_0 q_l = delta h_l'.

    Returns the difference of the two sides as an Omega polynomial; the
    identity holds exactly, so the result should be zero.
    """
    R = omega_ring(k)
    q = R.gen("q")
    delta = q - q.inverse()
    q0i = R.gen("q0").inverse()
    lhs = (q0i * compute_h(k, k - l) - compute_h(k, l)
           + compute_beta(k, "full") * q0i * _q(R, k, l)
           - compute_h(k, 0) * _q(R, k, l))
    return lhs - delta * compute_h_prime(k, l)


__all__ = [
    "AdmissibilityReport", "DegenerateParameters", "IndexOutOfRange",
    "compute_B", "compute_beta", "compute_h", "compute_h_prime",
    "delta_h_prime_identity", "extend_A", "is_admissible",
    "is_weak_admissible", "make_Rc_env", "make_admissible_env",
    "make_omega_env", "theta_neg",
]
