"""Finite-window model: fixed points, Euler classes, localized pairings.

The window replaces the full space of Laurent series by the span of x^M..
x^(N-1); a charged partition whose diagram fits the window's box picks out a
fixed subspace through the leading indices of its occupied set.  Pairings are
computed by equivariant localization: products of integer weight differences
times powers of t, divided through by normalization constants whose factors
are strictly positive on every valid configuration.

Composites of two correspondences are assembled step by step.  A raising
step contributes alpha(P, R-complement) * x^(sum added); a lowering step is
the reverse correspondence read backwards and carries an extra sign
(-1)^(source charge + sum removed) — the finite-window counterpart of the
sign the mode algebra attaches to charge-lowering operators.  That one rule
reproduces the closed two-field formula checked by the fermion-commutator
suite; it is deliberately the only place a lowering sign enters this module.
"""

from __future__ import annotations

import dataclasses
from itertools import combinations
from math import comb, factorial

from .partitions import length, part, partitions_in_box, shifted_indices, size
from .scalars import QQ, RING_T, Ring, Scalar
from .symfunc import SymFunc, chern_eval

Label = tuple


class CutoffTooSmallError(ValueError):
    """A label does not fit the requested window."""


@dataclasses.dataclass(frozen=True)
class CutoffConfig:
    """Window of monomial degrees M..N-1 (weights -(N-1)..-M)."""

    M: int
    N: int

    def __post_init__(self):
        if not (self.M <= 0 < self.N):
            raise ValueError(f"need M <= 0 < N, got M={self.M}, N={self.N}")

    @property
    def dim(self) -> int:
        return self.N - self.M

    def window(self) -> tuple:
        """All weights in the window, decreasing."""
        return tuple(range(-self.M, -self.N, -1))

    def complement(self, U) -> tuple:
        """Weights of the window not in U, decreasing."""
        s = set(U)
        return tuple(k for k in self.window() if k not in s)


def parity_sign(k: int) -> int:
    return -1 if k % 2 else 1


# ---------------------------------------------------------------------------
# fixed points
# ---------------------------------------------------------------------------

def truncated_weights(cfg: CutoffConfig, mu, m: int) -> tuple:
    """Weights of the fixed subspace for (mu, m): the first m+N occupied
    indices.  Raises CutoffTooSmallError when the label does not fit."""
    k = m + cfg.N
    cols = -cfg.M - m
    if not (0 <= k <= cfg.dim):
        raise CutoffTooSmallError(
            f"charge {m} outside [{-cfg.N}, {-cfg.M}] for window {cfg}")
    if length(mu) > k or (mu and part(mu, 1) > cols):
        raise CutoffTooSmallError(
            f"partition {mu} does not fit the {k} x {cols} box of {cfg}")
    return tuple(shifted_indices(mu, m, k))


def enumerate_fixed_points(cfg: CutoffConfig, m: int) -> list:
    """All fixed subspaces of charge m, one per partition in the box."""
    k = m + cfg.N
    if not (0 <= k <= cfg.dim):
        raise ValueError(
            f"charge {m} outside [{-cfg.N}, {-cfg.M}] for window {cfg}")
    return [truncated_weights(cfg, mu, m)
            for mu in partitions_in_box(k, -cfg.M - m)]


# ---------------------------------------------------------------------------
# Euler classes
# ---------------------------------------------------------------------------

def euler_int(U, V) -> int:
    """Integer part of the Euler class of Hom(U, V): product of k'-k."""
    value = 1
    for k in U:
        for kp in V:
            value *= kp - k
            if value == 0:
                return 0
    return value


def euler_hom(U, V, ring: Ring = RING_T) -> Scalar:
    """t^(|U||V|) * product of (k'-k); zero iff a weight repeats across."""
    return ring.monomial(QQ(euler_int(U, V)), {"t": len(U) * len(V)})


# ---------------------------------------------------------------------------
# localized pairings and their normalization
# ---------------------------------------------------------------------------

def raw_flag_pairing(cfg: CutoffConfig, f: SymFunc, U, W,
                     ring: Ring = RING_T):
    """(z-exponent, scalar) of the one-step raising correspondence U -> W,
    or None when U is not contained in W."""
    su, sw = set(U), set(W)
    if not su <= sw:
        return None
    added = tuple(sorted(sw - su, reverse=True))
    value = euler_hom(U, cfg.complement(W), ring) * chern_eval(f, added, ring)
    return sum(added), value


def norm_lower_int(mu, m: int, M: int) -> int:
    """Product of (-M - m + i - j) over the diagram; positive on valid
    configurations (source normalization)."""
    value = 1
    for i, row in enumerate(mu, start=1):
        for j in range(1, row + 1):
            value *= -M - m + i - j
    return value


def norm_upper_int(nu, n: int, N: int) -> int:
    """Product of (N + n - i + j) over the diagram (target normalization)."""
    value = 1
    for i, row in enumerate(nu, start=1):
        for j in range(1, row + 1):
            value *= N + n - i + j
    return value


def norm_cross(m: int, n: int, cfg: CutoffConfig, ring: Ring = RING_T) -> Scalar:
    """t^((m+N)(-n-M)) * product of (j - i) for i in -(N-1)..m, j in n+1..-M."""
    value = 1
    for i in range(-(cfg.N - 1), m + 1):
        for j in range(n + 1, -cfg.M + 1):
            value *= j - i
    return ring.monomial(QQ(value), {"t": (m + cfg.N) * (-n - cfg.M)})


def normalized_flag_pairing(cfg: CutoffConfig, f: SymFunc, src: Label,
                            tgt: Label, ring: Ring = RING_T):
    """Localized pairing of the charge-raising correspondence between the
    fixed points of src and tgt, normalized to be cutoff-independent.

    Returns (z-exponent, scalar) or None when the occupied-set containment
    fails.  Only charge-raising (target charge >= source charge) pairings
    live on the window model; lowering elements are defined through the mode
    algebra and its documented sign rule.
    """
    (mu, m), (nu, n) = src, tgt
    if n < m:
        raise ValueError("window pairings are charge-raising only")
    U = truncated_weights(cfg, mu, m)
    W = truncated_weights(cfg, nu, n)
    raw = raw_flag_pairing(cfg, f, U, W, ring)
    if raw is None:
        return None
    zexp, value = raw
    c_low = ring.monomial(QQ(norm_lower_int(mu, m, cfg.M)), {"t": size(mu)})
    c_up = ring.monomial(QQ(norm_upper_int(nu, n, cfg.N)), {"t": size(nu)})
    return zexp, value * c_low * c_up / norm_cross(m, n, cfg, ring)


def min_cutoff(*labels: Label) -> CutoffConfig:
    """Smallest window in which every label has a fixed point."""
    N0, M0 = 1, 0
    for (mu, m) in labels:
        N0 = max(N0, length(mu) - m, -m)
        M0 = min(M0, -m, -(part(mu, 1) + m) if mu else -m)
    return CutoffConfig(M0, N0)


def stabilization_scan(f: SymFunc, src: Label, tgt: Label, extra: int = 2,
                       ring: Ring = RING_T) -> list:
    """Pairings on a grid of windows from the minimal one outward.

    Returns rows (cfg, result); result is None or (z-exponent, scalar).
    """
    base = min_cutoff(src, tgt)
    rows = []
    for dm in range(extra + 1):
        for dn in range(extra + 1):
            cfg = CutoffConfig(base.M - dm, base.N + dn)
            rows.append((cfg, normalized_flag_pairing(cfg, f, src, tgt, ring)))
    return rows


# ---------------------------------------------------------------------------
# normalization asymptotics
# ---------------------------------------------------------------------------

def norm_ratio_lower(mu, m: int, N: int) -> QQ:
    """norm_lower with cutoff -M = N, divided by N^|mu|; tends to 1."""
    return QQ(norm_lower_int(mu, m, -N), N ** size(mu))


def norm_ratio_upper(mu, m: int, N: int) -> QQ:
    """norm_upper at cutoff N divided by N^|mu|; tends to 1."""
    return QQ(norm_upper_int(mu, m, N), N ** size(mu))


# ---------------------------------------------------------------------------
# the locality-lemma functions F and H
# ---------------------------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class EulerWeights:
    """The class V -> euler_hom(V, weights), used by the F/H recursion."""

    weights: tuple


def class_eval(cls, V, ring: Ring = RING_T) -> Scalar:
    if isinstance(cls, EulerWeights):
        return euler_hom(V, cls.weights, ring)
    return chern_eval(cls, V, ring)


def F_eval(Yperp, X, cls, d: int, ring: Ring = RING_T) -> dict:
    """Fixed-point sum over d-subsets V of Yperp of
    z^(sum V) * cls(V) / alpha(V, (X + Yperp) minus V), as a map
    z-exponent -> scalar.  X + Yperp is a multiset (concatenation); when
    d exceeds |Yperp| the sum is empty."""
    if d < 0:
        raise ValueError(f"need d >= 0, got {d}")
    pool = tuple(X) + tuple(Yperp)
    out: dict = {}
    for V in combinations(Yperp, d):
        rest = list(pool)
        for v in V:
            rest.remove(v)
        den = euler_hom(V, rest, ring)
        if not den:
            raise ZeroDivisionError(
                f"repeated weight between {V} and {tuple(rest)}")
        term = class_eval(cls, V, ring) / den
        key = sum(V)
        cur = out.get(key, ring.zero()) + term
        if cur:
            out[key] = cur
        else:
            out.pop(key, None)
    return out


def laurent_add(x: dict, *more, ring: Ring = RING_T) -> dict:
    out = dict(x)
    for y in more:
        for k, v in y.items():
            cur = out.get(k, ring.zero()) + v
            if cur:
                out[k] = cur
            else:
                out.pop(k, None)
    return out


def laurent_scale(c, x: dict, shift: int = 0) -> dict:
    return {k + shift: c * v for k, v in x.items()} if c else {}


def laurent_sub(x: dict, y: dict, ring: Ring = RING_T) -> dict:
    return laurent_add(x, laurent_scale(-1, y), ring=ring)


def H_eval(Yperp, X, cls, d: int, ring: Ring = RING_T) -> dict:
    """F(Yperp, X, cls, d) - (-1)^d F(X, Yperp, cls, d)."""
    return laurent_sub(
        F_eval(Yperp, X, cls, d, ring),
        laurent_scale(parity_sign(d), F_eval(X, Yperp, cls, d, ring)),
        ring=ring)


def FH_eval(Yperp, X, f, d: int, window=None, ring: Ring = RING_T):
    """Both lemma functions at once; window (lo, hi) clips z-exponents."""
    F = F_eval(Yperp, X, f, d, ring)
    H = laurent_sub(F, laurent_scale(parity_sign(d),
                                     F_eval(X, Yperp, f, d, ring)), ring=ring)
    if window is not None:
        lo, hi = window
        F = {k: v for k, v in F.items() if lo <= k <= hi}
        H = {k: v for k, v in H.items() if lo <= k <= hi}
    return F, H


def fh_recursion_sides(Yperp, X, S, d: int, k, ring: Ring = RING_T):
    """Both sides of the weight-extraction recursion for the class c_S.

    Left: H(Yperp, X, c_S, d) - (-1)^d H(Yperp-k, X+k, c_S, d).
    Right: [alpha({k}, S) z^k / alpha(pool-k, {k})] * H(Yperp-k, X, c_(S+k), d-1).
    Returned as (left, right) exponent maps for exact comparison.
    """
    if k not in Yperp:
        raise ValueError(f"{k} not in {Yperp}")
    Yrest = tuple(x for x in Yperp if x != k)
    lhs = laurent_sub(
        H_eval(Yperp, X, EulerWeights(S), d, ring),
        laurent_scale(parity_sign(d),
                      H_eval(Yrest, tuple(X) + (k,), EulerWeights(S), d, ring)),
        ring=ring)
    pool = tuple(X) + tuple(Yperp)
    rest = list(pool)
    rest.remove(k)
    factor = euler_hom((k,), S, ring) / euler_hom(rest, (k,), ring)
    rhs = laurent_scale(
        factor,
        H_eval(Yrest, X, EulerWeights(tuple(S) + (k,)), d - 1, ring),
        shift=k)
    return lhs, rhs


# ---------------------------------------------------------------------------
# two-field composites on the window
# ---------------------------------------------------------------------------

def _step_terms(cfg: CutoffConfig, charge: int, cls, src, dressed: bool,
                ring: Ring):
    """All (target, x-exponent, scalar) for one charge-step out of src."""
    if charge >= 0:
        free = cfg.complement(src)
        for added in combinations(free, charge):
            tgt = tuple(sorted(set(src) | set(added), reverse=True))
            value = euler_hom(src, cfg.complement(tgt), ring) \
                * class_eval(cls, added, ring)
            if value:
                yield tgt, sum(added), value
    else:
        src_charge = len(src) - cfg.N
        for removed in combinations(src, -charge):
            tgt = tuple(k for k in src if k not in removed)
            value = euler_hom(tgt, cfg.complement(src), ring) \
                * class_eval(cls, removed, ring)
            if dressed:
                value = value * parity_sign(src_charge + sum(removed))
            if value:
                yield tgt, -sum(removed), value


def composite_grid(cfg: CutoffConfig, first, second, U, W,
                   dressed: bool = True, ring: Ring = RING_T) -> dict:
    """Grid of the two-step correspondence U -> W.

    first and second are (charge, cls, var) with var "z" or "w"; first acts
    on U.  Keys are (z-exponent, w-exponent); each summand is divided by the
    diagonal Euler class of its intermediate fixed point.
    """
    (c1, f1, v1), (c2, f2, v2) = first, second
    if {v1, v2} != {"z", "w"}:
        raise ValueError("the two steps must use the variables z and w")
    out: dict = {}
    U = tuple(sorted(U, reverse=True))
    target = tuple(sorted(W, reverse=True))
    for mid, x1, s1 in _step_terms(cfg, c1, f1, U, dressed, ring):
        diag = euler_hom(mid, cfg.complement(mid), ring)
        for tgt, x2, s2 in _step_terms(cfg, c2, f2, mid, dressed, ring):
            if tgt != target:
                continue
            key = (x1, x2) if v1 == "z" else (x2, x1)
            cur = out.get(key, ring.zero()) + s1 * s2 / diag
            if cur:
                out[key] = cur
            else:
                out.pop(key, None)
    return out


def lemma_supercommutator(cfg: CutoffConfig, a: int, f, b: int, g, U, W,
                          dressed: bool = True, ring: Ring = RING_T) -> dict:
    """Grid of <{Y(a,f,z), Y(b,g,w)} v_U, v_W> by fixed-point sums:
    Y(a,f,z)Y(b,g,w) - (-1)^(ab) Y(b,g,w)Y(a,f,z)."""
    zw = composite_grid(cfg, (b, g, "w"), (a, f, "z"), U, W, dressed, ring)
    wz = composite_grid(cfg, (a, f, "z"), (b, g, "w"), U, W, dressed, ring)
    out = dict(zw)
    sign = parity_sign(a * b)
    for key, v in wz.items():
        cur = out.get(key, ring.zero()) - sign * v
        if cur:
            out[key] = cur
        else:
            out.pop(key, None)
    return out


# ---------------------------------------------------------------------------
# the closed form for the basic charge-(-1) x charge-b commutator
# ---------------------------------------------------------------------------

def fermicom_sides(cfg: CutoffConfig, U, W, window=None):
    """Both sides of the closed two-field formula at t=1.

    U and W are fixed-point weight sets with U contained in W; the pair of
    fields has charges (-1, |W|-|U|+1) and trivial classes.  Returns
    (lhs, rhs): maps (z-exponent, w-exponent) -> rational.  The left side is
    the fixed-point sum (z-step first, then the raising w-step, minus
    (-1)^b times the opposite order), normalized by w^(-sum(W minus U)); the
    right side applies the product of (k + z d/dz) over k in W minus U to
    the binomial kernel z^M w^(-(N-1)) (z+w)^(N-M-1)/(N-M-1)!, scaled by the
    integer Euler factor of Hom(U, W-complement).

    Both sides are finite, so no truncation is ever needed; an optional
    window (lo, hi) restricts the returned exponent pairs to that closed
    range in each variable, for display.
    """
    su, sw = set(U), set(W)
    if not su <= sw:
        raise ValueError("need U contained in W")
    b = len(W) - len(U) + 1
    shift = -sum(sw - su)
    ring = RING_T
    one: SymFunc = {(): 1}
    A = composite_grid(cfg, (-1, one, "z"), (b, one, "w"), U, W, True, ring)
    Ap = composite_grid(cfg, (b, one, "w"), (-1, one, "z"), U, W, True, ring)
    sign = parity_sign(b)
    lhs: dict = {}
    for grid, scale in ((A, 1), (Ap, -sign)):
        for (p, q), v in grid.items():
            c = scale * _scalar_at_t1(v)
            key = (p, q + shift)
            cur = lhs.get(key, QQ(0)) + c
            if cur:
                lhs[key] = cur
            else:
                lhs.pop(key, None)

    D = cfg.dim - 1
    rhs = {(cfg.M + i, -(cfg.N - 1) + D - i): QQ(comb(D, i), factorial(D))
           for i in range(D + 1)}
    for k in sorted(sw - su):
        rhs = {pq: (k + pq[0]) * c for pq, c in rhs.items()}
        rhs = {pq: c for pq, c in rhs.items() if c}
    scale = euler_int(U, cfg.complement(W))
    rhs = {pq: scale * c for pq, c in rhs.items()} if scale else {}
    if window is not None:
        lo, hi = window
        lhs = {pq: c for pq, c in lhs.items()
               if lo <= pq[0] <= hi and lo <= pq[1] <= hi}
        rhs = {pq: c for pq, c in rhs.items()
               if lo <= pq[0] <= hi and lo <= pq[1] <= hi}
    return lhs, rhs


fermicom_B = fermicom_sides


def euler_characteristic_sums(weights, n: int):
    """The two localization sums over a set of distinct integer weights.

    Returns (s0, s1) with s0 = sum_k prod_{k' != k} (k'-k-n)/(k'-k) and
    s1 the same sum weighted by k.  For distinct weights these collapse to
    the cardinality and to sum(k) + C(len,2)*n respectively; both are
    returned exactly so the collapse can be checked, not assumed.
    """
    ws = tuple(weights)
    if len(set(ws)) != len(ws):
        raise ZeroDivisionError("weights must be distinct")
    s0 = QQ(0)
    s1 = QQ(0)
    for k in ws:
        num = 1
        den = 1
        for kp in ws:
            if kp != k:
                num *= kp - k - n
                den *= kp - k
        term = QQ(num, den)
        s0 += term
        s1 += k * term
    return s0, s1


def _scalar_at_t1(v: Scalar) -> QQ:
    num = sum(v.num.values(), QQ(0))
    den = sum(v.den.values(), QQ(0))
    if den == 0:
        raise ZeroDivisionError("pole at t=1")
    return num / den


# ---------------------------------------------------------------------------
# grid divisibility: factors (z +/- w) and (z - 1)
# ---------------------------------------------------------------------------

def grid_divide_once(grid: dict, plus: bool = True,
                     ring: Ring = RING_T):
    """Exact quotient of a finite (z,w) grid by (z+w) (or (z-w)), else None.

    Synthetic division in z with w-Laurent coefficients: with G_p the
    coefficient of z^p, the quotient rows satisfy H_(p-1) = G_p - s*w*H_p
    (s = +-1) from the top row down; the final row is the remainder.
    """
    if not grid:
        return {}
    cols: dict = {}
    for (p, q), v in grid.items():
        cols.setdefault(p, {})[q] = v
    pmin, pmax = min(cols), max(cols)
    sigma = 1 if plus else -1
    quotient: dict = {}
    h: dict = {}  # H_p for the current p; starts as H_pmax = 0
    for p in range(pmax, pmin - 1, -1):
        nxt = dict(cols.get(p, {}))
        for q, v in h.items():
            cur = nxt.get(q + 1, ring.zero()) - sigma * v
            if cur:
                nxt[q + 1] = cur
            else:
                nxt.pop(q + 1, None)
        h = nxt
        if p > pmin:
            for q, v in h.items():
                quotient[(p - 1, q)] = v
    return None if h else quotient


def grid_divisible_power(grid: dict, power: int, plus: bool = True,
                         ring: Ring = RING_T) -> bool:
    """Whether (z +/- w)^power divides the grid exactly."""
    cur = grid
    for _ in range(power):
        cur = grid_divide_once(cur, plus, ring)
        if cur is None:
            return False
    return True


def lemma_b_exponent(cfg: CutoffConfig, U, W, a: int, kappa, kappa_prime) -> int:
    """The claimed lower bound K_1 for the (z+w)-adic order of the mixed-sign
    two-field grid with classes e_kappa, e_kappa'."""
    X = set(U) & set(W)
    Yset = set(U) | set(W)
    Z = len(X) + (cfg.dim - len(Yset))
    d = len(U) + a - len(Yset)
    return Z + 1 - 2 * d - len(kappa) - len(kappa_prime)


def poly_z1_order(coeffs: dict, ring: Ring = RING_T) -> int:
    """Order of vanishing at z=1 of a finite exponent map (exact)."""
    if not coeffs:
        raise ValueError("zero Laurent polynomial")
    lo = min(coeffs)
    dense = [ring.zero()] * (max(coeffs) - lo + 1)
    for k, v in coeffs.items():
        dense[k - lo] = dense[k - lo] + v
    order = 0
    while True:
        # synthetic division by (z - 1): exact iff the value at 1 vanishes
        acc = ring.zero()
        for c in dense:
            acc = acc + c
        if acc:
            return order
        quot = []
        run = ring.zero()
        for c in dense[:0:-1]:
            run = run + c
            quot.append(run)
        dense = quot[::-1]
        order += 1
        if not dense:
            return order
