"""Charge-shifting vertex operators, their modes, and locality windows.

The matrix elements between charged-partition basis vectors are closed-form
products over the cells of the two partitions (an arm/leg product for each),
times the symmetric-function class evaluated on the weights that change.
Charge-lowering operators are obtained from charge-raising ones by reversing
the flag, inverting the formal variable, and (behind a convention switch)
substituting -z for z; the switch is what the anticommutation suite pins
down, and corrupting it is the standard negative control.

Mode composites are computed exactly: a mode maps a basis vector to a finite
combination, so locality grids need no truncation — the declared window only
bounds which coefficients are reported, and multiplying by (z - w) shrinks
the trustworthy region by one lower edge per power.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .conventions import DEFAULT, Conventions
from .fock import (
    EVector,
    FVector,
    _transport,
    e_add,
    e_apply_alpha,
    e_apply_q,
    hook_norm_sq,
)
from .partitions import (
    arm,
    cells,
    from_shifted_indices,
    hook_product,
    leg,
    part,
    size,
)
from .scalars import QQ, RING_T, Ring
from .symfunc import SymFunc, chern_eval, monomial_value
from .wedge import count_above, is_occupied, occupied_prefix

Label = tuple


class GuardBandError(RuntimeError):
    """Raised when a truncation bound is too small for an exact answer."""


def parity_sign(k: int) -> int:
    return -1 if k % 2 else 1


# ---------------------------------------------------------------------------
# occupied-set comparisons
# ---------------------------------------------------------------------------

def maya_contains(src: Label, tgt: Label) -> bool:
    """Whether S(src) is a subset of S(tgt)."""
    (mu, m), (nu, n) = src, tgt
    if m > n:
        return False
    tail = n - len(nu)
    depth = count_above(mu, m, tail)
    return all(is_occupied(nu, n, s) for s in occupied_prefix(mu, m, depth))


def added_weights(src: Label, tgt: Label) -> tuple:
    """S(tgt) minus S(src), decreasing; assumes containment holds."""
    (mu, m), (nu, n) = src, tgt
    tail = m - len(mu)
    depth = count_above(nu, n, tail)
    return tuple(s for s in occupied_prefix(nu, n, depth)
                 if not is_occupied(mu, m, s))


@lru_cache(maxsize=None)
def w_product(a: int, mu, nu) -> int:
    """The two-partition arm/leg product governing charge-raising matrix
    elements from mu to nu with charge step a."""
    value = 1
    for (i, j) in cells(mu):
        value *= a + arm(nu, i, j) + leg(mu, i, j) + 1
    for (i, j) in cells(nu):
        value *= a - arm(mu, i, j) - leg(nu, i, j) - 1
    return value


# ---------------------------------------------------------------------------
# single matrix elements
# ---------------------------------------------------------------------------

def matrix_element_W(a: int, f: SymFunc, src: Label, tgt: Label,
                     conv: Conventions = DEFAULT, ring: Ring = RING_T):
    """Coefficient of the vertex operator pairing <Y(a,f,z) v_src, v_tgt>.

    Returns None when the element vanishes, else (z_exponent, scalar).
    The z-exponent includes the mode normalization shift a(a+1)/2.
    """
    (mu, m), (nu, n) = src, tgt
    if n != m + a:
        return None
    k = size(nu) - size(mu) + (n * (n + 1) - m * (m + 1)) // 2
    zexp = k - a * (a + 1) // 2
    if a >= 0:
        if not maya_contains(src, tgt):
            return None
        roots = added_weights(src, tgt)
        value = w_product(a, mu, nu)
        sign = 1
    else:
        if not maya_contains(tgt, src):
            return None
        roots = added_weights(tgt, src)
        value = w_product(-a, nu, mu)
        sign = parity_sign(m * a)
        if conv.neg_z_substitution:
            sign *= parity_sign(zexp)
    if value == 0:
        return None
    cls = chern_eval(f, roots, ring)
    if not cls:
        return None
    scalar = ring.monomial(QQ(sign * value), {"t": size(mu) + size(nu)}) * cls
    return zexp, scalar


def _mode_targets(a: int, label: Label, tsize: int):
    """All partitions of tsize whose occupied set differs from the label's
    by adding a indices (a >= 0) or removing -a of them (a < 0), paired with
    the changed indices in decreasing order.

    Candidate changed indices are bounded a priori: an added index s forces
    the target size to be at least s - (m + a), and the sizes of targets
    under removal satisfy |nu| = |mu| + q*m - q(q-1)/2 - sum(removed) with
    every removable index at most m + mu_1.
    """
    (mu, m) = label
    n = m + a
    found = []
    if a >= 0:
        lo = m - len(mu)  # every index <= lo is occupied
        hi = tsize + n
        prefix = occupied_prefix(mu, m, len(mu) + 1)
        holes = [s for s in range(hi, lo, -1) if not is_occupied(mu, m, s)]
        for added in combinations(holes, a):
            nu = from_shifted_indices(prefix + list(added), n)
            if size(nu) == tsize:
                found.append((nu, added))
    else:
        q = -a
        total = size(mu) + q * m - q * (q - 1) // 2 - tsize
        s_lo = total - (q - 1) * (m + part(mu, 1))
        depth = max(count_above(mu, m, s_lo - 1), len(mu) + 1, q)
        prefix = occupied_prefix(mu, m, depth)
        for removed in combinations(prefix, q):
            if sum(removed) != total:
                continue
            gone = set(removed)
            nu = from_shifted_indices([s for s in prefix if s not in gone], n)
            if size(nu) == tsize:
                found.append((nu, removed))
    return found


@lru_cache(maxsize=None)
def _mode_entries(a: int, kappa: tuple, d: int, label: Label,
                  conv: Conventions):
    """Orthonormal-basis matrix entries of the degree-d mode of Y(a, e_kappa)
    out of `label`, as ((target, rational), ...); the scalar coefficient is
    the rational times t^(sum kappa)."""
    (mu, m) = label
    tsize = size(mu) + d - a * m
    if tsize < 0:
        return ()
    n = m + a
    out = []
    for nu, roots in _mode_targets(a, label, tsize):
        tgt = (nu, n)
        if a >= 0:
            value = w_product(a, mu, nu)
            sign = 1
        else:
            value = w_product(-a, nu, mu)
            sign = parity_sign(m * a)
            if conv.neg_z_substitution:
                sign *= parity_sign(d)
        ev = monomial_value(kappa, roots)
        if value == 0 or ev == 0:
            continue
        coeff = QQ(sign * value * ev * parity_sign(size(nu)),
                   hook_product(mu) * hook_product(nu))
        out.append((tgt, coeff))
    return tuple(out)


def mode_e(a: int, kappa: tuple, d: int, x: EVector,
           conv: Conventions = DEFAULT) -> EVector:
    """Rational layer: degree-d mode of Y(a, e_kappa) on the orthonormal
    basis, dropping the constant t^(sum kappa) factor."""
    out: EVector = {}
    for label, coeff in x.items():
        for tgt, c in _mode_entries(a, kappa, d, label, conv):
            new = out.get(tgt, 0) + c * coeff
            if new:
                out[tgt] = new
            else:
                out.pop(tgt, None)
    return out


def e_psi(j: int, x: EVector, conv: Conventions = DEFAULT) -> EVector:
    """Fermion mode: coefficient of z^(-j-1) in Y(1, 1, z)."""
    return mode_e(1, (), -j - 1, x, conv)


def e_psi_star(j: int, x: EVector, conv: Conventions = DEFAULT) -> EVector:
    """Conjugate fermion mode: coefficient of z^(-j) in Y(-1, 1, z)."""
    return mode_e(-1, (), -j, x, conv)


def field_mode(a: int, f: SymFunc, d: int, x: FVector, basis: str = "v",
               conv: Conventions = DEFAULT) -> FVector:
    """[z^d] Y(a, f, z) applied to a scalar-coefficient vector."""
    if basis not in ("v", "e"):
        raise ValueError(f"unknown basis {basis!r}")
    out: FVector = {}
    for label, coeff in x.items():
        ring = coeff.ring
        (mu, m) = label
        tsize = size(mu) + d - a * m
        if tsize < 0:
            continue
        n = m + a
        for nu, _ in _mode_targets(a, label, tsize):
            tgt = (nu, n)
            me = matrix_element_W(a, f, label, tgt, conv, ring)
            if me is None:
                continue
            zexp, value = me
            assert zexp == d
            c = value / hook_norm_sq(nu, ring)
            if basis == "e":
                c = c / _transport(label, tgt, ring)
            term = coeff * c
            cur = out.get(tgt, ring.zero()) + term
            if cur:
                out[tgt] = cur
            else:
                out.pop(tgt, None)
    return out


# ---------------------------------------------------------------------------
# boson realization of the same modes
# ---------------------------------------------------------------------------

def _bosonized_label(a: int, d: int, label: Label, degree_cap: int,
                     conv: Conventions) -> EVector:
    """Degree-d mode of the exponentiated-Heisenberg form of Y(a, 1, z)
    on one basis vector, on the orthonormal basis."""
    (mu, m) = label
    kmax = size(mu)
    jmax = d - a * m + kmax
    if degree_cap < kmax or degree_cap < jmax:
        raise GuardBandError(
            f"degree cap {degree_cap} cannot reach degree {max(kmax, jmax)} "
            f"needed for mode {d} out of {label}")
    plus = [{label: QQ(1)}]
    for k in range(1, kmax + 1):
        acc: EVector = {}
        for i in range(1, k + 1):
            for lbl, c in e_apply_alpha(i, plus[k - i], conv).items():
                new = acc.get(lbl, 0) + c
                if new:
                    acc[lbl] = new
                else:
                    acc.pop(lbl, None)
        plus.append({lbl: QQ(-a, k) * c for lbl, c in acc.items()})
    total: EVector = {}
    for k in range(0, kmax + 1):
        j = d - a * m + k
        if j < 0 or not plus[k]:
            continue
        minus = [plus[k]]
        for jj in range(1, j + 1):
            acc = {}
            for i in range(1, jj + 1):
                for lbl, c in e_apply_alpha(-i, minus[jj - i], conv).items():
                    new = acc.get(lbl, 0) + c
                    if new:
                        acc[lbl] = new
                    else:
                        acc.pop(lbl, None)
            minus.append({lbl: QQ(a, jj) * c for lbl, c in acc.items()})
        total = e_add(total, minus[j])
    return e_apply_q(a, total)


def bosonized_mode(a: int, d: int, x: FVector, degree_cap: int,
                   basis: str = "v", conv: Conventions = DEFAULT) -> FVector:
    """[z^d] of Q^a z^(a alpha_0) exp(a sum alpha_-n z^n / n)
    exp(-a sum alpha_n z^-n / n) applied to x.

    degree_cap must dominate every intermediate degree actually reached, or
    GuardBandError is raised; with a sufficient cap the result is exact.
    """
    if basis not in ("v", "e"):
        raise ValueError(f"unknown basis {basis!r}")
    out: FVector = {}
    for label, coeff in x.items():
        ring = coeff.ring
        for tgt, c in _bosonized_label(a, d, label, degree_cap, conv).items():
            term = coeff * ring.from_coeff(c)
            if basis == "v":
                term = term * _transport(label, tgt, ring)
            cur = out.get(tgt, ring.zero()) + term
            if cur:
                out[tgt] = cur
            else:
                out.pop(tgt, None)
    return out


def e_bosonized(a: int, d: int, x: EVector, degree_cap: int,
                conv: Conventions = DEFAULT) -> EVector:
    out: EVector = {}
    for label, coeff in x.items():
        for tgt, c in _bosonized_label(a, d, label, degree_cap, conv).items():
            new = out.get(tgt, 0) + c * coeff
            if new:
                out[tgt] = new
            else:
                out.pop(tgt, None)
    return out


# ---------------------------------------------------------------------------
# locality windows
# ---------------------------------------------------------------------------

def supercommutator_window(a: int, b: int, f: SymFunc, g: SymFunc,
                           src: Label, tgt: Label,
                           z_window: tuple, w_window: tuple,
                           conv: Conventions = DEFAULT,
                           ring: Ring = RING_T) -> dict:
    """Exact grid of <{Y(a,f,z), Y(b,g,w)} v_src, v_tgt> coefficients.

    Keys are (z_exponent, w_exponent) within the inclusive windows; absent
    keys are exactly zero.  The supercommutator is the ab-graded one:
    Y_a Y_b - (-1)^(ab) Y_b Y_a.
    """
    (mus, ms), (mut, mt) = src, tgt
    if mt != ms + a + b:
        return {}
    supersign = parity_sign(a * b)
    dress = ring.monomial(
        QQ(parity_sign(size(mut)) * hook_product(mus) * hook_product(mut)),
        {"t": size(mus) + size(mut)})
    base = {src: QQ(1)}
    grid: dict = {}
    for p in range(z_window[0], z_window[1] + 1):
        for q in range(w_window[0], w_window[1] + 1):
            total = ring.zero()
            for kf, cf in f.items():
                for kg, cg in g.items():
                    r1 = mode_e(a, kf, p, mode_e(b, kg, q, base, conv), conv)
                    r2 = mode_e(b, kg, q, mode_e(a, kf, p, base, conv), conv)
                    r = r1.get(tgt, 0) - supersign * r2.get(tgt, 0)
                    if r:
                        total = total + ring.monomial(
                            QQ(cf * cg) * r, {"t": sum(kf) + sum(kg)})
            if total:
                grid[(p, q)] = total * dress
    return grid


def annihilation_order(grid: dict, z_window: tuple, w_window: tuple,
                       k_max: int):
    """Least K <= k_max with (z - w)^K * grid vanishing on the interior
    region that K multiplications leave trustworthy, or None.

    Each multiplication by (z - w) consumes one lower edge in both z and w;
    the check is exact on the surviving region.
    """
    zmin, zmax = z_window
    wmin, wmax = w_window
    cur = dict(grid)
    for k in range(0, k_max + 1):
        lo_z, lo_w = zmin + k, wmin + k
        if lo_z > zmax or lo_w > wmax:
            return None
        if not any(v for (p, q), v in cur.items()
                   if lo_z <= p <= zmax and lo_w <= q <= wmax):
            return k
        nxt = {}
        for p in range(lo_z + 1, zmax + 1):
            for q in range(lo_w + 1, wmax + 1):
                v = cur.get((p - 1, q), 0) - cur.get((p, q - 1), 0)
                if v:
                    nxt[(p, q)] = v
        cur = nxt
    return None
