"""Pairs of monomial ideals in the plane: characters and matrix elements.

Characters are exponent maps in (z1, z2) with integer coefficients.  The
closed finite character attached to a pair of partitions is a sum of one
monomial per cell, with arms measured inside one partition and legs against
the other; its Euler class (one linear factor per monomial) gives the
two-variable matrix element, which specializes along (t1, t2) = (t, -t),
c1 = a*t onto the one-variable vertex-operator element after transposing
both partitions.

The series oracle reproduces the same finite character from truncated
quadrant characters multiplied strictly left to right; truncation junk is
confined to exponents within 6 of the working bound, so a crop margin that
generously contains every closed-form exponent makes the comparison exact.
"""

from __future__ import annotations

from functools import lru_cache

from .conventions import DEFAULT, Conventions
from .partitions import arm, cells, conjugate, leg, length, part, size
from .scalars import RING_T, RING_T1T2C1, Ring, Scalar
from .vertex import matrix_element_W

ONE: dict = {(): 1}


# ---------------------------------------------------------------------------
# truncated quadrant characters
# ---------------------------------------------------------------------------

def ideal_character(mu, depth: int) -> dict:
    """Character of the sections of the monomial ideal of mu: one term
    z1^(1-i) z2^(1-j) per lattice cell (i,j) outside the diagram, truncated
    to exponents in [-depth, 0]^2.

    The first variable runs along columns of mu (cell (i,j) lies inside the
    diagram when j is at most the i-th part of the transpose); this is the
    pairing of variables under which the finite closed-form character below
    reproduces the series difference.
    """
    if depth < max(length(mu), part(mu, 1) if mu else 0) + 1:
        raise ValueError(
            f"depth {depth} too small for the staircase of {mu}")
    mut = conjugate(mu)
    out = {}
    for i in range(1, depth + 2):
        row = part(mut, i)
        for j in range(row + 1, depth + 2):
            e = (1 - i, 1 - j)
            if e[0] >= -depth and e[1] >= -depth:
                out[e] = 1
    return out


def conj_character(x: dict) -> dict:
    """Substitute z1 -> 1/z1, z2 -> 1/z2 (negate all exponents)."""
    return {(-a, -b): c for (a, b), c in x.items()}


def bichar_mul(x: dict, y: dict, lo: int, hi: int) -> dict:
    """Product with every term outside [lo, hi]^2 discarded."""
    out: dict = {}
    for (a1, b1), c1 in x.items():
        for (a2, b2), c2 in y.items():
            a, b = a1 + a2, b1 + b2
            if lo <= a <= hi and lo <= b <= hi:
                s = out.get((a, b), 0) + c1 * c2
                if s:
                    out[(a, b)] = s
                else:
                    out.pop((a, b), None)
    return out


def bichar_sub(x: dict, y: dict) -> dict:
    out = dict(x)
    for e, c in y.items():
        s = out.get(e, 0) - c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def bichar_crop(x: dict, margin: int) -> dict:
    return {e: c for e, c in x.items()
            if -margin <= e[0] <= margin and -margin <= e[1] <= margin}


_CORNER = {(0, 0): 1, (1, 0): -1, (0, 1): -1, (1, 1): 1}  # (1-z1)(1-z2)


def chi_series(mu, nu, bound: int) -> dict:
    """Truncated pairing character (1-z1)(1-z2) * conj(ch I_mu) * ch I_nu,
    multiplied strictly left to right with truncation to [-bound, bound]^2
    after each product."""
    left = bichar_mul(_CORNER, conj_character(ideal_character(mu, bound)),
                      -bound, bound)
    return bichar_mul(left, ideal_character(nu, bound), -bound, bound)


def chi_series_diff(mu, nu, margin: int | None = None) -> dict:
    """Crop of chi(O, O) - chi(I_mu, I_nu) on which the truncated series
    computation is provably exact.

    Telescoping makes this cheap: with D_mu the finite character of the
    cells of mu, the difference reduces to
    D_nu + [(1-z1)(1-z2) conj(D_mu)] * chO - [(1-z1)(1-z2) conj(D_mu)] * D_nu,
    and the only truncation junk lives within 6 of the working bound, which
    sits 7 past the crop.
    """
    if margin is None:
        margin = size(mu) + size(nu) + 2
    bound = max(margin, length(mu), part(mu, 1) if mu else 0,
                length(nu), part(nu, 1) if nu else 0) + 7
    d_mu_bar = conj_character({(1 - j, 1 - i): 1 for (i, j) in cells(mu)})
    d_nu = {(1 - j, 1 - i): 1 for (i, j) in cells(nu)}
    corner_mu = bichar_mul(_CORNER, d_mu_bar, -bound, bound)
    ch_o = ideal_character((), bound)
    diff = dict(d_nu)
    for e, c in bichar_mul(corner_mu, ch_o, -bound, bound).items():
        s = diff.get(e, 0) + c
        if s:
            diff[e] = s
        else:
            diff.pop(e, None)
    diff = bichar_sub(diff, bichar_mul(corner_mu, d_nu, -bound, bound))
    return bichar_crop(diff, margin)


# ---------------------------------------------------------------------------
# the closed finite character and its Euler class
# ---------------------------------------------------------------------------

def eclass_character(mu, nu, L_exponent=(0, 0)) -> dict:
    """Sum over cells of mu of z1^(arm_mu+1) z2^(-leg_nu) plus sum over
    cells of nu of z1^(-arm_nu) z2^(leg_mu+1), twisted by the line-bundle
    monomial; always exactly |mu| + |nu| terms counted with multiplicity."""
    p, q = L_exponent
    out: dict = {}
    for (i, j) in cells(mu):
        e = (arm(mu, i, j) + 1 + p, -leg(nu, i, j) + q)
        out[e] = out.get(e, 0) + 1
    for (i, j) in cells(nu):
        e = (-arm(nu, i, j) + p, leg(mu, i, j) + 1 + q)
        out[e] = out.get(e, 0) + 1
    return out


def character_euler(char: dict, ring: Ring = RING_T1T2C1) -> Scalar:
    """Product over monomials z1^a z2^b (with multiplicity) of the linear
    form c1 + a*t1 + b*t2."""
    value = ring.one()
    for (a, b), mult in sorted(char.items()):
        if mult < 0:
            raise ValueError("negative multiplicity has no Euler class")
        factor = ring.poly({(1, 0, 0): a, (0, 1, 0): b, (0, 0, 1): 1})
        value = value * factor ** mult
    return value


@lru_cache(maxsize=None)
def whooks_element(mu, nu, ring: Ring = RING_T1T2C1):
    """(z-exponent, coefficient) of the two-variable matrix element between
    the ideal classes of mu and nu: one factor
    c1 + (arm_mu+1) t1 - leg_nu t2 per cell of mu and one factor
    c1 - arm_nu t1 + (leg_mu+1) t2 per cell of nu; prefactor 1."""
    value = ring.one()
    for (i, j) in cells(mu):
        value = value * ring.poly({(1, 0, 0): arm(mu, i, j) + 1,
                                   (0, 1, 0): -leg(nu, i, j),
                                   (0, 0, 1): 1})
    for (i, j) in cells(nu):
        value = value * ring.poly({(1, 0, 0): -arm(nu, i, j),
                                   (0, 1, 0): leg(mu, i, j) + 1,
                                   (0, 0, 1): 1})
    return size(nu) - size(mu), value


def specialize_element(element, a: int, ring: Ring = RING_T):
    """Substitute (t1, t2, c1) -> (t, -t, a*t) exactly."""
    zexp, value = element

    def fold(p: dict) -> dict:
        out: dict = {}
        for (e1, e2, e3), c in p.items():
            c = c * (-1) ** e2 * a ** e3
            if c:
                key = (e1 + e2 + e3,)
                s = out.get(key, 0) + c
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return out

    return zexp, Scalar(ring, fold(value.num), fold(value.den))


# ---------------------------------------------------------------------------
# correspondence with the vertex operator
# ---------------------------------------------------------------------------

def correspondence_check(a: int, m: int, degree_cap: int,
                         conv: Conventions = DEFAULT) -> dict:
    """Compare the specialized two-variable element against z^(-ma) times
    the vertex-operator element between transposed labels, for every pair
    of partitions up to the cap.  Mismatches are reported, not raised."""
    from .partitions import partitions_up_to

    cases = []
    ok = True
    for mu in partitions_up_to(degree_cap):
        for nu in partitions_up_to(degree_cap):
            zexp, value = specialize_element(whooks_element(mu, nu), a)
            rhs = matrix_element_W(a, ONE, (conjugate(mu), m),
                                   (conjugate(nu), m + a), conv)
            if rhs is None:
                passed = not value
                rhs_text = "0"
                exp_ok = True
            else:
                rhs_zexp, rhs_value = rhs
                exp_ok = rhs_zexp - m * a == zexp
                passed = exp_ok and value == rhs_value
                rhs_text = str(rhs_value)
            ok = ok and passed
            cases.append({
                "mu": ",".join(map(str, mu)),
                "nu": ",".join(map(str, nu)),
                "z_exp": zexp,
                "lhs": str(value),
                "rhs": rhs_text,
                "z_exp_match": exp_ok,
                "pass": passed,
            })
    return {"a": a, "m": m, "prefactor": "1", "all_pass": ok, "cases": cases}
