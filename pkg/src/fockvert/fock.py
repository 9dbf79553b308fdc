"""The charged Fock space: hook inner product, basis conversions, the
translation operator Q, and the Heisenberg / Virasoro operators realized as
signed index-translations.

Two coefficient layers coexist.  The `e_*` functions act on the orthonormal
basis with plain rational coefficients (fast path used by the identity
suites); the corresponding uppercase functions act on formal vectors with
polynomial scalars in either basis and are the public entry points.
"""

from __future__ import annotations

from functools import lru_cache

from .conventions import DEFAULT, Conventions
from .partitions import check_partition, hook_product, size
from .scalars import QQ, RING_T, Ring, Scalar
from .wedge import moves

Label = tuple  # (mu, m)
FVector = dict  # Label -> Scalar
EVector = dict  # Label -> rational


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def vacuum(m: int = 0) -> Label:
    return ((), m)


# ---------------------------------------------------------------------------
# inner products and normalization
# ---------------------------------------------------------------------------

def hook_norm_sq(mu, ring: Ring = RING_T) -> Scalar:
    """(v_{mu,m}, v_{mu,m}): (-1)^|mu| times the squared hook product,
    times t^(2|mu|)."""
    check_partition(mu)
    h = hook_product(mu)
    return ring.monomial(QQ(_sign(size(mu)) * h * h), {"t": 2 * size(mu)})


def e_normalize(mu, ring: Ring = RING_T) -> Scalar:
    """Coefficient turning v_{mu,m} into the orthonormal vector e_{mu,m}."""
    check_partition(mu)
    return ring.one() / ring.monomial(QQ(hook_product(mu)), {"t": size(mu)})


def hook_pairing(x: FVector, y: FVector) -> Scalar:
    """Bilinear pairing of two vectors written in the v-basis."""
    ring = _vector_ring(x) or _vector_ring(y) or RING_T
    total = ring.zero()
    for label, cx in x.items():
        cy = y.get(label)
        if cy is not None:
            total = total + cx * cy * hook_norm_sq(label[0], ring)
    return total


def hermitian_pairing(x: FVector, y: FVector) -> Scalar:
    """Sesquilinear pairing: conjugation sends f(t) to conj(f)(-t).

    The e-basis is orthonormal for this pairing.
    """
    ring = _vector_ring(x) or _vector_ring(y) or RING_T
    total = ring.zero()
    for label, cx in x.items():
        cy = y.get(label)
        if cy is not None:
            total = total + cx.conjugate() * cy * hook_norm_sq(label[0], ring)
    return total


def _vector_ring(x: FVector):
    for coeff in x.values():
        if isinstance(coeff, Scalar):
            return coeff.ring
    return None


def v_to_e(x: FVector) -> FVector:
    """Rewrite a v-basis vector over the orthonormal basis."""
    out = {}
    for (mu, m), coeff in x.items():
        ring = coeff.ring
        c = coeff * ring.monomial(QQ(hook_product(mu)), {"t": size(mu)})
        if c:
            out[(mu, m)] = c
    return out


def e_to_v(x: FVector) -> FVector:
    out = {}
    for (mu, m), coeff in x.items():
        c = coeff * e_normalize(mu, coeff.ring)
        if c:
            out[(mu, m)] = c
    return out


# ---------------------------------------------------------------------------
# rational fast layer on the orthonormal basis
# ---------------------------------------------------------------------------

def _acc(state: dict, label, coeff):
    new = state.get(label, 0) + coeff
    if new:
        state[label] = new
    else:
        state.pop(label, None)


@lru_cache(maxsize=None)
def _translate_moves(mu, m: int, n: int):
    return tuple((sign, s, label) for sign, s, label in moves(mu, m, n))


def e_apply_alpha(n: int, x: EVector, conv: Conventions = DEFAULT) -> EVector:
    """Heisenberg mode on the orthonormal basis: the signed translation
    s -> s - n with unit weights, dressed by the documented parity sign;
    alpha_0 is multiplication by the charge."""
    out: EVector = {}
    if n == 0:
        for (mu, m), coeff in x.items():
            _acc(out, (mu, m), m * coeff)
        return out
    dress = _sign(n) if conv.alpha_parity_sign else 1
    for (mu, m), coeff in x.items():
        for sign, _s, label in _translate_moves(mu, m, n):
            _acc(out, label, dress * sign * coeff)
    return out


def e_apply_virasoro(n: int, x: EVector, conv: Conventions = DEFAULT) -> EVector:
    """Virasoro mode: translation s -> s - n weighted by (s - n + offset),
    with the same parity dressing as alpha.  L_0 is diagonal, normal-ordered
    so that the charge-0 vacuum has eigenvalue 0."""
    off = conv.virasoro_weight_offset
    out: EVector = {}
    if n == 0:
        for (mu, m), coeff in x.items():
            eig = QQ(size(mu)) + QQ(m * (m + 1), 2) + m * off
            _acc(out, (mu, m), eig * coeff)
        return out
    dress = _sign(n) if conv.alpha_parity_sign else 1
    for (mu, m), coeff in x.items():
        for sign, s, label in _translate_moves(mu, m, n):
            _acc(out, label, dress * sign * (s - n + off) * coeff)
    return out


def e_apply_q(p: int, x: EVector) -> EVector:
    """Charge translation: relabels (mu, m) -> (mu, m + p)."""
    return {(mu, m + p): coeff for (mu, m), coeff in x.items()}


# ---------------------------------------------------------------------------
# scalar-coefficient wrappers
# ---------------------------------------------------------------------------

def _transport(label_src, label_tgt, ring: Ring) -> Scalar:
    """Factor converting an e-basis matrix entry to the v-basis: operators
    O have O v_mu = sum c_e * (t^|mu| H_mu / t^|nu| H_nu) v_nu."""
    mu, nu = label_src[0], label_tgt[0]
    num = ring.monomial(QQ(hook_product(mu)), {"t": size(mu)})
    den = ring.monomial(QQ(hook_product(nu)), {"t": size(nu)})
    return num / den


def _apply_e_op(op, x: FVector, basis: str, conv: Conventions) -> FVector:
    if basis not in ("v", "e"):
        raise ValueError(f"unknown basis {basis!r}")
    out: FVector = {}
    for label, coeff in x.items():
        ring = coeff.ring
        for tgt, c in op({label: QQ(1)}, conv).items():
            term = coeff * ring.from_coeff(c)
            if basis == "v":
                term = term * _transport(label, tgt, ring)
            cur = out.get(tgt, ring.zero()) + term
            if cur:
                out[tgt] = cur
            else:
                out.pop(tgt, None)
    return out


def apply_alpha(n: int, x: FVector, basis: str = "v",
                conv: Conventions = DEFAULT) -> FVector:
    return _apply_e_op(lambda s, c: e_apply_alpha(n, s, c), x, basis, conv)


def apply_virasoro(n: int, x: FVector, basis: str = "v",
                   conv: Conventions = DEFAULT) -> FVector:
    return _apply_e_op(lambda s, c: e_apply_virasoro(n, s, c), x, basis, conv)


def apply_q(p: int, x: FVector) -> FVector:
    return {(mu, m + p): coeff for (mu, m), coeff in x.items()}


apply_Q = apply_q


def bracket(op_a, op_b, sign: int, x):
    """op_a(op_b(x)) - sign * op_b(op_a(x)): sign +1 is a commutator,
    sign -1 an anticommutator.  Operators are vector -> vector callables."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    first = op_a(op_b(x))
    second = op_b(op_a(x))
    out = dict(first)
    for label, coeff in second.items():
        _acc(out, label, -1 * sign * coeff)
    return out


def e_vector_is_zero(x: EVector) -> bool:
    return all(not c for c in x.values())


def as_e_vector(label: Label) -> EVector:
    check_partition(label[0])
    return {label: QQ(1)}


def e_scale(c, x: EVector) -> EVector:
    return {label: c * coeff for label, coeff in x.items() if c * coeff}


def e_add(*xs: EVector) -> EVector:
    out: EVector = {}
    for x in xs:
        for label, coeff in x.items():
            _acc(out, label, coeff)
    return out


def e_sub(x: EVector, y: EVector) -> EVector:
    out = dict(x)
    for label, coeff in y.items():
        _acc(out, label, -coeff)
    return out
