"""Brute-force signed model of the semi-infinite wedge.

States are formal combinations of charged-partition labels (mu, m), standing
for the decreasing occupied index set S(mu, m) = {m + mu_i - i + 1 : i >= 1}.
The three primitives — inserting an index, removing an index, and moving an
index by n — carry Koszul signs counted directly on the occupied set.  This
module is deliberately independent of the geometric formulas elsewhere in the
package: it is the oracle the mode conventions are checked against.

Coefficients are whatever the caller supplies (rationals, Gaussian
rationals); the primitives themselves only ever produce integer signs.
"""

from __future__ import annotations

from .partitions import check_partition, from_shifted_indices, part

Label = tuple  # (mu, m)


def occupied_prefix(mu, m: int, depth: int) -> list:
    """First `depth` occupied indices of S(mu, m), strictly decreasing."""
    return [m + part(mu, i) - i + 1 for i in range(1, depth + 1)]


def is_occupied(mu, m: int, j: int) -> bool:
    if j <= m - len(mu):
        return True
    return j in occupied_prefix(mu, m, len(mu))


def count_above(mu, m: int, j: int) -> int:
    """Number of occupied indices strictly greater than j (always finite
    for j above the solid tail)."""
    count = 0
    i = 1
    while m + part(mu, i) - i + 1 > j:
        count += 1
        i += 1
    return count


def insert_index(mu, m: int, j: int):
    """Wedge with index j: None if occupied, else (sign, new label).

    Sign is (-1)^(number of occupied indices greater than j); the new label
    has charge m + 1.
    """
    if is_occupied(mu, m, j):
        return None
    above = count_above(mu, m, j)
    depth = max(len(mu), above) + 2
    prefix = occupied_prefix(mu, m, depth)
    prefix.insert(above, j)
    return (-1) ** above, (from_shifted_indices(prefix, m + 1), m + 1)


def remove_index(mu, m: int, j: int):
    """Contraction with index j: None if unoccupied, else (sign, new label).

    Sign convention matches insert_index; the new label has charge m - 1.
    """
    if not is_occupied(mu, m, j):
        return None
    above = count_above(mu, m, j)
    depth = max(len(mu), above + 1) + 2
    prefix = occupied_prefix(mu, m, depth)
    assert prefix[above] == j
    prefix.pop(above)
    return (-1) ** above, (from_shifted_indices(prefix, m - 1), m - 1)


def moves(mu, m: int, n: int):
    """All single-index moves s -> s - n with their Koszul signs.

    Returns a list of (sign, s, new label); empty for n = 0.  The sign is
    the parity of the number of occupied indices strictly between s and
    s - n, i.e. the sign of contract-at-s followed by wedge-at-(s - n).
    """
    if n == 0:
        return []
    out = []
    check_partition(mu)
    for i in range(1, len(mu) + abs(n) + 1):
        s = m + part(mu, i) - i + 1
        target = s - n
        if is_occupied(mu, m, target):
            continue
        if n > 0:
            between = count_above(mu, m, target) - count_above(mu, m, s) - 1
        else:
            between = count_above(mu, m, s) - count_above(mu, m, target)
        depth = max(len(mu), count_above(mu, m, min(s, target)) + 1) + abs(n) + 2
        prefix = occupied_prefix(mu, m, depth)
        prefix.remove(s)
        prefix.append(target)
        prefix.sort(reverse=True)
        out.append(((-1) ** between, s, (from_shifted_indices(prefix, m), m)))
    return out


# ---------------------------------------------------------------------------
# state-level wrappers: a state is a dict label -> coefficient
# ---------------------------------------------------------------------------

def _accumulate(state, label, coeff):
    new = state.get(label, 0) + coeff
    if new == 0:
        state.pop(label, None)
    else:
        state[label] = new


def wedge(j: int, state: dict) -> dict:
    out: dict = {}
    for (mu, m), coeff in state.items():
        hit = insert_index(mu, m, j)
        if hit is not None:
            sign, label = hit
            _accumulate(out, label, sign * coeff)
    return out


def contract(j: int, state: dict) -> dict:
    out: dict = {}
    for (mu, m), coeff in state.items():
        hit = remove_index(mu, m, j)
        if hit is not None:
            sign, label = hit
            _accumulate(out, label, sign * coeff)
    return out


def translate(n: int, state: dict, weight=None) -> dict:
    """Sum over occupied s of weight(s) times the signed move s -> s - n.

    weight defaults to the constant 1; it may return any coefficient-like
    value (int, rational, scalar).
    """
    if n == 0:
        raise ValueError("translate(0) needs an explicit normal-ordered rule")
    out: dict = {}
    for (mu, m), coeff in state.items():
        for sign, s, label in moves(mu, m, n):
            w = 1 if weight is None else weight(s)
            _accumulate(out, label, sign * w * coeff)
    return out
