"""Sign and weight conventions that pin down every operator in the package.

All identities checked by the test suites hold with the defaults below.  The
flags exist so that a deliberately corrupted convention can be fed through the
same code path as a negative control: flipping any one of them makes a
documented identity fail by a visible sign or offset rather than silently.
"""

from __future__ import annotations

import dataclasses


@dataclasses.dataclass(frozen=True)
class Conventions:
    """Global convention switches.

    neg_z_substitution:
        How charge-lowering fields (a < 0) are matched against the geometric
        pairing.  ``True`` reverses the containment direction between source
        and target point sets and substitutes z -> -z in the comparison,
        which is the choice under which the anticommutation checks close.

    alpha_parity_sign:
        Whether the degree-n Heisenberg mode carries the extra (-1)^n parity
        factor relative to the bare shift-by-n operator on charged wedges.
        ``True`` is required for the boson-fermion dictionary to hold.

    virasoro_weight_offset:
        The weight of the single-wedge move s -> s - n inside the degree-n
        Virasoro mode is (s - n + offset).  The default -1 (weight s - n - 1)
        is the choice under which [L_n, Y(a, z)] closes on z^n (z d/dz + ...)
        applied to the field.
    """

    neg_z_substitution: bool = True
    alpha_parity_sign: bool = True
    virasoro_weight_offset: int = -1


DEFAULT = Conventions()
