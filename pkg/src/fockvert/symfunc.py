"""Integer combinations of elementary symmetric functions, plus their
evaluation as products of weights.

A symmetric function here is a dict mapping a descending tuple kappa (the
multiset of elementary indices) to an integer coefficient, so e.g.
{(2, 1, 1): 3, (): -1} is 3*e2*e1^2 - 1.  The evaluation `chern_eval`
substitutes a finite list of integer weights, with each weight k standing
for the line with equivariant parameter k*t: e_d picks up a factor t^d.
"""

from __future__ import annotations

from .scalars import RING_T, QQ, Ring, Scalar

SymFunc = dict

ONE: SymFunc = {(): 1}


def sym_const(c: int) -> SymFunc:
    return {(): c} if c else {}


def sym_e(k: int) -> SymFunc:
    if k < 0:
        raise ValueError("elementary symmetric index must be nonnegative")
    return {(): 1} if k == 0 else {(k,): 1}


def sym_add(f: SymFunc, g: SymFunc) -> SymFunc:
    out = dict(f)
    for kappa, c in g.items():
        new = out.get(kappa, 0) + c
        if new:
            out[kappa] = new
        else:
            out.pop(kappa, None)
    return out


def sym_mul(f: SymFunc, g: SymFunc) -> SymFunc:
    out: SymFunc = {}
    for ka, ca in f.items():
        for kb, cb in g.items():
            kappa = tuple(sorted(ka + kb, reverse=True))
            new = out.get(kappa, 0) + ca * cb
            if new:
                out[kappa] = new
            else:
                out.pop(kappa, None)
    return out


def sym_degree(f: SymFunc) -> int:
    """Top degree (e_d has degree d)."""
    return max((sum(kappa) for kappa in f), default=0)


def elementary_values(weights) -> list:
    """e_0, e_1, ..., e_len(weights) of the given integers, as ints."""
    es = [1]
    for w in weights:
        es.append(0)
        for d in range(len(es) - 1, 0, -1):
            es[d] += w * es[d - 1]
    return es


def monomial_value(kappa, weights) -> int:
    """Product of e_{kappa_i} over the weights; 0 once any index exceeds
    the number of weights."""
    es = elementary_values(weights)
    value = 1
    for k in kappa:
        if k >= len(es):
            return 0
        value *= es[k]
    return value


def chern_eval(f: SymFunc, weights, ring: Ring = RING_T) -> Scalar:
    """Evaluate f on the lines with parameters k*t for k in weights."""
    total = ring.zero()
    for kappa, c in f.items():
        v = c * monomial_value(kappa, weights)
        if v:
            total = total + ring.monomial(QQ(v), {"t": sum(kappa)})
    return total


# ---------------------------------------------------------------------------
# parsing and printing: expr := term (+ term)*, term := factor (* factor)*,
# factor := integer | eK | ( expr )
# ---------------------------------------------------------------------------

class SymFuncSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at offset {position}")
        self.position = position


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self):
        self._skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse(self) -> SymFunc:
        f = self.expr()
        self._skip_ws()
        if self.pos != len(self.text):
            raise SymFuncSyntaxError("unexpected trailing input", self.pos)
        return f

    def expr(self) -> SymFunc:
        f = self.term()
        while self._peek() == "+":
            self.pos += 1
            f = sym_add(f, self.term())
        return f

    def term(self) -> SymFunc:
        f = self.factor()
        while self._peek() == "*":
            self.pos += 1
            f = sym_mul(f, self.factor())
        return f

    def factor(self) -> SymFunc:
        ch = self._peek()
        if ch == "(":
            self.pos += 1
            f = self.expr()
            if self._peek() != ")":
                raise SymFuncSyntaxError("expected ')'", self.pos)
            self.pos += 1
            return f
        if ch == "e":
            self.pos += 1
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            if self.pos == start:
                raise SymFuncSyntaxError("expected index after 'e'", self.pos)
            return sym_e(int(self.text[start:self.pos]))
        if ch == "-" or ch.isdigit():
            start = self.pos
            self.pos += 1
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            lit = self.text[start:self.pos]
            if lit == "-":
                raise SymFuncSyntaxError("expected digits after '-'", self.pos)
            return sym_const(int(lit))
        raise SymFuncSyntaxError("expected integer, 'e<k>' or '('", self.pos)


def parse_symfunc(text: str) -> SymFunc:
    return _Parser(text).parse()


def symfunc_to_string(f: SymFunc) -> str:
    if not f:
        return "0"
    parts = []
    for kappa in sorted(f, key=lambda k: (sum(k), k), reverse=True):
        c = f[kappa]
        body = "*".join(f"e{k}" for k in kappa)
        if body:
            parts.append(f"{c}*{body}" if c != 1 else body)
        else:
            parts.append(str(c))
    return " + ".join(parts)
