"""Sparse multivariate polynomials with exact integer coefficients.

Every generating function in the package is a :class:`MultiPoly`.  Variables
are the bivariate pair ``y``, ``t`` and the refined families ``y_i``, ``t_i``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import total_ordering
from typing import Iterable, Iterator, Mapping

# canonical order Y < T < Y1 < Y2 < ... < T1 < T2 < ...
_KIND_ORDER = {"y": 0, "t": 1, "yi": 2, "ti": 3}


@total_ordering
@dataclass(frozen=True)
class Variable:
    kind: str
    index: int = 0

    def __post_init__(self):
        if self.kind not in _KIND_ORDER:
            raise ValueError(f"unknown variable kind {self.kind!r}")
        if self.kind in ("yi", "ti") and self.index < 1:
            raise ValueError("refined variables are 1-based")
        if self.kind in ("y", "t") and self.index != 0:
            raise ValueError("y and t carry no index")

    def _key(self):
        return (_KIND_ORDER[self.kind], self.index)

    def __lt__(self, other):
        if not isinstance(other, Variable):
            return NotImplemented
        return self._key() < other._key()

    @property
    def name(self) -> str:
        if self.kind in ("y", "t"):
            return self.kind
        return f"{self.kind[0]}{self.index}"

    def __str__(self):
        return self.name

    @classmethod
    def parse(cls, name: str) -> "Variable":
        if name in ("y", "t"):
            return cls(name)
        if len(name) > 1 and name[0] in "yt":
            idx = name[1:].lstrip("_")
            if idx.isdigit():
                return cls(name[0] + "i", int(idx))
        raise ValueError(f"cannot parse variable {name!r}")


Y = Variable("y")
T = Variable("t")


def yvar(i: int) -> Variable:
    return Variable("yi", i)


def tvar(i: int) -> Variable:
    return Variable("ti", i)


Monomial = tuple  # tuple[tuple[Variable, int], ...], sorted by variable


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


def monomial(exponents: Mapping[Variable, int] | Iterable[tuple[Variable, int]]) -> Monomial:
    items = exponents.items() if isinstance(exponents, Mapping) else exponents
    d: dict[Variable, int] = {}
    for v, e in items:
        if e < 0:
            raise ValueError("negative exponent")
        if e:
            d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


class MultiPoly:
    """Immutable sparse polynomial ``{monomial: coefficient}``.

    Zero coefficients are never stored, so ``==`` is structural equality.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        clean = {}
        if terms:
            for m, c in terms.items():
                if c:
                    clean[m] = int(c)
        self._terms = clean
        self._hash = None

    # -- constructors ---------------------------------------------------
    @classmethod
    def _raw(cls, terms: dict) -> "MultiPoly":
        # caller guarantees no zero coefficients
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c: int) -> "MultiPoly":
        return cls({(): c})

    @classmethod
    def var(cls, v: Variable, exp: int = 1) -> "MultiPoly":
        return cls({monomial({v: exp}): 1})

    @classmethod
    def from_univariate(cls, coeffs: Iterable[int], v: Variable) -> "MultiPoly":
        """Build ``sum_k coeffs[k] * v**k``."""
        return cls({monomial({v: k}): c for k, c in enumerate(coeffs)})

    @classmethod
    def from_subsets(cls, counts: Mapping[tuple, int], family: str) -> "MultiPoly":
        """Sum of ``c * prod_{i in S} family_i`` over ``{S: c}``."""
        return cls({tuple((Variable(family, i), 1) for i in sorted(S)): c
                    for S, c in counts.items()})

    # -- views ----------------------------------------------------------
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Monomial, int]]:
        return iter(self._terms.items())

    def __iter__(self):
        return iter(self._terms.items())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def coefficient(self, mono: Mapping[Variable, int] | Monomial = ()) -> int:
        key = monomial(mono) if isinstance(mono, Mapping) else mono
        return self._terms.get(key, 0)

    def variables(self) -> set[Variable]:
        return {v for m in self._terms for v, _ in m}

    def degree(self, v: Variable | None = None) -> int:
        if not self._terms:
            return -1
        if v is None:
            return max(sum(e for _, e in m) for m in self._terms)
        return max(dict(m).get(v, 0) for m in self._terms)

    def univariate_coeffs(self, v: Variable) -> list[int]:
        """Coefficient list in ``v``; raises if other variables occur."""
        out = [0] * (self.degree(v) + 1 if self._terms else 0)
        for m, c in self._terms.items():
            if any(u != v for u, _ in m):
                raise ValueError(f"polynomial is not univariate in {v}")
            out[dict(m).get(v, 0)] += c
        return out

    def total_mass(self) -> int:
        return sum(self._terms.values())

    # -- arithmetic -----------------------------------------------------
    @staticmethod
    def _coerce(x) -> "MultiPoly":
        if isinstance(x, MultiPoly):
            return x
        if isinstance(x, int):
            return MultiPoly.const(x)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return MultiPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return MultiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = MultiPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = MultiPoly.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def substitute(self, bindings: Mapping[Variable, "MultiPoly | int"]) -> "MultiPoly":
        """Simultaneous substitution; unbound variables pass through."""
        binds = {v: self._coerce(p) for v, p in bindings.items()}
        out = MultiPoly()
        powcache: dict = {}
        for m, c in self._terms.items():
            rest = []
            term = MultiPoly.const(c)
            for v, e in m:
                if v in binds:
                    key = (v, e)
                    if key not in powcache:
                        powcache[key] = binds[v] ** e
                    term = term * powcache[key]
                else:
                    rest.append((v, e))
            if rest:
                term = term * MultiPoly({tuple(rest): 1})
            out = out + term
        return out

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    # -- ordering and output ------------------------------------------
    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        """Terms ordered by total degree, then lexicographic exponent vector."""
        allvars = sorted(self.variables())

        def key(item):
            m = dict(item[0])
            vec = tuple(m.get(v, 0) for v in allvars)
            return (sum(vec), tuple(-e for e in vec))

        return sorted(self._terms.items(), key=key)

    def __repr__(self):
        return f"MultiPoly({format_text(self)!r})"

    def __str__(self):
        return format_text(self)


def pow_binomial(t_power: int, one_minus_t_power: int, var: Variable = T) -> MultiPoly:
    """Expanded ``var**t_power * (1 - var)**one_minus_t_power``."""
    if t_power < 0 or one_minus_t_power < 0:
        raise ValueError("exponents must be nonnegative")
    m = one_minus_t_power
    coeffs = [0] * t_power
    c = 1
    for k in range(m + 1):
        coeffs.append(c if k % 2 == 0 else -c)
        c = c * (m - k) // (k + 1)
    return MultiPoly.from_univariate(coeffs, var)


def add(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    return a + b


def mul(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    return a * b


def substitute(p: MultiPoly, bindings) -> MultiPoly:
    return p.substitute(bindings)


def poly_sum(polys: Iterable[MultiPoly]) -> MultiPoly:
    acc: dict = {}
    for p in polys:
        for m, c in p.items():
            acc[m] = acc.get(m, 0) + c
    return MultiPoly(acc)


# ---------------------------------------------------------------------------
# serialization


def _mono_text(m: Monomial, mul_sign: str = "*") -> str:
    parts = []
    for v, e in m:
        parts.append(v.name if e == 1 else f"{v.name}^{e}")
    return mul_sign.join(parts)


def _flat_text(terms: list[tuple[Monomial, int]]) -> str:
    if not terms:
        return "0"
    out = []
    for i, (m, c) in enumerate(terms):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if not m:
            body = str(a)
        elif a == 1:
            body = _mono_text(m)
        else:
            body = f"{a}{_mono_text(m)}"
        if i == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(sign + body)
    return "".join(out)


def format_text(p: MultiPoly, group_by: Variable | None = T) -> str:
    """Canonical text.

    With ``group_by`` present in ``p`` the output groups coefficients of its
    powers, e.g. ``(1+3y+2y^2) + (2+3y+y^2)*t``.  Otherwise terms are listed
    flat, by total degree and then lexicographically.
    """
    if group_by is None or group_by not in p.variables():
        return _flat_text(p.sorted_terms())
    groups: dict[int, dict] = {}
    for m, c in p.items():
        d = dict(m)
        e = d.pop(group_by, 0)
        groups.setdefault(e, {})[tuple(sorted(d.items()))] = c
    chunks = []
    for e in sorted(groups):
        inner = MultiPoly(groups[e])
        body = _flat_text(inner.sorted_terms())
        if len(inner) > 1:
            body = f"({body})"
        if e == 0:
            chunks.append(body)
        else:
            tv = group_by.name if e == 1 else f"{group_by.name}^{e}"
            chunks.append(tv if body == "1" else f"{body}*{tv}")
    return " + ".join(chunks)


def to_latex(p: MultiPoly) -> str:
    terms = p.sorted_terms()
    if not terms:
        return "0"
    out = []
    for i, (m, c) in enumerate(terms):
        factors = []
        for v, e in m:
            base = v.name if v.kind in ("y", "t") else f"{v.kind[0]}_{{{v.index}}}"
            factors.append(base if e == 1 else f"{base}^{{{e}}}")
        mono = " ".join(factors)
        a = abs(c)
        body = str(a) if not mono else (mono if a == 1 else f"{a}{mono}")
        if i == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


def to_records(p: MultiPoly) -> list[dict]:
    return [{"coeff": c, "exponents": {v.name: e for v, e in m}}
            for m, c in p.sorted_terms()]


def from_records(records: Iterable[Mapping]) -> MultiPoly:
    terms: dict = {}
    for r in records:
        m = monomial({Variable.parse(k): int(e) for k, e in r["exponents"].items()})
        terms[m] = terms.get(m, 0) + int(r["coeff"])
    return MultiPoly(terms)


def to_json(p: MultiPoly) -> str:
    return json.dumps(to_records(p))


def from_json(text: str) -> MultiPoly:
    return from_records(json.loads(text))
