"""Independent symbolic verification of the recursion error terms.

Each error term is the degree of an explicit class on the exceptional
divisor of a blow-up, a projective bundle over a product stratum

    X = (genus-one factor of dimension m+1) x prod_j (genus-zero factor
        on |S_j|+1 points),

whose rational Chow ring is the quotient

    A*(X)[eta] / (eta^k + s_1 eta^{k-1} + ... + s_k),

where s_i is the i-th elementary symmetric polynomial in the shifted
variables x_0+x_1, ..., x_0+x_k.  This module implements that quotient
ring directly (sparse polynomials, exact rational coefficients, a single
eta-relation) together with the degree functional on X, so the recursion
error terms can be recomputed without touching the recursion engine.

Variable convention for :class:`SymPoly` values used here: index 0 is
eta, index 1 is x_0, index 1+i is x_i.  Monomial order for printing is
graded lex with eta > x_0 > x_1 > ... so output is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Mapping, Sequence

from .combinatorics import multinomial
from .genus_zero import genus_zero_number

__all__ = [
    "SymPoly",
    "BlockShape",
    "elementary_symmetric",
    "complete_homogeneous",
    "eta_reduce",
    "stratum_degree",
    "error_term_symbolic",
    "error_term_closed",
    "check_eta_power_expansion",
    "check_shifted_coefficient_identity",
    "check_alternating_binomial_sum",
]

Monomial = tuple[int, ...]


class SymPoly:
    """Sparse multivariate polynomial with exact rational coefficients.

    Monomials are exponent tuples of fixed length ``nvars``; coefficients
    are ``Fraction`` and zero coefficients are never stored.  All
    operations return new objects; instances are treated as immutable.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Monomial, Fraction | int] | None = None):
        if nvars < 1:
            raise ValueError("invalid argument: need at least one variable")
        self.nvars = nvars
        clean: dict[Monomial, Fraction] = {}
        if terms:
            for mono, coeff in terms.items():
                if len(mono) != nvars or any(e < 0 for e in mono):
                    raise ValueError("invalid monomial: bad exponent tuple")
                if not isinstance(coeff, (int, Fraction)):
                    raise ValueError("invalid argument: coefficients must be exact")
                if coeff:
                    clean[tuple(mono)] = coeff
        self.terms = clean

    @classmethod
    def _raw(cls, nvars: int, terms: dict[Monomial, Fraction]) -> "SymPoly":
        # internal: terms already clean (right arity, no zeros, exact coeffs)
        out = object.__new__(cls)
        out.nvars = nvars
        out.terms = terms
        return out

    @classmethod
    def zero(cls, nvars: int) -> "SymPoly":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, value: Fraction | int) -> "SymPoly":
        return cls(nvars, {(0,) * nvars: Fraction(value)})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "SymPoly":
        mono = [0] * nvars
        mono[index] = 1
        return cls(nvars, {tuple(mono): Fraction(1)})

    @classmethod
    def monomial(cls, nvars: int, mono: Monomial, coeff: Fraction | int = 1) -> "SymPoly":
        return cls(nvars, {tuple(mono): Fraction(coeff)})

    def _check(self, other: "SymPoly") -> None:
        if self.nvars != other.nvars:
            raise ValueError("invalid argument: mixed variable counts")

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __add__(self, other: "SymPoly") -> "SymPoly":
        self._check(other)
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            acc = out.get(mono, 0) + coeff
            if acc:
                out[mono] = acc
            else:
                out.pop(mono, None)
        return SymPoly._raw(self.nvars, out)

    def __neg__(self) -> "SymPoly":
        return SymPoly._raw(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "SymPoly") -> "SymPoly":
        return self + (-other)

    def __mul__(self, other: "SymPoly | Fraction | int") -> "SymPoly":
        if isinstance(other, (int, Fraction)):
            if not other:
                return SymPoly.zero(self.nvars)
            return SymPoly._raw(
                self.nvars, {m: c * other for m, c in self.terms.items()}
            )
        self._check(other)
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = tuple(a + b for a, b in zip(m1, m2))
                acc = out.get(mono, 0) + c1 * c2
                if acc:
                    out[mono] = acc
                else:
                    out.pop(mono, None)
        return SymPoly._raw(self.nvars, out)

    __rmul__ = __mul__

    def coefficient(self, mono: Monomial) -> Fraction | int:
        return self.terms.get(tuple(mono), 0)

    def eta_degree(self) -> int:
        """Highest exponent of variable 0, or -1 for the zero polynomial."""
        return max((m[0] for m in self.terms), default=-1)

    def eta_coefficient(self, power: int) -> "SymPoly":
        """Coefficient of eta**power, returned with the eta slot zeroed."""
        out = {
            (0,) + m[1:]: c for m, c in self.terms.items() if m[0] == power
        }
        return SymPoly(self.nvars, out)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        names = ["eta"] + [f"x{i}" for i in range(self.nvars - 1)]
        pieces = []
        for mono in sorted(
            self.terms, key=lambda m: (sum(m), m), reverse=True
        ):
            coeff = self.terms[mono]
            factors = [
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(names, mono)
                if e
            ]
            body = "*".join(factors) if factors else "1"
            if coeff == 1 and factors:
                pieces.append(body)
            elif coeff == -1 and factors:
                pieces.append(f"-{body}")
            elif factors:
                pieces.append(f"{coeff}*{body}")
            else:
                pieces.append(str(coeff))
        out = " + ".join(pieces)
        return out.replace("+ -", "- ")


@dataclass(frozen=True, slots=True)
class BlockShape:
    """The stratum data an error term lives on.

    ``block_sizes`` are the sizes |S_1|..|S_k| of the big blocks (each at
    least 2); ``block_exponents[j]`` lists the exponents carried by the
    points of S_j.  ``c0`` is the top self-intersection on the genus-one
    factor, supplied externally so this oracle never assumes the m!/24
    initial condition it is used to validate.
    """

    m: int
    block_sizes: tuple[int, ...]
    block_exponents: tuple[tuple[int, ...], ...]
    c0: Fraction

    def __post_init__(self) -> None:
        if self.m < 0:
            raise ValueError("invalid argument: m must be >= 0")
        if not self.block_sizes:
            raise ValueError("invalid argument: need at least one block")
        if any(size < 2 for size in self.block_sizes):
            raise ValueError("invalid argument: big blocks have size >= 2")
        if len(self.block_exponents) != len(self.block_sizes):
            raise ValueError("invalid argument: one exponent list per block")
        for size, exps in zip(self.block_sizes, self.block_exponents):
            if len(exps) != size:
                raise ValueError("invalid argument: exponent list length != block size")
            if any(d < 0 for d in exps):
                raise ValueError("invalid argument: negative exponent")

    @property
    def k(self) -> int:
        return len(self.block_sizes)


@lru_cache(maxsize=None)
def _elementary_all(k: int) -> tuple[SymPoly, ...]:
    nvars = k + 2
    x0 = SymPoly.variable(nvars, 1)
    table = [SymPoly.constant(nvars, 1)]
    for j in range(1, k + 1):
        shifted = x0 + SymPoly.variable(nvars, 1 + j)
        new = [table[0]]
        for i in range(1, j + 1):
            term = table[i] if i < len(table) else SymPoly.zero(nvars)
            new.append(term + table[i - 1] * shifted)
        table = new
    return tuple(table)


def elementary_symmetric(i: int, k: int) -> SymPoly:
    """s_i evaluated at the k shifted variables x_0+x_1, ..., x_0+x_k."""
    if k < 1:
        raise ValueError("invalid argument: k must be >= 1")
    if not 0 <= i <= k:
        raise ValueError("invalid argument: need 0 <= i <= k")
    return _elementary_all(k)[i]


@lru_cache(maxsize=None)
def complete_homogeneous(d: int, k: int) -> SymPoly:
    """Sum of all degree-d monomials in the k shifted variables.

    Computed variable by variable from the defining multiset sum (raw
    integer dictionaries, for speed), so it is independent of the
    elementary-symmetric identities it is tested against.
    """
    if d < 0:
        raise ValueError("invalid argument: degree must be >= 0")
    if k < 1:
        raise ValueError("invalid argument: k must be >= 1")
    nvars = k + 2
    table: list[dict[Monomial, int]] = [{(0,) * nvars: 1}]
    table.extend({} for _ in range(d))
    for j in range(1, k + 1):
        new: list[dict[Monomial, int]] = [{} for _ in range(d + 1)]
        for t in range(d + 1):
            bucket = new[t]
            for s in range(t + 1):
                prev = table[t - s]
                if not prev:
                    continue
                for i in range(s + 1):
                    binom = comb(s, i)
                    for mono, coeff in prev.items():
                        grown = list(mono)
                        grown[1] += s - i
                        grown[1 + j] += i
                        key = tuple(grown)
                        bucket[key] = bucket.get(key, 0) + binom * coeff
        table = new
    return SymPoly._raw(nvars, table[d])


def eta_reduce(poly: SymPoly, k: int) -> SymPoly:
    """Unique representative of ``poly`` with eta-degree at most k-1.

    Substitutes eta^k -> -(s_1 eta^{k-1} + ... + s_k) from the top degree
    down; the result is the expansion in the quotient basis 1, eta, ...,
    eta^{k-1} and the operation is idempotent and multiplicative on
    representatives.
    """
    if k < 1:
        raise ValueError("invalid argument: k must be >= 1")
    if poly.nvars != k + 2:
        raise ValueError("invalid argument: polynomial has wrong variable count")
    top = poly.eta_degree()
    if top < k:
        return poly
    relations = [elementary_symmetric(i, k) for i in range(1, k + 1)]
    buckets: dict[int, SymPoly] = {}
    for mono, coeff in poly.terms.items():
        e = mono[0]
        stripped = SymPoly.monomial(poly.nvars, (0,) + mono[1:], coeff)
        buckets[e] = buckets.get(e, SymPoly.zero(poly.nvars)) + stripped
    for e in range(top, k - 1, -1):
        q = buckets.pop(e, None)
        if q is None or not q:
            continue
        for i, rel in enumerate(relations, start=1):
            drop = q * rel
            buckets[e - i] = buckets.get(e - i, SymPoly.zero(poly.nvars)) - drop
    out = SymPoly.zero(poly.nvars)
    eta = SymPoly.variable(poly.nvars, 0)
    for e, part in buckets.items():
        power = SymPoly.constant(poly.nvars, 1)
        for _ in range(e):
            power = power * eta
        out = out + part * power
    return out


def stratum_degree(monomial: Monomial, shape: BlockShape) -> Fraction:
    """Degree of an x-monomial (times the shape's psi-classes) on X.

    The genus-one factor contributes ``c0`` exactly when the x_0 exponent
    is m+1 (its dimension); each genus-zero factor contributes the number
    with the block's exponents augmented by the matching x_j power.  Any
    dimension mismatch returns 0 through the genus-zero vanishing.
    """
    if len(monomial) != shape.k + 2:
        raise ValueError("invalid monomial: wrong variable count")
    if monomial[0] != 0:
        raise ValueError("invalid monomial: stray eta factor")
    if monomial[1] != shape.m + 1:
        return Fraction(0)
    value = shape.c0
    for j, block_d in enumerate(shape.block_exponents):
        factor = genus_zero_number((monomial[2 + j],) + tuple(block_d))
        if not factor:
            return Fraction(0)
        value *= factor
    return value


def _context(variant: str, shape: BlockShape, d: int) -> None:
    """Check the dimension bookkeeping of the chosen variant."""
    if variant not in ("a", "b", "c"):
        raise ValueError("invalid argument: variant must be 'a', 'b' or 'c'")
    if d < 0:
        raise ValueError("dimension mismatch: off-block mass must be >= 0")
    mass = d + sum(sum(exps) for exps in shape.block_exponents)
    n = mass if variant in ("a", "c") else mass - 1
    k = shape.k
    expected = n - shape.m + k - 1 if variant == "a" else n - shape.m + k
    if sum(shape.block_sizes) != expected:
        raise ValueError(
            f"dimension mismatch: block sizes sum to {sum(shape.block_sizes)}, "
            f"variant {variant} requires {expected}"
        )
    singletons = shape.m + 1 - k if variant == "a" else shape.m - k
    if singletons < 0:
        raise ValueError("dimension mismatch: more big blocks than blocks")


@lru_cache(maxsize=None)
def _reduced_kernel(d: int, k: int) -> SymPoly:
    # ((x0 + eta)^d - x0^d) / eta, expanded exactly and eta-reduced.
    nvars = k + 2
    terms = {}
    for i in range(1, d + 1):
        mono = [0] * nvars
        mono[0] = i - 1
        mono[1] = d - i
        terms[tuple(mono)] = Fraction(comb(d, i))
    return eta_reduce(SymPoly(nvars, terms), k)


def error_term_symbolic(variant: str, shape: BlockShape, d: int) -> Fraction:
    """Error term of one partition, by direct quotient-ring computation.

    Variant "a" is the reduction correction, "b" the string one (total
    exponent mass n+1), "c" the dilaton one (extra x_0 factor).  The class
    ((x_0+eta)^d - x_0^d)/eta is reduced to eta-degree < k; only the
    eta^{k-1} coefficient survives the fiber integral, with orientation
    (-1)**(k-1) because eta is dual to the negative tautological
    generator.  Variants "b" and "c" enter their recursion on the opposite
    side of the comparison, so their contribution is the negated degree.
    """
    _context(variant, shape, d)
    k = shape.k
    reduced = _reduced_kernel(d, k)
    q0 = reduced.eta_coefficient(k - 1)
    if variant == "c":
        q0 = q0 * SymPoly.variable(k + 2, 1)
    total = Fraction(0)
    for mono, coeff in q0.terms.items():
        total += coeff * stratum_degree(mono, shape)
    if (k - 1) % 2:
        total = -total
    if variant in ("b", "c"):
        total = -total
    return total


def error_term_closed(variant: str, shape: BlockShape, d: int) -> Fraction:
    """Same error term in closed form: sign times c0 times multinomials.

    The sign is (-1)**(sum of deficiencies + k - 1) for variant "a" and
    picks up one more factor of -1 for "b" and "c"; a negative deficiency
    kills the term through its multinomial.
    """
    _context(variant, shape, d)
    product = 1
    deficiency_sum = 0
    for size, block_d in zip(shape.block_sizes, shape.block_exponents):
        coeff = multinomial(size - 2, block_d)
        if coeff == 0:
            return Fraction(0)
        product *= coeff
        deficiency_sum += size - 2 - sum(block_d)
    offset = 0 if variant == "a" else 1
    parity = (deficiency_sum + shape.k - 1 + offset) % 2
    signed = product if parity == 0 else -product
    return shape.c0 * signed


def _comb0(n: int, r: int) -> int:
    if r < 0 or n < 0 or r > n:
        return 0
    return comb(n, r)


def check_eta_power_expansion(d: int, k: int) -> bool:
    """Expanding eta^{d+k-1} in the quotient basis, the eta^{k-1}
    coefficient must be (-1)^d times the complete homogeneous polynomial
    of degree d in the shifted variables; also checks the alternating
    identity p_d - s_1 p_{d-1} + s_2 p_{d-2} - ... = 0.
    """
    if d < 1 or k < 1:
        raise ValueError("invalid argument: need d >= 1 and k >= 1")
    nvars = k + 2
    mono = [0] * nvars
    mono[0] = d + k - 1
    reduced = eta_reduce(SymPoly.monomial(nvars, tuple(mono)), k)
    lead = reduced.eta_coefficient(k - 1)
    expected = complete_homogeneous(d, k) * ((-1) ** d)
    if lead != expected:
        return False
    acc = SymPoly.zero(nvars)
    for i in range(d + 1):
        if i > k:
            break
        s_i = elementary_symmetric(i, k)
        term = s_i * complete_homogeneous(d - i, k)
        acc = acc + (term if i % 2 == 0 else -term)
    return not acc


def check_shifted_coefficient_identity(e: Sequence[int], m: int) -> bool:
    """The coefficient of x_0^m x_1^{e_1} ... x_k^{e_k} in the complete
    homogeneous polynomial of degree m + sum(e): computed three ways
    (composition sum, closed binomial, literal extraction), all equal.
    """
    k = len(e)
    if k < 1 or m < 0 or any(v < 0 for v in e):
        raise ValueError("invalid argument: need k >= 1, m >= 0, e >= 0")
    total_e = sum(e)

    def compositions(total: int, parts: int):
        if parts == 1:
            yield (total,)
            return
        for first in range(total + 1):
            for rest in compositions(total - first, parts - 1):
                yield (first,) + rest

    lhs = sum(
        _prod(comb(ei + fi, ei) for ei, fi in zip(e, f))
        for f in compositions(m, k)
    )
    rhs = comb(m + total_e + k - 1, total_e + k - 1)
    poly = complete_homogeneous(m + total_e, k)
    mono = (0, m) + tuple(e)
    extracted = poly.coefficient(mono)
    return lhs == rhs == extracted


def _prod(values) -> int:
    out = 1
    for v in values:
        out *= v
    return out


def _alternating_q(a: int, b: int, m: int) -> int:
    return sum(
        (-1) ** i * _comb0(a, i) * _comb0(b - i, m - i) for i in range(m + 1)
    )


def check_alternating_binomial_sum(d: int, m: int) -> bool:
    """q(d, d-1, m) = (-1)^m for 1 <= m < d, where q(a, b, m) is the
    alternating sum of C(a,i) C(b-i, m-i); also checks the two identities
    q(a,a,m) = 0 and q(a,a-1,m) = q(a-1,a-1,m) - q(a-1,a-2,m-1) used to
    prove it.
    """
    if not 1 <= m < d:
        raise ValueError("invalid argument: need 1 <= m < d")
    if _alternating_q(d, d - 1, m) != (-1) ** m:
        return False
    if _alternating_q(d, d, m) != 0:
        return False
    expected = _alternating_q(d - 1, d - 1, m) - _alternating_q(d - 1, d - 2, m - 1)
    return _alternating_q(d, d - 1, m) == expected
