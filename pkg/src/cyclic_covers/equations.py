"""Defining equations, coordinate changes and the two-point transform.

Everything here is exact over Q. Radicals and roots of unity never get
evaluated: identities that involve a d-th root are checked after raising
both sides to the d-th power.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .covers import CoverSpec, cover_genus, isomorphic_as_covers
from .curves import CyclicCurve, genus_from_profile, ramification_profile
from .errors import (
    ConstantFactor,
    DegreeNotDivisible,
    EquationFormatError,
    InvalidPair,
    NotIsomorphic,
    NotSquarefree,
    OrientationMismatch,
)
from .ff_linear import ExponentVector, check_prime, linear_combine, span_membership
from .polynomial import Polynomial, RationalFunction, is_squarefree
from .rationals import format_rational, parse_rational

# -- equation data ----------------------------------------------------------


@dataclass(frozen=True)
class FactoredForm:
    """scalar * prod (x - root)^exp over distinct rational roots."""

    factors: tuple[tuple[Fraction, int], ...]
    scalar: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "scalar", Fraction(self.scalar))
        object.__setattr__(
            self, "factors", tuple((Fraction(a), int(e)) for a, e in self.factors)
        )
        roots = [a for a, _ in self.factors]
        if len(set(roots)) != len(roots):
            raise EquationFormatError("factored form has repeated roots")
        if any(e < 1 for _, e in self.factors):
            raise EquationFormatError("factor exponents must be >= 1")
        if self.scalar == 0:
            raise EquationFormatError("scalar must be nonzero")

    def total_degree(self) -> int:
        return sum(e for _, e in self.factors)

    def expand(self) -> Polynomial:
        out = Polynomial.constant(self.scalar)
        for a, e in self.factors:
            out = out * Polynomial.linear_factor(a) ** e
        return out


@dataclass(frozen=True)
class PolyForm:
    """scalar * prod f^exp with each f kept in coefficient form."""

    factors: tuple[tuple[Polynomial, int], ...]
    scalar: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "scalar", Fraction(self.scalar))
        object.__setattr__(self, "factors", tuple((f, int(e)) for f, e in self.factors))
        if any(e < 1 for _, e in self.factors):
            raise EquationFormatError("factor exponents must be >= 1")
        if any(f.degree < 1 for f, _ in self.factors):
            raise EquationFormatError("polynomial factors must be nonconstant")
        if self.scalar == 0:
            raise EquationFormatError("scalar must be nonzero")

    def total_degree(self) -> int:
        return sum(f.degree * e for f, e in self.factors)

    def expand(self) -> Polynomial:
        out = Polynomial.constant(self.scalar)
        for f, e in self.factors:
            out = out * f**e
        return out


Form = Union[FactoredForm, PolyForm]


@dataclass(frozen=True)
class Relation:
    var: str
    form: Form


@dataclass(frozen=True)
class EquationSystem:
    """Relations ``var^d = form`` in one affine variable (default ``x``)."""

    d: int
    relations: tuple[Relation, ...]
    variable: str = "x"

    def __post_init__(self):
        check_prime(self.d)
        object.__setattr__(self, "relations", tuple(self.relations))
        names = [rel.var for rel in self.relations]
        if len(set(names)) != len(names) or self.variable in names:
            raise EquationFormatError(f"variable names must be distinct: {names}")
        for rel in self.relations:
            if rel.form.total_degree() % self.d:
                raise EquationFormatError(
                    f"{rel.var}^{self.d} relation has degree {rel.form.total_degree()}, "
                    f"ramified over infinity"
                )

    def __getitem__(self, var):
        for rel in self.relations:
            if rel.var == var:
                return rel.form
        raise KeyError(var)


def base_equation(curve: CyclicCurve) -> EquationSystem:
    form = FactoredForm(tuple(zip(curve.branch_points, curve.alpha.entries)))
    return EquationSystem(curve.d, (Relation("y", form),))


def _vector_form(curve: CyclicCurve, v: ExponentVector) -> FactoredForm:
    return FactoredForm(tuple((b, e) for b, e in zip(curve.branch_points, v) if e))


def cover_equations(cover: CoverSpec) -> EquationSystem:
    """The fibre-product model: y^d for the base curve, z^d for beta."""
    curve = cover.base
    return EquationSystem(
        curve.d,
        (Relation("y", _vector_form(curve, curve.alpha)), Relation("z", _vector_form(curve, cover.beta))),
    )


# -- text grammar ----------------------------------------------------------
#
#   y^3 = (x - 0)^1 * (x - 1)^1 * (x - -1)^2 * (x - 5/2)^2
#   y^3 = (-1 + 0*x + 0*x^2 + 1*x^3)^1 * (-2 + 0*x + 0*x^2 + 1*x^3)^1
#
# A scalar other than 1 is printed as a leading "c * " term. One relation per
# line.


def _poly_text(f: Polynomial, var: str) -> str:
    terms = []
    for n, c in enumerate(f.coeffs):
        c = format_rational(c)
        terms.append(c if n == 0 else f"{c}*{var}" if n == 1 else f"{c}*{var}^{n}")
    return " + ".join(terms)


def _form_text(form: Form, var: str) -> str:
    if isinstance(form, FactoredForm):
        parts = [f"({var} - {format_rational(a)})^{e}" for a, e in form.factors]
    else:
        parts = [f"({_poly_text(f, var)})^{e}" for f, e in form.factors]
    if form.scalar != 1 or not parts:
        parts.insert(0, format_rational(form.scalar))
    return " * ".join(parts)


def render_text(system: EquationSystem) -> str:
    return "\n".join(
        f"{rel.var}^{system.d} = {_form_text(rel.form, system.variable)}" for rel in system.relations
    )


_LHS_RE = re.compile(r"^([A-Za-z]\w*)\^(\d+) = (.+)$")
_LINEAR_RE = re.compile(r"^\(([A-Za-z]) - (-?\d+(?:/\d+)?)\)\^(\d+)$")
_POLY_RE = re.compile(r"^\((.+)\)\^(\d+)$")
_TERM_RE = re.compile(r"^(-?\d+(?:/\d+)?)(?:\*([A-Za-z])(?:\^(\d+))?)?$")


def _parse_poly(body: str, var_seen: list) -> Polynomial:
    coeffs = []
    for n, term in enumerate(body.split(" + ")):
        m = _TERM_RE.match(term)
        if m is None:
            raise EquationFormatError(f"bad polynomial term {term!r}")
        power = 0 if m.group(2) is None else int(m.group(3) or 1)
        if power != n:
            raise EquationFormatError(f"term {term!r} out of order (expected degree {n})")
        if m.group(2):
            var_seen.append(m.group(2))
        coeffs.append(parse_rational(m.group(1)))
    poly = Polynomial(coeffs)
    if len(poly.coeffs) != len(coeffs):
        raise EquationFormatError(f"polynomial {body!r} has a zero leading coefficient")
    return poly


def _parse_rhs(rhs: str, var_seen: list) -> Form:
    parts = rhs.split(" * ")
    scalar = Fraction(1)
    if not parts[0].startswith("("):
        scalar = parse_rational(parts.pop(0))
        if scalar == 1:
            raise EquationFormatError("a unit scalar is never printed")
    if not parts:
        raise EquationFormatError("relation without factors")
    linear, poly = [], []
    for part in parts:
        m = _LINEAR_RE.match(part)
        if m is not None:
            var_seen.append(m.group(1))
            linear.append((parse_rational(m.group(2)), int(m.group(3))))
            continue
        m = _POLY_RE.match(part)
        if m is None:
            raise EquationFormatError(f"bad factor {part!r}")
        poly.append((_parse_poly(m.group(1), var_seen), int(m.group(2))))
    if linear and poly:
        raise EquationFormatError("cannot mix linear and coefficient-form factors")
    if linear:
        return FactoredForm(tuple(linear), scalar)
    return PolyForm(tuple(poly), scalar)


def parse_text(text: str) -> EquationSystem:
    relations = []
    degrees = set()
    var_seen: list = []
    for line in text.strip("\n").split("\n"):
        m = _LHS_RE.match(line)
        if m is None:
            raise EquationFormatError(f"bad relation line {line!r}")
        degrees.add(int(m.group(2)))
        relations.append(Relation(m.group(1), _parse_rhs(m.group(3), var_seen)))
    if len(degrees) != 1:
        raise EquationFormatError(f"relations disagree on d: {sorted(degrees)}")
    variables = set(var_seen) or {"x"}
    if len(variables) != 1:
        raise EquationFormatError(f"mixed affine variables {sorted(variables)}")
    return EquationSystem(degrees.pop(), tuple(relations), variables.pop())


# -- JSON grammar ----------------------------------------------------------


def relation_to_dict(rel: Relation, d: int) -> dict:
    form = rel.form
    if isinstance(form, FactoredForm):
        factors = [{"root": format_rational(a), "exp": e} for a, e in form.factors]
    else:
        factors = [{"coeffs": [format_rational(c) for c in f.coeffs], "exp": e} for f, e in form.factors]
    return {"var": rel.var, "d": d, "scalar": format_rational(form.scalar), "factors": factors}


def system_to_dict(system: EquationSystem) -> dict:
    return {
        "d": system.d,
        "variable": system.variable,
        "relations": [relation_to_dict(rel, system.d) for rel in system.relations],
    }


def _exp(value):
    if isinstance(value, bool) or not isinstance(value, int):
        raise EquationFormatError(f"exponent {value!r} is not an integer")
    return value


def relation_from_dict(data: dict) -> tuple[Relation, int]:
    if set(data) != {"var", "d", "scalar", "factors"}:
        raise EquationFormatError(f"relation keys {sorted(data)}")
    linear, poly = [], []
    for fac in data["factors"]:
        if set(fac) == {"root", "exp"}:
            linear.append((parse_rational(fac["root"]), _exp(fac["exp"])))
        elif set(fac) == {"coeffs", "exp"}:
            coeffs = [parse_rational(c) for c in fac["coeffs"]]
            f = Polynomial(coeffs)
            if len(f.coeffs) != len(coeffs):
                raise EquationFormatError("zero leading coefficient")
            poly.append((f, _exp(fac["exp"])))
        else:
            raise EquationFormatError(f"factor keys {sorted(fac)}")
    if linear and poly:
        raise EquationFormatError("cannot mix linear and coefficient-form factors")
    scalar = parse_rational(data["scalar"])
    form = PolyForm(tuple(poly), scalar) if poly else FactoredForm(tuple(linear), scalar)
    return Relation(data["var"], form), data["d"]


def system_from_dict(data: dict) -> EquationSystem:
    if set(data) != {"d", "variable", "relations"}:
        raise EquationFormatError(f"system keys {sorted(data)}")
    relations = []
    for rd in data["relations"]:
        rel, d = relation_from_dict(rd)
        if d != data["d"]:
            raise EquationFormatError(f"relation {rel.var} has d={d}, system d={data['d']}")
        relations.append(rel)
    return EquationSystem(data["d"], tuple(relations), data["variable"])


def dumps(obj) -> str:
    """Canonical compact JSON used for every machine-readable output."""
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)


def system_to_json(system: EquationSystem) -> str:
    return dumps(system_to_dict(system))


def system_from_json(text: str) -> EquationSystem:
    return system_from_dict(json.loads(text))


# -- display rendering (documentation only, not parsed) ---------------------

_SUPERSCRIPT = str.maketrans("0123456789-", "⁰¹²³⁴⁵⁶⁷⁸⁹⁻")


def _sup(n: int) -> str:
    return "" if n == 1 else str(n).translate(_SUPERSCRIPT)


def _display_poly(f: Polynomial, var: str) -> str:
    terms = []
    for n in range(f.degree, -1, -1):
        c = f.coeffs[n]
        if c == 0:
            continue
        mag = format_rational(abs(c))
        body = mag if n == 0 else (("" if abs(c) == 1 else mag) + var + _sup(n))
        sign = "−" if c < 0 else "+"
        terms.append((sign, body))
    first_sign, first = terms[0]
    out = ("−" if first_sign == "−" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def render_display(system: EquationSystem) -> str:
    var = system.variable
    lines = []
    for rel in system.relations:
        form = rel.form
        parts = []
        if isinstance(form, FactoredForm):
            for a, e in form.factors:
                if a == 0:
                    parts.append(var + _sup(e))
                else:
                    sign = "−" if a > 0 else "+"
                    parts.append(f"({var} {sign} {format_rational(abs(a))})" + _sup(e))
        else:
            parts = [f"({_display_poly(f, var)})" + _sup(e) for f, e in form.factors]
        lead = "" if form.scalar == 1 else format_rational(form.scalar) + "·"
        lines.append(f"{rel.var}{_sup(system.d)} = {lead}{''.join(parts)}")
    return "\n".join(lines)


# -- coordinate changes between isomorphic covers --------------------------


@dataclass(frozen=True)
class CoordinateChange:
    """z' = zeta_d * y^j / z * prod (x - b_k)^(-e_k) with e = extraction_exponents.

    The root of unity is left symbolic: ``root_of_unity_order`` is d.
    """

    j: int
    extraction_exponents: tuple[int, ...]
    root_of_unity_order: int
    alpha: ExponentVector
    beta1: ExponentVector
    beta2: ExponentVector

    def __post_init__(self):
        d = self.root_of_unity_order
        lhs = [d * e + b2 for e, b2 in zip(self.extraction_exponents, self.beta2)]
        rhs = [self.j * a - b1 for a, b1 in zip(self.alpha, self.beta1)]
        if lhs != rhs:
            raise NotIsomorphic(f"d*e + beta2 = {lhs} but j*alpha - beta1 = {rhs}")

    def formula(self, curve: CyclicCurve) -> str:
        parts = [f"zeta_{self.root_of_unity_order}", f"y^{self.j}", "z^-1"]
        for b, e in zip(curve.branch_points, self.extraction_exponents):
            if e:
                parts.append(f"(x - {format_rational(b)})^{-e}")
        return "z' = " + " * ".join(parts)

    def to_dict(self, curve: CyclicCurve) -> dict:
        return {
            "j": self.j,
            "extraction_exponents": list(self.extraction_exponents),
            "root_of_unity_order": self.root_of_unity_order,
            "formula": self.formula(curve),
        }


def coordinate_change(
    alpha: ExponentVector, beta1: ExponentVector, beta2: ExponentVector
) -> CoordinateChange:
    if not isomorphic_as_covers(beta1, beta2, alpha):
        raise NotIsomorphic(f"{beta1} and {beta2} define non-isomorphic covers")
    j = span_membership(linear_combine(1, beta2, 1, beta1), alpha)
    if j is None:
        raise OrientationMismatch(
            f"{beta2} = {beta1} + m*alpha only; no y^j/z coordinate change exists"
        )
    d = alpha.d
    extraction = []
    for a, b1, b2 in zip(alpha, beta1, beta2):
        q, rem = divmod(j * a - b1 - b2, d)
        assert rem == 0
        extraction.append(q)
    return CoordinateChange(j, tuple(extraction), d, alpha, beta1, beta2)


def _monomial_function(points, exponents) -> RationalFunction:
    out = RationalFunction(1)
    for b, e in zip(points, exponents):
        out = out * RationalFunction(Polynomial.linear_factor(b)) ** e
    return out


def certify_coordinate_change(curve: CyclicCurve, change: CoordinateChange) -> bool:
    """Check (y^j / z)^d == f^d * prod (x - b)^beta2 as rational functions of x."""
    pts = curve.branch_points
    y_d = _monomial_function(pts, change.alpha)
    z_d = _monomial_function(pts, change.beta1)
    lhs = y_d**change.j / z_d
    f = _monomial_function(pts, change.extraction_exponents)
    rhs = f**change.root_of_unity_order * _monomial_function(pts, change.beta2)
    return lhs == rhs


# -- the two-point transform -----------------------------------------------


@dataclass(frozen=True)
class TwoPointTransform:
    """Substitution z = t (x - a_j) for the cover z^d = (x - a_i)(x - a_j)^(d-1).

    With T = t^d, x = (a_i - a_j T) / (1 - T) and the base curve becomes
    w^d = prod_{k != i,j} (T - c_k)^(alpha_k), c_k = (a_k - a_i)/(a_k - a_j).
    """

    d: int
    i: int
    j: int
    alpha_i: int
    alpha_j: int
    c_values: tuple[tuple[int, Fraction], ...]
    new_exponents: tuple[int, ...]
    exponent_sum: int
    scale_data: tuple[Fraction, tuple[tuple[Fraction, int], ...]]

    def __post_init__(self):
        cs = [c for _, c in self.c_values]
        if len(set(cs)) != len(cs) or 0 in cs:
            raise InvalidPair(f"c-values must be distinct and nonzero: {cs}")

    def x_of_t(self, a_i, a_j) -> RationalFunction:
        T = Polynomial.monomial(self.d)
        return RationalFunction(a_i - a_j * T, 1 - T)

    def transformed_polynomial(self) -> Polynomial:
        T = Polynomial.monomial(self.d)
        out = Polynomial.constant(1)
        for (_, c), e in zip(self.c_values, self.new_exponents):
            out = out * (T - c) ** e
        return out

    def transformed_system(self) -> EquationSystem:
        T = Polynomial.monomial(self.d)
        form = PolyForm(tuple(((T - c), e) for (_, c), e in zip(self.c_values, self.new_exponents)))
        return EquationSystem(self.d, (Relation("w", form),), variable="t")

    def exponent_datum(self) -> ExponentVector:
        """Exponents of w^d = ... read as a cyclic cover of the t-line.

        Each factor (t^d - c_k) splits into d distinct linear factors over
        the algebraic closure, all carrying exponent alpha_k.
        """
        return ExponentVector(tuple(e for e in self.new_exponents for _ in range(self.d)), self.d)

    def to_dict(self) -> dict:
        diff, rest = self.scale_data
        return {
            "d": self.d,
            "i": self.i,
            "j": self.j,
            "alpha_i": self.alpha_i,
            "alpha_j": self.alpha_j,
            "c_values": [{"k": k, "c": format_rational(c)} for k, c in self.c_values],
            "new_exponents": list(self.new_exponents),
            "exponent_sum": self.exponent_sum,
            "scale_data": {
                "a_i_minus_a_j": format_rational(diff),
                "factors": [{"value": format_rational(v), "exp": e} for v, e in rest],
            },
            "equation": render_text(self.transformed_system()),
        }


def admissible_pairs(curve: CyclicCurve) -> list[tuple[int, int]]:
    """Ordered pairs for odd d, unordered (i < j) for d = 2."""
    r = curve.r
    if curve.d == 2:
        return [(i, j) for i in range(r) for j in range(i + 1, r)]
    return [(i, j) for i in range(r) for j in range(r) if i != j]


def two_point_beta(curve: CyclicCurve, i: int, j: int) -> ExponentVector:
    """Exponent vector of z^d = (x - a_i)(x - a_j)^(d-1)."""
    raw = [0] * curve.r
    raw[i] = 1
    raw[j] = curve.d - 1
    return ExponentVector(tuple(e % curve.d for e in raw), curve.d)


def two_point_transform(curve: CyclicCurve, i: int, j: int) -> TwoPointTransform:
    r = curve.r
    for p in (i, j):
        if isinstance(p, bool) or not isinstance(p, int) or not 0 <= p < r:
            raise InvalidPair(f"position {p!r} outside [0, {r})")
    if i == j:
        raise InvalidPair("i and j must differ")
    a = curve.branch_points
    alpha = curve.alpha.entries
    others = [k for k in range(r) if k not in (i, j)]
    c_values = tuple((k, (a[k] - a[i]) / (a[k] - a[j])) for k in others)
    return TwoPointTransform(
        d=curve.d,
        i=i,
        j=j,
        alpha_i=alpha[i],
        alpha_j=alpha[j],
        c_values=c_values,
        new_exponents=tuple(alpha[k] for k in others),
        exponent_sum=sum(alpha),
        scale_data=(a[i] - a[j], tuple((a[k] - a[j], alpha[k]) for k in others)),
    )


def verify_two_point_identity(curve: CyclicCurve, transform: TwoPointTransform) -> bool:
    """Exact check, as polynomials in t, of

        prod_k (x(t) - a_k)^alpha_k * (1 - t^d)^s
            == t^(d alpha_i) (a_i - a_j)^(alpha_i + alpha_j)
               * prod_{k != i,j} (a_k - a_j)^alpha_k (t^d - c_k)^alpha_k
    """
    tr = transform
    if tr.d != curve.d or not (0 <= tr.i < curve.r and 0 <= tr.j < curve.r) or tr.i == tr.j:
        return False
    if (tr.alpha_i, tr.alpha_j) != (curve.alpha[tr.i], curve.alpha[tr.j]):
        return False
    a = curve.branch_points
    d = curve.d
    T = Polynomial.monomial(d)

    x_t = tr.x_of_t(a[tr.i], a[tr.j])
    lhs = RationalFunction(1 - T) ** tr.exponent_sum
    for a_k, e in zip(a, curve.alpha):
        lhs = lhs * (x_t - a_k) ** e
    if not lhs.is_polynomial():
        return False

    diff, rest = tr.scale_data
    const = diff ** (tr.alpha_i + tr.alpha_j)
    for v, e in rest:
        const *= v**e
    rhs = Polynomial.monomial(d * tr.alpha_i, const) * tr.transformed_polynomial()
    return lhs.as_polynomial() == rhs


def transformed_genus(curve: CyclicCurve, transform: TwoPointTransform) -> int:
    """Riemann-Hurwitz genus of w^d = prod (t^d - c_k)^alpha_k.

    The branch values are the d-th roots of the c_k; squarefreeness of
    prod (t^d - c_k) certifies that they are pairwise distinct.
    """
    T = Polynomial.monomial(curve.d)
    branch_poly = Polynomial.constant(1)
    for _, c in transform.c_values:
        branch_poly = branch_poly * (T - c)
    if not is_squarefree(branch_poly):
        raise InvalidPair("transformed branch values collide")
    return genus_from_profile(ramification_profile(curve.d, transform.exponent_datum()))


def two_point_cover_genus(curve: CyclicCurve, i: int, j: int) -> int:
    return cover_genus(CoverSpec(curve, two_point_beta(curve, i, j)))


# -- covers defined over Q -------------------------------------------------


def rational_cover_from_factors(d: int, f1: Polynomial, f2: Polynomial) -> EquationSystem:
    """y^d = f1 f2, z^d = f1 for a factorisation into degrees divisible by d."""
    check_prime(d)
    for name, f in (("f1", f1), ("f2", f2)):
        if f.degree < 1:
            raise ConstantFactor(f"{name} is constant")
    for name, f in (("f1", f1), ("f2", f2)):
        if f.degree % d:
            raise DegreeNotDivisible(f"deg {name} = {f.degree} is not divisible by {d}")
    if not is_squarefree(f1 * f2):
        raise NotSquarefree("f1 * f2 has a repeated root")
    return EquationSystem(
        d,
        (Relation("y", PolyForm(((f1, 1), (f2, 1)))), Relation("z", PolyForm(((f1, 1),)))),
    )
