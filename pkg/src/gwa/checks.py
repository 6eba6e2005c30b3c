"""Decision procedures and certificates: relations, fixed rings, simplicity, Galois generation, principality, orbit sets."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .algebra import GwaPresentation, tensor_power, validate_presentation
from .automorphism import RingAutomorphism
from .coefficients import Cyclotomic
from .errors import NonClassicalSetting, RootOfUnityLambda, ZeroPolynomial
from .reflection import enumerate_group, reynolds
from .polynomial import Poly, PolyRing, RatFunc, as_ratfunc, poly_gcd
from .skew import SkewElement, WGroup, evaluate, permutation_auto, unreachable_units
from .univariate import euclid_gcd, integer_roots, resultant, to_coeff_list

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["check", "verdict", "witnesses", "bounded", "bound"],
    "properties": {
        "check": {"type": "string"},
        "verdict": {"type": "boolean"},
        "witnesses": {"type": "array"},
        "bounded": {"type": "boolean"},
        "bound": {"type": ["integer", "null"]},
        "details": {"type": "object"},
    },
    "additionalProperties": False,
}


@dataclass
class CheckReport:
    check: str
    verdict: bool
    witnesses: list = field(default_factory=list)
    bounded: bool = False
    bound: int | None = None
    details: dict = field(default_factory=dict)

    def __bool__(self):
        return self.verdict

    def to_json(self) -> dict:
        out = {
            "check": self.check,
            "verdict": self.verdict,
            "witnesses": self.witnesses,
            "bounded": self.bounded,
            "bound": self.bound,
        }
        if self.details:
            out["details"] = self.details
        return out


# defining relations


def relation_suite(A: GwaPresentation) -> CheckReport:
    """Check every defining relation of D(a, sigma) as a normal-form identity."""
    failures = []

    def expect(name, lhs, rhs):
        if lhs != rhs:
            failures.append({"relation": name, "lhs": str(lhs), "rhs": str(rhs)})

    gens = A.base.gens()
    count = 0
    for i in range(A.rank):
        xp, xm = A.xplus(i), A.xminus(i)
        k = i + 1
        expect(f"Xm{k}*Xp{k} = a{k}", xm * xp, A.scalar(A.a[i]))
        expect(f"Xp{k}*Xm{k} = sigma{k}(a{k})", xp * xm, A.scalar(A.sigma[i](A.a[i])))
        count += 2
        for name, d in zip(A.base.variables, gens):
            dd = A.scalar(d)
            expect(f"Xp{k}*{name} = sigma{k}({name})*Xp{k}", xp * dd, A.scalar(A.sigma[i](d)) * xp)
            expect(f"Xm{k}*{name} = sigma{k}^-1({name})*Xm{k}", xm * dd, A.scalar(A.sigma[i].inverse()(d)) * xm)
            count += 2
        for j in range(i):
            for u, v, label in (
                (xp, A.xplus(j), "Xp Xp"),
                (xm, A.xminus(j), "Xm Xm"),
                (xp, A.xminus(j), "Xp Xm"),
                (xm, A.xplus(j), "Xm Xp"),
            ):
                expect(f"[{label}] generators {k},{j + 1} commute", u * v, v * u)
                count += 1
    return CheckReport("relations", not failures, failures, details={"relations_checked": count})


# fixed rings of cyclic actions


def jw_fixed_ring(A: GwaPresentation, m: int):
    """The presentation of the invariants of X^+ -> zeta X^+, X^- -> zeta^-1 X^-.

    The defining element is read off the normal form of (X^-)^m (X^+)^m and
    the new automorphism is sigma^m.  The report checks the relations of
    Y^+ = (X^+)^m and Y^- = (X^-)^m inside A.
    """
    if A.rank != 1:
        raise ValueError("jw_fixed_ring needs a rank-1 presentation")
    if m < 1:
        raise ValueError("m must be positive")
    yp, ym = A.xplus(0) ** m, A.xminus(0) ** m
    prod = ym * yp
    a_m = prod.coefficient((0,))
    sigma = A.sigma[0]
    sigma_m = sigma.power(m)
    B = validate_presentation(A.base, [a_m], [sigma_m])
    failures = []
    if set(prod.terms) - {(0,)}:
        failures.append({"relation": "Ym*Yp has degree zero", "lhs": str(prod)})
    if yp * ym != A.scalar(sigma_m(a_m)):
        failures.append({"relation": "Yp*Ym = sigma^m(a_m)", "lhs": str(yp * ym), "rhs": str(sigma_m(a_m))})
    for name, d in zip(A.base.variables, A.base.gens()):
        dd = A.scalar(d)
        if yp * dd != A.scalar(sigma_m(d)) * yp:
            failures.append({"relation": f"Yp*{name} = sigma^m({name})*Yp"})
        if ym * dd != A.scalar(sigma_m.inverse()(d)) * ym:
            failures.append({"relation": f"Ym*{name} = sigma^-m({name})*Ym"})
    printed = A.base.one
    for _ in range(m):
        printed = printed * sigma.inverse()(A.a[0])
    shifted = A.base.one
    for i in range(m):
        shifted = shifted * sigma.power(-i)(A.a[0])
    details = {
        "m": m,
        "a_m": str(a_m),
        "sigma_m": [str(p) for p in sigma_m.forward],
        "literal_product_sigma_inverse": str(printed),
        "literal_product_matches": printed == a_m,
        "product_of_sigma_minus_i": str(shifted),
        "product_of_sigma_minus_i_matches": shifted == a_m,
    }
    return B, CheckReport("fixed-ring", not failures, failures, details=details)


# simplicity


_CONVENTION = "shifts i >= 1; a(h) and its shift must share no nonconstant divisor"


def _univariate(a: Poly) -> int:
    used = a.variables_used()
    if len(used) > 1:
        raise ValueError(f"{a} is not univariate")
    return next(iter(used)) if used else 0


def _with_parameter(ring: PolyRing, var: int):
    """A two-variable ring (v, t) over the same field."""
    name = ring.variables[var]
    t = "t" if name != "t" else "s"
    big = PolyRing([name, t], [ring.laurent[var], False], ring.field)
    return big


def _to_big(a: Poly, var: int, big: PolyRing) -> Poly:
    return Poly._make(big, {(e[var], 0): c for e, c in a.terms.items()})


def _cauchy_bound(coeffs) -> Fraction:
    lead = abs(Fraction(coeffs[-1]))
    return 1 + max((abs(Fraction(c)) / lead for c in coeffs[:-1]), default=Fraction(0))


def classical_scan_bound(a: Poly) -> int:
    """2 * deg(a) * (1 + Cauchy root bound), rounded up."""
    coeffs = to_coeff_list(a, _univariate(a))
    deg = len(coeffs) - 1
    return max(1, math.ceil(2 * deg * (1 + _cauchy_bound(coeffs))))


def check_simple_classical(a: Poly) -> CheckReport:
    """Simplicity of the rank-1 GWA over k[h] with sigma(h) = h - 1."""
    if not a:
        raise ZeroPolynomial("a must be nonzero")
    var = _univariate(a)
    ring = a.ring
    details = {"convention": _CONVENTION, "shift": "h -> h-1"}
    if a.is_constant():
        details["resultant"] = "constant a"
        return CheckReport("simple-classical", True, [], details=details)
    big = _with_parameter(ring, var)
    v, t = big.gens()
    ab = _to_big(a, var, big)
    shifted = ab.substitute([v - t, t])
    res = resultant(ab, shifted, 0)
    details["resultant"] = str(res)
    candidates = [i for i in integer_roots(res) if i >= 1]
    witnesses = []
    h = ring.gens()[var]
    images = list(ring.gens())
    for i in candidates:
        images[var] = h - i
        g = poly_gcd(a, a.substitute(images))
        if not g.is_constant():
            witnesses.append({"shift": i, "gcd": str(g.monic())})
    details["candidate_shifts"] = candidates
    return CheckReport("simple-classical", not witnesses, witnesses, details=details)


def _lambda_value(lam):
    if isinstance(lam, Cyclotomic):
        if not lam.is_rational():
            raise ValueError("only rational lambda is supported")
        lam = lam.to_rational()
    lam = Fraction(lam)
    if lam in (0, 1, -1):
        raise RootOfUnityLambda(f"lambda = {lam} is a root of unity or zero")
    return lam


def quantum_scan_bound(a: Poly, lam) -> int:
    """Largest i with |lambda|^i not above the ratio of extreme root magnitudes of a."""
    lam = _lambda_value(lam)
    coeffs = to_coeff_list(_strip_h(a), _univariate(a))
    if len(coeffs) <= 1:
        return 0
    upper = _cauchy_bound(coeffs)
    lower = 1 / _cauchy_bound(coeffs[::-1])
    ratio = upper / lower
    step = abs(lam) if abs(lam) > 1 else 1 / abs(lam)
    i, power = 0, Fraction(1)
    while power * step <= ratio:
        power *= step
        i += 1
    return i


def _strip_h(a: Poly) -> Poly:
    """Drop the power of the variable dividing a (the part with root 0)."""
    if not a:
        return a
    low = a.min_exp()
    if not any(low):
        return a
    return Poly._make(a.ring, {tuple(x - y for x, y in zip(e, low)): c for e, c in a.terms.items()})


def check_simple_quantum(a: Poly, lam) -> CheckReport:
    """Simplicity of the rank-1 GWA with sigma(h) = lambda * h."""
    if not a:
        raise ZeroPolynomial("a must be nonzero")
    lam = _lambda_value(lam)
    var = _univariate(a)
    ring = a.ring
    details = {"convention": _CONVENTION, "lambda": str(lam)}
    h = ring.gens()[var]
    images = list(ring.gens())
    witnesses = []
    low = a.min_exp()[var]
    if low > 0 and not ring.laurent[var]:
        # h divides a and every lambda^i * h multiple of it
        images[var] = h * lam
        witnesses.append({"shift": 1, "gcd": str(poly_gcd(a, a.substitute(images)).monic())})
        details["note"] = "h divides a, so every shift shares it"
        return CheckReport("simple-quantum", False, witnesses, details=details)
    core = _strip_h(a)
    if core.is_constant():
        return CheckReport("simple-quantum", True, [], True, 0, details)
    bound = quantum_scan_bound(core, lam)
    big = _with_parameter(ring, var)
    v, t = big.gens()
    ab = _to_big(core, var, big)
    res = resultant(ab, ab.substitute([v * t, t]), 0)
    details["resultant"] = str(res)
    candidates = []
    for i in range(1, bound + 1):
        if not res.evaluate([0, lam**i]):
            candidates.append(i)
    for i in candidates:
        images[var] = h * lam**i
        g = poly_gcd(core, core.substitute(images))
        if not g.is_constant():
            witnesses.append({"shift": i, "gcd": str(g.monic())})
    details["candidate_shifts"] = candidates
    return CheckReport("simple-quantum", not witnesses, witnesses, True, bound, details)


def brute_force_scan(a: Poly, kind: str = "classical", lam=None, bound: int | None = None) -> list[int]:
    """Shifts i in [1, bound] whose gcd with a is nonconstant, by dense Euclid."""
    var = _univariate(a)
    if kind == "classical":
        bound = classical_scan_bound(a) if bound is None else bound
        base = to_coeff_list(a, var)
    else:
        lam = _lambda_value(lam)
        core = _strip_h(a)
        bound = quantum_scan_bound(core, lam) if bound is None else bound
        if a.min_exp()[var] > 0 and not a.ring.laurent[var]:
            return list(range(1, bound + 1))
        base = to_coeff_list(core, var)
    hits = []
    for i in range(1, bound + 1):
        if kind == "classical":
            other = _dense_shift(base, -i)
        else:
            other = [c * lam ** (i * k) for k, c in enumerate(base)]
        if len(euclid_gcd(base, other)) > 1:
            hits.append(i)
    return hits


def _dense_shift(coeffs, s):
    """Coefficients of p(h + s)."""
    out = [Fraction(0)] * len(coeffs)
    for k, c in enumerate(coeffs):
        for j in range(k + 1):
            out[j] += c * math.comb(k, j) * Fraction(s) ** (k - j)
    return out


# Galois ring generation and principal orders


def lattice_coordinates(v, basis) -> tuple[int, ...]:
    """Integer coordinates of v in the given basis; ValueError when v is outside the lattice."""
    n = len(basis)
    rows = [[Fraction(basis[j][i]) for j in range(n)] + [Fraction(v[i])] for i in range(len(v))]
    r = 0
    for col in range(n):
        piv = next((k for k in range(r, len(rows)) if rows[k][col]), None)
        if piv is None:
            raise ValueError("lattice basis is degenerate")
        rows[r], rows[piv] = rows[piv], rows[r]
        lead = rows[r][col]
        rows[r] = [x / lead for x in rows[r]]
        for k in range(len(rows)):
            if k != r and rows[k][col]:
                f = rows[k][col]
                rows[k] = [x - f * y for x, y in zip(rows[k], rows[r])]
        r += 1
    if any(row[-1] for row in rows[r:]):
        raise ValueError(f"{list(v)} is not in the span of the lattice basis")
    coords = [rows[k][-1] for k in range(n)]
    if any(c.denominator != 1 for c in coords):
        raise ValueError(f"{list(v)} is not in the lattice")
    return tuple(int(c) for c in coords)


def check_galois_generation(generators: Sequence[SkewElement], n: int, lattice=None) -> CheckReport:
    """The union of supports must generate Z^n (or the given lattice) as a monoid."""
    if not generators:
        raise ValueError("at least one generator is required")
    supp = set()
    for X in generators:
        supp |= X.support()
    details = {"support": [list(v) for v in sorted(supp, reverse=True)]}
    if lattice is None:
        missing = unreachable_units(supp, n)
        witnesses = [{"unreachable": list(v)} for v in missing]
        return CheckReport("galois-generation", not missing, witnesses, details=details)
    basis = [tuple(b) for b in lattice]
    details["lattice"] = [list(b) for b in basis]
    outside = []
    coords = []
    for v in sorted(supp, reverse=True):
        try:
            coords.append(lattice_coordinates(v, basis))
        except ValueError:
            outside.append({"outside_lattice": list(v)})
    if outside:
        return CheckReport("galois-generation", False, outside, details=details)
    missing = unreachable_units(coords, len(basis))
    witnesses = [{"unreachable": [sum(c * b[i] for c, b in zip(u, basis)) for i in range(n)]} for u in missing]
    return CheckReport("galois-generation", not missing, witnesses, details=details)


def fixed_ring_generators(seed: GwaPresentation, m: int, p: int, n: int):
    """Reynolds images under G(m, p, n) of X_1^{+-m}, (X_1^+...X_n^+)^{m/p}, its minus twin and the seed variables.

    Returns the tensor power, the group and the nonzero images.
    """
    A = tensor_power(seed, n) if n > 1 else seed
    G = enumerate_group(m, p, n)
    k = m // p
    candidates = [
        A.xplus(0) ** m,
        A.xminus(0) ** m,
        A.monomial((k,) * n),
        A.monomial((-k,) * n),
    ]
    candidates += [A.scalar(A.base.gens()[j]) for j in A.blocks[0]]
    images = []
    for x in candidates:
        r = reynolds(G, x)
        if r and r not in images:
            images.append(r)
    return A, G, images


def symmetric_gamma_generators(A: GwaPresentation) -> list[Poly]:
    """Elementary symmetric polynomials in each family of block variables, with e_n^-1 for Laurent families."""
    if A.blocks is None:
        raise ValueError("the presentation has no tensor structure")
    gens = A.base.gens()
    out = []
    for j in range(len(A.blocks[0])):
        family = [gens[block[j]] for block in A.blocks]
        for k in range(1, len(family) + 1):
            e = A.base.zero
            for combo in itertools.combinations(family, k):
                term = A.base.one
                for v in combo:
                    term = term * v
                e = e + term
            out.append(e)
        if A.base.laurent[A.blocks[0][j]]:
            out.append(out[-1] ** -1)
    return out


def polynomial_membership(ring: PolyRing) -> Callable:
    """Membership in the base ring itself."""

    def member(x) -> bool:
        return as_ratfunc(x).as_poly() is not None

    return member


def invariant_membership(ring: PolyRing, autos: Sequence[RingAutomorphism]) -> Callable:
    """Membership in the subring of the base ring fixed by every listed automorphism."""

    def member(x) -> bool:
        p = as_ratfunc(x).as_poly()
        return p is not None and all(g(p) == p for g in autos)

    return member


def symmetric_membership(A: GwaPresentation) -> Callable:
    """Membership in D^{S_n} for a tensor-power presentation."""
    autos = [permutation_auto(A.base, A.blocks, perm) for perm in itertools.permutations(range(A.rank))]
    return invariant_membership(A.base, autos)


def gamma_products(gamma_gens: Sequence[Poly], deg_bound: int) -> list[Poly]:
    """All products of at most deg_bound of the generators, 1 included, without repeats."""
    gens = list(gamma_gens)
    if not gens:
        raise ValueError("gamma needs at least one generator")
    ring = gens[0].ring
    out, seen = [], set()
    for k in range(deg_bound + 1):
        for combo in itertools.combinations_with_replacement(range(len(gens)), k):
            p = ring.one
            for j in combo:
                p = p * gens[j]
            if p not in seen:
                seen.add(p)
                out.append(p)
    return out


def check_principal(
    generators: Sequence[SkewElement],
    gamma_gens: Sequence[Poly],
    membership: Callable,
    deg_bound: int = 4,
) -> CheckReport:
    """Bounded certificate for X(Gamma) in Gamma over products of gamma_gens of length <= deg_bound."""
    witnesses = []
    tested = 0
    for gamma in gamma_products(gamma_gens, deg_bound):
        g = RatFunc.from_poly(gamma)
        for k, X in enumerate(generators):
            value = evaluate(X, g)
            tested += 1
            if not membership(value):
                witnesses.append({"generator": k, "gamma": str(gamma), "value": str(value)})
    details = {"evaluations": tested}
    return CheckReport("principal", not witnesses, witnesses, True, deg_bound, details)


# orbit sets


def _check_classical(W: WGroup):
    ring = W.ring
    n = ring.rank
    base = ring.base
    if base.nvars != n:
        raise NonClassicalSetting("orbit sets need one base variable per generator")
    gens = base.gens()
    for i, s in enumerate(ring.sigma):
        expected = list(gens)
        expected[i] = gens[i] - 1
        if list(s.forward) != expected:
            raise NonClassicalSetting(f"sigma_{i + 1} is not the unit shift of coordinate {i + 1}")
    for g in W.elements:
        for j, img in enumerate(g.auto.forward):
            if not (img.is_monomial() and img.total_degree() == 1 and img.leading_coeff() == 1):
                raise NonClassicalSetting(f"{g} does not permute the coordinates")
            target = img.variables_used().pop()
            if g.matrix[target][j] != 1:
                raise NonClassicalSetting(f"{g} moves degrees and variables differently")


def _point(v):
    return tuple(Fraction(x) for x in v)


def orbit_set(M, N, W: WGroup):
    """S(M, N) = {mu integral : w2.N = w1.M + mu}; with M == N the report checks the size bound."""
    _check_classical(W)
    M, N = _point(M), _point(N)
    if len(M) != W.ring.rank or len(N) != W.ring.rank:
        raise ValueError("points must have one coordinate per generator")
    orbit_m = [g.act_degree(M) for g in W.elements]
    orbit_n = [g.act_degree(N) for g in W.elements]
    result = set()
    for p in orbit_n:
        for q in orbit_m:
            mu = tuple(x - y for x, y in zip(p, q))
            if all(x.denominator == 1 for x in mu):
                result.add(tuple(int(x) for x in mu))
    result = sorted(result, reverse=True)
    details = {"size": len(result)}
    verdict, witnesses = True, []
    if M == N:
        stab = sum(1 for q in orbit_m if q == M)
        m_m = {tuple(x - y for x, y in zip(q, M)) for q in orbit_m}
        m_m = {mu for mu in m_m if all(x.denominator == 1 for x in mu)}
        bound = Fraction(len(W) ** 2, stab**2) * len(m_m)
        verdict = len(result) <= bound
        details.update(
            {
                "group_order": len(W),
                "stabilizer_order": stab,
                "translation_stabilizer_size": len(m_m),
                "bound": str(bound),
            }
        )
        if not verdict:
            witnesses.append({"size": len(result), "bound": str(bound)})
    return result, CheckReport("orbit-set", verdict, witnesses, details=details)
