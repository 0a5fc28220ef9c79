"""The integral construction of the pseudo invariant for osp(2|2).

Coordinates: z_t = x1_t + i x2_t and zb_t = x1_t - i x2_t, so
d/dz = (d1 - i d2)/2 and d/dzb = (d1 + i d2)/2.  Everything is expressed
in the x coordinates of S(2) with m = 2, n = 1, N = 2, using Q(i)
coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .diffops import MUL, PARTIAL, LinearOperator, Step, op_J, operators_equal
from .pfaffian import omega
from .ring import AlgebraSignature, SuperPolynomial, poly_sum
from .scalar import I, Scalar

SIG = AlgebraSignature(2, 1, 2)

# rows of V: 1, 2 -> x1, x2; 3, 4 -> theta1, theta2


def z(t: int, bar: bool = False) -> SuperPolynomial:
    return SIG.x(1, t) + SIG.x(2, t).scale(-I if bar else I)


def Delta_z() -> SuperPolynomial:
    return z(1) * z(2, True) - z(1, True) * z(2)


def Pi(i: int) -> SuperPolynomial:
    return SIG.theta(i, 1) * SIG.theta(i, 2)


def delta0() -> SuperPolynomial:
    return Delta_z() * SIG.theta(1, 1) * SIG.theta(2, 1) * SIG.theta(1, 2) * SIG.theta(2, 2)


# operator words -----------------------------------------------------------

def _mul_z(t, bar=False):
    c = -I if bar else I
    return [(1, Step(MUL, 1, t)), (c, Step(MUL, 2, t))]


def _d_z(t, bar=False):
    c = Scalar(0, 1) / 2 if bar else Scalar(0, -1) / 2
    return [(Scalar(1, 0) / 2, Step(PARTIAL, 1, t)), (c, Step(PARTIAL, 2, t))]


def _words(left, right, coeff=1):
    return [(coeff * cl * cr, (sl, sr)) for cl, sl in left for cr, sr in right]


def _gen(a, t, kind=MUL):
    return [(1, Step(kind, a, t))]


def op_zd_theta(bar: bool, mu: int, coeff=1) -> LinearOperator:
    """sum_t coeff * z_t d/dtheta^mu_t (zb_t if bar)."""
    words = []
    for t in (1, 2):
        words += _words(_mul_z(t, bar), _gen(2 + mu, t, PARTIAL), coeff)
    return LinearOperator(SIG, words)


def op_theta_dz(mu: int, bar: bool, coeff=1) -> LinearOperator:
    """sum_t coeff * theta^mu_t d/dz_t (d/dzb_t if bar)."""
    words = []
    for t in (1, 2):
        words += _words(_gen(2 + mu, t), _d_z(t, bar), coeff)
    return LinearOperator(SIG, words)


def J3() -> LinearOperator:
    op = op_zd_theta(False, 2) + op_theta_dz(1, True, -2)
    op.label = "J3"
    return op


def J4() -> LinearOperator:
    op = op_zd_theta(False, 1, -1) + op_theta_dz(2, True, -2)
    op.label = "J4"
    return op


def Jb3() -> LinearOperator:
    op = op_zd_theta(True, 2) + op_theta_dz(1, False, -2)
    op.label = "Jb3"
    return op


def Jb4() -> LinearOperator:
    op = op_zd_theta(True, 1, -1) + op_theta_dz(2, False, -2)
    op.label = "Jb4"
    return op


def gamma() -> LinearOperator:
    return J3() @ J4() @ Jb4() @ Jb3()


# the example's operators written in x coordinates ------------------------

def example_operators() -> dict[str, LinearOperator]:
    """The osp(2|2) operators written in the z coordinates."""
    def op(pairs):
        words = []
        for c, (k1, a1), (k2, a2) in pairs:
            for t in (1, 2):
                words.append((c, (Step(k1, a1, t), Step(k2, a2, t))))
        return LinearOperator(SIG, words)

    M, P = MUL, PARTIAL
    ops = {"J^12": op([(1, (M, 1), (P, 2)), (-1, (M, 2), (P, 1))])}
    for i in (1, 2):
        ops[f"J^{i}3"] = op([(1, (M, i), (P, 4)), (-1, (M, 3), (P, i))])
        ops[f"J^{i}4"] = op([(-1, (M, i), (P, 3)), (-1, (M, 4), (P, i))])
    ops["J^33"] = op([(1, (M, 3), (P, 4))])
    ops["J^44"] = op([(-1, (M, 4), (P, 3))])
    ops["J^34"] = op([(-1, (M, 3), (P, 3)), (1, (M, 4), (P, 4))])
    return ops


def dictionary() -> dict[str, LinearOperator]:
    """The same operators built from J_ab; raising uses kappa^-1 and the odd diagonal is halved."""
    J = lambda a, b: op_J(SIG, a, b)
    out = {"J^12": J(1, 2)}
    for i in (1, 2):
        out[f"J^{i}3"] = J(i, 4)
        out[f"J^{i}4"] = J(i, 3).scale(-1)
    half = Scalar(1, 0) / 2
    out["J^33"] = J(4, 4).scale(half)
    out["J^44"] = J(3, 3).scale(half)
    out["J^34"] = J(4, 3).scale(-1)
    return out


def check_dictionary(max_degree: int = 2) -> dict[str, bool]:
    ex, dic = example_operators(), dictionary()
    out = {name: operators_equal(ex[name], dic[name], max_degree) for name in ex}
    # complex combinations
    for name, (alpha, bar) in {"J3": (3, False), "J4": (4, False),
                               "Jb3": (3, True), "Jb4": (4, True)}.items():
        combo = ex[f"J^1{alpha}"] + ex[f"J^2{alpha}"].scale(-I if bar else I)
        out[name] = operators_equal(globals()[name](), combo, max_degree)
    return out


# intermediate quantities -------------------------------------------------

def _sum(parts):
    return poly_sum(parts, SIG)


@dataclass
class Osp22Result:
    integral: SuperPolynomial
    pieces: dict = field(default_factory=dict)
    expected: dict = field(default_factory=dict)
    checks: dict = field(default_factory=dict)
    ratio: object = None
    sign: int = 0
    notes: dict = field(default_factory=dict)


def _d_theta(mu, t):
    return _gen(2 + mu, t, PARTIAL)


def intermediates() -> dict[str, SuperPolynomial]:
    D = Delta_z()
    d0 = delta0()
    P2 = Pi(2)
    L = lambda words: LinearOperator(SIG, words)
    omega0 = _sum([D * D * L(_words(_mul_z(i), _d_theta(2, i)))(
        L(_words(_mul_z(j, True), _d_theta(2, j)))(P2)) for i in (1, 2) for j in (1, 2)])
    inner2 = _sum([L(_words(_mul_z(j, True), _d_theta(2, j)))(D * D * P2) for j in (1, 2)])
    omega2p = op_theta_dz(1, True, -2)(inner2)
    inner4 = _sum([L(_words(_mul_z(j, True), _d_theta(1, j)))(d0) for j in (1, 2)])
    omega2pp = op_zd_theta(False, 2, -8)(inner4)
    omega4 = op_theta_dz(1, True, 16)(inner4)
    return {"Omega0": omega0, "Omega2'": omega2p, "Omega2''": omega2pp, "Omega4": omega4}


def expected_values() -> dict[str, SuperPolynomial]:
    D = Delta_z()
    th = SIG.theta
    zz = lambda s, t: z(s) * z(t, True)
    d0 = delta0()
    A = zz(1, 1) * th(1, 2) * th(2, 2) + zz(2, 2) * th(1, 1) * th(2, 1)
    B = zz(1, 2) + zz(2, 1)
    T = th(1, 1) * th(2, 2) + th(1, 2) * th(2, 1)
    o2p = (D * D * (th(1, 1) * th(2, 2) - th(1, 2) * th(2, 1))).scale(-2) \
        + (D * A).scale(-4) \
        + (D * (zz(1, 2) * th(1, 2) * th(2, 1) + zz(2, 1) * th(1, 1) * th(2, 2))).scale(4)
    # the reference form carries -z2 zb1 theta1_1 theta2_2 in the last bracket; only the
    # + sign is consistent with its own Omega2 = Omega2' + Omega2''
    o2p_reference = o2p - (D * zz(2, 1) * th(1, 1) * th(2, 2)).scale(8)
    o2pp = (D * A).scale(-8) \
        + (D * (zz(1, 2) * th(1, 1) * th(2, 2) + zz(2, 1) * th(1, 2) * th(2, 1))).scale(8)
    o2 = (D * A).scale(-12) + (D * B * T).scale(6)
    total = D ** 3 + (D * A).scale(12) - (D * B * T).scale(6) - d0.scale(48)
    return {"Omega0": -(D ** 3), "Omega4": d0.scale(48), "Omega2'": o2p, "Omega2''": o2pp,
            "Omega2": o2, "integral": total, "Omega2' reference": o2p_reference}


def omega_osp22_integral(sig: AlgebraSignature | None = None) -> SuperPolynomial:
    if sig is not None and sig != SIG:
        raise ValueError("the osp(2|2) construction needs (m, n, N) = (2, 1, 2)")
    return -gamma()(delta0())


def osp22_report() -> Osp22Result:
    integral = omega_osp22_integral()
    pieces = intermediates()
    pieces["Omega2"] = pieces["Omega2'"] + pieces["Omega2''"]
    exp = expected_values()
    checks = {f"{k} matches": pieces[k] == exp[k] for k in pieces}
    notes = {"Omega2' equals the reference form": pieces["Omega2'"] == exp["Omega2' reference"]}
    checks["pieces sum to gamma(delta0)"] = (
        _sum([pieces[k] for k in ("Omega0", "Omega2'", "Omega2''", "Omega4")]) == -integral)
    checks["integral matches"] = integral == exp["integral"]
    checks["delta0 == -Delta Pi1 Pi2"] = delta0() == -(Delta_z() * Pi(1) * Pi(2))
    # compare with Omega: leading coefficient ratio, then exact proportionality
    om = omega(AlgebraSignature(2, 1, 2))
    k = next(iter(om.terms))
    ratio = Scalar.of(integral.coefficient(k)) / om.terms[k]
    checks["integral proportional to Omega"] = integral == om.scale(ratio)
    scale = Scalar(0, -2) ** 3  # Delta_z = -2i Delta_x
    sign = 1 if ratio == scale else -1 if ratio == -scale else 0
    checks["ratio is ±(-2i)^3"] = sign != 0
    return Osp22Result(integral, pieces, exp, checks, ratio, sign, notes)
