"""Chart calculus for ruled surfaces over a one-dimensional toric base.

The surface is covered by four affine charts over a base pair (U, V).
Fiber coordinates x, t on the U side and y, s on the V side glue by
t*x = s*y = 1 and x = a*y + b, with a a unit and b a function on the
base overlap.  Supported bases: the affine line, the punctured line and
the projective line (transition a = c*u^n, Laurent b).

The standard lift fixes a base-chart lift, sends x to x^p, and
propagates through the transition: F(y) = ((a*y + b)^p - F(b)) / F(a),
which always lands in y^p + p*h with deg_y h <= p.  The t and s images
come from the degree-bound chart extension.

Chart polynomials put the base coordinate in slot 0 and the fiber in
slot 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    InvariantViolation,
    NotDivisible,
    ShapeError,
    UnitError,
    UnsupportedShape,
)
from .froblift import AffineChartLift, CheckResult, EtaFunction, standard_lift
from .polyalg import (
    Poly,
    canonical_lift,
    divide_by_p,
    invert_unit,
    poly_to_str,
    reduce_mod_p,
    substitute,
)
from .projline import extend_chart
from .witt2 import FiniteField

BASE_KINDS = ("A1", "Gm", "P1")

# Laurent mask of the base overlap coordinate u
_OVERLAP_MASK = {"A1": False, "Gm": True, "P1": True}
# Laurent mask of each base chart's own coordinate
_CHART_MASK = {"A1": False, "Gm": True, "P1": False}


class TransitionData:
    """Gluing data x = a*y + b over a toric base; a must be a unit monomial."""

    __slots__ = ("kind", "field", "a", "b")

    def __init__(self, kind: str, a: Poly, b: Poly):
        if kind not in BASE_KINDS:
            raise UnsupportedShape(f"unsupported base {kind!r}; expected one of {BASE_KINDS}")
        if a.nvars != 1 or b.nvars != 1 or a.ring != b.ring:
            raise ShapeError("a and b must be one-variable polynomials over one field")
        st = a.single_term()
        if st is None or st[1].is_zero():
            raise UnitError("transition coefficient a must be a unit monomial")
        mono, _ = st
        mask = (_OVERLAP_MASK[kind],)
        if not a.respects_mask(mask) or (kind == "A1" and mono[0] != 0):
            raise UnitError(f"a = {poly_to_str(a)} is not a unit on the {kind} base")
        if not b.respects_mask(mask):
            raise UnsupportedShape(f"b = {poly_to_str(b)} is not regular on the {kind} overlap")
        self.kind = kind
        self.field = a.ring
        self.a = a
        self.b = b

    def __repr__(self):
        return f"TransitionData({self.kind}, a={poly_to_str(self.a)}, b={poly_to_str(self.b)})"


def hirzebruch_transition(field: FiniteField, n: int) -> TransitionData:
    """The transition a = u^n, b = 0 of the n-th projective-bundle surface over P1."""
    if n < 0:
        raise UnsupportedShape("twist n must be >= 0")
    return TransitionData(
        "P1", Poly.monomial(field, 1, (n,)), Poly.zero(field, 1)
    )


class BaseLift:
    """Frobenius lift on the base charts (one chart, or two glued ones for P1)."""

    __slots__ = ("kind", "chart_U", "chart_V")

    def __init__(self, kind: str, chart_U: AffineChartLift, chart_V: AffineChartLift = None):
        if kind not in BASE_KINDS:
            raise UnsupportedShape(f"unsupported base {kind!r}")
        if chart_U.nvars != 1:
            raise ShapeError("base chart lifts are one-variable")
        if kind == "P1":
            if chart_V is None:
                # the second chart is forced by the degree-bound extension
                point = standard_lift(chart_U.field, 0)
                chart_V = AffineChartLift(
                    chart_U.field, 1, (False,),
                    (extend_chart(point, chart_U.corrections[0]),),
                )
            if chart_V.nvars != 1:
                raise ShapeError("base chart lifts are one-variable")
        else:
            chart_V = chart_U
        self.kind = kind
        self.chart_U = chart_U
        self.chart_V = chart_V


def standard_base_lift(field: FiniteField, kind: str) -> BaseLift:
    """u -> u^p on every base chart."""
    mask = (_CHART_MASK[kind],) if kind != "P1" else (False,)
    return BaseLift(kind, standard_lift(field, 1, mask))


@dataclass
class RuledLift:
    """Four-chart lift data; charts keyed UX, UT, VY, VS."""

    transition: TransitionData
    base: BaseLift
    charts: dict
    h: Poly  # fiber correction of the VY chart, over F_q

    @property
    def field(self):
        return self.transition.field

    def chart_images(self) -> dict:
        out = {}
        for key, coord in (("UX", "x"), ("UT", "t"), ("VY", "y"), ("VS", "s")):
            chart = self.charts[key]
            out[key] = {
                "base": poly_to_str(chart.image_of_var(0)),
                coord: poly_to_str(chart.image_of_var(1)),
            }
        return out


def _embed2(f: Poly, slot: int = 0) -> Poly:
    """One-variable polynomial into two variables, occupying the given slot."""
    if slot == 0:
        terms = {m + (0,): c for m, c in f.terms.items()}
    else:
        terms = {(0,) + m: c for m, c in f.terms.items()}
    return Poly(f.ring, 2, terms)


def _drop_fiber(f: Poly) -> Poly:
    terms = {}
    for m, c in f.terms.items():
        if m[1] != 0:
            raise ShapeError("polynomial still depends on the fiber variable")
        terms[(m[0],)] = c
    return Poly(f.ring, 1, terms)


def build_standard_lift(T: TransitionData, baseF: BaseLift = None) -> RuledLift:
    """The explicit lift with F(x) = x^p, propagated to the other three charts."""
    field = T.field
    p = field.p
    if baseF is None:
        baseF = standard_base_lift(field, T.kind)
    if baseF.kind != T.kind or baseF.chart_U.field != field:
        raise ShapeError("base lift does not match the transition data")

    wring = baseF.chart_U.lift_ring
    fu = baseF.chart_U.corrections[0]
    fv = baseF.chart_V.corrections[0]

    chart_mask_U = (_CHART_MASK[T.kind] if T.kind != "P1" else False, False)
    chart_mask_V = (_CHART_MASK[T.kind] if T.kind != "P1" else False, False)

    # U-side charts: x -> x^p exactly, t-chart forced by the extension
    zero2 = Poly.zero(field, 2)
    chart_ux = AffineChartLift(field, 2, chart_mask_U, (_embed2(fu), zero2))
    chart_ut = AffineChartLift(field, 2, chart_mask_U, (_embed2(fu), zero2))

    # V-side fiber image, computed on the overlap:
    #   F(y) = ((a~*y + b~)^p - F(b~)) * F(a~)^(-1)
    a2 = _embed2(canonical_lift(T.a, wring))
    b2 = _embed2(canonical_lift(T.b, wring))
    y_mono = Poly.variable(wring, 2, 1)
    u_img_overlap = _embed2(baseF.chart_U.image_of_var(0))
    frob = lambda c: c.frobenius()

    def base_action(g: Poly) -> Poly:
        # the lift applied to a base-overlap element (no fiber dependence)
        return substitute(g, [u_img_overlap, y_mono], coeff_map=frob)

    den = base_action(a2)
    try:
        den_inv = invert_unit(den)
    except UnitError as exc:
        raise UnitError(f"base image of a is not a unit: {exc}") from exc
    numerator = (a2 * y_mono + b2) ** p - base_action(b2)
    y_img = numerator * den_inv

    try:
        h_overlap = divide_by_p(y_img - Poly.variable(wring, 2, 1, p))
    except NotDivisible as exc:
        raise InvariantViolation(f"V-chart image does not reduce to y^p: {exc}") from exc
    deg_h = h_overlap.degree_in(1)
    if deg_h is not None and deg_h > p:
        raise InvariantViolation(f"fiber degree of h is {deg_h} > p = {p}")

    h_chart = _to_v_coords(h_overlap, T.kind)
    chart_vy = AffineChartLift(field, 2, chart_mask_V, (_embed2(fv), h_chart))
    # s-chart via the degree-bound extension (deg_y h <= p <= 2p always holds)
    g_s = extend_chart(baseF.chart_V, h_chart)
    chart_vs = AffineChartLift(field, 2, chart_mask_V, (_embed2(fv), g_s))

    return RuledLift(
        transition=T,
        base=baseF,
        charts={"UX": chart_ux, "UT": chart_ut, "VY": chart_vy, "VS": chart_vs},
        h=h_chart,
    )


def _to_v_coords(f: Poly, kind: str) -> Poly:
    """Rewrite an overlap polynomial (coords u, fiber) into the V chart."""
    if kind != "P1":
        if kind == "A1" and not f.respects_mask((False, True)):
            raise UnsupportedShape("correction is not regular on the affine-line base")
        return f
    terms = {}
    for m, c in f.terms.items():
        if m[0] > 0:
            raise UnsupportedShape(
                "V-side correction involves positive powers of u and does not "
                "descend to the v-chart; this transition needs a different gluing"
            )
        terms[(-m[0], m[1])] = c
    return Poly(f.ring, 2, terms)


# ---------------------------------------------------------------------------
# gluing verification
# ---------------------------------------------------------------------------


def _frob(c):
    return c.frobenius()


class _OverlapSide:
    """A chart's lift extended to an overlap, given images of the overlap coords."""

    def __init__(self, u_img: Poly, fiber_img: Poly):
        self.u_img = u_img
        self.fiber_img = fiber_img

    def act(self, elem: Poly) -> Poly:
        return substitute(elem, [self.u_img, self.fiber_img], coeff_map=_frob)


def _rewrite(img: Poly, u_to: Poly, fiber_to: Poly) -> Poly:
    """Plain coordinate change of an image polynomial (coefficients fixed)."""
    return substitute(img, [u_to, fiber_to])


def verify_gluing(L: RuledLift) -> CheckResult:
    """Exact agreement of all chart maps on the pairwise overlaps.

    Overlaps whose transition is not expressible with monomial units
    (the t-side against the V charts when b != 0) are implied by the
    directly checked ones and reported as such.
    """
    T = L.transition
    field = L.field
    wring = L.charts["UX"].lift_ring
    base_mask = _OVERLAP_MASK[T.kind]
    b_zero = T.b.is_zero()
    a2 = _embed2(canonical_lift(T.a, wring))
    b2 = _embed2(canonical_lift(T.b, wring))
    a2_inv = invert_unit(a2)

    failures = []
    checked, implied = [], []

    def umono():
        return Poly.variable(wring, 2, 0)

    def fmono(e=1):
        return Poly.variable(wring, 2, 1, e)

    def compare(name, coords, side_a, side_b):
        checked.append(name)
        for cname, elem in coords.items():
            lhs = side_a.act(elem)
            rhs = side_b.act(elem)
            if lhs != rhs:
                failures.append(
                    {
                        "overlap": name,
                        "coordinate": cname,
                        "lhs": poly_to_str(lhs),
                        "rhs": poly_to_str(rhs),
                    }
                )

    def base_img(chart_key):
        # base images are fiber-free; reinterpret them on the overlap
        return _embed2(_drop_fiber(L.charts[chart_key].image_of_var(0)))

    def v_side_u_image(chart_key):
        if T.kind != "P1":
            return base_img(chart_key)
        # v = 1/u: rewrite and invert
        rew = substitute(base_img(chart_key), [Poly.variable(wring, 2, 0, -1), fmono()])
        return invert_unit(rew)

    # mod-p sanity: every chart map lifts the Frobenius
    for key, chart in L.charts.items():
        for i in range(2):
            red = reduce_mod_p(chart.image_of_var(i))
            if red != Poly.variable(field, 2, i, field.p):
                failures.append(
                    {
                        "overlap": key,
                        "coordinate": "base" if i == 0 else "fiber",
                        "lhs": poly_to_str(red),
                        "rhs": "reduction must be the p-th power",
                    }
                )

    # UX meets UT: fiber coordinate x, t = 1/x
    img_x = L.charts["UX"].image_of_var(1)
    img_t_in_x = _rewrite(L.charts["UT"].image_of_var(1), umono(), fmono(-1))
    ux = _OverlapSide(base_img("UX"), img_x)
    ut = _OverlapSide(base_img("UT"), invert_unit(img_t_in_x))
    compare(
        "UX/UT",
        {"u": umono(), "x": fmono(), "t": fmono(-1)},
        ux,
        ut,
    )

    # VY meets VS: fiber coordinate y, s = 1/y (V-side base coordinate w kept)
    img_y = L.charts["VY"].image_of_var(1)
    img_s_in_y = _rewrite(L.charts["VS"].image_of_var(1), umono(), fmono(-1))
    vy_w = _OverlapSide(base_img("VY"), img_y)
    vs_w = _OverlapSide(base_img("VS"), invert_unit(img_s_in_y))
    compare(
        "VY/VS",
        {"w": umono(), "y": fmono(), "s": fmono(-1)},
        vy_w,
        vs_w,
    )

    # UX meets VY: overlap coords (u, y); x = a*y + b
    xelem = a2 * fmono() + b2
    ux_u = base_img("UX")
    ux_base = _OverlapSide(ux_u, fmono())  # for base-only elements
    x_img_omega = _rewrite(img_x, umono(), xelem)
    y_img_ux = (x_img_omega - ux_base.act(b2)) * invert_unit(ux_base.act(a2))
    side_ux = _OverlapSide(ux_u, y_img_ux)

    vy_u = v_side_u_image("VY")
    y_img_vy = _rewrite(img_y, umono() if T.kind != "P1" else Poly.variable(wring, 2, 0, -1), fmono())
    side_vy = _OverlapSide(vy_u, y_img_vy)
    compare(
        "UX/VY",
        {"u": umono(), "x": xelem, "y": fmono()},
        side_ux,
        side_vy,
    )

    # UX와 VS: overlap coords (u, s); x = a/s + b, y = 1/s
    xelem_s = a2 * fmono(-1) + b2
    x_img_omega_s = _rewrite(img_x, umono(), xelem_s)
    y_img_ux_s = (x_img_omega_s - ux_base.act(b2)) * invert_unit(ux_base.act(a2))
    side_ux_s = _OverlapSide(ux_u, invert_unit(y_img_ux_s))
    vs_u = v_side_u_image("VS")
    s_img_vs = _rewrite(
        L.charts["VS"].image_of_var(1),
        umono() if T.kind != "P1" else Poly.variable(wring, 2, 0, -1),
        fmono(),
    )
    side_vs = _OverlapSide(vs_u, s_img_vs)
    compare(
        "UX/VS",
        {"u": umono(), "x": xelem_s, "y": fmono(-1), "s": fmono()},
        side_ux_s,
        side_vs,
    )

    if b_zero:
        # UT meets VY: overlap coords (u, y); t = 1/(a*y)
        ut_u = base_img("UT")
        telem = a2_inv * fmono(-1)
        t_img_omega = _rewrite(L.charts["UT"].image_of_var(1), umono(), telem)
        ut_base = _OverlapSide(ut_u, fmono())
        y_img_ut = ut_base.act(a2_inv) * invert_unit(t_img_omega)
        side_ut = _OverlapSide(ut_u, y_img_ut)
        compare(
            "UT/VY",
            {"u": umono(), "t": telem, "y": fmono()},
            side_ut,
            side_vy,
        )

        # UT meets VS: overlap coords (u, s); t = s/a
        telem_s = a2_inv * fmono()
        t_img_omega_s = _rewrite(L.charts["UT"].image_of_var(1), umono(), telem_s)
        s_img_ut = ut_base.act(a2) * t_img_omega_s
        side_ut_s = _OverlapSide(ut_u, s_img_ut)
        compare(
            "UT/VS",
            {"u": umono(), "t": telem_s, "s": fmono()},
            side_ut_s,
            side_vs,
        )
    else:
        implied = ["UT/VY", "UT/VS"]

    return CheckResult(
        not failures,
        failures,
        {"checked": checked, "implied": implied, "base": T.kind, "b_zero": b_zero},
    )


# ---------------------------------------------------------------------------
# base-lift extraction
# ---------------------------------------------------------------------------


@dataclass
class BaseLiftExtraction:
    """Fiber-degree-0 part of a chart lift, plus the p-torsion tail."""

    f0: AffineChartLift
    tails: dict  # (base var index, fiber power >= 1) -> lift-ring polynomial


def extract_base_lift(chart: AffineChartLift) -> BaseLiftExtraction:
    """Expand each base image in fiber powers; degree 0 is again a base lift.

    Every higher coefficient must be killed by p (it reduces to zero mod
    p); a violation raises, since it would contradict the structure of a
    chart lift.
    """
    if chart.nvars < 2:
        raise ShapeError("need at least one base variable plus the fiber")
    fiber = chart.nvars - 1
    ring = chart.lift_ring
    n_base = chart.nvars - 1
    base_mask = chart.laurent_mask[:n_base]
    g0s = []
    tails = {}
    for i in range(n_base):
        img = chart.image_of_var(i)
        buckets = img.collect_by_var(fiber)
        a0 = buckets.get(0, Poly.zero(ring, chart.nvars))
        xp = Poly.variable(ring, chart.nvars, i, chart.p)
        try:
            g0 = divide_by_p(a0 - xp)
        except NotDivisible as exc:
            raise InvariantViolation(
                f"fiber-free part of F(x{i + 1}) does not lift the Frobenius: {exc}"
            ) from exc
        g0s.append(_strip_var(g0, fiber))
        for k, coeff_poly in buckets.items():
            if k == 0:
                continue
            for mono, c in coeff_poly.terms.items():
                if not ring.divisible_by_p(c):
                    raise InvariantViolation(
                        f"tail coefficient of x_fiber^{k} in F(x{i + 1}) "
                        "is not annihilated by p"
                    )
            tails[(i, k)] = _strip_var(coeff_poly, fiber)
    f0 = AffineChartLift(chart.field, n_base, base_mask, g0s)
    return BaseLiftExtraction(f0, tails)


def _strip_var(f: Poly, i: int) -> Poly:
    terms = {}
    for m, c in f.terms.items():
        if m[i] != 0:
            raise ShapeError("cannot strip a variable that still occurs")
        terms[m[:i] + m[i + 1:]] = c
    return Poly(f.ring, f.nvars - 1, terms)


def base_glue_consistency(L: RuledLift) -> CheckResult:
    """The two base lifts read off the U and V sides differ by p*eta.

    The U-side image of u, pushed through the lifted transition and cut
    at fiber degree 0, must equal the V-side image of u on the overlap;
    the difference from the plain U-side degree-0 part is p times an eta
    that obeys the difference-calculus axioms.
    """
    T = L.transition
    field = L.field
    wring = L.charts["UX"].lift_ring
    mask = (_OVERLAP_MASK[T.kind],)
    a2 = _embed2(canonical_lift(T.a, wring))
    b2 = _embed2(canonical_lift(T.b, wring))

    img_u = L.charts["UX"].image_of_var(0)
    f0_poly = _strip_var(
        img_u.collect_by_var(1).get(0, Poly.zero(wring, 2)), 1
    )

    xelem = a2 * Poly.variable(wring, 2, 1) + b2
    pushed = substitute(img_u, [Poly.variable(wring, 2, 0), xelem])
    lhs0 = _strip_var(pushed.collect_by_var(1).get(0, Poly.zero(wring, 2)), 1)

    if T.kind == "P1":
        img_w = _drop_fiber(L.charts["VY"].image_of_var(0))
        rew = substitute(
            _embed2(img_w), [Poly.variable(wring, 2, 0, -1), Poly.variable(wring, 2, 1)]
        )
        g0_poly = _strip_var(invert_unit(rew).collect_by_var(1).get(0, Poly.zero(wring, 2)), 1)
    else:
        g0_poly = _drop_fiber(L.charts["VY"].image_of_var(0))

    failures = []
    if lhs0 != g0_poly:
        failures.append(
            {
                "coordinate": "u",
                "lhs": poly_to_str(lhs0),
                "rhs": poly_to_str(g0_poly),
                "law": "degree-0 comparison",
            }
        )

    up = Poly.variable(wring, 1, 0, field.p)
    try:
        f0_lift = AffineChartLift(field, 1, mask, (divide_by_p(f0_poly - up),))
        g0_lift = AffineChartLift(field, 1, mask, (divide_by_p(g0_poly - up),))
        eta_u = divide_by_p(lhs0 - f0_poly)
    except NotDivisible as exc:
        raise InvariantViolation(f"extracted base parts are not Frobenius lifts: {exc}") from exc

    eta = EtaFunction(field, 1, mask, (eta_u,), sources=(f0_lift, g0_lift))
    return CheckResult(
        not failures,
        failures,
        {"eta": eta, "f0": f0_lift, "g0": g0_lift, "eta_u": poly_to_str(eta_u)},
    )
