//! Nonnegativity certification on the octant by the families' own
//! arguments: exact decomposition identities, certified sign analysis of
//! rational curve parametrizations, and edge restriction checks, with an
//! independent simplex-grid refutation search as cross-oracle.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::Error;
use crate::families::{a1, a2, make_f_pqr, make_g_pq, make_h_pq};
use crate::poly::{Exp, Form};
use crate::scalar::{rat_int, rat_to_string, Rat};
use crate::unipoly::{sign_on_interval, Interval, IntervalSign, UniPoly};

/// One re-checkable step of a certificate. `Cited` steps are trusted logic
/// (named inference rules or paper arguments), not computations; everything
/// else re-evaluates exactly.
#[derive(Debug, Clone, Serialize)]
#[serde(tag = "step", rename_all = "snake_case")]
pub enum Evidence {
    IdentityVerified { name: String },
    SignFact { name: String, sign: String },
    PositiveValue { name: String, value: String },
    EdgeNonnegative { edge: String },
    ExactFactorization { description: String },
    GridSearchClean { depth: u32, points: usize },
    InferenceRule { name: String },
    Cited { name: String, note: String },
    CoordinateRotation { shifts: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Certified,
    Refuted,
    Indeterminate,
}

#[derive(Debug, Clone, Serialize)]
pub struct PsdOutcome {
    pub verdict: Verdict,
    pub evidence: Vec<Evidence>,
    /// For refutations: an octant point with strictly negative value.
    pub refutation: Option<(Vec<String>, String)>,
    /// For indeterminate outcomes: the step that failed.
    pub failed_step: Option<String>,
}

impl PsdOutcome {
    fn certified(evidence: Vec<Evidence>) -> Self {
        PsdOutcome { verdict: Verdict::Certified, evidence, refutation: None, failed_step: None }
    }

    fn refuted(point: &[Rat; 3], value: &Rat, evidence: Vec<Evidence>) -> Self {
        PsdOutcome {
            verdict: Verdict::Refuted,
            evidence,
            refutation: Some((point.iter().map(rat_to_string).collect(), rat_to_string(value))),
            failed_step: None,
        }
    }

    fn indeterminate(step: &str) -> Self {
        PsdOutcome {
            verdict: Verdict::Indeterminate,
            evidence: vec![],
            refutation: None,
            failed_step: Some(step.to_string()),
        }
    }
}

fn ev_identity(name: impl Into<String>) -> Evidence {
    Evidence::IdentityVerified { name: name.into() }
}

fn ev_positive(name: impl Into<String>, v: &Rat) -> Evidence {
    Evidence::PositiveValue { name: name.into(), value: rat_to_string(v) }
}

/// Certifies or refutes the `G` family member. Membership holds exactly
/// when `p + q <= 1`.
pub fn certify_g(p: &Rat, q: &Rat) -> Result<PsdOutcome, Error> {
    if p.is_negative() || q.is_negative() {
        return Err(Error::InvalidParameters("certify_g needs p, q >= 0".into()));
    }
    let g = make_g_pq(p, q);
    let one = Rat::one();
    let slack = &one - p - q;
    if slack.is_negative() {
        // G(x, x, 1) = (x-1)^2 (1 - 2(p+q-1)x) goes negative past
        // a = 1/(2(p+q-1)); evaluate at the least integer beyond it.
        let a = (rat_int(2) * (p + q - &one)).recip();
        let m = a.floor() + one;
        let point = [m.clone(), m.clone(), Rat::one()];
        let value = g.eval(&point);
        debug_assert!(value.is_negative());
        return Ok(PsdOutcome::refuted(
            &point,
            &value,
            vec![ev_identity("diagonal restriction (x-1)^2 (1 - 2(p+q-1)x)")],
        ));
    }

    let mut evidence = Vec::new();

    if slack.is_zero() {
        // exact square factorization ((1-p)x + py - z)^2 z on the boundary
        let lin = Form::from_terms(
            1,
            [
                (Exp(1, 0, 0), &one - p),
                (Exp(0, 1, 0), p.clone()),
                (Exp(0, 0, 1), -one.clone()),
            ],
        )?;
        let zf = Form::from_terms(1, [(Exp(0, 0, 1), one.clone())])?;
        let rhs = lin.mul(&lin).mul(&zf);
        if g != rhs {
            return Ok(PsdOutcome::indeterminate("boundary square factorization"));
        }
        evidence.push(Evidence::ExactFactorization {
            description: "g = ((1-p)x + py - z)^2 z on the boundary p + q = 1".into(),
        });
        evidence.push(Evidence::InferenceRule { name: "square-times-coordinate-nonnegative".into() });
        return Ok(PsdOutcome::certified(evidence));
    }

    // interior: the two decomposition identities
    // g = (1-p-q) y (x-z) L + (qx + (1-q)y - z)^2 z      (used when x >= z)
    // g = (1-p-q) x (y-z) L + ((1-p)x + py - z)^2 z      (used when y >= z)
    // with L = (1-p+q)x + (1+p-q)y - 2z.
    let lform = Form::from_terms(
        1,
        [
            (Exp(1, 0, 0), &one - p + q),
            (Exp(0, 1, 0), &one + p - q),
            (Exp(0, 0, 1), rat_int(-2)),
        ],
    )?;
    let xf = Form::from_terms(1, [(Exp(1, 0, 0), one.clone())])?;
    let yf = Form::from_terms(1, [(Exp(0, 1, 0), one.clone())])?;
    let zf = Form::from_terms(1, [(Exp(0, 0, 1), one.clone())])?;

    let sq1 = Form::from_terms(
        1,
        [(Exp(1, 0, 0), q.clone()), (Exp(0, 1, 0), &one - q), (Exp(0, 0, 1), -one.clone())],
    )?;
    let rhs1 = yf
        .mul(&xf.sub(&zf)?)
        .mul(&lform)
        .scale(&slack)
        .add(&sq1.mul(&sq1).mul(&zf))?;
    if g != rhs1 {
        return Ok(PsdOutcome::indeterminate("first decomposition identity"));
    }
    evidence.push(ev_identity("g = (1-p-q) y (x-z) L + (qx+(1-q)y-z)^2 z"));

    let sq2 = Form::from_terms(
        1,
        [(Exp(1, 0, 0), &one - p), (Exp(0, 1, 0), p.clone()), (Exp(0, 0, 1), -one.clone())],
    )?;
    let rhs2 = xf
        .mul(&yf.sub(&zf)?)
        .mul(&lform)
        .scale(&slack)
        .add(&sq2.mul(&sq2).mul(&zf))?;
    if g != rhs2 {
        return Ok(PsdOutcome::indeterminate("second decomposition identity"));
    }
    evidence.push(ev_identity("g = (1-p-q) x (y-z) L + ((1-p)x+py-z)^2 z"));

    evidence.push(ev_positive("1 - p - q", &slack));
    // the four-way case split on sign(L) crossed with x >= z / y >= z makes
    // one of the two identities termwise nonnegative at every octant point
    evidence.push(Evidence::InferenceRule { name: "four-way-case-split-on-L".into() });
    Ok(PsdOutcome::certified(evidence))
}

/// Composes a trivariate form with three univariate polynomials.
fn compose_unipoly(f: &Form<Rat>, subs: &[UniPoly; 3]) -> UniPoly {
    let mut acc = UniPoly::zero();
    for (e, c) in f.terms() {
        let mut term = UniPoly::constant(c.clone());
        for (idx, n) in [(0usize, e.0), (1, e.1), (2, e.2)] {
            for _ in 0..n {
                term = term.mul(&subs[idx]);
            }
        }
        acc = acc.add(&term);
    }
    acc
}

/// The rational-curve parametrization data of the `F` family for `r > 0`
/// (or the globally-nonpositive `x` branch when `r = 0`).
struct FCurve {
    x: UniPoly,
    y: UniPoly,
    z: UniPoly,
    t1: Option<Rat>,
    t2: Rat,
}

fn f_curve(p: &Rat, q: &Rat, r: &Rat) -> FCurve {
    let one = Rat::one();
    let kx = (p * p * q * q * r * r + &one) * a1(q, r)
        + rat_int(2) * q * r * a1(r, p)
        + rat_int(2) * p * q * r * r * a1(p, q);
    let ky = (p * p * q * q * r * r + &one) * a1(r, p)
        + rat_int(2) * p * r * a1(p, q)
        + rat_int(2) * p * p * q * r * a1(q, r);
    // x(t) = a1(q,r) (t + p - 1)^2 (r^2 a1(p,q) a2(q,r,p) t - kx)
    let lin_x = UniPoly::new(vec![p - &one, one.clone()]);
    let slope_x = r * r * a1(p, q) * a2(q, r, p);
    let x = lin_x
        .mul(&lin_x)
        .mul(&UniPoly::new(vec![-kx.clone(), slope_x.clone()]))
        .scale(&a1(q, r));
    // y(t) = a1(r,p) ((1-q) t + q)^2 (-ky t + a1(p,q) a2(p,q,r))
    let lin_y = UniPoly::new(vec![q.clone(), &one - q]);
    let y = lin_y
        .mul(&lin_y)
        .mul(&UniPoly::new(vec![a1(p, q) * a2(p, q, r), -ky.clone()]))
        .scale(&a1(r, p));
    // z(t) = (r t - 1)^2 a1(p,q) (a1(q,r) a2(q,r,p) t + q^2 a1(r,p) a2(p,q,r))
    let lin_z = UniPoly::new(vec![-one.clone(), r.clone()]);
    let z = lin_z
        .mul(&lin_z)
        .mul(&UniPoly::new(vec![q * q * a1(r, p) * a2(p, q, r), a1(q, r) * a2(q, r, p)]))
        .scale(&a1(p, q));
    let t1 = if slope_x.is_zero() { None } else { Some(&kx / &slope_x) };
    let t2 = a1(p, q) * a2(p, q, r) / &ky;
    FCurve { x, y, z, t1, t2 }
}

/// Certifies or refutes the `F` family member. Membership holds exactly
/// when all three guards `a1(p,q), a1(q,r), a1(r,p)` are nonnegative.
pub fn certify_f(p: &Rat, q: &Rat, r: &Rat) -> Result<PsdOutcome, Error> {
    if p.is_negative() || q.is_negative() || r.is_negative() {
        return Err(Error::InvalidParameters("certify_f needs p, q, r >= 0".into()));
    }
    let f = make_f_pqr(p, q, r);
    let guards = [a1(p, q), a1(q, r), a1(r, p)];

    if guards.iter().any(|g| g.is_negative()) {
        // some vertex value is strictly negative
        for point in [
            [Rat::one(), Rat::zero(), Rat::zero()],
            [Rat::zero(), Rat::one(), Rat::zero()],
            [Rat::zero(), Rat::zero(), Rat::one()],
        ] {
            let v = f.eval(&point);
            if v.is_negative() {
                return Ok(PsdOutcome::refuted(
                    &point,
                    &v,
                    vec![ev_identity("vertex value c1 = q^2 a1(p,q) a1(r,p) a2(p,q,r)")],
                ));
            }
        }
        return Ok(PsdOutcome::indeterminate("negative guard without negative vertex"));
    }

    if guards.iter().any(|g| g.is_zero()) {
        return certify_f_degenerate(p, q, r, &f);
    }

    // rotate so the third parameter is positive, when any parameter is
    let mut params = [p.clone(), q.clone(), r.clone()];
    let mut shifts = 0u32;
    while shifts < 2 && params[2].is_zero() && params.iter().any(|v| v.is_positive()) {
        params.rotate_left(1);
        shifts += 1;
    }
    let (p, q, r) = (&params[0].clone(), &params[1].clone(), &params[2].clone());
    let f_rot = make_f_pqr(p, q, r);

    let mut evidence = Vec::new();
    if shifts > 0 {
        evidence.push(Evidence::CoordinateRotation { shifts });
        evidence.push(Evidence::InferenceRule { name: "psd-invariant-under-octant-symmetry".into() });
    }
    for (name, v) in [("a1(p,q)", a1(p, q)), ("a1(q,r)", a1(q, r)), ("a1(r,p)", a1(r, p))] {
        evidence.push(ev_positive(name, &v));
    }

    let curve = f_curve(p, q, r);
    // (i) exact curve identity and pencil-line membership
    let composed = compose_unipoly(&f_rot, &[curve.x.clone(), curve.y.clone(), curve.z.clone()]);
    if !composed.is_zero() {
        return Ok(PsdOutcome::indeterminate("curve identity"));
    }
    evidence.push(ev_identity("f(x(t), y(t), z(t)) = 0"));
    let t_poly = UniPoly::new(vec![Rat::zero(), Rat::one()]);
    let line = curve.y.sub(&curve.z).sub(&t_poly.mul(&curve.x.sub(&curve.z)));
    if !line.is_zero() {
        return Ok(PsdOutcome::indeterminate("pencil line membership"));
    }
    evidence.push(ev_identity("y(t) - z(t) = t (x(t) - z(t))"));

    // (ii) t <= 0: x <= 0, y >= 0
    let neg_ray = Interval::ray_to(Rat::zero(), true);
    if sign_on_interval(&curve.x, &neg_ray)? != IntervalSign::Negative {
        return Ok(PsdOutcome::indeterminate("x sign on t <= 0"));
    }
    if sign_on_interval(&curve.y, &neg_ray)? != IntervalSign::Positive {
        return Ok(PsdOutcome::indeterminate("y sign on t <= 0"));
    }
    evidence.push(Evidence::SignFact { name: "x(t) on t <= 0".into(), sign: "<= 0".into() });
    evidence.push(Evidence::SignFact { name: "y(t) on t <= 0".into(), sign: ">= 0".into() });

    // (iii) t > 0: either x <= 0 globally (r = 0) or the two thresholds
    match &curve.t1 {
        None => {
            if sign_on_interval(&curve.x, &Interval::all())? != IntervalSign::Negative {
                return Ok(PsdOutcome::indeterminate("x sign with constant branch"));
            }
            evidence.push(Evidence::SignFact { name: "x(t) on all t".into(), sign: "<= 0".into() });
        }
        Some(t1) => {
            let t2 = &curve.t2;
            if !t2.is_positive() {
                return Ok(PsdOutcome::indeterminate("t2 > 0"));
            }
            let diff = t1 - t2;
            if !diff.is_positive() {
                return Ok(PsdOutcome::indeterminate("t1 > t2"));
            }
            evidence.push(ev_positive("t2", t2));
            evidence.push(ev_positive("t1 - t2", &diff));
            // the displayed factorization of t1 - t2, with the square that
            // the printed form omits
            let s = a1(r, p) + p * r * a1(p, q) + p * p * q * r * a1(q, r);
            let ky = (p * p * q * q * r * r + Rat::one()) * a1(r, p)
                + rat_int(2) * p * r * a1(p, q)
                + rat_int(2) * p * p * q * r * a1(q, r);
            let display = a2(r, p, q) * &s * &s / (r * r * a1(p, q) * a2(q, r, p) * ky);
            if display != diff {
                return Ok(PsdOutcome::indeterminate("t1 - t2 display"));
            }
            evidence.push(ev_identity("t1 - t2 = a2(r,p,q) (a1(r,p) + pr a1(p,q) + p^2qr a1(q,r))^2 / (r^2 a1(p,q) a2(q,r,p) K_y)"));
            // sign pattern on (0, t1], [t1, inf), (0, t2], [t2, inf)
            let checks: [(&UniPoly, Interval, IntervalSign, &str); 5] = [
                (&curve.z, Interval::ray_from(Rat::zero(), true), IntervalSign::Positive, "z(t) on t >= 0"),
                (&curve.x, Interval::closed(Rat::zero(), t1.clone()), IntervalSign::Negative, "x(t) on [0, t1]"),
                (&curve.x, Interval::ray_from(t1.clone(), true), IntervalSign::Positive, "x(t) on [t1, inf)"),
                (&curve.y, Interval::closed(Rat::zero(), t2.clone()), IntervalSign::Positive, "y(t) on [0, t2]"),
                (&curve.y, Interval::ray_from(t2.clone(), true), IntervalSign::Negative, "y(t) on [t2, inf)"),
            ];
            for (poly, interval, expect, name) in checks {
                if sign_on_interval(poly, &interval)? != expect {
                    return Ok(PsdOutcome::indeterminate(name));
                }
                evidence.push(Evidence::SignFact {
                    name: name.into(),
                    sign: if expect == IntervalSign::Positive { ">= 0" } else { "<= 0" }.into(),
                });
            }
        }
    }

    // (iv) edge restrictions nonnegative on the closed ranges
    check_edges_nonneg(&f_rot, &mut evidence)?;

    // (v) interior positivity off the node
    let sample = [rat_int(2), Rat::one(), Rat::one()];
    let v = f_rot.eval(&sample);
    if !v.is_positive() {
        return Ok(PsdOutcome::indeterminate("interior sample"));
    }
    evidence.push(ev_positive("f(2,1,1)", &v));
    evidence.push(Evidence::InferenceRule { name: "interior-sign-constancy".into() });
    Ok(PsdOutcome::certified(evidence))
}

/// Boundary parameters with a vanishing guard: the member factors exactly
/// as a nonnegative multiple of z (linear)^2 after rotating the vanishing
/// guard to the front, which is a complete certificate.
fn certify_f_degenerate(p: &Rat, q: &Rat, r: &Rat, _f: &Form<Rat>) -> Result<PsdOutcome, Error> {
    let mut params = [p.clone(), q.clone(), r.clone()];
    let mut shifts = 0u32;
    while shifts < 3 && !a1(&params[0], &params[1]).is_zero() {
        params.rotate_left(1);
        shifts += 1;
    }
    let (p, q, r) = (&params[0].clone(), &params[1].clone(), &params[2].clone());
    debug_assert!(a1(p, q).is_zero());
    let f_rot = make_f_pqr(p, q, r);
    let one = Rat::one();
    // a1(p,q) = 0 forces p >= 1, so the scale below is defined and positive
    let lin = Form::from_terms(
        1,
        [
            (Exp(1, 0, 0), p - &one),
            (Exp(0, 1, 0), one.clone()),
            (Exp(0, 0, 1), -p.clone()),
        ],
    )?;
    let zf = Form::from_terms(1, [(Exp(0, 0, 1), one.clone())])?;
    let c = (&one + (p - &one) * r).pow(4) / (p * p);
    let rhs = zf.mul(&lin).mul(&lin).scale(&c);
    let mut evidence = Vec::new();
    if shifts > 0 {
        evidence.push(Evidence::CoordinateRotation { shifts });
        evidence.push(Evidence::InferenceRule { name: "psd-invariant-under-octant-symmetry".into() });
    }
    if f_rot != rhs {
        return Ok(PsdOutcome::indeterminate("degenerate factorization"));
    }
    evidence.push(Evidence::ExactFactorization {
        description: "f = (1 + (p-1)r)^4 z ((p-1)x + y - pz)^2 / p^2 on the guard boundary".into(),
    });
    evidence.push(ev_positive("scale (1 + (p-1)r)^4 / p^2", &c));
    evidence.push(Evidence::InferenceRule { name: "square-times-coordinate-nonnegative".into() });
    Ok(PsdOutcome::certified(evidence))
}

/// Certifies the cusp family member (always a member for `p, q >= 0`,
/// `(p,q) != (0,0)`).
pub fn certify_h(p: &Rat, q: &Rat) -> Result<PsdOutcome, Error> {
    if p.is_negative() || q.is_negative() || (p.is_zero() && q.is_zero()) {
        return Err(Error::InvalidParameters(
            "certify_h needs p, q >= 0 with (p, q) != (0, 0)".into(),
        ));
    }
    let h = make_h_pq(p, q)?;
    let mut evidence = Vec::new();

    // (i) cleared-denominator curve identity:
    // h(-t^2 (p+q)^3, (pt-1)^2 ((p+3q)t+2), -(qt+1)^2 ((3p+q)t-2)) = 0
    let one = Rat::one();
    let nx = UniPoly::new(vec![Rat::zero(), Rat::zero(), -(p + q).pow(3)]);
    let lin_d1 = UniPoly::new(vec![-one.clone(), p.clone()]);
    let lin_d2 = UniPoly::new(vec![rat_int(2), p + rat_int(3) * q]);
    let d = lin_d1.mul(&lin_d1).mul(&lin_d2);
    let lin_n1 = UniPoly::new(vec![one.clone(), q.clone()]);
    let lin_n2 = UniPoly::new(vec![rat_int(-2), rat_int(3) * p + q]);
    let nz = lin_n1.mul(&lin_n1).mul(&lin_n2).scale(&rat_int(-1));
    let composed = compose_unipoly(&h, &[nx.clone(), d.clone(), nz.clone()]);
    if !composed.is_zero() {
        return Ok(PsdOutcome::indeterminate("cleared curve identity"));
    }
    evidence.push(ev_identity("h(x(t), 1, z(t)) = 0 after clearing denominators"));

    // (ii) the open octant is excluded: x(t) > 0 and z(t) > 0 never hold
    // together. x = nx/d with nx <= 0 always, so x > 0 forces d < 0;
    // z = nz/d > 0 with d < 0 forces nz < 0. Check each subinterval cut by
    // the rational critical points (the statement's y-conclusion is a slip
    // for z, recorded here as the checked form).
    let mut cuts: Vec<Rat> = Vec::new();
    if p.is_positive() {
        cuts.push(p.recip());
    }
    if q.is_positive() {
        cuts.push(-q.recip());
    }
    cuts.push(-rat_int(2) / (p + rat_int(3) * q));
    cuts.push(rat_int(2) / (rat_int(3) * p + q));
    cuts.sort();
    cuts.dedup();
    let mut intervals: Vec<Interval> = Vec::new();
    intervals.push(Interval::ray_to(cuts[0].clone(), false));
    for w in cuts.windows(2) {
        intervals.push(Interval::open(w[0].clone(), w[1].clone()));
    }
    intervals.push(Interval::ray_from(cuts[cuts.len() - 1].clone(), false));
    let big = d
        .cauchy_bound()
        .max(nz.cauchy_bound())
        .max(cuts.iter().fold(Rat::one(), |m, c| m.max(c.abs() + Rat::one())));
    for interval in &intervals {
        // constant signs inside each subinterval (roots are only at cuts)
        let sd = sign_on_interval(&d, interval)?;
        let sz = sign_on_interval(&nz, interval)?;
        if sd == IntervalSign::Mixed || sz == IntervalSign::Mixed {
            return Ok(PsdOutcome::indeterminate("subinterval sign constancy"));
        }
        if sd == IntervalSign::Negative && sz == IntervalSign::Negative {
            return Ok(PsdOutcome::indeterminate("octant exclusion on a subinterval"));
        }
        // exact sample confirming the pair
        let sample = interval.interior_sample(&big).expect("nonempty open interval");
        let dv = d.eval(&sample);
        let nzv = nz.eval(&sample);
        if dv.is_negative() && nzv.is_negative() {
            return Ok(PsdOutcome::indeterminate("octant exclusion sample"));
        }
    }
    evidence.push(Evidence::SignFact {
        name: "x(t) > 0 and z(t) > 0 never hold together (the published claim names y; the parametrization fixes y = 1, so the content is the z-conclusion)".into(),
        sign: "excluded".into(),
    });

    // (iii) edge restrictions nonnegative
    check_edges_nonneg(&h, &mut evidence)?;

    // (iv) interior sample: h(1,1,1) = 2 under the kernel normalization
    let v = h.eval(&[Rat::one(), Rat::one(), Rat::one()]);
    if !v.is_positive() {
        return Ok(PsdOutcome::indeterminate("interior sample"));
    }
    evidence.push(ev_positive("h(1,1,1)", &v));
    evidence.push(Evidence::InferenceRule { name: "interior-sign-constancy".into() });
    Ok(PsdOutcome::certified(evidence))
}

/// Verifies the three closed-edge restrictions are nonnegative (strictly
/// positive except finitely many even-order touch points).
fn check_edges_nonneg(f: &Form<Rat>, evidence: &mut Vec<Evidence>) -> Result<(), Error> {
    for (name, i0, i1) in [("x = 0", 1usize, 2usize), ("y = 0", 0, 2), ("z = 0", 0, 1)] {
        let b = f.restrict_line(&crate::geometry::unit_point(i0), &crate::geometry::unit_point(i1))?;
        if b.is_zero() {
            evidence.push(Evidence::EdgeNonnegative { edge: format!("{name} (identically zero)") });
            continue;
        }
        // value at the far endpoint (1 : 0) is the leading coefficient
        if b.coeff(0).is_negative() {
            return Err(Error::ConditionKindMismatch(format!("edge {name} negative at endpoint")));
        }
        let poly = b.dehomogenize();
        if !poly.is_zero() {
            let s = sign_on_interval(&poly, &Interval::ray_from(Rat::zero(), true))?;
            if s != IntervalSign::Positive {
                return Err(Error::ConditionKindMismatch(format!("edge {name} not nonnegative")));
            }
        }
        evidence.push(Evidence::EdgeNonnegative { edge: name.into() });
    }
    Ok(())
}

/// Exhaustive exact evaluation over the simplex grid `(i/n, j/n, k/n)`,
/// `i + j + k = n = 3 * 2^depth`. Returns the most negative hit.
pub fn refute_by_grid(f: &Form<Rat>, depth: u32) -> Option<([Rat; 3], Rat)> {
    assert!(depth >= 1);
    let n: i64 = 3 * (1i64 << depth);
    let nr = rat_int(n);
    let mut best: Option<([Rat; 3], Rat)> = None;
    for i in 0..=n {
        for j in 0..=(n - i) {
            let k = n - i - j;
            let point = [rat_int(i) / &nr, rat_int(j) / &nr, rat_int(k) / &nr];
            let v = f.eval(&point);
            if v.is_negative() {
                let better = match &best {
                    None => true,
                    Some((_, bv)) => &v < bv,
                };
                if better {
                    best = Some((point, v));
                }
            }
        }
    }
    best
}

/// Extremal reducible cases: a coordinate times the square of a line whose
/// zero set meets the octant in a segment, or the coordinate monomial.
#[derive(Debug, Clone, Serialize)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum ReducibleExtremal {
    /// `alpha * v * (ax + by + cz)^2` with the segment condition.
    EdgeSquare { coordinate: char, line: Vec<String>, alpha: String },
    /// `alpha * xyz`.
    Monomial { alpha: String },
    NotExtremal { reason: String },
}

/// Decides whether a reducible cubic is one of the two extremal reducible
/// shapes.
pub fn check_reducible_extremal(f: &Form<Rat>) -> ReducibleExtremal {
    // alpha * xyz?
    let xyz = crate::families::monomial_xyz();
    if let Some(alpha) = f.proportionality(&xyz) {
        if alpha.is_positive() {
            return ReducibleExtremal::Monomial { alpha: rat_to_string(&alpha) };
        }
        return ReducibleExtremal::NotExtremal { reason: "negative multiple of xyz".into() };
    }
    // v * (line)^2 for a coordinate v
    for (name, e) in [('x', Exp(1, 0, 0)), ('y', Exp(0, 1, 0)), ('z', Exp(0, 0, 1))] {
        let vform = Form::from_terms(1, [(e, Rat::one())]).unwrap();
        let Some(quad) = f.div_exact(&vform) else { continue };
        let Some((alpha, line)) = square_of_linear(&quad) else { continue };
        if !alpha.is_positive() {
            continue;
        }
        let coeffs = [line.coeff(Exp(1, 0, 0)), line.coeff(Exp(0, 1, 0)), line.coeff(Exp(0, 0, 1))];
        if !line_meets_octant_in_segment(&coeffs) {
            return ReducibleExtremal::NotExtremal {
                reason: "square factor line meets the octant in at most a point".into(),
            };
        }
        return ReducibleExtremal::EdgeSquare {
            coordinate: name,
            line: coeffs.iter().map(rat_to_string).collect(),
            alpha: rat_to_string(&alpha),
        };
    }
    ReducibleExtremal::NotExtremal {
        reason: "not a coordinate times a squared line and not the monomial".into(),
    }
}

/// Writes a ternary quadratic as `alpha * L^2` when possible.
pub fn square_of_linear(q: &Form<Rat>) -> Option<(Rat, Form<Rat>)> {
    if q.degree() != 2 || q.is_zero() {
        return None;
    }
    // symmetric matrix of the quadratic
    let m = |i: usize, j: usize| -> Rat {
        let mut e = [0u32; 3];
        e[i] += 1;
        e[j] += 1;
        let c = q.coeff(Exp(e[0], e[1], e[2]));
        if i == j {
            c
        } else {
            c / rat_int(2)
        }
    };
    // rank-one test: all 2x2 minors vanish
    for i in 0..3 {
        for j in i..3 {
            for k in 0..3 {
                for l in k..3 {
                    let minor = m(i, k) * m(j, l) - m(i, l) * m(j, k);
                    if !minor.is_zero() {
                        return None;
                    }
                }
            }
        }
    }
    let ii = (0..3).find(|&i| !m(i, i).is_zero())?;
    let alpha = m(ii, ii);
    // L = row ii / m(ii,ii), scaled so L has coefficient 1 at slot ii
    let line = Form::from_terms(
        2 - 1,
        [
            (Exp(1, 0, 0), m(ii, 0) / &alpha),
            (Exp(0, 1, 0), m(ii, 1) / &alpha),
            (Exp(0, 0, 1), m(ii, 2) / &alpha),
        ],
    )
    .ok()?;
    // q = alpha * line^2 exactly
    (q == &line.mul(&line).scale(&alpha)).then_some((alpha, line))
}

/// `dim(V(ax + by + cz) octant) = 1`: the zero line contains a segment of
/// the octant. True iff the nonzero coefficients have mixed signs, or the
/// line is a coordinate line.
pub fn line_meets_octant_in_segment(c: &[Rat; 3]) -> bool {
    let pos = c.iter().filter(|v| v.is_positive()).count();
    let neg = c.iter().filter(|v| v.is_negative()).count();
    let nonzero = pos + neg;
    (pos > 0 && neg > 0) || nonzero == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use crate::test_support::SeededRats;

    #[test]
    fn g_region_boundaries() {
        let out = certify_g(&rat(1, 4), &rat(1, 4)).unwrap();
        assert_eq!(out.verdict, Verdict::Certified);
        let out = certify_g(&rat(3, 5), &rat(3, 5)).unwrap();
        assert_eq!(out.verdict, Verdict::Refuted);
        let (point, value) = out.refutation.unwrap();
        assert_eq!(point, vec!["3", "3", "1"]);
        assert_eq!(value, "-4/5");
        let out = certify_g(&rat(1, 2), &rat(1, 2)).unwrap();
        assert_eq!(out.verdict, Verdict::Certified);
        assert!(out
            .evidence
            .iter()
            .any(|e| matches!(e, Evidence::ExactFactorization { .. })));
    }

    #[test]
    fn f_certificates() {
        let one = Rat::one();
        let out = certify_f(&one, &one, &one).unwrap();
        assert_eq!(out.verdict, Verdict::Certified);
        // vertex refutation: a1(3, 1/4) = 3/4 - 3 + 1 < 0
        let out = certify_f(&rat_int(3), &rat(1, 4), &one).unwrap();
        assert_eq!(out.verdict, Verdict::Refuted);
        let f = make_f_pqr(&rat_int(3), &rat(1, 4), &one);
        let (point, value) = out.refutation.unwrap();
        let coords: Vec<Rat> = point.iter().map(|s| crate::scalar::parse_rat(s).unwrap()).collect();
        assert_eq!(f.eval(&[coords[0].clone(), coords[1].clone(), coords[2].clone()]), crate::scalar::parse_rat(&value).unwrap());
        assert!(crate::scalar::parse_rat(&value).unwrap().is_negative());
        // boundary path at the all-zero tuple
        let out = certify_f(&Rat::zero(), &Rat::zero(), &Rat::zero()).unwrap();
        assert_eq!(out.verdict, Verdict::Certified);
        // a vanishing guard: p = 2, q = 1/2 gives a1 = 0
        let out = certify_f(&rat_int(2), &rat(1, 2), &rat(1, 3)).unwrap();
        assert_eq!(out.verdict, Verdict::Certified);
        assert!(out
            .evidence
            .iter()
            .any(|e| matches!(e, Evidence::ExactFactorization { .. })));
        // zero parameter but interior guards: rotation path
        let out = certify_f(&rat(1, 2), &rat(1, 3), &Rat::zero()).unwrap();
        assert_eq!(out.verdict, Verdict::Certified);
    }

    #[test]
    fn h_certificates() {
        let out = certify_h(&Rat::one(), &Rat::one()).unwrap();
        assert_eq!(out.verdict, Verdict::Certified);
        assert!(out.evidence.iter().any(|e| matches!(
            e,
            Evidence::PositiveValue { name, .. } if name == "h(1,1,1)"
        )));
        // degenerate critical-point set at q = 0
        let out = certify_h(&rat_int(2), &Rat::zero()).unwrap();
        assert_eq!(out.verdict, Verdict::Certified);
        let out = certify_h(&Rat::zero(), &rat(3, 2)).unwrap();
        assert_eq!(out.verdict, Verdict::Certified);
        assert!(certify_h(&Rat::zero(), &Rat::zero()).is_err());
    }

    #[test]
    fn grid_refutation() {
        let g = make_g_pq(&rat(3, 5), &rat(3, 5));
        let hit = refute_by_grid(&g, 3);
        assert!(hit.is_some());
        let (pt, v) = hit.unwrap();
        assert!(v.is_negative());
        assert_eq!(g.eval(&pt), v);
        assert!(refute_by_grid(&crate::families::monomial_xyz(), 2).is_none());
        assert!(refute_by_grid(&crate::families::schur_f1(), 4).is_none());
    }

    #[test]
    fn reducible_cases() {
        // x (x + y - z)^2 -> edge square
        let xf = Form::from_terms(1, [(Exp(1, 0, 0), rat_int(1))]).unwrap();
        let lin = Form::from_terms(
            1,
            [
                (Exp(1, 0, 0), rat_int(1)),
                (Exp(0, 1, 0), rat_int(1)),
                (Exp(0, 0, 1), rat_int(-1)),
            ],
        )
        .unwrap();
        let f = xf.mul(&lin).mul(&lin);
        assert!(matches!(check_reducible_extremal(&f), ReducibleExtremal::EdgeSquare { coordinate: 'x', .. }));
        // xyz -> monomial
        let f = crate::families::monomial_xyz().scale(&rat_int(5));
        assert!(matches!(check_reducible_extremal(&f), ReducibleExtremal::Monomial { .. }));
        // x (x + y + z)^2: line misses the open octant
        let lin = Form::from_terms(
            1,
            [
                (Exp(1, 0, 0), rat_int(1)),
                (Exp(0, 1, 0), rat_int(1)),
                (Exp(0, 0, 1), rat_int(1)),
            ],
        )
        .unwrap();
        let f = xf.mul(&lin).mul(&lin);
        assert!(matches!(check_reducible_extremal(&f), ReducibleExtremal::NotExtremal { .. }));
        // x^3 = x * x^2 is an edge square with the coordinate line
        let f = Form::from_terms(3, [(Exp(3, 0, 0), rat_int(1))]).unwrap();
        assert!(matches!(check_reducible_extremal(&f), ReducibleExtremal::EdgeSquare { .. }));
    }

    #[test]
    fn cross_oracle_consistency() {
        let mut gen = SeededRats::new(31);
        for _ in 0..10 {
            let (p, q) = gen.g_params_interior();
            assert_eq!(certify_g(&p, &q).unwrap().verdict, Verdict::Certified);
            let g = make_g_pq(&p, &q);
            assert!(refute_by_grid(&g, 3).is_none());
        }
        for _ in 0..10 {
            let (p, q, r) = gen.f_params_interior();
            assert_eq!(certify_f(&p, &q, &r).unwrap().verdict, Verdict::Certified);
        }
        for _ in 0..10 {
            let (p, q) = gen.h_params_interior();
            assert_eq!(certify_h(&p, &q).unwrap().verdict, Verdict::Certified);
        }
    }
}
