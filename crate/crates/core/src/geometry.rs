//! Plane-cubic geometry over the rationals: singular point location and
//! classification, boundary zeros on the octant with their contact data,
//! intersection multiplicities, rational linear factors, and the weighted
//! zero count `N(f)` that governs extremality of square-substitution lifts.

use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::poly::{BinaryForm, Exp, Form, ProjPoint, Var};
use crate::scalar::Rat;
use crate::unipoly::{rational_roots_in, sign, Interval, UniPoly};

/// Kind of a double point, from the discriminant of the quadratic jet.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SingKind {
    /// Negative jet discriminant: conjugate non-real tangents, isolated
    /// real point.
    Acnode,
    /// Positive discriminant: two real tangents.
    Crunode,
    /// Zero discriminant with nonzero jet: one repeated tangent.
    Cusp,
    /// Identically zero quadratic jet (triple point or worse).
    Degenerate,
}

#[derive(Debug, Clone)]
pub struct SingularityReport {
    pub point: ProjPoint<Rat>,
    pub kind: SingKind,
    /// Discriminant `b^2 - ac` of the quadratic jet in the chart of the
    /// largest coordinate.
    pub jet_discriminant: Rat,
    /// Repeated tangent direction for cusps, as a direction vector in the
    /// plane (used by lift verification).
    pub cusp_tangent: Option<[Rat; 3]>,
}

/// An irrational singular-point candidate: a common-solution locus that
/// could not be resolved to a rational point. Reported with isolating data
/// and no classification.
#[derive(Debug, Clone)]
pub struct IrrationalCandidate {
    /// Which variable was eliminated to produce the candidate ratio.
    pub eliminated: Var,
    /// Isolating interval for the remaining coordinate ratio.
    pub lo: Rat,
    pub hi: Rat,
}

#[derive(Debug, Clone)]
pub struct SingularSearch {
    pub rational: Vec<SingularityReport>,
    pub irrational: Vec<IrrationalCandidate>,
    /// Set when the form has a repeated factor, i.e. a whole singular curve.
    pub identically_singular: bool,
}

/// Locates all rational singular points of a cubic: common projective zeros
/// of the three partials, found by pairwise resultants, rational root
/// extraction and exact back-substitution. Non-rational candidates are
/// reported with isolating boxes and left unclassified.
pub fn find_singular_points(f: &Form<Rat>) -> Result<SingularSearch, Error> {
    assert!(!f.is_zero(), "singular points of the zero form");
    assert_eq!(f.degree(), 3);

    // A cubic with a repeated factor is singular along a curve; the
    // repeated factor of a cubic is necessarily linear.
    if let Some((lin, rest)) = linear_factor(f) {
        if rest.div_exact(&lin).is_some() {
            return Ok(SingularSearch {
                rational: vec![],
                irrational: vec![],
                identically_singular: true,
            });
        }
    }

    let fx = f.partial(Var::X, 1);
    let fy = f.partial(Var::Y, 1);
    let fz = f.partial(Var::Z, 1);

    let mut rational = Vec::new();
    let mut irrational = Vec::new();
    let mut seen: Vec<ProjPoint<Rat>> = Vec::new();

    // Candidate ratios in the two kept variables from eliminating one
    // variable out of the pairwise resultants; their gcd keeps exactly the
    // ratios common to all three partials.
    let mut resolved = false;
    for eliminated in [Var::X, Var::Z] {
        let r1 = resultant_wrt(&fx, &fy, eliminated);
        let r2 = resultant_wrt(&fx, &fz, eliminated);
        let r3 = resultant_wrt(&fy, &fz, eliminated);
        if let Some(g) = gcd3(&r1, &r2, &r3) {
            collect_from_ratio_poly(f, &g, eliminated, &mut rational, &mut irrational, &mut seen)?;
            resolved = true;
            break;
        }
    }
    if !resolved {
        // every pairwise resultant vanished in both eliminations: the
        // partials share a common factor, so the curve is singular along it
        return Ok(SingularSearch { rational: vec![], irrational: vec![], identically_singular: true });
    }

    // the elimination misses only points where both kept coordinates are
    // zero; check the three vertices directly
    for i in 0..3 {
        push_if_singular(f, unit_point(i), &mut rational, &mut seen);
    }

    Ok(SingularSearch { rational, irrational, identically_singular: false })
}

/// Extracts singular points from the binary form of candidate ratios in
/// the two variables other than `eliminated`.
fn collect_from_ratio_poly(
    f: &Form<Rat>,
    ratio_poly: &BinaryForm<Rat>,
    eliminated: Var,
    rational: &mut Vec<SingularityReport>,
    irrational: &mut Vec<IrrationalCandidate>,
    seen: &mut Vec<ProjPoint<Rat>>,
) -> Result<(), Error> {
    let (uv, vv) = kept_vars(eliminated);
    let poly = ratio_poly.dehomogenize();
    if !poly.is_zero() {
        let (roots, irr) =
            rational_roots_in(&poly, &Interval::all(), &crate::unipoly::default_height_cap())?;
        for (t, _) in roots {
            for pt in candidate_points_on_ray(f, eliminated, uv, vv, &Rat::one(), &t)? {
                push_if_singular(f, pt, rational, seen);
            }
        }
        for r in irr {
            irrational.push(IrrationalCandidate { eliminated, lo: r.lo, hi: r.hi });
        }
    }
    // the ratio (0 : 1) is the root "at infinity" of the dehomogenization
    if ratio_poly.vanishing_order_at(&Rat::zero(), &Rat::one()) > 0 {
        for pt in candidate_points_on_ray(f, eliminated, uv, vv, &Rat::zero(), &Rat::one())? {
            push_if_singular(f, pt, rational, seen);
        }
    }
    Ok(())
}

/// The two variables other than `v`, in index order.
fn kept_vars(v: Var) -> (Var, Var) {
    match v {
        Var::X => (Var::Y, Var::Z),
        Var::Y => (Var::X, Var::Z),
        Var::Z => (Var::X, Var::Y),
    }
}

/// Rational points with the kept coordinates pinned to `(u0, v0)` at which
/// all three partials share a rational root in the eliminated coordinate.
fn candidate_points_on_ray(
    f: &Form<Rat>,
    eliminated: Var,
    uv: Var,
    vv: Var,
    u0: &Rat,
    v0: &Rat,
) -> Result<Vec<ProjPoint<Rat>>, Error> {
    let restrict = |g: &Form<Rat>| -> UniPoly {
        let mut coeffs = vec![Rat::zero(); g.degree() as usize + 1];
        for (e, c) in g.terms() {
            let te = e.get(eliminated) as usize;
            let mut term = c.clone();
            for _ in 0..e.get(uv) {
                term *= u0;
            }
            for _ in 0..e.get(vv) {
                term *= v0;
            }
            coeffs[te] += term;
        }
        UniPoly::new(coeffs)
    };
    let px = restrict(&f.partial(Var::X, 1));
    let py = restrict(&f.partial(Var::Y, 1));
    let pz = restrict(&f.partial(Var::Z, 1));
    let mut g = px.gcd(&py).gcd(&pz);
    let mut out = Vec::new();
    if g.is_zero() {
        g = restrict(f);
        if g.is_zero() {
            return Ok(out);
        }
    }
    let (roots, _irr) = rational_roots_in(&g, &Interval::all(), &crate::unipoly::default_height_cap())?;
    for (s, _) in roots {
        let mut coords = [Rat::zero(), Rat::zero(), Rat::zero()];
        coords[eliminated.index()] = s;
        coords[uv.index()] = u0.clone();
        coords[vv.index()] = v0.clone();
        if coords.iter().all(|c| c.is_zero()) {
            continue;
        }
        out.push(ProjPoint::new(coords)?);
    }
    Ok(out)
}

fn push_if_singular(
    f: &Form<Rat>,
    p: ProjPoint<Rat>,
    rational: &mut Vec<SingularityReport>,
    seen: &mut Vec<ProjPoint<Rat>>,
) {
    let grad_zero = f.partial_eval((1, 0, 0), &p.coords).is_zero()
        && f.partial_eval((0, 1, 0), &p.coords).is_zero()
        && f.partial_eval((0, 0, 1), &p.coords).is_zero();
    if !grad_zero {
        return;
    }
    if seen.iter().any(|q| q.proj_eq(&p)) {
        return;
    }
    seen.push(p.clone());
    let report = classify_singularity(f, &p).expect("gradient vanishes at candidate");
    rational.push(report);
}

/// Classifies a singular point from the discriminant of its quadratic jet,
/// computed in the affine chart of the largest-magnitude coordinate (the
/// discriminant sign is chart-independent).
pub fn classify_singularity(f: &Form<Rat>, p: &ProjPoint<Rat>) -> Result<SingularityReport, Error> {
    if !f.eval(&p.coords).is_zero() {
        return Err(Error::ConditionKindMismatch("point is not on the curve".into()));
    }
    for v in [(1, 0, 0), (0, 1, 0), (0, 0, 1)] {
        if !f.partial_eval(v, &p.coords).is_zero() {
            return Err(Error::ConditionKindMismatch("point is not singular".into()));
        }
    }
    let mags: Vec<Rat> = p.coords.iter().map(|c| c.abs()).collect();
    let mut chart = 0;
    for i in 1..3 {
        if mags[i] > mags[chart] {
            chart = i;
        }
    }
    let (u, v) = match chart {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    };
    let d2 = |i: usize, j: usize| -> Rat {
        let mut alpha = [0u32; 3];
        alpha[i] += 1;
        alpha[j] += 1;
        f.partial_eval((alpha[0], alpha[1], alpha[2]), &p.coords)
    };
    let a = d2(u, u);
    let b = d2(u, v);
    let c = d2(v, v);
    let disc = &b * &b - &a * &c;
    let mut kind = match sign(&disc) {
        0 if a.is_zero() && b.is_zero() && c.is_zero() => SingKind::Degenerate,
        0 => SingKind::Cusp,
        1 => SingKind::Crunode,
        _ => SingKind::Acnode,
    };
    // repeated tangent of a cusp candidate: the jet is a rank-one square,
    // vanishing along one direction of the (u, v) chart plane
    let mut cusp_tangent = if kind == SingKind::Cusp {
        let (du, dv) = if !a.is_zero() || !b.is_zero() {
            (-b.clone(), a.clone())
        } else {
            (-c.clone(), b.clone())
        };
        let mut dir = [Rat::zero(), Rat::zero(), Rat::zero()];
        dir[u] = du;
        dir[v] = dv;
        Some(dir)
    } else {
        None
    };
    // A genuine cusp meets its tangent line with finite contact; a point on
    // a repeated linear component has the whole tangent inside the curve.
    if let Some(dir) = &cusp_tangent {
        let q = ProjPoint::new([
            &p.coords[0] + &dir[0],
            &p.coords[1] + &dir[1],
            &p.coords[2] + &dir[2],
        ]);
        if let Ok(q) = q {
            if let Ok(b) = f.restrict_line(p, &q) {
                if b.is_zero() {
                    kind = SingKind::Degenerate;
                    cusp_tangent = None;
                }
            }
        }
    }
    Ok(SingularityReport { point: p.clone(), kind, jet_discriminant: disc, cusp_tangent })
}

/// Where a zero sits relative to the octant boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ZeroLocation {
    Interior,
    /// On the open edge where the named coordinate vanishes.
    OpenEdge(Var),
    /// At the vertex where the named coordinate is the only nonzero one.
    Vertex(Var),
}

/// One octant zero with its local datum.
#[derive(Debug, Clone)]
pub struct OctantZero {
    pub point: ProjPoint<Rat>,
    pub location: ZeroLocation,
    /// Edge-restriction vanishing order for edge points; `length` (max
    /// contact order over the two incident edges) for vertices; 2 for
    /// interior double points.
    pub local_multiplicity: u32,
    pub singularity: Option<SingularityReport>,
}

#[derive(Debug, Clone)]
pub struct ZeroInventory {
    pub zeros: Vec<OctantZero>,
    /// Edges entirely contained in the zero set.
    pub contained_edges: Vec<Var>,
    /// Some zero data is irrational (isolating boxes only).
    pub has_irrational_data: bool,
}

/// Octant zeros of `f` on the boundary plus interior singular zeros.
/// For PSD forms this is the full octant zero set.
pub fn boundary_zeros(f: &Form<Rat>) -> Result<ZeroInventory, Error> {
    assert_eq!(f.degree(), 3);
    let mut zeros: Vec<OctantZero> = Vec::new();
    let mut contained = Vec::new();
    let mut has_irrational = false;

    let edges: [(Var, usize, usize); 3] = [(Var::X, 1, 2), (Var::Y, 0, 2), (Var::Z, 0, 1)];
    for (edge_var, i0, i1) in edges {
        let b = f.restrict_line(&unit_point(i0), &unit_point(i1))?;
        if b.is_zero() {
            contained.push(edge_var);
            continue;
        }
        let poly = b.dehomogenize();
        if !poly.is_zero() {
            let (roots, irr) = rational_roots_in(
                &poly,
                &Interval::ray_from(Rat::zero(), false),
                &crate::unipoly::default_height_cap(),
            )?;
            for (t, mult) in roots {
                if t.is_zero() {
                    continue;
                }
                let mut coords = [Rat::zero(), Rat::zero(), Rat::zero()];
                coords[i0] = Rat::one();
                coords[i1] = t.clone();
                let point = ProjPoint::new(coords)?;
                let singularity = classify_singularity(f, &point).ok();
                zeros.push(OctantZero {
                    point,
                    location: ZeroLocation::OpenEdge(edge_var),
                    local_multiplicity: mult,
                    singularity,
                });
            }
            has_irrational |= !irr.is_empty();
        }
    }

    // vertices: record length = max contact order over the incident edges
    for vi in 0..3 {
        let vertex = unit_point(vi);
        if !f.eval(&vertex.coords).is_zero() {
            continue;
        }
        let vert_var = [Var::X, Var::Y, Var::Z][vi];
        let mut length = 1u32;
        for (edge_var, i0, i1) in edges {
            if edge_var.index() == vi {
                continue; // opposite edge does not pass through the vertex
            }
            let b = f.restrict_line(&unit_point(i0), &unit_point(i1))?;
            if b.is_zero() {
                continue;
            }
            let (u0, v0) = if i0 == vi {
                (Rat::one(), Rat::zero())
            } else {
                (Rat::zero(), Rat::one())
            };
            length = length.max(b.vanishing_order_at(&u0, &v0));
        }
        let singularity = classify_singularity(f, &vertex).ok();
        zeros.push(OctantZero {
            point: vertex,
            location: ZeroLocation::Vertex(vert_var),
            local_multiplicity: length,
            singularity,
        });
    }

    // interior singular zeros
    let search = find_singular_points(f)?;
    has_irrational |= !search.irrational.is_empty();
    for rep in search.rational {
        let Some(octant_rep) = rep.point.octant_representative() else { continue };
        if octant_rep.iter().all(|c| c.is_positive()) {
            zeros.push(OctantZero {
                point: rep.point.clone(),
                location: ZeroLocation::Interior,
                local_multiplicity: 2,
                singularity: Some(rep),
            });
        }
    }

    Ok(ZeroInventory { zeros, contained_edges: contained, has_irrational_data: has_irrational })
}

pub fn unit_point(i: usize) -> ProjPoint<Rat> {
    let mut c = [Rat::zero(), Rat::zero(), Rat::zero()];
    c[i] = Rat::one();
    ProjPoint::new(c).unwrap()
}

/// The per-point weight of the zero count: 4 for an acnode, 12 for an
/// interior cusp, 6 for an edge cusp, 2 for a regular open-edge zero, and
/// the contact length at a vertex.
pub fn n_weight(z: &OctantZero) -> Result<u32, Error> {
    let kind = z.singularity.as_ref().map(|s| s.kind);
    match (&z.location, kind) {
        (_, Some(SingKind::Acnode)) => Ok(4),
        (ZeroLocation::Interior, Some(SingKind::Cusp)) => Ok(12),
        (ZeroLocation::OpenEdge(_), Some(SingKind::Cusp)) => Ok(6),
        (ZeroLocation::Interior, _) => Err(Error::ConditionKindMismatch(
            "interior zero that is not a node or cusp has no table weight".into(),
        )),
        (ZeroLocation::OpenEdge(_), _) => Ok(2),
        (ZeroLocation::Vertex(_), _) => Ok(z.local_multiplicity),
    }
}

#[derive(Debug, Clone)]
pub struct NCount {
    pub total: u32,
    /// Per-point weights, descending.
    pub breakdown: Vec<u32>,
    /// Some zero data was irrational: the sum is a partial count.
    pub indeterminate: bool,
}

/// The weighted zero count `N(f)` over the octant zero inventory. For an
/// irreducible extremal cubic this is at most 10, with equality exactly
/// when the square-substitution lift is an extremal sextic.
pub fn count_n(f: &Form<Rat>) -> Result<NCount, Error> {
    let inv = boundary_zeros(f)?;
    count_n_from(&inv)
}

pub fn count_n_from(inv: &ZeroInventory) -> Result<NCount, Error> {
    if !inv.contained_edges.is_empty() {
        return Err(Error::ConditionKindMismatch("an edge lies in the zero set".into()));
    }
    let mut breakdown = Vec::new();
    for z in &inv.zeros {
        breakdown.push(n_weight(z)?);
    }
    breakdown.sort_unstable_by(|a, b| b.cmp(a));
    let total = breakdown.iter().sum();
    if total > 10 {
        // ten is the ceiling for any octant-nonnegative irreducible cubic
        return Err(Error::ConditionKindMismatch(format!(
            "zero count {total} exceeds the extremal bound 10"
        )));
    }
    Ok(NCount { total, breakdown, indeterminate: inv.has_irrational_data })
}

/// A rational linear factor of a form of degree >= 2, with the cofactor.
/// For a rational cubic, "none" certifies irreducibility over the complex
/// numbers except for conjugate-line products, which never contribute
/// extremal elements.
pub fn linear_factor(f: &Form<Rat>) -> Option<(Form<Rat>, Form<Rat>)> {
    assert!(f.degree() >= 2);
    if f.is_zero() {
        return None;
    }
    for (v, e) in [(Var::X, Exp(1, 0, 0)), (Var::Y, Exp(0, 1, 0)), (Var::Z, Exp(0, 0, 1))] {
        let all_divisible = f.terms().all(|(exp, _)| exp.get(v) >= 1);
        if all_divisible {
            let lin = Form::from_terms(1, [(e, Rat::one())]).unwrap();
            let quot = f.div_exact(&lin).expect("coordinate divides");
            return Some((lin, quot));
        }
    }
    // A non-coordinate rational line meets each coordinate edge in a
    // rational point that must be a root of the corresponding restriction;
    // two such points determine the line.
    let roots_on = |i0: usize, i1: usize| -> Vec<ProjPoint<Rat>> {
        let p0 = unit_point(i0);
        let p1 = unit_point(i1);
        let Ok(b) = f.restrict_line(&p0, &p1) else { return vec![] };
        if b.is_zero() {
            return vec![];
        }
        let mut pts = Vec::new();
        let poly = b.dehomogenize();
        if !poly.is_zero() {
            if let Ok((roots, _)) =
                rational_roots_in(&poly, &Interval::all(), &crate::unipoly::default_height_cap())
            {
                for (t, _) in roots {
                    let mut coords = [Rat::zero(), Rat::zero(), Rat::zero()];
                    coords[i0] = Rat::one();
                    coords[i1] = t;
                    if let Ok(p) = ProjPoint::new(coords) {
                        pts.push(p);
                    }
                }
            }
        }
        if b.vanishing_order_at(&Rat::zero(), &Rat::one()) > 0 {
            pts.push(p1);
        }
        pts
    };
    let rx = roots_on(1, 2);
    let ry = roots_on(0, 2);
    let rz = roots_on(0, 1);
    for (set1, set2) in [(&rx, &ry), (&rx, &rz), (&ry, &rz)] {
        for a in set1.iter() {
            for b in set2.iter() {
                if a.proj_eq(b) {
                    continue;
                }
                let c = [
                    &a.coords[1] * &b.coords[2] - &a.coords[2] * &b.coords[1],
                    &a.coords[2] * &b.coords[0] - &a.coords[0] * &b.coords[2],
                    &a.coords[0] * &b.coords[1] - &a.coords[1] * &b.coords[0],
                ];
                if c.iter().all(|v| v.is_zero()) {
                    continue;
                }
                let lin = Form::from_terms(
                    1,
                    [
                        (Exp(1, 0, 0), c[0].clone()),
                        (Exp(0, 1, 0), c[1].clone()),
                        (Exp(0, 0, 1), c[2].clone()),
                    ],
                )
                .unwrap();
                if let Some(q) = f.div_exact(&lin) {
                    return Some((lin, q));
                }
            }
        }
    }
    None
}

/// Local intersection multiplicity of the curve with a coordinate edge at
/// a point of that edge. Errors when the edge divides the form.
pub fn intersection_multiplicity(f: &Form<Rat>, edge: Var, p: &ProjPoint<Rat>) -> Result<u32, Error> {
    if !p.coords[edge.index()].is_zero() {
        return Err(Error::ConditionKindMismatch("point is not on the named edge".into()));
    }
    let (i, j) = match edge {
        Var::X => (1, 2),
        Var::Y => (0, 2),
        Var::Z => (0, 1),
    };
    let b = f.restrict_line(&unit_point(i), &unit_point(j))?;
    if b.is_zero() {
        return Err(Error::DivisibleByEdge);
    }
    Ok(b.vanishing_order_at(&p.coords[i], &p.coords[j]))
}

/// Resultant of two forms with respect to one variable: the Sylvester
/// determinant over the ring of binary forms in the other two variables.
fn resultant_wrt(f: &Form<Rat>, g: &Form<Rat>, v: Var) -> BinaryForm<Rat> {
    let (fa, fdeg) = univariate_in(f, v);
    let (ga, gdeg) = univariate_in(g, v);
    if fdeg == 0 && gdeg == 0 {
        // both constant in v: share a zero iff the product does
        return mul_bf(&fa[0], &ga[0]);
    }
    if fdeg == 0 {
        return pow_bf(&fa[0], gdeg as u32);
    }
    if gdeg == 0 {
        return pow_bf(&ga[0], fdeg as u32);
    }
    let n = fdeg + gdeg;
    let mut matrix: Vec<Vec<Option<BinaryForm<Rat>>>> = vec![vec![None; n]; n];
    for s in 0..gdeg {
        for (k, c) in fa.iter().enumerate() {
            // coefficient of v^k goes in column s + (fdeg - k)
            matrix[s][s + fdeg - k] = Some(c.clone());
        }
    }
    for s in 0..fdeg {
        for (k, c) in ga.iter().enumerate() {
            matrix[gdeg + s][s + gdeg - k] = Some(c.clone());
        }
    }
    det_bf(&matrix)
}

/// Coefficients of `f` as a polynomial in `v`, each a binary form in the
/// remaining two variables. Index = power of `v`.
fn univariate_in(f: &Form<Rat>, v: Var) -> (Vec<BinaryForm<Rat>>, usize) {
    let d = f.degree() as usize;
    let (uv, vv) = kept_vars(v);
    let mut deg = 0;
    for (e, _) in f.terms() {
        deg = deg.max(e.get(v) as usize);
    }
    let mut out = Vec::with_capacity(deg + 1);
    for k in 0..=deg {
        let bd = (d - k) as u32;
        let mut coeffs = vec![Rat::zero(); bd as usize + 1];
        for (e, c) in f.terms() {
            if e.get(v) as usize == k {
                coeffs[e.get(vv) as usize] += c;
            }
        }
        let _ = uv;
        out.push(BinaryForm::new(bd, coeffs));
    }
    (out, deg)
}

fn mul_bf(a: &BinaryForm<Rat>, b: &BinaryForm<Rat>) -> BinaryForm<Rat> {
    let d = a.degree() + b.degree();
    let mut out = vec![Rat::zero(); d as usize + 1];
    for (i, ca) in a.coeffs().iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.coeffs().iter().enumerate() {
            out[i + j] += ca * cb;
        }
    }
    BinaryForm::new(d, out)
}

fn add_bf(a: &BinaryForm<Rat>, b: &BinaryForm<Rat>) -> BinaryForm<Rat> {
    assert_eq!(a.degree(), b.degree(), "sum of binary forms of equal degree");
    BinaryForm::new(
        a.degree(),
        a.coeffs().iter().zip(b.coeffs()).map(|(x, y)| x + y).collect(),
    )
}

fn pow_bf(a: &BinaryForm<Rat>, n: u32) -> BinaryForm<Rat> {
    let mut acc = BinaryForm::new(0, vec![Rat::one()]);
    for _ in 0..n {
        acc = mul_bf(&acc, a);
    }
    acc
}

/// Determinant by Laplace expansion; `None` entries are structural zeros.
/// Entries are homogeneous, so every nonzero summand has one total degree.
fn det_bf(m: &[Vec<Option<BinaryForm<Rat>>>]) -> BinaryForm<Rat> {
    let n = m.len();
    let cols: Vec<usize> = (0..n).collect();
    fn go(m: &[Vec<Option<BinaryForm<Rat>>>], row: usize, cols: &[usize]) -> Option<BinaryForm<Rat>> {
        if cols.is_empty() {
            return Some(BinaryForm::new(0, vec![Rat::one()]));
        }
        let mut acc: Option<BinaryForm<Rat>> = None;
        for (pos, &j) in cols.iter().enumerate() {
            let Some(entry) = &m[row][j] else { continue };
            if entry.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&c| c != j).collect();
            let Some(sub) = go(m, row + 1, &rest) else { continue };
            let mut term = mul_bf(entry, &sub);
            if pos % 2 == 1 {
                term = BinaryForm::new(term.degree(), term.coeffs().iter().map(|c| -c).collect());
            }
            acc = Some(match acc {
                None => term,
                Some(a) => add_bf(&a, &term),
            });
        }
        acc
    }
    go(m, 0, &cols).unwrap_or_else(|| BinaryForm::new(0, vec![Rat::zero()]))
}

/// Greatest common divisor of up to three candidate ratio forms; `None`
/// when all inputs vanish identically.
fn gcd3(a: &BinaryForm<Rat>, b: &BinaryForm<Rat>, c: &BinaryForm<Rat>) -> Option<BinaryForm<Rat>> {
    let to_poly = |bf: &BinaryForm<Rat>| -> Option<(UniPoly, u32)> {
        if bf.is_zero() {
            return None;
        }
        Some((bf.dehomogenize(), bf.vanishing_order_at(&Rat::zero(), &Rat::one())))
    };
    let parts: Vec<(UniPoly, u32)> = [a, b, c].iter().filter_map(|bf| to_poly(bf)).collect();
    if parts.is_empty() {
        return None;
    }
    let mut g = parts[0].0.clone();
    let mut inf = parts[0].1;
    for (p, o) in &parts[1..] {
        g = g.gcd(p);
        inf = inf.min(*o);
    }
    if g.is_zero() {
        return None;
    }
    let d = g.degree() as u32 + inf;
    let mut coeffs = vec![Rat::zero(); d as usize + 1];
    for (i, c) in g.coeffs().iter().enumerate() {
        coeffs[i] = c.clone();
    }
    Some(BinaryForm::new(d, coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cyclic_f0, make_f_pqr, make_g_pq, make_h_pq, monomial_xyz};
    use crate::scalar::rat_int;
    use crate::scalar::rat;
    use crate::test_support::SeededRats;

    #[test]
    fn acnode_of_the_cyclic_cubic() {
        let f = cyclic_f0();
        let s = find_singular_points(&f).unwrap();
        assert!(!s.identically_singular);
        assert_eq!(s.rational.len(), 1);
        let rep = &s.rational[0];
        assert!(rep
            .point
            .proj_eq(&ProjPoint::from_rats(Rat::one(), Rat::one(), Rat::one()).unwrap()));
        assert_eq!(rep.kind, SingKind::Acnode);
        assert!(rep.jet_discriminant.is_negative());
    }

    #[test]
    fn cusp_of_the_kernel_family() {
        let h = make_h_pq(&Rat::one(), &Rat::one()).unwrap();
        let s = find_singular_points(&h).unwrap();
        assert_eq!(s.rational.len(), 1);
        let rep = &s.rational[0];
        assert!(rep
            .point
            .proj_eq(&ProjPoint::from_rats(Rat::zero(), Rat::one(), Rat::one()).unwrap()));
        assert_eq!(rep.kind, SingKind::Cusp);
        let h23 = make_h_pq(&rat_int(2), &rat_int(3)).unwrap();
        let p = ProjPoint::from_rats(Rat::zero(), Rat::one(), Rat::one()).unwrap();
        assert_eq!(classify_singularity(&h23, &p).unwrap().kind, SingKind::Cusp);
    }

    #[test]
    fn smooth_cubic_has_no_singularities() {
        let f = Form::from_terms(
            3,
            [
                (Exp(3, 0, 0), rat_int(1)),
                (Exp(0, 3, 0), rat_int(1)),
                (Exp(0, 0, 3), rat_int(1)),
            ],
        )
        .unwrap();
        let s = find_singular_points(&f).unwrap();
        assert!(s.rational.is_empty());
        assert!(s.irrational.is_empty());
        assert!(!s.identically_singular);
    }

    #[test]
    fn degenerate_line_pair_detected() {
        let lin = Form::from_terms(
            1,
            [
                (Exp(1, 0, 0), rat_int(1)),
                (Exp(0, 1, 0), rat_int(1)),
                (Exp(0, 0, 1), rat_int(-2)),
            ],
        )
        .unwrap();
        let z = Form::from_terms(1, [(Exp(0, 0, 1), rat_int(1))]).unwrap();
        let f = lin.mul(&lin).mul(&z);
        let s = find_singular_points(&f).unwrap();
        assert!(s.identically_singular);
        // a point on the double line sees a degenerate jet
        let p = ProjPoint::from_rats(Rat::one(), Rat::one(), Rat::one()).unwrap();
        assert_eq!(classify_singularity(&f, &p).unwrap().kind, SingKind::Degenerate);
    }

    #[test]
    fn crunode_detected() {
        // y^2 z - x^2 (x + z): node at (0:0:1) with real tangents
        let f = Form::from_terms(
            3,
            [
                (Exp(0, 2, 1), rat_int(1)),
                (Exp(3, 0, 0), rat_int(-1)),
                (Exp(2, 0, 1), rat_int(-1)),
            ],
        )
        .unwrap();
        let p = ProjPoint::from_rats(Rat::zero(), Rat::zero(), Rat::one()).unwrap();
        assert_eq!(classify_singularity(&f, &p).unwrap().kind, SingKind::Crunode);
    }

    #[test]
    fn inventory_and_count_of_f_123() {
        let f = make_f_pqr(&rat_int(1), &rat_int(2), &rat_int(3));
        let inv = boundary_zeros(&f).unwrap();
        assert!(inv.contained_edges.is_empty());
        assert!(!inv.has_irrational_data);
        assert_eq!(inv.zeros.len(), 4);
        let n = count_n(&f).unwrap();
        assert_eq!(n.total, 10);
        assert_eq!(n.breakdown, vec![4, 2, 2, 2]);
    }

    #[test]
    fn count_of_g_and_h() {
        let g = make_g_pq(&rat(1, 4), &rat(1, 4));
        let n = count_n(&g).unwrap();
        assert_eq!((n.total, n.breakdown.clone()), (10, vec![4, 2, 2, 1, 1]));
        let h = make_h_pq(&Rat::one(), &Rat::one()).unwrap();
        let n = count_n(&h).unwrap();
        assert_eq!((n.total, n.breakdown.clone()), (10, vec![6, 2, 2]));
        // boundary member: G(p, 0) has a length-3 vertex: 4 + 2 + 3 + 1
        let g = make_g_pq(&rat(1, 4), &Rat::zero());
        let n = count_n(&g).unwrap();
        assert_eq!((n.total, n.breakdown.clone()), (10, vec![4, 3, 2, 1]));
    }

    #[test]
    fn xyz_fills_edges() {
        let inv = boundary_zeros(&monomial_xyz()).unwrap();
        assert_eq!(inv.contained_edges.len(), 3);
        assert!(count_n_from(&inv).is_err());
    }

    #[test]
    fn intersection_multiplicities() {
        let f = make_f_pqr(&rat_int(1), &rat_int(2), &rat_int(3));
        let p = ProjPoint::from_rats(Rat::zero(), Rat::one(), Rat::one()).unwrap();
        assert_eq!(intersection_multiplicity(&f, Var::X, &p).unwrap(), 2);
        let err = intersection_multiplicity(&monomial_xyz(), Var::X, &p);
        assert!(matches!(err, Err(Error::DivisibleByEdge)));
        let off = ProjPoint::from_rats(Rat::one(), Rat::one(), Rat::one()).unwrap();
        assert!(intersection_multiplicity(&f, Var::X, &off).is_err());
    }

    #[test]
    fn vertex_intersection_bound() {
        let mut gen = SeededRats::new(21);
        for _ in 0..20 {
            let (p, q, r) = gen.f_params_interior();
            let f = make_f_pqr(&p, &q, &r);
            // I_{P_y}(f, x) + I_{P_z}(f, x) <= 3 and cyclic versions
            for (edge, va, vb) in [(Var::X, 1, 2), (Var::Y, 0, 2), (Var::Z, 0, 1)] {
                let a = intersection_multiplicity(&f, edge, &unit_point(va)).unwrap();
                let b = intersection_multiplicity(&f, edge, &unit_point(vb)).unwrap();
                assert!(a + b <= 3, "edge bound violated");
            }
        }
    }

    #[test]
    fn linear_factor_cases() {
        let g = make_g_pq(&rat(1, 3), &rat(2, 3));
        let (lin, rest) = linear_factor(&g).unwrap();
        assert_eq!(lin.mul(&rest), g);
        let xf = Form::from_terms(1, [(Exp(1, 0, 0), rat_int(1))]).unwrap();
        let lin2 = Form::from_terms(
            1,
            [
                (Exp(1, 0, 0), rat_int(2)),
                (Exp(0, 1, 0), rat_int(1)),
                (Exp(0, 0, 1), rat_int(1)),
            ],
        )
        .unwrap();
        let f = xf.mul(&lin2).mul(&lin2);
        let (lin, rest) = linear_factor(&f).unwrap();
        assert_eq!(lin.mul(&rest), f);
        assert!(linear_factor(&make_f_pqr(&Rat::one(), &Rat::one(), &Rat::one())).is_none());
    }

    #[test]
    fn linear_factor_finds_planted_lines() {
        let mut gen = SeededRats::new(22);
        let mut found = 0;
        for _ in 0..15 {
            let a = gen.rat_signed(6, 4);
            let b = gen.rat_signed(6, 4);
            let c = gen.rat_signed(6, 4);
            if a.is_zero() && b.is_zero() && c.is_zero() {
                continue;
            }
            let lin = Form::from_terms(1, [(Exp(1, 0, 0), a), (Exp(0, 1, 0), b), (Exp(0, 0, 1), c)]).unwrap();
            let mut terms = Vec::new();
            for e in crate::poly::monomials(3) {
                let cf = gen.rat_signed(4, 3);
                if !cf.is_zero() {
                    terms.push((e, cf));
                }
            }
            let cubic = Form::from_terms(3, terms).unwrap();
            if cubic.is_zero() {
                continue;
            }
            let f = cubic.mul(&lin);
            let (found_lin, rest) = linear_factor(&f).expect("planted factor");
            assert_eq!(found_lin.mul(&rest), f);
            found += 1;
        }
        assert!(found >= 10);
    }

    #[test]
    fn singularity_placement_invariants() {
        // Singular point in the octant, never a vertex; acnodes interior;
        // cusps on open edges.
        let mut gen = SeededRats::new(23);
        for _ in 0..20 {
            let (p, q, r) = gen.f_params_interior();
            let f = make_f_pqr(&p, &q, &r);
            let s = find_singular_points(&f).unwrap();
            assert_eq!(s.rational.len(), 1);
            let rep = &s.rational[0];
            let oct = rep.point.octant_representative().expect("octant singular point");
            assert!(oct.iter().all(|c| c.is_positive()), "acnode interior");
            assert_eq!(rep.kind, SingKind::Acnode);
        }
        for _ in 0..20 {
            let (p, q) = gen.h_params_interior();
            let h = make_h_pq(&p, &q).unwrap();
            let s = find_singular_points(&h).unwrap();
            assert_eq!(s.rational.len(), 1);
            let rep = &s.rational[0];
            assert_eq!(rep.kind, SingKind::Cusp);
            let oct = rep.point.octant_representative().expect("octant singular point");
            // on an open edge: exactly one zero coordinate
            assert_eq!(oct.iter().filter(|c| c.is_zero()).count(), 1);
        }
    }
}
