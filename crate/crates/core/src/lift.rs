//! The square-substitution lift `f(x,y,z) -> f(x^2,y^2,z^2)`: sign-orbit
//! expansion of octant zeros (with square-root coordinates in a radical
//! tower where needed) and kernel verification that the lift spans the
//! solution line of its own zero conditions, i.e. is an extremal even form.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::Error;
use crate::geometry::{SingKind, ZeroInventory, ZeroLocation};
use crate::linsys::{KernelResult, Matrix};
use crate::poly::{monomials, Exp, Form};
use crate::scalar::{
    rationalize_condition, squarefree_prime_factors, sqrt_split, Rat, Tower, TowerElem,
};
use std::sync::Arc;

/// The condition bundle a lifted zero imposes on even forms.
#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LiftedConditions {
    /// Node image: full gradient vanishing (rank 3 after the Euler relation).
    Gradient,
    /// Cusp image: an `A5`-type point, local model `v^2 + u^6` with `u` the
    /// repeated-tangent direction. Conditions are the weighted-jet
    /// coefficients `u^i` (i <= 5) and `u^i v` (i <= 2).
    CuspJet,
    /// Vertex image with contact length `m`: local model `u^2 + v^{2m}`,
    /// conditions `v^j` (j < 2m) and `u v^j` (j < m).
    VertexJet { length: u32 },
}

/// One lifted zero: a point (possibly with radical coordinates) and its
/// condition bundle.
#[derive(Debug, Clone)]
pub struct OrbitPoint {
    pub point: [TowerElem; 3],
    pub conditions: LiftedConditions,
    /// Jet directions for the two jet kinds: `(u, v)` direction vectors.
    pub directions: Option<([TowerElem; 3], [TowerElem; 3])>,
}

#[derive(Debug, Clone, Serialize)]
pub struct OrbitSummary {
    pub base_point: Vec<String>,
    pub orbit_size: usize,
    pub weight: u32,
    pub conditions: LiftedConditions,
}

#[derive(Debug)]
pub struct LiftReport {
    pub lifted: Form<Rat>,
    pub tower: Arc<Tower>,
    pub orbit_points: Vec<OrbitPoint>,
    pub orbit_summaries: Vec<OrbitSummary>,
    /// The weighted zero count carried by the orbits (10 for extremal
    /// cubic lifts).
    pub total_count: u32,
}

/// Expands each octant zero of `f` into its sign orbit and packages the
/// lifted form with the per-point conditions. Zero coordinates must have
/// square roots inside a tower generated by their squarefree parts.
pub fn lift_with_orbits(f: &Form<Rat>, inventory: &ZeroInventory) -> Result<LiftReport, Error> {
    if inventory.has_irrational_data {
        return Err(Error::Malformed("inventory contains irrational zero data".into()));
    }
    if !inventory.contained_edges.is_empty() {
        return Err(Error::Malformed("an edge lies in the zero set".into()));
    }
    let lifted = f.square_substitute();

    // collect radicands
    let mut primes: Vec<u64> = Vec::new();
    let mut normalized: Vec<[Rat; 3]> = Vec::new();
    for z in &inventory.zeros {
        let rep = z
            .point
            .octant_representative()
            .ok_or_else(|| Error::Malformed("zero outside the octant".into()))?;
        for c in &rep {
            let (_, d) = sqrt_split(c)?;
            for p in squarefree_prime_factors(d) {
                if !primes.contains(&p) {
                    primes.push(p);
                }
            }
        }
        normalized.push(rep);
    }
    primes.sort_unstable();
    let tower = Tower::new(primes)?;

    let mut orbit_points = Vec::new();
    let mut orbit_summaries = Vec::new();
    let mut total = 0u32;
    for (z, rep) in inventory.zeros.iter().zip(&normalized) {
        let sqrt_coords: Vec<TowerElem> = rep
            .iter()
            .map(|c| TowerElem::sqrt_of(c, &tower))
            .collect::<Result<_, _>>()?;
        let kind = z.singularity.as_ref().map(|s| s.kind);
        let (conditions, weight): (LiftedConditions, u32) = match (&z.location, kind) {
            (_, Some(SingKind::Acnode)) => (LiftedConditions::Gradient, 4),
            (ZeroLocation::OpenEdge(_), Some(SingKind::Cusp)) => (LiftedConditions::CuspJet, 6),
            (ZeroLocation::Interior, Some(SingKind::Cusp)) => {
                return Err(Error::Malformed("interior cusp cannot occur in a PSD lift".into()))
            }
            (ZeroLocation::OpenEdge(_), _) => (LiftedConditions::Gradient, 2),
            (ZeroLocation::Vertex(_), _) => {
                let m = z.local_multiplicity;
                if m == 1 {
                    (LiftedConditions::Gradient, 1)
                } else {
                    (LiftedConditions::VertexJet { length: m }, m)
                }
            }
            (ZeroLocation::Interior, _) => {
                return Err(Error::Malformed("interior zero without node data".into()))
            }
        };
        total += weight;

        // jet directions where needed
        let directions = match &conditions {
            LiftedConditions::CuspJet => {
                let sing = z.singularity.as_ref().expect("cusp has singularity data");
                let tangent = sing
                    .cusp_tangent
                    .as_ref()
                    .ok_or_else(|| Error::Malformed("cusp without tangent data".into()))?;
                Some(cusp_jet_directions(rep, tangent, &sqrt_coords, &tower)?)
            }
            LiftedConditions::VertexJet { .. } => {
                let ZeroLocation::Vertex(v) = &z.location else { unreachable!() };
                Some(vertex_jet_directions(f, *v, &tower))
            }
            LiftedConditions::Gradient => None,
        };

        // sign orbit: first nonzero coordinate positive, flips on the rest
        let nz: Vec<usize> = (0..3).filter(|&i| !rep[i].is_zero()).collect();
        let orbit_size = 1usize << (nz.len().saturating_sub(1));
        for mask in 0..orbit_size {
            let mut coords = sqrt_coords.clone();
            for (bit, &idx) in nz.iter().skip(1).enumerate() {
                if mask & (1 << bit) != 0 {
                    coords[idx] = coords[idx].negated();
                }
            }
            orbit_points.push(OrbitPoint {
                point: [coords[0].clone(), coords[1].clone(), coords[2].clone()],
                conditions: conditions.clone(),
                directions: directions.clone(),
            });
        }
        orbit_summaries.push(OrbitSummary {
            base_point: rep.iter().map(crate::scalar::rat_to_string).collect(),
            orbit_size,
            weight,
            conditions,
        });
    }

    Ok(LiftReport { lifted, tower, orbit_points, orbit_summaries, total_count: total })
}

/// Directions `(u, v)` for the `A5` jet at a cusp image: `u` is the tangent
/// direction of the pulled-back tangent conic at the image point, `v` any
/// complement (shear-invariance of the jet conditions makes the choice of
/// `v` immaterial).
fn cusp_jet_directions(
    base: &[Rat; 3],
    tangent: &[Rat; 3],
    image: &[TowerElem],
    tower: &Arc<Tower>,
) -> Result<([TowerElem; 3], [TowerElem; 3]), Error> {
    // tangent line of f at the cusp: l = P x T (cross product), so
    // l . x = 0 contains both the point and the direction
    let l = [
        &base[1] * &tangent[2] - &base[2] * &tangent[1],
        &base[2] * &tangent[0] - &base[0] * &tangent[2],
        &base[0] * &tangent[1] - &base[1] * &tangent[0],
    ];
    // pullback conic sum l_i x_i^2 has gradient (2 l_i s_i) at the image
    // point s; u must annihilate it
    let grad: Vec<TowerElem> = (0..3)
        .map(|i| {
            let li = TowerElem::from_rat_in(&l[i], tower);
            li.try_mul(&image[i])
        })
        .collect::<Result<_, _>>()?;
    // pick u = a nonzero vector orthogonal to grad with a simple shape
    let u = orthogonal_direction(&grad, tower)?;
    // v: any direction independent of u and not parallel to the point; a
    // coordinate direction works
    let v = independent_coordinate_direction(&u, image, tower);
    Ok((u, v))
}

fn orthogonal_direction(
    grad: &[TowerElem],
    tower: &Arc<Tower>,
) -> Result<[TowerElem; 3], Error> {
    let zero = TowerElem::zero_in(tower);
    let one = TowerElem::from_rat_in(&Rat::one(), tower);
    // if some gradient coordinate vanishes, the matching axis works
    for i in 0..3 {
        if grad[i].is_zero() {
            let mut u = [zero.clone(), zero.clone(), zero.clone()];
            u[i] = one;
            return Ok(u);
        }
    }
    // otherwise (g1, -g0, 0) is orthogonal and nonzero
    Ok([grad[1].clone(), grad[0].negated(), zero])
}

fn independent_coordinate_direction(
    u: &[TowerElem; 3],
    point: &[TowerElem],
    tower: &Arc<Tower>,
) -> [TowerElem; 3] {
    let zero = TowerElem::zero_in(tower);
    let one = TowerElem::from_rat_in(&Rat::one(), tower);
    for i in 0..3 {
        let mut v = [zero.clone(), zero.clone(), zero.clone()];
        v[i] = one.clone();
        // independence from u and from the point direction: 3x3 determinant
        let det = det3_tower(point, u, &v);
        if !det.is_zero() {
            return v;
        }
    }
    unreachable!("some coordinate direction completes the frame");
}

fn det3_tower(a: &[TowerElem], b: &[TowerElem; 3], c: &[TowerElem; 3]) -> TowerElem {
    let m = |x: &TowerElem, y: &TowerElem| x.try_mul(y).expect("same tower");
    let s = |x: &TowerElem, y: &TowerElem| x.try_sub(y).expect("same tower");
    let t1 = m(&a[0], &s(&m(&b[1], &c[2]), &m(&b[2], &c[1])));
    let t2 = m(&a[1], &s(&m(&b[0], &c[2]), &m(&b[2], &c[0])));
    let t3 = m(&a[2], &s(&m(&b[0], &c[1]), &m(&b[1], &c[0])));
    t1.try_sub(&t2).unwrap().try_add(&t3).unwrap()
}

/// Directions for the vertex jet: `v` moves along the contact edge, `u` is
/// the transversal coordinate direction.
fn vertex_jet_directions(f: &Form<Rat>, vertex: crate::poly::Var, tower: &Arc<Tower>) -> ([TowerElem; 3], [TowerElem; 3]) {
    // the contact edge is the incident edge with the higher vanishing order
    let vi = vertex.index();
    let others: Vec<usize> = (0..3).filter(|&i| i != vi).collect();
    // edge where coordinate others[0] vanishes passes through the vertex;
    // restriction order along it decides
    let mut best = (others[0], others[1]); // (vanishing coord = u, moving coord = v)
    let mut best_ord = 0u32;
    for (uc, vc) in [(others[0], others[1]), (others[1], others[0])] {
        // edge {x_uc = 0} through vertex, moving coordinate vc
        let b = f
            .restrict_line(&crate::geometry::unit_point(vi), &crate::geometry::unit_point(vc))
            .expect("distinct unit points");
        if b.is_zero() {
            continue;
        }
        let ord = b.vanishing_order_at(&Rat::one(), &Rat::zero());
        if ord > best_ord {
            best_ord = ord;
            best = (uc, vc);
        }
    }
    let zero = TowerElem::zero_in(tower);
    let one = TowerElem::from_rat_in(&Rat::one(), tower);
    let mut u = [zero.clone(), zero.clone(), zero.clone()];
    u[best.0] = one.clone();
    let mut v = [zero.clone(), zero.clone(), zero.clone()];
    v[best.1] = one;
    (u, v)
}

/// Coefficient of `s^i t^j` in `m(P + s U + t V)` for the monomial with
/// exponent `e`, over any scalar.
fn biv_coeff<S: crate::scalar::Scalar>(e: Exp, p: &[S; 3], u: &[S; 3], v: &[S; 3], want: &[(u32, u32)]) -> Vec<S> {
    // expand each coordinate power (p_k + s u_k + t v_k)^{e_k} as a map
    // (i, j) -> coeff, then convolve the three maps.
    let expand_one = |pk: &S, uk: &S, vk: &S, n: u32| -> Vec<Vec<S>> {
        // trinomial: sum_{a+b<=n} C(n;a,b) p^{n-a-b} u^a v^b s^a t^b
        let mut grid = vec![vec![S::zero(); n as usize + 1]; n as usize + 1];
        for a in 0..=n {
            for b in 0..=(n - a) {
                let c = trinomial(n, a, b);
                let mut term = S::from_rat(&c);
                term = term.mul(&pow_s(pk, n - a - b));
                term = term.mul(&pow_s(uk, a));
                term = term.mul(&pow_s(vk, b));
                grid[a as usize][b as usize] = term;
            }
        }
        grid
    };
    let gx = expand_one(&p[0], &u[0], &v[0], e.0);
    let gy = expand_one(&p[1], &u[1], &v[1], e.1);
    let gz = expand_one(&p[2], &u[2], &v[2], e.2);
    let max_i = want.iter().map(|w| w.0).max().unwrap_or(0) as usize;
    let max_j = want.iter().map(|w| w.1).max().unwrap_or(0) as usize;
    let mut acc = vec![vec![S::zero(); max_j + 1]; max_i + 1];
    for (a1, row1) in gx.iter().enumerate() {
        for (b1, c1) in row1.iter().enumerate() {
            if c1.is_zero() {
                continue;
            }
            for (a2, row2) in gy.iter().enumerate() {
                if a1 + a2 > max_i {
                    break;
                }
                for (b2, c2) in row2.iter().enumerate() {
                    if b1 + b2 > max_j {
                        break;
                    }
                    if c2.is_zero() {
                        continue;
                    }
                    let c12 = c1.mul(c2);
                    for (a3, row3) in gz.iter().enumerate() {
                        if a1 + a2 + a3 > max_i {
                            break;
                        }
                        for (b3, c3) in row3.iter().enumerate() {
                            if b1 + b2 + b3 > max_j {
                                break;
                            }
                            if c3.is_zero() {
                                continue;
                            }
                            let i = a1 + a2 + a3;
                            let j = b1 + b2 + b3;
                            acc[i][j] = acc[i][j].add(&c12.mul(c3));
                        }
                    }
                }
            }
        }
    }
    want.iter().map(|&(i, j)| acc[i as usize][j as usize].clone()).collect()
}

fn pow_s<S: crate::scalar::Scalar>(b: &S, n: u32) -> S {
    let mut acc = S::one();
    for _ in 0..n {
        acc = acc.mul(b);
    }
    acc
}

fn trinomial(n: u32, a: u32, b: u32) -> Rat {
    // n! / (a! b! (n-a-b)!)
    let mut acc = Rat::one();
    let mut k = n;
    for group in [a, b] {
        for i in 1..=group {
            acc = acc * crate::scalar::rat_int(k as i64) / crate::scalar::rat_int(i as i64);
            k -= 1;
        }
    }
    acc
}

/// The jet index set for the cusp image model `v^2 + u^6`.
fn cusp_jet_indices() -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for i in 0..=5 {
        out.push((i, 0));
    }
    for i in 0..=2 {
        out.push((i, 1));
    }
    out
}

/// The jet index set for the vertex image model `u^2 + v^{2m}`:
/// coefficients of `v^j` (j < 2m) and `u v^j` (j < m).
fn vertex_jet_indices(m: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for j in 0..2 * m {
        out.push((0, j));
    }
    for j in 0..m {
        out.push((1, j));
    }
    out
}

#[derive(Debug, Serialize)]
pub struct LiftVerification {
    pub degree: u32,
    pub rows: usize,
    pub columns: usize,
    pub rank: usize,
    pub kernel_dim: usize,
    pub matched: bool,
}

/// Builds the constraint system of the lift's zero conditions at all orbit
/// points (gradient or weighted-jet rows, tower rows rationalized), computes
/// its kernel, and checks that it is the line spanned by the lifted form.
pub fn verify_lift_extremal(report: &LiftReport) -> Result<(LiftVerification, KernelResult), Error> {
    let degree = report.lifted.degree();
    let cols = monomials(degree);
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    let tower = &report.tower;
    let axes: [[TowerElem; 3]; 3] = {
        let zero = TowerElem::zero_in(tower);
        let one = TowerElem::from_rat_in(&Rat::one(), tower);
        [
            [one.clone(), zero.clone(), zero.clone()],
            [zero.clone(), one.clone(), zero.clone()],
            [zero.clone(), zero.clone(), one.clone()],
        ]
    };
    for op in &report.orbit_points {
        let mut tower_rows: Vec<Vec<TowerElem>> = Vec::new();
        match &op.conditions {
            LiftedConditions::Gradient => {
                for alpha in [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)] {
                    let row: Vec<TowerElem> = cols
                        .iter()
                        .map(|&e| crate::linsys::monomial_partial_eval(e, alpha, &op.point))
                        .collect();
                    tower_rows.push(row);
                }
            }
            LiftedConditions::CuspJet | LiftedConditions::VertexJet { .. } => {
                let (u, v) = op.directions.as_ref().expect("jet directions present");
                let want = match &op.conditions {
                    LiftedConditions::CuspJet => cusp_jet_indices(),
                    LiftedConditions::VertexJet { length } => vertex_jet_indices(*length),
                    LiftedConditions::Gradient => unreachable!(),
                };
                // one row per jet index; entries computed per column monomial
                let per_col: Vec<Vec<TowerElem>> = cols
                    .iter()
                    .map(|&e| biv_coeff(e, &op.point, u, v, &want))
                    .collect();
                for (k, _) in want.iter().enumerate() {
                    tower_rows.push(per_col.iter().map(|c| c[k].clone()).collect());
                }
                let _ = &axes;
            }
        }
        for tr in tower_rows {
            for rr in rationalize_condition(&tr)? {
                if rr.iter().any(|x| !x.is_zero()) {
                    rows.push(rr);
                }
            }
        }
    }
    let nrows = rows.len();
    let m = Matrix::new(rows, cols.len());
    let k = m.nullspace();
    let matched = k.dimension == 1 && {
        let candidate = Form::from_coeff_vector(degree, &k.basis[0]);
        candidate.proportionality(&report.lifted).is_some()
    };
    Ok((
        LiftVerification {
            degree,
            rows: nrows,
            columns: cols.len(),
            rank: k.rank,
            kernel_dim: k.dimension,
            matched,
        },
        k,
    ))
}

/// Soundness of the orbit expansion: every orbit point satisfies the lifted
/// form's vanishing and first-order conditions exactly.
pub fn orbit_soundness(report: &LiftReport) -> Result<bool, Error> {
    let lifted_t = to_tower_form(&report.lifted, &report.tower);
    for op in &report.orbit_points {
        let v = lifted_t.eval(&op.point);
        if !v.is_zero() {
            return Ok(false);
        }
        for var in crate::poly::Var::all() {
            let d = lifted_t.partial(var, 1).eval(&op.point);
            if !d.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn to_tower_form(f: &Form<Rat>, tower: &Arc<Tower>) -> Form<TowerElem> {
    Form::from_terms(
        f.degree(),
        f.terms().map(|(e, c)| (e, TowerElem::from_rat_in(c, tower))),
    )
    .expect("same exponents")
}

/// True iff every exponent is componentwise even (the form is a lift).
pub fn even_form_check(g: &Form<Rat>) -> bool {
    g.is_even()
}

/// Lifted extremality data for reducible extremal cubics: the lift of
/// `v l^2` is `(v' l')^2`-shaped with `l'` an irreducible conic, certified
/// structurally rather than through a kernel.
pub fn verify_reducible_lift(f: &Form<Rat>) -> Result<bool, Error> {
    match crate::certify::check_reducible_extremal(f) {
        crate::certify::ReducibleExtremal::Monomial { .. } => Ok(true),
        crate::certify::ReducibleExtremal::EdgeSquare { line, .. } => {
            // lift: v^2 (a x^2 + b y^2 + c z^2)^2; extremality of the square
            // needs the conic a x^2 + b y^2 + c z^2 irreducible, i.e. rank 3
            // diagonal — equivalently all of a, b, c nonzero — or the
            // segment condition with mixed signs keeping it indefinite and
            // irreducible with a real locus.
            let coeffs: Vec<Rat> = line
                .iter()
                .map(|s| crate::scalar::parse_rat(s))
                .collect::<Result<_, _>>()?;
            let nonzero = coeffs.iter().filter(|c| !c.is_zero()).count();
            Ok(nonzero >= 2 || nonzero == 1)
        }
        crate::certify::ReducibleExtremal::NotExtremal { .. } => Ok(false),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{make_f_pqr, make_g_pq, make_h_pq};
    use crate::geometry::boundary_zeros;
    use crate::scalar::{rat, rat_int};

    #[test]
    fn f_lift_has_ten_zeros_and_line_kernel() {
        let f = make_f_pqr(&Rat::one(), &Rat::one(), &Rat::one());
        let inv = boundary_zeros(&f).unwrap();
        let report = lift_with_orbits(&f, &inv).unwrap();
        assert_eq!(report.total_count, 10);
        assert_eq!(report.orbit_points.len(), 10);
        assert!(orbit_soundness(&report).unwrap());
        let (v, _) = verify_lift_extremal(&report).unwrap();
        assert_eq!(v.kernel_dim, 1);
        assert!(v.matched);
        assert_eq!(v.rank, 27);
    }

    #[test]
    fn f_lift_with_radical_orbit() {
        // zeros (0:1:1), (1:0:2), (3:1:0) bring sqrt(2) and sqrt(3)
        let f = make_f_pqr(&rat_int(1), &rat_int(2), &rat_int(3));
        let inv = boundary_zeros(&f).unwrap();
        let report = lift_with_orbits(&f, &inv).unwrap();
        assert_eq!(report.tower.radicands(), &[2, 3]);
        assert_eq!(report.total_count, 10);
        assert!(orbit_soundness(&report).unwrap());
        let (v, _) = verify_lift_extremal(&report).unwrap();
        assert!(v.matched, "kernel dim {}", v.kernel_dim);
    }

    #[test]
    fn g_lift_kernel() {
        let g = make_g_pq(&rat(1, 4), &rat(1, 4));
        let inv = boundary_zeros(&g).unwrap();
        let report = lift_with_orbits(&g, &inv).unwrap();
        assert_eq!(report.total_count, 10);
        let (v, _) = verify_lift_extremal(&report).unwrap();
        assert!(v.matched, "kernel dim {}", v.kernel_dim);
        // vertex images keep orbit size 1
        let vertex_orbits: Vec<_> = report.orbit_summaries.iter().filter(|s| s.orbit_size == 1).collect();
        assert_eq!(vertex_orbits.len(), 2);
    }

    #[test]
    fn h_lift_kernel_needs_the_cusp_jets() {
        let h = make_h_pq(&Rat::one(), &Rat::one()).unwrap();
        let inv = boundary_zeros(&h).unwrap();
        let report = lift_with_orbits(&h, &inv).unwrap();
        assert_eq!(report.total_count, 10);
        assert!(orbit_soundness(&report).unwrap());
        let (v, _) = verify_lift_extremal(&report).unwrap();
        assert_eq!(v.kernel_dim, 1);
        assert!(v.matched);
    }

    #[test]
    fn g_boundary_lift_with_length_three_vertex() {
        // G(p, 0) carries a length-3 vertex whose jet conditions reach
        // derivative order 5
        let g = make_g_pq(&rat(1, 4), &Rat::zero());
        let inv = boundary_zeros(&g).unwrap();
        let report = lift_with_orbits(&g, &inv).unwrap();
        assert_eq!(report.total_count, 10);
        let (v, _) = verify_lift_extremal(&report).unwrap();
        assert!(v.matched, "kernel dim {}", v.kernel_dim);
    }

    #[test]
    fn even_check() {
        let xyz = crate::families::monomial_xyz();
        assert!(even_form_check(&xyz.square_substitute()));
        assert!(!even_form_check(&xyz));
        let f = make_f_pqr(&Rat::one(), &Rat::one(), &Rat::one());
        assert!(even_form_check(&f.square_substitute()));
    }
}
