//! The extremality decision procedure for exact rational cubics: decide
//! the extremal class of the octant PSD cone, recover parameters and the
//! normalizing coordinate change, and reconstruct the input exactly.
//!
//! Pipeline: factor out the reducible cases; otherwise locate the unique
//! singular point; a cusp on an open edge routes to the kernel family, an
//! interior acnode routes through the boundary-zero configuration tables;
//! everything else (wrong singularity type or placement, unmatched
//! configurations) is not extremal, and irrational data is reported
//! indeterminate rather than approximated.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::certify::{check_reducible_extremal, ReducibleExtremal};
use crate::error::Error;
use crate::families::{a1, make_f_pqr, make_g_pq, make_h_pq};
use crate::geometry::{
    boundary_zeros, find_singular_points, linear_factor, SingKind, ZeroLocation,
};
use crate::poly::{Form, Var};
use crate::scalar::{rat_to_string, Rat};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassCase {
    Case1F,
    Case2FPerm,
    Case3G,
    Case4H,
    Case5EdgeSquare,
    Case6Xyz,
    NotExtremal,
    Indeterminate,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassificationResult {
    pub verdict: ClassCase,
    /// Family parameters, when a family case matched.
    pub params: Vec<String>,
    /// Matrix `W` with `input = alpha * family(W v)`, row-major rationals.
    pub transform: Option<Vec<Vec<String>>>,
    pub alpha: Option<String>,
    pub diagnostics: Vec<String>,
}

impl ClassificationResult {
    fn not_extremal(reason: &str) -> Self {
        ClassificationResult {
            verdict: ClassCase::NotExtremal,
            params: vec![],
            transform: None,
            alpha: None,
            diagnostics: vec![reason.to_string()],
        }
    }

    fn indeterminate(reason: &str) -> Self {
        ClassificationResult {
            verdict: ClassCase::Indeterminate,
            params: vec![],
            transform: None,
            alpha: None,
            diagnostics: vec![reason.to_string()],
        }
    }
}

/// A matched family with its reconstruction data, exposed so callers can
/// replay the match exactly.
#[derive(Debug, Clone)]
pub struct FamilyMatch {
    pub case: ClassCase,
    pub params: Vec<Rat>,
    pub family_form: Form<Rat>,
    pub transform: [[Rat; 3]; 3],
    pub alpha: Rat,
}

/// Scalar `alpha` with `f = alpha * candidate(W v)`, when one exists.
pub fn match_family(f: &Form<Rat>, candidate: &Form<Rat>, w: &[[Rat; 3]; 3]) -> Option<Rat> {
    let transformed = candidate.compose_linear_unchecked(w);
    f.proportionality(&transformed)
}

/// Reconstructs the input exactly from a match (the round-trip contract).
pub fn reconstruct(m: &FamilyMatch) -> Form<Rat> {
    m.family_form.compose_linear_unchecked(&m.transform).scale(&m.alpha)
}

fn mat_mul(a: &[[Rat; 3]; 3], b: &[[Rat; 3]; 3]) -> [[Rat; 3]; 3] {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            (0..3).fold(Rat::zero(), |acc, k| acc + &a[i][k] * &b[k][j])
        })
    })
}

fn identity_mat() -> [[Rat; 3]; 3] {
    std::array::from_fn(|i| std::array::from_fn(|j| if i == j { Rat::one() } else { Rat::zero() }))
}

/// Permutation matrix sending variable slot `i` of the composed form to
/// input variable `perm[i]`: composing with it computes `f(v_{perm[0]},
/// v_{perm[1]}, v_{perm[2]})`.
fn perm_mat(perm: [usize; 3]) -> [[Rat; 3]; 3] {
    let mut m = std::array::from_fn(|_| std::array::from_fn(|_| Rat::zero()));
    let m_ref: &mut [[Rat; 3]; 3] = &mut m;
    for i in 0..3 {
        m_ref[i][perm[i]] = Rat::one();
    }
    m
}

fn diag_mat(d: &[Rat; 3]) -> [[Rat; 3]; 3] {
    let mut m: [[Rat; 3]; 3] = std::array::from_fn(|_| std::array::from_fn(|_| Rat::zero()));
    for i in 0..3 {
        m[i][i] = d[i].clone();
    }
    m
}

fn inverse_diag(d: &[Rat; 3]) -> [[Rat; 3]; 3] {
    diag_mat(&[d[0].recip(), d[1].recip(), d[2].recip()])
}

/// The cyclic rotation `rho` with `g(x,y,z) = f(y,z,x)` iterated `k` times,
/// as a matrix for `compose_linear`.
fn rotation_mat(k: usize) -> [[Rat; 3]; 3] {
    match k % 3 {
        0 => identity_mat(),
        1 => perm_mat([1, 2, 0]),
        _ => perm_mat([2, 0, 1]),
    }
}

fn rotation_inverse_mat(k: usize) -> [[Rat; 3]; 3] {
    rotation_mat((3 - k % 3) % 3)
}

fn swap_yz_mat() -> [[Rat; 3]; 3] {
    perm_mat([0, 2, 1])
}

/// The boundary-zero data the case tables key on.
#[derive(Debug, Clone)]
struct EdgeData {
    /// Position parameter of the single open-edge zero per edge, when
    /// present and rational: for `x = 0` the ratio y/z... concretely the
    /// parameter `t` with the zero at the edge parametrization point.
    open_edge: [Option<Rat>; 3],
    vertex_zero: [bool; 3],
    irrational: bool,
    multiple_on_edge: bool,
}

fn edge_data(f1: &Form<Rat>) -> Result<EdgeData, Error> {
    let inv = boundary_zeros(f1)?;
    let mut open_edge: [Vec<Rat>; 3] = [vec![], vec![], vec![]];
    let mut vertex_zero = [false; 3];
    for z in &inv.zeros {
        match &z.location {
            ZeroLocation::OpenEdge(v) => {
                // parameter t of (1 : t) in the edge parametrization from
                // boundary_zeros: reconstruct from the point coordinates
                let (i0, i1) = match v {
                    Var::X => (1, 2),
                    Var::Y => (0, 2),
                    Var::Z => (0, 1),
                };
                let t = &z.point.coords[i1] / &z.point.coords[i0];
                open_edge[v.index()].push(t);
            }
            ZeroLocation::Vertex(v) => vertex_zero[v.index()] = true,
            ZeroLocation::Interior => {}
        }
    }
    let multiple_on_edge = open_edge.iter().any(|v| v.len() > 1);
    Ok(EdgeData {
        open_edge: [
            open_edge[0].first().cloned(),
            open_edge[1].first().cloned(),
            open_edge[2].first().cloned(),
        ],
        vertex_zero,
        irrational: inv.has_irrational_data,
        multiple_on_edge,
    })
}

/// Classifies a nonzero rational cubic.
pub fn classify_form(f: &Form<Rat>) -> Result<ClassificationResult, Error> {
    if f.is_zero() || f.degree() != 3 {
        return Err(Error::Malformed("classification needs a nonzero cubic".into()));
    }

    // reducible cases
    if linear_factor(f).is_some() {
        return Ok(match check_reducible_extremal(f) {
            ReducibleExtremal::Monomial { alpha } => ClassificationResult {
                verdict: ClassCase::Case6Xyz,
                params: vec![],
                transform: Some(mat_strings(&identity_mat())),
                alpha: Some(alpha),
                diagnostics: vec!["positive multiple of the coordinate monomial".into()],
            },
            ReducibleExtremal::EdgeSquare { coordinate, line, alpha } => ClassificationResult {
                verdict: ClassCase::Case5EdgeSquare,
                params: std::iter::once(coordinate.to_string()).chain(line).collect(),
                transform: Some(mat_strings(&identity_mat())),
                alpha: Some(alpha),
                diagnostics: vec!["coordinate times a squared line meeting the octant in a segment".into()],
            },
            ReducibleExtremal::NotExtremal { reason } => ClassificationResult::not_extremal(&reason),
        });
    }

    // unique singular point
    let search = find_singular_points(f)?;
    if search.identically_singular {
        return Ok(ClassificationResult::not_extremal("repeated factor"));
    }
    if search.rational.is_empty() {
        if !search.irrational.is_empty() {
            return Ok(ClassificationResult::indeterminate(
                "singular locus has irrational candidates only",
            ));
        }
        return Ok(ClassificationResult::not_extremal(
            "no octant singular point (smooth or complex-singular curve)",
        ));
    }
    if search.rational.len() > 1 {
        return Ok(ClassificationResult::not_extremal("more than one real singular point"));
    }
    let sing = &search.rational[0];
    let Some(oct) = sing.point.octant_representative() else {
        return Ok(ClassificationResult::not_extremal("singular point outside the octant"));
    };
    let zero_coords = oct.iter().filter(|c| c.is_zero()).count();

    match sing.kind {
        SingKind::Crunode => Ok(ClassificationResult::not_extremal("singular point is a crunode")),
        SingKind::Degenerate => Ok(ClassificationResult::not_extremal("degenerate singular point")),
        SingKind::Cusp => {
            if zero_coords != 1 {
                return Ok(ClassificationResult::not_extremal(
                    "cusp not on an open edge of the octant",
                ));
            }
            classify_cusp(f, &oct)
        }
        SingKind::Acnode => {
            if zero_coords != 0 {
                return Ok(ClassificationResult::not_extremal("acnode on the octant boundary"));
            }
            classify_acnode(f, &oct)
        }
    }
}

fn mat_strings(m: &[[Rat; 3]; 3]) -> Vec<Vec<String>> {
    m.iter().map(|row| row.iter().map(rat_to_string).collect()).collect()
}

fn result_from_match(m: FamilyMatch, mut diagnostics: Vec<String>) -> ClassificationResult {
    diagnostics.push("reconstruction: input = alpha * family(W v)".into());
    ClassificationResult {
        verdict: m.case.clone(),
        params: m.params.iter().map(rat_to_string).collect(),
        transform: Some(mat_strings(&m.transform)),
        alpha: Some(rat_to_string(&m.alpha)),
        diagnostics,
    }
}

/// Cusp on an open edge: rotate the edge to `x = 0`, scale the cusp to
/// `(0:1:1)`, read the two boundary tangency zeros and rebuild the kernel
/// family.
fn classify_cusp(f: &Form<Rat>, cusp: &[Rat; 3]) -> Result<ClassificationResult, Error> {
    // rotation putting the vanishing coordinate first
    let zero_idx = (0..3).find(|&i| cusp[i].is_zero()).expect("cusp on an edge");
    // rho^k moves input slot: f_rot = f o rho^k has its cusp coordinate at
    // slot 0 when k rotations place it there
    let k = zero_idx; // f(y,z,x): slot0 <- old index 1... choose by search
    let mut chosen = None;
    for k in 0..3 {
        let rot = rotation_mat(k);
        let f_rot = f.compose_linear_unchecked(&rot);
        let c_rot = apply_mat_point(&rotation_inverse_mat(k), cusp);
        if c_rot[0].is_zero() {
            chosen = Some((k, f_rot, c_rot));
            break;
        }
    }
    let _ = k;
    let (k, f_rot, c_rot) = chosen.expect("some rotation puts the cusp on x = 0");
    // scale (0 : c1 : c2) to (0 : 1 : 1)
    let d = [Rat::one(), c_rot[1].clone(), c_rot[2].clone()];
    let f1 = f_rot.compose_linear_unchecked(&diag_mat(&d));

    // boundary zeros on the two other edges give the parameters
    let data = edge_data(&f1)?;
    if data.irrational {
        return Ok(ClassificationResult::indeterminate("irrational boundary zero data"));
    }
    // p from the edge y = 0 (zero at (p : 0 : 1), parameter t = z/x = 1/p
    // or the vertex P_z); q from z = 0 (zero at (q : 1 : 0), t = y/x = 1/q
    // or the vertex P_y)
    let p = match &data.open_edge[1] {
        Some(t) if t.is_positive() => t.recip(),
        _ if data.vertex_zero[2] => Rat::zero(),
        _ => return Ok(ClassificationResult::not_extremal("missing tangency zero for the cusp family")),
    };
    let q = match &data.open_edge[2] {
        Some(t) if t.is_positive() => t.recip(),
        _ if data.vertex_zero[1] => Rat::zero(),
        _ => return Ok(ClassificationResult::not_extremal("missing tangency zero for the cusp family")),
    };
    if p.is_zero() && q.is_zero() {
        return Ok(ClassificationResult::not_extremal("degenerate cusp parameters"));
    }
    let Ok(candidate) = make_h_pq(&p, &q) else {
        return Ok(ClassificationResult::not_extremal("cusp kernel is not one-dimensional"));
    };
    // f1 = alpha * candidate  =>  f = alpha * candidate o W
    let w = mat_mul(&inverse_diag(&d), &rotation_inverse_mat(k));
    if let Some(alpha) = match_family(f, &candidate, &w) {
        if alpha.is_positive() {
            let m = FamilyMatch {
                case: ClassCase::Case4H,
                params: vec![p, q],
                family_form: candidate,
                transform: w,
                alpha,
            };
            return Ok(result_from_match(m, vec!["cusp family via kernel reconstruction".into()]));
        }
        return Ok(ClassificationResult::not_extremal("negative multiple of the cusp family"));
    }
    Ok(ClassificationResult::not_extremal("cusp configuration does not match the kernel family"))
}

fn apply_mat_point(m: &[[Rat; 3]; 3], p: &[Rat; 3]) -> [Rat; 3] {
    std::array::from_fn(|i| (0..3).fold(Rat::zero(), |acc, j| acc + &m[i][j] * &p[j]))
}

/// Interior acnode: scale it to `(1:1:1)`, then walk the configuration
/// tables over the three cyclic rotations, matching exactly.
fn classify_acnode(f: &Form<Rat>, node: &[Rat; 3]) -> Result<ClassificationResult, Error> {
    // normalize the representative to first coordinate 1
    let a = [&node[0] / &node[0], &node[1] / &node[0], &node[2] / &node[0]];
    let d0 = [Rat::one(), a[1].clone(), a[2].clone()];
    let f1 = f.compose_linear_unchecked(&diag_mat(&d0));
    // f = f1 o diag(d0)^{-1}
    let base_w = inverse_diag(&d0);

    let mut diagnostics: Vec<String> = Vec::new();
    let mut alternates: Vec<String> = Vec::new();
    let mut chosen: Option<FamilyMatch> = None;

    for k in 0..3 {
        let rot = rotation_mat(k);
        let f_rot = f1.compose_linear_unchecked(&rot);
        let data = edge_data(&f_rot)?;
        if data.irrational {
            return Ok(ClassificationResult::indeterminate("irrational boundary zero data"));
        }
        if data.multiple_on_edge {
            return Ok(ClassificationResult::not_extremal("two zeros on one open edge"));
        }
        // candidate list per configuration, in the fixed order F, G, H
        let u = data.open_edge[0].clone(); // zero (0 : 1 : u) on x = 0
        let v = data.open_edge[1].clone(); // zero (1 : 0 : v) on y = 0
        let w_par = data.open_edge[2].clone(); // zero (1 : w : 0) on z = 0
        let mut candidates: Vec<(ClassCase, Vec<Rat>, Form<Rat>, bool)> = Vec::new();
        match (&u, &v, &w_par) {
            (Some(u), Some(v), Some(w)) => {
                // zeros (0 : p : 1) => u = y/z at (1 : u): p = 1/u... the
                // edge parametrization for x = 0 runs (0 : 1 : t), so the
                // family zero (0 : p : 1) sits at t = 1/p; likewise
                // (1 : 0 : q) at t = q and (r : 1 : 0) at t = 1/r.
                if u.is_positive() && w.is_positive() {
                    candidates.push((
                        ClassCase::Case1F,
                        vec![u.recip(), v.clone(), w.recip()],
                        make_f_pqr(&u.recip(), v, &w.recip()),
                        false,
                    ));
                }
            }
            (Some(u), Some(v), None) => {
                // G(p, q) has zeros (0 : 1 : p) at t = p and (1 : 0 : q) at
                // t = q, with both vertices P_x, P_y in the zero set
                candidates.push((ClassCase::Case3G, vec![u.clone(), v.clone()], make_g_pq(u, v), false));
                // F(u, 0, 1/v) o swap(y,z): its x=0 zero sits at t = u and
                // its z=0 zero lands on y=0 at t = 1/r; vertex P_x only
                if u.is_positive() && v.is_positive() {
                    let r = v.recip();
                    candidates.push((
                        ClassCase::Case2FPerm,
                        vec![u.clone(), Rat::zero(), r.clone()],
                        make_f_pqr(u, &Rat::zero(), &r),
                        true,
                    ));
                }
                // F(p, q, 0): vertex P_y only
                if u.is_positive() {
                    candidates.push((
                        ClassCase::Case1F,
                        vec![u.recip(), v.clone(), Rat::zero()],
                        make_f_pqr(&u.recip(), v, &Rat::zero()),
                        false,
                    ));
                }
            }
            (Some(u), None, None) => {
                candidates.push((ClassCase::Case3G, vec![u.clone(), Rat::zero()], make_g_pq(u, &Rat::zero()), false));
                if u.is_positive() {
                    candidates.push((
                        ClassCase::Case1F,
                        vec![u.recip(), Rat::zero(), Rat::zero()],
                        make_f_pqr(&u.recip(), &Rat::zero(), &Rat::zero()),
                        false,
                    ));
                    // mirrored configuration (vertex zeros P_x, P_z)
                    candidates.push((
                        ClassCase::Case2FPerm,
                        vec![u.clone(), Rat::zero(), Rat::zero()],
                        make_f_pqr(u, &Rat::zero(), &Rat::zero()),
                        true,
                    ));
                }
            }
            (None, None, None) => {
                candidates.push((ClassCase::Case3G, vec![Rat::zero(), Rat::zero()], make_g_pq(&Rat::zero(), &Rat::zero()), false));
                candidates.push((
                    ClassCase::Case1F,
                    vec![Rat::zero(), Rat::zero(), Rat::zero()],
                    make_f_pqr(&Rat::zero(), &Rat::zero(), &Rat::zero()),
                    false,
                ));
                candidates.push((
                    ClassCase::Case2FPerm,
                    vec![Rat::zero(), Rat::zero(), Rat::zero()],
                    make_f_pqr(&Rat::zero(), &Rat::zero(), &Rat::zero()),
                    true,
                ));
            }
            _ => {
                // other two-edge and one-edge configurations are reached at
                // the rotation that lands them on the canonical slots
            }
        }
        for (case, params, family_form, odd_swap) in candidates {
            // f1 o rot (o swap) = alpha * family  =>
            // f = alpha * family o (swap) o rot^{-1} o diag(d0)^{-1}
            let mut w = mat_mul(&rotation_inverse_mat(k), &base_w);
            if odd_swap {
                w = mat_mul(&swap_yz_mat(), &w);
            }
            let Some(alpha) = match_family(f, &family_form, &w) else { continue };
            if !alpha.is_positive() {
                alternates.push(format!("{case:?} matched with nonpositive scale"));
                continue;
            }
            // parameter-region guards
            let guard_ok = match case {
                ClassCase::Case1F | ClassCase::Case2FPerm => {
                    let (p, q, r) = (&params[0], &params[1], &params[2]);
                    let guards = [a1(p, q), a1(q, r), a1(r, p)];
                    if guards.iter().any(|g| g.is_negative()) {
                        diagnostics.push("matched first family outside its membership region".into());
                        return Ok(ClassificationResult::not_extremal(
                            "parameter guard a1 < 0: refuted by a negative vertex value",
                        ));
                    }
                    true
                }
                ClassCase::Case3G => {
                    let s = &params[0] + &params[1];
                    if s > Rat::one() {
                        return Ok(ClassificationResult::not_extremal(
                            "second family with p + q > 1: refuted on the diagonal",
                        ));
                    }
                    // p + q = 1 is reducible, handled earlier
                    true
                }
                _ => true,
            };
            if !guard_ok {
                continue;
            }
            let m = FamilyMatch { case, params, family_form, transform: w, alpha };
            if chosen.is_none() {
                chosen = Some(m);
            } else {
                alternates.push(format!("{:?} also matches", m.case));
            }
        }
        if chosen.is_some() {
            break;
        }
    }

    match chosen {
        Some(m) => {
            if !alternates.is_empty() {
                diagnostics.push(format!("alternates: {}", alternates.join("; ")));
            }
            Ok(result_from_match(m, diagnostics))
        }
        None => Ok(ClassificationResult::not_extremal(
            "acnode configuration matches no family member",
        )),
    }
}
