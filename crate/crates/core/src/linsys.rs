//! Exact constraint systems from zero conditions and their nullspaces:
//! the engine behind every "the solution space is one line" claim.

use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::poly::{monomials, space_dim, Exp, Form, ProjPoint};
use crate::scalar::{rationalize_condition, Rat, TowerElem};

/// Derivative multi-index `(ax, ay, az)`; the condition is
/// `d^a f(point) = 0`. Total order stays <= 2 here: these are the concrete
/// encodings of local and infinitesimal local cones for cubics.
pub type DerivIndex = (u32, u32, u32);

/// A projective point together with the derivative conditions imposed there.
#[derive(Debug, Clone)]
pub struct ZeroCondition<S: crate::scalar::Scalar = Rat> {
    pub point: ProjPoint<S>,
    pub constraints: Vec<DerivIndex>,
}

impl<S: crate::scalar::Scalar> ZeroCondition<S> {
    pub fn new(point: ProjPoint<S>, mut constraints: Vec<DerivIndex>) -> Self {
        constraints.sort_unstable();
        constraints.dedup();
        // plain vanishing precedes derivative vanishing
        if !constraints.contains(&(0, 0, 0)) && !constraints.is_empty() {
            constraints.insert(0, (0, 0, 0));
        }
        ZeroCondition { point, constraints }
    }
}

/// The zero types of the concrete condition templates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConditionKind {
    /// Interior zero of a PSD form: the point is a singular point of the
    /// curve; conditions `f = f_x = f_y = 0` (the z-derivative follows from
    /// the Euler relation at a point with nonzero last coordinate).
    InteriorNode,
    /// Zero on an open edge: `f = 0` plus the derivative along the edge.
    EdgeTangent,
    /// Zero at a vertex with contact order `m` along the doubling edge:
    /// derivatives of order `0..m` with respect to the coordinate that
    /// moves along that edge.
    VertexLength(u32),
    /// Cusp on an open edge: full first-order vanishing plus the two
    /// second-order conditions annihilating the transversal direction.
    EdgeCusp,
}

/// Builds the paper's exact constraint set for one zero type, in
/// homogeneous partials. Affine-chart conditions are translated via the
/// Euler relations, which is why each template drops one redundant partial.
pub fn condition_template(kind: ConditionKind, point: ProjPoint<Rat>) -> Result<ZeroCondition<Rat>, Error> {
    let [x, y, z] = &point.coords;
    let zero = |r: &Rat| r.is_zero();
    let nz = |r: &Rat| !r.is_zero();
    match kind {
        ConditionKind::InteriorNode => {
            if !(nz(x) && nz(y) && nz(z)) {
                return Err(Error::ConditionKindMismatch("interior_node needs an interior point".into()));
            }
            // f, f_x1, f_x2; f_x0 implied by Euler
            Ok(ZeroCondition::new(point, vec![(0, 0, 0), (0, 1, 0), (0, 0, 1)]))
        }
        ConditionKind::EdgeTangent => {
            let zeros = [zero(x), zero(y), zero(z)];
            if zeros.iter().filter(|b| **b).count() != 1 {
                return Err(Error::ConditionKindMismatch("edge_tangent needs an open-edge point".into()));
            }
            // derivative along the edge: with respect to either nonzero
            // coordinate (Euler-equivalent); use the first nonzero one.
            let along = if zeros[0] {
                // edge x = 0, moving coordinate y
                (0, 1, 0)
            } else if zeros[1] {
                // edge y = 0, moving coordinate x
                (1, 0, 0)
            } else {
                // edge z = 0, moving coordinate x
                (1, 0, 0)
            };
            Ok(ZeroCondition::new(point, vec![(0, 0, 0), along]))
        }
        ConditionKind::VertexLength(m) => {
            if !(1..=3).contains(&m) {
                return Err(Error::ConditionKindMismatch("vertex length must be 1..=3".into()));
            }
            let vertex = [nz(x) && zero(y) && zero(z), zero(x) && nz(y) && zero(z), zero(x) && zero(y) && nz(z)];
            let Some(v) = vertex.iter().position(|b| *b) else {
                return Err(Error::ConditionKindMismatch("vertex_length needs a coordinate vertex".into()));
            };
            // Contact order m along an incident edge: derivatives with
            // respect to the coordinate that varies along that edge. The
            // doubling edge must be supplied by the caller through the
            // dedicated constructor below; the template defaults to the
            // lexicographically first incident edge.
            let moving = match v {
                0 => 1, // P_x: default edge z = 0, moving coordinate y
                1 => 0, // P_y: default edge z = 0, moving coordinate x
                _ => 0, // P_z: default edge y = 0, moving coordinate x
            };
            Ok(vertex_conditions(point, moving, m))
        }
        ConditionKind::EdgeCusp => {
            let zeros = [zero(x), zero(y), zero(z)];
            if zeros.iter().filter(|b| **b).count() != 1 {
                return Err(Error::ConditionKindMismatch("edge_cusp needs an open-edge point".into()));
            }
            // Full first order, plus second-order conditions in the
            // direction transversal to the curve branch. For the canonical
            // cusp location (0 : 1 : 1) these are f_xx and f_xy.
            if zeros[0] {
                Ok(ZeroCondition::new(
                    point,
                    vec![(0, 0, 0), (1, 0, 0), (0, 1, 0), (2, 0, 0), (1, 1, 0)],
                ))
            } else if zeros[1] {
                Ok(ZeroCondition::new(
                    point,
                    vec![(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 2, 0), (1, 1, 0)],
                ))
            } else {
                Ok(ZeroCondition::new(
                    point,
                    vec![(0, 0, 0), (1, 0, 0), (0, 0, 1), (2, 0, 0), (1, 0, 1)],
                ))
            }
        }
    }
}

/// Vertex conditions of Example-type `length = m` along the edge whose
/// moving coordinate has index `moving` (0 = x, 1 = y, 2 = z).
pub fn vertex_conditions(point: ProjPoint<Rat>, moving: usize, m: u32) -> ZeroCondition<Rat> {
    let mut cs = Vec::new();
    for k in 0..m {
        let mut idx = (0, 0, 0);
        match moving {
            0 => idx.0 = k,
            1 => idx.1 = k,
            _ => idx.2 = k,
        }
        cs.push(idx);
    }
    ZeroCondition::new(point, cs)
}

/// One matrix row per `(condition, constraint)` pair: the value of
/// `d^alpha m (P)` for each degree-`degree` monomial `m`.
pub fn build_constraint_matrix(conditions: &[ZeroCondition<Rat>], degree: u32) -> Matrix {
    let cols = monomials(degree);
    let mut rows = Vec::new();
    for c in conditions {
        for &alpha in &c.constraints {
            let row: Vec<Rat> = cols
                .iter()
                .map(|&e| monomial_partial_eval(e, alpha, &c.point.coords))
                .collect();
            rows.push(row);
        }
    }
    Matrix::new(rows, cols.len())
}

/// Tower points expand into one rational row per basis coordinate.
pub fn build_constraint_matrix_tower(
    conditions: &[ZeroCondition<TowerElem>],
    degree: u32,
) -> Result<Matrix, Error> {
    let cols = monomials(degree);
    let mut rows = Vec::new();
    for c in conditions {
        for &alpha in &c.constraints {
            let row: Vec<TowerElem> = cols
                .iter()
                .map(|&e| monomial_partial_eval(e, alpha, &c.point.coords))
                .collect();
            for rational_row in rationalize_condition(&row)? {
                if rational_row.iter().any(|v| !v.is_zero()) {
                    rows.push(rational_row);
                }
            }
        }
    }
    Ok(Matrix::new(rows, cols.len()))
}

/// `d^alpha (x^i y^j z^k)` evaluated at a point, over any scalar.
pub fn monomial_partial_eval<S: crate::scalar::Scalar>(e: Exp, alpha: DerivIndex, point: &[S; 3]) -> S {
    let mut coef = 1i64;
    let mut exps = [e.0, e.1, e.2];
    for (slot, &a) in [alpha.0, alpha.1, alpha.2].iter().enumerate() {
        for _ in 0..a {
            if exps[slot] == 0 {
                return S::zero();
            }
            coef *= exps[slot] as i64;
            exps[slot] -= 1;
        }
    }
    let mut acc = S::from_rat(&crate::scalar::rat_int(coef));
    for (slot, &n) in exps.iter().enumerate() {
        for _ in 0..n {
            acc = acc.mul(&point[slot]);
        }
    }
    acc
}

/// Dense exact rational matrix.
#[derive(Debug, Clone)]
pub struct Matrix {
    rows: Vec<Vec<Rat>>,
    ncols: usize,
}

/// Exact kernel description: dimension and a reduced-echelon-normalized
/// basis (each vector has coefficient 1 at its own free column and 0 at the
/// other free columns).
#[derive(Debug, Clone)]
pub struct KernelResult {
    pub dimension: usize,
    pub rank: usize,
    pub basis: Vec<Vec<Rat>>,
}

impl Matrix {
    pub fn new(rows: Vec<Vec<Rat>>, ncols: usize) -> Self {
        for r in &rows {
            assert_eq!(r.len(), ncols);
        }
        Matrix { rows, ncols }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[Vec<Rat>] {
        &self.rows
    }

    /// Fraction-free (Bareiss-style) forward elimination. Pivot choice is
    /// deterministic: leftmost column with a nonzero candidate, among those
    /// the entry of maximal absolute height, ties broken by row order.
    /// Returns the echelon rows and the pivot column of each.
    fn bareiss_echelon(&self) -> (Vec<Vec<Rat>>, Vec<usize>) {
        let mut m = self.rows.clone();
        let nrows = m.len();
        let mut pivots = Vec::new();
        let mut prev = Rat::one();
        let mut r = 0usize;
        for c in 0..self.ncols {
            if r >= nrows {
                break;
            }
            let mut best: Option<(usize, num_bigint::BigInt)> = None;
            for (i, row) in m.iter().enumerate().skip(r) {
                if !row[c].is_zero() {
                    let h = height(&row[c]);
                    match &best {
                        Some((_, bh)) if *bh >= h => {}
                        _ => best = Some((i, h)),
                    }
                }
            }
            let Some((pi, _)) = best else { continue };
            m.swap(r, pi);
            // Bareiss update: a'_{ij} = (a_{rc} a_{ij} - a_{ic} a_{rj}) / prev
            let pivot = m[r][c].clone();
            for i in r + 1..nrows {
                for j in (c + 1)..self.ncols {
                    let num = &pivot * &m[i][j] - &m[i][c] * &m[r][j];
                    m[i][j] = num / &prev;
                }
                m[i][c] = Rat::zero();
            }
            prev = pivot;
            pivots.push(c);
            r += 1;
        }
        m.truncate(pivots.len());
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.bareiss_echelon().1.len()
    }

    /// Exact kernel basis with deterministic normalization.
    pub fn nullspace(&self) -> KernelResult {
        let (ech, pivots) = self.bareiss_echelon();
        let rank = pivots.len();
        let free: Vec<usize> = (0..self.ncols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![Rat::zero(); self.ncols];
            v[fc] = Rat::one();
            // back-substitute through the echelon rows
            for (ri, &pc) in pivots.iter().enumerate().rev() {
                let mut s = Rat::zero();
                for j in pc + 1..self.ncols {
                    if !ech[ri][j].is_zero() && !v[j].is_zero() {
                        s += &ech[ri][j] * &v[j];
                    }
                }
                v[pc] = -s / &ech[ri][pc];
            }
            basis.push(v);
        }
        KernelResult { dimension: free.len(), rank, basis }
    }

    /// Checks `row . v = 0` for every row.
    pub fn annihilates(&self, v: &[Rat]) -> bool {
        self.rows.iter().all(|row| {
            row.iter()
                .zip(v)
                .fold(Rat::zero(), |acc, (a, b)| acc + a * b)
                .is_zero()
        })
    }
}

fn height(r: &Rat) -> num_bigint::BigInt {
    let n = r.numer().abs();
    let d = r.denom().abs();
    if n > d { n } else { d }
}

/// Kernel uniqueness against an expected form: true iff the kernel is one
/// line spanned by a scalar multiple of the expected coefficient vector.
pub struct UniqueCheck {
    pub dimension: usize,
    pub rank: usize,
    pub matched: bool,
}

pub fn verify_unique(conditions: &[ZeroCondition<Rat>], degree: u32, expected: &Form<Rat>) -> UniqueCheck {
    assert_eq!(expected.degree(), degree);
    let m = build_constraint_matrix(conditions, degree);
    let k = m.nullspace();
    let matched = k.dimension == 1 && {
        let candidate = Form::from_coeff_vector(degree, &k.basis[0]);
        candidate.proportionality(expected).is_some() || expected.proportionality(&candidate).is_some()
    };
    UniqueCheck { dimension: k.dimension, rank: k.rank, matched }
}

/// Solves `M v = rhs` when the solution is unique (used by jet analysis).
pub fn solve_unique(m: &Matrix, rhs: &[Rat]) -> Option<Vec<Rat>> {
    // Append -rhs as an extra column and read the kernel of the augmented
    // homogeneous system with a forced 1 in the last slot.
    let mut rows = m.rows.clone();
    for (row, b) in rows.iter_mut().zip(rhs) {
        row.push(-b.clone());
    }
    let aug = Matrix::new(rows, m.ncols + 1);
    let k = aug.nullspace();
    let mut sol = None;
    for v in &k.basis {
        if !v[m.ncols].is_zero() {
            let s = &v[m.ncols];
            let w: Vec<Rat> = v[..m.ncols].iter().map(|a| a / s).collect();
            if sol.is_some() {
                return None;
            }
            sol = Some(w);
        }
    }
    sol
}

pub fn kernel_dim_space(degree: u32) -> usize {
    space_dim(degree)
}
