//! Checked-in data for the two explicit higher-degree constructions: an
//! extremal quartic on the octant whose lift is an extremal octic with 17
//! isolated zeros over Q(sqrt2, sqrt3, sqrt5), and an extremal quintic
//! whose lift is an extremal decic with 26 rational acnodes. Each runs its
//! full kernel verification.

use num_traits::Zero;
use serde::Serialize;

use crate::error::Error;
use crate::linsys::{monomial_partial_eval, Matrix};
use crate::poly::{monomials, Exp, Form};
use crate::scalar::{rat_int, rationalize_condition, Rat, Tower, TowerElem};

/// The extremal quartic determined (up to scale) by vanishing at
/// (1,1,1), (2,3,1), (1,2,3), (0,4,3), (6,0,5), (0,1,0).
///
/// The published coefficient table has a typo in the y^3 z entry
/// (5496666); re-solving the defining 14-condition system pins it to
/// 549666, which is the value stored here (all other entries agree with
/// the published table).
pub fn quartic_octant_extremal() -> Form<Rat> {
    let t = |e: Exp, c: i64| (e, rat_int(c));
    Form::from_terms(
        4,
        [
            t(Exp(4, 0, 0), 591900050),
            t(Exp(3, 1, 0), 437205100),
            t(Exp(2, 2, 0), -766414561),
            t(Exp(1, 3, 0), 217365672),
            t(Exp(3, 0, 1), -1650610670),
            t(Exp(2, 1, 1), -102695021),
            t(Exp(1, 2, 1), 248518503),
            t(Exp(0, 3, 1), 549666),
            t(Exp(2, 0, 2), 1531736792),
            t(Exp(1, 1, 2), 118221267),
            t(Exp(0, 2, 2), 101630538),
            t(Exp(1, 0, 3), -636743352),
            t(Exp(0, 1, 3), -273946320),
            t(Exp(0, 0, 4), 183282336),
        ],
    )
    .expect("degree-4 exponents")
}

/// The six octant zeros of the quartic.
pub fn quartic_zeros() -> Vec<[Rat; 3]> {
    [[1, 1, 1], [2, 3, 1], [1, 2, 3], [0, 4, 3], [6, 0, 5], [0, 1, 0]]
        .into_iter()
        .map(|p| [rat_int(p[0]), rat_int(p[1]), rat_int(p[2])])
        .collect()
}

/// The extremal quintic determined by vanishing at (4,1,1), (1,4,1),
/// (1,1,4), (1,9,9), (9,1,9), (9,9,1), (1,0,0), (0,1,0).
pub fn quintic_octant_extremal() -> Form<Rat> {
    let t = |e: Exp, c: i64| (e, rat_int(c));
    Form::from_terms(
        5,
        [
            t(Exp(4, 1, 0), 837),
            t(Exp(3, 2, 0), -645),
            t(Exp(2, 3, 0), -645),
            t(Exp(1, 4, 0), 837),
            t(Exp(4, 0, 1), 1755),
            t(Exp(3, 1, 1), -17181),
            t(Exp(2, 2, 1), 23876),
            t(Exp(1, 3, 1), -17181),
            t(Exp(0, 4, 1), 1755),
            t(Exp(3, 0, 2), -3486),
            t(Exp(2, 1, 2), 19594),
            t(Exp(1, 2, 2), 19594),
            t(Exp(0, 3, 2), -3486),
            t(Exp(2, 0, 3), 3287),
            t(Exp(1, 1, 3), -11030),
            t(Exp(0, 2, 3), 3287),
            t(Exp(1, 0, 4), -1692),
            t(Exp(0, 1, 4), -1692),
            t(Exp(0, 0, 5), 648),
        ],
    )
    .expect("degree-5 exponents")
}

/// The 26 rational acnodes of the decic lift: sign orbits of the six base
/// zeros' square roots plus the two vertices.
pub fn quintic_zeros() -> Vec<[Rat; 3]> {
    [
        [4, 1, 1],
        [1, 4, 1],
        [1, 1, 4],
        [1, 9, 9],
        [9, 1, 9],
        [9, 9, 1],
        [1, 0, 0],
        [0, 1, 0],
    ]
    .into_iter()
    .map(|p| [rat_int(p[0]), rat_int(p[1]), rat_int(p[2])])
    .collect()
}

#[derive(Debug, Serialize)]
pub struct AppendixReport {
    pub theorem: String,
    pub degree: u32,
    pub points: usize,
    pub conditions: usize,
    pub rational_rows: usize,
    pub columns: usize,
    pub rank: usize,
    pub kernel_dim: usize,
    pub matched: bool,
}

fn sign_orbit_tower(base: &[Rat; 3], tower: &std::sync::Arc<Tower>) -> Result<Vec<[TowerElem; 3]>, Error> {
    let sqrts: Vec<TowerElem> = base
        .iter()
        .map(|c| TowerElem::sqrt_of(c, tower))
        .collect::<Result<_, _>>()?;
    let nz: Vec<usize> = (0..3).filter(|&i| !base[i].is_zero()).collect();
    let mut out = Vec::new();
    for mask in 0..(1usize << (nz.len() - 1)) {
        let mut coords = sqrts.clone();
        for (bit, &idx) in nz.iter().skip(1).enumerate() {
            if mask & (1 << bit) != 0 {
                coords[idx] = coords[idx].negated();
            }
        }
        out.push([coords[0].clone(), coords[1].clone(), coords[2].clone()]);
    }
    Ok(out)
}

/// Kernel verification for the octic: 17 lifted zeros, the printed uniform
/// condition set F = F_x = F_y = 0 at every point (including the vertex),
/// expanded over the radical basis.
pub fn verify_octic() -> Result<AppendixReport, Error> {
    let quartic = quartic_octant_extremal();
    let lift = quartic.square_substitute();
    let tower = Tower::new(vec![2, 3, 5])?;
    let mut points: Vec<[TowerElem; 3]> = Vec::new();
    for base in quartic_zeros() {
        points.extend(sign_orbit_tower(&base, &tower)?);
    }
    assert_eq!(points.len(), 17);

    let cols = monomials(8);
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    let mut conditions = 0usize;
    for p in &points {
        for alpha in [(0, 0, 0), (1, 0, 0), (0, 1, 0)] {
            conditions += 1;
            let row: Vec<TowerElem> = cols
                .iter()
                .map(|&e| monomial_partial_eval(e, alpha, p))
                .collect();
            for rr in rationalize_condition(&row)? {
                if rr.iter().any(|x| !x.is_zero()) {
                    rows.push(rr);
                }
            }
        }
    }
    let rational_rows = rows.len();
    let m = Matrix::new(rows, cols.len());
    let k = m.nullspace();
    let matched = k.dimension == 1 && {
        let candidate = Form::from_coeff_vector(8, &k.basis[0]);
        candidate.proportionality(&lift).is_some()
    };
    Ok(AppendixReport {
        theorem: "octic".into(),
        degree: 8,
        points: points.len(),
        conditions,
        rational_rows,
        columns: cols.len(),
        rank: k.rank,
        kernel_dim: k.dimension,
        matched,
    })
}

/// Kernel verification for the decic: the 26 rational acnodes with the
/// full-gradient condition set, a 104 x 66 rational system.
pub fn verify_decic() -> Result<AppendixReport, Error> {
    let quintic = quintic_octant_extremal();
    let lift = quintic.square_substitute();
    let mut points: Vec<[Rat; 3]> = Vec::new();
    for base in quintic_zeros() {
        // rational square roots: 4 -> 2, 9 -> 3, 1 -> 1
        let sqrts: Vec<Rat> = base
            .iter()
            .map(|c| {
                let (s, d) = crate::scalar::sqrt_split(c).expect("nonnegative");
                assert_eq!(d, 1, "decic zeros are rational");
                s
            })
            .collect();
        let nz: Vec<usize> = (0..3).filter(|&i| !base[i].is_zero()).collect();
        for mask in 0..(1usize << (nz.len() - 1)) {
            let mut coords = [sqrts[0].clone(), sqrts[1].clone(), sqrts[2].clone()];
            for (bit, &idx) in nz.iter().skip(1).enumerate() {
                if mask & (1 << bit) != 0 {
                    coords[idx] = -coords[idx].clone();
                }
            }
            points.push(coords);
        }
    }
    assert_eq!(points.len(), 26);

    let cols = monomials(10);
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for p in &points {
        for alpha in [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)] {
            rows.push(cols.iter().map(|&e| monomial_partial_eval(e, alpha, p)).collect());
        }
    }
    let rational_rows = rows.len();
    let m = Matrix::new(rows, cols.len());
    let k = m.nullspace();
    let matched = k.dimension == 1 && {
        let candidate = Form::from_coeff_vector(10, &k.basis[0]);
        candidate.proportionality(&lift).is_some()
    };
    Ok(AppendixReport {
        theorem: "decic".into(),
        degree: 10,
        points: points.len(),
        conditions: rational_rows,
        rational_rows,
        columns: cols.len(),
        rank: k.rank,
        kernel_dim: k.dimension,
        matched,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quartic_zero_conditions_hold() {
        let f = quartic_octant_extremal();
        for z in quartic_zeros() {
            assert!(f.eval(&z).is_zero(), "quartic vanishes at {:?}", z);
        }
        // interior zeros are singular in the octant sense: the gradient
        // conditions used by the octic system hold at the lifted points
        // (covered by verify_octic); here check a tangency sample
        let d = f.partial(crate::poly::Var::Y, 1);
        assert!(d.eval(&[rat_int(0), rat_int(4), rat_int(3)]).is_zero());
    }

    #[test]
    fn quintic_zero_conditions_hold() {
        let f = quintic_octant_extremal();
        for z in quintic_zeros() {
            assert!(f.eval(&z).is_zero(), "quintic vanishes at {:?}", z);
        }
    }

    #[test]
    fn decic_kernel_is_the_lift() {
        let r = verify_decic().unwrap();
        assert_eq!(r.kernel_dim, 1);
        assert_eq!(r.rank, 65);
        assert!(r.matched);
        assert_eq!(r.rational_rows, 104);
        assert_eq!(r.columns, 66);
    }

    #[test]
    fn octic_kernel_is_the_lift() {
        let r = verify_octic().unwrap();
        assert_eq!(r.kernel_dim, 1);
        assert_eq!(r.rank, 44);
        assert!(r.matched);
        assert_eq!(r.conditions, 51);
        assert_eq!(r.columns, 45);
    }
}
