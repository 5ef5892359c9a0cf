//! Exact base-field arithmetic: arbitrary-precision rationals and
//! square-root tower extensions of the rationals.
//!
//! A tower `Q(sqrt(d_1), ..., sqrt(d_k))` is represented over the basis
//! `{ prod_{i in S} sqrt(d_i) : S subset of {1..k} }` with the radicands
//! restricted to squarefree, pairwise coprime positive integers, so the
//! `2^k` basis elements are linearly independent over the rationals and
//! no general number-field membership test is needed.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Exact rational scalar. Always kept in canonical form (reduced, positive
/// denominator) by `num-rational`.
pub type Rat = BigRational;

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat(num: i64, den: i64) -> Rat {
    assert!(den != 0, "zero denominator");
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"a/b"` or `"a"` into a rational. Decimal floats are rejected:
/// the toolkit is exact end to end.
pub fn parse_rat(s: &str) -> Result<Rat, Error> {
    let s = s.trim();
    let mk_err = || Error::ParseRational(s.to_string());
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().map_err(|_| mk_err())?;
        let d: BigInt = den.trim().parse().map_err(|_| mk_err())?;
        if d.is_zero() {
            return Err(mk_err());
        }
        Ok(Rat::new(n, d))
    } else {
        let n: BigInt = s.parse().map_err(|_| mk_err())?;
        Ok(Rat::from_integer(n))
    }
}

/// Canonical string form: `"num/den"`, with `/den` omitted when it is 1.
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Ring operations shared by the two scalar kinds so forms and linear
/// systems can be generic over the coefficient field.
pub trait Scalar: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_rat(r: &Rat) -> Self;
}

impl Scalar for Rat {
    fn zero() -> Self {
        <Rat as Zero>::zero()
    }
    fn one() -> Self {
        <Rat as One>::one()
    }
    fn is_zero(&self) -> bool {
        <Rat as Zero>::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }
}

/// A radical tower `Q(sqrt(d_1), ..., sqrt(d_k))`.
///
/// Radicands must be squarefree, pairwise coprime and >= 2; they are kept
/// sorted. `k = 0` is allowed and gives a copy of the rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tower {
    radicands: Vec<u64>,
}

impl Tower {
    pub fn new(mut radicands: Vec<u64>) -> Result<Arc<Tower>, Error> {
        radicands.sort_unstable();
        radicands.dedup();
        for &d in &radicands {
            if d < 2 || !is_squarefree(d) {
                return Err(Error::InvalidTower(format!("radicand {d} is not squarefree and >= 2")));
            }
        }
        for i in 0..radicands.len() {
            for j in i + 1..radicands.len() {
                if gcd_u64(radicands[i], radicands[j]) != 1 {
                    return Err(Error::InvalidTower(format!(
                        "radicands {} and {} share a factor",
                        radicands[i], radicands[j]
                    )));
                }
            }
        }
        Ok(Arc::new(Tower { radicands }))
    }

    pub fn rationals() -> Arc<Tower> {
        Arc::new(Tower { radicands: Vec::new() })
    }

    pub fn radicands(&self) -> &[u64] {
        &self.radicands
    }

    pub fn rank(&self) -> usize {
        self.radicands.len()
    }

    /// Number of basis elements, `2^k`.
    pub fn dim(&self) -> usize {
        1usize << self.radicands.len()
    }

    /// The integer `prod_{i in mask} d_i` squared under the basis element.
    pub fn basis_radicand(&self, mask: usize) -> u64 {
        let mut out = 1u64;
        for (i, &d) in self.radicands.iter().enumerate() {
            if mask & (1 << i) != 0 {
                out *= d;
            }
        }
        out
    }
}

fn rat_is_zero(r: &Rat) -> bool {
    <Rat as Zero>::is_zero(r)
}

fn rat_zero() -> Rat {
    <Rat as Zero>::zero()
}

fn rat_one() -> Rat {
    <Rat as One>::one()
}

fn gcd_u64(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd_u64(b, a % b) }
}

fn is_squarefree(n: u64) -> bool {
    let mut n = n;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return false;
            }
        }
        p += 1;
    }
    true
}

/// Splits a nonnegative rational into `(s, d)` with `sqrt(r) = s * sqrt(d)`,
/// `s` rational and `d` a squarefree positive integer (`d = 1` iff `r` is a
/// perfect rational square).
pub fn sqrt_split(r: &Rat) -> Result<(Rat, u64), Error> {
    if r.is_negative() {
        return Err(Error::NegativeSquareRoot(rat_to_string(r)));
    }
    if rat_is_zero(r) {
        return Ok((rat_zero(), 1));
    }
    // sqrt(a/b) = sqrt(a*b)/b
    let a = r.numer().clone();
    let b = r.denom().clone();
    let ab = &a * &b;
    let (sq, mut sf) = split_square_part(&ab)?;
    // normalize: sf squarefree, ab = sq^2 * sf
    if sf.is_one() {
        sf = BigInt::one();
    }
    let d: u64 = (&sf)
        .try_into()
        .map_err(|_| Error::InvalidTower(format!("squarefree part {sf} too large for a tower radicand")))?;
    Ok((Rat::new(sq, b), d))
}

/// Writes `n = s^2 * f` with `f` squarefree, by trial division. Inputs come
/// from coordinates of paper zero sets, so they are small.
fn split_square_part(n: &BigInt) -> Result<(BigInt, BigInt), Error> {
    let mut n: u128 = n
        .try_into()
        .map_err(|_| Error::InvalidTower(format!("coordinate {n} too large for radical splitting")))?;
    let mut s: u128 = 1;
    let mut f: u128 = 1;
    let mut p: u128 = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0u32;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            for _ in 0..e / 2 {
                s *= p;
            }
            if e % 2 == 1 {
                f *= p;
            }
        }
        p += 1;
    }
    f *= n; // leftover prime
    Ok((BigInt::from(s), BigInt::from(f)))
}

/// Element of a radical tower: `2^k` rational coordinates over the subset
/// basis. An element is zero iff all coordinates are zero; rational elements
/// have all non-empty-subset coordinates zero.
#[derive(Debug, Clone)]
pub struct TowerElem {
    tower: Arc<Tower>,
    coords: Vec<Rat>,
}

impl TowerElem {
    pub fn new(tower: Arc<Tower>, coords: Vec<Rat>) -> Result<Self, Error> {
        if coords.len() != tower.dim() {
            return Err(Error::TowerMismatch);
        }
        Ok(TowerElem { tower, coords })
    }

    pub fn zero_in(tower: &Arc<Tower>) -> Self {
        TowerElem {
            tower: tower.clone(),
            coords: vec![rat_zero(); tower.dim()],
        }
    }

    /// Embeds a rational: empty-subset coordinate `q`, all others zero.
    pub fn from_rat_in(q: &Rat, tower: &Arc<Tower>) -> Self {
        let mut e = Self::zero_in(tower);
        e.coords[0] = q.clone();
        e
    }

    /// The element `s * sqrt(d)` where `d` must be a product of a subset of
    /// the tower radicands.
    pub fn sqrt_of(r: &Rat, tower: &Arc<Tower>) -> Result<Self, Error> {
        let (s, d) = sqrt_split(r)?;
        let mask = (0..tower.dim())
            .find(|&m| tower.basis_radicand(m) == d)
            .ok_or_else(|| Error::OutsideTower(d))?;
        let mut e = Self::zero_in(tower);
        e.coords[mask] = s;
        Ok(e)
    }

    pub fn tower(&self) -> &Arc<Tower> {
        &self.tower
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    /// Rational part if the element lies in Q.
    pub fn as_rat(&self) -> Option<Rat> {
        if self.coords[1..].iter().all(rat_is_zero) {
            Some(self.coords[0].clone())
        } else {
            None
        }
    }

    fn check_same(&self, other: &Self) -> Result<(), Error> {
        if self.tower.radicands() != other.tower.radicands() {
            return Err(Error::TowerMismatch);
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, Error> {
        self.check_same(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a + b)
            .collect();
        Ok(TowerElem { tower: self.tower.clone(), coords })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, Error> {
        self.check_same(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a - b)
            .collect();
        Ok(TowerElem { tower: self.tower.clone(), coords })
    }

    /// Multiplication respects `sqrt(d_i) * sqrt(d_i) = d_i`: basis elements
    /// combine by symmetric difference of the index subsets.
    pub fn try_mul(&self, other: &Self) -> Result<Self, Error> {
        self.check_same(other)?;
        let n = self.tower.dim();
        let mut coords = vec![rat_zero(); n];
        for s in 0..n {
            if rat_is_zero(&self.coords[s]) {
                continue;
            }
            for t in 0..n {
                if rat_is_zero(&other.coords[t]) {
                    continue;
                }
                let common = s & t;
                let factor = self.tower.basis_radicand(common);
                let idx = s ^ t;
                let prod = &self.coords[s] * &other.coords[t] * Rat::from_integer(BigInt::from(factor));
                coords[idx] += prod;
            }
        }
        Ok(TowerElem { tower: self.tower.clone(), coords })
    }

    /// Conjugation flipping the sign of `sqrt(d_i)` for each `i` in `mask`.
    fn conjugate(&self, mask: usize) -> Self {
        let coords = self
            .coords
            .iter()
            .enumerate()
            .map(|(s, c)| {
                if (s & mask).count_ones() % 2 == 1 {
                    -c
                } else {
                    c.clone()
                }
            })
            .collect();
        TowerElem { tower: self.tower.clone(), coords }
    }

    /// Multiplicative inverse via the product of all nontrivial conjugates:
    /// the full conjugate product is rational, so dividing by it rationalizes
    /// the denominator.
    pub fn try_inv(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.tower.dim();
        let mut num = TowerElem::from_rat_in(&rat_one(), &self.tower);
        for mask in 1..n {
            num = num.try_mul(&self.conjugate(mask))?;
        }
        let norm = self.try_mul(&num)?;
        let norm = norm
            .as_rat()
            .expect("conjugate norm is rational by construction");
        if rat_is_zero(&norm) {
            // Basis independence rules this out for a valid tower.
            return Err(Error::DivisionByZero);
        }
        let inv_norm = norm.recip();
        let coords = num.coords.iter().map(|c| c * &inv_norm).collect();
        Ok(TowerElem { tower: self.tower.clone(), coords })
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, Error> {
        self.try_mul(&other.try_inv()?)
    }

    /// Inherent zero test (shadows the trait method, avoiding method
    /// ambiguity at call sites that also see `num_traits`).
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(rat_is_zero)
    }

    pub fn negated(&self) -> Self {
        TowerElem {
            tower: self.tower.clone(),
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

impl PartialEq for TowerElem {
    fn eq(&self, other: &Self) -> bool {
        self.tower.radicands() == other.tower.radicands() && self.coords == other.coords
    }
}

impl Scalar for TowerElem {
    fn zero() -> Self {
        TowerElem::zero_in(&Tower::rationals())
    }
    fn one() -> Self {
        TowerElem::from_rat_in(&rat_one(), &Tower::rationals())
    }
    fn is_zero(&self) -> bool {
        TowerElem::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self.lift_pair(other, |a, b| a.try_add(b))
    }
    fn sub(&self, other: &Self) -> Self {
        self.lift_pair(other, |a, b| a.try_sub(b))
    }
    fn mul(&self, other: &Self) -> Self {
        self.lift_pair(other, |a, b| a.try_mul(b))
    }
    fn neg(&self) -> Self {
        self.negated()
    }
    fn from_rat(r: &Rat) -> Self {
        TowerElem::from_rat_in(r, &Tower::rationals())
    }
}

impl TowerElem {
    /// The `Scalar` impl must be total, but the rank-0 tower produced by
    /// `Scalar::zero()`/`from_rat` has to interoperate with real towers, so
    /// rational constants are re-embedded on demand.
    fn lift_pair(&self, other: &Self, op: impl Fn(&Self, &Self) -> Result<Self, Error>) -> Self {
        if self.tower.radicands() == other.tower.radicands() {
            return op(self, other).expect("same tower");
        }
        if self.tower.rank() == 0 {
            if let Some(r) = self.as_rat() {
                return op(&TowerElem::from_rat_in(&r, &other.tower), other).expect("same tower");
            }
        }
        if other.tower.rank() == 0 {
            if let Some(r) = other.as_rat() {
                return op(self, &TowerElem::from_rat_in(&r, &self.tower)).expect("same tower");
            }
        }
        panic!("tower mismatch in scalar arithmetic");
    }
}

impl fmt::Display for TowerElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (mask, c) in self.coords.iter().enumerate() {
            if rat_is_zero(c) {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if mask == 0 {
                write!(f, "{}", rat_to_string(c))?;
            } else {
                write!(f, "{}*sqrt({})", rat_to_string(c), self.tower.basis_radicand(mask))?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Expands one linear condition over a tower into one rational condition per
/// basis coordinate: a rational vector annihilates the tower row iff it
/// annihilates every returned row.
pub fn rationalize_condition(row: &[TowerElem]) -> Result<Vec<Vec<Rat>>, Error> {
    if row.is_empty() {
        return Ok(Vec::new());
    }
    // rational entries may arrive in the rank-0 tower; embed them into the
    // widest tower present
    let tower = row
        .iter()
        .max_by_key(|e| e.tower().rank())
        .expect("nonempty row")
        .tower()
        .clone();
    let mut embedded: Vec<TowerElem> = Vec::with_capacity(row.len());
    for e in row {
        if e.tower().radicands() == tower.radicands() {
            embedded.push(e.clone());
        } else if let Some(r) = e.as_rat() {
            embedded.push(TowerElem::from_rat_in(&r, &tower));
        } else {
            return Err(Error::TowerMismatch);
        }
    }
    let dim = tower.dim();
    let mut out = Vec::with_capacity(dim);
    for mask in 0..dim {
        out.push(embedded.iter().map(|e| e.coords()[mask].clone()).collect());
    }
    Ok(out)
}


/// Prime factors of a squarefree integer (trial division; radicands come
/// from zero coordinates and stay small).
pub fn squarefree_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            n /= p;
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}
