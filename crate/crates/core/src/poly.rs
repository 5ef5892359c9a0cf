//! Sparse homogeneous trivariate forms over an exact scalar field:
//! arithmetic, differentiation, linear substitution, square substitution
//! and restriction to lines.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::Error;
use crate::scalar::{rat_to_string, Rat, Scalar};

/// Variable index: 0 = x, 1 = y, 2 = z.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    X = 0,
    Y = 1,
    Z = 2,
}

impl Var {
    pub fn all() -> [Var; 3] {
        [Var::X, Var::Y, Var::Z]
    }
    pub fn index(self) -> usize {
        self as usize
    }
    pub fn name(self) -> char {
        match self {
            Var::X => 'x',
            Var::Y => 'y',
            Var::Z => 'z',
        }
    }
}

/// Exponent triple `(i, j, k)` for the monomial `x^i y^j z^k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exp(pub u32, pub u32, pub u32);

impl Exp {
    pub fn degree(&self) -> u32 {
        self.0 + self.1 + self.2
    }
    pub fn get(&self, v: Var) -> u32 {
        match v {
            Var::X => self.0,
            Var::Y => self.1,
            Var::Z => self.2,
        }
    }
    fn lowered(&self, v: Var) -> Option<Exp> {
        let mut e = *self;
        let slot = match v {
            Var::X => &mut e.0,
            Var::Y => &mut e.1,
            Var::Z => &mut e.2,
        };
        if *slot == 0 {
            None
        } else {
            *slot -= 1;
            Some(e)
        }
    }
}

/// Monomials of one degree in graded-lex order with `x > y > z`
/// (so `x^d` first, `z^d` last). This is the column order of every
/// constraint matrix and the serialization order of forms.
pub fn monomials(degree: u32) -> Vec<Exp> {
    let mut out = Vec::new();
    for i in (0..=degree).rev() {
        for j in (0..=degree - i).rev() {
            out.push(Exp(i, j, degree - i - j));
        }
    }
    out
}

/// Dimension of the space of degree-`d` forms, `C(d+2, 2)`.
pub fn space_dim(degree: u32) -> usize {
    ((degree + 1) * (degree + 2) / 2) as usize
}

/// A homogeneous polynomial in three variables of a declared degree.
/// Stored coefficients are never zero; the zero form has an empty map.
#[derive(Debug, Clone, PartialEq)]
pub struct Form<S: Scalar = Rat> {
    degree: u32,
    terms: BTreeMap<Exp, S>,
}

impl<S: Scalar> Form<S> {
    pub fn zero(degree: u32) -> Self {
        Form { degree, terms: BTreeMap::new() }
    }

    pub fn from_terms(degree: u32, terms: impl IntoIterator<Item = (Exp, S)>) -> Result<Self, Error> {
        let mut f = Form::zero(degree);
        for (e, c) in terms {
            if e.degree() != degree {
                return Err(Error::DegreeMismatch { expected: degree, got: e.degree() });
            }
            f.add_term(e, c);
        }
        Ok(f)
    }

    /// Builds a degree-3 form from the ten coefficients in graded-lex order.
    pub fn cubic_from_coeffs(coeffs: &[S]) -> Self {
        debug_assert_eq!(coeffs.len(), 10);
        let mut f = Form::zero(3);
        for (e, c) in monomials(3).into_iter().zip(coeffs) {
            f.add_term(e, c.clone());
        }
        f
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: Exp) -> S {
        self.terms.get(&e).cloned().unwrap_or_else(S::zero)
    }

    /// Terms in graded-lex order (`x^d` first).
    pub fn terms(&self) -> impl Iterator<Item = (Exp, &S)> {
        self.terms.iter().rev().map(|(e, c)| (*e, c))
    }

    /// Dense coefficient vector over `monomials(degree)`.
    pub fn coeff_vector(&self) -> Vec<S> {
        monomials(self.degree).into_iter().map(|e| self.coeff(e)).collect()
    }

    pub fn from_coeff_vector(degree: u32, v: &[S]) -> Self {
        let mut f = Form::zero(degree);
        for (e, c) in monomials(degree).into_iter().zip(v) {
            f.add_term(e, c.clone());
        }
        f
    }

    fn add_term(&mut self, e: Exp, c: S) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(e.degree(), self.degree);
        match self.terms.get_mut(&e) {
            Some(old) => {
                let s = old.add(&c);
                if s.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn eval(&self, point: &[S; 3]) -> S {
        let mut acc = S::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            t = t.mul(&pow(&point[0], e.0));
            t = t.mul(&pow(&point[1], e.1));
            t = t.mul(&pow(&point[2], e.2));
            acc = acc.add(&t);
        }
        acc
    }

    /// Iterated exact partial derivative; the zero form of the right degree
    /// when the order exceeds the degree.
    pub fn partial(&self, v: Var, order: u32) -> Form<S> {
        assert!(order >= 1, "derivative order must be >= 1");
        let mut f = self.clone();
        for _ in 0..order {
            if f.degree == 0 {
                return Form::zero(0);
            }
            let mut g = Form::zero(f.degree - 1);
            for (e, c) in &f.terms {
                let k = e.get(v);
                if let Some(le) = e.lowered(v) {
                    g.add_term(le, c.mul(&S::from_rat(&crate::scalar::rat_int(k as i64))));
                }
            }
            f = g;
        }
        f
    }

    /// Evaluates `d^alpha f` at a point, where `alpha = (ax, ay, az)`.
    pub fn partial_eval(&self, alpha: (u32, u32, u32), point: &[S; 3]) -> S {
        let mut f = self.clone();
        for (v, n) in [(Var::X, alpha.0), (Var::Y, alpha.1), (Var::Z, alpha.2)] {
            if n > 0 {
                f = f.partial(v, n);
            }
        }
        f.eval(point)
    }

    pub fn add(&self, other: &Form<S>) -> Result<Form<S>, Error> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, got: other.degree });
        }
        let mut f = self.clone();
        for (e, c) in &other.terms {
            f.add_term(*e, c.clone());
        }
        Ok(f)
    }

    pub fn sub(&self, other: &Form<S>) -> Result<Form<S>, Error> {
        self.add(&other.scale(&S::from_rat(&crate::scalar::rat_int(-1))))
    }

    pub fn scale(&self, c: &S) -> Form<S> {
        if c.is_zero() {
            return Form::zero(self.degree);
        }
        let mut f = Form::zero(self.degree);
        for (e, coeff) in &self.terms {
            f.add_term(*e, coeff.mul(c));
        }
        f
    }

    pub fn mul(&self, other: &Form<S>) -> Form<S> {
        let mut f = Form::zero(self.degree + other.degree);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                f.add_term(Exp(e1.0 + e2.0, e1.1 + e2.1, e1.2 + e2.2), c1.mul(c2));
            }
        }
        f
    }

    /// `g(v) = f(M v)` for an invertible 3x3 matrix (rows index the original
    /// variables). Degree is preserved; composing is a right action.
    pub fn compose_linear(&self, m: &[[S; 3]; 3]) -> Result<Form<S>, Error> {
        if det3(m).is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(self.compose_linear_unchecked(m))
    }

    pub fn compose_linear_unchecked(&self, m: &[[S; 3]; 3]) -> Form<S> {
        // replacement forms: x -> m[0][0] x + m[0][1] y + m[0][2] z, etc.
        let lin: Vec<Form<S>> = (0..3)
            .map(|i| {
                let mut l = Form::zero(1);
                l.add_term(Exp(1, 0, 0), m[i][0].clone());
                l.add_term(Exp(0, 1, 0), m[i][1].clone());
                l.add_term(Exp(0, 0, 1), m[i][2].clone());
                l
            })
            .collect();
        let mut pows: Vec<Vec<Form<S>>> = Vec::new();
        for l in lin.iter() {
            let mut ps = vec![Form::from_terms(0, [(Exp(0, 0, 0), S::one())]).unwrap()];
            for k in 1..=self.degree as usize {
                let next = ps[k - 1].mul(l);
                ps.push(next);
            }
            pows.push(ps);
        }
        let mut out = Form::zero(self.degree);
        for (e, c) in &self.terms {
            let t = pows[0][e.0 as usize]
                .mul(&pows[1][e.1 as usize])
                .mul(&pows[2][e.2 as usize]);
            out = out.add(&t.scale(c)).expect("degrees agree");
        }
        out
    }

    /// Permutes variables: term exponent for new variable `i` is taken from
    /// old variable `perm[i]`, i.e. `g(x0,x1,x2) = f(x_{perm[0]}, x_{perm[1]}, x_{perm[2]})`
    /// reading `f`'s arguments positionally.
    pub fn permute(&self, perm: [usize; 3]) -> Form<S> {
        // g(v0,v1,v2) = f(v_{perm[0]}, v_{perm[1]}, v_{perm[2]}):
        // an exponent e on f's argument slot i lands on variable perm[i].
        let mut f = Form::zero(self.degree);
        for (e, c) in &self.terms {
            let old = [e.0, e.1, e.2];
            let mut ne = [0u32; 3];
            for slot in 0..3 {
                ne[perm[slot]] += old[slot];
            }
            f.add_term(Exp(ne[0], ne[1], ne[2]), c.clone());
        }
        f
    }

    /// The square-substitution lift `f(x^2, y^2, z^2)`: every exponent
    /// doubles, coefficients are unchanged.
    pub fn square_substitute(&self) -> Form<S> {
        let mut f = Form::zero(self.degree * 2);
        for (e, c) in &self.terms {
            f.add_term(Exp(2 * e.0, 2 * e.1, 2 * e.2), c.clone());
        }
        f
    }

    /// Restriction `f(u P + v Q)` to the line through two distinct points.
    pub fn restrict_line(&self, pp: &ProjPoint<S>, qq: &ProjPoint<S>) -> Result<BinaryForm<S>, Error> {
        if pp.proj_eq(qq) {
            return Err(Error::CoincidentPoints);
        }
        let d = self.degree as usize;
        let mut coeffs = vec![S::zero(); d + 1];
        // (u p_i + v q_i)^e expanded once per variable, then combined.
        let p = &pp.coords;
        let q = &qq.coords;
        for (e, c) in &self.terms {
            let bx = binomial_pows(&p[0], &q[0], e.0);
            let by = binomial_pows(&p[1], &q[1], e.1);
            let bz = binomial_pows(&p[2], &q[2], e.2);
            for (i, cx) in bx.iter().enumerate() {
                if cx.is_zero() {
                    continue;
                }
                for (j, cy) in by.iter().enumerate() {
                    if cy.is_zero() {
                        continue;
                    }
                    for (k, cz) in bz.iter().enumerate() {
                        if cz.is_zero() {
                            continue;
                        }
                        let idx = i + j + k; // power of v
                        let prod = c.mul(cx).mul(cy).mul(cz);
                        coeffs[idx] = coeffs[idx].add(&prod);
                    }
                }
            }
        }
        Ok(BinaryForm::new(self.degree, coeffs))
    }

    /// Attempts exact division, returning the quotient only when the
    /// remainder vanishes. Divisor must be nonzero.
    pub fn div_exact(&self, divisor: &Form<S>) -> Option<Form<S>>
    where
        S: ScalarField,
    {
        assert!(!divisor.is_zero(), "division by the zero form");
        if self.is_zero() {
            return Some(Form::zero(self.degree.saturating_sub(divisor.degree)));
        }
        if self.degree < divisor.degree {
            return None;
        }
        let (lead_e, lead_c) = divisor.terms.iter().next_back().map(|(e, c)| (*e, c.clone()))?;
        let mut rem = self.clone();
        let mut quot = Form::zero(self.degree - divisor.degree);
        while let Some((re, rc)) = rem.terms.iter().next_back().map(|(e, c)| (*e, c.clone())) {
            if re.0 < lead_e.0 || re.1 < lead_e.1 || re.2 < lead_e.2 {
                return None;
            }
            let me = Exp(re.0 - lead_e.0, re.1 - lead_e.1, re.2 - lead_e.2);
            let mc = rc.div(&lead_c);
            let mut mono = Form::zero(me.degree());
            mono.add_term(me, mc.clone());
            rem = rem.sub(&divisor.mul(&mono)).expect("degrees agree");
            quot.add_term(me, mc);
        }
        Some(quot)
    }

    /// True iff every exponent triple is componentwise even, i.e. the form
    /// lies in the image of the square-substitution lift.
    pub fn is_even(&self) -> bool {
        self.terms
            .keys()
            .all(|e| e.0 % 2 == 0 && e.1 % 2 == 0 && e.2 % 2 == 0)
    }

    /// Scalar with `self = alpha * other`, when one exists.
    pub fn proportionality(&self, other: &Form<S>) -> Option<S>
    where
        S: ScalarField,
    {
        if self.degree != other.degree {
            return None;
        }
        if other.is_zero() {
            return self.is_zero().then(S::zero);
        }
        if self.is_zero() {
            return None;
        }
        let (e, c) = other.terms.iter().next_back()?;
        let alpha = self.coeff(*e).div(c);
        (self == &other.scale(&alpha)).then_some(alpha)
    }
}

/// Scalars that also support exact division (both of ours do).
pub trait ScalarField: Scalar {
    fn div(&self, other: &Self) -> Self;
}

impl ScalarField for Rat {
    fn div(&self, other: &Self) -> Self {
        self / other
    }
}

impl ScalarField for crate::scalar::TowerElem {
    fn div(&self, other: &Self) -> Self {
        self.try_div(other).expect("tower division")
    }
}

fn pow<S: Scalar>(base: &S, e: u32) -> S {
    let mut acc = S::one();
    for _ in 0..e {
        acc = acc.mul(base);
    }
    acc
}

/// Coefficients of `(u a + v b)^n` as a vector indexed by the power of `v`.
fn binomial_pows<S: Scalar>(a: &S, b: &S, n: u32) -> Vec<S> {
    let mut out = Vec::with_capacity(n as usize + 1);
    for k in 0..=n {
        let c = binom(n, k);
        let term = S::from_rat(&c).mul(&pow(a, n - k)).mul(&pow(b, k));
        out.push(term);
    }
    out
}

fn binom(n: u32, k: u32) -> Rat {
    let mut num = crate::scalar::rat_int(1);
    for i in 0..k {
        num = num * crate::scalar::rat_int((n - i) as i64) / crate::scalar::rat_int((i + 1) as i64);
    }
    num
}

fn det3<S: Scalar>(m: &[[S; 3]; 3]) -> S {
    let a = m[0][0].mul(&m[1][1].mul(&m[2][2]).sub(&m[1][2].mul(&m[2][1])));
    let b = m[0][1].mul(&m[1][0].mul(&m[2][2]).sub(&m[1][2].mul(&m[2][0])));
    let c = m[0][2].mul(&m[1][0].mul(&m[2][1]).sub(&m[1][1].mul(&m[2][0])));
    a.sub(&b).add(&c)
}

impl<S: Scalar + DisplayCoeff> fmt::Display for Form<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})", c.coeff_string())?;
            for (v, n) in [(Var::X, e.0), (Var::Y, e.1), (Var::Z, e.2)] {
                if n == 1 {
                    write!(f, "*{}", v.name())?;
                } else if n > 1 {
                    write!(f, "*{}^{}", v.name(), n)?;
                }
            }
        }
        Ok(())
    }
}

pub trait DisplayCoeff {
    fn coeff_string(&self) -> String;
}

impl DisplayCoeff for Rat {
    fn coeff_string(&self) -> String {
        rat_to_string(self)
    }
}

impl DisplayCoeff for crate::scalar::TowerElem {
    fn coeff_string(&self) -> String {
        self.to_string()
    }
}

/// A point of the projective plane; equality is up to nonzero scalar.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjPoint<S: Scalar = Rat> {
    pub coords: [S; 3],
}

impl<S: Scalar> ProjPoint<S> {
    pub fn new(coords: [S; 3]) -> Result<Self, Error> {
        if coords.iter().all(|c| c.is_zero()) {
            return Err(Error::ZeroPoint);
        }
        Ok(ProjPoint { coords })
    }

    pub fn proj_eq(&self, other: &Self) -> bool {
        // cross products vanish
        for i in 0..3 {
            for j in i + 1..3 {
                let lhs = self.coords[i].mul(&other.coords[j]);
                let rhs = self.coords[j].mul(&other.coords[i]);
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }
}

impl ProjPoint<Rat> {
    pub fn from_rats(a: Rat, b: Rat, c: Rat) -> Result<Self, Error> {
        ProjPoint::new([a, b, c])
    }

    /// Representative with all coordinates >= 0, when one exists
    /// (octant membership).
    pub fn octant_representative(&self) -> Option<[Rat; 3]> {
        use num_traits::Signed;
        let nonneg = self.coords.iter().all(|c| !c.is_negative());
        if nonneg {
            return Some(self.coords.clone());
        }
        let nonpos = self.coords.iter().all(|c| !c.is_positive());
        if nonpos {
            let mut out = self.coords.clone();
            for c in &mut out {
                *c = -c.clone();
            }
            return Some(out);
        }
        None
    }

    /// Canonical representative: integer coprime coordinates, first nonzero
    /// coordinate positive.
    pub fn normalized(&self) -> ProjPoint<Rat> {
        use num_bigint::BigInt;
        use num_integer::Integer;
        use num_traits::{Signed, Zero};
        let mut den = BigInt::from(1);
        for c in &self.coords {
            den = den.lcm(c.denom());
        }
        let mut ints: Vec<BigInt> = self.coords.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        let mut g = BigInt::from(0);
        for v in &ints {
            g = g.gcd(v);
        }
        if !g.is_zero() {
            for v in &mut ints {
                *v = &*v / &g;
            }
        }
        if let Some(first) = ints.iter().find(|v| !v.is_zero()) {
            if first.is_negative() {
                for v in &mut ints {
                    *v = -&*v;
                }
            }
        }
        ProjPoint {
            coords: [
                Rat::from_integer(ints[0].clone()),
                Rat::from_integer(ints[1].clone()),
                Rat::from_integer(ints[2].clone()),
            ],
        }
    }
}

/// A homogeneous binary form `sum c_i u^{d-i} v^i`.
#[derive(Debug, Clone, PartialEq)]
pub struct BinaryForm<S: Scalar = Rat> {
    degree: u32,
    coeffs: Vec<S>,
}

impl<S: Scalar> BinaryForm<S> {
    pub fn new(degree: u32, coeffs: Vec<S>) -> Self {
        assert_eq!(coeffs.len(), degree as usize + 1);
        BinaryForm { degree, coeffs }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Coefficient of `u^{d-i} v^i`.
    pub fn coeff(&self, i: usize) -> &S {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn eval(&self, u: &S, v: &S) -> S {
        let mut acc = S::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            let t = c
                .mul(&pow(u, self.degree - i as u32))
                .mul(&pow(v, i as u32));
            acc = acc.add(&t);
        }
        acc
    }
}

impl BinaryForm<Rat> {
    /// Dehomogenization at `u = 1`: polynomial in `t = v/u` of degree <= d.
    pub fn dehomogenize(&self) -> crate::unipoly::UniPoly {
        crate::unipoly::UniPoly::new(self.coeffs.clone())
    }

    /// Vanishing order at the projective parameter `(u0 : v0)`.
    pub fn vanishing_order_at(&self, u0: &Rat, v0: &Rat) -> u32 {
        if self.is_zero() {
            return self.degree + 1;
        }
        if u0.is_zero() {
            // (0:1): order = number of leading u-powers present, i.e. count
            // of low-index zero coefficients from the u^d end... coefficient
            // c_i multiplies u^{d-i} v^i; at (0:1) only i = d survives, and
            // the vanishing order in the local parameter u is the number of
            // trailing zero coefficients c_d, c_{d-1}, ...
            let mut k = 0;
            for i in (0..self.coeffs.len()).rev() {
                if self.coeffs[i].is_zero() {
                    k += 1;
                } else {
                    break;
                }
            }
            return k;
        }
        let t0 = v0 / u0;
        self.dehomogenize().vanishing_order(&t0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_int};

    fn f0() -> Form {
        // x^2 y + y^2 z + z^2 x - 3 x y z
        Form::from_terms(
            3,
            [
                (Exp(2, 1, 0), rat_int(1)),
                (Exp(0, 2, 1), rat_int(1)),
                (Exp(1, 0, 2), rat_int(1)),
                (Exp(1, 1, 1), rat_int(-3)),
            ],
        )
        .unwrap()
    }

    fn pt(a: i64, b: i64, c: i64) -> [Rat; 3] {
        [rat_int(a), rat_int(b), rat_int(c)]
    }

    #[test]
    fn eval_examples() {
        let f = f0();
        assert!(f.eval(&pt(1, 1, 1)).is_zero());
        assert_eq!(f.eval(&pt(1, 2, 3)), rat_int(5));
    }

    #[test]
    fn partials_and_euler() {
        // d/dx of x^3 = 3x^2
        let x3 = Form::from_terms(3, [(Exp(3, 0, 0), rat_int(1))]).unwrap();
        let d = x3.partial(Var::X, 1);
        assert_eq!(d, Form::from_terms(2, [(Exp(2, 0, 0), rat_int(3))]).unwrap());
        // Euler identity x f_x + y f_y + z f_z = 3 f for a cubic
        let f = f0();
        let x = Form::from_terms(1, [(Exp(1, 0, 0), rat_int(1))]).unwrap();
        let y = Form::from_terms(1, [(Exp(0, 1, 0), rat_int(1))]).unwrap();
        let z = Form::from_terms(1, [(Exp(0, 0, 1), rat_int(1))]).unwrap();
        let lhs = x
            .mul(&f.partial(Var::X, 1))
            .add(&y.mul(&f.partial(Var::Y, 1)))
            .unwrap()
            .add(&z.mul(&f.partial(Var::Z, 1)))
            .unwrap();
        assert_eq!(lhs, f.scale(&rat_int(3)));
    }

    #[test]
    fn compose_linear_round_trip() {
        let f = f0();
        let id = [
            [rat_int(1), rat_int(0), rat_int(0)],
            [rat_int(0), rat_int(1), rat_int(0)],
            [rat_int(0), rat_int(0), rat_int(1)],
        ];
        assert_eq!(f.compose_linear(&id).unwrap(), f);
        // diagonal scale then inverse
        let m = [
            [rat_int(1), rat_int(0), rat_int(0)],
            [rat_int(0), rat(1, 2), rat_int(0)],
            [rat_int(0), rat_int(0), rat(1, 3)],
        ];
        let minv = [
            [rat_int(1), rat_int(0), rat_int(0)],
            [rat_int(0), rat_int(2), rat_int(0)],
            [rat_int(0), rat_int(0), rat_int(3)],
        ];
        let g = f.compose_linear(&m).unwrap().compose_linear(&minv).unwrap();
        assert_eq!(g, f);
        let sing = [
            [rat_int(1), rat_int(0), rat_int(0)],
            [rat_int(1), rat_int(0), rat_int(0)],
            [rat_int(0), rat_int(0), rat_int(1)],
        ];
        assert!(f.compose_linear(&sing).is_err());
    }

    #[test]
    fn square_substitution() {
        let xyz = Form::from_terms(3, [(Exp(1, 1, 1), rat_int(1))]).unwrap();
        let lifted = xyz.square_substitute();
        assert_eq!(lifted, Form::from_terms(6, [(Exp(2, 2, 2), rat_int(1))]).unwrap());
        assert!(lifted.is_even());
        let f = f0();
        assert_eq!(f.square_substitute().num_terms(), f.num_terms());
        // multiplicativity
        let g = f0();
        let lhs = f.mul(&g).square_substitute();
        let rhs = f.square_substitute().mul(&g.square_substitute());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn restrict_line_examples() {
        let f = f0();
        let p = ProjPoint::from_rats(rat_int(1), rat_int(0), rat_int(0)).unwrap();
        let q = ProjPoint::from_rats(rat_int(0), rat_int(1), rat_int(0)).unwrap();
        // f on the edge z=0 is x^2 y, i.e. u^2 v
        let b = f.restrict_line(&p, &q).unwrap();
        assert_eq!(b.coeffs(), &[rat_int(0), rat_int(1), rat_int(0), rat_int(0)]);
        assert!(f.restrict_line(&p, &p).is_err());
    }

    #[test]
    fn mul_and_division() {
        let xp = Form::from_terms(1, [(Exp(1, 0, 0), rat_int(1))]).unwrap();
        let yp = Form::from_terms(1, [(Exp(0, 1, 0), rat_int(1))]).unwrap();
        let sum = xp.add(&yp).unwrap();
        let dif = xp.sub(&yp).unwrap();
        let prod = sum.mul(&dif);
        let expect = Form::from_terms(2, [(Exp(2, 0, 0), rat_int(1)), (Exp(0, 2, 0), rat_int(-1))]).unwrap();
        assert_eq!(prod, expect);
        assert!(prod.div_exact(&sum).is_some());
        assert!(prod.div_exact(&xp).is_none());
        let z = Form::zero(3);
        assert!(f0().mul(&z).is_zero());
    }

    #[test]
    fn proj_point_equality_and_octant() {
        let p = ProjPoint::from_rats(rat_int(2), rat_int(4), rat_int(6)).unwrap();
        let q = ProjPoint::from_rats(rat_int(1), rat_int(2), rat_int(3)).unwrap();
        assert!(p.proj_eq(&q));
        let r = ProjPoint::from_rats(rat_int(-1), rat_int(-2), rat_int(-3)).unwrap();
        assert!(r.octant_representative().is_some());
        let s = ProjPoint::from_rats(rat_int(-1), rat_int(2), rat_int(0)).unwrap();
        assert!(s.octant_representative().is_none());
        assert_eq!(r.normalized().coords, q.normalized().coords);
    }
}
