//! Exact univariate real-root tools: Sturm sequences, root isolation,
//! interval sign analysis and vanishing orders, all over the rationals.

use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::scalar::{rat_int, Rat};

/// Dense univariate polynomial, coefficients ascending, no trailing zeros.
/// The zero polynomial has an empty coefficient vector.
#[derive(Debug, Clone, PartialEq)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rat) -> Self {
        UniPoly::new(vec![c])
    }

    pub fn from_ints(cs: &[i64]) -> Self {
        UniPoly::new(cs.iter().map(|&c| rat_int(c)).collect())
    }

    /// `(t - a)`
    pub fn linear_root(a: &Rat) -> Self {
        UniPoly::new(vec![-a.clone(), Rat::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0 alongside `is_zero`.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn eval(&self, t: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat_int(i as i64))
                .collect(),
        )
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![Rat::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        UniPoly::new(out)
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    pub fn scale(&self, c: &Rat) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Euclidean division, divisor nonzero.
    pub fn div_rem(&self, divisor: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        let mut quot = vec![Rat::zero(); self.coeffs.len().saturating_sub(divisor.coeffs.len() - 1)];
        let dl = divisor.leading().unwrap().clone();
        while !rem.is_zero() && rem.degree() >= divisor.degree() && !(rem.degree() == 0 && divisor.degree() > 0) {
            if rem.coeffs.len() < divisor.coeffs.len() {
                break;
            }
            let shift = rem.coeffs.len() - divisor.coeffs.len();
            let factor = rem.leading().unwrap() / &dl;
            quot[shift] = factor.clone();
            let mut new = rem.coeffs.clone();
            for (j, b) in divisor.coeffs.iter().enumerate() {
                new[shift + j] -= &factor * b;
            }
            new.pop(); // leading term cancels exactly
            rem = UniPoly::new(new);
        }
        (UniPoly::new(quot), rem)
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let lead = a.leading().unwrap().clone();
        a.scale(&lead.recip())
    }

    /// Squarefree part `p / gcd(p, p')`, monic-scaled.
    pub fn squarefree_part(&self) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == 0 {
            return self.clone();
        }
        self.div_rem(&g).0
    }

    /// Largest `k` with `(t - a)^k` dividing `p`. Errors on the zero
    /// polynomial.
    pub fn vanishing_order(&self, a: &Rat) -> u32 {
        assert!(!self.is_zero(), "vanishing order of the zero polynomial");
        let lin = UniPoly::linear_root(a);
        let mut k = 0;
        let mut p = self.clone();
        loop {
            if !p.eval(a).is_zero() {
                return k;
            }
            let (q, r) = p.div_rem(&lin);
            debug_assert!(r.is_zero());
            p = q;
            k += 1;
            if p.is_zero() {
                return k;
            }
        }
    }

    /// Cauchy bound: all real roots lie in `(-B, B)`.
    pub fn cauchy_bound(&self) -> Rat {
        let lead = match self.leading() {
            Some(l) => l,
            None => return Rat::one(),
        };
        let mut m = Rat::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let v = (c / lead).abs();
            if v > m {
                m = v;
            }
        }
        m + Rat::one()
    }

    fn sign_at(&self, t: &Rat) -> i8 {
        sign(&self.eval(t))
    }

}

pub fn sign(r: &Rat) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Endpoint of an extended-rational interval.
#[derive(Debug, Clone, PartialEq)]
pub enum Endpoint {
    NegInf,
    PosInf,
    Finite { value: Rat, closed: bool },
}

/// Interval over the extended rationals, `lower <= upper`.
#[derive(Debug, Clone, PartialEq)]
pub struct Interval {
    pub lo: Endpoint,
    pub hi: Endpoint,
}

impl Interval {
    pub fn all() -> Self {
        Interval { lo: Endpoint::NegInf, hi: Endpoint::PosInf }
    }

    pub fn open(lo: Rat, hi: Rat) -> Self {
        assert!(lo <= hi);
        Interval {
            lo: Endpoint::Finite { value: lo, closed: false },
            hi: Endpoint::Finite { value: hi, closed: false },
        }
    }

    pub fn closed(lo: Rat, hi: Rat) -> Self {
        assert!(lo <= hi);
        Interval {
            lo: Endpoint::Finite { value: lo, closed: true },
            hi: Endpoint::Finite { value: hi, closed: true },
        }
    }

    pub fn ray_from(lo: Rat, closed: bool) -> Self {
        Interval { lo: Endpoint::Finite { value: lo, closed }, hi: Endpoint::PosInf }
    }

    pub fn ray_to(hi: Rat, closed: bool) -> Self {
        Interval { lo: Endpoint::NegInf, hi: Endpoint::Finite { value: hi, closed } }
    }

    pub fn contains(&self, t: &Rat) -> bool {
        let lo_ok = match &self.lo {
            Endpoint::NegInf => true,
            Endpoint::PosInf => false,
            Endpoint::Finite { value, closed } => t > value || (*closed && t == value),
        };
        let hi_ok = match &self.hi {
            Endpoint::PosInf => true,
            Endpoint::NegInf => false,
            Endpoint::Finite { value, closed } => t < value || (*closed && t == value),
        };
        lo_ok && hi_ok
    }

    /// A rational strictly inside the interval, if the interior is nonempty.
    /// `bound` widens the sampling window for doubly infinite intervals.
    pub fn interior_sample(&self, bound: &Rat) -> Option<Rat> {
        match (&self.lo, &self.hi) {
            (Endpoint::PosInf, _) | (_, Endpoint::NegInf) => None,
            (Endpoint::NegInf, Endpoint::PosInf) => Some(bound.clone()),
            (Endpoint::NegInf, Endpoint::Finite { value, .. }) => Some(value - Rat::one()),
            (Endpoint::Finite { value, .. }, Endpoint::PosInf) => Some(value + Rat::one()),
            (Endpoint::Finite { value: a, .. }, Endpoint::Finite { value: b, .. }) => {
                if a >= b {
                    None
                } else {
                    Some((a + b) / rat_int(2))
                }
            }
        }
    }
}

fn sturm_chain(p: &UniPoly) -> Vec<UniPoly> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            return chain;
        }
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
        if r.is_zero() {
            return chain;
        }
        chain.push(r.neg());
    }
}

fn variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Number of distinct real roots of `p` in the open interval `(a, b)`,
/// endpoints finite rationals that are not roots of the squarefree part.
fn sturm_open_count(chain: &[UniPoly], a: &Rat, b: &Rat) -> usize {
    let va = variations(chain.iter().map(|q| q.sign_at(a)));
    let vb = variations(chain.iter().map(|q| q.sign_at(b)));
    va - vb
}

/// Number of distinct real roots of `p` in an interval, honoring the
/// open/closed endpoint flags. Endpoint roots are handled exactly by
/// dividing out the corresponding linear factor.
pub fn sturm_count(p: &UniPoly, interval: &Interval) -> Result<usize, Error> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut sf = p.squarefree_part();
    let mut count = 0usize;

    // Peel off roots sitting exactly at finite endpoints.
    for ep in [&interval.lo, &interval.hi] {
        if let Endpoint::Finite { value, closed } = ep {
            if sf.eval(value).is_zero() {
                if *closed {
                    count += 1;
                }
                let (q, r) = sf.div_rem(&UniPoly::linear_root(value));
                debug_assert!(r.is_zero());
                sf = q;
            }
        }
    }
    if sf.degree() == 0 {
        return Ok(count);
    }
    let bound = sf.cauchy_bound();
    let a = match &interval.lo {
        Endpoint::NegInf => -(bound.clone()),
        Endpoint::Finite { value, .. } => value.clone().max(-(bound.clone())),
        Endpoint::PosInf => return Ok(count),
    };
    let b = match &interval.hi {
        Endpoint::PosInf => bound.clone(),
        Endpoint::Finite { value, .. } => value.clone().min(bound.clone()),
        Endpoint::NegInf => return Ok(count),
    };
    if a >= b {
        return Ok(count);
    }
    let chain = sturm_chain(&sf);
    Ok(count + sturm_open_count(&chain, &a, &b))
}

/// An isolated real root: a rational interval containing exactly one root,
/// with its multiplicity in the original polynomial. When the root is
/// rational the interval degenerates to `[r, r]` and `exact` is set.
#[derive(Debug, Clone)]
pub struct IsolatedRoot {
    pub lo: Rat,
    pub hi: Rat,
    pub multiplicity: u32,
    pub exact: Option<Rat>,
}

impl IsolatedRoot {
    pub fn contains(&self, t: &Rat) -> bool {
        &self.lo <= t && t <= &self.hi
    }
}

/// Isolates all real roots into disjoint rational intervals, one root each,
/// with multiplicities from the squarefree (Yun) decomposition. Rational
/// roots of height at most `height_cap` are identified exactly.
pub fn isolate_roots(p: &UniPoly) -> Result<Vec<IsolatedRoot>, Error> {
    isolate_roots_capped(p, &default_height_cap())
}

pub fn default_height_cap() -> num_bigint::BigInt {
    num_bigint::BigInt::from(1_000_000_000_000u64)
}

pub fn isolate_roots_capped(p: &UniPoly, height_cap: &num_bigint::BigInt) -> Result<Vec<IsolatedRoot>, Error> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    struct Layer {
        mult: u32,
        factor: UniPoly,
        chain: Vec<UniPoly>,
    }
    let layers: Vec<Layer> = yun_decomposition(p)
        .into_iter()
        .filter(|(_, f)| f.degree() > 0)
        .map(|(mult, factor)| {
            let chain = sturm_chain(&factor);
            Layer { mult, factor, chain }
        })
        .collect();

    // (root, index of defining layer)
    let mut roots: Vec<(IsolatedRoot, usize)> = Vec::new();
    for (li, layer) in layers.iter().enumerate() {
        let b = layer.factor.cauchy_bound();
        let mut stack = vec![(-(b.clone()), b.clone())];
        while let Some((lo, hi)) = stack.pop() {
            let n = sturm_open_count(&layer.chain, &lo, &hi);
            if n == 0 {
                continue;
            }
            let mid = (&lo + &hi) / rat_int(2);
            if layer.factor.eval(&mid).is_zero() {
                roots.push((
                    IsolatedRoot { lo: mid.clone(), hi: mid.clone(), multiplicity: layer.mult, exact: Some(mid.clone()) },
                    li,
                ));
                // continue isolating on both punctured sides
                let gap = smallest_gap(&layer.factor, &mid);
                stack.push((lo, &mid - &gap));
                stack.push((&mid + &gap, hi));
                continue;
            }
            if n > 1 {
                stack.push((lo, mid.clone()));
                stack.push((mid, hi));
                continue;
            }
            // single root in (lo, hi): try to recognize a bounded-height rational
            match find_rational_root_in(&layer.factor, &lo, &hi, height_cap) {
                Some(r) => roots.push((
                    IsolatedRoot { lo: r.clone(), hi: r.clone(), multiplicity: layer.mult, exact: Some(r) },
                    li,
                )),
                None => roots.push((IsolatedRoot { lo, hi, multiplicity: layer.mult, exact: None }, li)),
            }
        }
    }

    // Roots from distinct layers are distinct reals, but their isolating
    // boxes may overlap; bisect on the owning layer until disjoint.
    roots.sort_by(|a, b| a.0.lo.cmp(&b.0.lo).then(a.0.hi.cmp(&b.0.hi)));
    loop {
        let mut overlap = None;
        for i in 1..roots.len() {
            let touch = roots[i - 1].0.hi >= roots[i].0.lo;
            let both_exact_distinct =
                roots[i - 1].0.exact.is_some() && roots[i].0.exact.is_some() && roots[i - 1].0.hi < roots[i].0.lo;
            if touch && !both_exact_distinct {
                overlap = Some(i);
                break;
            }
        }
        let Some(i) = overlap else { break };
        for j in [i - 1, i] {
            let (r, li) = &roots[j];
            if r.exact.is_some() {
                continue;
            }
            let layer = &layers[*li];
            let mid = (&r.lo + &r.hi) / rat_int(2);
            let refined = if layer.factor.eval(&mid).is_zero() {
                IsolatedRoot { lo: mid.clone(), hi: mid.clone(), multiplicity: r.multiplicity, exact: Some(mid) }
            } else if sturm_open_count(&layer.chain, &r.lo, &mid) == 1 {
                IsolatedRoot { lo: r.lo.clone(), hi: mid, multiplicity: r.multiplicity, exact: None }
            } else {
                IsolatedRoot { lo: mid, hi: r.hi.clone(), multiplicity: r.multiplicity, exact: None }
            };
            roots[j].0 = refined;
        }
        roots.sort_by(|a, b| a.0.lo.cmp(&b.0.lo).then(a.0.hi.cmp(&b.0.hi)));
    }
    Ok(roots.into_iter().map(|(r, _)| r).collect())
}

/// A positive rational smaller than the distance from `at` to any other root.
fn smallest_gap(factor: &UniPoly, at: &Rat) -> Rat {
    // Crude but exact: halve until the punctured interval contains no root.
    let chain = sturm_chain(factor);
    let mut gap = Rat::one();
    loop {
        let lo = at - &gap;
        let hi = at + &gap;
        let n = sturm_open_count(&chain, &lo, &hi);
        if n == 1 {
            return gap / rat_int(2);
        }
        gap = gap / rat_int(2);
    }
}

/// Yun squarefree decomposition: returns `(multiplicity, squarefree factor)`
/// pairs with distinct roots across factors.
pub fn yun_decomposition(p: &UniPoly) -> Vec<(u32, UniPoly)> {
    let mut out = Vec::new();
    let g = p.gcd(&p.derivative());
    if g.degree() == 0 {
        out.push((1, p.clone()));
        return out;
    }
    let mut c = p.div_rem(&g).0;
    let mut d = p.derivative().div_rem(&g).0.sub(&c.derivative());
    let mut i = 1u32;
    loop {
        let a = c.gcd(&d);
        if a.degree() > 0 {
            out.push((i, a.clone()));
        }
        let c_next = if a.degree() == 0 { c.clone() } else { c.div_rem(&a).0 };
        if c_next.degree() == 0 {
            break;
        }
        d = if a.degree() == 0 { d.clone() } else { d.div_rem(&a).0 }.sub(&c_next.derivative());
        c = c_next;
        i += 1;
    }
    out
}

/// Searches the open interval `(lo, hi)` (known to contain exactly one real
/// root of `factor`) for a rational root of bounded height, using the
/// simplest-rational-in-interval walk. Returns the root when found.
fn find_rational_root_in(factor: &UniPoly, lo: &Rat, hi: &Rat, height_cap: &num_bigint::BigInt) -> Option<Rat> {
    let chain = sturm_chain(factor);
    let mut lo = lo.clone();
    let mut hi = hi.clone();
    // Shrink until the simplest rational in (lo, hi) stabilizes or exceeds
    // the cap: every step either finds the root or halves the interval.
    for _ in 0..256 {
        let cand = simplest_in_open(&lo, &hi);
        if factor.eval(&cand).is_zero() {
            return Some(cand);
        }
        if cand.numer().magnitude() > height_cap.magnitude() || cand.denom().magnitude() > height_cap.magnitude() {
            return None;
        }
        // bisect, keeping the side with the root
        let mid = (&lo + &hi) / rat_int(2);
        if factor.eval(&mid).is_zero() {
            return Some(mid);
        }
        if sturm_open_count(&chain, &lo, &mid) == 1 {
            hi = mid;
        } else {
            lo = mid;
        }
        // once the interval is narrower than 1/(2 cap^2) a rational of
        // height <= cap inside it is unique, so a failed candidate means
        // the root is irrational or taller than the cap
        let width = &hi - &lo;
        let cap_r = Rat::from_integer(height_cap.clone());
        if width < Rat::one() / (rat_int(2) * &cap_r * &cap_r) {
            let cand = simplest_in_open(&lo, &hi);
            return factor.eval(&cand).is_zero().then_some(cand);
        }
    }
    None
}

/// The rational with smallest denominator (then smallest numerator) in the
/// open interval `(lo, hi)`, via the Stern-Brocot / continued-fraction walk.
pub fn simplest_in_open(lo: &Rat, hi: &Rat) -> Rat {
    assert!(lo < hi);
    let a = lo.floor();
    let next = &a + Rat::one();
    if &next < hi {
        // a+1 is always > lo when a = floor(lo)
        return next;
    }
    let lo_f = lo - &a; // in [0, 1)
    let hi_f = hi - &a; // in (lo_f, 1]
    if lo_f.is_zero() {
        // (0, hi_f): smallest denominator q with 1/q < hi_f
        let inv = hi_f.recip();
        let mut d = inv.floor() + Rat::one();
        if &d - Rat::one() == inv {
            // 1/hi_f integral: strict inequality needs one more
            d = inv + Rat::one();
        }
        return a + d.recip();
    }
    let r = simplest_in_open(&hi_f.recip(), &lo_f.recip());
    a + r.recip()
}

/// Trichotomy sign of a polynomial over an interval:
/// `Positive` / `Negative` if the polynomial has that strict sign except at
/// finitely many interior roots of even multiplicity, `Mixed` if it changes
/// sign on the interval, and `IdenticallyZero` for degree-0 zero... the zero
/// polynomial is rejected upstream.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntervalSign {
    Positive,
    Negative,
    Mixed,
}

pub fn sign_on_interval(p: &UniPoly, interval: &Interval) -> Result<IntervalSign, Error> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    // the part with odd multiplicity changes sign at its roots
    let layers = yun_decomposition(p);
    let mut odd = UniPoly::constant(Rat::one());
    for (m, f) in &layers {
        if m % 2 == 1 {
            odd = odd.mul(f);
        }
    }
    let interior = open_interior(interval);
    if let Some(iv) = &interior {
        if sturm_count(&odd, iv)? > 0 {
            return Ok(IntervalSign::Mixed);
        }
    }
    // no interior sign change: sample once away from roots
    let bound = p.cauchy_bound() + rat_int(1);
    // pick a sample: prefer interior midpoint, nudge off roots
    let mut sample = match interval.interior_sample(&bound) {
        Some(s) => s,
        None => {
            // degenerate [a, a]
            if let (Endpoint::Finite { value, .. }, Endpoint::Finite { value: v2, .. }) = (&interval.lo, &interval.hi) {
                debug_assert_eq!(value, v2);
                value.clone()
            } else {
                return Ok(IntervalSign::Mixed);
            }
        }
    };
    let mut guard = 0;
    while p.eval(&sample).is_zero() {
        // nudge within the interval
        sample = match &interval.hi {
            Endpoint::Finite { value, .. } => (&sample + value) / rat_int(2),
            _ => &sample + Rat::one(),
        };
        if !interval.contains(&sample) {
            sample = match &interval.lo {
                Endpoint::Finite { value, .. } => (&sample + value) / rat_int(2),
                _ => &sample - rat_int(2),
            };
        }
        guard += 1;
        if guard > 64 {
            return Ok(IntervalSign::Mixed);
        }
    }
    Ok(if p.eval(&sample).is_positive() {
        IntervalSign::Positive
    } else {
        IntervalSign::Negative
    })
}

fn open_interior(interval: &Interval) -> Option<Interval> {
    let lo = match &interval.lo {
        Endpoint::NegInf => Endpoint::NegInf,
        Endpoint::PosInf => return None,
        Endpoint::Finite { value, .. } => Endpoint::Finite { value: value.clone(), closed: false },
    };
    let hi = match &interval.hi {
        Endpoint::PosInf => Endpoint::PosInf,
        Endpoint::NegInf => return None,
        Endpoint::Finite { value, .. } => Endpoint::Finite { value: value.clone(), closed: false },
    };
    Some(Interval { lo, hi })
}

/// Nonnegativity of `p` on an interval: `Positive` or roots of even
/// multiplicity only.
pub fn nonnegative_on(p: &UniPoly, interval: &Interval) -> Result<bool, Error> {
    if p.is_zero() {
        return Ok(true);
    }
    Ok(sign_on_interval(p, interval)? == IntervalSign::Positive || {
        // all-roots case: p could vanish identically on the interval only if zero
        false
    })
}

/// Extracts rational roots with multiplicities (bounded height), plus the
/// number of remaining irrational real roots in the given interval.
pub fn rational_roots_in(
    p: &UniPoly,
    interval: &Interval,
    height_cap: &num_bigint::BigInt,
) -> Result<(Vec<(Rat, u32)>, Vec<IsolatedRoot>), Error> {
    let all = isolate_roots_capped(p, height_cap)?;
    let mut rational = Vec::new();
    let mut irrational = Vec::new();
    for r in all {
        match &r.exact {
            Some(v) => {
                if interval.contains(v) {
                    rational.push((v.clone(), r.multiplicity));
                }
            }
            None => {
                // interval overlap test against the isolating box
                let overlaps = match (&interval.lo, &interval.hi) {
                    (Endpoint::Finite { value: a, .. }, Endpoint::Finite { value: b, .. }) => !(&r.hi < a || b < &r.lo),
                    (Endpoint::NegInf, Endpoint::Finite { value: b, .. }) => !(b < &r.lo),
                    (Endpoint::Finite { value: a, .. }, Endpoint::PosInf) => !(&r.hi < a),
                    _ => true,
                };
                if overlaps {
                    irrational.push(r);
                }
            }
        }
    }
    Ok((rational, irrational))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn sturm_counts() {
        // (t-1)(t-2) = t^2 - 3t + 2
        let p = UniPoly::from_ints(&[2, -3, 1]);
        assert_eq!(sturm_count(&p, &Interval::open(rat_int(0), rat_int(3))).unwrap(), 2);
        assert_eq!(sturm_count(&p, &Interval::open(rat(3, 2), rat_int(3))).unwrap(), 1);
        let q = UniPoly::from_ints(&[1, 0, 1]); // t^2 + 1
        assert_eq!(sturm_count(&q, &Interval::all()).unwrap(), 0);
        assert!(sturm_count(&UniPoly::zero(), &Interval::all()).is_err());
    }

    #[test]
    fn sturm_endpoint_roots() {
        let p = UniPoly::from_ints(&[2, -3, 1]);
        assert_eq!(sturm_count(&p, &Interval::closed(rat_int(1), rat_int(2))).unwrap(), 2);
        assert_eq!(sturm_count(&p, &Interval::open(rat_int(1), rat_int(2))).unwrap(), 0);
        assert_eq!(
            sturm_count(
                &p,
                &Interval {
                    lo: Endpoint::Finite { value: rat_int(1), closed: true },
                    hi: Endpoint::Finite { value: rat_int(2), closed: false },
                }
            )
            .unwrap(),
            1
        );
    }

    #[test]
    fn sturm_partition_additivity() {
        // roots at -1, 0, 1, 3/2
        let p = UniPoly::from_ints(&[0, 1])
            .mul(&UniPoly::linear_root(&rat_int(-1)))
            .mul(&UniPoly::linear_root(&rat_int(1)))
            .mul(&UniPoly::linear_root(&rat(3, 2)));
        let whole = sturm_count(&p, &Interval::open(rat_int(-2), rat_int(2))).unwrap();
        let a = sturm_count(
            &p,
            &Interval {
                lo: Endpoint::Finite { value: rat_int(-2), closed: false },
                hi: Endpoint::Finite { value: rat(1, 4), closed: true },
            },
        )
        .unwrap();
        let b = sturm_count(
            &p,
            &Interval {
                lo: Endpoint::Finite { value: rat(1, 4), closed: false },
                hi: Endpoint::Finite { value: rat_int(2), closed: false },
            },
        )
        .unwrap();
        assert_eq!(whole, a + b);
        assert_eq!(whole, 4);
    }

    #[test]
    fn isolation_with_multiplicity() {
        // t^3 - t : roots -1, 0, 1
        let p = UniPoly::from_ints(&[0, -1, 0, 1]);
        let roots = isolate_roots(&p).unwrap();
        assert_eq!(roots.len(), 3);
        let exacts: Vec<Rat> = roots.iter().map(|r| r.exact.clone().unwrap()).collect();
        assert_eq!(exacts, vec![rat_int(-1), rat_int(0), rat_int(1)]);
        // (t-2)^2
        let p = UniPoly::from_ints(&[4, -4, 1]);
        let roots = isolate_roots(&p).unwrap();
        assert_eq!(roots.len(), 1);
        assert_eq!(roots[0].multiplicity, 2);
        assert_eq!(roots[0].exact, Some(rat_int(2)));
        // irrational pair: t^2 - 2
        let p = UniPoly::from_ints(&[-2, 0, 1]);
        let roots = isolate_roots(&p).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots.iter().all(|r| r.exact.is_none()));
        assert!(roots[0].hi < roots[1].lo);
    }

    #[test]
    fn sign_analysis() {
        // -(t+1)^2 (t^2+1) <= 0 everywhere, even touch at -1
        let p = UniPoly::from_ints(&[1, 2, 1]).mul(&UniPoly::from_ints(&[1, 0, 1])).neg();
        assert_eq!(sign_on_interval(&p, &Interval::all()).unwrap(), IntervalSign::Negative);
        let t = UniPoly::from_ints(&[0, 1]);
        assert_eq!(
            sign_on_interval(&t, &Interval::open(rat_int(-1), rat_int(1))).unwrap(),
            IntervalSign::Mixed
        );
        assert_eq!(
            sign_on_interval(&t, &Interval::ray_from(rat_int(0), false)).unwrap(),
            IntervalSign::Positive
        );
    }

    #[test]
    fn vanishing_orders() {
        // (t-2)^3 (t+1)
        let p = UniPoly::linear_root(&rat_int(2))
            .mul(&UniPoly::linear_root(&rat_int(2)))
            .mul(&UniPoly::linear_root(&rat_int(2)))
            .mul(&UniPoly::linear_root(&rat_int(-1)));
        assert_eq!(p.vanishing_order(&rat_int(2)), 3);
        assert_eq!(p.vanishing_order(&rat_int(-1)), 1);
        let q = UniPoly::from_ints(&[1, 0, 1]);
        assert_eq!(q.vanishing_order(&rat_int(0)), 0);
        // multiplicativity
        let a = UniPoly::from_ints(&[0, 1]).mul(&UniPoly::from_ints(&[0, 1]));
        let b = UniPoly::linear_root(&rat_int(0));
        assert_eq!(
            a.mul(&b).vanishing_order(&rat_int(0)),
            a.vanishing_order(&rat_int(0)) + b.vanishing_order(&rat_int(0))
        );
    }

    #[test]
    fn simplest_rational() {
        assert_eq!(simplest_in_open(&rat(1, 3), &rat(1, 2)), rat(2, 5));
        assert_eq!(simplest_in_open(&rat(5, 2), &rat(7, 2)), rat_int(3));
        assert_eq!(simplest_in_open(&rat(-1, 2), &rat(1, 2)), rat_int(0));
        // finds 22/7 in a tight interval around it
        let lo = rat(22, 7) - rat(1, 10000);
        let hi = rat(22, 7) + rat(1, 10000);
        assert_eq!(simplest_in_open(&lo, &hi), rat(22, 7));
    }

    #[test]
    fn rational_root_extraction_large_coeffs() {
        // (t - 3/4)^2 * (7919 t - 104729) with a big prime leading coeff
        let p = UniPoly::from_ints(&[-104729, 7919])
            .mul(&UniPoly::new(vec![rat(-3, 4), rat_int(1)]))
            .mul(&UniPoly::new(vec![rat(-3, 4), rat_int(1)]));
        let roots = isolate_roots(&p).unwrap();
        assert_eq!(roots.len(), 2);
        let double = roots.iter().find(|r| r.multiplicity == 2).unwrap();
        assert_eq!(double.exact, Some(rat(3, 4)));
        let simple = roots.iter().find(|r| r.multiplicity == 1).unwrap();
        assert_eq!(simple.exact, Some(rat(104729, 7919)));
    }
}
