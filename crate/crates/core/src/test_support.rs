//! Deterministic parameter generators for tests, sweeps and the identity
//! suite. All "random rational" parameters in this crate come from a fixed
//! seeded generator with bounded numerators and denominators, so every run
//! is reproducible.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::scalar::{Rat, rat};

pub struct SeededRats {
    rng: ChaCha8Rng,
}

impl SeededRats {
    pub fn new(seed: u64) -> Self {
        SeededRats { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// Nonnegative rational with numerator in `0..=max_num` and denominator
    /// in `1..=max_den`.
    pub fn rat_nonneg(&mut self, max_num: i64, max_den: i64) -> Rat {
        let n = self.rng.random_range(0..=max_num);
        let d = self.rng.random_range(1..=max_den);
        rat(n, d)
    }

    /// Strictly positive rational.
    pub fn rat_pos(&mut self, max_num: i64, max_den: i64) -> Rat {
        let n = self.rng.random_range(1..=max_num);
        let d = self.rng.random_range(1..=max_den);
        rat(n, d)
    }

    pub fn rat_signed(&mut self, max_num: i64, max_den: i64) -> Rat {
        let n = self.rng.random_range(-max_num..=max_num);
        let d = self.rng.random_range(1..=max_den);
        rat(n, d)
    }

    pub fn pick(&mut self, n: usize) -> usize {
        self.rng.random_range(0..n)
    }

    pub fn bool(&mut self) -> bool {
        self.rng.random()
    }

    /// `(p, q, r)` with all three guard values `a1` strictly positive, the
    /// parameter region where the first family is irreducible.
    pub fn f_params_interior(&mut self) -> (Rat, Rat, Rat) {
        loop {
            let p = self.rat_nonneg(20, 20);
            let q = self.rat_nonneg(20, 20);
            let r = self.rat_nonneg(20, 20);
            let pos = |a: &Rat, b: &Rat| {
                use num_traits::One;
                a * b - a + Rat::one() > crate::scalar::rat_int(0)
            };
            if pos(&p, &q) && pos(&q, &r) && pos(&r, &p) {
                return (p, q, r);
            }
        }
    }

    /// `(p, q)` with `p, q > 0` and `p + q < 1`.
    pub fn g_params_interior(&mut self) -> (Rat, Rat) {
        loop {
            let p = self.rat_pos(19, 20);
            let q = self.rat_pos(19, 20);
            use num_traits::One;
            if &p + &q < Rat::one() {
                return (p, q);
            }
        }
    }

    /// `(p, q)` with `p, q > 0` (cusp family interior parameters).
    pub fn h_params_interior(&mut self) -> (Rat, Rat) {
        (self.rat_pos(20, 20), self.rat_pos(20, 20))
    }
}
