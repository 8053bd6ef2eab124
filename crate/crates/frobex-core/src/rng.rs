//! Small deterministic PRNG (splitmix64) for the randomized property runs.
//! Every randomized report prints the seed it used; the same seed always
//! reproduces the same stream.

use std::sync::Arc;

use crate::linalg::Matrix;
use crate::scalars::{rat, CycField, CycScalar};

#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }

    /// Small rational with numerator in [-3, 3] and denominator in {1, 2}.
    pub fn small_rational(&mut self) -> num_rational::BigRational {
        let num = self.below(7) as i64 - 3;
        let den = 1 + self.below(2) as i64;
        rat(num, den)
    }

    /// Scalar with a couple of random monomial terms.
    pub fn scalar(&mut self, field: &Arc<CycField>) -> CycScalar {
        let mut s = CycScalar::from_rational(field, self.small_rational());
        if field.degree() > 1 {
            let k = self.below(field.degree() as u64) as i64;
            let term = CycScalar::zeta_pow(field, k).scale(&self.small_rational());
            s = s.add(&term).unwrap();
        }
        s
    }

    pub fn nonzero_scalar(&mut self, field: &Arc<CycField>) -> CycScalar {
        loop {
            let s = self.scalar(field);
            if !s.is_zero() {
                return s;
            }
        }
    }

    pub fn matrix(&mut self, field: &Arc<CycField>, rows: usize, cols: usize) -> Matrix {
        let mut m = Matrix::zeros(field, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.set(r, c, CycScalar::from_rational(field, self.small_rational()));
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_stream() {
        let mut a = SplitMix64::new(7);
        let mut b = SplitMix64::new(7);
        for _ in 0..16 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }
}
