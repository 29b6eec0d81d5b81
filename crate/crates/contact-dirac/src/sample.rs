//! Seeded generators for exact test data.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::connection::TwoTensorForm;
use crate::frame::{combinations, Form};
use crate::linalg::Mat;
use crate::scalar::Scalar;

pub struct Sampler {
    rng: ChaCha8Rng,
}

fn small(rng: &mut ChaCha8Rng) -> BigRational {
    let n: i64 = rng.gen_range(-4..=4);
    let d: i64 = rng.gen_range(1..=3);
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Real element of `Q(√2)`, zero about a quarter of the time.
    pub fn real(&mut self) -> Scalar {
        if self.rng.gen_bool(0.25) {
            return Scalar::zero();
        }
        let r = small(&mut self.rng);
        let s = if self.rng.gen_bool(0.3) {
            small(&mut self.rng)
        } else {
            BigRational::from_integer(0.into())
        };
        let zero = BigRational::from_integer(0.into());
        Scalar::from_parts(r, s, zero.clone(), zero)
    }

    pub fn imaginary(&mut self) -> Scalar {
        self.real().scale_i()
    }

    pub fn two_tensor(&mut self, dim: usize) -> TwoTensorForm {
        TwoTensorForm::from_upper(dim, |_, _, _| self.real())
    }

    pub fn endo(&mut self, dim: usize) -> Mat {
        Mat::from_fn(dim, dim, |_, _| self.real())
    }

    pub fn one_form(&mut self, dim: usize) -> Form {
        let v: Vec<Scalar> = (0..dim).map(|_| self.real()).collect();
        Form::from_vec(&v)
    }

    pub fn imaginary_one_form(&mut self, dim: usize) -> Form {
        let v: Vec<Scalar> = (0..dim).map(|_| self.imaginary()).collect();
        Form::from_vec(&v)
    }

    pub fn form(&mut self, dim: usize, degree: usize) -> Form {
        let mut f = Form::zero(dim, degree);
        for idx in combinations(dim, degree) {
            f.set(&idx, self.real());
        }
        f
    }
}
