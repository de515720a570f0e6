//! The pinned instances: small algebras with a square-zero ideal.

use crate::algebra::{known, Ideal};
use crate::field::FiniteField;
use crate::instance::Instance;
use crate::lattice::DEFAULT_CAP;

fn unit_vector<F: FiniteField>(n: usize, i: usize) -> Vec<F> {
    let mut v = vec![F::zero(); n];
    v[i] = F::one();
    v
}

/// `F[t]/t²`, `I = (t)`.
pub fn dual_numbers<F: FiniteField>() -> Instance<F> {
    let a = known::dual_numbers::<F>();
    let i = Ideal::new(&a, &[unit_vector(2, 1)]).expect("(t) is an ideal");
    Instance::new(a, i, DEFAULT_CAP).expect("t² = 0")
}

/// `F[x,y]/(x², xy, y²)`, `I = (x, y)`.
pub fn fat_point<F: FiniteField>() -> Instance<F> {
    let a = known::fat_point::<F>();
    let i = Ideal::new(&a, &[unit_vector(3, 1), unit_vector(3, 2)]).expect("(x, y) is an ideal");
    Instance::new(a, i, DEFAULT_CAP).expect("(x, y)² = 0")
}

/// Upper-triangular 2×2 matrices, `I` the strict upper triangle.
pub fn triangular2<F: FiniteField>() -> Instance<F> {
    let a = known::upper_triangular2::<F>();
    let i = Ideal::new(&a, &[unit_vector(3, 1)]).expect("(e12) is an ideal");
    Instance::new(a, i, DEFAULT_CAP).expect("e12² = 0")
}

/// `F[t]/t²` with `I = 0`, so `B = A`.
pub fn dual_numbers_trivial_ideal<F: FiniteField>() -> Instance<F> {
    let a = known::dual_numbers::<F>();
    let i = Ideal::zero(&a);
    Instance::new(a, i, DEFAULT_CAP).expect("0 is square-zero")
}

/// The ground field with `I = 0`.
pub fn semisimple<F: FiniteField>() -> Instance<F> {
    let a = known::ground_field::<F>();
    let i = Ideal::zero(&a);
    Instance::new(a, i, DEFAULT_CAP).expect("0 is square-zero")
}
