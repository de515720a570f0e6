//! Smith normal form over the integers, with unimodular certificates.
//!
//! Generic over any signed Euclidean integer type; [`BigInt`] is used where
//! entries may grow, `i64` where they provably do not.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

use crate::matrix::Matrix;

/// `u * m * v = d` with `d` diagonal, `d₁ | d₂ | …`, all entries `≥ 0`, and
/// `u`, `v` unimodular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Snf<T> {
    pub d: Matrix<T>,
    pub u: Matrix<T>,
    pub v: Matrix<T>,
}

pub type SnfBig = Snf<BigInt>;

pub trait SnfInt: Integer + Signed + Clone + Debug {}
impl<T: Integer + Signed + Clone + Debug> SnfInt for T {}

fn swap_rows<T: SnfInt>(m: &mut Matrix<T>, a: usize, b: usize) {
    if a != b {
        for j in 0..m.cols() {
            let t = m[(a, j)].clone();
            m[(a, j)] = m[(b, j)].clone();
            m[(b, j)] = t;
        }
    }
}

fn swap_cols<T: SnfInt>(m: &mut Matrix<T>, a: usize, b: usize) {
    if a != b {
        for i in 0..m.rows() {
            let t = m[(i, a)].clone();
            m[(i, a)] = m[(i, b)].clone();
            m[(i, b)] = t;
        }
    }
}

/// row_dst += q * row_src
fn add_row<T: SnfInt>(m: &mut Matrix<T>, dst: usize, src: usize, q: &T) {
    for j in 0..m.cols() {
        let s = m[(src, j)].clone();
        if !s.is_zero() {
            m[(dst, j)] = m[(dst, j)].clone() + q.clone() * s;
        }
    }
}

/// col_dst += q * col_src
fn add_col<T: SnfInt>(m: &mut Matrix<T>, dst: usize, src: usize, q: &T) {
    for i in 0..m.rows() {
        let s = m[(i, src)].clone();
        if !s.is_zero() {
            m[(i, dst)] = m[(i, dst)].clone() + q.clone() * s;
        }
    }
}

pub fn smith_normal_form<T: SnfInt>(m: &Matrix<T>) -> Snf<T> {
    let (r, c) = m.shape();
    let mut a = m.clone();
    let mut u = Matrix::identity(r);
    let mut v = Matrix::identity(c);

    for t in 0..r.min(c) {
        // Smallest nonzero entry of the trailing block becomes the pivot.
        let mut best: Option<(usize, usize)> = None;
        for i in t..r {
            for j in t..c {
                if !a[(i, j)].is_zero() && best.is_none_or(|(bi, bj)| a[(i, j)].abs() < a[(bi, bj)].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        swap_rows(&mut a, t, pi);
        swap_rows(&mut u, t, pi);
        swap_cols(&mut a, t, pj);
        swap_cols(&mut v, t, pj);

        loop {
            let mut clean = true;
            for i in t + 1..r {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = -a[(i, t)].div_floor(&a[(t, t)]);
                add_row(&mut a, i, t, &q);
                add_row(&mut u, i, t, &q);
                if !a[(i, t)].is_zero() {
                    swap_rows(&mut a, t, i);
                    swap_rows(&mut u, t, i);
                    clean = false;
                }
            }
            for j in t + 1..c {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = -a[(t, j)].div_floor(&a[(t, t)]);
                add_col(&mut a, j, t, &q);
                add_col(&mut v, j, t, &q);
                if !a[(t, j)].is_zero() {
                    swap_cols(&mut a, t, j);
                    swap_cols(&mut v, t, j);
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // Enforce divisibility into the rest of the block.
            let bad = (t + 1..r).find(|&i| (t + 1..c).any(|j| !a[(i, j)].is_multiple_of(&a[(t, t)])));
            match bad {
                Some(i) => {
                    let one = T::one();
                    add_row(&mut a, t, i, &one);
                    add_row(&mut u, t, i, &one);
                }
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            let minus = -T::one();
            for j in 0..c {
                a[(t, j)] = a[(t, j)].clone() * minus.clone();
            }
            for j in 0..r {
                u[(t, j)] = u[(t, j)].clone() * minus.clone();
            }
        }
    }
    Snf { d: a, u, v }
}

impl<T: SnfInt> Snf<T> {
    /// Nonzero diagonal entries, in order.
    pub fn invariants(&self) -> Vec<T> {
        let k = self.d.rows().min(self.d.cols());
        (0..k).map(|i| self.d[(i, i)].clone()).filter(|x| !x.is_zero()).collect()
    }

    pub fn rank(&self) -> usize {
        self.invariants().len()
    }

    /// The cokernel `Z^rows / im(m)` as `(free rank, torsion coefficients > 1)`.
    pub fn cokernel(&self) -> (usize, Vec<T>) {
        let inv = self.invariants();
        let free = self.d.rows() - inv.len();
        (free, inv.into_iter().filter(|x| !x.is_one()).collect())
    }

    /// Basis of `{x : m x = 0}`, as columns.
    pub fn kernel_basis(&self) -> Matrix<T> {
        let k = self.rank();
        let idx: Vec<usize> = (k..self.v.cols()).collect();
        self.v.select_columns(&idx)
    }

    /// Integer solution of `m x = y`, if any.
    pub fn solve(&self, y: &[T]) -> Option<Vec<T>> {
        let uy = self.u.apply(y);
        let k = self.rank();
        let mut z = vec![T::zero(); self.v.rows()];
        for (i, val) in uy.iter().enumerate() {
            if i < k {
                let d = &self.d[(i, i)];
                if !val.is_multiple_of(d) {
                    return None;
                }
                z[i] = val.div_floor(d);
            } else if !val.is_zero() {
                return None;
            }
        }
        Some(self.v.apply(&z))
    }
}

pub fn to_big(m: &Matrix<i64>) -> Matrix<BigInt> {
    m.map(|&x| BigInt::from(x))
}

/// Narrow back to `i64`; `None` on overflow.
pub fn to_i64(m: &Matrix<BigInt>) -> Option<Matrix<i64>> {
    let data = m.data().iter().map(|x| x.to_i64()).collect::<Option<Vec<_>>>()?;
    Some(Matrix::from_vec(m.rows(), m.cols(), data))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> Matrix<i64> {
        let c = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(c, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    fn check(m: &Matrix<i64>) -> Snf<i64> {
        let s = smith_normal_form(m);
        assert_eq!(&(&s.u * m) * &s.v, s.d);
        s
    }

    #[test]
    fn diagonal_two_three() {
        let s = check(&mat(&[&[2, 0], &[0, 3]]));
        assert_eq!(s.invariants(), vec![1, 6]);
    }

    #[test]
    fn identity_is_fixed() {
        let s = check(&Matrix::identity(3));
        assert_eq!(s.d, Matrix::identity(3));
    }

    #[test]
    fn rank_one() {
        let s = check(&mat(&[&[1, 1], &[1, 1]]));
        assert_eq!(s.invariants(), vec![1]);
        assert_eq!(s.cokernel(), (1, vec![]));
        let k = s.kernel_basis();
        assert_eq!(k.cols(), 1);
        assert!((&mat(&[&[1, 1], &[1, 1]]) * &k).is_zero());
    }

    #[test]
    fn integer_solve() {
        let m = mat(&[&[2, 4], &[0, 6]]);
        let s = check(&m);
        let x = s.solve(&[2, 6]).unwrap();
        assert_eq!(m.apply(&x), vec![2, 6]);
        assert!(s.solve(&[1, 0]).is_none());
    }

    #[test]
    fn bigint_agrees() {
        let m = mat(&[&[4, 6, 2], &[6, 9, 3], &[2, 4, 8]]);
        let small = check(&m);
        let big = smith_normal_form(&to_big(&m));
        assert_eq!(to_i64(&big.d).unwrap(), small.d);
    }
}
