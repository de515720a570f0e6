use devissage::field::{Field, FiniteField};
use devissage::lattice::{submodules, DEFAULT_CAP};
use devissage::matrix::Matrix;
use devissage::sampling::Sampler;
use devissage::snf::smith_normal_form;
use devissage::subspace::Subspace;
use devissage::{fixtures, F2, F3, Q};
use num_integer::Integer;
use proptest::prelude::*;

fn field_matrix<F: FiniteField>(rows: usize, cols: usize, raw: &[u64]) -> Matrix<F> {
    Matrix::from_fn(rows, cols, |i, j| F::from_u64(raw[i * cols + j]))
}

fn dims() -> impl Strategy<Value = (usize, usize, Vec<u64>)> {
    (1usize..6, 1usize..6).prop_flat_map(|(r, c)| (Just(r), Just(c), prop::collection::vec(0u64..100, r * c)))
}

/// Determinant by cofactor expansion; the matrices here are at most 4×4.
fn det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i128>> = m[1..].iter().map(|r| [&r[..j], &r[j + 1..]].concat()).collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * m[0][j] * det(&minor)
        })
        .sum()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// `d_k(M)`: gcd of all k×k minors.
fn determinantal_divisor(m: &Matrix<i64>, k: usize) -> i128 {
    let mut g = 0i128;
    for rows in subsets(m.rows(), k) {
        for cols in subsets(m.cols(), k) {
            let sub: Vec<Vec<i128>> = rows.iter().map(|&i| cols.iter().map(|&j| m[(i, j)] as i128).collect()).collect();
            g = g.gcd(&det(&sub));
        }
    }
    g
}

fn int_det(m: &Matrix<i64>) -> i128 {
    det(&(0..m.rows()).map(|i| m.row(i).iter().map(|&x| x as i128).collect()).collect::<Vec<_>>())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_nullity_f3((r, c, raw) in dims()) {
        let m: Matrix<F3> = field_matrix(r, c, &raw);
        prop_assert_eq!(m.rank() + m.kernel().cols(), c);
        prop_assert!((&m * &m.kernel()).is_zero());
    }

    #[test]
    fn rank_nullity_rationals((r, c, raw) in dims()) {
        let m: Matrix<Q> = Matrix::from_fn(r, c, |i, j| Q::from_integer(raw[i * c + j] as i64 - 50));
        prop_assert_eq!(m.rank() + m.kernel().cols(), c);
        prop_assert!((&m * &m.kernel()).is_zero());
    }

    #[test]
    fn inverses_in_f7(x in 1u64..7) {
        let a = devissage::F7::from_u64(x);
        prop_assert_eq!(a * a.try_inv().unwrap(), devissage::F7::from_u64(1));
    }

    #[test]
    fn quotient_section_splits((r, c, raw) in dims()) {
        let m: Matrix<F2> = field_matrix(r, c, &raw);
        let w = Subspace::<F2>::column_space(&m);
        let q = w.quotient();
        prop_assert_eq!(&q.projection * &q.section, Matrix::identity(q.dim()));
        prop_assert!((&q.projection * &w.basis_matrix()).is_zero());
    }

    #[test]
    fn snf_matches_determinantal_divisors(
        (r, c, raw) in (1usize..5, 1usize..5).prop_flat_map(|(r, c)| (Just(r), Just(c), prop::collection::vec(-9i64..10, r * c)))
    ) {
        let m = Matrix::from_vec(r, c, raw);
        let s = smith_normal_form(&m);
        prop_assert_eq!(&(&s.u * &m) * &s.v, s.d.clone());
        prop_assert_eq!(int_det(&s.u).abs(), 1);
        prop_assert_eq!(int_det(&s.v).abs(), 1);
        let inv = s.invariants();
        for w in inv.windows(2) {
            prop_assert_eq!(w[1] % w[0], 0);
        }
        // d_k = d_{k-1} · s_k
        let mut prod = 1i128;
        for k in 1..=r.min(c) {
            let dk = determinantal_divisor(&m, k);
            if k <= inv.len() {
                prod *= inv[k - 1] as i128;
                prop_assert_eq!(dk, prod);
            } else {
                prop_assert_eq!(dk, 0);
            }
        }
    }

    #[test]
    fn module_hom_rank_nullity_and_image(seed in any::<u64>()) {
        let inst = fixtures::triangular2::<F2>();
        let mut smp = Sampler::new(&inst, seed);
        let m = smp.module();
        let n = smp.module();
        let f = smp.hom(&m, &n);
        prop_assert_eq!(f.kernel_space().dim() + f.rank(), m.dim());
        // M / ker f ≅ im f
        let (_, incl) = f.kernel();
        let (coim, _) = incl.cokernel();
        let (im, _) = n.submodule(&f.image()).unwrap();
        prop_assert!(coim.is_isomorphic(&im, DEFAULT_CAP).unwrap());
    }

    #[test]
    fn submodules_closed_and_factors_additive(seed in any::<u64>()) {
        let inst = fixtures::fat_point::<F2>();
        let mut smp = Sampler::new(&inst, seed);
        let m = smp.module();
        prop_assume!(m.dim() <= 5);
        let subs = submodules(&m, DEFAULT_CAP).unwrap();
        let simples = inst.simples_a().unwrap();
        let total = simples.factors(&m).unwrap();
        for a in subs.iter().take(12) {
            for b in subs.iter().take(12) {
                prop_assert!(subs.contains(&a.sum(b)));
                prop_assert!(subs.contains(&a.intersection(b)));
            }
            let k = simples.factors(&m.submodule(a).unwrap().0).unwrap();
            let q = simples.factors(&m.quotient(a).unwrap().0).unwrap();
            let sum: Vec<i64> = k.iter().zip(&q).map(|(x, y)| x + y).collect();
            prop_assert_eq!(&sum, &total);
        }
    }
}

#[test]
fn tensor_with_ideal_of_regular_module_is_the_ideal() {
    for inst in [fixtures::dual_numbers::<F2>(), fixtures::fat_point(), fixtures::triangular2()] {
        let reg = inst.algebra().regular_module();
        let jt = inst.j_tilde(&reg);
        let (ideal, _) = reg.submodule(inst.ideal().space()).unwrap();
        let ideal_b = inst.deflate(&ideal).unwrap();
        assert!(jt.module.is_isomorphic(&ideal_b, DEFAULT_CAP).unwrap());
    }
}
