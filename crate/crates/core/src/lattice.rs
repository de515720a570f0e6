//! Submodule lattices, composition series and simple modules by exhaustive search.

use std::collections::{HashSet, VecDeque};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::FiniteField;
use crate::module::ModuleRep;
use crate::subspace::Subspace;

/// Default budget for enumerations.
pub const DEFAULT_CAP: u64 = 1_000_000;

fn check_vector_budget<F: FiniteField>(dim: usize, cap: u64) -> Result<()> {
    match F::order().checked_pow(dim as u32) {
        Some(n) if n <= cap => Ok(()),
        _ => Err(Error::EnumerationBudgetExceeded(cap)),
    }
}

/// Every submodule of `m` exactly once, in echelon form, starting with 0.
///
/// Submodules are reached by breadth-first search, adding one cyclic
/// generator at a time. `cap` bounds both the number of vectors scanned per
/// step (`p^dim`) and the number of submodules returned.
pub fn submodules<F: FiniteField>(m: &ModuleRep<F>, cap: u64) -> Result<Vec<Subspace<F>>> {
    check_vector_budget::<F>(m.dim(), cap)?;
    let zero = Subspace::zero(m.dim());
    let mut seen: HashSet<Subspace<F>> = HashSet::from([zero.clone()]);
    let mut out = vec![zero.clone()];
    let mut queue = VecDeque::from([zero]);
    while let Some(w) = queue.pop_front() {
        for v in w.complement_directions() {
            let next = m.closure(&w.sum(&Subspace::span(m.dim(), [v])));
            if seen.insert(next.clone()) {
                if out.len() as u64 >= cap {
                    return Err(Error::EnumerationBudgetExceeded(cap));
                }
                out.push(next.clone());
                queue.push_back(next);
            }
        }
    }
    Ok(out)
}

/// Which minimal cyclic extension to prefer while building a series.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesOrder {
    First,
    Last,
}

/// A composition series `0 = M_0 ⊂ M_1 ⊂ … ⊂ M_r = M`.
///
/// Each step adds a minimal cyclic submodule of `M / M_i`; a cyclic
/// submodule of least dimension is simple because every nonzero submodule
/// contains a cyclic one.
pub fn composition_series<F: FiniteField>(m: &ModuleRep<F>, order: SeriesOrder, cap: u64) -> Result<Vec<Subspace<F>>> {
    check_vector_budget::<F>(m.dim(), cap)?;
    let mut chain = vec![Subspace::zero(m.dim())];
    let mut cur = chain[0].clone();
    while !cur.is_full() {
        let mut dirs = cur.complement_directions();
        if order == SeriesOrder::Last {
            dirs.reverse();
        }
        let mut best: Option<Subspace<F>> = None;
        for v in dirs {
            let next = m.closure(&cur.sum(&Subspace::span(m.dim(), [v])));
            if best.as_ref().is_none_or(|b| next.dim() < b.dim()) {
                let done = next.dim() == cur.dim() + 1;
                best = Some(next);
                if done {
                    break;
                }
            }
        }
        cur = best.expect("proper subspace has a complement direction");
        chain.push(cur.clone());
    }
    Ok(chain)
}

/// The factors `M_i / M_{i-1}` of a series.
pub fn series_factors<F: FiniteField>(m: &ModuleRep<F>, chain: &[Subspace<F>]) -> Result<Vec<ModuleRep<F>>> {
    chain.windows(2).map(|w| m.subquotient(&w[1], &w[0])).collect()
}

/// Whether `m` is simple (nonzero with no proper nonzero submodule).
pub fn is_simple<F: FiniteField>(m: &ModuleRep<F>, cap: u64) -> Result<bool> {
    if m.is_zero() {
        return Ok(false);
    }
    Ok(composition_series(m, SeriesOrder::First, cap)?.len() == 2)
}

/// Pinned ordered list of the simple modules of an algebra.
#[derive(Clone, Debug)]
pub struct SimpleBasis<F> {
    simples: Vec<ModuleRep<F>>,
    cap: u64,
}

impl<F: FiniteField> SimpleBasis<F> {
    /// Simples as the composition factors of the regular module, in order of
    /// first appearance along the series.
    pub fn of_algebra(alg: &Algebra<F>, cap: u64) -> Result<Self> {
        let reg = alg.regular_module();
        let chain = composition_series(&reg, SeriesOrder::First, cap)?;
        let mut simples: Vec<ModuleRep<F>> = Vec::new();
        for s in series_factors(&reg, &chain)? {
            let mut known = false;
            for t in &simples {
                // Schur: a nonzero map between simples is an isomorphism.
                if t.dim() == s.dim() && t.hom_dim(&s) > 0 {
                    known = true;
                    break;
                }
            }
            if !known {
                simples.push(s);
            }
        }
        Ok(SimpleBasis { simples, cap })
    }

    pub fn len(&self) -> usize {
        self.simples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simples.is_empty()
    }

    pub fn simples(&self) -> &[ModuleRep<F>] {
        &self.simples
    }

    pub fn get(&self, i: usize) -> &ModuleRep<F> {
        &self.simples[i]
    }

    pub fn cap(&self) -> u64 {
        self.cap
    }

    /// Index of the simple isomorphic to `s`.
    pub fn identify(&self, s: &ModuleRep<F>) -> Result<usize> {
        self.simples.iter().position(|t| t.dim() == s.dim() && t.hom_dim(s) > 0).ok_or(Error::UnrecognizedFactor)
    }

    /// Composition-factor multiplicities of `m`.
    pub fn factors(&self, m: &ModuleRep<F>) -> Result<Vec<i64>> {
        self.factors_along(m, SeriesOrder::First)
    }

    pub fn factors_along(&self, m: &ModuleRep<F>, order: SeriesOrder) -> Result<Vec<i64>> {
        let mut counts = vec![0i64; self.len()];
        if m.is_zero() {
            return Ok(counts);
        }
        let chain = composition_series(m, order, self.cap)?;
        for f in series_factors(m, &chain)? {
            counts[self.identify(&f)?] += 1;
        }
        Ok(counts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::known;
    use crate::field::Fp;
    use crate::matrix::Matrix;

    type F2 = Fp<2>;

    /// Every subspace of `F2^d`, by brute force over spanning sets.
    fn all_subspaces(d: usize) -> HashSet<Subspace<F2>> {
        let vectors: Vec<Vec<F2>> = (0..1u64 << d).map(|c| (0..d).map(|i| F2::new((c >> i) & 1)).collect()).collect();
        let mut out = HashSet::new();
        for mask in 0u64..1 << vectors.len() {
            let chosen: Vec<&Vec<F2>> =
                (0..vectors.len()).filter(|i| mask >> i & 1 == 1).map(|i| &vectors[i]).collect();
            out.insert(Subspace::span(d, chosen));
        }
        out
    }

    #[test]
    fn dual_numbers_regular_submodules() {
        let a = known::dual_numbers::<F2>();
        let reg = a.regular_module();
        let subs = submodules(&reg, DEFAULT_CAP).unwrap();
        // oracle: filter the five subspaces of F2^2 by invariance
        let brute: HashSet<_> = all_subspaces(2).into_iter().filter(|w| reg.is_submodule(w)).collect();
        assert_eq!(all_subspaces(2).len(), 5);
        assert_eq!(brute.len(), 3);
        assert_eq!(subs.len(), 3);
        assert_eq!(subs.into_iter().collect::<HashSet<_>>(), brute);
    }

    #[test]
    fn semisimple_square_has_all_subspaces() {
        let s = ModuleRep::<F2>::from_action_unchecked(1, vec![Matrix::identity(1), Matrix::zeros(1, 1)]);
        let s2 = s.direct_sum(&s);
        assert_eq!(submodules(&s2, DEFAULT_CAP).unwrap().len(), 5);
        assert_eq!(submodules(&ModuleRep::<F2>::zero(2), DEFAULT_CAP).unwrap().len(), 1);
    }

    #[test]
    fn budget_is_enforced() {
        let a = known::upper_triangular2::<F2>();
        let reg = a.regular_module();
        assert_eq!(submodules(&reg, 4), Err(Error::EnumerationBudgetExceeded(4)));
    }

    #[test]
    fn simples_of_small_algebras() {
        let dual = SimpleBasis::of_algebra(&known::dual_numbers::<F2>(), DEFAULT_CAP).unwrap();
        assert_eq!(dual.len(), 1);
        assert_eq!(dual.get(0).dim(), 1);
        let split = SimpleBasis::of_algebra(&known::split_product::<F2>(), DEFAULT_CAP).unwrap();
        assert_eq!(split.len(), 2);
        assert!(split.simples().iter().all(|s| s.dim() == 1));
        let field = SimpleBasis::of_algebra(&known::ground_field::<F2>(), DEFAULT_CAP).unwrap();
        assert_eq!(field.len(), 1);
    }

    #[test]
    fn composition_factors_examples() {
        let a = known::dual_numbers::<F2>();
        let sb = SimpleBasis::of_algebra(&a, DEFAULT_CAP).unwrap();
        assert_eq!(sb.factors(&a.regular_module()).unwrap(), vec![2]);
        assert_eq!(sb.factors(&ModuleRep::zero(2)).unwrap(), vec![0]);

        // Upper triangular: P1 = e11 A = span{e11, e12} has factors S1, S2;
        // P2 = e22 A = span{e22} is simple. Regular module: S1 + 2 S2 in
        // some order; brute-force check both series give the same multiset.
        let t = known::upper_triangular2::<F2>();
        let sb = SimpleBasis::of_algebra(&t, DEFAULT_CAP).unwrap();
        assert_eq!(sb.len(), 2);
        let reg = t.regular_module();
        let first = sb.factors_along(&reg, SeriesOrder::First).unwrap();
        let last = sb.factors_along(&reg, SeriesOrder::Last).unwrap();
        assert_eq!(first, last);
        assert_eq!(first.iter().sum::<i64>(), 3);
        let mut sorted = first.clone();
        sorted.sort();
        assert_eq!(sorted, vec![1, 2]);
    }
}
