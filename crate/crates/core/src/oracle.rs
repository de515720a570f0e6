//! Brute-force K₀ presentations: enumerate isomorphism classes of small
//! objects, one relation per short exact sequence among them, and reduce the
//! relation matrix to Smith normal form.
//!
//! This is deliberately independent of composition factors, so it can be used
//! to check them.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::FiniteField;
use crate::instance::Instance;
use crate::lattice::{submodules, SimpleBasis};
use crate::matrix::{solution_space, Matrix};
use crate::module::ModuleRep;
use crate::pair::{PairObject, Pairs};
use crate::snf::{smith_normal_form, to_big, SnfBig};
use crate::subspace::Subspace;

/// Generators and relations for a Grothendieck group, with its Smith form.
///
/// Each relation row reads `[middle] − [sub] − [quotient]`.
#[derive(Clone, Debug)]
pub struct K0Presentation {
    pub generators: Vec<String>,
    pub relations: Matrix<i64>,
    pub snf: SnfBig,
}

impl K0Presentation {
    fn new(generators: Vec<String>, rows: BTreeSet<Vec<i64>>) -> Self {
        let g = generators.len();
        let rows: Vec<Vec<i64>> = rows.into_iter().collect();
        let relations = Matrix::from_rows(g, &rows);
        // Columns of the transpose generate the relation lattice in Z^g.
        let snf = smith_normal_form(&to_big(&relations.transpose()));
        K0Presentation { generators, relations, snf }
    }

    pub fn free_rank(&self) -> usize {
        self.snf.cokernel().0
    }

    pub fn torsion(&self) -> Vec<BigInt> {
        self.snf.cokernel().1
    }

    pub fn is_free(&self) -> bool {
        self.torsion().is_empty()
    }

    /// Nonzero diagonal entries of the Smith form.
    pub fn diagonal(&self) -> Vec<BigInt> {
        self.snf.invariants()
    }

    /// Whether `generator ↦ classes[generator]` (rows of `classes`) kills
    /// every relation and induces an isomorphism onto `Z^classes.cols()`.
    pub fn matches_classes(&self, classes: &Matrix<i64>) -> bool {
        if classes.rows() != self.generators.len() {
            return false;
        }
        if !(&self.relations * classes).is_zero() {
            return false;
        }
        let s = classes.cols();
        let onto = smith_normal_form(&to_big(&classes.transpose()));
        let unimodular = onto.rank() == s && onto.invariants().iter().all(|d| d == &BigInt::from(1));
        self.is_free() && self.free_rank() == s && unimodular
    }
}

/// Isomorphism classes bucketed by a cheap invariant.
struct Catalogue<F> {
    modules: Vec<ModuleRep<F>>,
    buckets: HashMap<Vec<usize>, Vec<usize>>,
    simples: Vec<ModuleRep<F>>,
    cap: u64,
}

impl<F: FiniteField> Catalogue<F> {
    fn signature(&self, m: &ModuleRep<F>) -> Vec<usize> {
        let mut sig = vec![m.dim(), m.hom_dim(m)];
        for s in &self.simples {
            sig.push(s.hom_dim(m));
            sig.push(m.hom_dim(s));
        }
        sig
    }

    fn find(&self, m: &ModuleRep<F>) -> Result<Option<usize>> {
        let sig = self.signature(m);
        if let Some(idx) = self.buckets.get(&sig) {
            for &i in idx {
                if self.modules[i].is_isomorphic(m, self.cap)? {
                    return Ok(Some(i));
                }
            }
        }
        Ok(None)
    }

    fn insert(&mut self, m: ModuleRep<F>) -> Result<bool> {
        if self.find(&m)?.is_some() {
            return Ok(false);
        }
        let sig = self.signature(&m);
        self.buckets.entry(sig).or_default().push(self.modules.len());
        self.modules.push(m);
        Ok(true)
    }
}

/// All extensions `0 → n → M → s → 0` up to the choice of cocycle modulo
/// coboundaries; `n` occupies the first coordinates of `M`.
pub fn extensions<F: FiniteField>(
    alg: &Algebra<F>,
    n: &ModuleRep<F>,
    s: &ModuleRep<F>,
    cap: u64,
) -> Result<Vec<ModuleRep<F>>> {
    let (a, b, nb) = (n.dim(), s.dim(), alg.dim());
    let block = a * b;
    let unknowns = nb * block;
    let c_of = |x: &[F], i: usize| Matrix::from_vec(a, b, x[i * block..(i + 1) * block].to_vec());

    // c(b_i b_j) = N_j c_i + c_j S_i, and c(1) = 0.
    let cocycles = solution_space(unknowns, |x: &[F]| {
        let mut res = Vec::with_capacity(nb * nb * block + block);
        for i in 0..nb {
            for j in 0..nb {
                let mut lhs = Matrix::zeros(a, b);
                for (k, &t) in alg.product(i, j).iter().enumerate() {
                    if !t.is_zero() {
                        lhs = &lhs + &c_of(x, k).scale(&t);
                    }
                }
                let rhs = &(n.action(j) * &c_of(x, i)) + &(&c_of(x, j) * s.action(i));
                res.extend((&lhs - &rhs).data().iter().copied());
            }
        }
        let mut u = Matrix::zeros(a, b);
        for (k, &t) in alg.unit().iter().enumerate() {
            if !t.is_zero() {
                u = &u + &c_of(x, k).scale(&t);
            }
        }
        res.extend(u.data().iter().copied());
        res
    });
    let z = Subspace::span(unknowns, cocycles);
    let mut coboundaries = Vec::with_capacity(block);
    for e in 0..block {
        let mut h = Matrix::zeros(a, b);
        h[(e / b.max(1), e % b.max(1))] = F::one();
        let mut v = Vec::with_capacity(unknowns);
        for i in 0..nb {
            v.extend((&(n.action(i) * &h) - &(&h * s.action(i))).data().iter().copied());
        }
        coboundaries.push(v);
    }
    let bsp = Subspace::span(unknowns, coboundaries);
    let rel = z.relative(&bsp).ok_or_else(|| Error::VerificationFailure("coboundary is not a cocycle".into()))?;
    let reps = &z.basis_matrix() * &rel.quotient().section;
    let e = reps.cols();
    let q = F::order();
    let total = q.checked_pow(e as u32).filter(|&t| t <= cap).ok_or(Error::EnumerationBudgetExceeded(cap))?;
    let mut out = Vec::with_capacity(total as usize);
    for code in 0..total {
        let mut x = vec![F::zero(); unknowns];
        let mut rest = code;
        for col in 0..e {
            let d = F::from_u64(rest % q);
            rest /= q;
            if !d.is_zero() {
                for (xi, r) in x.iter_mut().zip(reps.column(col)) {
                    *xi = *xi + d * r;
                }
            }
        }
        let action = (0..nb)
            .map(|i| {
                let mut m = Matrix::zeros(a + b, a + b);
                m.set_block(0, 0, n.action(i));
                m.set_block(0, a, &c_of(&x, i));
                m.set_block(a, a, s.action(i));
                m
            })
            .collect();
        out.push(ModuleRep::from_action_unchecked(a + b, action));
    }
    Ok(out)
}

/// Representatives of every isomorphism class of nonzero modules of dimension
/// at most `dim_bound`, in order of dimension.
pub fn enumerate_modules<F: FiniteField>(
    alg: &Algebra<F>,
    simples: &SimpleBasis<F>,
    dim_bound: usize,
    cap: u64,
) -> Result<Vec<ModuleRep<F>>> {
    let mut cat = Catalogue { modules: Vec::new(), buckets: HashMap::new(), simples: simples.simples().to_vec(), cap };
    for s in simples.simples() {
        if s.dim() <= dim_bound {
            cat.insert(s.clone())?;
        }
    }
    for d in 2..=dim_bound {
        let smaller: Vec<ModuleRep<F>> = cat.modules.iter().filter(|m| m.dim() < d).cloned().collect();
        for n in &smaller {
            for s in simples.simples() {
                if n.dim() + s.dim() != d {
                    continue;
                }
                for m in extensions(alg, n, s, cap)? {
                    cat.insert(m)?;
                }
            }
        }
    }
    cat.modules.sort_by_key(|m| m.dim());
    Ok(cat.modules)
}

/// K₀ presentation of `mod-alg` truncated at `dim_bound`.
pub fn module_presentation<F: FiniteField>(
    alg: &Algebra<F>,
    simples: &SimpleBasis<F>,
    dim_bound: usize,
    cap: u64,
) -> Result<(K0Presentation, Vec<ModuleRep<F>>)> {
    let modules = enumerate_modules(alg, simples, dim_bound, cap)?;
    let mut cat = Catalogue { modules: Vec::new(), buckets: HashMap::new(), simples: simples.simples().to_vec(), cap };
    for m in &modules {
        cat.insert(m.clone())?;
    }
    let g = modules.len();
    let locate = |m: &ModuleRep<F>| -> Result<usize> {
        cat.find(m)?
            .ok_or_else(|| Error::VerificationFailure(format!("dimension-{} object missing from enumeration", m.dim())))
    };
    let mut rows = BTreeSet::new();
    for (mi, m) in modules.iter().enumerate() {
        for k in submodules(m, cap)? {
            if k.dim() == 0 || k.dim() == m.dim() {
                continue;
            }
            let (sub, _) = m.submodule(&k)?;
            let (quo, _) = m.quotient(&k)?;
            let mut row = vec![0i64; g];
            row[mi] += 1;
            row[locate(&sub)?] -= 1;
            row[locate(&quo)?] -= 1;
            rows.insert(row);
        }
    }
    let names = modules.iter().enumerate().map(|(i, m)| format!("M{i}[dim {}]", m.dim())).collect();
    Ok((K0Presentation::new(names, rows), modules))
}

/// K₀ presentation of the pair category, on pairs `(X, Y)` with
/// `dim X ≤ dim_bound`, using the sequences `(K, K∩Y) ↪ (X, Y) ↠ (X/K, Y+K/K)`.
pub fn pair_presentation<F: FiniteField>(
    inst: &Instance<F>,
    dim_bound: usize,
) -> Result<(K0Presentation, Vec<PairObject<F>>)> {
    let cap = inst.cap();
    let e = Pairs::new(inst);
    let a = inst.algebra();
    let simples = inst.simples_a()?;
    let modules = enumerate_modules(a, simples, dim_bound, cap)?;
    let mut cat = Catalogue { modules: Vec::new(), buckets: HashMap::new(), simples: simples.simples().to_vec(), cap };
    for m in &modules {
        cat.insert(m.clone())?;
    }
    // Pairs grouped by the index of their underlying module.
    let mut pairs: Vec<PairObject<F>> = Vec::new();
    let mut by_module: Vec<Vec<usize>> = vec![Vec::new(); cat.modules.len()];
    for (mi, m) in cat.modules.iter().enumerate() {
        let lower = inst.mi(m);
        let upper = inst.annihilator_of_i(m);
        for w in submodules(m, cap)? {
            if !w.contains_subspace(&lower) || !upper.contains_subspace(&w) {
                continue;
            }
            let p = e.make_pair(m.clone(), w)?;
            let mut new = true;
            for &j in &by_module[mi] {
                if e.is_isomorphic(&pairs[j], &p)? {
                    new = false;
                    break;
                }
            }
            if new {
                by_module[mi].push(pairs.len());
                pairs.push(p);
            }
        }
    }
    let locate = |p: &PairObject<F>| -> Result<usize> {
        let mi =
            cat.find(p.x())?.ok_or_else(|| Error::VerificationFailure("module missing from enumeration".into()))?;
        for &j in &by_module[mi] {
            if e.is_isomorphic(&pairs[j], p)? {
                return Ok(j);
            }
        }
        Err(Error::VerificationFailure("pair missing from enumeration".into()))
    };
    let g = pairs.len();
    let mut rows = BTreeSet::new();
    for (pi, p) in pairs.iter().enumerate() {
        for k in submodules(p.x(), cap)? {
            if k.dim() == 0 || k.dim() == p.x().dim() {
                continue;
            }
            let (kx, _) = p.x().submodule(&k)?;
            let sub = PairObject::new_unchecked(kx, k.relative(&k.intersection(p.y())).expect("K∩Y ⊆ K"));
            let (qx, proj) = p.x().quotient(&k)?;
            let quo = PairObject::new_unchecked(qx, p.y().image(proj.matrix()));
            let mut row = vec![0i64; g];
            row[pi] += 1;
            row[locate(&sub)?] -= 1;
            row[locate(&quo)?] -= 1;
            rows.insert(row);
        }
    }
    let names = pairs.iter().enumerate().map(|(i, p)| format!("P{i}[dims {:?}]", p.dims())).collect();
    Ok((K0Presentation::new(names, rows), pairs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{known, Ideal};
    use crate::field::Fp;
    use crate::lattice::DEFAULT_CAP;

    type F2 = Fp<2>;

    #[test]
    fn dual_numbers_up_to_two() {
        let a = known::dual_numbers::<F2>();
        let s = SimpleBasis::of_algebra(&a, DEFAULT_CAP).unwrap();
        let (p, mods) = module_presentation(&a, &s, 2, DEFAULT_CAP).unwrap();
        // S, S², A
        assert_eq!(mods.len(), 3);
        assert!(p.is_free());
        assert_eq!(p.free_rank(), 1);
        let classes = Matrix::from_rows(1, &mods.iter().map(|m| vec![m.dim() as i64]).collect::<Vec<_>>());
        assert!(p.matches_classes(&classes));
    }

    #[test]
    fn semisimple_field() {
        let a = known::ground_field::<F2>();
        let s = SimpleBasis::of_algebra(&a, DEFAULT_CAP).unwrap();
        let (p, mods) = module_presentation(&a, &s, 1, DEFAULT_CAP).unwrap();
        assert_eq!(mods.len(), 1);
        assert_eq!(p.relations.rows(), 0);
        assert_eq!(p.free_rank(), 1);
    }

    #[test]
    fn extension_count() {
        // Ext¹(S, S) over the dual numbers is one-dimensional: split and A.
        let a = known::dual_numbers::<F2>();
        let s = SimpleBasis::of_algebra(&a, DEFAULT_CAP).unwrap();
        let ext = extensions(&a, s.get(0), s.get(0), DEFAULT_CAP).unwrap();
        assert_eq!(ext.len(), 2);
        for m in &ext {
            m.validate(&a).unwrap();
        }
    }

    #[test]
    fn pairs_of_dual_numbers() {
        let a = known::dual_numbers::<F2>();
        let i = Ideal::new(&a, &[vec![F2::new(0), F2::new(1)]]).unwrap();
        let inst = Instance::new(a, i, DEFAULT_CAP).unwrap();
        let (p, pairs) = pair_presentation(&inst, 2).unwrap();
        // (S,0), (S,S), (S²,0), (S²,S), (S²,S²), (A,tA)
        assert_eq!(pairs.len(), 6);
        assert!(p.is_free());
        assert_eq!(p.free_rank(), 2);
    }
}
