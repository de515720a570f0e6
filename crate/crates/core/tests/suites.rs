use devissage::instance::Instance;
use devissage::suites::*;
use devissage::{fixtures, F2, F3};

fn run<F: devissage::field::FiniteField>(inst: &Instance<F>, seed: u64, n: usize) {
    for rec in [
        check_axioms(inst, seed, n).unwrap(),
        check_functors(inst, seed, n).unwrap(),
        check_envelope(inst, seed, n).unwrap(),
        check_torsion(inst, seed, n).unwrap(),
        check_serre(inst, seed, n).unwrap(),
    ] {
        assert!(rec.passed(), "{}: {:#?}", rec.name, rec.witnesses);
    }
}

#[test]
fn pinned_instances_over_f2() {
    run(&fixtures::dual_numbers::<F2>(), 3, 25);
    run(&fixtures::fat_point::<F2>(), 3, 25);
    run(&fixtures::triangular2::<F2>(), 3, 25);
}

#[test]
fn over_f3() {
    run(&fixtures::dual_numbers::<F3>(), 11, 20);
    run(&fixtures::triangular2::<F3>(), 11, 20);
}

#[test]
fn degenerate_ideals() {
    run(&fixtures::dual_numbers_trivial_ideal::<F2>(), 5, 15);
    run(&fixtures::semisimple::<F2>(), 5, 15);
}

#[test]
fn suites_are_deterministic() {
    let inst = fixtures::fat_point::<F2>();
    assert_eq!(check_axioms(&inst, 9, 10).unwrap(), check_axioms(&inst, 9, 10).unwrap());
    assert_eq!(check_envelope(&inst, 9, 10).unwrap(), check_envelope(&inst, 9, 10).unwrap());
}
