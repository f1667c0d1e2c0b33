use num_bigint::BigInt;

use super::*;
use crate::affine::{AffRoot, AffineAlgebra, DegreeWindow};
use crate::exact::{q, Rat};
use crate::finlie::FinWeight;

fn alg(label: &str) -> AffineAlgebra {
    AffineAlgebra::from_label(label).unwrap()
}

fn v(xs: &[Rat]) -> Vec<Rat> {
    xs.to_vec()
}

#[test]
fn decomposition_examples() {
    let a = alg("A2x1");
    let w = DegreeWindow::symmetric(2);
    let t = triangular_decomposition(&a, &FunctionalFlag::delta_projection(2), w);
    let mut zero: Vec<FinWeight> = t.zero.iter().map(|r| r.fin.clone()).collect();
    zero.sort();
    let mut fin = a.base().roots();
    fin.sort();
    assert_eq!(zero, fin);
    assert!(t.plus.iter().all(|r| r.n > 0));
    let t = triangular_decomposition(&a, &v(&[q(1, 10), q(1, 7), Rat::one()]), w);
    assert!(t.zero.is_empty());
    assert_eq!(t.plus.len(), t.minus.len());
    let a1 = alg("A1x1");
    let t = triangular_decomposition(&a1, &v(&[Rat::one(), Rat::zero()]), w);
    assert!(t.zero.iter().filter(|r| !r.is_real()).count() == 4);
}

#[test]
fn assembled_sets_are_parabolic() {
    let a = alg("A2x1");
    let w = DegreeWindow::symmetric(3);
    let p = assemble_parabolic(&a, &FunctionalFlag::principal(FunctionalFlag::delta_projection(2)), w, false).unwrap();
    assert!(check_parabolic_axioms(&a, &p, w));
    assert_eq!(p.levi_roots().len(), 6);
    let f = FunctionalFlag::refined(FunctionalFlag::delta_projection(2), v(&[Rat::one(), q(1, 3), Rat::zero()]));
    let p = assemble_parabolic(&a, &f, w, true).unwrap();
    assert!(check_parabolic_axioms(&a, &p, w));
    assert_eq!(p.tag(), ParabolicTag::Standard);
    let g = FunctionalFlag::principal(v(&[q(1, 10), q(1, 7), Rat::one()]));
    let p = assemble_parabolic(&a, &g, w, true).unwrap();
    assert!(p.levi_roots().is_empty());
    assert!(matches!(
        assemble_parabolic(&a, &FunctionalFlag::principal(FunctionalFlag::delta_projection(2)), w, true),
        Err(RootparError::MissingRefinement(_))
    ));
}

#[test]
fn non_closed_subset_fails() {
    let a = alg("A1x1");
    let w = DegreeWindow::symmetric(2);
    let g = FunctionalFlag::principal(v(&[q(1, 10), Rat::one()]));
    let p = assemble_parabolic(&a, &g, w, true).unwrap();
    let alpha = AffRoot::real(FinWeight::from_ints(&[2]), 0);
    let target = AffRoot::real(FinWeight::from_ints(&[2]), 1);
    // α + δ is the sum of α and δ, both kept.
    let broken = explicit(&a, p.members().iter().filter(|r| **r != target).cloned(), w);
    assert!(p.members().contains(&alpha));
    assert!(!check_parabolic_axioms(&a, &broken, w));
    assert!(check_parabolic_axioms(&a, &explicit(&a, p.members().to_vec(), w), w));
}

#[test]
fn trichotomy_examples() {
    let a = alg("A1x1");
    let w = DegreeWindow::symmetric(4);
    let std = FunctionalFlag::principal(v(&[q(1, 3), Rat::one()]));
    let imag = FunctionalFlag::principal(v(&[Rat::one(), Rat::zero()]));
    let mixed = FunctionalFlag::refined(v(&[Rat::one(), Rat::zero()]), v(&[Rat::zero(), Rat::one()]));
    for (f, tag) in [
        (std, ParabolicTag::Standard),
        (imag, ParabolicTag::Imaginary),
        (mixed, ParabolicTag::Mixed),
    ] {
        let p = assemble_parabolic(&a, &f, w, false).unwrap();
        assert!(check_parabolic_axioms(&a, &p, w));
        assert_eq!(classify_parabolic(&a, &p).unwrap(), tag);
        assert_eq!(classify_membership(&a, &p), tag);
        let e = explicit(&a, p.members().to_vec(), w);
        assert_eq!(classify_parabolic(&a, &e).unwrap(), tag);
    }
    // φ1 kills the α1-strings; a refinement with φ2(δ) = 0 keeps all of (Z\0)δ.
    let a2 = alg("A2x1");
    let phi1 = v(&[Rat::one(), Rat::int(2), Rat::zero()]);
    for (phi2, tag) in [
        (v(&[Rat::one(), Rat::zero(), Rat::zero()]), ParabolicTag::Imaginary),
        (v(&[Rat::one(), Rat::zero(), Rat::one()]), ParabolicTag::Mixed),
    ] {
        let p = assemble_parabolic(&a2, &FunctionalFlag::refined(phi1.clone(), phi2), w, false).unwrap();
        assert!(check_parabolic_axioms(&a2, &p, w));
        assert_eq!(classify_parabolic(&a2, &p).unwrap(), tag);
        assert_eq!(classify_membership(&a2, &p), tag);
    }
    let all = explicit(&a, a.roots_window(w), w);
    assert_eq!(classify_parabolic(&a, &all), Err(RootparError::Improper));
}

#[test]
fn bases() {
    let a = alg("A1x1");
    let t = triangular_decomposition(&a, &v(&[q(1, 10), Rat::one()]), DegreeWindow::symmetric(3));
    let b = simple_roots_of_positive_system(&a, &t).unwrap();
    assert_eq!(
        b,
        vec![
            AffRoot::real(FinWeight::from_ints(&[2]), 0),
            AffRoot::real(FinWeight::from_ints(&[-2]), 1)
        ]
    );
    let a = alg("A2x1");
    let t = triangular_decomposition(&a, &v(&[q(1, 10), q(1, 10), Rat::one()]), DegreeWindow::symmetric(3));
    let b = simple_roots_of_positive_system(&a, &t).unwrap();
    let expect = [
        AffRoot::real(FinWeight::from_ints(&[-1, 2]), 0),
        AffRoot::real(FinWeight::from_ints(&[2, -1]), 0),
        AffRoot::real(FinWeight::from_ints(&[-1, -1]), 1),
    ];
    assert_eq!(b, expect);
    let t = triangular_decomposition(&a, &v(&[q(1, 10), q(1, 10), Rat::one()]), DegreeWindow::symmetric(0));
    assert!(matches!(simple_roots_of_positive_system(&a, &t), Err(RootparError::WindowTooSmall(_))));
    let tw = alg("A2x2");
    let t = triangular_decomposition(&tw, &v(&[q(1, 10), Rat::one()]), DegreeWindow::symmetric(3));
    assert_eq!(simple_roots_of_positive_system(&tw, &t).unwrap().len(), 2);
}

#[test]
fn cone_for_borel_and_levi() {
    let a = alg("A1x1");
    let w = DegreeWindow::symmetric(3);
    let borel = assemble_parabolic(&a, &FunctionalFlag::principal(v(&[q(1, 10), Rat::one()])), w, true).unwrap();
    let cd = phi_p(&a, &borel).unwrap();
    assert_eq!(cd.weyl_order, 1);
    let mut base = cd.base.clone();
    base.sort();
    assert_eq!(cd.phi_p, base);
    assert_eq!(cd.d, cd.c);
    assert!(cd.certificate_holds());

    let levi = assemble_parabolic(&a, &FunctionalFlag::principal(FunctionalFlag::delta_projection(1)), w, false).unwrap();
    let cd = phi_p(&a, &levi).unwrap();
    assert_eq!(cd.weyl_order, 2);
    let mut expect = vec![
        AffRoot::real(FinWeight::from_ints(&[-2]), 1),
        AffRoot::real(FinWeight::from_ints(&[2]), 1),
    ];
    expect.sort();
    assert_eq!(cd.phi_p, expect);
    assert_eq!(cd.d, vec![Rat::one(), Rat::one()]);
    assert!(cd.certificate_holds());
    assert_eq!(cd.qp_rank(), 2);
}

#[test]
fn ng_values() {
    assert_eq!(compute_ng(&alg("A1x1")), BigInt::from(2));
    assert_eq!(compute_ng(&alg("A2x1")), BigInt::from(2));
    let cd = phi_p(
        &alg("A2x1"),
        &assemble_parabolic(&alg("A2x1"), &FunctionalFlag::principal(FunctionalFlag::delta_projection(2)), DegreeWindow::symmetric(2), false).unwrap(),
    )
    .unwrap();
    assert!(cd.certificate_holds());
    assert_eq!(cd.weyl_order, 6);
    for nu in [[1, 0, 0], [0, 1, 0], [0, 0, 1], [3, -2, 5]] {
        let nu: Vec<BigInt> = nu.iter().map(|&x| BigInt::from(2 * x)).collect();
        assert!(cd.in_qp(&nu));
    }
}

#[test]
fn non_standard_rejected() {
    let a = alg("A1x1");
    let p = assemble_parabolic(&a, &FunctionalFlag::principal(v(&[Rat::one(), Rat::zero()])), DegreeWindow::symmetric(2), false).unwrap();
    assert!(matches!(phi_p(&a, &p), Err(RootparError::NotStandard(_))));
}
