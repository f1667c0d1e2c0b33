use std::sync::Arc;

use super::*;
use crate::affine::{AffRoot, DegreeWindow};
use crate::exact::{q, Poly, Rat};
use crate::finlie::{FinWeight, SimpleLieAlgebra, SimpleType};
use crate::rootpar::{assemble_parabolic, triangular_decomposition, FunctionalFlag, ParabolicTag};

fn a1() -> AffineAlgebra {
    AffineAlgebra::untwisted(SimpleLieAlgebra::build(SimpleType::A1))
}

fn a2() -> AffineAlgebra {
    AffineAlgebra::untwisted(SimpleLieAlgebra::build(SimpleType::A2))
}

fn gens(a: &AffineAlgebra, n: i64) -> Vec<AffElt> {
    let mut out = vec![AffElt::d(), AffElt::k()];
    for m in -n..=n {
        for x in a.graded_basis(m) {
            out.push(AffElt::loop_elt(x, m));
        }
    }
    out
}

/// Checks `[x,y]·v = x(yv) − y(xv)` on `samples` basis vectors and every generator pair up to
/// degree `n`; returns the number of interior checks performed.
fn bracket_sweep<M: WeightModule>(m: &M, n: i64, samples: usize) -> usize {
    let g = gens(m.algebra(), n);
    let basis = m.basis();
    let step = (basis.len() / samples.max(1)).max(1);
    let mut checked = 0;
    for v in basis.iter().step_by(step).take(samples) {
        for x in &g {
            for y in &g {
                if let Some(ok) = check_bracket(m, x, y, v).unwrap() {
                    assert!(ok, "bracket fails for {x:?}, {y:?} on {v:?}");
                    checked += 1;
                }
            }
        }
        assert!(check_central(m, v).unwrap());
    }
    checked
}

fn fd_loop(dims: &[usize], scalars: &[i64], w: i64) -> LoopModule {
    let factors: Vec<Arc<dyn FinModule>> = dims
        .iter()
        .map(|&d| Arc::new(finite_dim_sl2(d)) as Arc<dyn FinModule>)
        .collect();
    LoopModule::new(
        a1(),
        factors,
        scalars.iter().map(|&s| Rat::int(s)).collect(),
        DegreeWindow::symmetric(w),
    )
    .unwrap()
}

fn dense_loop(b: Rat, c: Rat, jw: i64, fd: Option<usize>, w: i64) -> LoopModule {
    let mut factors: Vec<Arc<dyn FinModule>> = vec![Arc::new(DenseSl2::new(b, c, -jw, jw).unwrap())];
    let mut scalars = vec![Rat::one()];
    if let Some(d) = fd {
        factors.push(Arc::new(finite_dim_sl2(d)));
        scalars.push(Rat::int(2));
    }
    LoopModule::new(a1(), factors, scalars, DegreeWindow::symmetric(w)).unwrap()
}

#[test]
fn loop_modules_respect_brackets() {
    assert!(bracket_sweep(&fd_loop(&[1, 2], &[1, -2], 3), 1, 6) > 0);
    assert!(bracket_sweep(&dense_loop(q(1, 3), q(1, 2), 3, Some(1), 3), 1, 6) > 0);
}

#[test]
fn fixed_loop_module_is_a_twisted_module() {
    let m = twisted_loop_fixed_points(Rat::int(2), DegreeWindow::symmetric(2)).unwrap();
    assert!(bracket_sweep(&m, 1, 8) > 0);
    // Fixed and anti-fixed parts split the ambient space.
    assert_eq!(
        m.basis().len() + m.anti_fixed_basis().len(),
        m.ambient().basis().len()
    );
    let a2 = m.ambient().algebra().clone();
    let x = a2
        .graded_basis(1)
        .iter()
        .map(|x| AffElt::loop_elt(x, 1))
        .find(|x| !m.algebra().contains(x))
        .unwrap();
    assert!(matches!(m.act(&x, &m.basis()[0]), Err(ModError::NotInAlgebra(_))));
}

#[test]
fn verma_modules_respect_brackets() {
    assert!(bracket_sweep(&imaginary_verma(q(3, 2), 2, 2, 2), 1, 10) > 0);
    assert!(bracket_sweep(&standard_verma_a1(q(1, 2), 4), 1, 10) > 0);
}

fn a2_levi_parabolic(w: i64) -> crate::rootpar::ParabolicSet {
    let flag = FunctionalFlag::principal(vec![Rat::int(1), Rat::int(2), Rat::int(4)]);
    assemble_parabolic(&a2(), &flag, DegreeWindow::symmetric(w), false).unwrap()
}

fn a2_induced(depth: u32) -> Induced<LeviDenseSl2> {
    let a = a2();
    let p = a2_levi_parabolic(3);
    assert_eq!(p.tag(), ParabolicTag::Standard);
    let b = q(1, 3);
    let top = AffWeight::level0(FinWeight(vec![b.clone(), q(1, 5)]), Rat::zero());
    let dense = DenseSl2::new(b, q(1, 2), -3, 3).unwrap();
    let levi = LeviDenseSl2::new(a, 0, dense, top.clone()).unwrap();
    induced_truncated(&p, levi, top, depth).unwrap()
}

#[test]
fn induced_module_respects_brackets() {
    let m = a2_induced(2);
    assert!(bracket_sweep(&m, 1, 6) > 0);
    let m = a2_induced(1);
    for v in m.basis() {
        for g in [AffGen::D, AffGen::Loop(0, 1), AffGen::Loop(3, -1)] {
            if let Some(ok) = check_weight_additivity(&m, g, &v).unwrap() {
                assert!(ok);
            }
        }
    }
}

#[test]
fn induced_layers_count_pbw_words() {
    let m = standard_verma_a1(Rat::int(1), 4);
    let table = multiplicity_table(&m);
    let lam = AffWeight::level0(FinWeight(vec![Rat::int(1)]), Rat::zero());
    assert_eq!(table[&lam], 1);
    // -δ: f_0 e_{-1}, h_{-1}.
    assert_eq!(m.multiplicity(&(&lam - &AffWeight::delta(1, 1))), Some(2));
    // Positive part kills the top.
    let v = WordLabel::new(Vec::new(), ());
    assert!(m.act_gen(AffGen::Loop(0, 0), &v).unwrap().is_empty());
    assert!(m.act_gen(AffGen::Loop(1, 1), &v).unwrap().is_empty());
    // Beyond the truncation depth the module declines to answer.
    assert_eq!(m.multiplicity(&(&lam - &AffWeight::delta(1, 3))), None);
}

#[test]
fn imaginary_verma_layers() {
    let m = imaginary_verma(Rat::int(2), 2, 2, 2);
    let lam = AffWeight::level0(FinWeight(vec![Rat::int(2)]), Rat::zero());
    let down = |k: i64| AffWeight::level0(FinWeight(vec![Rat::int(2 - 2 * k)]), Rat::zero());
    assert_eq!(m.multiplicity(&lam), Some(1));
    assert_eq!(m.multiplicity(&down(1)), Some(1));
    // Two-letter spaces are infinite-dimensional; the window only lists f_{-1} f_1, f_{-2} f_2, f_0 f_0.
    assert_eq!(m.multiplicity(&down(2)), None);
    assert_eq!(multiplicity_table(&m)[&down(2)], 3);
    let e0 = AffElt::gen(AffGen::Loop(0, 0));
    let f0 = AffElt::gen(AffGen::Loop(1, 0));
    // e_0 f_0 v = λ v.
    let v = m.top(&sv_single(()));
    let out = m.apply_word(&[e0, f0], &v).unwrap();
    assert_eq!(out, sv_scale(&v, &Rat::int(2)));
}

#[test]
fn loop_multiplicity_is_grade_independent() {
    let m = fd_loop(&[1, 2], &[1, 3], 3);
    for s in -3..=3 {
        for h in [-3, -1, 1, 3] {
            let w = AffWeight::level0(FinWeight(vec![Rat::int(h)]), Rat::int(s));
            let expect = if h.abs() == 3 { 1 } else { 2 };
            assert_eq!(m.multiplicity(&w), Some(expect));
        }
    }
    let d = dense_loop(q(1, 3), q(1, 2), 4, Some(1), 2);
    let at = |s: i64| AffWeight::level0(FinWeight(vec![q(1, 3) + Rat::int(1)]), Rat::int(s));
    assert_eq!(d.multiplicity(&at(-2)), d.multiplicity(&at(2)));
    assert_eq!(d.multiplicity(&at(0)), Some(2));
    assert_eq!(d.multiplicity(&at(5)), None);
}

#[test]
fn dense_sl2_relations() {
    let d = DenseSl2::new(q(1, 3), q(1, 2), -4, 4).unwrap();
    for j in -3..=3 {
        assert_eq!(d.mu(j - 1) - d.mu(j), d.h_value(j));
    }
    assert!(d.is_injective_on_window());
    // (b+2j+1)² = c+1 with b = 0, c = 8: j = 1 or j = −2.
    let d = DenseSl2::new(Rat::zero(), Rat::int(8), -4, 4).unwrap();
    assert_eq!(d.vanishing_indices(), vec![-2, 1]);
    assert!(d.mu(1).is_zero());
}

#[test]
fn loop_f_inverse() {
    let m = dense_loop(q(1, 3), q(1, 2), 4, Some(2), 3);
    let f = AffElt::gen(AffGen::Loop(1, 1));
    let v = LoopLabel { parts: vec![0, 1], s: 0 };
    let inv = m.f_inverse(&f, &v).unwrap();
    assert_eq!(m.act_vec(&f, &inv).unwrap(), sv_single(v.clone()));
    let e = AffElt::gen(AffGen::Loop(0, 0));
    assert!(matches!(m.f_inverse(&e, &v), Err(ModError::NotInvertible(_))));
}

#[test]
fn induced_f_inverse_over_dense_levi() {
    let m = a2_induced(1);
    let f = m.levi().f_elt();
    for l in m.basis().into_iter().filter(|l| l.base.abs() <= 1) {
        let inv = m.f_inverse(&f, &l).unwrap();
        assert_eq!(m.act_vec(&f, &inv).unwrap(), sv_single(l.clone()));
    }
}

#[test]
fn prop42_matches_case_split() {
    for n in 4..=6 {
        let lam = q(3, 2);
        let mat = prop42_matrix(n, &lam).unwrap();
        for k in 1..n {
            for l in 1..n {
                assert_eq!(mat[(k - 1) as usize][(l - 1) as usize], prop42_case(n, &lam, k, l));
            }
        }
        let block = prop42_block(&mat, n);
        assert_eq!(block.len() as i64, (n - 1) / 2);
        assert!(!crate::exact::linalg::determinant(&block).is_zero());
    }
    assert!(prop42_entry_literal(5, &Rat::one(), 2, 3).unwrap().is_zero());
}

#[test]
fn shadows_of_loop_and_verma_modules() {
    let a = a1();
    let w = DegreeWindow::symmetric(1);
    let fd = fd_loop(&[2], &[1], 6);
    let start = AffWeight::level0(FinWeight(vec![Rat::zero()]), Rat::zero());
    let t = shadow_table(&fd, &start, w, 6);
    assert!(t.values().all(|o| *o == ShadowOutcome::Finite));
    assert_eq!(build_pm(&a, &t, w).unwrap().tag(), ParabolicTag::All);

    let dense = dense_loop(q(1, 3), q(1, 2), 6, None, 6);
    let start = AffWeight::level0(FinWeight(vec![q(1, 3)]), Rat::zero());
    let t = shadow_table(&dense, &start, w, 8);
    assert!(t.values().all(|o| *o == ShadowOutcome::Infinite));
    let r = shadow_detect(&dense, &AffRoot::real(FinWeight::from_ints(&[2]), 0), &start, 8);
    assert!(r.heuristic);
    assert_eq!(build_pm(&a, &t, w).unwrap().members().len(), a.roots_window(w).len());
}

#[test]
fn highest_weight_shadow_gives_standard_parabolic() {
    let a = a1();
    let w = DegreeWindow::symmetric(2);
    let table: ShadowTable = a
        .roots_window(w)
        .into_iter()
        .filter(AffRoot::is_real)
        .map(|r| {
            let o = if a.is_standard_positive(&r) {
                ShadowOutcome::Finite
            } else {
                ShadowOutcome::Infinite
            };
            (r, o)
        })
        .collect();
    let p = build_pm(&a, &table, w).unwrap();
    for r in a.roots_window(w) {
        assert_eq!(p.contains(&r), a.is_standard_positive(&r), "{r}");
    }
    let mut bad = table.clone();
    // α + δ of injective type puts ±(α + δ) in P, and (−α − δ) + α = −δ leaves it.
    let r = AffRoot::real(FinWeight::from_ints(&[2]), 1);
    bad.insert(r, ShadowOutcome::Infinite);
    assert!(build_pm(&a, &bad, w).is_err());
}

#[test]
fn extreme_weights() {
    let m = standard_verma_a1(Rat::int(2), 3);
    let tri = triangular_decomposition(&a1(), &[Rat::one(), Rat::int(4)], DegreeWindow::symmetric(1));
    let lam = find_extreme_weight(&m, &tri).unwrap();
    assert_eq!(lam, AffWeight::level0(FinWeight(vec![Rat::int(2)]), Rat::zero()));
    let d = dense_loop(q(1, 3), q(1, 2), 3, None, 3);
    assert_eq!(find_extreme_weight(&d, &tri), None);
}

#[test]
fn exp_polynomials() {
    let c = |x: i64| Poly::constant(Rat::int(x));
    let one = ExpPolynomial::new(vec![ExpTerm { lambda: Rat::one(), polys: vec![c(1)] }]).unwrap();
    assert!((-3..=3).all(|n| exp_poly_eval(&one, 0, n) == Rat::one()));
    assert!(is_purely_exponential(&one));
    let lin = ExpPolynomial::new(vec![ExpTerm { lambda: Rat::int(2), polys: vec![Poly::x()] }]).unwrap();
    assert!(!is_purely_exponential(&lin));
    assert_eq!(exp_poly_eval(&lin, 0, 3), Rat::int(24));
    assert!(ExpPolynomial::new(vec![ExpTerm { lambda: Rat::zero(), polys: vec![c(1)] }]).is_err());
}

#[test]
fn loop_module_cartan_is_exponential() {
    // h_n on the top tensor of L_{2,−3}(V(1) ⊗ V(2)) acts by 1·2^n + 2·(−3)^n.
    let m = fd_loop(&[1, 2], &[2, -3], 4);
    let f = ExpPolynomial::new(vec![
        ExpTerm { lambda: Rat::int(2), polys: vec![Poly::constant(Rat::int(1))] },
        ExpTerm { lambda: Rat::int(-3), polys: vec![Poly::constant(Rat::int(2))] },
    ])
    .unwrap();
    for n in -2..=2 {
        let v = LoopLabel { parts: vec![0, 0], s: 0 };
        let out = m.act_gen(AffGen::Loop(2, n), &v).unwrap();
        let expect = LoopLabel { parts: vec![0, 0], s: n };
        assert_eq!(out, sv_scale(&sv_single(expect), &exp_poly_eval(&f, 0, n)));
    }
}

#[test]
fn growth_of_dense_tensor_products() {
    let one_dense = |n: i64| -> Result<LoopModule, ModError> { Ok(dense_loop(q(1, 3), q(1, 2), n, Some(1), 1)) };
    let r = boundedness_probe(&one_dense, &[2, 3, 4]).unwrap();
    assert!(r.bounded);
    let two_dense = |n: i64| {
        let f: Vec<Arc<dyn FinModule>> = vec![
            Arc::new(DenseSl2::new(q(1, 3), q(1, 2), -n, n)?),
            Arc::new(DenseSl2::new(q(1, 5), q(1, 7), -n, n)?),
        ];
        LoopModule::new(a1(), f, vec![Rat::one(), Rat::int(2)], DegreeWindow::symmetric(0))
    };
    let r = boundedness_probe(&two_dense, &[1, 2, 3]).unwrap();
    assert!(r.strictly_increasing);
}
