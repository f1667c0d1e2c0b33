use std::collections::BTreeMap;
use std::sync::Arc;

use affinekit::affine::{AffElt, AffRoot, AffWeight, AffineAlgebra, DegreeWindow};
use affinekit::exact::{linalg, multinom_convolution_check, Rat};
use affinekit::finlie::{FinWeight, SimpleLieAlgebra, SimpleType};
use affinekit::locfun::{
    check_composition, check_conjugation, check_integer_collapse, check_power_law,
    find_twist_parameter, twist_module, TwistSpec,
};
use affinekit::modrep::{
    boundedness_probe, build_pm, check_bracket, check_central, finite_dim_sl2, imaginary_verma,
    multiplicity_table, prop42_block, prop42_case, prop42_entry_literal, prop42_matrix,
    shadow_table, standard_verma_a1, DenseSl2, FinModule, LoopLabel, LoopModule, ModError,
    ShadowOutcome, ShadowTable, WeightModule,
};
use affinekit::rootpar::{
    assemble_parabolic, check_parabolic_axioms, classify_flag, classify_membership, phi_p,
    FunctionalFlag,
};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::report::{Report, Table};
use crate::{
    AlgebraArgs, BoundedArgs, Command, ConeArgs, FlagArgs, IdentityArgs, ImvermaArgs, LocalizeArgs,
    LoopArgs, ModuleKind, Prop42Args, RootsArgs, ShadowArgs, Suite, Window,
};

type CmdResult = Result<(), String>;

pub fn run(cmd: &Command, seed: u64, report: &mut Report) -> CmdResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match cmd {
        Command::AlgebraInfo(a) => algebra_info(a, &mut rng, report),
        Command::Roots(a) => roots(a, report),
        Command::ParabolicClassify(a) => parabolic_classify(a, report),
        Command::ConeCertificate(a) => cone_certificate(a, &mut rng, report),
        Command::LoopMult(a) => loop_mult(a, &mut rng, report),
        Command::ImvermaMult(a) => imverma_mult(a, report),
        Command::Prop42(a) => prop42(a, report),
        Command::LocalizeDemo(a) => localize_demo(a, report),
        Command::Shadow(a) => shadow(a, report),
        Command::PmBuild(a) => pm_build(a, report),
        Command::Identities(a) => identities(a, &mut rng, report),
        Command::ProbeBounded(a) => probe_bounded(a, report),
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn algebra(label: &str) -> Result<AffineAlgebra, String> {
    AffineAlgebra::from_label(label).map_err(err)
}

fn a1() -> AffineAlgebra {
    AffineAlgebra::untwisted(SimpleLieAlgebra::build(SimpleType::A1))
}

fn window(w: Window) -> DegreeWindow {
    DegreeWindow::new(w.min, w.max).expect("parser rejects empty windows")
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

fn random_rat(rng: &mut ChaCha8Rng) -> Rat {
    Rat::new(rng.gen_range(-6..=6), rng.gen_range(1..=6))
}

fn list<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn algebra_info(args: &AlgebraArgs, rng: &mut ChaCha8Rng, report: &mut Report) -> CmdResult {
    let a = algebra(&args.algebra)?;
    report.info("label", a.label());
    report.info("order", a.order());
    report.info("finite_rank", a.fin_rank());
    for m in 0..a.order() as i64 {
        report.info(format!("dim_grade_{m}"), a.graded_basis(m).len());
    }
    let basis = a.window_basis(DegreeWindow::symmetric(args.grade));
    let mut pick = || {
        let mut x = AffElt::zero();
        for _ in 0..3 {
            let b = &basis[rng.gen_range(0..basis.len())];
            x.axpy(&Rat::int(rng.gen_range(-3..=3)), b);
        }
        x
    };
    let (mut jacobi, mut invariance) = (0, 0);
    for _ in 0..args.samples {
        let (x, y, z) = (pick(), pick(), pick());
        let xy = a.bracket(&x, &y);
        let jac = &(&a.bracket(&xy, &z) + &a.bracket(&a.bracket(&y, &z), &x))
            + &a.bracket(&a.bracket(&z, &x), &y);
        if !jac.is_zero() {
            jacobi += 1;
        }
        if a.form(&xy, &z) != a.form(&x, &a.bracket(&y, &z)) {
            invariance += 1;
        }
    }
    report.check("jacobi_failures", 0, jacobi);
    report.check("form_invariance_failures", 0, invariance);
    Ok(())
}

fn roots(args: &RootsArgs, report: &mut Report) -> CmdResult {
    let a = algebra(&args.algebra)?;
    let w = window(args.window);
    let roots = a.roots_window(w);
    let (real, imag): (Vec<&AffRoot>, Vec<&AffRoot>) = roots.iter().partition(|r| r.is_real());
    report.info("real_roots", real.len());
    report.info("imaginary_roots", imag.len());
    if !a.is_twisted() {
        let grades = (w.n_max() - w.n_min() + 1) as usize;
        let fin = a.base().positive_roots().len() * 2;
        report.check("real_root_count", fin * grades, real.len());
    }
    let mut bad = 0;
    let mut table = Table {
        header: vec!["root".into(), "kind".into(), "dim".into()],
        rows: Vec::new(),
    };
    for r in &roots {
        let dim = a.root_space(r).map_err(err)?.len();
        if r.is_real() && dim != 1 {
            bad += 1;
        }
        let kind = if r.is_real() { "real" } else { "imaginary" };
        report.info(format!("{kind}_root"), r);
        table.rows.push(vec![r.to_string(), kind.into(), dim.to_string()]);
    }
    report.check("real_roots_with_dim_not_1", 0, bad);
    report.table = Some(table);
    Ok(())
}

fn flag_of(args: &FlagArgs) -> FunctionalFlag {
    match &args.phi2 {
        Some(p2) => FunctionalFlag::refined(args.phi1.clone(), p2.clone()),
        None => FunctionalFlag::principal(args.phi1.clone()),
    }
}

fn parabolic_classify(args: &FlagArgs, report: &mut Report) -> CmdResult {
    let a = algebra(&args.algebra)?;
    let w = window(args.window);
    let flag = flag_of(args);
    let p = assemble_parabolic(&a, &flag, w, false).map_err(err)?;
    let by_flag = classify_flag(&flag);
    report.info("tag", p.tag());
    report.info("members", p.members().len());
    report.info("levi_roots", p.levi_roots().len());
    let delta = AffRoot::imaginary(a.fin_rank(), 1);
    report.info("delta_in_p", p.contains(&delta));
    report.info("minus_delta_in_p", p.contains(&delta.neg()));
    report.check("parabolic_axioms", true, check_parabolic_axioms(&a, &p, w));
    report.check("tag_from_membership", by_flag, classify_membership(&a, &p));
    let wide = DegreeWindow::new(2 * w.n_min(), 2 * w.n_max()).expect("nonempty");
    let p2 = assemble_parabolic(&a, &flag, wide, false).map_err(err)?;
    report.check("tag_after_window_doubling", p.tag(), p2.tag());
    Ok(())
}

fn cone_certificate(args: &ConeArgs, rng: &mut ChaCha8Rng, report: &mut Report) -> CmdResult {
    let a = algebra(&args.flag.algebra)?;
    let w = window(args.flag.window);
    let p = assemble_parabolic(&a, &flag_of(&args.flag), w, false).map_err(err)?;
    let cd = phi_p(&a, &p).map_err(err)?;
    report.info("weyl_order", cd.weyl_order);
    report.info("n_g", &cd.ng);
    report.info("qp_rank", cd.qp_rank());
    for (b, d) in cd.phi_p.iter().zip(&cd.d) {
        report.info(format!("phi_p {b}"), d);
    }
    report.check("certificate", true, cd.certificate_holds());
    let ng = cd.ng.to_i64().ok_or("N_G is not an integer")?;
    let mut outside = 0;
    for _ in 0..args.samples {
        let nu: Vec<BigInt> = (0..cd.base.len())
            .map(|_| BigInt::from(ng * rng.gen_range(-5i64..=5)))
            .collect();
        if !cd.in_qp(&nu) {
            outside += 1;
        }
    }
    report.check("scaled_lattice_vectors_outside_qp", 0, outside);
    Ok(())
}

fn loop_module(args: &LoopArgs) -> Result<LoopModule, String> {
    let mut factors: Vec<Arc<dyn FinModule>> = Vec::new();
    if let Some(bc) = &args.dense {
        let [b, c] = bc.as_slice() else {
            return Err("--dense takes b,c".into());
        };
        factors.push(Arc::new(DenseSl2::new(b.clone(), c.clone(), -args.jw, args.jw).map_err(err)?));
    }
    for &d in &args.dims {
        factors.push(Arc::new(finite_dim_sl2(d)));
    }
    LoopModule::new(a1(), factors, args.scalars.clone(), DegreeWindow::symmetric(args.window))
        .map_err(err)
}

fn weight_cells(w: &AffWeight) -> Vec<String> {
    let mut cells: Vec<String> = w.fin.0.iter().map(Rat::to_string).collect();
    cells.push(w.d.to_string());
    cells
}

fn loop_mult(args: &LoopArgs, rng: &mut ChaCha8Rng, report: &mut Report) -> CmdResult {
    let m = loop_module(args)?;
    let table = multiplicity_table(&m);
    // Independent count: tuples of factor labels whose weights add up.
    let mut tensor: BTreeMap<FinWeight, usize> = BTreeMap::new();
    let mut tuples: Vec<FinWeight> = vec![FinWeight::zero(1)];
    for f in m.factors() {
        tuples = tuples
            .iter()
            .flat_map(|w| f.labels().into_iter().map(move |l| w + &f.weight(l)))
            .collect();
    }
    for w in tuples {
        *tensor.entry(w).or_insert(0) += 1;
    }
    let mut rows = Vec::new();
    let mut mismatches = 0;
    for (w, &n) in &table {
        let reported = m.multiplicity(w);
        if reported.is_some_and(|r| r != tensor[&w.fin] || r != n) {
            mismatches += 1;
        }
        let mut row = weight_cells(w);
        row.push(reported.map_or("window".into(), |r| r.to_string()));
        rows.push(row);
    }
    report.info("weights", table.len());
    report.check("multiplicity_vs_tensor_count_mismatches", 0, mismatches);
    let basis = m.basis();
    let central = basis.iter().filter(|v| !check_central(&m, v).unwrap_or(false)).count();
    report.check("k_zero_d_grade_failures", 0, central);
    let g = gens(m.algebra(), 1);
    let (mut checked, mut failed) = (0, 0);
    for _ in 0..args.samples {
        let x = &g[rng.gen_range(0..g.len())];
        let y = &g[rng.gen_range(0..g.len())];
        let v = &basis[rng.gen_range(0..basis.len())];
        match check_bracket(&m, x, y, v).map_err(err)? {
            Some(true) => checked += 1,
            Some(false) => {
                checked += 1;
                failed += 1;
            }
            None => {}
        }
    }
    report.info("bracket_checks", checked);
    report.check("bracket_failures", 0, failed);
    report.table = Some(Table {
        header: vec!["h".into(), "d".into(), "multiplicity".into()],
        rows,
    });
    Ok(())
}

fn imverma_mult(args: &ImvermaArgs, report: &mut Report) -> CmdResult {
    let m = imaginary_verma(args.lambda.clone(), args.depth, args.length, args.modes);
    let table = multiplicity_table(&m);
    let mut rows = Vec::new();
    for w in table.keys() {
        let letters = (&args.lambda - &w.fin.0[0]) / Rat::int(2);
        let cell = match m.multiplicity(w) {
            Some(n) => n.to_string(),
            None if letters >= Rat::int(2) => "infinite".into(),
            None => "window".into(),
        };
        let mut row = weight_cells(w);
        row.push(cell);
        rows.push(row);
    }
    let top = AffWeight::level0(FinWeight(vec![args.lambda.clone()]), Rat::zero());
    report.check("top_multiplicity", "1", format!("{:?}", m.multiplicity(&top).unwrap_or(0)));
    if args.length >= 1 {
        let reach = args.depth.min(args.modes);
        let down = FinWeight(vec![&args.lambda - Rat::int(2)]);
        let bad = (-reach..=reach)
            .filter(|&k| m.multiplicity(&AffWeight::level0(down.clone(), Rat::int(k))) != Some(1))
            .count();
        report.check("one_letter_multiplicity_not_1", 0, bad);
    }
    report.table = Some(Table {
        header: vec!["h".into(), "d".into(), "multiplicity".into()],
        rows,
    });
    Ok(())
}

fn prop42(args: &Prop42Args, report: &mut Report) -> CmdResult {
    let n = args.n;
    if n < 2 {
        return Err(format!("--n must be at least 2, got {n}"));
    }
    let lam = &args.lambda;
    let mat: Vec<Vec<Rat>> = if args.literal {
        (1..n)
            .map(|k| (1..n).map(|l| prop42_entry_literal(n, lam, k, l)).collect())
            .collect::<Result<_, _>>()
            .map_err(err)?
    } else {
        prop42_matrix(n, lam).map_err(err)?
    };
    let mut header = vec!["k".to_string()];
    header.extend((1..n).map(|l| l.to_string()));
    let mut rows = Vec::new();
    for k in 1..n {
        let row = &mat[(k - 1) as usize];
        let mut cells = vec![k.to_string()];
        for l in 1..n {
            let v = &row[(l - 1) as usize];
            report.check(format!("entry({k},{l})"), prop42_case(n, lam, k, l), v);
            cells.push(v.to_string());
        }
        rows.push(cells);
    }
    let block = prop42_block(&mat, n);
    report.info("block_size", block.len());
    let det = if block.is_empty() { Rat::one() } else { linalg::determinant(&block) };
    let state = |d: &Rat| if d.is_zero() { "singular" } else { "invertible" };
    report.check("block_invertible", "invertible", state(&det));
    report.table = Some(Table { header, rows });
    Ok(())
}

fn dense_loop(b: &Rat, c: &Rat, jw: i64, natural: bool, w: i64) -> Result<LoopModule, String> {
    let mut factors: Vec<Arc<dyn FinModule>> =
        vec![Arc::new(DenseSl2::new(b.clone(), c.clone(), -jw, jw).map_err(err)?)];
    let mut scalars = vec![Rat::one()];
    if natural {
        factors.push(Arc::new(finite_dim_sl2(1)));
        scalars.push(Rat::int(2));
    }
    LoopModule::new(a1(), factors, scalars, DegreeWindow::symmetric(w)).map_err(err)
}

fn alpha() -> AffRoot {
    AffRoot::real(FinWeight::from_ints(&[2]), 0)
}

fn localize_demo(args: &LocalizeArgs, report: &mut Report) -> CmdResult {
    let m = dense_loop(&args.b, &args.c, args.jw, args.natural, args.window)?;
    let spec = TwistSpec::new(m.algebra(), &alpha(), args.x.clone()).map_err(err)?;
    let tw = twist_module(m.clone(), spec.clone());
    let before = multiplicity_table(&m);
    let after = multiplicity_table(&tw);
    let shift = alpha().weight().scale(&args.x);
    let shifted: BTreeMap<AffWeight, usize> =
        before.iter().map(|(w, &n)| (w + &shift, n)).collect();
    report.check("support_shifted_by_x_alpha", true, shifted == after);
    let g = gens(m.algebra(), 1);
    let (mut checked, mut failed) = (0, 0);
    for v in m.basis().iter().filter(|l| l.parts[0].abs() <= 1 && l.s == 0) {
        for x in &g {
            for y in &g {
                match check_bracket(&tw, x, y, v).map_err(err)? {
                    Some(ok) => {
                        checked += 1;
                        failed += usize::from(!ok);
                    }
                    None => {}
                }
            }
        }
    }
    report.info("twisted_bracket_checks", checked);
    report.check("twisted_bracket_failures", 0, failed);
    if !args.natural {
        let v = LoopLabel { parts: vec![0], s: 0 };
        let sol = find_twist_parameter(&m, &spec, &v).map_err(err)?;
        report.info("annihilation_polynomial", &sol.poly);
        report.info("rational_roots", list(&sol.roots));
        if let Some(d) = sol.discriminant {
            report.info("discriminant", d);
        }
    }
    let mut rows = Vec::new();
    for (side, t) in [("before", &before), ("after", &after)] {
        for (w, n) in t {
            let mut row = vec![side.to_string()];
            row.extend(weight_cells(w));
            row.push(n.to_string());
            rows.push(row);
        }
    }
    report.table = Some(Table {
        header: vec!["side".into(), "h".into(), "d".into(), "multiplicity".into()],
        rows,
    });
    Ok(())
}

fn shadow_of(args: &ShadowArgs) -> Result<ShadowTable, String> {
    let w = window(args.window);
    let steps = args.steps as i64;
    let grades = steps * w.n_max().abs().max(w.n_min().abs()) + 1;
    let table = match args.module {
        ModuleKind::Fd => {
            let factors: Vec<Arc<dyn FinModule>> = args
                .dims
                .iter()
                .map(|&d| Arc::new(finite_dim_sl2(d)) as Arc<dyn FinModule>)
                .collect();
            let scalars = (1..=factors.len() as i64).map(Rat::int).collect();
            let m = LoopModule::new(a1(), factors, scalars, DegreeWindow::symmetric(grades))
                .map_err(err)?;
            let start = m
                .basis()
                .into_iter()
                .filter(|l| l.s == 0)
                .map(|l| m.weight(&l))
                .min_by_key(|w| w.fin.0[0].abs())
                .ok_or("empty module")?;
            shadow_table(&m, &start, w, args.steps)
        }
        ModuleKind::Dense => {
            let m = dense_loop(&args.b, &args.c, steps + 1, false, grades)?;
            let start = m.weight(&LoopLabel { parts: vec![0], s: 0 });
            shadow_table(&m, &start, w, args.steps)
        }
        ModuleKind::Verma => {
            let m = standard_verma_a1(args.lambda.clone(), args.depth);
            let start = AffWeight::level0(FinWeight(vec![args.lambda.clone()]), Rat::zero());
            shadow_table(&m, &start, w, args.steps)
        }
    };
    Ok(table)
}

fn shadow(args: &ShadowArgs, report: &mut Report) -> CmdResult {
    let table = shadow_of(args)?;
    let mut rows = Vec::new();
    for (r, o) in &table {
        let name = match o {
            ShadowOutcome::Finite => "finite",
            ShadowOutcome::Infinite => "injective (window heuristic)",
            ShadowOutcome::Inconclusive => "inconclusive",
        };
        report.info(format!("root {r}"), name);
        rows.push(vec![r.to_string(), name.to_string()]);
    }
    report.table = Some(Table {
        header: vec!["root".into(), "shadow".into()],
        rows,
    });
    Ok(())
}

fn pm_build(args: &ShadowArgs, report: &mut Report) -> CmdResult {
    let table = shadow_of(args)?;
    let a = a1();
    let w = window(args.window);
    let p = build_pm(&a, &table, w).map_err(err)?;
    report.info("tag", p.tag());
    report.info("members", p.members().len());
    report.check("parabolic_axioms", true, check_parabolic_axioms(&a, &p, w));
    let rows = a
        .roots_window(w)
        .into_iter()
        .map(|r| vec![r.to_string(), p.contains(&r).to_string()])
        .collect();
    report.table = Some(Table {
        header: vec!["root".into(), "in_pm".into()],
        rows,
    });
    Ok(())
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Lemma {
    Composition,
    IntegerCollapse,
    PowerLaw,
    Conjugation,
}

impl Lemma {
    fn name(self) -> &'static str {
        match self {
            Lemma::Composition => "composition",
            Lemma::IntegerCollapse => "integer-collapse",
            Lemma::PowerLaw => "power-law",
            Lemma::Conjugation => "conjugation",
        }
    }
}

/// Runs one lemma check on `samples` random `(x, y, v, X)`; returns `(checked, failed)`.
fn lemma_suite(
    lemma: Lemma,
    m: &LoopModule,
    samples: usize,
    rng: &mut ChaCha8Rng,
) -> Result<(usize, usize), String> {
    let a = m.algebra().clone();
    let g = gens(&a, 1);
    let basis: Vec<LoopLabel> = m
        .basis()
        .into_iter()
        .filter(|l| l.parts[0].abs() <= 2 && l.s.abs() <= 1)
        .collect();
    let draws: Vec<(Rat, Rat, usize, usize, usize)> = (0..samples)
        .map(|_| {
            (
                random_rat(rng),
                random_rat(rng),
                rng.gen_range(0..basis.len()),
                rng.gen_range(0..g.len()),
                rng.gen_range(0..g.len()),
            )
        })
        .collect();
    let results: Vec<Result<Option<bool>, ModError>> = draws
        .par_iter()
        .map(|(x, y, vi, gi, hi)| {
            let spec = TwistSpec::new(&a, &alpha(), x.clone()).map_err(|e| ModError::Input(e.to_string()))?;
            let v = &basis[*vi];
            match lemma {
                Lemma::Composition => check_composition(m, &spec, y, &g[*gi], v),
                Lemma::PowerLaw => check_power_law(m, &spec, y, &g[*gi], v),
                Lemma::Conjugation => check_conjugation(m, &spec, &g[*gi], &g[*hi], v),
                Lemma::IntegerCollapse => {
                    let n = Rat::from(x.floor()).to_i64().expect("small") % 4;
                    check_integer_collapse(m, &spec.f, n, &g[*gi], v)
                }
            }
        })
        .collect();
    let (mut checked, mut failed) = (0, 0);
    for r in results {
        match r.map_err(err)? {
            Some(ok) => {
                checked += 1;
                failed += usize::from(!ok);
            }
            None => {}
        }
    }
    Ok((checked, failed))
}

fn identities(args: &IdentityArgs, rng: &mut ChaCha8Rng, report: &mut Report) -> CmdResult {
    let multinomial = matches!(args.suite, Suite::Multinomial | Suite::All);
    let lemmas: Vec<Lemma> = match args.suite {
        Suite::Multinomial => Vec::new(),
        Suite::Composition => vec![Lemma::Composition],
        Suite::IntegerCollapse => vec![Lemma::IntegerCollapse],
        Suite::PowerLaw => vec![Lemma::PowerLaw],
        Suite::Conjugation => vec![Lemma::Conjugation],
        Suite::Lemmas | Suite::All => vec![
            Lemma::Composition,
            Lemma::IntegerCollapse,
            Lemma::PowerLaw,
            Lemma::Conjugation,
        ],
    };
    if multinomial {
        for n in 0..=args.max {
            for big_k in 0..=args.max + 1 {
                for k in 1..=3 {
                    report.check(
                        format!("multinomial N={n} K={big_k} k={k}"),
                        true,
                        multinom_convolution_check(n, big_k, k),
                    );
                }
            }
        }
    }
    if !lemmas.is_empty() {
        let b = Rat::new(1, 3);
        let c = Rat::new(1, 2);
        let modules = [
            ("dense", dense_loop(&b, &c, 8, false, 3)?),
            ("dense-natural", dense_loop(&b, &c, 8, true, 3)?),
        ];
        for lemma in lemmas {
            for (label, m) in &modules {
                let (checked, failed) = lemma_suite(lemma, m, args.samples, rng)?;
                let name = format!("{} on {label}", lemma.name());
                report.info(format!("{name}: checks"), checked);
                report.check(format!("{name}: failures"), 0, failed);
            }
        }
    }
    Ok(())
}

fn probe_bounded(args: &BoundedArgs, report: &mut Report) -> CmdResult {
    let b = Rat::new(1, 3);
    let c = Rat::new(1, 2);
    let rep = match args.factors {
        1 => {
            let make = |n: i64| dense_loop(&b, &c, n, true, n).map_err(ModError::Input);
            boundedness_probe(&make, &args.windows).map_err(err)?
        }
        2 => {
            let make = |n: i64| {
                let f: Vec<Arc<dyn FinModule>> = vec![
                    Arc::new(DenseSl2::new(b.clone(), c.clone(), -n, n)?),
                    Arc::new(DenseSl2::new(Rat::new(1, 5), Rat::new(1, 7), -n, n)?),
                ];
                LoopModule::new(a1(), f, vec![Rat::one(), Rat::int(2)], DegreeWindow::symmetric(n))
            };
            boundedness_probe(&make, &args.windows).map_err(err)?
        }
        k => return Err(format!("--factors must be 1 or 2, got {k}")),
    };
    for (w, m) in rep.windows.iter().zip(&rep.max_multiplicity) {
        report.info(format!("max_multiplicity N={w}"), m);
    }
    if args.factors == 1 {
        report.check("bounded", true, rep.bounded);
    } else {
        report.check("strictly_increasing", true, rep.strictly_increasing);
    }
    Ok(())
}
