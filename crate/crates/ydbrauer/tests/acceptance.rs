//! Acceptance gate: one test per numbered requirement, each printing a
//! single verdict line with its runtime against the pinned budget. The
//! tests serialize on a mutex so budgets stay meaningful on one core.

use std::process::Command;
use std::sync::Mutex;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ydbrauer::demo::build_demo;
use ydbrauer::endo::{
    azumaya_ranks, coco_check, end_algebra, end_op_algebra, iota, is_h_azumaya, p4_check, p5_iso,
    phi, quasi_elementary_witness, tau,
};
use ydbrauer::hopf::{
    build_standard, cyclic_group_table, cyclic_labels, sweedler, sweedler_phi, taft, verify_hopf,
    AutPair, Character, GroupLikeElement, HopfAlgebra, HopfAutomorphism, StandardAlgebra,
};
use ydbrauer::linalg::{FieldSpec, MatrixExact};
use ydbrauer::monoidal::{dual, psi, tensor, tensor_tilde, DualFlavor, TensorKind};
use ydbrauer::yd::{
    build_h_alpha_beta, check_pair_in_involution, check_yd, shift, trivial_module, ShiftDirection,
    YDModule,
};

type R = Result<(), Box<dyn std::error::Error>>;

static GATE: Mutex<()> = Mutex::new(());

const DEMOS: [&str; 4] = ["c2", "c3", "sweedler", "taft3"];

fn ensure(cond: bool, msg: impl Into<String>) -> R {
    if cond {
        Ok(())
    } else {
        Err(msg.into().into())
    }
}

fn gate(n: usize, what: &str, budget_ms: Option<u128>, body: impl FnOnce() -> R) {
    let _lock = GATE.lock().unwrap_or_else(|e| e.into_inner());
    let clock = Instant::now();
    let outcome = body();
    let ms = clock.elapsed().as_millis();
    let verdict = match (&outcome, budget_ms) {
        (Ok(()), Some(b)) if ms <= b => format!("PASS in {ms} ms (budget {b} ms)"),
        (Ok(()), Some(b)) => format!("FAIL in {ms} ms (budget {b} ms exceeded)"),
        (Ok(()), None) => format!("PASS in {ms} ms (exact)"),
        (Err(e), Some(b)) => format!("FAIL in {ms} ms (budget {b} ms): {e}"),
        (Err(e), None) => format!("FAIL in {ms} ms (exact): {e}"),
    };
    println!("criterion {n} ({what}): {verdict}");
    if let Err(e) = outcome {
        panic!("criterion {n}: {e}");
    }
    if let Some(b) = budget_ms {
        assert!(ms <= b, "criterion {n} took {ms} ms, budget {b} ms");
    }
}

fn basis_grouplike(h: &std::sync::Arc<HopfAlgebra>, index: usize) -> ydbrauer::Result<GroupLikeElement> {
    let mut v = MatrixExact::zeros(h.field(), h.dim(), 1);
    v.set(index, 0, h.field().one())?;
    GroupLikeElement::new(h.clone(), v)
}

fn s_squared(h: &std::sync::Arc<HopfAlgebra>) -> ydbrauer::Result<HopfAutomorphism> {
    HopfAutomorphism::new(h.clone(), h.antipode().compose(h.antipode())?.into_matrix())
}

#[test]
fn criterion_1_hopf_axiom_suite() {
    gate(1, "hopf axioms and mutation coverage", Some(5_000), || {
        let c2 = build_standard(&StandardAlgebra::GroupAlgebra {
            field: FieldSpec::prime(5)?,
            table: cyclic_group_table(2),
            labels: Some(cyclic_labels(2)),
        })?;
        let c3 = build_standard(&StandardAlgebra::GroupAlgebra {
            field: FieldSpec::prime(7)?,
            table: cyclic_group_table(3),
            labels: Some(cyclic_labels(3)),
        })?;
        let h4 = sweedler(5)?;
        let t3 = taft(3, 2, 7)?;
        for (name, h) in [("kC2", &c2), ("kC3", &c3), ("H4", &h4), ("T3", &t3)] {
            ensure(verify_hopf(h).passed(), format!("{name} failed the axiom suite"))?;
        }

        let f = h4.field();
        let rebuild = |mult: MatrixExact, comult: MatrixExact| {
            HopfAlgebra::new(
                f,
                mult,
                h4.unit().matrix().clone(),
                comult,
                h4.counit().matrix().clone(),
                h4.antipode().matrix().clone(),
                Some(h4.antipode_inv().matrix().clone()),
                h4.basis_labels().to_vec(),
            )
        };
        let mut mutants = 0usize;
        for row in 0..4 {
            for col in 0..16 {
                let mut mult = h4.mult().matrix().clone();
                mult.set(row, col, f.add(&mult.get(row, col), &f.one())?)?;
                let mutant = rebuild(mult, h4.comult().matrix().clone())?;
                ensure(
                    !verify_hopf(&mutant).passed(),
                    format!("mult[{row},{col}] mutant passed every axiom"),
                )?;
                mutants += 1;
            }
        }
        for row in 0..16 {
            for col in 0..4 {
                let mut comult = h4.comult().matrix().clone();
                comult.set(row, col, f.add(&comult.get(row, col), &f.one())?)?;
                let mutant = rebuild(h4.mult().matrix().clone(), comult)?;
                ensure(
                    !verify_hopf(&mutant).passed(),
                    format!("comult[{row},{col}] mutant passed every axiom"),
                )?;
                mutants += 1;
            }
        }
        ensure(mutants == 128, "expected all 128 single-constant mutants")
    });
}

#[test]
fn criterion_2_yd_compatibility() {
    gate(2, "yd compatibility and verdict agreement", Some(5_000), || {
        let h = sweedler(5)?;
        let mut pairs = Vec::new();
        for l in 1..=4 {
            for m in 1..=4 {
                let pair = AutPair::new(sweedler_phi(&h, l)?, sweedler_phi(&h, m)?)?;
                let report = check_yd(&build_h_alpha_beta(&pair)?)?;
                ensure(report.passed(), format!("H_(phi{l},phi{m}) fails compatibility"))?;
                pairs.push(pair);
            }
        }

        // Randomized candidates: conjugating action and coaction by an
        // invertible P keeps a valid module valid; conjugating only the
        // action keeps both plain axiom sets intact but generally breaks
        // compatibility. Both identities must agree either way.
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        let field = h.field();
        let idh = MatrixExact::identity(field, h.dim());
        let mut broken = 0usize;
        for k in 0..100usize {
            let pair = pairs[rng.gen_range(0..pairs.len())].clone();
            let base = build_h_alpha_beta(&pair)?;
            let d = base.dim();
            let p = loop {
                let cand =
                    MatrixExact::from_fn(field, d, d, |_, _| field.from_i64(rng.gen_range(0..5)))?;
                if cand.rank() == d {
                    break cand;
                }
            };
            let pinv = p.invert()?;
            let action = p.mul(base.action().matrix())?.mul(&idh.kron(&pinv))?;
            let valid = k % 2 == 0;
            let coaction = if valid {
                p.kron(&idh).mul(base.coaction().matrix())?.mul(&pinv)?
            } else {
                base.coaction().matrix().clone()
            };
            let report = check_yd(&YDModule::new(h.clone(), action, coaction, pair)?)?;
            ensure(
                report.ab.ok == report.abn.ok,
                format!("candidate {k}: the two identities disagree"),
            )?;
            if valid {
                ensure(report.passed(), format!("candidate {k}: conjugate must stay valid"))?;
            } else if !report.passed() {
                broken += 1;
            }
        }
        ensure(broken > 0, "corruption never broke compatibility; candidates too tame")
    });
}

#[test]
fn criterion_3_anti_yd_sanity() {
    gate(3, "anti-yd pairs in involution", None, || {
        let h = sweedler(5)?;
        let f = h.field();
        let s2 = s_squared(&h)?;
        ensure(!s2.is_identity(), "S^2 is the identity on sweedler")?;
        for r in 0..4 {
            let want = if r == 2 { f.from_i64(-1) } else { f.from_i64(0) };
            ensure(s2.matrix().matrix().get(r, 2) == want, "S^2(x) != -x")?;
        }
        let pair = AutPair::new(s2, HopfAutomorphism::identity(h.clone()))?;
        ensure(
            check_yd(&build_h_alpha_beta(&pair)?)?.passed(),
            "H_(S^2,id) fails compatibility",
        )?;
        let eps = Character::counit(h.clone());
        let g = basis_grouplike(&h, 1)?;
        let one = GroupLikeElement::unit(h.clone());
        ensure(
            check_pair_in_involution(&pair, &eps, &g)?.ok,
            "(eps, g) must be in involution for (S^2, id)",
        )?;
        ensure(
            !check_pair_in_involution(&pair, &eps, &one)?.ok,
            "(eps, 1) must not be in involution for (S^2, id)",
        )
    });
}

#[test]
fn criterion_4_shift_tensor_dual_coherence() {
    gate(4, "tilde and diamonds are shifts", Some(10_000), || {
        for demo in DEMOS {
            let corpus = build_demo(demo, None)?;
            for (name, m) in &corpus.modules {
                let by = m.pair().beta().inverse().compose(&m.pair().alpha().inverse())?;
                let left = shift(&dual(m, DualFlavor::StarLeft)?, &by, ShiftDirection::F)?;
                let right = shift(&dual(m, DualFlavor::StarRight)?, &by, ShiftDirection::F)?;
                ensure(
                    dual(m, DualFlavor::DiamondLeft)? == left,
                    format!("{demo}/{name}: left diamond is not the shifted left star"),
                )?;
                ensure(
                    dual(m, DualFlavor::DiamondRight)? == right,
                    format!("{demo}/{name}: right diamond is not the shifted right star"),
                )?;
            }
            for (mn, m) in &corpus.modules {
                for (nn, n) in &corpus.modules {
                    let hat = tensor(m, n, TensorKind::Hat)?;
                    ensure(
                        tensor_tilde(m, n)? == shift(&hat, n.pair().alpha(), ShiftDirection::F)?,
                        format!("{demo}: tilde({mn}, {nn}) is not the shifted hat"),
                    )?;
                }
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_5_isomorphism_suite() {
    gate(5, "tau, iota, psi, phi, p5 over the corpus", Some(60_000), || {
        for demo in DEMOS {
            let corpus = build_demo(demo, None)?;
            let small: Vec<(&String, &YDModule)> =
                corpus.modules.iter().filter(|(_, m)| m.dim() <= 4).collect();
            for (name, m) in &small {
                let t = tau(m)?;
                ensure(
                    t.is_isomorphism() && t.inverse_matches() && t.twisted_evaluation().ok,
                    format!("{demo}/{name}: tau flags"),
                )?;
                let i = iota(m)?;
                ensure(i.is_isomorphism() && i.star_match(), format!("{demo}/{name}: iota flags"))?;
            }
            for (mn, m) in &small {
                for (nn, n) in &small {
                    ensure(psi(m, n)?.is_isomorphism(), format!("{demo}: psi({mn}, {nn})"))?;
                    ensure(phi(m, n)?.is_isomorphism(), format!("{demo}: phi({mn}, {nn})"))?;
                    ensure(p5_iso(m, n)?.is_isomorphism(), format!("{demo}: p5({mn}, {nn})"))?;
                }
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_6_azumaya_theorem() {
    gate(6, "endomorphism algebras are h-azumaya", Some(120_000), || {
        let corpus = build_demo("sweedler", None)?;
        for name in ["k_triv", "fkg", "h_id", "h_s2_id", "h_phi2_phi3"] {
            let m = &corpus.modules[name];
            let e = end_algebra(m)?;
            let v = azumaya_ranks(&e)?;
            let full = v.dim * v.dim;
            ensure(is_h_azumaya(&e)?, format!("End({name}) must be H-Azumaya"))?;
            ensure(
                v.f_rank == full && v.g_rank == full,
                format!("End({name}): F rank {}/{full}, G rank {}/{full}", v.f_rank, v.g_rank),
            )?;
            if m.dim() == 4 {
                ensure(full == 256, format!("End({name}) should give 256x256 maps"))?;
            }
        }
        ensure(!is_h_azumaya(&corpus.algebras["kxk"])?, "k x k must not be H-Azumaya")
    });
}

#[test]
fn criterion_7_structure_equalities() {
    gate(7, "p4, coco/cocu, quasi-elementary", Some(30_000), || {
        for demo in DEMOS {
            let corpus = build_demo(demo, None)?;
            let h = corpus.hopfs.values().next().expect("demo corpus has one algebra");
            let mut autos = vec![HopfAutomorphism::identity(h.clone())];
            autos.extend(corpus.automorphisms.values().cloned());
            for (name, m) in &corpus.modules {
                for a in &autos {
                    for b in &autos {
                        let by = AutPair::new(a.clone(), b.clone())?;
                        ensure(p4_check(m, &by)?, format!("{demo}/{name}: p4 fails"))?;
                    }
                }
                let qw = quasi_elementary_witness(m)?;
                ensure(qw.matches(), format!("{demo}/{name}: quasi-elementary witness"))?;
            }
        }

        let h = sweedler(5)?;
        let id = HopfAutomorphism::identity(h.clone());
        for l in 1..=4 {
            for mu in 1..=4 {
                let alpha = sweedler_phi(&h, l)?;
                let beta = sweedler_phi(&h, mu)?;
                let m = build_h_alpha_beta(&AutPair::new(alpha.clone(), beta.clone())?)?;
                let m2 = build_h_alpha_beta(&AutPair::new(
                    id.clone(),
                    beta.compose(&alpha.inverse())?,
                )?)?;
                ensure(
                    shift(&m, &alpha, ShiftDirection::F)? == m2,
                    format!("shift of H_(phi{l},phi{mu}) is not H_(phi{mu} phi{l}^-1)"),
                )?;
                ensure(coco_check(&m, &alpha)?, "end algebras must survive the shift")?;
                ensure(
                    end_algebra(&m)? == end_algebra(&m2)?
                        && end_op_algebra(&m)? == end_op_algebra(&m2)?,
                    format!("End(H_(phi{l},phi{mu})) != End(H_(phi{mu} phi{l}^-1))"),
                )?;
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_8_brauer_triviality_forward() {
    gate(8, "brauer triviality forward chain", Some(60_000), || {
        let h = sweedler(5)?;
        let pair = AutPair::new(s_squared(&h)?, HopfAutomorphism::identity(h.clone()))?;
        let eps = Character::counit(h.clone());
        let g = basis_grouplike(&h, 1)?;
        let k_triv = trivial_module(&h, 1);
        let h_id = build_h_alpha_beta(&AutPair::identity(h.clone()))?;
        for (name, n) in [("k_triv", &k_triv), ("H_id", &h_id)] {
            ensure(
                ydbrauer::endo::brauer_trivial_forward(&eps, &g, &pair, n)?,
                format!("forward chain must pass with N = {name}"),
            )?;
        }
        Ok(())
    });
}

#[test]
fn criterion_9_cli_determinism() {
    gate(9, "cli determinism and exit codes", None, || {
        let bin = env!("CARGO_BIN_EXE_ydbrauer");
        let run = |args: &[&str]| Command::new(bin).args(args).output();

        let pass = ["verify", "hopf", "--demo", "sweedler", "--format", "json"];
        let (a, b) = (run(&pass)?, run(&pass)?);
        ensure(a.status.code() == Some(0), "pass fixture must exit 0")?;
        ensure(!a.stdout.is_empty() && a.stdout == b.stdout, "pass fixture bytes differ")?;

        let yd = ["verify", "yd", "--demo", "sweedler", "--module", "h_s2_id", "--format", "json"];
        let (c, d) = (run(&yd)?, run(&yd)?);
        ensure(c.status.code() == Some(0), "yd fixture must exit 0")?;
        ensure(!c.stdout.is_empty() && c.stdout == d.stdout, "yd fixture bytes differ")?;

        let fail = ["check", "azumaya", "--demo", "sweedler", "--algebra", "kxk", "--format", "json"];
        let (e, f) = (run(&fail)?, run(&fail)?);
        ensure(e.status.code() == Some(1), "fail fixture must exit 1")?;
        ensure(!e.stdout.is_empty() && e.stdout == f.stdout, "fail fixture bytes differ")?;

        let usage = run(&["verify", "hopf", "--demo", "nonsense"])?;
        ensure(usage.status.code() == Some(2), "bad demo must exit 2")
    });
}
