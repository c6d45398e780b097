//! One line per acceptance criterion; exits nonzero if any fails.
//!
//! Run with `cargo test -p diagcat --test acceptance`.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{d, s4_golden, so2_golden, sp2_golden};
use diagcat::algebra::{compose, identity_sum, scalar, tensor, CategoryContext, DiagramSum};
use diagcat::check::random_exact_vector;
use diagcat::counting::{bell, bell_bounded, brauer_count};
use diagcat::fast::{apply_dense, apply_fast, bench, planarize};
use diagcat::functors::rank::spanning_rank;
use diagcat::functors::{realize, DenseOperator, MatrixFunctor, Phi, Psi, Theta, XSp, DEFAULT_ENTRY_CAP};
use diagcat::groups::{check_equivariance, GroupTag, SamplerRegistry};
use diagcat::sampling::{random_any, random_chainable_pair};
use diagcat::setpart::{classify_bg, enumerate_bg, enumerate_brauer, enumerate_partition_diagrams, enumerate_partition_diagrams_bounded, Diagram, DiagramShape};
use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn golden(f: &dyn MatrixFunctor, n: usize, cases: Vec<(&str, Vec<i64>)>, tag_bg: bool) -> Outcome {
    for (text, want) in &cases {
        let mut dg = d(text);
        if tag_bg {
            dg = classify_bg(&dg, n).map_err(|e| e.to_string())?;
        }
        let got = f.realize_diagram(n, &dg).map_err(|e| e.to_string())?.to_i64().unwrap();
        ensure(&got == want, || format!("{text}: got {got:?}"))?;
    }
    Ok(format!("{} matrices exact", cases.len()))
}

fn c1() -> Outcome {
    golden(&Theta, 4, s4_golden(), false)
}

fn c2() -> Outcome {
    ensure(enumerate_brauer(DiagramShape::new(2, 2)).len() == 3, || "expected three (2,2) Brauer diagrams".into())?;
    golden(&XSp, 2, sp2_golden(), false)
}

fn c3() -> Outcome {
    ensure(enumerate_bg(DiagramShape::new(2, 2), 2).len() == 6, || "expected six (2,2) free-vertex diagrams".into())?;
    golden(&Psi, 2, so2_golden(), true)
}

fn c4() -> Outcome {
    let mut checks = 0;
    for total in 0..=8usize {
        for l in 0..=total {
            let shape = DiagramShape::new(total - l, l);
            let all = enumerate_partition_diagrams(shape);
            ensure(BigUint::from(all.len()) == bell(total), || format!("{shape}: Bell"))?;
            let want_brauer = if total % 2 == 1 { BigUint::from(0u8) } else { brauer_count(total) };
            ensure(BigUint::from(enumerate_brauer(shape).len()) == want_brauer, || format!("{shape}: Brauer"))?;
            for n in 1..=8usize {
                let bounded = enumerate_partition_diagrams_bounded(shape, n).len();
                ensure(BigUint::from(bounded) == bell_bounded(total, n), || format!("{shape} n={n}: bounded Bell"))?;
                // brute force over all partitions
                let brute = all.iter().filter(|x| x.blocks().len() <= n).count();
                ensure(brute == bounded, || format!("{shape} n={n}: bounded brute force"))?;
                let bg = all
                    .iter()
                    .filter(|x| {
                        x.blocks().iter().filter(|b| b.len() == 1).count() == n && x.blocks().iter().all(|b| b.len() <= 2)
                    })
                    .count();
                ensure(enumerate_bg(shape, n).len() == bg, || format!("{shape} n={n}: free-vertex family"))?;
                checks += 3;
            }
            checks += 2;
        }
    }
    Ok(format!("{checks} counts"))
}

fn c5() -> Outcome {
    let r22 = spanning_rank(&Theta, DiagramShape::new(2, 2), 2, DEFAULT_ENTRY_CAP).map_err(|e| e.to_string())?;
    let r11 = spanning_rank(&Theta, DiagramShape::new(1, 1), 4, DEFAULT_ENTRY_CAP).map_err(|e| e.to_string())?;
    ensure(BigUint::from(r22) == bell_bounded(4, 2) && r22 == 8, || format!("rank (2,2) n=2 is {r22}"))?;
    ensure(r11 == 2, || format!("rank (1,1) n=4 is {r11}"))?;
    Ok(format!("rank {r22} and {r11}"))
}

fn contexts() -> Vec<(CategoryContext, &'static dyn MatrixFunctor)> {
    let mut out: Vec<(CategoryContext, &'static dyn MatrixFunctor)> = Vec::new();
    for n in 1..=3 {
        out.push((CategoryContext::partition(n).unwrap(), &Theta));
        out.push((CategoryContext::brauer(n).unwrap(), &Phi));
    }
    for n in 2..=3 {
        out.push((CategoryContext::brauer_grood(n).unwrap(), &Psi));
    }
    out
}

fn one(x: &Diagram) -> DiagramSum {
    DiagramSum::from_diagram(x.clone())
}

fn c6() -> Outcome {
    let mut cases = 0;
    for (ctx, f) in contexts() {
        let mut rng = ChaCha8Rng::seed_from_u64(600 + ctx.n() as u64);
        for _ in 0..200 {
            let (d2, d1) = random_chainable_pair(&ctx, 3, &mut rng);
            let composite = compose(&ctx, &one(&d2), &one(&d1)).map_err(|e| e.to_string())?;
            let lhs = realize(f, ctx.n(), &composite).unwrap();
            let rhs = f.realize_diagram(ctx.n(), &d2).unwrap().matmul(&f.realize_diagram(ctx.n(), &d1).unwrap()).unwrap();
            ensure(lhs == rhs, || format!("{ctx}: {d2} o {d1}"))?;
            cases += 1;
        }
    }
    Ok(format!("{cases} pairs"))
}

fn c7() -> Outcome {
    let mut cases = 0;
    for (ctx, f) in contexts() {
        let mut rng = ChaCha8Rng::seed_from_u64(700 + ctx.n() as u64);
        for _ in 0..200 {
            let d1 = random_any(&ctx, 3, &mut rng);
            let d2 = random_any(&ctx, 3, &mut rng);
            let product = tensor(&ctx, &one(&d1), &one(&d2)).map_err(|e| e.to_string())?;
            let lhs = realize(f, ctx.n(), &product).unwrap();
            let rhs = f.realize_diagram(ctx.n(), &d1).unwrap().kron(&f.realize_diagram(ctx.n(), &d2).unwrap()).unwrap();
            ensure(lhs == rhs, || format!("{ctx}: {d1} (x) {d2}"))?;
            cases += 1;
        }
    }
    Ok(format!("{cases} pairs"))
}

fn c8() -> Outcome {
    let mut cases = 0;
    for (ctx, _) in contexts() {
        let mut rng = ChaCha8Rng::seed_from_u64(800 + ctx.n() as u64);
        for _ in 0..100 {
            let f = one(&random_any(&ctx, 3, &mut rng));
            let g = one(&random_any(&ctx, 3, &mut rng));
            let (fs, gs) = (f.shape(), g.shape());
            let run = || -> diagcat::Result<bool> {
                let fg = tensor(&ctx, &f, &g)?;
                let a = compose(&ctx, &tensor(&ctx, &identity_sum(fs.l), &g)?, &tensor(&ctx, &f, &identity_sum(gs.k))?)?;
                let b = compose(&ctx, &tensor(&ctx, &f, &identity_sum(gs.l))?, &tensor(&ctx, &identity_sum(fs.k), &g)?)?;
                Ok(a == fg && b == fg)
            };
            ensure(run().map_err(|e| e.to_string())?, || format!("{ctx}: f={f} g={g}"))?;
            cases += 1;
        }
    }
    Ok(format!("{cases} pairs"))
}

fn c9() -> Outcome {
    let mut diagrams = 0;
    for n in 2..=3 {
        let ctx = CategoryContext::partition(n).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(900 + n as u64);
        for total in 0..=6 {
            for l in 0..=total {
                for dg in enumerate_partition_diagrams(DiagramShape::new(total - l, l)) {
                    let f = planarize(&dg, n).unwrap();
                    let inner = compose(&ctx, &one(&f.planar_diagram()), &one(&f.bottom_diagram())).unwrap();
                    let back = compose(&ctx, &one(&f.top_diagram()), &inner).unwrap();
                    ensure(back == DiagramSum::term(scalar(1), dg.clone()), || format!("n={n} {dg}: recomposed to {back}"))?;
                    let m = Theta.realize_diagram(n, &dg).unwrap();
                    for _ in 0..100 {
                        let v = random_exact_vector(n, dg.shape().k, &mut rng);
                        ensure(apply_fast(&f, &v).unwrap() == apply_dense(&m, &v).unwrap(), || format!("n={n} {dg}"))?;
                    }
                    diagrams += 1;
                }
            }
        }
    }
    Ok(format!("{diagrams} diagrams x 100 vectors"))
}

fn c10() -> Outcome {
    let r = bench(DiagramShape::new(5, 3), 4, 1000, 0, DEFAULT_ENTRY_CAP).map_err(|e| e.to_string())?;
    let detail = format!(
        "{}: dense {:.4} ms, fast {:.4} ms, ratio {:.3}, max_dev {:e}",
        r.diagram,
        r.dense_ms,
        r.fast_ms,
        r.fast_ms / r.dense_ms,
        r.max_dev
    );
    ensure(r.fast_ms <= 0.5 * r.dense_ms && r.max_dev < 1e-12, || detail.clone())?;
    Ok(detail)
}

fn c11() -> Outcome {
    let samplers = SamplerRegistry::standard();
    let plan: [(GroupTag, &'static dyn MatrixFunctor, &[usize]); 4] = [
        (GroupTag::Sym, &Theta, &[1, 2, 3, 4]),
        (GroupTag::Orth, &Phi, &[1, 2, 3]),
        (GroupTag::Symp, &XSp, &[2]),
        (GroupTag::SpecOrth, &Psi, &[1, 2, 3]),
    ];
    let mut checks = 0;
    let mut worst = 0.0f64;
    for (tag, f, ns) in plan {
        let sampler = samplers.for_tag(tag).unwrap();
        for &n in ns {
            let gs: Vec<_> = (0..20).map(|s| sampler.sample(n, 1100 + s).unwrap()).collect();
            for k in 0..=2 {
                for l in 0..=2 {
                    for dg in f.spanning_diagrams(DiagramShape::new(k, l), n) {
                        let m = f.realize_diagram(n, &dg).unwrap();
                        for g in &gs {
                            let r = check_equivariance(g, &m).unwrap();
                            if tag == GroupTag::Sym {
                                ensure(r.exact && r.value == 0.0, || format!("{tag} n={n} {dg}: {}", r.value))?;
                            } else {
                                ensure(r.value < 1e-8, || format!("{tag} n={n} {dg}: {:e}", r.value))?;
                                worst = worst.max(r.value);
                            }
                            checks += 1;
                        }
                    }
                }
            }
            if n >= 2 {
                let unit = DenseOperator::matrix_unit(n, DiagramShape::new(1, 1), 0, 1);
                let caught = gs.iter().any(|g| !check_equivariance(g, &unit).unwrap().passes(1e-8));
                ensure(caught, || format!("{tag} n={n}: matrix unit not caught"))?;
            }
        }
    }
    Ok(format!("{checks} checks, worst float residual {worst:e}, matrix unit rejected"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome, u64); 11] = [
        ("golden S_4 matrices", c1, 1),
        ("golden Sp(2) matrices", c2, 1),
        ("golden SO(2) matrices", c3, 1),
        ("family sizes", c4, 10),
        ("S_n basis rank", c5, 5),
        ("functoriality", c6, 60),
        ("monoidality", c7, 60),
        ("interchange law", c8, 10),
        ("fast apply correctness", c9, 120),
        ("fast apply speed", c10, 60),
        ("equivariance oracle", c11, 60),
    ];
    let mut failed = 0;
    for (i, (name, run, bound)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs(*bound);
        let (status, detail) = match (&outcome, in_time) {
            (Ok(msg), true) => ("PASS", msg.clone()),
            (Ok(msg), false) => ("FAIL", format!("{msg}; over time bound")),
            (Err(msg), _) => ("FAIL", msg.clone()),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!(
            "criterion {:>2} {status} {name} [{:.3}s / {bound}s] {detail}",
            i + 1,
            elapsed.as_secs_f64()
        );
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
