use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::fast::{apply_fast, planarize, TensorVector};
use crate::functors::dense::checked_power;
use crate::functors::{MatrixFunctor, Theta};
use crate::sampling::random_diagram;
use crate::setpart::{Diagram, DiagramShape};

#[derive(Debug, Clone, PartialEq)]
pub struct BenchReport {
    pub shape: DiagramShape,
    pub n: usize,
    pub diagram: Diagram,
    pub dense_ms: f64,
    pub fast_ms: f64,
    pub max_dev: f64,
}

impl BenchReport {
    pub fn speedup(&self) -> f64 {
        self.dense_ms / self.fast_ms
    }

    pub fn csv_header() -> &'static str {
        "shape,n,dense_ms,fast_ms,speedup,max_dev"
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{}->{},{},{:.6},{:.6},{:.3},{:e}",
            self.shape.k,
            self.shape.l,
            self.n,
            self.dense_ms,
            self.fast_ms,
            self.speedup(),
            self.max_dev
        )
    }
}

fn median(mut xs: Vec<Duration>) -> f64 {
    xs.sort();
    let mid = xs.len() / 2;
    let d = if xs.len() % 2 == 1 {
        xs[mid]
    } else {
        (xs[mid - 1] + xs[mid]) / 2
    };
    d.as_secs_f64() * 1e3
}

/// Times the dense float matvec against the factored path on a seeded
/// random diagram of `shape`, fresh random input per trial.
pub fn bench(shape: DiagramShape, n: usize, trials: usize, seed: u64, cap: u128) -> Result<BenchReport> {
    checked_power(n, shape.total(), cap)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let diagram = random_diagram(shape, &mut rng);
    let dense = Theta.realize_diagram(n, &diagram)?.to_f64();
    let fast = planarize(&diagram, n)?;
    let len = n.pow(shape.k as u32);
    let trials = trials.max(1);
    let mut dense_t = Vec::with_capacity(trials);
    let mut fast_t = Vec::with_capacity(trials);
    let mut max_dev = 0.0f64;
    for _ in 0..trials {
        let x: Vec<f64> = (0..len).map(|_| rng.random_range(-1.0..1.0)).collect();
        let v = TensorVector::float(n, shape.k, x)?;

        let t = Instant::now();
        let yd = dense.matvec(v.as_float().unwrap());
        dense_t.push(t.elapsed());

        let t = Instant::now();
        let yf = apply_fast(&fast, &v)?;
        fast_t.push(t.elapsed());

        let yd = TensorVector::float(n, shape.l, yd)?;
        max_dev = max_dev.max(yd.max_abs_diff(&yf)?);
    }
    Ok(BenchReport {
        shape,
        n,
        diagram,
        dense_ms: median(dense_t),
        fast_ms: median(fast_t),
        max_dev,
    })
}
