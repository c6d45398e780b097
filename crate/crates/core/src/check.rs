//! Property suites, run by name from a registry.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{compose, identity_sum, scalar, tensor, CategoryContext, ContextKind, DiagramSum, Rule1Variant};
use crate::counting::{bell, bell_bounded, brauer_count, brauer_grood_count};
use crate::error::{Error, Result};
use crate::fast::{apply_dense, apply_fast, is_planar, planarize, TensorVector};
use crate::functors::{realize, DenseOperator, FunctorRegistry, MatrixFunctor, Psi};
use crate::groups::{check_equivariance, GroupTag, SamplerRegistry};
use crate::sampling::{random_any, random_chainable_pair, random_chainable_triple};
use crate::setpart::{
    enumerate_bg, enumerate_brauer, enumerate_partition_diagrams, enumerate_partition_diagrams_bounded, DiagramShape,
};

#[derive(Debug, Clone)]
pub struct CheckConfig {
    pub seed: u64,
    /// Random cases per context.
    pub trials: usize,
    /// Restricts suites that sweep n to this value.
    pub n: Option<usize>,
    /// Restricts the equivariance suite to one group.
    pub group: Option<GroupTag>,
    pub rule1: Rule1Variant,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            seed: 0,
            trials: 50,
            n: None,
            group: None,
            rule1: Rule1Variant::Signed,
        }
    }
}

impl CheckConfig {
    fn ns(&self, default: &[usize]) -> Vec<usize> {
        match self.n {
            Some(n) => vec![n],
            None => default.to_vec(),
        }
    }

    fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub cases: usize,
    /// Largest float residual seen, for suites that compute one.
    pub max_residual: Option<f64>,
    pub failure: Option<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "pass" } else { "fail" };
        write!(f, "suite={} status={status} cases={}", self.suite, self.cases)?;
        if let Some(r) = self.max_residual {
            write!(f, " max_residual={r:e}")?;
        }
        Ok(())
    }
}

/// Counts cases and records the first counterexample.
struct Tally {
    suite: &'static str,
    cases: usize,
    max_residual: Option<f64>,
    failure: Option<String>,
}

impl Tally {
    fn new(suite: &'static str) -> Self {
        Tally {
            suite,
            cases: 0,
            max_residual: None,
            failure: None,
        }
    }

    /// Records one case; returns false once a failure has been seen.
    fn case(&mut self, ok: bool, detail: impl FnOnce() -> String) -> bool {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(detail());
        }
        self.failure.is_none()
    }

    fn residual(&mut self, r: f64) {
        self.max_residual = Some(self.max_residual.map_or(r, |m| m.max(r)));
    }

    fn finish(self) -> SuiteReport {
        SuiteReport {
            suite: self.suite,
            cases: self.cases,
            max_residual: self.max_residual,
            failure: self.failure,
        }
    }
}

pub trait PropertySuite: Send + Sync {
    fn name(&self) -> &'static str;

    fn run(&self, config: &CheckConfig) -> Result<SuiteReport>;
}

/// Describes where two equal-sized matrices first differ.
pub fn first_difference(lhs: &DenseOperator, rhs: &DenseOperator) -> Option<String> {
    if lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols() {
        return Some(format!("{}x{} vs {}x{}", lhs.rows(), lhs.cols(), rhs.rows(), rhs.cols()));
    }
    for r in 0..lhs.rows() {
        for c in 0..lhs.cols() {
            if lhs.get(r, c) != rhs.get(r, c) {
                return Some(format!(
                    "I={:?} J={:?}: {} vs {}",
                    crate::functors::decode_index(lhs.n(), lhs.shape().l, r),
                    crate::functors::decode_index(lhs.n(), lhs.shape().k, c),
                    lhs.get(r, c),
                    rhs.get(r, c)
                ));
            }
        }
    }
    None
}

pub struct CountingSuite;

impl PropertySuite for CountingSuite {
    fn name(&self) -> &'static str {
        "counting"
    }

    fn run(&self, _config: &CheckConfig) -> Result<SuiteReport> {
        let mut t = Tally::new(self.name());
        for total in 0..=8usize {
            for l in 0..=total {
                let shape = DiagramShape::new(total - l, l);
                let got = enumerate_partition_diagrams(shape).len();
                if !t.case(bell(total) == got.into(), || format!("{shape}: {got} partition diagrams")) {
                    return Ok(t.finish());
                }
                let got = enumerate_brauer(shape).len();
                if !t.case(brauer_count(total) == got.into(), || format!("{shape}: {got} Brauer diagrams")) {
                    return Ok(t.finish());
                }
                for n in 1..=8usize {
                    let got = enumerate_partition_diagrams_bounded(shape, n).len();
                    let want = bell_bounded(total, n);
                    if !t.case(want == got.into(), || format!("{shape} n={n}: {got} bounded diagrams")) {
                        return Ok(t.finish());
                    }
                    let got = enumerate_bg(shape, n).len();
                    let want = brauer_grood_count(total, n);
                    if !t.case(want == got.into(), || format!("{shape} n={n}: {got} free-vertex diagrams")) {
                        return Ok(t.finish());
                    }
                }
            }
        }
        Ok(t.finish())
    }
}

fn contexts(config: &CheckConfig, kinds: &[(ContextKind, &[usize])]) -> Result<Vec<CategoryContext>> {
    let mut out = Vec::new();
    for (kind, ns) in kinds {
        for n in config.ns(ns) {
            if *kind == ContextKind::BrauerGrood && n < 2 && config.n.is_none() {
                continue;
            }
            out.push(CategoryContext::new(*kind, n)?.with_rule1(config.rule1));
        }
    }
    Ok(out)
}

/// Exact equality, except that (l+k)\n diagrams are linearly dependent, so
/// in that context sums are also equal when their matrices are.
fn equal_in(ctx: &CategoryContext, a: &DiagramSum, b: &DiagramSum) -> Result<bool> {
    if a == b {
        return Ok(true);
    }
    Ok(ctx.kind() == ContextKind::BrauerGrood && realize(&Psi, ctx.n(), a)? == realize(&Psi, ctx.n(), b)?)
}

const ALL_CONTEXTS: &[(ContextKind, &[usize])] = &[
    (ContextKind::Partition, &[1, 2, 3]),
    (ContextKind::Brauer, &[1, 2, 3]),
    (ContextKind::BrauerGrood, &[2, 3]),
];

/// Diagram-level laws: associativity of both products, identities,
/// interchange, and closure of the Brauer–Grood context.
pub struct AlgebraSuite;

impl PropertySuite for AlgebraSuite {
    fn name(&self) -> &'static str {
        "algebra"
    }

    fn run(&self, config: &CheckConfig) -> Result<SuiteReport> {
        let mut t = Tally::new(self.name());
        for ctx in contexts(config, ALL_CONTEXTS)? {
            let mut rng = config.rng(1 + ctx.n() as u64);
            for _ in 0..config.trials {
                let (a, b, c) = random_chainable_triple(&ctx, 2, &mut rng);
                let (sa, sb, sc) = (DiagramSum::from_diagram(a.clone()), DiagramSum::from_diagram(b.clone()), DiagramSum::from_diagram(c.clone()));
                let left = compose(&ctx, &compose(&ctx, &sa, &sb)?, &sc)?;
                let right = compose(&ctx, &sa, &compose(&ctx, &sb, &sc)?)?;
                let same = equal_in(&ctx, &left, &right)?;
                if !t.case(same, || format!("{ctx} associativity: a={a} b={b} c={c}")) {
                    return Ok(t.finish());
                }

                let f = DiagramSum::from_diagram(random_any(&ctx, 2, &mut rng));
                let g = DiagramSum::from_diagram(random_any(&ctx, 2, &mut rng));
                let h = DiagramSum::from_diagram(random_any(&ctx, 2, &mut rng));
                let l3 = tensor(&ctx, &tensor(&ctx, &f, &g)?, &h)?;
                let r3 = tensor(&ctx, &f, &tensor(&ctx, &g, &h)?)?;
                if !t.case(equal_in(&ctx, &l3, &r3)?, || format!("{ctx} tensor associativity: {f} | {g} | {h}")) {
                    return Ok(t.finish());
                }

                let (fs, gs) = (f.shape(), g.shape());
                let fg = tensor(&ctx, &f, &g)?;
                let one = compose(
                    &ctx,
                    &tensor(&ctx, &identity_sum(fs.l), &g)?,
                    &tensor(&ctx, &f, &identity_sum(gs.k))?,
                )?;
                let two = compose(
                    &ctx,
                    &tensor(&ctx, &f, &identity_sum(gs.l))?,
                    &tensor(&ctx, &identity_sum(fs.k), &g)?,
                )?;
                if !t.case(one == fg && two == fg, || format!("{ctx} interchange: f={f} g={g}")) {
                    return Ok(t.finish());
                }

                let id_l = compose(&ctx, &identity_sum(fs.l), &f)?;
                let id_r = compose(&ctx, &f, &identity_sum(fs.k))?;
                if !t.case(id_l == f && id_r == f, || format!("{ctx} identity: {f}")) {
                    return Ok(t.finish());
                }

                for s in [&left, &l3] {
                    let closed = s.terms().all(|(d, _)| ctx.admit(d).is_ok());
                    if !t.case(closed, || format!("{ctx} closure: {s}")) {
                        return Ok(t.finish());
                    }
                }
            }
        }
        Ok(t.finish())
    }
}

fn functor_contexts(config: &CheckConfig, registry: &FunctorRegistry, names: &[&str]) -> Result<Vec<(String, CategoryContext)>> {
    let mut out = Vec::new();
    for &name in names {
        let f = registry.get(name)?;
        let ns: &[usize] = match f.context_kind() {
            ContextKind::BrauerGrood => &[2, 3],
            _ if f.check_dimension(1).is_err() => &[2],
            _ => &[1, 2, 3],
        };
        for n in config.ns(ns) {
            if f.check_dimension(n).is_err() {
                continue;
            }
            out.push((name.to_string(), f.context(n)?.with_rule1(config.rule1)));
        }
    }
    Ok(out)
}

/// `F(d2 • d1) = F(d2) · F(d1)` on random chainable pairs, for the functors
/// that respect composition in their source category.
pub struct FunctorialitySuite;

impl PropertySuite for FunctorialitySuite {
    fn name(&self) -> &'static str {
        "functoriality"
    }

    fn run(&self, config: &CheckConfig) -> Result<SuiteReport> {
        let registry = FunctorRegistry::standard();
        let mut t = Tally::new(self.name());
        for (name, ctx) in functor_contexts(config, &registry, &["theta", "phi", "psi"])? {
            let f = registry.get(&name)?;
            let mut rng = config.rng(17 + ctx.n() as u64);
            for _ in 0..config.trials {
                let (d2, d1) = random_chainable_pair(&ctx, 3, &mut rng);
                let composed = compose(&ctx, &DiagramSum::from_diagram(d2.clone()), &DiagramSum::from_diagram(d1.clone()))?;
                let lhs = realize(f, ctx.n(), &composed)?;
                let rhs = f.realize_diagram(ctx.n(), &d2)?.matmul(&f.realize_diagram(ctx.n(), &d1)?)?;
                if !t.case(lhs == rhs, || {
                    format!(
                        "{name} in {ctx}: d2={d2} d1={d1} composite={composed}; {}",
                        first_difference(&lhs, &rhs).unwrap_or_default()
                    )
                }) {
                    return Ok(t.finish());
                }
            }
        }
        Ok(t.finish())
    }
}

/// `F(d1 ⊗ d2) = F(d1) ⊗ F(d2)` on random pairs, all four functors.
pub struct MonoidalitySuite;

impl PropertySuite for MonoidalitySuite {
    fn name(&self) -> &'static str {
        "monoidality"
    }

    fn run(&self, config: &CheckConfig) -> Result<SuiteReport> {
        let registry = FunctorRegistry::standard();
        let mut t = Tally::new(self.name());
        for (name, ctx) in functor_contexts(config, &registry, &["theta", "phi", "x_sp", "psi"])? {
            let f = registry.get(&name)?;
            let mut rng = config.rng(29 + ctx.n() as u64);
            for _ in 0..config.trials {
                let d1 = random_any(&ctx, 2, &mut rng);
                let d2 = random_any(&ctx, 2, &mut rng);
                let product = tensor(&ctx, &DiagramSum::from_diagram(d1.clone()), &DiagramSum::from_diagram(d2.clone()))?;
                let lhs = realize(f, ctx.n(), &product)?;
                let rhs = f.realize_diagram(ctx.n(), &d1)?.kron(&f.realize_diagram(ctx.n(), &d2)?)?;
                if !t.case(lhs == rhs, || {
                    format!(
                        "{name} in {ctx}: d1={d1} d2={d2}; {}",
                        first_difference(&lhs, &rhs).unwrap_or_default()
                    )
                }) {
                    return Ok(t.finish());
                }
            }
        }
        Ok(t.finish())
    }
}

/// Every realized spanning matrix with `k, l ≤ 2` commutes with sampled
/// group elements, and a bare matrix unit does not.
pub struct EquivarianceSuite;

const EQUIVARIANCE_TOL: f64 = 1e-8;

impl PropertySuite for EquivarianceSuite {
    fn name(&self) -> &'static str {
        "equivariance"
    }

    fn run(&self, config: &CheckConfig) -> Result<SuiteReport> {
        let registry = FunctorRegistry::standard();
        let samplers = SamplerRegistry::standard();
        let mut t = Tally::new(self.name());
        let groups: Vec<(GroupTag, &[usize])> = vec![
            (GroupTag::Sym, &[1, 2, 3, 4]),
            (GroupTag::Orth, &[1, 2, 3]),
            (GroupTag::Symp, &[2]),
            (GroupTag::SpecOrth, &[1, 2, 3]),
        ];
        let elements = config.trials.clamp(1, 20) as u64;
        for (tag, ns) in groups {
            if config.group.is_some_and(|g| g != tag) {
                continue;
            }
            let f = registry.get(tag.functor_name())?;
            let sampler = samplers.for_tag(tag)?;
            for n in config.ns(ns) {
                f.check_dimension(n)?;
                let gs = (0..elements)
                    .map(|s| sampler.sample(n, config.seed.wrapping_add(s)))
                    .collect::<Result<Vec<_>>>()?;
                for k in 0..=2 {
                    for l in 0..=2 {
                        for d in f.spanning_diagrams(DiagramShape::new(k, l), n) {
                            let m = f.realize_diagram(n, &d)?;
                            for (i, g) in gs.iter().enumerate() {
                                let r = check_equivariance(g, &m)?;
                                if !r.exact {
                                    t.residual(r.value);
                                }
                                if !t.case(r.passes(EQUIVARIANCE_TOL), || {
                                    format!("{} n={n} element #{i}: {d} residual {:e}", tag, r.value)
                                }) {
                                    return Ok(t.finish());
                                }
                            }
                        }
                    }
                }
                if n >= 2 {
                    let unit = DenseOperator::matrix_unit(n, DiagramShape::new(1, 1), 0, 1);
                    let mut caught = false;
                    for g in &gs {
                        if !check_equivariance(g, &unit)?.passes(EQUIVARIANCE_TOL) {
                            caught = true;
                            break;
                        }
                    }
                    if !t.case(caught, || format!("{tag} n={n}: matrix unit E_(0,1) passed every element")) {
                        return Ok(t.finish());
                    }
                }
            }
        }
        Ok(t.finish())
    }
}

/// Recomposition and `apply_fast = apply_dense` for all diagrams with
/// `l + k ≤ 6`.
pub struct FastApplySuite;

impl PropertySuite for FastApplySuite {
    fn name(&self) -> &'static str {
        "fast-apply"
    }

    fn run(&self, config: &CheckConfig) -> Result<SuiteReport> {
        let theta = crate::functors::Theta;
        let vectors = config.trials.max(1);
        let mut t = Tally::new(self.name());
        for n in config.ns(&[2, 3]) {
            let ctx = CategoryContext::partition(n)?;
            let mut rng = config.rng(43 + n as u64);
            for total in 0..=6 {
                for l in 0..=total {
                    for d in enumerate_partition_diagrams(DiagramShape::new(total - l, l)) {
                        let f = planarize(&d, n)?;
                        let recomposed = compose(
                            &ctx,
                            &DiagramSum::from_diagram(f.top_diagram()),
                            &compose(
                                &ctx,
                                &DiagramSum::from_diagram(f.planar_diagram()),
                                &DiagramSum::from_diagram(f.bottom_diagram()),
                            )?,
                        )?;
                        let ok = recomposed == DiagramSum::term(scalar(1), d.clone()) && is_planar(&f.planar_diagram());
                        if !t.case(ok, || format!("n={n} {d}: recomposed to {recomposed}")) {
                            return Ok(t.finish());
                        }
                        let m = theta.realize_diagram(n, &d)?;
                        for _ in 0..vectors {
                            let v = random_exact_vector(n, d.shape().k, &mut rng);
                            let fast = apply_fast(&f, &v)?;
                            let dense = apply_dense(&m, &v)?;
                            if !t.case(fast == dense, || format!("n={n} {d}: fast and dense differ")) {
                                return Ok(t.finish());
                            }
                        }
                    }
                }
            }
        }
        Ok(t.finish())
    }
}

/// Rationals `p/q` with `|p| ≤ 20`, `1 ≤ q ≤ 6`.
pub fn random_exact_vector<R: Rng + ?Sized>(n: usize, order: usize, rng: &mut R) -> TensorVector {
    let len = n.pow(order as u32);
    let values = (0..len)
        .map(|_| {
            let p: i64 = rng.random_range(-20..=20);
            let q: i64 = rng.random_range(1..=6);
            num_rational::BigRational::new(p.into(), q.into())
        })
        .collect();
    TensorVector::exact(n, order, values).unwrap()
}

pub struct SuiteRegistry {
    suites: Vec<Box<dyn PropertySuite>>,
}

impl Default for SuiteRegistry {
    fn default() -> Self {
        Self::standard()
    }
}

impl SuiteRegistry {
    pub fn standard() -> Self {
        let mut r = SuiteRegistry { suites: Vec::new() };
        r.register(Box::new(CountingSuite));
        r.register(Box::new(AlgebraSuite));
        r.register(Box::new(FunctorialitySuite));
        r.register(Box::new(MonoidalitySuite));
        r.register(Box::new(EquivarianceSuite));
        r.register(Box::new(FastApplySuite));
        r
    }

    pub fn register(&mut self, suite: Box<dyn PropertySuite>) {
        self.suites.retain(|s| s.name() != suite.name());
        self.suites.push(suite);
    }

    pub fn get(&self, name: &str) -> Result<&dyn PropertySuite> {
        self.suites
            .iter()
            .find(|s| s.name() == name)
            .map(|s| s.as_ref())
            .ok_or_else(|| Error::Unknown {
                what: "suite",
                name: name.into(),
            })
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.suites.iter().map(|s| s.name()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn PropertySuite> {
        self.suites.iter().map(|s| s.as_ref())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick() -> CheckConfig {
        CheckConfig {
            trials: 10,
            ..CheckConfig::default()
        }
    }

    #[test]
    fn standard_suites_pass() {
        for suite in SuiteRegistry::standard().iter() {
            if suite.name() == "fast-apply" || suite.name() == "counting" {
                continue;
            }
            let r = suite.run(&quick()).unwrap();
            assert!(r.passed(), "{r} {:?}", r.failure);
        }
    }

    #[test]
    fn unsigned_rule1_is_caught() {
        let config = CheckConfig {
            rule1: Rule1Variant::Unsigned,
            trials: 200,
            ..CheckConfig::default()
        };
        let r = FunctorialitySuite.run(&config).unwrap();
        assert!(!r.passed());
        assert!(r.failure.unwrap().contains("psi"));
    }
}
