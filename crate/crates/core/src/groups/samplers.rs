use nalgebra::DMatrix;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{Error, Result};
use crate::functors::epsilon;
use crate::groups::{GroupElement, GroupTag};

/// Seeded source of elements of one group.
pub trait GroupSampler: Send + Sync {
    fn name(&self) -> &'static str;

    fn tag(&self) -> GroupTag;

    fn sample(&self, n: usize, seed: u64) -> Result<GroupElement>;
}

fn gaussian(n: usize, rng: &mut ChaCha8Rng) -> DMatrix<f64> {
    DMatrix::from_fn(n, n, |_, _| StandardNormal.sample(rng))
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    Ok(())
}

/// `J_{ab} = ε(a, b)` on the interleaved positions.
pub fn symplectic_form(n: usize) -> Result<DMatrix<f64>> {
    if n == 0 || n % 2 == 1 {
        return Err(Error::OddDimension { n });
    }
    Ok(DMatrix::from_fn(n, n, |a, b| epsilon(a, b) as f64))
}

#[derive(Debug, Default, Clone, Copy)]
pub struct SymSampler;

impl GroupSampler for SymSampler {
    fn name(&self) -> &'static str {
        "sym"
    }

    fn tag(&self) -> GroupTag {
        GroupTag::Sym
    }

    fn sample(&self, n: usize, seed: u64) -> Result<GroupElement> {
        check_n(n)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut p: Vec<usize> = (0..n).collect();
        p.shuffle(&mut rng);
        GroupElement::permutation(p)
    }
}

/// Q from the QR factorization of a Gaussian matrix, columns signed so that
/// `R` has a positive diagonal.
#[derive(Debug, Default, Clone, Copy)]
pub struct OrthSampler;

fn orthogonal(n: usize, seed: u64) -> DMatrix<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let qr = gaussian(n, &mut rng).qr();
    let r = qr.r();
    let mut q = qr.q();
    for (j, mut col) in q.column_iter_mut().enumerate() {
        if r[(j, j)] < 0.0 {
            col.neg_mut();
        }
    }
    q
}

impl GroupSampler for OrthSampler {
    fn name(&self) -> &'static str {
        "orth"
    }

    fn tag(&self) -> GroupTag {
        GroupTag::Orth
    }

    fn sample(&self, n: usize, seed: u64) -> Result<GroupElement> {
        check_n(n)?;
        GroupElement::from_matrix(GroupTag::Orth, orthogonal(n, seed))
    }
}

#[derive(Debug, Default, Clone, Copy)]
pub struct SpecOrthSampler;

impl GroupSampler for SpecOrthSampler {
    fn name(&self) -> &'static str {
        "so"
    }

    fn tag(&self) -> GroupTag {
        GroupTag::SpecOrth
    }

    fn sample(&self, n: usize, seed: u64) -> Result<GroupElement> {
        check_n(n)?;
        let mut q = orthogonal(n, seed);
        if q.determinant() < 0.0 {
            q.column_mut(0).neg_mut();
        }
        GroupElement::from_matrix(GroupTag::SpecOrth, q)
    }
}

/// `exp(J S)` for a random symmetric `S` with Frobenius norm at most 1;
/// `J S` is Hamiltonian, so the exponential preserves `J`.
#[derive(Debug, Default, Clone, Copy)]
pub struct SympSampler;

impl GroupSampler for SympSampler {
    fn name(&self) -> &'static str {
        "symp"
    }

    fn tag(&self) -> GroupTag {
        GroupTag::Symp
    }

    fn sample(&self, n: usize, seed: u64) -> Result<GroupElement> {
        let j = symplectic_form(n)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = gaussian(n, &mut rng);
        let mut s = (&g + g.transpose()) * 0.5;
        let norm = s.norm();
        if norm > 1.0 {
            s /= norm;
        }
        GroupElement::from_matrix(GroupTag::Symp, (j * s).exp())
    }
}

pub struct SamplerRegistry {
    samplers: Vec<Box<dyn GroupSampler>>,
}

impl Default for SamplerRegistry {
    fn default() -> Self {
        Self::standard()
    }
}

impl SamplerRegistry {
    pub fn standard() -> Self {
        let mut r = SamplerRegistry { samplers: Vec::new() };
        r.register(Box::new(SymSampler));
        r.register(Box::new(OrthSampler));
        r.register(Box::new(SympSampler));
        r.register(Box::new(SpecOrthSampler));
        r
    }

    pub fn register(&mut self, sampler: Box<dyn GroupSampler>) {
        self.samplers.retain(|s| s.name() != sampler.name());
        self.samplers.push(sampler);
    }

    pub fn get(&self, name: &str) -> Result<&dyn GroupSampler> {
        self.samplers
            .iter()
            .find(|s| s.name() == name)
            .map(|s| s.as_ref())
            .ok_or_else(|| Error::Unknown {
                what: "sampler",
                name: name.into(),
            })
    }

    pub fn for_tag(&self, tag: GroupTag) -> Result<&dyn GroupSampler> {
        self.samplers
            .iter()
            .find(|s| s.tag() == tag)
            .map(|s| s.as_ref())
            .ok_or_else(|| Error::Unknown {
                what: "sampler",
                name: tag.name().into(),
            })
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.samplers.iter().map(|s| s.name()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn samples_lie_in_their_groups() {
        let reg = SamplerRegistry::standard();
        for seed in 0..10 {
            assert_eq!(reg.get("sym").unwrap().sample(3, seed).unwrap().defect(), 0.0);
            assert!(reg.get("orth").unwrap().sample(4, seed).unwrap().defect() < 1e-10);
            let so = reg.get("so").unwrap().sample(3, seed).unwrap();
            assert!(so.defect() < 1e-10);
            for n in [2, 4] {
                assert!(reg.get("symp").unwrap().sample(n, seed).unwrap().defect() < 1e-10);
            }
        }
        assert_eq!(SympSampler.sample(3, 0), Err(Error::OddDimension { n: 3 }));
    }

    #[test]
    fn seeded() {
        assert_eq!(OrthSampler.sample(3, 7).unwrap(), OrthSampler.sample(3, 7).unwrap());
        assert_ne!(OrthSampler.sample(3, 7).unwrap(), OrthSampler.sample(3, 8).unwrap());
    }
}
