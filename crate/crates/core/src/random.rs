//! Seeded random complexes for property tests and sweeps.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::{canonical_antichain, Face, SimplicialComplex, VertexId};

fn all_subsets_of_size(n: usize, k: usize) -> Vec<Face> {
    Face::new((0..n as VertexId).collect()).subsets_of_size(k)
}

/// Pure complex on `n` vertices whose facets are the `d`-subsets kept independently
/// with probability `density`. At least one facet is always kept (for `d ≤ n`).
pub fn random_complex(n: usize, d: usize, density: f64, seed: u64) -> SimplicialComplex {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    pure_from_rng(&mut rng, n, d, density)
}

fn pure_from_rng(rng: &mut ChaCha8Rng, n: usize, d: usize, density: f64) -> SimplicialComplex {
    if d > n {
        return SimplicialComplex::void(n);
    }
    let candidates = all_subsets_of_size(n, d);
    let mut facets: Vec<Face> = candidates.iter().filter(|_| rng.gen_bool(density.clamp(0.0, 1.0))).cloned().collect();
    if facets.is_empty() {
        facets.push(candidates.choose(rng).expect("d <= n").clone());
    }
    SimplicialComplex::from_id_facets(n, facets).expect("facets lie in the universe")
}

/// Complex generated by `count` random faces of sizes in `1..=max_size`, usually not pure.
pub fn random_mixed(n: usize, max_size: usize, count: usize, seed: u64) -> SimplicialComplex {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_size = max_size.clamp(1, n.max(1));
    let verts: Vec<VertexId> = (0..n as VertexId).collect();
    let faces: Vec<Face> = (0..count.max(1))
        .map(|_| {
            let k = rng.gen_range(1..=max_size);
            Face::new(verts.choose_multiple(&mut rng, k).copied().collect())
        })
        .collect();
    let (facets, _) = canonical_antichain(faces);
    SimplicialComplex::from_id_facets(n, facets).expect("facets lie in the universe")
}

/// Parameters for [`random_with_spec`]: ranges are inclusive.
#[derive(Clone, Debug)]
pub struct RandomSpec {
    pub n: (usize, usize),
    pub d: (usize, usize),
    pub density: (f64, f64),
}

impl Default for RandomSpec {
    fn default() -> Self {
        RandomSpec {
            n: (4, 8),
            d: (2, 4),
            density: (0.15, 0.7),
        }
    }
}

impl RandomSpec {
    pub fn sample(&self, rng: &mut ChaCha8Rng) -> SimplicialComplex {
        let n = rng.gen_range(self.n.0..=self.n.1);
        let d = rng.gen_range(self.d.0..=self.d.1.min(n));
        let density = rng.gen_range(self.density.0..=self.density.1);
        pure_from_rng(rng, n, d, density)
    }
}

/// Rejection sampling from [`RandomSpec::default`] until `predicate` holds.
pub fn random_with(
    predicate: impl Fn(&SimplicialComplex) -> bool,
    budget: usize,
    seed: u64,
) -> Option<SimplicialComplex> {
    random_with_spec(&RandomSpec::default(), predicate, budget, seed)
}

pub fn random_with_spec(
    spec: &RandomSpec,
    predicate: impl Fn(&SimplicialComplex) -> bool,
    budget: usize,
    seed: u64,
) -> Option<SimplicialComplex> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..budget).map(|_| spec.sample(&mut rng)).find(|c| predicate(c))
}
