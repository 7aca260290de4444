//! Seeded random instance generation for the randomized suite phase.
//!
//! Posets are sampled on a fixed linear order, so transitive closure never
//! creates a cycle, and edge inclusion uses an exact rational Bernoulli
//! draw: identical `(n, density, seed)` triples reproduce identical spaces
//! on every platform.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::ratio::Ratio;
use crate::space::SpectralSpace;

/// Size cap keeping brute-force oracles comfortable on random instances.
pub const RANDOM_POINT_BUDGET: usize = 12;

pub fn random_poset(n: usize, density: Ratio, seed: u64) -> Result<SpectralSpace> {
    if n > RANDOM_POINT_BUDGET {
        return Err(Error::InvalidSize(n));
    }
    if density > Ratio::ONE {
        return Err(Error::InvalidDensity(density.to_string()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let names: Vec<String> = (0..n).map(|i| format!("p{i}")).collect();
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random_range(0..density.denom()) < density.numer() {
                pairs.push((names[i].clone(), names[j].clone()));
            }
        }
    }
    SpectralSpace::build(&format!("random-n{n}-s{seed}"), &names, &pairs)
}

/// A monotone image tuple by rejection sampling, falling back to a constant
/// map (always monotone) when rejection keeps missing.
pub fn random_monotone_map(
    source: &SpectralSpace,
    target: &SpectralSpace,
    rng: &mut impl Rng,
) -> Vec<usize> {
    assert!(!target.is_empty());
    for _ in 0..200 {
        let map: Vec<usize> = (0..source.len())
            .map(|_| rng.random_range(0..target.len()))
            .collect();
        if crate::enumerate::map_is_monotone(source, target, &map) {
            return map;
        }
    }
    vec![rng.random_range(0..target.len()); source.len()]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lengths::dimension;
    use crate::morphism::SchemeMorphism;

    #[test]
    fn density_zero_is_discrete() {
        let s = random_poset(6, Ratio::ZERO, 1).unwrap();
        assert_eq!(dimension(&s).unwrap(), 0);
    }

    #[test]
    fn density_one_is_a_chain() {
        let s = random_poset(6, Ratio::ONE, 1).unwrap();
        assert_eq!(dimension(&s).unwrap(), 5);
    }

    #[test]
    fn identical_parameters_reproduce_identical_spaces() {
        let a = random_poset(6, Ratio::new(1, 2), 42).unwrap();
        let b = random_poset(6, Ratio::new(1, 2), 42).unwrap();
        assert!(a.same_structure(&b));
    }

    #[test]
    fn size_and_density_are_validated() {
        assert!(matches!(
            random_poset(13, Ratio::ZERO, 0),
            Err(Error::InvalidSize(13))
        ));
        assert!(matches!(
            random_poset(3, Ratio::new(3, 2), 0),
            Err(Error::InvalidDensity(_))
        ));
    }

    #[test]
    fn random_maps_are_monotone() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let x = random_poset(5, Ratio::new(1, 2), 5).unwrap();
        let y = random_poset(4, Ratio::new(1, 2), 6).unwrap();
        for _ in 0..50 {
            let map = random_monotone_map(&x, &y, &mut rng);
            assert!(SchemeMorphism::from_map(&x, &y, map).is_ok());
        }
    }
}
