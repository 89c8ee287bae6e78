//! Deterministic workload generators for the benchmarks. Same seed, same
//! data, so runs are comparable across machines and commits.

use neutrorank::{IvnTriplet, Rational, Scalar, SvnTriplet, UnitInterval};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn unit_rational(rng: &mut ChaCha8Rng) -> Rational {
    let denom = rng.gen_range(1..=16);
    Rational::from_ratio(rng.gen_range(0..=denom), denom)
}

fn unit_interval(rng: &mut ChaCha8Rng) -> UnitInterval<Rational> {
    if rng.gen_bool(0.2) {
        return UnitInterval::degenerate(unit_rational(rng)).unwrap();
    }
    let (a, b) = (unit_rational(rng), unit_rational(rng));
    if a <= b {
        UnitInterval::new(a, b).unwrap()
    } else {
        UnitInterval::new(b, a).unwrap()
    }
}

/// Single-valued triplets over small rationals; denominators up to 16 keep
/// key collisions (ties) in the mix.
pub fn svn_rationals(count: usize, seed: u64) -> Vec<SvnTriplet<Rational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            SvnTriplet::new(
                unit_rational(&mut rng),
                unit_rational(&mut rng),
                unit_rational(&mut rng),
            )
            .unwrap()
        })
        .collect()
}

pub fn svn_floats(count: usize, seed: u64) -> Vec<SvnTriplet<f64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| SvnTriplet::new(rng.gen(), rng.gen(), rng.gen()).unwrap())
        .collect()
}

/// Unit intervals, one in five degenerate.
pub fn intervals(count: usize, seed: u64) -> Vec<UnitInterval<Rational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| unit_interval(&mut rng)).collect()
}

pub fn ivn_rationals(count: usize, seed: u64) -> Vec<IvnTriplet<Rational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            IvnTriplet::new(
                unit_interval(&mut rng),
                unit_interval(&mut rng),
                unit_interval(&mut rng),
            )
        })
        .collect()
}

/// Attach synthetic ids, as the ranking entry points expect.
pub fn labeled<T>(items: Vec<T>) -> Vec<(String, T)> {
    items
        .into_iter()
        .enumerate()
        .map(|(index, item)| (format!("alt{index}"), item))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_deterministic() {
        assert_eq!(svn_rationals(50, 1), svn_rationals(50, 1));
        assert_ne!(svn_rationals(50, 1), svn_rationals(50, 2));
        assert_eq!(ivn_rationals(50, 1), ivn_rationals(50, 1));
        assert_eq!(intervals(50, 3), intervals(50, 3));
        assert_eq!(svn_floats(50, 4), svn_floats(50, 4));
    }

    #[test]
    fn labels_are_unique_and_ordered() {
        let items = labeled(svn_rationals(10, 5));
        assert_eq!(items[0].0, "alt0");
        assert_eq!(items[9].0, "alt9");
    }
}
