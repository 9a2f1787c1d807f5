//! Seed-deterministic random bounded ranked posets, used as fuel for the
//! structural property suites.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::label::Label;
use crate::poset::Poset;

/// A bounded ranked poset of length n: single bottom and top, interior
/// levels 1..n-1 with 1..=width elements each. Every non-bottom element
/// covers at least one element of the level below, every non-top element
/// is covered by at least one element of the level above, and further
/// covers are included with probability `density`. Deterministic in seed.
pub fn random_ranked_bounded_poset(n: usize, width: usize, density: f64, seed: u64) -> Poset {
    assert!(n >= 1 && width >= 1);
    assert!(density > 0.0 && density <= 1.0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    // level sizes: bottom and top are singletons
    let mut level_sizes = vec![1usize];
    for _ in 1..n {
        level_sizes.push(rng.random_range(1..=width));
    }
    level_sizes.push(1);

    let mut labels = Vec::new();
    let mut ids: Vec<Vec<u32>> = Vec::new();
    for (lvl, &sz) in level_sizes.iter().enumerate() {
        let mut row = Vec::new();
        for k in 0..sz {
            row.push(labels.len() as u32);
            labels.push(Label::pair(Label::Int(lvl as i64), Label::Int(k as i64)));
        }
        ids.push(row);
    }

    let mut covers = Vec::new();
    for lvl in 1..level_sizes.len() {
        let below = ids[lvl - 1].clone();
        let mut covered_below = vec![false; below.len()];
        for &x in &ids[lvl] {
            let mut any = false;
            for (bi, &b) in below.iter().enumerate() {
                if rng.random_bool(density) {
                    covers.push((b, x));
                    covered_below[bi] = true;
                    any = true;
                }
            }
            if !any {
                let bi = rng.random_range(0..below.len());
                covers.push((below[bi], x));
                covered_below[bi] = true;
            }
        }
        // every element of the lower level needs an upper cover, otherwise
        // a maximal chain would stop short of the top
        for (bi, covered) in covered_below.iter().enumerate() {
            if !covered {
                let xi = rng.random_range(0..ids[lvl].len());
                covers.push((below[bi], ids[lvl][xi]));
            }
        }
    }

    Poset::assemble(labels, covers).expect("generated cover relation is graded and acyclic")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_in_seed() {
        for seed in [0u64, 1, 17, 92] {
            let a = random_ranked_bounded_poset(4, 3, 0.5, seed);
            let b = random_ranked_bounded_poset(4, 3, 0.5, seed);
            assert_eq!(a.labels(), b.labels());
            assert_eq!(a.covers(), b.covers());
        }
    }

    #[test]
    fn always_bounded_and_ranked() {
        for seed in 0..50u64 {
            let p = random_ranked_bounded_poset(4, 4, 0.3, seed);
            assert!(p.is_ranked(), "seed {seed}");
            assert!(p.is_bounded(), "seed {seed}");
            assert_eq!(p.length(), 4);
        }
    }

    #[test]
    fn density_one_connects_adjacent_levels_completely() {
        let p = random_ranked_bounded_poset(3, 3, 1.0, 7);
        let w = crate::catalog::whitney_numbers(&p).unwrap();
        let expected: usize = w
            .windows(2)
            .map(|pair| (pair[0] * pair[1]) as usize)
            .sum();
        assert_eq!(p.covers().len(), expected);
    }

    #[test]
    fn trivial_length_one() {
        let p = random_ranked_bounded_poset(1, 5, 0.9, 3);
        assert_eq!(p.size(), 2);
        assert_eq!(p.length(), 1);
    }
}
