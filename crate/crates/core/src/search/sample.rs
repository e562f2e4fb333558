use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::covers::{Base, CoverDatum};
use crate::groups::FiniteGroup;

/// Up to `count` valid covers of `base` with uniformly drawn free monodromy
/// entries, reproducible from `seed`. Draws that are disconnected or have a
/// trivial puncture image are discarded; gives up after `max_draws` draws.
pub fn random_covers(
    g: &Arc<FiniteGroup>,
    base: Base,
    count: usize,
    seed: u64,
    max_draws: usize,
) -> Vec<CoverDatum> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = g.order();
    let mut out = Vec::with_capacity(count);
    for _ in 0..max_draws {
        if out.len() == count {
            break;
        }
        let handles: Vec<(usize, usize)> = (0..base.genus)
            .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n)))
            .collect();
        let cs: Vec<usize> = (0..base.punctures.saturating_sub(1))
            .map(|_| rng.gen_range(0..n))
            .collect();
        let d = if base.punctures == 0 {
            CoverDatum::new(g.clone(), handles, cs)
        } else {
            CoverDatum::completing_last(g.clone(), handles, cs)
        };
        if let Ok(d) = d {
            if d.puncture_images().iter().all(|&c| c != 0) {
                out.push(d);
            }
        }
    }
    out
}
