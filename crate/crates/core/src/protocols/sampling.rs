//! Seeded Born-rule sampling of the measurement outcomes.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::error::{Error, Result};

use super::{FlagOutcome, LogicalState, BRANCH_FLAGS};

/// One outcome row of a sampling run.
#[derive(Debug, Clone)]
pub struct MeasurementRecord {
    pub outcome: FlagOutcome,
    pub count: usize,
    pub frequency: f64,
    pub born_probability: f64,
    /// Register state left behind by this outcome (the measurement is
    /// nondemolition).
    pub post_state: LogicalState,
}

#[derive(Debug, Clone)]
pub struct SampleHistogram {
    pub seed: u64,
    pub shots: usize,
    /// Rows in logical branch order (flags (1,1), (1,0), (0,0), (0,1)).
    pub records: [MeasurementRecord; 4],
}

/// Draws `shots` measurement outcomes with a seeded reproducible generator.
pub fn qnd_sample(s: &LogicalState, shots: usize, seed: u64) -> Result<SampleHistogram> {
    if shots == 0 {
        return Err(Error::InvalidArgument("shots must be at least 1".into()));
    }
    let probs = s.born_probabilities();
    let norm: f64 = probs.iter().sum();
    if (norm - 1.0).abs() > 1.0e-12 {
        return Err(Error::NotNormalized((norm - 1.0).abs()));
    }

    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut counts = [0usize; 4];
    for _ in 0..shots {
        let x: f64 = rng.random();
        let mut acc = 0.0;
        let mut chosen = 3;
        for (k, p) in probs.iter().enumerate() {
            acc += p;
            if x < acc {
                chosen = k;
                break;
            }
        }
        counts[chosen] += 1;
    }

    let records = std::array::from_fn(|slot| MeasurementRecord {
        outcome: BRANCH_FLAGS[slot],
        count: counts[slot],
        frequency: counts[slot] as f64 / shots as f64,
        born_probability: probs[slot],
        post_state: LogicalState::basis(slot),
    });
    Ok(SampleHistogram {
        seed,
        shots,
        records,
    })
}
