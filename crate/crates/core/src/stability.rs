//! Seeded perturbation trials checking `d_B <= d_E`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::diagram::{bottleneck_all, diagram_of};
use crate::digraph::{build_pph_input, WeightedDigraph};
use crate::extended::ExtendedError;
use crate::hypergraph::{build_hyper_input, FilteredHypergraph};
use crate::linalg::PrimeField;

#[derive(Clone, Copy, Debug)]
pub struct TrialConfig {
    pub p_max: usize,
    pub field: PrimeField,
    pub clearing: bool,
    pub delta: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TrialOutcome {
    pub seed: u64,
    /// Largest change applied to any weight.
    pub input_distance: f64,
    /// Bottleneck distance per dimension `0..=p_max`.
    pub bottleneck: Vec<f64>,
}

impl TrialOutcome {
    pub fn max_bottleneck(&self) -> f64 {
        self.bottleneck.iter().copied().fold(0.0, f64::max)
    }

    pub fn passes(&self, tolerance: f64) -> bool {
        self.bottleneck
            .iter()
            .all(|&d| d <= self.input_distance + tolerance)
    }
}

fn shift<R: Rng>(rng: &mut R, delta: f64) -> f64 {
    if delta > 0.0 {
        rng.gen_range(-delta..=delta)
    } else {
        0.0
    }
}

/// Perturb every edge weight by a uniform value in `[-delta, delta]`.
pub fn stability_trial(
    g: &WeightedDigraph,
    cfg: TrialConfig,
    seed: u64,
) -> Result<TrialOutcome, ExtendedError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut moved: f64 = 0.0;
    let h = g.map_weights(|_, _, w| {
        let nw = w + shift(&mut rng, cfg.delta);
        moved = moved.max((nw - w).abs());
        nw
    });
    let before = diagram_of(&build_pph_input(g, cfg.p_max, cfg.field), cfg.p_max, cfg.clearing)?;
    let after = diagram_of(&build_pph_input(&h, cfg.p_max, cfg.field), cfg.p_max, cfg.clearing)?;
    Ok(TrialOutcome {
        seed,
        input_distance: moved,
        bottleneck: bottleneck_all(&before, &after, cfg.p_max),
    })
}

/// Perturb every hyperedge value by a uniform value in `[-delta, delta]`.
pub fn hyper_stability_trial(
    h: &FilteredHypergraph,
    cfg: TrialConfig,
    seed: u64,
) -> Result<TrialOutcome, ExtendedError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut moved: f64 = 0.0;
    let k = h.map_values(|_, v| {
        let nv = v + shift(&mut rng, cfg.delta);
        moved = moved.max((nv - v).abs());
        nv
    });
    let before = diagram_of(&build_hyper_input(h, cfg.p_max, cfg.field), cfg.p_max, cfg.clearing)?;
    let after = diagram_of(&build_hyper_input(&k, cfg.p_max, cfg.field), cfg.p_max, cfg.clearing)?;
    Ok(TrialOutcome {
        seed,
        input_distance: moved,
        bottleneck: bottleneck_all(&before, &after, cfg.p_max),
    })
}
