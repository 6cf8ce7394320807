use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use weightgrowth::seq::WeightSequence;
use weightgrowth::theorems::{sweep, Consistency, TheoremId};
use weightgrowth::TruncationConfig;

// adversarial log-convex shapes: mixtures of ramps, plateaus, bursts
fn adversarial(rng: &mut ChaCha8Rng, p_max: usize) -> WeightSequence {
    let mut log_mu = vec![0.0];
    let mut level: f64 = 0.0;
    let mut mode = 0usize;
    let mut mode_left = 0usize;
    let mut ramp = 0.0f64;
    for p in 1..=p_max {
        if mode_left == 0 {
            mode = rng.random_range(0..4usize);
            mode_left = rng.random_range(3..40usize);
            ramp = match mode {
                0 => 0.0,                                   // plateau
                1 => 0.3 * rng.random::<f64>(),             // gentle ramp
                2 => 2.0 * rng.random::<f64>(),             // burst
                _ => 0.02 + 0.2 * rng.random::<f64>() / p as f64, // slowdown
            };
        }
        mode_left -= 1;
        level += ramp;
        log_mu.push(level);
    }
    WeightSequence::from_log_quotients_detect(&log_mu, "adversarial").unwrap()
}

#[test]
fn stress_consistency() {
    let mut total_violated = 0;
    for seed in 0..100u64 {
        let mut cfg = TruncationConfig::with_p(200);
        cfg.seed = seed;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let corpus: Vec<WeightSequence> = (0..25).map(|i| adversarial(&mut rng, 150 + 10 * (i % 12))).collect();
        let (summary, reports) =
            sweep(&corpus, &[TheoremId::Chain, TheoremId::Alpha0Theorem], &cfg).unwrap();
        if summary.violated > 0 {
            for (i, r) in reports.iter().enumerate() {
                if r.consistency == Consistency::Violated {
                    println!("seed {seed} member {} {}: {:?}", i / 2, r.theorem_id, r.violation_detail);
                    for a in &r.assertions {
                        println!("   {}: {} | {:?} | {}", a.label, a.verdict.status, a.verdict.witnesses, a.verdict.notes);
                    }
                }
            }
        }
        total_violated += summary.violated;
        println!("seed {seed}: consistent {} violated {} inconclusive {}", summary.consistent, summary.violated, summary.inconclusive);
    }
    assert_eq!(total_violated, 0);
}
