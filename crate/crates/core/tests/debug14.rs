use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use weightgrowth::seq::WeightSequence;

fn adversarial(rng: &mut ChaCha8Rng, p_max: usize) -> WeightSequence {
    let mut log_mu = vec![0.0];
    let mut level: f64 = 0.0;
    let mut mode;
    let mut mode_left = 0usize;
    let mut ramp = 0.0f64;
    for p in 1..=p_max {
        if mode_left == 0 {
            mode = rng.random_range(0..4usize);
            mode_left = rng.random_range(3..40usize);
            ramp = match mode {
                0 => 0.0,
                1 => 0.3 * rng.random::<f64>(),
                2 => 2.0 * rng.random::<f64>(),
                _ => 0.02 + 0.2 * rng.random::<f64>() / p as f64,
            };
        }
        mode_left -= 1;
        level += ramp;
        log_mu.push(level);
    }
    WeightSequence::from_log_quotients_detect(&log_mu, "adversarial").unwrap()
}

#[test]
fn dump() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let corpus: Vec<WeightSequence> = (0..25).map(|_| adversarial(&mut rng, 200)).collect();
    let m = &corpus[14];
    // per-lambda max of f(lambda, p) = ln lambda + root(p) - root(lambda p)
    for lambda in [1usize, 2, 4, 8, 16, 32, 64, 100, 135, 150, 200] {
        let p_cap = 200 / lambda;
        let mut best = f64::NEG_INFINITY;
        let mut bp = 0;
        for p in 1..=p_cap {
            let f = (lambda as f64).ln() + m.root(p) - m.root(lambda * p);
            if f > best { best = f; bp = p; }
        }
        println!("lambda {lambda:>3}: g = {best:.4} at p = {bp}");
    }
    {
        let cfg = weightgrowth::TruncationConfig::with_p(200);
        let v = weightgrowth::conditions::check_raimixed_m(m, &cfg);
        println!("raimixed_m: {} {:?} {}", v.status, v.witnesses, v.notes);
        let omega = weightgrowth::weight_fn::WeightFunction::of_sequence(m).unwrap();
        let mx = weightgrowth::matrix::build_matrix(&omega, &weightgrowth::matrix::DEFAULT_L_GRID, 200).unwrap();
        let mv = weightgrowth::matrix::check_matrix_rai(&mx, &cfg);
        println!("matrix_rai: {} {:?} {}", mv.status, mv.witnesses, mv.notes);
        for xr in [3.0f64] {
            let rx = mx.row(xr).unwrap();
            for yr in [3.0f64, 4.0] {
                let ry = mx.row(yr).unwrap();
                let pw = weightgrowth::conditions::check_rai_between(&rx.seq, &ry.seq, &cfg);
                println!("  pair ({xr},{yr}): {} {:?} {}", pw.status, pw.witnesses, pw.notes);
            }
        }
    }
    // m-root gap at the raimixed witness
    println!("m-gap(1,135) = {:.4}", m.m_root(1) - m.m_root(135));
    println!("m-roots: r(1)={:.3} r(50)={:.3} r(100)={:.3} r(135)={:.3} r(200)={:.3}",
        m.m_root(1), m.m_root(50), m.m_root(100), m.m_root(135), m.m_root(200));
}
