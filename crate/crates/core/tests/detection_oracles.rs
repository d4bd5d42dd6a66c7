mod common;

use common::*;
use ecg_core::acquisition::SynthConfig;
use ecg_core::detection::{
    count_beats_threshold, detect_qrs, rr_intervals, DetectorRegistry, DetectorSettings,
    QrsDetectorParams,
};
use ecg_core::EcgRecord;
use proptest::prelude::*;

fn params_for(cfg: &SynthConfig, highest_bpm: f64) -> QrsDetectorParams {
    QrsDetectorParams {
        rough_highest_hr_bpm: highest_bpm,
        initial_threshold: 0.5 * cfg.wave_set.r.amplitude,
        ..QrsDetectorParams::default()
    }
}

#[test]
fn threshold_count_matches_truth_at_72_bpm() {
    let cfg = SynthConfig::new(72.0, 60.0, 250.0);
    let (rec, truth) = synth(&cfg);
    let n = count_beats_threshold(&rec, 1.0);
    assert!(n.abs_diff(truth.beat_count()) <= 1, "{n}");
}

#[test]
fn qrs_at_60_bpm_hits_every_beat_on_time() {
    let cfg = SynthConfig::new(60.0, 60.0, 500.0);
    let (rec, truth) = synth(&cfg);
    let ann = detect_qrs(&rec, &params_for(&cfg, 60.0)).unwrap();
    assert_eq!(ann.len(), 60);
    let (tp, fp, fn_) = match_beats(&truth.beat_times_s, ann.times_s(), 0.05);
    assert_eq!((tp, fp, fn_), (60, 0, 0));
    for (t, d) in truth.beat_times_s.iter().zip(ann.times_s()) {
        assert!((t - d).abs() <= 1.0 / 500.0 + 1e-12, "{t} vs {d}");
    }
    let rr = rr_intervals(&ann).unwrap();
    assert!(rr.intervals_s().iter().all(|r| (0.95..=1.05).contains(r)));
}

#[test]
fn qrs_tolerates_noise_and_wander() {
    for seed in 0..5u64 {
        let mut cfg = SynthConfig::new(75.0, 60.0, 500.0);
        cfg.noise_sigma = 0.05 * cfg.wave_set.r.amplitude;
        cfg.rng_seed = seed;
        let (rec, truth) = synth(&cfg);
        let ann = detect_qrs(&rec, &params_for(&cfg, 150.0)).unwrap();
        let (tp, fp, _) = match_beats(&truth.beat_times_s, ann.times_s(), 0.05);
        let n = truth.beat_count() as f64;
        assert!(tp as f64 >= 0.95 * n, "seed {seed}: {tp}/{n}");
        assert!(fp as f64 <= 0.05 * n, "seed {seed}: {fp} false");
    }
}

#[test]
fn registry_detectors_agree_on_clean_signal() {
    let cfg = SynthConfig::new(72.0, 30.0, 500.0);
    let (rec, truth) = synth(&cfg);
    let registry = DetectorRegistry::with_builtins();
    let settings = DetectorSettings {
        threshold: 1.0,
        qrs: params_for(&cfg, 120.0),
    };
    for name in ["threshold", "qrs"] {
        let det = registry.create(name, &settings).unwrap();
        let ann = det.detect(&rec).unwrap();
        let (tp, fp, fn_) = match_beats(&truth.beat_times_s, ann.times_s(), 0.05);
        assert_eq!((fp, fn_), (0, 0), "{name}: {tp} matched");
    }
    assert!(registry.create("pan-tompkins", &settings).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn qrs_gaps_respect_refractory(
        bpm in 40.0f64..150.0,
        highest in 60.0f64..240.0,
        factor in 0.1f64..0.9,
        seed in 0u64..1000,
    ) {
        let mut cfg = SynthConfig::new(bpm, 20.0, 360.0);
        cfg.noise_sigma = 0.1;
        cfg.rng_seed = seed;
        let (rec, _) = synth(&cfg);
        let params = QrsDetectorParams {
            rough_highest_hr_bpm: highest,
            initial_threshold: 0.3,
            threshold_factor: factor,
        };
        let ann = detect_qrs(&rec, &params).unwrap();
        let min_gap = 60.0 / highest - 1.0 / rec.sample_rate_hz();
        for w in ann.times_s().windows(2) {
            prop_assert!(w[1] > w[0]);
            prop_assert!(w[1] - w[0] >= min_gap - 1e-12);
        }
    }

    #[test]
    fn qrs_on_noise_only_never_overlaps(seed in 0u64..1000) {
        let mut r = rng(seed);
        let samples: Vec<f64> = (0..2000).map(|_| rand::Rng::random_range(&mut r, -1.0..1.0)).collect();
        let rec = EcgRecord::new(samples, 250.0, "noise").unwrap();
        let ann = detect_qrs(&rec, &QrsDetectorParams::default()).unwrap();
        for w in ann.times_s().windows(2) {
            prop_assert!(w[1] - w[0] >= 1.0 - 1.0 / 250.0 - 1e-12);
        }
    }
}
