//! Reference computations for the integration tests. Each one takes a
//! deliberately different route from the library code it checks.
#![allow(dead_code)]

use std::f64::consts::PI;

use ecg_core::acquisition::{synthesize_ecg, GroundTruth, SynthConfig};
use ecg_core::EcgRecord;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Direct-form I difference equation, one output at a time.
pub fn naive_filter(b: &[f64], a: &[f64], x: &[f64]) -> Vec<f64> {
    let mut y = vec![0.0; x.len()];
    for n in 0..x.len() {
        let mut acc = 0.0;
        for (k, bk) in b.iter().enumerate() {
            if n >= k {
                acc += bk * x[n - k];
            }
        }
        for (k, ak) in a.iter().enumerate().skip(1) {
            if n >= k {
                acc -= ak * y[n - k];
            }
        }
        y[n] = acc / a[0];
    }
    y
}

/// O(N²) DFT returning (re, im) pairs.
pub fn naive_dft(x: &[f64]) -> Vec<(f64, f64)> {
    let n = x.len();
    (0..n)
        .map(|k| {
            x.iter().enumerate().fold((0.0, 0.0), |(re, im), (t, &v)| {
                let ang = -2.0 * PI * ((k * t) % n) as f64 / n as f64;
                (re + v * ang.cos(), im + v * ang.sin())
            })
        })
        .collect()
}

/// `Σ_k n_k Π_{j>=k} A_j`.
pub fn closed_form_cascade(gains: &[f64], noises: &[f64]) -> f64 {
    (0..gains.len())
        .map(|k| noises[k] * gains[k..].iter().product::<f64>())
        .sum()
}

/// Magnitude of `B/A` at normalized frequency `f` (fraction of Nyquist),
/// evaluated with explicit cos/sin sums.
pub fn magnitude(b: &[f64], a: &[f64], f: f64) -> f64 {
    let w = PI * f;
    let eval = |p: &[f64]| {
        let (mut re, mut im) = (0.0, 0.0);
        for (k, c) in p.iter().enumerate() {
            re += c * (w * k as f64).cos();
            im -= c * (w * k as f64).sin();
        }
        (re * re + im * im).sqrt()
    };
    eval(b) / eval(a)
}

/// Find `f` in `[lo, hi]` where `g(f)` crosses zero (sign change assumed).
pub fn bisect(mut lo: f64, mut hi: f64, g: impl Fn(f64) -> f64) -> f64 {
    let mut glo = g(lo);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let gm = g(mid);
        if (gm > 0.0) == (glo > 0.0) {
            lo = mid;
            glo = gm;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Random stable biquad: poles drawn inside radius 0.98.
pub fn random_stable_biquad(r: &mut ChaCha8Rng) -> (Vec<f64>, Vec<f64>) {
    let b: Vec<f64> = (0..3).map(|_| r.random_range(-2.0..2.0)).collect();
    let a = if r.random_bool(0.5) {
        let rad = r.random_range(0.0..0.98);
        let th = r.random_range(0.0..PI);
        vec![1.0, -2.0 * rad * th.cos(), rad * rad]
    } else {
        let p1: f64 = r.random_range(-0.98..0.98);
        let p2: f64 = r.random_range(-0.98..0.98);
        vec![1.0, -(p1 + p2), p1 * p2]
    };
    (b, a)
}

pub fn synth(cfg: &SynthConfig) -> (EcgRecord, GroundTruth) {
    synthesize_ecg(cfg).expect("valid synth config")
}

/// Greedy one-to-one matching of detections to truth within `tol` seconds.
/// Returns (true positives, false positives, false negatives).
pub fn match_beats(truth: &[f64], detected: &[f64], tol: f64) -> (usize, usize, usize) {
    let mut used = vec![false; detected.len()];
    let mut tp = 0;
    for &t in truth {
        let best = detected
            .iter()
            .enumerate()
            .filter(|(i, &d)| !used[*i] && (d - t).abs() <= tol)
            .min_by(|(_, a), (_, b)| (*a - t).abs().total_cmp(&(*b - t).abs()));
        if let Some((i, _)) = best {
            used[i] = true;
            tp += 1;
        }
    }
    (tp, detected.len() - tp, truth.len() - tp)
}

pub fn pop_std(x: &[f64]) -> f64 {
    let m = x.iter().sum::<f64>() / x.len() as f64;
    (x.iter().map(|v| (v - m).powi(2)).sum::<f64>() / x.len() as f64).sqrt()
}
