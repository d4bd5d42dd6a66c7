//! Exit criteria for the library. Runs every criterion, prints one
//! PASS/FAIL line each, and exits nonzero if any fails.

mod common;

use std::f64::consts::{FRAC_1_SQRT_2, PI, SQRT_2};

use common::*;
use ecg_core::acquisition::{read_wav, write_wav, ChannelSelect, Sinusoid, SynthConfig, WavFormat};
use ecg_core::detection::{compute_bpm, count_beats_threshold, detect_qrs, QrsDetectorParams};
use ecg_core::filters::{
    apply_filter, design_butterworth_lowpass, design_iir_notch, frequency_response, magnitude_at,
    remove_baseline, remove_powerline, single_sided_spectrum, IirCoefficients, NotchSpec,
};
use ecg_core::frontend::{
    cascade_output_noise, inverting_gain, rc_cutoff, verify_gain_table, CascadeStage, CheckStatus,
};
use ecg_core::hrv::{hrv_statistics, poincare, rr_spectrum, RrSeries};
use ecg_core::EcgRecord;
use rand::Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn c01_gain_table() -> Outcome {
    let rows = verify_gain_table();
    let worst = rows.iter().map(|r| r.relative_error()).fold(0.0, f64::max);
    let all = rows.iter().all(|r| r.status == CheckStatus::Pass);
    ensure(
        all && rows.len() == 18 && worst <= 0.005,
        format!(
            "{} pairs, worst relative error {worst:.2e} (limit 5e-3)",
            rows.len()
        ),
    )
}

fn c02_rc_corners() -> Outcome {
    let cases = [
        (3.18e6, 1e-6, 0.05),
        (106e3, 10e-9, 150.0),
        (10e3, 106e-9, 150.0),
    ];
    let mut detail = Vec::new();
    let mut ok = true;
    for (r, c, target) in cases {
        let f = rc_cutoff(r, c).map_err(|e| e.to_string())?;
        let rel = (f / target - 1.0).abs();
        ok &= rel <= 0.01;
        detail.push(format!("{f:.5} Hz vs {target} ({rel:.2e})"));
    }
    ensure(ok, detail.join("; "))
}

fn c03_stage_gains() -> Outcome {
    let dc = inverting_gain(125e3, 5e3).map_err(|e| e.to_string())?;
    let drl = inverting_gain(1e6, 25e3).map_err(|e| e.to_string())?;
    ensure(
        dc == 25.0 && drl == 40.0,
        format!("DC shift {dc}, DRL {drl}"),
    )
}

fn c04_cascade_noise() -> Outcome {
    let st = |g, n| CascadeStage {
        gain: g,
        input_noise: n,
    };
    let fixed = cascade_output_noise(&[st(10.0, 1.0), st(5.0, 1.0), st(2.0, 1.0)])
        .map_err(|e| e.to_string())?;
    let mut r = rng(4);
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let len = r.random_range(1..=10);
        let gains: Vec<f64> = (0..len).map(|_| r.random_range(0.1..20.0)).collect();
        let noises: Vec<f64> = (0..len).map(|_| r.random_range(0.0..5.0)).collect();
        let stages: Vec<_> = gains.iter().zip(&noises).map(|(&g, &n)| st(g, n)).collect();
        let fold = cascade_output_noise(&stages).map_err(|e| e.to_string())?;
        let closed = closed_form_cascade(&gains, &noises);
        worst = worst.max(((fold - closed) / closed.abs().max(1.0)).abs());
    }
    ensure(
        fixed == 112.0 && worst <= 1e-12,
        format!(
            "(10,5,2)/(1,1,1) -> {fixed}; worst fold/closed-form gap {worst:.2e} over 100 cascades"
        ),
    )
}

fn c05_butterworth() -> Outcome {
    let c = design_butterworth_lowpass(2, 0.002).map_err(|e| e.to_string())?;
    let dc = magnitude_at(&c, 0.0);
    let half = magnitude_at(&c, 0.002);
    let resp = frequency_response(&c, 4096, 2.0).map_err(|e| e.to_string())?;
    let monotone = resp.magnitude.windows(2).all(|w| w[1] <= w[0] + 1e-15);
    ensure(
        (dc - 1.0).abs() <= 1e-6 && (half - FRAC_1_SQRT_2).abs() <= 1e-6 && monotone,
        format!("|H(0)| = {dc:.9}, |H(wn)| = {half:.9}, monotone over 4096 points: {monotone}"),
    )
}

fn c06_notch() -> Outcome {
    let c = design_iir_notch(NotchSpec::new(0.33, 0.1).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    let at_w0 = magnitude_at(&c, 0.33);
    let dc = magnitude_at(&c, 0.0);
    let nyq = magnitude_at(&c, 1.0);
    let g = |f: f64| magnitude(c.b(), c.a(), f) - FRAC_1_SQRT_2;
    let lo = bisect(1e-6, 0.33, g);
    let hi = bisect(0.33, 1.0 - 1e-6, g);
    let width = hi - lo;
    ensure(
        at_w0 < 1e-10
            && (dc - 1.0).abs() <= 1e-9
            && (nyq - 1.0).abs() <= 1e-9
            && (width - 0.1).abs() <= 0.005,
        format!(
            "|H(w0)| = {at_w0:.1e}, |H(0)| = {dc:.12}, |H(1)| = {nyq:.12}, -3 dB width {width:.6}"
        ),
    )
}

fn c07_mains_removal() -> Outcome {
    let clean_cfg = SynthConfig::new(72.0, 60.0, 500.0);
    let mut noisy_cfg = clean_cfg.clone();
    noisy_cfg.mains = Sinusoid::new(0.5, 50.0);
    let (clean, _) = synth(&clean_cfg);
    let (noisy, _) = synth(&noisy_cfg);
    let (refined, _) = remove_powerline(&noisy, 50.0, 2.0).map_err(|e| e.to_string())?;
    let before = single_sided_spectrum(&noisy)
        .map_err(|e| e.to_string())?
        .amplitude_at(50.0);
    let after = single_sided_spectrum(&refined)
        .map_err(|e| e.to_string())?
        .amplitude_at(50.0);
    let atten_db = 20.0 * (before / after).log10();
    let clean_count = count_beats_threshold(&clean, 1.0);
    let refined_count = count_beats_threshold(&refined, 1.0);
    ensure(
        atten_db >= 30.0 && clean_count.abs_diff(refined_count) <= 1,
        format!(
            "50 Hz attenuated {atten_db:.1} dB; beats clean {clean_count}, refined {refined_count}"
        ),
    )
}

fn c08_beat_counting() -> Outcome {
    let mut ok = true;
    let mut detail = Vec::new();
    for bpm in [48.0, 60.0, 72.0, 120.0] {
        let (rec, truth) = synth(&SynthConfig::new(bpm, 60.0, 500.0));
        let count = count_beats_threshold(&rec, 1.0);
        let measured = compute_bpm(count, rec.duration_s()).map_err(|e| e.to_string())?;
        ok &= count.abs_diff(truth.beat_count()) <= 1 && (measured - bpm).abs() <= 2.0;
        detail.push(format!(
            "{bpm}: {count}/{} -> {measured:.1} bpm",
            truth.beat_count()
        ));
    }
    ensure(ok, detail.join("; "))
}

fn c09_qrs_robustness() -> Outcome {
    let params = QrsDetectorParams {
        rough_highest_hr_bpm: 150.0,
        initial_threshold: 0.75,
        threshold_factor: 0.5,
    };
    let mut worst_sens: f64 = 1.0;
    let mut worst_prec: f64 = 1.0;
    for seed in 0..10 {
        let mut cfg = SynthConfig::new(72.0, 60.0, 500.0);
        let r_amp = cfg.wave_set.r.amplitude;
        cfg.noise_sigma = 0.05 * r_amp;
        cfg.baseline_wander = Sinusoid::new(0.3 * r_amp, 0.2);
        cfg.rng_seed = seed;
        let (rec, truth) = synth(&cfg);
        let (corrected, _) = remove_baseline(&rec).map_err(|e| e.to_string())?;
        let ann = detect_qrs(&corrected, &params).map_err(|e| e.to_string())?;
        let (tp, fp, fneg) = match_beats(&truth.beat_times_s, ann.times_s(), 0.05);
        worst_sens = worst_sens.min(tp as f64 / (tp + fneg) as f64);
        worst_prec = worst_prec.min(tp as f64 / (tp + fp).max(1) as f64);
    }
    ensure(
        worst_sens >= 0.95 && worst_prec >= 0.95,
        format!("worst seed: sensitivity {worst_sens:.3}, precision {worst_prec:.3}"),
    )
}

fn c10_filter_oracle() -> Outcome {
    let mut r = rng(10);
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let (b, a) = random_stable_biquad(&mut r);
        let x: Vec<f64> = (0..256).map(|_| r.random_range(-1.0..1.0)).collect();
        let coeffs = IirCoefficients::new(b.clone(), a.clone()).map_err(|e| e.to_string())?;
        let rec = EcgRecord::new(x.clone(), 1.0, "").map_err(|e| e.to_string())?;
        let y = apply_filter(&coeffs, &rec).map_err(|e| e.to_string())?;
        let oracle = naive_filter(&b, &a, &x);
        for (p, q) in y.samples().iter().zip(&oracle) {
            worst = worst.max((p - q).abs());
        }
    }
    ensure(
        worst <= 1e-9,
        format!("max abs gap {worst:.2e} over 100 biquads x 256 samples"),
    )
}

fn c11_spectrum() -> Outcome {
    let fs = 750.0;
    let n = 750 * 4; // eight whole periods of 2 Hz
    let x: Vec<f64> = (0..n)
        .map(|i| (2.0 * PI * 2.0 * i as f64 / fs).sin())
        .collect();
    let rec = EcgRecord::new(x, fs, "").map_err(|e| e.to_string())?;
    let spec = single_sided_spectrum(&rec).map_err(|e| e.to_string())?;
    let (pf, pa) = spec.peak().ok_or("empty spectrum")?;

    let mut r = rng(11);
    let y: Vec<f64> = (0..512).map(|_| r.random_range(-1.0..1.0)).collect();
    let energy = y.iter().map(|v| v * v).sum::<f64>() / y.len() as f64;
    let dft_energy = naive_dft(&y)
        .iter()
        .map(|(re, im)| re * re + im * im)
        .sum::<f64>()
        / (y.len() * y.len()) as f64;
    let parseval = (energy - dft_energy).abs();
    ensure(
        (pf - 2.0).abs() < 1e-12 && (pa - 1.0).abs() <= 0.01 && parseval <= 1e-9,
        format!("peak {pa:.6} at {pf} Hz; Parseval gap {parseval:.2e}"),
    )
}

fn c12_hrv_identities() -> Outcome {
    let constant = RrSeries::new(vec![0.85; 50]).map_err(|e| e.to_string())?;
    let s = hrv_statistics(&constant).map_err(|e| e.to_string())?;
    let p = poincare(&constant).map_err(|e| e.to_string())?;
    let zeros = [s.sdnn_s, s.rmssd_s, p.sd1_s, p.sd2_s];
    let const_ok = zeros.iter().all(|v| v.abs() <= 1e-12);

    let mut r = rng(12);
    let (mut worst_rmssd, mut worst_lag): (f64, f64) = (0.0, 0.0);
    for _ in 0..100 {
        let len = r.random_range(3..400);
        let v: Vec<f64> = (0..len).map(|_| r.random_range(0.4..1.6)).collect();
        let rr = RrSeries::new(v.clone()).map_err(|e| e.to_string())?;
        let s = hrv_statistics(&rr).map_err(|e| e.to_string())?;
        let p = poincare(&rr).map_err(|e| e.to_string())?;
        worst_rmssd = worst_rmssd.max((s.rmssd_s - p.sd1_s * SQRT_2).abs());
        // population spread of every coordinate value in the Poincaré set
        let coords: Vec<f64> = v[..len - 1].iter().chain(&v[1..]).copied().collect();
        let sdnn_pair = pop_std(&coords);
        let lag = p.sd1_s.powi(2) + p.sd2_s.powi(2) - 2.0 * sdnn_pair.powi(2);
        worst_lag = worst_lag.max(lag.abs());
    }
    ensure(
        const_ok && worst_rmssd <= 1e-12 && worst_lag <= 1e-9,
        format!(
            "constant series all zero: {const_ok}; rmssd-sd1√2 gap {worst_rmssd:.1e}; lag-one gap {worst_lag:.1e}"
        ),
    )
}

fn c13_wav_round_trip() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut r = rng(13);
    let mut worst = [0.0f64; 2];
    for i in 0..100 {
        let len = r.random_range(1..2000);
        let x: Vec<f64> = (0..len).map(|_| r.random_range(-1.0..=1.0)).collect();
        let rec = EcgRecord::new(x, 8000.0, "").map_err(|e| e.to_string())?;
        for (slot, bits) in [(0, 8u16), (1, 16u16)] {
            let path = dir.path().join(format!("{i}_{bits}.wav"));
            let fmt = WavFormat::new(8000, 1, bits).map_err(|e| e.to_string())?;
            write_wav(&rec, &path, fmt).map_err(|e| e.to_string())?;
            let back = read_wav(&path, ChannelSelect::Mono).map_err(|e| e.to_string())?;
            let lsb = if bits == 8 {
                1.0 / 128.0
            } else {
                1.0 / 32768.0
            };
            for (p, q) in rec.samples().iter().zip(back.samples()) {
                worst[slot] = worst[slot].max((p - q).abs() / lsb);
            }
        }
    }
    ensure(
        worst[0] <= 1.0 && worst[1] <= 1.0,
        format!(
            "worst error in LSB: 8-bit {:.3}, 16-bit {:.3}",
            worst[0], worst[1]
        ),
    )
}

fn modulated_rr(freq_hz: f64) -> RrSeries {
    let mut t = 0.0;
    let v = (0..300)
        .map(|_| {
            let rr = 1.0 + 0.05 * (2.0 * PI * freq_hz * t).sin();
            t += rr;
            rr
        })
        .collect();
    RrSeries::new(v).unwrap()
}

fn c14_band_discrimination() -> Outcome {
    let lf = rr_spectrum(&modulated_rr(0.1), 4.0).map_err(|e| e.to_string())?;
    let hf = rr_spectrum(&modulated_rr(0.3), 4.0).map_err(|e| e.to_string())?;
    let r1 = lf.lf_power / lf.hf_power;
    let r2 = hf.hf_power / hf.lf_power;
    ensure(
        r1 > 10.0 && r2 > 10.0,
        format!("0.1 Hz: LF/HF {r1:.1}; 0.3 Hz: HF/LF {r2:.1}"),
    )
}

fn main() {
    let criteria: [Criterion; 14] = [
        ("1  AD620 gain table within 0.5%", c01_gain_table),
        ("2  RC corners within 1%", c02_rc_corners),
        ("3  stage gains 25 and 40", c03_stage_gains),
        ("4  cascade noise fold = closed form", c04_cascade_noise),
        ("5  Butterworth(2, 0.002) response", c05_butterworth),
        ("6  notch(0.33, 0.1) response", c06_notch),
        ("7  mains removal end to end", c07_mains_removal),
        ("8  threshold beat counting", c08_beat_counting),
        ("9  QRS detector under noise and wander", c09_qrs_robustness),
        ("10 apply_filter vs difference equation", c10_filter_oracle),
        ("11 spectrum scaling and Parseval", c11_spectrum),
        ("12 HRV identities", c12_hrv_identities),
        ("13 WAV round trip within 1 LSB", c13_wav_round_trip),
        (
            "14 RR spectrum band discrimination",
            c14_band_discrimination,
        ),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("[PASS] {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] {name}: {detail}");
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
