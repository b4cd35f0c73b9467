//! One PASS/FAIL line per acceptance criterion.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use poincare_core::{
    rotation_su2, transport_massless, Chart, ChartedMomentum, ComplexMatrix2, LightlikeMomentum,
    PolarizationState, SL2CElement, UnitVector3,
};
use poincare_harness::verify::{self, CheckReport, VerifyConfig};

const SEED: u64 = 20_240_601;

struct Line {
    pass: bool,
    text: String,
}

fn run(checks: &[&str], samples: u64) -> (Vec<CheckReport>, Duration) {
    let cfg = VerifyConfig {
        seed: SEED,
        samples,
        checks: Some(checks.iter().map(|s| s.to_string()).collect()),
        ..VerifyConfig::default()
    };
    let start = Instant::now();
    let report = verify::run(&cfg).expect("valid config");
    (report.checks, start.elapsed())
}

fn summarize(title: &str, reports: &[CheckReport], extra: Option<(bool, String)>) -> Line {
    let mut pass = reports.iter().all(|c| c.pass);
    let mut parts: Vec<String> = reports
        .iter()
        .map(|c| {
            let mut s = format!(
                "{} {:.2e}<={:.0e} (n={})",
                c.name, c.max_residual, c.threshold, c.evaluated
            );
            if c.errors > 0 {
                s.push_str(&format!(" errors={}", c.errors));
            }
            s
        })
        .collect();
    if let Some((ok, note)) = extra {
        pass &= ok;
        parts.push(note);
    }
    Line {
        pass,
        text: format!("{title}: {}", parts.join("; ")),
    }
}

fn double_cover_at_fiducial() -> bool {
    let a = SL2CElement::from(rotation_su2(&UnitVector3::Z, std::f64::consts::TAU));
    let cp = ChartedMomentum::new(LightlikeMomentum::fiducial(), Chart::N).unwrap();
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let st = PolarizationState::new(cp, 1, Complex64::new(h, 0.0), Complex64::new(0.0, h)).unwrap();
    let out = transport_massless(&st, &a, None).unwrap();
    *a.matrix() == -ComplexMatrix2::IDENTITY && out == st
}

fn main() -> ExitCode {
    let mut lines = Vec::new();

    let (r, t) = run(&["homomorphism", "metric_preservation"], 100_000);
    let ok = t <= Duration::from_secs(10);
    lines.push(summarize(
        "homomorphism suite",
        &r,
        Some((ok, format!("{:.2}s<=10s", t.as_secs_f64()))),
    ));

    let (r, _) = run(&["coset_image"], 10_000);
    lines.push(summarize("coset representatives", &r, None));

    let (r, _) = run(
        &[
            "overlap_step",
            "overlap_alt",
            "relating_elements",
            "relating_angle",
        ],
        1,
    );
    lines.push(summarize("overlap identities (30x30x7 grid)", &r, None));

    let (r, _) = run(
        &[
            "little_group_closure",
            "little_group_cocycle",
            "little_group_fiducial",
        ],
        10_000,
    );
    lines.push(summarize("little-group closure", &r, None));

    let (r, _) = run(&["conjugation_identity"], 1);
    lines.push(summarize(
        "tangent conjugation identity (50x50 grid)",
        &r,
        None,
    ));

    let (r, _) = run(&["parity_rotation_action"], 600);
    lines.push(summarize(
        "parity-rotation action, lambda 1..3, both charts",
        &r,
        None,
    ));

    let (r, _) = run(
        &["pauli_algebra", "pauli_identification", "sigma2_structure"],
        200,
    );
    lines.push(summarize(
        "Pauli algebra of sigma_ops (100 momenta per chart)",
        &r,
        None,
    ));

    let (r, _) = run(
        &[
            "polarization_parity_involution",
            "massive_parity_involution",
        ],
        1_000,
    );
    lines.push(summarize("parity involution", &r, None));

    let (r, _) = run(
        &[
            "chart_path_independence",
            "polarization_transport_norm",
            "helicity_magnitude",
            "wigner_rotation_in_su2",
            "rest_frame_reduction",
        ],
        10_000,
    );
    lines.push(summarize("transport coherence", &r, None));

    let (r, _) = run(&["double_cover"], 1_000);
    let fiducial = double_cover_at_fiducial();
    lines.push(summarize(
        "double cover",
        &r,
        Some((fiducial, format!("fiducial full turn exact: {fiducial}"))),
    ));

    let full = VerifyConfig {
        seed: SEED,
        samples: 10_000,
        ..VerifyConfig::default()
    };
    let start = Instant::now();
    let first = verify::run(&full).expect("valid config");
    let elapsed = start.elapsed();
    let second = verify::run(&full).expect("valid config");
    let same = serde_json::to_string(&first).unwrap() == serde_json::to_string(&second).unwrap();
    let ok = first.pass && same && elapsed <= Duration::from_secs(60);
    lines.push(Line {
        pass: ok,
        text: format!(
            "full verify battery: {} checks, all pass: {}, {:.2}s<=60s, deterministic: {same}{}",
            first.checks.len(),
            first.pass,
            elapsed.as_secs_f64(),
            if first.pass {
                String::new()
            } else {
                format!(", failing: {}", first.failures().join(","))
            }
        ),
    });

    let mut all = true;
    for l in &lines {
        println!("{} {}", if l.pass { "PASS" } else { "FAIL" }, l.text);
        all &= l.pass;
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
