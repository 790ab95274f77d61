//! Shared helpers for the integration and acceptance suites.

#![allow(dead_code)]

use std::path::PathBuf;
use std::process::Command;

use curr_core::{IntChain, SimplicialComplex, SplitMix64};

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

pub fn load_complex(name: &str) -> SimplicialComplex {
    let text = std::fs::read_to_string(fixture(name)).unwrap();
    curr::scx::parse_scx(&text).unwrap()
}

pub fn edge1() -> SimplicialComplex {
    load_complex("edge1.scx")
}

pub fn tri() -> SimplicialComplex {
    load_complex("tri.scx")
}

pub fn square() -> SimplicialComplex {
    load_complex("square.scx")
}

/// 2×3 grid with jittered coordinates: 6 vertices, 9 edges, 4 triangles.
pub fn jittered_grid(seed: u64) -> SimplicialComplex {
    let mut rng = SplitMix64::new(seed);
    let mut jitter = || 0.3 * rng.unit_f64() - 0.15;
    let mut coords = Vec::new();
    for j in 0..2 {
        for i in 0..3 {
            coords.push(i as f64 + jitter());
            coords.push(j as f64 + jitter());
        }
    }
    let triangles = vec![vec![0, 1, 4], vec![0, 3, 4], vec![1, 2, 5], vec![1, 4, 5]];
    SimplicialComplex::build(2, coords, &triangles).unwrap()
}

/// Hexagon fan with jittered ring: 7 vertices, 12 edges, 6 triangles
/// (25 simplices in total).
pub fn jittered_fan(seed: u64) -> SimplicialComplex {
    let mut rng = SplitMix64::new(seed);
    let mut coords = vec![0.0, 0.0];
    for k in 0..6 {
        let angle = (k as f64) * std::f64::consts::FRAC_PI_3 + 0.12 * rng.unit_f64();
        let radius = 1.0 + 0.2 * rng.unit_f64();
        coords.push(radius * angle.cos());
        coords.push(radius * angle.sin());
    }
    let triangles: Vec<Vec<usize>> = (0..6)
        .map(|k| vec![0, k + 1, (k + 1) % 6 + 1])
        .collect();
    SimplicialComplex::build(2, coords, &triangles).unwrap()
}

/// Random sparse integer chain with coefficients in `[-max_coeff, max_coeff]`.
pub fn random_chain(
    rng: &mut SplitMix64,
    complex: &SimplicialComplex,
    dim: usize,
    max_coeff: i64,
) -> IntChain {
    IntChain::from_entries(
        dim,
        (0..complex.simplex_count(dim)).map(|j| (j, rng.int_in(-max_coeff, max_coeff))),
    )
    .unwrap()
}

pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the built `curr` binary with the given arguments.
pub fn run_curr(args: &[&str]) -> CliOutput {
    let output = Command::new(env!("CARGO_BIN_EXE_curr"))
        .args(args)
        .output()
        .expect("spawn curr");
    CliOutput {
        code: output.status.code().unwrap_or(-1),
        stdout: String::from_utf8(output.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(output.stderr).expect("utf-8 stderr"),
    }
}

pub fn fixture_arg(name: &str) -> String {
    fixture(name).to_string_lossy().into_owned()
}
