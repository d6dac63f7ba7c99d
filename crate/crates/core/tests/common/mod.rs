//! Deterministic random instances shared by the integration tests.
#![allow(dead_code)]

use qcorona::arith::ratio;
use qcorona::corona::{validate, Validation};
use qcorona::{CoronaInstance, HPoly, Quat, Rat, SearchConfig};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `a / b` with `|a| <= 4`, `1 <= b <= 3`.
pub fn small_rat(rng: &mut ChaCha8Rng) -> Rat {
    ratio(rng.random_range(-4..=4), rng.random_range(1..=3))
}

pub fn small_quat(rng: &mut ChaCha8Rng) -> Quat {
    Quat::new(small_rat(rng), small_rat(rng), small_rat(rng), small_rat(rng))
}

/// Small integer quaternion, nonzero.
pub fn int_quat(rng: &mut ChaCha8Rng) -> Quat {
    loop {
        let q = Quat::from_ints(
            rng.random_range(-2..=2),
            rng.random_range(-2..=2),
            rng.random_range(-2..=2),
            rng.random_range(-2..=2),
        );
        if !q.is_zero() {
            return q;
        }
    }
}

/// Polynomial of degree at most `max_degree` with small rational coefficients.
pub fn small_hpoly(rng: &mut ChaCha8Rng, max_degree: usize) -> HPoly {
    let d = rng.random_range(0..=max_degree);
    HPoly::new((0..=d).map(|_| small_quat(rng)).collect())
}

/// `(q - c) * g + d` with `deg g <= max_degree - 1`: degree at most `max_degree`.
pub fn shifted_poly(rng: &mut ChaCha8Rng, max_degree: usize) -> HPoly {
    let c = int_quat(rng);
    let d = rng.random_range(0..max_degree.max(1));
    let g = HPoly::new((0..=d).map(|_| int_quat(rng)).collect());
    &HPoly::linear(&c).star(&g) + &HPoly::constant(int_quat(rng))
}

pub fn random_instance(rng: &mut ChaCha8Rng, n: usize, max_degree: usize) -> CoronaInstance {
    CoronaInstance::new((0..n).map(|_| shifted_poly(rng, max_degree)).collect())
        .expect("generated polynomials are nonzero")
}

/// Random instances together with the ones rejected by `validate` (logged by the caller).
pub struct Generated {
    pub accepted: Vec<CoronaInstance>,
    pub rejected: Vec<(CoronaInstance, Validation)>,
}

/// Draws instances until `count` pass `validate`.
pub fn validated_instances(seed: u64, count: usize, n: usize, max_degree: usize) -> Generated {
    let mut rng = rng(seed);
    let mut out = Generated {
        accepted: Vec::new(),
        rejected: Vec::new(),
    };
    while out.accepted.len() < count {
        let inst = random_instance(&mut rng, n, max_degree);
        match validate(&inst, &SearchConfig::default()).expect("validate runs") {
            Validation::Certified { .. } => out.accepted.push(inst),
            other => out.rejected.push((inst, other)),
        }
    }
    out
}

pub fn fixed_three() -> Vec<HPoly> {
    vec![
        HPoly::linear(&Quat::i()),
        HPoly::linear(&Quat::j()),
        HPoly::linear(&Quat::k()),
    ]
}
