//! Seeded randomized checks of the engines' invariants.
//!
//! The same seed always draws the same cases, so a report is reproducible.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ghs::{apply_tracked, compare_ghs, enumerate_moves, relocate, validate_ghs, Ghs, Move, SurfaceCollection};
use crate::intersection::linking_intersection;
use crate::surface::{CurveClass, Slope};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random valid GHS of a closed manifold with `thick` thick levels.
pub fn random_ghs(rng: &mut impl Rng, thick: usize, max_genus: u32) -> Ghs {
    let mut levels = vec![SurfaceCollection::empty()];
    for k in 0..thick {
        let parts = rng.gen_range(1..=2);
        levels.push(SurfaceCollection::new((0..parts).map(|_| rng.gen_range(1..=max_genus)).collect()));
        if k + 1 < thick {
            levels.push(SurfaceCollection::new(vec![rng.gen_range(1..=max_genus)]));
        }
    }
    levels.push(SurfaceCollection::empty());
    Ghs::new(levels).expect("generated levels are valid")
}

/// A random GHS together with a random valid move on it.
pub fn random_move(rng: &mut impl Rng) -> (Ghs, Move) {
    loop {
        let thick = rng.gen_range(1..=3);
        let g = random_ghs(rng, thick, 4);
        if let Some(m) = enumerate_moves(&g).choose(rng) {
            return (g, m.clone());
        }
    }
}

/// Outcome of a commuting-pair trial.
pub enum Commutation {
    /// Both orders agree.
    Agree,
    /// Both orders are valid and disagree.
    Disagree(String),
    /// One move no longer applies after the other.
    NotApplicable,
}

/// Applies two moves at different thick levels in both orders.
pub fn commute(g: &Ghs, m1: &Move, m2: &Move) -> Commutation {
    let (Ok(a1), Ok(a2)) = (apply_tracked(g, m1), apply_tracked(g, m2)) else {
        return Commutation::NotApplicable;
    };
    let (Some(m2r), Some(m1r)) = (relocate(m2, &a1.level_map), relocate(m1, &a2.level_map)) else {
        return Commutation::NotApplicable;
    };
    match (apply_tracked(&a1.ghs, &m2r), apply_tracked(&a2.ghs, &m1r)) {
        (Ok(x), Ok(y)) if x.ghs == y.ghs => Commutation::Agree,
        (Ok(x), Ok(y)) => Commutation::Disagree(format!("{g}: {} vs {}", x.ghs, y.ghs)),
        _ => Commutation::NotApplicable,
    }
}

/// A random GHS with moves at two distinct thick levels whose read windows
/// survive each other.
pub fn random_commuting_pair(rng: &mut impl Rng) -> (Ghs, Move, Move) {
    loop {
        let thick = rng.gen_range(3..=4);
        let g = random_ghs(rng, thick, 4);
        let moves = enumerate_moves(&g);
        let (Some(m1), Some(m2)) = (moves.choose(rng), moves.choose(rng)) else { continue };
        if m1.thick_index() == m2.thick_index() {
            continue;
        }
        if let Commutation::NotApplicable = commute(&g, m1, m2) {
            continue;
        }
        return (g, m1.clone(), m2.clone());
    }
}

pub fn random_slope(rng: &mut impl Rng, bound: i64) -> Slope {
    loop {
        let (p, q) = (rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound));
        if let Ok(s) = Slope::new(p, q) {
            return s;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyCheck {
    pub name: &'static str,
    pub trials: usize,
    pub violations: usize,
    pub first_counterexample: Option<String>,
}

impl PropertyCheck {
    fn new(name: &'static str) -> Self {
        PropertyCheck { name, trials: 0, violations: 0, first_counterexample: None }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.trials += 1;
        if !ok {
            self.violations += 1;
            if self.first_counterexample.is_none() {
                self.first_counterexample = Some(describe());
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    pub seed: u64,
    pub checks: Vec<PropertyCheck>,
}

impl PropertyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.violations == 0)
    }
}

/// Move monotonicity, commutation of distant moves and the torus
/// intersection formula, `iterations` trials each.
pub fn property_suite(seed: u64, iterations: usize) -> PropertyReport {
    let mut r = rng(seed);
    let mut mono = PropertyCheck::new("move_monotonicity");
    for _ in 0..iterations {
        let (g, m) = random_move(&mut r);
        let ok = match apply_tracked(&g, &m) {
            Ok(a) => validate_ghs(&a.ghs).is_ok() && compare_ghs(&a.ghs, &g) == std::cmp::Ordering::Less,
            Err(_) => false,
        };
        mono.record(ok, || format!("{g} with {}", serde_json::to_string(&m).unwrap()));
    }
    let mut comm = PropertyCheck::new("move_commutation");
    for _ in 0..iterations {
        let (g, m1, m2) = random_commuting_pair(&mut r);
        let outcome = commute(&g, &m1, &m2);
        comm.record(!matches!(outcome, Commutation::Disagree(_)), || match outcome {
            Commutation::Disagree(s) => s,
            _ => unreachable!(),
        });
    }
    let mut torus = PropertyCheck::new("torus_intersection");
    for _ in 0..iterations {
        let (s, t) = (random_slope(&mut r, 40), random_slope(&mut r, 40));
        let got = linking_intersection(&CurveClass::from_slope(s), &CurveClass::from_slope(t)).unwrap();
        torus.record(got as u64 == s.determinant(&t), || format!("{s} vs {t}: {got}"));
    }
    PropertyReport { seed, checks: vec![mono, comm, torus] }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suite_passes_and_is_deterministic() {
        let a = property_suite(7, 20);
        assert!(a.passed(), "{a:?}");
        assert_eq!(a, property_suite(7, 20));
    }
}
