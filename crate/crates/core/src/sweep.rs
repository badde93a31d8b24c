//! Data-parallel maps with a sequential fallback, and the oracle-equivalence
//! sweep behind `verify`.
//!
//! With the `parallel` feature (on by default) [`Mode::Parallel`] fans out
//! over a rayon pool; without it every mode runs sequentially.

use crate::altcond::ClosedForm;
use crate::kostant::PartitionCache;
use crate::kwmf::{alt_set_oracle_cached, AltSet};
use crate::rootsys::Algebra;
use crate::weightlat::{weight_in, Basis};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Sequential,
    Parallel,
}

impl Mode {
    pub fn default_mode() -> Mode {
        if cfg!(feature = "parallel") {
            Mode::Parallel
        } else {
            Mode::Sequential
        }
    }
}

/// `items.map(f)` in order, in parallel when enabled.
pub fn map<I, T, F>(mode: Mode, items: &[I], f: F) -> Vec<T>
where
    I: Sync,
    T: Send,
    F: Fn(&I) -> T + Sync + Send,
{
    match mode {
        #[cfg(feature = "parallel")]
        Mode::Parallel => {
            use rayon::prelude::*;
            items.par_iter().map(f).collect()
        }
        _ => items.iter().map(f).collect(),
    }
}

/// Like [`map`], threading a per-worker state built by `init`.
pub fn map_with<I, S, T, G, F>(mode: Mode, items: &[I], init: G, f: F) -> Vec<T>
where
    I: Sync,
    T: Send,
    G: Fn() -> S + Sync + Send,
    F: Fn(&mut S, &I) -> T + Sync + Send,
{
    match mode {
        #[cfg(feature = "parallel")]
        Mode::Parallel => {
            use rayon::prelude::*;
            items.par_iter().map_init(&init, |s, i| f(s, i)).collect()
        }
        _ => {
            let mut s = init();
            items.iter().map(|i| f(&mut s, i)).collect()
        }
    }
}

/// λ coordinates in [−w, w]², row-major; `w = 0` is an empty sweep.
pub fn lambda_points(w: i64) -> Vec<(i64, i64)> {
    if w <= 0 {
        return Vec::new();
    }
    (-w..=w).rev().flat_map(|c2| (-w..=w).map(move |c1| (c1, c2))).collect()
}

/// μ coordinates in [0, mu_max]² satisfying the theorem's hypothesis.
pub fn mu_points(alg: Algebra, mu_max: i64) -> Vec<(i64, i64)> {
    let ok = |n: i64, m: i64| match alg {
        Algebra::B2 => m % 2 == 0,
        Algebra::C2 => n % 2 == 0,
        Algebra::D2 => n % 2 == 0 && m % 2 == 0,
        Algebra::A2 | Algebra::G2 => true,
    };
    (0..=mu_max.max(-1))
        .flat_map(|n| (0..=mu_max).map(move |m| (n, m)))
        .filter(|&(n, m)| ok(n, m))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PointResult {
    pub lambda: (i64, i64),
    pub mu: (i64, i64),
    pub closed: AltSet,
    pub oracle: AltSet,
}

impl PointResult {
    pub fn agrees(&self) -> bool {
        self.closed == self.oracle
    }
}

#[derive(Clone, Debug)]
pub struct SweepReport {
    pub algebra: Algebra,
    pub results: Vec<PointResult>,
}

impl SweepReport {
    pub fn points(&self) -> usize {
        self.results.len()
    }

    pub fn mismatches(&self) -> usize {
        self.results.iter().filter(|r| !r.agrees()).count()
    }

    pub fn summary(&self) -> String {
        format!("{} mismatches / {} points", self.mismatches(), self.points())
    }
}

/// Compares `form` with the oracle for every λ in [−w, w]² and every μ from
/// [`mu_points`], both in the usual coordinates for the algebra.
pub fn verify_with(form: &ClosedForm, lambda_window: i64, mu_max: i64, mode: Mode) -> SweepReport {
    let alg = form.algebra;
    let lambdas = lambda_points(lambda_window);
    let mus: Vec<_> = mu_points(alg, mu_max)
        .into_iter()
        .map(|c| (c, weight_in(alg, Basis::mu_default(alg), c)))
        .collect();
    let rows = map_with(
        mode,
        &lambdas,
        || PartitionCache::new(alg),
        |cache, &lc| {
            let lambda = weight_in(alg, Basis::lambda_default(alg), lc);
            mus.iter()
                .map(|&(mc, mu)| PointResult {
                    lambda: lc,
                    mu: mc,
                    closed: form.alt_set(&lambda, &mu),
                    oracle: alt_set_oracle_cached(cache, &lambda, &mu),
                })
                .collect::<Vec<_>>()
        },
    );
    SweepReport { algebra: alg, results: rows.into_iter().flatten().collect() }
}

pub fn verify(alg: Algebra, lambda_window: i64, mu_max: i64, mode: Mode) -> SweepReport {
    verify_with(ClosedForm::standard(alg), lambda_window, mu_max, mode)
}
