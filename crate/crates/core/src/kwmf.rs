//! Kostant's weight multiplicity formula and the oracle alternation set.

use crate::kostant::{partition, PartitionCache};
use crate::rootsys::{algebra_data, weyl_group, Algebra, WeylGroup};
use crate::weightlat::Weight;

/// Subset of a Weyl group, bit i standing for the i-th element in canonical order.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AltSet(pub u16);

impl AltSet {
    pub const EMPTY: AltSet = AltSet(0);

    pub fn singleton(i: usize) -> Self {
        AltSet(1 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        it.into_iter().fold(AltSet::EMPTY, |s, i| s.with(i))
    }

    pub fn with(self, i: usize) -> Self {
        AltSet(self.0 | (1 << i))
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0 & (1 << i) != 0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(&self, other: &AltSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..16).filter(move |&i| self.contains(i))
    }

    /// Parses words such as `["1", "s2s1"]` against a group.
    pub fn from_words(group: &WeylGroup, words: &[&str]) -> Option<Self> {
        words
            .iter()
            .map(|w| group.find_word(w))
            .collect::<Option<Vec<_>>>()
            .map(AltSet::from_indices)
    }

    /// `{e, s2}` style, identity written as `identity`.
    pub fn describe(&self, group: &WeylGroup, identity: &str) -> String {
        let names: Vec<String> = self.indices().map(|i| group[i].name_with(identity)).collect();
        format!("{{{}}}", names.join(", "))
    }

    /// Words joined by `.`, identity `e`, empty set as the empty string.
    pub fn dotted(&self, group: &WeylGroup) -> String {
        let names: Vec<String> = self.indices().map(|i| group[i].name()).collect();
        names.join(".")
    }
}

/// σ(λ+ρ) − (μ+ρ) for the element at `idx`.
pub fn xi(alg: Algebra, idx: usize, lambda: &Weight, mu: &Weight) -> Weight {
    let rho = algebra_data(alg).rho;
    weyl_group(alg)[idx].matrix.apply(&(*lambda + rho)) - (*mu + rho)
}

pub fn multiplicity(alg: Algebra, lambda: &Weight, mu: &Weight) -> i64 {
    weyl_group(alg)
        .iter()
        .enumerate()
        .map(|(i, e)| e.sign() * partition(alg, xi(alg, i, lambda, mu)) as i64)
        .sum()
}

pub fn alt_set_oracle(alg: Algebra, lambda: &Weight, mu: &Weight) -> AltSet {
    AltSet::from_indices((0..weyl_group(alg).len()).filter(|&i| partition(alg, xi(alg, i, lambda, mu)) > 0))
}

/// Same as [`alt_set_oracle`], reusing a worker-local partition cache.
pub fn alt_set_oracle_cached(cache: &mut PartitionCache, lambda: &Weight, mu: &Weight) -> AltSet {
    let alg = cache.algebra();
    AltSet::from_indices((0..weyl_group(alg).len()).filter(|&i| cache.get(xi(alg, i, lambda, mu)) > 0))
}

/// The alternating sum with partition values from `cache`, over `set` only.
pub fn alternating_sum_cached(cache: &mut PartitionCache, lambda: &Weight, mu: &Weight, set: AltSet) -> i64 {
    let alg = cache.algebra();
    let group = weyl_group(alg);
    set.indices()
        .map(|i| group[i].sign() * cache.get(xi(alg, i, lambda, mu)) as i64)
        .sum()
}

pub fn multiplicity_cached(cache: &mut PartitionCache, lambda: &Weight, mu: &Weight) -> i64 {
    let all = AltSet::from_indices(0..weyl_group(cache.algebra()).len());
    alternating_sum_cached(cache, lambda, mu, all)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KwmfError {
    #[error("restriction set misses oracle member {0}")]
    MissingMember(String),
}

/// Alternating sum over `set` only; `set` must contain the oracle set.
pub fn multiplicity_restricted(alg: Algebra, lambda: &Weight, mu: &Weight, set: AltSet) -> Result<i64, KwmfError> {
    let group = weyl_group(alg);
    let oracle = alt_set_oracle(alg, lambda, mu);
    if let Some(i) = oracle.indices().find(|&i| !set.contains(i)) {
        return Err(KwmfError::MissingMember(group[i].name()));
    }
    Ok(set
        .indices()
        .map(|i| group[i].sign() * partition(alg, xi(alg, i, lambda, mu)) as i64)
        .sum())
}
