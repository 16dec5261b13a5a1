use std::collections::HashMap;
use std::sync::{Arc, Mutex, RwLock};

use rug::Integer;

use super::coefficients::CoefficientSet;
use crate::error::Result;
use crate::progression::{ArithmeticProgression, ConcatenationKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CacheKey {
    pub kind: ConcatenationKind,
    pub first: u64,
    pub step: u64,
    pub length: u32,
}

impl CacheKey {
    pub fn new(kind: ConcatenationKind, prog: ArithmeticProgression, length: u32) -> Self {
        Self {
            kind,
            first: prog.first(),
            step: prog.step(),
            length,
        }
    }
}

type TermKey = (ConcatenationKind, u64, u64, u64);

/// Memoized coefficient sets, one per `(kind, U0, d, l)`.
///
/// Readers never block each other. A missing entry is computed without any
/// lock held (the computation recurses into the cache) and then inserted only
/// if nobody beat us to it, so all callers observe the same `Arc`.
///
/// Evaluated terms are not kept unless a term capacity is configured; the
/// term store then fills up to that many entries and stops growing.
#[derive(Debug, Default)]
pub struct CoefficientCache {
    coefficients: RwLock<HashMap<CacheKey, Arc<CoefficientSet>>>,
    terms: Option<Mutex<HashMap<TermKey, Integer>>>,
    term_capacity: usize,
}

impl CoefficientCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_term_capacity(capacity: usize) -> Self {
        Self {
            coefficients: RwLock::default(),
            terms: (capacity > 0).then(|| Mutex::new(HashMap::new())),
            term_capacity: capacity,
        }
    }

    pub fn get(&self, key: &CacheKey) -> Option<Arc<CoefficientSet>> {
        self.coefficients
            .read()
            .expect("coefficient cache poisoned")
            .get(key)
            .cloned()
    }

    pub fn get_or_try_insert_with<F>(&self, key: CacheKey, build: F) -> Result<Arc<CoefficientSet>>
    where
        F: FnOnce() -> Result<CoefficientSet>,
    {
        if let Some(hit) = self.get(&key) {
            return Ok(hit);
        }
        let fresh = Arc::new(build()?);
        let mut map = self.coefficients.write().expect("coefficient cache poisoned");
        Ok(map.entry(key).or_insert(fresh).clone())
    }

    pub fn len(&self) -> usize {
        self.coefficients.read().expect("coefficient cache poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub(crate) fn term(
        &self,
        kind: ConcatenationKind,
        prog: ArithmeticProgression,
        n: u64,
    ) -> Option<Integer> {
        let terms = self.terms.as_ref()?;
        let key = (kind, prog.first(), prog.step(), n);
        terms.lock().expect("term cache poisoned").get(&key).cloned()
    }

    pub(crate) fn store_term(
        &self,
        kind: ConcatenationKind,
        prog: ArithmeticProgression,
        n: u64,
        value: &Integer,
    ) {
        let Some(terms) = self.terms.as_ref() else {
            return;
        };
        let mut terms = terms.lock().expect("term cache poisoned");
        if terms.len() < self.term_capacity {
            terms
                .entry((kind, prog.first(), prog.step(), n))
                .or_insert_with(|| value.clone());
        }
    }

    pub fn cached_terms(&self) -> usize {
        self.terms
            .as_ref()
            .map_or(0, |t| t.lock().expect("term cache poisoned").len())
    }
}
