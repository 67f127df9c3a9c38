//! Process-wide memo tables keyed by degree.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

pub(crate) struct PerN<T> {
    map: Mutex<BTreeMap<usize, Arc<T>>>,
}

impl<T> PerN<T> {
    pub(crate) const fn new() -> Self {
        PerN {
            map: Mutex::new(BTreeMap::new()),
        }
    }

    /// The value for `n`, computing it outside the lock on first use.
    pub(crate) fn get_or(&self, n: usize, build: impl FnOnce() -> T) -> Arc<T> {
        if let Some(v) = self.map.lock().unwrap().get(&n) {
            return v.clone();
        }
        let v = Arc::new(build());
        self.map.lock().unwrap().entry(n).or_insert(v).clone()
    }

    /// Whether `n` is already present.
    pub(crate) fn contains(&self, n: usize) -> bool {
        self.map.lock().unwrap().contains_key(&n)
    }

    /// Installs a value unless one is present; returns whether it was installed.
    pub(crate) fn insert(&self, n: usize, v: T) -> bool {
        let mut map = self.map.lock().unwrap();
        if map.contains_key(&n) {
            return false;
        }
        map.insert(n, Arc::new(v));
        true
    }
}
