//! In-process memoization. Weight systems are cached per
//! `(family, rank, highest weight)` and pairwise tensor decompositions per
//! unordered factor pair; both stores are guarded by mutexes so concurrent
//! scans see results identical to serial execution.

use super::{Decomposition, WeightSystem};
use crate::rootdata::{Family, Weight};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

type WsKey = (Family, usize, Weight);
type PairKey = (Family, usize, Weight, Weight);

fn weight_systems() -> &'static Mutex<HashMap<WsKey, Arc<WeightSystem>>> {
    static STORE: OnceLock<Mutex<HashMap<WsKey, Arc<WeightSystem>>>> = OnceLock::new();
    STORE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn pair_decompositions() -> &'static Mutex<HashMap<PairKey, Arc<Decomposition>>> {
    static STORE: OnceLock<Mutex<HashMap<PairKey, Arc<Decomposition>>>> = OnceLock::new();
    STORE.get_or_init(|| Mutex::new(HashMap::new()))
}

pub(super) fn lookup_weight_system(key: &WsKey) -> Option<Arc<WeightSystem>> {
    weight_systems().lock().unwrap().get(key).cloned()
}

pub(super) fn store_weight_system(key: WsKey, ws: Arc<WeightSystem>) -> Arc<WeightSystem> {
    // First writer wins so concurrent computations of the same system agree.
    Arc::clone(
        weight_systems()
            .lock()
            .unwrap()
            .entry(key)
            .or_insert(ws),
    )
}

pub(super) fn lookup_pair(key: &PairKey) -> Option<Arc<Decomposition>> {
    pair_decompositions().lock().unwrap().get(key).cloned()
}

pub(super) fn store_pair(key: PairKey, d: Arc<Decomposition>) -> Arc<Decomposition> {
    Arc::clone(
        pair_decompositions()
            .lock()
            .unwrap()
            .entry(key)
            .or_insert(d),
    )
}

/// Insert an externally reconstructed weight system (e.g. from a persistent
/// cache). The caller is responsible for having validated it.
pub fn preload_weight_system(ws: WeightSystem) {
    let key = (ws.family(), ws.rank(), ws.highest().clone());
    weight_systems()
        .lock()
        .unwrap()
        .entry(key)
        .or_insert_with(|| Arc::new(ws));
}

/// Snapshot of every cached weight system, canonically ordered.
pub fn cached_weight_systems() -> Vec<Arc<WeightSystem>> {
    let mut all: Vec<_> = weight_systems().lock().unwrap().values().cloned().collect();
    all.sort_by(|a, b| {
        (a.family(), a.rank(), a.highest()).cmp(&(b.family(), b.rank(), b.highest()))
    });
    all
}

/// Drop all memoized results (used by cache-transparency tests).
pub fn clear() {
    weight_systems().lock().unwrap().clear();
    pair_decompositions().lock().unwrap().clear();
}
