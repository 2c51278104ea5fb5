//! Global partition interning and memoized expansion tables.
//!
//! The exhaustive sweeps multiply millions of Schur-basis pairs; interning
//! partitions into dense u32 ids keeps those inner loops integer-keyed,
//! and the product/skew caches make every basis expansion a one-time cost.
//! All cached values are pure functions of their keys, so concurrent
//! recomputation on a race is harmless.

use std::sync::{Arc, OnceLock, RwLock};

use dashmap::DashMap;
use rustc_hash::FxHashMap;

use crate::partition::Partition;
use crate::schur::lr;

pub(crate) type IdVec = Vec<(u32, i64)>;

struct Tables {
    parts_by_id: RwLock<Vec<Vec<u32>>>,
    ids: DashMap<Vec<u32>, u32>,
    products: DashMap<(u32, u32), Arc<IdVec>>,
    skew_expansions: DashMap<(u32, u32), Arc<IdVec>>,
    h_expansions: DashMap<Vec<u32>, Arc<IdVec>>,
}

fn tables() -> &'static Tables {
    static TABLES: OnceLock<Tables> = OnceLock::new();
    TABLES.get_or_init(|| Tables {
        parts_by_id: RwLock::new(Vec::new()),
        ids: DashMap::new(),
        products: DashMap::new(),
        skew_expansions: DashMap::new(),
        h_expansions: DashMap::new(),
    })
}

pub(crate) fn intern_parts(parts: &[u32]) -> u32 {
    let t = tables();
    if let Some(id) = t.ids.get(parts) {
        return *id;
    }
    let mut table = t.parts_by_id.write().expect("interner poisoned");
    // Re-check under the write lock so ids stay unique.
    if let Some(id) = t.ids.get(parts) {
        return *id;
    }
    let id = table.len() as u32;
    table.push(parts.to_vec());
    t.ids.insert(parts.to_vec(), id);
    id
}

pub(crate) fn intern(p: &Partition) -> u32 {
    intern_parts(p.parts())
}

pub(crate) fn resolve(id: u32) -> Partition {
    let t = tables();
    let table = t.parts_by_id.read().expect("interner poisoned");
    Partition::new(table[id as usize].clone()).expect("interned parts are canonical")
}

fn to_id_vec(map: FxHashMap<Vec<u32>, i64>) -> IdVec {
    let mut v: IdVec = map
        .into_iter()
        .filter(|(_, c)| *c != 0)
        .map(|(parts, c)| (intern_parts(&parts), c))
        .collect();
    v.sort_unstable_by_key(|&(id, _)| id);
    v
}

/// Cached expansion of s_a·s_b over interned ids; symmetric in (a, b).
pub(crate) fn product_expansion(a: u32, b: u32) -> Arc<IdVec> {
    let key = (a.min(b), a.max(b));
    let t = tables();
    if let Some(hit) = t.products.get(&key) {
        return hit.clone();
    }
    let pa = resolve(key.0);
    let pb = resolve(key.1);
    // Enumeration cost grows with the number of strips, so orient the
    // chain along the partition with fewer rows.
    let (mu, nu) = if pb.len() <= pa.len() {
        (pa.parts(), pb.parts())
    } else {
        (pb.parts(), pa.parts())
    };
    let value = Arc::new(to_id_vec(lr::lr_product(mu, nu)));
    t.products.insert(key, value.clone());
    value
}

/// Cached content expansion of the skew shape outer/inner: pairs
/// (ν, c^{outer}_{inner,ν}).
pub(crate) fn skew_expansion(outer: &Partition, inner: &Partition) -> Arc<IdVec> {
    let key = (intern(outer), intern(inner));
    let t = tables();
    if let Some(hit) = t.skew_expansions.get(&key) {
        return hit.clone();
    }
    let value = Arc::new(to_id_vec(lr::skew_lr_contents(
        outer.parts(),
        inner.parts(),
    )));
    t.skew_expansions.insert(key, value.clone());
    value
}

/// Cached Schur expansion of a monomial h_{a1}···h_{am} (indices sorted
/// decreasingly, all >= 1), built by iterated row Pieri insertion.
pub(crate) fn h_monomial_expansion(monomial: &[u32]) -> Arc<IdVec> {
    debug_assert!(monomial.windows(2).all(|w| w[0] >= w[1]));
    debug_assert!(monomial.iter().all(|&k| k >= 1));
    let t = tables();
    if let Some(hit) = t.h_expansions.get(monomial) {
        return hit.clone();
    }
    let value = if monomial.is_empty() {
        Arc::new(vec![(intern_parts(&[]), 1)])
    } else {
        let tail = h_monomial_expansion(&monomial[1..]);
        let mut acc: FxHashMap<Vec<u32>, i64> = FxHashMap::default();
        for &(id, c) in tail.iter() {
            let lam = resolve(id);
            for shape in lr::pieri_row_shapes(lam.parts(), monomial[0]) {
                *acc.entry(shape).or_insert(0) += c;
            }
        }
        Arc::new(to_id_vec(acc))
    };
    t.h_expansions.insert(monomial.to_vec(), value.clone());
    value
}

/// Pointwise product of two sorted id-vectors through the product cache.
pub(crate) fn multiply_id_vecs(a: &[(u32, i64)], b: &[(u32, i64)]) -> IdVec {
    let mut acc: FxHashMap<u32, i64> = FxHashMap::default();
    for &(ia, ca) in a {
        for &(ib, cb) in b {
            let scale = ca * cb;
            for &(il, cl) in product_expansion(ia, ib).iter() {
                *acc.entry(il).or_insert(0) += scale * cl;
            }
        }
    }
    let mut v: IdVec = acc.into_iter().filter(|(_, c)| *c != 0).collect();
    v.sort_unstable_by_key(|&(id, _)| id);
    v
}

/// Exported snapshot of the product cache, resolved back to partitions:
/// (μ, ν, expansion) triples. Used for the optional on-disk cache.
pub(crate) fn export_products() -> Vec<(Partition, Partition, Vec<(Partition, i64)>)> {
    let t = tables();
    let mut out: Vec<(Partition, Partition, Vec<(Partition, i64)>)> = t
        .products
        .iter()
        .map(|entry| {
            let (a, b) = *entry.key();
            let expansion = entry
                .value()
                .iter()
                .map(|&(id, c)| (resolve(id), c))
                .collect();
            (resolve(a), resolve(b), expansion)
        })
        .collect();
    out.sort_by(|x, y| (&x.0, &x.1).cmp(&(&y.0, &y.1)));
    out
}

/// Pre-seeds the product cache from an exported snapshot.
pub(crate) fn import_products(entries: Vec<(Partition, Partition, Vec<(Partition, i64)>)>) {
    let t = tables();
    for (a, b, expansion) in entries {
        let ia = intern(&a);
        let ib = intern(&b);
        let key = (ia.min(ib), ia.max(ib));
        let mut v: IdVec = expansion
            .into_iter()
            .map(|(p, c)| (intern(&p), c))
            .collect();
        v.sort_unstable_by_key(|&(id, _)| id);
        t.products.insert(key, Arc::new(v));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn intern_roundtrip() {
        let p = Partition::new(vec![3, 1]).unwrap();
        let id = intern(&p);
        assert_eq!(resolve(id), p);
        assert_eq!(intern(&p), id);
    }

    #[test]
    fn product_cache_is_symmetric() {
        let a = intern(&Partition::new(vec![2]).unwrap());
        let b = intern(&Partition::new(vec![1, 1]).unwrap());
        assert_eq!(product_expansion(a, b), product_expansion(b, a));
    }

    #[test]
    fn h_monomials_absorb_order() {
        assert_eq!(
            h_monomial_expansion(&[3, 1]).as_slice(),
            {
                // h3*h1 = s(4) + s(3,1)
                let s4 = intern_parts(&[4]);
                let s31 = intern_parts(&[3, 1]);
                let mut v = vec![(s4, 1), (s31, 1)];
                v.sort_unstable_by_key(|&(id, _)| id);
                v
            }
            .as_slice()
        );
    }
}
