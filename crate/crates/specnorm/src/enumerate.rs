//! Exhaustive enumeration of small spaces and of maps between spaces.
//!
//! Spaces are generated as naturally labeled posets: strict relations on
//! `{0, .., n-1}` contained in the natural order. Every finite poset is
//! isomorphic to one of these (sort any linear extension), so sweeping them
//! covers all shapes up to isomorphism. A relation is encoded as a bitmask
//! over the pairs `(i, j)` with `i < j`, listed in lexicographic order, and
//! kept iff it is transitive. Masks are emitted ascending, which fixes a
//! canonical order on instances and makes the first failing case of any sweep
//! a minimal one.

use crate::error::{Error, Result};
use crate::space::SpectralSpace;

/// Largest `n` the poset-mask enumeration accepts; `2^21` masks at `n = 7`.
pub const ENUMERATION_POINT_BUDGET: usize = 7;

/// Per-side point budget for [`enumerate_monotone_maps`].
pub const MONOTONE_MAP_SIDE_BUDGET: usize = 5;

/// The pairs `(i, j)`, `i < j`, in lexicographic order; bit `k` of a poset
/// mask refers to `triangle_pairs(n)[k]`.
pub fn triangle_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            pairs.push((i, j));
        }
    }
    pairs
}

/// All transitive masks for `n` points, ascending.
pub fn all_poset_masks(n: usize) -> Vec<u64> {
    assert!(
        n <= ENUMERATION_POINT_BUDGET,
        "poset enumeration supports at most {ENUMERATION_POINT_BUDGET} points"
    );
    let pairs = triangle_pairs(n);
    let mut bit = vec![vec![0u64; n]; n];
    for (k, &(i, j)) in pairs.iter().enumerate() {
        bit[i][j] = 1u64 << k;
    }
    let mut masks = Vec::new();
    'mask: for mask in 0..(1u64 << pairs.len()) {
        for &(i, j) in &pairs {
            if mask & bit[i][j] == 0 {
                continue;
            }
            for k in j + 1..n {
                if mask & bit[j][k] != 0 && mask & bit[i][k] == 0 {
                    continue 'mask;
                }
            }
        }
        masks.push(mask);
    }
    masks
}

/// The space encoded by a transitive mask, with points `p0, .., p{n-1}`.
pub fn poset_from_mask(n: usize, mask: u64) -> SpectralSpace {
    let names: Vec<String> = (0..n).map(|i| format!("p{i}")).collect();
    let pairs: Vec<(String, String)> = triangle_pairs(n)
        .iter()
        .enumerate()
        .filter(|&(k, _)| mask & (1u64 << k) != 0)
        .map(|(_, &(i, j))| (names[i].clone(), names[j].clone()))
        .collect();
    SpectralSpace::build(&format!("n{n}m{mask}"), &names, &pairs)
        .expect("transitive mask within the natural order builds")
}

/// All total maps `{0, .., nx-1} -> {0, .., ny-1}` as image tuples, in
/// ascending lexicographic order.
pub struct TotalMaps {
    ny: usize,
    cur: Option<Vec<usize>>,
}

impl TotalMaps {
    pub fn new(nx: usize, ny: usize) -> Self {
        let cur = if ny == 0 && nx > 0 {
            None
        } else {
            Some(vec![0; nx])
        };
        TotalMaps { ny, cur }
    }
}

impl Iterator for TotalMaps {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.cur.clone()?;
        let cur = self.cur.as_mut().unwrap();
        let mut i = cur.len();
        loop {
            if i == 0 {
                self.cur = None;
                break;
            }
            i -= 1;
            cur[i] += 1;
            if cur[i] < self.ny {
                break;
            }
            cur[i] = 0;
        }
        Some(out)
    }
}

/// Monotonicity of an image tuple; checking cover pairs suffices because the
/// target relation is transitive.
pub fn map_is_monotone(x: &SpectralSpace, y: &SpectralSpace, map: &[usize]) -> bool {
    x.cover_pairs()
        .iter()
        .all(|&(a, b)| y.specializes(map[a], map[b]))
}

/// Every monotone map between two small spaces, as image tuples in ascending
/// lexicographic order.
pub fn enumerate_monotone_maps(x: &SpectralSpace, y: &SpectralSpace) -> Result<Vec<Vec<usize>>> {
    for (side, len) in [("source", x.len()), ("target", y.len())] {
        if len > MONOTONE_MAP_SIDE_BUDGET {
            return Err(Error::BudgetExceeded {
                what: "monotone map enumeration".into(),
                detail: format!(
                    "{side} has {len} points, budget is {MONOTONE_MAP_SIDE_BUDGET} per side"
                ),
            });
        }
    }
    Ok(TotalMaps::new(x.len(), y.len())
        .filter(|map| map_is_monotone(x, y, map))
        .collect())
}
