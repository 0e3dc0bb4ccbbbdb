//! Index subsets labelling the Pieri supports.
//!
//! A subset `I = {t_1 < ... < t_s}` of positions acts on a composition by the
//! cyclic shuffle `c_I` (one box added, `p = 1`) or its dual `ĉ_I` (boxes added
//! to every row off the cycle, `p = N − 1`). Only maximal subsets give
//! distinct images.

use std::collections::BTreeSet;
use std::fmt;

use crate::composition::{preceq, Composition, Permutation};

/// A nonempty strictly increasing list of 0-based positions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSubset(Vec<usize>);

impl IndexSubset {
    pub fn new(mut t: Vec<usize>) -> Self {
        t.sort_unstable();
        t.dedup();
        assert!(!t.is_empty(), "index subsets are nonempty");
        IndexSubset(t)
    }

    /// Builds a subset from 1-based positions.
    pub fn one_based(t: &[usize]) -> Self {
        IndexSubset::new(t.iter().map(|&k| k - 1).collect())
    }

    pub fn elements(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    pub fn first(&self) -> usize {
        self.0[0]
    }

    pub fn last(&self) -> usize {
        self.0[self.0.len() - 1]
    }

    /// Position of `i` within the subset.
    pub fn index_of(&self, i: usize) -> Option<usize> {
        self.0.binary_search(&i).ok()
    }

    /// Every nonempty subset of `0..n`, lexicographically ordered.
    pub fn all(n: usize) -> Vec<IndexSubset> {
        let mut out: Vec<IndexSubset> = (1u32..(1 << n))
            .map(|mask| IndexSubset((0..n).filter(|&k| mask & (1 << k) != 0).collect()))
            .collect();
        out.sort();
        out
    }
}

impl fmt::Display for IndexSubset {
    /// Written with 1-based positions.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, t) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", t + 1)?;
        }
        write!(f, "}}")
    }
}

/// `c_I(η)`: `ν_{t_j} = η_{t_{j+1}}`, `ν_{t_s} = η_{t_1} + 1`, other parts fixed.
pub fn c_i(eta: &Composition, set: &IndexSubset) -> Composition {
    let t = set.elements();
    let p = eta.parts();
    let mut nu = p.to_vec();
    for j in 0..t.len() - 1 {
        nu[t[j]] = p[t[j + 1]];
    }
    nu[set.last()] = p[set.first()] + 1;
    Composition::new(nu)
}

/// Maximality of `I` with respect to `η`, stated on `η` itself.
pub fn is_maximal(eta: &Composition, set: &IndexSubset) -> bool {
    let p = eta.parts();
    let t = set.elements();
    let mut start = 0;
    for &tu in t {
        if p[start..tu].iter().any(|&x| x == p[tu]) {
            return false;
        }
        start = tu + 1;
    }
    let bumped = p[set.first()] + 1;
    !p[set.last() + 1..].contains(&bumped)
}

/// Maximality of `I` with respect to `η`, stated on `ν = c_I(η)`.
pub fn maximality_via_nu(eta: &Composition, set: &IndexSubset) -> bool {
    let nu = c_i(eta, set);
    let v = nu.parts();
    let t = set.elements();
    let n = v.len();
    // v[t_s] >= 1 always, so the subtraction is safe
    let top = v[set.last()] - 1;
    if v[..set.first()].contains(&top) {
        return false;
    }
    for (u, &tu) in t.iter().enumerate() {
        let end = t.get(u + 1).copied().unwrap_or(n);
        if v[tu + 1..end].iter().any(|&x| x == v[tu]) {
            return false;
        }
    }
    true
}

/// All maximal subsets with respect to `η`, lexicographically ordered.
pub fn maximal_sets(eta: &Composition) -> Vec<IndexSubset> {
    IndexSubset::all(eta.len())
        .into_iter()
        .filter(|set| is_maximal(eta, set))
        .collect()
}

/// `ĉ_I(η)`: `ν_{t_1} = η_{t_s}`, `ν_{t_u} = η_{t_{u−1}} + 1`, `ν_k = η_k + 1` off `I`.
pub fn hat_c_i(eta: &Composition, set: &IndexSubset) -> Composition {
    let t = set.elements();
    let p = eta.parts();
    let mut nu: Vec<u32> = p.iter().map(|&x| x + 1).collect();
    nu[set.first()] = p[set.last()];
    for u in 1..t.len() {
        nu[t[u]] = p[t[u - 1]] + 1;
    }
    Composition::new(nu)
}

/// Maximality for the `p = N − 1` labelling.
pub fn is_hat_maximal(eta: &Composition, set: &IndexSubset) -> bool {
    let p = eta.parts();
    let t = set.elements();
    let n = p.len();
    let last = p[set.last()];
    if last >= 1 && p[..set.first()].iter().any(|&x| x + 1 == last) {
        return false;
    }
    for (u, &tu) in t.iter().enumerate() {
        let end = t.get(u + 1).copied().unwrap_or(n);
        if p[tu + 1..end].iter().any(|&x| x == p[tu]) {
            return false;
        }
    }
    true
}

pub fn hat_maximal_sets(eta: &Composition) -> Vec<IndexSubset> {
    IndexSubset::all(eta.len())
        .into_iter()
        .filter(|set| is_hat_maximal(eta, set))
        .collect()
}

/// `Φ(I) = {j − 1 : j ∈ I, j ≥ 2} ∪ {N : 1 ∈ I}` in 1-based terms.
pub fn phi_of_i(set: &IndexSubset, n: usize) -> IndexSubset {
    IndexSubset::new(
        set.elements()
            .iter()
            .map(|&j| if j == 0 { n - 1 } else { j - 1 })
            .collect(),
    )
}

/// The Pieri support for `e_p`: all `ν` reachable by adding a box to `p`
/// rows and then rearranging so that incremented rows move down or stay and
/// the other rows move up or stay. Sorted lexicographically decreasing.
pub fn support_j(eta: &Composition, p: usize) -> Vec<Composition> {
    let n = eta.len();
    assert!(p <= n, "p must not exceed N");
    let parts = eta.parts();
    let perms = Permutation::all(n);
    let mut found = BTreeSet::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != p {
            continue;
        }
        let bumped = |i: usize| mask & (1 << i) != 0;
        for pi in &perms {
            let admissible = (0..n).all(|i| {
                let to = pi.apply(i);
                if bumped(i) {
                    to >= i
                } else {
                    to <= i
                }
            });
            if !admissible {
                continue;
            }
            let mut nu = vec![0; n];
            for i in 0..n {
                nu[pi.apply(i)] = parts[i] + bumped(i) as u32;
            }
            found.insert(Composition::new(nu));
        }
    }
    let out: Vec<Composition> = found.into_iter().rev().collect();
    debug_assert!(out
        .iter()
        .all(|nu| preceq(eta, nu) && preceq(nu, &eta.plus_ones())));
    out
}
