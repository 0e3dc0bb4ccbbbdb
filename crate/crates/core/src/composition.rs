//! Compositions and the statistics attached to them.
//!
//! Positions are 0-based throughout the API. A composition of length `N`
//! carries its eigenvalue vector `eta_bar`, the orderings used for
//! triangularity and Pieri supports, and the hook products `d, d', e, e'`.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};

/// A vector of nonnegative parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(!parts.is_empty(), "a composition has at least one part");
        Composition(parts)
    }

    pub fn zeros(n: usize) -> Self {
        Composition::new(vec![0; n])
    }

    /// The composition with a single 1 at position `k`.
    pub fn unit(n: usize, k: usize) -> Self {
        let mut parts = vec![0; n];
        parts[k] = 1;
        Composition::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_partition(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// The weakly decreasing rearrangement.
    pub fn partition(&self) -> Composition {
        let mut parts = self.0.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Composition(parts)
    }

    /// Adds one to every part.
    pub fn plus_ones(&self) -> Composition {
        Composition(self.0.iter().map(|&x| x + 1).collect())
    }

    /// The raising action `(η_2, ..., η_N, η_1 + 1)`.
    pub fn phi(&self) -> Composition {
        let mut parts = self.0[1..].to_vec();
        parts.push(self.0[0] + 1);
        Composition(parts)
    }

    /// Inverse of [`Composition::phi`]; defined when the last part is positive.
    pub fn phi_inverse(&self) -> Option<Composition> {
        let last = *self.0.last()?;
        if last == 0 {
            return None;
        }
        let mut parts = Vec::with_capacity(self.len());
        parts.push(last - 1);
        parts.extend_from_slice(&self.0[..self.len() - 1]);
        Some(Composition(parts))
    }

    /// Swaps parts `i` and `i + 1`.
    pub fn swap(&self, i: usize) -> Composition {
        let mut parts = self.0.clone();
        parts.swap(i, i + 1);
        Composition(parts)
    }

    /// Componentwise inclusion of diagrams.
    pub fn contained_in(&self, other: &Composition) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Number of earlier parts `>= η_i` plus later parts `> η_i`; the
    /// position of `i` in the stable decreasing sort.
    pub fn rank(&self, i: usize) -> usize {
        let v = self.0[i];
        self.0[..i].iter().filter(|&&x| x >= v).count()
            + self.0[i + 1..].iter().filter(|&&x| x > v).count()
    }

    /// Positions `i` with `η_i > η_{i+1}`.
    pub fn descents(&self) -> Vec<usize> {
        (0..self.len().saturating_sub(1))
            .filter(|&i| self.0[i] > self.0[i + 1])
            .collect()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Composition {
    type Err = Error;

    /// Comma-separated parts, optionally wrapped in parentheses.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("invalid composition `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        if parts.is_empty() {
            return Err(Error::Parse("empty composition".into()));
        }
        Ok(Composition(parts))
    }
}

impl From<Vec<u32>> for Composition {
    fn from(parts: Vec<u32>) -> Self {
        Composition::new(parts)
    }
}

impl<const K: usize> From<[u32; K]> for Composition {
    fn from(parts: [u32; K]) -> Self {
        Composition::new(parts.to_vec())
    }
}

/// A permutation of `0..n`, stored as its image vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Self {
        let mut seen = vec![false; images.len()];
        for &k in &images {
            assert!(k < images.len() && !seen[k], "not a permutation");
            seen[k] = true;
        }
        Permutation(images)
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &k) in self.0.iter().enumerate() {
            inv[k] = i;
        }
        Permutation(inv)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&k| self.0[k]).collect())
    }

    pub fn inversions(&self) -> usize {
        let n = self.len();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.0[i] > self.0[j])
            .count()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &k)| i == k)
    }

    /// Every permutation of `0..n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = (0..n).collect();
        loop {
            out.push(Permutation(current.clone()));
            // next lexicographic permutation
            let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
                break;
            };
            let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).unwrap();
            current.swap(i - 1, j);
            current[i..].reverse();
        }
        out
    }
}

/// The shortest `w` with `w⁻¹(η)` a partition: `w(r)` is the position holding
/// the `r`-th largest part, ties broken by position (stable sort).
pub fn shortest_sorter(eta: &Composition) -> Permutation {
    let mut order: Vec<usize> = (0..eta.len()).collect();
    order.sort_by(|&a, &b| eta.parts()[b].cmp(&eta.parts()[a]));
    Permutation(order)
}

/// The rank-matching permutation sending a position of `from` to the position
/// of `to` holding the part of the same stable rank, i.e. `w_to ∘ w_from⁻¹`.
pub fn rank_matching(from: &Composition, to: &Composition) -> Permutation {
    shortest_sorter(to).compose(&shortest_sorter(from).inverse())
}

/// Eigenvalues of the Cherednik operators on `E_η`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EtaBar {
    pub entries: Vec<Scalar>,
    pub alpha: Scalar,
}

impl std::ops::Index<usize> for EtaBar {
    type Output = Scalar;

    fn index(&self, i: usize) -> &Scalar {
        &self.entries[i]
    }
}

impl EtaBar {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The point `η̄ / α` at which the Pieri kernels are evaluated.
    pub fn scaled(&self) -> Vec<Scalar> {
        self.entries.iter().map(|e| e / &self.alpha).collect()
    }
}

/// `η̄_i = α η_i − #{k < i : η_k ≥ η_i} − #{k > i : η_k > η_i}`.
pub fn eta_bar(eta: &Composition, alpha: &Scalar) -> EtaBar {
    let entries = (0..eta.len())
        .map(|i| alpha * scalar::int(eta.parts()[i] as i64) - scalar::int(eta.rank(i) as i64))
        .collect();
    EtaBar {
        entries,
        alpha: alpha.clone(),
    }
}

/// `η̄_i − η̄_{i+1}`.
pub fn delta_bar(eta: &Composition, i: usize, alpha: &Scalar) -> Scalar {
    let bar = eta_bar(eta, alpha);
    &bar[i] - &bar[i + 1]
}

fn check_weights(nu: &Composition, eta: &Composition) -> Result<()> {
    if nu.len() != eta.len() {
        return Err(Error::DimensionMismatch {
            expected: eta.len(),
            found: nu.len(),
        });
    }
    if nu.weight() != eta.weight() {
        return Err(Error::WeightMismatch(nu.weight(), eta.weight()));
    }
    Ok(())
}

/// Strict dominance: `ν ≠ η` and every partial sum of `ν` is at most that of `η`.
pub fn dominance_less(nu: &Composition, eta: &Composition) -> Result<bool> {
    check_weights(nu, eta)?;
    Ok(dominance_less_unchecked(nu, eta))
}

fn dominance_less_unchecked(nu: &Composition, eta: &Composition) -> bool {
    if nu == eta {
        return false;
    }
    let (mut a, mut b) = (0u32, 0u32);
    for (x, y) in nu.parts().iter().zip(eta.parts()) {
        a += x;
        b += y;
        if a > b {
            return false;
        }
    }
    true
}

/// The triangularity order: `ν⁺ < η⁺`, or `ν⁺ = η⁺` and `ν < η`.
pub fn triangle_less(nu: &Composition, eta: &Composition) -> Result<bool> {
    check_weights(nu, eta)?;
    Ok(triangle_less_unchecked(nu, eta))
}

pub(crate) fn triangle_less_unchecked(nu: &Composition, eta: &Composition) -> bool {
    let (np, ep) = (nu.partition(), eta.partition());
    if np == ep {
        dominance_less_unchecked(nu, eta)
    } else {
        dominance_less_unchecked(&np, &ep)
    }
}

/// `ν ⪯ η`, witnessed by the rank-matching permutation from `ν` to `η`.
pub fn preceq(nu: &Composition, eta: &Composition) -> bool {
    assert_eq!(nu.len(), eta.len());
    let pi = rank_matching(nu, eta);
    preceq_with(nu, eta, &pi)
}

/// Checks the defining inequalities of `ν ⪯ η` for a given `π`.
pub fn preceq_with(nu: &Composition, eta: &Composition, pi: &Permutation) -> bool {
    (0..nu.len()).all(|i| {
        let target = eta.parts()[pi.apply(i)];
        let v = nu.parts()[i];
        if i < pi.apply(i) {
            v < target
        } else {
            v <= target
        }
    })
}

/// The four hook products of a composition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HookData {
    pub d_prime: Scalar,
    pub d: Scalar,
    pub e: Scalar,
    pub e_prime: Scalar,
}

/// Arm and leg lengths of the node in row `i`, column `j` (`j` is 1-based).
pub fn arm_leg(eta: &Composition, i: usize, j: u32) -> (u32, u32) {
    let p = eta.parts();
    let arm = p[i] - j;
    let before = p[..i].iter().filter(|&&x| j <= x + 1 && x < p[i]).count();
    let after = p[i + 1..].iter().filter(|&&x| j <= x && x <= p[i]).count();
    (arm, (before + after) as u32)
}

pub fn hooks(eta: &Composition, alpha: &Scalar) -> Result<HookData> {
    scalar::validate_alpha(alpha)?;
    let n = eta.len() as i64;
    let mut d_prime = Scalar::one();
    let mut d = Scalar::one();
    for i in 0..eta.len() {
        for j in 1..=eta.parts()[i] {
            let (a, l) = arm_leg(eta, i, j);
            let base = alpha * scalar::int(a as i64 + 1) + scalar::int(l as i64);
            let shifted = &base + Scalar::one();
            if base.is_zero() || shifted.is_zero() {
                return Err(Error::AlphaSingular(format!(
                    "hook factor at node ({}, {j}) of {eta}",
                    i + 1
                )));
            }
            d_prime *= base;
            d *= shifted;
        }
    }
    // generalized factorials over η⁺, row index r is 1-based
    let mut e = Scalar::one();
    let mut e_prime = Scalar::one();
    for (r, &part) in eta.partition().parts().iter().enumerate() {
        let r = r as i64 + 1;
        for m in 0..part as i64 {
            let common = alpha * scalar::int(m + 1);
            let fe = &common + scalar::int(n - r + 1);
            let fe_prime = &common + scalar::int(n - r);
            if fe.is_zero() || fe_prime.is_zero() {
                return Err(Error::AlphaSingular(format!(
                    "generalized factorial factor of {eta}"
                )));
            }
            e *= fe;
            e_prime *= fe_prime;
        }
    }
    Ok(HookData {
        d_prime,
        d,
        e,
        e_prime,
    })
}

/// `𝒩_η / 𝒩_0 = d'_η e_η / (d_η e'_η)`.
pub fn norm_ratio(eta: &Composition, alpha: &Scalar) -> Result<Scalar> {
    let h = hooks(eta, alpha)?;
    Ok(h.d_prime * h.e / (h.d * h.e_prime))
}

/// Checks how `η̄` transforms under `Φ` and under each `s_i`; returns the
/// first violated relation.
pub fn eta_bar_transforms(eta: &Composition, alpha: &Scalar) -> std::result::Result<(), String> {
    let n = eta.len();
    let bar = eta_bar(eta, alpha);
    let phi_bar = eta_bar(&eta.phi(), alpha);
    for i in 0..n - 1 {
        if phi_bar[i] != bar[i + 1] {
            return Err(format!("Φ shift fails at position {} for {eta}", i + 1));
        }
    }
    if phi_bar[n - 1] != &bar[0] + alpha {
        return Err(format!("Φ wraparound fails for {eta}"));
    }
    let p = eta.parts();
    for i in 0..n - 1 {
        let s_bar = eta_bar(&eta.swap(i), alpha);
        let (exp_i, exp_next) = if p[i] != p[i + 1] {
            (&bar[i + 1], &bar[i])
        } else {
            (&bar[i], &bar[i + 1])
        };
        let others_fixed = (0..n)
            .filter(|&j| j != i && j != i + 1)
            .all(|j| s_bar[j] == bar[j]);
        if &s_bar[i] != exp_i || &s_bar[i + 1] != exp_next || !others_fixed {
            return Err(format!("s_{} swap rule fails for {eta}", i + 1));
        }
    }
    Ok(())
}

/// Every composition of length `n` and weight `w`, lexicographically decreasing.
pub fn compositions_of_weight(n: usize, w: u32) -> Vec<Composition> {
    fn rec(n: usize, w: u32, prefix: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if prefix.len() == n - 1 {
            prefix.push(w);
            out.push(Composition(prefix.clone()));
            prefix.pop();
            return;
        }
        for first in (0..=w).rev() {
            prefix.push(first);
            rec(n, w - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, w, &mut Vec::with_capacity(n), &mut out);
    out
}

/// Every composition of length `n` with weight at most `max_weight`, by
/// increasing weight.
pub fn compositions_up_to(n: usize, max_weight: u32) -> Vec<Composition> {
    (0..=max_weight)
        .flat_map(|w| compositions_of_weight(n, w))
        .collect()
}

/// Every partition with at most `n` parts (padded with zeros to length `n`)
/// and weight `w`, lexicographically decreasing.
pub fn partitions_of_weight(n: usize, w: u32) -> Vec<Composition> {
    compositions_of_weight(n, w)
        .into_iter()
        .filter(Composition::is_partition)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};

    fn c(p: &[u32]) -> Composition {
        Composition::new(p.to_vec())
    }

    #[test]
    fn eta_bar_examples() {
        let a = ratio(7, 3);
        let zero = eta_bar(&Composition::zeros(4), &a);
        for i in 0..4 {
            assert_eq!(zero[i], int(-(i as i64)));
        }
        let bar = eta_bar(&c(&[2, 0, 1]), &a);
        assert_eq!(bar.entries, vec![&a * int(2), int(-2), &a - int(1)]);
        assert_eq!(eta_bar(&c(&[1, 0]), &int(2)).entries, vec![int(2), int(-1)]);
    }

    #[test]
    fn delta_bar_examples() {
        assert_eq!(delta_bar(&c(&[1, 0]), 0, &int(2)), int(3));
        assert_eq!(delta_bar(&c(&[0, 0]), 0, &int(2)), int(1));
        assert_eq!(delta_bar(&c(&[2, 0, 1]), 1, &int(3)), int(-4));
    }

    #[test]
    fn orderings() {
        assert!(dominance_less(&c(&[1, 1]), &c(&[2, 0])).unwrap());
        assert!(triangle_less(&c(&[0, 2]), &c(&[2, 0])).unwrap());
        assert!(!dominance_less(&c(&[2, 0]), &c(&[2, 0])).unwrap());
        assert!(!triangle_less(&c(&[2, 0]), &c(&[2, 0])).unwrap());
        assert_eq!(
            triangle_less(&c(&[1, 0]), &c(&[2, 0])),
            Err(Error::WeightMismatch(1, 2))
        );
    }

    #[test]
    fn triangle_less_is_strict_partial_order() {
        for w in 0..=4 {
            let all = compositions_of_weight(3, w);
            for a in &all {
                assert!(!triangle_less_unchecked(a, a));
                for b in &all {
                    if triangle_less_unchecked(a, b) {
                        assert!(!triangle_less_unchecked(b, a), "{a} {b}");
                        for c in &all {
                            if triangle_less_unchecked(b, c) {
                                assert!(triangle_less_unchecked(a, c));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn shortest_sorter_examples() {
        let eta = c(&[2, 0, 1]);
        let w = shortest_sorter(&eta);
        assert_eq!(w.images(), &[0, 2, 1]);
        let sorted: Vec<u32> = (0..3).map(|r| eta.parts()[w.apply(r)]).collect();
        assert_eq!(sorted, vec![2, 1, 0]);
        assert!(shortest_sorter(&c(&[3, 1, 1, 0])).is_identity());
        assert_eq!(shortest_sorter(&c(&[0, 1])).images(), &[1, 0]);
    }

    #[test]
    fn shortest_sorter_has_minimal_length() {
        for eta in compositions_up_to(4, 4) {
            let w = shortest_sorter(&eta);
            let best = Permutation::all(4)
                .into_iter()
                .filter(|p| (0..3).all(|r| eta.parts()[p.apply(r)] >= eta.parts()[p.apply(r + 1)]))
                .map(|p| p.inversions())
                .min()
                .unwrap();
            assert_eq!(w.inversions(), best, "{eta}");
        }
    }

    fn preceq_brute(nu: &Composition, eta: &Composition) -> bool {
        Permutation::all(nu.len())
            .iter()
            .any(|pi| preceq_with(nu, eta, pi))
    }

    #[test]
    fn preceq_agrees_with_existence_over_all_permutations() {
        let all = compositions_up_to(3, 4);
        for nu in &all {
            for eta in &all {
                assert_eq!(preceq(nu, eta), preceq_brute(nu, eta), "{nu} ⪯ {eta}");
            }
        }
    }

    #[test]
    fn preceq_on_partitions_is_inclusion() {
        let parts: Vec<_> = compositions_up_to(3, 5)
            .into_iter()
            .filter(Composition::is_partition)
            .collect();
        for nu in &parts {
            for eta in &parts {
                assert_eq!(preceq(nu, eta), nu.contained_in(eta), "{nu} {eta}");
            }
        }
    }

    #[test]
    fn preceq_contains_inclusion_and_identity() {
        for eta in compositions_up_to(3, 3) {
            assert!(preceq(&eta, &eta));
            assert!(preceq(&eta, &eta.plus_ones()));
        }
    }

    #[test]
    fn hook_examples() {
        let a = ratio(5, 2);
        let h = hooks(&Composition::zeros(3), &a).unwrap();
        assert!(h.d.is_one() && h.d_prime.is_one() && h.e.is_one() && h.e_prime.is_one());
        for n in 1..=4 {
            for j in 0..n {
                let h = hooks(&Composition::unit(n, j), &a).unwrap();
                assert_eq!(h.d_prime, &a + int(j as i64));
                assert_eq!(h.e_prime, &a + int(n as i64 - 1));
            }
        }
    }

    /// Ratios of hook products along every generation edge.
    #[test]
    fn hooks_follow_update_formulas() {
        for a in [int(2), int(3), ratio(5, 2), ratio(7, 3), ratio(11, 2)] {
            for eta in compositions_up_to(3, 4) {
                let h = hooks(&eta, &a).unwrap();
                let bar = eta_bar(&eta, &a);
                for i in 0..eta.len() - 1 {
                    let (x, y) = (eta.parts()[i], eta.parts()[i + 1]);
                    let s = hooks(&eta.swap(i), &a).unwrap();
                    assert_eq!(s.e, h.e);
                    assert_eq!(s.e_prime, h.e_prime);
                    let delta = &bar[i] - &bar[i + 1];
                    let one = Scalar::one();
                    if x > y {
                        assert_eq!(&s.d / &h.d, (&delta + &one) / &delta);
                        assert_eq!(&s.d_prime / &h.d_prime, &delta / (&delta - &one));
                    } else if x < y {
                        assert_eq!(&s.d / &h.d, &delta / (&delta - &one));
                        assert_eq!(&s.d_prime / &h.d_prime, (&delta + &one) / &delta);
                    }
                }
                let f = hooks(&eta.phi(), &a).unwrap();
                let n = int(eta.len() as i64);
                let up = &bar[0] + &a + &n;
                let up_prime = &up - Scalar::one();
                assert_eq!(&f.d / &h.d, up);
                assert_eq!(&f.e / &h.e, up);
                assert_eq!(&f.d_prime / &h.d_prime, up_prime);
                assert_eq!(&f.e_prime / &h.e_prime, up_prime);
            }
        }
    }

    #[test]
    fn norm_ratio_examples() {
        let a = int(2);
        assert!(norm_ratio(&Composition::zeros(3), &a).unwrap().is_one());
        for eta in compositions_up_to(3, 3) {
            assert_eq!(
                norm_ratio(&eta.plus_ones(), &a).unwrap(),
                norm_ratio(&eta, &a).unwrap()
            );
        }
        // (1,0): node (1,1) has a = 0, l = 0, so d' = α, d = α + 1;
        // e = α + 2, e' = α + 1 at N = 2.
        let expected = &a * (&a + int(2)) / ((&a + int(1)) * (&a + int(1)));
        assert_eq!(norm_ratio(&c(&[1, 0]), &a).unwrap(), expected);
    }

    #[test]
    fn actions() {
        assert_eq!(c(&[0, 0, 0]).phi(), c(&[0, 0, 1]));
        assert_eq!(c(&[2, 0, 1]).phi(), c(&[0, 1, 3]));
        assert_eq!(c(&[2, 0, 1]).swap(0), c(&[0, 2, 1]));
        assert_eq!(c(&[0, 1, 3]).phi_inverse(), Some(c(&[2, 0, 1])));
        assert_eq!(c(&[1, 0]).phi_inverse(), None);
        for eta in compositions_up_to(3, 3) {
            assert_eq!(eta.phi().weight(), eta.weight() + 1);
            assert_eq!(eta.phi().phi_inverse().unwrap(), eta);
        }
    }

    #[test]
    fn eta_bar_transform_rules() {
        for a in [int(2), int(3), ratio(5, 2), ratio(7, 3), ratio(11, 2)] {
            for n in 1..=4 {
                for eta in compositions_up_to(n, 6.min(if n == 4 { 5 } else { 6 })) {
                    assert_eq!(eta_bar_transforms(&eta, &a), Ok(()));
                }
            }
        }
    }

    #[test]
    fn parse_display() {
        let eta: Composition = "2,0,1".parse().unwrap();
        assert_eq!(eta, c(&[2, 0, 1]));
        assert_eq!(eta.to_string(), "(2,0,1)");
        assert_eq!("(2,0,1)".parse::<Composition>().unwrap(), eta);
        assert!("2,x".parse::<Composition>().is_err());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(compositions_of_weight(3, 2).len(), 6);
        assert_eq!(compositions_up_to(2, 1).len(), 3);
        assert_eq!(compositions_up_to(4, 4).len(), 70);
        assert_eq!(partitions_of_weight(3, 4).len(), 4);
    }
}
