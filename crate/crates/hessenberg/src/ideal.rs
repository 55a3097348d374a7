//! Lower ideals, Θ-ideals, and type-A (partial) Hessenberg functions.
//!
//! A subset I ⊆ Φ⁺ is a Θ-ideal when it is downward closed under ⪯, upward
//! closed under ⪯_Θ, and contains Φ⁺_Θ. With Θ = ∅ this is exactly a lower
//! ideal. Type-A Θ-ideals correspond to partial Hessenberg functions, and
//! both directions of that correspondence are implemented here.

use std::fmt;

use crate::error::Error;
use crate::root_system::{Family, RootSystem, ThetaSet};
use crate::DEFAULT_IDEAL_CAP;

/// A set of positive-root indices over a fixed root system, as a 128-bit
/// mask in the canonical root order. It carries no validity claim by itself;
/// ideal-ness is established by [`is_theta_ideal`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct IdealSet {
    bits: u128,
}

impl IdealSet {
    pub fn empty() -> Self {
        IdealSet { bits: 0 }
    }

    pub fn from_bits(bits: u128) -> Self {
        IdealSet { bits }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(
        rs: &RootSystem,
        indices: I,
    ) -> Result<Self, Error> {
        let mut bits = 0u128;
        for idx in indices {
            if idx >= rs.num_positive_roots() {
                return Err(Error::InvalidArgs(format!(
                    "root index {idx} out of range for {rs} with {} positive roots",
                    rs.num_positive_roots()
                )));
            }
            bits |= 1 << idx;
        }
        Ok(IdealSet { bits })
    }

    /// All of Φ⁺.
    pub fn full(rs: &RootSystem) -> Self {
        let n = rs.num_positive_roots();
        IdealSet {
            bits: if n == 128 { u128::MAX } else { (1u128 << n) - 1 },
        }
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    pub fn contains(&self, idx: usize) -> bool {
        self.bits & (1 << idx) != 0
    }

    pub fn insert(&mut self, idx: usize) {
        self.bits |= 1 << idx;
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn is_subset_of(&self, other: &IdealSet) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn union(&self, other: &IdealSet) -> IdealSet {
        IdealSet {
            bits: self.bits | other.bits,
        }
    }

    pub fn intersection(&self, other: &IdealSet) -> IdealSet {
        IdealSet {
            bits: self.bits & other.bits,
        }
    }

    pub fn difference(&self, other: &IdealSet) -> IdealSet {
        IdealSet {
            bits: self.bits & !other.bits,
        }
    }

    /// Set bits in ascending order.
    pub fn indices(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len());
        let mut bits = self.bits;
        while bits != 0 {
            out.push(bits.trailing_zeros() as usize);
            bits &= bits - 1;
        }
        out
    }
}

impl fmt::Display for IdealSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, idx) in self.indices().iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{idx}")?;
        }
        write!(f, "}}")
    }
}

fn check_bounds(rs: &RootSystem, set: &IdealSet) -> Result<(), Error> {
    let n = rs.num_positive_roots();
    let valid = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
    if set.bits & !valid != 0 {
        return Err(Error::InvalidArgs(format!(
            "ideal bits out of range for {rs}"
        )));
    }
    Ok(())
}

/// Downward closure under ⪯: every γ ⪯ α with α ∈ S lies in S.
pub fn is_lower_ideal(rs: &RootSystem, set: &IdealSet) -> bool {
    let empty = ThetaSet::empty(rs.rank());
    for a in set.indices() {
        for g in 0..rs.num_positive_roots() {
            if !set.contains(g) && rs.leq_indices(g, a, &empty) {
                return false;
            }
        }
    }
    true
}

/// The three-condition Θ-ideal test: lower ideal, ⪯_Θ-upward closed, and
/// containing Φ⁺_Θ. With Θ = ∅ this is exactly the lower-ideal test.
pub fn is_theta_ideal(rs: &RootSystem, set: &IdealSet, theta: &ThetaSet) -> bool {
    if check_bounds(rs, set).is_err() || !is_lower_ideal(rs, set) {
        return false;
    }
    if theta.is_empty() {
        return true;
    }
    if !rs.phi_theta_plus(theta).is_subset_of(set) {
        return false;
    }
    for a in set.indices() {
        for g in 0..rs.num_positive_roots() {
            if !set.contains(g) && rs.leq_theta_support(a, g, theta) {
                return false;
            }
        }
    }
    true
}

/// For each positive root, the mask of its strict ⪯-predecessors. Strict
/// predecessors have strictly smaller height, hence smaller canonical index.
fn predecessor_masks(rs: &RootSystem) -> Vec<u128> {
    let m = rs.num_positive_roots();
    let empty = ThetaSet::empty(rs.rank());
    (0..m)
        .map(|a| {
            let mut mask = 0u128;
            for g in 0..a {
                if rs.leq_indices(g, a, &empty) {
                    mask |= 1 << g;
                }
            }
            mask
        })
        .collect()
}

/// Every Θ-ideal of the system, in ascending bit-vector order. Lower ideals
/// are enumerated by a prefix walk over the canonical root order (a root may
/// enter only once all of its ⪯-predecessors have), then filtered by the
/// Θ conditions.
pub fn enumerate_theta_ideals(
    rs: &RootSystem,
    theta: &ThetaSet,
    cap: Option<usize>,
) -> Result<Vec<IdealSet>, Error> {
    let cap = cap.unwrap_or(DEFAULT_IDEAL_CAP);
    let preds = predecessor_masks(rs);
    let m = rs.num_positive_roots();
    let mut out: Vec<u128> = Vec::new();

    fn walk(
        i: usize,
        bits: u128,
        m: usize,
        preds: &[u128],
        cap: usize,
        out: &mut Vec<u128>,
    ) -> Result<(), Error> {
        if i == m {
            if out.len() >= cap {
                return Err(Error::CapExceeded(format!(
                    "more than {cap} lower ideals; raise the cap"
                )));
            }
            out.push(bits);
            return Ok(());
        }
        walk(i + 1, bits, m, preds, cap, out)?;
        if preds[i] & !bits == 0 {
            walk(i + 1, bits | (1 << i), m, preds, cap, out)?;
        }
        Ok(())
    }
    walk(0, 0, m, &preds, cap, &mut out)?;

    let mut ideals: Vec<IdealSet> = if theta.is_empty() {
        out.into_iter().map(IdealSet::from_bits).collect()
    } else {
        // masks of the strict ⪯_Θ-successors, for the upward-closure filter
        let succ: Vec<u128> = (0..m)
            .map(|a| {
                let mut mask = 0u128;
                for g in 0..m {
                    if g != a && rs.leq_theta_support(a, g, theta) {
                        mask |= 1 << g;
                    }
                }
                mask
            })
            .collect();
        let phi_theta = rs.phi_theta_plus(theta).bits();
        out.into_iter()
            .filter(|&bits| {
                phi_theta & !bits == 0
                    && IdealSet::from_bits(bits)
                        .indices()
                        .iter()
                        .all(|&a| succ[a] & !bits == 0)
            })
            .map(IdealSet::from_bits)
            .collect()
    };
    ideals.sort();
    Ok(ideals)
}

/// A type-A partial Hessenberg function: values of h on K ∪ {n} with
/// h(j) ≥ j, nondecreasing values inside K ∪ {n}, and h(n) = n. All data is
/// 1-based, matching the usual x_i − x_j bookkeeping.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialHessenbergFunction {
    n: usize,
    ks: Vec<usize>,
    values: Vec<usize>,
}

impl PartialHessenbergFunction {
    /// `ks` is K = {k_1 < ... < k_s} ⊆ {1, ..., n−1}; `values` lists
    /// h(k_1), ..., h(k_s), h(n).
    pub fn new(n: usize, ks: Vec<usize>, values: Vec<usize>) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::InvalidHessenbergFunction("n must be positive".into()));
        }
        for w in ks.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::InvalidHessenbergFunction(format!(
                    "K must be strictly increasing, got {ks:?}"
                )));
            }
        }
        if ks.iter().any(|&k| k == 0 || k >= n) {
            return Err(Error::InvalidHessenbergFunction(format!(
                "K must lie in 1..={}, got {ks:?}",
                n - 1
            )));
        }
        if values.len() != ks.len() + 1 {
            return Err(Error::InvalidHessenbergFunction(format!(
                "expected {} values h(k_1),...,h(k_s),h(n), got {}",
                ks.len() + 1,
                values.len()
            )));
        }
        let domain: Vec<usize> = ks.iter().copied().chain([n]).collect();
        for (j, v) in domain.iter().zip(&values) {
            if v < j {
                return Err(Error::InvalidHessenbergFunction(format!(
                    "h({j}) = {v} violates h(j) >= j"
                )));
            }
            if !domain.contains(v) {
                return Err(Error::InvalidHessenbergFunction(format!(
                    "h({j}) = {v} lies outside K ∪ {{{n}}}"
                )));
            }
        }
        for w in values.windows(2) {
            if w[0] > w[1] {
                return Err(Error::InvalidHessenbergFunction(format!(
                    "values must be nondecreasing, got {values:?}"
                )));
            }
        }
        if *values.last().unwrap() != n {
            return Err(Error::InvalidHessenbergFunction(format!(
                "h({n}) must equal {n}"
            )));
        }
        Ok(PartialHessenbergFunction { n, ks, values })
    }

    /// A full Hessenberg function (K = [n−1]).
    pub fn full(n: usize, values: Vec<usize>) -> Result<Self, Error> {
        PartialHessenbergFunction::new(n, (1..n).collect(), values)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ks(&self) -> &[usize] {
        &self.ks
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// The extension h̃: [n] → [n], h̃(j) = h(k_p) for k_{p−1} < j ≤ k_p
    /// (k_0 = 0, k_{s+1} = n). Entry j−1 holds h̃(j).
    pub fn extended(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.n);
        let mut lo = 0usize;
        for (p, &k) in self.ks.iter().chain([&self.n]).enumerate() {
            for _ in lo..k {
                out.push(self.values[p]);
            }
            lo = k;
        }
        out
    }

    /// Θ = {α_i : i ∈ [n−1] ∖ K}, over the A_{n−1} simple roots.
    pub fn theta(&self) -> ThetaSet {
        let rank = self.n - 1;
        let mut mask = 0u64;
        for i in 1..self.n {
            if !self.ks.contains(&i) {
                mask |= 1 << (i - 1);
            }
        }
        ThetaSet::from_mask(rank, mask)
    }

    /// The Θ-ideal I = {x_i − x_j : j ≤ h̃(i)} of this function, together
    /// with Θ and h̃. `rs` must be A_{n−1}.
    pub fn to_ideal(&self, rs: &RootSystem) -> Result<(ThetaSet, IdealSet, Vec<usize>), Error> {
        require_type_a(rs, self.n)?;
        let h_ext = self.extended();
        let mut set = IdealSet::empty();
        for i in 1..=self.n {
            for j in (i + 1)..=h_ext[i - 1] {
                set.insert(typea_root_index(rs, i, j)?);
            }
        }
        Ok((self.theta(), set, h_ext))
    }
}

fn require_type_a(rs: &RootSystem, n: usize) -> Result<(), Error> {
    if rs.family() != Family::A || rs.rank() != n - 1 {
        return Err(Error::InvalidArgs(format!(
            "expected root system A{} for n = {n}, got {rs}",
            n - 1
        )));
    }
    Ok(())
}

/// Canonical index of the type-A root x_i − x_j (1-based, i < j).
pub fn typea_root_index(rs: &RootSystem, i: usize, j: usize) -> Result<usize, Error> {
    let n = rs.rank() + 1;
    if i == 0 || j <= i || j > n {
        return Err(Error::InvalidArgs(format!(
            "x_{i} - x_{j} is not a positive root of {rs}"
        )));
    }
    let mut coeffs = vec![0i64; rs.rank()];
    for t in i..j {
        coeffs[t - 1] = 1;
    }
    rs.index_of(&coeffs)
        .ok_or_else(|| Error::NotARoot(coeffs.clone()))
}

/// Inverse of [`typea_root_index`]: the (i, j) pair of a canonical index.
pub fn typea_root_pair(rs: &RootSystem, idx: usize) -> Option<(usize, usize)> {
    if rs.family() != Family::A {
        return None;
    }
    let r = rs.root(idx);
    let support: Vec<usize> = r.support().collect();
    let first = *support.first()?;
    let last = *support.last()?;
    Some((first + 1, last + 2))
}

/// The extended Hessenberg function of a type-A lower ideal: h̃(i) is the
/// largest j with x_i − x_j ∈ I (or i itself). Downward closure makes this
/// nondecreasing with h̃(i) ≥ i.
pub fn extended_function_from_ideal(rs: &RootSystem, set: &IdealSet) -> Result<Vec<usize>, Error> {
    let n = rs.rank() + 1;
    require_type_a(rs, n)?;
    if !is_lower_ideal(rs, set) {
        return Err(Error::InvalidIdeal(format!("{set} is not a lower ideal")));
    }
    let mut h = (1..=n).collect::<Vec<usize>>();
    for idx in set.indices() {
        let (i, j) = typea_root_pair(rs, idx).expect("type A checked");
        if j > h[i - 1] {
            h[i - 1] = j;
        }
    }
    Ok(h)
}

/// Recover the (n, K, h) data of a type-A Θ-ideal. Inverse to
/// [`PartialHessenbergFunction::to_ideal`].
pub fn partial_hessenberg_from_ideal(
    rs: &RootSystem,
    set: &IdealSet,
    theta: &ThetaSet,
) -> Result<PartialHessenbergFunction, Error> {
    let n = rs.rank() + 1;
    require_type_a(rs, n)?;
    if !is_theta_ideal(rs, set, theta) {
        return Err(Error::InvalidIdeal(format!(
            "{set} is not a {theta}-ideal of {rs}"
        )));
    }
    let h_ext = extended_function_from_ideal(rs, set)?;
    let ks: Vec<usize> = (1..n).filter(|&i| !theta.contains(i - 1)).collect();
    let values: Vec<usize> = ks.iter().chain([&n]).map(|&k| h_ext[k - 1]).collect();
    PartialHessenbergFunction::new(n, ks, values)
}

/// All partial Hessenberg functions on a given K ∪ {n}.
pub fn enumerate_partial_hessenberg(n: usize, ks: &[usize]) -> Vec<PartialHessenbergFunction> {
    let domain: Vec<usize> = ks.iter().copied().chain([n]).collect();
    let mut out = Vec::new();
    let mut values = Vec::with_capacity(domain.len());
    fn rec(
        pos: usize,
        n: usize,
        ks: &[usize],
        domain: &[usize],
        values: &mut Vec<usize>,
        out: &mut Vec<PartialHessenbergFunction>,
    ) {
        if pos == domain.len() - 1 {
            values.push(n);
            out.push(
                PartialHessenbergFunction::new(n, ks.to_vec(), values.clone())
                    .expect("constructed values satisfy the invariants"),
            );
            values.pop();
            return;
        }
        let lo = values.last().copied().unwrap_or(0).max(domain[pos]);
        for &v in domain.iter().filter(|&&v| v >= lo) {
            values.push(v);
            rec(pos + 1, n, ks, domain, values, out);
            values.pop();
        }
    }
    rec(0, n, ks, &domain, &mut values, &mut out);
    out
}
