//! Weyl groups, parabolic quotients, inversion sets, and the affine-cell
//! condition, plus the type-A one-line-permutation fast path.
//!
//! Elements act on simple-root coordinates by invertible integer matrices;
//! column j of the matrix is w(α_j). Enumeration proceeds by breadth-first
//! search from the identity under left multiplication by simple reflections:
//! when ℓ(s_i w) = ℓ(w) + 1 the inversion set grows by exactly the root
//! w⁻¹(α_i), which keeps inversion bookkeeping incremental and makes the
//! quotient walk below exhaustive (inversion sets are nested along such
//! chains, so every element of W^Θ sits on a chain that stays inside W^Θ).

use std::collections::HashMap;

use crate::error::Error;
use crate::ideal::IdealSet;
use crate::root_system::{Family, Root, RootSystem, ThetaSet};
use crate::DEFAULT_MATRIX_CAP;

/// A Weyl group element: its matrix on simple-root coordinates, the matrix
/// of its inverse, one reduced word, and its inversion set as a bitmask over
/// canonical positive-root indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement {
    rank: usize,
    mat: Vec<i64>,
    inv_mat: Vec<i64>,
    word: Vec<u8>,
    inv_bits: u128,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        WeylElement {
            rank,
            mat: mat_identity(rank),
            inv_mat: mat_identity(rank),
            word: Vec::new(),
            inv_bits: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// One reduced expression, as 0-based simple indices.
    pub fn word(&self) -> &[u8] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn matrix(&self) -> &[i64] {
        &self.mat
    }

    pub fn inverse_matrix(&self) -> &[i64] {
        &self.inv_mat
    }

    /// w(α) in simple-root coordinates.
    pub fn apply(&self, coeffs: &[i64]) -> Vec<i64> {
        mat_apply(self.rank, &self.mat, coeffs)
    }

    /// w⁻¹(α) in simple-root coordinates.
    pub fn apply_inverse(&self, coeffs: &[i64]) -> Vec<i64> {
        mat_apply(self.rank, &self.inv_mat, coeffs)
    }

    /// w⁻¹(α_i), read off column i of the inverse matrix.
    fn inverse_of_simple(&self, i: usize) -> Vec<i64> {
        (0..self.rank).map(|r| self.inv_mat[r * self.rank + i]).collect()
    }

    pub fn inversion_bits(&self) -> u128 {
        self.inv_bits
    }
}

/// N(w) = {α ∈ Φ⁺ : w(α) ∈ Φ⁻}; |N(w)| = ℓ(w).
pub fn inversion_set(w: &WeylElement) -> IdealSet {
    IdealSet::from_bits(w.inv_bits)
}

fn mat_identity(n: usize) -> Vec<i64> {
    let mut m = vec![0i64; n * n];
    for i in 0..n {
        m[i * n + i] = 1;
    }
    m
}

fn mat_mul(n: usize, a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k];
            if aik == 0 {
                continue;
            }
            for j in 0..n {
                out[i * n + j] += aik * b[k * n + j];
            }
        }
    }
    out
}

fn mat_apply(n: usize, m: &[i64], c: &[i64]) -> Vec<i64> {
    (0..n)
        .map(|r| (0..n).map(|j| m[r * n + j] * c[j]).sum())
        .collect()
}

/// Matrix of s_i: column j is α_j − ⟨α_j, α_i^∨⟩ α_i.
fn simple_reflection_matrix(rs: &RootSystem, i: usize) -> Vec<i64> {
    let n = rs.rank();
    let mut m = mat_identity(n);
    for j in 0..n {
        m[i * n + j] -= rs.cartan().entry(i, j);
    }
    m
}

/// A fully enumerated Weyl group (or parabolic subgroup), elements in BFS
/// order: grouped by length, deterministic within each length shell.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    elements: Vec<WeylElement>,
    index: HashMap<Vec<i64>, usize>,
}

impl WeylGroup {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &WeylElement {
        &self.elements[i]
    }

    pub fn position(&self, mat: &[i64]) -> Option<usize> {
        self.index.get(mat).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = &WeylElement> {
        self.elements.iter()
    }
}

type BfsResult = (Vec<WeylElement>, HashMap<Vec<i64>, usize>);

struct Bfs<'a> {
    rs: &'a RootSystem,
    gens: Vec<usize>,
    refl: Vec<Vec<i64>>,
    cap: usize,
    // restrict to elements avoiding these inversion bits (the W^Θ walk)
    forbidden: u128,
}

impl<'a> Bfs<'a> {
    fn run(&self) -> Result<BfsResult, Error> {
        let n = self.rs.rank();
        let mut elements = vec![WeylElement::identity(n)];
        let mut index: HashMap<Vec<i64>, usize> = HashMap::new();
        index.insert(elements[0].mat.clone(), 0);
        let mut frontier: Vec<usize> = vec![0];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &ei in &frontier {
                for &i in &self.gens {
                    let beta = elements[ei].inverse_of_simple(i);
                    let Some(beta_idx) = self.rs.index_of(&beta) else {
                        continue; // w⁻¹(α_i) negative: length would drop
                    };
                    if self.forbidden & (1 << beta_idx) != 0 {
                        continue;
                    }
                    let w = &elements[ei];
                    let mat = mat_mul(n, &self.refl[i], &w.mat);
                    if index.contains_key(&mat) {
                        continue;
                    }
                    if elements.len() >= self.cap {
                        return Err(Error::CapExceeded(format!(
                            "Weyl enumeration for {} exceeded cap {}",
                            self.rs, self.cap
                        )));
                    }
                    let mut word = Vec::with_capacity(w.word.len() + 1);
                    word.push(i as u8);
                    word.extend_from_slice(&w.word);
                    let elem = WeylElement {
                        rank: n,
                        mat: mat.clone(),
                        inv_mat: mat_mul(n, &w.inv_mat, &self.refl[i]),
                        word,
                        inv_bits: w.inv_bits | (1 << beta_idx),
                    };
                    index.insert(mat, elements.len());
                    next.push(elements.len());
                    elements.push(elem);
                }
            }
            frontier = next;
        }
        Ok((elements, index))
    }
}

fn reflection_matrices(rs: &RootSystem) -> Vec<Vec<i64>> {
    (0..rs.rank()).map(|i| simple_reflection_matrix(rs, i)).collect()
}

/// BFS enumeration of the full Weyl group. Fails fast when the classical
/// order already exceeds the cap (default 10^6 elements).
pub fn enumerate_weyl_group(rs: &RootSystem, cap: Option<usize>) -> Result<WeylGroup, Error> {
    let cap = cap.unwrap_or(DEFAULT_MATRIX_CAP);
    if rs.weyl_order() > cap as u128 {
        return Err(Error::CapExceeded(format!(
            "|W({rs})| = {} exceeds cap {cap}",
            rs.weyl_order()
        )));
    }
    let bfs = Bfs {
        rs,
        gens: (0..rs.rank()).collect(),
        refl: reflection_matrices(rs),
        cap,
        forbidden: 0,
    };
    let (elements, index) = bfs.run()?;
    Ok(WeylGroup { elements, index })
}

/// The parabolic subgroup W_Θ generated by the reflections in Θ.
pub fn enumerate_parabolic(
    rs: &RootSystem,
    theta: &ThetaSet,
    cap: Option<usize>,
) -> Result<WeylGroup, Error> {
    let bfs = Bfs {
        rs,
        gens: theta.indices(),
        refl: reflection_matrices(rs),
        cap: cap.unwrap_or(DEFAULT_MATRIX_CAP),
        forbidden: 0,
    };
    let (elements, index) = bfs.run()?;
    Ok(WeylGroup { elements, index })
}

/// Minimal coset representatives W^Θ by the restricted walk: only elements
/// with N(w) ∩ Φ⁺_Θ = ∅ are kept or expanded. Output sorted by (length,
/// matrix) for determinism.
pub fn enumerate_quotient(
    rs: &RootSystem,
    theta: &ThetaSet,
    cap: Option<usize>,
) -> Result<Vec<WeylElement>, Error> {
    let cap = cap.unwrap_or(DEFAULT_MATRIX_CAP);
    if theta.is_empty() && rs.weyl_order() > cap as u128 {
        return Err(Error::CapExceeded(format!(
            "|W^Θ| = |W({rs})| = {} exceeds cap {cap}",
            rs.weyl_order()
        )));
    }
    let bfs = Bfs {
        rs,
        gens: (0..rs.rank()).collect(),
        refl: reflection_matrices(rs),
        cap,
        forbidden: rs.phi_theta_plus(theta).bits(),
    };
    let (mut elements, _) = bfs.run()?;
    elements.sort_by(|a, b| (a.length(), &a.mat).cmp(&(b.length(), &b.mat)));
    Ok(elements)
}

/// Reference route to W^Θ: filter a fully enumerated group by the criterion
/// N(w) ∩ Φ⁺_Θ = ∅. Same order as [`enumerate_quotient`].
pub fn quotient_from_group(
    rs: &RootSystem,
    group: &WeylGroup,
    theta: &ThetaSet,
) -> Vec<WeylElement> {
    let phi_theta = rs.phi_theta_plus(theta).bits();
    let mut out: Vec<WeylElement> = group
        .iter()
        .filter(|w| w.inv_bits & phi_theta == 0)
        .cloned()
        .collect();
    out.sort_by(|a, b| (a.length(), &a.mat).cmp(&(b.length(), &b.mat)));
    out
}

/// Rebuild a reduced word from a matrix by stripping right descents.
fn word_from_matrix(rs: &RootSystem, mat: &[i64]) -> Vec<u8> {
    let n = rs.rank();
    let refl = reflection_matrices(rs);
    let mut m = mat.to_vec();
    let mut letters: Vec<u8> = Vec::new();
    loop {
        // a right descent: some α_i with m(α_i) negative
        let descent = (0..n).find(|&i| (0..n).map(|r| m[r * n + i]).sum::<i64>() < 0);
        match descent {
            Some(i) => {
                m = mat_mul(n, &m, &refl[i]);
                letters.push(i as u8);
            }
            None => break,
        }
    }
    debug_assert_eq!(m, mat_identity(n), "descent stripping must reach identity");
    letters.reverse();
    letters
}

/// Build an element from a word (need not be reduced; the stored word is
/// re-derived in reduced form).
pub fn from_word(rs: &RootSystem, word: &[usize]) -> WeylElement {
    let n = rs.rank();
    let refl = reflection_matrices(rs);
    let mut mat = mat_identity(n);
    let mut inv = mat_identity(n);
    for &i in word {
        mat = mat_mul(n, &mat, &refl[i]);
        inv = mat_mul(n, &refl[i], &inv);
    }
    element_from_matrices(rs, mat, inv)
}

fn element_from_matrices(rs: &RootSystem, mat: Vec<i64>, inv_mat: Vec<i64>) -> WeylElement {
    let mut inv_bits = 0u128;
    for (idx, r) in rs.positive_roots().iter().enumerate() {
        let image = mat_apply(rs.rank(), &mat, r.coeffs());
        if Root::new(image).is_negative() {
            inv_bits |= 1 << idx;
        }
    }
    let word = word_from_matrix(rs, &mat);
    debug_assert_eq!(word.len() as u32, inv_bits.count_ones());
    WeylElement {
        rank: rs.rank(),
        mat,
        inv_mat,
        word,
        inv_bits,
    }
}

/// Product uv (apply v first, then u).
pub fn multiply(rs: &RootSystem, u: &WeylElement, v: &WeylElement) -> WeylElement {
    let n = rs.rank();
    let mat = mat_mul(n, &u.mat, &v.mat);
    let inv = mat_mul(n, &v.inv_mat, &u.inv_mat);
    element_from_matrices(rs, mat, inv)
}

/// The affine-cell condition: `Some(|N(w) ∩ I|)` when w⁻¹(α_i) ∈ (−I) ∪ Φ⁺
/// for every simple index i, `None` otherwise. `I` must be a lower ideal for
/// the count to mean a cell dimension, but the test itself is pointwise.
pub fn cell_condition(rs: &RootSystem, w: &WeylElement, ideal: &IdealSet) -> Option<usize> {
    for i in 0..rs.rank() {
        let beta = w.inverse_of_simple(i);
        if beta.iter().all(|&c| c >= 0) {
            continue;
        }
        let neg: Vec<i64> = beta.iter().map(|c| -c).collect();
        let idx = rs.index_of(&neg).expect("image of a root is a root");
        if !ideal.contains(idx) {
            return None;
        }
    }
    Some((w.inv_bits & ideal.bits()).count_ones() as usize)
}

/// Unique factorization w = u·v with u ∈ W^Θ, v ∈ W_Θ, ℓ(w) = ℓ(u) + ℓ(v).
pub fn coset_decompose(
    rs: &RootSystem,
    w: &WeylElement,
    theta: &ThetaSet,
) -> (WeylElement, WeylElement) {
    let n = rs.rank();
    let refl = reflection_matrices(rs);
    let mut u_mat = w.mat.clone();
    let mut u_inv = w.inv_mat.clone();
    let mut letters: Vec<usize> = Vec::new();
    loop {
        // a right descent of u inside Θ: u(α_i) negative
        let descent = theta
            .indices()
            .into_iter()
            .find(|&i| (0..n).map(|r| u_mat[r * n + i]).sum::<i64>() < 0);
        match descent {
            Some(i) => {
                u_mat = mat_mul(n, &u_mat, &refl[i]);
                u_inv = mat_mul(n, &refl[i], &u_inv);
                letters.push(i);
            }
            None => break,
        }
    }
    let u = element_from_matrices(rs, u_mat, u_inv);
    letters.reverse();
    let v = from_word(rs, &letters);
    debug_assert_eq!(u.length() + v.length(), w.length());
    (u, v)
}

// ---------------------------------------------------------------------------
// Type-A fast path: one-line permutations.
//
// The dictionary is w(x_i − x_j) = x_{w(i)} − x_{w(j)}, so inversion and cell
// tests reduce to O(n²) scans of the one-line form. Quotient representatives
// for Θ determined by K are exactly the permutations increasing on each block
// k_{p−1} < j ≤ k_p.
// ---------------------------------------------------------------------------

/// Number of block-increasing permutations: n! / ∏ (block size)!.
pub fn typea_quotient_count(n: usize, ks: &[usize]) -> u128 {
    let fact = |m: u128| (1..=m).product::<u128>();
    let mut count = fact(n as u128);
    let mut lo = 0usize;
    for &k in ks.iter().chain([&n]) {
        count /= fact((k - lo) as u128);
        lo = k;
    }
    count
}

/// Visit every permutation of [n] that increases on each K-block, in
/// lexicographic order of the one-line form (1-based values).
pub fn for_each_block_increasing_perm<F: FnMut(&[u8])>(n: usize, ks: &[usize], f: &mut F) {
    let bounds: Vec<usize> = ks.iter().copied().chain([n]).collect();
    let mut perm = vec![0u8; n];
    let mut remaining: Vec<u8> = (1..=n as u8).collect();
    fn rec<F: FnMut(&[u8])>(
        block: usize,
        bounds: &[usize],
        perm: &mut Vec<u8>,
        remaining: &mut Vec<u8>,
        f: &mut F,
    ) {
        if block == bounds.len() {
            f(perm);
            return;
        }
        let lo = if block == 0 { 0 } else { bounds[block - 1] };
        let size = bounds[block] - lo;
        // choose `size` of the remaining values, ascending into the block
        let m = remaining.len();
        let mut choice: Vec<usize> = (0..size).collect();
        loop {
            for (t, &c) in choice.iter().enumerate() {
                perm[lo + t] = remaining[c];
            }
            let mut rest: Vec<u8> = Vec::with_capacity(m - size);
            let mut ci = 0;
            for (pos, &v) in remaining.iter().enumerate() {
                if ci < size && choice[ci] == pos {
                    ci += 1;
                } else {
                    rest.push(v);
                }
            }
            std::mem::swap(remaining, &mut rest);
            rec(block + 1, bounds, perm, remaining, f);
            std::mem::swap(remaining, &mut rest);
            // next combination in lexicographic order
            let mut t = size;
            loop {
                if t == 0 {
                    return;
                }
                t -= 1;
                if choice[t] != t + m - size {
                    break;
                }
                if t == 0 {
                    return;
                }
            }
            choice[t] += 1;
            for u in t + 1..size {
                choice[u] = choice[u - 1] + 1;
            }
        }
    }
    if n == 0 {
        return;
    }
    rec(0, &bounds, &mut perm, &mut remaining, f);
}

/// The type-A cell condition w⁻¹(w(j) − 1) ≤ h̃(j) for all j, with the
/// convention w(0) = 0. `perm` is 1-based one-line notation, `h_ext` the
/// extended Hessenberg function (entry j−1 is h̃(j)).
pub fn typea_cell_condition(perm: &[u8], h_ext: &[usize]) -> bool {
    let n = perm.len();
    let mut inv = vec![0usize; n + 1];
    for (pos, &v) in perm.iter().enumerate() {
        inv[v as usize] = pos + 1;
    }
    for j in 1..=n {
        let t = perm[j - 1] as usize;
        if t > 1 && inv[t - 1] > h_ext[j - 1] {
            return false;
        }
    }
    true
}

/// `Some(|N(w) ∩ I|)` under the type-A cell condition, where the ideal is
/// the staircase {x_i − x_j : j ≤ h̃(i)}.
pub fn typea_cell_dimension(perm: &[u8], h_ext: &[usize]) -> Option<usize> {
    if !typea_cell_condition(perm, h_ext) {
        return None;
    }
    let n = perm.len();
    let mut dim = 0usize;
    for i in 1..=n {
        for j in (i + 1)..=h_ext[i - 1] {
            if perm[i - 1] > perm[j - 1] {
                dim += 1;
            }
        }
    }
    Some(dim)
}

/// The matrix element of a one-line permutation over A_{n−1}.
pub fn perm_to_element(rs: &RootSystem, perm: &[u8]) -> Result<WeylElement, Error> {
    let n = rs.rank() + 1;
    if rs.family() != Family::A || perm.len() != n {
        return Err(Error::InvalidArgs(format!(
            "expected a permutation of [{n}] over {rs}"
        )));
    }
    let mut seen = vec![false; n + 1];
    for &v in perm {
        let v = v as usize;
        if v == 0 || v > n || seen[v] {
            return Err(Error::InvalidArgs(format!("not a permutation: {perm:?}")));
        }
        seen[v] = true;
    }
    let rank = rs.rank();
    let mut mat = vec![0i64; rank * rank];
    for i in 0..rank {
        // column i: image of α_{i+1} = x_{perm(i+1)} − x_{perm(i+2)}
        let a = perm[i] as usize;
        let b = perm[i + 1] as usize;
        let (lo, hi, sign) = if a < b { (a, b, 1) } else { (b, a, -1) };
        for t in lo..hi {
            mat[(t - 1) * rank + i] = sign;
        }
    }
    let mut inv_perm = vec![0u8; n];
    for (pos, &v) in perm.iter().enumerate() {
        inv_perm[v as usize - 1] = pos as u8 + 1;
    }
    let mut inv_mat = vec![0i64; rank * rank];
    for i in 0..rank {
        let a = inv_perm[i] as usize;
        let b = inv_perm[i + 1] as usize;
        let (lo, hi, sign) = if a < b { (a, b, 1) } else { (b, a, -1) };
        for t in lo..hi {
            inv_mat[(t - 1) * rank + i] = sign;
        }
    }
    Ok(element_from_matrices(rs, mat, inv_mat))
}

/// One-line permutation of a type-A element.
pub fn element_to_perm(rs: &RootSystem, w: &WeylElement) -> Result<Vec<u8>, Error> {
    let n = rs.rank() + 1;
    if rs.family() != Family::A {
        return Err(Error::InvalidArgs(format!("{rs} is not type A")));
    }
    let mut perm = vec![0u8; n];
    for i in 0..rs.rank() {
        let image = w.apply(rs.simple_root(i).coeffs());
        let root = Root::new(image);
        let (pair, flip) = if root.is_positive() {
            (root, false)
        } else {
            (root.negated(), true)
        };
        let support: Vec<usize> = pair.support().collect();
        let (a, b) = (support[0] + 1, support[support.len() - 1] + 2);
        let (pi, pj) = if flip { (b, a) } else { (a, b) };
        if perm[i] != 0 && perm[i] != pi as u8 {
            return Err(Error::InvalidArgs("inconsistent permutation data".into()));
        }
        perm[i] = pi as u8;
        perm[i + 1] = pj as u8;
    }
    Ok(perm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::Family;

    fn rs(family: Family, rank: usize) -> RootSystem {
        RootSystem::new(family, rank).unwrap()
    }

    fn length_generating_function(group: &WeylGroup) -> Vec<usize> {
        let max = group.iter().map(|w| w.length()).max().unwrap();
        let mut gf = vec![0usize; max + 1];
        for w in group.iter() {
            gf[w.length()] += 1;
        }
        gf
    }

    #[test]
    fn small_group_orders() {
        assert_eq!(enumerate_weyl_group(&rs(Family::A, 2), None).unwrap().len(), 6);
        assert_eq!(enumerate_weyl_group(&rs(Family::B, 2), None).unwrap().len(), 8);
        assert_eq!(enumerate_weyl_group(&rs(Family::G, 2), None).unwrap().len(), 12);
        assert_eq!(enumerate_weyl_group(&rs(Family::A, 3), None).unwrap().len(), 24);
    }

    #[test]
    fn a2_length_generating_function() {
        let g = enumerate_weyl_group(&rs(Family::A, 2), None).unwrap();
        assert_eq!(length_generating_function(&g), vec![1, 2, 2, 1]);
    }

    #[test]
    fn cap_failures() {
        assert!(matches!(
            enumerate_weyl_group(&rs(Family::A, 3), Some(10)),
            Err(Error::CapExceeded(_))
        ));
        // E8 must fail fast under the default cap
        assert!(matches!(
            enumerate_weyl_group(&rs(Family::E, 8), None),
            Err(Error::CapExceeded(_))
        ));
        assert!(matches!(
            enumerate_quotient(&rs(Family::E, 8), &ThetaSet::empty(8), None),
            Err(Error::CapExceeded(_))
        ));
    }

    #[test]
    fn inversion_sets_match_definition() {
        let system = rs(Family::B, 3);
        let g = enumerate_weyl_group(&system, None).unwrap();
        for w in g.iter() {
            let mut bits = 0u128;
            for (idx, r) in system.positive_roots().iter().enumerate() {
                if Root::new(w.apply(r.coeffs())).is_negative() {
                    bits |= 1 << idx;
                }
            }
            assert_eq!(bits, w.inversion_bits());
            assert_eq!(w.length(), bits.count_ones() as usize);
        }
    }

    #[test]
    fn identity_and_simple_inversions() {
        let system = rs(Family::A, 2);
        let g = enumerate_weyl_group(&system, None).unwrap();
        assert!(inversion_set(g.element(0)).is_empty());
        for i in 0..2 {
            let s = from_word(&system, &[i]);
            assert_eq!(
                inversion_set(&s).indices(),
                vec![system.simple_root_index(i)]
            );
        }
        let longest = from_word(&system, &[0, 1, 0]);
        assert_eq!(inversion_set(&longest).len(), 3);
    }

    #[test]
    fn exactly_one_longest_element() {
        for (fam, rank) in [(Family::A, 3), (Family::B, 3), (Family::G, 2)] {
            let system = rs(fam, rank);
            let g = enumerate_weyl_group(&system, None).unwrap();
            let top = system.num_positive_roots();
            let longest: Vec<_> = g.iter().filter(|w| w.length() == top).collect();
            assert_eq!(longest.len(), 1);
            let identity: Vec<_> = g.iter().filter(|w| w.length() == 0).collect();
            assert_eq!(identity.len(), 1);
        }
    }

    #[test]
    fn quotient_examples() {
        let system = rs(Family::A, 2);
        let g = enumerate_weyl_group(&system, None).unwrap();
        let all = enumerate_quotient(&system, &ThetaSet::empty(2), None).unwrap();
        assert_eq!(all.len(), g.len());
        let trivial = enumerate_quotient(&system, &ThetaSet::full(2), None).unwrap();
        assert_eq!(trivial.len(), 1);
        assert!(trivial[0].is_identity());
        let theta = ThetaSet::from_indices(2, [0]).unwrap();
        let q = enumerate_quotient(&system, &theta, None).unwrap();
        let mut lengths: Vec<usize> = q.iter().map(|w| w.length()).collect();
        lengths.sort_unstable();
        assert_eq!(lengths, vec![0, 1, 2]);
    }

    #[test]
    fn quotient_fast_path_agrees_with_filter() {
        for (fam, rank) in [(Family::A, 3), (Family::B, 3), (Family::G, 2)] {
            let system = rs(fam, rank);
            let g = enumerate_weyl_group(&system, None).unwrap();
            for mask in 0..(1u64 << rank) {
                let theta = ThetaSet::from_mask(rank, mask);
                let fast = enumerate_quotient(&system, &theta, None).unwrap();
                let slow = quotient_from_group(&system, &g, &theta);
                assert_eq!(fast, slow, "{fam}{rank} mask {mask}");
            }
        }
    }

    #[test]
    fn cell_condition_trivial_cases() {
        let system = rs(Family::A, 3);
        let g = enumerate_weyl_group(&system, None).unwrap();
        let full = IdealSet::full(&system);
        for w in g.iter() {
            assert_eq!(cell_condition(&system, w, &full), Some(w.length()));
        }
        let id = g.element(0);
        assert_eq!(cell_condition(&system, id, &IdealSet::empty()), Some(0));
    }

    #[test]
    fn coset_decomposition_examples() {
        let system = rs(Family::A, 2);
        let theta = ThetaSet::from_indices(2, [0]).unwrap();
        let id = WeylElement::identity(2);
        let (u, v) = coset_decompose(&system, &id, &theta);
        assert!(u.is_identity() && v.is_identity());
        let s1 = from_word(&system, &[0]);
        let (u, v) = coset_decompose(&system, &s1, &theta);
        assert!(u.is_identity());
        assert_eq!(v, s1);
    }

    #[test]
    fn coset_length_additivity_a3() {
        let system = rs(Family::A, 3);
        let g = enumerate_weyl_group(&system, None).unwrap();
        for mask in 0..8u64 {
            let theta = ThetaSet::from_mask(3, mask);
            let phi_theta = system.phi_theta_plus(&theta).bits();
            for w in g.iter() {
                let (u, v) = coset_decompose(&system, w, &theta);
                assert_eq!(u.length() + v.length(), w.length());
                assert_eq!(u.inversion_bits() & phi_theta, 0);
                assert!(v.word().iter().all(|&i| theta.contains(i as usize)));
                assert_eq!(&multiply(&system, &u, &v), w);
            }
        }
    }

    #[test]
    fn typea_condition_examples() {
        assert!(typea_cell_condition(&[1, 2, 3], &[1, 2, 3]));
        assert!(!typea_cell_condition(&[2, 1], &[1, 2]));
        assert!(typea_cell_condition(&[2, 1], &[2, 2]));
    }

    #[test]
    fn block_increasing_enumeration_counts() {
        let mut count = 0usize;
        for_each_block_increasing_perm(4, &[2], &mut |_| count += 1);
        assert_eq!(count, 6);
        assert_eq!(typea_quotient_count(4, &[2]), 6);
        assert_eq!(typea_quotient_count(10, &[2, 4, 5, 8]), 75_600);
        let mut perms = Vec::new();
        for_each_block_increasing_perm(3, &[1], &mut |p| perms.push(p.to_vec()));
        assert_eq!(perms, vec![vec![1, 2, 3], vec![2, 1, 3], vec![3, 1, 2]]);
    }

    #[test]
    fn perm_element_round_trip() {
        let system = rs(Family::A, 3);
        let g = enumerate_weyl_group(&system, None).unwrap();
        for w in g.iter() {
            let p = element_to_perm(&system, w).unwrap();
            let back = perm_to_element(&system, &p).unwrap();
            assert_eq!(&back, w);
        }
    }
}
