//! Finite root systems from Cartan data.
//!
//! Roots live in simple-root coordinates only: a root is its integer
//! coefficient vector over Δ = {α_1, ..., α_n}. Heights, simple reflections
//! via the Cartan pairing, and the orders ⪯ and ⪯_Θ are all read off those
//! coordinates, so no Euclidean embedding is stored. Simple-root indices are
//! 0-based throughout the crate; α_{i+1} in the usual 1-based naming is
//! simple index i here.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::ideal::IdealSet;

/// The bit-set type for positive-root index sets caps how large a system we
/// can track; 128 bits covers every exceptional type and the classical types
/// through E8-sized positive systems.
pub const MAX_POSITIVE_ROOTS: usize = 128;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn as_char(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            "E" | "e" => Ok(Family::E),
            "F" | "f" => Ok(Family::F),
            "G" | "g" => Ok(Family::G),
            other => Err(Error::InvalidArgs(format!("unknown type family {other:?}"))),
        }
    }
}

/// Cartan matrix in the Bourbaki numbering. `entry(i, j)` is the pairing
/// ⟨α_j, α_i^∨⟩, so row i drives the simple reflection s_i.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanMatrix {
    family: Family,
    rank: usize,
    entries: Vec<i64>,
}

impl CartanMatrix {
    pub fn new(family: Family, rank: usize) -> Result<Self, Error> {
        let valid = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !valid {
            return Err(Error::UnsupportedType {
                family: family.to_string(),
                rank,
                reason: "not a finite type in this family".into(),
            });
        }
        let n = rank;
        let mut entries = vec![0i64; n * n];
        let mut set = |i: usize, j: usize, v: i64| entries[i * n + j] = v;
        for i in 0..n {
            set(i, i, 2);
        }
        let mut bond = |i: usize, j: usize| {
            set(i, j, -1);
            set(j, i, -1);
        };
        match family {
            Family::A => {
                for i in 0..n - 1 {
                    bond(i, i + 1);
                }
            }
            Family::B => {
                for i in 0..n - 1 {
                    bond(i, i + 1);
                }
                // α_n short: ⟨α_{n-1}, α_n^∨⟩ = -2
                set(n - 1, n - 2, -2);
            }
            Family::C => {
                for i in 0..n - 1 {
                    bond(i, i + 1);
                }
                // α_n long: ⟨α_n, α_{n-1}^∨⟩ = -2
                set(n - 2, n - 1, -2);
            }
            Family::D => {
                for i in 0..n - 2 {
                    bond(i, i + 1);
                }
                bond(n - 3, n - 1);
            }
            Family::E => {
                // chain 1-3-4-5-6(-7-8), with 2 attached to 4
                bond(0, 2);
                for i in 2..n - 1 {
                    bond(i, i + 1);
                }
                bond(1, 3);
            }
            Family::F => {
                bond(0, 1);
                bond(2, 3);
                // α_1, α_2 long; α_3, α_4 short
                set(1, 2, -1);
                set(2, 1, -2);
            }
            Family::G => {
                // α_1 short, α_2 long
                set(0, 1, -3);
                set(1, 0, -1);
            }
        }
        Ok(CartanMatrix {
            family,
            rank,
            entries,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// ⟨α_j, α_i^∨⟩
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.rank + j]
    }

    /// ⟨α, α_i^∨⟩ for α given in simple-root coordinates.
    pub fn pairing(&self, coeffs: &[i64], i: usize) -> i64 {
        (0..self.rank).map(|j| coeffs[j] * self.entry(i, j)).sum()
    }
}

/// A root in simple-root coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    coeffs: Vec<i64>,
}

impl Root {
    pub fn new(coeffs: Vec<i64>) -> Self {
        Root { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Sum of the simple-root coefficients; positive for positive roots.
    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0) && self.coeffs.iter().any(|&c| c > 0)
    }

    pub fn is_negative(&self) -> bool {
        self.coeffs.iter().all(|&c| c <= 0) && self.coeffs.iter().any(|&c| c < 0)
    }

    pub fn negated(&self) -> Root {
        Root {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Indices of the simple roots appearing with nonzero coefficient.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i)
    }
}

/// A subset Θ of the simple roots, stored as a bitmask over 0-based simple
/// indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ThetaSet {
    mask: u64,
    rank: usize,
}

impl ThetaSet {
    pub fn empty(rank: usize) -> Self {
        ThetaSet { mask: 0, rank }
    }

    pub fn full(rank: usize) -> Self {
        ThetaSet {
            mask: if rank == 64 { u64::MAX } else { (1u64 << rank) - 1 },
            rank,
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(
        rank: usize,
        indices: I,
    ) -> Result<Self, Error> {
        let mut mask = 0u64;
        for i in indices {
            if i >= rank {
                return Err(Error::InvalidArgs(format!(
                    "simple index {i} out of range for rank {rank}"
                )));
            }
            mask |= 1 << i;
        }
        Ok(ThetaSet { mask, rank })
    }

    pub fn from_mask(rank: usize, mask: u64) -> Self {
        ThetaSet { mask, rank }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.rank && self.mask & (1 << i) != 0
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn indices(&self) -> Vec<usize> {
        (0..self.rank).filter(|&i| self.contains(i)).collect()
    }

    /// The complementary subset of simple indices.
    pub fn complement(&self) -> ThetaSet {
        ThetaSet {
            mask: ThetaSet::full(self.rank).mask & !self.mask,
            rank: self.rank,
        }
    }
}

impl fmt::Display for ThetaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.indices().iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "a{}", i + 1)?;
        }
        write!(f, "}}")
    }
}

/// A finite positive system: the Cartan matrix plus the canonically ordered
/// list of positive roots, closed under simple reflections.
///
/// The canonical order is height ascending, then coefficient vector
/// lexicographic ascending; indices into it are stable across runs and are
/// the wire format for ideals.
#[derive(Clone, Debug)]
pub struct RootSystem {
    cartan: CartanMatrix,
    roots: Vec<Root>,
    index: HashMap<Vec<i64>, usize>,
}

impl RootSystem {
    pub fn new(family: Family, rank: usize) -> Result<Self, Error> {
        let cartan = CartanMatrix::new(family, rank)?;
        let expected = classical_positive_count(family, rank);
        if expected > MAX_POSITIVE_ROOTS {
            return Err(Error::CapExceeded(format!(
                "{family}{rank} has {expected} positive roots, above the supported bound of {MAX_POSITIVE_ROOTS}"
            )));
        }
        let mut roots = Vec::new();
        let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
        let mut queue: Vec<Vec<i64>> = Vec::new();
        for i in 0..rank {
            let mut c = vec![0i64; rank];
            c[i] = 1;
            seen.insert(c.clone(), ());
            queue.push(c);
        }
        while let Some(c) = queue.pop() {
            for i in 0..rank {
                let p = cartan.pairing(&c, i);
                let mut image = c.clone();
                image[i] -= p;
                let r = Root::new(image);
                if r.is_positive() && !seen.contains_key(r.coeffs()) {
                    seen.insert(r.coeffs().to_vec(), ());
                    queue.push(r.coeffs().to_vec());
                }
            }
            roots.push(Root::new(c));
        }
        roots.sort_by(|a, b| (a.height(), a.coeffs()).cmp(&(b.height(), b.coeffs())));
        debug_assert_eq!(roots.len(), expected);
        let index = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.coeffs().to_vec(), i))
            .collect();
        Ok(RootSystem {
            cartan,
            roots,
            index,
        })
    }

    pub fn family(&self) -> Family {
        self.cartan.family()
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn root(&self, idx: usize) -> &Root {
        &self.roots[idx]
    }

    pub fn height(&self, idx: usize) -> usize {
        self.roots[idx].height() as usize
    }

    /// Canonical index of a positive root given by coordinates.
    pub fn index_of(&self, coeffs: &[i64]) -> Option<usize> {
        self.index.get(coeffs).copied()
    }

    pub fn simple_root(&self, i: usize) -> Root {
        let mut c = vec![0i64; self.rank()];
        c[i] = 1;
        Root::new(c)
    }

    /// Canonical index of the simple root α_i (0-based i).
    pub fn simple_root_index(&self, i: usize) -> usize {
        self.index_of(self.simple_root(i).coeffs())
            .expect("simple roots are positive roots")
    }

    /// Whether `coeffs` is a root (positive or negative).
    pub fn is_root(&self, coeffs: &[i64]) -> bool {
        self.index.contains_key(coeffs)
            || self
                .index
                .contains_key(&coeffs.iter().map(|c| -c).collect::<Vec<_>>())
    }

    /// s_i(α) = α − ⟨α, α_i^∨⟩ α_i. `NotARoot` unless α ∈ Φ.
    pub fn reflect_simple(&self, i: usize, alpha: &Root) -> Result<Root, Error> {
        if i >= self.rank() {
            return Err(Error::InvalidArgs(format!(
                "simple index {i} out of range for rank {}",
                self.rank()
            )));
        }
        if !self.is_root(alpha.coeffs()) {
            return Err(Error::NotARoot(alpha.coeffs().to_vec()));
        }
        let p = self.cartan.pairing(alpha.coeffs(), i);
        let mut c = alpha.coeffs().to_vec();
        c[i] -= p;
        Ok(Root::new(c))
    }

    /// Image of the positive root `idx` under s_i as a positive-root index;
    /// `None` exactly when `idx` is α_i itself (the image is −α_i).
    pub fn reflect_index(&self, i: usize, idx: usize) -> Option<usize> {
        let image = self
            .reflect_simple(i, &self.roots[idx])
            .expect("stored roots are roots");
        self.index_of(image.coeffs())
    }

    /// Order test: with Θ = ∅ this is the plain root order ⪯ (β − α has
    /// nonnegative coefficients); with nonempty Θ it additionally requires
    /// the support of β − α to lie in Θ, which is the order ⪯_Θ.
    pub fn leq(&self, alpha: &Root, beta: &Root, theta: &ThetaSet) -> bool {
        let diff: Vec<i64> = beta
            .coeffs()
            .iter()
            .zip(alpha.coeffs())
            .map(|(b, a)| b - a)
            .collect();
        if diff.iter().any(|&d| d < 0) {
            return false;
        }
        if theta.is_empty() {
            return true;
        }
        diff.iter()
            .enumerate()
            .all(|(k, &d)| d == 0 || theta.contains(k))
    }

    pub fn leq_indices(&self, a: usize, b: usize, theta: &ThetaSet) -> bool {
        self.leq(&self.roots[a], &self.roots[b], theta)
    }

    /// Strict ⪯_Θ for any Θ including ∅ (where it degenerates to equality
    /// only): β − α nonnegative with support inside Θ.
    pub(crate) fn leq_theta_support(&self, a: usize, b: usize, theta: &ThetaSet) -> bool {
        let alpha = self.roots[a].coeffs();
        let beta = self.roots[b].coeffs();
        (0..self.rank()).all(|k| {
            let d = beta[k] - alpha[k];
            d == 0 || (d > 0 && theta.contains(k))
        })
    }

    /// Φ⁺_Θ: the positive roots supported on Θ.
    pub fn phi_theta_plus(&self, theta: &ThetaSet) -> IdealSet {
        let mut bits = 0u128;
        for (idx, r) in self.roots.iter().enumerate() {
            if r.support().all(|k| theta.contains(k)) {
                bits |= 1 << idx;
            }
        }
        IdealSet::from_bits(bits)
    }

    /// Classical order of the Weyl group for this type.
    pub fn weyl_order(&self) -> u128 {
        let n = self.rank() as u128;
        let fact = |m: u128| (1..=m).product::<u128>();
        match self.family() {
            Family::A => fact(n + 1),
            Family::B | Family::C => (1u128 << n) * fact(n),
            Family::D => (1u128 << (n - 1)) * fact(n),
            Family::E => match self.rank() {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1_152,
            Family::G => 12,
        }
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family(), self.rank())
    }
}

fn classical_positive_count(family: Family, rank: usize) -> usize {
    match family {
        Family::A => rank * (rank + 1) / 2,
        Family::B | Family::C => rank * rank,
        Family::D => rank * (rank - 1),
        Family::E => match rank {
            6 => 36,
            7 => 63,
            _ => 120,
        },
        Family::F => 24,
        Family::G => 6,
    }
}
