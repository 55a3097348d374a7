//! The Poincaré-polynomial formulas and their identity verifier.
//!
//! For a Θ-ideal I the same polynomial is computed four ways (five in type
//! A): summing q^{|N(w) ∩ I|} over admissible w ∈ W^Θ, summing q^{|Y|} over
//! Weyl-type subsets avoiding Φ⁺_Θ, multiplying (1−q^{h+1})/(1−q^h) over
//! I ∖ Φ⁺_Θ, multiplying q-integers with height-distribution exponents, and
//! multiplying q-binomials over the partial Hessenberg data. Equality of the
//! routes is the mathematical content being verified; disagreement signals a
//! bug, not bad input.

use num_traits::One;

use crate::error::Error;
use crate::ideal::{
    extended_function_from_ideal, is_lower_ideal, is_theta_ideal, IdealSet,
    PartialHessenbergFunction,
};
use crate::qpoly::{qbinomial, QPolynomial};
use crate::root_system::{Family, RootSystem, ThetaSet};
use crate::weyl::{
    cell_condition, enumerate_quotient, for_each_block_increasing_perm, typea_cell_dimension,
    typea_quotient_count,
};
use crate::weyltype::enumerate_weyl_type_theta;
use crate::DEFAULT_PERMUTATION_CAP;

fn require_theta_ideal(rs: &RootSystem, ideal: &IdealSet, theta: &ThetaSet) -> Result<(), Error> {
    if !is_theta_ideal(rs, ideal, theta) {
        return Err(Error::InvalidIdeal(if theta.is_empty() {
            format!("{ideal} is not a lower ideal of {rs}")
        } else {
            format!("{ideal} is not a {theta}-ideal of {rs}")
        }));
    }
    Ok(())
}

fn poly_from_histogram(hist: &[u64]) -> QPolynomial {
    QPolynomial::from_coeffs(hist.iter().map(|&c| c.into()).collect())
}

/// Cell summation: Σ q^{|N(w) ∩ I|} over w ∈ W^Θ with w⁻¹(Δ) ⊂ (−I) ∪ Φ⁺.
/// Type A dispatches to the one-line-permutation walk; other types enumerate
/// the quotient as matrices.
pub fn poincare_cells(
    rs: &RootSystem,
    ideal: &IdealSet,
    theta: &ThetaSet,
    cap: Option<usize>,
) -> Result<QPolynomial, Error> {
    require_theta_ideal(rs, ideal, theta)?;
    if rs.family() == Family::A {
        poincare_cells_typea(rs, ideal, theta, cap)
    } else {
        poincare_cells_general(rs, ideal, theta, cap)
    }
}

/// Matrix-path cell summation, valid in every type; kept callable directly
/// so the type-A fast path can be checked against it.
pub fn poincare_cells_general(
    rs: &RootSystem,
    ideal: &IdealSet,
    theta: &ThetaSet,
    cap: Option<usize>,
) -> Result<QPolynomial, Error> {
    require_theta_ideal(rs, ideal, theta)?;
    let quotient = enumerate_quotient(rs, theta, cap)?;
    let mut hist = vec![0u64; ideal.len() + 1];
    for w in &quotient {
        if let Some(d) = cell_condition(rs, w, ideal) {
            hist[d] += 1;
        }
    }
    Ok(poly_from_histogram(&hist))
}

fn poincare_cells_typea(
    rs: &RootSystem,
    ideal: &IdealSet,
    theta: &ThetaSet,
    cap: Option<usize>,
) -> Result<QPolynomial, Error> {
    let cap = cap.unwrap_or(DEFAULT_PERMUTATION_CAP);
    let n = rs.rank() + 1;
    let h_ext = extended_function_from_ideal(rs, ideal)?;
    let ks: Vec<usize> = (1..n).filter(|&i| !theta.contains(i - 1)).collect();
    let count = typea_quotient_count(n, &ks);
    if count > cap as u128 {
        return Err(Error::CapExceeded(format!(
            "|W^Θ| = {count} block-increasing permutations exceeds cap {cap}"
        )));
    }
    let mut hist = vec![0u64; ideal.len() + 1];
    for_each_block_increasing_perm(n, &ks, &mut |perm| {
        if let Some(d) = typea_cell_dimension(perm, &h_ext) {
            hist[d] += 1;
        }
    });
    Ok(poly_from_histogram(&hist))
}

/// Weyl-type summation: Σ q^{|Y|} over Y ∈ 𝒲^{I,Θ}.
pub fn poincare_weyltype(
    rs: &RootSystem,
    ideal: &IdealSet,
    theta: &ThetaSet,
    cap: Option<usize>,
) -> Result<QPolynomial, Error> {
    let subsets = enumerate_weyl_type_theta(rs, ideal, theta, cap)?;
    let mut hist = vec![0u64; ideal.len() + 1];
    for y in &subsets {
        hist[y.len()] += 1;
    }
    Ok(poly_from_histogram(&hist))
}

/// Root-product formula: Π over α ∈ I ∖ Φ⁺_Θ of (1 − q^{height+1}) /
/// (1 − q^{height}), assembled as one numerator and one denominator followed
/// by a single exact division. Exactness is guaranteed for Θ-ideals.
pub fn poincare_product(
    rs: &RootSystem,
    ideal: &IdealSet,
    theta: &ThetaSet,
) -> Result<QPolynomial, Error> {
    require_theta_ideal(rs, ideal, theta)?;
    let rest = ideal.difference(&rs.phi_theta_plus(theta));
    let mut num = QPolynomial::one();
    let mut den = QPolynomial::one();
    for idx in rest.indices() {
        let h = rs.height(idx);
        num = &num * &(&QPolynomial::one() - &QPolynomial::monomial(h + 1));
        den = &den * &(&QPolynomial::one() - &QPolynomial::monomial(h));
    }
    num.exact_div(&den)
}

/// Counts of roots per height in Y, and the consecutive differences used as
/// exponents by the height-distribution product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeightDistribution {
    /// lambda[i] = #{α ∈ Y : height(α) = i+1}; empty for Y = ∅.
    pub lambda: Vec<usize>,
    /// m[i] = lambda[i] − lambda[i+1], with lambda beyond the end read as 0.
    pub m: Vec<i64>,
}

pub fn height_distribution(rs: &RootSystem, set: &IdealSet) -> HeightDistribution {
    let indices = set.indices();
    let r = indices.iter().map(|&i| rs.height(i)).max().unwrap_or(0);
    let mut lambda = vec![0usize; r];
    for &i in &indices {
        lambda[rs.height(i) - 1] += 1;
    }
    let m = (0..r)
        .map(|i| lambda[i] as i64 - lambda.get(i + 1).copied().unwrap_or(0) as i64)
        .collect();
    HeightDistribution { lambda, m }
}

/// The factored form of the height-distribution product: pairs (n, m)
/// standing for [n]_q^m = (1 + q + ... + q^{n−1})^m, zero multiplicities
/// omitted. Multiplicities can be negative; the expanded product is still a
/// polynomial for every Θ-ideal.
pub fn height_dist_factors(
    rs: &RootSystem,
    ideal: &IdealSet,
    theta: &ThetaSet,
) -> Result<Vec<(usize, i64)>, Error> {
    require_theta_ideal(rs, ideal, theta)?;
    let rest = ideal.difference(&rs.phi_theta_plus(theta));
    let dist = height_distribution(rs, &rest);
    Ok(dist
        .m
        .iter()
        .enumerate()
        .filter(|(_, &mi)| mi != 0)
        .map(|(i, &mi)| (i + 2, mi))
        .collect())
}

/// Height-distribution product: Π (1 + q + ... + q^i)^{m_i} over
/// I ∖ Φ⁺_Θ, with negative exponents collected into one denominator and a
/// single exact division at the end (intermediate quotients need not be
/// polynomials).
pub fn poincare_height_dist(
    rs: &RootSystem,
    ideal: &IdealSet,
    theta: &ThetaSet,
) -> Result<QPolynomial, Error> {
    let mut num = QPolynomial::one();
    let mut den = QPolynomial::one();
    for (n, m) in height_dist_factors(rs, ideal, theta)? {
        let factor = QPolynomial::q_int(n);
        if m > 0 {
            num = &num * &factor.pow(m as usize);
        } else {
            den = &den * &factor.pow((-m) as usize);
        }
    }
    num.exact_div(&den)
}

/// q-binomial product over the partial Hessenberg data:
/// Π_{j=1}^{s+1} [h(k_j) − k_{j−1} choose k_j − k_{j−1}]_q with k_0 = 0 and
/// k_{s+1} = n.
pub fn poincare_qbinomial(f: &PartialHessenbergFunction) -> Result<QPolynomial, Error> {
    let mut acc = QPolynomial::one();
    let mut prev = 0usize;
    for (p, &k) in f.ks().iter().chain([&f.n()]).enumerate() {
        let top = f.values()[p] - prev;
        let bottom = k - prev;
        acc = &acc * &qbinomial(top, bottom)?;
        prev = k;
    }
    Ok(acc)
}

/// dim = |I| − |Φ⁺_Θ|; equals the degree of every formula's output.
pub fn dimension(rs: &RootSystem, ideal: &IdealSet, theta: &ThetaSet) -> Result<usize, Error> {
    require_theta_ideal(rs, ideal, theta)?;
    Ok(ideal.len() - rs.phi_theta_plus(theta).len())
}

/// Exponents of the ideal arrangement: the dual partition of the height
/// distribution of I, padded with zeros to the rank.
pub fn arrangement_exponents(rs: &RootSystem, ideal: &IdealSet) -> Result<Vec<usize>, Error> {
    if !is_lower_ideal(rs, ideal) {
        return Err(Error::InvalidIdeal(format!(
            "{ideal} is not a lower ideal of {rs}"
        )));
    }
    let lambda = height_distribution(rs, ideal).lambda;
    let width = lambda.first().copied().unwrap_or(0);
    let mut dual: Vec<usize> = (1..=width)
        .map(|j| lambda.iter().filter(|&&l| l >= j).count())
        .collect();
    dual.resize(rs.rank().max(dual.len()), 0);
    Ok(dual)
}

/// One named pass/fail entry of an identity report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

/// The outcome of running every applicable formula on one Θ-ideal.
#[derive(Clone, Debug)]
pub struct IdentityReport {
    /// (method name, polynomial) in a fixed order.
    pub methods: Vec<(String, QPolynomial)>,
    pub dimension: usize,
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn polynomial(&self) -> &QPolynomial {
        &self.methods[0].1
    }
}

/// Compute every applicable method for (I, Θ), assert their pairwise
/// equality, the degree law, normalization/palindromicity, and the fiber
/// factorization Poin(I, ∅) = Poin(Φ⁺_Θ, ∅) · Poin(I, Θ). Identity
/// violations come back as failed checks; malformed input is an error.
pub fn verify_identity(
    rs: &RootSystem,
    ideal: &IdealSet,
    theta: &ThetaSet,
    hessenberg: Option<&PartialHessenbergFunction>,
    cap: Option<usize>,
) -> Result<IdentityReport, Error> {
    require_theta_ideal(rs, ideal, theta)?;
    let mut methods: Vec<(String, QPolynomial)> = vec![
        ("cells".into(), poincare_cells(rs, ideal, theta, cap)?),
        (
            "weyltype".into(),
            poincare_weyltype(rs, ideal, theta, cap)?,
        ),
        ("product".into(), poincare_product(rs, ideal, theta)?),
        (
            "height-dist".into(),
            poincare_height_dist(rs, ideal, theta)?,
        ),
    ];
    if let Some(f) = hessenberg {
        methods.push(("qbinomial".into(), poincare_qbinomial(f)?));
    }
    let dim = dimension(rs, ideal, theta)?;
    let mut checks = Vec::new();

    let reference = &methods[0].1;
    let disagreeing: Vec<&str> = methods
        .iter()
        .filter(|(_, p)| p != reference)
        .map(|(name, _)| name.as_str())
        .collect();
    checks.push(IdentityCheck {
        name: "methods-agree".into(),
        pass: disagreeing.is_empty(),
        detail: if disagreeing.is_empty() {
            format!("all methods give {reference}")
        } else {
            format!("methods disagreeing with cells: {disagreeing:?}")
        },
    });

    let degree_ok = methods.iter().all(|(_, p)| p.degree() == Some(dim));
    checks.push(IdentityCheck {
        name: "degree-equals-dimension".into(),
        pass: degree_ok,
        detail: format!("dimension {dim}"),
    });

    let norm_ok = methods.iter().all(|(_, p)| {
        p.constant_coeff().is_one() && p.leading_coeff().is_one() && p.is_palindromic()
    });
    checks.push(IdentityCheck {
        name: "normalized-palindromic".into(),
        pass: norm_ok,
        detail: "constant and leading coefficients 1, palindromic".into(),
    });

    let phi_theta = rs.phi_theta_plus(theta);
    let empty = ThetaSet::empty(rs.rank());
    let whole = poincare_product(rs, ideal, &empty)?;
    let fiber = poincare_product(rs, &phi_theta, &empty)?;
    let base = poincare_product(rs, ideal, theta)?;
    let factorization_ok = whole == &fiber * &base;
    checks.push(IdentityCheck {
        name: "leray-hirsch-factorization".into(),
        pass: factorization_ok,
        detail: format!("({fiber}) * ({base})"),
    });

    Ok(IdentityReport {
        methods,
        dimension: dim,
        checks,
    })
}
