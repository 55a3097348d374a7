//! Weyl-type subsets 𝒲^I and 𝒲^{I,Θ}, and the bijection η_Θ sending an
//! admissible minimal coset representative w to N(w) ∩ I.

use crate::error::Error;
use crate::ideal::{is_lower_ideal, is_theta_ideal, IdealSet};
use crate::root_system::{RootSystem, ThetaSet};
use crate::weyl::{cell_condition, enumerate_quotient, WeylElement};
use crate::SUBSET_SCAN_LIMIT;

/// Triples (a, b, c) of positive-root indices inside `ideal` with
/// root_a + root_b = root_c also inside `ideal`.
fn sum_triples(rs: &RootSystem, ideal: &IdealSet) -> Vec<(usize, usize, usize)> {
    let members = ideal.indices();
    let mut out = Vec::new();
    for (p, &a) in members.iter().enumerate() {
        for &b in &members[p + 1..] {
            let sum: Vec<i64> = rs
                .root(a)
                .coeffs()
                .iter()
                .zip(rs.root(b).coeffs())
                .map(|(x, y)| x + y)
                .collect();
            if let Some(c) = rs.index_of(&sum) {
                if ideal.contains(c) {
                    out.push((a, b, c));
                }
            }
        }
    }
    out
}

/// Y ⊆ I is of Weyl type when both Y and I ∖ Y are closed under taking sums
/// that land back in I.
pub fn is_weyl_type(rs: &RootSystem, y: &IdealSet, ideal: &IdealSet) -> Result<bool, Error> {
    if !y.is_subset_of(ideal) {
        return Err(Error::NotSubset);
    }
    if !is_lower_ideal(rs, ideal) {
        return Err(Error::InvalidIdeal(format!("{ideal} is not a lower ideal")));
    }
    let triples = sum_triples(rs, ideal);
    Ok(weyl_type_bits(y.bits(), &triples))
}

fn weyl_type_bits(y: u128, triples: &[(usize, usize, usize)]) -> bool {
    for &(a, b, c) in triples {
        let ya = y & (1 << a) != 0;
        let yb = y & (1 << b) != 0;
        let yc = y & (1 << c) != 0;
        if ya && yb && !yc {
            return false;
        }
        if !ya && !yb && yc {
            return false;
        }
    }
    true
}

/// All of 𝒲^{I,Θ} = {Y ∈ 𝒲^I : Y ∩ Φ⁺_Θ = ∅}, sorted by (|Y|, bit-vector).
///
/// For |I| within [`SUBSET_SCAN_LIMIT`] every subset of I is tested; larger
/// ideals go through the η_Θ bijection over admissible quotient elements.
pub fn enumerate_weyl_type_theta(
    rs: &RootSystem,
    ideal: &IdealSet,
    theta: &ThetaSet,
    cap: Option<usize>,
) -> Result<Vec<IdealSet>, Error> {
    if !is_theta_ideal(rs, ideal, theta) {
        return Err(Error::InvalidIdeal(format!(
            "{ideal} is not a {theta}-ideal of {rs}"
        )));
    }
    if ideal.len() <= SUBSET_SCAN_LIMIT {
        return enumerate_weyl_type_brute(rs, ideal, theta);
    }
    let quotient = enumerate_quotient(rs, theta, cap)?;
    let mut out: Vec<IdealSet> = quotient
        .iter()
        .filter(|w| cell_condition(rs, w, ideal).is_some())
        .map(|w| IdealSet::from_bits(w.inversion_bits() & ideal.bits()))
        .collect();
    out.sort_by_key(|s| (s.len(), s.bits()));
    Ok(out)
}

/// Independent subset-scan route: every Y ⊆ I is tested directly against the
/// Weyl-type conditions and the Φ⁺_Θ-avoidance filter.
pub fn enumerate_weyl_type_brute(
    rs: &RootSystem,
    ideal: &IdealSet,
    theta: &ThetaSet,
) -> Result<Vec<IdealSet>, Error> {
    if ideal.len() > SUBSET_SCAN_LIMIT {
        return Err(Error::CapExceeded(format!(
            "subset scan over 2^{} subsets refused (limit 2^{SUBSET_SCAN_LIMIT})",
            ideal.len()
        )));
    }
    let triples = sum_triples(rs, ideal);
    let phi_theta = rs.phi_theta_plus(theta).bits();
    let full = ideal.bits();
    let mut out = Vec::new();
    let mut y = full;
    loop {
        if y & phi_theta == 0 && weyl_type_bits(y, &triples) {
            out.push(IdealSet::from_bits(y));
        }
        if y == 0 {
            break;
        }
        y = (y - 1) & full;
    }
    out.sort_by_key(|s| (s.len(), s.bits()));
    Ok(out)
}

/// η_Θ(w) = N(w) ∩ I. Defined on w ∈ W^Θ satisfying the cell condition for
/// I; on that domain it is a bijection onto 𝒲^{I,Θ}.
pub fn eta_theta(
    rs: &RootSystem,
    w: &WeylElement,
    ideal: &IdealSet,
    theta: &ThetaSet,
) -> Result<IdealSet, Error> {
    let phi_theta = rs.phi_theta_plus(theta).bits();
    if w.inversion_bits() & phi_theta != 0 {
        return Err(Error::DomainViolation(format!(
            "element of length {} is not a minimal coset representative for {theta}",
            w.length()
        )));
    }
    if cell_condition(rs, w, ideal).is_none() {
        return Err(Error::DomainViolation(
            "element fails the cell condition for the given ideal".into(),
        ));
    }
    Ok(IdealSet::from_bits(w.inversion_bits() & ideal.bits()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::Family;
    use crate::weyl::enumerate_weyl_group;

    fn a2() -> RootSystem {
        RootSystem::new(Family::A, 2).unwrap()
    }

    #[test]
    fn empty_and_full_are_weyl_type() {
        let rs = a2();
        let full = IdealSet::full(&rs);
        assert!(is_weyl_type(&rs, &IdealSet::empty(), &full).unwrap());
        assert!(is_weyl_type(&rs, &full, &full).unwrap());
    }

    #[test]
    fn missing_sum_is_not_weyl_type() {
        let rs = a2();
        let full = IdealSet::full(&rs);
        let simples = IdealSet::from_indices(
            &rs,
            [rs.simple_root_index(0), rs.simple_root_index(1)],
        )
        .unwrap();
        assert!(!is_weyl_type(&rs, &simples, &full).unwrap());
    }

    #[test]
    fn not_subset_is_an_error() {
        let rs = a2();
        let y = IdealSet::full(&rs);
        let ideal = IdealSet::from_indices(&rs, [rs.simple_root_index(0)]).unwrap();
        assert!(matches!(
            is_weyl_type(&rs, &y, &ideal),
            Err(Error::NotSubset)
        ));
    }

    #[test]
    fn a2_full_ideal_weyl_type_counts() {
        let rs = a2();
        let full = IdealSet::full(&rs);
        let subsets =
            enumerate_weyl_type_theta(&rs, &full, &ThetaSet::empty(2), None).unwrap();
        assert_eq!(subsets.len(), 6);
        let mut gf = vec![0usize; 4];
        for y in &subsets {
            gf[y.len()] += 1;
        }
        assert_eq!(gf, vec![1, 2, 2, 1]);
    }

    #[test]
    fn phi_theta_itself_has_only_empty() {
        let rs = RootSystem::new(Family::A, 3).unwrap();
        let theta = ThetaSet::from_indices(3, [0, 2]).unwrap();
        let ideal = rs.phi_theta_plus(&theta);
        let subsets = enumerate_weyl_type_theta(&rs, &ideal, &theta, None).unwrap();
        assert_eq!(subsets, vec![IdealSet::empty()]);
    }

    #[test]
    fn single_root_ideal() {
        let rs = a2();
        let ideal = IdealSet::from_indices(&rs, [rs.simple_root_index(0)]).unwrap();
        let subsets =
            enumerate_weyl_type_theta(&rs, &ideal, &ThetaSet::empty(2), None).unwrap();
        assert_eq!(subsets.len(), 2);
    }

    #[test]
    fn eta_theta_on_a2_is_bijective() {
        let rs = a2();
        let full = IdealSet::full(&rs);
        let theta = ThetaSet::empty(2);
        let g = enumerate_weyl_group(&rs, None).unwrap();
        let mut images: Vec<IdealSet> = g
            .iter()
            .map(|w| eta_theta(&rs, w, &full, &theta).unwrap())
            .collect();
        images.sort_by_key(|s| (s.len(), s.bits()));
        images.dedup();
        assert_eq!(images.len(), 6);
        let expected = enumerate_weyl_type_brute(&rs, &full, &theta).unwrap();
        assert_eq!(images, expected);
        assert!(eta_theta(&rs, g.element(0), &full, &theta)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn eta_theta_domain_violations() {
        let rs = a2();
        let theta = ThetaSet::from_indices(2, [0]).unwrap();
        let g = enumerate_weyl_group(&rs, None).unwrap();
        let s1 = g
            .iter()
            .find(|w| w.length() == 1 && w.word() == [0])
            .unwrap();
        // s1 ∈ W_Θ, not W^Θ
        assert!(matches!(
            eta_theta(&rs, s1, &IdealSet::full(&rs), &theta),
            Err(Error::DomainViolation(_))
        ));
    }
}
