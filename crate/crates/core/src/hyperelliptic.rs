//! The gamma-hyperelliptic layer: classification of candidate semigroups
//! into the point types seen under a degree-2 covering, odd non-gap
//! profiles, the even non-gap sum identity, and the extremal gap-set
//! construction for the unramified interval case.
//!
//! Candidate classes here are supersets of the semigroups actually realized
//! by points on gamma-hyperelliptic curves (not every numerical semigroup
//! is a Weierstrass semigroup). Bound checks run over the larger class, so
//! a pass is one-sided evidence and a failure singles out a combinatorial
//! counterexample worth reporting.

use crate::error::{Error, Result};
use crate::semigroup::{GapSequence, NumericalSemigroup};

/// A `(g, gamma)` covering shape: genus `g` upstairs, `gamma` downstairs,
/// with the ramification count and the cap on type-I points derived.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoveringProfile {
    g: i64,
    gamma: i64,
    /// Ramification-point count `2g - 4*gamma + 2`.
    r: i64,
    /// Cap on the number of type-I points: `min(gamma^3 - gamma, r)`.
    t_max: i64,
}

impl CoveringProfile {
    pub fn new(g: i64, gamma: i64) -> Result<Self> {
        if gamma < 0 || g < 2 * gamma - 1 {
            return Err(Error::PreconditionViolated(format!(
                "covering profile needs gamma >= 0 and g >= 2*gamma - 1, got g = {g}, gamma = {gamma}"
            )));
        }
        let r = 2 * g - 4 * gamma + 2;
        Ok(CoveringProfile {
            g,
            gamma,
            r,
            t_max: (gamma * gamma * gamma - gamma).min(r),
        })
    }

    pub fn g(&self) -> i64 {
        self.g
    }

    pub fn gamma(&self) -> i64 {
        self.gamma
    }

    pub fn ramification_count(&self) -> i64 {
        self.r
    }

    pub fn t_max(&self) -> i64 {
        self.t_max
    }
}

/// Classification of a ramified point by its image downstairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RamifiedClass {
    /// The image is a Weierstrass point (halved part non-ordinary).
    TypeI,
    /// The image is not a Weierstrass point (halved part ordinary).
    TypeII,
}

/// Sub-cases for an unramified point of the covering.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnramifiedCase {
    /// Some gap lies in `[g - 2*gamma + 1, g]`.
    CaseA,
    /// The whole interval `[g - 2*gamma + 1, g]` consists of elements.
    CaseB,
}

/// The `gamma` odd non-gaps in `[1, 2g-1]`, in decreasing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddNongapProfile(Vec<u32>);

impl OddNongapProfile {
    /// `u_1 > u_2 > .. > u_gamma`.
    pub fn values(&self) -> &[u32] {
        &self.0
    }

    /// The smallest entry `u_gamma`, if any.
    pub fn min(&self) -> Option<u32> {
        self.0.last().copied()
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().map(|&x| x as u64).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

fn check_gamma(s: &NumericalSemigroup, gamma: u32) -> Result<()> {
    let actual = s.even_gap_count();
    if actual != gamma {
        return Err(Error::GammaMismatch {
            expected: gamma,
            actual,
        });
    }
    Ok(())
}

/// Type I when the halved even part carries positive weight, type II when
/// it is ordinary.
pub fn classify_ramified(s: &NumericalSemigroup, gamma: u32) -> Result<RamifiedClass> {
    check_gamma(s, gamma)?;
    if s.halved_even_part().weight() > 0 {
        Ok(RamifiedClass::TypeI)
    } else {
        Ok(RamifiedClass::TypeII)
    }
}

/// Whether the smallest positive even element is at most `2*gamma + 2`.
/// Among the `gamma + 1` even numbers in `[2, 2*gamma + 2]` at most `gamma`
/// can be gaps, so this holds for every consistent input; it is surfaced
/// as a named check rather than assumed.
pub fn min_even_nongap_check(s: &NumericalSemigroup, gamma: u32) -> Result<bool> {
    check_gamma(s, gamma)?;
    Ok(s.smallest_even_nongap() <= 2 * gamma + 2)
}

/// Whether every element is at least `g - 2*gamma + 1`, the multiplicity
/// constraint satisfied by unramified points.
pub fn is_type3_candidate(s: &NumericalSemigroup, gamma: u32) -> Result<bool> {
    let g = s.genus();
    if g < 2 * gamma {
        return Err(Error::PreconditionViolated(format!(
            "type-III candidacy needs g >= 2*gamma, got g = {g}, gamma = {gamma}"
        )));
    }
    Ok(s.multiplicity() > g - 2 * gamma)
}

/// Splits a type-III candidate by whether `[g - 2*gamma + 1, g]` meets the
/// gap set.
pub fn classify_unramified(s: &NumericalSemigroup, gamma: u32) -> Result<UnramifiedCase> {
    if !is_type3_candidate(s, gamma)? {
        return Err(Error::PreconditionViolated(format!(
            "not a type-III candidate: multiplicity {} < {}",
            s.multiplicity(),
            s.genus() - 2 * gamma + 1
        )));
    }
    let g = s.genus();
    let lo = g - 2 * gamma + 1;
    if (lo..=g).any(|x| !s.contains(x as u64)) {
        Ok(UnramifiedCase::CaseA)
    } else {
        Ok(UnramifiedCase::CaseB)
    }
}

/// The `gamma` odd non-gaps in `[1, 2g-1]`, descending. Their count always
/// equals the even-gap count: of the `g` odd numbers in the window, all
/// but the `g - gamma` odd gaps are elements.
pub fn odd_nongap_profile(s: &NumericalSemigroup, gamma: u32) -> Result<OddNongapProfile> {
    check_gamma(s, gamma)?;
    let g = s.genus();
    let mut odds: Vec<u32> = Vec::with_capacity(gamma as usize);
    if g > 0 {
        let mut x = 2 * g - 1;
        loop {
            if s.contains(x as u64) {
                odds.push(x);
            }
            if x == 1 {
                break;
            }
            x -= 2;
        }
    }
    debug_assert_eq!(odds.len(), gamma as usize);
    Ok(OddNongapProfile(odds))
}

/// Sum of the even elements in `(0, 2g]`. For type-II candidates this is
/// exactly `g^2 + g - gamma^2 - gamma`.
pub fn even_nongap_sum(s: &NumericalSemigroup) -> u64 {
    let g = s.genus() as u64;
    (1..=g).map(|x| 2 * x).filter(|&x| s.contains(x)).sum()
}

/// The weight-maximizing case-B gap set
/// `{1, .., g-2*gamma} U {2g-6*gamma+2, .., 2g-4*gamma+1}`.
///
/// `g >= 6*gamma - 1` keeps the second block above `g`, which is what makes
/// the complement closed; below that the case-B class is handled purely by
/// enumeration. The result has weight `2*gamma*(g - 4*gamma + 1)`.
pub fn extremal_case_b_gap_set(g: u32, gamma: u32) -> Result<GapSequence> {
    if g + 1 < 6 * gamma {
        return Err(Error::PreconditionViolated(format!(
            "extremal case-B construction needs g >= 6*gamma - 1, got g = {g}, gamma = {gamma}"
        )));
    }
    let mut gaps: Vec<u32> = (1..=g - 2 * gamma).collect();
    if gamma > 0 {
        gaps.extend(2 * g - 6 * gamma + 2..=2 * g - 4 * gamma + 1);
    }
    GapSequence::new(gaps)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gaps: &[u32]) -> NumericalSemigroup {
        NumericalSemigroup::from_gaps(gaps).unwrap()
    }

    #[test]
    fn covering_profile_fields() {
        let p = CoveringProfile::new(16, 3).unwrap();
        assert_eq!(p.ramification_count(), 22);
        assert_eq!(p.t_max(), 22); // min(24, 22)
        let p = CoveringProfile::new(20, 3).unwrap();
        assert_eq!(p.t_max(), 24); // min(24, 30)
        assert!(CoveringProfile::new(3, 3).is_err());
        // r >= 2 whenever g >= 2*gamma
        for gamma in 0..6 {
            for g in (2 * gamma)..(2 * gamma + 10) {
                let p = CoveringProfile::new(g, gamma).unwrap();
                assert!(p.ramification_count() >= 2);
                assert!(p.t_max() >= 0);
            }
        }
    }

    #[test]
    fn classify_ramified_examples() {
        let s = sg(&[1, 2, 3, 4, 5, 7, 8]);
        assert_eq!(classify_ramified(&s, 3).unwrap(), RamifiedClass::TypeI);
        let s = sg(&[1, 2, 3, 4, 5, 6, 7, 9]);
        assert_eq!(classify_ramified(&s, 3).unwrap(), RamifiedClass::TypeII);
        let s = sg(&[1, 3]);
        assert_eq!(classify_ramified(&s, 0).unwrap(), RamifiedClass::TypeII);
        assert!(matches!(
            classify_ramified(&s, 2),
            Err(Error::GammaMismatch {
                expected: 2,
                actual: 0
            })
        ));
    }

    #[test]
    fn min_even_nongap_examples() {
        assert!(min_even_nongap_check(&sg(&[1, 2, 3, 4, 5, 7, 8]), 3).unwrap());
        assert!(min_even_nongap_check(&sg(&[1, 3]), 0).unwrap());
        assert!(min_even_nongap_check(&sg(&[1, 2, 3, 4, 5, 6, 7, 9]), 3).unwrap());
    }

    #[test]
    fn type3_candidate_examples() {
        let hyper14: Vec<u32> = (0..14).map(|i| 2 * i + 1).collect();
        assert!(!is_type3_candidate(&sg(&hyper14), 3).unwrap());
        let caseb: Vec<u32> = (1..=12).chain(20..=25).collect();
        assert!(is_type3_candidate(&sg(&caseb), 3).unwrap());
        let ordinary: Vec<u32> = (1..=8).collect();
        assert!(is_type3_candidate(&sg(&ordinary), 3).unwrap());
        assert!(matches!(
            is_type3_candidate(&sg(&[1, 2]), 3),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn classify_unramified_examples() {
        let caseb: Vec<u32> = (1..=12).chain(20..=25).collect();
        assert_eq!(
            classify_unramified(&sg(&caseb), 3).unwrap(),
            UnramifiedCase::CaseB
        );
        let casea: Vec<u32> = (1..=13).chain(15..=19).collect();
        assert_eq!(
            classify_unramified(&sg(&casea), 3).unwrap(),
            UnramifiedCase::CaseA
        );
        let ordinary: Vec<u32> = (1..=9).collect();
        assert_eq!(
            classify_unramified(&sg(&ordinary), 3).unwrap(),
            UnramifiedCase::CaseA
        );
        let hyper: Vec<u32> = (0..14).map(|i| 2 * i + 1).collect();
        assert!(classify_unramified(&sg(&hyper), 3).is_err());
    }

    #[test]
    fn odd_nongap_profile_examples() {
        let s = sg(&[1, 2, 3, 4, 5, 6, 7, 9]);
        assert_eq!(odd_nongap_profile(&s, 3).unwrap().values(), &[15, 13, 11]);
        let s = sg(&[1, 3]);
        assert!(odd_nongap_profile(&s, 0).unwrap().is_empty());
        let s = sg(&[1, 2, 3, 4, 5, 7, 8]);
        let p = odd_nongap_profile(&s, 3).unwrap();
        assert_eq!(p.values(), &[13, 11, 9]);
        assert_eq!(p.min(), Some(9));
        assert_eq!(p.sum(), 33);
    }

    #[test]
    fn even_nongap_sum_examples() {
        let s = sg(&[1, 2, 3, 4, 5, 6, 7, 9]);
        assert_eq!(even_nongap_sum(&s), 60);
        assert_eq!(60, 64 + 8 - 9 - 3);
        let s = sg(&[1, 2, 3]);
        assert_eq!(even_nongap_sum(&s), 10);
        assert_eq!(even_nongap_sum(&NumericalSemigroup::natural()), 0);
    }

    #[test]
    fn halved_genus_and_parity_count_consistency() {
        // The halved even part has genus equal to the even-gap count, and
        // there are exactly that many odd non-gaps in [1, 2g-1].
        let cfg = crate::enumeration::EnumerationConfig::default();
        for g in 0..=12u32 {
            for s in crate::enumeration::enumerate_genus(g, &cfg).unwrap() {
                let gamma = s.even_gap_count();
                assert_eq!(s.halved_even_part().genus(), gamma, "gaps {:?}", s.gaps());
                let profile = odd_nongap_profile(&s, gamma).unwrap();
                assert_eq!(profile.len() as u32, gamma, "gaps {:?}", s.gaps());
            }
        }
    }

    #[test]
    fn conditional_odd_sum_bound() {
        // Type-II candidates whose smallest odd non-gap clears 2g - 2*gamma - 1
        // have odd-sum at least 2*gamma*g - gamma^2 - 2*gamma.
        let cfg = crate::enumeration::EnumerationConfig::default();
        for g in 1..=14u32 {
            for s in crate::enumeration::enumerate_genus(g, &cfg).unwrap() {
                let gamma = s.even_gap_count();
                if gamma == 0 || gamma > 5 || !s.halved_even_part().is_ordinary() {
                    continue;
                }
                let profile = odd_nongap_profile(&s, gamma).unwrap();
                let (g, gamma) = (g as i64, gamma as i64);
                if profile.min().unwrap() as i64 >= 2 * g - 2 * gamma - 1 {
                    assert!(
                        profile.sum() as i64 >= 2 * gamma * g - gamma * gamma - 2 * gamma,
                        "gaps {:?}",
                        s.gaps()
                    );
                }
            }
        }
    }

    #[test]
    fn extremal_case_b_examples() {
        let gs = extremal_case_b_gap_set(18, 3).unwrap();
        let expected: Vec<u32> = (1..=12).chain(20..=25).collect();
        assert_eq!(gs.gaps(), expected.as_slice());
        assert_eq!(gs.weight(), 42);
        assert_eq!(42, 2 * 3 * (18 - 4 * 3 + 1));

        let gs = extremal_case_b_gap_set(17, 3).unwrap();
        let expected: Vec<u32> = (1..=11).chain(18..=23).collect();
        assert_eq!(gs.gaps(), expected.as_slice());
        assert_eq!(gs.weight(), 36);

        // Boundary g = 6*gamma - 1 at gamma = 1.
        let gs = extremal_case_b_gap_set(5, 1).unwrap();
        assert_eq!(gs.gaps(), &[1, 2, 3, 6, 7]);
        assert_eq!(gs.weight(), 4);
        assert_eq!(4, 2 * (5 - 4 + 1));

        assert!(extremal_case_b_gap_set(4, 1).is_err());
    }

    #[test]
    fn extremal_case_b_is_a_case_b_semigroup() {
        for (g, gamma) in [
            (17u32, 3u32),
            (18, 3),
            (19, 3),
            (23, 4),
            (5, 1),
            (11, 2),
            (40, 5),
        ] {
            let gs = extremal_case_b_gap_set(g, gamma).unwrap();
            let s =
                NumericalSemigroup::from_gaps(gs.gaps()).expect("construction must be co-closed");
            assert_eq!(s.genus(), g);
            assert_eq!(
                s.weight(),
                2 * gamma as u64 * (g as u64 - 4 * gamma as u64 + 1)
            );
            if gamma > 0 {
                assert_eq!(
                    classify_unramified(&s, gamma).unwrap(),
                    UnramifiedCase::CaseB
                );
            }
        }
        // gamma = 0 degenerates to the ordinary gap set.
        let gs = extremal_case_b_gap_set(6, 0).unwrap();
        assert_eq!(gs.gaps(), &[1, 2, 3, 4, 5, 6]);
    }
}
