//! Exact model of a numerical semigroup and its elementary calculus:
//! construction, membership, gaps, Weierstrass weight, the gap-bound check
//! of Oliveira, parity statistics, and the halved-even-part map.
//!
//! A numerical semigroup is a subset of the nonnegative integers that
//! contains 0, is closed under addition, and has finite complement (the
//! gap set). Everything a gap set can say about the semigroup happens in
//! `[0, 2g]`, so membership is kept as a bitmap over that window together
//! with the cached gap list.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A numerical semigroup, stored as its gap set plus a membership bitmap
/// over `[0, 2g]`.
#[derive(Clone)]
pub struct NumericalSemigroup {
    gaps: Vec<u32>,
    /// Bit `x` is set iff `x` is an element, for `x` in `[0, 2g]`.
    bitmap: Vec<u64>,
    multiplicity: u32,
    conductor: u32,
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.gaps == other.gaps
    }
}

impl Eq for NumericalSemigroup {}

impl std::hash::Hash for NumericalSemigroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.gaps.hash(state);
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumericalSemigroup{{gaps: {:?}}}", self.gaps)
    }
}

impl fmt::Display for NumericalSemigroup {
    /// Comma-separated ascending gaps; the empty string for the naturals.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for g in &self.gaps {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
            first = false;
        }
        Ok(())
    }
}

fn bitmap_words(genus: u32) -> usize {
    (2 * genus as usize + 1).div_ceil(64).max(1)
}

impl NumericalSemigroup {
    /// The nonnegative integers: genus 0, no gaps.
    pub fn natural() -> Self {
        NumericalSemigroup {
            gaps: Vec::new(),
            bitmap: vec![1],
            multiplicity: 1,
            conductor: 0,
        }
    }

    /// Internal constructor for a validated gap set. The caller guarantees
    /// a strictly increasing, positive, co-closed list with max gap < 2g.
    pub(crate) fn from_gaps_unchecked(gaps: Vec<u32>) -> Self {
        let genus = gaps.len() as u32;
        if genus == 0 {
            return Self::natural();
        }
        let mut bitmap = vec![u64::MAX; bitmap_words(genus)];
        for &gap in &gaps {
            bitmap[gap as usize / 64] &= !(1u64 << (gap % 64));
        }
        let conductor = gaps[gaps.len() - 1] + 1;
        let mut multiplicity = 1;
        for &gap in &gaps {
            if gap == multiplicity {
                multiplicity += 1;
            } else {
                break;
            }
        }
        NumericalSemigroup {
            gaps,
            bitmap,
            multiplicity,
            conductor,
        }
    }

    /// Builds the semigroup whose gap set is exactly `gaps`.
    ///
    /// Fails with [`Error::NotCoclosed`] when the complement of the input is
    /// not closed under addition, and with [`Error::GapTooLarge`] when some
    /// entry exceeds `2g - 1`.
    pub fn from_gaps(gaps: &[u32]) -> Result<Self> {
        for (i, &gap) in gaps.iter().enumerate() {
            if gap == 0 {
                return Err(Error::InvalidGapList("gaps must be positive".into()));
            }
            if i > 0 && gaps[i - 1] >= gap {
                return Err(Error::InvalidGapList(format!(
                    "entries must be strictly increasing, got {} before {}",
                    gaps[i - 1],
                    gap
                )));
            }
        }
        let genus = gaps.len() as u32;
        if genus == 0 {
            return Ok(Self::natural());
        }
        let max_gap = gaps[gaps.len() - 1];
        // Closure only needs checking for sums that land at or below the
        // largest gap; anything beyond is an element automatically. The scan
        // stays inside [0, 2g]: a gap set passing it has max gap < 2g anyway.
        let mut is_gap = vec![false; 2 * genus as usize + 1];
        for &gap in gaps {
            if gap <= 2 * genus {
                is_gap[gap as usize] = true;
            }
        }
        let cap = max_gap.min(2 * genus);
        for a in 1..=cap {
            if is_gap[a as usize] {
                continue;
            }
            for b in a..=cap.saturating_sub(a) {
                if !is_gap[b as usize] && is_gap[(a + b) as usize] {
                    return Err(Error::NotCoclosed { a, b });
                }
            }
        }
        if max_gap > 2 * genus - 1 {
            return Err(Error::GapTooLarge {
                gap: max_gap,
                genus,
            });
        }
        Ok(Self::from_gaps_unchecked(gaps.to_vec()))
    }

    /// Builds the smallest additive monoid containing 0 and all generators.
    ///
    /// Fails with [`Error::NotCoprime`] when gcd of the generators is not 1
    /// (the complement would be infinite).
    pub fn from_generators(gens: &[u64]) -> Result<Self> {
        if gens.contains(&0) {
            return Err(Error::PreconditionViolated(
                "generators must be positive".into(),
            ));
        }
        let gcd = gens.iter().fold(0u64, |acc, &g| num_integer_gcd(acc, g));
        if gcd != 1 {
            return Err(Error::NotCoprime { gcd });
        }
        let m = *gens.iter().min().expect("gcd 1 implies nonempty") as usize;
        if m == 1 {
            return Ok(Self::natural());
        }
        let mx = *gens.iter().max().unwrap() as usize;
        // Schur's bound: the Frobenius number is below (m-1)(mx-1), so the
        // sieve window below always suffices; the run check keeps it honest.
        let mut limit = (m - 1) * (mx - 1) + m + 1;
        loop {
            let mut reach = vec![false; limit + 1];
            reach[0] = true;
            for x in 1..=limit {
                for &gen in gens {
                    let gen = gen as usize;
                    if gen <= x && reach[x - gen] {
                        reach[x] = true;
                        break;
                    }
                }
            }
            // Find the last unreachable value, then confirm a full run of m
            // reachable values follows it inside the window.
            let frobenius = (1..=limit).rev().find(|&x| !reach[x]);
            let conductor = frobenius.map_or(0, |f| f + 1);
            if conductor + m <= limit + 1 {
                let gaps: Vec<u32> = (1..conductor)
                    .filter(|&x| !reach[x])
                    .map(|x| x as u32)
                    .collect();
                return Ok(Self::from_gaps_unchecked(gaps));
            }
            limit *= 2;
        }
    }

    /// Number of gaps.
    pub fn genus(&self) -> u32 {
        self.gaps.len() as u32
    }

    /// The gap set, strictly increasing.
    pub fn gaps(&self) -> &[u32] {
        &self.gaps
    }

    /// Smallest positive element (1 for the naturals).
    pub fn multiplicity(&self) -> u32 {
        self.multiplicity
    }

    /// One more than the largest gap; 0 for the naturals.
    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Largest gap, or `None` for the naturals.
    pub fn frobenius(&self) -> Option<u32> {
        self.gaps.last().copied()
    }

    /// Membership test; constant `true` from the conductor on.
    pub fn contains(&self, x: u64) -> bool {
        if x >= self.conductor as u64 {
            return true;
        }
        let x = x as usize;
        self.bitmap[x / 64] & (1u64 << (x % 64)) != 0
    }

    /// Whether the gap set is `{1, .., g}` (weight zero).
    pub fn is_ordinary(&self) -> bool {
        self.gaps
            .iter()
            .enumerate()
            .all(|(i, &l)| l == i as u32 + 1)
    }

    /// Weierstrass weight `(3g^2+g)/2 - sum of elements in (0, 2g]`.
    ///
    /// Equals `sum_i (l_i - i)` over the gap sequence.
    pub fn weight(&self) -> u64 {
        let g = self.genus() as u64;
        let mut total = (3 * g * g + g) / 2;
        for x in 1..=2 * g {
            if self.contains(x) {
                total -= x;
            }
        }
        total
    }

    /// The gap-sequence bounds `l_i <= 2i - 2` for `i = 2..g-1` together
    /// with `l_g <= 2g - 1`, valid whenever the multiplicity is at least 3.
    pub fn oliveira_check(&self) -> Result<bool> {
        let g = self.genus();
        if g < 2 || self.multiplicity < 3 {
            return Err(Error::PreconditionViolated(format!(
                "oliveira_check needs genus >= 2 and multiplicity >= 3, got g = {g}, m = {}",
                self.multiplicity
            )));
        }
        for i in 2..g {
            // l_i is gaps[i-1] with 1-based i.
            if self.gaps[i as usize - 1] > 2 * i - 2 {
                return Ok(false);
            }
        }
        Ok(self.gaps[g as usize - 1] < 2 * g)
    }

    /// Number of even gaps (the `gamma` of a ramification-point semigroup).
    pub fn even_gap_count(&self) -> u32 {
        self.gaps.iter().filter(|&&x| x % 2 == 0).count() as u32
    }

    /// The semigroup `{h/2 : h even element}`. Its genus is exactly the
    /// even-gap count; closure is inherited from the halving.
    pub fn halved_even_part(&self) -> NumericalSemigroup {
        let g = self.genus();
        // x > g has 2x > 2g, already past every gap.
        let halved_gaps: Vec<u32> = (1..=g).filter(|&x| !self.contains(2 * x as u64)).collect();
        Self::from_gaps_unchecked(halved_gaps)
    }

    /// Smallest positive even element.
    pub fn smallest_even_nongap(&self) -> u32 {
        let mut x = 2;
        while !self.contains(x as u64) {
            x += 2;
        }
        x
    }

    /// The gap sequence `l_1 < .. < l_g` as a standalone value.
    pub fn gap_sequence(&self) -> GapSequence {
        GapSequence(self.gaps.clone())
    }
}

fn num_integer_gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        num_integer_gcd(b, a % b)
    }
}

/// A strictly increasing list `l_1 < .. < l_g` of positive integers with
/// `l_g <= 2g - 1`. Candidate gap sequences need not be co-closed; use
/// [`NumericalSemigroup::from_gaps`] for the full semigroup check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapSequence(Vec<u32>);

impl GapSequence {
    pub fn new(gaps: Vec<u32>) -> Result<Self> {
        for (i, &gap) in gaps.iter().enumerate() {
            if gap == 0 {
                return Err(Error::InvalidGapList("gaps must be positive".into()));
            }
            if i > 0 && gaps[i - 1] >= gap {
                return Err(Error::InvalidGapList(
                    "entries must be strictly increasing".into(),
                ));
            }
        }
        let g = gaps.len() as u32;
        if let Some(&last) = gaps.last() {
            if last > 2 * g - 1 {
                return Err(Error::GapTooLarge {
                    gap: last,
                    genus: g,
                });
            }
        }
        Ok(GapSequence(gaps))
    }

    pub fn gaps(&self) -> &[u32] {
        &self.0
    }

    pub fn genus(&self) -> u32 {
        self.0.len() as u32
    }

    /// `sum_i (l_i - i)`, the gap-side spelling of the weight.
    pub fn weight(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &l)| (l as u64) - (i as u64 + 1))
            .sum()
    }

    /// The hermitian orders `eps_j = l_{j+1} - 1` for `j = 0..g-1`.
    pub fn order_sequence(&self) -> OrderSequence {
        OrderSequence(self.0.iter().map(|&l| l as u64 - 1).collect())
    }
}

impl From<&NumericalSemigroup> for GapSequence {
    fn from(s: &NumericalSemigroup) -> Self {
        s.gap_sequence()
    }
}

/// A strictly increasing sequence of hermitian invariants
/// `eps_0 < eps_1 < ..` at a point (or at a generic point).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderSequence(Vec<u64>);

impl OrderSequence {
    pub fn new(orders: Vec<u64>) -> Result<Self> {
        for w in orders.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::InvalidGapList(
                    "orders must be strictly increasing".into(),
                ));
            }
        }
        Ok(OrderSequence(orders))
    }

    /// The classical generic sequence `0, 1, .., len-1`.
    pub fn classical(len: usize) -> Self {
        OrderSequence((0..len as u64).collect())
    }

    pub fn orders(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// `binom(n, k)` as an exact big integer, 0 whenever `n < k`.
pub fn binomial_big(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Exact integer determinant by fraction-free (Bareiss) elimination.
fn det_bareiss(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = !sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign {
        -det
    } else {
        det
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Whether `det(binom(eps_i(P), eps_j))` is nonzero (p = 0) or nonzero
/// mod p. The matrix entry at `(i, j)` is the binomial of the point order
/// `eps_i(P)` over the generic order `eps_j`, computed in exact big-integer
/// arithmetic.
pub fn wronskian_det_condition(
    point_orders: &OrderSequence,
    generic_orders: &OrderSequence,
    p: u64,
) -> Result<bool> {
    if point_orders.len() != generic_orders.len() {
        return Err(Error::LengthMismatch {
            left: point_orders.len(),
            right: generic_orders.len(),
        });
    }
    if p != 0 && !is_prime(p) {
        return Err(Error::PreconditionViolated(format!(
            "characteristic must be zero or prime, got {p}"
        )));
    }
    let matrix: Vec<Vec<BigInt>> = point_orders
        .orders()
        .iter()
        .map(|&ei| {
            generic_orders
                .orders()
                .iter()
                .map(|&ej| binomial_big(ei, ej))
                .collect()
        })
        .collect();
    let det = det_bareiss(matrix);
    if p == 0 {
        Ok(!det.is_zero())
    } else {
        Ok(!(det % BigInt::from(p)).is_zero())
    }
}
