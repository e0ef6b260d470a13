//! Exhaustive generation of all numerical semigroups of a given genus.
//!
//! The enumerator walks the standard semigroup tree rooted at the naturals:
//! the children of `S` are `S \ {x}` for the minimal generators `x` of `S`
//! beyond its Frobenius number. Every numerical semigroup of genus `g` shows
//! up exactly once at depth `g`, so counting, collecting and max-weight
//! scans are tree folds. Filters that are monotone along root-to-leaf paths
//! (multiplicity, even-gap budget, forbidden gap windows) prune whole
//! subtrees; everything is re-checked at the leaves.
//!
//! For parallel runs the tree is split at a fixed depth into independent
//! subtree tasks; per-subtree results are merged in subtree order, so the
//! outcome is byte-identical for any worker count.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// Hard ceiling on the target genus, from the fixed-width membership bitmap.
pub const MAX_GENUS: u32 = 96;

const WORDS: usize = 4; // 256 bits covers [0, 2*MAX_GENUS + 1]

/// Constraints applied during enumeration. All clauses are conjunctive.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EnumerationFilter {
    /// Keep only semigroups with multiplicity at least this.
    pub min_multiplicity: Option<u32>,
    /// Keep only semigroups with exactly this many even gaps.
    pub even_gap_count: Option<u32>,
    /// Inclusive interval that must consist of elements only.
    pub required_interval: Option<(u32, u32)>,
    /// Inclusive interval that must contain at least one gap.
    pub required_gap_in: Option<(u32, u32)>,
}

impl EnumerationFilter {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn is_empty(&self) -> bool {
        *self == Self::default()
    }

    pub fn with_min_multiplicity(mut self, m: u32) -> Self {
        self.min_multiplicity = Some(m);
        self
    }

    pub fn with_even_gap_count(mut self, k: u32) -> Self {
        self.even_gap_count = Some(k);
        self
    }

    pub fn with_required_interval(mut self, a: u32, b: u32) -> Self {
        self.required_interval = Some((a, b));
        self
    }

    pub fn with_required_gap_in(mut self, a: u32, b: u32) -> Self {
        self.required_gap_in = Some((a, b));
        self
    }

    /// Intervals must be nonempty and inside `[1, 2g-1]` for the target genus.
    pub fn validate(&self, genus: u32) -> Result<()> {
        for (name, iv) in [
            ("required interval", self.required_interval),
            ("required gap interval", self.required_gap_in),
        ] {
            if let Some((a, b)) = iv {
                if a < 1 || a > b || genus == 0 || b > 2 * genus - 1 {
                    return Err(Error::InvalidFilter(format!(
                        "{name} {a}:{b} is not a nonempty subinterval of [1, {}]",
                        if genus == 0 { 0 } else { 2 * genus - 1 }
                    )));
                }
            }
        }
        Ok(())
    }

    /// Direct evaluation against a fully built semigroup.
    pub fn matches(&self, s: &NumericalSemigroup) -> bool {
        if let Some(m) = self.min_multiplicity {
            if s.multiplicity() < m {
                return false;
            }
        }
        if let Some(k) = self.even_gap_count {
            if s.even_gap_count() != k {
                return false;
            }
        }
        if let Some((a, b)) = self.required_interval {
            if (a..=b).any(|x| !s.contains(x as u64)) {
                return false;
            }
        }
        if let Some((a, b)) = self.required_gap_in {
            if (a..=b).all(|x| s.contains(x as u64)) {
                return false;
            }
        }
        true
    }

    /// Stable textual key, used in cache headers and file names.
    pub fn canonical_string(&self) -> String {
        let mut parts = Vec::new();
        if let Some(m) = self.min_multiplicity {
            parts.push(format!("min-mult={m}"));
        }
        if let Some(k) = self.even_gap_count {
            parts.push(format!("even-gaps={k}"));
        }
        if let Some((a, b)) = self.required_interval {
            parts.push(format!("interval={a}:{b}"));
        }
        if let Some((a, b)) = self.required_gap_in {
            parts.push(format!("gap-in={a}:{b}"));
        }
        if parts.is_empty() {
            "none".to_string()
        } else {
            parts.join(",")
        }
    }
}

/// Knobs for a single enumeration run.
#[derive(Clone, Debug)]
pub struct EnumerationConfig {
    /// Refuse targets above this genus (runaway-job guard).
    pub genus_cap: u32,
    /// Worker threads; 1 means fully serial.
    pub jobs: usize,
    /// Depth at which the tree is split into parallel subtree tasks.
    pub split_depth: u32,
}

impl Default for EnumerationConfig {
    fn default() -> Self {
        EnumerationConfig {
            genus_cap: 35,
            jobs: 1,
            split_depth: 8,
        }
    }
}

impl EnumerationConfig {
    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs.max(1);
        self
    }

    pub fn with_genus_cap(mut self, cap: u32) -> Self {
        self.genus_cap = cap;
        self
    }
}

/// Summary of a filtered max-weight scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationStats {
    pub genus: u32,
    /// All semigroups of this genus.
    pub total_count: u64,
    /// Those passing the filter (and predicate, if any).
    pub filtered_count: u64,
    /// Maximum weight over the class, with the lexicographically smallest
    /// gap set achieving it; `None` exactly when the class is empty.
    pub max: Option<WeightRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightRecord {
    pub weight: u64,
    pub gap_set: Vec<u32>,
}

impl EnumerationStats {
    pub fn class_empty(&self) -> bool {
        self.filtered_count == 0
    }
}

/// One node of the semigroup tree. `bits` is membership over `[0, 255]`,
/// enough for any genus up to [`MAX_GENUS`].
#[derive(Clone)]
struct Node {
    bits: [u64; WORDS],
    genus: u32,
    /// Largest gap; -1 at the root.
    frobenius: i64,
    multiplicity: u32,
    even_gaps: u32,
}

impl Node {
    fn root() -> Self {
        Node {
            bits: [u64::MAX; WORDS],
            genus: 0,
            frobenius: -1,
            multiplicity: 1,
            even_gaps: 0,
        }
    }

    #[inline]
    fn member(&self, x: u32) -> bool {
        self.bits[(x / 64) as usize] & (1u64 << (x % 64)) != 0
    }

    fn remove(&self, x: u32) -> Node {
        let mut child = self.clone();
        child.bits[(x / 64) as usize] &= !(1u64 << (x % 64));
        child.genus += 1;
        child.frobenius = x as i64;
        if x == self.multiplicity {
            // Only ordinary nodes can shed their multiplicity; the next
            // element up is then x + 1.
            child.multiplicity = x + 1;
        }
        child.even_gaps += x.is_multiple_of(2) as u32;
        child
    }

    /// `x > frobenius` is a minimal generator iff it is not a sum of two
    /// positive elements.
    fn is_minimal_generator(&self, x: u32) -> bool {
        let mut a = self.multiplicity;
        while a <= x / 2 {
            if self.member(a) && self.member(x - a) {
                return false;
            }
            a += 1;
        }
        true
    }

    fn has_gap_in(&self, a: u32, b: u32) -> bool {
        if self.frobenius < 0 {
            return false;
        }
        let hi = b.min(self.frobenius as u32);
        (a..=hi).any(|x| !self.member(x))
    }

    fn gap_list(&self) -> Vec<u32> {
        if self.frobenius < 0 {
            return Vec::new();
        }
        (1..=self.frobenius as u32)
            .filter(|&x| !self.member(x))
            .collect()
    }

    fn to_semigroup(&self) -> NumericalSemigroup {
        NumericalSemigroup::from_gaps_unchecked(self.gap_list())
    }

    /// Subtree-level pruning. Sound because gaps only accumulate along a
    /// path, the Frobenius number only grows, and the multiplicity is
    /// frozen as soon as a node stops being ordinary.
    fn prune(&self, target: u32, filter: &EnumerationFilter) -> bool {
        if let Some(k) = filter.even_gap_count {
            if self.even_gaps > k || self.even_gaps + (target - self.genus) < k {
                return true;
            }
        }
        if let Some(m) = filter.min_multiplicity {
            let ordinary = self.frobenius < self.multiplicity as i64;
            if !ordinary && self.multiplicity < m {
                return true;
            }
        }
        if let Some((a, b)) = filter.required_interval {
            if self.has_gap_in(a, b) {
                return true;
            }
        }
        if let Some((a, b)) = filter.required_gap_in {
            if self.frobenius >= b as i64 && !self.has_gap_in(a, b) {
                return true;
            }
        }
        false
    }

    fn final_check(&self, filter: &EnumerationFilter) -> bool {
        if let Some(m) = filter.min_multiplicity {
            if self.multiplicity < m {
                return false;
            }
        }
        if let Some(k) = filter.even_gap_count {
            if self.even_gaps != k {
                return false;
            }
        }
        if let Some((a, b)) = filter.required_interval {
            if self.has_gap_in(a, b) {
                return false;
            }
        }
        if let Some((a, b)) = filter.required_gap_in {
            if !self.has_gap_in(a, b) {
                return false;
            }
        }
        true
    }
}

fn for_each_child(node: &Node, mut f: impl FnMut(Node)) {
    if node.genus == 0 {
        // The only minimal generator of the naturals worth removing is 1.
        f(node.remove(1));
        return;
    }
    let lo = node.frobenius as u32 + 1;
    let hi = (node.frobenius as u32 + node.multiplicity).min(2 * (node.genus + 1) - 1);
    for y in lo..=hi {
        if node.is_minimal_generator(y) {
            f(node.remove(y));
        }
    }
}

fn dfs<A, L: Fn(&Node, &mut A)>(
    node: &Node,
    target: u32,
    filter: &EnumerationFilter,
    acc: &mut A,
    leaf: &L,
) {
    if node.prune(target, filter) {
        return;
    }
    if node.genus == target {
        if node.final_check(filter) {
            leaf(node, acc);
        }
        return;
    }
    for_each_child(node, |child| dfs(&child, target, filter, acc, leaf));
}

/// Collect the pruned frontier at `depth`; used as parallel task roots.
fn frontier(target: u32, depth: u32, filter: &EnumerationFilter) -> Vec<Node> {
    let mut out = Vec::new();
    fn rec(node: Node, depth: u32, target: u32, filter: &EnumerationFilter, out: &mut Vec<Node>) {
        if node.prune(target, filter) {
            return;
        }
        if node.genus == depth {
            out.push(node);
            return;
        }
        for_each_child(&node, |child| rec(child, depth, target, filter, out));
    }
    rec(Node::root(), depth, target, filter, &mut out);
    out
}

/// Tree fold over all genus-`target` leaves passing `filter`. The merge
/// must be associative; subtree results are combined in frontier order,
/// so any `jobs` value produces the same answer.
fn run_reduce<A, L, M>(
    target: u32,
    filter: &EnumerationFilter,
    cfg: &EnumerationConfig,
    make: impl Fn() -> A + Sync,
    leaf: L,
    merge: M,
) -> Result<A>
where
    A: Send,
    L: Fn(&Node, &mut A) + Sync,
    M: Fn(A, A) -> A,
{
    if cfg.genus_cap > MAX_GENUS {
        return Err(Error::PreconditionViolated(format!(
            "genus cap {} exceeds supported maximum {MAX_GENUS}",
            cfg.genus_cap
        )));
    }
    if target > cfg.genus_cap {
        return Err(Error::GenusTooLarge {
            genus: target,
            cap: cfg.genus_cap,
        });
    }
    filter.validate(target)?;

    let jobs = cfg.jobs.max(1);
    if jobs == 1 || target <= cfg.split_depth {
        let mut acc = make();
        dfs(&Node::root(), target, filter, &mut acc, &leaf);
        return Ok(acc);
    }

    let roots = frontier(target, cfg.split_depth, filter);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Io(std::io::Error::other(e)))?;
    let parts: Vec<A> = pool.install(|| {
        roots
            .par_iter()
            .map(|root| {
                let mut acc = make();
                dfs(root, target, filter, &mut acc, &leaf);
                acc
            })
            .collect()
    });
    Ok(parts.into_iter().fold(make(), merge))
}

/// Every numerical semigroup of genus exactly `g`, in deterministic
/// tree-traversal order.
pub fn enumerate_genus(g: u32, cfg: &EnumerationConfig) -> Result<Vec<NumericalSemigroup>> {
    enumerate_filtered(g, &EnumerationFilter::none(), cfg)
}

/// Cardinality of [`enumerate_genus`].
pub fn count_genus(g: u32, cfg: &EnumerationConfig) -> Result<u64> {
    count_filtered(g, &EnumerationFilter::none(), cfg)
}

/// Exactly the genus-`g` semigroups satisfying every filter clause.
pub fn enumerate_filtered(
    g: u32,
    filter: &EnumerationFilter,
    cfg: &EnumerationConfig,
) -> Result<Vec<NumericalSemigroup>> {
    run_reduce(
        g,
        filter,
        cfg,
        Vec::new,
        |node, acc: &mut Vec<NumericalSemigroup>| acc.push(node.to_semigroup()),
        |mut a, mut b| {
            a.append(&mut b);
            a
        },
    )
}

pub fn count_filtered(g: u32, filter: &EnumerationFilter, cfg: &EnumerationConfig) -> Result<u64> {
    run_reduce(g, filter, cfg, || 0u64, |_, acc| *acc += 1, |a, b| a + b)
}

/// Max-weight scan over the filtered class.
pub fn scan_max_weight(
    g: u32,
    filter: &EnumerationFilter,
    cfg: &EnumerationConfig,
) -> Result<EnumerationStats> {
    scan_max_weight_where(g, filter, cfg, |_| true)
}

/// Max-weight scan over the filtered class restricted by an extra
/// predicate (for classes the filter grammar cannot express). Ties on
/// weight resolve to the lexicographically smallest gap set, which makes
/// the reported witness independent of traversal and worker count.
pub fn scan_max_weight_where(
    g: u32,
    filter: &EnumerationFilter,
    cfg: &EnumerationConfig,
    pred: impl Fn(&NumericalSemigroup) -> bool + Sync,
) -> Result<EnumerationStats> {
    type Acc = (u64, Option<WeightRecord>);
    fn better(a: Option<WeightRecord>, b: Option<WeightRecord>) -> Option<WeightRecord> {
        match (a, b) {
            (None, x) => x,
            (x, None) => x,
            (Some(x), Some(y)) => {
                if y.weight > x.weight || (y.weight == x.weight && y.gap_set < x.gap_set) {
                    Some(y)
                } else {
                    Some(x)
                }
            }
        }
    }
    let (filtered_count, max) = run_reduce(
        g,
        filter,
        cfg,
        || (0u64, None),
        |node, acc: &mut Acc| {
            let s = node.to_semigroup();
            if pred(&s) {
                acc.0 += 1;
                let rec = WeightRecord {
                    weight: s.weight(),
                    gap_set: s.gaps().to_vec(),
                };
                acc.1 = better(acc.1.take(), Some(rec));
            }
        },
        |a, b| (a.0 + b.0, better(a.1, b.1)),
    )?;
    let total_count = count_genus(g, cfg)?;
    Ok(EnumerationStats {
        genus: g,
        total_count,
        filtered_count,
        max,
    })
}
