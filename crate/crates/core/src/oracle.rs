//! Brute-force reference enumerator used by the test suite to cross-check
//! the tree enumerator. It shares no code with the tree walk: candidate gap
//! sets are raw `g`-subsets of `[1, 2g-1]` containing 1, kept when the
//! complement is closed under addition.

/// All gap sets of genus `g`, lexicographically sorted. Intended for small
/// `g` only (the candidate space is `C(2g-2, g-1)`).
pub fn naive_gap_sets(g: u32) -> Vec<Vec<u32>> {
    if g == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    let mut current = vec![1u32];
    subsets(&mut current, 2, g, &mut out);
    out
}

fn subsets(current: &mut Vec<u32>, next: u32, g: u32, out: &mut Vec<Vec<u32>>) {
    if current.len() == g as usize {
        if complement_closed(current, g) {
            out.push(current.clone());
        }
        return;
    }
    let remaining = g as usize - current.len();
    for x in next..=(2 * g - 1) {
        if ((2 * g - x) as usize) < remaining {
            break;
        }
        current.push(x);
        subsets(current, x + 1, g, out);
        current.pop();
    }
}

/// Pairwise closure check on a plain membership table, independent of the
/// bitmap logic in the main crate.
fn complement_closed(gaps: &[u32], g: u32) -> bool {
    let max_gap = gaps[gaps.len() - 1] as usize;
    let mut is_gap = vec![false; 2 * g as usize + 1];
    for &x in gaps {
        is_gap[x as usize] = true;
    }
    for a in 1..=max_gap {
        if is_gap[a] {
            continue;
        }
        for b in a..=max_gap.saturating_sub(a) {
            if !is_gap[b] && is_gap[a + b] {
                return false;
            }
        }
    }
    true
}
