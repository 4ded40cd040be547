//! Brute-force search for integer profiles with disconnected or non-global
//! local medians. Independent of the LP code path.

use serde::Serialize;

use crate::function::Profile;
use crate::graph::{j_set, Graph};
use crate::{Error, Result};

/// Default cap on the number of profiles examined.
pub const DEFAULT_ORACLE_BUDGET: u64 = 50_000_000;

/// A profile found by [`brute_force_oracle`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleHit {
    pub u: usize,
    pub v: usize,
    pub profile: Profile,
    /// `Med(π)` is not connected in `G^p`.
    pub disconnected: bool,
    /// Some local median in `G^p` is not a global median.
    pub local_not_global: bool,
}

/// For each pair with `p+1 <= d(u,v) <= 2p` in lexicographic order,
/// enumerates integer profiles supported on `J(u,v)` with weights in
/// `0..=max_weight` and returns the first whose median set is not
/// `p`-connected or whose local medians in `G^p` differ from its medians.
pub fn brute_force_oracle(
    g: &Graph,
    p: u32,
    max_weight: u32,
    budget: u64,
) -> Result<Option<OracleHit>> {
    if max_weight == 0 || p == 0 {
        return Err(Error::Precondition("oracle needs p >= 1 and max_weight >= 1".into()));
    }
    let n = g.n();
    let pairs = g.pairs_at_distance(p + 1, 2 * p);
    let supports: Vec<Vec<usize>> = pairs.iter().map(|&(u, v)| j_set(g, u, v).to_vec()).collect();
    let base = max_weight as u64 + 1;
    let mut total: u64 = 0;
    for s in &supports {
        let count = u32::try_from(s.len()).ok().and_then(|k| base.checked_pow(k));
        total = count.and_then(|c| total.checked_add(c)).ok_or(Error::BudgetExceeded(budget))?;
        if total > budget {
            return Err(Error::BudgetExceeded(budget));
        }
    }
    let dist: Vec<Vec<i64>> = (0..n).map(|x| (0..n).map(|y| g.d(x, y) as i64).collect()).collect();
    let near: Vec<Vec<usize>> =
        (0..n).map(|x| (0..n).filter(|&y| y != x && g.d(x, y) <= p).collect()).collect();

    for (&(u, v), support) in pairs.iter().zip(&supports) {
        let k = support.len();
        let mut w = vec![0u32; k];
        let mut f = vec![0i64; n];
        // odometer over weight vectors; f tracks F_π incrementally
        loop {
            let mut i = 0;
            while i < k && w[i] == max_weight {
                let z = support[i];
                for x in 0..n {
                    f[x] -= max_weight as i64 * dist[z][x];
                }
                w[i] = 0;
                i += 1;
            }
            if i == k {
                break;
            }
            w[i] += 1;
            let z = support[i];
            for x in 0..n {
                f[x] += dist[z][x];
            }
            let min = *f.iter().min().expect("nonempty graph");
            let med: Vec<usize> = (0..n).filter(|&x| f[x] == min).collect();
            let local_not_global =
                (0..n).any(|x| f[x] > min && near[x].iter().all(|&y| f[x] <= f[y]));
            let disconnected = !p_connected(g, &med, p);
            if local_not_global || disconnected {
                let profile = Profile::from_ints(
                    &support.iter().zip(&w).map(|(&z, &c)| (z, c as i64)).collect::<Vec<_>>(),
                )
                .expect("nonzero weight vector");
                return Ok(Some(OracleHit { u, v, profile, disconnected, local_not_global }));
            }
        }
    }
    Ok(None)
}

fn p_connected(g: &Graph, set: &[usize], p: u32) -> bool {
    if set.is_empty() {
        return true;
    }
    let mut seen = vec![false; set.len()];
    seen[0] = true;
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        for j in 0..set.len() {
            if !seen[j] && g.d(set[i], set[j]) <= p {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    seen.into_iter().all(|b| b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::function::{is_p_connected, local_median_set_p, median_set};

    fn cycle(n: usize) -> Graph {
        Graph::build(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn c7_at_p2() {
        let g = cycle(7);
        let hit = brute_force_oracle(&g, 2, 3, DEFAULT_ORACLE_BUDGET).unwrap().unwrap();
        let med = median_set(&g, &hit.profile);
        let failing = !is_p_connected(&g, &med, 2) || local_median_set_p(&g, &hit.profile, 2) != med;
        assert!(failing);
        assert!(brute_force_oracle(&g, 3, 2, DEFAULT_ORACLE_BUDGET).unwrap().is_none());
    }

    #[test]
    fn budget() {
        let g = cycle(7);
        assert_eq!(brute_force_oracle(&g, 2, 3, 10), Err(Error::BudgetExceeded(10)));
    }
}
