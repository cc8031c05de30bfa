use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

/// A finite poset given by its full relation and a rank function.
#[derive(Clone, Debug)]
pub struct PosetGraph {
    rank: Vec<i64>,
    leq: Vec<Vec<bool>>,
    hasse: Vec<(usize, usize)>,
}

impl PosetGraph {
    /// Builds the relation `leq(a, b)` on `0..rank.len()`; fails unless it is
    /// reflexive, antisymmetric and transitive.
    pub fn new(rank: Vec<i64>, leq: impl Fn(usize, usize) -> bool) -> Result<PosetGraph> {
        let n = rank.len();
        let rel: Vec<Vec<bool>> = (0..n)
            .map(|a| (0..n).map(|b| leq(a, b)).collect())
            .collect();
        for a in 0..n {
            if !rel[a][a] {
                return invalid(format!("relation is not reflexive at {a}"));
            }
            for b in 0..n {
                if a != b && rel[a][b] && rel[b][a] {
                    return invalid(format!("relation is not antisymmetric at ({a}, {b})"));
                }
                if rel[a][b] {
                    if let Some(c) = (0..n).find(|&c| rel[b][c] && !rel[a][c]) {
                        return invalid(format!("relation is not transitive at ({a}, {b}, {c})"));
                    }
                }
            }
        }
        // transitive reduction
        let mut hasse = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a != b
                    && rel[a][b]
                    && !(0..n).any(|c| c != a && c != b && rel[a][c] && rel[c][b])
                {
                    hasse.push((a, b));
                }
            }
        }
        Ok(PosetGraph {
            rank,
            leq: rel,
            hasse,
        })
    }

    pub fn len(&self) -> usize {
        self.rank.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rank.is_empty()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn ranks(&self) -> &[i64] {
        &self.rank
    }

    /// Cover relations `(a, b)` with `a ⋖ b`.
    pub fn hasse(&self) -> &[(usize, usize)] {
        &self.hasse
    }

    /// A chain `0 < 1 < ⋯ < k`.
    pub fn chain(k: usize) -> PosetGraph {
        PosetGraph::new((0..=k as i64).collect(), |a, b| a <= b).expect("a chain is a poset")
    }

    /// Subsets of a `k`-element set under inclusion.
    pub fn boolean(k: usize) -> PosetGraph {
        let rank = (0..1u32 << k).map(|m| m.count_ones() as i64).collect();
        PosetGraph::new(rank, |a, b| a & !b == 0).expect("inclusion is a partial order")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagnostics {
    pub thin: bool,
    pub eulerian: bool,
    /// `[a, b, μ(a, b)]` for every comparable pair `a ≤ b`.
    pub moebius: Vec<(usize, usize, i64)>,
}

/// Thinness, the Eulerian property and the Möbius function of a graded poset.
pub fn poset_diagnostics(p: &PosetGraph) -> Result<Diagnostics> {
    for &(a, b) in p.hasse() {
        if p.rank[b] != p.rank[a] + 1 {
            return invalid(format!(
                "poset is not graded: cover ({a}, {b}) has rank jump {}",
                p.rank[b] - p.rank[a]
            ));
        }
    }
    let n = p.len();
    // elements in rank order so that μ(a, c) is known for every c < b
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| p.rank[i]);
    let mut mu = vec![vec![0i64; n]; n];
    for &a in &order {
        for &b in &order {
            if !p.leq(a, b) {
                continue;
            }
            mu[a][b] = if a == b {
                1
            } else {
                -(0..n)
                    .filter(|&c| c != b && p.leq(a, c) && p.leq(c, b))
                    .map(|c| mu[a][c])
                    .sum::<i64>()
            };
        }
    }
    let mut thin = true;
    let mut eulerian = true;
    let mut moebius = Vec::new();
    for (a, row) in mu.iter().enumerate() {
        for (b, &m) in row.iter().enumerate() {
            if !p.leq(a, b) {
                continue;
            }
            let d = p.rank[b] - p.rank[a];
            if d == 2 {
                let interior = (0..n)
                    .filter(|&c| c != a && c != b && p.leq(a, c) && p.leq(c, b))
                    .count();
                thin &= interior == 2;
            }
            eulerian &= m == if d % 2 == 0 { 1 } else { -1 };
            moebius.push((a, b, m));
        }
    }
    Ok(Diagnostics {
        thin,
        eulerian,
        moebius,
    })
}
