//! Cartan data for the classical types.
//!
//! Nodes use Bourbaki numbering `1..=rank`; node `0` is reserved for the
//! affine node. Roots are stored in simple-root coordinates and coweights in
//! fundamental-coweight coordinates, so `<χ, α>` is a plain dot product.
//!
//! | type | diagram                         | highest root                      |
//! |------|---------------------------------|-----------------------------------|
//! | A_n  | 1 - 2 - ... - n                 | α_1 + ... + α_n                   |
//! | B_n  | 1 - ... - (n-1) => n (n short)  | α_1 + 2α_2 + ... + 2α_n           |
//! | C_n  | 1 - ... - (n-1) <= n (n long)   | 2α_1 + ... + 2α_{n-1} + α_n       |
//! | D_n  | 1 - ... - (n-2) < (n-1), n      | α_1 + 2α_2 + ... + α_{n-1} + α_n  |

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CartanType {
    A,
    B,
    C,
    D,
}

impl CartanType {
    pub fn min_rank(self) -> usize {
        match self {
            CartanType::A => 1,
            CartanType::B | CartanType::C => 2,
            CartanType::D => 3,
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            CartanType::A => "A",
            CartanType::B => "B",
            CartanType::C => "C",
            CartanType::D => "D",
        };
        f.write_str(c)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(CartanType::A),
            "B" | "b" => Ok(CartanType::B),
            "C" | "c" => Ok(CartanType::C),
            "D" | "d" => Ok(CartanType::D),
            other => invalid(format!("unsupported Cartan type {other:?}")),
        }
    }
}

/// A root in simple-root coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root(pub Vec<i32>);

impl Root {
    pub fn simple(rank: usize, node: usize) -> Root {
        let mut v = vec![0; rank];
        v[node - 1] = 1;
        Root(v)
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn is_negative(&self) -> bool {
        self.0.iter().all(|&c| c <= 0) && self.0.iter().any(|&c| c < 0)
    }

    pub fn height(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    pub fn coords(&self) -> &[i32] {
        &self.0
    }
}

/// A coweight in fundamental-coweight coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Coweight(pub Vec<i32>);

impl Coweight {
    pub fn zero(rank: usize) -> Coweight {
        Coweight(vec![0; rank])
    }

    /// The fundamental coweight `ω_i∨` (1-based node).
    pub fn fundamental(rank: usize, node: usize) -> Coweight {
        let mut v = vec![0; rank];
        v[node - 1] = 1;
        Coweight(v)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn neg(&self) -> Coweight {
        Coweight(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Coweight) -> Coweight {
        Coweight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Coweight) -> Coweight {
        Coweight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn coords(&self) -> &[i32] {
        &self.0
    }
}

/// `<χ, α>`.
pub fn pairing(chi: &Coweight, alpha: &Root) -> i32 {
    chi.0.iter().zip(&alpha.0).map(|(a, b)| a * b).sum()
}

/// A real affine root `α + nδ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AffineRoot {
    pub classical: Root,
    pub level: i32,
}

impl AffineRoot {
    pub fn new(classical: Root, level: i32) -> Self {
        AffineRoot { classical, level }
    }

    pub fn is_positive(&self) -> bool {
        self.level > 0 || (self.level == 0 && self.classical.is_positive())
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    cartan_type: CartanType,
    rank: usize,
    cartan: Vec<Vec<i32>>,
    roots: Vec<Root>,
    coroots: Vec<Coweight>,
    n_positive: usize,
    index: HashMap<Root, usize>,
    highest: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSystemSummary {
    #[serde(rename = "type")]
    pub cartan_type: CartanType,
    pub rank: usize,
    pub cartan: Vec<Vec<i32>>,
    pub n_roots: usize,
    pub highest_root_coords: Vec<i32>,
}

pub fn cartan_matrix(ty: CartanType, rank: usize) -> Result<Vec<Vec<i32>>> {
    if rank < ty.min_rank() {
        return invalid(format!(
            "type {ty} needs rank >= {}, got {rank}",
            ty.min_rank()
        ));
    }
    let n = rank;
    let mut a = vec![vec![0i32; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize, aij: i32, aji: i32| {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    match ty {
        CartanType::A => {
            for i in 0..n - 1 {
                link(i, i + 1, -1, -1);
            }
        }
        CartanType::B => {
            for i in 0..n - 2 {
                link(i, i + 1, -1, -1);
            }
            // α_n short: <α_{n-1}∨, α_n> = -1, <α_n∨, α_{n-1}> = -2
            link(n - 2, n - 1, -1, -2);
        }
        CartanType::C => {
            for i in 0..n - 2 {
                link(i, i + 1, -1, -1);
            }
            link(n - 2, n - 1, -2, -1);
        }
        CartanType::D => {
            for i in 0..n - 2 {
                link(i, i + 1, -1, -1);
            }
            link(n - 3, n - 1, -1, -1);
        }
    }
    Ok(a)
}

impl RootSystem {
    pub fn new(ty: CartanType, rank: usize) -> Result<RootSystem> {
        let cartan = cartan_matrix(ty, rank)?;
        Ok(Self::from_cartan(ty, cartan))
    }

    /// Builds the root system by reflection closure of the simple roots.
    ///
    /// Coroots are carried along the orbit: `s_i(β∨) = β∨ - <β∨, α_i> α_i∨`.
    pub fn from_cartan(cartan_type: CartanType, cartan: Vec<Vec<i32>>) -> RootSystem {
        let rank = cartan.len();
        let mut seen: HashMap<Root, Coweight> = HashMap::new();
        let mut queue = VecDeque::new();
        for i in 1..=rank {
            let r = Root::simple(rank, i);
            let c = Coweight(cartan[i - 1].clone());
            seen.insert(r.clone(), c.clone());
            queue.push_back((r, c));
        }
        while let Some((r, c)) = queue.pop_front() {
            for (i, row) in cartan.iter().enumerate() {
                let p: i32 = row.iter().zip(&r.0).map(|(a, x)| a * x).sum();
                let mut r2 = r.clone();
                r2.0[i] -= p;
                let q = c.0[i];
                let c2 = Coweight(c.0.iter().zip(row).map(|(x, a)| x - q * a).collect());
                if !seen.contains_key(&r2) {
                    seen.insert(r2.clone(), c2.clone());
                    queue.push_back((r2, c2));
                }
            }
        }
        let mut pos: Vec<(Root, Coweight)> =
            seen.into_iter().filter(|(r, _)| r.is_positive()).collect();
        pos.sort_by(|a, b| (a.0.height(), &a.0).cmp(&(b.0.height(), &b.0)));
        let n_positive = pos.len();
        let mut roots = Vec::with_capacity(2 * n_positive);
        let mut coroots = Vec::with_capacity(2 * n_positive);
        for (r, c) in &pos {
            roots.push(r.clone());
            coroots.push(c.clone());
        }
        for (r, c) in &pos {
            roots.push(r.neg());
            coroots.push(c.neg());
        }
        let index = roots
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, r)| (r, i))
            .collect();
        let highest = n_positive - 1;
        RootSystem {
            cartan_type,
            rank,
            cartan,
            roots,
            coroots,
            n_positive,
            index,
            highest,
        }
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    /// `A2`, `B3`, ...
    pub fn name(&self) -> String {
        format!("{}{}", self.cartan_type(), self.rank())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    /// Positive roots first (ordered by height), then their negatives.
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots[..self.n_positive]
    }

    pub fn n_positive(&self) -> usize {
        self.n_positive
    }

    pub fn root_index(&self, r: &Root) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn is_root(&self, r: &Root) -> bool {
        self.index.contains_key(r)
    }

    pub fn coroot_of(&self, r: &Root) -> Option<&Coweight> {
        self.root_index(r).map(|i| &self.coroots[i])
    }

    pub fn simple_root(&self, node: usize) -> Root {
        Root::simple(self.rank, node)
    }

    pub fn simple_coroot(&self, node: usize) -> Coweight {
        Coweight(self.cartan[node - 1].clone())
    }

    pub fn highest_root(&self) -> &Root {
        &self.roots[self.highest]
    }

    pub fn highest_coroot(&self) -> &Coweight {
        &self.coroots[self.highest]
    }

    /// `s_i(β)` for a finite node `i`.
    pub fn reflect_root(&self, node: usize, r: &Root) -> Root {
        let i = node - 1;
        let p: i32 = (0..self.rank).map(|j| self.cartan[i][j] * r.0[j]).sum();
        let mut out = r.clone();
        out.0[i] -= p;
        out
    }

    /// `s_i(χ) = χ - <χ, α_i> α_i∨`.
    pub fn reflect_coweight(&self, node: usize, chi: &Coweight) -> Coweight {
        let i = node - 1;
        let q = chi.0[i];
        Coweight(
            chi.0
                .iter()
                .zip(&self.cartan[i])
                .map(|(x, a)| x - q * a)
                .collect(),
        )
    }

    pub fn two_rho_pairing(&self, chi: &Coweight) -> i32 {
        self.positive_roots().iter().map(|a| pairing(chi, a)).sum()
    }

    /// Coefficients of the highest root; nodes with mark 1 are the minuscule ones.
    pub fn marks(&self) -> &[i32] {
        &self.highest_root().0
    }

    pub fn is_cominuscule(&self, lambda: &Coweight) -> bool {
        lambda.is_dominant() && pairing(lambda, self.highest_root()) <= 1
    }

    /// `|P/Q|`, the determinant of the Cartan matrix.
    pub fn fundamental_group_order(&self) -> i64 {
        integer_det(&self.cartan)
    }

    pub fn check_coweight(&self, chi: &Coweight) -> Result<()> {
        if chi.0.len() != self.rank {
            return invalid(format!(
                "coweight has {} coordinates, rank is {}",
                chi.0.len(),
                self.rank
            ));
        }
        Ok(())
    }

    pub fn check_dominant(&self, chi: &Coweight) -> Result<()> {
        self.check_coweight(chi)?;
        if !chi.is_dominant() {
            return invalid(format!("coweight {:?} is not dominant", chi.0));
        }
        Ok(())
    }

    pub fn summary(&self) -> RootSystemSummary {
        RootSystemSummary {
            cartan_type: self.cartan_type,
            rank: self.rank,
            cartan: self.cartan.clone(),
            n_roots: self.roots.len(),
            highest_root_coords: self.highest_root().0.clone(),
        }
    }
}

/// Bareiss fraction-free determinant.
fn integer_det(m: &[Vec<i32>]) -> i64 {
    let n = m.len();
    let mut a: Vec<Vec<i64>> = m
        .iter()
        .map(|r| r.iter().map(|&x| x as i64).collect())
        .collect();
    let mut sign = 1i64;
    let mut prev = 1i64;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent closure oracle: repeatedly apply every simple reflection
    /// to a growing set until it stabilises.
    fn closure_count(ty: CartanType, rank: usize) -> (usize, usize) {
        let a = cartan_matrix(ty, rank).unwrap();
        let mut set: std::collections::BTreeSet<Vec<i32>> = (0..rank)
            .map(|i| {
                let mut v = vec![0; rank];
                v[i] = 1;
                v
            })
            .collect();
        loop {
            let mut next = set.clone();
            for r in &set {
                for i in 0..rank {
                    let p: i32 = (0..rank).map(|j| a[i][j] * r[j]).sum();
                    let mut r2 = r.clone();
                    r2[i] -= p;
                    next.insert(r2);
                }
            }
            if next.len() == set.len() {
                break;
            }
            set = next;
        }
        let pos = set.iter().filter(|r| r.iter().all(|&c| c >= 0)).count();
        (set.len(), pos)
    }

    #[test]
    fn root_counts_match_closure_oracle() {
        for (ty, n) in [
            (CartanType::A, 2),
            (CartanType::B, 2),
            (CartanType::D, 3),
            (CartanType::C, 3),
        ] {
            let rs = RootSystem::new(ty, n).unwrap();
            let (total, pos) = closure_count(ty, n);
            assert_eq!(rs.roots().len(), total);
            assert_eq!(rs.n_positive(), pos);
        }
        assert_eq!(RootSystem::new(CartanType::A, 2).unwrap().roots().len(), 6);
        assert_eq!(RootSystem::new(CartanType::B, 2).unwrap().roots().len(), 8);
        assert_eq!(RootSystem::new(CartanType::D, 3).unwrap().roots().len(), 12);
    }

    #[test]
    fn d3_root_poset_is_a3() {
        // A3 nodes (1,2,3) correspond to D3 nodes (2,1,3).
        let a3 = RootSystem::new(CartanType::A, 3).unwrap();
        let d3 = RootSystem::new(CartanType::D, 3).unwrap();
        let perm = [1usize, 0, 2];
        let map = |r: &Root| {
            let mut v = vec![0; 3];
            for i in 0..3 {
                v[perm[i]] = r.0[i];
            }
            Root(v)
        };
        let image: std::collections::BTreeSet<Root> = a3.positive_roots().iter().map(map).collect();
        let target: std::collections::BTreeSet<Root> =
            d3.positive_roots().iter().cloned().collect();
        assert_eq!(image, target);
        // Order relation: β ≤ γ iff γ - β has nonnegative coordinates.
        for b in a3.positive_roots() {
            for c in a3.positive_roots() {
                let le = b.0.iter().zip(&c.0).all(|(x, y)| x <= y);
                let (mb, mc) = (map(b), map(c));
                let le2 = mb.0.iter().zip(&mc.0).all(|(x, y)| x <= y);
                assert_eq!(le, le2);
            }
        }
    }

    #[test]
    fn unsupported_input_is_rejected() {
        assert!(RootSystem::new(CartanType::B, 1).is_err());
        assert!(RootSystem::new(CartanType::D, 2).is_err());
        assert!(RootSystem::new(CartanType::A, 0).is_err());
        assert!("E".parse::<CartanType>().is_err());
    }

    #[test]
    fn root_set_invariants() {
        for (ty, n) in [
            (CartanType::A, 3),
            (CartanType::B, 3),
            (CartanType::C, 3),
            (CartanType::D, 4),
        ] {
            let rs = RootSystem::new(ty, n).unwrap();
            for r in rs.roots() {
                assert!(rs.is_root(&r.neg()));
                assert!(r.is_positive() || r.is_negative());
                for i in 1..=n {
                    assert!(rs.is_root(&rs.reflect_root(i, r)));
                }
            }
            let theta = rs.highest_root();
            for i in 1..=n {
                let mut t = theta.clone();
                t.0[i - 1] += 1;
                assert!(!rs.is_root(&t));
            }
            for i in 0..n {
                for j in 0..n {
                    let a = rs.cartan()[i][j];
                    if i == j {
                        assert_eq!(a, 2);
                    } else {
                        assert!(a <= 0);
                    }
                }
            }
        }
    }

    #[test]
    fn pairings() {
        let rs = RootSystem::new(CartanType::A, 2).unwrap();
        let w1 = Coweight::fundamental(2, 1);
        assert_eq!(pairing(&w1, &rs.simple_root(1)), 1);
        assert_eq!(pairing(&w1, &rs.simple_root(2)), 0);
        assert_eq!(pairing(rs.highest_coroot(), rs.highest_root()), 2);
        assert_eq!(rs.two_rho_pairing(&w1), 2);
        assert_eq!(rs.two_rho_pairing(&Coweight::zero(2)), 0);
        assert_eq!(rs.highest_root(), &Root(vec![1, 1]));
        for (ty, n) in [(CartanType::B, 3), (CartanType::C, 2), (CartanType::D, 4)] {
            let rs = RootSystem::new(ty, n).unwrap();
            for (r, c) in rs.roots().iter().zip(&rs.coroots) {
                assert_eq!(pairing(c, r), 2);
            }
        }
    }

    #[test]
    fn fundamental_group_orders() {
        let cases = [
            (CartanType::A, 2, 3),
            (CartanType::A, 3, 4),
            (CartanType::B, 2, 2),
            (CartanType::C, 3, 2),
            (CartanType::D, 4, 4),
            (CartanType::D, 5, 4),
        ];
        for (ty, n, ord) in cases {
            assert_eq!(
                RootSystem::new(ty, n).unwrap().fundamental_group_order(),
                ord
            );
        }
    }

    #[test]
    fn highest_roots_match_table() {
        let b3 = RootSystem::new(CartanType::B, 3).unwrap();
        assert_eq!(b3.highest_root().0, vec![1, 2, 2]);
        let c3 = RootSystem::new(CartanType::C, 3).unwrap();
        assert_eq!(c3.highest_root().0, vec![2, 2, 1]);
        let d4 = RootSystem::new(CartanType::D, 4).unwrap();
        assert_eq!(d4.highest_root().0, vec![1, 2, 1, 1]);
    }

    #[test]
    fn summary_json_shape() {
        let rs = RootSystem::new(CartanType::A, 2).unwrap();
        let v = serde_json::to_value(rs.summary()).unwrap();
        assert_eq!(v["type"], "A");
        assert_eq!(v["n_roots"], 6);
        assert_eq!(v["highest_root_coords"], serde_json::json!([1, 1]));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn pairing_is_bilinear(a in proptest::collection::vec(-5i32..5, 3),
                                   b in proptest::collection::vec(-5i32..5, 3),
                                   i in 0usize..18, j in 0usize..18) {
                let rs = RootSystem::new(CartanType::B, 3).unwrap();
                let (x, y) = (Coweight(a), Coweight(b));
                let (r, s) = (&rs.roots()[i], &rs.roots()[j]);
                prop_assert_eq!(pairing(&x.add(&y), r), pairing(&x, r) + pairing(&y, r));
                let rs_sum = Root(r.0.iter().zip(&s.0).map(|(p, q)| p + q).collect());
                prop_assert_eq!(pairing(&x, &rs_sum), pairing(&x, r) + pairing(&x, s));
            }
        }
    }
}
