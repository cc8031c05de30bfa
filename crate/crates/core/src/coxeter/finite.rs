use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::coxeter::{longest_in_parabolic, Coxeter, NodeSet};
use crate::error::{invalid, Result};
use crate::root_data::{pairing, Coweight, Root, RootSystem};

/// Element of the finite Weyl group.
///
/// The canonical form is the integer matrix of the action on the simple-root
/// basis (column `j` holds `w(α_j)`), stored together with the matrix of the
/// inverse so that left descents are a column read as well.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElt {
    len: u32,
    rank: u16,
    data: Box<[i32]>,
}

impl WeylElt {
    fn from_parts(rank: usize, mat: &[i32], inv: &[i32], len: u32) -> WeylElt {
        let mut data = Vec::with_capacity(2 * rank * rank);
        data.extend_from_slice(mat);
        data.extend_from_slice(inv);
        WeylElt {
            len,
            rank: rank as u16,
            data: data.into_boxed_slice(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank as usize
    }

    pub fn length(&self) -> usize {
        self.len as usize
    }

    pub fn is_identity(&self) -> bool {
        self.len == 0
    }

    /// Action matrix, row-major: entry `(k, j)` is the `α_k` coefficient of `w(α_j)`.
    pub fn matrix(&self) -> &[i32] {
        let r = self.rank();
        &self.data[..r * r]
    }

    fn inv_matrix(&self) -> &[i32] {
        let r = self.rank();
        &self.data[r * r..]
    }

    fn entry(&self, k: usize, j: usize) -> i32 {
        self.data[k * self.rank() + j]
    }

    fn inv_entry(&self, k: usize, j: usize) -> i32 {
        let r = self.rank();
        self.data[r * r + k * r + j]
    }

    /// `w(α)` in simple-root coordinates.
    pub fn apply_root(&self, a: &Root) -> Root {
        Root(self.apply_vec(&a.0))
    }

    pub fn apply_vec(&self, a: &[i32]) -> Vec<i32> {
        let r = self.rank();
        (0..r)
            .map(|k| (0..r).map(|j| self.entry(k, j) * a[j]).sum())
            .collect()
    }

    pub fn apply_root_inv(&self, a: &Root) -> Root {
        let r = self.rank();
        Root(
            (0..r)
                .map(|k| (0..r).map(|j| self.inv_entry(k, j) * a.0[j]).sum())
                .collect(),
        )
    }

    /// `w(χ)`; uses `<wχ, α_j> = <χ, w^{-1} α_j>`.
    pub fn apply_coweight(&self, chi: &Coweight) -> Coweight {
        let r = self.rank();
        Coweight(
            (0..r)
                .map(|j| (0..r).map(|k| chi.0[k] * self.inv_entry(k, j)).sum())
                .collect(),
        )
    }

    fn column_sign(&self, j: usize, inverse: bool) -> i32 {
        let r = self.rank();
        for k in 0..r {
            let c = if inverse {
                self.inv_entry(k, j)
            } else {
                self.entry(k, j)
            };
            if c != 0 {
                return c.signum();
            }
        }
        0
    }
}

impl fmt::Debug for WeylElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.rank();
        let rows: Vec<&[i32]> = (0..r).map(|k| &self.matrix()[k * r..(k + 1) * r]).collect();
        write!(f, "WeylElt(len={}, {:?})", self.len, rows)
    }
}

struct Inner {
    rs: Arc<RootSystem>,
    simples: Vec<WeylElt>,
    nodes: Vec<usize>,
    identity: WeylElt,
    elements: OnceLock<Vec<WeylElt>>,
    longest: OnceLock<WeylElt>,
}

/// The finite Weyl group `W` of a root system.
#[derive(Clone)]
pub struct WeylGroup {
    inner: Arc<Inner>,
}

impl fmt::Debug for WeylGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "WeylGroup({}{})",
            self.rs().cartan_type(),
            self.rs().rank()
        )
    }
}

impl WeylGroup {
    pub fn new(rs: RootSystem) -> WeylGroup {
        Self::from_arc(Arc::new(rs))
    }

    pub fn from_arc(rs: Arc<RootSystem>) -> WeylGroup {
        let r = rs.rank();
        let mut id = vec![0; r * r];
        for i in 0..r {
            id[i * r + i] = 1;
        }
        let identity = WeylElt::from_parts(r, &id, &id, 0);
        let simples = (1..=r)
            .map(|i| {
                let m = reflection_matrix(&rs, &rs.simple_root(i));
                WeylElt::from_parts(r, &m, &m, 1)
            })
            .collect();
        WeylGroup {
            inner: Arc::new(Inner {
                rs,
                simples,
                nodes: (1..=r).collect(),
                identity,
                elements: OnceLock::new(),
                longest: OnceLock::new(),
            }),
        }
    }

    pub fn rs(&self) -> &RootSystem {
        &self.inner.rs
    }

    pub fn rs_arc(&self) -> Arc<RootSystem> {
        self.inner.rs.clone()
    }

    pub fn rank(&self) -> usize {
        self.rs().rank()
    }

    pub fn simple(&self, node: usize) -> &WeylElt {
        &self.inner.simples[node - 1]
    }

    /// The reflection `r_β` for a root `β`.
    pub fn reflection(&self, beta: &Root) -> Result<WeylElt> {
        if !self.rs().is_root(beta) {
            return invalid(format!("{:?} is not a root", beta.0));
        }
        let m = reflection_matrix(self.rs(), beta);
        Ok(self.make(&m, &m))
    }

    fn make(&self, mat: &[i32], inv: &[i32]) -> WeylElt {
        let r = self.rank();
        let mut e = WeylElt::from_parts(r, mat, inv, 0);
        e.len = self
            .rs()
            .positive_roots()
            .iter()
            .filter(|a| e.apply_root(a).is_negative())
            .count() as u32;
        e
    }

    pub fn from_word(&self, word: &[usize]) -> Result<WeylElt> {
        let mut x = self.identity();
        for &i in word {
            if i == 0 || i > self.rank() {
                return invalid(format!("node {i} is not a finite node"));
            }
            x = self.mul_simple_right(&x, i);
        }
        Ok(x)
    }

    /// All elements, ordered by length then canonical form.
    pub fn elements(&self) -> &[WeylElt] {
        self.inner.elements.get_or_init(|| {
            let mut out = vec![self.identity()];
            let mut seen: std::collections::HashSet<WeylElt> = out.iter().cloned().collect();
            let mut frontier = out.clone();
            while !frontier.is_empty() {
                let mut next = Vec::new();
                for x in &frontier {
                    for i in 1..=self.rank() {
                        let y = self.mul_simple_right(x, i);
                        if seen.insert(y.clone()) {
                            next.push(y);
                        }
                    }
                }
                out.extend(next.iter().cloned());
                frontier = next;
            }
            out.sort();
            out
        })
    }

    pub fn longest(&self) -> &WeylElt {
        self.inner
            .longest
            .get_or_init(|| longest_in_parabolic(self, &NodeSet::from_iter(1..=self.rank())))
    }

    /// `w ↦ w_S w w_S`.
    pub fn st_conjugate(&self, w: &WeylElt) -> WeylElt {
        let w0 = self.longest();
        self.mul(&self.mul(w0, w), w0)
    }

    /// `J^st`: the node set with `w_S s_j w_S = s_{j^st}`.
    pub fn st_node(&self, node: usize) -> usize {
        let c = self.st_conjugate(self.simple(node));
        (1..=self.rank())
            .find(|&i| self.simple(i) == &c)
            .expect("w_S normalizes simple reflections")
    }

    pub fn st_subset(&self, j: &NodeSet) -> NodeSet {
        j.iter().map(|i| self.st_node(i)).collect()
    }

    /// Inversion set `R⁺ ∩ w R⁻`: positive roots sent negative by `w⁻¹`.
    pub fn inversion_roots(&self, w: &WeylElt) -> Vec<Root> {
        self.rs()
            .positive_roots()
            .iter()
            .filter(|a| w.apply_root_inv(a).is_negative())
            .cloned()
            .collect()
    }

    pub fn pairing(&self, chi: &Coweight, a: &Root) -> i32 {
        pairing(chi, a)
    }
}

fn reflection_matrix(rs: &RootSystem, beta: &Root) -> Vec<i32> {
    let r = rs.rank();
    let cor = rs.coroot_of(beta).expect("reflection along a root");
    let mut m = vec![0; r * r];
    for j in 0..r {
        // s_β(α_j) = α_j - <β∨, α_j> β
        let p = cor.0[j];
        for k in 0..r {
            m[k * r + j] = if k == j { 1 } else { 0 } - p * beta.0[k];
        }
    }
    m
}

fn matmul(r: usize, a: &[i32], b: &[i32]) -> Vec<i32> {
    let mut out = vec![0; r * r];
    for i in 0..r {
        for k in 0..r {
            let aik = a[i * r + k];
            if aik == 0 {
                continue;
            }
            for j in 0..r {
                out[i * r + j] += aik * b[k * r + j];
            }
        }
    }
    out
}

impl Coxeter for WeylGroup {
    type Elt = WeylElt;

    fn nodes(&self) -> &[usize] {
        &self.inner.nodes
    }

    fn identity(&self) -> WeylElt {
        self.inner.identity.clone()
    }

    fn length(&self, x: &WeylElt) -> usize {
        x.length()
    }

    fn is_right_descent(&self, x: &WeylElt, node: usize) -> bool {
        x.column_sign(node - 1, false) < 0
    }

    fn is_left_descent(&self, x: &WeylElt, node: usize) -> bool {
        x.column_sign(node - 1, true) < 0
    }

    fn mul(&self, x: &WeylElt, y: &WeylElt) -> WeylElt {
        let r = self.rank();
        let m = matmul(r, x.matrix(), y.matrix());
        let inv = matmul(r, y.inv_matrix(), x.inv_matrix());
        self.make(&m, &inv)
    }

    fn mul_simple_right(&self, x: &WeylElt, node: usize) -> WeylElt {
        let d = self.is_right_descent(x, node);
        let s = self.simple(node);
        let r = self.rank();
        let m = matmul(r, x.matrix(), s.matrix());
        let inv = matmul(r, s.inv_matrix(), x.inv_matrix());
        let len = if d { x.len - 1 } else { x.len + 1 };
        WeylElt::from_parts(r, &m, &inv, len)
    }

    fn mul_simple_left(&self, node: usize, x: &WeylElt) -> WeylElt {
        let d = self.is_left_descent(x, node);
        let s = self.simple(node);
        let r = self.rank();
        let m = matmul(r, s.matrix(), x.matrix());
        let inv = matmul(r, x.inv_matrix(), s.inv_matrix());
        let len = if d { x.len - 1 } else { x.len + 1 };
        WeylElt::from_parts(r, &m, &inv, len)
    }

    fn inverse(&self, x: &WeylElt) -> WeylElt {
        let r = self.rank();
        WeylElt::from_parts(r, x.inv_matrix(), x.matrix(), x.len)
    }
}
