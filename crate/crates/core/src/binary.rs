//! Planar binary trees with the over/under operations.
//!
//! `u · v` identifies the root of `u` with the leftmost leaf of `v`, and
//! `u * v` identifies the root of `v` with the rightmost leaf of `u`. Both are
//! associative and together satisfy `(a·b)*c = a·(b*c)`; the resulting duplex
//! is free on `e = gr(|, |)` among duplexes with that identity.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::config::{self, Config};
use crate::error::{Error, Result};
use crate::ops::DuplexOps;
use crate::planar::PlanarTree;

/// A planar binary tree, or the stub `|`.
///
/// The stub is not an element of the duplex; it appears as a subtree and as
/// the neutral argument of the convention `u·| = |·u = u*| = |*u = u`.
/// Degree is the number of internal vertices. Trees are ordered by degree,
/// then left subtree, then right subtree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryTree {
    degree: usize,
    kids: Option<Box<(BinaryTree, BinaryTree)>>,
}

impl BinaryTree {
    pub fn stub() -> Self {
        BinaryTree {
            degree: 0,
            kids: None,
        }
    }

    /// The generator `e = gr(|, |)`.
    pub fn generator() -> Self {
        Self::node(Self::stub(), Self::stub())
    }

    /// `gr(left, right)`.
    pub fn node(left: BinaryTree, right: BinaryTree) -> Self {
        BinaryTree {
            degree: left.degree + right.degree + 1,
            kids: Some(Box::new((left, right))),
        }
    }

    pub fn is_stub(&self) -> bool {
        self.kids.is_none()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// `(u^l, u^r)`.
    pub fn split(&self) -> Result<(&BinaryTree, &BinaryTree)> {
        match &self.kids {
            Some(kids) => Ok((&kids.0, &kids.1)),
            None => Err(Error::StubNotSplittable),
        }
    }

    /// `u · v = gr(u · v^l, v^r)`.
    pub fn over(&self, v: &BinaryTree) -> BinaryTree {
        match (&self.kids, &v.kids) {
            (None, _) => v.clone(),
            (_, None) => self.clone(),
            (_, Some(vk)) => BinaryTree::node(self.over(&vk.0), vk.1.clone()),
        }
    }

    /// `u * v = gr(u^l, u^r * v)`.
    pub fn under(&self, v: &BinaryTree) -> BinaryTree {
        match (&self.kids, &v.kids) {
            (None, _) => v.clone(),
            (_, None) => self.clone(),
            (Some(uk), _) => BinaryTree::node(uk.0.clone(), uk.1.under(v)),
        }
    }

    pub fn to_planar(&self) -> PlanarTree {
        match &self.kids {
            None => PlanarTree::leaf(),
            Some(k) => PlanarTree::node_unchecked(vec![k.0.to_planar(), k.1.to_planar()]),
        }
    }

    pub fn from_planar(t: &PlanarTree) -> Result<Self> {
        match t.children() {
            [] => Ok(BinaryTree::stub()),
            [l, r] => Ok(BinaryTree::node(Self::from_planar(l)?, Self::from_planar(r)?)),
            kids => Err(Error::Syntax {
                position: 0,
                message: format!("vertex with {} children in a binary tree", kids.len()),
            }),
        }
    }
}

/// The unique homomorphism from binary trees into a duplex satisfying
/// `(a·b)*c = a·(b*c)`, sending `e` to `a`:
/// `f(u) = (f(u^l)·a) * f(u^r)`, with stub factors dropped.
pub fn eval_duplexes1<D: DuplexOps>(u: &BinaryTree, a: &D::Carrier, ops: &D) -> Result<D::Carrier> {
    fn go<D: DuplexOps>(u: &BinaryTree, a: &D::Carrier, ops: &D) -> Option<D::Carrier> {
        let (l, r) = u.split().ok()?;
        let head = match go(l, a, ops) {
            Some(x) => ops.dot(&x, a),
            None => a.clone(),
        };
        Some(match go(r, a, ops) {
            Some(y) => ops.star(&head, &y),
            None => head,
        })
    }
    go(u, a, ops).ok_or(Error::StubNotSplittable)
}

/// All binary trees with `n` internal vertices in canonical order.
pub fn enumerate_binary(n: usize) -> Result<Vec<BinaryTree>> {
    enumerate_binary_in(n, &Config::default())
}

pub fn enumerate_binary_in(n: usize, cfg: &Config) -> Result<Vec<BinaryTree>> {
    config::check_degree(n)?;
    config::check_bound("binary tree degree", n, cfg.binary_degree)?;
    let mut table: Vec<Vec<BinaryTree>> = vec![vec![BinaryTree::stub()]];
    for m in 1..=n {
        let splits: Vec<usize> = (0..m).collect();
        let mut level = config::flat_map(cfg.strategy, &splits, |&k| {
            let mut out = Vec::with_capacity(table[k].len() * table[m - 1 - k].len());
            for l in &table[k] {
                for r in &table[m - 1 - k] {
                    out.push(BinaryTree::node(l.clone(), r.clone()));
                }
            }
            out
        });
        config::sort(cfg.strategy, &mut level);
        table.push(level);
    }
    Ok(table.swap_remove(n))
}

/// `c_n = (2n)! / (n! (n+1)!)`.
pub fn catalan(n: usize) -> Result<BigUint> {
    config::check_degree(n)?;
    let fact = |k: usize| (1..=k).map(BigUint::from).product::<BigUint>();
    Ok(fact(2 * n) / (fact(n) * fact(n + 1)))
}

/// `(𝔜, over, under)`.
#[derive(Debug, Clone, Copy, Default)]
pub struct TreeOps;

impl DuplexOps for TreeOps {
    type Carrier = BinaryTree;

    fn dot(&self, a: &BinaryTree, b: &BinaryTree) -> BinaryTree {
        a.over(b)
    }

    fn star(&self, a: &BinaryTree, b: &BinaryTree) -> BinaryTree {
        a.under(b)
    }
}

impl fmt::Display for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kids {
            None => f.write_str("|"),
            Some(k) => write!(f, "({}{})", k.0, k.1),
        }
    }
}

impl FromStr for BinaryTree {
    type Err = Error;

    /// Planar tree format restricted to binary vertices: `e = "(||)"`.
    fn from_str(s: &str) -> Result<Self> {
        BinaryTree::from_planar(&s.parse()?)
    }
}
