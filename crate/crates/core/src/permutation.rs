//! The permutation duplex `(𝔖, ♯, ♮)`.
//!
//! `♯` places the second permutation above the first block-diagonally and
//! `♮` places it anti-diagonally. Both semigroups are free, and the duplex is
//! free on the permutations that are indecomposable for both operations;
//! [`duplex_factorize`] computes that normal form.
//!
//! Throughout the crate `♯` plays the role of the dot product and `♮` the role
//! of the star product (see [`PermOps`]).

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::config::{self, Config};
use crate::decorated::DuplexExpr;
use crate::error::{Error, Result};
use crate::ops::{DuplexOp, DuplexOps};

/// A bijection of `{1..n}`, `n >= 1`, in one-line notation.
///
/// The derived order is lexicographic on the one-line notation, which is the
/// canonical enumeration order within a degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

/// Which notion of indecomposability to test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IndecKind {
    /// No non-trivial `♯`-factorization.
    Sharp,
    /// No non-trivial `♮`-factorization.
    Natural,
    /// Both `Sharp` and `Natural`: the free generators of the duplex.
    S2,
}

impl Permutation {
    /// Builds a permutation from its images `(f(1), …, f(n))`.
    pub fn new(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::InvalidDegree(0));
        }
        let mut seen = vec![false; n + 1];
        for &v in &images {
            let v = v as usize;
            if v == 0 || v > n {
                return Err(Error::NotABijection {
                    degree: n,
                    detail: format!("value {v} is out of range"),
                });
            }
            if seen[v] {
                return Err(Error::NotABijection {
                    degree: n,
                    detail: format!("value {v} is repeated"),
                });
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    fn from_vec_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(images.clone()).is_ok());
        Permutation { images }
    }

    pub fn identity(n: usize) -> Result<Self> {
        config::check_degree(n)?;
        Ok(Permutation::from_vec_unchecked((1..=n as u32).collect()))
    }

    /// The single permutation of degree one.
    pub fn unit() -> Self {
        Permutation { images: vec![1] }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// `f(i)` for `1 <= i <= n`.
    pub fn apply(&self, i: usize) -> u32 {
        self.images[i - 1]
    }

    /// `self ∘ g`, i.e. `i ↦ self(g(i))`.
    pub fn compose(&self, g: &Permutation) -> Result<Permutation> {
        if self.degree() != g.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: g.degree(),
            });
        }
        Ok(Permutation::from_vec_unchecked(
            g.images.iter().map(|&j| self.images[j as usize - 1]).collect(),
        ))
    }

    /// Block concatenation `self ♯ g`.
    pub fn sharp(&self, g: &Permutation) -> Permutation {
        let n = self.degree() as u32;
        let mut images = Vec::with_capacity(self.degree() + g.degree());
        images.extend_from_slice(&self.images);
        images.extend(g.images.iter().map(|&v| n + v));
        Permutation::from_vec_unchecked(images)
    }

    /// Anti-diagonal concatenation `self ♮ g`.
    pub fn natural(&self, g: &Permutation) -> Permutation {
        let m = g.degree() as u32;
        let mut images = Vec::with_capacity(self.degree() + g.degree());
        images.extend(self.images.iter().map(|&v| m + v));
        images.extend_from_slice(&g.images);
        Permutation::from_vec_unchecked(images)
    }

    /// `ω_n ∘ self`; an involution exchanging `♯` and `♮`.
    pub fn xi(&self) -> Permutation {
        let n1 = self.degree() as u32 + 1;
        Permutation::from_vec_unchecked(self.images.iter().map(|&v| n1 - v).collect())
    }

    /// The smallest `i` with `f({1..i}) ⊆ {1..i}`.
    pub fn delta(&self) -> usize {
        let mut max = 0;
        for (i, &v) in self.images.iter().enumerate() {
            max = max.max(v as usize);
            if max == i + 1 {
                return i + 1;
            }
        }
        unreachable!("a permutation maps {{1..n}} onto itself")
    }

    /// Splits `f = f_δ ♯ f_β` at `δ(f)`. Returns `None` when `f` is
    /// `♯`-indecomposable.
    pub fn sharp_split(&self) -> Option<(Permutation, Permutation)> {
        let d = self.delta();
        if d == self.degree() {
            return None;
        }
        let head = self.images[..d].to_vec();
        let tail = self.images[d..].iter().map(|&v| v - d as u32).collect();
        Some((
            Permutation::from_vec_unchecked(head),
            Permutation::from_vec_unchecked(tail),
        ))
    }

    pub fn is_indecomposable(&self, kind: IndecKind) -> bool {
        match kind {
            IndecKind::Sharp => !self.has_sharp_cut(),
            IndecKind::Natural => !self.has_natural_cut(),
            IndecKind::S2 => !self.has_sharp_cut() && !self.has_natural_cut(),
        }
    }

    // Some i < n with f({1..i}) = {1..i}.
    fn has_sharp_cut(&self) -> bool {
        let n = self.degree();
        let mut max = 0;
        for (i, &v) in self.images[..n - 1].iter().enumerate() {
            max = max.max(v as usize);
            if max == i + 1 {
                return true;
            }
        }
        false
    }

    // Some i < n with f({1..i}) = {n-i+1..n}.
    fn has_natural_cut(&self) -> bool {
        let n = self.degree();
        let mut min = usize::MAX;
        for (i, &v) in self.images[..n - 1].iter().enumerate() {
            min = min.min(v as usize);
            if min == n - i {
                return true;
            }
        }
        false
    }
}

/// `ω_n(i) = n + 1 - i`.
pub fn omega(n: usize) -> Result<Permutation> {
    config::check_degree(n)?;
    Ok(Permutation::from_vec_unchecked((1..=n as u32).rev().collect()))
}

/// The unique factorization `f = g₁ ♯ ⋯ ♯ g_k` into `♯`-indecomposables.
pub fn sharp_factorize(f: &Permutation) -> Vec<Permutation> {
    let mut factors = Vec::new();
    let mut rest = f.clone();
    while let Some((head, tail)) = rest.sharp_split() {
        factors.push(head);
        rest = tail;
    }
    factors.push(rest);
    factors
}

/// The unique factorization `f = g₁ ♮ ⋯ ♮ g_k` into `♮`-indecomposables,
/// obtained by conjugating [`sharp_factorize`] with `ξ`.
pub fn natural_factorize(f: &Permutation) -> Vec<Permutation> {
    sharp_factorize(&f.xi()).iter().map(Permutation::xi).collect()
}

/// Normal form of `f` in the free duplex on the `𝔖₂`-indecomposables.
///
/// Leaves are `𝔖₂`-indecomposable permutations; evaluating the result with
/// [`PermOps`] gives back `f`.
pub fn duplex_factorize(f: &Permutation) -> DuplexExpr<Permutation> {
    let (op, factors) = if f.has_sharp_cut() {
        (DuplexOp::Dot, sharp_factorize(f))
    } else if f.has_natural_cut() {
        (DuplexOp::Star, natural_factorize(f))
    } else {
        return DuplexExpr::leaf(f.clone());
    };
    factors
        .iter()
        .map(duplex_factorize)
        .reduce(|acc, x| acc.product(op, &x))
        .expect("a decomposable permutation has at least two factors")
}

/// All permutations of degree `n` in lexicographic order.
pub fn enumerate_all(n: usize) -> Result<Vec<Permutation>> {
    enumerate_all_in(n, &Config::default())
}

pub fn enumerate_all_in(n: usize, cfg: &Config) -> Result<Vec<Permutation>> {
    enumerate_filtered(n, cfg, |_| true)
}

/// Degree-`n` permutations that are indecomposable of the given kind, in
/// lexicographic order.
pub fn enumerate_indecomposable(n: usize, kind: IndecKind) -> Result<Vec<Permutation>> {
    enumerate_indecomposable_in(n, kind, &Config::default())
}

pub fn enumerate_indecomposable_in(
    n: usize,
    kind: IndecKind,
    cfg: &Config,
) -> Result<Vec<Permutation>> {
    enumerate_filtered(n, cfg, |f| f.is_indecomposable(kind))
}

fn enumerate_filtered<F>(n: usize, cfg: &Config, keep: F) -> Result<Vec<Permutation>>
where
    F: Fn(&Permutation) -> bool + Sync + Send,
{
    config::check_degree(n)?;
    config::check_bound("permutation degree", n, cfg.perm_degree)?;
    let n32 = n as u32;
    let firsts: Vec<u32> = (1..=n32).collect();
    // Splitting on the first image keeps lexicographic order across chunks.
    Ok(config::flat_map(cfg.strategy, &firsts, |&first| {
        let rest: Vec<u32> = (1..=n32).filter(|&v| v != first).collect();
        let k = rest.len();
        rest.into_iter()
            .permutations(k)
            .map(|tail| {
                let mut images = Vec::with_capacity(n);
                images.push(first);
                images.extend(tail);
                Permutation::from_vec_unchecked(images)
            })
            .filter(|f| keep(f))
            .collect()
    }))
}

/// `(𝔖, ♯, ♮)` with `♯` as dot and `♮` as star.
#[derive(Debug, Clone, Copy, Default)]
pub struct PermOps;

impl DuplexOps for PermOps {
    type Carrier = Permutation;

    fn dot(&self, a: &Permutation, b: &Permutation) -> Permutation {
        a.sharp(b)
    }

    fn star(&self, a: &Permutation, b: &Permutation) -> Permutation {
        a.natural(b)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.images.iter().join(","))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Parses `"(3,1,2)"`; whitespace is ignored.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = compact
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Syntax {
                position: 0,
                message: format!("expected a parenthesized list, got {s:?}"),
            })?;
        if inner.is_empty() {
            return Err(Error::InvalidDegree(0));
        }
        let images = inner
            .split(',')
            .enumerate()
            .map(|(i, tok)| {
                tok.parse::<u32>().map_err(|_| Error::Syntax {
                    position: i,
                    message: format!("entry {} is not a positive integer: {tok:?}", i + 1),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let n = images.len();
        Permutation::new(images.clone()).map_err(|err| match err {
            Error::NotABijection { .. } => Error::NotABijection {
                degree: n,
                detail: describe_defect(&images),
            },
            other => other,
        })
    }
}

// Names every repeated, missing and out-of-range value.
fn describe_defect(images: &[u32]) -> String {
    let n = images.len() as u32;
    let counts = images.iter().counts();
    let mut parts = Vec::new();
    let out: Vec<_> = images.iter().filter(|&&v| v == 0 || v > n).unique().collect();
    if !out.is_empty() {
        parts.push(format!("out of range: {}", out.iter().join(", ")));
    }
    let repeated: Vec<_> = (1..=n).filter(|v| counts.get(v).is_some_and(|&c| c > 1)).collect();
    if !repeated.is_empty() {
        parts.push(format!("repeated: {}", repeated.iter().join(", ")));
    }
    let missing: Vec<_> = (1..=n).filter(|v| !counts.contains_key(v)).collect();
    if !missing.is_empty() {
        parts.push(format!("missing: {}", missing.iter().join(", ")));
    }
    parts.join("; ")
}
