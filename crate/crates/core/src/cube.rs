//! Vertices of cubes: the free duplex on one generator satisfying both
//! `(a·b)*c = a·(b*c)` and `(a*b)·c = a*(b·c)`.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::config;
use crate::error::{Error, Result};
use crate::ops::{DuplexOp, DuplexOps};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    /// `·` separates with −1, `*` with +1.
    pub fn of(op: DuplexOp) -> Sign {
        match op {
            DuplexOp::Dot => Sign::Minus,
            DuplexOp::Star => Sign::Plus,
        }
    }

    pub fn op(self) -> DuplexOp {
        match self {
            Sign::Minus => DuplexOp::Dot,
            Sign::Plus => DuplexOp::Star,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Minus => "-1",
            Sign::Plus => "+1",
        })
    }
}

/// A vertex `(a₁, …, a_{n−1}) ∈ {−1, +1}^{n−1}` of degree `n`; the empty
/// vector is the generator `e`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CubeVertex {
    signs: Vec<Sign>,
}

impl CubeVertex {
    pub fn generator() -> Self {
        CubeVertex { signs: Vec::new() }
    }

    pub fn from_signs(signs: Vec<Sign>) -> Self {
        CubeVertex { signs }
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn degree(&self) -> usize {
        self.signs.len() + 1
    }

    /// `a ∘ b = (a₁, …, a_{n−1}, s, b₁, …, b_{m−1})` with `s = −1` for `·` and
    /// `s = +1` for `*`.
    pub fn product(&self, other: &CubeVertex, op: DuplexOp) -> CubeVertex {
        let mut signs = Vec::with_capacity(self.signs.len() + other.signs.len() + 1);
        signs.extend_from_slice(&self.signs);
        signs.push(Sign::of(op));
        signs.extend_from_slice(&other.signs);
        CubeVertex { signs }
    }

    pub fn dot(&self, other: &CubeVertex) -> CubeVertex {
        self.product(other, DuplexOp::Dot)
    }

    pub fn star(&self, other: &CubeVertex) -> CubeVertex {
        self.product(other, DuplexOp::Star)
    }

    /// The operations `∘₁, …, ∘_{n−1}` with `self = e ∘₁ e ∘₂ ⋯ ∘_{n−1} e`.
    pub fn word(&self) -> Vec<DuplexOp> {
        self.signs.iter().map(|s| s.op()).collect()
    }

    pub fn from_word(word: &[DuplexOp]) -> CubeVertex {
        CubeVertex {
            signs: word.iter().map(|&op| Sign::of(op)).collect(),
        }
    }
}

/// All vertices of degree `n`, lexicographic with `−1 < +1`.
pub fn enumerate_cubes(n: usize) -> Result<Vec<CubeVertex>> {
    config::check_degree(n)?;
    // 2^(n-1) vertices; the law audits never go past degree 9.
    config::check_bound("cube degree", n, 24)?;
    Ok(itertools::repeat_n([Sign::Minus, Sign::Plus], n - 1)
        .multi_cartesian_product()
        .map(CubeVertex::from_signs)
        .collect())
}

/// `(𝔔, ·, *)`.
#[derive(Debug, Clone, Copy, Default)]
pub struct CubeOps;

impl DuplexOps for CubeOps {
    type Carrier = CubeVertex;

    fn dot(&self, a: &CubeVertex, b: &CubeVertex) -> CubeVertex {
        a.dot(b)
    }

    fn star(&self, a: &CubeVertex, b: &CubeVertex) -> CubeVertex {
        a.star(b)
    }
}

impl fmt::Display for CubeVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.signs.is_empty() {
            f.write_str("e")
        } else {
            write!(f, "<{}>", self.signs.iter().join(","))
        }
    }
}

impl FromStr for CubeVertex {
    type Err = Error;

    /// Parses `e` or `<-1,+1,…>`; `1` is accepted for `+1`.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact == "e" {
            return Ok(CubeVertex::generator());
        }
        let inner = compact
            .strip_prefix('<')
            .and_then(|r| r.strip_suffix('>'))
            .ok_or_else(|| Error::Syntax {
                position: 0,
                message: format!("expected 'e' or '<…>', got {s:?}"),
            })?;
        let signs = inner
            .split(',')
            .enumerate()
            .map(|(i, tok)| match tok {
                "-1" => Ok(Sign::Minus),
                "+1" | "1" => Ok(Sign::Plus),
                _ => Err(Error::Syntax {
                    position: i,
                    message: format!("sign {} must be -1 or +1, got {tok:?}", i + 1),
                }),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CubeVertex { signs })
    }
}
