//! Exhaustive identity audits for the four varieties of duplexes.
//!
//! Triples are scanned by ascending total degree, then by degree
//! composition `(deg a, deg b, deg c)` in lexicographic order, then by each
//! structure's canonical element order. The first failing triple in that
//! order is reported whatever the execution strategy.

use std::fmt;

use crate::binary::{self, TreeOps};
use crate::config::{self, Config};
use crate::cube::{self, CubeOps};
use crate::decorated::{self, DecoratedOps};
use crate::error::Result;
use crate::ops::{DuplexOp, DuplexOps};
use crate::permutation::{self, PermOps};

/// A structure that can be audited.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Structure {
    Perm,
    Decorated,
    Binary,
    Cube,
}

impl Structure {
    pub const ALL: [Structure; 4] = [
        Structure::Perm,
        Structure::Decorated,
        Structure::Binary,
        Structure::Cube,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Structure::Perm => "perm",
            Structure::Decorated => "decorated",
            Structure::Binary => "binary",
            Structure::Cube => "cube",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variety {
    /// Both products associative.
    Duplex,
    /// Adds `(a·b)*c = a·(b*c)`.
    Duplexes1,
    /// Adds `(a*b)·c = a*(b·c)` to `Duplexes1`.
    Duplexes2,
    /// Adds `(a*b)·c = (a·b)·c` and `a*(b*c) = a*(b·c)` to `Duplexes1`.
    Dimonoid,
}

impl Variety {
    pub fn name(self) -> &'static str {
        match self {
            Variety::Duplex => "duplex",
            Variety::Duplexes1 => "duplexes1",
            Variety::Duplexes2 => "duplexes2",
            Variety::Dimonoid => "dimonoid",
        }
    }

    pub fn identities(self) -> Vec<Identity> {
        use Identity::*;
        let mut ids = vec![DotAssociative, StarAssociative];
        match self {
            Variety::Duplex => {}
            Variety::Duplexes1 => ids.push(DotStar),
            Variety::Duplexes2 => ids.extend([DotStar, StarDot]),
            Variety::Dimonoid => ids.extend([DotStar, StarDotLeft, StarStarRight]),
        }
        ids
    }
}

/// A defining identity, referred to by its text.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Identity {
    DotAssociative,
    StarAssociative,
    DotStar,
    StarDot,
    StarDotLeft,
    StarStarRight,
}

impl Identity {
    pub fn text(self) -> &'static str {
        match self {
            Identity::DotAssociative => "(a.b).c = a.(b.c)",
            Identity::StarAssociative => "(a*b)*c = a*(b*c)",
            Identity::DotStar => "(a.b)*c = a.(b*c)",
            Identity::StarDot => "(a*b).c = a*(b.c)",
            Identity::StarDotLeft => "(a*b).c = (a.b).c",
            Identity::StarStarRight => "a*(b*c) = a*(b.c)",
        }
    }

    /// Both sides of the identity evaluated at `(a, b, c)`.
    pub fn sides<D: DuplexOps>(
        self,
        ops: &D,
        a: &D::Carrier,
        b: &D::Carrier,
        c: &D::Carrier,
    ) -> (D::Carrier, D::Carrier) {
        use DuplexOp::{Dot, Star};
        // (outer-left op, inner-left op) for "(a x b) y c"; right side follows.
        let left = |x, y| ops.apply(y, &ops.apply(x, a, b), c);
        let right = |x, y| ops.apply(x, a, &ops.apply(y, b, c));
        match self {
            Identity::DotAssociative => (left(Dot, Dot), right(Dot, Dot)),
            Identity::StarAssociative => (left(Star, Star), right(Star, Star)),
            Identity::DotStar => (left(Dot, Star), right(Dot, Star)),
            Identity::StarDot => (left(Star, Dot), right(Star, Dot)),
            Identity::StarDotLeft => (left(Star, Dot), left(Dot, Dot)),
            Identity::StarStarRight => (right(Star, Star), right(Star, Dot)),
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.text())
    }
}

/// Outcome of an audit. `witness` is present exactly when `satisfied` is
/// false; elements are rendered in the structure's text format.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawReport {
    pub structure: Structure,
    pub variety: Variety,
    pub bound: usize,
    pub satisfied: bool,
    pub failing: Option<Identity>,
    pub witness: Option<[String; 3]>,
    /// Triples examined, up to and including the witness.
    pub triples_checked: u64,
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.failing, &self.witness) {
            (Some(id), Some([a, b, c])) => write!(
                f,
                "{} is not in {} up to degree {}: {} fails at a={a} b={b} c={c} ({} triples checked)",
                self.structure.name(),
                self.variety.name(),
                self.bound,
                id,
                self.triples_checked
            ),
            _ => write!(
                f,
                "{} satisfies {} up to degree {} ({} triples checked)",
                self.structure.name(),
                self.variety.name(),
                self.bound,
                self.triples_checked
            ),
        }
    }
}

/// Audits `variety` on `structure` over all triples of total degree
/// `<= bound`.
pub fn check_laws(structure: Structure, variety: Variety, bound: usize) -> Result<LawReport> {
    check_laws_in(structure, variety, bound, &Config::default())
}

pub fn check_laws_in(
    structure: Structure,
    variety: Variety,
    bound: usize,
    cfg: &Config,
) -> Result<LawReport> {
    config::check_degree(bound)?;
    let max = bound.saturating_sub(2);
    let degrees = 1..=max;
    let found = match structure {
        Structure::Perm => {
            config::check_bound("law audit degree (perm)", bound, cfg.perm_law_degree)?;
            let elems = degrees
                .map(|d| permutation::enumerate_all_in(d, cfg))
                .collect::<Result<Vec<_>>>()?;
            audit(&PermOps, &elems, bound, variety, cfg)
        }
        Structure::Decorated => {
            config::check_bound("law audit degree", bound, cfg.law_degree)?;
            let elems = degrees
                .map(|d| decorated::enumerate_decorated_in(d, cfg))
                .collect::<Result<Vec<_>>>()?;
            audit(&DecoratedOps, &elems, bound, variety, cfg)
        }
        Structure::Binary => {
            config::check_bound("law audit degree", bound, cfg.law_degree)?;
            let elems = degrees
                .map(|d| binary::enumerate_binary_in(d, cfg))
                .collect::<Result<Vec<_>>>()?;
            audit(&TreeOps, &elems, bound, variety, cfg)
        }
        Structure::Cube => {
            config::check_bound("law audit degree", bound, cfg.law_degree)?;
            let elems = degrees.map(cube::enumerate_cubes).collect::<Result<Vec<_>>>()?;
            audit(&CubeOps, &elems, bound, variety, cfg)
        }
    };
    let (failure, triples_checked) = found;
    Ok(LawReport {
        structure,
        variety,
        bound,
        satisfied: failure.is_none(),
        failing: failure.as_ref().map(|(id, _)| *id),
        witness: failure.map(|(_, w)| w),
        triples_checked,
    })
}

type Failure = (Identity, [String; 3]);

/// `elems[d - 1]` lists the elements of degree `d` in canonical order.
fn audit<D>(
    ops: &D,
    elems: &[Vec<D::Carrier>],
    bound: usize,
    variety: Variety,
    cfg: &Config,
) -> (Option<Failure>, u64)
where
    D: DuplexOps + Sync,
    D::Carrier: PartialEq + fmt::Display + Sync + Send,
{
    let identities = variety.identities();
    let mut checked = 0u64;
    for total in 3..=bound {
        // One work item per (degree composition, first element).
        let mut items = Vec::new();
        for da in 1..=total - 2 {
            for db in 1..=total - 1 - da {
                let dc = total - da - db;
                for ai in 0..elems[da - 1].len() {
                    items.push((da, db, dc, ai));
                }
            }
        }
        let scan = |&(da, db, dc, ai): &(usize, usize, usize, usize)| {
            let a = &elems[da - 1][ai];
            let (bs, cs) = (&elems[db - 1], &elems[dc - 1]);
            for (bi, b) in bs.iter().enumerate() {
                for (ci, c) in cs.iter().enumerate() {
                    for &id in &identities {
                        let (lhs, rhs) = id.sides(ops, a, b, c);
                        if lhs != rhs {
                            let seen = (bi * cs.len() + ci + 1) as u64;
                            return Some((id, [a.to_string(), b.to_string(), c.to_string()], seen));
                        }
                    }
                }
            }
            None
        };
        let size = |&(_, db, dc, _): &(usize, usize, usize, usize)| {
            (elems[db - 1].len() * elems[dc - 1].len()) as u64
        };
        match config::find_map_first(cfg.strategy, &items, scan) {
            Some((pos, (id, witness, seen))) => {
                checked += items[..pos].iter().map(size).sum::<u64>() + seen;
                return (Some((id, witness)), checked);
            }
            None => checked += items.iter().map(size).sum::<u64>(),
        }
    }
    (None, checked)
}
