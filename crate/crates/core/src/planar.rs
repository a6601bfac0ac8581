//! Planar rooted trees whose internal vertices all have at least two
//! children, graded by leaf count.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::config::{self, Config};
use crate::error::{Error, Result};

/// A planar rooted tree: either the leaf `|` or a vertex with an ordered
/// sequence of at least two subtrees.
///
/// The order is the canonical one: fewer leaves first, then lexicographic on
/// the child sequences.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlanarTree {
    leaves: usize,
    children: Vec<PlanarTree>,
}

impl PlanarTree {
    pub fn leaf() -> Self {
        PlanarTree {
            leaves: 1,
            children: Vec::new(),
        }
    }

    /// `gr(t₁, …, t_k)`: joins the trees under a new root.
    pub fn graft(children: Vec<PlanarTree>) -> Result<Self> {
        if children.len() < 2 {
            return Err(Error::ArityTooSmall(children.len()));
        }
        Ok(Self::node_unchecked(children))
    }

    pub(crate) fn node_unchecked(children: Vec<PlanarTree>) -> Self {
        debug_assert!(children.len() >= 2);
        PlanarTree {
            leaves: children.iter().map(|c| c.leaves).sum(),
            children,
        }
    }

    /// `gr_I(t₁, …, t_k)`: grafts, then contracts the edges from the new root
    /// to the roots of `t_i` for `i ∈ positions` (1-based), splicing their
    /// children in place.
    pub fn graft_contract(positions: &[usize], children: Vec<PlanarTree>) -> Result<Self> {
        let k = children.len();
        if k < 2 {
            return Err(Error::ArityTooSmall(k));
        }
        let mut contract = vec![false; k];
        for &i in positions {
            if i == 0 || i > k {
                return Err(Error::ContractOutOfRange {
                    position: i,
                    arity: k,
                });
            }
            if children[i - 1].is_leaf() {
                return Err(Error::ContractLeaf(i));
            }
            contract[i - 1] = true;
        }
        let mut spliced = Vec::with_capacity(k);
        for (child, c) in children.into_iter().zip(contract) {
            if c {
                spliced.extend(child.children);
            } else {
                spliced.push(child);
            }
        }
        Ok(Self::node_unchecked(spliced))
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    pub fn leaf_count(&self) -> usize {
        self.leaves
    }

    /// Subtrees of the root; empty for the leaf.
    pub fn children(&self) -> &[PlanarTree] {
        &self.children
    }

    pub fn into_children(self) -> Vec<PlanarTree> {
        self.children
    }

    /// Number of internal vertices.
    pub fn vertex_count(&self) -> usize {
        if self.is_leaf() {
            0
        } else {
            1 + self.children.iter().map(PlanarTree::vertex_count).sum::<usize>()
        }
    }

    /// Levels of the internal vertices in preorder; the root has level 0.
    pub fn vertex_levels(&self) -> Vec<usize> {
        fn walk(t: &PlanarTree, level: usize, out: &mut Vec<usize>) {
            if !t.is_leaf() {
                out.push(level);
                for c in &t.children {
                    walk(c, level + 1, out);
                }
            }
        }
        let mut out = Vec::new();
        walk(self, 0, &mut out);
        out
    }

    /// Whether every internal vertex has exactly two children.
    pub fn is_binary(&self) -> bool {
        self.is_leaf() || (self.children.len() == 2 && self.children.iter().all(Self::is_binary))
    }
}

/// All trees with `n` leaves in canonical order.
pub fn enumerate_trees(n: usize) -> Result<Vec<PlanarTree>> {
    enumerate_trees_in(n, &Config::default())
}

pub fn enumerate_trees_in(n: usize, cfg: &Config) -> Result<Vec<PlanarTree>> {
    config::check_degree(n)?;
    config::check_bound("tree leaves", n, cfg.tree_leaves)?;
    let mut table: Vec<Vec<PlanarTree>> = vec![Vec::new(), vec![PlanarTree::leaf()]];
    for m in 2..=n {
        let comps = compositions(m);
        let mut level = config::flat_map(cfg.strategy, &comps, |parts| {
            parts
                .iter()
                .map(|&p| table[p].iter())
                .multi_cartesian_product()
                .map(|kids| PlanarTree::node_unchecked(kids.into_iter().cloned().collect()))
                .collect()
        });
        config::sort(cfg.strategy, &mut level);
        table.push(level);
    }
    Ok(table.swap_remove(n))
}

/// Compositions of `m` into at least two positive parts.
pub(crate) fn compositions(m: usize) -> Vec<Vec<usize>> {
    if m < 2 {
        return Vec::new();
    }
    (1u64..1 << (m - 1))
        .map(|cuts| {
            let mut parts = Vec::new();
            let mut run = 1;
            for gap in 0..m - 1 {
                if cuts >> gap & 1 == 1 {
                    parts.push(run);
                    run = 1;
                } else {
                    run += 1;
                }
            }
            parts.push(run);
            parts
        })
        .collect()
}

/// `C_n`, the number of trees with `n` leaves.
pub fn super_catalan(n: usize) -> Result<BigUint> {
    config::check_degree(n)?;
    Ok(super_catalan_table(n).swap_remove(n))
}

/// `[0, C_1, …, C_n]` from `C_1 = 1` and
/// `C_n = Σ_{k≥2} Σ_{n₁+⋯+n_k=n} C_{n₁}⋯C_{n_k}`.
///
/// The inner double sum is organized by the first part: `C_n = Σ_m C_m R_{n-m}`
/// where `R_j` counts non-empty tree sequences with `j` leaves in total.
pub fn super_catalan_table(n: usize) -> Vec<BigUint> {
    let mut c = vec![BigUint::zero(); n + 1];
    let mut r = vec![BigUint::zero(); n + 1];
    for j in 1..=n {
        let longer: BigUint = (1..j).map(|m| &c[m] * &r[j - m]).sum();
        c[j] = if j == 1 { BigUint::one() } else { longer.clone() };
        r[j] = &c[j] + longer;
    }
    c
}

impl fmt::Display for PlanarTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_leaf() {
            return f.write_str("|");
        }
        f.write_str("(")?;
        for c in &self.children {
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for PlanarTree {
    type Err = Error;

    /// Parses `|` and `( … )`; whitespace is ignored.
    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<(usize, char)> = s.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        let mut pos = 0;
        let tree = parse_tree(&chars, &mut pos)?;
        if let Some(&(at, c)) = chars.get(pos) {
            return Err(Error::Syntax {
                position: at,
                message: format!("unexpected {c:?} after tree"),
            });
        }
        Ok(tree)
    }
}

fn parse_tree(chars: &[(usize, char)], pos: &mut usize) -> Result<PlanarTree> {
    let end = chars.last().map_or(0, |&(i, _)| i + 1);
    match chars.get(*pos) {
        Some((_, '|')) => {
            *pos += 1;
            Ok(PlanarTree::leaf())
        }
        Some(&(open, '(')) => {
            *pos += 1;
            let mut kids = Vec::new();
            loop {
                match chars.get(*pos) {
                    Some((_, ')')) => {
                        *pos += 1;
                        break;
                    }
                    Some(_) => kids.push(parse_tree(chars, pos)?),
                    None => {
                        return Err(Error::Syntax {
                            position: end,
                            message: format!("unclosed '(' opened at {open}"),
                        })
                    }
                }
            }
            PlanarTree::graft(kids)
        }
        Some(&(at, c)) => Err(Error::Syntax {
            position: at,
            message: format!("expected '|' or '(', got {c:?}"),
        }),
        None => Err(Error::Syntax {
            position: end,
            message: "expected a tree".into(),
        }),
    }
}
