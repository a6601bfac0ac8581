//! Canonical homomorphisms `α: 𝔇 → 𝔖`, `ρ: 𝔇 → 𝔜` and `φ: 𝔜 → 𝔔`, and the
//! leaf-sign description of `φ ∘ ρ`.

use crate::binary::{self, BinaryTree, TreeOps};
use crate::cube::{CubeOps, CubeVertex, Sign};
use crate::decorated::DecoratedTree;
use crate::error::{Error, Result};
use crate::permutation::{PermOps, Permutation};
use crate::planar::PlanarTree;

/// `α`, determined by `α(|) = (1)`.
pub fn alpha(x: &DecoratedTree) -> Permutation {
    x.eval(&Permutation::unit(), &PermOps)
}

/// `ρ`, determined by `ρ(|) = e = gr(|, |)`.
pub fn rho(x: &DecoratedTree) -> BinaryTree {
    x.eval(&BinaryTree::generator(), &TreeOps)
}

/// `φ`, the quotient sending the binary generator to the cube generator.
pub fn phi(u: &BinaryTree) -> Result<CubeVertex> {
    if u.is_stub() {
        return Err(Error::InvalidDegree(0));
    }
    binary::eval_duplexes1(u, &CubeVertex::generator(), &CubeOps)
}

/// Reads `φ(ρ(x))` off the decorated tree.
///
/// Number the leaves `1..n` left to right. The line drawn from leaf `i+1`
/// runs down through every vertex of which it is the leftmost branch and ends
/// at the first vertex it enters from a later branch, which is the lowest
/// common ancestor of leaves `i` and `i+1`. `aᵢ` is `+1` when that vertex is
/// signed `*` and `−1` when it is signed `·`.
pub fn leaf_sign_vector(x: &DecoratedTree) -> Result<CubeVertex> {
    if x.degree() < 2 {
        return Err(Error::DegreeTooSmall {
            degree: x.degree(),
            minimum: 2,
        });
    }
    fn walk(t: &PlanarTree, level: usize, x: &DecoratedTree, out: &mut Vec<Sign>) {
        let kids = t.children();
        for (j, c) in kids.iter().enumerate() {
            walk(c, level + 1, x, out);
            if j + 1 < kids.len() {
                let op = x.sign_at_level(level).expect("tagged tree");
                out.push(Sign::of(op));
            }
        }
    }
    let mut signs = Vec::with_capacity(x.degree() - 1);
    walk(x.shape(), 0, x, &mut signs);
    Ok(CubeVertex::from_signs(signs))
}
