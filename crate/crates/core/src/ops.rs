//! The abstract pair of operations that every duplex carries.

use std::fmt;

/// One of the two products of a duplex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DuplexOp {
    /// The product written `·` (ASCII `.`).
    Dot,
    /// The product written `*`.
    Star,
}

impl DuplexOp {
    pub fn symbol(self) -> char {
        match self {
            DuplexOp::Dot => '.',
            DuplexOp::Star => '*',
        }
    }

    pub fn other(self) -> DuplexOp {
        match self {
            DuplexOp::Dot => DuplexOp::Star,
            DuplexOp::Star => DuplexOp::Dot,
        }
    }
}

impl fmt::Display for DuplexOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Two binary operations on a carrier.
///
/// Associativity of both operations is assumed, not checked; use
/// [`crate::laws`] to audit a structure.
pub trait DuplexOps {
    type Carrier: Clone;

    fn dot(&self, a: &Self::Carrier, b: &Self::Carrier) -> Self::Carrier;

    fn star(&self, a: &Self::Carrier, b: &Self::Carrier) -> Self::Carrier;

    fn apply(&self, op: DuplexOp, a: &Self::Carrier, b: &Self::Carrier) -> Self::Carrier {
        match op {
            DuplexOp::Dot => self.dot(a, b),
            DuplexOp::Star => self.star(a, b),
        }
    }

    /// Left fold of `op` over a non-empty sequence.
    fn fold<'a, I>(&self, op: DuplexOp, items: I) -> Option<Self::Carrier>
    where
        I: IntoIterator<Item = &'a Self::Carrier>,
        Self::Carrier: 'a,
    {
        let mut it = items.into_iter();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, x| self.apply(op, &acc, x)))
    }
}

/// Closure of degree-one generators under both products, by degree.
///
/// `result[n]` holds the distinct elements of degree `n` reachable as products,
/// sorted; index 0 is empty. The `degree` function must be additive under both
/// products.
pub fn closure_by_degree<D, F>(
    ops: &D,
    generators: Vec<D::Carrier>,
    max_degree: usize,
    degree: F,
) -> Vec<Vec<D::Carrier>>
where
    D: DuplexOps,
    D::Carrier: Ord,
    F: Fn(&D::Carrier) -> usize,
{
    use std::collections::BTreeSet;

    let mut levels: Vec<Vec<D::Carrier>> = vec![Vec::new(); max_degree + 1];
    if max_degree == 0 {
        return levels;
    }
    let mut first: Vec<_> = generators.into_iter().filter(|g| degree(g) == 1).collect();
    first.sort();
    first.dedup();
    levels[1] = first;
    for n in 2..=max_degree {
        let mut found = BTreeSet::new();
        for a in 1..n {
            for x in &levels[a] {
                for y in &levels[n - a] {
                    found.insert(ops.dot(x, y));
                    found.insert(ops.star(x, y));
                }
            }
        }
        levels[n] = found.into_iter().collect();
    }
    levels
}
