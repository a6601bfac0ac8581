//! The free duplex on decorated planar trees.
//!
//! A decorated tree is a planar tree plus the sign of its root; every other
//! vertex takes the sign opposite to its parent, so signs alternate by level.
//! Products graft two trees and contract the root edges of those arguments
//! whose root sign already matches the product:
//!
//! ```text
//! t₁ · t₂ = gr_J(t₁, t₂),  J = { i : root sign of t_i is · }
//! t₁ * t₂ = gr_I(t₁, t₂),  I = { i : root sign of t_i is * }
//! ```
//!
//! With generator labels on the leaves this is the free duplex `Dupl(S)`
//! ([`DuplexExpr`]); with a single generator it is `𝔇` ([`DecoratedTree`]).

use std::collections::BTreeSet;
use std::fmt;
use std::marker::PhantomData;
use std::str::FromStr;
use std::sync::Arc;

use itertools::Itertools;

use crate::config::{self, Config};
use crate::error::{Error, Result};
use crate::ops::{DuplexOp, DuplexOps};
use crate::planar::{self, PlanarTree};

/// A planar tree together with the sign of its root.
///
/// The leaf `|` carries no sign; every other tree carries `·` or `*`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DecoratedTree {
    shape: PlanarTree,
    tag: Option<DuplexOp>,
}

impl DecoratedTree {
    /// The generator `e = |`.
    pub fn generator() -> Self {
        DecoratedTree {
            shape: PlanarTree::leaf(),
            tag: None,
        }
    }

    pub fn new(shape: PlanarTree, tag: Option<DuplexOp>) -> Result<Self> {
        if shape.is_leaf() != tag.is_none() {
            return Err(Error::InvalidTag);
        }
        Ok(DecoratedTree { shape, tag })
    }

    pub fn shape(&self) -> &PlanarTree {
        &self.shape
    }

    /// Sign of the root, `None` for the leaf.
    pub fn tag(&self) -> Option<DuplexOp> {
        self.tag
    }

    pub fn is_leaf(&self) -> bool {
        self.tag.is_none()
    }

    pub fn degree(&self) -> usize {
        self.shape.leaf_count()
    }

    /// Sign carried by an internal vertex at `level`.
    pub fn sign_at_level(&self, level: usize) -> Option<DuplexOp> {
        self.tag
            .map(|t| if level.is_multiple_of(2) { t } else { t.other() })
    }

    /// Signs of the internal vertices in preorder.
    pub fn vertex_signs(&self) -> Vec<DuplexOp> {
        self.shape
            .vertex_levels()
            .into_iter()
            .filter_map(|l| self.sign_at_level(l))
            .collect()
    }

    pub fn product(&self, op: DuplexOp, other: &DecoratedTree) -> DecoratedTree {
        let contract: Vec<usize> = [self, other]
            .iter()
            .enumerate()
            .filter(|(_, t)| t.tag == Some(op))
            .map(|(i, _)| i + 1)
            .collect();
        let shape = PlanarTree::graft_contract(&contract, vec![self.shape.clone(), other.shape.clone()])
            .expect("only tagged trees are contracted");
        DecoratedTree {
            shape,
            tag: Some(op),
        }
    }

    pub fn dot(&self, other: &DecoratedTree) -> DecoratedTree {
        self.product(DuplexOp::Dot, other)
    }

    pub fn star(&self, other: &DecoratedTree) -> DecoratedTree {
        self.product(DuplexOp::Star, other)
    }

    /// The unique factors `t₁, …, t_k` with `self = t₁ ∘ ⋯ ∘ t_k`, where `∘`
    /// is the root sign and no factor has root sign `∘`. Empty for the leaf.
    pub fn components(&self) -> Vec<DecoratedTree> {
        let Some(tag) = self.tag else {
            return Vec::new();
        };
        self.shape
            .children()
            .iter()
            .map(|c| DecoratedTree {
                shape: c.clone(),
                tag: (!c.is_leaf()).then_some(tag.other()),
            })
            .collect()
    }

    /// Image under the homomorphism sending `e` to `generator`.
    pub fn eval<D: DuplexOps>(&self, generator: &D::Carrier, ops: &D) -> D::Carrier {
        match self.tag {
            None => generator.clone(),
            Some(op) => {
                let parts: Vec<_> = self.components().iter().map(|c| c.eval(generator, ops)).collect();
                ops.fold(op, &parts).expect("tagged trees have at least two components")
            }
        }
    }

    /// Machine format: tree string and tag letter (`d`, `s` or `-`).
    pub fn to_machine(&self) -> (String, char) {
        (self.shape.to_string(), tag_letter(self.tag))
    }

    pub fn from_machine(tree: &str, tag: char) -> Result<Self> {
        let tag = match tag {
            'd' => Some(DuplexOp::Dot),
            's' => Some(DuplexOp::Star),
            '-' => None,
            other => {
                return Err(Error::Syntax {
                    position: 0,
                    message: format!("unknown tag letter {other:?}"),
                })
            }
        };
        DecoratedTree::new(tree.parse()?, tag)
    }
}

fn tag_letter(tag: Option<DuplexOp>) -> char {
    match tag {
        Some(DuplexOp::Dot) => 'd',
        Some(DuplexOp::Star) => 's',
        None => '-',
    }
}

/// All decorated trees with `n` leaves: the leaf for `n = 1`, otherwise every
/// shape with `·` then with `*`.
pub fn enumerate_decorated(n: usize) -> Result<Vec<DecoratedTree>> {
    enumerate_decorated_in(n, &Config::default())
}

pub fn enumerate_decorated_in(n: usize, cfg: &Config) -> Result<Vec<DecoratedTree>> {
    config::check_degree(n)?;
    config::check_bound("decorated tree leaves", n, cfg.decorated_leaves)?;
    if n == 1 {
        return Ok(vec![DecoratedTree::generator()]);
    }
    Ok(planar::enumerate_trees_in(n, cfg)?
        .into_iter()
        .flat_map(|shape| {
            [DuplexOp::Dot, DuplexOp::Star].map(|op| DecoratedTree {
                shape: shape.clone(),
                tag: Some(op),
            })
        })
        .collect())
}

/// `(𝔇, ·, *)`.
#[derive(Debug, Clone, Copy, Default)]
pub struct DecoratedOps;

impl DuplexOps for DecoratedOps {
    type Carrier = DecoratedTree;

    fn dot(&self, a: &DecoratedTree, b: &DecoratedTree) -> DecoratedTree {
        a.dot(b)
    }

    fn star(&self, a: &DecoratedTree, b: &DecoratedTree) -> DecoratedTree {
        a.star(b)
    }
}

/// An element of the free duplex on labels of type `L`: a decorated tree
/// with one label per leaf, read left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DuplexExpr<L = Symbol> {
    tree: DecoratedTree,
    labels: Vec<L>,
}

impl<L: Clone> DuplexExpr<L> {
    pub fn leaf(label: L) -> Self {
        DuplexExpr {
            tree: DecoratedTree::generator(),
            labels: vec![label],
        }
    }

    pub fn new(tree: DecoratedTree, labels: Vec<L>) -> Result<Self> {
        if tree.degree() != labels.len() {
            return Err(Error::LabelCount {
                expected: tree.degree(),
                got: labels.len(),
            });
        }
        Ok(DuplexExpr { tree, labels })
    }

    pub fn tree(&self) -> &DecoratedTree {
        &self.tree
    }

    pub fn labels(&self) -> &[L] {
        &self.labels
    }

    pub fn degree(&self) -> usize {
        self.labels.len()
    }

    pub fn product(&self, op: DuplexOp, other: &Self) -> Self {
        DuplexExpr {
            tree: self.tree.product(op, &other.tree),
            labels: self.labels.iter().chain(&other.labels).cloned().collect(),
        }
    }

    pub fn dot(&self, other: &Self) -> Self {
        self.product(DuplexOp::Dot, other)
    }

    pub fn star(&self, other: &Self) -> Self {
        self.product(DuplexOp::Star, other)
    }

    /// Factors of the root product, each carrying its own slice of labels.
    pub fn components(&self) -> Vec<DuplexExpr<L>> {
        let mut offset = 0;
        self.tree
            .components()
            .into_iter()
            .map(|tree| {
                let n = tree.degree();
                let labels = self.labels[offset..offset + n].to_vec();
                offset += n;
                DuplexExpr { tree, labels }
            })
            .collect()
    }

    pub fn map_labels<M: Clone>(&self, f: impl Fn(&L) -> M) -> DuplexExpr<M> {
        DuplexExpr {
            tree: self.tree.clone(),
            labels: self.labels.iter().map(f).collect(),
        }
    }
}

impl<L: Clone + fmt::Display> DuplexExpr<L> {
    /// Image under the unique duplex homomorphism extending `assignment`.
    pub fn eval_hom<D, F>(&self, assignment: F, ops: &D) -> Result<D::Carrier>
    where
        D: DuplexOps,
        F: Fn(&L) -> Option<D::Carrier>,
    {
        self.eval_with(&assignment, ops)
    }

    fn eval_with<D, F>(&self, assignment: &F, ops: &D) -> Result<D::Carrier>
    where
        D: DuplexOps,
        F: Fn(&L) -> Option<D::Carrier>,
    {
        match self.tree.tag {
            None => {
                let label = &self.labels[0];
                assignment(label).ok_or_else(|| Error::UnboundGenerator(label.to_string()))
            }
            Some(op) => {
                let parts = self
                    .components()
                    .iter()
                    .map(|c| c.eval_with(assignment, ops))
                    .collect::<Result<Vec<_>>>()?;
                Ok(ops.fold(op, &parts).expect("tagged trees have at least two components"))
            }
        }
    }

    /// Machine format: tree string, tag letter and the labels as strings.
    pub fn to_machine(&self) -> (String, char, Vec<String>) {
        let (tree, tag) = self.tree.to_machine();
        (tree, tag, self.labels.iter().map(L::to_string).collect())
    }
}

impl<L: Clone + FromStr<Err = Error>> DuplexExpr<L> {
    pub fn from_machine(tree: &str, tag: char, labels: &[String]) -> Result<Self> {
        let tree = DecoratedTree::from_machine(tree, tag)?;
        let labels = labels.iter().map(|s| s.parse()).collect::<Result<Vec<L>>>()?;
        DuplexExpr::new(tree, labels)
    }
}

impl<L: fmt::Display> fmt::Display for DuplexExpr<L> {
    /// Expression syntax, e.g. `(e.e.e)*(e.(e*e))`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn write<L: fmt::Display>(
            f: &mut fmt::Formatter<'_>,
            shape: &PlanarTree,
            tag: Option<DuplexOp>,
            labels: &mut std::slice::Iter<'_, L>,
            nested: bool,
        ) -> fmt::Result {
            let Some(op) = tag else {
                return write!(f, "{}", labels.next().expect("one label per leaf"));
            };
            if nested {
                f.write_str("(")?;
            }
            for (i, c) in shape.children().iter().enumerate() {
                if i > 0 {
                    write!(f, "{op}")?;
                }
                let child_tag = (!c.is_leaf()).then_some(op.other());
                write(f, c, child_tag, labels, true)?;
            }
            if nested {
                f.write_str(")")?;
            }
            Ok(())
        }
        write(f, &self.tree.shape, self.tree.tag, &mut self.labels.iter(), false)
    }
}

/// `Dupl(S)` over labels of type `L`.
#[derive(Debug, Clone, Copy)]
pub struct FreeOps<L>(PhantomData<L>);

impl<L> Default for FreeOps<L> {
    fn default() -> Self {
        FreeOps(PhantomData)
    }
}

impl<L: Clone> DuplexOps for FreeOps<L> {
    type Carrier = DuplexExpr<L>;

    fn dot(&self, a: &DuplexExpr<L>, b: &DuplexExpr<L>) -> DuplexExpr<L> {
        a.dot(b)
    }

    fn star(&self, a: &DuplexExpr<L>, b: &DuplexExpr<L>) -> DuplexExpr<L> {
        a.star(b)
    }
}

/// A generator name, `[a-z][a-z0-9]*`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol(Arc<str>);

impl Symbol {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl FromStr for Symbol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if is_identifier(s) {
            Ok(Symbol(s.into()))
        } else {
            Err(Error::Syntax {
                position: 0,
                message: format!("{s:?} is not a generator name"),
            })
        }
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    chars.next().is_some_and(|c| c.is_ascii_lowercase())
        && chars.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit())
}

/// A finite set of generator names `S`; products through an alphabet check
/// that every label belongs to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    names: Arc<BTreeSet<Symbol>>,
}

impl Alphabet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let names = names
            .into_iter()
            .map(|s| s.as_ref().parse())
            .collect::<Result<BTreeSet<Symbol>>>()?;
        Ok(Alphabet {
            names: Arc::new(names),
        })
    }

    /// The one-generator alphabet `{e}`.
    pub fn single() -> Self {
        Alphabet::new(["e"]).expect("valid name")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn symbols(&self) -> impl Iterator<Item = &Symbol> {
        self.names.iter()
    }

    pub fn contains(&self, name: &str) -> bool {
        self.names.iter().any(|s| s.as_str() == name)
    }

    pub fn symbol(&self, name: &str) -> Option<Symbol> {
        self.names.iter().find(|s| s.as_str() == name).cloned()
    }

    fn check(&self, x: &DuplexExpr<Symbol>) -> Result<()> {
        match x.labels.iter().find(|l| !self.names.contains(*l)) {
            Some(l) => Err(Error::AlphabetMismatch(l.to_string())),
            None => Ok(()),
        }
    }

    pub fn product(
        &self,
        op: DuplexOp,
        x: &DuplexExpr<Symbol>,
        y: &DuplexExpr<Symbol>,
    ) -> Result<DuplexExpr<Symbol>> {
        self.check(x)?;
        self.check(y)?;
        Ok(x.product(op, y))
    }

    pub fn dot(&self, x: &DuplexExpr<Symbol>, y: &DuplexExpr<Symbol>) -> Result<DuplexExpr<Symbol>> {
        self.product(DuplexOp::Dot, x, y)
    }

    pub fn star(&self, x: &DuplexExpr<Symbol>, y: &DuplexExpr<Symbol>) -> Result<DuplexExpr<Symbol>> {
        self.product(DuplexOp::Star, x, y)
    }

    /// Parses an expression such as `(e.e.e)*(e.(e*e))`.
    ///
    /// Unparenthesized chains may use only one operation; `·` is accepted for
    /// `.`. Whitespace is ignored.
    pub fn parse(&self, text: &str) -> Result<DuplexExpr<Symbol>> {
        let tokens = tokenize(text)?;
        let mut parser = Parser {
            tokens: &tokens,
            pos: 0,
            alphabet: self,
            end: text.len(),
        };
        let expr = parser.expr()?;
        if let Some(tok) = parser.peek() {
            return Err(Error::Syntax {
                position: tok.position,
                message: format!("unexpected {}", tok.kind),
            });
        }
        Ok(expr)
    }
}

/// Parses `text` over `alphabet`.
pub fn parse_expr(text: &str, alphabet: &Alphabet) -> Result<DuplexExpr<Symbol>> {
    alphabet.parse(text)
}

#[derive(Debug, Clone, PartialEq)]
enum TokenKind {
    Open,
    Close,
    Op(DuplexOp),
    Name(String),
}

impl fmt::Display for TokenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TokenKind::Open => f.write_str("'('"),
            TokenKind::Close => f.write_str("')'"),
            TokenKind::Op(op) => write!(f, "'{op}'"),
            TokenKind::Name(n) => write!(f, "generator {n:?}"),
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    kind: TokenKind,
    position: usize,
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut tokens = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some((position, c)) = chars.next() {
        let kind = match c {
            c if c.is_whitespace() => continue,
            '(' => TokenKind::Open,
            ')' => TokenKind::Close,
            '.' | '·' => TokenKind::Op(DuplexOp::Dot),
            '*' => TokenKind::Op(DuplexOp::Star),
            c if c.is_ascii_lowercase() => {
                let mut name = String::from(c);
                while let Some(&(_, d)) = chars.peek() {
                    if d.is_ascii_lowercase() || d.is_ascii_digit() {
                        name.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                TokenKind::Name(name)
            }
            other => {
                return Err(Error::Syntax {
                    position,
                    message: format!("unexpected character {other:?}"),
                })
            }
        };
        tokens.push(Token { kind, position });
    }
    Ok(tokens)
}

struct Parser<'a> {
    tokens: &'a [Token],
    pos: usize,
    alphabet: &'a Alphabet,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn here(&self) -> usize {
        self.peek().map_or(self.end, |t| t.position)
    }

    fn expr(&mut self) -> Result<DuplexExpr<Symbol>> {
        let mut acc = self.term()?;
        let mut chain: Option<DuplexOp> = None;
        while let Some(&Token {
            kind: TokenKind::Op(op),
            position,
        }) = self.peek()
        {
            if chain.is_some_and(|c| c != op) {
                return Err(Error::MixedChain { position });
            }
            chain = Some(op);
            self.pos += 1;
            let rhs = self.term()?;
            acc = acc.product(op, &rhs);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<DuplexExpr<Symbol>> {
        let position = self.here();
        match self.peek().map(|t| t.kind.clone()) {
            Some(TokenKind::Open) => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(Token {
                        kind: TokenKind::Close,
                        ..
                    }) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => Err(Error::Syntax {
                        position: self.here(),
                        message: format!("expected ')' to close '(' at {position}"),
                    }),
                }
            }
            Some(TokenKind::Name(name)) => {
                self.pos += 1;
                let symbol = self
                    .alphabet
                    .symbol(&name)
                    .ok_or(Error::UnknownGenerator { name, position })?;
                Ok(DuplexExpr::leaf(symbol))
            }
            Some(kind) => Err(Error::Syntax {
                position,
                message: format!("expected a generator or '(', got {kind}"),
            }),
            None => Err(Error::Syntax {
                position,
                message: "unexpected end of expression".into(),
            }),
        }
    }
}

/// Number of elements of `Dupl_n(S)` for `|S| = s`: `|𝔇(n)| · sⁿ`, counted
/// by closing the generators under both products.
pub fn count_free_by_closure(s: usize, max_degree: usize) -> Vec<usize> {
    let generators: Vec<DuplexExpr<usize>> = (0..s).map(DuplexExpr::leaf).collect();
    crate::ops::closure_by_degree(&FreeOps::default(), generators, max_degree, DuplexExpr::degree)
        .iter()
        .map(Vec::len)
        .collect()
}

impl fmt::Display for DecoratedTree {
    /// Expression syntax over the single generator `e`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels = vec!["e"; self.degree()];
        let expr = DuplexExpr {
            tree: self.clone(),
            labels,
        };
        write!(f, "{expr}")
    }
}

impl DuplexExpr<Symbol> {
    /// The tree, ignoring labels; the image in the one-generator duplex.
    pub fn forget_labels(&self) -> DecoratedTree {
        self.tree.clone()
    }

    pub fn label_names(&self) -> String {
        self.labels.iter().join(" ")
    }
}
