#![allow(clippy::needless_range_loop)]

use std::collections::{BTreeSet, HashSet};

use duplex::binary::{catalan, enumerate_binary, eval_duplexes1, TreeOps};
use duplex::decorated::{count_free_by_closure, enumerate_decorated, DecoratedOps, FreeOps};
use duplex::ops::closure_by_degree;
use duplex::planar::{enumerate_trees, super_catalan, super_catalan_table};
use duplex::{Alphabet, BinaryTree, DecoratedTree, DuplexExpr, DuplexOp, PlanarTree};
use proptest::prelude::*;

fn binaries_upto(n: usize) -> Vec<Vec<BinaryTree>> {
    (1..=n).map(|k| enumerate_binary(k).unwrap()).collect()
}

fn decorated_upto(n: usize) -> Vec<Vec<DecoratedTree>> {
    (1..=n).map(|k| enumerate_decorated(k).unwrap()).collect()
}

#[test]
fn tree_counts_match_recurrence() {
    let table = super_catalan_table(8);
    for n in 1..=8 {
        assert_eq!(enumerate_trees(n).unwrap().len(), table[n].clone().try_into().unwrap());
        assert_eq!(super_catalan(n).unwrap(), table[n]);
    }
}

#[test]
fn every_tree_is_a_unique_graft() {
    for n in 2..=7 {
        let trees = enumerate_trees(n).unwrap();
        let mut seen = HashSet::new();
        for t in &trees {
            let kids = t.children().to_vec();
            assert!(kids.len() >= 2);
            assert_eq!(kids.iter().map(PlanarTree::leaf_count).sum::<usize>(), n);
            let rebuilt = PlanarTree::graft(kids.clone()).unwrap();
            assert_eq!(&rebuilt, t);
            assert!(seen.insert(kids));
        }
    }
}

#[test]
fn contraction_removes_one_vertex_per_position() {
    let pool: Vec<PlanarTree> = (1..=4).flat_map(|n| enumerate_trees(n).unwrap()).collect();
    for a in &pool {
        for b in &pool {
            let inner: Vec<usize> = [a, b]
                .iter()
                .enumerate()
                .filter(|(_, t)| !t.is_leaf())
                .map(|(i, _)| i + 1)
                .collect();
            for mask in 0..(1 << inner.len()) {
                let chosen: Vec<usize> = inner
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| mask >> j & 1 == 1)
                    .map(|(_, &i)| i)
                    .collect();
                let t = PlanarTree::graft_contract(&chosen, vec![a.clone(), b.clone()]).unwrap();
                assert_eq!(t.leaf_count(), a.leaf_count() + b.leaf_count());
                assert_eq!(
                    t.vertex_count(),
                    1 + a.vertex_count() + b.vertex_count() - chosen.len()
                );
            }
        }
    }
}

#[test]
fn decorated_counts_are_twice_super_catalan() {
    let table = super_catalan_table(7);
    for n in 2..=7 {
        let all = enumerate_decorated(n).unwrap();
        let expected: usize = (table[n].clone() * 2u32).try_into().unwrap();
        assert_eq!(all.len(), expected);
    }
}

#[test]
fn decorated_products_associative() {
    let by_degree = decorated_upto(4);
    for da in 1..=4 {
        for db in 1..=(5 - da) {
            for dc in 1..=(6 - da - db) {
                for a in &by_degree[da - 1] {
                    for b in &by_degree[db - 1] {
                        for c in &by_degree[dc - 1] {
                            assert_eq!(a.dot(b).dot(c), a.dot(&b.dot(c)));
                            assert_eq!(a.star(b).star(c), a.star(&b.star(c)));
                        }
                    }
                }
            }
        }
    }
}

// Signs alternate by level and the root carries the tag.
#[test]
fn decorated_signs_alternate() {
    for t in decorated_upto(6).into_iter().flatten() {
        let levels = t.shape().vertex_levels();
        let signs = t.vertex_signs();
        assert_eq!(levels.len(), signs.len());
        for (l, s) in levels.iter().zip(&signs) {
            let expected = if l % 2 == 0 { t.tag().unwrap() } else { t.tag().unwrap().other() };
            assert_eq!(*s, expected);
        }
    }
}

// Star-tagged trees of degree n are exactly the products t₁*⋯*t_k with k ≥ 2
// and every tᵢ a leaf or dot-tagged, each arising from one sequence only.
#[test]
fn star_trees_decompose_uniquely() {
    let by_degree = decorated_upto(7);
    let factors: Vec<Vec<DecoratedTree>> = by_degree
        .iter()
        .map(|level| {
            level
                .iter()
                .filter(|t| t.tag() != Some(DuplexOp::Star))
                .cloned()
                .collect()
        })
        .collect();
    // seqs[n]: products of sequences (length ≥ 1) of factors with total degree n
    let mut seqs: Vec<Vec<DecoratedTree>> = vec![Vec::new(); 8];
    for n in 1..=7 {
        let mut level = factors[n - 1].clone();
        for first in 1..n {
            for f in &factors[first - 1] {
                for rest in &seqs[n - first] {
                    level.push(f.star(rest));
                }
            }
        }
        seqs[n] = level;
    }
    for n in 2..=7 {
        let products: Vec<_> = seqs[n]
            .iter()
            .filter(|t| t.tag() == Some(DuplexOp::Star))
            .collect();
        let distinct: HashSet<_> = products.iter().collect();
        let star_trees: HashSet<_> = by_degree[n - 1]
            .iter()
            .filter(|t| t.tag() == Some(DuplexOp::Star))
            .collect();
        assert_eq!(products.len(), distinct.len(), "degree {n}");
        assert_eq!(distinct.len(), star_trees.len(), "degree {n}");
        for t in &star_trees {
            let comps = t.components();
            assert!(comps.len() >= 2);
            assert!(comps.iter().all(|c| c.tag() != Some(DuplexOp::Star)));
            let back = comps.iter().skip(1).fold(comps[0].clone(), |acc, c| acc.star(c));
            assert_eq!(&back, *t);
        }
    }
}

#[test]
fn generator_reaches_every_decorated_tree() {
    let closure = closure_by_degree(&DecoratedOps, vec![DecoratedTree::generator()], 7, |t| t.degree());
    for n in 1..=7 {
        let expected: BTreeSet<_> = enumerate_decorated(n).unwrap().into_iter().collect();
        let got: BTreeSet<_> = closure[n].iter().cloned().collect();
        assert_eq!(got, expected, "degree {n}");
    }
}

#[test]
fn free_duplex_counts_by_closure() {
    let table = super_catalan_table(6);
    for s in 1..=2usize {
        let counts = count_free_by_closure(s, 6);
        for n in 2..=6 {
            let c: usize = table[n].clone().try_into().unwrap();
            assert_eq!(counts[n], 2 * c * s.pow(n as u32), "s = {s}, n = {n}");
        }
        assert_eq!(counts[1], s);
    }
}

#[test]
fn labelled_products_are_associative() {
    let alphabet = Alphabet::new(["x", "y"]).unwrap();
    let x = alphabet.parse("x").unwrap();
    let y = alphabet.parse("y").unwrap();
    let ops = FreeOps::<duplex::Symbol>::default();
    let closure = closure_by_degree(&ops, vec![x, y], 3, DuplexExpr::degree);
    let elems: Vec<_> = closure.into_iter().flatten().collect();
    for a in &elems {
        for b in &elems {
            for c in &elems {
                if a.degree() + b.degree() + c.degree() > 5 {
                    continue;
                }
                assert_eq!(a.dot(b).dot(c), a.dot(&b.dot(c)));
                assert_eq!(a.star(b).star(c), a.star(&b.star(c)));
            }
        }
    }
}

#[test]
fn binary_products_associative_and_duplexes1() {
    let by_degree = binaries_upto(4);
    for da in 1..=4 {
        for db in 1..=(5 - da) {
            for dc in 1..=(6 - da - db) {
                for u in &by_degree[da - 1] {
                    for v in &by_degree[db - 1] {
                        for w in &by_degree[dc - 1] {
                            assert_eq!(u.over(v).over(w), u.over(&v.over(w)));
                            assert_eq!(u.under(v).under(w), u.under(&v.under(w)));
                            assert_eq!(u.over(v).under(w), u.over(&v.under(w)));
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn binary_structural_laws() {
    let e = BinaryTree::generator();
    let mut pool = vec![BinaryTree::stub()];
    pool.extend(binaries_upto(4).into_iter().flatten());
    for u in &pool {
        for v in &pool {
            // (u·e)*v = gr(u, v), stubs included
            assert_eq!(u.over(&e).under(v), BinaryTree::node(u.clone(), v.clone()));
            if u.is_stub() || v.is_stub() {
                continue;
            }
            let uv = u.over(v);
            let (vl, vr) = v.split().unwrap();
            assert_eq!(uv.split().unwrap(), (&u.over(vl), vr));
            let uv = u.under(v);
            let (ul, ur) = u.split().unwrap();
            assert_eq!(uv.split().unwrap(), (ul, &ur.under(v)));
            assert_eq!(u.over(v).degree(), u.degree() + v.degree());
            assert_eq!(u.under(v).degree(), u.degree() + v.degree());
        }
    }
}

#[test]
fn binary_trees_reconstruct_from_halves() {
    let e = BinaryTree::generator();
    for u in binaries_upto(5).into_iter().flatten() {
        let (l, r) = u.split().unwrap();
        assert_eq!(l.over(&e).under(r), u);
        assert_eq!(eval_duplexes1(&u, &e, &TreeOps).unwrap(), u);
    }
}

#[test]
fn binary_counts_are_catalan() {
    let closure = closure_by_degree(&TreeOps, vec![BinaryTree::generator()], 8, BinaryTree::degree);
    for n in 1..=8 {
        let trees = enumerate_binary(n).unwrap();
        let c: usize = catalan(n).unwrap().try_into().unwrap();
        assert_eq!(trees.len(), c);
        assert_eq!(closure[n], trees, "generation at degree {n}");
    }
}

#[test]
fn binary_planar_conversion_round_trips() {
    for u in binaries_upto(6).into_iter().flatten() {
        let t = u.to_planar();
        assert!(t.is_binary());
        assert_eq!(t.leaf_count(), u.degree() + 1);
        assert_eq!(BinaryTree::from_planar(&t).unwrap(), u);
    }
}

fn arb_planar() -> impl Strategy<Value = PlanarTree> {
    let leaf = Just(PlanarTree::leaf());
    leaf.prop_recursive(4, 24, 4, |inner| {
        prop::collection::vec(inner, 2..=4).prop_map(|kids| PlanarTree::graft(kids).unwrap())
    })
}

proptest! {
    #[test]
    fn planar_text_round_trips(t in arb_planar()) {
        prop_assert_eq!(t.to_string().parse::<PlanarTree>().unwrap(), t);
    }

    #[test]
    fn decorated_machine_format_round_trips(t in arb_planar(), star in any::<bool>()) {
        let tag = if t.is_leaf() { None } else if star { Some(DuplexOp::Star) } else { Some(DuplexOp::Dot) };
        let d = DecoratedTree::new(t, tag).unwrap();
        let (tree, letter) = d.to_machine();
        prop_assert_eq!(DecoratedTree::from_machine(&tree, letter).unwrap(), d.clone());
        // The displayed expression parses back to the same tree.
        let parsed = Alphabet::single().parse(&d.to_string()).unwrap().forget_labels();
        prop_assert_eq!(parsed, d);
    }
}
