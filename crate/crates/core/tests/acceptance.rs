//! Acceptance suite: one line per criterion, nonzero exit on any failure.

#![allow(clippy::needless_range_loop)]

use std::collections::{BTreeSet, HashSet};
use std::panic;
use std::process::ExitCode;
use std::time::Instant;

use duplex::binary::{enumerate_binary, TreeOps};
use duplex::cube::{enumerate_cubes, CubeOps};
use duplex::decorated::{count_free_by_closure, enumerate_decorated, DecoratedOps};
use duplex::laws::{check_laws, Identity, Structure, Variety};
use duplex::morphisms::{alpha, leaf_sign_vector, phi, rho};
use duplex::ops::{closure_by_degree, DuplexOps};
use duplex::permutation::{
    duplex_factorize, enumerate_all, enumerate_indecomposable, sharp_factorize, PermOps,
};
use duplex::planar::enumerate_trees;
use duplex::series::{
    factorial_series, sharp_indec_formula, verify_identity, IdentityName, Series,
};
use duplex::{
    BinaryTree, CubeVertex, DecoratedTree, DuplexExpr, DuplexOp, IndecKind, Permutation,
};
use num_bigint::BigInt;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn p(s: &str) -> Permutation {
    s.parse().expect("valid permutation")
}

fn set(items: &[&str]) -> BTreeSet<Permutation> {
    items.iter().map(|s| p(s)).collect()
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Decomposable permutations of degree `n` for `op`, found by multiplying
/// every pair of smaller permutations.
fn decomposable(n: usize, op: DuplexOp) -> HashSet<Permutation> {
    let mut out = HashSet::new();
    for k in 1..n {
        let left = enumerate_all(k).unwrap();
        let right = enumerate_all(n - k).unwrap();
        for f in &left {
            for g in &right {
                out.insert(PermOps.apply(op, f, g));
            }
        }
    }
    out
}

/// Indecomposable permutations of degree `n`, independently of the library's
/// prefix test. `both` requires indecomposability for both products.
fn indecomposable_oracle(n: usize, both: bool) -> BTreeSet<Permutation> {
    let sharp = decomposable(n, DuplexOp::Dot);
    let natural = if both { decomposable(n, DuplexOp::Star) } else { HashSet::new() };
    enumerate_all(n)
        .unwrap()
        .into_iter()
        .filter(|f| !sharp.contains(f) && !natural.contains(f))
        .collect()
}

/// Leaf counts of planar trees via `(n+1)s(n) = 3(2n-1)s(n-1) - (n-2)s(n-2)`,
/// indexed by leaves.
fn super_catalan_oracle(max: usize) -> Vec<BigInt> {
    let mut s: Vec<BigInt> = vec![BigInt::from(1), BigInt::from(1)];
    for n in 2..max {
        let n_big = BigInt::from(n);
        let next = (BigInt::from(3 * (2 * n - 1)) * &s[n - 1]
            - (&n_big - 2) * &s[n - 2])
            / (&n_big + 1);
        s.push(next);
    }
    std::iter::once(BigInt::from(0)).chain(s).take(max + 1).collect()
}

fn compositions(n: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if n == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 1..=n.saturating_sub(parts - 1) {
        for mut rest in compositions(n - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn all_perms_upto(n: usize) -> Vec<Vec<Permutation>> {
    (1..=n).map(|k| enumerate_all(k).unwrap()).collect()
}

fn identity_holds(report: duplex::series::VerifyReport) -> Outcome {
    ensure!(report.passed(), "{}: {report}", report.identity.name());
    Ok(())
}

fn c1_sharp_counts() -> Outcome {
    let expected = [1u64, 1, 3, 13, 71, 461, 3447];
    let formula = sharp_indec_formula(7);
    for n in 1..=7 {
        let brute = enumerate_indecomposable(n, IndecKind::Sharp).unwrap().len() as u64;
        let oracle = indecomposable_oracle(n, false).len() as u64;
        ensure!(brute == expected[n - 1], "u_{n}: enumerated {brute}, expected {}", expected[n - 1]);
        ensure!(oracle == brute, "u_{n}: pair-product oracle gives {oracle}");
        ensure!(
            formula.coeff(n) == BigInt::from(brute),
            "u_{n}: inclusion-exclusion gives {}",
            formula.coeff(n)
        );
    }
    Ok(())
}

fn c2_sharp_sets() -> Outcome {
    for (n, expected) in [(2, set(&["(2,1)"])), (3, set(&["(2,3,1)", "(3,1,2)", "(3,2,1)"]))] {
        let got: BTreeSet<_> = enumerate_indecomposable(n, IndecKind::Sharp).unwrap().into_iter().collect();
        ensure!(got == expected, "degree {n}: {got:?}");
        ensure!(indecomposable_oracle(n, false) == expected, "degree {n}: oracle disagrees");
    }
    Ok(())
}

fn c3_s2_counts() -> Outcome {
    let expected = [1i64, 0, 0, 2, 22, 202, 1854];
    for n in 1..=7 {
        let d = enumerate_indecomposable(n, IndecKind::S2).unwrap();
        let u = enumerate_indecomposable(n, IndecKind::Sharp).unwrap().len() as i64;
        let oracle = indecomposable_oracle(n, true);
        ensure!(d.len() as i64 == expected[n - 1], "d_{n} = {}", d.len());
        ensure!(d.len() as i64 == 2 * u - factorial(n) as i64, "d_{n} != 2u_{n} - {n}!");
        ensure!(d.iter().cloned().collect::<BTreeSet<_>>() == oracle, "d_{n}: oracle set differs");
    }
    let four: BTreeSet<_> = enumerate_indecomposable(4, IndecKind::S2).unwrap().into_iter().collect();
    ensure!(four == set(&["(2,4,1,3)", "(3,1,4,2)"]), "degree 4 set {four:?}");
    let five = enumerate_indecomposable(5, IndecKind::S2).unwrap().len();
    ensure!(five == 22, "degree 5 has {five} elements");
    Ok(())
}

fn c4_tree_counts() -> Outcome {
    let oracle = super_catalan_oracle(12);
    let first = [1usize, 1, 3, 11, 45];
    for n in 1..=8 {
        let count = enumerate_trees(n).unwrap().len();
        if n <= 5 {
            ensure!(count == first[n - 1], "|T_{n}| = {count}");
        }
        ensure!(BigInt::from(count) == oracle[n], "|T_{n}| = {count}, recurrence {}", oracle[n]);
    }
    let order = 12;
    let f = Series::new(oracle.iter().cloned(), order);
    let t = Series::monomial(1, 1, order);
    let lhs = (&(&t + &Series::one(order)) - &f.scale(4)).pow(2);
    let rhs = &(&t.pow(2) - &t.scale(6)) + &Series::one(order);
    ensure!(lhs == rhs, "(T+1-4f)^2 mismatch: {:?}", lhs.first_difference(&rhs));
    identity_holds(verify_identity(IdentityName::Fesvi, order).map_err(|e| e.to_string())?)
}

fn c5_super_catalan_identity() -> Outcome {
    let order = 12;
    let oracle = super_catalan_oracle(order);
    let t = Series::monomial(1, 1, order);
    let g = Series::new(oracle, order);
    let lhs = g.geometric_tail().map_err(|e| e.to_string())?;
    let rhs = &t + &(&g - &t).scale(2);
    ensure!(lhs == rhs, "{:?}", lhs.first_difference(&rhs));
    identity_holds(verify_identity(IdentityName::SuperCatalanId, order).map_err(|e| e.to_string())?)
}

fn c6_cor52() -> Outcome {
    let order = 7;
    let psi = factorial_series(order);
    let xi = Series::from_fn(order, |n| BigInt::from(indecomposable_oracle(n, true).len()));
    let q = &(&(&(&psi * &psi) + &(&xi * &psi)) - &psi) + &xi;
    ensure!(q.is_zero(), "nonzero coefficient: {:?}", q.first_difference(&Series::zero(order)));
    identity_holds(verify_identity(IdentityName::Cor52, order).map_err(|e| e.to_string())?)
}

fn c7_factorizations() -> Outcome {
    let s2: Vec<Vec<Permutation>> = (1..=6)
        .map(|n| enumerate_indecomposable(n, IndecKind::S2).unwrap())
        .collect();
    let decorated: Vec<Vec<DecoratedTree>> = (1..=6).map(|k| enumerate_decorated(k).unwrap()).collect();
    for n in 1..=6 {
        let all = enumerate_all(n).unwrap();
        for f in &all {
            let factors = sharp_factorize(f);
            ensure!(
                factors.iter().all(|g| g.is_indecomposable(IndecKind::Sharp)),
                "{f}: sharp factor not indecomposable"
            );
            let prod = factors.iter().skip(1).fold(factors[0].clone(), |a, g| a.sharp(g));
            ensure!(&prod == f, "{f}: sharp factors multiply to {prod}");
            let nf = duplex_factorize(f);
            ensure!(
                nf.labels().iter().all(|g| g.is_indecomposable(IndecKind::S2)),
                "{f}: normal form leaf not S2-indecomposable"
            );
            let back = nf.eval_hom(|g| Some(g.clone()), &PermOps).map_err(|e| e.to_string())?;
            ensure!(&back == f, "{f}: normal form evaluates to {back}");
        }
        // Every labelled decorated tree of total degree n, evaluated.
        let mut images = HashSet::new();
        let mut forms = 0u64;
        for k in 1..=n {
            for comp in compositions(n, k) {
                let choices: Vec<&Vec<Permutation>> = comp.iter().map(|&d| &s2[d - 1]).collect();
                if choices.iter().any(|c| c.is_empty()) {
                    continue;
                }
                let mut labels: Vec<Vec<Permutation>> = vec![vec![]];
                for c in &choices {
                    labels = labels
                        .into_iter()
                        .flat_map(|prefix| {
                            c.iter().map(move |g| {
                                let mut v = prefix.clone();
                                v.push(g.clone());
                                v
                            })
                        })
                        .collect();
                }
                for tree in &decorated[k - 1] {
                    for ls in &labels {
                        let expr = DuplexExpr::new(tree.clone(), ls.clone()).map_err(|e| e.to_string())?;
                        let value = expr.eval_hom(|g| Some(g.clone()), &PermOps).map_err(|e| e.to_string())?;
                        ensure!(duplex_factorize(&value) == expr, "normal form of {value} is not unique");
                        images.insert(value);
                        forms += 1;
                    }
                }
            }
        }
        ensure!(forms == factorial(n), "degree {n}: {forms} normal forms, expected {}", factorial(n));
        ensure!(images.len() as u64 == forms, "degree {n}: evaluation not injective");
        ensure!(all.len() as u64 == factorial(n), "degree {n}: {} permutations", all.len());
    }
    Ok(())
}

fn c8_xi_lemmas() -> Outcome {
    let perms = all_perms_upto(7);
    for level in &perms {
        for f in level {
            ensure!(&f.xi().xi() == f, "xi(xi({f})) != {f}");
            let sharp = !f.is_indecomposable(IndecKind::Sharp);
            let natural = !f.is_indecomposable(IndecKind::Natural);
            ensure!(!(sharp && natural), "{f} decomposes both ways");
        }
    }
    for n in 2..=7 {
        let both: Vec<_> = decomposable(n, DuplexOp::Dot)
            .intersection(&decomposable(n, DuplexOp::Star))
            .cloned()
            .collect();
        ensure!(both.is_empty(), "degree {n}: oracle finds {} doubly decomposable", both.len());
    }
    for da in 1..=6 {
        for db in 1..=(7 - da) {
            for f in &perms[da - 1] {
                for g in &perms[db - 1] {
                    ensure!(f.sharp(g).xi() == f.xi().natural(&g.xi()), "xi fails at {f}, {g}");
                }
            }
        }
    }
    Ok(())
}

fn c9_free_duplex() -> Outcome {
    let catalan = super_catalan_oracle(7);
    for n in 2..=7 {
        let count = enumerate_decorated(n).unwrap().len();
        ensure!(BigInt::from(count) == &catalan[n] * 2, "|D({n})| = {count}");
    }
    let closure = closure_by_degree(&DecoratedOps, vec![DecoratedTree::generator()], 7, |t| t.degree());
    for n in 1..=7 {
        let all: BTreeSet<_> = enumerate_decorated(n).unwrap().into_iter().collect();
        let reached: BTreeSet<_> = closure[n].iter().cloned().collect();
        ensure!(reached == all, "closure misses {} trees of degree {n}", all.len() - reached.len());
    }
    for s in 1..=2u32 {
        let counts = count_free_by_closure(s as usize, 6);
        for n in 1..=6 {
            let expected = if n == 1 {
                BigInt::from(s)
            } else {
                &catalan[n] * 2 * BigInt::from(s).pow(n as u32)
            };
            ensure!(BigInt::from(counts[n]) == expected, "s = {s}, n = {n}: {}", counts[n]);
        }
    }
    identity_holds(verify_identity(IdentityName::DuplSeries, 6).map_err(|e| e.to_string())?)
}

fn c10_binary_trees() -> Outcome {
    let trees: Vec<Vec<BinaryTree>> = (1..=8).map(|n| enumerate_binary(n).unwrap()).collect();
    for da in 1..=4 {
        for db in 1..=(5 - da) {
            for dc in 1..=(6 - da - db) {
                for u in &trees[da - 1] {
                    for v in &trees[db - 1] {
                        for w in &trees[dc - 1] {
                            ensure!(u.over(v).under(w) == u.over(&v.under(w)), "fails at {u}, {v}, {w}");
                        }
                    }
                }
            }
        }
    }
    for n in 1..=8 {
        let c = factorial(2 * n) / factorial(n) / factorial(n + 1);
        ensure!(trees[n - 1].len() as u64 == c, "|Y_{n}| = {}, expected {c}", trees[n - 1].len());
    }
    let e = BinaryTree::generator();
    for u in trees[..5].iter().flatten() {
        let (l, r) = u.split().map_err(|e| e.to_string())?;
        ensure!(&l.over(&e).under(r) == u, "reconstruction fails for {u}");
    }
    Ok(())
}

fn bracketings(word: &[DuplexOp]) -> Vec<CubeVertex> {
    if word.is_empty() {
        return vec![CubeVertex::generator()];
    }
    let mut out = Vec::new();
    for (k, &op) in word.iter().enumerate() {
        for l in bracketings(&word[..k]) {
            for r in bracketings(&word[k + 1..]) {
                out.push(l.product(&r, op));
            }
        }
    }
    out
}

fn c11_cubes() -> Outcome {
    let cubes: Vec<Vec<CubeVertex>> = (1..=7).map(|n| enumerate_cubes(n).unwrap()).collect();
    for total in 3..=9 {
        for da in 1..=total - 2 {
            for db in 1..=total - 1 - da {
                let dc = total - da - db;
                for a in &cubes[da - 1] {
                    for b in &cubes[db - 1] {
                        for c in &cubes[dc - 1] {
                            for id in [Identity::DotStar, Identity::StarDot] {
                                let (l, r) = id.sides(&CubeOps, a, b, c);
                                ensure!(l == r, "{id} fails at {a}, {b}, {c}");
                            }
                        }
                    }
                }
            }
        }
    }
    for len in 0..=6 {
        for mask in 0..(1u32 << len) {
            let word: Vec<DuplexOp> = (0..len)
                .map(|i| if mask >> i & 1 == 1 { DuplexOp::Star } else { DuplexOp::Dot })
                .collect();
            let expected = CubeVertex::from_word(&word);
            ensure!(
                bracketings(&word).iter().all(|v| *v == expected),
                "bracketings of {expected} disagree"
            );
        }
    }
    Ok(())
}

fn c12_morphisms() -> Outcome {
    let decorated: Vec<Vec<DecoratedTree>> = (1..=6).map(|n| enumerate_decorated(n).unwrap()).collect();
    for da in 1..=5 {
        for db in 1..=(6 - da) {
            for x in &decorated[da - 1] {
                for y in &decorated[db - 1] {
                    for op in [DuplexOp::Dot, DuplexOp::Star] {
                        let xy = DecoratedOps.apply(op, x, y);
                        ensure!(
                            alpha(&xy) == PermOps.apply(op, &alpha(x), &alpha(y)),
                            "alpha fails at {x} {op} {y}"
                        );
                        ensure!(
                            rho(&xy) == TreeOps.apply(op, &rho(x), &rho(y)),
                            "rho fails at {x} {op} {y}"
                        );
                        let (u, v) = (rho(x), rho(y));
                        let uv = TreeOps.apply(op, &u, &v);
                        let lhs = phi(&uv).map_err(|e| e.to_string())?;
                        let rhs = CubeOps.apply(op, &phi(&u).map_err(|e| e.to_string())?, &phi(&v).map_err(|e| e.to_string())?);
                        ensure!(lhs == rhs, "phi fails at {u} {op} {v}");
                    }
                }
            }
        }
    }
    for level in &decorated[1..] {
        for x in level {
            let via = phi(&rho(x)).map_err(|e| e.to_string())?;
            let signs = leaf_sign_vector(x).map_err(|e| e.to_string())?;
            ensure!(via == signs, "{x}: phi(rho) = {via}, leaf signs {signs}");
        }
    }
    Ok(())
}

fn c13_law_audits() -> Outcome {
    let run = |s, v, b| check_laws(s, v, b).map_err(|e| e.to_string());
    let r = run(Structure::Cube, Variety::Duplexes2, 9)?;
    ensure!(r.satisfied, "{r}");
    let r = run(Structure::Binary, Variety::Duplexes1, 6)?;
    ensure!(r.satisfied, "{r}");
    let r = run(Structure::Perm, Variety::Duplexes1, 3)?;
    let unit = "(1)".to_string();
    ensure!(
        !r.satisfied && r.witness == Some([unit.clone(), unit.clone(), unit]),
        "perm audit: {r}"
    );
    let r = run(Structure::Binary, Variety::Duplexes2, 6)?;
    ensure!(!r.satisfied && r.witness.is_some(), "binary audit: {r}");
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 13] = [
        ("sharp-indecomposable counts u_1..u_7", c1_sharp_counts),
        ("sharp-indecomposable sets in degrees 2 and 3", c2_sharp_sets),
        ("S2-indecomposable counts and sets", c3_s2_counts),
        ("planar tree counts and (T+1-4f)^2 mod T^13", c4_tree_counts),
        ("sum of powers of the tree series mod T^13", c5_super_catalan_identity),
        ("psi^2 + xi psi - psi + xi mod T^8", c6_cor52),
        ("factorization round trips and freeness, n <= 6", c7_factorizations),
        ("xi exchanges the products; no double decomposition", c8_xi_lemmas),
        ("free duplex counts and generation", c9_free_duplex),
        ("binary trees: mixed law, Catalan counts, reconstruction", c10_binary_trees),
        ("cube identities and bracketings", c11_cubes),
        ("morphism coherence and leaf signs", c12_morphisms),
        ("variety audits", c13_law_audits),
    ];
    panic::set_hook(Box::new(|_| {}));
    let start = Instant::now();
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = panic::catch_unwind(check).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("PASS {:>2} {name} ({secs:.2}s)", i + 1),
            Err(reason) => {
                failures += 1;
                println!("FAIL {:>2} {name} ({secs:.2}s): {reason}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed in {:.2}s",
        criteria.len() - failures,
        criteria.len(),
        start.elapsed().as_secs_f64()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
