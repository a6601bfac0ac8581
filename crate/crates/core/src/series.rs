//! Truncated formal power series over exact integers, and checks of the
//! generating-function identities against brute-force counts.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use itertools::Itertools;
use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

use crate::binary;
use crate::config::{self, Config};
use crate::decorated;
use crate::error::{Error, Result};
use crate::permutation::{self, IndecKind};
use crate::planar;

/// Leaf counts up to which tree-count series are cross-checked by
/// enumeration.
const TREE_CROSS_CHECK: usize = 8;
/// Largest degree of the free duplex counted by closure.
const FREE_DUPLEX_DEGREE: usize = 7;
/// Largest word length enumerated for the free semigroup check.
const WORD_LENGTH: usize = 12;

/// `a₀ + a₁T + ⋯ + a_N T^N mod T^{N+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Series {
    coeffs: Vec<BigInt>,
}

impl Series {
    /// Pads or truncates `coeffs` to `order + 1` entries.
    pub fn new<I, C>(coeffs: I, order: usize) -> Self
    where
        I: IntoIterator<Item = C>,
        C: Into<BigInt>,
    {
        let mut coeffs: Vec<BigInt> = coeffs.into_iter().take(order + 1).map(Into::into).collect();
        coeffs.resize(order + 1, BigInt::zero());
        Series { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Series::new(Vec::<BigInt>::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Series::monomial(0, 1, order)
    }

    /// `c·T^k`.
    pub fn monomial(k: usize, c: impl Into<BigInt>, order: usize) -> Self {
        let mut s = Series::zero(order);
        if k <= order {
            s.coeffs[k] = c.into();
        }
        s
    }

    /// The series `Σ_{n≥1} count(n) Tⁿ`.
    pub fn from_fn(order: usize, count: impl Fn(usize) -> BigInt) -> Self {
        Series::new(
            std::iter::once(BigInt::zero()).chain((1..=order).map(count)),
            order,
        )
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> BigInt {
        self.coeffs.get(n).cloned().unwrap_or_default()
    }

    pub fn truncate(&self, order: usize) -> Self {
        Series::new(self.coeffs.iter().cloned(), order)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        Series {
            coeffs: self.coeffs.iter().map(|a| a * &c).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Series::one(self.order()), |acc, _| &acc * self)
    }

    /// `self(inner(T))`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &Series) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::ComposeNonzeroConstant);
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        // Horner: a_N, then acc·g + a_k.
        Ok(self.coeffs[..=order]
            .iter()
            .rev()
            .fold(Series::zero(order), |acc, a| {
                &(&acc * &inner) + &Series::monomial(0, a.clone(), order)
            }))
    }

    /// `Σ_{k=1}^{N} selfᵏ`, which is `Σ_{k≥1} selfᵏ mod T^{N+1}` when the
    /// constant term is zero.
    pub fn geometric_tail(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ComposeNonzeroConstant);
        }
        let mut acc = Series::zero(self.order());
        let mut power = self.clone();
        for _ in 0..self.order() {
            acc = &acc + &power;
            power = &power * self;
        }
        Ok(acc)
    }

    /// First degree where `self` and `other` differ, with both coefficients.
    pub fn first_difference(&self, other: &Series) -> Option<Mismatch> {
        let order = self.order().min(other.order());
        (0..=order)
            .find(|&n| self.coeffs[n] != other.coeffs[n])
            .map(|degree| Mismatch {
                degree,
                left: self.coeffs[degree].clone(),
                right: other.coeffs[degree].clone(),
            })
    }
}

impl Add for &Series {
    type Output = Series;

    fn add(self, rhs: &Series) -> Series {
        Series {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Series {
    type Output = Series;

    fn sub(self, rhs: &Series) -> Series {
        Series {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Series {
    type Output = Series;

    fn neg(self) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul for &Series {
    type Output = Series;

    fn mul(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![BigInt::zero(); order + 1];
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=order - i].iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Series { coeffs }
    }
}

impl fmt::Display for Series {
    /// `a1*T + a2*T^2 + …`, omitting zero terms.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let sign = if a.is_negative() { "-" } else { "+" };
            match (first, a.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, _) => write!(f, " {sign} ")?,
            }
            first = false;
            let abs = a.abs();
            match n {
                0 => write!(f, "{abs}")?,
                1 => write!(f, "{abs}*T")?,
                _ => write!(f, "{abs}*T^{n}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// A coefficient where two sides of an identity disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub degree: usize,
    pub left: BigInt,
    pub right: BigInt,
}

/// Named integer sequences, all indexed from `n = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountSource {
    /// `n!`.
    Factorials,
    /// `u_n`, the `♯`-indecomposable permutations.
    SharpIndec,
    /// `d_n`, the permutations indecomposable for both products.
    S2Indec,
    /// `C_n`, planar trees with `n` leaves.
    SuperCatalan,
    /// `c_n`, binary trees with `n` internal vertices.
    Catalan,
    /// `|Dupl_n(S)|` for an alphabet of the given size.
    DuplSize(usize),
}

impl CountSource {
    pub fn name(self) -> String {
        match self {
            CountSource::Factorials => "factorials".into(),
            CountSource::SharpIndec => "sharp-indecomposable".into(),
            CountSource::S2Indec => "s2-indecomposable".into(),
            CountSource::SuperCatalan => "super-catalan".into(),
            CountSource::Catalan => "catalan".into(),
            CountSource::DuplSize(s) => format!("free-duplex(|S|={s})"),
        }
    }
}

fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// `Σ_{n≥1} n! Tⁿ`.
pub fn factorial_series(order: usize) -> Series {
    Series::from_fn(order, factorial)
}

/// `Σ_{k≥1} (−1)^{k−1} ψᵏ` with `ψ = Σ n! Tⁿ`: the inclusion–exclusion
/// count `n! − Σ p!q! + Σ p!q!r! − ⋯` of `♯`-indecomposables.
pub fn sharp_indec_formula(order: usize) -> Series {
    let psi = factorial_series(order);
    let mut acc = Series::zero(order);
    let mut power = psi.clone();
    for k in 1..=order {
        acc = if k % 2 == 1 { &acc + &power } else { &acc - &power };
        power = &power * &psi;
    }
    acc
}

/// The series of `source` through degree `order`.
///
/// Sources with two independent computations (enumeration and a formula)
/// compute both and fail with [`Error::CountMismatch`] on disagreement.
pub fn from_counts(source: CountSource, order: usize) -> Result<Series> {
    from_counts_in(source, order, &Config::default())
}

pub fn from_counts_in(source: CountSource, order: usize, cfg: &Config) -> Result<Series> {
    let big = |n: usize| BigInt::from(n);
    let from_biguint = |v: BigUint| BigInt::from(v);
    let (primary, second, checked_through) = match source {
        CountSource::Factorials => (factorial_series(order), None, 0),
        CountSource::SharpIndec | CountSource::S2Indec => {
            config::check_bound("series order (permutations)", order, cfg.perm_degree)?;
            let kind = if source == CountSource::SharpIndec {
                IndecKind::Sharp
            } else {
                IndecKind::S2
            };
            let counts = (1..=order)
                .map(|n| permutation::enumerate_indecomposable_in(n, kind, cfg).map(|v| v.len()))
                .collect::<Result<Vec<_>>>()?;
            let brute = Series::from_fn(order, |n| big(counts[n - 1]));
            let formula = match kind {
                IndecKind::Sharp => sharp_indec_formula(order),
                _ => &sharp_indec_formula(order).scale(2) - &factorial_series(order),
            };
            (brute, Some(formula), order)
        }
        CountSource::SuperCatalan => {
            config::check_bound("series order (trees)", order, cfg.series_order)?;
            let table = planar::super_catalan_table(order);
            let recurrence = Series::from_fn(order, |n| from_biguint(table[n].clone()));
            let through = order.min(TREE_CROSS_CHECK).min(cfg.tree_leaves);
            let counts = (1..=through)
                .map(|n| planar::enumerate_trees_in(n, cfg).map(|v| v.len()))
                .collect::<Result<Vec<_>>>()?;
            let brute = Series::from_fn(through, |n| big(counts[n - 1]));
            (recurrence, Some(brute), through)
        }
        CountSource::Catalan => {
            config::check_bound("series order (trees)", order, cfg.series_order)?;
            let closed = Series::from_fn(order, |n| {
                from_biguint(binary::catalan(n).expect("n >= 1"))
            });
            let through = order.min(cfg.binary_degree);
            let counts = (1..=through)
                .map(|n| binary::enumerate_binary_in(n, cfg).map(|v| v.len()))
                .collect::<Result<Vec<_>>>()?;
            let brute = Series::from_fn(through, |n| big(counts[n - 1]));
            (closed, Some(brute), through)
        }
        CountSource::DuplSize(s) => {
            config::check_bound("series order (free duplex)", order, FREE_DUPLEX_DEGREE)?;
            let closure = decorated::count_free_by_closure(s, order);
            let by_closure = Series::from_fn(order, |n| big(closure[n]));
            let counts = (1..=order)
                .map(|n| decorated::enumerate_decorated_in(n, cfg).map(|v| v.len()))
                .collect::<Result<Vec<_>>>()?;
            let by_trees = Series::from_fn(order, |n| big(counts[n - 1]) * BigInt::from(s).pow(n as u32));
            (by_closure, Some(by_trees), order)
        }
    };
    if let Some(second) = second {
        if let Some(m) = primary.truncate(checked_through).first_difference(&second.truncate(checked_through)) {
            return Err(Error::CountMismatch {
                source_name: source.name(),
                degree: m.degree,
                left: m.left.to_string(),
                right: m.right.to_string(),
            });
        }
    }
    Ok(primary)
}

/// The generating-function statements that can be verified.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdentityName {
    /// `Ass(S)(T) = sT / (1 − sT)` for the free semigroup.
    AssSeries,
    /// `(T + 1 − 4f)² = T² − 6T + 1` for `f = Σ C_n Tⁿ`.
    Fesvi,
    /// `Σ n! Tⁿ = Σ_k (Σ u_m T^m)^k`.
    UsFormula,
    /// `Σ_{k≥1} gᵏ = T + 2(g − T)` for `g = Σ C_n Tⁿ`.
    SuperCatalanId,
    /// `Dupl(S)(T) = sT + 2 Σ_{n≥2} C_n (sT)ⁿ`.
    DuplSeries,
    /// `d_n = 2u_n − n!`.
    DesFormula,
    /// `ψ² + ξψ − ψ + ξ = 0` and `ψ = 2f(ξ) − ξ`.
    Cor52,
}

impl IdentityName {
    pub const ALL: [IdentityName; 7] = [
        IdentityName::AssSeries,
        IdentityName::Fesvi,
        IdentityName::UsFormula,
        IdentityName::SuperCatalanId,
        IdentityName::DuplSeries,
        IdentityName::DesFormula,
        IdentityName::Cor52,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityName::AssSeries => "ass",
            IdentityName::Fesvi => "fesvi",
            IdentityName::UsFormula => "usformula",
            IdentityName::SuperCatalanId => "supercatalan",
            IdentityName::DuplSeries => "dupl",
            IdentityName::DesFormula => "desformula",
            IdentityName::Cor52 => "cor52",
        }
    }

    pub fn default_order(self) -> usize {
        match self {
            IdentityName::AssSeries | IdentityName::Fesvi | IdentityName::SuperCatalanId => 12,
            IdentityName::DuplSeries => 6,
            IdentityName::UsFormula | IdentityName::DesFormula | IdentityName::Cor52 => 7,
        }
    }
}

/// One equation checked as part of an identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub label: String,
    pub mismatch: Option<Mismatch>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub identity: IdentityName,
    pub order: usize,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.mismatch.is_none())
    }

    pub fn first_failure(&self) -> Option<(&str, &Mismatch)> {
        self.checks
            .iter()
            .find_map(|c| c.mismatch.as_ref().map(|m| (c.label.as_str(), m)))
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.first_failure() {
            None => f.write_str("PASS"),
            Some((label, m)) => write!(
                f,
                "FAIL {label}: coefficient of T^{} is {} vs {}",
                m.degree, m.left, m.right
            ),
        }
    }
}

fn check(label: impl Into<String>, lhs: &Series, rhs: &Series) -> Check {
    Check {
        label: label.into(),
        mismatch: lhs.first_difference(rhs),
    }
}

/// Checks `name` coefficient-wise modulo `T^{order+1}`.
pub fn verify_identity(name: IdentityName, order: usize) -> Result<VerifyReport> {
    verify_identity_in(name, order, &Config::default())
}

pub fn verify_identity_in(name: IdentityName, order: usize, cfg: &Config) -> Result<VerifyReport> {
    config::check_degree(order)?;
    let t = Series::monomial(1, 1, order);
    let checks = match name {
        IdentityName::AssSeries => {
            config::check_bound("series order (words)", order, WORD_LENGTH)?;
            (1..=3usize)
                .map(|s| {
                    let words = Series::from_fn(order, |n| {
                        BigInt::from(itertools::repeat_n(0..s, n).multi_cartesian_product().count())
                    });
                    // A·(1 − sT) = sT avoids dividing.
                    let lhs = &words * &(&Series::one(order) - &t.scale(s));
                    check(format!("|S|={s}: Ass(T)(1-sT) = sT"), &lhs, &t.scale(s))
                })
                .collect()
        }
        IdentityName::Fesvi => {
            let f = from_counts_in(CountSource::SuperCatalan, order, cfg)?;
            let base = &(&t + &Series::one(order)) - &f.scale(4);
            let lhs = &base * &base;
            let rhs = &(&t.pow(2) - &t.scale(6)) + &Series::one(order);
            vec![check("(T+1-4f)^2 = T^2-6T+1", &lhs, &rhs)]
        }
        IdentityName::UsFormula => {
            let psi = factorial_series(order);
            let u = from_counts_in(CountSource::SharpIndec, order, cfg)?;
            vec![check("sum n! T^n = sum_k u(T)^k", &psi, &u.geometric_tail()?)]
        }
        IdentityName::SuperCatalanId => {
            let g = from_counts_in(CountSource::SuperCatalan, order, cfg)?;
            let rhs = &t + &(&g - &t).scale(2);
            vec![check("sum_k g^k = T + 2(g-T)", &g.geometric_tail()?, &rhs)]
        }
        IdentityName::DuplSeries => {
            let f = from_counts_in(CountSource::SuperCatalan, order, cfg)?;
            let above_one = &f - &t;
            [1usize, 2]
                .into_iter()
                .map(|s| {
                    let counts = from_counts_in(CountSource::DuplSize(s), order, cfg)?;
                    let st = t.scale(s);
                    let rhs = &st + &above_one.compose(&st)?.scale(2);
                    let label = if s == 1 {
                        "|S|=1: Dupl(T) = T + 2 sum C_n T^n".to_string()
                    } else {
                        format!("|S|={s}: Dupl(T) = sT + 2 sum C_n (sT)^n")
                    };
                    Ok(check(label, &counts, &rhs))
                })
                .collect::<Result<Vec<_>>>()?
        }
        IdentityName::DesFormula => {
            let psi = factorial_series(order);
            let d = from_counts_in(CountSource::S2Indec, order, cfg)?;
            let u = from_counts_in(CountSource::SharpIndec, order, cfg)?;
            // n! − 2Σp!q! + 2Σp!q!r! − ⋯
            let alternating = &psi - &(&psi - &sharp_indec_formula(order)).scale(2);
            vec![
                check("d_n = 2u_n - n!", &d, &(&u.scale(2) - &psi)),
                check("d_n = n! - 2 sum p!q! + 2 sum p!q!r! - ...", &d, &alternating),
            ]
        }
        IdentityName::Cor52 => {
            let psi = factorial_series(order);
            let xi = from_counts_in(CountSource::S2Indec, order, cfg)?;
            let f = from_counts_in(CountSource::SuperCatalan, order.min(cfg.series_order), cfg)?;
            let quadratic = &(&(&(&psi * &psi) + &(&xi * &psi)) - &psi) + &xi;
            let via_f = &f.compose(&xi)?.scale(2) - &xi;
            vec![
                check("psi = 2 f(xi) - xi", &psi, &via_f),
                check("psi^2 + xi psi - psi + xi = 0", &quadratic, &Series::zero(order)),
            ]
        }
    };
    Ok(VerifyReport {
        identity: name,
        order,
        checks,
    })
}
