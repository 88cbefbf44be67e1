//! Exact polynomials in `Z[t_1, ..., t_n]` and the operators acting on them:
//! divided differences `π_i`, Demazure operators `D_i`, the atom operators
//! `θ_i = π_i - 1`, key polynomials, polynomial Demazure atoms and the
//! expansion of an arbitrary polynomial in the atom basis.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tableau::{enumerate_ssyt, Partition};
use crate::weyl::min_rep_for_composition;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial { exponents }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn nvars(&self) -> usize {
        self.exponents.len()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factors: Vec<String> = self
            .exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(k, &e)| {
                if e == 1 {
                    format!("t{}", k + 1)
                } else {
                    format!("t{}^{}", k + 1, e)
                }
            })
            .collect();
        if factors.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", factors.join(" "))
        }
    }
}

#[derive(Serialize, Deserialize)]
struct Term {
    exp: Vec<u32>,
    coeff: i64,
}

/// A finite sum of monomials with nonzero integer coefficients.
#[derive(Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(from = "Vec<Term>", into = "Vec<Term>")]
pub struct Polynomial {
    terms: BTreeMap<Monomial, i64>,
}

impl From<Vec<Term>> for Polynomial {
    fn from(terms: Vec<Term>) -> Self {
        let mut p = Polynomial::zero();
        for t in terms {
            p.add_term(Monomial::new(t.exp), t.coeff);
        }
        p
    }
}

impl From<Polynomial> for Vec<Term> {
    fn from(p: Polynomial) -> Self {
        p.terms
            .into_iter()
            .map(|(m, coeff)| Term {
                exp: m.exponents,
                coeff,
            })
            .collect()
    }
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn monomial(exponents: &[u32]) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(Monomial::new(exponents.to_vec()), 1);
        p
    }

    pub fn add_term(&mut self, m: Monomial, coeff: i64) {
        if coeff == 0 {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if *slot.get() == 0 {
                    slot.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of distinct monomials.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Sum of coefficients, i.e. the value at `t = (1, ..., 1)`.
    pub fn coefficient_sum(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn coefficient(&self, exponents: &[u32]) -> i64 {
        self.terms
            .get(&Monomial::new(exponents.to_vec()))
            .copied()
            .unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, i64)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn nvars(&self) -> Option<usize> {
        self.terms.keys().next().map(Monomial::nvars)
    }

    pub fn scale(&self, k: i64) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in self.terms() {
            out.add_term(m.clone(), c * k);
        }
        out
    }

    /// Homogeneous components keyed by degree.
    pub fn homogeneous_components(&self) -> BTreeMap<u32, Polynomial> {
        let mut out: BTreeMap<u32, Polynomial> = BTreeMap::new();
        for (m, c) in self.terms() {
            out.entry(m.degree()).or_default().add_term(m.clone(), c);
        }
        out
    }

    /// `s_i · f`: swap `t_i` and `t_{i+1}`.
    pub fn swap_vars(&self, i: usize) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in self.terms() {
            let mut e = m.exponents.clone();
            e.swap(i - 1, i);
            out.add_term(Monomial::new(e), c);
        }
        out
    }

    /// Symmetric under every adjacent swap.
    pub fn is_symmetric(&self) -> bool {
        match self.nvars() {
            None => true,
            Some(n) => (1..n).all(|i| &self.swap_vars(i) == self),
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // largest monomial first
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let (sign, abs) = if *c < 0 { ("-", -c) } else { ("+", *c) };
            if k == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mono = m.to_string();
            match (abs, mono.as_str()) {
                (1, _) => write!(f, "{mono}")?,
                (_, "1") => write!(f, "{abs}")?,
                _ => write!(f, "{abs} {mono}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(m.clone(), c);
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        self.scale(-1)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (a, ca) in self.terms() {
            for (b, cb) in rhs.terms() {
                let e = a
                    .exponents
                    .iter()
                    .zip(&b.exponents)
                    .map(|(x, y)| x + y)
                    .collect();
                out.add_term(Monomial::new(e), ca * cb);
            }
        }
        out
    }
}

impl FromIterator<(Vec<u32>, i64)> for Polynomial {
    fn from_iter<I: IntoIterator<Item = (Vec<u32>, i64)>>(iter: I) -> Self {
        let mut p = Polynomial::zero();
        for (e, c) in iter {
            p.add_term(Monomial::new(e), c);
        }
        p
    }
}

fn check_index(i: usize, f: &Polynomial) {
    if let Some(n) = f.nvars() {
        assert!(
            i >= 1 && i < n,
            "operator index {i} out of range for {n} variables"
        );
    }
}

/// `π_i(f) = (t_i f - s_i(t_i f)) / (t_i - t_{i+1})`, evaluated per monomial
/// as a signed geometric sum.
pub fn divided_difference(i: usize, f: &Polynomial) -> Polynomial {
    check_index(i, f);
    let mut out = Polynomial::zero();
    for (m, c) in f.terms() {
        let a = m.exponents[i - 1];
        let b = m.exponents[i];
        let mut e = m.exponents.clone();
        if a >= b {
            for j in 0..=(a - b) {
                e[i - 1] = a - j;
                e[i] = b + j;
                out.add_term(Monomial::new(e.clone()), c);
            }
        } else if a + 1 < b {
            for j in 0..=(b - a - 2) {
                e[i - 1] = b - 1 - j;
                e[i] = a + 1 + j;
                out.add_term(Monomial::new(e.clone()), -c);
            }
        }
    }
    debug_assert!(divided_difference_is_exact(i, f, &out));
    out
}

/// `(t_i - t_{i+1}) · π_i(f) = t_i f - s_i(t_i f)`.
fn divided_difference_is_exact(i: usize, f: &Polynomial, result: &Polynomial) -> bool {
    let Some(n) = f.nvars() else {
        return result.is_zero();
    };
    let mut ti = vec![0; n];
    ti[i - 1] = 1;
    let mut ti1 = vec![0; n];
    ti1[i] = 1;
    let ti = Polynomial::monomial(&ti);
    let ti1 = Polynomial::monomial(&ti1);
    let tif = &ti * f;
    let lhs = &(&ti - &ti1) * result;
    lhs == &tif - &tif.swap_vars(i)
}

/// `D_i(t^β) = (t^{β+ρ} - t^{s_i(β+ρ)}) / (1 - t^{-α_i}) · t^{-ρ}` with
/// `ρ = (n-1, ..., 1, 0)`, expanded as a geometric series in `t^{-α_i}`.
pub fn demazure_operator(i: usize, f: &Polynomial) -> Polynomial {
    check_index(i, f);
    let mut out = Polynomial::zero();
    for (m, c) in f.terms() {
        let n = m.nvars();
        let rho: Vec<i64> = (0..n).map(|k| (n - 1 - k) as i64).collect();
        let gamma: Vec<i64> = m
            .exponents
            .iter()
            .zip(&rho)
            .map(|(&b, r)| b as i64 + r)
            .collect();
        let mut reflected = gamma.clone();
        reflected.swap(i - 1, i);
        let pairing = gamma[i - 1] - gamma[i];
        // t^γ - t^{sγ} = t^γ (1 - t^{-kα}) for k = <γ, α^∨>; divide out (1 - t^{-α}).
        let (start, count, sign) = if pairing >= 0 {
            (gamma, pairing, 1)
        } else {
            (reflected, -pairing, -1)
        };
        for step in 0..count {
            let mut e = start.clone();
            e[i - 1] -= step;
            e[i] += step;
            let shifted: Vec<u32> = e
                .iter()
                .zip(&rho)
                .map(|(x, r)| {
                    u32::try_from(x - r).expect("Demazure operator left the polynomial ring")
                })
                .collect();
            out.add_term(Monomial::new(shifted), sign * c);
        }
    }
    out
}

/// `θ_i(f) = π_i(f) - f`.
pub fn theta(i: usize, f: &Polynomial) -> Polynomial {
    &divided_difference(i, f) - f
}

/// Applies `op` letter by letter, first letter first.
pub fn apply_word(
    op: fn(usize, &Polynomial) -> Polynomial,
    word: &[usize],
    f: &Polynomial,
) -> Polynomial {
    word.iter().fold(f.clone(), |acc, &i| op(i, &acc))
}

/// The key polynomial `κ_β`.
pub fn key_polynomial(beta: &[u32]) -> Polynomial {
    let (lambda, w) = min_rep_for_composition(beta);
    apply_word(
        divided_difference,
        w.canonical_word().letters(),
        &Polynomial::monomial(lambda.parts()),
    )
}

/// The polynomial Demazure atom `𝔄_β`.
pub fn atom_polynomial(beta: &[u32]) -> Polynomial {
    let (lambda, w) = min_rep_for_composition(beta);
    apply_word(
        theta,
        w.canonical_word().letters(),
        &Polynomial::monomial(lambda.parts()),
    )
}

/// The Schur polynomial `s_λ(t_1, ..., t_n)` as a sum over tableaux.
pub fn schur_polynomial(lambda: &Partition) -> Polynomial {
    enumerate_ssyt(lambda)
        .into_iter()
        .map(|t| (t.weight(), 1))
        .collect()
}

/// Every weak composition of `degree` into `n` parts, lexicographically.
pub fn weak_compositions(degree: u32, n: usize) -> Vec<Vec<u32>> {
    fn rec(remaining: u32, slots: usize, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slots == 1 {
            acc.push(remaining);
            out.push(acc.clone());
            acc.pop();
            return;
        }
        for part in 0..=remaining {
            acc.push(part);
            rec(remaining - part, slots - 1, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(degree, n, &mut Vec::new(), &mut out);
    }
    out
}

/// The unique integers `c_β` with `f = Σ c_β 𝔄_β`, found by exact rational
/// elimination over all compositions of each degree.
pub fn expand_in_atoms(f: &Polynomial) -> Result<BTreeMap<Vec<u32>, i64>> {
    let mut out = BTreeMap::new();
    let Some(n) = f.nvars() else { return Ok(out) };
    for (degree, component) in f.homogeneous_components() {
        let basis = weak_compositions(degree, n);
        let index: BTreeMap<&[u32], usize> = basis
            .iter()
            .enumerate()
            .map(|(k, b)| (b.as_slice(), k))
            .collect();
        let size = basis.len();
        // columns: atoms; rows: monomials
        let mut matrix = vec![vec![BigRational::zero(); size]; size];
        for (col, beta) in basis.iter().enumerate() {
            for (m, c) in atom_polynomial(beta).terms() {
                matrix[index[m.exponents()]][col] = BigRational::from_integer(BigInt::from(c));
            }
        }
        let mut rhs = vec![BigRational::zero(); size];
        for (m, c) in component.terms() {
            rhs[index[m.exponents()]] = BigRational::from_integer(BigInt::from(c));
        }
        let solution = solve_exact(matrix, rhs)?;
        for (beta, value) in basis.into_iter().zip(solution) {
            if !value.is_integer() {
                return Err(Error::Expansion(format!(
                    "non-integral coefficient {value} on {beta:?}"
                )));
            }
            let c = value
                .to_integer()
                .to_i64()
                .ok_or_else(|| Error::Expansion("coefficient overflow".into()))?;
            if c != 0 {
                out.insert(beta, c);
            }
        }
    }
    Ok(out)
}

/// Reassembles `Σ c_β 𝔄_β`.
pub fn sum_of_atoms(expansion: &BTreeMap<Vec<u32>, i64>) -> Polynomial {
    let mut out = Polynomial::zero();
    for (beta, &c) in expansion {
        out = &out + &atom_polynomial(beta).scale(c);
    }
    out
}

/// Expands a symmetric polynomial in Schur polynomials by repeatedly peeling
/// off the lexicographically leading (hence dominant) monomial.
pub fn expand_in_schur(f: &Polynomial) -> Result<BTreeMap<Partition, i64>> {
    let mut rest = f.clone();
    let mut out = BTreeMap::new();
    while let Some((lead, c)) = rest.terms.iter().next_back().map(|(m, &c)| (m.clone(), c)) {
        let lambda = Partition::new(lead.exponents.clone())
            .map_err(|_| Error::Expansion(format!("leading monomial {lead} is not dominant")))?;
        rest = &rest - &schur_polynomial(&lambda).scale(c);
        out.insert(lambda, c);
    }
    Ok(out)
}

/// Gaussian elimination with the first nonzero pivot; the system must be
/// square and nonsingular.
fn solve_exact(mut a: Vec<Vec<BigRational>>, mut b: Vec<BigRational>) -> Result<Vec<BigRational>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .ok_or_else(|| Error::Expansion(format!("singular system at column {col}")))?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = BigRational::one() / &a[col][col];
        for x in &mut a[col][col..] {
            *x = &*x * &inv;
        }
        b[col] = &b[col] * &inv;
        let pivot_row = a[col].clone();
        let pivot_rhs = b[col].clone();
        for (r, (row, rhs)) in a.iter_mut().zip(b.iter_mut()).enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x = &*x - &(&factor * p);
            }
            *rhs = &*rhs - &(&factor * &pivot_rhs);
        }
    }
    Ok(b)
}
