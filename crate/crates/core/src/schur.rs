//! The stable ring of symmetric functions in the Schur basis: exact
//! products through the Littlewood-Richardson rule, the omega involution,
//! and specialization to finite monomial alphabets.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::OnceLock;

use dashmap::DashMap;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::laurent::{det_laurent, LaurentPoly};
use crate::partitions::{partitions_of, Partition};

/// A finite integer-linear combination of Schur functions.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SymFunc {
    terms: BTreeMap<Partition, BigInt>,
}

impl SymFunc {
    pub fn zero() -> Self {
        SymFunc::default()
    }

    /// The unit of the ring, `s_0 = 1`.
    pub fn one() -> Self {
        SymFunc::schur(Partition::empty())
    }

    pub fn schur(lambda: Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(lambda, BigInt::one());
        SymFunc { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, lambda: &Partition) -> BigInt {
        self.terms
            .get(lambda)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn insert_add(&mut self, lambda: Partition, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> SymFunc {
        if c.is_zero() {
            return SymFunc::zero();
        }
        SymFunc {
            terms: self.terms.iter().map(|(l, k)| (l.clone(), k * c)).collect(),
        }
    }

    /// The algebra automorphism `omega: s_lambda -> s_{lambda transpose}`.
    pub fn omega(&self) -> SymFunc {
        let mut out = SymFunc::zero();
        for (lam, c) in &self.terms {
            out.insert_add(lam.transpose(), c.clone());
        }
        out
    }

    /// Evaluates at a finite alphabet of Laurent monomials. Schur functions
    /// of length exceeding the alphabet size vanish.
    pub fn specialize(&self, alphabet: &[LaurentPoly]) -> Result<LaurentPoly> {
        let arity = check_alphabet(alphabet)?;
        let mut out = LaurentPoly::zero(arity);
        for (lam, c) in &self.terms {
            let val = schur_at(lam, alphabet)?;
            out += &val.scale(c);
        }
        Ok(out)
    }
}

impl Add for &SymFunc {
    type Output = SymFunc;
    fn add(self, rhs: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &SymFunc {
    type Output = SymFunc;
    fn sub(self, rhs: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        SymFunc {
            terms: self.terms.iter().map(|(l, c)| (l.clone(), -c)).collect(),
        }
    }
}

impl AddAssign<&SymFunc> for SymFunc {
    fn add_assign(&mut self, rhs: &SymFunc) {
        for (l, c) in &rhs.terms {
            self.insert_add(l.clone(), c.clone());
        }
    }
}

impl SubAssign<&SymFunc> for SymFunc {
    fn sub_assign(&mut self, rhs: &SymFunc) {
        for (l, c) in &rhs.terms {
            self.insert_add(l.clone(), -c.clone());
        }
    }
}

impl Mul for &SymFunc {
    type Output = SymFunc;
    fn mul(self, rhs: &SymFunc) -> SymFunc {
        let mut out = SymFunc::zero();
        for (mu, cm) in &self.terms {
            for (nu, cn) in &rhs.terms {
                let prod = schur_product(mu, nu);
                out += &prod.scale(&(cm * cn));
            }
        }
        out
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut entries: Vec<(&Partition, &BigInt)> = self.terms.iter().collect();
        entries.sort_by(|a, b| a.0.cmp_size_lex(b.0));
        let mut first = true;
        for (lam, c) in entries {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if abs.is_one() {
                write!(f, "s[{}]", lam)?;
            } else {
                write!(f, "{}*s[{}]", abs, lam)?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct SymTermJson {
    partition: Vec<u32>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct SymFuncJson {
    basis: String,
    terms: Vec<SymTermJson>,
}

pub(crate) fn terms_to_json(terms: &BTreeMap<Partition, BigInt>) -> Vec<(Vec<u32>, String)> {
    let mut entries: Vec<(&Partition, &BigInt)> = terms.iter().collect();
    entries.sort_by(|a, b| a.0.cmp_size_lex(b.0));
    entries
        .into_iter()
        .map(|(l, c)| (l.parts().to_vec(), c.to_string()))
        .collect()
}

impl Serialize for SymFunc {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = terms_to_json(&self.terms)
            .into_iter()
            .map(|(partition, coeff)| SymTermJson { partition, coeff })
            .collect();
        SymFuncJson {
            basis: "schur".to_string(),
            terms,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SymFunc {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = SymFuncJson::deserialize(deserializer)?;
        if raw.basis != "schur" {
            return Err(D::Error::custom(format!("unexpected basis {}", raw.basis)));
        }
        let mut out = SymFunc::zero();
        for t in raw.terms {
            let lam = Partition::new(t.partition).map_err(|e| D::Error::custom(e.to_string()))?;
            let c: BigInt = t
                .coeff
                .parse()
                .map_err(|_| D::Error::custom("bad coefficient"))?;
            out.insert_add(lam, c);
        }
        Ok(out)
    }
}

fn lr_memo() -> &'static DashMap<(Partition, Partition, Partition), BigInt> {
    static MEMO: OnceLock<DashMap<(Partition, Partition, Partition), BigInt>> = OnceLock::new();
    MEMO.get_or_init(DashMap::new)
}

fn mul_memo() -> &'static DashMap<(Partition, Partition), SymFunc> {
    static MEMO: OnceLock<DashMap<(Partition, Partition), SymFunc>> = OnceLock::new();
    MEMO.get_or_init(DashMap::new)
}

/// The Littlewood-Richardson coefficient `c^lambda_{mu,nu}`: the number of
/// semistandard skew tableaux of shape `lambda/mu` and content `nu` whose
/// reverse reading word is a lattice word.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> BigInt {
    if lambda.size() != mu.size() + nu.size()
        || !lambda.contains(mu)
        || !lambda.contains(nu)
    {
        return BigInt::zero();
    }
    if mu.is_empty() {
        return if lambda == nu { BigInt::one() } else { BigInt::zero() };
    }
    if nu.is_empty() {
        return if lambda == mu { BigInt::one() } else { BigInt::zero() };
    }
    let key = (lambda.clone(), mu.clone(), nu.clone());
    if let Some(v) = lr_memo().get(&key) {
        return v.clone();
    }
    let count = BigInt::from(lr_count(lambda, mu, nu));
    lr_memo().insert(key, count.clone());
    count
}

/// Backtracking enumeration of the lattice-word skew tableaux.
fn lr_count(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    let rows = lambda.len();
    let values = nu.len();
    // cells in reading order: rows top to bottom, right to left within a row
    let mut cells = Vec::new();
    for r in 0..rows {
        let lo = mu.part(r) as usize;
        let hi = lambda.part(r) as usize;
        for c in (lo..hi).rev() {
            cells.push((r, c));
        }
    }
    let width = lambda.part(0) as usize;
    let mut grid = vec![vec![0u32; width]; rows];
    let mut counts = vec![0u32; values + 1];
    let mut total = 0u64;

    #[allow(clippy::too_many_arguments)]
    fn rec(
        idx: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<u32>>,
        counts: &mut Vec<u32>,
        lambda: &Partition,
        mu: &Partition,
        nu: &Partition,
        total: &mut u64,
    ) {
        if idx == cells.len() {
            *total += 1;
            return;
        }
        let (r, c) = cells[idx];
        // right neighbor (already filled) bounds the value from above
        let right_bound = if c + 1 < lambda.part(r) as usize {
            grid[r][c + 1]
        } else {
            nu.len() as u32
        };
        // the cell above (if in the skew shape) bounds it from below
        let lower = if r > 0 && c >= mu.part(r - 1) as usize {
            grid[r - 1][c] + 1
        } else {
            1
        };
        for v in lower..=right_bound {
            let vi = v as usize;
            if counts[vi] >= nu.part(vi - 1) {
                continue;
            }
            // lattice condition on the running reverse reading word
            if vi >= 2 && counts[vi] >= counts[vi - 1] {
                continue;
            }
            counts[vi] += 1;
            grid[r][c] = v;
            rec(idx + 1, cells, grid, counts, lambda, mu, nu, total);
            counts[vi] -= 1;
        }
        grid[r][c] = 0;
    }

    rec(0, &cells, &mut grid, &mut counts, lambda, mu, nu, &mut total);
    total
}

/// The product `s_mu * s_nu` expanded in the Schur basis. Results are
/// memoized keyed by the unordered pair.
pub fn schur_product(mu: &Partition, nu: &Partition) -> SymFunc {
    if mu.is_empty() {
        return SymFunc::schur(nu.clone());
    }
    if nu.is_empty() {
        return SymFunc::schur(mu.clone());
    }
    let key = if mu <= nu {
        (mu.clone(), nu.clone())
    } else {
        (nu.clone(), mu.clone())
    };
    if let Some(v) = mul_memo().get(&key) {
        return v.clone();
    }
    let n = mu.size() + nu.size();
    let mut out = SymFunc::zero();
    for lam in partitions_of(n) {
        if lam.len() > mu.len() + nu.len() {
            continue;
        }
        if !(lam.contains(mu) && lam.contains(nu)) {
            continue;
        }
        let c = lr_coefficient(&lam, mu, nu);
        out.insert_add(lam, c);
    }
    mul_memo().insert(key, out.clone());
    out
}

fn check_alphabet(alphabet: &[LaurentPoly]) -> Result<usize> {
    if alphabet.is_empty() {
        return Err(Error::EmptyAlphabet);
    }
    let arity = alphabet[0].arity();
    for a in alphabet {
        if a.arity() != arity {
            return Err(Error::ArityMismatch {
                left: arity,
                right: a.arity(),
            });
        }
        if a.as_monomial().is_none() {
            return Err(Error::NotAMonomial);
        }
    }
    Ok(arity)
}

/// Value of `s_lambda` at a monomial alphabet. Short shapes go through the
/// semistandard-tableau generating function; longer ones through the
/// Jacobi-Trudi determinant in complete homogeneous sums. The two paths
/// agree (cross-checked in tests).
fn schur_at(lambda: &Partition, alphabet: &[LaurentPoly]) -> Result<LaurentPoly> {
    let arity = alphabet[0].arity();
    if lambda.is_empty() {
        return Ok(LaurentPoly::one(arity));
    }
    if lambda.len() > alphabet.len() {
        return Ok(LaurentPoly::zero(arity));
    }
    if lambda.len() <= 3 {
        Ok(schur_at_ssyt(lambda, alphabet))
    } else {
        schur_at_jacobi_trudi(lambda, alphabet)
    }
}

/// Sum over semistandard tableaux of shape `lambda` with entries bounded by
/// the alphabet size, each contributing the product of its letters.
pub(crate) fn schur_at_ssyt(lambda: &Partition, alphabet: &[LaurentPoly]) -> LaurentPoly {
    let arity = alphabet[0].arity();
    let n = alphabet.len() as u32;
    let rows = lambda.len();
    let width = lambda.part(0) as usize;
    let mut grid = vec![vec![0u32; width]; rows];
    let mut acc = LaurentPoly::zero(arity);

    fn rec(
        r: usize,
        c: usize,
        lambda: &Partition,
        n: u32,
        grid: &mut Vec<Vec<u32>>,
        alphabet: &[LaurentPoly],
        acc: &mut LaurentPoly,
    ) {
        if r == lambda.len() {
            // multiply out the chosen letters
            let mut exps = vec![0i64; alphabet[0].arity()];
            let mut coeff = BigInt::one();
            for (i, row) in grid.iter().enumerate() {
                for &v in row.iter().take(lambda.part(i) as usize) {
                    let (e, c) = alphabet[(v - 1) as usize].as_monomial().unwrap();
                    for (x, y) in exps.iter_mut().zip(e) {
                        *x += y;
                    }
                    coeff *= c;
                }
            }
            acc.insert_add(exps, coeff);
            return;
        }
        let (nr, nc) = if c + 1 < lambda.part(r) as usize {
            (r, c + 1)
        } else {
            (r + 1, 0)
        };
        let lo = {
            let mut lo = 1;
            if c > 0 {
                lo = lo.max(grid[r][c - 1]);
            }
            if r > 0 && c < lambda.part(r - 1) as usize {
                lo = lo.max(grid[r - 1][c] + 1);
            }
            lo
        };
        for v in lo..=n {
            grid[r][c] = v;
            rec(nr, nc, lambda, n, grid, alphabet, acc);
        }
        grid[r][c] = 0;
    }

    rec(0, 0, lambda, n, &mut grid, alphabet, &mut acc);
    acc
}

/// Complete homogeneous sums `h_0 .. h_max` of the alphabet.
pub(crate) fn complete_homogeneous(alphabet: &[LaurentPoly], max: usize) -> Vec<LaurentPoly> {
    let arity = alphabet[0].arity();
    let mut h = vec![LaurentPoly::zero(arity); max + 1];
    h[0] = LaurentPoly::one(arity);
    for a in alphabet {
        let (ae, ac) = a.as_monomial().unwrap();
        // powers of the letter
        let mut powers = vec![LaurentPoly::one(arity)];
        for j in 1..=max {
            let e: Vec<i64> = ae.iter().map(|&x| x * j as i64).collect();
            let c = num_traits::pow::pow(ac.clone(), j);
            powers.push(LaurentPoly::monomial(arity, e, c));
        }
        let mut next = vec![LaurentPoly::zero(arity); max + 1];
        for k in 0..=max {
            for j in 0..=k {
                let contrib = &h[k - j] * &powers[j];
                next[k] += &contrib;
            }
        }
        h = next;
    }
    h
}

#[allow(clippy::needless_range_loop)]
fn schur_at_jacobi_trudi(lambda: &Partition, alphabet: &[LaurentPoly]) -> Result<LaurentPoly> {
    let arity = alphabet[0].arity();
    let l = lambda.len();
    let max = lambda.part(0) as usize + l;
    let h = complete_homogeneous(alphabet, max);
    let mut mat = vec![vec![LaurentPoly::zero(arity); l]; l];
    for i in 0..l {
        for j in 0..l {
            let idx = lambda.part(i) as i64 - i as i64 + j as i64;
            if idx >= 0 {
                mat[i][j] = h[idx as usize].clone();
            }
        }
    }
    Ok(det_laurent(&mat, arity))
}
