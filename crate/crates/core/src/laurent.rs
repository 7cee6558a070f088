//! Sparse multivariate Laurent polynomials over arbitrary-precision
//! integers. Finite-rank characters live here.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A finite map from exponent vectors (all of one arity) to nonzero
/// big-integer coefficients. Keys iterate in lexicographic order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentPoly {
    arity: usize,
    terms: BTreeMap<Vec<i64>, BigInt>,
}

impl LaurentPoly {
    pub fn zero(arity: usize) -> Self {
        LaurentPoly {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, BigInt::one())
    }

    pub fn constant(arity: usize, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![0i64; arity], c);
        }
        LaurentPoly { arity, terms }
    }

    pub fn monomial(arity: usize, exps: Vec<i64>, coeff: BigInt) -> Self {
        assert_eq!(exps.len(), arity);
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exps, coeff);
        }
        LaurentPoly { arity, terms }
    }

    pub fn monomial_unit(arity: usize, exps: Vec<i64>) -> Self {
        Self::monomial(arity, exps, BigInt::one())
    }

    /// The single variable `x_{i}` (0-based index).
    pub fn variable(arity: usize, i: usize, power: i64) -> Self {
        let mut e = vec![0i64; arity];
        e[i] = power;
        Self::monomial_unit(arity, e)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[i64]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_else(BigInt::zero)
    }

    /// If the polynomial is a single term, returns it.
    pub fn as_monomial(&self) -> Option<(&Vec<i64>, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// Lexicographically largest term.
    pub fn leading_term(&self) -> Option<(&Vec<i64>, &BigInt)> {
        self.terms.iter().next_back()
    }

    fn check_arity(&self, other: &LaurentPoly) {
        assert_eq!(
            self.arity, other.arity,
            "arity mismatch: {} vs {}",
            self.arity, other.arity
        );
    }

    pub(crate) fn insert_add(&mut self, exps: Vec<i64>, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps);
        match entry {
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

    pub fn scale(&self, c: &BigInt) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero(self.arity);
        }
        LaurentPoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    /// Exact division of every coefficient by `c`.
    pub fn div_scalar(&self, c: &BigInt) -> Result<LaurentPoly> {
        let mut terms = BTreeMap::new();
        for (e, k) in &self.terms {
            let (q, r) = k.div_rem(c);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            terms.insert(e.clone(), q);
        }
        Ok(LaurentPoly {
            arity: self.arity,
            terms,
        })
    }

    /// The ring endomorphism `x_i -> x_i^m`: every exponent vector is
    /// multiplied componentwise by `m`.
    pub fn substitute_power(&self, m: u32) -> LaurentPoly {
        let m = m as i64;
        LaurentPoly {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().map(|&x| x * m).collect(), c.clone()))
                .collect(),
        }
    }

    /// Sets all variables to 1: the sum of the coefficients. For a
    /// character this is the dimension.
    pub fn evaluate_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Halves every exponent; errors if any exponent is odd. Used to map
    /// doubled-variable computations (type B half-integer weights) back to
    /// the original variables.
    pub fn halve_exponents(&self) -> Result<LaurentPoly> {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if e.iter().any(|&x| x % 2 != 0) {
                return Err(Error::NonIntegral);
            }
            terms.insert(e.iter().map(|&x| x / 2).collect(), c.clone());
        }
        Ok(LaurentPoly {
            arity: self.arity,
            terms,
        })
    }

    /// Applies a map to every exponent vector (a torus coordinate change);
    /// the map must be injective on the support or terms will combine.
    pub fn map_exponents<F: Fn(&[i64]) -> Vec<i64>>(&self, f: F) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.arity);
        for (e, c) in &self.terms {
            let ne = f(e);
            assert_eq!(ne.len(), self.arity);
            out.insert_add(ne, c.clone());
        }
        out
    }

    /// Exact division: returns `q` with `self = q * divisor`, or an error
    /// if the division does not come out exact.
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_arity(divisor);
        if divisor.is_zero() {
            return Err(Error::InexactDivision);
        }
        let (lead_e, lead_c) = divisor.leading_term().unwrap();
        let mut rem = self.clone();
        let mut quotient = LaurentPoly::zero(self.arity);
        // lex-leading term of the remainder strictly decreases each step;
        // cap iterations to catch a non-exact division spinning downward
        let mut steps: usize = 0;
        let cap = 1_000_000 + 100 * self.terms.len() * divisor.terms.len();
        while let Some((re, rc)) = rem.leading_term() {
            let te: Vec<i64> = re.iter().zip(lead_e).map(|(a, b)| a - b).collect();
            let (tc, tr) = rc.div_rem(lead_c);
            if !tr.is_zero() {
                return Err(Error::InexactDivision);
            }
            for (de, dc) in &divisor.terms {
                let e: Vec<i64> = de.iter().zip(&te).map(|(a, b)| a + b).collect();
                rem.insert_add(e, -(dc * &tc));
            }
            quotient.insert_add(te, tc);
            steps += 1;
            if steps > cap {
                return Err(Error::InexactDivision);
            }
        }
        Ok(quotient)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.check_arity(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_add(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.check_arity(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_add(e.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    // exponent vectors add when monomials multiply
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.check_arity(rhs);
        let mut out = LaurentPoly::zero(self.arity);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Vec<i64> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.insert_add(e, ca * cb);
            }
        }
        out
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        self.check_arity(rhs);
        for (e, c) in &rhs.terms {
            self.insert_add(e.clone(), c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        self.check_arity(rhs);
        for (e, c) in &rhs.terms {
            self.insert_add(e.clone(), -c.clone());
        }
    }
}

/// Determinant of a square matrix of Laurent polynomials by cofactor
/// expansion along the first row. Matrices here never exceed the rank of
/// the ambient group, so no fancier scheme is needed.
pub fn det_laurent(mat: &[Vec<LaurentPoly>], arity: usize) -> LaurentPoly {
    let n = mat.len();
    if n == 0 {
        return LaurentPoly::one(arity);
    }
    if n == 1 {
        return mat[0][0].clone();
    }
    let mut acc = LaurentPoly::zero(arity);
    for j in 0..n {
        if mat[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<LaurentPoly>> = mat[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let sub = det_laurent(&minor, arity);
        let contrib = &mat[0][j] * &sub;
        if j % 2 == 0 {
            acc += &contrib;
        } else {
            acc -= &contrib;
        }
    }
    acc
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        // leading (lex-largest) terms first
        for (e, c) in self.terms.iter().rev() {
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
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p != 0)
                .map(|(i, &p)| {
                    if p == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{}", i + 1, p)
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{}", abs)?;
            } else if abs.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{}*{}", abs, vars.join("*"))?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exps: Vec<i64>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct LaurentJson {
    arity: usize,
    terms: Vec<TermJson>,
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| TermJson {
                exps: e.clone(),
                coeff: c.to_string(),
            })
            .collect();
        LaurentJson {
            arity: self.arity,
            terms,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = LaurentJson::deserialize(deserializer)?;
        let mut out = LaurentPoly::zero(raw.arity);
        for t in raw.terms {
            if t.exps.len() != raw.arity {
                return Err(D::Error::custom("exponent arity mismatch"));
            }
            let c: BigInt = t
                .coeff
                .parse()
                .map_err(|_| D::Error::custom("bad coefficient"))?;
            out.insert_add(t.exps, c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize, p: i64) -> LaurentPoly {
        LaurentPoly::variable(2, i, p)
    }

    #[test]
    fn binomial_square() {
        let f = &x(0, 1) + &x(0, -1);
        let sq = &f * &f;
        let expected = &(&x(0, 2) + &LaurentPoly::constant(2, 2.into())) + &x(0, -2);
        assert_eq!(sq, expected);
    }

    #[test]
    fn additive_identity_and_difference_of_squares() {
        let f = &x(0, 1) * &x(1, 1);
        assert_eq!(&f + &LaurentPoly::zero(2), f);
        let one = LaurentPoly::one(2);
        let prod = &(&f - &one) * &(&f + &one);
        let mut expected = LaurentPoly::monomial_unit(2, vec![2, 2]);
        expected.insert_add(vec![0, 0], (-1).into());
        assert_eq!(prod, expected);
    }

    #[test]
    fn substitute_power_examples() {
        let f = &x(0, 1) + &x(0, -1);
        assert_eq!(f.substitute_power(2), &x(0, 2) + &x(0, -2));
        assert_eq!(f.substitute_power(1), f);
        let g = &x(0, 1) + &LaurentPoly::one(2);
        let gsq = &g * &g;
        assert_eq!(
            gsq.substitute_power(2),
            &g.substitute_power(2) * &g.substitute_power(2)
        );
    }

    #[test]
    fn evaluate_ones_examples() {
        let f = &(&x(0, 1) + &LaurentPoly::one(2)) + &x(0, -1);
        assert_eq!(f.evaluate_ones(), 3.into());
        assert_eq!(LaurentPoly::zero(2).evaluate_ones(), BigInt::from(0));
    }

    #[test]
    fn exact_division_round_trip() {
        let f = &(&x(0, 1) - &x(1, 2)) * &(&x(0, -3) + &x(1, 1));
        let q = f.exact_div(&(&x(0, 1) - &x(1, 2))).unwrap();
        assert_eq!(q, &x(0, -3) + &x(1, 1));
        // non-exact division is reported
        let g = &f + &LaurentPoly::one(2);
        assert!(matches!(
            g.exact_div(&(&x(0, 1) - &x(1, 2))),
            Err(Error::InexactDivision)
        ));
    }

    #[test]
    fn determinant_2x2() {
        let a = x(0, 1);
        let b = x(1, 1);
        let mat = vec![
            vec![a.clone(), b.clone()],
            vec![b.clone(), a.clone()],
        ];
        let det = det_laurent(&mat, 2);
        assert_eq!(det, &(&a * &a) - &(&b * &b));
    }

    #[test]
    fn json_round_trip() {
        let f = &(&x(0, 1) - &x(1, -2)) * &(&x(0, -3) + &LaurentPoly::constant(2, 7.into()));
        let s = serde_json::to_string(&f).unwrap();
        let back: LaurentPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(f, back);
    }

    #[test]
    fn display_form() {
        let f = &(&x(0, 2) - &x(1, -1)) + &LaurentPoly::constant(2, 2.into());
        assert_eq!(f.to_string(), "x1^2 + 2 - x2^-1");
    }
}
