//! Finite-rank character computations for the classical groups: Weyl
//! characters of `V_lambda` as bialternant ratios, the one-row series
//! `h_k`, exterior powers of characters, and decomposition of a character
//! into irreducible multiplicities.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use dashmap::DashMap;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::group::{ClassicalFamily, GroupInstance};
use crate::laurent::{det_laurent, LaurentPoly};
use crate::partitions::Partition;

fn weyl_memo() -> &'static DashMap<(GroupInstance, Partition), LaurentPoly> {
    static MEMO: OnceLock<DashMap<(GroupInstance, Partition), LaurentPoly>> = OnceLock::new();
    MEMO.get_or_init(DashMap::new)
}

/// `det(x_i^{e_j} +/- x_i^{-e_j})` over the given exponents.
fn alternant(exps: &[i64], arity: usize, plus: bool) -> LaurentPoly {
    let n = exps.len();
    let mut mat = vec![vec![LaurentPoly::zero(arity); n]; n];
    for (i, row) in mat.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            let pos = LaurentPoly::variable(arity, i, exps[j]);
            let neg = LaurentPoly::variable(arity, i, -exps[j]);
            *entry = if plus { &pos + &neg } else { &pos - &neg };
        }
    }
    det_laurent(&mat, arity)
}

/// `x_i - x_i^{-1}`.
fn single_factor(i: usize, arity: usize) -> LaurentPoly {
    &LaurentPoly::variable(arity, i, 1) - &LaurentPoly::variable(arity, i, -1)
}

/// `x_i^p + x_i^{-p} - x_j^p - x_j^{-p}`.
fn pair_factor(i: usize, j: usize, arity: usize, p: i64) -> LaurentPoly {
    let mut out = &LaurentPoly::variable(arity, i, p) + &LaurentPoly::variable(arity, i, -p);
    out -= &LaurentPoly::variable(arity, j, p);
    out -= &LaurentPoly::variable(arity, j, -p);
    out
}

/// The character of `V_lambda` on the standard maximal torus, in
/// `rank` variables. In type D with `lambda_rank > 0` this is the sum of
/// the two constituent characters, i.e. the restriction of the orthogonal
/// irreducible to the identity-component torus.
///
/// Computed as a ratio of alternants; the Weyl denominator is divided out
/// factor by factor (each exact division is checked), which keeps the
/// division cost proportional to the support of the answer.
pub fn weyl_character(g: &GroupInstance, lambda: &Partition) -> Result<LaurentPoly> {
    let r = g.rank();
    if lambda.len() > r {
        return Err(Error::RankTooSmall {
            length: lambda.len(),
            rank: r,
        });
    }
    let key = (*g, lambda.clone());
    if let Some(v) = weyl_memo().get(&key) {
        return Ok(v.clone());
    }
    let chi = match g.family() {
        ClassicalFamily::C => {
            let exps: Vec<i64> = (0..r)
                .map(|j| lambda.part(j) as i64 + (r - j) as i64)
                .collect();
            let mut q = alternant(&exps, r, false);
            for i in 0..r {
                q = q.exact_div(&single_factor(i, r))?;
            }
            for i in 0..r {
                for j in i + 1..r {
                    q = q.exact_div(&pair_factor(i, j, r, 1))?;
                }
            }
            q
        }
        ClassicalFamily::B => {
            // half-integer exponents: work in y with x = y^2
            let exps: Vec<i64> = (0..r)
                .map(|j| 2 * (lambda.part(j) as i64 + (r - 1 - j) as i64) + 1)
                .collect();
            let mut q = alternant(&exps, r, false);
            for i in 0..r {
                q = q.exact_div(&single_factor(i, r))?;
            }
            for i in 0..r {
                for j in i + 1..r {
                    q = q.exact_div(&pair_factor(i, j, r, 2))?;
                }
            }
            q.halve_exponents()?
        }
        ClassicalFamily::D => {
            let exps: Vec<i64> = (0..r)
                .map(|j| lambda.part(j) as i64 + (r - 1 - j) as i64)
                .collect();
            let mut q = alternant(&exps, r, true);
            for i in 0..r {
                for j in i + 1..r {
                    q = q.exact_div(&pair_factor(i, j, r, 1))?;
                }
            }
            if lambda.part(r - 1) == 0 {
                q = q.div_scalar(&BigInt::from(2))?;
            }
            q
        }
    };
    // the highest-weight coefficient pins the overall sign
    let lead = chi.coeff(&lambda.to_exponents(r));
    let chi = if lead == BigInt::one() {
        chi
    } else if lead == -BigInt::one() {
        -&chi
    } else {
        return Err(Error::NotACharacter(format!(
            "leading coefficient {lead} at {lambda} for {g}"
        )));
    };
    weyl_memo().insert(key, chi.clone());
    Ok(chi)
}

/// The series entry `h_k`: `char(V_k)` in the orthogonal case and
/// `sum_r char(V_{k-2r})` in the symplectic case. Negative `k` yields 0
/// (the convention used inside Jacobi-Trudi determinants).
pub fn h_char(g: &GroupInstance, k: i64) -> Result<LaurentPoly> {
    let r = g.rank();
    if k < 0 {
        return Ok(LaurentPoly::zero(r));
    }
    let k = k as u32;
    match g.family() {
        ClassicalFamily::B | ClassicalFamily::D => weyl_character(g, &Partition::row(k)),
        ClassicalFamily::C => {
            let mut acc = LaurentPoly::zero(r);
            let mut m = k as i64;
            while m >= 0 {
                acc += &weyl_character(g, &Partition::row(m as u32))?;
                m -= 2;
            }
            Ok(acc)
        }
    }
}

type RatPoly = BTreeMap<Vec<i64>, BigRational>;

fn rat_from(f: &LaurentPoly) -> RatPoly {
    f.terms()
        .map(|(e, c)| (e.clone(), BigRational::from_integer(c.clone())))
        .collect()
}

fn rat_add_scaled(acc: &mut RatPoly, f: &RatPoly, scale: &BigRational) {
    for (e, c) in f {
        let v = acc.entry(e.clone()).or_insert_with(BigRational::zero);
        *v += c * scale;
        if v.is_zero() {
            acc.remove(e);
        }
    }
}

fn rat_mul(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let mut out = RatPoly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<i64> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            let v = out.entry(e).or_insert_with(BigRational::zero);
            *v += ca * cb;
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn rat_to_int(f: &RatPoly, arity: usize) -> Result<LaurentPoly> {
    let mut out = LaurentPoly::zero(arity);
    for (e, c) in f {
        if !c.is_integer() {
            return Err(Error::NonIntegral);
        }
        out.insert_add(e.clone(), c.to_integer());
    }
    Ok(out)
}

/// Character of the `s`-th exterior power of the representation with
/// character `f`, through Newton's recurrence
/// `s e_s = sum_m (-1)^{m-1} p_m e_{s-m}` with `p_m(f) = f(x^m)`.
/// The intermediate arithmetic is rational; a fractional final coefficient
/// signals that `f` was not a genuine character.
pub fn wedge_power_char(f: &LaurentPoly, s: usize) -> Result<LaurentPoly> {
    let arity = f.arity();
    if s == 0 {
        return Ok(LaurentPoly::one(arity));
    }
    let powers: Vec<RatPoly> = (1..=s)
        .map(|m| rat_from(&f.substitute_power(m as u32)))
        .collect();
    let mut elem: Vec<RatPoly> = Vec::with_capacity(s + 1);
    let mut one = RatPoly::new();
    one.insert(vec![0i64; arity], BigRational::one());
    elem.push(one);
    for t in 1..=s {
        let mut acc = RatPoly::new();
        for m in 1..=t {
            let prod = rat_mul(&powers[m - 1], &elem[t - m]);
            let sign = if m % 2 == 1 {
                BigRational::one()
            } else {
                -BigRational::one()
            };
            rat_add_scaled(&mut acc, &prod, &sign);
        }
        let inv_t = BigRational::new(BigInt::one(), BigInt::from(t as i64));
        let mut scaled = RatPoly::new();
        rat_add_scaled(&mut scaled, &acc, &inv_t);
        elem.push(scaled);
    }
    rat_to_int(&elem[s], arity)
}

/// Character of `Sym^2` of the representation with character `f`.
pub fn sym_square_char(f: &LaurentPoly) -> Result<LaurentPoly> {
    let sq = f * f;
    let p2 = f.substitute_power(2);
    (&sq + &p2).div_scalar(&BigInt::from(2))
}

fn is_dominant(e: &[i64]) -> bool {
    e.windows(2).all(|w| w[0] >= w[1]) && e.last().is_none_or(|&x| x >= 0)
}

/// Writes a Weyl-group-symmetric `f` as an integer combination of the
/// characters `weyl_character(g, nu)` by iterated subtraction at the
/// lexicographically largest (hence dominance-maximal) dominant monomial.
pub fn decompose(f: &LaurentPoly, g: &GroupInstance) -> Result<BTreeMap<Partition, BigInt>> {
    let r = g.rank();
    if f.arity() != r {
        return Err(Error::ArityMismatch {
            left: f.arity(),
            right: r,
        });
    }
    let mut rem = f.clone();
    let mut out = BTreeMap::new();
    let mut last_lead: Option<Vec<i64>> = None;
    while let Some((e, c)) = rem.leading_term() {
        let e = e.clone();
        let c = c.clone();
        if !is_dominant(&e) {
            return Err(Error::NotACharacter(format!(
                "leading monomial {e:?} is not dominant"
            )));
        }
        if let Some(prev) = &last_lead {
            if &e >= prev {
                return Err(Error::NotACharacter(
                    "subtraction made no progress".to_string(),
                ));
            }
        }
        let nu = Partition::new(e.iter().map(|&x| x as u32).collect())
            .expect("dominant exponent vector is a partition");
        let chi = weyl_character(g, &nu)?;
        rem -= &chi.scale(&c);
        out.insert(nu, c);
        last_lead = Some(e);
    }
    Ok(out)
}
