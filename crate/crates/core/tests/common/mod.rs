//! Shared helpers for the integration suites: an independent
//! monomial-expansion route to Schur arithmetic, used to cross-check the
//! tableau-based Littlewood-Richardson kernel.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use jtchar_core::{partitions_of, Partition};

pub type MonoPoly = BTreeMap<Vec<u32>, BigInt>;

/// The Schur polynomial s_lambda(x_1..x_n) as a map from exponent vectors
/// to coefficients, via row-by-row semistandard tableau enumeration.
pub fn schur_monomials(lambda: &Partition, n: usize) -> MonoPoly {
    let mut out = MonoPoly::new();
    if lambda.len() > n {
        return out;
    }
    let shape: Vec<usize> = lambda.parts().iter().map(|&p| p as usize).collect();
    let mut rows: Vec<Vec<u32>> = shape.iter().map(|&w| vec![0; w]).collect();

    fn fill(
        r: usize,
        c: usize,
        shape: &[usize],
        n: u32,
        rows: &mut Vec<Vec<u32>>,
        out: &mut MonoPoly,
    ) {
        if r == shape.len() {
            let mut exps = vec![0u32; n as usize];
            for row in rows.iter() {
                for &v in row {
                    exps[(v - 1) as usize] += 1;
                }
            }
            *out.entry(exps).or_insert_with(BigInt::zero) += 1;
            return;
        }
        let (nr, nc) = if c + 1 == shape[r] { (r + 1, 0) } else { (r, c + 1) };
        let mut lo = 1;
        if c > 0 {
            lo = lo.max(rows[r][c - 1]);
        }
        if r > 0 && c < shape[r - 1] {
            lo = lo.max(rows[r - 1][c] + 1);
        }
        for v in lo..=n {
            rows[r][c] = v;
            fill(nr, nc, shape, n, rows, out);
        }
    }

    if shape.is_empty() {
        out.insert(vec![0; n], BigInt::from(1));
    } else {
        fill(0, 0, &shape, n as u32, &mut rows, &mut out);
    }
    out
}

pub fn multiply(f: &MonoPoly, g: &MonoPoly) -> MonoPoly {
    let mut out = MonoPoly::new();
    for (ea, ca) in f {
        for (eb, cb) in g {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
            *out.entry(e).or_insert_with(BigInt::zero) += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Extracts the Schur expansion of a symmetric monomial polynomial of
/// homogeneous degree d in n >= d variables. Candidates are processed in
/// decreasing lexicographic order; the transition matrix from Schur
/// polynomials to monomials is unitriangular in that order, so the
/// coefficient of s_mu is simply the remaining coefficient at x^mu.
pub fn schur_expand(mut f: MonoPoly, d: u32, n: usize) -> BTreeMap<Partition, BigInt> {
    let mut candidates = partitions_of(d);
    candidates.sort_by(|a, b| b.parts().cmp(a.parts()));
    let mut out = BTreeMap::new();
    for mu in candidates {
        let mut key = vec![0u32; n];
        for (i, &p) in mu.parts().iter().enumerate() {
            key[i] = p;
        }
        let c = match f.get(&key) {
            Some(c) => c.clone(),
            None => continue,
        };
        let s = schur_monomials(&mu, n);
        for (e, sc) in &s {
            let entry = f.entry(e.clone()).or_insert_with(BigInt::zero);
            *entry -= &c * sc;
        }
        f.retain(|_, v| !v.is_zero());
        out.insert(mu, c);
    }
    assert!(f.is_empty(), "leftover monomials after Schur extraction");
    out
}
