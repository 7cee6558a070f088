//! The theorem-specific objects: the root sets `Psi_lambda`, the index set
//! `Gamma(lambda, Psi_lambda)`, the coefficients `C^lambda_{nu,s}`, the
//! Jacobi-Trudi determinants `H_lambda`, and the verification engine for
//! the alternating-sum character formula and its supporting lemmas.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::OnceLock;

use dashmap::DashMap;
use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{ClassicalFamily, GroupInstance};
use crate::laurent::{det_laurent, LaurentPoly};
use crate::partitions::{q_members, sub_partitions, FamilySign, Partition};
use crate::schur::{lr_coefficient, SymFunc};
use crate::universal::{branching_multiplicity, littlewood_expand, Family};
use crate::weyl::{decompose, h_char, sym_square_char, wedge_power_char, weyl_character};

/// A root of the form `e_i + e_j` (with `i = j` meaning `2 e_i`), indices
/// 0-based.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Root {
    pub i: usize,
    pub j: usize,
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.i == self.j {
            write!(f, "2e{}", self.i + 1)
        } else {
            write!(f, "e{}+e{}", self.i + 1, self.j + 1)
        }
    }
}

/// The set `Psi_lambda`: roots `e_i + e_j` with `i < j <= l(lambda)` in
/// the orthogonal case and `i <= j <= l(lambda)` in the symplectic case.
pub fn psi_set(lambda: &Partition, family: Family) -> Vec<Root> {
    let l = lambda.len();
    let mut out = Vec::new();
    for i in 0..l {
        let start = match family {
            Family::O => i + 1,
            Family::Sp => i,
        };
        for j in start..l {
            out.push(Root { i, j });
        }
    }
    out
}

/// An element `(nu, s)` of `Gamma(lambda, Psi_lambda)`; always
/// `2s = |lambda| - |nu|`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct GammaEntry {
    pub nu: Partition,
    pub s: usize,
}

/// All `(nu, s)` such that `lambda - nu` is a nonnegative-integer
/// combination of `Psi_lambda` with coefficient sum `s` and `nu` is a
/// partition. Enumerated by direct search over the root coefficients.
pub fn gamma_set(lambda: &Partition, family: Family) -> BTreeSet<GammaEntry> {
    let roots = psi_set(lambda, family);
    let mut rem: Vec<i64> = lambda.parts().iter().map(|&p| p as i64).collect();
    let mut out = BTreeSet::new();

    fn rec(
        idx: usize,
        roots: &[Root],
        rem: &mut Vec<i64>,
        s: usize,
        out: &mut BTreeSet<GammaEntry>,
    ) {
        if idx == roots.len() {
            if rem.windows(2).all(|w| w[0] >= w[1]) {
                let nu = Partition::new(rem.iter().map(|&x| x as u32).collect())
                    .expect("weakly decreasing nonnegative vector");
                out.insert(GammaEntry { nu, s });
            }
            return;
        }
        let Root { i, j } = roots[idx];
        let cap = if i == j {
            rem[i] / 2
        } else {
            rem[i].min(rem[j])
        };
        for n in 0..=cap {
            if n > 0 {
                if i == j {
                    rem[i] -= 2;
                } else {
                    rem[i] -= 1;
                    rem[j] -= 1;
                }
            }
            rec(idx + 1, roots, rem, s + n as usize, out);
        }
        // restore
        if i == j {
            rem[i] += 2 * cap;
        } else {
            rem[i] += cap;
            rem[j] += cap;
        }
    }

    rec(0, &roots, &mut rem, 0, &mut out);
    out
}

/// The coefficient `C^lambda_{nu,s}` computed by the combinatorial formula:
/// a sum of Littlewood-Richardson coefficients over `Q_{-1}` (orthogonal
/// case) or `Q_1` (symplectic case) members of size `|lambda| - |nu|`.
pub fn big_c(lambda: &Partition, nu: &Partition, family: Family) -> Result<BigInt> {
    let gap = lambda.size() as i64 - nu.size() as i64;
    if gap < 0 || gap % 2 != 0 {
        return Err(Error::ParityViolation(gap));
    }
    let sign = match family {
        Family::O => FamilySign::Minus,
        Family::Sp => FamilySign::Plus,
    };
    let mut total = BigInt::zero();
    for mu in q_members(sign, gap as u32) {
        if mu.size() as i64 != gap {
            continue;
        }
        total += lr_coefficient(lambda, &mu, nu);
    }
    Ok(total)
}

#[allow(clippy::type_complexity)]
fn oracle_memo() -> &'static DashMap<(GroupInstance, Partition, usize), BTreeMap<Partition, BigInt>>
{
    static MEMO: OnceLock<DashMap<(GroupInstance, Partition, usize), BTreeMap<Partition, BigInt>>> =
        OnceLock::new();
    MEMO.get_or_init(DashMap::new)
}

/// Decomposition of `wedge^s(g) (x) V_lambda` into irreducible
/// multiplicities, where `g` is the adjoint representation: `wedge^2 V`
/// in the orthogonal case and `Sym^2 V` in the symplectic case.
fn adjoint_wedge_decomposition(
    lambda: &Partition,
    s: usize,
    g: &GroupInstance,
) -> Result<BTreeMap<Partition, BigInt>> {
    let key = (*g, lambda.clone(), s);
    if let Some(v) = oracle_memo().get(&key) {
        return Ok(v.clone());
    }
    let v = weyl_character(g, &Partition::row(1))?;
    let adjoint = match Family::of_group(g) {
        Family::O => wedge_power_char(&v, 2)?,
        Family::Sp => sym_square_char(&v)?,
    };
    let product = &wedge_power_char(&adjoint, s)? * &weyl_character(g, lambda)?;
    let dec = decompose(&product, g)?;
    oracle_memo().insert(key, dec.clone());
    Ok(dec)
}

/// The representation-theoretic definition of `C^lambda_{nu,s}`:
/// `dim hom(V_nu, wedge^s(g) (x) V_lambda)` computed by explicit character
/// arithmetic at finite rank. Independent of [`big_c`]; the two agree on
/// `Gamma` in the stable range.
pub fn big_c_oracle(
    lambda: &Partition,
    nu: &Partition,
    s: usize,
    g: &GroupInstance,
) -> Result<BigInt> {
    let r = g.rank();
    if lambda.len() > r || nu.len() > r {
        return Err(Error::RankTooSmall {
            length: lambda.len().max(nu.len()),
            rank: r,
        });
    }
    let dec = adjoint_wedge_decomposition(lambda, s, g)?;
    Ok(dec.get(nu).cloned().unwrap_or_else(BigInt::zero))
}

/// The Jacobi-Trudi determinant `H_lambda = det(h_{lambda_i - i + j})`,
/// with `h_0 = 1` and `h_k = 0` for negative `k`.
#[allow(clippy::needless_range_loop)]
pub fn jt_determinant(lambda: &Partition, g: &GroupInstance) -> Result<LaurentPoly> {
    let r = g.rank();
    if lambda.len() > r {
        return Err(Error::RankTooSmall {
            length: lambda.len(),
            rank: r,
        });
    }
    let l = lambda.len();
    if l == 0 {
        return Ok(LaurentPoly::one(r));
    }
    let mut mat = vec![vec![LaurentPoly::zero(r); l]; l];
    for i in 0..l {
        for j in 0..l {
            let k = lambda.part(i) as i64 - i as i64 + j as i64;
            mat[i][j] = h_char(g, k)?;
        }
    }
    Ok(det_laurent(&mat, r))
}

/// One named check inside a verification report; a failing check carries
/// the first differing term as witness.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// Outcome of a verification run; `ok` iff every check passed.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    pub lambda: Partition,
    pub group: String,
    pub checks: Vec<Check>,
    pub ok: bool,
}

impl VerificationReport {
    fn new(lambda: Partition, group: String) -> Self {
        VerificationReport {
            lambda,
            group,
            checks: Vec::new(),
            ok: true,
        }
    }

    fn push(&mut self, name: &str, ok: bool, witness: Option<String>) {
        self.ok &= ok;
        self.checks.push(Check {
            name: name.to_string(),
            ok,
            witness,
        });
    }

    fn absorb(&mut self, prefix: &str, other: VerificationReport) {
        for c in other.checks {
            self.ok &= c.ok;
            self.checks.push(Check {
                name: format!("{prefix}/{}", c.name),
                ok: c.ok,
                witness: c.witness,
            });
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "lambda=({}) {}: {}",
            self.lambda,
            self.group,
            if self.ok { "ok" } else { "FAILED" }
        )?;
        for c in &self.checks {
            write!(f, "  {:<40} {}", c.name, if c.ok { "ok" } else { "FAILED" })?;
            if let Some(w) = &c.witness {
                write!(f, "  (first difference: {w})")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn laurent_witness(lhs: &LaurentPoly, rhs: &LaurentPoly) -> Option<String> {
    let diff = lhs - rhs;
    diff.leading_term()
        .map(|(e, c)| format!("coefficient {c} at exponent {e:?}"))
}

fn symfunc_witness(lhs: &SymFunc, rhs: &SymFunc) -> Option<String> {
    let diff = lhs - rhs;
    diff.terms()
        .last()
        .map(|(l, c)| format!("coefficient {c} at s[{l}]"))
}

/// Verifies the main alternating-sum formula at finite rank, as exact
/// Laurent-polynomial identities:
/// (a) `sum_{(nu,s) in Gamma} (-1)^s C^lambda_{nu,s} H_nu = char(V_lambda)`;
/// (b) `H_lambda = sum_nu d^lambda_nu char(V_nu)` with the branching
///     multiplicities of the other family.
pub fn verify_main(lambda: &Partition, g: &GroupInstance) -> Result<VerificationReport> {
    verify_main_with(lambda, g, false)
}

/// Like [`verify_main`]; with `perturb` set, one coefficient of the
/// computed alternating sum is bumped by 1, which must flip the outcome.
pub fn verify_main_with(
    lambda: &Partition,
    g: &GroupInstance,
    perturb: bool,
) -> Result<VerificationReport> {
    let r = g.rank();
    if lambda.len() > r {
        return Err(Error::RankTooSmall {
            length: lambda.len(),
            rank: r,
        });
    }
    let fam = Family::of_group(g);
    let mut report = VerificationReport::new(lambda.clone(), g.to_string());

    // clause (a)
    let mut lhs = LaurentPoly::zero(r);
    for entry in gamma_set(lambda, fam) {
        let c = big_c(lambda, &entry.nu, fam)?;
        if c.is_zero() {
            continue;
        }
        let h = jt_determinant(&entry.nu, g)?;
        let signed = if entry.s % 2 == 0 { c } else { -c };
        lhs += &h.scale(&signed);
    }
    if perturb {
        if let Some((e, _)) = lhs.leading_term() {
            let e = e.clone();
            lhs.insert_add(e, 1.into());
        } else {
            lhs.insert_add(vec![0; r], 1.into());
        }
    }
    let rhs = weyl_character(g, lambda)?;
    report.push("alternating-sum", lhs == rhs, laurent_witness(&lhs, &rhs));

    // clause (b)
    let lhs_b = jt_determinant(lambda, g)?;
    let mut rhs_b = LaurentPoly::zero(r);
    for nu in sub_partitions(lambda) {
        let d = branching_multiplicity(lambda, &nu, fam.opposite());
        if d.is_zero() {
            continue;
        }
        rhs_b += &weyl_character(g, &nu)?.scale(&d);
    }
    report.push(
        "h-expansion",
        lhs_b == rhs_b,
        laurent_witness(&lhs_b, &rhs_b),
    );
    Ok(report)
}

/// Verifies the stable (infinite-rank) form of the theorem in the Schur
/// basis, plus the converse direction of the `C`-coefficient lemma: any
/// `nu` with nonzero coefficient and even size gap must lie in `Gamma`.
pub fn verify_stable(lambda: &Partition, family: Family) -> VerificationReport {
    verify_stable_with(lambda, family, false)
}

pub fn verify_stable_with(
    lambda: &Partition,
    family: Family,
    perturb: bool,
) -> VerificationReport {
    let mut report = VerificationReport::new(lambda.clone(), family.to_string());

    let lhs = littlewood_expand(&lambda.transpose(), family);
    let mut rhs = SymFunc::zero();
    let gamma = gamma_set(lambda, family);
    for entry in &gamma {
        let c = big_c(lambda, &entry.nu, family).expect("gamma entries have even gap");
        let signed = if entry.s % 2 == 0 { c } else { -c };
        rhs += &SymFunc::schur(entry.nu.transpose()).scale(&signed);
    }
    if perturb {
        rhs += &SymFunc::one();
    }
    report.push(
        "stable-alternating-sum",
        lhs == rhs,
        symfunc_witness(&lhs, &rhs),
    );

    let mut converse_ok = true;
    let mut witness = None;
    for nu in sub_partitions(lambda) {
        let gap = lambda.size() - nu.size();
        if !gap.is_multiple_of(2) {
            continue;
        }
        let c = big_c(lambda, &nu, family).expect("even gap");
        if c.is_zero() {
            continue;
        }
        let entry = GammaEntry {
            nu: nu.clone(),
            s: (gap / 2) as usize,
        };
        if !gamma.contains(&entry) {
            converse_ok = false;
            witness = Some(format!("nu=({nu}) has C={c} but (nu,{}) not in Gamma", gap / 2));
            break;
        }
    }
    report.push("gamma-converse", converse_ok, witness);
    report
}

/// Runs the finite-rank verification at each listed rank and additionally
/// asserts that the multiplicity map of `H_lambda` is identical at every
/// rank (rank-independence of the Jacobi-Trudi decomposition).
pub fn verify_rank_stability(
    lambda: &Partition,
    family: ClassicalFamily,
    ranks: &[usize],
) -> Result<VerificationReport> {
    let label = format!(
        "{}[{}]",
        family.letter(),
        ranks
            .iter()
            .map(|r| r.to_string())
            .collect::<Vec<_>>()
            .join(",")
    );
    let mut report = VerificationReport::new(lambda.clone(), label);
    let mut maps: Vec<(usize, BTreeMap<Partition, BigInt>)> = Vec::new();
    for &rank in ranks {
        let g = GroupInstance::new(family, rank)?;
        let sub = verify_main(lambda, &g)?;
        report.absorb(&g.to_string(), sub);
        let dec = decompose(&jt_determinant(lambda, &g)?, &g)?;
        maps.push((rank, dec));
    }
    let mut stable_ok = true;
    let mut witness = None;
    for pair in maps.windows(2) {
        if pair[0].1 != pair[1].1 {
            stable_ok = false;
            witness = Some(format!(
                "multiplicity maps differ between ranks {} and {}",
                pair[0].0, pair[1].0
            ));
            break;
        }
    }
    report.push("decomposition-stable", stable_ok, witness);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn g(f: ClassicalFamily, r: usize) -> GroupInstance {
        GroupInstance::new(f, r).unwrap()
    }

    #[test]
    fn psi_examples() {
        assert_eq!(
            psi_set(&p(&[1, 1]), Family::O),
            vec![Root { i: 0, j: 1 }]
        );
        assert_eq!(
            psi_set(&p(&[1, 1]), Family::Sp),
            vec![
                Root { i: 0, j: 0 },
                Root { i: 0, j: 1 },
                Root { i: 1, j: 1 }
            ]
        );
        assert!(psi_set(&p(&[1]), Family::O).is_empty());
    }

    #[test]
    fn gamma_examples() {
        for fam in [Family::O, Family::Sp] {
            let gamma = gamma_set(&p(&[1]), fam);
            assert_eq!(gamma.len(), 1);
            assert!(gamma.contains(&GammaEntry { nu: p(&[1]), s: 0 }));
        }
        let gamma = gamma_set(&p(&[1, 1]), Family::O);
        let expected: BTreeSet<GammaEntry> = [
            GammaEntry { nu: p(&[1, 1]), s: 0 },
            GammaEntry { nu: Partition::empty(), s: 1 },
        ]
        .into_iter()
        .collect();
        assert_eq!(gamma, expected);
        let gamma = gamma_set(&p(&[2, 2]), Family::Sp);
        let expected: BTreeSet<GammaEntry> = [
            GammaEntry { nu: p(&[2, 2]), s: 0 },
            GammaEntry { nu: p(&[1, 1]), s: 1 },
            GammaEntry { nu: p(&[2]), s: 1 },
            GammaEntry { nu: Partition::empty(), s: 2 },
        ]
        .into_iter()
        .collect();
        assert_eq!(gamma, expected);
    }

    #[test]
    fn gamma_parity() {
        for lam in crate::partitions::partitions_up_to(6) {
            for fam in [Family::O, Family::Sp] {
                for entry in gamma_set(&lam, fam) {
                    assert_eq!(2 * entry.s as u32, lam.size() - entry.nu.size());
                }
            }
        }
    }

    #[test]
    fn big_c_examples() {
        assert_eq!(
            big_c(&p(&[1, 1]), &Partition::empty(), Family::O).unwrap(),
            1.into()
        );
        assert_eq!(
            big_c(&p(&[1, 1]), &Partition::empty(), Family::Sp).unwrap(),
            0.into()
        );
        for lam in crate::partitions::partitions_up_to(4) {
            for fam in [Family::O, Family::Sp] {
                assert_eq!(big_c(&lam, &lam, fam).unwrap(), 1.into());
            }
        }
        assert!(big_c(&p(&[2]), &p(&[1]), Family::O).is_err());
    }

    #[test]
    fn big_c_oracle_examples() {
        let o9 = g(ClassicalFamily::B, 4);
        assert_eq!(
            big_c_oracle(&p(&[1, 1]), &Partition::empty(), 1, &o9).unwrap(),
            1.into()
        );
        let sp8 = g(ClassicalFamily::C, 4);
        assert_eq!(
            big_c_oracle(&p(&[1, 1]), &Partition::empty(), 1, &sp8).unwrap(),
            0.into()
        );
        assert_eq!(
            big_c_oracle(&p(&[2, 1]), &p(&[2, 1]), 0, &sp8).unwrap(),
            1.into()
        );
    }

    #[test]
    fn jt_examples() {
        let sp4 = g(ClassicalFamily::C, 2);
        for k in 0..4 {
            assert_eq!(
                jt_determinant(&Partition::row(k), &sp4).unwrap(),
                h_char(&sp4, k as i64).unwrap()
            );
        }
        let h1 = h_char(&sp4, 1).unwrap();
        let h2 = h_char(&sp4, 2).unwrap();
        assert_eq!(
            jt_determinant(&p(&[1, 1]), &sp4).unwrap(),
            &(&h1 * &h1) - &h2
        );
        assert_eq!(
            jt_determinant(&p(&[1, 1]), &sp4).unwrap(),
            weyl_character(&sp4, &p(&[1, 1])).unwrap()
        );
    }

    #[test]
    fn verify_main_small_instances() {
        for fam in [ClassicalFamily::B, ClassicalFamily::C, ClassicalFamily::D] {
            let grp = g(fam, 2);
            let rep = verify_main(&p(&[1]), &grp).unwrap();
            assert!(rep.ok, "{rep}");
        }
        let rep = verify_main(&p(&[1, 1]), &g(ClassicalFamily::B, 2)).unwrap();
        assert!(rep.ok, "{rep}");
        let rep = verify_main(&p(&[2, 1]), &g(ClassicalFamily::C, 3)).unwrap();
        assert!(rep.ok, "{rep}");
    }

    #[test]
    fn verify_main_perturbed_fails() {
        let rep = verify_main_with(&p(&[1, 1]), &g(ClassicalFamily::B, 2), true).unwrap();
        assert!(!rep.ok);
        assert!(rep.checks.iter().any(|c| !c.ok && c.witness.is_some()));
    }

    #[test]
    fn verify_stable_small_instances() {
        for fam in [Family::O, Family::Sp] {
            assert!(verify_stable(&p(&[1]), fam).ok);
        }
        assert!(verify_stable(&p(&[1, 1]), Family::O).ok);
        assert!(verify_stable(&p(&[2, 2]), Family::Sp).ok);
        assert!(!verify_stable_with(&p(&[2, 2]), Family::Sp, true).ok);
    }

    #[test]
    fn verify_rank_stability_small() {
        let rep = verify_rank_stability(&p(&[1, 1]), ClassicalFamily::C, &[2, 3, 4]).unwrap();
        assert!(rep.ok, "{rep}");
        let rep = verify_rank_stability(&p(&[1]), ClassicalFamily::D, &[2, 3]).unwrap();
        assert!(rep.ok, "{rep}");
    }

    #[test]
    fn report_json_shape() {
        let rep = verify_main(&p(&[1, 1]), &g(ClassicalFamily::B, 2)).unwrap();
        let s = serde_json::to_string(&rep).unwrap();
        assert!(s.contains("\"lambda\":[1,1]"));
        assert!(s.contains("\"group\":\"B2\""));
        assert!(s.contains("\"ok\":true"));
        let back: VerificationReport = serde_json::from_str(&s).unwrap();
        assert!(back.ok);
        assert_eq!(back.checks.len(), rep.checks.len());
    }
}
