//! The stable character ring: universal-character bases `s_[lambda]` for
//! the orthogonal and symplectic families, the Littlewood change-of-basis
//! identities, stable branching multiplicities, and the transpose
//! involutions on universal characters.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::group::{ClassicalFamily, GroupInstance};
use crate::partitions::{partitions_of, q_members, FamilySign, Partition};
use crate::schur::{lr_coefficient, SymFunc};

/// The orthogonal or symplectic family of universal characters.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Family {
    O,
    Sp,
}

impl Family {
    pub fn opposite(self) -> Family {
        match self {
            Family::O => Family::Sp,
            Family::Sp => Family::O,
        }
    }

    /// The family whose characters a given finite-rank group carries.
    pub fn of_group(g: &GroupInstance) -> Family {
        match g.family() {
            ClassicalFamily::B | ClassicalFamily::D => Family::O,
            ClassicalFamily::C => Family::Sp,
        }
    }

    /// Sign of the `Q` set appearing in this family's Littlewood identity:
    /// `Q_1` for O, `Q_{-1}` for Sp.
    pub fn littlewood_sign(self) -> FamilySign {
        match self {
            Family::O => FamilySign::Plus,
            Family::Sp => FamilySign::Minus,
        }
    }

    fn basis_tag(self) -> &'static str {
        match self {
            Family::O => "universal-O",
            Family::Sp => "universal-Sp",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::O => write!(f, "O"),
            Family::Sp => write!(f, "Sp"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> std::result::Result<Self, Error> {
        match s.trim() {
            "O" | "o" => Ok(Family::O),
            "Sp" | "sp" | "SP" => Ok(Family::Sp),
            other => Err(Error::InvalidFamily(other.to_string())),
        }
    }
}

/// A finite integer-linear combination of universal characters
/// `s_[lambda]` of one family.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UniversalChar {
    family: Family,
    terms: BTreeMap<Partition, BigInt>,
}

impl UniversalChar {
    pub fn zero(family: Family) -> Self {
        UniversalChar {
            family,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(family: Family, lambda: Partition) -> Self {
        let mut out = UniversalChar::zero(family);
        out.insert_add(lambda, BigInt::one());
        out
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, lambda: &Partition) -> BigInt {
        self.terms
            .get(lambda)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
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

    /// The Koike-Terada involution `i_O` / `i_Sp`: transposes every basis
    /// index. It is an algebra automorphism of the stable ring; here it is
    /// realized by its action on the basis.
    pub fn involution(&self) -> UniversalChar {
        let mut out = UniversalChar::zero(self.family);
        for (lam, c) in &self.terms {
            out.insert_add(lam.transpose(), c.clone());
        }
        out
    }

    /// Expands into the Schur basis through the Littlewood identities,
    /// extended linearly.
    pub fn littlewood_expand(&self) -> SymFunc {
        let mut out = SymFunc::zero();
        for (lam, c) in &self.terms {
            out += &littlewood_expand(lam, self.family).scale(c);
        }
        out
    }
}

impl fmt::Display for UniversalChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut entries: Vec<(&Partition, &BigInt)> = self.terms.iter().collect();
        entries.sort_by(|a, b| a.0.cmp_size_lex(b.0));
        let mut first = true;
        for (lam, c) in entries {
            use num_traits::Signed;
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
                write!(f, "s{}[{}]", self.family, lam)?;
            } else {
                write!(f, "{}*s{}[{}]", abs, self.family, lam)?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct UniTermJson {
    partition: Vec<u32>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct UniJson {
    basis: String,
    terms: Vec<UniTermJson>,
}

impl Serialize for UniversalChar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = crate::schur::terms_to_json(&self.terms)
            .into_iter()
            .map(|(partition, coeff)| UniTermJson { partition, coeff })
            .collect();
        UniJson {
            basis: self.family.basis_tag().to_string(),
            terms,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for UniversalChar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = UniJson::deserialize(deserializer)?;
        let family = match raw.basis.as_str() {
            "universal-O" => Family::O,
            "universal-Sp" => Family::Sp,
            other => return Err(D::Error::custom(format!("unexpected basis {other}"))),
        };
        let mut out = UniversalChar::zero(family);
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

/// The Littlewood identity: the Schur expansion of `s_[lambda]`,
/// `sum_{mu in Q} (-1)^{|mu|/2} sum_nu c^lambda_{mu,nu} s_nu`
/// with `Q = Q_1` for the orthogonal family and `Q_{-1}` for the
/// symplectic one. The `mu` sum is finite since `mu ⊆ lambda`.
pub fn littlewood_expand(lambda: &Partition, family: Family) -> SymFunc {
    let mut out = SymFunc::zero();
    for mu in q_members(family.littlewood_sign(), lambda.size()) {
        if !lambda.contains(&mu) {
            continue;
        }
        let sign = if (mu.size() / 2) % 2 == 0 {
            BigInt::one()
        } else {
            -BigInt::one()
        };
        for nu in partitions_of(lambda.size() - mu.size()) {
            if !lambda.contains(&nu) {
                continue;
            }
            let c = lr_coefficient(lambda, &mu, &nu);
            out.insert_add(nu, c * &sign);
        }
    }
    out
}

/// The stable branching multiplicity `d^lambda_nu`: the multiplicity of
/// `V_nu` in the Schur functor `S_lambda` of the vector representation of
/// the named family, in the stable rank range. For Sp this is
/// `sum_eta c^lambda_{nu, (2 eta)^t}`; for O it is
/// `sum_eta c^lambda_{nu, 2 eta}`.
pub fn branching_multiplicity(lambda: &Partition, nu: &Partition, family: Family) -> BigInt {
    if nu.size() > lambda.size() || !(lambda.size() - nu.size()).is_multiple_of(2) {
        return BigInt::zero();
    }
    let gap = (lambda.size() - nu.size()) / 2;
    let mut total = BigInt::zero();
    for eta in partitions_of(gap) {
        let filler = match family {
            Family::O => eta.doubled(),
            Family::Sp => eta.doubled().transpose(),
        };
        total += lr_coefficient(lambda, nu, &filler);
    }
    total
}

/// The change of basis from the Schur function `s_lambda` to universal
/// characters: `sum_nu d^lambda_nu s_[nu]`.
pub fn schur_to_universal(lambda: &Partition, family: Family) -> UniversalChar {
    let mut out = UniversalChar::zero(family);
    for nu in crate::partitions::partitions_up_to(lambda.size()) {
        let d = branching_multiplicity(lambda, &nu, family);
        out.insert_add(nu, d);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn littlewood_small_cases() {
        assert_eq!(
            littlewood_expand(&p(&[1]), Family::O),
            SymFunc::schur(p(&[1]))
        );
        let expected = &SymFunc::schur(p(&[1, 1])) - &SymFunc::one();
        assert_eq!(littlewood_expand(&p(&[1, 1]), Family::Sp), expected);
        let expected = &SymFunc::schur(p(&[2])) - &SymFunc::one();
        assert_eq!(littlewood_expand(&p(&[2]), Family::O), expected);
    }

    #[test]
    fn branching_small_cases() {
        assert_eq!(
            branching_multiplicity(&p(&[2]), &p(&[2]), Family::Sp),
            1.into()
        );
        assert_eq!(
            branching_multiplicity(&p(&[2]), &Partition::empty(), Family::Sp),
            0.into()
        );
        assert_eq!(
            branching_multiplicity(&p(&[2]), &Partition::empty(), Family::O),
            1.into()
        );
        for fam in [Family::O, Family::Sp] {
            assert_eq!(branching_multiplicity(&p(&[1]), &p(&[1]), fam), 1.into());
        }
    }

    #[test]
    fn schur_to_universal_small_cases() {
        for fam in [Family::O, Family::Sp] {
            assert_eq!(
                schur_to_universal(&p(&[1]), fam),
                UniversalChar::basis(fam, p(&[1]))
            );
        }
        let mut expected = UniversalChar::basis(Family::O, p(&[2]));
        expected.insert_add(Partition::empty(), 1.into());
        assert_eq!(schur_to_universal(&p(&[2]), Family::O), expected);
        assert_eq!(
            schur_to_universal(&p(&[2]), Family::Sp),
            UniversalChar::basis(Family::Sp, p(&[2]))
        );
    }

    #[test]
    fn involution_examples() {
        let u = UniversalChar::basis(Family::O, p(&[2]));
        assert_eq!(u.involution(), UniversalChar::basis(Family::O, p(&[1, 1])));
        let mut v = UniversalChar::basis(Family::Sp, p(&[3, 1]));
        v.insert_add(p(&[2]), (-4).into());
        assert_eq!(v.involution().involution(), v);
    }

    #[test]
    fn round_trip_through_littlewood() {
        for lam in crate::partitions::partitions_up_to(6) {
            for fam in [Family::O, Family::Sp] {
                let u = schur_to_universal(&lam, fam);
                assert_eq!(
                    u.littlewood_expand(),
                    SymFunc::schur(lam.clone()),
                    "round trip fails at {lam:?} {fam:?}"
                );
            }
        }
    }

    #[test]
    fn duality_omega() {
        for lam in crate::partitions::partitions_up_to(6) {
            let lhs = littlewood_expand(&lam, Family::Sp).omega();
            let rhs = littlewood_expand(&lam.transpose(), Family::O);
            assert_eq!(lhs, rhs, "duality fails at {lam:?}");
        }
    }

    #[test]
    fn involution_sends_h_expansion_to_column() {
        // the universal expansion of the series entry h_k maps to s_[1^k]
        // under the involution, in both families
        for k in 1u32..=4 {
            // orthogonal: h_k = s^O_[(k)]
            let u = UniversalChar::basis(Family::O, Partition::row(k));
            assert_eq!(
                u.involution(),
                UniversalChar::basis(Family::O, Partition::rect(1, k as usize))
            );
            // symplectic: h_k = sum_r s^Sp_[(k-2r)]
            let mut u = UniversalChar::zero(Family::Sp);
            let mut m = k as i64;
            while m >= 0 {
                u.insert_add(Partition::row(m as u32), 1.into());
                m -= 2;
            }
            let mut expected = UniversalChar::zero(Family::Sp);
            let mut m = k as i64;
            while m >= 0 {
                expected.insert_add(Partition::rect(1, m as usize), 1.into());
                m -= 2;
            }
            assert_eq!(u.involution(), expected);
        }
    }

    #[test]
    fn json_round_trip() {
        let mut u = UniversalChar::basis(Family::Sp, p(&[2, 1]));
        u.insert_add(Partition::empty(), (-2).into());
        let s = serde_json::to_string(&u).unwrap();
        assert!(s.contains("universal-Sp"));
        let back: UniversalChar = serde_json::from_str(&s).unwrap();
        assert_eq!(u, back);
    }
}
