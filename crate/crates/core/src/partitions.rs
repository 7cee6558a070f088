//! Partitions, the transpose involution, and the inductively defined
//! families `Q_{-1}` / `Q_1` that index exterior powers of `Wedge^2` and
//! `Sym^2`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::group::{ClassicalFamily, GroupInstance};

/// A weakly decreasing sequence of positive integers. The empty sequence is
/// the zero partition. Trailing zeros are never stored.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// The empty partition.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition from its parts. Zero parts are stripped; the
    /// remaining parts must be weakly decreasing.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts must be weakly decreasing: {parts:?}"
            )));
        }
        let parts: Vec<u32> = parts.into_iter().take_while(|&p| p > 0).collect();
        Ok(Partition { parts })
    }

    /// The rectangle `a^b`: `b` copies of `a`.
    pub fn rect(a: u32, b: usize) -> Self {
        if a == 0 {
            return Partition::empty();
        }
        Partition { parts: vec![a; b] }
    }

    /// One-row partition `(k)`; `(0)` is the empty partition.
    pub fn row(k: u32) -> Self {
        Partition::rect(k, 1)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// `|lambda|`, the number of boxes.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// `l(lambda)`, the number of (nonzero) parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Containment of Young diagrams: `mu_i <= lambda_i` for all `i`.
    pub fn contains(&self, other: &Partition) -> bool {
        other
            .parts
            .iter()
            .enumerate()
            .all(|(i, &p)| self.part(i) >= p)
    }

    /// The transpose partition: `result_i = #{j | lambda_j >= i}`.
    pub fn transpose(&self) -> Partition {
        let cols = self.part(0) as usize;
        let mut parts = Vec::with_capacity(cols);
        for i in 1..=cols {
            parts.push(self.parts.iter().filter(|&&p| p as usize >= i).count() as u32);
        }
        Partition { parts }
    }

    /// Each part doubled; used for the even-row partitions `2 eta`.
    pub fn doubled(&self) -> Partition {
        Partition {
            parts: self.parts.iter().map(|&p| 2 * p).collect(),
        }
    }

    /// Parts as exponent vector padded with zeros to the given arity.
    pub fn to_exponents(&self, arity: usize) -> Vec<i64> {
        let mut e = vec![0i64; arity];
        for (i, &p) in self.parts.iter().enumerate() {
            e[i] = p as i64;
        }
        e
    }

    /// Orders by `(size, lexicographic)`; the deterministic order used for
    /// returned lists.
    pub fn cmp_size_lex(&self, other: &Partition) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.parts.cmp(&other.parts))
    }

    /// Membership in `Q_{-1}` (sign -1) or `Q_1` (sign +1).
    ///
    /// A nonempty partition lies in `Q_{-1}` iff its row count is one more
    /// than its column count and deleting the first row and column leaves a
    /// member. `Q_1` is the set of transposes of `Q_{-1}` members.
    pub fn is_q_member(&self, sign: FamilySign) -> bool {
        match sign {
            FamilySign::Plus => self.transpose().is_q_member(FamilySign::Minus),
            FamilySign::Minus => {
                if self.is_empty() {
                    return true;
                }
                if self.len() != self.parts[0] as usize + 1 {
                    return false;
                }
                self.strip_first_row_col().is_q_member(FamilySign::Minus)
            }
        }
    }

    fn strip_first_row_col(&self) -> Partition {
        let parts: Vec<u32> = self.parts[1..]
            .iter()
            .map(|&p| p - 1)
            .take_while(|&p| p > 0)
            .collect();
        Partition { parts }
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses the comma-separated form, e.g. `"3,1,1"`; `"0"` and `""` are
    /// the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for piece in s.split(',') {
            let p: u32 = piece
                .trim()
                .parse()
                .map_err(|_| Error::InvalidPartition(s.to_string()))?;
            parts.push(p);
        }
        Partition::new(parts).map_err(|_| Error::InvalidPartition(s.to_string()))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(deserializer)?;
        Partition::new(parts).map_err(|e| D::Error::custom(e.to_string()))
    }
}

/// Selects `Q_1` (symmetric-square side) or `Q_{-1}` (exterior-square side).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum FamilySign {
    Plus,
    Minus,
}

impl FamilySign {
    pub fn opposite(self) -> FamilySign {
        match self {
            FamilySign::Plus => FamilySign::Minus,
            FamilySign::Minus => FamilySign::Plus,
        }
    }
}

impl FromStr for FamilySign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "+1" | "1" | "+" => Ok(FamilySign::Plus),
            "-1" | "-" => Ok(FamilySign::Minus),
            other => Err(Error::InvalidFamily(other.to_string())),
        }
    }
}

impl fmt::Display for FamilySign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySign::Plus => write!(f, "+1"),
            FamilySign::Minus => write!(f, "-1"),
        }
    }
}

/// All members of `Q_{sign}` of size at most `max_size`, sorted by
/// `(size, lex)`.
///
/// Members are generated directly by the inductive definition: every
/// nonempty member of `Q_{-1}` arises uniquely by wrapping a first row of
/// length `m` and a first column around a smaller member.
pub fn q_members(sign: FamilySign, max_size: u32) -> Vec<Partition> {
    let mut members = vec![Partition::empty()];
    let mut frontier = vec![Partition::empty()];
    while let Some(kappa) = frontier.pop() {
        // Wrapping kappa with first row m yields size |kappa| + 2m; the new
        // first row must strictly cover kappa's first row.
        let low = kappa.part(0) + 1;
        let mut m = low;
        while kappa.size() + 2 * m <= max_size {
            let mut parts = vec![m];
            parts.extend(kappa.parts().iter().map(|&p| p + 1));
            parts.extend(std::iter::repeat_n(1, m as usize - kappa.len()));
            let mu = Partition { parts };
            debug_assert!(mu.is_q_member(FamilySign::Minus));
            frontier.push(mu.clone());
            members.push(mu);
            m += 1;
        }
    }
    if sign == FamilySign::Plus {
        for mu in &mut members {
            *mu = mu.transpose();
        }
    }
    members.sort_by(|a, b| a.cmp_size_lex(b));
    members
}

/// All partitions of exactly `n`, in lex order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut buf = Vec::new();
    fn rec(remaining: u32, max_part: u32, buf: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: buf.clone() });
            return;
        }
        let top = remaining.min(max_part);
        for p in (1..=top).rev() {
            buf.push(p);
            rec(remaining - p, p, buf, out);
            buf.pop();
        }
    }
    rec(n, n, &mut buf, &mut out);
    out.sort();
    out
}

/// All partitions of size at most `n`, sorted by `(size, lex)`.
pub fn partitions_up_to(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    for k in 0..=n {
        out.extend(partitions_of(k));
    }
    out
}

/// All sub-partitions `nu` with `nu ⊆ lambda`.
pub fn sub_partitions(lambda: &Partition) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut buf: Vec<u32> = Vec::new();
    fn rec(lambda: &Partition, row: usize, buf: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if row == lambda.len() {
            out.push(Partition {
                parts: buf.iter().copied().take_while(|&p| p > 0).collect(),
            });
            return;
        }
        let cap = lambda.part(row).min(buf.last().copied().unwrap_or(u32::MAX));
        for p in (0..=cap).rev() {
            if p == 0 {
                // remaining rows are forced to zero
                out.push(Partition {
                    parts: buf.iter().copied().take_while(|&q| q > 0).collect(),
                });
                return;
            }
            buf.push(p);
            rec(lambda, row + 1, buf, out);
            buf.pop();
        }
    }
    rec(lambda, 0, &mut buf, &mut out);
    out.sort();
    out.dedup();
    out
}

/// Coefficients of the fundamental weights of the highest weight(s) of
/// `V_lambda`, per the group/partition dictionary. In type D with
/// `lambda_rank > 0`, both constituents' coefficient vectors are returned.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum HighestWeight {
    Single(Vec<u32>),
    Pair(Vec<u32>, Vec<u32>),
}

#[allow(clippy::needless_range_loop)]
pub fn highest_weight(lambda: &Partition, g: &GroupInstance) -> Result<HighestWeight> {
    let r = g.rank();
    if lambda.len() > r {
        return Err(Error::RankTooSmall {
            length: lambda.len(),
            rank: r,
        });
    }
    let mut coeffs = vec![0u32; r];
    for i in 0..r.saturating_sub(1) {
        coeffs[i] = lambda.part(i) - lambda.part(i + 1);
    }
    match g.family() {
        ClassicalFamily::C => {
            coeffs[r - 1] = lambda.part(r - 1);
            Ok(HighestWeight::Single(coeffs))
        }
        ClassicalFamily::B => {
            coeffs[r - 1] = 2 * lambda.part(r - 1);
            Ok(HighestWeight::Single(coeffs))
        }
        ClassicalFamily::D => {
            let last = lambda.part(r - 1);
            let prev = lambda.part(r.wrapping_sub(2));
            if last == 0 {
                if r >= 2 {
                    coeffs[r - 2] = prev;
                }
                coeffs[r - 1] = prev;
                Ok(HighestWeight::Single(coeffs))
            } else {
                let mut a = coeffs.clone();
                let mut b = coeffs;
                if r >= 2 {
                    a[r - 2] = prev - last;
                    b[r - 2] = prev + last;
                }
                a[r - 1] = prev + last;
                b[r - 1] = prev - last;
                Ok(HighestWeight::Pair(a, b))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupInstance;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(p(&[3, 1]).transpose(), p(&[2, 1, 1]));
        assert_eq!(Partition::empty().transpose(), Partition::empty());
        assert_eq!(p(&[2, 2, 2]).transpose(), p(&[3, 3]));
    }

    #[test]
    fn transpose_is_involutive() {
        for lam in partitions_up_to(12) {
            assert_eq!(lam.transpose().transpose(), lam);
        }
    }

    #[test]
    fn q_membership_examples() {
        assert!(p(&[2, 1, 1]).is_q_member(FamilySign::Minus));
        assert!(!p(&[1, 1]).is_q_member(FamilySign::Plus));
        assert!(Partition::empty().is_q_member(FamilySign::Minus));
        assert!(Partition::empty().is_q_member(FamilySign::Plus));
    }

    #[test]
    fn q_members_golden() {
        let minus4 = q_members(FamilySign::Minus, 4);
        assert_eq!(minus4, vec![Partition::empty(), p(&[1, 1]), p(&[2, 1, 1])]);
        let plus4 = q_members(FamilySign::Plus, 4);
        assert_eq!(plus4, vec![Partition::empty(), p(&[2]), p(&[3, 1])]);
        let minus6 = q_members(FamilySign::Minus, 6);
        assert_eq!(
            minus6,
            vec![
                Partition::empty(),
                p(&[1, 1]),
                p(&[2, 1, 1]),
                p(&[2, 2, 2]),
                p(&[3, 1, 1, 1])
            ]
        );
    }

    #[test]
    fn q_members_matches_filtering_and_duality() {
        let by_filter: Vec<Partition> = partitions_up_to(12)
            .into_iter()
            .filter(|mu| mu.is_q_member(FamilySign::Minus))
            .collect();
        let direct = q_members(FamilySign::Minus, 12);
        assert_eq!(direct, by_filter);
        for mu in partitions_up_to(12) {
            assert_eq!(
                mu.is_q_member(FamilySign::Plus),
                mu.transpose().is_q_member(FamilySign::Minus)
            );
        }
        for mu in &direct {
            assert_eq!(mu.size() % 2, 0);
        }
    }

    #[test]
    fn q_members_prefix_property() {
        let long = q_members(FamilySign::Minus, 12);
        for m in 0..=12 {
            let short = q_members(FamilySign::Minus, m);
            assert_eq!(short[..], long[..short.len()]);
            assert!(long[short.len()..].iter().all(|mu| mu.size() > m));
        }
    }

    #[test]
    fn q_members_frobenius_shape() {
        // A Q_{-1} member has leg = arm + 1 at every diagonal box.
        for mu in q_members(FamilySign::Minus, 12) {
            let t = mu.transpose();
            let diag = (0..mu.len()).take_while(|&i| mu.part(i) as usize > i).count();
            let boxes: i64 = (0..diag)
                .map(|i| (mu.part(i) as i64 - i as i64) + (t.part(i) as i64 - i as i64) - 1)
                .sum();
            assert_eq!(boxes, mu.size() as i64);
            for i in 0..diag {
                let arm = mu.part(i) as i64 - i as i64 - 1;
                let leg = t.part(i) as i64 - i as i64 - 1;
                assert_eq!(leg, arm + 1, "failed for {mu:?} at diagonal {i}");
            }
        }
    }

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["0", "3,1,1", "2,2", "1"] {
            let lam: Partition = s.parse().unwrap();
            assert_eq!(lam.to_string(), s);
        }
        assert!("1,2".parse::<Partition>().is_err());
        assert!("x".parse::<Partition>().is_err());
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
    }

    #[test]
    fn sub_partitions_of_small_shape() {
        let subs = sub_partitions(&p(&[2, 1]));
        assert_eq!(
            subs,
            vec![
                Partition::empty(),
                p(&[1]),
                p(&[1, 1]),
                p(&[2]),
                p(&[2, 1])
            ]
        );
    }

    #[test]
    fn highest_weight_dictionary() {
        let sp6 = GroupInstance::new(ClassicalFamily::C, 3).unwrap();
        assert_eq!(
            highest_weight(&p(&[2, 1]), &sp6).unwrap(),
            HighestWeight::Single(vec![1, 1, 0])
        );
        let o5 = GroupInstance::new(ClassicalFamily::B, 2).unwrap();
        assert_eq!(
            highest_weight(&p(&[1, 1]), &o5).unwrap(),
            HighestWeight::Single(vec![0, 2])
        );
        let o4 = GroupInstance::new(ClassicalFamily::D, 2).unwrap();
        assert_eq!(
            highest_weight(&p(&[1, 1]), &o4).unwrap(),
            HighestWeight::Pair(vec![0, 2], vec![2, 0])
        );
        assert!(highest_weight(&p(&[1, 1, 1]), &o5).is_err());
    }
}
