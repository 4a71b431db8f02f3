//! Numerical sets: cofinite subsets of the nonnegative integers containing 0.
//!
//! A numerical set is stored through its finite gap set as a dense membership
//! table indexed `0..=frobenius`; membership above the Frobenius number is
//! implicit. The set of all nonnegative integers has Frobenius number -1 and
//! an empty table.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// Largest element value accepted in gaps and generators. Keeps membership
/// tables at a few megabytes.
pub const MAX_ELEMENT: i64 = 1 << 22;

/// A cofinite subset of the nonnegative integers that contains 0.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NumericalSet {
    /// Membership for `0..=frobenius`; empty exactly when the set is all of N0.
    member: Vec<bool>,
    frobenius: i64,
    genus: usize,
}

impl NumericalSet {
    /// The set of all nonnegative integers (no gaps, Frobenius number -1).
    pub fn nat() -> Self {
        NumericalSet {
            member: Vec::new(),
            frobenius: -1,
            genus: 0,
        }
    }

    /// Builds the numerical set whose complement is `gaps`. Entries must be
    /// positive; duplicates are tolerated.
    pub fn from_gaps<I>(gaps: I) -> Result<Self>
    where
        I: IntoIterator<Item = i64>,
    {
        let gaps: Vec<i64> = gaps.into_iter().collect();
        if gaps.is_empty() {
            return Ok(Self::nat());
        }
        let mut max = 0;
        for &g in &gaps {
            if g < 1 {
                return Err(Error::InvalidGap(g));
            }
            if g > MAX_ELEMENT {
                return Err(Error::GapTooLarge {
                    value: g,
                    limit: MAX_ELEMENT,
                });
            }
            max = max.max(g);
        }
        let mut member = vec![true; max as usize + 1];
        for &g in &gaps {
            member[g as usize] = false;
        }
        Ok(Self::from_member_table(member))
    }

    /// Builds a set from a membership table for `0..table.len()-1`. Trailing
    /// members are trimmed so the table ends at the largest gap.
    pub(crate) fn from_member_table(mut member: Vec<bool>) -> Self {
        while member.last() == Some(&true) {
            member.pop();
        }
        debug_assert!(member.first().copied().unwrap_or(true));
        let frobenius = member.len() as i64 - 1;
        let genus = member.iter().filter(|&&m| !m).count();
        NumericalSet {
            member,
            frobenius,
            genus,
        }
    }

    /// Membership test; true for every value above the Frobenius number.
    #[inline]
    pub fn contains(&self, x: i64) -> bool {
        if x < 0 {
            false
        } else if x > self.frobenius {
            true
        } else {
            self.member[x as usize]
        }
    }

    /// The largest gap, or -1 when there are no gaps.
    #[inline]
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    /// The number of gaps.
    #[inline]
    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn is_nat(&self) -> bool {
        self.frobenius == -1
    }

    /// The gaps in increasing order.
    pub fn gaps(&self) -> Vec<i64> {
        (1..=self.frobenius)
            .filter(|&x| !self.member[x as usize])
            .collect()
    }

    /// Members in `0..=bound`.
    pub fn members_up_to(&self, bound: i64) -> Vec<i64> {
        (0..=bound).filter(|&x| self.contains(x)).collect()
    }

    /// A pair of members whose sum is a gap, if any. `None` means the set is
    /// closed under addition. Only pairs at most the Frobenius number need
    /// checking; larger sums are automatically members.
    pub fn closure_witness(&self) -> Option<(i64, i64)> {
        let f = self.frobenius;
        for a in 1..=f {
            if !self.contains(a) {
                continue;
            }
            for b in a..=f - a {
                if self.contains(b) && !self.contains(a + b) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// The atom monoid `A(T) = {x : x + T is contained in T}`, computed
    /// definitionally. It is always a numerical semigroup inside `T` with the
    /// same Frobenius number; only translates `t <= F - x` need checking.
    pub fn atom_monoid(&self) -> NumericalSemigroup {
        let f = self.frobenius;
        if f < 0 {
            return NumericalSemigroup::nat();
        }
        let n = f as usize + 1;
        let mut table = vec![false; n];
        table[0] = true;
        for x in 1..n {
            let mut ok = true;
            for t in 0..n - x {
                if self.member[t] && !self.member[x + t] {
                    ok = false;
                    break;
                }
            }
            table[x] = ok;
        }
        debug_assert!(!table[f as usize]);
        NumericalSemigroup::from_set_unchecked(Self::from_member_table(table))
    }

    /// The dual `T* = {x : F(T) - x is not in T}`. Undefined for the full set.
    pub fn dual(&self) -> Result<NumericalSet> {
        let f = self.frobenius;
        if f < 0 {
            return Err(Error::DualOfNat);
        }
        let n = f as usize + 1;
        let table: Vec<bool> = (0..n).map(|x| !self.member[n - 1 - x]).collect();
        debug_assert!(table[0] && !table[f as usize]);
        Ok(Self::from_member_table(table))
    }

    /// The set `T ∪ extras`. Extras must be gaps of `T` (members are ignored).
    pub fn with_extra_members(&self, extras: &[i64]) -> NumericalSet {
        let mut table = self.member.clone();
        for &x in extras {
            debug_assert!(x >= 0 && x <= self.frobenius);
            if x >= 0 && x <= self.frobenius {
                table[x as usize] = true;
            }
        }
        Self::from_member_table(table)
    }
}

impl Ord for NumericalSet {
    /// Lexicographic order on the gap sequences; gives a canonical ordering
    /// for census tables and collections.
    fn cmp(&self, other: &Self) -> Ordering {
        let mut a = (1..=self.frobenius).filter(|&x| !self.member[x as usize]);
        let mut b = (1..=other.frobenius).filter(|&x| !other.member[x as usize]);
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some(x), Some(y)) => match x.cmp(&y) {
                    Ordering::Equal => continue,
                    ord => return ord,
                },
            }
        }
    }
}

impl PartialOrd for NumericalSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for NumericalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for x in 0..=self.frobenius {
            if self.contains(x) {
                write!(f, "{x}, ")?;
            }
        }
        write!(f, "{}->}}", self.frobenius + 1)
    }
}

impl fmt::Debug for NumericalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumericalSet({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_gap_set_is_nat() {
        let t = NumericalSet::from_gaps([]).unwrap();
        assert_eq!(t.frobenius(), -1);
        assert_eq!(t.genus(), 0);
        assert!(t.is_nat());
        assert!(t.contains(0) && t.contains(1) && t.contains(100));
    }

    #[test]
    fn gaps_1234() {
        let t = NumericalSet::from_gaps([1, 2, 3, 4]).unwrap();
        assert_eq!(t.frobenius(), 4);
        assert_eq!(t.genus(), 4);
        assert!(t.contains(0) && !t.contains(3) && t.contains(5));
        assert_eq!(t.gaps(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn gaps_124() {
        let t = NumericalSet::from_gaps([1, 2, 4]).unwrap();
        assert_eq!(t.frobenius(), 4);
        assert_eq!(t.genus(), 3);
        assert!(t.contains(3) && !t.contains(4) && t.contains(5));
    }

    #[test]
    fn rejects_nonpositive_gaps() {
        assert_eq!(
            NumericalSet::from_gaps([0, 3]).unwrap_err(),
            Error::InvalidGap(0)
        );
        assert_eq!(
            NumericalSet::from_gaps([2, -1]).unwrap_err(),
            Error::InvalidGap(-1)
        );
    }

    #[test]
    fn gap_table_trims_trailing_members() {
        // {5} alone: F = 5 even though the raw table would end at 5.
        let t = NumericalSet::from_gaps([5, 5]).unwrap();
        assert_eq!(t.frobenius(), 5);
        assert_eq!(t.genus(), 1);
    }

    #[test]
    fn atom_monoid_of_semigroup_is_itself() {
        let s = NumericalSet::from_gaps([1, 2, 3, 4]).unwrap();
        assert_eq!(s.atom_monoid().set(), &s);
        let nat = NumericalSet::nat();
        assert_eq!(nat.atom_monoid().set(), &nat);
    }

    #[test]
    fn atom_monoid_examples() {
        // T = {0,1,5->}
        let t = NumericalSet::from_gaps([2, 3, 4]).unwrap();
        assert_eq!(t.atom_monoid().gaps(), vec![1, 2, 3, 4]);
        // T = {0,2,3,4,6->} has A(T) = {0,4,6->}
        let t = NumericalSet::from_gaps([1, 5]).unwrap();
        assert_eq!(t.atom_monoid().gaps(), vec![1, 2, 3, 5]);
    }

    #[test]
    fn atom_monoid_preserves_frobenius_and_shrinks() {
        let t = NumericalSet::from_gaps([2, 5, 9]).unwrap();
        let a = t.atom_monoid();
        assert_eq!(a.frobenius(), t.frobenius());
        for x in 0..=t.frobenius() {
            if a.contains(x) {
                assert!(t.contains(x));
            }
        }
    }

    #[test]
    fn dual_examples() {
        // Symmetric semigroup is self-dual: <2,3> has gaps {1}.
        let s = NumericalSet::from_gaps([1]).unwrap();
        assert_eq!(s.dual().unwrap(), s);
        // {0,2,5->} (gaps {1,3,4}) dualizes to {0,1,3,5->} (gaps {2,4}).
        let t = NumericalSet::from_gaps([1, 3, 4]).unwrap();
        assert_eq!(t.dual().unwrap().gaps(), vec![2, 4]);
        assert_eq!(t.dual().unwrap().dual().unwrap(), t);
    }

    #[test]
    fn dual_of_nat_is_an_error() {
        assert_eq!(NumericalSet::nat().dual().unwrap_err(), Error::DualOfNat);
    }

    #[test]
    fn closure_witness_finds_smallest_pair() {
        // {0,1,5->}: 1+1=2 is missing.
        let t = NumericalSet::from_gaps([2, 3, 4]).unwrap();
        assert_eq!(t.closure_witness(), Some((1, 1)));
        // {0,5->} is closed.
        let s = NumericalSet::from_gaps([1, 2, 3, 4]).unwrap();
        assert_eq!(s.closure_witness(), None);
    }

    #[test]
    fn display_format() {
        let t = NumericalSet::from_gaps([1, 2, 3, 5, 6, 7, 9]).unwrap();
        assert_eq!(t.to_string(), "{0, 4, 8, 10->}");
        assert_eq!(NumericalSet::nat().to_string(), "{0->}");
    }

    #[test]
    fn ordering_is_lexicographic_on_gaps() {
        let a = NumericalSet::from_gaps([1, 2]).unwrap();
        let b = NumericalSet::from_gaps([1, 3]).unwrap();
        let c = NumericalSet::from_gaps([1]).unwrap();
        assert!(a < b);
        assert!(c < a);
        assert!(NumericalSet::nat() < c);
    }
}
