//! Numerical semigroups: numerical sets closed under addition.
//!
//! Derived data (minimal generators, pseudo-Frobenius numbers, void) is
//! computed lazily and cached; a semigroup value is immutable after
//! construction and safe to share across threads.

use std::collections::VecDeque;
use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::set::{NumericalSet, MAX_ELEMENT};

/// A numerical set closed under addition.
#[derive(Clone)]
pub struct NumericalSemigroup {
    set: NumericalSet,
    min_gens: OnceLock<Vec<i64>>,
    pf: OnceLock<Vec<i64>>,
    void: OnceLock<Vec<i64>>,
}

/// Position of a semigroup relative to the symmetric / almost-symmetric
/// hierarchy. Symmetric and pseudo-symmetric take precedence over the
/// catch-all almost-symmetric report.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SymmetryClass {
    Symmetric,
    PseudoSymmetric,
    AlmostSymmetricOther,
    None,
}

/// Basic invariants of a semigroup, in the shape emitted by the CLI.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Descriptors {
    pub frobenius: i64,
    pub genus: usize,
    pub multiplicity: i64,
    pub embedding_dimension: usize,
    #[serde(rename = "type")]
    pub semigroup_type: usize,
    pub pf: Vec<i64>,
    pub void: Vec<i64>,
    pub min_generators: Vec<i64>,
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl NumericalSemigroup {
    /// The semigroup of all nonnegative integers.
    pub fn nat() -> Self {
        Self::from_set_unchecked(NumericalSet::nat())
    }

    /// The semigroup generated by `gens`: all nonnegative integer
    /// combinations. Requires gcd 1 so the complement is finite.
    ///
    /// Membership is computed by dynamic programming over the residues
    /// modulo the smallest generator: for each residue the least member in
    /// that class is found by relaxation, which yields the Frobenius number
    /// without guessing an a-priori search bound.
    pub fn from_generators<I>(gens: I) -> Result<Self>
    where
        I: IntoIterator<Item = i64>,
    {
        let mut gens: Vec<i64> = gens.into_iter().collect();
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        for &g in &gens {
            if g < 1 {
                return Err(Error::InvalidGenerator(g));
            }
            if g > MAX_ELEMENT {
                return Err(Error::GeneratorTooLarge {
                    value: g,
                    limit: MAX_ELEMENT,
                });
            }
        }
        gens.sort_unstable();
        gens.dedup();
        let d = gens.iter().fold(0, |acc, &g| gcd(acc, g));
        if d != 1 {
            return Err(Error::InfiniteComplement { gcd: d });
        }
        let m = gens[0];
        if m == 1 {
            return Ok(Self::nat());
        }

        // least[r] = smallest member congruent to r mod m
        let m_us = m as usize;
        let mut least = vec![i64::MAX; m_us];
        least[0] = 0;
        let mut queue: VecDeque<usize> = VecDeque::from([0]);
        let mut queued = vec![false; m_us];
        queued[0] = true;
        while let Some(r) = queue.pop_front() {
            queued[r] = false;
            let base = least[r];
            for &g in &gens {
                let v = base + g;
                let rr = (v % m) as usize;
                if v < least[rr] {
                    least[rr] = v;
                    if !queued[rr] {
                        queued[rr] = true;
                        queue.push_back(rr);
                    }
                }
            }
        }
        let frobenius = least.iter().max().unwrap() - m;
        if frobenius > MAX_ELEMENT {
            return Err(Error::FrobeniusTooLarge {
                frobenius,
                limit: MAX_ELEMENT,
            });
        }
        let table: Vec<bool> = (0..=frobenius)
            .map(|x| x >= least[(x % m) as usize])
            .collect();
        Ok(Self::from_set_unchecked(NumericalSet::from_member_table(
            table,
        )))
    }

    /// Promotes a numerical set to a semigroup, or reports a witness pair
    /// `(a, b)` of members whose sum is missing.
    pub fn from_set(set: NumericalSet) -> Result<Self> {
        match set.closure_witness() {
            None => Ok(Self::from_set_unchecked(set)),
            Some((a, b)) => Err(Error::NotClosed { a, b }),
        }
    }

    /// Shorthand for `from_set(NumericalSet::from_gaps(..))`.
    pub fn from_gaps<I>(gaps: I) -> Result<Self>
    where
        I: IntoIterator<Item = i64>,
    {
        Self::from_set(NumericalSet::from_gaps(gaps)?)
    }

    /// Wraps a set already known to be closed under addition.
    pub(crate) fn from_set_unchecked(set: NumericalSet) -> Self {
        debug_assert!(set.closure_witness().is_none());
        NumericalSemigroup {
            set,
            min_gens: OnceLock::new(),
            pf: OnceLock::new(),
            void: OnceLock::new(),
        }
    }

    /// The underlying numerical set.
    pub fn set(&self) -> &NumericalSet {
        &self.set
    }

    #[inline]
    pub fn contains(&self, x: i64) -> bool {
        self.set.contains(x)
    }

    #[inline]
    pub fn frobenius(&self) -> i64 {
        self.set.frobenius()
    }

    #[inline]
    pub fn genus(&self) -> usize {
        self.set.genus()
    }

    pub fn gaps(&self) -> Vec<i64> {
        self.set.gaps()
    }

    pub fn is_nat(&self) -> bool {
        self.set.is_nat()
    }

    /// The smallest nonzero member.
    pub fn multiplicity(&self) -> i64 {
        (1..).find(|&x| self.contains(x)).unwrap()
    }

    /// Minimal generators: nonzero members that are not sums of two nonzero
    /// members. They all lie at most `F + multiplicity`.
    pub fn min_generators(&self) -> &[i64] {
        self.min_gens.get_or_init(|| {
            if self.is_nat() {
                return vec![1];
            }
            let m = self.multiplicity();
            let f = self.frobenius();
            let mut gens = Vec::new();
            for s in m..=f + m {
                if !self.contains(s) {
                    continue;
                }
                let mut decomposable = false;
                for a in m..=s - m {
                    if self.contains(a) && self.contains(s - a) {
                        decomposable = true;
                        break;
                    }
                }
                if !decomposable {
                    gens.push(s);
                }
            }
            gens
        })
    }

    /// The embedding dimension: the number of minimal generators.
    pub fn embedding_dimension(&self) -> usize {
        self.min_generators().len()
    }

    /// Pseudo-Frobenius numbers: gaps `P` with `P + s` a member for every
    /// nonzero member `s`. Testing minimal generators suffices by
    /// additivity; `pseudo_frobenius_definitional` is the slow cross-check.
    pub fn pseudo_frobenius(&self) -> &[i64] {
        self.pf.get_or_init(|| {
            let gens = self.min_generators().to_vec();
            self.set
                .gaps()
                .into_iter()
                .filter(|&x| gens.iter().all(|&n| self.contains(x + n)))
                .collect()
        })
    }

    /// Pseudo-Frobenius numbers computed directly from the definition, for
    /// cross-checking the generator-based computation.
    pub fn pseudo_frobenius_definitional(&self) -> Vec<i64> {
        let members: Vec<i64> = self
            .set
            .members_up_to(self.frobenius())
            .into_iter()
            .filter(|&s| s > 0)
            .collect();
        self.set
            .gaps()
            .into_iter()
            .filter(|&x| members.iter().all(|&s| self.contains(x + s)))
            .collect()
    }

    /// The type: the number of pseudo-Frobenius numbers.
    pub fn semigroup_type(&self) -> usize {
        self.pseudo_frobenius().len()
    }

    /// The void: gaps `a` whose reflection `F - a` is also a gap. Its size is
    /// always `2 * genus - frobenius - 1`.
    pub fn void(&self) -> &[i64] {
        self.void.get_or_init(|| {
            let f = self.frobenius();
            self.set
                .gaps()
                .into_iter()
                .filter(|&a| !self.contains(f - a))
                .collect()
        })
    }

    /// Symmetry classification: empty void, void `{F/2}`, other almost
    /// symmetric (`type = 2*genus - frobenius`), or none.
    pub fn classify_symmetry(&self) -> SymmetryClass {
        let void = self.void();
        if void.is_empty() {
            SymmetryClass::Symmetric
        } else if void.len() == 1 {
            debug_assert_eq!(void[0] * 2, self.frobenius());
            SymmetryClass::PseudoSymmetric
        } else if self.semigroup_type() as i64 == 2 * self.genus() as i64 - self.frobenius() {
            SymmetryClass::AlmostSymmetricOther
        } else {
            SymmetryClass::None
        }
    }

    pub fn descriptors(&self) -> Descriptors {
        Descriptors {
            frobenius: self.frobenius(),
            genus: self.genus(),
            multiplicity: self.multiplicity(),
            embedding_dimension: self.embedding_dimension(),
            semigroup_type: self.semigroup_type(),
            pf: self.pseudo_frobenius().to_vec(),
            void: self.void().to_vec(),
            min_generators: self.min_generators().to_vec(),
        }
    }
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.set == other.set
    }
}

impl Eq for NumericalSemigroup {}

impl std::hash::Hash for NumericalSemigroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.set.hash(state);
    }
}

impl PartialOrd for NumericalSemigroup {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for NumericalSemigroup {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.set.cmp(&other.set)
    }
}

impl fmt::Display for NumericalSemigroup {
    fmt_delegate!();
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumericalSemigroup({})", self.set)
    }
}
