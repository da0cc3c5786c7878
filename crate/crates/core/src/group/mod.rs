//! Finite groups given by explicit Cayley tables.
//!
//! Every [`Group`] is validated on construction: identity, inverses, the
//! Latin-square property and associativity (exhaustively, `O(n^3)`). The
//! identity always sits at index 0.

mod families;
mod products;

pub use families::{cyclic, dicyclic, dihedral, metacyclic};
pub use products::{central_product, cyclic_action, direct_product, semidirect_product};

use fixedbitset::FixedBitSet;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("empty Cayley table")]
    Empty,
    #[error("Cayley table is not square: row {row} has {len} entries, expected {order}")]
    NotSquare { row: usize, len: usize, order: usize },
    #[error("entry table[{row}][{col}] = {value} is out of range for order {order}")]
    EntryOutOfRange { row: usize, col: usize, value: usize, order: usize },
    #[error("no identity element")]
    NoIdentity,
    #[error("element {element} has no inverse")]
    NoInverse { element: usize },
    #[error("row or column {index} is not a permutation (value {value} repeats)")]
    NotLatinSquare { index: usize, value: usize },
    #[error("associativity fails for ({a}*{b})*{c} != {a}*({b}*{c})")]
    AssociativityViolation { a: usize, b: usize, c: usize },
    #[error("expected {expected} element names, got {found}")]
    NameCount { expected: usize, found: usize },
    #[error("duplicate element name {0:?}")]
    DuplicateName(String),
    #[error("invalid element name {0:?}")]
    InvalidName(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("twist {t} does not satisfy t^2 = 1 (mod {m})")]
    InvalidTwist { m: u64, t: i64 },
    #[error("action of element {element} is not an automorphism")]
    NotAutomorphism { element: usize },
    #[error("action is not a homomorphism at ({a}, {b})")]
    NotHomomorphism { a: usize, b: usize },
    #[error("element {element} is not central")]
    NotCentral { element: usize },
    #[error("central elements have different orders ({left} vs {right})")]
    OrderMismatch { left: usize, right: usize },
}

/// A finite group stored as a validated Cayley table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Group {
    order: usize,
    table: Vec<usize>,
    names: Vec<String>,
}

impl Group {
    /// Validates `table` (with `table[i][j]` the index of `i*j`) and builds a
    /// group. The identity is relabelled to index 0 if it sits elsewhere.
    pub fn from_cayley_table(
        table: Vec<Vec<usize>>,
        names: Option<Vec<String>>,
    ) -> Result<Self, GroupError> {
        let order = table.len();
        if order == 0 {
            return Err(GroupError::Empty);
        }
        for (row, entries) in table.iter().enumerate() {
            if entries.len() != order {
                return Err(GroupError::NotSquare { row, len: entries.len(), order });
            }
        }
        Self::from_flat(order, table.into_iter().flatten().collect(), names)
    }

    pub(crate) fn from_flat(
        order: usize,
        mut table: Vec<usize>,
        names: Option<Vec<String>>,
    ) -> Result<Self, GroupError> {
        if order == 0 {
            return Err(GroupError::Empty);
        }
        debug_assert_eq!(table.len(), order * order);
        for (idx, &value) in table.iter().enumerate() {
            if value >= order {
                return Err(GroupError::EntryOutOfRange {
                    row: idx / order,
                    col: idx % order,
                    value,
                    order,
                });
            }
        }
        let mut names = match names {
            Some(names) if names.len() != order => {
                return Err(GroupError::NameCount { expected: order, found: names.len() })
            }
            other => other,
        };

        let at = |t: &[usize], i: usize, j: usize| t[i * order + j];
        let identity = (0..order)
            .find(|&e| (0..order).all(|j| at(&table, e, j) == j && at(&table, j, e) == j))
            .ok_or(GroupError::NoIdentity)?;
        if identity != 0 {
            let swap = |x: usize| {
                if x == 0 {
                    identity
                } else if x == identity {
                    0
                } else {
                    x
                }
            };
            let mut relabelled = vec![0; order * order];
            for i in 0..order {
                for j in 0..order {
                    relabelled[swap(i) * order + swap(j)] = swap(at(&table, i, j));
                }
            }
            table = relabelled;
            if let Some(names) = names.as_mut() {
                names.swap(0, identity);
            }
        }

        for i in 0..order {
            if !(0..order).any(|j| at(&table, i, j) == 0) {
                return Err(GroupError::NoInverse { element: i });
            }
        }
        let mut seen = FixedBitSet::with_capacity(order);
        for i in 0..order {
            seen.clear();
            for j in 0..order {
                if seen.put(at(&table, i, j)) {
                    return Err(GroupError::NotLatinSquare { index: i, value: at(&table, i, j) });
                }
            }
            seen.clear();
            for j in 0..order {
                if seen.put(at(&table, j, i)) {
                    return Err(GroupError::NotLatinSquare { index: i, value: at(&table, j, i) });
                }
            }
        }
        for a in 0..order {
            for b in 0..order {
                let ab = at(&table, a, b);
                for c in 0..order {
                    if at(&table, ab, c) != at(&table, a, at(&table, b, c)) {
                        return Err(GroupError::AssociativityViolation { a, b, c });
                    }
                }
            }
        }

        let names = match names {
            Some(names) => {
                let mut sorted: Vec<&String> = names.iter().collect();
                sorted.sort();
                for pair in sorted.windows(2) {
                    if pair[0] == pair[1] {
                        return Err(GroupError::DuplicateName(pair[0].clone()));
                    }
                }
                if let Some(bad) =
                    names.iter().find(|n| n.is_empty() || n.chars().any(char::is_whitespace))
                {
                    return Err(GroupError::InvalidName(bad.clone()));
                }
                names
            }
            None => (0..order)
                .map(|i| if i == 0 { "e".to_string() } else { format!("g{i}") })
                .collect(),
        };
        Ok(Group { order, table, names })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order).find(|&b| self.mul(a, b) == 0).expect("validated group has inverses")
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn element_by_name(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Row `a` of the Cayley table.
    pub fn row(&self, a: usize) -> &[usize] {
        &self.table[a * self.order..(a + 1) * self.order]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[usize]> {
        self.table.chunks(self.order)
    }

    #[inline]
    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.commute(a, b)))
    }

    /// Smallest `k >= 1` with `a^k = e`.
    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// `a^k` for `k >= 0`.
    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, a))
    }

    pub fn center(&self) -> ElementSet {
        ElementSet::from_predicate(self.order, |z| (0..self.order).all(|g| self.commute(z, g)))
    }

    pub fn centralizer(&self, g: usize) -> ElementSet {
        assert!(g < self.order, "element {g} out of range");
        ElementSet::from_predicate(self.order, |x| self.commute(x, g))
    }

    pub fn is_central(&self, g: usize) -> bool {
        (0..self.order).all(|x| self.commute(x, g))
    }
}

/// A set of elements of a group of known order, e.g. a center or centralizer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementSet {
    members: Vec<usize>,
    mask: FixedBitSet,
}

impl ElementSet {
    fn from_predicate(order: usize, mut keep: impl FnMut(usize) -> bool) -> Self {
        let mut mask = FixedBitSet::with_capacity(order);
        let members: Vec<usize> = (0..order).filter(|&x| keep(x)).collect();
        for &m in &members {
            mask.insert(m);
        }
        ElementSet { members, mask }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, element: usize) -> bool {
        self.mask.contains(element)
    }

    /// Members in increasing index order.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn mask(&self) -> &FixedBitSet {
        &self.mask
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.mask.is_subset(&other.mask)
    }

    pub fn union_len(&self, other: &ElementSet) -> usize {
        self.mask.union_count(&other.mask)
    }

    pub fn intersection_len(&self, other: &ElementSet) -> usize {
        self.mask.intersection_count(&other.mask)
    }

    /// Closure under the group product.
    pub fn is_closed_in(&self, group: &Group) -> bool {
        self.members
            .iter()
            .all(|&a| self.members.iter().all(|&b| self.contains(group.mul(a, b))))
    }
}
