//! Finite groups stored as dense Cayley tables.
//!
//! Elements are the indices `0..order`. Every constructor fixes a
//! deterministic element ordering so that anything serialized downstream
//! (hom listings, matrix bases) is reproducible byte for byte.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::GroupError;

/// Default ceiling on group order accepted by the named constructors.
pub const DEFAULT_MAX_ORDER: usize = 720;

/// An element of a [`FiniteGroup`], identified by its index in the Cayley table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GroupElement(pub u32);

impl GroupElement {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A finite group given by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    /// Row-major `order x order` table; `mul[a * order + b] = a * b`.
    mul: Vec<u32>,
    inv: Vec<u32>,
    identity: u32,
}

impl FiniteGroup {
    /// The cyclic group `Z_n` with `i * j = (i + j) mod n`.
    pub fn cyclic(n: usize) -> Result<Self, GroupError> {
        Self::cyclic_bounded(n, DEFAULT_MAX_ORDER)
    }

    pub fn cyclic_bounded(n: usize, max_order: usize) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::InvalidParameter("cyclic group needs n >= 1".into()));
        }
        check_order(n, max_order)?;
        let mut mul = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                mul.push(((i + j) % n) as u32);
            }
        }
        let inv = (0..n).map(|i| ((n - i) % n) as u32).collect();
        Ok(FiniteGroup { name: format!("Z{n}"), order: n, mul, inv, identity: 0 })
    }

    /// The symmetric group `S_n`.
    ///
    /// Elements are permutations of `0..n` in one-line notation, listed in
    /// lexicographic order (so index 0 is the identity). The product
    /// `p * q` is the composite "apply `q`, then `p`".
    pub fn symmetric(n: usize) -> Result<Self, GroupError> {
        Self::symmetric_bounded(n, DEFAULT_MAX_ORDER)
    }

    pub fn symmetric_bounded(n: usize, max_order: usize) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::InvalidParameter("symmetric group needs n >= 1".into()));
        }
        let order = (1..=n).try_fold(1usize, |acc, k| acc.checked_mul(k));
        match order {
            Some(order) => check_order(order, max_order)?,
            None => return Err(GroupError::TooLarge { order: usize::MAX, max: max_order }),
        }
        let perms = permutations_lex(n);
        let order = perms.len();
        let index_of = |p: &[usize]| -> u32 {
            perms.binary_search_by(|q| q.as_slice().cmp(p)).expect("closed under composition") as u32
        };
        let mut mul = Vec::with_capacity(order * order);
        let mut buf = vec![0usize; n];
        for p in &perms {
            for q in &perms {
                for k in 0..n {
                    buf[k] = p[q[k]];
                }
                mul.push(index_of(&buf));
            }
        }
        let inv = perms
            .iter()
            .map(|p| {
                for (k, &pk) in p.iter().enumerate() {
                    buf[pk] = k;
                }
                index_of(&buf)
            })
            .collect();
        Ok(FiniteGroup { name: format!("S{n}"), order, mul, inv, identity: 0 })
    }

    /// The dihedral group of order `2n`, symmetries of the regular `n`-gon.
    ///
    /// Index `k + n*e` is `r^k s^e` with `s r s = r^-1`.
    pub fn dihedral(n: usize) -> Result<Self, GroupError> {
        Self::dihedral_bounded(n, DEFAULT_MAX_ORDER)
    }

    pub fn dihedral_bounded(n: usize, max_order: usize) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::InvalidParameter("dihedral group needs n >= 1".into()));
        }
        let order = 2 * n;
        check_order(order, max_order)?;
        let decode = |x: usize| (x % n, x / n);
        let mut mul = Vec::with_capacity(order * order);
        for x in 0..order {
            let (a, e) = decode(x);
            for y in 0..order {
                let (b, f) = decode(y);
                let rot = if e == 0 { (a + b) % n } else { (a + n - b) % n };
                mul.push((rot + n * ((e + f) % 2)) as u32);
            }
        }
        let inv = (0..order)
            .map(|x| {
                let (a, e) = decode(x);
                if e == 0 { ((n - a) % n) as u32 } else { x as u32 }
            })
            .collect();
        Ok(FiniteGroup { name: format!("D{n}"), order, mul, inv, identity: 0 })
    }

    /// Validates a Cayley table and builds the group from it.
    ///
    /// `identity_hint`, when given, must be the identity; otherwise the
    /// identity is searched for.
    pub fn from_cayley_table(
        table: &[Vec<usize>],
        identity_hint: Option<usize>,
    ) -> Result<Self, GroupError> {
        let order = table.len();
        if order == 0 {
            return Err(GroupError::NotAGroup("empty table".into()));
        }
        for (r, row) in table.iter().enumerate() {
            if row.len() != order {
                return Err(GroupError::NotAGroup(format!(
                    "row {r} has length {} in a table of order {order}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= order) {
                return Err(GroupError::NotAGroup(format!("entry {bad} in row {r} out of range")));
            }
        }
        let m = |a: usize, b: usize| table[a][b];

        let is_identity = |e: usize| (0..order).all(|x| m(e, x) == x && m(x, e) == x);
        let identity = match identity_hint {
            Some(e) if e < order && is_identity(e) => e,
            Some(e) => {
                return Err(GroupError::NotAGroup(format!("hinted identity {e} is not an identity")))
            }
            None => (0..order)
                .find(|&e| is_identity(e))
                .ok_or_else(|| GroupError::NotAGroup("no identity element".into()))?,
        };

        let mut inv = Vec::with_capacity(order);
        for x in 0..order {
            let y = (0..order)
                .find(|&y| m(x, y) == identity && m(y, x) == identity)
                .ok_or_else(|| GroupError::NotAGroup(format!("element {x} has no inverse")))?;
            inv.push(y as u32);
        }

        for a in 0..order {
            for b in 0..order {
                let ab = m(a, b);
                for c in 0..order {
                    if m(ab, c) != m(a, m(b, c)) {
                        return Err(GroupError::NotAGroup(format!(
                            "associativity fails on ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }

        let mul = table.iter().flat_map(|row| row.iter().map(|&x| x as u32)).collect();
        Ok(FiniteGroup {
            name: format!("T{order}"),
            order,
            mul,
            inv,
            identity: identity as u32,
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> GroupElement {
        GroupElement(self.identity)
    }

    #[inline]
    pub fn mul(&self, a: GroupElement, b: GroupElement) -> GroupElement {
        GroupElement(self.mul[a.index() * self.order + b.index()])
    }

    #[inline]
    pub fn inv(&self, a: GroupElement) -> GroupElement {
        GroupElement(self.inv[a.index()])
    }

    /// `g x g^-1`.
    #[inline]
    pub fn conjugate(&self, g: GroupElement, x: GroupElement) -> GroupElement {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + Clone {
        (0..self.order as u32).map(GroupElement)
    }

    pub fn element(&self, index: usize) -> Option<GroupElement> {
        (index < self.order).then_some(GroupElement(index as u32))
    }

    pub fn product<I: IntoIterator<Item = GroupElement>>(&self, xs: I) -> GroupElement {
        xs.into_iter().fold(self.identity(), |acc, x| self.mul(acc, x))
    }

    pub fn is_abelian(&self) -> bool {
        self.elements().all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_conjugate(&self, x: GroupElement, y: GroupElement) -> bool {
        self.elements().any(|g| self.conjugate(g, x) == y)
    }

    /// Conjugacy classes, each sorted, ordered by their minimal member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<GroupElement>> {
        let mut class_of = vec![usize::MAX; self.order];
        let mut classes = Vec::new();
        for x in self.elements() {
            if class_of[x.index()] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut class: Vec<GroupElement> = self.elements().map(|g| self.conjugate(g, x)).collect();
            class.sort_unstable();
            class.dedup();
            for y in &class {
                class_of[y.index()] = id;
            }
            classes.push(class);
        }
        classes
    }

    /// Index of each element's conjugacy class, consistent with
    /// [`FiniteGroup::conjugacy_classes`].
    pub fn class_map(&self) -> Vec<usize> {
        let mut map = vec![0; self.order];
        for (c, class) in self.conjugacy_classes().iter().enumerate() {
            for x in class {
                map[x.index()] = c;
            }
        }
        map
    }

    /// The multiplication table as nested rows.
    pub fn cayley_table(&self) -> Vec<Vec<usize>> {
        self.mul.chunks(self.order).map(|row| row.iter().map(|&x| x as usize).collect()).collect()
    }

    pub fn descriptor(&self) -> GroupDescriptor {
        GroupDescriptor::Table { table: self.cayley_table(), identity: Some(self.identity as usize) }
    }
}

fn check_order(order: usize, max: usize) -> Result<(), GroupError> {
    if order > max {
        Err(GroupError::TooLarge { order, max })
    } else {
        Ok(())
    }
}

fn permutations_lex(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

/// JSON-facing description of a group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum GroupDescriptor {
    Cyclic { n: usize },
    Symmetric { n: usize },
    Dihedral { n: usize },
    Table {
        table: Vec<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        identity: Option<usize>,
    },
}

impl GroupDescriptor {
    pub fn build(&self) -> Result<FiniteGroup, GroupError> {
        self.build_bounded(DEFAULT_MAX_ORDER)
    }

    pub fn build_bounded(&self, max_order: usize) -> Result<FiniteGroup, GroupError> {
        match self {
            GroupDescriptor::Cyclic { n } => FiniteGroup::cyclic_bounded(*n, max_order),
            GroupDescriptor::Symmetric { n } => FiniteGroup::symmetric_bounded(*n, max_order),
            GroupDescriptor::Dihedral { n } => FiniteGroup::dihedral_bounded(*n, max_order),
            GroupDescriptor::Table { table, identity } => {
                check_order(table.len(), max_order)?;
                FiniteGroup::from_cayley_table(table, *identity)
            }
        }
    }
}

impl FromStr for GroupDescriptor {
    type Err = GroupError;

    /// Accepts shorthands `Z<n>`/`C<n>`, `S<n>`, `D<n>` or an inline JSON descriptor.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.starts_with('{') {
            return serde_json::from_str(s).map_err(|e| GroupError::InvalidParameter(e.to_string()));
        }
        let bad = || GroupError::InvalidParameter(format!("unrecognised group `{s}`"));
        let mut chars = s.chars();
        let kind = chars.next().ok_or_else(bad)?;
        let n: usize = chars.as_str().parse().map_err(|_| bad())?;
        match kind.to_ascii_uppercase() {
            'Z' | 'C' => Ok(GroupDescriptor::Cyclic { n }),
            'S' => Ok(GroupDescriptor::Symmetric { n }),
            'D' => Ok(GroupDescriptor::Dihedral { n }),
            _ => Err(bad()),
        }
    }
}
