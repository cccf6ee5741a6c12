//! Dense exact-rational matrices whose rows and columns are labelled by homs.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::homs::{GroupoidHom, NatClasses};

/// Exact rational scalar, always reduced with a positive denominator.
pub type Scalar = BigRational;

/// Renders as `p/q`, including `q = 1`.
pub fn scalar_to_string(x: &Scalar) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn parse_scalar(s: &str) -> Option<Scalar> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(BigRational::new(p.trim().parse().ok()?, q))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

/// `base^-exp` as an exact rational.
pub fn inverse_power(base: usize, exp: usize) -> Scalar {
    BigRational::new(BigInt::one(), BigInt::from(base).pow(exp as u32))
}

/// One basis vector: a hom, plus the size of its natural-isomorphism class
/// when the basis is a class basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisElement {
    pub representative: GroupoidHom,
    pub class_size: Option<usize>,
}

impl BasisElement {
    pub fn raw(h: GroupoidHom) -> Self {
        BasisElement { representative: h, class_size: None }
    }
}

pub fn raw_basis(homs: &[GroupoidHom]) -> Vec<BasisElement> {
    homs.iter().cloned().map(BasisElement::raw).collect()
}

pub fn class_basis(classes: &NatClasses) -> Vec<BasisElement> {
    classes
        .classes()
        .iter()
        .map(|c| BasisElement { representative: c.representative.clone(), class_size: Some(c.size) })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeMismatch(pub String);

impl fmt::Display for ShapeMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ShapeMismatch {}

/// A linear map from the span of `cols` to the span of `rows`.
///
/// Entry `(r, c)` is `⟨rows[r] | M | cols[c]⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TqftMatrix {
    rows: Vec<BasisElement>,
    cols: Vec<BasisElement>,
    entries: Vec<Vec<Scalar>>,
}

impl TqftMatrix {
    pub fn new(rows: Vec<BasisElement>, cols: Vec<BasisElement>, entries: Vec<Vec<Scalar>>) -> Result<Self, ShapeMismatch> {
        if entries.len() != rows.len() || entries.iter().any(|r| r.len() != cols.len()) {
            return Err(ShapeMismatch(format!(
                "entries do not form a {}x{} grid",
                rows.len(),
                cols.len()
            )));
        }
        Ok(TqftMatrix { rows, cols, entries })
    }

    pub fn from_counts(rows: Vec<BasisElement>, cols: Vec<BasisElement>, counts: &[u64], scale: &Scalar) -> Self {
        let nc = cols.len();
        let entries = (0..rows.len())
            .map(|r| (0..nc).map(|c| scale * BigRational::from_integer(BigInt::from(counts[r * nc + c]))).collect())
            .collect();
        TqftMatrix { rows, cols, entries }
    }

    pub fn identity(basis: Vec<BasisElement>) -> Self {
        let n = basis.len();
        let entries = (0..n)
            .map(|r| (0..n).map(|c| if r == c { Scalar::one() } else { Scalar::zero() }).collect())
            .collect();
        TqftMatrix { rows: basis.clone(), cols: basis, entries }
    }

    pub fn rows(&self) -> &[BasisElement] {
        &self.rows
    }

    pub fn cols(&self) -> &[BasisElement] {
        &self.cols
    }

    pub fn entries(&self) -> &[Vec<Scalar>] {
        &self.entries
    }

    pub fn entry(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r][c]
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows.len(), self.cols.len())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && self.entries.iter().enumerate().all(|(r, row)| {
                row.iter().enumerate().all(|(c, x)| if r == c { x.is_one() } else { x.is_zero() })
            })
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().flatten().all(|x| !x.is_negative())
    }

    pub fn scaled(&self, k: &Scalar) -> TqftMatrix {
        TqftMatrix {
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            entries: self.entries.iter().map(|r| r.iter().map(|x| x * k).collect()).collect(),
        }
    }

    /// `self · rhs`, i.e. apply `rhs` first. Requires the column basis of
    /// `self` to equal the row basis of `rhs`.
    pub fn matmul(&self, rhs: &TqftMatrix) -> Result<TqftMatrix, ShapeMismatch> {
        if !same_reps(&self.cols, &rhs.rows) {
            return Err(ShapeMismatch("inner bases differ".into()));
        }
        let entries = self
            .entries
            .iter()
            .map(|row| {
                (0..rhs.cols.len())
                    .map(|c| {
                        let mut acc = Scalar::zero();
                        for (x, r) in row.iter().zip(&rhs.entries) {
                            if !x.is_zero() && !r[c].is_zero() {
                                acc += x * &r[c];
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        Ok(TqftMatrix { rows: self.rows.clone(), cols: rhs.cols.clone(), entries })
    }

    /// Kronecker product; basis elements pair up by concatenating generator
    /// images, with `self` as the outer index.
    pub fn kron(&self, rhs: &TqftMatrix) -> TqftMatrix {
        let pair = |a: &[BasisElement], b: &[BasisElement]| -> Vec<BasisElement> {
            a.iter()
                .flat_map(|x| {
                    b.iter().map(move |y| {
                        let mut images = x.representative.images().to_vec();
                        images.extend_from_slice(y.representative.images());
                        BasisElement {
                            representative: GroupoidHom::new(images),
                            class_size: x.class_size.zip(y.class_size).map(|(p, q)| p * q),
                        }
                    })
                })
                .collect()
        };
        let rows = pair(&self.rows, &rhs.rows);
        let cols = pair(&self.cols, &rhs.cols);
        let mut entries = Vec::with_capacity(rows.len());
        for ra in &self.entries {
            for rb in &rhs.entries {
                entries.push(ra.iter().flat_map(|a| rb.iter().map(move |b| a * b)).collect());
            }
        }
        TqftMatrix { rows, cols, entries }
    }

    /// Entries only, compared exactly; bases must match representative-wise.
    pub fn same_map_as(&self, other: &TqftMatrix) -> bool {
        same_reps(&self.rows, &other.rows) && same_reps(&self.cols, &other.cols) && self.entries == other.entries
    }
}

fn same_reps(a: &[BasisElement], b: &[BasisElement]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x.representative == y.representative)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupElement;

    fn basis(n: usize) -> Vec<BasisElement> {
        (0..n).map(|i| BasisElement::raw(GroupoidHom::new(vec![GroupElement(i as u32)]))).collect()
    }

    fn q(p: i64, d: i64) -> Scalar {
        BigRational::new(p.into(), d.into())
    }

    #[test]
    fn scalar_format_round_trip() {
        assert_eq!(scalar_to_string(&q(2, 4)), "1/2");
        assert_eq!(scalar_to_string(&q(3, 1)), "3/1");
        assert_eq!(scalar_to_string(&q(0, 5)), "0/1");
        assert_eq!(parse_scalar("6/4"), Some(q(3, 2)));
        assert_eq!(parse_scalar("7"), Some(q(7, 1)));
        assert_eq!(parse_scalar("1/0"), None);
        assert_eq!(inverse_power(6, 2), q(1, 36));
    }

    #[test]
    fn matmul_and_identity() {
        let a = TqftMatrix::new(basis(2), basis(2), vec![vec![q(1, 2), q(1, 1)], vec![q(0, 1), q(2, 3)]]).unwrap();
        let id = TqftMatrix::identity(basis(2));
        assert!(id.is_identity());
        assert_eq!(a.matmul(&id).unwrap(), a);
        assert_eq!(id.matmul(&a).unwrap(), a);
        let aa = a.matmul(&a).unwrap();
        assert_eq!(aa.entries(), &[vec![q(1, 4), q(7, 6)], vec![q(0, 1), q(4, 9)]]);
        assert!(a.matmul(&TqftMatrix::identity(basis(3))).is_err());
    }

    #[test]
    fn kron_shape() {
        let a = TqftMatrix::new(basis(2), basis(1), vec![vec![q(1, 1)], vec![q(2, 1)]]).unwrap();
        let b = TqftMatrix::new(basis(1), basis(2), vec![vec![q(3, 1), q(5, 1)]]).unwrap();
        let k = a.kron(&b);
        assert_eq!(k.shape(), (2, 2));
        assert_eq!(k.entries(), &[vec![q(3, 1), q(5, 1)], vec![q(6, 1), q(10, 1)]]);
        assert_eq!(k.rows()[1].representative.images(), &[GroupElement(1), GroupElement(0)]);
    }

    #[test]
    fn grid_is_checked() {
        assert!(TqftMatrix::new(basis(2), basis(2), vec![vec![q(1, 1)]]).is_err());
    }
}
