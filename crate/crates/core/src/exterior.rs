//! Graded exterior algebra on a six-dimensional oriented orthonormal frame.
//!
//! Forms are invariant (constant coefficients in the frame), stored sparsely
//! as maps from strictly increasing index tuples to [`Scalar`]s. The frame
//! `e1..e6` is orthonormal and oriented by `e123456`. Evaluation follows the
//! determinant convention, `e12(E1, E2) = 1`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub const DIM: usize = 6;
const FULL: u8 = (1 << DIM) - 1;

/// A strictly increasing index tuple, stored as a bit set (bit `i` is index `i + 1`).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct MultiIndex(u8);

impl MultiIndex {
    pub const EMPTY: MultiIndex = MultiIndex(0);
    pub const VOLUME: MultiIndex = MultiIndex(FULL);

    /// Builds an index from 1-based indices, which must be strictly increasing.
    pub fn new(indices: &[usize]) -> Result<MultiIndex> {
        let mut bits = 0u8;
        let mut last = 0;
        for (pos, &i) in indices.iter().enumerate() {
            if !(1..=DIM).contains(&i) {
                return Err(Error::Parse {
                    pos,
                    msg: format!("index {i} outside 1..{DIM}"),
                });
            }
            if i <= last {
                return Err(Error::Parse {
                    pos,
                    msg: "indices must be strictly increasing".into(),
                });
            }
            last = i;
            bits |= 1 << (i - 1);
        }
        Ok(MultiIndex(bits))
    }

    pub(crate) fn from_bits(bits: u8) -> MultiIndex {
        MultiIndex(bits & FULL)
    }

    pub fn bits(&self) -> u8 {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn contains(&self, zero_based: usize) -> bool {
        self.0 & (1 << zero_based) != 0
    }

    /// Zero-based indices in increasing order.
    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..DIM).filter(move |&i| self.contains(i))
    }

    pub fn complement(&self) -> MultiIndex {
        MultiIndex(!self.0 & FULL)
    }

    /// All index sets of the given length, in lexicographic order.
    pub fn all_of_len(len: usize) -> Vec<MultiIndex> {
        let mut out: Vec<MultiIndex> = (0u8..=FULL)
            .filter(|b| b.count_ones() as usize == len)
            .map(MultiIndex)
            .collect();
        out.sort();
        out
    }
}

/// Sign of the permutation sorting the concatenation `(a, b)`; zero when the
/// sets overlap.
pub fn shuffle_sign(a: MultiIndex, b: MultiIndex) -> i32 {
    if a.0 & b.0 != 0 {
        return 0;
    }
    let inversions: u32 = b.indices().map(|j| (a.0 >> (j + 1)).count_ones()).sum();
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.indices().cmp(other.indices())
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in self.indices() {
            write!(f, "{}", i + 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{self}")
    }
}

/// A tangent vector `sum v_i E_i` in the frame dual to `e1..e6`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Vector(pub [Scalar; DIM]);

impl Vector {
    pub fn zero() -> Vector {
        Vector::default()
    }

    /// The frame vector `E_{i+1}` (zero-based `i`).
    pub fn basis(i: usize) -> Vector {
        let mut v = Vector::zero();
        v.0[i] = Scalar::one();
        v
    }

    pub fn component(&self, i: usize) -> &Scalar {
        &self.0[i]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    pub fn scale(&self, s: &Scalar) -> Vector {
        Vector(std::array::from_fn(|i| &self.0[i] * s))
    }

    /// Pairing with the 1-form `alpha`.
    pub fn pair(&self, alpha: &KForm) -> Scalar {
        debug_assert_eq!(alpha.degree(), 1);
        let mut out = Scalar::zero();
        for (idx, c) in alpha.terms() {
            let i = idx.indices().next().unwrap();
            out += &(c * &self.0[i]);
        }
        out
    }
}

impl Add<&Vector> for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        Vector(std::array::from_fn(|i| &self.0[i] + &rhs.0[i]))
    }
}

impl Sub<&Vector> for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        Vector(std::array::from_fn(|i| &self.0[i] - &rhs.0[i]))
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector(std::array::from_fn(|i| -&self.0[i]))
    }
}

/// A homogeneous invariant k-form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct KForm {
    degree: usize,
    terms: BTreeMap<MultiIndex, Scalar>,
}

impl KForm {
    pub fn zero(degree: usize) -> KForm {
        KForm {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(s: Scalar) -> KForm {
        KForm::monomial(MultiIndex::EMPTY, s)
    }

    pub fn monomial(idx: MultiIndex, s: Scalar) -> KForm {
        let mut out = KForm::zero(idx.len());
        out.add_term(idx, &s);
        out
    }

    /// The basis form `e^{i1...ik}` for strictly increasing 1-based indices.
    ///
    /// Panics on malformed indices; use [`MultiIndex::new`] for fallible input.
    pub fn e(indices: &[usize]) -> KForm {
        let idx = MultiIndex::new(indices).expect("malformed basis index");
        KForm::monomial(idx, Scalar::one())
    }

    /// Zero-based variant of [`KForm::e`] for a single index.
    pub fn e1(i: usize) -> KForm {
        KForm::monomial(MultiIndex::from_bits(1 << i), Scalar::one())
    }

    pub fn volume() -> KForm {
        KForm::monomial(MultiIndex::VOLUME, Scalar::one())
    }

    /// Builds a k-form from its values on increasing tuples of frame vectors.
    pub fn from_components(degree: usize, mut f: impl FnMut(&[usize]) -> Scalar) -> KForm {
        let mut out = KForm::zero(degree);
        for idx in MultiIndex::all_of_len(degree) {
            let ix: Vec<usize> = idx.indices().collect();
            let c = f(&ix);
            out.add_term(idx, &c);
        }
        out
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, idx: MultiIndex) -> Scalar {
        self.terms.get(&idx).cloned().unwrap_or_default()
    }

    /// The degree-0 part as a scalar.
    pub fn as_scalar(&self) -> Scalar {
        self.coefficient(MultiIndex::EMPTY)
    }

    fn add_term(&mut self, idx: MultiIndex, s: &Scalar) {
        debug_assert_eq!(idx.len(), self.degree);
        if s.is_zero() {
            return;
        }
        let entry = self.terms.entry(idx).or_default();
        *entry += s;
        if entry.is_zero() {
            self.terms.remove(&idx);
        }
    }

    fn add_signed_term(&mut self, idx: MultiIndex, s: &Scalar, sign: i32) {
        match sign {
            1 => self.add_term(idx, s),
            -1 => self.add_term(idx, &-s),
            _ => {}
        }
    }

    pub fn scale(&self, s: &Scalar) -> KForm {
        let mut out = KForm::zero(self.degree);
        for (idx, c) in &self.terms {
            out.add_term(*idx, &(c * s));
        }
        out
    }

    pub fn map_coefficients(&self, mut f: impl FnMut(&Scalar) -> Result<Scalar>) -> Result<KForm> {
        let mut out = KForm::zero(self.degree);
        for (idx, c) in &self.terms {
            out.add_term(*idx, &f(c)?);
        }
        Ok(out)
    }

    /// Exterior product. Products of total degree above six are the zero form.
    pub fn wedge(&self, other: &KForm) -> KForm {
        let mut out = KForm::zero(self.degree + other.degree);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let sign = shuffle_sign(*a, *b);
                if sign != 0 {
                    out.add_signed_term(MultiIndex(a.0 | b.0), &(ca * cb), sign);
                }
            }
        }
        out
    }

    /// Hodge star for the orthonormal metric and orientation `e123456`:
    /// `*(e^I) = sign(I, I^c) e^{I^c}`, so that `a ^ *a = |a|^2 vol`.
    pub fn hodge_star(&self) -> KForm {
        let mut out = KForm::zero(DIM - self.degree);
        for (idx, c) in &self.terms {
            let comp = idx.complement();
            out.add_signed_term(comp, c, shuffle_sign(*idx, comp));
        }
        out
    }

    /// Interior product `v ⌟ a`; the zero 0-form when `a` has degree zero.
    pub fn interior(&self, v: &Vector) -> KForm {
        if self.degree == 0 {
            return KForm::zero(0);
        }
        let mut out = KForm::zero(self.degree - 1);
        for (idx, c) in &self.terms {
            for (pos, i) in idx.indices().enumerate() {
                let vi = &v.0[i];
                if vi.is_zero() {
                    continue;
                }
                let rest = MultiIndex(idx.0 & !(1 << i));
                let sign = if pos % 2 == 0 { 1 } else { -1 };
                out.add_signed_term(rest, &(c * vi), sign);
            }
        }
        out
    }

    /// Contraction with the frame vector `E_{i+1}`.
    pub fn interior_basis(&self, i: usize) -> KForm {
        if self.degree == 0 {
            return KForm::zero(0);
        }
        let mut out = KForm::zero(self.degree - 1);
        for (idx, c) in &self.terms {
            if !idx.contains(i) {
                continue;
            }
            let pos = (idx.0 & ((1 << i) - 1)).count_ones();
            let rest = MultiIndex(idx.0 & !(1 << i));
            out.add_signed_term(rest, c, if pos.is_multiple_of(2) { 1 } else { -1 });
        }
        out
    }

    /// Value on a list of vectors (fully antisymmetric, multilinear).
    pub fn evaluate(&self, vs: &[Vector]) -> Result<Scalar> {
        if vs.len() != self.degree {
            return Err(Error::Arity {
                expected: self.degree,
                got: vs.len(),
            });
        }
        let mut acc = self.clone();
        for v in vs {
            acc = acc.interior(v);
        }
        Ok(acc.as_scalar())
    }

    /// Value on frame vectors `E_{i1+1}, ..., E_{ik+1}` (zero-based indices).
    pub fn eval_basis(&self, ix: &[usize]) -> Scalar {
        debug_assert_eq!(ix.len(), self.degree);
        let mut bits = 0u8;
        for &i in ix {
            if bits & (1 << i) != 0 {
                return Scalar::zero();
            }
            bits |= 1 << i;
        }
        let c = match self.terms.get(&MultiIndex(bits)) {
            Some(c) => c,
            None => return Scalar::zero(),
        };
        let mut inversions = 0;
        for a in 0..ix.len() {
            for b in a + 1..ix.len() {
                if ix[a] > ix[b] {
                    inversions += 1;
                }
            }
        }
        if inversions % 2 == 0 {
            c.clone()
        } else {
            -c
        }
    }

    /// Pulls the form back along a change of coframe: each basis 1-form
    /// `e^{i+1}` is replaced by `images[i]`.
    pub fn substitute_coframe(&self, images: &[KForm; DIM]) -> KForm {
        let mut out = KForm::zero(self.degree);
        for (idx, c) in &self.terms {
            let mut prod = KForm::scalar(c.clone());
            for i in idx.indices() {
                prod = prod.wedge(&images[i]);
            }
            out += &prod;
        }
        out
    }
}

impl AddAssign<&KForm> for KForm {
    fn add_assign(&mut self, rhs: &KForm) {
        if rhs.is_zero() {
            return;
        }
        if self.is_zero() {
            self.degree = rhs.degree;
        }
        assert_eq!(self.degree, rhs.degree, "adding forms of different degree");
        for (idx, c) in &rhs.terms {
            self.add_term(*idx, c);
        }
    }
}

impl SubAssign<&KForm> for KForm {
    fn sub_assign(&mut self, rhs: &KForm) {
        *self += &(-rhs);
    }
}

impl Add<&KForm> for &KForm {
    type Output = KForm;
    fn add(self, rhs: &KForm) -> KForm {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&KForm> for &KForm {
    type Output = KForm;
    fn sub(self, rhs: &KForm) -> KForm {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &KForm {
    type Output = KForm;
    fn neg(self) -> KForm {
        KForm {
            degree: self.degree,
            terms: self.terms.iter().map(|(i, c)| (*i, -c)).collect(),
        }
    }
}

impl Add for KForm {
    type Output = KForm;
    fn add(self, rhs: KForm) -> KForm {
        &self + &rhs
    }
}

impl Sub for KForm {
    type Output = KForm;
    fn sub(self, rhs: KForm) -> KForm {
        &self - &rhs
    }
}

impl Neg for KForm {
    type Output = KForm;
    fn neg(self) -> KForm {
        -&self
    }
}

impl fmt::Display for KForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (idx, c)) in self.terms.iter().enumerate() {
            let negative = c.as_monomial().is_some_and(|(_, q)| q < &num_traits::Zero::zero());
            let mag = if negative { -c } else { c.clone() };
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let basis = if idx.is_empty() {
                String::new()
            } else {
                format!("e{idx}")
            };
            if mag.is_one() && !idx.is_empty() {
                f.write_str(&basis)?;
            } else if idx.is_empty() {
                if mag.num_terms() > 1 {
                    write!(f, "({mag})")?;
                } else {
                    write!(f, "{mag}")?;
                }
            } else if mag.num_terms() > 1 {
                write!(f, "({mag})*{basis}")?;
            } else {
                write!(f, "{mag}*{basis}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for KForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "KForm[{}]({self})", self.degree)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Sign of a permutation of 1..n by counting inversions, independent of
    /// the bit-set shuffle routine.
    fn perm_sign(seq: &[usize]) -> i32 {
        let mut inv = 0;
        for a in 0..seq.len() {
            for b in a + 1..seq.len() {
                if seq[a] > seq[b] {
                    inv += 1;
                }
            }
        }
        if inv % 2 == 0 {
            1
        } else {
            -1
        }
    }

    #[test]
    fn wedge_examples() {
        assert_eq!(KForm::e(&[1]).wedge(&KForm::e(&[2])), KForm::e(&[1, 2]));
        assert!(KForm::e(&[1, 2]).wedge(&KForm::e(&[1, 2])).is_zero());
        let t = Scalar::var("t");
        let lhs = KForm::e(&[1, 3]).scale(&t).wedge(&KForm::e(&[2, 4]));
        let expected_sign = perm_sign(&[1, 3, 2, 4]);
        assert_eq!(expected_sign, -1);
        assert_eq!(lhs, KForm::e(&[1, 2, 3, 4]).scale(&-&t));
    }

    #[test]
    fn hodge_examples() {
        assert_eq!(KForm::scalar(Scalar::one()).hodge_star(), KForm::volume());
        assert_eq!(KForm::e(&[1, 2]).hodge_star(), KForm::e(&[3, 4, 5, 6]));
        assert_eq!(perm_sign(&[1, 3, 5, 2, 4, 6]), -1);
        assert_eq!(KForm::e(&[1, 3, 5]).hodge_star(), -KForm::e(&[2, 4, 6]));
    }

    #[test]
    fn hodge_sign_matches_permutation_oracle() {
        for k in 0..=DIM {
            for idx in MultiIndex::all_of_len(k) {
                let mut seq: Vec<usize> = idx.indices().map(|i| i + 1).collect();
                seq.extend(idx.complement().indices().map(|i| i + 1));
                let star = KForm::monomial(idx, Scalar::one()).hodge_star();
                let c = star.coefficient(idx.complement());
                assert_eq!(c, Scalar::from_int(perm_sign(&seq) as i64));
            }
        }
    }

    #[test]
    fn interior_examples() {
        let e12 = KForm::e(&[1, 2]);
        assert_eq!(e12.interior(&Vector::basis(0)), KForm::e(&[2]));
        assert!(e12.interior(&Vector::basis(2)).is_zero());
        let v = &Vector::basis(0) + &Vector::basis(1);
        let got = KForm::e(&[1, 2, 3]).interior(&v);
        assert_eq!(got, &KForm::e(&[2, 3]) - &KForm::e(&[1, 3]));
        assert!(KForm::scalar(Scalar::one()).interior(&v).is_zero());
    }

    #[test]
    fn evaluate_examples() {
        let e12 = KForm::e(&[1, 2]);
        let (e1, e2) = (Vector::basis(0), Vector::basis(1));
        assert!(e12.evaluate(&[e1.clone(), e2.clone()]).unwrap().is_one());
        assert_eq!(
            e12.evaluate(&[e2.clone(), e1.clone()]).unwrap(),
            Scalar::from_int(-1)
        );
        let t = Scalar::var("t");
        let de5 = &KForm::e(&[1, 3]).scale(&t) - &KForm::e(&[2, 4]).scale(&t);
        let v = de5
            .evaluate(&[Vector::basis(1), Vector::basis(3)])
            .unwrap();
        assert_eq!(v, -&t);
        assert_eq!(
            e12.evaluate(&[e1]),
            Err(Error::Arity {
                expected: 2,
                got: 1
            })
        );
    }

    #[test]
    fn eval_basis_agrees_with_evaluate() {
        let a = &KForm::e(&[1, 3, 5]).scale(&Scalar::var("t")) + &KForm::e(&[2, 3, 6]);
        for ix in [[0, 2, 4], [4, 2, 0], [2, 0, 4], [1, 2, 5], [5, 2, 1], [0, 0, 4]] {
            let vs: Vec<Vector> = ix.iter().map(|&i| Vector::basis(i)).collect();
            assert_eq!(a.eval_basis(&ix), a.evaluate(&vs).unwrap());
        }
    }

    #[test]
    fn multi_index_order_is_lexicographic() {
        let a = MultiIndex::new(&[1, 6]).unwrap();
        let b = MultiIndex::new(&[2, 3]).unwrap();
        assert!(a < b);
        assert!(MultiIndex::new(&[3, 2]).is_err());
        assert!(MultiIndex::new(&[0, 2]).is_err());
    }

    #[test]
    fn display_format() {
        let t = Scalar::var("t");
        let f = &KForm::e(&[1, 3, 6]).scale(&t) - &KForm::e(&[1, 4, 5]).scale(&t);
        assert_eq!(f.to_string(), "t*e136 - t*e145");
    }
}
