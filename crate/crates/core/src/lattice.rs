//! Exact linear algebra over the exponent group `Z^k`.
//!
//! Group elements are integer coordinate vectors relative to a fixed basis of
//! k generators. Additive maps into `Q` are stored by their values on those
//! generators. Sublattices (kernels of map families, radicals of skew forms,
//! intersections) carry explicit integer bases.
//!
//! Kernels and radicals are *saturated*: they are exactly the integer points
//! of a rational subspace, so membership of an integer vector reduces to a
//! rational solve. This matters because the construction conditions quantify
//! over group elements, not over rational multiples of them. Saturation is
//! obtained by unimodular column reduction rather than by clearing
//! denominators of a rational nullspace basis, which in general produces a
//! finite-index sublattice of the true kernel.

use crate::error::{Error, Result};
use num::integer::lcm;
use num::{BigInt, BigRational, One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Neg, Sub};

/// Element of the exponent group, as integer coordinates over the generators.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupElement(pub Vec<BigInt>);

impl GroupElement {
    pub fn zero(dim: usize) -> Self {
        GroupElement(vec![BigInt::zero(); dim])
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        GroupElement(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The element with `value` at coordinate `p` and zero elsewhere.
    pub fn unit_scaled(dim: usize, p: usize, value: BigInt) -> Self {
        let mut v = vec![BigInt::zero(); dim];
        v[p] = value;
        GroupElement(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn coord(&self, p: usize) -> &BigInt {
        &self.0[p]
    }
}

impl Add for &GroupElement {
    type Output = GroupElement;
    fn add(self, rhs: &GroupElement) -> GroupElement {
        assert_eq!(self.dim(), rhs.dim(), "group element dimension mismatch");
        GroupElement(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &GroupElement {
    type Output = GroupElement;
    fn sub(self, rhs: &GroupElement) -> GroupElement {
        assert_eq!(self.dim(), rhs.dim(), "group element dimension mismatch");
        GroupElement(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &GroupElement {
    type Output = GroupElement;
    fn neg(self) -> GroupElement {
        GroupElement(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, ")")
    }
}

/// Additive map from the exponent group into `Q`, stored by generator values.
///
/// The value on `alpha` is the dot product of the coordinates of `alpha`
/// with the stored values, so additivity holds by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradingMap(pub Vec<BigRational>);

impl GradingMap {
    pub fn zero(dim: usize) -> Self {
        GradingMap(vec![BigRational::zero(); dim])
    }

    /// Projection onto coordinate `p`.
    pub fn coordinate(dim: usize, p: usize) -> Self {
        let mut v = vec![BigRational::zero(); dim];
        v[p] = BigRational::one();
        GradingMap(v)
    }

    pub fn from_i64(values: &[i64]) -> Self {
        GradingMap(
            values
                .iter()
                .map(|&v| BigRational::from_integer(BigInt::from(v)))
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|v| v.is_zero())
    }

    pub fn eval(&self, g: &GroupElement) -> BigRational {
        assert_eq!(self.dim(), g.dim(), "grading map dimension mismatch");
        let mut acc = BigRational::zero();
        for (c, v) in g.0.iter().zip(&self.0) {
            if !c.is_zero() && !v.is_zero() {
                acc += BigRational::from_integer(c.clone()) * v;
            }
        }
        acc
    }
}

/// Skew-symmetric bilinear form on the exponent group, by its Gram matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewForm {
    gram: Vec<Vec<BigRational>>,
}

impl SkewForm {
    /// Requires `gram[i][j] == -gram[j][i]` (hence a zero diagonal).
    pub fn new(gram: Vec<Vec<BigRational>>) -> Result<Self> {
        let k = gram.len();
        for row in &gram {
            if row.len() != k {
                return Err(Error::config("skew form matrix is not square"));
            }
        }
        for i in 0..k {
            for j in 0..k {
                if gram[i][j] != -gram[j][i].clone() {
                    return Err(Error::config(format!(
                        "skew form matrix is not skew-symmetric at ({i},{j})"
                    )));
                }
            }
        }
        Ok(SkewForm { gram })
    }

    pub fn zero(dim: usize) -> Self {
        SkewForm {
            gram: vec![vec![BigRational::zero(); dim]; dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.gram.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gram.iter().flatten().all(|v| v.is_zero())
    }

    pub fn eval(&self, a: &GroupElement, b: &GroupElement) -> BigRational {
        assert_eq!(a.dim(), self.dim(), "skew form dimension mismatch");
        assert_eq!(b.dim(), self.dim(), "skew form dimension mismatch");
        let mut acc = BigRational::zero();
        for (i, ai) in a.0.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.0.iter().enumerate() {
                if bj.is_zero() || self.gram[i][j].is_zero() {
                    continue;
                }
                acc += BigRational::from_integer(ai * bj) * &self.gram[i][j];
            }
        }
        acc
    }

    /// The additive map `alpha -> phi(alpha, b)` for a fixed `b`.
    pub fn pairing_map(&self, b: &GroupElement) -> GradingMap {
        assert_eq!(b.dim(), self.dim(), "skew form dimension mismatch");
        let values = (0..self.dim())
            .map(|i| {
                let mut acc = BigRational::zero();
                for (j, bj) in b.0.iter().enumerate() {
                    if !bj.is_zero() && !self.gram[i][j].is_zero() {
                        acc += BigRational::from_integer(bj.clone()) * &self.gram[i][j];
                    }
                }
                acc
            })
            .collect();
        GradingMap(values)
    }

    /// Whether `g` pairs to zero with everything (lies in the radical).
    /// By skew-symmetry `phi(., g) = 0` iff `phi(g, .) = 0`.
    pub fn annihilates(&self, g: &GroupElement) -> bool {
        self.pairing_map(g).is_zero()
    }

    /// Integer basis of the radical `{ g : phi(g, .) = 0 }`.
    pub fn radical(&self) -> IntegerLattice {
        let rows: Vec<Vec<BigRational>> = self.gram.clone();
        IntegerLattice {
            dim: self.dim(),
            basis: kernel_of_rational_rows(&rows, self.dim()),
        }
    }
}

/// Sublattice of `Z^k`, stored as an explicit basis (one vector per row).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerLattice {
    dim: usize,
    basis: Vec<Vec<BigInt>>,
}

impl IntegerLattice {
    /// The full lattice `Z^dim`.
    pub fn full(dim: usize) -> Self {
        let basis = (0..dim)
            .map(|i| {
                let mut v = vec![BigInt::zero(); dim];
                v[i] = BigInt::one();
                v
            })
            .collect();
        IntegerLattice { dim, basis }
    }

    /// The zero lattice in `Z^dim`.
    pub fn trivial(dim: usize) -> Self {
        IntegerLattice { dim, basis: vec![] }
    }

    /// Builds a lattice from independent generating vectors.
    pub fn from_basis(dim: usize, basis: Vec<Vec<BigInt>>) -> Result<Self> {
        for v in &basis {
            if v.len() != dim {
                return Err(Error::config("lattice basis vector has wrong dimension"));
            }
        }
        let rational_rows: Vec<Vec<BigRational>> = basis
            .iter()
            .map(|v| v.iter().map(|c| BigRational::from_integer(c.clone())).collect())
            .collect();
        if rational_rank(rational_rows) != basis.len() {
            return Err(Error::config("lattice basis vectors are not independent"));
        }
        Ok(IntegerLattice { dim, basis })
    }

    pub fn from_basis_i64(dim: usize, basis: &[&[i64]]) -> Result<Self> {
        Self::from_basis(
            dim,
            basis
                .iter()
                .map(|v| v.iter().map(|&c| BigInt::from(c)).collect())
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis_elements(&self) -> Vec<GroupElement> {
        self.basis.iter().map(|v| GroupElement(v.clone())).collect()
    }

    /// Exact membership: is `g` an integer combination of the basis?
    pub fn contains(&self, g: &GroupElement) -> bool {
        assert_eq!(g.dim(), self.dim, "lattice dimension mismatch");
        if g.is_zero() {
            return true;
        }
        match self.solve_coeffs(&g.0) {
            Some(coeffs) => coeffs.iter().all(|c| c.is_integer()),
            None => false,
        }
    }

    /// Solves `sum_i c_i basis_i = v` over `Q`; the solution is unique when
    /// it exists because the basis is independent.
    fn solve_coeffs(&self, v: &[BigInt]) -> Option<Vec<BigRational>> {
        let r = self.basis.len();
        if r == 0 {
            return if v.iter().all(|c| c.is_zero()) {
                Some(vec![])
            } else {
                None
            };
        }
        let k = self.dim;
        // augmented system: columns are basis vectors, last column is v
        let mut aug: Vec<Vec<BigRational>> = (0..k)
            .map(|i| {
                (0..r)
                    .map(|j| BigRational::from_integer(self.basis[j][i].clone()))
                    .chain(std::iter::once(BigRational::from_integer(v[i].clone())))
                    .collect()
            })
            .collect();
        let mut row = 0usize;
        let mut pivots: Vec<(usize, usize)> = Vec::new();
        for col in 0..r {
            let Some(p) = (row..k).find(|&i| !aug[i][col].is_zero()) else {
                continue;
            };
            aug.swap(row, p);
            let inv = aug[row][col].clone();
            for j in col..=r {
                aug[row][j] = &aug[row][j] / &inv;
            }
            for i in 0..k {
                if i != row && !aug[i][col].is_zero() {
                    let f = aug[i][col].clone();
                    for j in col..=r {
                        let t = &aug[row][j] * &f;
                        aug[i][j] -= t;
                    }
                }
            }
            pivots.push((row, col));
            row += 1;
        }
        if pivots.len() < r {
            // basis not independent; by invariant unreachable
            return None;
        }
        for i in row..k {
            if !aug[i][r].is_zero() {
                return None;
            }
        }
        let mut coeffs = vec![BigRational::zero(); r];
        for &(i, col) in &pivots {
            coeffs[col] = aug[i][r].clone();
        }
        Some(coeffs)
    }

    /// Exact intersection with another sublattice of the same ambient `Z^k`.
    ///
    /// Solves `A^T s = B^T t` over the integers by taking the saturated
    /// kernel of the block matrix `[A^T | -B^T]` and mapping the `s`-part
    /// back through this lattice's basis.
    pub fn intersect(&self, other: &IntegerLattice) -> Result<IntegerLattice> {
        if self.dim != other.dim {
            return Err(Error::config("lattice intersection dimension mismatch"));
        }
        let ra = self.basis.len();
        let rb = other.basis.len();
        if ra == 0 || rb == 0 {
            return Ok(IntegerLattice::trivial(self.dim));
        }
        let rows: Vec<Vec<BigInt>> = (0..self.dim)
            .map(|i| {
                self.basis
                    .iter()
                    .map(|b| b[i].clone())
                    .chain(other.basis.iter().map(|b| -&b[i]))
                    .collect()
            })
            .collect();
        let ker = kernel_of_int_rows(&rows, ra + rb);
        let mut basis: Vec<Vec<BigInt>> = ker
            .iter()
            .map(|st| {
                let mut v = vec![BigInt::zero(); self.dim];
                for (j, b) in self.basis.iter().enumerate() {
                    if st[j].is_zero() {
                        continue;
                    }
                    for i in 0..self.dim {
                        v[i] += &st[j] * &b[i];
                    }
                }
                v
            })
            .collect();
        for v in &mut basis {
            normalize_sign(v);
        }
        basis.sort();
        Ok(IntegerLattice {
            dim: self.dim,
            basis,
        })
    }
}

impl fmt::Display for IntegerLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.basis.is_empty() {
            return write!(f, "{{0}}");
        }
        write!(f, "span{{")?;
        for (i, b) in self.basis.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", GroupElement(b.clone()))?;
        }
        write!(f, "}}")
    }
}

/// Saturated integer kernel of a family of additive maps.
///
/// An empty family leaves the full lattice.
pub fn kernel_lattice(maps: &[GradingMap], dim: usize) -> IntegerLattice {
    for m in maps {
        assert_eq!(m.dim(), dim, "kernel lattice dimension mismatch");
    }
    let rows: Vec<Vec<BigRational>> = maps.iter().map(|m| m.0.clone()).collect();
    IntegerLattice {
        dim,
        basis: kernel_of_rational_rows(&rows, dim),
    }
}

/// A lattice element on which `avoid` does not vanish, if one exists.
///
/// Scanning the basis suffices: an additive map vanishing on every basis
/// vector vanishes on the whole lattice. Deterministic (first hit wins).
pub fn witness_outside_kernel(
    inside: &IntegerLattice,
    avoid: &GradingMap,
) -> Option<GroupElement> {
    assert_eq!(inside.dim(), avoid.dim(), "witness dimension mismatch");
    inside
        .basis_elements()
        .into_iter()
        .find(|b| !avoid.eval(b).is_zero())
}

/// Multiplies each row by the lcm of its denominators; kernels are unchanged.
fn clear_denominators(row: &[BigRational]) -> Vec<BigInt> {
    let mut scale = BigInt::one();
    for x in row {
        scale = lcm(scale, x.denom().clone());
    }
    row.iter().map(|x| x.numer() * (&scale / x.denom())).collect()
}

fn kernel_of_rational_rows(rows: &[Vec<BigRational>], dim: usize) -> Vec<Vec<BigInt>> {
    let int_rows: Vec<Vec<BigInt>> = rows.iter().map(|r| clear_denominators(r)).collect();
    kernel_of_int_rows(&int_rows, dim)
}

/// Saturated kernel of an integer matrix acting on column vectors.
///
/// Column reduction with a tracked unimodular transform: gcd-eliminate each
/// row across the free columns until at most one nonzero entry remains, fix
/// that column, and continue. Free columns of the transform then span the
/// kernel; because the transform stays unimodular the result is a basis of
/// the full integer kernel, not of a finite-index sublattice.
fn kernel_of_int_rows(rows: &[Vec<BigInt>], dim: usize) -> Vec<Vec<BigInt>> {
    let s = rows.len();
    let mut mcols: Vec<Vec<BigInt>> = (0..dim)
        .map(|c| (0..s).map(|r| rows[r][c].clone()).collect())
        .collect();
    let mut ucols: Vec<Vec<BigInt>> = (0..dim)
        .map(|c| {
            let mut e = vec![BigInt::zero(); dim];
            e[c] = BigInt::one();
            e
        })
        .collect();
    let mut fixed = 0usize;
    for r in 0..s {
        loop {
            let nz: Vec<usize> = (fixed..dim).filter(|&c| !mcols[c][r].is_zero()).collect();
            if nz.is_empty() {
                break;
            }
            if nz.len() == 1 {
                mcols.swap(nz[0], fixed);
                ucols.swap(nz[0], fixed);
                fixed += 1;
                break;
            }
            let cmin = nz
                .iter()
                .copied()
                .min_by_key(|&c| (mcols[c][r].abs(), c))
                .expect("nonempty");
            for &c in &nz {
                if c == cmin {
                    continue;
                }
                let q = &mcols[c][r] / &mcols[cmin][r];
                if q.is_zero() {
                    continue;
                }
                for i in 0..s {
                    let t = &mcols[cmin][i] * &q;
                    mcols[c][i] -= t;
                }
                for i in 0..dim {
                    let t = &ucols[cmin][i] * &q;
                    ucols[c][i] -= t;
                }
            }
        }
    }
    let mut basis: Vec<Vec<BigInt>> = ucols[fixed..].to_vec();
    for v in &mut basis {
        normalize_sign(v);
    }
    basis.sort();
    basis
}

/// Flips the sign so the first nonzero entry is positive.
fn normalize_sign(v: &mut [BigInt]) {
    if let Some(first) = v.iter().find(|c| !c.is_zero()) {
        if first.is_negative() {
            for c in v.iter_mut() {
                *c = -&*c;
            }
        }
    }
}

/// Rank over `Q` of a set of rational rows (consumes its input).
pub(crate) fn rational_rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let mut rank = 0usize;
    let width = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut pivot_col = 0usize;
    while pivot_col < width && rank < rows.len() {
        if let Some(p) = (rank..rows.len()).find(|&i| !rows[i][pivot_col].is_zero()) {
            rows.swap(rank, p);
            let inv = rows[rank][pivot_col].clone();
            for j in pivot_col..width {
                rows[rank][j] = &rows[rank][j] / &inv;
            }
            for i in 0..rows.len() {
                if i != rank && !rows[i][pivot_col].is_zero() {
                    let f = rows[i][pivot_col].clone();
                    for j in pivot_col..width {
                        let t = &rows[rank][j] * &f;
                        rows[i][j] -= t;
                    }
                }
            }
            rank += 1;
        }
        pivot_col += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn grading_map_evaluates_by_generator_values() {
        let phi = GradingMap::from_i64(&[1, 0]);
        let a = GroupElement::from_i64(&[3, 5]);
        assert_eq!(phi.eval(&a), rat(3, 1));

        let zero = GradingMap::from_i64(&[0, 0]);
        assert_eq!(zero.eval(&a), rat(0, 1));

        // hand dot product: 2*(1/2) + 3*(1/3) = 2
        let phi = GradingMap(vec![rat(1, 2), rat(1, 3)]);
        let a = GroupElement::from_i64(&[2, 3]);
        assert_eq!(phi.eval(&a), rat(2, 1));
    }

    #[test]
    fn kernel_of_full_rank_square_system_is_trivial() {
        let maps = vec![GradingMap::from_i64(&[1, 0]), GradingMap::from_i64(&[0, 1])];
        assert!(kernel_lattice(&maps, 2).is_trivial());
    }

    #[test]
    fn kernel_of_sum_map() {
        let maps = vec![GradingMap::from_i64(&[1, 1])];
        let k = kernel_lattice(&maps, 2);
        assert_eq!(k.rank(), 1);
        assert_eq!(k.basis_elements()[0], GroupElement::from_i64(&[1, -1]));
    }

    #[test]
    fn kernel_with_no_constraints_is_full() {
        let k = kernel_lattice(&[], 1);
        assert_eq!(k.rank(), 1);
        assert_eq!(k.basis_elements()[0], GroupElement::from_i64(&[1]));
    }

    #[test]
    fn kernel_is_saturated_not_just_denominator_cleared() {
        // x1 + x2/2 + x3/2 = 0 has integer kernel of index 1 in its
        // rational span; per-vector denominator clearing would give index 2.
        let maps = vec![GradingMap(vec![rat(1, 1), rat(1, 2), rat(1, 2)])];
        let k = kernel_lattice(&maps, 3);
        assert_eq!(k.rank(), 2);
        for b in k.basis_elements() {
            assert!(maps[0].eval(&b).is_zero());
        }
        assert!(k.contains(&GroupElement::from_i64(&[1, 0, -2])));
        assert!(k.contains(&GroupElement::from_i64(&[0, 1, -1])));
        assert!(!k.contains(&GroupElement::from_i64(&[0, 1, 0])));
    }

    #[test]
    fn radical_of_zero_form_is_everything() {
        let r = SkewForm::zero(2).radical();
        assert_eq!(r.rank(), 2);
        assert!(r.contains(&GroupElement::from_i64(&[1, 0])));
        assert!(r.contains(&GroupElement::from_i64(&[0, 1])));
    }

    #[test]
    fn radical_of_symplectic_form_is_trivial() {
        let g = SkewForm::new(vec![
            vec![rat(0, 1), rat(1, 1)],
            vec![rat(-1, 1), rat(0, 1)],
        ])
        .unwrap();
        assert!(g.radical().is_trivial());
    }

    #[test]
    fn radical_of_degenerate_form() {
        let g = SkewForm::new(vec![
            vec![rat(0, 1), rat(1, 1), rat(0, 1)],
            vec![rat(-1, 1), rat(0, 1), rat(0, 1)],
            vec![rat(0, 1), rat(0, 1), rat(0, 1)],
        ])
        .unwrap();
        let r = g.radical();
        assert_eq!(r.rank(), 1);
        assert_eq!(r.basis_elements()[0], GroupElement::from_i64(&[0, 0, 1]));
    }

    #[test]
    fn non_skew_matrix_is_rejected() {
        assert!(SkewForm::new(vec![
            vec![rat(0, 1), rat(1, 1)],
            vec![rat(1, 1), rat(0, 1)],
        ])
        .is_err());
        assert!(SkewForm::new(vec![vec![rat(1, 1)]]).is_err());
    }

    #[test]
    fn intersection_of_full_lattices_is_full() {
        let a = IntegerLattice::full(2);
        let b = IntegerLattice::full(2);
        let c = a.intersect(&b).unwrap();
        assert_eq!(c.rank(), 2);
        assert!(c.contains(&GroupElement::from_i64(&[1, 0])));
        assert!(c.contains(&GroupElement::from_i64(&[0, 1])));
    }

    #[test]
    fn intersection_of_complementary_lines_is_trivial() {
        let a = IntegerLattice::from_basis_i64(2, &[&[1, 0]]).unwrap();
        let b = IntegerLattice::from_basis_i64(2, &[&[0, 1]]).unwrap();
        assert!(a.intersect(&b).unwrap().is_trivial());
    }

    #[test]
    fn intersection_solves_integer_constraints() {
        // span{(2,0),(0,1)} meets span{(1,1)} in span{(2,2)}
        let a = IntegerLattice::from_basis_i64(2, &[&[2, 0], &[0, 1]]).unwrap();
        let b = IntegerLattice::from_basis_i64(2, &[&[1, 1]]).unwrap();
        let c = a.intersect(&b).unwrap();
        assert_eq!(c.rank(), 1);
        assert_eq!(c.basis_elements()[0], GroupElement::from_i64(&[2, 2]));
    }

    #[test]
    fn membership_respects_integer_coefficients() {
        let l = IntegerLattice::from_basis_i64(2, &[&[2, 0]]).unwrap();
        assert!(l.contains(&GroupElement::from_i64(&[4, 0])));
        assert!(!l.contains(&GroupElement::from_i64(&[1, 0])));
        assert!(!l.contains(&GroupElement::from_i64(&[0, 1])));
    }

    #[test]
    fn witness_scans_basis() {
        let line = IntegerLattice::from_basis_i64(2, &[&[1, 0]]).unwrap();
        assert_eq!(
            witness_outside_kernel(&line, &GradingMap::from_i64(&[1, 0])),
            Some(GroupElement::from_i64(&[1, 0]))
        );
        assert_eq!(
            witness_outside_kernel(&line, &GradingMap::from_i64(&[0, 1])),
            None
        );

        let diag = IntegerLattice::from_basis_i64(2, &[&[1, -1]]).unwrap();
        let avoid = GradingMap(vec![rat(1, 2), rat(0, 1)]);
        let w = witness_outside_kernel(&diag, &avoid).unwrap();
        assert_eq!(w, GroupElement::from_i64(&[1, -1]));
        assert_eq!(avoid.eval(&w), rat(1, 2));
    }

    #[test]
    fn kernel_rank_complements_map_rank() {
        let maps = vec![
            GradingMap(vec![rat(1, 2), rat(1, 3), rat(0, 1)]),
            GradingMap::from_i64(&[1, 1, 1]),
            GradingMap(vec![rat(3, 2), rat(4, 3), rat(1, 1)]), // sum of the two
        ];
        let k = kernel_lattice(&maps, 3);
        let mat = maps.iter().map(|m| m.0.clone()).collect::<Vec<_>>();
        assert_eq!(k.rank() + rational_rank(mat), 3);
        for b in k.basis_elements() {
            for m in &maps {
                assert!(m.eval(&b).is_zero());
            }
        }
    }
}
