//! Quadratic eigenforms of the reflection group, monomial valuations and
//! the parity criterion for invariant monomials in the forms.

use symres_core::poly::{MonomialOrder, MultiPoly, Ring};
use symres_core::scalar::{gauss, imag_unit};
use symres_core::{GaussPoly, GaussRational, Matrix};

use crate::error::GeometryError;
use crate::group::GaussMatrix;
use crate::model::W_PAIRS;

pub fn x_ring() -> Ring {
    Ring::new(["x1", "x2", "x3", "x4"], MonomialOrder::Grevlex)
}

const PHI_TEXTS: [&str; 10] = [
    "-2*(x1*x4 + x2*x3)",
    "2*i*(-x1*x4 + x2*x3)",
    "2*i*(x1*x2 + x3*x4)",
    "2*(-x1*x2 + x3*x4)",
    "2*(x1*x3 - x2*x4)",
    "-x1^2 - x2^2 + x3^2 + x4^2",
    "i*(x1^2 + x2^2 + x3^2 + x4^2)",
    "i*(-x1^2 + x2^2 - x3^2 + x4^2)",
    "x1^2 - x2^2 - x3^2 + x4^2",
    "2*(x1*x3 + x2*x4)",
];

/// Expected action of `T_k` (column) on `phi_rs` (row, in `W_PAIRS` order).
pub const REFERENCE_SIGNS: [[i8; 5]; 10] = [
    [-1, -1, 1, 1, 1],
    [-1, 1, -1, 1, 1],
    [-1, 1, 1, -1, 1],
    [-1, 1, 1, 1, -1],
    [1, -1, -1, 1, 1],
    [1, -1, 1, -1, 1],
    [1, -1, 1, 1, -1],
    [1, 1, -1, -1, 1],
    [1, 1, -1, 1, -1],
    [1, 1, 1, -1, -1],
];

/// The ten forms `phi_ij`, indexed like `W_PAIRS`.
pub fn phi_forms() -> Vec<GaussPoly> {
    let ring = x_ring();
    PHI_TEXTS
        .iter()
        .map(|t| ring.parse_with_imag(t, imag_unit()).expect("built-in form parses"))
        .collect()
}

/// Images of the coordinates under `x -> m x`.
fn linear_images(m: &GaussMatrix, order: MonomialOrder) -> Vec<GaussPoly> {
    (0..m.rows())
        .map(|k| {
            (0..m.cols()).fold(MultiPoly::zero(m.cols(), order), |acc, l| {
                &acc + &MultiPoly::var(l, m.cols(), order).scale(m.get(k, l))
            })
        })
        .collect()
}

/// `(g . f)(x) = f(g^-1 x)`.
pub fn act(g: &GaussMatrix, f: &GaussPoly) -> GaussPoly {
    let inv = g.inverse().expect("group elements are invertible");
    f.compose(&linear_images(&inv, f.order()))
}

/// The scalar `c` with `g . f = c f`, if any.
pub fn eigenvalue(g: &GaussMatrix, f: &GaussPoly) -> Option<GaussRational> {
    let (m, c) = f.leading_term()?;
    let image = act(g, f);
    let lambda = image.coeff(m) / c.clone();
    (image == f.scale(&lambda)).then_some(lambda)
}

/// Entry `(r, k)` is the sign by which `gens[k]` acts on `forms[r]`.
pub fn sign_table(gens: &[GaussMatrix], forms: &[GaussPoly]) -> Result<Vec<Vec<i8>>, GeometryError> {
    let plus = gauss(1, 0);
    let minus = gauss(-1, 0);
    forms
        .iter()
        .enumerate()
        .map(|(r, f)| {
            gens.iter()
                .enumerate()
                .map(|(k, g)| match eigenvalue(g, f) {
                    Some(l) if l == plus => Ok(1),
                    Some(l) if l == minus => Ok(-1),
                    _ => Err(GeometryError::NotEigenvector { form: r, generator: k }),
                })
                .collect()
        })
        .collect()
}

/// Rank of the coefficient matrix of quaternary `forms` over the monomials they use.
pub fn span_dimension(forms: &[GaussPoly]) -> usize {
    let mut monos: Vec<_> = forms.iter().flat_map(|f| f.terms().iter().map(|(m, _)| *m)).collect();
    monos.sort_by(|a, b| a.exponents(4).cmp(b.exponents(4)));
    monos.dedup();
    Matrix::from_fn(forms.len(), monos.len(), |r, c| forms[r].coeff(&monos[c])).rank()
}

/// Column basis of a matrix, taken at the pivot columns.
fn column_basis(m: &GaussMatrix) -> Vec<Vec<GaussRational>> {
    let (_, pivots) = m.rref();
    pivots.iter().map(|&c| m.column(c)).collect()
}

/// Minimum weighted degree of `f` in an eigenbasis of the involution `t`,
/// where coordinates of the `-1` eigenspace weigh 1 and the rest 0.
pub fn monomial_valuation(t: &GaussMatrix, f: &GaussPoly) -> Result<u32, GeometryError> {
    if f.is_zero() {
        return Err(GeometryError::ValuationInfinite);
    }
    let n = t.rows();
    if !(t * t).is_identity() {
        return Err(GeometryError::Malformed("valuation needs an involution".into()));
    }
    let id = GaussMatrix::identity(n);
    let half = gauss(1, 0) / gauss(2, 0);
    let plus = Matrix::from_fn(n, n, |r, c| (id.get(r, c) + t.get(r, c)) * half.clone());
    let minus = Matrix::from_fn(n, n, |r, c| (id.get(r, c) - t.get(r, c)) * half.clone());
    let plus_basis = column_basis(&plus);
    let mut basis = plus_basis.clone();
    basis.extend(column_basis(&minus));
    let b = Matrix::from_fn(n, n, |r, c| basis[c][r].clone());
    let g = f.compose(&linear_images(&b, f.order()));
    let k = plus_basis.len();
    Ok(g.terms()
        .iter()
        .map(|(m, _)| (k..n).map(|v| u32::from(m.exponent(v))).sum::<u32>())
        .min()
        .expect("nonzero polynomial has a term"))
}

/// Whether every index `k` occurs an even number of times in the
/// exponent vector `a` over the pairs `W_PAIRS`.
pub fn invariant_monomial_check(a: &[u32; 10]) -> bool {
    (0..5).all(|k| {
        let s: u32 = W_PAIRS
            .iter()
            .zip(a)
            .filter(|((i, j), _)| *i == k || *j == k)
            .map(|(_, e)| e)
            .sum();
        s.is_multiple_of(2)
    })
}

/// `prod phi_ij^a_ij` as a polynomial in `x`.
pub fn phi_monomial(phis: &[GaussPoly], a: &[u32; 10]) -> GaussPoly {
    let ring = x_ring();
    phis.iter().zip(a).fold(ring.constant(gauss(1, 0)), |acc, (p, &e)| &acc * &p.pow(e))
}

/// Direct invariance of `prod phi_ij^a_ij` under each of `elements`.
/// Each element acts as a ring map, so it suffices to act on the factors.
pub struct InvarianceChecker {
    phis: Vec<GaussPoly>,
    acted: Vec<Vec<GaussPoly>>,
}

impl InvarianceChecker {
    pub fn new(elements: &[GaussMatrix]) -> Self {
        let phis = phi_forms();
        let acted = elements.iter().map(|g| phis.iter().map(|p| act(g, p)).collect()).collect();
        InvarianceChecker { phis, acted }
    }

    pub fn is_invariant(&self, a: &[u32; 10]) -> bool {
        let f = phi_monomial(&self.phis, a);
        self.acted.iter().all(|images| phi_monomial(images, a) == f)
    }
}

/// All exponent vectors over the ten pairs with total degree at most `d`.
pub fn exponent_vectors_up_to(d: u32) -> Vec<[u32; 10]> {
    fn rec(pos: usize, left: u32, cur: &mut [u32; 10], out: &mut Vec<[u32; 10]>) {
        if pos == 10 {
            out.push(*cur);
            return;
        }
        for e in 0..=left {
            cur[pos] = e;
            rec(pos + 1, left - e, cur, out);
        }
        cur[pos] = 0;
    }
    let mut out = Vec::new();
    rec(0, d, &mut [0; 10], &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{generate_group, reflections};
    use crate::model::w_index;

    #[test]
    fn table_matches_reference() {
        let t = sign_table(&reflections(), &phi_forms()).unwrap();
        let expected: Vec<Vec<i8>> = REFERENCE_SIGNS.iter().map(|r| r.to_vec()).collect();
        assert_eq!(t, expected);
        assert_eq!(span_dimension(&phi_forms()), 10);
    }

    #[test]
    fn non_eigenvector_is_rejected() {
        let f = x_ring().parse_with_imag("x1*x2 + x1^2", imag_unit()).unwrap();
        let err = sign_table(&reflections(), &[f]).unwrap_err();
        assert!(matches!(err, GeometryError::NotEigenvector { form: 0, .. }));
    }

    #[test]
    fn valuations_of_forms() {
        let t = reflections();
        let phi = phi_forms();
        for r in 0..5 {
            for (v, &(i, j)) in W_PAIRS.iter().enumerate() {
                let expected = u32::from(r == i || r == j);
                assert_eq!(monomial_valuation(&t[r], &phi[v]).unwrap(), expected);
            }
        }
        let one = x_ring().constant(gauss(1, 0));
        assert_eq!(monomial_valuation(&t[0], &one).unwrap(), 0);
        assert_eq!(
            monomial_valuation(&t[0], &x_ring().zero()),
            Err(GeometryError::ValuationInfinite)
        );
    }

    #[test]
    fn five_cycle_is_invariant() {
        let mut a = [0u32; 10];
        for k in 0..5 {
            a[w_index(k, (k + 1) % 5)] = 1;
        }
        assert!(invariant_monomial_check(&a));
        let g = generate_group(4, &reflections()).unwrap();
        assert!(InvarianceChecker::new(g.elements()).is_invariant(&a));
        let mut b = [0u32; 10];
        b[0] = 1;
        assert!(!invariant_monomial_check(&b));
        assert!(invariant_monomial_check(&[0; 10]));
    }

    #[test]
    fn exponent_enumeration_count() {
        // C(10 + 2, 2) monomials of degree at most 2.
        assert_eq!(exponent_vectors_up_to(2).len(), 66);
    }
}
