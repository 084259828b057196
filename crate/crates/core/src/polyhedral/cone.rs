use super::lp::{maximize, LpOutcome};
use crate::matrix::Matrix;
use crate::scalar::{OrderedField, Rational};
use crate::snf::IntMatrix;

/// The set of nonnegative combinations of finitely many nonzero vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone<T = Rational> {
    dim: usize,
    generators: Vec<Vec<T>>,
}

/// Integer matrix read as a linear map from column space to row space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMapZ {
    pub matrix: IntMatrix,
}

impl LinearMapZ {
    pub fn new(matrix: IntMatrix) -> Self {
        LinearMapZ { matrix }
    }

    pub fn source_dim(&self) -> usize {
        self.matrix.cols()
    }

    pub fn target_dim(&self) -> usize {
        self.matrix.rows()
    }
}

/// Cone spanned by the images of the basis vectors indexed by `face`.
pub fn image_cone(face: &[usize], map: &LinearMapZ) -> Cone<Rational> {
    let gens = face
        .iter()
        .map(|&c| {
            map.matrix
                .column(c)
                .into_iter()
                .map(Rational::from_integer)
                .collect()
        })
        .collect();
    Cone::new(map.target_dim(), gens)
}

fn dot<T: OrderedField>(a: &[T], b: &[T]) -> T {
    a.iter().zip(b).fold(T::zero(), |acc, (x, y)| acc.add_ref(&x.mul_ref(y)))
}

impl<T: OrderedField> Cone<T> {
    /// Zero generators are dropped since they do not change the cone.
    pub fn new(dim: usize, generators: Vec<Vec<T>>) -> Self {
        for g in &generators {
            assert_eq!(g.len(), dim, "generator of wrong length");
        }
        let generators = generators
            .into_iter()
            .filter(|g| g.iter().any(|x| !x.is_zero()))
            .collect();
        Cone { dim, generators }
    }

    /// The cone spanned by the standard basis.
    pub fn orthant(dim: usize) -> Self {
        let gens = (0..dim)
            .map(|i| (0..dim).map(|j| if i == j { T::one() } else { T::zero() }).collect())
            .collect();
        Cone::new(dim, gens)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Vec<T>] {
        &self.generators
    }

    /// Dimension of the linear span.
    pub fn span_dim(&self) -> usize {
        if self.generators.is_empty() {
            return 0;
        }
        Matrix::from_rows(self.generators.clone()).rank()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.span_dim() == self.dim
    }

    /// Matrix whose columns are the generators.
    fn generator_matrix(&self) -> Matrix<T> {
        Matrix::from_fn(self.dim, self.generators.len(), |r, c| self.generators[c][r].clone())
    }

    pub fn contains(&self, u: &[T]) -> bool {
        assert_eq!(u.len(), self.dim, "dimension mismatch");
        if u.iter().all(|x| x.is_zero()) {
            return true;
        }
        if self.generators.is_empty() {
            return false;
        }
        let m = self.generators.len();
        let zeros = vec![T::zero(); m];
        !matches!(maximize(&self.generator_matrix(), u, &zeros), LpOutcome::Infeasible)
    }

    /// A vector `y` with `y.g >= 0` for every generator and `y.u < 0`,
    /// certifying `u` lies outside the cone.
    pub fn farkas_certificate(&self, u: &[T]) -> Option<Vec<T>> {
        // Variables y+ (d), y- (d), slacks (m). Rows: g.(y+ - y-) - s_g = 0,
        // u.(y+ - y-) + t = -1 with t >= 0.
        let (d, m) = (self.dim, self.generators.len());
        let cols = 2 * d + m + 1;
        let mut rows = Vec::with_capacity(m + 1);
        let mut rhs = Vec::with_capacity(m + 1);
        for (k, g) in self.generators.iter().enumerate() {
            let mut row = vec![T::zero(); cols];
            for i in 0..d {
                row[i] = g[i].clone();
                row[d + i] = -g[i].clone();
            }
            row[2 * d + k] = -T::one();
            rows.push(row);
            rhs.push(T::zero());
        }
        let mut row = vec![T::zero(); cols];
        for i in 0..d {
            row[i] = u[i].clone();
            row[d + i] = -u[i].clone();
        }
        row[cols - 1] = T::one();
        rows.push(row);
        rhs.push(-T::one());
        let a = Matrix::from_rows(rows);
        match maximize(&a, &rhs, &vec![T::zero(); cols]) {
            LpOutcome::Optimal { x, .. } => Some((0..d).map(|i| x[i].sub_ref(&x[d + i])).collect()),
            _ => None,
        }
    }

    /// Whether `u` is a combination of all generators with strictly
    /// positive coefficients, i.e. lies in the relative interior.
    pub fn contains_relative_interior(&self, u: &[T]) -> bool {
        assert_eq!(u.len(), self.dim, "dimension mismatch");
        let m = self.generators.len();
        if m == 0 {
            return u.iter().all(|x| x.is_zero());
        }
        // Columns: lambda (m), s, slack (m), t. Maximize s.
        let (d, cols) = (self.dim, 2 * m + 2);
        let s = m;
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for i in 0..d {
            let mut row = vec![T::zero(); cols];
            for (k, g) in self.generators.iter().enumerate() {
                row[k] = g[i].clone();
            }
            rows.push(row);
            rhs.push(u[i].clone());
        }
        for k in 0..m {
            let mut row = vec![T::zero(); cols];
            row[k] = T::one();
            row[s] = -T::one();
            row[s + 1 + k] = -T::one();
            rows.push(row);
            rhs.push(T::zero());
        }
        let mut row = vec![T::zero(); cols];
        row[s] = T::one();
        row[cols - 1] = T::one();
        rows.push(row);
        rhs.push(T::one());
        let mut cost = vec![T::zero(); cols];
        cost[s] = T::one();
        match maximize(&Matrix::from_rows(rows), &rhs, &cost) {
            LpOutcome::Optimal { value, .. } => value.is_positive(),
            _ => false,
        }
    }

    /// Sum of the generators, an interior point when the cone is full-dimensional.
    pub fn generator_sum(&self) -> Vec<T> {
        let mut acc = vec![T::zero(); self.dim];
        for g in &self.generators {
            for (a, x) in acc.iter_mut().zip(g) {
                *a = a.add_ref(x);
            }
        }
        acc
    }

    /// Whether every generator of `other` lies in `self`.
    pub fn contains_cone(&self, other: &Cone<T>) -> bool {
        other.generators.iter().all(|g| self.contains(g))
    }

    /// Halfspace/hyperplane description by Fourier–Motzkin elimination of
    /// the combination coefficients.
    pub fn facet_description(&self) -> FacetDescription<T> {
        fourier_motzkin(self)
    }
}

/// `{x : e.x = 0 for e in equalities, a.x >= 0 for a in inequalities}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetDescription<T> {
    pub equalities: Vec<Vec<T>>,
    pub inequalities: Vec<Vec<T>>,
}

impl<T: OrderedField> FacetDescription<T> {
    pub fn contains(&self, x: &[T]) -> bool {
        self.equalities.iter().all(|e| dot(e, x).is_zero())
            && self.inequalities.iter().all(|a| !dot(a, x).is_negative())
    }
}

/// Scales so the first nonzero entry has absolute value 1.
fn normalize<T: OrderedField>(v: &mut [T]) {
    if let Some(p) = v.iter().find(|x| !x.is_zero()).cloned() {
        let s = p.abs().inv();
        for x in v.iter_mut() {
            *x = x.mul_ref(&s);
        }
    }
}

struct Row<T> {
    coeffs: Vec<T>,
    history: u64,
}

fn fourier_motzkin<T: OrderedField>(cone: &Cone<T>) -> FacetDescription<T> {
    let (d, m) = (cone.dim, cone.generators.len());
    assert!(m <= 64, "too many generators for elimination");
    // Coordinates: x (d) then lambda (m).
    let width = d + m;
    let mut equalities: Vec<Vec<T>> = (0..d)
        .map(|i| {
            let mut row = vec![T::zero(); width];
            row[i] = T::one();
            for (k, g) in cone.generators.iter().enumerate() {
                row[d + k] = -g[i].clone();
            }
            row
        })
        .collect();
    let mut inequalities: Vec<Row<T>> = (0..m)
        .map(|k| {
            let mut row = vec![T::zero(); width];
            row[d + k] = T::one();
            Row { coeffs: row, history: 1 << k }
        })
        .collect();

    // Eliminate lambdas through equalities where possible.
    let mut eliminated = vec![false; m];
    let mut remaining_eq = Vec::new();
    while let Some(eq) = equalities.pop() {
        match (0..m).find(|&k| !eliminated[k] && !eq[d + k].is_zero()) {
            None => remaining_eq.push(eq),
            Some(k) => {
                eliminated[k] = true;
                let col = d + k;
                let piv = eq[col].clone();
                let substitute = |row: &mut Vec<T>| {
                    if !row[col].is_zero() {
                        let f = row[col].div_ref(&piv);
                        for (v, e) in row.iter_mut().zip(&eq) {
                            *v = v.sub_ref(&f.mul_ref(e));
                        }
                    }
                };
                for e in equalities.iter_mut() {
                    substitute(e);
                }
                for e in remaining_eq.iter_mut() {
                    substitute(e);
                }
                for r in inequalities.iter_mut() {
                    substitute(&mut r.coeffs);
                }
            }
        }
    }

    // Fourier–Motzkin on the free lambdas, with Chernikov's history bound.
    let mut steps = 0;
    for k in (0..m).filter(|&k| !eliminated[k]) {
        steps += 1;
        let col = d + k;
        let (mut pos, mut neg, mut keep) = (Vec::new(), Vec::new(), Vec::new());
        for r in inequalities {
            if r.coeffs[col].is_positive() {
                pos.push(r);
            } else if r.coeffs[col].is_negative() {
                neg.push(r);
            } else {
                keep.push(r);
            }
        }
        for p in &pos {
            for n in &neg {
                let history = p.history | n.history;
                if history.count_ones() > steps + 1 {
                    continue;
                }
                let a = n.coeffs[col].abs();
                let b = p.coeffs[col].clone();
                let coeffs: Vec<T> = p
                    .coeffs
                    .iter()
                    .zip(&n.coeffs)
                    .map(|(x, y)| x.mul_ref(&a).add_ref(&y.mul_ref(&b)))
                    .collect();
                keep.push(Row { coeffs, history });
            }
        }
        inequalities = keep;
    }

    let mut ineqs: Vec<Vec<T>> = Vec::new();
    for r in inequalities {
        let mut v: Vec<T> = r.coeffs[..d].to_vec();
        if v.iter().all(|x| x.is_zero()) {
            continue;
        }
        normalize(&mut v);
        if !ineqs.contains(&v) {
            ineqs.push(v);
        }
    }
    let mut eqs: Vec<Vec<T>> = Vec::new();
    for e in remaining_eq {
        let v: Vec<T> = e[..d].to_vec();
        if v.iter().any(|x| !x.is_zero()) {
            eqs.push(v);
        }
    }
    FacetDescription { equalities: eqs, inequalities: ineqs }
}
