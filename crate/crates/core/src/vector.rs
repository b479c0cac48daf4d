//! Matrix-vector ("neural") logic.
//!
//! Truth values become orthonormal vectors `f` and `t`; each connective is a
//! matrix assembled from outer products of those vectors. A dyadic
//! connective acts on the Kronecker product of its two operand vectors, so
//! evaluating a formula applies matrices in exactly the order the operators
//! are written in prefix notation. Because everything is linear, weighted
//! inputs `α t + (1 − α) f` flow through unchanged and the coefficient on `t`
//! of the result is a probability.

use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};

use nalgebra::{DMatrix, DVector};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::assignment::{check_guard, grid_row, zip_assignment, Assignment};
use crate::error::EvalError;
use crate::exec::Exec;
use crate::syntax::Formula;
use crate::trivalent::{lukasiewicz, TruthValue3};

pub const MIN_DIMENSION: usize = 2;
pub const MAX_DIMENSION: usize = 64;

/// Orthonormality of a basis is checked to this tolerance.
pub const BASIS_TOLERANCE: f64 = 1e-12;
/// A vector counts as lying in `span{f, t}` when its residual is this small.
pub const SPAN_TOLERANCE: f64 = 1e-9;

/// Random draws whose absolute cosine exceeds `1 - COLLINEAR_MARGIN` are
/// discarded.
const COLLINEAR_MARGIN: f64 = 1e-6;

/// Grid cells and projection values are limited to this many variables.
pub const MAX_GRID_VARIABLES: usize = 10;

pub type AssignmentVec = Assignment<f64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasisMode {
    /// `f = e₁`, `t = e₂`.
    Canonical,
    /// Two seeded Gaussian draws, orthonormalised.
    Random { seed: u64 },
}

impl fmt::Display for BasisMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisMode::Canonical => f.write_str("canonical"),
            BasisMode::Random { seed } => write!(f, "random:{seed}"),
        }
    }
}

/// The pair of orthonormal truth vectors everything else is built from.
#[derive(Debug, Clone, PartialEq)]
pub struct Basis {
    f: DVector<f64>,
    t: DVector<f64>,
    fingerprint: u64,
}

fn fingerprint(f: &DVector<f64>, t: &DVector<f64>) -> u64 {
    let mut hasher = DefaultHasher::new();
    f.len().hash(&mut hasher);
    for x in f.iter().chain(t.iter()) {
        x.to_bits().hash(&mut hasher);
    }
    hasher.finish()
}

pub fn make_basis(dim: usize, mode: BasisMode) -> Result<Basis, EvalError> {
    if !(MIN_DIMENSION..=MAX_DIMENSION).contains(&dim) {
        return Err(EvalError::InvalidDimension(dim));
    }
    let (f, t) = match mode {
        BasisMode::Canonical => (
            DVector::from_fn(dim, |i, _| if i == 0 { 1.0 } else { 0.0 }),
            DVector::from_fn(dim, |i, _| if i == 1 { 1.0 } else { 0.0 }),
        ),
        BasisMode::Random { seed } => random_pair(dim, seed),
    };
    Basis::from_vectors(f, t)
}

fn random_pair(dim: usize, seed: u64) -> (DVector<f64>, DVector<f64>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let a = DVector::<f64>::from_fn(dim, |_, _| StandardNormal.sample(&mut rng));
        let b = DVector::<f64>::from_fn(dim, |_, _| StandardNormal.sample(&mut rng));
        let (na, nb) = (a.norm(), b.norm());
        if na == 0.0 || nb == 0.0 {
            continue;
        }
        let cosine = a.dot(&b) / (na * nb);
        if cosine.abs() > 1.0 - COLLINEAR_MARGIN {
            continue;
        }
        // Gram-Schmidt, with a second pass to mop up cancellation error.
        let f = a / na;
        let mut t = &b - &f * f.dot(&b);
        t -= &f * f.dot(&t);
        let t = t.normalize();
        return (f, t);
    }
}

impl Basis {
    /// Wraps caller-supplied vectors after checking orthonormality.
    pub fn from_vectors(f: DVector<f64>, t: DVector<f64>) -> Result<Self, EvalError> {
        let dim = f.len();
        if t.len() != dim || !(MIN_DIMENSION..=MAX_DIMENSION).contains(&dim) {
            return Err(EvalError::InvalidDimension(dim));
        }
        let ok = (f.dot(&f) - 1.0).abs() <= BASIS_TOLERANCE
            && (t.dot(&t) - 1.0).abs() <= BASIS_TOLERANCE
            && f.dot(&t).abs() <= BASIS_TOLERANCE;
        if !ok {
            return Err(EvalError::OutOfSpan {
                residual: f.dot(&t).abs().max((f.dot(&f) - 1.0).abs()),
            });
        }
        let fingerprint = fingerprint(&f, &t);
        Ok(Self { f, t, fingerprint })
    }

    pub fn dim(&self) -> usize {
        self.f.len()
    }

    pub fn f(&self) -> &DVector<f64> {
        &self.f
    }

    pub fn t(&self) -> &DVector<f64> {
        &self.t
    }

    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    fn wrap(&self, components: DVector<f64>) -> TruthVector {
        TruthVector {
            components,
            basis: self.fingerprint,
        }
    }

    pub fn false_vector(&self) -> TruthVector {
        self.wrap(self.f.clone())
    }

    pub fn true_vector(&self) -> TruthVector {
        self.wrap(self.t.clone())
    }

    /// `α t + (1 − α) f`.
    pub fn vectorize(&self, alpha: f64) -> Result<TruthVector, EvalError> {
        check_weight(alpha)?;
        Ok(self.wrap(
            self.t
                .zip_map(&self.f, |t, f| alpha * t + (1.0 - alpha) * f),
        ))
    }

    /// The coefficients `(⟨f, v⟩, ⟨t, v⟩)`.
    pub fn coordinates(&self, v: &TruthVector) -> Result<(f64, f64), EvalError> {
        self.check_same(v.basis)?;
        Ok((self.f.dot(&v.components), self.t.dot(&v.components)))
    }

    /// Distance from `v` to its projection onto `span{f, t}`.
    pub fn span_residual(&self, v: &TruthVector) -> Result<f64, EvalError> {
        let (on_f, on_t) = self.coordinates(v)?;
        let squared: f64 = (0..self.dim())
            .map(|i| (v.components[i] - on_f * self.f[i] - on_t * self.t[i]).powi(2))
            .sum();
        Ok(squared.sqrt())
    }

    /// Weight of `v` on `t`.
    pub fn decode(&self, v: &TruthVector) -> Result<f64, EvalError> {
        let residual = self.span_residual(v)?;
        if residual > SPAN_TOLERANCE {
            return Err(EvalError::OutOfSpan { residual });
        }
        Ok(self.t.dot(&v.components))
    }

    /// Treats arbitrary components as a vector on this basis, e.g. to decode
    /// something computed outside the engine.
    pub fn adopt(&self, components: DVector<f64>) -> Result<TruthVector, EvalError> {
        if components.len() != self.dim() {
            return Err(EvalError::InvalidDimension(components.len()));
        }
        Ok(self.wrap(components))
    }

    fn check_same(&self, other: u64) -> Result<(), EvalError> {
        if other == self.fingerprint {
            Ok(())
        } else {
            Err(EvalError::BasisMismatch)
        }
    }
}

fn check_weight(alpha: f64) -> Result<(), EvalError> {
    if (0.0..=1.0).contains(&alpha) {
        Ok(())
    } else {
        Err(EvalError::WeightOutOfRange(alpha))
    }
}

/// A truth value as a real vector, tagged with the basis it belongs to.
#[derive(Debug, Clone, PartialEq)]
pub struct TruthVector {
    components: DVector<f64>,
    basis: u64,
}

impl TruthVector {
    pub fn components(&self) -> &DVector<f64> {
        &self.components
    }

    pub fn basis_fingerprint(&self) -> u64 {
        self.basis
    }
}

/// Kronecker product; block `(i, j)` of the result is `a[(i, j)] · b`.
pub fn kron(a: &DMatrix<f64>, b: &DMatrix<f64>) -> DMatrix<f64> {
    let (ar, ac) = a.shape();
    let (br, bc) = b.shape();
    let mut out = DMatrix::zeros(ar * br, ac * bc);
    for j in 0..ac {
        for i in 0..ar {
            let scale = a[(i, j)];
            if scale == 0.0 {
                continue;
            }
            out.view_mut((i * br, j * bc), (br, bc))
                .zip_apply(b, |o, x| *o = scale * x);
        }
    }
    out
}

/// Kronecker product of two column vectors.
pub fn kron_vec(u: &DVector<f64>, v: &DVector<f64>) -> DVector<f64> {
    let d = v.len();
    DVector::from_fn(u.len() * d, |i, _| u[i / d] * v[i % d])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Connective {
    N,
    C,
    K,
    A,
}

impl Connective {
    pub const ALL: [Connective; 4] = [Connective::N, Connective::C, Connective::K, Connective::A];

    pub fn from_symbol(symbol: char) -> Option<Self> {
        match symbol {
            'N' => Some(Connective::N),
            'C' => Some(Connective::C),
            'K' => Some(Connective::K),
            'A' => Some(Connective::A),
            _ => None,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Connective::N => 'N',
            Connective::C => 'C',
            Connective::K => 'K',
            Connective::A => 'A',
        }
    }

    pub fn arity(self) -> usize {
        if self == Connective::N {
            1
        } else {
            2
        }
    }
}

/// A connective as a matrix: `d × d` for negation, `d × d²` otherwise.
#[derive(Debug, Clone, PartialEq)]
pub struct LogicMatrix {
    connective: Connective,
    matrix: DMatrix<f64>,
    basis: u64,
}

#[derive(Clone, Copy)]
enum Basic {
    F,
    T,
}

/// Output and operand pairs of the outer-product sums, one term per row of
/// the classical table.
fn dyadic_terms(connective: Connective) -> [(Basic, Basic, Basic); 4] {
    use Basic::{F, T};
    match connective {
        Connective::C => [(T, T, T), (F, T, F), (T, F, T), (T, F, F)],
        Connective::K => [(T, T, T), (F, T, F), (F, F, T), (F, F, F)],
        Connective::A => [(T, T, T), (T, T, F), (T, F, T), (F, F, F)],
        Connective::N => unreachable!("negation is monadic"),
    }
}

pub fn build_matrix(connective: Connective, basis: &Basis) -> LogicMatrix {
    let pick = |b: Basic| match b {
        Basic::F => &basis.f,
        Basic::T => &basis.t,
    };
    let matrix = match connective {
        Connective::N => &basis.f * basis.t.transpose() + &basis.t * basis.f.transpose(),
        dyadic => {
            let d = basis.dim();
            let mut m = DMatrix::zeros(d, d * d);
            for (out, left, right) in dyadic_terms(dyadic) {
                let pair = kron_vec(pick(left), pick(right));
                m += pick(out) * pair.transpose();
            }
            m
        }
    };
    LogicMatrix {
        connective,
        matrix,
        basis: basis.fingerprint,
    }
}

impl LogicMatrix {
    pub fn connective(&self) -> Connective {
        self.connective
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    pub fn apply(&self, operand: &TruthVector) -> Result<TruthVector, EvalError> {
        self.apply_all(std::slice::from_ref(operand))
    }

    /// `M (u ⊗ v)` for a dyadic matrix.
    pub fn apply2(
        &self,
        left: &TruthVector,
        right: &TruthVector,
    ) -> Result<TruthVector, EvalError> {
        self.apply_all(&[left.clone(), right.clone()])
    }

    fn apply_all(&self, operands: &[TruthVector]) -> Result<TruthVector, EvalError> {
        if operands.len() != self.connective.arity() {
            return Err(EvalError::UnsupportedOperator {
                symbol: self.connective.symbol(),
                operands: operands.len(),
            });
        }
        for operand in operands {
            if operand.basis != self.basis {
                return Err(EvalError::BasisMismatch);
            }
        }
        let components = match operands {
            [u] => self.contract(u.components.iter().copied().enumerate()),
            [u, v] => {
                let d = u.components.len();
                self.contract(u.components.iter().enumerate().flat_map(|(j, &uj)| {
                    v.components
                        .iter()
                        .enumerate()
                        .map(move |(k, &vk)| (j * d + k, uj * vk))
                }))
            }
            _ => unreachable!("arity checked above"),
        };
        Ok(TruthVector {
            components,
            basis: self.basis,
        })
    }

    // `Σ w · column(c)` over the (column, weight) pairs. For a dyadic matrix
    // the pairs enumerate `u ⊗ v`, which gives `self.matrix * kron_vec(u, v)`
    // without materialising the d²-long product.
    fn contract(&self, weighted: impl Iterator<Item = (usize, f64)>) -> DVector<f64> {
        let rows = self.matrix.nrows();
        let data = self.matrix.as_slice();
        let mut out = vec![0.0; rows];
        for (c, w) in weighted {
            if w != 0.0 {
                let column = &data[c * rows..(c + 1) * rows];
                for (o, &m) in out.iter_mut().zip(column) {
                    *o += w * m;
                }
            }
        }
        DVector::from_vec(out)
    }
}

/// A basis together with its four connective matrices.
#[derive(Debug, Clone)]
pub struct VectorLogic {
    basis: Basis,
    matrices: [LogicMatrix; 4],
}

impl VectorLogic {
    pub fn new(basis: Basis) -> Self {
        let matrices = Connective::ALL.map(|c| build_matrix(c, &basis));
        Self { basis, matrices }
    }

    pub fn canonical() -> Self {
        Self::new(make_basis(2, BasisMode::Canonical).expect("dimension 2 is valid"))
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    pub fn matrix(&self, connective: Connective) -> &LogicMatrix {
        &self.matrices[connective as usize]
    }

    /// Leaves become `vectorize(weight)` (constants `0 ↦ f`, `1 ↦ t`),
    /// negation multiplies by `N`, and a dyadic node multiplies its matrix
    /// into the Kronecker product of its operands.
    pub fn eval(
        &self,
        formula: &Formula,
        assignment: &AssignmentVec,
    ) -> Result<TruthVector, EvalError> {
        formula.fold(
            |leaf| match leaf {
                Formula::Atom(name) => self.basis.vectorize(assignment.lookup(*name)?),
                Formula::Const(false) => Ok(self.basis.false_vector()),
                Formula::Const(true) => Ok(self.basis.true_vector()),
                Formula::Op(..) => unreachable!("fold only passes leaves"),
            },
            |symbol, operands| {
                let connective = Connective::from_symbol(symbol)
                    .filter(|c| c.arity() == operands.len())
                    .ok_or(EvalError::UnsupportedOperator {
                        symbol,
                        operands: operands.len(),
                    })?;
                self.matrix(connective).apply_all(operands)
            },
        )
    }

    /// `decode(eval(formula, assignment))`.
    pub fn eval_weight(
        &self,
        formula: &Formula,
        assignment: &AssignmentVec,
    ) -> Result<f64, EvalError> {
        self.basis.decode(&self.eval(formula, assignment)?)
    }

    pub fn eval_batch(
        &self,
        formula: &Formula,
        assignments: &[AssignmentVec],
        exec: Exec,
    ) -> Result<Vec<TruthVector>, EvalError> {
        exec.try_map(assignments.len(), |i| self.eval(formula, &assignments[i]))
    }

    /// Evaluates `formula` on every combination of `grid` weights, first
    /// variable most significant, each digit following `grid` order.
    pub fn grid_table(
        &self,
        formula: &Formula,
        grid: &[f64],
        exec: Exec,
    ) -> Result<MatrixTable, EvalError> {
        let variables = formula.free_variables();
        check_guard(variables.len(), MAX_GRID_VARIABLES)?;
        if grid.is_empty() {
            return Ok(MatrixTable {
                variables,
                rows: Vec::new(),
            });
        }
        for &w in grid {
            check_weight(w)?;
        }
        let count = grid.len().pow(variables.len() as u32);
        let rows = exec.try_map(count, |index| {
            let inputs = grid_row(&variables, grid, index);
            let vector = self.eval(formula, &zip_assignment(&variables, &inputs))?;
            let weight = self.basis.decode(&vector)?;
            Ok(MatrixRow {
                inputs,
                vector,
                weight,
            })
        })?;
        Ok(MatrixTable { variables, rows })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MatrixRow {
    pub inputs: Vec<f64>,
    pub vector: TruthVector,
    pub weight: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MatrixTable {
    pub variables: Vec<char>,
    pub rows: Vec<MatrixRow>,
}

/// `α t + (1 − α) f` on `basis`.
pub fn vectorize(alpha: f64, basis: &Basis) -> Result<TruthVector, EvalError> {
    basis.vectorize(alpha)
}

pub fn decode(v: &TruthVector, basis: &Basis) -> Result<f64, EvalError> {
    basis.decode(v)
}

/// One-shot evaluation; build a [`VectorLogic`] when evaluating repeatedly.
pub fn eval_matrix(
    formula: &Formula,
    assignment: &AssignmentVec,
    basis: &Basis,
) -> Result<TruthVector, EvalError> {
    VectorLogic::new(basis.clone()).eval(formula, assignment)
}

/// Weight on `t` of a connective's output given the operand weights.
pub fn projection(connective: Connective, weights: &[f64]) -> Result<f64, EvalError> {
    let value = match (connective, weights) {
        (Connective::N, &[a]) => 1.0 - a,
        (Connective::C, &[a, b]) => 1.0 - a * (1.0 - b),
        (Connective::K, &[a, b]) => a * b,
        (Connective::A, &[a, b]) => a + b - a * b,
        _ => {
            return Err(EvalError::UnsupportedOperator {
                symbol: connective.symbol(),
                operands: weights.len(),
            })
        }
    };
    Ok(value)
}

/// Basis-free scalar counterpart of [`eval_matrix`] followed by [`decode`].
pub fn eval_projection(formula: &Formula, assignment: &AssignmentVec) -> Result<f64, EvalError> {
    formula.fold(
        |leaf| match leaf {
            Formula::Atom(name) => {
                let w = assignment.lookup(*name)?;
                check_weight(w)?;
                Ok(w)
            }
            Formula::Const(value) => Ok(if *value { 1.0 } else { 0.0 }),
            Formula::Op(..) => unreachable!("fold only passes leaves"),
        },
        |symbol, operands| {
            let connective =
                Connective::from_symbol(symbol).ok_or(EvalError::UnsupportedOperator {
                    symbol,
                    operands: operands.len(),
                })?;
            projection(connective, operands)
        },
    )
}

/// Weight on `t` that a widely reproduced listing prints for `A(i ⊗ i)`,
/// namely `(3/4) f + (1/4) t`. The matrix product gives 3/4.
pub const DISJUNCTION_PRINTED_WEIGHT: f64 = 0.25;

#[derive(Debug, Clone, PartialEq)]
pub struct ProjectionDiscrepancy {
    pub inputs: Vec<TruthValue3>,
    pub lukasiewicz: TruthValue3,
    pub projection: f64,
    /// Set where a printed value for this cell disagrees with the matrix
    /// product.
    pub printed_projection: Option<f64>,
}

/// Cells of `{0, ½, 1}^arity` (in 1, ½, 0 order) where the projection
/// semantics and Łukasiewicz's tables disagree.
pub fn compare_with_lukasiewicz(connective: Connective) -> Vec<ProjectionDiscrepancy> {
    let arity = connective.arity();
    let names: Vec<char> = ('p'..).take(arity).collect();
    let cells = TruthValue3::COUNTDOWN.len().pow(arity as u32);
    (0..cells)
        .filter_map(|index| {
            let inputs = grid_row(&names, &TruthValue3::COUNTDOWN, index);
            let weights: Vec<f64> = inputs.iter().map(|v| v.as_f64()).collect();
            let luk = lukasiewicz(connective.symbol(), &inputs).expect("standard connective");
            let proj = projection(connective, &weights).expect("arity matches");
            if (proj - luk.as_f64()).abs() <= BASIS_TOLERANCE {
                return None;
            }
            let printed_projection = (connective == Connective::A
                && inputs.iter().all(|&v| v == TruthValue3::Half))
            .then_some(DISJUNCTION_PRINTED_WEIGHT);
            Some(ProjectionDiscrepancy {
                inputs,
                lukasiewicz: luk,
                projection: proj,
                printed_projection,
            })
        })
        .collect()
}
