//! Behaviors of n-D systems presented by matrices over the Laurent ring:
//! characteristic ideals, autonomy classification and the degree of autonomy.
//!
//! A system with `k` variables on the lattice `Z^n` is presented by an
//! `l x k` matrix of Laurent polynomials; the rows are the laws the
//! trajectories satisfy. The characteristic ideal is generated by the
//! `k x k` minors of the presenting matrix (independent of the presentation,
//! by Cauchy–Binet). The degree of autonomy is the codimension of its variety
//! in the n-torus: 0 for non-autonomous systems, `n` for strongly autonomous
//! ones, infinity for the zero behavior.

use std::fmt;

use itertools::Itertools;

use crate::ideal::LaurentIdeal;
use crate::poly::LaurentPoly;

/// Degree of autonomy: a value in `{0, 1, ..., n}` or infinity (the zero
/// behavior).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum AutonomyDegree {
    Finite(usize),
    Infinite,
}

impl AutonomyDegree {
    pub fn is_finite(&self) -> bool {
        matches!(self, AutonomyDegree::Finite(_))
    }

    pub fn finite(&self) -> Option<usize> {
        match self {
            AutonomyDegree::Finite(d) => Some(*d),
            AutonomyDegree::Infinite => None,
        }
    }
}

impl fmt::Display for AutonomyDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AutonomyDegree::Finite(d) => write!(f, "{d}"),
            AutonomyDegree::Infinite => write!(f, "infinity"),
        }
    }
}

/// An `l x k` matrix of Laurent polynomials in `n` variables, presenting the
/// row-generated submodule of the free module of rank `k`.
///
/// `l` is the presented row count, not the minimal number of generators of
/// the submodule.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SystemMatrix {
    n: usize,
    k: usize,
    rows: Vec<Vec<LaurentPoly>>,
}

impl SystemMatrix {
    pub fn new(n: usize, k: usize, rows: Vec<Vec<LaurentPoly>>) -> SystemMatrix {
        assert!(k >= 1, "system must have at least one variable column");
        for row in &rows {
            assert_eq!(row.len(), k, "row length must equal k");
            for entry in row {
                assert_eq!(entry.dim(), n, "entry dimension must equal n");
            }
        }
        SystemMatrix { n, k, rows }
    }

    /// A scalar system (`k = 1`) with the given laws.
    pub fn scalar(n: usize, laws: Vec<LaurentPoly>) -> SystemMatrix {
        Self::new(n, 1, laws.into_iter().map(|p| vec![p]).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<LaurentPoly>] {
        &self.rows
    }

    pub fn entry(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.rows[i][j]
    }

    fn determinant(&self, row_idx: &[usize]) -> LaurentPoly {
        det_laplace(&self.rows, row_idx, &(0..self.k).collect::<Vec<_>>(), self.n)
    }

    /// All `k x k` minors, enumerated over row subsets in lexicographic
    /// index order; empty when there are fewer than `k` rows.
    pub fn maximal_minors(&self) -> Vec<LaurentPoly> {
        if self.rows.len() < self.k {
            return Vec::new();
        }
        (0..self.rows.len())
            .combinations(self.k)
            .map(|idx| self.determinant(&idx))
            .collect()
    }

    /// The characteristic ideal: the Laurent ideal generated by all
    /// `k x k` minors (the zero ideal when `l < k`). The ideal constructor
    /// strips unit factors and content from the minors.
    pub fn characteristic_ideal(&self) -> LaurentIdeal {
        let minors: Vec<LaurentPoly> = self
            .maximal_minors()
            .into_iter()
            .filter(|m| !m.is_zero())
            .collect();
        LaurentIdeal::from_gens(self.n, minors)
    }

    /// True exactly when the characteristic ideal is nonzero.
    pub fn is_autonomous(&self) -> bool {
        !self.characteristic_ideal().is_zero()
    }

    /// The degree of autonomy: infinity for the zero behavior (unit
    /// characteristic ideal), 0 for non-autonomous systems, otherwise the
    /// codimension of the characteristic variety.
    pub fn degree_of_autonomy(&self) -> AutonomyDegree {
        degree_of_ideal(self.n, &self.characteristic_ideal())
    }

    /// True when the behavior is nonzero with a zero-dimensional
    /// characteristic variety, i.e. the degree of autonomy equals `n`.
    pub fn is_strongly_autonomous(&self) -> bool {
        self.degree_of_autonomy() == AutonomyDegree::Finite(self.n)
    }
}

fn det_laplace(
    rows: &[Vec<LaurentPoly>],
    row_idx: &[usize],
    col_idx: &[usize],
    n: usize,
) -> LaurentPoly {
    if row_idx.is_empty() {
        return LaurentPoly::one(n);
    }
    let mut acc = LaurentPoly::zero(n);
    let rest_rows = &row_idx[1..];
    for (pos, &col) in col_idx.iter().enumerate() {
        let entry = &rows[row_idx[0]][col];
        if entry.is_zero() {
            continue;
        }
        let rest_cols: Vec<usize> = col_idx
            .iter()
            .copied()
            .filter(|&c| c != col)
            .collect();
        let cofactor = det_laplace(rows, rest_rows, &rest_cols, n);
        let signed = if pos % 2 == 0 {
            entry * &cofactor
        } else {
            -&(entry * &cofactor)
        };
        acc = &acc + &signed;
    }
    acc
}

pub(crate) fn degree_of_ideal(n: usize, characteristic: &LaurentIdeal) -> AutonomyDegree {
    if !characteristic.is_proper() {
        AutonomyDegree::Infinite
    } else if characteristic.is_zero() {
        AutonomyDegree::Finite(0)
    } else {
        AutonomyDegree::Finite(n - characteristic.torus_dimension())
    }
}

/// Full classification of one system.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AutonomyReport {
    pub n: usize,
    pub k: usize,
    pub rows: usize,
    pub degree: AutonomyDegree,
    pub autonomous: bool,
    pub strongly_autonomous: bool,
    pub zero_behavior: bool,
    pub under_determined: bool,
    /// Torus dimension of the characteristic variety; `None` when the
    /// variety is empty (zero behavior).
    pub char_ideal_dim: Option<usize>,
    /// Canonical generators (the saturated reduced basis) of the
    /// characteristic ideal.
    pub char_ideal_gens: Vec<LaurentPoly>,
}

/// Computes the characteristic ideal once and populates every report field.
pub fn analyze(m: &SystemMatrix) -> AutonomyReport {
    let ci = m.characteristic_ideal();
    let degree = degree_of_ideal(m.n(), &ci);
    let zero_behavior = !ci.is_proper();
    let char_ideal_dim = if zero_behavior {
        None
    } else {
        Some(ci.torus_dimension())
    };
    AutonomyReport {
        n: m.n(),
        k: m.k(),
        rows: m.num_rows(),
        degree,
        autonomous: degree >= AutonomyDegree::Finite(1),
        strongly_autonomous: degree == AutonomyDegree::Finite(m.n()),
        zero_behavior,
        under_determined: m.num_rows() < m.k(),
        char_ideal_dim,
        char_ideal_gens: ci.saturated_basis().gens().to_vec(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{Monomial, Rational};
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn v(dim: usize, i: usize) -> LaurentPoly {
        LaurentPoly::variable(dim, i)
    }

    fn one(dim: usize) -> LaurentPoly {
        LaurentPoly::one(dim)
    }

    fn shift(dim: usize, i: usize) -> LaurentPoly {
        &v(dim, i) - &one(dim)
    }

    /// The two-variable constant system: column (s1 - 1; s2 - 1).
    fn constant_system() -> SystemMatrix {
        SystemMatrix::scalar(2, vec![shift(2, 0), shift(2, 1)])
    }

    #[test]
    fn characteristic_ideal_of_scalar_column() {
        let ci = constant_system().characteristic_ideal();
        assert_eq!(
            ci,
            LaurentIdeal::from_gens(2, vec![shift(2, 0), shift(2, 1)])
        );
    }

    #[test]
    fn characteristic_ideal_of_identity_is_unit() {
        let id = SystemMatrix::new(
            2,
            2,
            vec![
                vec![one(2), LaurentPoly::zero(2)],
                vec![LaurentPoly::zero(2), one(2)],
            ],
        );
        assert!(!id.characteristic_ideal().is_proper());
    }

    #[test]
    fn wide_matrix_has_zero_characteristic_ideal() {
        let wide = SystemMatrix::new(2, 2, vec![vec![shift(2, 0), shift(2, 1)]]);
        assert!(wide.characteristic_ideal().is_zero());
        assert!(!wide.is_autonomous());
        assert_eq!(wide.degree_of_autonomy(), AutonomyDegree::Finite(0));
    }

    #[test]
    fn zero_matrix_is_not_autonomous() {
        let m = SystemMatrix::scalar(2, vec![LaurentPoly::zero(2)]);
        assert!(!m.is_autonomous());
    }

    #[test]
    fn degrees_of_shift_systems() {
        let single = SystemMatrix::scalar(2, vec![shift(2, 0)]);
        assert_eq!(single.degree_of_autonomy(), AutonomyDegree::Finite(1));
        assert!(!single.is_strongly_autonomous());

        assert_eq!(
            constant_system().degree_of_autonomy(),
            AutonomyDegree::Finite(2)
        );
        assert!(constant_system().is_strongly_autonomous());
        assert!(constant_system().is_autonomous());
    }

    #[test]
    fn three_coprime_laws_give_zero_behavior() {
        // (s1 - 1, s2 - 1, s1*s2 - 4): no common zero on the torus
        let m = SystemMatrix::scalar(
            2,
            vec![
                shift(2, 0),
                shift(2, 1),
                &(&v(2, 0) * &v(2, 1)) - &LaurentPoly::constant_i64(2, 4),
            ],
        );
        assert_eq!(m.degree_of_autonomy(), AutonomyDegree::Infinite);
        assert!(!m.is_strongly_autonomous());
    }

    #[test]
    fn analyze_constant_system() {
        let report = analyze(&constant_system());
        assert_eq!(report.degree, AutonomyDegree::Finite(2));
        assert!(report.autonomous);
        assert!(report.strongly_autonomous);
        assert!(!report.zero_behavior);
        assert!(!report.under_determined);
        assert_eq!(report.char_ideal_dim, Some(0));
        assert_eq!(report.char_ideal_gens, vec![shift(2, 0), shift(2, 1)]);
    }

    #[test]
    fn analyze_under_determined_row() {
        let wide = SystemMatrix::new(2, 2, vec![vec![shift(2, 0), shift(2, 1)]]);
        let report = analyze(&wide);
        assert_eq!(report.degree, AutonomyDegree::Finite(0));
        assert!(!report.autonomous);
        assert!(report.under_determined);
        assert!(!report.zero_behavior);
        assert_eq!(report.char_ideal_dim, Some(2));
    }

    #[test]
    fn analyze_identity_system() {
        let id = SystemMatrix::new(
            2,
            2,
            vec![
                vec![one(2), LaurentPoly::zero(2)],
                vec![LaurentPoly::zero(2), one(2)],
            ],
        );
        let report = analyze(&id);
        assert_eq!(report.degree, AutonomyDegree::Infinite);
        assert!(report.zero_behavior);
        assert!(report.autonomous);
        assert!(!report.strongly_autonomous);
        assert_eq!(report.char_ideal_dim, None);
    }

    #[test]
    fn two_by_two_determinant() {
        // det [[s1, 1], [1, s2]] = s1*s2 - 1
        let m = SystemMatrix::new(
            2,
            2,
            vec![vec![v(2, 0), one(2)], vec![one(2), v(2, 1)]],
        );
        let minors = m.maximal_minors();
        assert_eq!(minors, vec![&(&v(2, 0) * &v(2, 1)) - &one(2)]);
    }

    #[test]
    fn minor_count_follows_binomial() {
        let m = SystemMatrix::new(
            2,
            2,
            vec![
                vec![v(2, 0), one(2)],
                vec![one(2), v(2, 1)],
                vec![shift(2, 0), shift(2, 1)],
            ],
        );
        assert_eq!(m.maximal_minors().len(), 3);
    }

    fn arb_laurent_poly(dim: usize) -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec(
            (prop::collection::vec(-1i64..=1, dim), -3i64..=3),
            1..=2,
        )
        .prop_map(move |terms| {
            LaurentPoly::from_terms(
                dim,
                terms
                    .into_iter()
                    .map(|(e, c)| (Monomial::new(e), Rational::from(BigInt::from(c)))),
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(12))]

        /// Appending a random combination of existing rows, permuting rows and
        /// rescaling a row by a unit leaves the characteristic ideal unchanged.
        #[test]
        fn characteristic_ideal_is_presentation_invariant(
            laws in prop::collection::vec(arb_laurent_poly(2), 2),
            c1 in arb_laurent_poly(2),
            c2 in arb_laurent_poly(2),
            unit_exp in prop::collection::vec(-1i64..=1, 2),
        ) {
            let m = SystemMatrix::scalar(2, laws.clone());
            let ci = m.characteristic_ideal();

            // permute rows
            let permuted = SystemMatrix::scalar(2, vec![laws[1].clone(), laws[0].clone()]);
            prop_assert_eq!(permuted.characteristic_ideal(), ci.clone());

            // rescale a row by a unit
            let unit = LaurentPoly::term(
                Monomial::new(unit_exp),
                Rational::from(BigInt::from(3)),
            );
            let rescaled =
                SystemMatrix::scalar(2, vec![&laws[0] * &unit, laws[1].clone()]);
            prop_assert_eq!(rescaled.characteristic_ideal(), ci.clone());

            // append a combination of the rows
            let combo = &(&c1 * &laws[0]) + &(&c2 * &laws[1]);
            let extended =
                SystemMatrix::scalar(2, vec![laws[0].clone(), laws[1].clone(), combo]);
            prop_assert_eq!(extended.characteristic_ideal(), ci);
        }

        /// Appending rows never decreases the degree of autonomy.
        #[test]
        fn degree_is_monotone_under_new_laws(
            laws in prop::collection::vec(arb_laurent_poly(2), 1..=2),
            extra in arb_laurent_poly(2),
        ) {
            let m = SystemMatrix::scalar(2, laws.clone());
            let mut more = laws;
            more.push(extra);
            let m2 = SystemMatrix::scalar(2, more);
            prop_assert!(m2.degree_of_autonomy() >= m.degree_of_autonomy());
        }

        /// For l >= k with proper nonzero characteristic ideal the degree is
        /// bounded by l - k + 1 (Macaulay's bound on determinantal ideals).
        #[test]
        fn macaulay_bound_on_degree(
            laws in prop::collection::vec(arb_laurent_poly(2), 1..=3),
        ) {
            let m = SystemMatrix::scalar(2, laws.clone());
            if let AutonomyDegree::Finite(d) = m.degree_of_autonomy() {
                prop_assert!(d <= laws.len()); // l - k + 1 with k = 1
            }
        }
    }
}
