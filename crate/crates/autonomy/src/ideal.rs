//! Ideals of the Laurent polynomial ring.
//!
//! An ideal of `A = Q[s1, s1^-1, ..., sn, sn^-1]` is represented through the
//! torus presentation `A = Q[s1, ..., sn, y1, ..., yn] / (s1*y1 - 1, ...,
//! sn*yn - 1)`: a Laurent generator maps to a polynomial in `(s, y)` of the
//! same degree, and together with the inversion relations the generators cut
//! out the full preimage of the ideal. The reduced Gröbner basis of that
//! preimage is canonical, so it decides ideal equality, properness and the
//! dimension of the variety in the torus directly, with no elimination and
//! no degree inflation.
//!
//! The classical saturated contraction in `Q[s1, ..., sn]` — the ideal of
//! polynomials lying in the Laurent ideal, equal to the saturation of any
//! polynomial generating set at `s1*...*sn` — is computed on demand by
//! eliminating the inverse variables, and is cached.

use std::sync::OnceLock;

use crate::groebner::{buchberger, GroebnerBasis};
use crate::order::MonomialOrder;
use crate::poly::{LaurentPoly, Monomial, Rational};

/// An ideal of the Laurent ring in `dim` variables.
///
/// Equality compares the canonical torus-presentation bases, i.e. it is
/// equality of ideals.
#[derive(Clone, Debug)]
pub struct LaurentIdeal {
    dim: usize,
    raw_gens: Vec<LaurentPoly>,
    /// Nonzero generators with monomial units and content stripped.
    normalized_gens: Vec<LaurentPoly>,
    /// Reduced basis of the preimage ideal in `Q[s, y]`.
    torus_gb: GroebnerBasis,
    /// Saturated polynomial contraction in `Q[s]`, computed on first use.
    sat_gb: OnceLock<GroebnerBasis>,
}

impl PartialEq for LaurentIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.torus_gb == other.torus_gb
    }
}

impl Eq for LaurentIdeal {}

/// Rewrites a Laurent polynomial in the `2n` torus coordinates: negative
/// exponents of `s_i` become positive exponents of `y_i`.
fn to_torus_coords(p: &LaurentPoly) -> LaurentPoly {
    let n = p.dim();
    LaurentPoly::from_terms(
        2 * n,
        p.terms().map(|(m, c)| {
            let mut e = vec![0i64; 2 * n];
            for (i, &exp) in m.exponents().iter().enumerate() {
                if exp >= 0 {
                    e[i] = exp;
                } else {
                    e[n + i] = -exp;
                }
            }
            (Monomial::new(e), c.clone())
        }),
    )
}

/// The inversion relations `s_i * y_i - 1`.
fn inversion_relations(n: usize) -> Vec<LaurentPoly> {
    (0..n)
        .map(|i| {
            let mut e = vec![0i64; 2 * n];
            e[i] = 1;
            e[n + i] = 1;
            &LaurentPoly::term(Monomial::new(e), Rational::from(num_bigint::BigInt::from(1)))
                - &LaurentPoly::one(2 * n)
        })
        .collect()
}

/// Reads a `y`-free polynomial in torus coordinates back into `n` variables.
fn from_s_coords(p: &LaurentPoly, n: usize) -> LaurentPoly {
    LaurentPoly::from_terms(
        n,
        p.terms().map(|(m, c)| {
            debug_assert!((n..2 * n).all(|i| m.exponent(i) == 0));
            (Monomial::new(m.exponents()[..n].to_vec()), c.clone())
        }),
    )
}

impl LaurentIdeal {
    /// Builds the ideal generated by `gens`. Zero generators are dropped and
    /// monomial units and rational content are stripped before the canonical
    /// basis is computed.
    pub fn from_gens(dim: usize, gens: Vec<LaurentPoly>) -> LaurentIdeal {
        for g in &gens {
            assert_eq!(g.dim(), dim, "generator dimension mismatch");
        }
        let normalized: Vec<LaurentPoly> = gens
            .iter()
            .filter(|g| !g.is_zero())
            .map(|g| g.normalize().poly_part.primitive_part())
            .collect();
        // Map the balanced Laurent form, not the shifted polynomial part:
        // the torus coordinates preserve the Laurent degree.
        let mut torus_gens: Vec<LaurentPoly> = gens
            .iter()
            .filter(|g| !g.is_zero())
            .map(|g| to_torus_coords(&g.primitive_part()))
            .collect();
        torus_gens.extend(inversion_relations(dim));
        let torus_gb = buchberger(&torus_gens, MonomialOrder::GrevLex);
        LaurentIdeal {
            dim,
            raw_gens: gens,
            normalized_gens: normalized,
            torus_gb,
            sat_gb: OnceLock::new(),
        }
    }

    pub fn zero(dim: usize) -> LaurentIdeal {
        Self::from_gens(dim, Vec::new())
    }

    pub fn unit(dim: usize) -> LaurentIdeal {
        Self::from_gens(dim, vec![LaurentPoly::one(dim)])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn raw_gens(&self) -> &[LaurentPoly] {
        &self.raw_gens
    }

    /// The reduced basis, in `Q[s1, ..., sn]`, of the saturated polynomial
    /// contraction: all polynomials lying in the Laurent ideal. Lazily
    /// computed by eliminating the inverse coordinates and cached.
    pub fn saturated_basis(&self) -> &GroebnerBasis {
        self.sat_gb.get_or_init(|| {
            let n = self.dim;
            if self.is_zero() {
                return GroebnerBasis::zero_ideal(n, MonomialOrder::GrevLex);
            }
            let inverse_vars: Vec<usize> = (n..2 * n).collect();
            let eliminated = self.torus_gb.eliminate(&inverse_vars);
            let contracted: Vec<LaurentPoly> = eliminated
                .gens()
                .iter()
                .map(|g| from_s_coords(g, n))
                .collect();
            let sat = buchberger(&contracted, MonomialOrder::GrevLex);
            debug_assert!(self
                .normalized_gens
                .iter()
                .all(|g| sat.contains(g)));
            sat
        })
    }

    pub fn is_zero(&self) -> bool {
        self.normalized_gens.is_empty()
    }

    /// True unless the ideal is the whole Laurent ring.
    pub fn is_proper(&self) -> bool {
        !self.torus_gb.is_unit_ideal()
    }

    /// Membership test for arbitrary Laurent polynomials.
    pub fn contains(&self, p: &LaurentPoly) -> bool {
        if p.is_zero() {
            return true;
        }
        self.torus_gb.contains(&to_torus_coords(p))
    }

    /// Dimension of the variety cut out in the n-torus. The zero ideal has
    /// the full dimension `n`.
    ///
    /// Panics on the unit ideal, whose variety is empty.
    pub fn torus_dimension(&self) -> usize {
        assert!(
            self.is_proper(),
            "torus dimension of the unit ideal is undefined"
        );
        self.torus_gb.dimension()
    }

    /// Codimension of the variety: `n - torus_dimension`. Defined for proper
    /// nonzero ideals.
    pub fn height(&self) -> usize {
        assert!(!self.is_zero(), "height of the zero ideal is undefined");
        self.dim - self.torus_dimension()
    }

    /// True when `f` is a nonzerodivisor on the quotient by this ideal,
    /// detected by stability of the ideal quotient: `(I : f) = I`.
    pub fn is_nzd_mod(&self, f: &LaurentPoly) -> bool {
        assert!(self.is_proper(), "nonzerodivisor test requires a proper ideal");
        assert!(!f.is_zero(), "nonzerodivisor test requires nonzero f");
        if self.is_zero() {
            // the Laurent ring is an integral domain
            return true;
        }
        let f_torus = to_torus_coords(f);
        self.torus_gb.quotient(&f_torus) == self.torus_gb
    }

    /// The intersection with the Laurent subring on the `keep` variables,
    /// re-read as an ideal in `keep.len()` variables.
    pub fn restrict(&self, keep: &[usize]) -> LaurentIdeal {
        let mut keep = keep.to_vec();
        keep.sort_unstable();
        keep.dedup();
        for &v in &keep {
            assert!(v < self.dim, "kept variable out of range");
        }
        if keep.len() == self.dim {
            return self.clone();
        }
        let n = self.dim;
        // Eliminate every inverse coordinate and the dropped direct ones;
        // what survives generates the intersection with Q[kept s].
        let drop: Vec<usize> = (0..n)
            .filter(|v| !keep.contains(v))
            .chain(n..2 * n)
            .collect();
        let eliminated = self.torus_gb.eliminate(&drop);
        let restricted: Vec<LaurentPoly> = eliminated
            .gens()
            .iter()
            .map(|g| {
                LaurentPoly::from_terms(
                    keep.len(),
                    g.terms().map(|(m, c)| {
                        let e: Vec<i64> = keep.iter().map(|&v| m.exponent(v)).collect();
                        (Monomial::new(e), c.clone())
                    }),
                )
            })
            .collect();
        LaurentIdeal::from_gens(keep.len(), restricted)
    }
}

/// True when the sequence generates a proper Laurent ideal and each entry is
/// a nonzerodivisor modulo its predecessors.
pub fn is_regular_sequence(seq: &[LaurentPoly]) -> bool {
    assert!(!seq.is_empty(), "regular sequence test requires a nonempty sequence");
    let dim = seq[0].dim();
    if seq.iter().any(|a| a.is_zero()) {
        return false;
    }
    let full = LaurentIdeal::from_gens(dim, seq.to_vec());
    if !full.is_proper() {
        return false;
    }
    for i in 0..seq.len() {
        let prefix = LaurentIdeal::from_gens(dim, seq[..i].to_vec());
        if !prefix.is_nzd_mod(&seq[i]) {
            return false;
        }
    }
    true
}
