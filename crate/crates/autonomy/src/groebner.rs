//! Reduced Gröbner bases over `Q[s1, ..., sn]` via Buchberger's algorithm,
//! with the ideal operations built on top: normal forms, quotients,
//! saturation, elimination and Krull dimension of the quotient ring.
//!
//! Generators are [`LaurentPoly`] values restricted to non-negative
//! exponents. Bases are reduced (monic, minimal, tails fully reduced), so a
//! basis is a canonical form of its ideal for a fixed order and structural
//! equality decides ideal equality.

use std::fmt;

use num_traits::One;

use crate::order::MonomialOrder;
use crate::poly::{LaurentPoly, Monomial, Rational};

/// Environment variable bounding the number of reduction steps in a single
/// Gröbner run; exceeding it panics with a [`StepLimitExceeded`] payload.
pub const STEP_LIMIT_ENV: &str = "AUTONOMY_GB_STEP_LIMIT";

/// Panic payload raised when a Gröbner run exceeds the configured step limit.
#[derive(Debug, Clone)]
pub struct StepLimitExceeded {
    pub limit: u64,
}

impl fmt::Display for StepLimitExceeded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "groebner computation aborted after exceeding {} reduction steps",
            self.limit
        )
    }
}

/// Reduction-step budget for one Gröbner run.
struct RunBudget {
    limit: Option<u64>,
    used: u64,
}

impl RunBudget {
    fn from_env() -> Self {
        let limit = std::env::var(STEP_LIMIT_ENV)
            .ok()
            .and_then(|v| v.parse::<u64>().ok());
        RunBudget { limit, used: 0 }
    }

    fn unlimited() -> Self {
        RunBudget {
            limit: None,
            used: 0,
        }
    }

    fn tick(&mut self) {
        self.used += 1;
        if let Some(limit) = self.limit {
            if self.used > limit {
                std::panic::panic_any(StepLimitExceeded { limit });
            }
        }
    }
}

/// A reduced Gröbner basis of an ideal of `Q[s1, ..., sn]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    dim: usize,
    gens: Vec<LaurentPoly>,
}

fn leading_monomial<'a>(p: &'a LaurentPoly, order: &MonomialOrder) -> &'a Monomial {
    p.terms()
        .map(|(m, _)| m)
        .max_by(|a, b| order.cmp(a, b))
        .expect("leading monomial of zero polynomial")
}

fn leading_term<'a>(p: &'a LaurentPoly, order: &MonomialOrder) -> (&'a Monomial, &'a Rational) {
    p.terms()
        .max_by(|(a, _), (b, _)| order.cmp(a, b))
        .expect("leading term of zero polynomial")
}

fn make_monic(p: &LaurentPoly, order: &MonomialOrder) -> LaurentPoly {
    let (_, lc) = leading_term(p, order);
    p.scale(&lc.recip())
}

fn leading_monomials(polys: &[LaurentPoly], order: &MonomialOrder) -> Vec<Monomial> {
    polys
        .iter()
        .map(|p| leading_monomial(p, order).clone())
        .collect()
}

/// Reducer set: polynomials with cached leading monomials and coefficients.
struct Reducers<'a> {
    polys: &'a [LaurentPoly],
    lms: &'a [Monomial],
    lcs: &'a [Rational],
}

/// Owned reducer set over content-stripped copies; rescaling generators does
/// not change normal forms, and integer coefficients keep reduction cheap.
struct OwnedReducers {
    polys: Vec<LaurentPoly>,
    lms: Vec<Monomial>,
    lcs: Vec<Rational>,
}

impl OwnedReducers {
    fn primitive(gens: &[LaurentPoly], order: &MonomialOrder) -> OwnedReducers {
        let polys: Vec<LaurentPoly> = gens.iter().map(|g| g.primitive_part()).collect();
        let lms = leading_monomials(&polys, order);
        let lcs = leading_coefficients(&polys, &lms);
        OwnedReducers { polys, lms, lcs }
    }

    fn borrow(&self) -> Reducers<'_> {
        Reducers {
            polys: &self.polys,
            lms: &self.lms,
            lcs: &self.lcs,
        }
    }
}

fn leading_coefficients(
    polys: &[LaurentPoly],
    lms: &[Monomial],
) -> Vec<Rational> {
    polys
        .iter()
        .zip(lms)
        .map(|(p, lm)| p.coeff(lm))
        .collect()
}

const CONTENT_STRIP_INTERVAL: u32 = 8;

/// Scale factors `(a, b)` with `a * lc_w == b * lc_g`, kept as small as
/// possible: a reduction step becomes `work = a * work - b * x^d * g`. For
/// integer leading coefficients the common gcd is divided out, so repeated
/// reduction by the same generator does not inflate the coefficients.
fn temper(lc_w: &Rational, lc_g: &Rational) -> (Rational, Rational) {
    use num_integer::Integer;
    if lc_w.is_integer() && lc_g.is_integer() {
        let g = lc_w.numer().gcd(lc_g.numer());
        let a = Rational::from(lc_g.numer() / &g);
        let b = Rational::from(lc_w.numer() / &g);
        (a, b)
    } else {
        (lc_g.clone(), lc_w.clone())
    }
}

/// Head reduction by fraction-free pseudo-reduction: stops as soon as the
/// leading monomial is irreducible (or the polynomial vanishes). The result
/// is a constant multiple of a head-reduced form of `p`, content-stripped.
fn reduce_head(
    p: &LaurentPoly,
    reducers: &Reducers<'_>,
    order: &MonomialOrder,
    budget: &mut RunBudget,
) -> LaurentPoly {
    let mut work = p.clone();
    let mut steps_since_strip = 0u32;
    while !work.is_zero() {
        let (lm, lc) = leading_term(&work, order);
        let (lm, lc) = (lm.clone(), lc.clone());
        // Among applicable reducers prefer the sparsest: less fill-in.
        let Some(i) = reducers
            .lms
            .iter()
            .enumerate()
            .filter(|(_, g)| g.divides(&lm))
            .min_by_key(|(i, _)| reducers.polys[*i].num_terms())
            .map(|(i, _)| i)
        else {
            break;
        };
        budget.tick();
        let (a, b) = temper(&lc, &reducers.lcs[i]);
        if !a.is_one() {
            work.scale_in_place(&a);
        }
        work.sub_scaled_monomial_multiple(&b, &lm.div(&reducers.lms[i]), &reducers.polys[i]);
        steps_since_strip += 1;
        if steps_since_strip >= CONTENT_STRIP_INTERVAL {
            steps_since_strip = 0;
            if !work.is_zero() {
                let content = work.content();
                if !content.is_one() {
                    work.scale_in_place(&content.recip());
                }
            }
        }
    }
    work
}

/// Full normal form by fraction-free pseudo-reduction: returns `(w, m)` with
/// `w = m * nf(p)`, where `nf(p)` is the exact normal form (no monomial of it
/// divisible by any leading monomial of the reducers). Reduction steps scale
/// the work polynomial by leading coefficients instead of dividing, keeping
/// the arithmetic integral; the content is stripped periodically and the
/// accumulated multiplier `m` is tracked exactly.
fn reduce_full(
    p: &LaurentPoly,
    reducers: &Reducers<'_>,
    order: &MonomialOrder,
    budget: &mut RunBudget,
) -> (LaurentPoly, Rational) {
    let mut work = p.clone();
    let mut multiplier = Rational::one();
    // Monomials at or above the frontier (in the active order) are finished.
    let mut frontier: Option<Monomial> = None;
    let mut steps_since_strip = 0u32;
    loop {
        let candidate = work
            .terms()
            .map(|(m, _)| m)
            .filter(|m| {
                frontier
                    .as_ref()
                    .map_or(true, |f| order.cmp(m, f) == std::cmp::Ordering::Less)
            })
            .max_by(|a, b| order.cmp(a, b))
            .cloned();
        let Some(cand) = candidate else { break };
        let reducer = reducers
            .lms
            .iter()
            .enumerate()
            .filter(|(_, lm)| lm.divides(&cand))
            .min_by_key(|(i, _)| reducers.polys[*i].num_terms())
            .map(|(i, _)| i);
        match reducer {
            Some(i) => {
                budget.tick();
                let c = work.coeff(&cand);
                let (a, b) = temper(&c, &reducers.lcs[i]);
                if !a.is_one() {
                    work.scale_in_place(&a);
                    multiplier *= &a;
                }
                work.sub_scaled_monomial_multiple(
                    &b,
                    &cand.div(&reducers.lms[i]),
                    &reducers.polys[i],
                );
                steps_since_strip += 1;
                if steps_since_strip >= CONTENT_STRIP_INTERVAL {
                    steps_since_strip = 0;
                    if !work.is_zero() {
                        let content = work.content();
                        if !content.is_one() {
                            work.scale_in_place(&content.recip());
                            multiplier /= &content;
                        }
                    }
                }
            }
            None => frontier = Some(cand),
        }
    }
    (work, multiplier)
}

/// S-polynomial: the leading terms are cancelled against their lcm. The
/// result is exact up to a constant, which reduction does not care about.
fn s_polynomial(
    f: &LaurentPoly,
    g: &LaurentPoly,
    lm_f: &Monomial,
    lm_g: &Monomial,
    lc_f: &Rational,
    lc_g: &Rational,
) -> LaurentPoly {
    let lcm = lm_f.lcm(lm_g);
    let a = f.mul_monomial(&lcm.div(lm_f)).scale(lc_g);
    let b = g.mul_monomial(&lcm.div(lm_g)).scale(lc_f);
    &a - &b
}

/// A critical pair with its cached lcm.
#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Installs the pairs of a new basis element `t`, pruning by the
/// Gebauer–Möller criteria: old pairs strictly improvable through the new
/// leading monomial are dropped; among new pairs, multiples of other new
/// lcms are dropped, equal-lcm classes collapse to one representative, and
/// classes witnessed by a coprime pair vanish entirely.
fn update_pairs(pairs: &mut Vec<Pair>, lms: &[Monomial], t: usize) {
    let lm_t = &lms[t];

    pairs.retain(|p| {
        if !lm_t.divides(&p.lcm) {
            return true;
        }
        lms[p.i].lcm(lm_t) == p.lcm || lms[p.j].lcm(lm_t) == p.lcm
    });

    let candidates: Vec<Pair> = (0..t)
        .map(|i| Pair {
            i,
            j: t,
            lcm: lms[i].lcm(lm_t),
        })
        .collect();

    // Drop candidates whose lcm is a proper multiple of another candidate's.
    let minimal: Vec<&Pair> = candidates
        .iter()
        .filter(|a| {
            !candidates
                .iter()
                .any(|b| b.lcm != a.lcm && b.lcm.divides(&a.lcm))
        })
        .collect();

    // Group the equal-lcm classes; a class containing a coprime pair is
    // discarded wholesale, otherwise its first member survives.
    let mut kept: Vec<Pair> = Vec::new();
    let mut seen: Vec<&Monomial> = Vec::new();
    for pair in &minimal {
        if seen.contains(&&pair.lcm) {
            continue;
        }
        seen.push(&pair.lcm);
        let class_coprime = minimal
            .iter()
            .filter(|p| p.lcm == pair.lcm)
            .any(|p| lms[p.i].is_coprime(lm_t));
        if !class_coprime {
            kept.push(Pair {
                i: pair.i,
                j: pair.j,
                lcm: pair.lcm.clone(),
            });
        }
    }
    pairs.extend(kept);
}

/// Computes the reduced Gröbner basis of the ideal generated by `gens`.
///
/// Panics if any generator has a negative exponent.
pub fn buchberger(gens: &[LaurentPoly], order: MonomialOrder) -> GroebnerBasis {
    let mut budget = RunBudget::from_env();
    buchberger_with(gens, order, &mut budget)
}

fn buchberger_with(
    gens: &[LaurentPoly],
    order: MonomialOrder,
    budget: &mut RunBudget,
) -> GroebnerBasis {
    let dim = gens.first().map(|g| g.dim()).unwrap_or(0);
    for g in gens {
        assert_eq!(g.dim(), dim, "generator dimension mismatch");
        assert!(
            g.is_polynomial(),
            "groebner generators must have non-negative exponents"
        );
    }

    let mut basis: Vec<LaurentPoly> = Vec::new();
    let mut lms: Vec<Monomial> = Vec::new();
    let mut lcs: Vec<Rational> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let push_element = |p: LaurentPoly,
                            basis: &mut Vec<LaurentPoly>,
                            lms: &mut Vec<Monomial>,
                            lcs: &mut Vec<Rational>,
                            pairs: &mut Vec<Pair>| {
        let lm = leading_monomial(&p, &order).clone();
        let lc = p.coeff(&lm);
        basis.push(p);
        lms.push(lm);
        lcs.push(lc);
        update_pairs(pairs, lms, basis.len() - 1);
    };

    for g in gens.iter().filter(|g| !g.is_zero()) {
        push_element(
            g.primitive_part(),
            &mut basis,
            &mut lms,
            &mut lcs,
            &mut pairs,
        );
    }

    let mut treated = 0u64;
    let loop_start = std::time::Instant::now();
    while !pairs.is_empty() {
        treated += 1;
        // Normal selection strategy: treat the pair with the smallest lcm
        // degree first.
        let best = pairs
            .iter()
            .enumerate()
            .min_by_key(|(_, p)| (p.lcm.total_degree(), p.i, p.j))
            .map(|(idx, _)| idx)
            .unwrap();
        let pair = pairs.swap_remove(best);
        let (i, j) = (pair.i, pair.j);

        let s = s_polynomial(&basis[i], &basis[j], &lms[i], &lms[j], &lcs[i], &lcs[j]);
        let reducers = Reducers {
            polys: &basis,
            lms: &lms,
            lcs: &lcs,
        };
        let r = reduce_head(&s, &reducers, &order, budget);
        if !r.is_zero() {
            push_element(
                r.primitive_part(),
                &mut basis,
                &mut lms,
                &mut lcs,
                &mut pairs,
            );
        }
    }

    if std::env::var("GB_TRACE").is_ok() {
        let max_terms = basis.iter().map(|p| p.num_terms()).max().unwrap_or(0);
        let max_bits = basis
            .iter()
            .flat_map(|p| p.terms().map(|(_, c)| c.numer().bits().max(c.denom().bits())))
            .max()
            .unwrap_or(0);
        eprintln!(
            "[gb] dim={dim} basis={} pairs_treated={treated} steps={} loop={:?} max_terms={max_terms} max_coeff_bits={max_bits}",
            basis.len(), budget.used, loop_start.elapsed()
        );
    }
    let t_reduce = std::time::Instant::now();
    let gens = reduce_basis(basis, lms, &order, budget);
    if std::env::var("GB_TRACE").is_ok() {
        eprintln!("[gb] reduce_basis={:?}", t_reduce.elapsed());
    }
    let gb = GroebnerBasis { order, dim, gens };

    #[cfg(debug_assertions)]
    {
        debug_assert!(
            gb.criterion_holds_on_pruned_pairs(),
            "buchberger postcondition violated"
        );
    }

    gb
}

/// Minimizes and autoreduces a Gröbner basis into its unique reduced form.
fn reduce_basis(
    basis: Vec<LaurentPoly>,
    lms: Vec<Monomial>,
    order: &MonomialOrder,
    budget: &mut RunBudget,
) -> Vec<LaurentPoly> {
    // Minimize: drop generators whose leading monomial is divisible by
    // another generator's leading monomial.
    let mut minimal: Vec<LaurentPoly> = Vec::new();
    let mut minimal_lms: Vec<Monomial> = Vec::new();
    'cand: for (i, g) in basis.iter().enumerate() {
        for (j, lm_h) in lms.iter().enumerate() {
            if i == j {
                continue;
            }
            if lm_h.divides(&lms[i]) && (*lm_h != lms[i] || j < i) {
                continue 'cand;
            }
        }
        minimal.push(g.clone());
        minimal_lms.push(lms[i].clone());
    }

    // Autoreduce tails over content-stripped generators; leading monomials
    // are pairwise non-dividing so they are stable and a single pass reaches
    // the reduced basis. Generators turn monic only at the very end.
    let mut reduced = minimal;
    for i in 0..reduced.len() {
        let mut others = reduced.clone();
        others.remove(i);
        let mut other_lms = minimal_lms.clone();
        other_lms.remove(i);
        let other_lcs = leading_coefficients(&others, &other_lms);
        let reducers = Reducers {
            polys: &others,
            lms: &other_lms,
            lcs: &other_lcs,
        };
        let (r, _) = reduce_full(&reduced[i], &reducers, order, budget);
        reduced[i] = r.primitive_part();
    }

    let mut reduced: Vec<LaurentPoly> = reduced.iter().map(|g| make_monic(g, order)).collect();
    // Canonical presentation: largest leading monomial first.
    reduced.sort_by(|a, b| order.cmp(leading_monomial(b, order), leading_monomial(a, order)));
    reduced
}

/// Appends `extra` variables (with exponent zero) to every monomial.
fn lift(p: &LaurentPoly, extra: usize) -> LaurentPoly {
    let dim = p.dim() + extra;
    LaurentPoly::from_terms(
        dim,
        p.terms().map(|(m, c)| {
            let mut e = m.exponents().to_vec();
            e.resize(p.dim() + extra, 0);
            (Monomial::new(e), c.clone())
        }),
    )
}

/// Drops the last variable; every term must be free of it.
fn drop_last_variable(p: &LaurentPoly) -> LaurentPoly {
    let dim = p.dim() - 1;
    LaurentPoly::from_terms(
        dim,
        p.terms().map(|(m, c)| {
            assert_eq!(m.exponent(dim), 0, "term still involves dropped variable");
            (Monomial::new(m.exponents()[..dim].to_vec()), c.clone())
        }),
    )
}

/// Reduced basis of the saturation `(gens : f^∞)`, computed without first
/// computing a basis of the unsaturated ideal: `t` is eliminated from
/// `gens + (1 - t*f)` directly.
pub fn saturate_generators(
    gens: &[LaurentPoly],
    dim: usize,
    f: &LaurentPoly,
    order: MonomialOrder,
) -> GroebnerBasis {
    let mut budget = RunBudget::from_env();
    saturate_generators_with(gens, dim, f, order, &mut budget)
}

fn saturate_generators_with(
    gens: &[LaurentPoly],
    dim: usize,
    f: &LaurentPoly,
    order: MonomialOrder,
    budget: &mut RunBudget,
) -> GroebnerBasis {
    assert!(!f.is_zero(), "saturation by zero");
    assert_eq!(f.dim(), dim, "polynomial dimension mismatch");
    assert!(f.is_polynomial(), "saturation divisor must be polynomial");
    let live: Vec<&LaurentPoly> = gens.iter().filter(|g| !g.is_zero()).collect();
    if live.is_empty() || f.is_constant() {
        return buchberger_with(
            &live.into_iter().cloned().collect::<Vec<_>>(),
            order,
            budget,
        );
    }
    let t_var = dim;
    let t = LaurentPoly::variable(dim + 1, t_var);
    let mut lifted: Vec<LaurentPoly> = live.iter().map(|g| lift(g, 1)).collect();
    lifted.push(&LaurentPoly::one(dim + 1) - &(&t * &lift(f, 1)));
    let block = buchberger_with(&lifted, MonomialOrder::eliminating(&[t_var]), budget);
    let contracted: Vec<LaurentPoly> = block
        .gens
        .iter()
        .filter(|g| g.terms().all(|(m, _)| m.exponent(t_var) == 0))
        .map(drop_last_variable)
        .collect();
    buchberger_with(&contracted, order, budget)
}

/// Exact division by a single polynomial; panics when the division leaves a
/// remainder.
fn div_exact(p: &LaurentPoly, f: &LaurentPoly, order: &MonomialOrder) -> LaurentPoly {
    let mut quotient = LaurentPoly::zero(p.dim());
    let mut work = p.clone();
    let (fm, fc) = leading_term(f, order);
    while !work.is_zero() {
        let (lm, lc) = leading_term(&work, order);
        assert!(fm.divides(lm), "polynomial is not an exact multiple");
        let t = LaurentPoly::term(lm.div(fm), lc.clone() / fc.clone());
        work = &work - &(&t * f);
        quotient = &quotient + &t;
    }
    quotient
}

impl GroebnerBasis {
    /// The empty basis of the zero ideal in `dim` variables.
    pub fn zero_ideal(dim: usize, order: MonomialOrder) -> GroebnerBasis {
        GroebnerBasis {
            order,
            dim,
            gens: Vec::new(),
        }
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gens(&self) -> &[LaurentPoly] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    /// True exactly when the reduced basis is `{1}`.
    pub fn is_unit_ideal(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    /// Remainder of `p` on division by the basis; zero exactly for ideal
    /// members, and idempotent.
    pub fn normal_form(&self, p: &LaurentPoly) -> LaurentPoly {
        assert_eq!(p.dim(), self.dim, "polynomial dimension mismatch");
        assert!(p.is_polynomial(), "normal form requires non-negative exponents");
        let reducers = OwnedReducers::primitive(&self.gens, &self.order);
        let (w, m) = reduce_full(
            p,
            &reducers.borrow(),
            &self.order,
            &mut RunBudget::unlimited(),
        );
        w.scale(&m.recip())
    }

    pub fn contains(&self, p: &LaurentPoly) -> bool {
        self.normal_form(p).is_zero()
    }

    /// The ideal quotient `(I : f) = {g : g*f in I}`, computed by dividing
    /// the intersection `I ∩ (f)` by `f`.
    pub fn quotient(&self, f: &LaurentPoly) -> GroebnerBasis {
        let mut budget = RunBudget::from_env();
        self.quotient_with(f, &mut budget)
    }

    fn quotient_with(&self, f: &LaurentPoly, budget: &mut RunBudget) -> GroebnerBasis {
        assert!(!f.is_zero(), "ideal quotient by zero");
        assert_eq!(f.dim(), self.dim, "polynomial dimension mismatch");
        assert!(f.is_polynomial(), "quotient divisor must be polynomial");
        if self.is_zero_ideal() {
            return self.clone();
        }
        // I ∩ (f) via an auxiliary variable t: eliminate t from t*I + (1-t)*(f).
        let t_var = self.dim;
        let t = LaurentPoly::variable(self.dim + 1, t_var);
        let one_minus_t = &LaurentPoly::one(self.dim + 1) - &t;
        let mut lifted: Vec<LaurentPoly> =
            self.gens.iter().map(|g| &lift(g, 1) * &t).collect();
        lifted.push(&lift(f, 1) * &one_minus_t);
        let block = buchberger_with(&lifted, MonomialOrder::eliminating(&[t_var]), budget);
        let intersection: Vec<LaurentPoly> = block
            .gens
            .iter()
            .filter(|g| g.terms().all(|(m, _)| m.exponent(t_var) == 0))
            .map(drop_last_variable)
            .collect();
        let quotient_gens: Vec<LaurentPoly> = intersection
            .iter()
            .map(|g| div_exact(g, f, &MonomialOrder::GrevLex))
            .collect();
        buchberger_with(&quotient_gens, self.order.clone(), budget)
    }

    /// The saturation `(I : f^∞)`, computed in one shot by eliminating `t`
    /// from `I + (1 - t*f)`.
    pub fn saturate(&self, f: &LaurentPoly) -> GroebnerBasis {
        let mut budget = RunBudget::from_env();
        saturate_generators_with(&self.gens, self.dim, f, self.order.clone(), &mut budget)
    }

    /// The elimination ideal `I ∩ Q[kept variables]`, where `drop` lists the
    /// variables to eliminate. The result is returned as a reduced basis in
    /// the original ring and order; its generators involve only kept
    /// variables.
    pub fn eliminate(&self, drop: &[usize]) -> GroebnerBasis {
        let mut budget = RunBudget::from_env();
        self.eliminate_with(drop, &mut budget)
    }

    fn eliminate_with(&self, drop: &[usize], budget: &mut RunBudget) -> GroebnerBasis {
        for &v in drop {
            assert!(v < self.dim, "eliminated variable out of range");
        }
        if drop.is_empty() {
            return self.clone();
        }
        let mut drop = drop.to_vec();
        drop.sort_unstable();
        drop.dedup();
        let block = buchberger_with(&self.gens, MonomialOrder::eliminating(&drop), budget);
        let kept: Vec<LaurentPoly> = block
            .gens
            .iter()
            .filter(|g| {
                g.terms()
                    .all(|(m, _)| drop.iter().all(|&v| m.exponent(v) == 0))
            })
            .cloned()
            .collect();
        buchberger_with(&kept, self.order.clone(), budget)
    }

    /// Krull dimension of `Q[s1, ..., sn] / I`: the size of a maximum set `U`
    /// of variables such that no leading monomial is supported entirely
    /// inside `U`.
    ///
    /// Requires a degree-refining order and a proper ideal.
    pub fn dimension(&self) -> usize {
        assert!(
            self.order.is_graded(),
            "dimension requires a degree-refining order"
        );
        assert!(!self.is_unit_ideal(), "dimension of the unit ideal is undefined");
        let n = self.dim;
        assert!(n <= 60, "dimension computation limited to 60 variables");
        let supports: Vec<u64> = self
            .gens
            .iter()
            .map(|g| {
                leading_monomial(g, &self.order)
                    .support()
                    .fold(0u64, |acc, v| acc | (1 << v))
            })
            .collect();
        for size in (0..=n).rev() {
            for subset in 0u64..(1 << n) {
                if subset.count_ones() as usize != size {
                    continue;
                }
                let independent = supports.iter().all(|s| s & !subset != 0);
                if independent {
                    return size;
                }
            }
        }
        unreachable!("a proper leading-term ideal admits the empty independent set");
    }

    /// Checks the Buchberger criterion on this basis: every S-polynomial of
    /// two generators reduces to zero.
    ///
    /// Head reduction decides this exactly against a claimed basis: a member
    /// of the ideal that head-reduces to a nonzero polynomial exhibits a
    /// leading monomial outside the leading-term ideal.
    pub fn all_s_polynomials_reduce_to_zero(&self) -> bool {
        let mut budget = RunBudget::unlimited();
        let reducers = OwnedReducers::primitive(&self.gens, &self.order);
        let borrowed = reducers.borrow();
        for i in 0..reducers.polys.len() {
            for j in (i + 1)..reducers.polys.len() {
                let s = s_polynomial(
                    &reducers.polys[i],
                    &reducers.polys[j],
                    &reducers.lms[i],
                    &reducers.lms[j],
                    &reducers.lcs[i],
                    &reducers.lcs[j],
                );
                if !reduce_head(&s, &borrowed, &self.order, &mut budget).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Buchberger criterion restricted to the pairs surviving the
    /// Gebauer–Möller pruning; equivalent to the full criterion by the chain
    /// arguments behind the pruning, and cheap enough to assert on every
    /// basis in debug builds.
    fn criterion_holds_on_pruned_pairs(&self) -> bool {
        let mut budget = RunBudget::unlimited();
        let reducers = OwnedReducers::primitive(&self.gens, &self.order);
        let borrowed = reducers.borrow();
        let mut pairs: Vec<Pair> = Vec::new();
        for t in 0..reducers.lms.len() {
            update_pairs(&mut pairs, &reducers.lms[..=t], t);
        }
        for pair in &pairs {
            let (i, j) = (pair.i, pair.j);
            let s = s_polynomial(
                &reducers.polys[i],
                &reducers.polys[j],
                &reducers.lms[i],
                &reducers.lms[j],
                &reducers.lcs[i],
                &reducers.lcs[j],
            );
            if !reduce_head(&s, &borrowed, &self.order, &mut budget).is_zero() {
                return false;
            }
        }
        true
    }

    /// Checks that the basis is reduced: generators monic with no monomial
    /// divisible by another generator's leading monomial.
    pub fn is_reduced(&self) -> bool {
        for (i, g) in self.gens.iter().enumerate() {
            let (lm, lc) = leading_term(g, &self.order);
            if !lc.is_one() {
                return false;
            }
            let _ = lm;
            for (j, h) in self.gens.iter().enumerate() {
                if i == j {
                    continue;
                }
                let lm_h = leading_monomial(h, &self.order);
                if g.terms().any(|(m, _)| lm_h.divides(m)) {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(dim: usize, i: usize) -> LaurentPoly {
        LaurentPoly::variable(dim, i)
    }

    fn one(dim: usize) -> LaurentPoly {
        LaurentPoly::one(dim)
    }

    /// s1 - 1 and s2 - 1 in two variables.
    fn shift_gens() -> Vec<LaurentPoly> {
        vec![&v(2, 0) - &one(2), &v(2, 1) - &one(2)]
    }

    #[test]
    fn buchberger_keeps_already_reduced_basis() {
        let gb = buchberger(&shift_gens(), MonomialOrder::GrevLex);
        assert_eq!(gb.gens(), shift_gens().as_slice());
        assert!(gb.all_s_polynomials_reduce_to_zero());
        assert!(gb.is_reduced());
    }

    #[test]
    fn buchberger_detects_unit_ideal() {
        let gb = buchberger(&[v(2, 0), one(2)], MonomialOrder::GrevLex);
        assert!(gb.is_unit_ideal());
        assert_eq!(gb.gens(), &[one(2)]);
    }

    #[test]
    fn buchberger_of_nothing_is_zero_ideal() {
        let gb = buchberger(&[], MonomialOrder::GrevLex);
        assert!(gb.is_zero_ideal());
        assert!(!gb.is_unit_ideal());
    }

    #[test]
    #[should_panic(expected = "non-negative exponents")]
    fn buchberger_rejects_laurent_input() {
        let p = LaurentPoly::term(Monomial::new(vec![-1, 0]), Rational::one());
        buchberger(&[p], MonomialOrder::GrevLex);
    }

    #[test]
    fn normal_form_reduces_product_of_shifts() {
        // s1*s2 mod (s1 - 1, s2 - 1): substitute 1 for both variables.
        let gb = buchberger(&shift_gens(), MonomialOrder::GrevLex);
        let p = &v(2, 0) * &v(2, 1);
        assert_eq!(gb.normal_form(&p), one(2));
    }

    #[test]
    fn normal_form_against_zero_ideal_is_identity() {
        let gb = GroebnerBasis::zero_ideal(2, MonomialOrder::GrevLex);
        let p = &(&v(2, 0) * &v(2, 0)) - &v(2, 1);
        assert_eq!(gb.normal_form(&p), p);
    }

    #[test]
    fn normal_form_of_member_is_zero() {
        let gb = buchberger(&shift_gens(), MonomialOrder::GrevLex);
        for g in gb.gens() {
            assert!(gb.contains(g));
        }
    }

    #[test]
    fn quotient_splits_monomial_factor() {
        // ((s1*s2) : s1) = (s2), verified below against raw membership.
        let prod = &v(2, 0) * &v(2, 1);
        let gb = buchberger(&[prod], MonomialOrder::GrevLex);
        let q = gb.quotient(&v(2, 0));
        assert_eq!(q.gens(), &[v(2, 1)]);
        assert_quotient_matches_membership(&gb, &v(2, 0), &q);
    }

    #[test]
    fn quotient_by_one_is_identity() {
        let gb = buchberger(&shift_gens(), MonomialOrder::GrevLex);
        assert_eq!(gb.quotient(&one(2)), gb);
    }

    #[test]
    fn quotient_of_monomial_power() {
        let sq = &v(1, 0) * &v(1, 0);
        let gb = buchberger(&[sq], MonomialOrder::GrevLex);
        let q = gb.quotient(&v(1, 0));
        assert_eq!(q.gens(), &[v(1, 0)]);
    }

    /// Independent check of an ideal quotient: every claimed generator times
    /// `f` is in `I`, and over all sparse candidates of degree at most 3
    /// membership in the quotient agrees with the membership of `g*f` in `I`.
    fn assert_quotient_matches_membership(
        ideal: &GroebnerBasis,
        f: &LaurentPoly,
        quotient: &GroebnerBasis,
    ) {
        for g in quotient.gens() {
            assert!(ideal.contains(&(g * f)), "quotient generator fails g*f in I");
        }
        let dim = ideal.dim();
        let monos: Vec<Monomial> = crate::poly::monomials_up_to_degree(dim, 3)
            .into_iter()
            .filter(|m| m.is_polynomial())
            .collect();
        // single monomials and differences of two monomials as candidates
        let mut candidates: Vec<LaurentPoly> = Vec::new();
        for m in &monos {
            candidates.push(LaurentPoly::term(m.clone(), Rational::one()));
        }
        for a in &monos {
            for b in &monos {
                if a < b {
                    let p = &LaurentPoly::term(a.clone(), Rational::one())
                        - &LaurentPoly::term(b.clone(), Rational::one());
                    candidates.push(p);
                }
            }
        }
        for g in candidates {
            assert_eq!(
                ideal.contains(&(&g * f)),
                quotient.contains(&g),
                "membership mismatch for candidate {g}"
            );
        }
    }

    #[test]
    fn saturation_removes_monomial_factor() {
        // ((s1*(s2-1)) : s1^∞) = (s2 - 1); check both inclusions.
        let g = &v(2, 0) * &(&v(2, 1) - &one(2));
        let gb = buchberger(&[g], MonomialOrder::GrevLex);
        let sat = gb.saturate(&v(2, 0));
        assert_eq!(sat.gens(), &[&v(2, 1) - &one(2)]);
        // I ⊆ sat
        for g in gb.gens() {
            assert!(sat.contains(g));
        }
        // sat gens multiplied by a power of s1 land back in I
        for g in sat.gens() {
            assert!(gb.contains(&(g * &v(2, 0))));
        }
    }

    #[test]
    fn saturation_by_nonvanishing_divisor_is_unit() {
        // (s1) saturated at (s1*s2)^∞ contains 1.
        let gb = buchberger(&[v(2, 0)], MonomialOrder::GrevLex);
        let sat = gb.saturate(&(&v(2, 0) * &v(2, 1)));
        assert!(sat.is_unit_ideal());
    }

    #[test]
    fn saturation_contains_original_and_stabilizes() {
        let g1 = &(&v(2, 0) * &v(2, 1)) - &v(2, 0);
        let g2 = &(&v(2, 0) * &v(2, 0)) - &v(2, 1);
        let gb = buchberger(&[g1, g2], MonomialOrder::GrevLex);
        let f = &v(2, 0) * &v(2, 1);
        let sat = gb.saturate(&f);
        for g in gb.gens() {
            assert!(sat.contains(g));
        }
        assert_eq!(sat.quotient(&f), sat);
    }

    /// Brute-force check that no nonzero polynomial of degree <= `max_deg` in
    /// the kept variables lies in the ideal: the normal forms of the pure
    /// powers of the kept monomials must be linearly independent over Q.
    fn no_low_degree_member_in_subring(
        gb: &GroebnerBasis,
        kept: usize,
        max_deg: u64,
    ) -> bool {
        use num_traits::Zero;
        let dim = gb.dim();
        let mut rows: Vec<LaurentPoly> = Vec::new();
        for e in 0..=max_deg {
            let m = Monomial::new(
                (0..dim)
                    .map(|i| if i == kept { e as i64 } else { 0 })
                    .collect(),
            );
            rows.push(gb.normal_form(&LaurentPoly::term(m, Rational::one())));
        }
        // Gaussian elimination on the coefficient vectors of the normal forms.
        let mut pivots: Vec<LaurentPoly> = Vec::new();
        for mut r in rows {
            for p in &pivots {
                let lead = p.terms().next_back();
                if let Some((m, _)) = lead {
                    let c = r.coeff(m);
                    if !c.is_zero() {
                        r = &r - &p.scale(&c);
                    }
                }
            }
            if r.is_zero() {
                return false; // dependence: a kept-variable polynomial is in the ideal
            }
            let lead = r.terms().next_back().map(|(m, c)| (m.clone(), c.clone()));
            let (_, c) = lead.unwrap();
            pivots.push(r.scale(&c.recip()));
        }
        true
    }

    #[test]
    fn eliminate_from_diagonal_gives_zero_ideal() {
        // (s1 - s2) contains no polynomial in s2 alone.
        let gb = buchberger(&[&v(2, 0) - &v(2, 1)], MonomialOrder::GrevLex);
        let elim = gb.eliminate(&[0]);
        assert!(elim.is_zero_ideal());
        assert!(no_low_degree_member_in_subring(&gb, 1, 3));
    }

    #[test]
    fn eliminate_keeps_pure_generator() {
        let gb = buchberger(&shift_gens(), MonomialOrder::GrevLex);
        let elim = gb.eliminate(&[0]);
        assert_eq!(elim.gens(), &[&v(2, 1) - &one(2)]);
        for g in elim.gens() {
            assert!(gb.contains(g), "elimination ideal must sit inside the ideal");
        }
        // and s2 - 1 is genuinely in the ideal while s2 - 2 is not
        assert!(!no_low_degree_member_in_subring(&gb, 1, 3));
    }

    #[test]
    fn eliminate_nothing_is_identity() {
        let gb = buchberger(&shift_gens(), MonomialOrder::GrevLex);
        assert_eq!(gb.eliminate(&[]), gb);
    }

    #[test]
    fn dimension_of_zero_ideal_is_ambient() {
        let gb = GroebnerBasis::zero_ideal(2, MonomialOrder::GrevLex);
        assert_eq!(gb.dimension(), 2);
    }

    #[test]
    fn dimension_of_hypersurface() {
        let gb = buchberger(&[&v(2, 0) - &one(2)], MonomialOrder::GrevLex);
        assert_eq!(gb.dimension(), 1);
    }

    #[test]
    fn dimension_of_point() {
        let gb = buchberger(&shift_gens(), MonomialOrder::GrevLex);
        assert_eq!(gb.dimension(), 0);
    }

    #[test]
    #[should_panic(expected = "unit ideal")]
    fn dimension_rejects_unit_ideal() {
        let gb = buchberger(&[one(2)], MonomialOrder::GrevLex);
        gb.dimension();
    }

    #[test]
    fn unit_ideal_from_coprime_shifts() {
        let gb = buchberger(&[v(2, 0), &v(2, 0) - &one(2)], MonomialOrder::GrevLex);
        assert!(gb.is_unit_ideal());
        let gb = buchberger(&[&v(2, 0) - &one(2)], MonomialOrder::GrevLex);
        assert!(!gb.is_unit_ideal());
        let gb = buchberger(&[], MonomialOrder::GrevLex);
        assert!(!gb.is_unit_ideal());
    }

    #[test]
    fn step_limit_aborts_runs() {
        let mut budget = RunBudget {
            limit: Some(0),
            used: 0,
        };
        let gens = vec![
            &(&v(2, 0) * &v(2, 1)) - &one(2),
            &(&v(2, 0) * &v(2, 0)) - &v(2, 1),
        ];
        let result = std::panic::catch_unwind(std::panic::AssertUnwindSafe(move || {
            buchberger_with(&gens, MonomialOrder::GrevLex, &mut budget)
        }));
        let payload = result.expect_err("expected the step limit to trip");
        assert!(payload.downcast_ref::<StepLimitExceeded>().is_some());
    }

    fn arb_positive_poly(dim: usize) -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec(
            (prop::collection::vec(0i64..=2, dim), -4i64..=4),
            1..=3,
        )
        .prop_map(move |terms| {
            LaurentPoly::from_terms(
                dim,
                terms.into_iter().map(|(e, c)| {
                    (
                        Monomial::new(e),
                        Rational::from(num_bigint::BigInt::from(c)),
                    )
                }),
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn normal_form_is_idempotent(
            gens in prop::collection::vec(arb_positive_poly(2), 1..=3),
            p in arb_positive_poly(2),
        ) {
            let gb = buchberger(&gens, MonomialOrder::GrevLex);
            let nf = gb.normal_form(&p);
            prop_assert_eq!(gb.normal_form(&nf), nf);
        }

        #[test]
        fn random_combinations_are_members(
            gens in prop::collection::vec(arb_positive_poly(2), 1..=3),
            cofactors in prop::collection::vec(arb_positive_poly(2), 3),
        ) {
            let gb = buchberger(&gens, MonomialOrder::GrevLex);
            let mut combo = LaurentPoly::zero(2);
            for (g, h) in gens.iter().zip(&cofactors) {
                combo = &combo + &(g * h);
            }
            prop_assert!(gb.contains(&combo));
        }

        #[test]
        fn reduced_basis_is_unique_under_permutation_and_rescaling(
            gens in prop::collection::vec(arb_positive_poly(2), 1..=3),
            scale_num in prop::collection::vec(1i64..=7, 3),
            rotate in 0usize..3,
        ) {
            let gb = buchberger(&gens, MonomialOrder::GrevLex);
            let mut shuffled: Vec<LaurentPoly> = gens
                .iter()
                .zip(&scale_num)
                .map(|(g, s)| g.scale(&Rational::from(num_bigint::BigInt::from(*s))))
                .collect();
            let len = shuffled.len().max(1);
            shuffled.rotate_left(rotate % len);
            let gb2 = buchberger(&shuffled, MonomialOrder::GrevLex);
            prop_assert_eq!(gb, gb2);
        }

        #[test]
        fn dimension_is_monotone_under_inclusion(
            gens in prop::collection::vec(arb_positive_poly(2), 1..=2),
            extra in arb_positive_poly(2),
        ) {
            let small = buchberger(&gens, MonomialOrder::GrevLex);
            let mut larger = gens.clone();
            larger.push(extra);
            let large = buchberger(&larger, MonomialOrder::GrevLex);
            prop_assume!(!small.is_unit_ideal() && !large.is_unit_ideal());
            prop_assert!(small.dimension() >= large.dimension());
        }
    }
}
