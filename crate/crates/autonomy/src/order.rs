//! Monomial orders on the polynomial subring `Q[s1, ..., sn]`.

use std::cmp::Ordering;

use crate::poly::Monomial;

/// A total, multiplicative well-order on monomials with non-negative
/// exponents.
///
/// `Block` is the elimination order: it first compares the exponents of the
/// variables in `eliminated` (by graded reverse lexicographic order), so any
/// monomial containing an eliminated variable exceeds every monomial free of
/// them; ties are broken by the inner order on the remaining variables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MonomialOrder {
    GrevLex,
    Lex,
    Block {
        eliminated: Vec<usize>,
        inner: Box<MonomialOrder>,
    },
}

/// Variables considered by a comparison: those inside `within` (all, when
/// `None`) and outside `excluded`.
#[inline]
fn considered(i: usize, within: Option<&[usize]>, excluded: &[usize]) -> bool {
    within.map_or(true, |w| w.contains(&i)) && !excluded.contains(&i)
}

fn lex_cmp(a: &Monomial, b: &Monomial, within: Option<&[usize]>, excluded: &[usize]) -> Ordering {
    for i in 0..a.dim() {
        if !considered(i, within, excluded) {
            continue;
        }
        match a.exponent(i).cmp(&b.exponent(i)) {
            Ordering::Equal => continue,
            ord => return ord,
        }
    }
    Ordering::Equal
}

fn grevlex_cmp(
    a: &Monomial,
    b: &Monomial,
    within: Option<&[usize]>,
    excluded: &[usize],
) -> Ordering {
    let mut deg_a: i64 = 0;
    let mut deg_b: i64 = 0;
    for i in 0..a.dim() {
        if considered(i, within, excluded) {
            deg_a += a.exponent(i);
            deg_b += b.exponent(i);
        }
    }
    match deg_a.cmp(&deg_b) {
        Ordering::Equal => {}
        ord => return ord,
    }
    // Equal degree: the monomial with the smaller exponent in the last
    // differing variable is the larger one.
    for i in (0..a.dim()).rev() {
        if !considered(i, within, excluded) {
            continue;
        }
        match a.exponent(i).cmp(&b.exponent(i)) {
            Ordering::Equal => continue,
            ord => return ord.reverse(),
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    /// Elimination order for the given variable indices, with graded reverse
    /// lexicographic ties on the kept variables.
    pub fn eliminating(vars: &[usize]) -> MonomialOrder {
        MonomialOrder::Block {
            eliminated: vars.to_vec(),
            inner: Box::new(MonomialOrder::GrevLex),
        }
    }

    /// True for orders that refine total degree, as required by the
    /// leading-term-ideal dimension computation.
    pub fn is_graded(&self) -> bool {
        matches!(self, MonomialOrder::GrevLex)
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.dim(), b.dim());
        self.cmp_excluding(a, b, &[])
    }

    fn cmp_excluding(&self, a: &Monomial, b: &Monomial, excluded: &[usize]) -> Ordering {
        match self {
            MonomialOrder::Lex => lex_cmp(a, b, None, excluded),
            MonomialOrder::GrevLex => grevlex_cmp(a, b, None, excluded),
            MonomialOrder::Block { eliminated, inner } => {
                match grevlex_cmp(a, b, Some(eliminated), excluded) {
                    Ordering::Equal => match inner.as_ref() {
                        MonomialOrder::Lex => {
                            cmp_outside_two(a, b, excluded, eliminated, /* lex */ true)
                        }
                        MonomialOrder::GrevLex => {
                            cmp_outside_two(a, b, excluded, eliminated, /* lex */ false)
                        }
                        nested @ MonomialOrder::Block { .. } => {
                            let mut combined = excluded.to_vec();
                            combined.extend_from_slice(eliminated);
                            nested.cmp_excluding(a, b, &combined)
                        }
                    },
                    ord => ord,
                }
            }
        }
    }

    /// The canonically larger of two monomials under this order.
    pub fn max<'a>(&self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.cmp(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

/// Lex or grevlex over the variables outside both exclusion lists.
fn cmp_outside_two(
    a: &Monomial,
    b: &Monomial,
    skip1: &[usize],
    skip2: &[usize],
    lex: bool,
) -> Ordering {
    if lex {
        for i in 0..a.dim() {
            if skip1.contains(&i) || skip2.contains(&i) {
                continue;
            }
            match a.exponent(i).cmp(&b.exponent(i)) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        return Ordering::Equal;
    }
    let mut deg_a: i64 = 0;
    let mut deg_b: i64 = 0;
    for i in 0..a.dim() {
        if skip1.contains(&i) || skip2.contains(&i) {
            continue;
        }
        deg_a += a.exponent(i);
        deg_b += b.exponent(i);
    }
    match deg_a.cmp(&deg_b) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for i in (0..a.dim()).rev() {
        if skip1.contains(&i) || skip2.contains(&i) {
            continue;
        }
        match a.exponent(i).cmp(&b.exponent(i)) {
            Ordering::Equal => continue,
            ord => return ord.reverse(),
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[i64]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn lex_compares_first_difference() {
        let ord = MonomialOrder::Lex;
        assert_eq!(ord.cmp(&m(&[1, 0]), &m(&[0, 5])), Ordering::Greater);
        assert_eq!(ord.cmp(&m(&[1, 2]), &m(&[1, 3])), Ordering::Less);
    }

    #[test]
    fn grevlex_refines_degree() {
        let ord = MonomialOrder::GrevLex;
        assert_eq!(ord.cmp(&m(&[0, 2]), &m(&[1, 0])), Ordering::Greater);
        // x*z vs y^2 in 3 vars: equal degree, last difference at z with
        // 1 > 0, so x*z is smaller.
        assert_eq!(ord.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        // x^2*y vs x*y^2: last difference at y, 1 < 2 so x^2*y is larger.
        assert_eq!(ord.cmp(&m(&[2, 1]), &m(&[1, 2])), Ordering::Greater);
    }

    #[test]
    fn block_order_dominates_on_eliminated_variables() {
        let ord = MonomialOrder::eliminating(&[0]);
        // any power of the eliminated variable beats any monomial without it
        assert_eq!(ord.cmp(&m(&[1, 0]), &m(&[0, 7])), Ordering::Greater);
        assert_eq!(ord.cmp(&m(&[0, 7]), &m(&[1, 0])), Ordering::Less);
        // ties on the eliminated block fall through to the inner order
        assert_eq!(ord.cmp(&m(&[1, 2]), &m(&[1, 3])), Ordering::Less);
    }

    #[test]
    fn nested_block_orders_compare_blockwise() {
        let inner = MonomialOrder::Block {
            eliminated: vec![1],
            inner: Box::new(MonomialOrder::GrevLex),
        };
        let ord = MonomialOrder::Block {
            eliminated: vec![0],
            inner: Box::new(inner),
        };
        assert_eq!(ord.cmp(&m(&[1, 0, 0]), &m(&[0, 9, 9])), Ordering::Greater);
        assert_eq!(ord.cmp(&m(&[1, 1, 0]), &m(&[1, 0, 9])), Ordering::Greater);
        assert_eq!(ord.cmp(&m(&[1, 1, 2]), &m(&[1, 1, 3])), Ordering::Less);
    }

    #[test]
    fn orders_are_multiplicative() {
        let orders = [
            MonomialOrder::GrevLex,
            MonomialOrder::Lex,
            MonomialOrder::eliminating(&[1]),
        ];
        let monos = [m(&[0, 0]), m(&[1, 0]), m(&[0, 1]), m(&[2, 1]), m(&[1, 3])];
        for ord in &orders {
            for a in &monos {
                for b in &monos {
                    for c in &monos {
                        assert_eq!(
                            ord.cmp(a, b),
                            ord.cmp(&a.mul(c), &b.mul(c)),
                            "{a:?} {b:?} {c:?}"
                        );
                    }
                }
            }
        }
    }
}
